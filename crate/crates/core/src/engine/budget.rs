/// Search budget polled once per branch-and-bound node. Returning `true` from
/// [`Budget::tick`] stops the search; the incumbent is still a valid witness.
pub trait Budget {
    fn tick(&mut self) -> bool;
}

/// Never runs out.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn tick(&mut self) -> bool {
        false
    }
}

/// Allows a fixed number of search nodes.
#[derive(Debug, Clone, Copy)]
pub struct NodeLimit {
    remaining: u64,
}

impl NodeLimit {
    pub fn new(nodes: u64) -> Self {
        NodeLimit { remaining: nodes }
    }
}

impl Budget for NodeLimit {
    fn tick(&mut self) -> bool {
        match self.remaining.checked_sub(1) {
            Some(r) => {
                self.remaining = r;
                false
            }
            None => true,
        }
    }
}

impl<B: Budget + ?Sized> Budget for &mut B {
    fn tick(&mut self) -> bool {
        (**self).tick()
    }
}
