use std::time::{Duration, Instant};

use mim_core::engine::Budget;

/// Default per-instance budget for solves, verify suites and sweeps.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(30);

/// Stops a search once a wall-clock deadline passes. The clock is read every
/// 1024 ticks.
#[derive(Debug, Clone)]
pub struct WallClock {
    deadline: Instant,
    ticks: u32,
    expired: bool,
}

impl WallClock {
    pub fn new(limit: Duration) -> Self {
        WallClock {
            deadline: Instant::now() + limit,
            ticks: 0,
            expired: false,
        }
    }
}

impl Budget for WallClock {
    fn tick(&mut self) -> bool {
        if !self.expired {
            self.ticks = self.ticks.wrapping_add(1);
            if self.ticks.is_multiple_of(1024) {
                self.expired = Instant::now() >= self.deadline;
            }
        }
        self.expired
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_budget_expires_at_first_poll() {
        let mut b = WallClock::new(Duration::ZERO);
        assert!((0..1023).all(|_| !b.tick()));
        assert!(b.tick());
        assert!(b.tick());
    }

    #[test]
    fn generous_budget_keeps_running() {
        let mut b = WallClock::new(Duration::from_secs(3600));
        assert!((0..10_000).all(|_| !b.tick()));
    }
}
