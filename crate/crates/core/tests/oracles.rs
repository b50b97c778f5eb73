#![allow(clippy::needless_range_loop)]

//! Derived values checked against oracles that share no code path with the
//! library: adjacency matrices, Floyd–Warshall, and plain subset enumeration
//! over the induced-matching definition.

use mim_core::constructions::{construct_n2, construct_n3, construct_n4, construct_n5};
use mim_core::engine::{im_exact, im_exact_forced, Unlimited};
use mim_core::families::{grid3, path, stacked_book, star};
use mim_core::graph::cartesian_product;
use mim_core::{Distance, Graph};

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

fn floyd_warshall(adj: &[Vec<bool>]) -> Vec<Vec<Option<usize>>> {
    let n = adj.len();
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
        for j in 0..n {
            if adj[i][j] {
                d[i][j] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Largest edge subset satisfying the definition, checked pair by pair with
/// the adjacency matrix; `forced` edges must be included.
fn definitional_max(edges: &[(usize, usize)], adj: &[Vec<bool>], forced: &[usize]) -> usize {
    let k = edges.len();
    assert!(k <= 20);
    let compatible = |e: (usize, usize), f: (usize, usize)| {
        let ends = [e.0, e.1, f.0, f.1];
        let disjoint = e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1;
        disjoint && !ends[..2].iter().any(|&x| ends[2..].iter().any(|&y| adj[x][y]))
    };
    let mut best = 0;
    'subsets: for mask in 0u32..(1 << k) {
        if forced.iter().any(|&f| mask & (1 << f) == 0) {
            continue;
        }
        let members: Vec<_> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if !compatible(edges[i], edges[j]) {
                    continue 'subsets;
                }
            }
        }
        best = best.max(members.len());
    }
    best
}

#[test]
fn product_counts_by_pair_enumeration() {
    let s3 = star(3).unwrap();
    let p2 = path(2).unwrap();
    let (a, b) = (matrix(&s3), matrix(&p2));
    let mut count = 0;
    for x in 0..3 * 2 {
        for y in x + 1..3 * 2 {
            let ((g1, h1), (g2, h2)) = ((x / 2, x % 2), (y / 2, y % 2));
            if (g1 == g2 && b[h1][h2]) || (h1 == h2 && a[g1][g2]) {
                count += 1;
            }
        }
    }
    assert_eq!(count, 7);
    let prod = cartesian_product(&s3, &p2).unwrap();
    assert_eq!((prod.vertex_count(), prod.edge_count()), (6, count));

    let (g, _) = stacked_book(4, 5).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (20, 5 * 3 + 4 * 4));
    let g = grid3(4).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (12, 4 * 2 + 3 * 3));
}

#[test]
fn book_g33_distances() {
    let (g, book) = stacked_book(3, 3).unwrap();
    let d = floyd_warshall(&matrix(&g));
    let (a, b) = (book.vertex(1, 2), book.vertex(3, 3));
    assert_eq!(d[a][b], Some(4));
    assert_eq!(g.distance(a, b).unwrap(), Distance::Finite(4));
    let diam = d.iter().flatten().map(|x| x.unwrap()).max().unwrap();
    assert_eq!(diam, 4);
    assert_eq!(g.diameter().unwrap(), Distance::Finite(4));
}

#[test]
fn star_leaves_are_two_apart() {
    let s = star(5).unwrap();
    assert_eq!(s.distance(1, 3).unwrap(), Distance::Finite(2));
    for m in 3..9 {
        assert_eq!(star(m).unwrap().diameter().unwrap(), Distance::Finite(2));
    }
}

#[test]
fn bfs_agrees_with_floyd_warshall() {
    for g in [
        stacked_book(3, 4).unwrap().0,
        grid3(5).unwrap(),
        cartesian_product(&star(4).unwrap(), &star(3).unwrap()).unwrap(),
    ] {
        let d = floyd_warshall(&matrix(&g));
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                assert_eq!(g.distance(u, v).unwrap().finite(), d[u][v]);
            }
        }
    }
}

#[test]
fn forced_inner_p5_edge() {
    let g = path(5).unwrap();
    let inner = g.edge_id(1, 2).unwrap();
    let expected = definitional_max(g.edges(), &matrix(&g), &[inner]);
    assert_eq!(expected, 1);
    let r = im_exact_forced(&g, &[inner], &mut Unlimited).unwrap();
    assert_eq!(r.matching.size(), expected);
}

#[test]
fn definitional_oracle_on_small_books() {
    for (m, n) in [(3, 2), (3, 3), (4, 2), (3, 4), (4, 3)] {
        let (g, _) = stacked_book(m, n).unwrap();
        let expected = definitional_max(g.edges(), &matrix(&g), &[]);
        assert_eq!(im_exact(&g, &mut Unlimited).matching.size(), expected, "({m},{n})");
    }
    // P_3 □ P_4 has 17 edges.
    let g = grid3(4).unwrap();
    assert_eq!(
        im_exact(&g, &mut Unlimited).matching.size(),
        definitional_max(g.edges(), &matrix(&g), &[])
    );
}

#[test]
fn constructions_certified_across_m() {
    for m in 3..=12 {
        assert_eq!(construct_n2(m).unwrap().achieved_size, m - 1);
        assert_eq!(construct_n3(m).unwrap().achieved_size, m - 1);
        assert_eq!(construct_n4(m).unwrap().achieved_size, m);
        assert_eq!(construct_n5(m).unwrap().achieved_size, 2 * (m - 1));
    }
}

#[test]
fn constructions_never_exceed_optimum() {
    for m in 3..=5 {
        for r in [
            construct_n2(m).unwrap(),
            construct_n3(m).unwrap(),
            construct_n4(m).unwrap(),
            construct_n5(m).unwrap(),
        ] {
            let best = im_exact(&r.graph, &mut Unlimited).matching.size();
            assert!(r.achieved_size <= best);
        }
    }
}
