//! Brute-force reference solvers.
//!
//! These deliberately share no code with the production solvers: they work
//! on plain adjacency queries and raw rankings and enumerate everything.
//! Only usable on tiny instances.

use std::collections::{HashSet, VecDeque};

use crate::graph::Graph;

/// `α(g)` by enumerating every vertex subset.
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 24, "subset enumeration on {n} vertices");
    let mut best = 0;
    for subset in 0u32..(1u32 << n) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = (0..n).filter(|&u| subset >> u & 1 == 1).all(|u| {
            (u + 1..n).all(|v| subset >> v & 1 == 0 || !g.has_edge(u, v))
        });
        if independent {
            best = size;
        }
    }
    best
}

/// `mdg(g)` by following every sequence of minimum-degree choices, with no
/// memoization and no component splitting.
pub fn naive_mdg(g: &Graph) -> usize {
    fn go(g: &Graph, alive: &mut Vec<bool>) -> usize {
        let n = g.n();
        let degree = |alive: &Vec<bool>, v: usize| {
            (0..n).filter(|&w| alive[w] && g.has_edge(v, w)).count()
        };
        let live: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let Some(min) = live.iter().map(|&v| degree(alive, v)).min() else {
            return 0;
        };
        let mut best = 0;
        for &v in &live {
            if degree(alive, v) != min {
                continue;
            }
            let removed: Vec<usize> = (0..n)
                .filter(|&w| alive[w] && (w == v || g.has_edge(v, w)))
                .collect();
            for &w in &removed {
                alive[w] = false;
            }
            best = best.max(1 + go(g, alive));
            for &w in &removed {
                alive[w] = true;
            }
        }
        best
    }
    go(g, &mut vec![true; g.n()])
}

/// Whether `c` beats every other candidate by strict majority in `profile`
/// (each ranking most-preferred first over candidates `0..m`).
pub fn is_condorcet_winner(profile: &[Vec<usize>], m: usize, c: usize) -> bool {
    let n = profile.len();
    (0..m).filter(|&d| d != c).all(|d| {
        let wins = profile
            .iter()
            .filter(|r| {
                let pc = r.iter().position(|&x| x == c).unwrap();
                let pd = r.iter().position(|&x| x == d).unwrap();
                pc < pd
            })
            .count();
        2 * wins > n
    })
}

/// Dodgson score of `c` by breadth-first search over whole profiles, where
/// one step swaps any two adjacent candidates in any voter's ranking.
pub fn bfs_carroll_score(profile: &[Vec<usize>], m: usize, c: usize) -> usize {
    let start = profile.to_vec();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back((start, 0usize));
    while let Some((state, dist)) = queue.pop_front() {
        if is_condorcet_winner(&state, m, c) {
            return dist;
        }
        for voter in 0..state.len() {
            for pos in 1..m {
                let mut next = state.clone();
                next[voter].swap(pos - 1, pos);
                if seen.insert(next.clone()) {
                    queue.push_back((next, dist + 1));
                }
            }
        }
    }
    unreachable!("raising c to the top of every ranking always succeeds")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_values() {
        assert_eq!(brute_alpha(&Graph::cycle(5)), 2);
        assert_eq!(naive_mdg(&Graph::star(3)), 3);
        assert_eq!(naive_mdg(&Graph::complete(4)), 1);
    }

    #[test]
    fn bfs_on_the_four_voter_profile() {
        // candidates C=0, D=1, P=2
        let p = vec![vec![0, 2, 1], vec![2, 0, 1], vec![2, 1, 0], vec![1, 2, 0]];
        assert_eq!(bfs_carroll_score(&p, 3, 2), 0);
        assert_eq!(bfs_carroll_score(&p, 3, 0), 3);
        assert_eq!(bfs_carroll_score(&p, 3, 1), 3);
    }
}
