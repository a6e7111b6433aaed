//! Membership in the classes `S_r = { G : α(G)/r <= mdg(G) }`.

use crate::budget::StateBudget;
use crate::error::Result;
use crate::graph::Graph;
use crate::greedy::mdg_max;
use crate::mis::alpha;
use crate::rational::Rational;

/// `α(g)/r <= mdg(g)`, exactly. The empty graph belongs to every class.
pub fn in_s_r(g: &Graph, r: Rational, budget: StateBudget) -> Result<bool> {
    let mdg = mdg_max(g, budget)?.value;
    Ok(r.ratio_within(alpha(g), mdg))
}

/// The complement test: some `k` in `1..=n` has `α(g) >= k` and
/// `mdg(g) < k/r`. Always the negation of [`in_s_r`].
pub fn not_in_s_r_via_k(g: &Graph, r: Rational, budget: StateBudget) -> Result<bool> {
    let mdg = mdg_max(g, budget)?.value as u128;
    let a = alpha(g);
    Ok((1..=g.n()).any(|k| a >= k && mdg * (r.num() as u128) < (k as u128) * (r.den() as u128)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn r(p: u64, q: u64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn basic_members() {
        let b = StateBudget::default();
        assert!(in_s_r(&Graph::complete(5), Rational::ONE, b).unwrap());
        assert!(in_s_r(&Graph::new(0), Rational::ONE, b).unwrap());
        assert!(in_s_r(&Graph::new(0), r(7, 3), b).unwrap());
        assert!(!not_in_s_r_via_k(&Graph::complete(5), Rational::ONE, b).unwrap());
        assert!(!not_in_s_r_via_k(&Graph::edgeless(4), Rational::ONE, b).unwrap());
    }

    #[test]
    fn suboptimal_graph_sits_on_the_three_halves_boundary() {
        let b = StateBudget::default();
        let g = generate::graph_from_mask(7, 59325);
        assert!(!in_s_r(&g, Rational::ONE, b).unwrap());
        assert!(not_in_s_r_via_k(&g, Rational::ONE, b).unwrap());
        // α = 3, mdg = 2: 3/(3/2) = 2 <= 2
        assert!(in_s_r(&g, r(3, 2), b).unwrap());
        assert!(!in_s_r(&g, r(7, 5), b).unwrap());
    }
}
