use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{closure_bounded, is_normal, quotient, Group, QuotientGroup};
use crate::error::{Error, Result};
use crate::signedperm::SignedPerm;

const SEARCH_SEED: u64 = 0xc0_4e11;
const RANDOM_TRIES: usize = 512;

/// A short generating set of `q`, as coset indices. Tries one generator, then
/// random pairs and triples, and finally falls back to greedy accumulation.
pub fn quotient_generating_set(q: &QuotientGroup) -> Vec<usize> {
    let m = q.order();
    if m == 1 {
        return Vec::new();
    }
    let orders: Vec<usize> = (0..m).map(|c| q.element_order(c)).collect();
    if let Some(c) = (0..m).find(|&c| orders[c] == m) {
        return vec![c];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    for k in 2..=3 {
        for _ in 0..RANDOM_TRIES {
            let gens: Vec<usize> = (0..k).map(|_| rng.gen_range(1..m)).collect();
            if q.subgroup_order(&gens) == m {
                return gens;
            }
        }
    }
    let mut gens = Vec::new();
    let mut current = 1;
    for c in 1..m {
        if current == m {
            break;
        }
        gens.push(c);
        let grown = q.subgroup_order(&gens);
        if grown == current {
            gens.pop();
        } else {
            current = grown;
        }
    }
    gens
}

struct LiftSearch<'a> {
    lifts: Vec<Vec<SignedPerm>>,
    prefix_orders: Vec<usize>,
    stop_at_first: bool,
    found: &'a mut Vec<Group>,
}

impl LiftSearch<'_> {
    fn run(&mut self, chosen: &mut Vec<SignedPerm>) -> bool {
        let depth = chosen.len();
        if depth == self.lifts.len() {
            let target = *self.prefix_orders.last().unwrap_or(&1);
            let c = closure_bounded(chosen, target).expect("checked at previous depth");
            self.found.push(c);
            return self.stop_at_first;
        }
        let target = self.prefix_orders[depth];
        for i in 0..self.lifts[depth].len() {
            chosen.push(self.lifts[depth][i]);
            let fits = closure_bounded(chosen, target).is_some_and(|h| h.order() == target);
            if fits && self.run(chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

fn search(g: &Group, a: &Group, stop_at_first: bool) -> Result<Vec<Group>> {
    if !is_normal(g, a)? {
        return Err(Error::NotNormal);
    }
    let q = quotient(g, a)?;
    let gens = quotient_generating_set(&q);
    // A lift of a quotient generator into a complement has the same order as
    // the coset, which prunes most candidates before any closure is taken.
    let lifts: Vec<Vec<SignedPerm>> = gens
        .iter()
        .map(|&c| {
            let rep = q.representative(c);
            let ord = q.element_order(c) as u64;
            a.elements()
                .iter()
                .map(|&x| rep.compose(x))
                .filter(|y| y.order() == ord)
                .collect()
        })
        .collect();
    let prefix_orders: Vec<usize> = (1..=gens.len()).map(|j| q.subgroup_order(&gens[..j])).collect();
    let mut found = Vec::new();
    if gens.is_empty() {
        found.push(Group::trivial());
        return Ok(found);
    }
    LiftSearch {
        lifts,
        prefix_orders,
        stop_at_first,
        found: &mut found,
    }
    .run(&mut Vec::new());
    Ok(found)
}

/// A subgroup `C` with `|C| = |G|/|A|` and `C ∩ A = 1`, if one exists.
///
/// Backtracks over all lifts `g_i·a` of a generating set of `G/A`; a partial
/// lift set survives only while it generates a group of the same order as its
/// image in the quotient. A complete lift set of full quotient order maps onto
/// `G/A` with trivial kernel, so it is a complement.
pub fn complement_search(g: &Group, a: &Group) -> Result<Option<Group>> {
    Ok(search(g, a, true)?.pop())
}

/// Every complement of `a` in `g`. Distinct lift tuples give distinct
/// complements, since a complement contains exactly one lift of each coset.
pub fn complements(g: &Group, a: &Group) -> Result<Vec<Group>> {
    search(g, a, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::{closure, intersection};

    fn perm(p: [u8; 7]) -> SignedPerm {
        SignedPerm::from_perm(p).unwrap()
    }

    fn check_complement(g: &Group, a: &Group, c: &Group) {
        assert_eq!(c.order() * a.order(), g.order());
        assert_eq!(intersection(c, a).unwrap().order(), 1);
        let mut gens = c.generators().to_vec();
        gens.extend_from_slice(a.generators());
        assert_eq!(closure(&gens).unwrap(), *g);
    }

    #[test]
    fn s4_splits_over_v4() {
        let g = closure(&[perm([1, 2, 3, 0, 4, 5, 6]), perm([1, 0, 2, 3, 4, 5, 6])]).unwrap();
        let v4 = closure(&[perm([1, 0, 3, 2, 4, 5, 6]), perm([2, 3, 0, 1, 4, 5, 6])]).unwrap();
        let c = complement_search(&g, &v4).unwrap().expect("S4 = V4 : S3");
        check_complement(&g, &v4, &c);
        // the four point stabilizers
        assert_eq!(complements(&g, &v4).unwrap().len(), 4);
    }

    #[test]
    fn cyclic_four_does_not_split() {
        let c4 = closure(&[perm([1, 2, 3, 0, 4, 5, 6])]).unwrap();
        let c2 = closure(&[perm([2, 3, 0, 1, 4, 5, 6])]).unwrap();
        assert_eq!(complement_search(&c4, &c2).unwrap(), None);
    }

    #[test]
    fn trivial_quotient_has_trivial_complement() {
        let c4 = closure(&[perm([1, 2, 3, 0, 4, 5, 6])]).unwrap();
        let c = complement_search(&c4, &c4).unwrap().unwrap();
        assert_eq!(c.order(), 1);
    }

    #[test]
    fn requires_normal_subgroup() {
        let g = closure(&[perm([1, 2, 3, 0, 4, 5, 6]), perm([1, 0, 2, 3, 4, 5, 6])]).unwrap();
        let c2 = closure(&[perm([1, 0, 2, 3, 4, 5, 6])]).unwrap();
        assert_eq!(complement_search(&g, &c2), Err(Error::NotNormal));
    }
}
