use std::collections::HashSet;

use super::{closure_over, ElementSet, Group};
use crate::error::{Error, Result};
use crate::signedperm::SignedPerm;

/// Marks the double coset `H x H` by breadth-first multiplication with the
/// generators of `H` on both sides.
fn mark_double_coset(h: &Group, x: SignedPerm, covered: &mut ElementSet) {
    let mut frontier = vec![x];
    covered.insert(x);
    while let Some(y) = frontier.pop() {
        for &g in h.generators() {
            for z in [g.compose(y), y.compose(g)] {
                if covered.insert(z) {
                    frontier.push(z);
                }
            }
        }
    }
}

/// Every subgroup `H` with `seed ≤ H ≤ g`, each exactly once, sorted by order.
///
/// Works upward: each known subgroup is extended by one element from every
/// double coset outside it, and new element sets are queued until nothing new
/// appears. Every intermediate subgroup is reached because any `K > H` contains
/// some `⟨H, x⟩` for `x ∈ K \ H`, and that chain ends at `K`.
pub fn subgroups_above(g: &Group, seed: &Group) -> Result<Vec<Group>> {
    if !seed.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let mut found = vec![seed.clone()];
    let mut keys: HashSet<Vec<SignedPerm>> = HashSet::from([seed.elements().to_vec()]);
    let mut next = 0;
    while next < found.len() {
        let h = found[next].clone();
        next += 1;
        let mut covered = ElementSet::new();
        for &x in h.elements() {
            covered.insert(x);
        }
        for &x in g.elements() {
            if covered.contains(x) {
                continue;
            }
            mark_double_coset(&h, x, &mut covered);
            let k = closure_over(&h, x, g.order()).ok_or(Error::NotSubgroup)?;
            if keys.insert(k.elements().to_vec()) {
                found.push(k);
            }
        }
    }
    found.sort_by_key(Group::order);
    Ok(found)
}

/// Keeps one subgroup from each class of `subgroups` under conjugation by
/// elements of `by`.
pub fn merge_conjugates(subgroups: &[Group], by: &Group) -> Vec<Group> {
    let mut seen: HashSet<Vec<SignedPerm>> = HashSet::new();
    let mut kept = Vec::new();
    for h in subgroups {
        if seen.contains(h.elements()) {
            continue;
        }
        for &c in by.elements() {
            let mut conj: Vec<SignedPerm> = h.elements().iter().map(|x| x.conjugate_by(c)).collect();
            conj.sort_unstable();
            seen.insert(conj);
        }
        kept.push(h.clone());
    }
    kept
}
