use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{closure_bounded, ElementSet, Group};
use crate::signedperm::SignedPerm;

/// A partition of a group into conjugacy classes.
///
/// Classes are listed in order of their first element, which is also the
/// class representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition<T = SignedPerm> {
    classes: Vec<Vec<T>>,
}

impl<T: Copy> ClassPartition<T> {
    pub fn new(classes: Vec<Vec<T>>) -> Self {
        ClassPartition { classes }
    }

    pub fn classes(&self) -> &[Vec<T>] {
        &self.classes
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn representatives(&self) -> Vec<T> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

/// Conjugacy classes by orbit sweeps: each class is the orbit of its first
/// element under conjugation by the generators.
pub fn conjugacy_classes(g: &Group) -> ClassPartition {
    let gens: Vec<(SignedPerm, SignedPerm)> = g.generators().iter().map(|&x| (x, x.inverse())).collect();
    let mut visited = ElementSet::new();
    let mut classes = Vec::new();
    for &x in g.elements() {
        if !visited.insert(x) {
            continue;
        }
        let mut class = vec![x];
        let mut next = 0;
        while next < class.len() {
            let y = class[next];
            next += 1;
            for &(h, h_inv) in &gens {
                let z = h.compose(y).compose(h_inv);
                if visited.insert(z) {
                    class.push(z);
                }
            }
        }
        classes.push(class);
    }
    ClassPartition { classes }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Number of conjugacy classes by union-find over conjugation by a randomly
/// drawn generating set, independent of the group's stored generators.
pub fn class_count_union_find(g: &Group, seed: u64) -> usize {
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut conjugators: Vec<SignedPerm> = Vec::new();
    while closure_bounded(&conjugators, n).map(|h| h.order()) != Some(n) {
        conjugators.push(*g.elements().choose(&mut rng).expect("nonempty group"));
    }
    let elements = g.elements();
    let position = |x: SignedPerm| elements.binary_search(&x).expect("conjugate lies in group");
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, &x) in elements.iter().enumerate() {
        for &c in &conjugators {
            let j = position(x.conjugate_by(c));
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::closure;
    use crate::signedperm::Gf2Vec;

    fn perm(p: [u8; 7]) -> SignedPerm {
        SignedPerm::from_perm(p).unwrap()
    }

    /// Burnside: k(G) = #{commuting pairs} / |G|.
    fn commuting_pairs_count(g: &Group) -> usize {
        let e = g.elements();
        let pairs: usize = e
            .iter()
            .map(|&a| e.iter().filter(|&&b| a.commutes_with(b)).count())
            .sum();
        pairs / e.len()
    }

    #[test]
    fn abelian_group_has_singleton_classes() {
        let gens: Vec<_> = (0..6)
            .map(|i| SignedPerm::diag(Gf2Vec::unit(i) ^ Gf2Vec::unit(i + 1)))
            .collect();
        let a = closure(&gens).unwrap();
        let cp = conjugacy_classes(&a);
        assert_eq!(cp.count(), 64);
        assert!(cp.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn symmetric_groups() {
        let s5 = closure(&[perm([1, 2, 3, 4, 0, 5, 6]), perm([1, 0, 2, 3, 4, 5, 6])]).unwrap();
        let cp = conjugacy_classes(&s5);
        assert_eq!(cp.count(), 7);
        assert_eq!(cp.sizes().iter().sum::<usize>(), 120);
        assert!(cp.sizes().iter().all(|s| 120 % s == 0));
        assert_eq!(class_count_union_find(&s5, 1), 7);
        assert_eq!(commuting_pairs_count(&s5), 7);
    }

    #[test]
    fn signed_group_matches_burnside() {
        // hyperoctahedral group of degree 3 has 10 classes
        let b3 = closure(&[
            perm([1, 2, 0, 3, 4, 5, 6]),
            perm([1, 0, 2, 3, 4, 5, 6]),
            SignedPerm::diag(Gf2Vec::unit(0)),
        ])
        .unwrap();
        assert_eq!(b3.order(), 48);
        assert_eq!(conjugacy_classes(&b3).count(), 10);
        assert_eq!(commuting_pairs_count(&b3), 10);
        assert_eq!(class_count_union_find(&b3, 7), 10);
    }

    #[test]
    fn representatives_are_first_elements() {
        let g = closure(&[perm([1, 2, 0, 3, 4, 5, 6])]).unwrap();
        let cp = conjugacy_classes(&g);
        assert_eq!(cp.representatives().len(), 3);
        assert!(cp.classes().iter().all(|c| c[0] == *c.iter().min().unwrap()));
    }
}
