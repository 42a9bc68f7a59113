//! Finite-group algorithms over explicit sets of [`SignedPerm`] elements.
//!
//! Groups are stored as a sorted element list plus a dense membership bitset
//! over the full signed permutation group, so every algorithm here works by
//! direct set manipulation rather than stabilizer chains.

mod classes;
mod complement;
mod quotient;
mod subgroups;

pub use classes::{class_count_union_find, conjugacy_classes, ClassPartition};
pub use complement::{complement_search, complements, quotient_generating_set};
pub use quotient::{quotient, quotient_classes, QuotientGroup};
pub use subgroups::{merge_conjugates, subgroups_above};

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::signedperm::{Gf2Code, SignedPerm, AMBIENT_ORDER};

/// Largest closure accepted: the full signed permutation group, i.e. twice the
/// determinant-1 monomial group.
pub const CAPACITY: usize = AMBIENT_ORDER;

const GENERATOR_SEED: u64 = 0x5eed_0007;

/// Membership bitset indexed by [`SignedPerm::dense_index`].
#[derive(Clone)]
pub struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    pub fn new() -> Self {
        ElementSet {
            words: vec![0; AMBIENT_ORDER.div_ceil(64)],
        }
    }

    /// Returns `true` if `g` was not already present.
    #[inline]
    pub fn insert(&mut self, g: SignedPerm) -> bool {
        let i = g.dense_index();
        let (w, b) = (i / 64, i % 64);
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn contains(&self, g: SignedPerm) -> bool {
        let i = g.dense_index();
        self.words[i / 64] >> (i % 64) & 1 == 1
    }
}

impl Default for ElementSet {
    fn default() -> Self {
        Self::new()
    }
}

/// A finite group of signed permutations with its complete element list.
#[derive(Clone)]
pub struct Group {
    generators: Vec<SignedPerm>,
    elements: Vec<SignedPerm>,
    members: ElementSet,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Group {}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl Group {
    /// The trivial group.
    pub fn trivial() -> Self {
        let mut members = ElementSet::new();
        members.insert(SignedPerm::IDENTITY);
        Group {
            generators: Vec::new(),
            elements: vec![SignedPerm::IDENTITY],
            members,
        }
    }

    pub fn generators(&self) -> &[SignedPerm] {
        &self.generators
    }

    /// All elements in increasing packed order.
    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, g: SignedPerm) -> bool {
        self.members.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.generators.iter().all(|&g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, &a)| self.generators[i + 1..].iter().all(|&b| a.commutes_with(b)))
    }

    /// Builds a group from a set of elements that is already known to form a
    /// group, choosing a small generating set. Fails if the set is not closed.
    pub fn from_elements(mut elements: Vec<SignedPerm>) -> Result<Group> {
        elements.sort_unstable();
        elements.dedup();
        let n = elements.len();
        if n == 0 {
            return Err(Error::NoGenerators);
        }
        let mut target = ElementSet::new();
        for &g in &elements {
            target.insert(g);
        }
        if !target.contains(SignedPerm::IDENTITY) {
            return Err(Error::NotClosed);
        }
        let mut order: Vec<SignedPerm> = elements.clone();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(GENERATOR_SEED));
        let mut current = Group::trivial();
        let mut gens = Vec::new();
        for g in order {
            if current.order() == n {
                break;
            }
            if current.contains(g) {
                continue;
            }
            gens.push(g);
            current = closure_bounded(&gens, n).ok_or(Error::NotClosed)?;
            if current.elements.iter().any(|&x| !target.contains(x)) {
                return Err(Error::NotClosed);
            }
        }
        if current.order() != n {
            return Err(Error::NotClosed);
        }
        Ok(current)
    }

    /// Subgroup of elements satisfying `keep`; the predicate must define a
    /// subgroup.
    pub fn filter<F: Fn(SignedPerm) -> bool>(&self, keep: F) -> Result<Group> {
        Group::from_elements(self.elements.iter().copied().filter(|&g| keep(g)).collect())
    }

    /// `⟨self, extra⟩`.
    pub fn extend(&self, extra: &[SignedPerm]) -> Result<Group> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        closure(&gens)
    }

    /// Element counts keyed by element order.
    pub fn order_histogram(&self) -> BTreeMap<u64, usize> {
        let mut hist = BTreeMap::new();
        for g in &self.elements {
            *hist.entry(g.order()).or_insert(0) += 1;
        }
        hist
    }
}

fn grow(
    mut elements: Vec<SignedPerm>,
    mut members: ElementSet,
    gens: &[SignedPerm],
    limit: usize,
) -> Option<(Vec<SignedPerm>, ElementSet)> {
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next];
        next += 1;
        for &g in gens {
            let y = x.compose(g);
            if members.insert(y) {
                elements.push(y);
                if elements.len() > limit {
                    return None;
                }
            }
        }
    }
    Some((elements, members))
}

/// Closure of `generators`, or `None` as soon as it exceeds `limit` elements.
pub fn closure_bounded(generators: &[SignedPerm], limit: usize) -> Option<Group> {
    let mut members = ElementSet::new();
    members.insert(SignedPerm::IDENTITY);
    let (mut elements, members) = grow(vec![SignedPerm::IDENTITY], members, generators, limit)?;
    elements.sort_unstable();
    Some(Group {
        generators: generators.to_vec(),
        elements,
        members,
    })
}

/// The smallest group containing `generators`, found by breadth-first right
/// multiplication starting at the identity.
pub fn closure(generators: &[SignedPerm]) -> Result<Group> {
    if generators.is_empty() {
        return Err(Error::NoGenerators);
    }
    closure_bounded(generators, CAPACITY).ok_or(Error::Capacity { limit: CAPACITY })
}

/// `⟨h, extra⟩` for a known group `h`, bounded by `limit`.
pub(crate) fn closure_over(h: &Group, extra: SignedPerm, limit: usize) -> Option<Group> {
    let mut gens = h.generators.clone();
    gens.push(extra);
    let (mut elements, members) = grow(h.elements.clone(), h.members.clone(), &gens, limit)?;
    elements.sort_unstable();
    Some(Group {
        generators: gens,
        elements,
        members,
    })
}

fn require_subgroup(g: &Group, h: &Group) -> Result<()> {
    if h.is_subgroup_of(g) {
        Ok(())
    } else {
        Err(Error::NotSubgroup)
    }
}

/// Whether `h ◁ g`. Checks generator conjugates only.
pub fn is_normal(g: &Group, h: &Group) -> Result<bool> {
    require_subgroup(g, h)?;
    Ok(g.generators
        .iter()
        .all(|&x| h.generators.iter().all(|&y| h.contains(y.conjugate_by(x)))))
}

pub fn centralizer(g: &Group, x: SignedPerm) -> Result<Group> {
    if !g.contains(x) {
        return Err(Error::NotMember);
    }
    g.filter(|y| y.commutes_with(x))
}

pub fn normalizer(g: &Group, h: &Group) -> Result<Group> {
    require_subgroup(g, h)?;
    g.filter(|x| h.generators.iter().all(|&y| h.contains(y.conjugate_by(x))))
}

pub fn intersection(g: &Group, h: &Group) -> Result<Group> {
    g.filter(|x| h.contains(x))
}

/// Smallest normal subgroup of `g` containing `seeds`.
pub fn normal_closure(g: &Group, seeds: &[SignedPerm]) -> Result<Group> {
    let mut gens: Vec<SignedPerm> = seeds.iter().copied().filter(|s| !s.is_identity()).collect();
    if gens.is_empty() {
        return Ok(Group::trivial());
    }
    let mut current = closure(&gens)?;
    loop {
        let missing = g
            .generators
            .iter()
            .flat_map(|&x| gens.iter().map(move |&y| y.conjugate_by(x)))
            .find(|&c| !current.contains(c));
        match missing {
            Some(c) => {
                gens.push(c);
                current = closure(&gens)?;
            }
            None => return Ok(current),
        }
    }
}

/// The group of diagonal matrices `diag(v)`, `v ∈ code`.
pub fn diagonal_group(code: &Gf2Code) -> Result<Group> {
    if code.dimension() == 0 {
        return Ok(Group::trivial());
    }
    closure(&code.basis().iter().map(|&v| SignedPerm::diag(v)).collect::<Vec<_>>())
}

pub fn derived_subgroup(g: &Group) -> Result<Group> {
    let gens = g.generators();
    let mut commutators = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            commutators.push(a * b * a.inverse() * b.inverse());
        }
    }
    normal_closure(g, &commutators)
}

pub fn center(g: &Group) -> Result<Group> {
    g.filter(|x| g.generators.iter().all(|&y| x.commutes_with(y)))
}

/// Cheap isomorphism invariants. Equal groups give equal fingerprints; unequal
/// fingerprints prove non-isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub order_histogram: BTreeMap<u64, usize>,
    pub derived_order: usize,
    pub center_order: usize,
}

pub fn fingerprint(g: &Group) -> Result<GroupFingerprint> {
    let mut class_sizes = conjugacy_classes(g).sizes();
    class_sizes.sort_unstable();
    Ok(GroupFingerprint {
        order: g.order(),
        class_sizes,
        order_histogram: g.order_histogram(),
        derived_order: derived_subgroup(g)?.order(),
        center_order: center(g)?.order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signedperm::Gf2Vec;

    fn perm(p: [u8; 7]) -> SignedPerm {
        SignedPerm::from_perm(p).unwrap()
    }

    fn alpha() -> SignedPerm {
        perm([1, 2, 3, 4, 5, 6, 0])
    }

    fn s4() -> Group {
        closure(&[perm([1, 2, 3, 0, 4, 5, 6]), perm([1, 0, 2, 3, 4, 5, 6])]).unwrap()
    }

    #[test]
    fn closure_of_seven_cycle() {
        let g = closure(&[alpha()]).unwrap();
        assert_eq!(g.order(), 7);
        assert!(g.contains(SignedPerm::IDENTITY));
        assert!(g.is_abelian());
    }

    #[test]
    fn closure_needs_generators() {
        assert_eq!(closure(&[]).unwrap_err(), Error::NoGenerators);
    }

    #[test]
    fn bounded_closure_aborts() {
        assert!(closure_bounded(&s4().generators, 23).is_none());
        assert_eq!(closure_bounded(&s4().generators, 24).unwrap().order(), 24);
    }

    #[test]
    fn from_elements_recovers_group() {
        let g = s4();
        let h = Group::from_elements(g.elements().to_vec()).unwrap();
        assert_eq!(h, g);
        assert!(h.generators().len() <= 4);
        let mut bad = g.elements()[..5].to_vec();
        bad.push(SignedPerm::IDENTITY);
        assert!(Group::from_elements(bad).is_err());
    }

    #[test]
    fn normality() {
        let g = s4();
        let v4 = closure(&[perm([1, 0, 3, 2, 4, 5, 6]), perm([2, 3, 0, 1, 4, 5, 6])]).unwrap();
        assert!(is_normal(&g, &v4).unwrap());
        assert!(is_normal(&g, &g).unwrap());
        let c2 = closure(&[perm([1, 0, 2, 3, 4, 5, 6])]).unwrap();
        assert!(!is_normal(&g, &c2).unwrap());
        assert_eq!(is_normal(&c2, &g), Err(Error::NotSubgroup));
    }

    #[test]
    fn centralizer_of_identity_is_everything() {
        let g = s4();
        assert_eq!(centralizer(&g, SignedPerm::IDENTITY).unwrap(), g);
        assert_eq!(centralizer(&g, alpha()).unwrap_err(), Error::NotMember);
    }

    #[test]
    fn derived_and_center_of_s4() {
        let g = s4();
        assert_eq!(derived_subgroup(&g).unwrap().order(), 12);
        assert_eq!(center(&g).unwrap().order(), 1);
    }

    #[test]
    fn cyclic_fingerprint() {
        let f = fingerprint(&closure(&[alpha()]).unwrap()).unwrap();
        assert_eq!(f.order, 7);
        assert_eq!(f.class_sizes, vec![1; 7]);
        assert_eq!(f.order_histogram, BTreeMap::from([(1, 1), (7, 6)]));
        assert_eq!(f.derived_order, 1);
        assert_eq!(f.center_order, 7);
    }

    #[test]
    fn equal_groups_equal_fingerprints() {
        let a = s4();
        let b = Group::from_elements(a.elements().to_vec()).unwrap();
        assert_eq!(fingerprint(&a).unwrap(), fingerprint(&b).unwrap());
    }

    #[test]
    fn diagonal_group_is_abelian() {
        let gens: Vec<_> = (0..6)
            .map(|i| SignedPerm::diag(Gf2Vec::unit(i) ^ Gf2Vec::unit(i + 1)))
            .collect();
        let a = closure(&gens).unwrap();
        assert_eq!(a.order(), 64);
        assert!(a.is_abelian());
    }
}
