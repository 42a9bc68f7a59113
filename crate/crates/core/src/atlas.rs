//! The named groups of the classification, built as explicit signed
//! permutation groups, plus the searches that pin down the cases theory alone
//! does not construct.
//!
//! Case-2 coordinates are the nonzero vectors of GF(2)³ in binary order:
//! coordinate `i` is the vector with value `i + 1`. With that indexing the
//! weight-4 simplex code `A8` and the GL(3,2) action on points are compatible
//! by construction. Case-3 groups use the full even-weight code `A64`, which
//! every coordinate permutation preserves, and contain the plain 7-cycle
//! `i ↦ i + 1`.

use std::fmt;
use std::str::FromStr;

use crate::clifford::{adjoin_neg_identity, char_norm, is_simple};
use crate::error::{Error, Result};
use crate::groupkit::{
    closure, complement_search, complements, diagonal_group, fingerprint, intersection, is_normal, merge_conjugates,
    normalizer, subgroups_above, Group, GroupFingerprint,
};
use crate::signedperm::{cyclic_code, Gf2Code, Gf2Vec, SignedPerm};

/// Multiplication by `x` in GF(8) = GF(2)[x]/(x³+x+1), on points.
const SINGER: [u8; 7] = [1, 3, 5, 2, 0, 6, 4];
/// Squaring in GF(8), on points.
const FROBENIUS: [u8; 7] = [0, 3, 4, 5, 6, 1, 2];
/// An involution of GL(3,2) that together with `SINGER` generates it.
const GL32_INVOLUTION: [u8; 7] = [0, 1, 2, 4, 3, 6, 5];

const SEVEN_CYCLE: [u8; 7] = [1, 2, 3, 4, 5, 6, 0];
/// `i ↦ 2i mod 7`.
const TIMES_TWO: [u8; 7] = [0, 2, 4, 6, 1, 3, 5];
/// `i ↦ -i mod 7`.
const NEGATION: [u8; 7] = [0, 6, 5, 4, 3, 2, 1];
/// `i ↦ 3i mod 7`.
const TIMES_THREE: [u8; 7] = [0, 3, 6, 2, 5, 1, 4];
/// An involution preserving the lines `{i, i+1, i+3}` of the cyclic Fano
/// plane; with the 7-cycle it generates a transitive PSL(3,2).
const FANO_INVOLUTION: [u8; 7] = [0, 1, 4, 3, 2, 6, 5];
const THREE_CYCLE: [u8; 7] = [1, 2, 0, 3, 4, 5, 6];
const TRANSPOSITION: [u8; 7] = [1, 0, 2, 3, 4, 5, 6];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseGroup {
    Case1Psl27,
    Case2Z7,
    Case2F21,
    Case2Psl32Split,
    Case2Psl32Nonsplit,
    Case3Z7,
    Case3D14,
    Case3F21,
    Case3F42,
    Case3Psl32,
    Case3A7,
    Case3S7,
}

impl BaseGroup {
    pub const ALL: [BaseGroup; 12] = [
        BaseGroup::Case1Psl27,
        BaseGroup::Case2Z7,
        BaseGroup::Case2F21,
        BaseGroup::Case2Psl32Split,
        BaseGroup::Case2Psl32Nonsplit,
        BaseGroup::Case3Z7,
        BaseGroup::Case3D14,
        BaseGroup::Case3F21,
        BaseGroup::Case3F42,
        BaseGroup::Case3Psl32,
        BaseGroup::Case3A7,
        BaseGroup::Case3S7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaseGroup::Case1Psl27 => "case1-psl27",
            BaseGroup::Case2Z7 => "case2-z7",
            BaseGroup::Case2F21 => "case2-f21",
            BaseGroup::Case2Psl32Split => "case2-psl32-split",
            BaseGroup::Case2Psl32Nonsplit => "case2-psl32-nonsplit",
            BaseGroup::Case3Z7 => "case3-z7",
            BaseGroup::Case3D14 => "case3-d14",
            BaseGroup::Case3F21 => "case3-f21",
            BaseGroup::Case3F42 => "case3-f42",
            BaseGroup::Case3Psl32 => "case3-psl32",
            BaseGroup::Case3A7 => "case3-a7",
            BaseGroup::Case3S7 => "case3-s7",
        }
    }

    pub fn case(self) -> u8 {
        match self {
            BaseGroup::Case1Psl27 => 1,
            BaseGroup::Case2Z7 | BaseGroup::Case2F21 | BaseGroup::Case2Psl32Split | BaseGroup::Case2Psl32Nonsplit => 2,
            _ => 3,
        }
    }

    /// Order of the quotient by the diagonal code (or of the group, in case 1).
    pub fn quotient_order(self) -> usize {
        match self {
            BaseGroup::Case2Z7 | BaseGroup::Case3Z7 => 7,
            BaseGroup::Case3D14 => 14,
            BaseGroup::Case2F21 | BaseGroup::Case3F21 => 21,
            BaseGroup::Case3F42 => 42,
            BaseGroup::Case1Psl27
            | BaseGroup::Case2Psl32Split
            | BaseGroup::Case2Psl32Nonsplit
            | BaseGroup::Case3Psl32 => 168,
            BaseGroup::Case3A7 => 2520,
            BaseGroup::Case3S7 => 5040,
        }
    }

    pub fn code(self) -> Option<DiagonalCode> {
        match self.case() {
            1 => None,
            2 => Some(DiagonalCode::A8),
            _ => Some(DiagonalCode::A64),
        }
    }

    pub fn order(self) -> usize {
        self.code().map_or(1, DiagonalCode::order) * self.quotient_order()
    }
}

/// A catalog entry: a base group, optionally with `-I` adjoined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NamedGroupId {
    pub base: BaseGroup,
    pub neg: bool,
}

impl NamedGroupId {
    pub fn base(base: BaseGroup) -> Self {
        NamedGroupId { base, neg: false }
    }

    /// The full catalog: the twelve base groups, then their `+neg` variants.
    pub fn catalog() -> Vec<NamedGroupId> {
        let base = BaseGroup::ALL.iter().map(|&b| NamedGroupId { base: b, neg: false });
        let neg = BaseGroup::ALL.iter().map(|&b| NamedGroupId { base: b, neg: true });
        base.chain(neg).collect()
    }

    pub fn order(self) -> usize {
        self.base.order() * if self.neg { 2 } else { 1 }
    }

    pub fn case(self) -> u8 {
        self.base.case()
    }
}

impl fmt::Display for NamedGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.base.name())?;
        if self.neg {
            f.write_str("+neg")?;
        }
        Ok(())
    }
}

impl FromStr for NamedGroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, neg) = match s.strip_suffix("+neg") {
            Some(n) => (n, true),
            None => (s, false),
        };
        BaseGroup::ALL
            .iter()
            .find(|b| b.name() == name)
            .map(|&base| NamedGroupId { base, neg })
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalCode {
    A8,
    A64,
}

impl DiagonalCode {
    pub fn order(self) -> usize {
        match self {
            DiagonalCode::A8 => 8,
            DiagonalCode::A64 => 64,
        }
    }

    pub fn build(self) -> Gf2Code {
        match self {
            DiagonalCode::A8 => build_a8(),
            DiagonalCode::A64 => build_a64(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftRule {
    /// Quotient generators are even permutations used as plain matrices.
    Plain,
    /// `p ↦ sgn(p)·p`.
    SignTwisted,
    /// The group comes from a search rather than from generators.
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionRecipe {
    pub id: BaseGroup,
    pub code: Option<DiagonalCode>,
    pub quotient_generators: Vec<[u8; 7]>,
    pub lift: LiftRule,
}

pub fn recipe(base: BaseGroup) -> ConstructionRecipe {
    use BaseGroup::*;
    let (gens, lift): (&[[u8; 7]], LiftRule) = match base {
        Case1Psl27 | Case2Psl32Nonsplit => (&[], LiftRule::Search),
        Case2Z7 => (&[SINGER], LiftRule::Plain),
        Case2F21 => (&[SINGER, FROBENIUS], LiftRule::Plain),
        Case2Psl32Split => (&[SINGER, GL32_INVOLUTION], LiftRule::Plain),
        Case3Z7 => (&[SEVEN_CYCLE], LiftRule::SignTwisted),
        Case3D14 => (&[SEVEN_CYCLE, NEGATION], LiftRule::SignTwisted),
        Case3F21 => (&[SEVEN_CYCLE, TIMES_TWO], LiftRule::SignTwisted),
        Case3F42 => (&[SEVEN_CYCLE, TIMES_THREE], LiftRule::SignTwisted),
        Case3Psl32 => (&[SEVEN_CYCLE, FANO_INVOLUTION], LiftRule::SignTwisted),
        Case3A7 => (&[SEVEN_CYCLE, THREE_CYCLE], LiftRule::SignTwisted),
        Case3S7 => (&[SEVEN_CYCLE, TRANSPOSITION], LiftRule::SignTwisted),
    };
    ConstructionRecipe {
        id: base,
        code: base.code(),
        quotient_generators: gens.to_vec(),
        lift,
    }
}

/// A constructed catalog group together with its normal diagonal code and a
/// distinguished element of order 7.
#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub id: NamedGroupId,
    pub group: Group,
    pub code: Option<Gf2Code>,
    pub seven: SignedPerm,
}

fn gf2_point_code(u: u8) -> Gf2Vec {
    let bits = (1u8..=7)
        .filter(|&v| (u & v).count_ones() % 2 == 1)
        .fold(0u8, |acc, v| acc | 1 << (v - 1));
    Gf2Vec::new(bits)
}

/// The simplex code `{(u·v)_v : u ∈ GF(2)³}` on the seven nonzero points `v`.
pub fn build_a8() -> Gf2Code {
    Gf2Code::span([1, 2, 4].map(gf2_point_code))
}

/// All even-weight vectors.
pub fn build_a64() -> Gf2Code {
    Gf2Code::even_weight()
}

/// The plain 7-cycle `i ↦ i + 1`.
pub fn alpha() -> SignedPerm {
    SignedPerm::from_perm(SEVEN_CYCLE).expect("valid constant")
}

/// `i ↦ 2i mod 7`, which conjugates `alpha` to its square.
pub fn f21_beta() -> SignedPerm {
    SignedPerm::from_perm(TIMES_TWO).expect("valid constant")
}

pub fn sign_twisted_lift(perms: &[[u8; 7]]) -> Result<Vec<SignedPerm>> {
    perms.iter().map(|&p| SignedPerm::sign_twisted(p)).collect()
}

fn plain_perms(perms: &[[u8; 7]]) -> Result<Vec<SignedPerm>> {
    perms.iter().map(|&p| SignedPerm::from_perm(p)).collect()
}

/// The 168 point permutations induced by invertible 3×3 matrices over GF(2).
pub fn build_gl32() -> Result<Group> {
    let mut perms = Vec::new();
    for cols in 0u32..512 {
        let col = |j: u32| (cols >> (3 * j) & 7) as u8;
        let apply = |v: u8| (0..3).filter(|&j| v >> j & 1 == 1).fold(0u8, |acc, j| acc ^ col(j));
        let images: Vec<u8> = (1u8..=7).map(apply).collect();
        if images.contains(&0) {
            continue;
        }
        let p: [u8; 7] = std::array::from_fn(|i| images[i] - 1);
        perms.push(SignedPerm::from_perm(p)?);
    }
    Group::from_elements(perms)
}

/// All permutations of the seven axes, as plain permutation matrices.
pub fn symmetric_group() -> Result<Group> {
    closure(&plain_perms(&[SEVEN_CYCLE, TRANSPOSITION])?)
}

/// Determinant-1 signed permutations whose permutation part preserves `A8`:
/// the even diagonals extended by the GL(3,2) point action.
pub fn normalizer_of_a8() -> Result<Group> {
    let mut gens: Vec<SignedPerm> = build_a64().basis().iter().map(|&v| SignedPerm::diag(v)).collect();
    gens.extend(plain_perms(&[SINGER, GL32_INVOLUTION])?);
    closure(&gens)
}

fn check_order(id: &str, group: &Group, expected: usize) -> Result<()> {
    if group.order() == expected {
        Ok(())
    } else {
        Err(Error::OrderMismatch {
            id: id.to_string(),
            expected,
            got: group.order(),
        })
    }
}

/// The subgroups `G` of the `A8` normalizer with `|G| = 1344`, `A8 ◁ G` and
/// `G ∩ diagonals = A8`, one per fingerprint.
///
/// Such `G` correspond to order-168 subgroups of the normalizer modulo `A8`
/// that meet the diagonal image trivially. Every one contains a Sylow-7, and
/// all Sylow-7s are conjugate, so searching upward from `A8 ⋊ ⟨singer⟩` finds
/// a representative of each.
pub fn search_order_1344() -> Result<Vec<Group>> {
    let n = normalizer_of_a8()?;
    let a8 = diagonal_group(&build_a8())?;
    let diagonals = diagonal_group(&build_a64())?;
    let mut seed_gens = a8.generators().to_vec();
    seed_gens.extend(plain_perms(&[SINGER])?);
    let seed = closure(&seed_gens)?;
    let mut distinct: Vec<(GroupFingerprint, Group)> = Vec::new();
    for h in subgroups_above(&n, &seed)? {
        if h.order() != 1344 || intersection(&h, &diagonals)?.order() != a8.order() {
            continue;
        }
        let f = fingerprint(&h)?;
        if distinct.iter().all(|(seen, _)| *seen != f) {
            distinct.push((f, h));
        }
    }
    Ok(distinct.into_iter().map(|(_, h)| h).collect())
}

/// The perfect order-1344 extension of `A8` by GL(3,2) that has no complement.
pub fn nonsplit_psl32() -> Result<Group> {
    let a8 = diagonal_group(&build_a8())?;
    for g in search_order_1344()? {
        if complement_search(&g, &a8)?.is_none() {
            return Ok(g);
        }
    }
    Err(Error::SearchFailed("no non-split extension of A8 by GL(3,2)"))
}

/// An irreducible monomial copy of PSL(2,7): a complement to the even
/// diagonals in the `A8` normalizer whose natural character has norm 1.
///
/// The plain permutation copy of GL(3,2) is one such complement but is
/// reducible (norm 2) and is rejected. Among the irreducible simple
/// complements the one with the smallest element list is returned.
pub fn search_case1_psl27() -> Result<Group> {
    let n = normalizer_of_a8()?;
    let diagonals = diagonal_group(&build_a64())?;
    let mut best: Option<Group> = None;
    for c in complements(&n, &diagonals)? {
        if *char_norm(&c).numer() != 1 || *char_norm(&c).denom() != 1 || !is_simple(&c)? {
            continue;
        }
        if best.as_ref().is_none_or(|b| c.elements() < b.elements()) {
            best = Some(c);
        }
    }
    let best = best.ok_or(Error::SearchFailed("no irreducible complement of order 168"))?;
    // rebuild with a canonical generating set independent of search order
    Group::from_elements(best.elements().to_vec())
}

fn first_of_order(g: &Group, n: u64) -> Result<SignedPerm> {
    g.elements()
        .iter()
        .copied()
        .find(|x| x.order() == n)
        .ok_or(Error::SearchFailed("no element of order 7"))
}

fn lifted_generators(base: BaseGroup) -> Result<Vec<SignedPerm>> {
    let r = recipe(base);
    match r.lift {
        LiftRule::Plain => plain_perms(&r.quotient_generators),
        LiftRule::SignTwisted => sign_twisted_lift(&r.quotient_generators),
        LiftRule::Search => Ok(Vec::new()),
    }
}

/// The generating set a catalog group is defined by: diagonal basis of its
/// code, then the lifted quotient generators, then `−I` for `+neg` variants.
/// Groups found by search use the generators of the group found.
pub fn defining_generators(named: &NamedGroup) -> Result<Vec<SignedPerm>> {
    if recipe(named.id.base).lift == LiftRule::Search {
        return Ok(named.group.generators().to_vec());
    }
    let mut gens: Vec<SignedPerm> = named
        .code
        .as_ref()
        .map(|c| c.basis().iter().map(|&v| SignedPerm::diag(v)).collect())
        .unwrap_or_default();
    gens.extend(lifted_generators(named.id.base)?);
    if named.id.neg {
        gens.push(SignedPerm::neg_identity());
    }
    Ok(gens)
}

fn build_group(base: BaseGroup) -> Result<Group> {
    match base {
        BaseGroup::Case1Psl27 => search_case1_psl27(),
        BaseGroup::Case2Psl32Nonsplit => nonsplit_psl32(),
        _ => {
            let mut gens: Vec<SignedPerm> = base
                .code()
                .map(|c| c.build().basis().iter().map(|&v| SignedPerm::diag(v)).collect())
                .unwrap_or_default();
            gens.extend(lifted_generators(base)?);
            closure(&gens)
        }
    }
}

/// Wraps an already constructed group (for instance one reloaded from disk)
/// as the catalog group `id`, checking its order and that its code is normal.
pub fn named_group_from(id: NamedGroupId, group: Group) -> Result<NamedGroup> {
    check_order(&id.to_string(), &group, id.order())?;
    let code = id.base.code().map(DiagonalCode::build);
    if let Some(c) = &code {
        if !is_normal(&group, &diagonal_group(c)?)? {
            return Err(Error::NotNormal);
        }
    }
    if id.neg != group.contains(SignedPerm::neg_identity()) {
        return Err(Error::NotMember);
    }
    let seven = match lifted_generators(id.base)?.first() {
        Some(&g) if group.contains(g) => g,
        Some(_) => return Err(Error::NotMember),
        None => first_of_order(&group, 7)?,
    };
    Ok(NamedGroup { id, group, code, seven })
}

pub fn named_group(id: NamedGroupId) -> Result<NamedGroup> {
    let mut group = build_group(id.base)?;
    check_order(id.base.name(), &group, id.base.order())?;
    if id.neg {
        group = adjoin_neg_identity(&group)?;
    }
    named_group_from(id, group)
}

/// A cyclic code of length 7, described by its generator polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCode {
    /// Bit `i` is the coefficient of `xⁱ`.
    pub generator_poly: u16,
    pub code: Gf2Code,
    /// No nonzero codeword is fixed by the cyclic shift.
    pub fixed_point_free: bool,
}

fn poly_mul(a: u16, b: u16) -> u16 {
    (0..16).filter(|i| b >> i & 1 == 1).fold(0, |acc, i| acc ^ a << i)
}

/// Nonzero shift-invariant codes of length 7 in which every word has even
/// weight.
///
/// Cyclic codes correspond to divisors of `x⁷ − 1 = (x+1)(x³+x+1)(x³+x²+1)`;
/// all eight divisors are enumerated and filtered.
pub fn enumerate_invariant_codes() -> Vec<InvariantCode> {
    const FACTORS: [u16; 3] = [0b11, 0b1011, 0b1101];
    let mut out = Vec::new();
    for mask in 0..8u8 {
        let g = (0..3)
            .filter(|i| mask >> i & 1 == 1)
            .fold(1u16, |acc, i| poly_mul(acc, FACTORS[i]));
        // x⁷ − 1 itself reduces to zero
        let word = if g == 0b1000_0001 { 0 } else { g as u8 };
        let code = cyclic_code(Gf2Vec::new(word));
        let even = code.enumerate().iter().all(|w| w.weight() % 2 == 0);
        if code.dimension() == 0 || !even {
            continue;
        }
        let fixed_point_free = code.enumerate().iter().all(|&w| w.is_zero() || w.shift() != w);
        out.push(InvariantCode {
            generator_poly: g,
            code,
            fixed_point_free,
        });
    }
    out.sort_by_key(|c| (c.code.dimension(), c.generator_poly));
    out
}

/// Subgroups above a Sylow-7, raw and merged under conjugation by its
/// normalizer.
#[derive(Debug, Clone)]
pub struct QuotientList {
    pub raw: Vec<Group>,
    pub merged: Vec<Group>,
}

impl QuotientList {
    pub fn raw_orders(&self) -> Vec<usize> {
        self.raw.iter().map(Group::order).collect()
    }

    pub fn merged_orders(&self) -> Vec<usize> {
        self.merged.iter().map(Group::order).collect()
    }
}

fn quotient_list(ambient: &Group, seven: SignedPerm) -> Result<QuotientList> {
    let seed = closure(&[seven])?;
    let raw = subgroups_above(ambient, &seed)?;
    let merged = merge_conjugates(&raw, &normalizer(ambient, &seed)?);
    Ok(QuotientList { raw, merged })
}

/// Subgroups of S7 containing the 7-cycle.
pub fn case3_quotients() -> Result<QuotientList> {
    quotient_list(&symmetric_group()?, alpha())
}

/// Subgroups of GL(3,2) containing the Singer cycle.
pub fn case2_quotients() -> Result<QuotientList> {
    quotient_list(&build_gl32()?, SignedPerm::from_perm(SINGER)?)
}

/// Whether every extension of `A64` inside the determinant-1 monomial group
/// whose quotient is a subgroup of S7 of the given order containing the
/// 7-cycle splits.
pub fn preimages_split(quotient_order: usize) -> Result<bool> {
    let a64 = build_a64();
    let diag = diagonal_group(&a64)?;
    for h in case3_quotients()?.raw.iter().filter(|h| h.order() == quotient_order) {
        let mut gens = diag.generators().to_vec();
        for p in h.generators() {
            gens.push(SignedPerm::sign_twisted(p.perm())?);
        }
        let preimage = closure(&gens)?;
        check_order("preimage", &preimage, 64 * quotient_order)?;
        if complement_search(&preimage, &diag)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every extension of `A64` by a group of order 14 inside the
/// determinant-1 monomial group splits.
pub fn exclude_nonsplit_64_14() -> Result<bool> {
    preimages_split(14)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::{conjugacy_classes, is_normal};

    #[test]
    fn id_round_trip() {
        for id in NamedGroupId::catalog() {
            assert_eq!(id.to_string().parse::<NamedGroupId>().unwrap(), id);
        }
        assert_eq!(NamedGroupId::catalog().len(), 24);
        assert!(matches!("case4-z7".parse::<NamedGroupId>(), Err(Error::UnknownId(_))));
    }

    #[test]
    fn catalog_orders() {
        let o = |s: &str| s.parse::<NamedGroupId>().unwrap().order();
        assert_eq!(o("case2-z7"), 56);
        assert_eq!(o("case3-f42"), 2688);
        assert_eq!(o("case3-s7"), 322560);
        assert_eq!(o("case3-s7+neg"), 645120);
        assert_eq!(o("case2-psl32-nonsplit"), 1344);
        assert_eq!(o("case1-psl27"), 168);
    }

    #[test]
    fn diagonal_codes() {
        let a8 = build_a8();
        assert_eq!(a8.order(), 8);
        for w in a8.enumerate().into_iter().filter(|w| !w.is_zero()) {
            assert_eq!(w.weight(), 4);
            assert_eq!(SignedPerm::diag(w).trace(), -1);
        }
        let a64 = build_a64();
        assert_eq!(a64.order(), 64);
        assert!(a64.enumerate().iter().all(|&w| SignedPerm::diag(w).det() == 1));
    }

    #[test]
    fn alpha_and_beta() {
        let a = alpha();
        let b = f21_beta();
        assert_eq!(a.order(), 7);
        assert_eq!(a.det(), 1);
        assert_eq!(b.order(), 3);
        assert_eq!(b.det(), 1);
        assert_eq!(a.conjugate_by(b), a * a);
        let f21 = closure(&[a, b]).unwrap();
        assert_eq!(f21.order(), 21);
        assert!(!f21.is_abelian());
    }

    #[test]
    fn gl32_point_action() {
        let gl = build_gl32().unwrap();
        assert_eq!(gl.order(), 168);
        assert!(gl.elements().iter().all(|g| g.det() == 1));
        let a8 = build_a8();
        assert!(gl.elements().iter().all(|g| a8.is_invariant_under(&g.perm())));
        for p in [SINGER, FROBENIUS, GL32_INVOLUTION] {
            assert!(gl.contains(SignedPerm::from_perm(p).unwrap()));
        }
        let gens = plain_perms(&[SINGER, GL32_INVOLUTION]).unwrap();
        assert_eq!(closure(&gens).unwrap(), gl);
    }

    #[test]
    fn sign_twisted_lift_is_multiplicative_on_s7() {
        let s7 = symmetric_group().unwrap();
        let e = s7.elements();
        for i in (0..e.len()).step_by(37) {
            for j in (0..e.len()).step_by(53) {
                let (p, q) = (e[i], e[j]);
                let lpq = SignedPerm::sign_twisted((p * q).perm()).unwrap();
                let lp = SignedPerm::sign_twisted(p.perm()).unwrap();
                let lq = SignedPerm::sign_twisted(q.perm()).unwrap();
                assert_eq!(lpq, lp * lq);
            }
        }
    }

    #[test]
    fn normalizer_of_a8_structure() {
        let n = normalizer_of_a8().unwrap();
        assert_eq!(n.order(), 10752);
        let a8 = diagonal_group(&build_a8()).unwrap();
        assert!(is_normal(&n, &a8).unwrap());
        let split = named_group(NamedGroupId::base(BaseGroup::Case2Psl32Split)).unwrap();
        assert!(split.group.is_subgroup_of(&n));
    }

    #[test]
    fn small_case_groups() {
        for base in [
            BaseGroup::Case2Z7,
            BaseGroup::Case2F21,
            BaseGroup::Case3Z7,
            BaseGroup::Case3D14,
        ] {
            let g = named_group(NamedGroupId::base(base)).unwrap();
            assert_eq!(g.group.order(), base.order());
            let a = diagonal_group(g.code.as_ref().unwrap()).unwrap();
            assert!(is_normal(&g.group, &a).unwrap());
            assert_eq!(g.seven.order(), 7);
        }
    }

    #[test]
    fn case2_z7_class_count() {
        let g = named_group(NamedGroupId::base(BaseGroup::Case2Z7)).unwrap();
        assert_eq!(conjugacy_classes(&g.group).count(), 8);
    }

    #[test]
    fn invariant_codes() {
        let codes = enumerate_invariant_codes();
        let dims: Vec<usize> = codes.iter().map(|c| c.code.dimension()).collect();
        assert_eq!(dims, vec![3, 3, 6]);
        assert!(codes.iter().all(|c| c.fixed_point_free && c.code.is_shift_invariant()));
        assert!(codes.iter().all(|c| !c.code.contains(Gf2Vec::ALL_ONES)));
    }
}
