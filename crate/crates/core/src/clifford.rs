//! Character-theoretic counting through a normal diagonal subgroup `A`.
//!
//! Irreducible characters of `G` split into those with `A` in the kernel (as
//! many as `G/A` has classes) and those lying over a nontrivial linear
//! character `η` of `A`. The latter are counted orbit by orbit: over the
//! `G`-orbit of `η` there are exactly as many as `I_η/K` has irreducibles
//! that are `-1` on `A/K`, where `I_η` is the stabilizer of `η` and `K` its
//! kernel. That number is `k(I_η/K) − k(I_η/A)`.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupkit::{
    conjugacy_classes, diagonal_group, is_normal, normal_closure, quotient, quotient_classes, ClassPartition, Group,
};
use crate::signedperm::{Gf2Code, Gf2Vec, SignedPerm};

/// Natural character values, one per class of a [`ClassPartition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    values: Vec<i32>,
}

impl ClassFunction {
    pub fn values(&self) -> &[i32] {
        &self.values
    }
}

/// Trace of each class representative.
pub fn natural_character(classes: &ClassPartition) -> ClassFunction {
    ClassFunction {
        values: classes.representatives().iter().map(|g| g.trace()).collect(),
    }
}

/// Whether the trace is constant on every class, so that the natural
/// character is a well-defined integer class function.
pub fn traces_constant_on_classes(classes: &ClassPartition) -> bool {
    classes
        .classes()
        .iter()
        .all(|c| c.iter().all(|g| g.trace() == c[0].trace()))
}

/// `(χ, χ) = |G|⁻¹ Σ χ(g)²`, exact. Equal to 1 iff the natural representation
/// is irreducible.
pub fn char_norm(g: &Group) -> Ratio<u64> {
    let sum: u64 = g.elements().iter().map(|x| (x.trace() * x.trace()) as u64).sum();
    Ratio::new(sum, g.order() as u64)
}

pub fn is_irreducible(g: &Group) -> bool {
    char_norm(g) == Ratio::from_integer(1)
}

pub fn is_transitive_on_axes(g: &Group) -> bool {
    let mut reached = 1u8;
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for x in g.generators() {
            let j = x.image(i);
            if reached >> j & 1 == 0 {
                reached |= 1 << j;
                frontier.push(j);
            }
        }
    }
    reached == 0x7f
}

/// A nontrivial character `A → {±1}`, `a ↦ (−1)^{dual·a}`.
///
/// The dual vector is the smallest representative of its coset modulo the
/// annihilator of `A`, so equal functionals compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Functional {
    dual: Gf2Vec,
    code: Gf2Code,
    annihilator: Gf2Code,
    kernel: Gf2Code,
}

impl Functional {
    fn with_annihilator(dual: Gf2Vec, code: &Gf2Code, ann: Gf2Code) -> Self {
        let dual = ann
            .enumerate()
            .into_iter()
            .map(|z| dual ^ z)
            .min()
            .expect("annihilator contains zero");
        let kernel = Gf2Code::span(code.enumerate().into_iter().filter(|a| !dual.dot(*a)));
        Functional {
            dual,
            code: code.clone(),
            annihilator: ann,
            kernel,
        }
    }

    pub fn dual(&self) -> Gf2Vec {
        self.dual
    }

    pub fn code(&self) -> &Gf2Code {
        &self.code
    }

    /// The index-2 subgroup of `A` on which the functional is trivial.
    pub fn kernel(&self) -> &Gf2Code {
        &self.kernel
    }

    pub fn eval(&self, a: Gf2Vec) -> i32 {
        if self.dual.dot(a) {
            -1
        } else {
            1
        }
    }

    /// `g·η = η ∘ conj(g⁻¹)`. Conjugation by `g` moves diagonal coordinates
    /// by the permutation part, so the dual vector moves the same way.
    pub fn act(&self, g: SignedPerm) -> Functional {
        Functional::with_annihilator(self.dual.permute(&g.perm()), &self.code, self.annihilator.clone())
    }

    /// Whether `g·η = η`, without building the image.
    pub fn is_fixed_by(&self, g: SignedPerm) -> bool {
        self.annihilator.contains(self.dual.permute(&g.perm()) ^ self.dual)
    }
}

/// All `2^dim − 1` nontrivial functionals of `A`, ordered by dual vector.
pub fn functionals(a: &Gf2Code) -> Result<Vec<Functional>> {
    if a.dimension() == 0 {
        return Err(Error::DegenerateCode);
    }
    let ann = a.annihilator();
    let mut out: Vec<Functional> = Gf2Vec::all()
        .map(|y| Functional::with_annihilator(y, a, ann.clone()))
        .filter(|f| f.kernel != *a)
        .collect();
    out.sort_by_key(|f| f.dual);
    out.dedup_by_key(|f| f.dual);
    Ok(out)
}

fn require_normalizes(g: &Group, a: &Gf2Code) -> Result<()> {
    if g.generators().iter().all(|x| a.is_invariant_under(&x.perm())) {
        Ok(())
    } else {
        Err(Error::NotNormal)
    }
}

/// Orbits of the functionals of `A` under `g`, each listed from its smallest
/// member, orbits in order of that member.
pub fn functional_orbits(g: &Group, a: &Gf2Code) -> Result<Vec<Vec<Functional>>> {
    require_normalizes(g, a)?;
    let all = functionals(a)?;
    let mut seen = [false; 128];
    let mut orbits = Vec::new();
    for f in all {
        if seen[f.dual.bits() as usize] {
            continue;
        }
        seen[f.dual.bits() as usize] = true;
        let mut orbit = vec![f];
        let mut next = 0;
        while next < orbit.len() {
            let cur = orbit[next].clone();
            next += 1;
            for &x in g.generators() {
                let h = cur.act(x);
                if !seen[h.dual.bits() as usize] {
                    seen[h.dual.bits() as usize] = true;
                    orbit.push(h);
                }
            }
        }
        orbit.sort_by_key(|f| f.dual);
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Stabilizer of `eta` in `g`.
pub fn inertia_group(g: &Group, eta: &Functional) -> Result<Group> {
    require_normalizes(g, &eta.code)?;
    g.filter(|x| eta.is_fixed_by(x))
}

fn gamma_in(inertia: &Group, eta: &Functional) -> Result<usize> {
    let k = diagonal_group(&eta.kernel)?;
    let a = diagonal_group(&eta.code)?;
    let over_k = quotient_classes(&quotient(inertia, &k)?).count();
    let over_a = quotient_classes(&quotient(inertia, &a)?).count();
    Ok(over_k - over_a)
}

/// Number of irreducible characters of `I_η/K` that are `−1` on `A/K`:
/// `k(I_η/K) − k(I_η/A)`.
pub fn gamma(g: &Group, eta: &Functional) -> Result<usize> {
    gamma_in(&inertia_group(g, eta)?, eta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub size: usize,
    pub inertia_index: usize,
    pub gamma: usize,
}

/// Class count of `G` split through the normal diagonal subgroup `A`.
///
/// `fc_orbit` sums γ over representatives of the `G`-orbits of functionals.
/// `fc_paper` instead multiplies the γ of the first functional by the number
/// of orbits of the distinguished order-7 element, which is only correct when
/// every `G`-orbit has the same γ and size 7.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliffordCount {
    pub nfc: usize,
    pub fc_paper: usize,
    pub fc_orbit: usize,
    #[serde(rename = "direct_classes")]
    pub direct: usize,
    pub orbits: Vec<OrbitRecord>,
    #[serde(skip)]
    pub seven_orbits: usize,
}

impl CliffordCount {
    /// `direct = nfc + fc_orbit`.
    pub fn is_consistent(&self) -> bool {
        self.direct == self.nfc + self.fc_orbit
    }
}

pub fn clifford_count(g: &Group, a: &Gf2Code) -> Result<CliffordCount> {
    if a.dimension() == 0 {
        return Err(Error::DegenerateCode);
    }
    let a_group = diagonal_group(a)?;
    if !is_normal(g, &a_group)? {
        return Err(Error::NotNormal);
    }
    let nfc = quotient_classes(&quotient(g, &a_group)?).count();

    let mut orbits = Vec::new();
    let mut fc_orbit = 0;
    let mut first_gamma = None;
    for orbit in functional_orbits(g, a)? {
        let eta = &orbit[0];
        let inertia = inertia_group(g, eta)?;
        let gamma = gamma_in(&inertia, eta)?;
        first_gamma.get_or_insert(gamma);
        fc_orbit += gamma;
        orbits.push(OrbitRecord {
            size: orbit.len(),
            inertia_index: g.order() / inertia.order(),
            gamma,
        });
    }

    let seven = g
        .elements()
        .iter()
        .copied()
        .find(|x| x.order() == 7)
        .ok_or(Error::SearchFailed("no element of order 7"))?;
    let seven_orbits = functional_orbits(&crate::groupkit::closure(&[seven])?, a)?.len();

    Ok(CliffordCount {
        nfc,
        fc_paper: first_gamma.unwrap_or(0) * seven_orbits,
        fc_orbit,
        direct: conjugacy_classes(g).count(),
        orbits,
        seven_orbits,
    })
}

/// `G × ⟨−I⟩`, built inside O(7) by adjoining `−I`.
pub fn adjoin_neg_identity(g: &Group) -> Result<Group> {
    let neg = SignedPerm::neg_identity();
    if g.contains(neg) {
        return Err(Error::NegIdentityPresent);
    }
    g.extend(&[neg])
}

/// Whether `g` has no proper nontrivial normal subgroup. The trivial group
/// counts as simple here.
pub fn is_simple(g: &Group) -> Result<bool> {
    for rep in conjugacy_classes(g).representatives() {
        if rep.is_identity() {
            continue;
        }
        if normal_closure(g, &[rep])?.order() != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{build_a64, build_a8};
    use crate::groupkit::closure;
    use crate::groupkit::diagonal_group;

    fn seven_cycle() -> SignedPerm {
        SignedPerm::from_perm([1, 2, 3, 4, 5, 6, 0]).unwrap()
    }

    #[test]
    fn functional_counts() {
        let f8 = functionals(&build_a8()).unwrap();
        assert_eq!(f8.len(), 7);
        let f64 = functionals(&build_a64()).unwrap();
        assert_eq!(f64.len(), 63);
        for f in f8.iter().chain(&f64) {
            assert_eq!(f.kernel().order() * 2, f.code().order());
            assert!(f.code().enumerate().iter().any(|&a| f.eval(a) == -1));
        }
        assert_eq!(functionals(&Gf2Code::zero()), Err(Error::DegenerateCode));
    }

    #[test]
    fn seven_cycle_orbits_on_a64() {
        let c7 = closure(&[seven_cycle()]).unwrap();
        let orbits = functional_orbits(&c7, &build_a64()).unwrap();
        assert_eq!(orbits.len(), 9);
        assert!(orbits.iter().all(|o| o.len() == 7));
    }

    #[test]
    fn diagonal_group_norm_and_transitivity() {
        let a = diagonal_group(&build_a64()).unwrap();
        // Σ (7 − 2w)² · #{even words of weight w} / 64
        let oracle: i64 = [(0, 1), (2, 21), (4, 35), (6, 7)]
            .iter()
            .map(|&(w, n)| (7 - 2 * w) * (7 - 2 * w) * n)
            .sum();
        assert_eq!(oracle, 448);
        assert_eq!(char_norm(&a), Ratio::from_integer(7));
        assert!(!is_transitive_on_axes(&a));
        assert!(is_transitive_on_axes(&closure(&[seven_cycle()]).unwrap()));
    }

    #[test]
    fn inertia_of_abelian_group_is_everything() {
        let a = diagonal_group(&build_a64()).unwrap();
        for eta in functionals(&build_a64()).unwrap().iter().take(5) {
            assert_eq!(inertia_group(&a, eta).unwrap(), a);
            assert_eq!(gamma(&a, eta).unwrap(), 1);
        }
    }

    #[test]
    fn neg_identity_adjoined_once() {
        let g = closure(&[seven_cycle()]).unwrap();
        let h = adjoin_neg_identity(&g).unwrap();
        assert_eq!(h.order(), 14);
        assert_eq!(conjugacy_classes(&h).count(), 14);
        assert_eq!(adjoin_neg_identity(&h), Err(Error::NegIdentityPresent));
    }

    #[test]
    fn simplicity_of_small_groups() {
        assert!(is_simple(&Group::trivial()).unwrap());
        assert!(is_simple(&closure(&[seven_cycle()]).unwrap()).unwrap());
        let s3 = closure(&[
            SignedPerm::from_perm([1, 2, 0, 3, 4, 5, 6]).unwrap(),
            SignedPerm::from_perm([1, 0, 2, 3, 4, 5, 6]).unwrap(),
        ])
        .unwrap();
        assert!(!is_simple(&s3).unwrap());
    }

    #[test]
    fn clifford_rejects_degenerate_and_non_normal() {
        let g = closure(&[seven_cycle()]).unwrap();
        assert_eq!(clifford_count(&g, &Gf2Code::zero()), Err(Error::DegenerateCode));
        // A8 in binary coordinates is not preserved by the plain 7-cycle
        let a8 = build_a8();
        let mut gens: Vec<SignedPerm> = a8.basis().iter().map(|&v| SignedPerm::diag(v)).collect();
        gens.push(seven_cycle());
        let h = closure(&gens).unwrap();
        assert_eq!(clifford_count(&h, &a8), Err(Error::NotNormal));
    }
}
