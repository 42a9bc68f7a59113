use super::{is_normal, ClassPartition, Group};
use crate::error::{Error, Result};
use crate::signedperm::{SignedPerm, AMBIENT_ORDER};

const NONE: u32 = u32::MAX;

/// `G/N` as an abstract group on coset indices.
///
/// Coset 0 is `N` itself. Multiplication is looked up through a dense map from
/// every element of `G` to its coset, so no section of representatives is
/// ever assumed to be a subgroup.
#[derive(Clone)]
pub struct QuotientGroup {
    reps: Vec<SignedPerm>,
    coset_of: Vec<u32>,
    generators: Vec<usize>,
    kernel_order: usize,
}

impl std::fmt::Debug for QuotientGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuotientGroup")
            .field("order", &self.order())
            .field("kernel_order", &self.kernel_order)
            .finish()
    }
}

impl QuotientGroup {
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn kernel_order(&self) -> usize {
        self.kernel_order
    }

    pub fn representatives(&self) -> &[SignedPerm] {
        &self.reps
    }

    pub fn representative(&self, coset: usize) -> SignedPerm {
        self.reps[coset]
    }

    /// Cosets of the parent group's generators.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Coset containing `g`, if `g` lies in the parent group.
    pub fn coset(&self, g: SignedPerm) -> Option<usize> {
        match self.coset_of[g.dense_index()] {
            NONE => None,
            c => Some(c as usize),
        }
    }

    fn coset_unchecked(&self, g: SignedPerm) -> usize {
        self.coset_of[g.dense_index()] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.coset_unchecked(self.reps[a].compose(self.reps[b]))
    }

    pub fn inv(&self, a: usize) -> usize {
        self.coset_unchecked(self.reps[a].inverse())
    }

    /// `b a b⁻¹`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        let rb = self.reps[b];
        self.coset_unchecked(rb.compose(self.reps[a]).compose(rb.inverse()))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Order of the subgroup generated by `gens`.
    pub fn subgroup_order(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = vec![0usize];
        let mut next = 0;
        while next < queue.len() {
            let x = queue[next];
            next += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.len()
    }

    /// The full Cayley table. Quadratic in the order; intended for small
    /// quotients.
    pub fn table(&self) -> Vec<Vec<u32>> {
        (0..self.order())
            .map(|a| (0..self.order()).map(|b| self.mul(a, b) as u32).collect())
            .collect()
    }
}

/// `G/N` for a normal subgroup `N`.
pub fn quotient(g: &Group, n: &Group) -> Result<QuotientGroup> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![NONE; AMBIENT_ORDER];
    let mut reps = Vec::with_capacity(g.order() / n.order());
    let starts = std::iter::once(SignedPerm::IDENTITY).chain(g.elements().iter().copied());
    for x in starts {
        if coset_of[x.dense_index()] != NONE {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &y in n.elements() {
            coset_of[x.compose(y).dense_index()] = c;
        }
    }
    let generators = g
        .generators()
        .iter()
        .map(|&x| coset_of[x.dense_index()] as usize)
        .collect();
    Ok(QuotientGroup {
        reps,
        coset_of,
        generators,
        kernel_order: n.order(),
    })
}

/// Conjugacy classes of the abstract quotient, as lists of coset indices.
pub fn quotient_classes(q: &QuotientGroup) -> ClassPartition<usize> {
    let mut seen = vec![false; q.order()];
    let mut classes = Vec::new();
    for start in 0..q.order() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut class = vec![start];
        let mut next = 0;
        while next < class.len() {
            let x = class[next];
            next += 1;
            for &h in q.generators() {
                let y = q.conjugate(x, h);
                if !seen[y] {
                    seen[y] = true;
                    class.push(y);
                }
            }
        }
        classes.push(class);
    }
    ClassPartition::new(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::closure;

    fn perm(p: [u8; 7]) -> SignedPerm {
        SignedPerm::from_perm(p).unwrap()
    }

    fn s4() -> Group {
        closure(&[perm([1, 2, 3, 0, 4, 5, 6]), perm([1, 0, 2, 3, 4, 5, 6])]).unwrap()
    }

    fn v4() -> Group {
        closure(&[perm([1, 0, 3, 2, 4, 5, 6]), perm([2, 3, 0, 1, 4, 5, 6])]).unwrap()
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let q = quotient(&s4(), &v4()).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.kernel_order() * q.order(), 24);
        assert_eq!(quotient_classes(&q).count(), 3);
        let table = q.table();
        for row in &table {
            let mut r = row.clone();
            r.sort_unstable();
            assert_eq!(r, (0..6).collect::<Vec<u32>>());
        }
        for b in 0..6 {
            let mut col: Vec<u32> = table.iter().map(|r| r[b]).collect();
            col.sort_unstable();
            assert_eq!(col, (0..6).collect::<Vec<u32>>());
        }
        assert_eq!(q.subgroup_order(q.generators()), 6);
    }

    #[test]
    fn quotient_by_self_is_trivial() {
        let g = s4();
        let q = quotient(&g, &g).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(quotient_classes(&q).count(), 1);
    }

    #[test]
    fn non_normal_rejected() {
        let c2 = closure(&[perm([1, 0, 2, 3, 4, 5, 6])]).unwrap();
        assert_eq!(quotient(&s4(), &c2).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn identity_coset_is_zero() {
        let q = quotient(&s4(), &v4()).unwrap();
        assert_eq!(q.coset(SignedPerm::IDENTITY), Some(0));
        for a in 0..q.order() {
            assert_eq!(q.mul(a, q.inv(a)), 0);
            assert_eq!(q.mul(0, a), a);
        }
        assert_eq!(q.coset(perm([0, 1, 2, 3, 5, 4, 6])), None);
    }
}
