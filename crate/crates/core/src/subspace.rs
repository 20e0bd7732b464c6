//! Subspaces of Q^n in canonical form, and the lattice operations on them.
//!
//! A subspace is stored as the reduced row-echelon basis of its span, so two
//! subspaces are equal exactly when their `Subspace` values are equal.  The
//! completion and classification passes rely on that for deduplication, and on
//! the deterministic pivot choices here for reproducible output.

use crate::matrix::Matrix;
use crate::rat::Rat;
use num::traits::Zero;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix, // RREF, rows = basis vectors, no zero rows
}

impl Subspace {
    /// Span of the given vectors inside Q^ambient.
    pub fn span(ambient: usize, vectors: Vec<Vec<Rat>>) -> Subspace {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "span vector length");
        }
        let m = Matrix::from_rows(vectors, ambient);
        Subspace {
            ambient,
            basis: m.rref().mat,
        }
    }

    pub fn span_int(ambient: usize, vectors: &[&[i64]]) -> Subspace {
        Subspace::span(
            ambient,
            vectors
                .iter()
                .map(|v| v.iter().map(|&k| crate::rat::int(k)).collect())
                .collect(),
        )
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Row space of `m` as a subspace of Q^cols.
    pub fn row_space(m: &Matrix) -> Subspace {
        Subspace {
            ambient: m.cols(),
            basis: m.rref().mat,
        }
    }

    /// Kernel of `m` as a subspace of Q^cols.
    pub fn kernel(m: &Matrix) -> Subspace {
        Subspace::span(m.cols(), m.kernel_rows())
    }

    /// Column space of `m` as a subspace of Q^rows.
    pub fn image(m: &Matrix) -> Subspace {
        Subspace::row_space(&m.transpose())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    /// Reduce `v` modulo this subspace using the pivot columns of the basis.
    /// The result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient, "reduce vector length");
        let mut out = v.to_vec();
        for i in 0..self.basis.rows() {
            // pivot column = first nonzero entry of basis row i (entry is 1)
            let row = self.basis.row(i);
            let p = row.iter().position(|x| !x.is_zero()).expect("no zero basis rows");
            if !out[p].is_zero() {
                let f = out[p].clone();
                for (o, b) in out.iter_mut().zip(row) {
                    let sub = &f * b;
                    *o = &*o - sub;
                }
            }
        }
        out
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        other.basis_rows().iter().all(|r| self.contains_vec(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::span(self.ambient, rows)
    }

    /// Intersection via annihilators: (S ∩ T)⊥ = S⊥ + T⊥.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// `{φ : φ(v) = 0 for all v ∈ S}` in the dual, same ambient dimension.
    /// An involution on canonical forms.
    pub fn annihilator(&self) -> Subspace {
        Subspace::kernel(&self.basis)
    }

    /// The canonical surjection Q^ambient → Q^(ambient − dim) with kernel
    /// exactly this subspace: rows are the canonical annihilator basis, which
    /// pins the choice to the non-pivot coordinates of the subspace's RREF.
    pub fn quotient_map(&self) -> Matrix {
        let ann = self.annihilator();
        ann.basis
    }

    /// Vectors `B` with `T = (S ∩ T) ⊕ span B` (self playing S), picked
    /// greedily from T's canonical basis in row order.  Empty iff `T ⊆ S`.
    pub fn extend_basis(&self, t: &Subspace) -> Vec<Vec<Rat>> {
        assert_eq!(self.ambient, t.ambient, "ambient mismatch");
        let w = self.intersect(t);
        let mut picked: Vec<Vec<Rat>> = Vec::new();
        let mut reach = w.clone();
        for r in t.basis_rows() {
            if !reach.contains_vec(&r) {
                picked.push(r.clone());
                let mut rows = reach.basis_rows();
                rows.push(r);
                reach = Subspace::span(self.ambient, rows);
            }
        }
        debug_assert_eq!(w.dim() + picked.len(), t.dim(), "complement not direct");
        picked
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    fn e(n: usize, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        v[i] = num::traits::One::one();
        v
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Subspace::kernel(&Matrix::identity(2)), Subspace::zero(2));
        assert_eq!(
            Subspace::kernel(&Matrix::from_int_rows(&[&[1, 0]], 2)),
            Subspace::span_int(2, &[&[0, 1]])
        );
        assert_eq!(
            Subspace::kernel(&Matrix::from_int_rows(&[&[1, 1], &[2, 2]], 2)),
            Subspace::span_int(2, &[&[1, -1]])
        );
    }

    #[test]
    fn sum_and_intersect_of_axes() {
        let e1 = Subspace::span_int(2, &[&[1, 0]]);
        let e2 = Subspace::span_int(2, &[&[0, 1]]);
        assert_eq!(e1.intersect(&e2), Subspace::zero(2));
        assert_eq!(e1.sum(&e2), Subspace::full(2));
    }

    #[test]
    fn intersect_planes_in_q3() {
        let s = Subspace::span_int(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let t = Subspace::span_int(3, &[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(s.intersect(&t), Subspace::span_int(3, &[&[1, 1, 1]]));
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(Subspace::zero(2).annihilator(), Subspace::full(2));
        assert_eq!(
            Subspace::span_int(2, &[&[1, 0]]).annihilator(),
            Subspace::span_int(2, &[&[0, 1]])
        );
        // span{(1,2)}⊥ = span{(2,−1)}, compared through canonical forms
        assert_eq!(
            Subspace::span_int(2, &[&[1, 2]]).annihilator(),
            Subspace::span_int(2, &[&[2, -1]])
        );
    }

    #[test]
    fn annihilator_is_involutive() {
        let s = Subspace::span_int(4, &[&[1, 2, 3, 4], &[0, 1, 0, 2]]);
        assert_eq!(s.annihilator().annihilator(), s);
    }

    #[test]
    fn quotient_map_examples() {
        let q = Subspace::span_int(2, &[&[0, 1]]).quotient_map();
        assert_eq!(q, Matrix::from_int_rows(&[&[1, 0]], 2));
        assert_eq!(Subspace::zero(2).quotient_map(), Matrix::identity(2));

        let s = Subspace::span_int(2, &[&[1, 1]]);
        let q = s.quotient_map();
        assert!(q.is_epimorphism());
        assert_eq!(Subspace::kernel(&q), s);
        // composed with the inclusion of S it vanishes
        for row in s.basis_rows() {
            assert!(q.mul_vec(&row).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn extend_basis_examples() {
        let s = Subspace::span_int(2, &[&[1, 0], &[0, 1]]);
        let t = Subspace::span_int(2, &[&[1, 1]]);
        assert!(s.extend_basis(&t).is_empty()); // T ⊆ S

        let b = Subspace::zero(2).extend_basis(&Subspace::full(2));
        assert_eq!(b, vec![e(2, 0), e(2, 1)]);

        let s = Subspace::span_int(2, &[&[1, 0]]);
        let b = s.extend_basis(&t);
        assert_eq!(b.len(), 1);
        assert_eq!(Subspace::span(2, b), t); // S∩T = 0, so B spans all of T
    }

    #[test]
    fn containment_and_reduce() {
        let s = Subspace::span_int(3, &[&[1, 0, 1], &[0, 1, 1]]);
        assert!(s.contains_vec(&[crate::rat::int(2), crate::rat::int(3), crate::rat::int(5)]));
        assert!(!s.contains_vec(&e(3, 0)));
        assert!(Subspace::full(3).contains(&s));
        assert!(!s.contains(&Subspace::full(3)));
    }
}
