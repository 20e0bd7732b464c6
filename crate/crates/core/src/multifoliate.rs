//! Multifoliate structures: surjective labelings of `n` coordinates by poset
//! elements, their block-triangular matrix groups, the induced coordinate
//! projective systems, products, equivalence, and Jacobian sparsity checks.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poset::{labeled_isomorphisms, Poset};
use crate::projsys::ProjectiveSystem;
use crate::rat::{int, Rat};
use num::traits::Zero;
use rand::Rng;
use std::collections::BTreeMap;

/// A poset Λ together with a surjective labeling `p: {1..n} → Λ`.
///
/// Coordinates are 0-based internally; the JSON layer speaks 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultifoliateStructure {
    poset: Poset,
    labels: Vec<usize>,
}

/// Sparsity pattern of the structure's linear symmetry group: entry (i,j) may
/// be nonzero iff `p(i) ≥ p(j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlPattern {
    n: usize,
    allowed: Vec<bool>,
}

impl MultifoliateStructure {
    pub fn new(poset: Poset, labels: Vec<usize>) -> Result<MultifoliateStructure> {
        for &l in &labels {
            if l >= poset.len() {
                return Err(Error::BadIndex(format!(
                    "label index {} out of range for a poset of {} elements",
                    l,
                    poset.len()
                )));
            }
        }
        for a in 0..poset.len() {
            if !labels.contains(&a) {
                return Err(Error::NotSurjective(format!(
                    "no coordinate is labeled {}",
                    poset.id(a)
                )));
            }
        }
        Ok(MultifoliateStructure { poset, labels })
    }

    /// Test convenience: labels given as element identifiers.
    pub fn of(poset: Poset, ids: &[&str]) -> Result<MultifoliateStructure> {
        let labels = ids
            .iter()
            .map(|s| poset.index(s).ok_or(Error::UnknownElement(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        MultifoliateStructure::new(poset, labels)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    /// Coordinates labeled by `alpha`, ascending.
    pub fn fiber(&self, alpha: usize) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.labels[i] == alpha).collect()
    }

    pub fn fiber_sizes(&self) -> Vec<usize> {
        (0..self.poset.len()).map(|a| self.fiber(a).len()).collect()
    }

    /// Relabeling along a permutation: coordinate `i` of the result carries
    /// the label of coordinate `sigma[i]`.
    pub fn relabel(&self, sigma: &[usize]) -> MultifoliateStructure {
        assert_eq!(sigma.len(), self.n());
        let labels = sigma.iter().map(|&j| self.labels[j]).collect();
        MultifoliateStructure { poset: self.poset.clone(), labels }
    }

    pub fn gl_pattern(&self) -> GlPattern {
        let n = self.n();
        let mut allowed = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                allowed[i * n + j] = self.poset.le(self.labels[j], self.labels[i]);
            }
        }
        GlPattern { n, allowed }
    }

    /// The coordinate projective system ξ(Λ,p): level α is spanned by the
    /// coordinates `H_α = {i : p(i) ≤ α}` in ascending order, transitions and
    /// limit projections select coordinates, and the limit is all of Q^n.
    pub fn system(&self) -> ProjectiveSystem {
        let n = self.n();
        let h: Vec<Vec<usize>> = (0..self.poset.len())
            .map(|a| (0..n).filter(|&i| self.poset.le(self.labels[i], a)).collect())
            .collect();
        let dims: Vec<usize> = h.iter().map(Vec::len).collect();
        let selector = |rows: &[usize], cols: usize, of: &dyn Fn(usize) -> usize| {
            Matrix::from_fn(rows.len(), cols, |r, c| {
                if of(c) == rows[r] {
                    int(1)
                } else {
                    Rat::zero()
                }
            })
        };
        let mut maps = BTreeMap::new();
        for (a, b) in self.poset.strict_pairs() {
            let hb = h[b].clone();
            maps.insert((b, a), selector(&h[a], h[b].len(), &move |c| hb[c]));
        }
        let projections: Vec<Matrix> =
            (0..self.poset.len()).map(|a| selector(&h[a], n, &|c| c)).collect();
        ProjectiveSystem::with_projections(self.poset.clone(), dims, maps, n, projections)
    }

    /// Product over the same poset: coordinates of the second factor are
    /// appended after the first.
    pub fn product(&self, other: &MultifoliateStructure) -> Result<MultifoliateStructure> {
        if self.poset != other.poset {
            return Err(Error::PosetMismatch);
        }
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Ok(MultifoliateStructure { poset: self.poset.clone(), labels })
    }

    /// Decide equivalence with `other`: search for a poset isomorphism ω
    /// preserving fiber sizes, then match fibers in ascending coordinate
    /// order to produce the permutation σ with `q = ω ∘ p ∘ σ`.  The witness
    /// is certified by conjugating sampled pattern members and re-checking
    /// membership.
    pub fn equivalent(
        &self,
        other: &MultifoliateStructure,
    ) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let n = self.n();
        let ours = self.fiber_sizes();
        let theirs = other.fiber_sizes();
        for omega in labeled_isomorphisms(&self.poset, &other.poset, &ours, &theirs) {
            let mut sigma = vec![0usize; n];
            for a in 0..self.poset.len() {
                let fs = self.fiber(a);
                let ft = other.fiber(omega[a]);
                debug_assert_eq!(fs.len(), ft.len());
                for (k, &t) in ft.iter().enumerate() {
                    sigma[t] = fs[k];
                }
            }
            // q(i) must equal ω(p(σ(i))) coordinatewise
            if (0..n).any(|i| other.labels[i] != omega[self.labels[sigma[i]]]) {
                continue;
            }
            if self.certify_conjugation(other, &sigma) {
                return Ok(Some((omega, sigma)));
            }
        }
        Ok(None)
    }

    /// Sample-based check that the permutation matrix of σ conjugates members
    /// of this structure's pattern into the other structure's pattern.
    fn certify_conjugation(&self, other: &MultifoliateStructure, sigma: &[usize]) -> bool {
        let n = self.n();
        let perm = Matrix::from_fn(n, n, |j, k| if sigma[j] == k { int(1) } else { Rat::zero() });
        let inv = match perm.inverse() {
            Some(m) => m,
            None => return false,
        };
        let ours = self.gl_pattern();
        let theirs = other.gl_pattern();
        let mut rng = crate::selftest::seeded_rng(0x05_16_0A);
        for _ in 0..20 {
            let m = ours.sample_member(&mut rng);
            if !theirs.is_member(&perm.mul(&m).mul(&inv)) {
                return false;
            }
        }
        true
    }
}

impl GlPattern {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn allowed(&self, i: usize, j: usize) -> bool {
        self.allowed[i * self.n + j]
    }

    /// Membership: invertible and zero on every disallowed entry.
    pub fn is_member(&self, m: &Matrix) -> bool {
        if m.rows() != self.n || m.cols() != self.n {
            return false;
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.allowed(i, j) && !m.at(i, j).is_zero() {
                    return false;
                }
            }
        }
        m.is_isomorphism()
    }

    /// Deterministic pseudo-random member: small integers on allowed entries,
    /// resampled until invertible (the diagonal is always allowed, so generic
    /// samples are invertible almost immediately).
    pub fn sample_member(&self, rng: &mut impl Rng) -> Matrix {
        loop {
            let m = Matrix::from_fn(self.n, self.n, |i, j| {
                if !self.allowed(i, j) {
                    Rat::zero()
                } else if i == j {
                    int(*[1, 2, 3, -1, -2].get(rng.gen_range(0..5)).unwrap())
                } else {
                    int(rng.gen_range(-3..=3))
                }
            });
            if m.is_isomorphism() {
                return m;
            }
        }
    }
}

/// Jacobian sparsity check between two labelings over one poset: entry (a,i)
/// of `j` must vanish unless `target(a) ≥ source(i)`.  Labelings need not be
/// surjective — a map may well miss levels of its target.
pub fn jacobian_check(
    poset: &Poset,
    source: &[usize],
    target: &[usize],
    j: &Matrix,
) -> Result<bool> {
    for &l in source.iter().chain(target) {
        if l >= poset.len() {
            return Err(Error::BadIndex(format!(
                "label index {} out of range for a poset of {} elements",
                l,
                poset.len()
            )));
        }
    }
    if j.rows() != target.len() || j.cols() != source.len() {
        return Err(Error::ShapeMismatch(format!(
            "Jacobian must be {}x{}, got {}x{}",
            target.len(),
            source.len(),
            j.rows(),
            j.cols()
        )));
    }
    for a in 0..target.len() {
        for i in 0..source.len() {
            if !poset.le(source[i], target[a]) && !j.at(a, i).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> Poset {
        Poset::of(&["a", "b"], &[("a", "b")]).unwrap()
    }

    fn antichain() -> Poset {
        Poset::of(&["a", "b"], &[]).unwrap()
    }

    #[test]
    fn surjectivity_is_required() {
        assert!(MultifoliateStructure::of(chain(), &["a", "b"]).is_ok());
        let err = MultifoliateStructure::of(chain(), &["a"]).unwrap_err();
        assert_eq!(err.code(), "NotSurjective");
        assert!(MultifoliateStructure::of(antichain(), &["a", "a", "b"]).is_ok());
    }

    #[test]
    fn pattern_shapes() {
        let s = MultifoliateStructure::of(chain(), &["a", "b"]).unwrap();
        let p = s.gl_pattern();
        assert!(p.allowed(0, 0) && !p.allowed(0, 1) && p.allowed(1, 0) && p.allowed(1, 1));

        let s = MultifoliateStructure::of(antichain(), &["a", "b"]).unwrap();
        let p = s.gl_pattern();
        assert!(p.allowed(0, 0) && p.allowed(1, 1) && !p.allowed(0, 1) && !p.allowed(1, 0));

        let point = Poset::of(&["e"], &[]).unwrap();
        let s = MultifoliateStructure::of(point, &["e", "e", "e"]).unwrap();
        let p = s.gl_pattern();
        assert!((0..3).all(|i| (0..3).all(|j| p.allowed(i, j))));
    }

    #[test]
    fn pattern_membership() {
        let s = MultifoliateStructure::of(chain(), &["a", "b"]).unwrap();
        let p = s.gl_pattern();
        assert!(p.is_member(&Matrix::identity(2)));
        assert!(p.is_member(&Matrix::from_int_rows(&[&[2, 0], &[5, 3]], 2)));
        // forbidden upper entry
        assert!(!p.is_member(&Matrix::from_int_rows(&[&[1, 1], &[0, 1]], 2)));
        // allowed sparsity but singular
        assert!(!p.is_member(&Matrix::from_int_rows(&[&[1, 0], &[1, 0]], 2)));
    }

    #[test]
    fn jacobian_sparsity() {
        let p = chain();
        let a = p.index("a").unwrap();
        let b = p.index("b").unwrap();
        // zero matrix passes any pattern
        assert!(jacobian_check(&p, &[a, b], &[a], &Matrix::zeros(1, 2)).unwrap());
        // single-point poset allows everything
        let pt = Poset::of(&["e"], &[]).unwrap();
        let j = Matrix::from_int_rows(&[&[7, 8], &[9, 10]], 2);
        assert!(jacobian_check(&pt, &[0, 0], &[0, 0], &j).unwrap());
        // dependency of an a-level output on a b-level input is forbidden
        let j = Matrix::from_int_rows(&[&[0, 1]], 2);
        assert!(!jacobian_check(&p, &[a, b], &[a], &j).unwrap());
        // shape errors are loud
        let err = jacobian_check(&p, &[a, b], &[a], &Matrix::zeros(2, 2)).unwrap_err();
        assert_eq!(err.code(), "ShapeMismatch");
    }

    #[test]
    fn coordinate_system_of_a_chain() {
        let s = MultifoliateStructure::of(chain(), &["a", "b"]).unwrap();
        let xi = s.system();
        assert_eq!(xi.dims(), &[1, 2]);
        assert_eq!(xi.transition(1, 0).unwrap(), Matrix::from_int_rows(&[&[1, 0]], 2));
        assert_eq!(xi.limit_dim(), 2);

        let s = MultifoliateStructure::of(antichain(), &["a", "b"]).unwrap();
        let xi = s.system();
        assert_eq!(xi.dims(), &[1, 1]);
        assert_eq!(xi.limit_dim(), 2);

        let pt = Poset::of(&["e"], &[]).unwrap();
        let s = MultifoliateStructure::of(pt, &["e", "e", "e"]).unwrap();
        assert_eq!(s.system().dims(), &[3]);
    }

    #[test]
    fn kernels_are_spanned_by_unreached_coordinates() {
        let s = MultifoliateStructure::of(chain(), &["a", "a", "b"]).unwrap();
        let xi = s.system();
        // K_a = coordinates not labeled ≤ a = {third}
        let a = s.poset().index("a").unwrap();
        assert_eq!(xi.kernel(a).dim(), 1);
        assert!(xi.kernel(a).contains_vec(&[int(0), int(0), int(1)]));
        let b = s.poset().index("b").unwrap();
        assert_eq!(xi.kernel(b).dim(), 0);
    }

    #[test]
    fn stabilizer_dimension_counts_allowed_entries() {
        for ids in [vec!["a", "b"], vec!["a", "a", "b"], vec!["b", "a", "b"]] {
            let s = MultifoliateStructure::of(chain(), &ids).unwrap();
            let pat = s.gl_pattern();
            let count = (0..s.n())
                .flat_map(|i| (0..s.n()).map(move |j| (i, j)))
                .filter(|&(i, j)| pat.allowed(i, j))
                .count();
            assert_eq!(s.system().stabilizer_algebra().len(), count);
        }
    }

    #[test]
    fn products_concatenate_labels() {
        let s = MultifoliateStructure::of(chain(), &["a", "b"]).unwrap();
        let sq = s.product(&s).unwrap();
        assert_eq!(sq.labels(), &[0, 1, 0, 1]);
        // the first block of the product pattern is the factor pattern
        let p = sq.gl_pattern();
        let q = s.gl_pattern();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(p.allowed(i, j), q.allowed(i, j));
            }
        }
        let other = MultifoliateStructure::of(antichain(), &["a", "b"]).unwrap();
        assert_eq!(s.product(&other).unwrap_err().code(), "PosetMismatch");
    }

    #[test]
    fn equivalence_finds_identity_and_swaps() {
        let s = MultifoliateStructure::of(chain(), &["a", "b"]).unwrap();
        let (omega, sigma) = s.equivalent(&s).unwrap().unwrap();
        assert_eq!(omega, vec![0, 1]);
        assert_eq!(sigma, vec![0, 1]);

        let t = MultifoliateStructure::of(chain(), &["b", "a"]).unwrap();
        let (omega, sigma) = s.equivalent(&t).unwrap().unwrap();
        assert_eq!(omega, vec![0, 1]);
        assert_eq!(sigma, vec![1, 0]);
        // q = p ∘ σ on the nose (same poset, identity ω)
        assert_eq!(t.labels(), s.relabel(&sigma).labels());
    }

    #[test]
    fn unequal_fiber_profiles_are_inequivalent() {
        let s = MultifoliateStructure::of(chain(), &["a", "a", "b"]).unwrap();
        let t = MultifoliateStructure::of(chain(), &["a", "b", "b"]).unwrap();
        assert!(s.equivalent(&t).unwrap().is_none());

        let err = s
            .equivalent(&MultifoliateStructure::of(chain(), &["a", "b"]).unwrap())
            .unwrap_err();
        assert_eq!(err.code(), "SizeMismatch");
    }

    #[test]
    fn relabelings_are_always_equivalent() {
        let s = MultifoliateStructure::of(chain(), &["a", "a", "b"]).unwrap();
        for sigma in [[1, 0, 2], [2, 0, 1], [0, 2, 1]] {
            let t = s.relabel(&sigma);
            let (_, found) = s.equivalent(&t).unwrap().unwrap();
            assert_eq!(t.labels(), s.relabel(&found).labels());
        }
    }

    #[test]
    fn pattern_group_laws_hold_on_samples() {
        let s = MultifoliateStructure::of(chain(), &["a", "a", "b"]).unwrap();
        let pat = s.gl_pattern();
        let mut rng = crate::selftest::seeded_rng(7);
        for _ in 0..20 {
            let m = pat.sample_member(&mut rng);
            let n = pat.sample_member(&mut rng);
            assert!(pat.is_member(&m.mul(&n)));
            assert!(pat.is_member(&m.inverse().unwrap()));
        }
    }
}
