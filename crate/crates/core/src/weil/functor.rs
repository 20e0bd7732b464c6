//! Weil-functor evaluation on Cartesian multifibered objects: polynomial maps
//! on algebra points, fiber products of algebra-valued levels, the one-level
//! embeddings i_α, and product preservation.

use super::algebra::WeilAlgebra;
use super::system::WeilSystem;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::multifoliate::MultifoliateStructure;
use crate::poly::{Poly, PolyMap};
use crate::poset::Poset;
use crate::projsys::ProjectiveSystem;
use crate::rat::{int, Rat};
use crate::subspace::Subspace;
use num::traits::Zero;
use std::collections::BTreeMap;

/// Evaluate a polynomial map on points of the algebra: every variable becomes
/// an algebra element, constants embed along the unit, and nilpotency
/// truncates higher terms on its own.
pub fn weil_apply(a: &WeilAlgebra, f: &PolyMap, x: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    if x.len() != f.vars() {
        return Err(Error::ArityMismatch(format!(
            "map takes {} inputs, got {}",
            f.vars(),
            x.len()
        )));
    }
    for xi in x {
        if xi.len() != a.dim() {
            return Err(Error::ArityMismatch(format!(
                "algebra point has {} coordinates, expected {}",
                xi.len(),
                a.dim()
            )));
        }
    }
    // power ladders, one per input, grown on demand
    let mut powers: Vec<Vec<Vec<Rat>>> = x.iter().map(|xi| vec![a.unit(), xi.clone()]).collect();
    let mut out = Vec::with_capacity(f.outputs());
    for p in f.polys() {
        let mut acc = a.scalar(Rat::zero());
        for (e, c) in p.terms() {
            let mut term = a.scalar(c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = a.mul(powers[i].last().unwrap(), &x[i]);
                    powers[i].push(next);
                }
                term = a.mul(&term, &powers[i][k as usize]);
            }
            acc = a.add(&acc, &term);
        }
        out.push(acc);
    }
    Ok(out)
}

/// A poset-indexed family of coordinate sets inside a total space Q^n, with
/// coordinate-selection projections — the Cartesian shape of a multifibered
/// object.  Built from multifoliate structures, one-level embeddings, and
/// products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartesianMultifibered {
    poset: Poset,
    total: usize,
    coords: Vec<Vec<usize>>,
}

impl CartesianMultifibered {
    /// The object underlying ξ(Λ,p): level α sees the coordinates labeled
    /// at or below α.
    pub fn from_structure(s: &MultifoliateStructure) -> CartesianMultifibered {
        let coords = (0..s.poset().len())
            .map(|a| (0..s.n()).filter(|&i| s.poset().le(s.label(i), a)).collect())
            .collect();
        CartesianMultifibered { poset: s.poset().clone(), total: s.n(), coords }
    }

    /// i_α(Q^m): the full space at and above α, a point elsewhere.
    pub fn one_level(poset: &Poset, alpha: usize, m: usize) -> CartesianMultifibered {
        let coords = (0..poset.len())
            .map(|g| if poset.le(alpha, g) { (0..m).collect() } else { Vec::new() })
            .collect();
        CartesianMultifibered { poset: poset.clone(), total: m, coords }
    }

    /// Levelwise product; the second factor's coordinates are appended after
    /// the first's.
    pub fn product(&self, other: &CartesianMultifibered) -> Result<CartesianMultifibered> {
        if self.poset != other.poset {
            return Err(Error::PosetMismatch);
        }
        let coords = (0..self.poset.len())
            .map(|a| {
                let mut c = self.coords[a].clone();
                c.extend(other.coords[a].iter().map(|&i| i + self.total));
                c
            })
            .collect();
        Ok(CartesianMultifibered {
            poset: self.poset.clone(),
            total: self.total + other.total,
            coords,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn coords(&self, alpha: usize) -> &[usize] {
        &self.coords[alpha]
    }

    /// The underlying projective system of coordinate selections; its limit
    /// is the total space.
    pub fn system(&self) -> ProjectiveSystem {
        let dims: Vec<usize> = self.coords.iter().map(Vec::len).collect();
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
            let hb = self.coords[b].clone();
            maps.insert((b, a), selector(&self.coords[a], hb.len(), &move |c| hb[c]));
        }
        let projections: Vec<Matrix> = (0..self.poset.len())
            .map(|a| selector(&self.coords[a], self.total, &|c| c))
            .collect();
        ProjectiveSystem::with_projections(self.poset.clone(), dims, maps, self.total, projections)
    }
}

/// The fiber product ∏_μ G_α(π): tuples (x_α), x_α ∈ A_α^{n_α}, satisfying
/// the linear compatibility conditions, plus the base projection onto the
/// total space.  Layout: blocks per element in index order; within a block,
/// one algebra element per level coordinate, coordinate-major.
#[derive(Debug, Clone)]
pub struct FiberProduct {
    object: CartesianMultifibered,
    adims: Vec<usize>,
    offsets: Vec<usize>,
    ambient: usize,
    space: Subspace,
    base: Matrix,
}

pub fn fiber_product(mu: &WeilSystem, pi: &CartesianMultifibered) -> Result<FiberProduct> {
    if mu.poset() != pi.poset() {
        return Err(Error::PosetMismatch);
    }
    let n_elems = pi.poset().len();
    let adims: Vec<usize> = (0..n_elems).map(|a| mu.algebra(a).dim()).collect();
    let mut offsets = vec![0usize; n_elems];
    for a in 1..n_elems {
        offsets[a] = offsets[a - 1] + pi.coords(a - 1).len() * adims[a - 1];
    }
    let ambient = offsets.last().map_or(0, |&o| o)
        + pi.coords(n_elems - 1).len() * adims[n_elems - 1];

    let slot = |alpha: usize, coord: usize, t: usize| {
        let pos = pi.coords(alpha).iter().position(|&i| i == coord).expect("coordinate present");
        offsets[alpha] + pos * adims[alpha] + t
    };

    // G_β(π^β_α)(x_β) = μ^α_β(x_α): per shared coordinate, per target
    // algebra coordinate, one linear condition
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (a, b) in pi.poset().strict_pairs() {
        let hom = mu.hom(a, b).expect("validated system");
        for &i in pi.coords(a) {
            for t in 0..adims[b] {
                let mut row = vec![Rat::zero(); ambient];
                row[slot(b, i, t)] = int(1);
                for s in 0..adims[a] {
                    let c = hom.matrix().at(t, s);
                    if !c.is_zero() {
                        row[slot(a, i, s)] -= c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let space = Subspace::span(ambient, Matrix::from_rows(rows, ambient).kernel_rows());

    // base projection: each total-space coordinate reads the augmentation of
    // its block at the least level that sees the coordinate
    let mut base = Matrix::zeros(pi.total(), ambient);
    for i in 0..pi.total() {
        let a = (0..n_elems)
            .find(|&a| pi.coords(a).contains(&i))
            .expect("every coordinate is seen by some level");
        base.set(i, slot(a, i, 0), int(1));
    }
    let fp = FiberProduct { object: pi.clone(), adims, offsets, ambient, space, base };
    debug_assert!(fp.base_on_fiber().is_epimorphism(), "base projection must be onto");
    Ok(fp)
}

impl FiberProduct {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn object(&self) -> &CartesianMultifibered {
        &self.object
    }

    /// p_μ on ambient coordinates.
    pub fn base_matrix(&self) -> &Matrix {
        &self.base
    }

    /// p_μ restricted to the solution space: total × dim, acting on basis
    /// coefficients.
    pub fn base_on_fiber(&self) -> Matrix {
        self.base.mul(&self.space.basis().transpose())
    }

    pub fn contains(&self, point: &[Rat]) -> bool {
        point.len() == self.ambient && self.space.contains_vec(point)
    }

    /// The algebra element at level `alpha`, total-space coordinate `i`.
    pub fn element_at(&self, point: &[Rat], alpha: usize, i: usize) -> Vec<Rat> {
        let pos = self
            .object
            .coords(alpha)
            .iter()
            .position(|&c| c == i)
            .expect("coordinate present at this level");
        let start = self.offsets[alpha] + pos * self.adims[alpha];
        point[start..start + self.adims[alpha]].to_vec()
    }

    /// Embed a total-space point along the units: the canonical section of
    /// the base projection.
    pub fn unit_section(&self, b: &[Rat]) -> Vec<Rat> {
        assert_eq!(b.len(), self.object.total());
        let mut point = vec![Rat::zero(); self.ambient];
        for alpha in 0..self.object.poset().len() {
            for (pos, &i) in self.object.coords(alpha).iter().enumerate() {
                point[self.offsets[alpha] + pos * self.adims[alpha]] = b[i].clone();
            }
        }
        debug_assert!(self.contains(&point));
        point
    }

    /// Selection of the α-block, ambient → A_α^{n_α}.
    pub fn block_selector(&self, alpha: usize) -> Matrix {
        let width = self.object.coords(alpha).len() * self.adims[alpha];
        Matrix::from_fn(width, self.ambient, |r, c| {
            if c == self.offsets[alpha] + r {
                int(1)
            } else {
                Rat::zero()
            }
        })
    }
}

/// A levelwise polynomial map between two Cartesian objects over one poset,
/// commuting with the coordinate projections as polynomial identities.
#[derive(Debug, Clone)]
pub struct MultifiberedPolyMap {
    source: CartesianMultifibered,
    target: CartesianMultifibered,
    maps: Vec<PolyMap>,
}

impl MultifiberedPolyMap {
    pub fn new(
        source: CartesianMultifibered,
        target: CartesianMultifibered,
        maps: Vec<PolyMap>,
    ) -> Result<MultifiberedPolyMap> {
        if source.poset() != target.poset() {
            return Err(Error::PosetMismatch);
        }
        assert_eq!(maps.len(), source.poset().len(), "one map per element");
        for a in 0..source.poset().len() {
            if maps[a].vars() != source.coords(a).len()
                || maps[a].outputs() != target.coords(a).len()
            {
                return Err(Error::ArityMismatch(format!(
                    "map at {} must take {} inputs to {} outputs",
                    source.poset().id(a),
                    source.coords(a).len(),
                    target.coords(a).len()
                )));
            }
        }
        let f = MultifiberedPolyMap { source, target, maps };
        for (a, b) in f.source.poset().strict_pairs() {
            // π̄^β_α ∘ f_β = f_α ∘ π^β_α, checked as polynomial identities
            let down_src = selection_map(f.source.coords(b), f.source.coords(a));
            let down_tgt = selection_map(f.target.coords(b), f.target.coords(a));
            if down_tgt.compose(&f.maps[b]) != f.maps[a].compose(&down_src) {
                return Err(Error::CompatibilityViolation(format!(
                    "square {} ≤ {} does not commute",
                    f.source.poset().id(a),
                    f.source.poset().id(b)
                )));
            }
        }
        Ok(f)
    }

    pub fn identity(object: &CartesianMultifibered) -> MultifiberedPolyMap {
        let maps = (0..object.poset().len())
            .map(|a| PolyMap::identity(object.coords(a).len()))
            .collect();
        MultifiberedPolyMap::new(object.clone(), object.clone(), maps)
            .expect("identities commute")
    }

    /// Levelwise composition `self ∘ inner`.
    pub fn compose(&self, inner: &MultifiberedPolyMap) -> Result<MultifiberedPolyMap> {
        assert_eq!(inner.target, self.source, "maps must chain");
        MultifiberedPolyMap::new(
            inner.source.clone(),
            self.target.clone(),
            (0..self.maps.len()).map(|a| self.maps[a].compose(&inner.maps[a])).collect(),
        )
    }

    pub fn source(&self) -> &CartesianMultifibered {
        &self.source
    }

    pub fn target(&self) -> &CartesianMultifibered {
        &self.target
    }

    pub fn map_at(&self, alpha: usize) -> &PolyMap {
        &self.maps[alpha]
    }
}

/// The projection Q^{from} → Q^{onto} selecting shared coordinates, as a
/// polynomial map.
fn selection_map(from: &[usize], onto: &[usize]) -> PolyMap {
    let polys = onto
        .iter()
        .map(|&i| {
            let pos = from.iter().position(|&c| c == i).expect("selection must be a subset");
            Poly::var(from.len(), pos)
        })
        .collect();
    PolyMap::new(from.len(), polys)
}

/// T^μ(f) at a point: apply G_α(f_α) blockwise, verifying membership on the
/// way in and (defensively — naturality guarantees it) on the way out.
pub fn t_mu_apply(
    mu: &WeilSystem,
    f: &MultifiberedPolyMap,
    point: &[Rat],
) -> Result<Vec<Rat>> {
    let source = fiber_product(mu, f.source())?;
    let target = fiber_product(mu, f.target())?;
    if !source.contains(point) {
        return Err(Error::CompatibilityViolation(
            "input point is not in the fiber product".to_string(),
        ));
    }
    let mut out = vec![Rat::zero(); target.ambient()];
    for a in 0..mu.poset().len() {
        let x: Vec<Vec<Rat>> =
            f.source().coords(a).iter().map(|&i| source.element_at(point, a, i)).collect();
        let y = weil_apply(mu.algebra(a), f.map_at(a), &x)?;
        for (pos, val) in y.into_iter().enumerate() {
            let start = target.offsets[a] + pos * target.adims[a];
            out[start..start + target.adims[a]].clone_from_slice(&val);
        }
    }
    if !target.contains(&out) {
        return Err(Error::CompatibilityViolation(
            "output point escaped the target fiber product".to_string(),
        ));
    }
    Ok(out)
}

/// Report of the product-preservation check for T^μ on a pair of objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductReport {
    pub dim_product: usize,
    pub dim_left: usize,
    pub dim_right: usize,
    pub dims_add: bool,
    pub shuffle_is_isomorphism: bool,
    pub bases_commute: bool,
}

impl ProductReport {
    pub fn pass(&self) -> bool {
        self.dims_add && self.shuffle_is_isomorphism && self.bases_commute
    }
}

/// Verify T^μ(π × π̄) ≅ T^μ(π) × T^μ(π̄): dimensions add, the coordinate
/// shuffle carries the product's fiber space onto the direct sum, and base
/// projections match through the shuffle.
pub fn product_preservation_check(
    mu: &WeilSystem,
    pi: &CartesianMultifibered,
    pibar: &CartesianMultifibered,
) -> Result<ProductReport> {
    let left = fiber_product(mu, pi)?;
    let right = fiber_product(mu, pibar)?;
    let prod = fiber_product(mu, &pi.product(pibar)?)?;

    // the shuffle: product block at α is [H_α columns][H̄_α columns]; route
    // the first group to the left ambient, the second to the right
    let (la, ra, pa) = (left.ambient(), right.ambient(), prod.ambient());
    let mut shuffle = Matrix::zeros(la + ra, pa);
    for a in 0..mu.poset().len() {
        let (npi, adim) = (pi.coords(a).len(), left.adims[a]);
        let width = prod.object().coords(a).len() * adim;
        for k in 0..width {
            let coord_pos = k / adim;
            let t = k % adim;
            let dst = if coord_pos < npi {
                left.offsets[a] + coord_pos * adim + t
            } else {
                la + right.offsets[a] + (coord_pos - npi) * adim + t
            };
            shuffle.set(dst, prod.offsets[a] + k, int(1));
        }
    }

    let shuffled = Subspace::span(
        la + ra,
        prod.space().basis_rows().iter().map(|v| shuffle.mul_vec(v)).collect(),
    );
    let embedded = {
        let mut rows = Vec::new();
        for v in left.space().basis_rows() {
            let mut w = v.clone();
            w.extend(vec![Rat::zero(); ra]);
            rows.push(w);
        }
        for v in right.space().basis_rows() {
            let mut w = vec![Rat::zero(); la];
            w.extend(v);
            rows.push(w);
        }
        Subspace::span(la + ra, rows)
    };

    // base projections: p_μ(π×π̄) must match (p_μ(π) ⊕ p_μ(π̄)) ∘ shuffle on
    // the fiber space
    let stacked = Matrix::block_diag(&[left.base_matrix(), right.base_matrix()]);
    let through_shuffle = stacked.mul(&shuffle).mul(&prod.space().basis().transpose());
    let direct = prod.base_matrix().mul(&prod.space().basis().transpose());

    Ok(ProductReport {
        dim_product: prod.dim(),
        dim_left: left.dim(),
        dim_right: right.dim(),
        dims_add: prod.dim() == left.dim() + right.dim(),
        shuffle_is_isomorphism: shuffled == embedded,
        bases_commute: through_shuffle == direct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weil::algebra::AlgebraHom;

    fn chain_mu() -> (WeilSystem, CartesianMultifibered) {
        // A_a = Q, A_b = dual numbers, object from p = (a, b)
        let p = Poset::of(&["a", "b"], &[("a", "b")]).unwrap();
        let q = WeilAlgebra::rationals();
        let d = WeilAlgebra::dual_numbers();
        let incl = AlgebraHom::validate(&q, &d, Matrix::from_int_rows(&[&[1], &[0]], 1)).unwrap();
        let mut homs = BTreeMap::new();
        homs.insert((0, 1), incl);
        let mu = WeilSystem::validate(p.clone(), vec![q, d], homs).unwrap();
        let s = MultifoliateStructure::of(p, &["a", "b"]).unwrap();
        (mu, CartesianMultifibered::from_structure(&s))
    }

    #[test]
    fn first_jet_of_a_square() {
        let d = WeilAlgebra::dual_numbers();
        let f = PolyMap::new(1, vec![Poly::var(1, 0).pow(2)]);
        // (2 + 3t)² = 4 + 12t
        let y = weil_apply(&d, &f, &[vec![int(2), int(3)]]).unwrap();
        assert_eq!(y, vec![vec![int(4), int(12)]]);
    }

    #[test]
    fn rational_points_evaluate_plainly() {
        let q = WeilAlgebra::rationals();
        let f = PolyMap::new(2, vec![Poly::var(2, 0).mul(&Poly::var(2, 1))]);
        let y = weil_apply(&q, &f, &[vec![int(6)], vec![int(7)]]).unwrap();
        assert_eq!(y, vec![vec![int(42)]]);
        // identity maps stay identities on algebra points
        let d = WeilAlgebra::dual_numbers();
        let x = vec![vec![int(1), int(5)]];
        assert_eq!(weil_apply(&d, &PolyMap::identity(1), &x).unwrap(), x);
    }

    #[test]
    fn functoriality_under_composition() {
        let dd = WeilAlgebra::dual_numbers().tensor(&WeilAlgebra::dual_numbers());
        let f = PolyMap::new(
            1,
            vec![Poly::var(1, 0).pow(2), Poly::var(1, 0).add(&Poly::constant(1, int(1)))],
        );
        let g = PolyMap::new(2, vec![Poly::var(2, 0).mul(&Poly::var(2, 1))]);
        let x = vec![vec![int(2), int(1), int(-1), int(3)]];
        let via_stages = weil_apply(&dd, &g, &weil_apply(&dd, &f, &x).unwrap()).unwrap();
        let at_once = weil_apply(&dd, &g.compose(&f), &x).unwrap();
        assert_eq!(via_stages, at_once);
    }

    #[test]
    fn chain_fiber_product_has_dimension_three() {
        let (mu, pi) = chain_mu();
        let fp = fiber_product(&mu, &pi).unwrap();
        assert_eq!(fp.dim(), 3);
        assert!(fp.base_on_fiber().is_epimorphism());
        // a compatible point: x at level a; (x + 0t, b0 + b1t) at level b
        let mut point = vec![Rat::zero(); fp.ambient()];
        point[0] = int(5); // x_a[0]
        point[1] = int(5); // x_b[0] unit part
        point[2] = int(0); // x_b[0] t part (forced)
        point[3] = int(8); // x_b[1] unit part
        point[4] = int(9); // x_b[1] t part
        assert!(fp.contains(&point));
        point[2] = int(1);
        assert!(!fp.contains(&point));
    }

    #[test]
    fn constant_rationals_reproduce_the_total_space() {
        let p = Poset::of(&["a", "b"], &[("a", "b")]).unwrap();
        let mu = WeilSystem::constant(p.clone(), WeilAlgebra::rationals());
        let s = MultifoliateStructure::of(p, &["a", "b"]).unwrap();
        let fp = fiber_product(&mu, &CartesianMultifibered::from_structure(&s)).unwrap();
        assert_eq!(fp.dim(), 2);
    }

    #[test]
    fn single_point_gives_the_plain_weil_bundle() {
        let p = Poset::of(&["e"], &[]).unwrap();
        let mu = WeilSystem::constant(p.clone(), WeilAlgebra::dual_numbers());
        let s = MultifoliateStructure::of(p, &["e", "e", "e"]).unwrap();
        let fp = fiber_product(&mu, &CartesianMultifibered::from_structure(&s)).unwrap();
        assert_eq!(fp.dim(), 6);
    }

    #[test]
    fn one_level_objects_identify_with_algebra_points() {
        let (mu, _) = chain_mu();
        let poset = mu.poset().clone();
        for alpha in 0..poset.len() {
            for m in 1..=2 {
                let obj = CartesianMultifibered::one_level(&poset, alpha, m);
                let fp = fiber_product(&mu, &obj).unwrap();
                assert_eq!(fp.dim(), mu.algebra(alpha).dim() * m);
                // the α-block selection restricted to the fiber is invertible
                let sel = fp.block_selector(alpha).mul(&fp.space().basis().transpose());
                assert!(sel.is_isomorphism());
            }
        }
    }

    #[test]
    fn t_mu_carries_jets_through_commuting_squares() {
        let (mu, pi) = chain_mu();
        // f_a(x) = x², f_b(x, y) = (x², y)
        let fa = PolyMap::new(1, vec![Poly::var(1, 0).pow(2)]);
        let fb = PolyMap::new(2, vec![Poly::var(2, 0).pow(2), Poly::var(2, 1)]);
        let f = MultifiberedPolyMap::new(pi.clone(), pi.clone(), vec![fa, fb]).unwrap();
        let fp = fiber_product(&mu, &pi).unwrap();
        let point = {
            let mut p = vec![Rat::zero(); fp.ambient()];
            p[0] = int(3);
            p[1] = int(3);
            p[3] = int(2);
            p[4] = int(5);
            p
        };
        let out = t_mu_apply(&mu, &f, &point).unwrap();
        // level b: (3 + 0t)² = 9 + 0t, second coordinate carried
        assert_eq!(out, vec![int(9), int(9), int(0), int(2), int(5)]);

        // identity acts as identity; composition matches staged application
        let id = MultifiberedPolyMap::identity(&pi);
        assert_eq!(t_mu_apply(&mu, &id, &point).unwrap(), point);
        let ff = f.compose(&f).unwrap();
        assert_eq!(
            t_mu_apply(&mu, &ff, &point).unwrap(),
            t_mu_apply(&mu, &f, &out).unwrap()
        );

        // incompatible inputs are rejected
        let mut bad = point.clone();
        bad[2] = int(1);
        assert_eq!(
            t_mu_apply(&mu, &f, &bad).unwrap_err().code(),
            "CompatibilityViolation"
        );
    }

    #[test]
    fn squares_that_do_not_commute_are_rejected() {
        let (_, pi) = chain_mu();
        // f_a(x) = x², f_b = identity: the square fails on the first coordinate
        let fa = PolyMap::new(1, vec![Poly::var(1, 0).pow(2)]);
        let fb = PolyMap::identity(2);
        let err = MultifiberedPolyMap::new(pi.clone(), pi, vec![fa, fb]).unwrap_err();
        assert_eq!(err.code(), "CompatibilityViolation");
    }

    #[test]
    fn products_are_preserved() {
        let (mu, pi) = chain_mu();
        let report = product_preservation_check(&mu, &pi, &pi).unwrap();
        assert!(report.pass());
        assert_eq!(report.dim_product, 6);

        // × point object changes nothing
        let point_obj = CartesianMultifibered {
            poset: pi.poset().clone(),
            total: 0,
            coords: vec![Vec::new(); pi.poset().len()],
        };
        let report = product_preservation_check(&mu, &pi, &point_obj).unwrap();
        assert!(report.pass());
        assert_eq!(report.dim_product, 3);
    }
}
