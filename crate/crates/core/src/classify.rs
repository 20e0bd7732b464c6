//! From a complete projective system back to a multifoliate structure: dualize
//! the kernel family, walk the poset floor by floor extracting new basis
//! covectors, and read the labeling off the minimal subspace containing each
//! basis row.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::multifoliate::MultifoliateStructure;
use crate::projsys::ProjectiveSystem;
use crate::subspace::Subspace;
use std::collections::BTreeMap;

/// A complete system together with its dual filtration: `dual(α) = K_α⊥`
/// inside the dual of the limit, so α ≤ β gives `dual(α) ⊆ dual(β)` and the
/// greatest element carries the full dual space.
#[derive(Debug)]
pub struct DualSystem {
    base: ProjectiveSystem,
    duals: Vec<Subspace>,
}

/// Output of the extraction: the recovered structure, the invertible change
/// of basis whose rows are the extracted covectors, and the bookkeeping that
/// produced it.
pub struct Classification {
    pub structure: MultifoliateStructure,
    pub basis: Matrix,
    pub distinguished: Vec<String>,
    pub floors: BTreeMap<String, usize>,
}

impl DualSystem {
    pub fn new(base: ProjectiveSystem) -> Result<DualSystem> {
        if base.poset().greatest().is_none() {
            return Err(Error::NoGreatestElement);
        }
        if !base.is_complete()? {
            return Err(Error::NotComplete);
        }
        let duals: Vec<Subspace> =
            (0..base.poset().len()).map(|a| base.kernel(a).annihilator()).collect();
        debug_assert!(base
            .poset()
            .strict_pairs()
            .iter()
            .all(|&(a, b)| duals[b].contains(&duals[a])));
        Ok(DualSystem { base, duals })
    }

    pub fn base(&self) -> &ProjectiveSystem {
        &self.base
    }

    pub fn dual(&self, alpha: usize) -> &Subspace {
        &self.duals[alpha]
    }
}

/// Walk the elements by ascending floor (ties in identifier order).  An
/// element is distinguished when its dual subspace is not yet covered by the
/// span of everything extracted so far; it then contributes the covectors
/// extending that span's trace inside it.  Coordinates are labeled by the
/// minimal distinguished element whose dual contains their covector.
pub fn extract_structure(d: &DualSystem) -> Result<Classification> {
    let poset = d.base().poset();
    let n = d.base().limit_dim();
    let floors = poset.floors();
    let mut order: Vec<usize> = (0..poset.len()).collect();
    order.sort_by_key(|&a| (floors[a], poset.id(a).to_string()));

    let mut sofar = Subspace::zero(n);
    let mut rows: Vec<Vec<_>> = Vec::new();
    let mut distinguished: Vec<usize> = Vec::new();
    for &a in &order {
        if sofar.contains(d.dual(a)) {
            continue;
        }
        let fresh = sofar.extend_basis(d.dual(a));
        rows.extend(fresh);
        sofar = sofar.sum(d.dual(a));
        distinguished.push(a);
        // each extension keeps the accumulated rows independent
        debug_assert_eq!(Matrix::from_rows(rows.clone(), n).rank(), rows.len());
    }
    if rows.len() != n {
        return Err(Error::BasisIncomplete { got: rows.len(), need: n });
    }
    let basis = Matrix::from_rows(rows, n);
    assert!(basis.is_isomorphism(), "independent spanning rows form a basis");

    // label row m by the minimal distinguished element containing it
    distinguished.sort_unstable();
    let sub_poset = poset.induced(&distinguished);
    let mut labels = Vec::with_capacity(n);
    for m in 0..n {
        let row = basis.row(m);
        let holders: Vec<usize> = distinguished
            .iter()
            .copied()
            .filter(|&a| d.dual(a).contains_vec(row))
            .collect();
        let minimal: Vec<usize> = holders
            .iter()
            .copied()
            .filter(|&a| !holders.iter().any(|&b| b != a && poset.lt(b, a)))
            .collect();
        match minimal.as_slice() {
            [only] => labels.push(
                sub_poset.index(poset.id(*only)).expect("distinguished element kept"),
            ),
            [x, y, ..] => {
                return Err(Error::AmbiguousMinimal {
                    index: m + 1,
                    a: poset.id(*x).to_string(),
                    b: poset.id(*y).to_string(),
                })
            }
            [] => unreachable!("every row comes from some distinguished dual"),
        }
    }
    let structure = MultifoliateStructure::new(sub_poset, labels)?;
    Ok(Classification {
        structure,
        basis,
        distinguished: distinguished.iter().map(|&a| poset.id(a).to_string()).collect(),
        floors: (0..poset.len())
            .map(|a| (poset.id(a).to_string(), floors[a]))
            .collect(),
    })
}

/// Full pipeline: complete the system, dualize, extract.  For systems that
/// came from a multifoliate structure the result is equivalent to it.
pub fn classify(xi: &ProjectiveSystem) -> Result<Classification> {
    let completed = xi.completion()?.system;
    let dual = DualSystem::new(completed)?;
    extract_structure(&dual)
}
