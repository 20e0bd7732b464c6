//! Inductive systems of Weil algebras over a poset: one algebra per element,
//! one homomorphism up every comparable pair, composites synthesized from
//! covers and checked for path independence.

use super::algebra::{AlgebraHom, WeilAlgebra};
use crate::error::{Error, Result};
use crate::poset::Poset;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct WeilSystem {
    poset: Poset,
    algebras: Vec<WeilAlgebra>,
    /// Keyed by (lower, upper); the hom runs upward A_lower → A_upper.
    homs: BTreeMap<(usize, usize), AlgebraHom>,
}

/// Outcome of a system-morphism check: either everything commutes or the
/// first failing square is named.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismCheck {
    pub ok: bool,
    pub witness: Option<(String, String)>,
}

impl WeilSystem {
    /// Validate from homs given on at least the covering pairs.  Composites
    /// are synthesized upward; disagreement between paths, or with a supplied
    /// composite, is a coherence error.  Every map must be a genuine algebra
    /// homomorphism.
    pub fn validate(
        poset: Poset,
        algebras: Vec<WeilAlgebra>,
        given: BTreeMap<(usize, usize), AlgebraHom>,
    ) -> Result<WeilSystem> {
        assert_eq!(algebras.len(), poset.len(), "one algebra per element");
        for (&(lower, upper), h) in &given {
            if lower == upper {
                if *h != AlgebraHom::identity(&algebras[lower]) {
                    return Err(Error::Coherence {
                        lower: poset.id(lower).to_string(),
                        upper: poset.id(upper).to_string(),
                    });
                }
                continue;
            }
            if !poset.lt(lower, upper) {
                return Err(Error::ShapeMismatch(format!(
                    "hom from {} to {} but {} is not below {}",
                    poset.id(lower),
                    poset.id(upper),
                    poset.id(lower),
                    poset.id(upper),
                )));
            }
            // re-validate: matrices may come straight from JSON
            AlgebraHom::validate(&algebras[lower], &algebras[upper], h.matrix().clone())?;
        }

        let covers = poset.covers();
        let is_cover = |a: usize, b: usize| covers.iter().any(|&(x, y)| x == a && y == b);
        let floors = poset.floors();
        let mut pairs = poset.strict_pairs();
        pairs.sort_by_key(|&(a, b)| (floors[b] - floors[a], b, a));
        let mut homs: BTreeMap<(usize, usize), AlgebraHom> = BTreeMap::new();
        for (a, b) in pairs {
            let supplied = given.get(&(a, b)).filter(|_| a != b);
            let mut composite: Option<AlgebraHom> = None;
            if !is_cover(a, b) {
                for &(g, top) in &covers {
                    if top != b || !poset.le(a, g) {
                        continue;
                    }
                    let up = homs.get(&(g, b)).expect("cover hom present");
                    let whole = if g == a {
                        up.clone()
                    } else {
                        up.compose(homs.get(&(a, g)).expect("shorter pair synthesized first"))
                    };
                    match &composite {
                        None => composite = Some(whole),
                        Some(c) if *c == whole => {}
                        Some(_) => {
                            return Err(Error::Coherence {
                                lower: poset.id(a).to_string(),
                                upper: poset.id(b).to_string(),
                            })
                        }
                    }
                }
            }
            let h = match (supplied, composite) {
                (Some(h), None) => h.clone(),
                (None, Some(c)) => c,
                (Some(h), Some(c)) => {
                    if *h != c {
                        return Err(Error::Coherence {
                            lower: poset.id(a).to_string(),
                            upper: poset.id(b).to_string(),
                        });
                    }
                    c
                }
                (None, None) => {
                    return Err(Error::MissingMap {
                        lower: poset.id(a).to_string(),
                        upper: poset.id(b).to_string(),
                    })
                }
            };
            homs.insert((a, b), h);
        }
        Ok(WeilSystem { poset, algebras, homs })
    }

    /// Constant system: the same algebra everywhere, identities upward.
    pub fn constant(poset: Poset, a: WeilAlgebra) -> WeilSystem {
        let homs = poset
            .strict_pairs()
            .into_iter()
            .map(|p| (p, AlgebraHom::identity(&a)))
            .collect();
        let algebras = vec![a; poset.len()];
        WeilSystem::validate(poset, algebras, homs).expect("constant systems cohere")
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn algebra(&self, alpha: usize) -> &WeilAlgebra {
        &self.algebras[alpha]
    }

    /// μ^α_β for α ≤ β.
    pub fn hom(&self, lower: usize, upper: usize) -> Option<AlgebraHom> {
        if lower == upper {
            return Some(AlgebraHom::identity(&self.algebras[lower]));
        }
        self.homs.get(&(lower, upper)).cloned()
    }
}

/// Check a family ν_α: A_α → Ā_α of homs as a morphism of systems: every
/// square with the upward maps must commute.
pub fn validate_system_morphism(
    mu: &WeilSystem,
    mubar: &WeilSystem,
    nus: &[AlgebraHom],
) -> Result<MorphismCheck> {
    if mu.poset() != mubar.poset() {
        return Err(Error::PosetMismatch);
    }
    assert_eq!(nus.len(), mu.poset().len(), "one hom per element");
    for (a, nu) in nus.iter().enumerate() {
        AlgebraHom::validate(mu.algebra(a), mubar.algebra(a), nu.matrix().clone())?;
    }
    for (a, b) in mu.poset().strict_pairs() {
        let ours = mu.hom(a, b).expect("validated system");
        let theirs = mubar.hom(a, b).expect("validated system");
        // ν_β ∘ μ^α_β = μ̄^α_β ∘ ν_α
        if nus[b].compose(&ours) != theirs.compose(&nus[a]) {
            return Ok(MorphismCheck {
                ok: false,
                witness: Some((
                    mu.poset().id(a).to_string(),
                    mu.poset().id(b).to_string(),
                )),
            });
        }
    }
    Ok(MorphismCheck { ok: true, witness: None })
}
