//! Multivariate polynomials with rational coefficients, just enough for
//! evaluating polynomial maps on algebra points: arithmetic, substitution,
//! partial derivatives, exact evaluation.

use crate::rat::{int, Rat};
use num::traits::Zero;
use std::collections::BTreeMap;

/// Sparse polynomial in a fixed number of variables: exponent vector → nonzero
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(vars: usize) -> Poly {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: Rat) -> Poly {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn var(vars: usize, i: usize) -> Poly {
        assert!(i < vars);
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Poly::zero(vars);
        p.terms.insert(e, int(1));
        p
    }

    pub fn from_terms(vars: usize, terms: Vec<(Vec<u32>, Rat)>) -> Poly {
        let mut p = Poly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars, "exponent arity");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.vars);
        }
        Poly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars);
        let mut out = Poly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::constant(self.vars, int(1));
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Substitute one polynomial per variable (all over a common arity).
    pub fn compose(&self, args: &[Poly]) -> Poly {
        assert_eq!(args.len(), self.vars, "one substitution per variable");
        let inner_vars = args.first().map_or(0, Poly::vars);
        assert!(args.iter().all(|a| a.vars() == inner_vars));
        // memoized powers, one ladder per variable
        let mut powers: Vec<Vec<Poly>> =
            args.iter().map(|a| vec![Poly::constant(inner_vars, int(1)), a.clone()]).collect();
        let mut out = Poly::zero(inner_vars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(inner_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&args[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Poly {
        assert!(i < self.vars);
        let mut out = Poly::zero(self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c * int(e[i] as i64));
        }
        out
    }
}

/// A polynomial map Q^m → Q^k: one polynomial in `m` variables per output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    vars: usize,
    polys: Vec<Poly>,
}

impl PolyMap {
    pub fn new(vars: usize, polys: Vec<Poly>) -> PolyMap {
        assert!(polys.iter().all(|p| p.vars() == vars));
        PolyMap { vars, polys }
    }

    pub fn identity(vars: usize) -> PolyMap {
        PolyMap::new(vars, (0..vars).map(|i| Poly::var(vars, i)).collect())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn outputs(&self) -> usize {
        self.polys.len()
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn eval(&self, point: &[Rat]) -> Vec<Rat> {
        self.polys.iter().map(|p| p.eval(point)).collect()
    }

    /// `self ∘ other`: feed the outputs of `other` into the inputs of `self`.
    pub fn compose(&self, other: &PolyMap) -> PolyMap {
        assert_eq!(self.vars, other.outputs(), "arities must chain");
        PolyMap::new(
            other.vars,
            self.polys.iter().map(|p| p.compose(other.polys())).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn square_of_a_sum_expands() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let sq = x.add(&y).pow(2);
        let expected = Poly::from_terms(
            2,
            vec![
                (vec![2, 0], int(1)),
                (vec![1, 1], int(2)),
                (vec![0, 2], int(1)),
            ],
        );
        assert_eq!(sq, expected);
        assert_eq!(sq.eval(&[int(3), int(4)]), int(49));
    }

    #[test]
    fn composition_substitutes() {
        // x² ∘ (x+1) = x² + 2x + 1
        let f = Poly::var(1, 0).pow(2);
        let g = Poly::var(1, 0).add(&Poly::constant(1, int(1)));
        let h = f.compose(&[g]);
        assert_eq!(h.eval(&[int(2)]), int(9));
        assert_eq!(h.degree(), 2);
    }

    #[test]
    fn derivatives_and_cancellation() {
        // ∂/∂x (x²y + 3x) = 2xy + 3
        let p = Poly::from_terms(2, vec![(vec![2, 1], int(1)), (vec![1, 0], int(3))]);
        let d = p.partial(0);
        assert_eq!(d.eval(&[int(1), rat(1, 2)]), int(4));
        // x − x vanishes structurally
        let x = Poly::var(1, 0);
        assert!(x.add(&x.scale(&int(-1))).is_zero());
    }

    #[test]
    fn maps_compose_in_diagram_order() {
        // f(x,y) = (x+y, xy), g(u,v) = u·v; g∘f (2,3) = 5·6
        let f = PolyMap::new(
            2,
            vec![Poly::var(2, 0).add(&Poly::var(2, 1)), Poly::var(2, 0).mul(&Poly::var(2, 1))],
        );
        let g = PolyMap::new(2, vec![Poly::var(2, 0).mul(&Poly::var(2, 1))]);
        let gf = g.compose(&f);
        assert_eq!(gf.eval(&[int(2), int(3)]), vec![int(30)]);
        let id = PolyMap::identity(2);
        assert_eq!(f.compose(&id), f);
    }
}
