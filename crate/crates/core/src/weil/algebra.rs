//! Weil algebras as explicit multiplication tables: finite-dimensional,
//! commutative, unital, with a nilpotent ideal spanned by the non-unit basis
//! vectors.  Validation is exhaustive over basis pairs and triples, so a
//! constructed value is trustworthy everywhere else.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rat::{int, Rat};
use crate::subspace::Subspace;
use num::traits::Zero;

/// `table[i][j]` holds the coordinates of `e_i · e_j`; index 0 is the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilAlgebra {
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<Vec<Rat>>>,
}

/// Unit-preserving multiplicative linear map between Weil algebras, stored as
/// a `dim(B) × dim(A)` matrix on coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraHom {
    matrix: Matrix,
}

impl WeilAlgebra {
    pub fn validate(labels: Vec<String>, table: Vec<Vec<Vec<Rat>>>) -> Result<WeilAlgebra> {
        let dim = labels.len();
        assert!(dim >= 1, "an algebra has at least the unit");
        assert_eq!(table.len(), dim, "one table row per basis vector");
        for row in &table {
            assert_eq!(row.len(), dim, "square table");
            for entry in row {
                assert_eq!(entry.len(), dim, "structure vectors live in the algebra");
            }
        }
        let a = WeilAlgebra { dim, labels, table };
        for j in 0..dim {
            if a.table[0][j] != a.basis_vec(j) || a.table[j][0] != a.basis_vec(j) {
                return Err(Error::NotUnital);
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if a.table[i][j] != a.table[j][i] {
                    return Err(Error::NotCommutative { i, j });
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let left = a.mul(&a.table[i][j], &a.basis_vec(k));
                    let right = a.mul(&a.basis_vec(i), &a.table[j][k]);
                    if left != right {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        // the span of e_1.. must be an ideal whose powers die out
        for i in 1..dim {
            for j in 1..dim {
                if !a.table[i][j][0].is_zero() {
                    return Err(Error::NotNilpotent);
                }
            }
        }
        let ideal = Subspace::span(
            dim,
            (1..dim).map(|i| a.basis_vec(i)).collect(),
        );
        let mut power = ideal.clone();
        for _ in 0..dim {
            if power.dim() == 0 {
                break;
            }
            let mut products = Vec::new();
            for x in ideal.basis_rows() {
                for y in power.basis_rows() {
                    products.push(a.mul(&x, &y));
                }
            }
            power = Subspace::span(dim, products);
        }
        if power.dim() != 0 {
            return Err(Error::NotNilpotent);
        }
        Ok(a)
    }

    /// The rationals themselves: the unique 1-dimensional Weil algebra.
    pub fn rationals() -> WeilAlgebra {
        WeilAlgebra::validate(vec!["1".into()], vec![vec![vec![int(1)]]]).unwrap()
    }

    /// Dual numbers ⟨1, t⟩ with t² = 0.
    pub fn dual_numbers() -> WeilAlgebra {
        WeilAlgebra::truncated_poly(1)
    }

    /// Q[t]/(t^{k+1}): basis 1, t, …, t^k.
    pub fn truncated_poly(k: usize) -> WeilAlgebra {
        let dim = k + 1;
        let labels = (0..dim)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        let table = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let mut v = vec![Rat::zero(); dim];
                        if i + j < dim {
                            v[i + j] = int(1);
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        WeilAlgebra::validate(labels, table).unwrap()
    }

    /// Tensor product: basis pairs multiply factorwise.
    pub fn tensor(&self, other: &WeilAlgebra) -> WeilAlgebra {
        let dim = self.dim * other.dim;
        let idx = |i: usize, j: usize| i * other.dim + j;
        let mut labels = Vec::with_capacity(dim);
        for i in 0..self.dim {
            for j in 0..other.dim {
                labels.push(match (i, j) {
                    (0, 0) => "1".to_string(),
                    (_, 0) => self.labels[i].clone(),
                    (0, _) => other.labels[j].clone(),
                    _ => format!("{}{}", self.labels[i], other.labels[j]),
                });
            }
        }
        let mut table = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for i1 in 0..self.dim {
            for j1 in 0..other.dim {
                for i2 in 0..self.dim {
                    for j2 in 0..other.dim {
                        let left = &self.table[i1][i2];
                        let right = &other.table[j1][j2];
                        let target = &mut table[idx(i1, j1)][idx(i2, j2)];
                        for (s, ls) in left.iter().enumerate() {
                            if ls.is_zero() {
                                continue;
                            }
                            for (t, rt) in right.iter().enumerate() {
                                if !rt.is_zero() {
                                    target[idx(s, t)] = ls * rt;
                                }
                            }
                        }
                    }
                }
            }
        }
        WeilAlgebra::validate(labels, table).expect("tensor of Weil algebras is one")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<Vec<Rat>>] {
        &self.table
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = int(1);
        v
    }

    pub fn unit(&self) -> Vec<Rat> {
        self.basis_vec(0)
    }

    /// Embed a rational as a multiple of the unit.
    pub fn scalar(&self, c: Rat) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[0] = c;
        v
    }

    pub fn add(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    pub fn scale(&self, c: &Rat, x: &[Rat]) -> Vec<Rat> {
        x.iter().map(|a| a * c).collect()
    }

    pub fn mul(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (k, s) in self.table[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[k] += &c * s;
                    }
                }
            }
        }
        out
    }

    /// The unit coefficient: the algebra's quotient by its nilpotent ideal.
    pub fn augment(&self, x: &[Rat]) -> Rat {
        x[0].clone()
    }
}

impl AlgebraHom {
    pub fn validate(a: &WeilAlgebra, b: &WeilAlgebra, matrix: Matrix) -> Result<AlgebraHom> {
        assert_eq!(
            (matrix.rows(), matrix.cols()),
            (b.dim(), a.dim()),
            "hom matrix maps source coordinates to target coordinates"
        );
        if matrix.mul_vec(&a.unit()) != b.unit() {
            return Err(Error::NotUnital);
        }
        for i in 0..a.dim() {
            for j in i..a.dim() {
                let of_product = matrix.mul_vec(&a.table()[i][j]);
                let product_of = b.mul(
                    &matrix.mul_vec(&a.basis_vec(i)),
                    &matrix.mul_vec(&a.basis_vec(j)),
                );
                if of_product != product_of {
                    return Err(Error::NotMultiplicative { i, j });
                }
            }
        }
        Ok(AlgebraHom { matrix })
    }

    pub fn identity(a: &WeilAlgebra) -> AlgebraHom {
        AlgebraHom { matrix: Matrix::identity(a.dim()) }
    }

    /// The augmentation A → Q.
    pub fn augmentation(a: &WeilAlgebra) -> AlgebraHom {
        let m = Matrix::from_fn(1, a.dim(), |_, j| if j == 0 { int(1) } else { Rat::zero() });
        AlgebraHom { matrix: m }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        self.matrix.mul_vec(x)
    }

    pub fn compose(&self, inner: &AlgebraHom) -> AlgebraHom {
        AlgebraHom { matrix: self.matrix.mul(&inner.matrix) }
    }
}
