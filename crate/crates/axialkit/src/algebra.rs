//! The commutative non-associative algebra core.
//!
//! A [`CommAlgebra`] is a finite-dimensional commutative algebra given by a
//! symmetric structure-constant table over the rationals. On top of the
//! product this module provides adjoint matrices and the span-closure
//! engines: subalgebra generation with the closure degree, ideal and
//! quasi-ideal generation, the annihilator, and the largest ideal contained
//! in a given subspace (the workhorse behind the radical).

use crate::error::AlgebraError;
use crate::ratlin::{vec_ops, Rat, RatMatrix, Subspace};

/// An element is a rational coordinate vector in the algebra's basis.
pub type AlgElement = Vec<Rat>;

/// A commutative non-associative algebra of dimension `dim` with named basis
/// and a structure-constant table stored for `i <= j` only, so the product is
/// commutative by construction. No associativity is assumed.
#[derive(Clone, PartialEq, Eq)]
pub struct CommAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    table: Vec<AlgElement>,
}

impl CommAlgebra {
    /// An algebra in which all products are zero; fill in entries with
    /// [`set_product`](Self::set_product).
    pub fn with_zero_products(basis_names: Vec<String>) -> Self {
        let dim = basis_names.len();
        let entries = dim * (dim + 1) / 2;
        CommAlgebra {
            dim,
            basis_names,
            table: vec![vec_ops::zero(dim); entries],
        }
    }

    pub fn set_product(&mut self, i: usize, j: usize, value: AlgElement) {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        assert_eq!(value.len(), self.dim, "product vector has wrong length");
        let idx = self.table_index(i, j);
        self.table[idx] = value;
    }

    /// Validates shape only; axiom checking is done against a fusion law by
    /// the axes machinery.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        if self.basis_names.len() != self.dim {
            return Err(AlgebraError::BadTable("basis name count mismatch".into()));
        }
        if self.table.len() != self.dim * (self.dim + 1) / 2 {
            return Err(AlgebraError::BadTable("table entry count mismatch".into()));
        }
        for entry in &self.table {
            if entry.len() != self.dim {
                return Err(AlgebraError::BadTable("product vector length".into()));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &AlgElement {
        &self.table[self.table_index(i, j)]
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        vec_ops::unit(self.dim, i)
    }

    fn table_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j), i.max(j));
        i * self.dim - i * (i + 1) / 2 + j
    }

    fn check_dim(&self, x: &[Rat]) -> Result<(), AlgebraError> {
        if x.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(())
    }

    /// The bilinear extension of the structure constants.
    pub fn multiply(&self, x: &[Rat], y: &[Rat]) -> Result<AlgElement, AlgebraError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut out = vec_ops::zero(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                let prod = self.basis_product(i, j);
                for k in 0..self.dim {
                    if !prod[k].is_zero() {
                        out[k] += &(&c * &prod[k]);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The matrix of `x -> a x`; column `j` is `a · b_j`.
    pub fn adjoint(&self, a: &[Rat]) -> RatMatrix {
        let mut m = RatMatrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self
                .multiply(a, &self.basis_element(j))
                .expect("element has algebra dimension");
            for i in 0..self.dim {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn is_idempotent(&self, a: &[Rat]) -> bool {
        !vec_ops::is_zero(a)
            && self.multiply(a, a).map(|sq| sq == a.to_vec()).unwrap_or(false)
    }

    /// Span of all pairwise products of basis vectors of `u` and `v`.
    fn product_span(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut products = Vec::new();
        for x in u.basis_vectors() {
            for y in v.basis_vectors() {
                products.push(self.multiply(x, y).expect("basis vectors fit"));
            }
        }
        Subspace::from_spanning(self.dim, products)
    }

    /// The subalgebra generated by `gens`, with the smallest `m` such that
    /// the subalgebra is spanned by products in the generators of length at
    /// most `m` (generators themselves count as length-1 products).
    pub fn subalgebra_closure(
        &self,
        gens: &[AlgElement],
    ) -> Result<(Subspace, usize), AlgebraError> {
        if gens.is_empty() {
            return Err(AlgebraError::EmptyGenerators);
        }
        for g in gens {
            self.check_dim(g)?;
        }
        // layers[m-1] = span of products of length at most m
        let mut layers = vec![Subspace::from_spanning(self.dim, gens.to_vec())];
        loop {
            let m = layers.len() + 1;
            let mut next = layers.last().unwrap().clone();
            for i in 1..m {
                let j = m - i;
                if i > j {
                    break;
                }
                let cross = self.product_span(&layers[i - 1], &layers[j - 1]);
                next = next.sum(&cross).expect("same ambient");
            }
            if &next == layers.last().unwrap() {
                return Ok((next, layers.len()));
            }
            layers.push(next);
        }
    }

    /// The smallest ideal containing `seed`: ascending fixpoint under
    /// multiplication by every basis element.
    pub fn ideal_generated(&self, seed: &Subspace) -> Subspace {
        let mut current = seed.clone();
        loop {
            let grown = self
                .product_span(&current, &Subspace::full(self.dim))
                .sum(&current)
                .expect("same ambient");
            if grown == current {
                return current;
            }
            current = grown;
        }
    }

    /// The smallest subspace containing `seed` that is closed under
    /// multiplication by each of the listed axes.
    pub fn quasi_ideal_closure(&self, seed: &Subspace, axes: &[AlgElement]) -> Subspace {
        let mut current = seed.clone();
        loop {
            let mut grown = current.clone();
            for a in axes {
                let mut images = Vec::new();
                for v in current.basis_vectors() {
                    images.push(self.multiply(a, v).expect("basis vectors fit"));
                }
                let image = Subspace::from_spanning(self.dim, images);
                grown = grown.sum(&image).expect("same ambient");
            }
            if grown == current {
                return current;
            }
            current = grown;
        }
    }

    /// `Ann(A) = {u : uA = 0}`: the kernel of the stacked adjoints of all
    /// basis elements.
    pub fn annihilator(&self) -> Subspace {
        let mut stacked = RatMatrix::zero(0, self.dim);
        for i in 0..self.dim {
            stacked = stacked.vstack(&self.adjoint(&self.basis_element(i)));
        }
        stacked.kernel()
    }

    /// The unique largest ideal contained in `w`, by the descending fixpoint
    /// `W <- {v in W : v · b_j in W for all j}`.
    pub fn largest_ideal_inside(&self, w: &Subspace) -> Subspace {
        let mut current = w.clone();
        loop {
            if current.is_zero() {
                return current;
            }
            let constraints = current.constraints();
            let basis_t = current.basis().transpose(); // n x r, columns span W
            // rows: for each basis element b_j, require C · ad_{b_j} · B^T c = 0
            let mut system = RatMatrix::zero(0, current.dim());
            for j in 0..self.dim {
                let adj = self.adjoint(&self.basis_element(j));
                system = system.vstack(&constraints.matmul(&adj).matmul(&basis_t));
            }
            let coeff_space = system.kernel();
            if coeff_space.dim() == current.dim() {
                return current;
            }
            let mut vectors = Vec::new();
            for c in coeff_space.basis_vectors() {
                vectors.push(basis_t.apply(c));
            }
            current = Subspace::from_spanning(self.dim, vectors);
        }
    }

    /// Expresses `v` in coordinates, for diagnostics.
    pub fn describe(&self, v: &[Rat]) -> String {
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("{}*{}", c, self.basis_names[i]));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl std::fmt::Debug for CommAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CommAlgebra(dim {}, basis {:?})", self.dim, self.basis_names)
    }
}

/// The two-dimensional associative algebra `2B`: two orthogonal idempotents.
/// Used widely in tests and as a builtin.
pub fn norton_sakuma_2b() -> CommAlgebra {
    let mut alg = CommAlgebra::with_zero_products(vec!["e1".into(), "e2".into()]);
    alg.set_product(0, 0, vec_ops::unit(2, 0));
    alg.set_product(1, 1, vec_ops::unit(2, 1));
    alg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matsuo::{builtin_group, matsuo_algebra};

    fn s3_matsuo(eta: Rat) -> (CommAlgebra, Vec<AlgElement>) {
        let data = builtin_group("S3").unwrap();
        let alg = matsuo_algebra(&data, &eta).unwrap();
        let axes = alg.axes().to_vec();
        (alg.algebra().clone(), axes)
    }

    #[test]
    fn multiply_2b() {
        let alg = norton_sakuma_2b();
        let e1 = alg.basis_element(0);
        let e2 = alg.basis_element(1);
        assert!(vec_ops::is_zero(&alg.multiply(&e1, &e2).unwrap()));
        assert_eq!(alg.multiply(&e1, &e1).unwrap(), e1);
        let zero = vec_ops::zero(2);
        assert!(vec_ops::is_zero(&alg.multiply(&e1, &zero).unwrap()));
    }

    #[test]
    fn multiply_matsuo_s3() {
        let (alg, axes) = s3_matsuo(Rat::new(1, 2));
        // a·b = (1/4)(a + b - c)
        let ab = alg.multiply(&axes[0], &axes[1]).unwrap();
        let quarter = Rat::new(1, 4);
        let expected = vec![quarter.clone(), quarter.clone(), -&quarter];
        assert_eq!(ab, expected);
        // commutativity on these basis elements
        assert_eq!(ab, alg.multiply(&axes[1], &axes[0]).unwrap());
    }

    #[test]
    fn adjoint_basics() {
        let alg = norton_sakuma_2b();
        let zero = vec_ops::zero(2);
        assert!(alg.adjoint(&zero).is_zero());
        let e1 = alg.basis_element(0);
        let adj = alg.adjoint(&e1);
        assert_eq!(adj, RatMatrix::from_i64(&[&[1, 0], &[0, 0]]));
        // idempotent fixed by its own adjoint
        assert_eq!(adj.apply(&e1), e1);
    }

    #[test]
    fn adjoint_matches_multiplication() {
        let (alg, axes) = s3_matsuo(Rat::new(1, 2));
        let x = vec![Rat::new(2, 3), Rat::new(-1, 5), Rat::from_int(4)];
        let adj = alg.adjoint(&axes[0]);
        assert_eq!(adj.apply(&x), alg.multiply(&axes[0], &x).unwrap());
    }

    #[test]
    fn subalgebra_closure_full_basis() {
        let (alg, axes) = s3_matsuo(Rat::new(1, 2));
        let (sub, m) = alg.subalgebra_closure(&axes).unwrap();
        assert!(sub.is_full());
        assert_eq!(m, 1);
    }

    #[test]
    fn subalgebra_closure_two_generators() {
        let (alg, axes) = s3_matsuo(Rat::new(1, 2));
        let (sub, m) = alg
            .subalgebra_closure(&[axes[0].clone(), axes[1].clone()])
            .unwrap();
        assert!(sub.is_full());
        assert_eq!(m, 2);
    }

    #[test]
    fn subalgebra_closure_rejects_empty() {
        let alg = norton_sakuma_2b();
        assert!(alg.subalgebra_closure(&[]).is_err());
    }

    #[test]
    fn ideal_generated_trivial_cases() {
        let alg = norton_sakuma_2b();
        assert!(alg.ideal_generated(&Subspace::zero(2)).is_zero());
        assert!(alg.ideal_generated(&Subspace::full(2)).is_full());
    }

    #[test]
    fn annihilator_2b_trivial() {
        assert!(norton_sakuma_2b().annihilator().is_zero());
    }

    #[test]
    fn quasi_ideal_zero_seed() {
        let (alg, axes) = s3_matsuo(Rat::new(1, 2));
        assert!(alg.quasi_ideal_closure(&Subspace::zero(3), &axes).is_zero());
    }

    #[test]
    fn quasi_ideal_of_ideal_is_itself() {
        // every ideal is a quasi-ideal
        let data = builtin_group("S5").unwrap();
        let eta = Rat::new(-1, 3);
        let axial = matsuo_algebra(&data, &eta).unwrap();
        let alg = axial.algebra();
        let sum: AlgElement = vec![Rat::one(); 10];
        let ideal = alg.ideal_generated(&Subspace::span_of(10, &sum));
        assert_eq!(ideal.dim(), 1);
        let closed = alg.quasi_ideal_closure(&ideal, axial.axes());
        assert_eq!(closed, ideal);
    }

    #[test]
    fn annihilator_matsuo_s5() {
        let data = builtin_group("S5").unwrap();
        // at eta = -1/3 the all-axes sum annihilates the algebra
        let axial = matsuo_algebra(&data, &Rat::new(-1, 3)).unwrap();
        let ann = axial.algebra().annihilator();
        assert_eq!(ann.dim(), 1);
        assert!(ann.contains(&vec![Rat::one(); 10]));
        // at eta = -2 the annihilator is trivial
        let axial = matsuo_algebra(&data, &Rat::new(-2, 1)).unwrap();
        assert!(axial.algebra().annihilator().is_zero());
    }

    #[test]
    fn largest_ideal_trivial_cases() {
        let alg = norton_sakuma_2b();
        assert!(alg.largest_ideal_inside(&Subspace::full(2)).is_full());
        assert!(alg.largest_ideal_inside(&Subspace::zero(2)).is_zero());
    }
}
