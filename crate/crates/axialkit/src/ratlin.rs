//! Exact linear algebra over the rationals.
//!
//! Everything downstream (eigenspaces, ideals, radicals, bodies, group
//! elements) is phrased in terms of three types defined here: [`Rat`], an
//! arbitrary-precision rational scalar; [`RatMatrix`], a dense matrix of
//! rationals; and [`Subspace`], a subspace of `Q^n` held in a canonical
//! reduced-row-echelon basis so that equality of subspaces is structural
//! equality of values.
//!
//! No floating point appears anywhere: all arithmetic is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::RatlinError;

/// An exact rational number, always stored in reduced form with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` from machine integers. Panics if `q == 0`.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = RatlinError;

    /// Accepts `"p"` or `"p/q"`; unreduced input is normalized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num_str
            .trim()
            .parse()
            .map_err(|_| RatlinError::BadRational(s.to_string()))?;
        let den: BigInt = den_str
            .trim()
            .parse()
            .map_err(|_| RatlinError::BadRational(s.to_string()))?;
        if den.is_zero() {
            return Err(RatlinError::ZeroDenominator(s.to_string()));
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rat {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        (&self).div(&rhs)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

/// A dense matrix of rationals, row-major. Equality is exact entry-wise
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rat> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Stacks `other` below `self`. Column counts must match.
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn matmul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * &other[(k, j)];
                    out[(i, j)] += &term;
                }
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &(&self[(i, j)] * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Reduced row-echelon form together with the rank. Idempotent:
    /// `m.rref().0.rref() == m.rref()`.
    pub fn rref(&self) -> (RatMatrix, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m[(pivot_row, col)].recip();
            for j in col..m.cols {
                m[(pivot_row, j)] = &m[(pivot_row, j)] * &inv;
            }
            for r in 0..m.rows {
                if r != pivot_row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        let t = &factor * &m[(pivot_row, j)];
                        m[(r, j)] -= &t;
                    }
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// The full solution space of `m x = 0` as a canonical subspace of
    /// `Q^cols`; its dimension is `cols - rank`.
    pub fn kernel(&self) -> Subspace {
        let (r, rank) = self.rref();
        let mut pivots = vec![None; self.cols];
        let mut pivot_cols = Vec::with_capacity(rank);
        for row in 0..rank {
            let col = (0..self.cols).find(|&c| !r[(row, c)].is_zero()).unwrap();
            pivots[col] = Some(row);
            pivot_cols.push(col);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (&pc, row) in pivot_cols.iter().zip(0..rank) {
                v[pc] = -&r[(row, free)];
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.cols, basis)
    }

    /// A particular solution of `self * x = rhs`, or `None` if the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, rhs.len(), "right-hand side length mismatch");
        let mut aug = RatMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let (r, rank) = aug.rref();
        let mut x = vec![Rat::zero(); self.cols];
        for row in 0..rank {
            let col = (0..=self.cols).find(|&c| !r[(row, c)].is_zero()).unwrap();
            if col == self.cols {
                return None; // pivot in the rhs column: inconsistent
            }
            x[col] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse; panics if the matrix is singular.
    pub fn inverse(&self) -> RatMatrix {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = {
            let mut m = RatMatrix::zero(n, 2 * n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = self[(i, j)].clone();
                }
                m[(i, n + i)] = Rat::one();
            }
            m
        };
        let (r, rank) = aug.rref();
        assert_eq!(rank, n, "singular matrix has no inverse");
        let mut inv = RatMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        inv
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A subspace of `Q^n`, held as a reduced-row-echelon basis with zero rows
/// removed. Two `Subspace` values are equal iff they are the same subspace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: RatMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RatMatrix::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RatMatrix::identity(ambient),
        }
    }

    /// Canonicalizes an arbitrary spanning set.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<Rat>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length differs from ambient dim");
        }
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (r, rank) = RatMatrix::from_rows(vectors).rref();
        let basis = RatMatrix::from_rows((0..rank).map(|i| r.row_vec(i)).collect());
        Subspace { ambient, basis }
    }

    pub fn span_of(ambient: usize, v: &[Rat]) -> Self {
        Self::from_spanning(ambient, vec![v.to_vec()])
    }

    pub fn ambient_dim(&self) -> usize {
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

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.dim()).map(|i| self.basis.row(i))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, RatlinError> {
        self.check_ambient(other)?;
        let mut vecs: Vec<Vec<Rat>> = self.basis_vectors().map(<[Rat]>::to_vec).collect();
        vecs.extend(other.basis_vectors().map(<[Rat]>::to_vec));
        Ok(Subspace::from_spanning(self.ambient, vecs))
    }

    /// Intersection via duality: the annihilating constraints of each space
    /// are stacked and the kernel of the stack is the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, RatlinError> {
        self.check_ambient(other)?;
        let c1 = self.constraints();
        let c2 = other.constraints();
        Ok(c1.vstack(&c2).kernel())
    }

    /// A matrix `C` with `C x = 0` iff `x` lies in this subspace.
    pub fn constraints(&self) -> RatMatrix {
        let complement = self.basis.kernel();
        if complement.dim() == 0 {
            RatMatrix::zero(0, self.ambient)
        } else {
            complement.basis.clone()
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let stacked = self.basis.vstack(&RatMatrix::from_rows(vec![v.to_vec()]));
        stacked.rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().all(|v| self.contains(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), RatlinError> {
        if self.ambient != other.ambient {
            return Err(RatlinError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}

/// Coordinate-vector helpers used throughout the crate.
pub mod vec_ops {
    use super::Rat;

    pub fn zero(n: usize) -> Vec<Rat> {
        vec![Rat::zero(); n]
    }

    pub fn unit(n: usize, i: usize) -> Vec<Rat> {
        let mut v = zero(n);
        v[i] = Rat::one();
        v
    }

    pub fn is_zero(v: &[Rat]) -> bool {
        v.iter().all(Rat::is_zero)
    }

    pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(c: &Rat, v: &[Rat]) -> Vec<Rat> {
        v.iter().map(|x| c * x).collect()
    }

    pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                acc += &(x * y);
            }
        }
        acc
    }
}

impl Subspace {
    /// Coordinates of `v` in this subspace's canonical basis, or `None` when
    /// `v` lies outside the subspace.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        if self.dim() == 0 {
            return vec_ops::is_zero(v).then(Vec::new);
        }
        let coords = self.basis.transpose().solve(v)?;
        // solve() finds a particular solution; basis rows are independent so
        // it is exact, but an inconsistent system means v is outside.
        Some(coords)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of Q^{}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rat {
        Rat::new(p, q)
    }

    #[test]
    fn rational_parse_and_display() {
        assert_eq!("3/4".parse::<Rat>().unwrap(), r(3, 4));
        assert_eq!("6/8".parse::<Rat>().unwrap(), r(3, 4));
        assert_eq!("-2/4".parse::<Rat>().unwrap(), r(-1, 2));
        assert_eq!("5".parse::<Rat>().unwrap(), Rat::from_int(5));
        assert_eq!(r(1, -2).to_string(), "-1/2");
        assert_eq!(r(7, 1).to_string(), "7");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = RatMatrix::identity(3);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 3);

        let z = RatMatrix::zero(2, 4);
        let (r, rank) = z.rref();
        assert_eq!(r, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, RatMatrix::from_i64(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_idempotent() {
        let m = RatMatrix::from_i64(&[&[2, 4, 1], &[3, 1, 0], &[5, 5, 1]]);
        let (r1, _) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_identity_and_zero() {
        assert!(RatMatrix::identity(4).kernel().is_zero());
        let k = RatMatrix::zero(3, 3).kernel();
        assert!(k.is_full());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = RatMatrix::from_i64(&[&[1, 1, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert!(m.apply(v).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn subspace_canonical_equality() {
        let u1 = Subspace::from_spanning(
            3,
            vec![
                vec![r(1, 1), r(1, 1), r(0, 1)],
                vec![r(0, 1), r(2, 1), r(0, 1)],
            ],
        );
        let u2 = Subspace::from_spanning(
            3,
            vec![
                vec![r(1, 1), r(0, 1), r(0, 1)],
                vec![r(3, 1), r(-5, 1), r(0, 1)],
            ],
        );
        assert_eq!(u1, u2);
    }

    #[test]
    fn subspace_ops() {
        let e1 = Subspace::span_of(2, &[Rat::one(), Rat::zero()]);
        let e2 = Subspace::span_of(2, &[Rat::zero(), Rat::one()]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert!(e1.sum(&e2).unwrap().is_full());
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        assert_eq!(e1.sum(&e1).unwrap(), e1);

        // span{e1+e2, e2} ∩ span{e1} = span{e1}
        let u = Subspace::from_spanning(
            2,
            vec![vec![r(1, 1), r(1, 1)], vec![r(0, 1), r(1, 1)]],
        );
        assert_eq!(u.intersect(&e1).unwrap(), e1);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = Subspace::full(2);
        let v = Subspace::full(3);
        assert!(u.sum(&v).is_err());
        assert!(u.intersect(&v).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse();
        assert_eq!(m.matmul(&inv), RatMatrix::identity(2));
    }

    #[test]
    fn modular_law_small() {
        let u = Subspace::from_spanning(
            3,
            vec![vec![r(1, 1), r(0, 1), r(1, 1)], vec![r(0, 1), r(1, 1), r(1, 1)]],
        );
        let v = Subspace::from_spanning(3, vec![vec![r(1, 1), r(1, 1), r(2, 1)]]);
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
    }
}
