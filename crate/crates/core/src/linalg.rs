//! Small exact linear algebra: 3-vectors, 3x3 matrices over the scalar field,
//! and Gaussian elimination for rank/span computations.

use crate::scalar::{ExactScalar, Rat, SCALAR_ZERO};

/// Column/row 3-vector of scalars (the two roles are distinguished by use).
#[derive(Clone, Debug, PartialEq)]
pub struct Vec3(pub [ExactScalar; 3]);

/// 3x3 matrix of scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat3(pub [[ExactScalar; 3]; 3]);

const ROW_ZERO: [ExactScalar; 3] = [SCALAR_ZERO; 3];
pub const VEC3_ZERO: Vec3 = Vec3(ROW_ZERO);
pub const MAT3_ZERO: Mat3 = Mat3([ROW_ZERO; 3]);

impl Vec3 {
    pub fn zero() -> Vec3 {
        VEC3_ZERO
    }

    /// Standard basis vector e_k (0-based).
    pub fn e(k: usize) -> Vec3 {
        let mut v = Vec3::zero();
        v.0[k] = ExactScalar::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Vec3) -> Vec3 {
        Vec3(std::array::from_fn(|k| self.0[k].add(&o.0[k])))
    }

    pub fn sub(&self, o: &Vec3) -> Vec3 {
        Vec3(std::array::from_fn(|k| self.0[k].sub(&o.0[k])))
    }

    pub fn neg(&self) -> Vec3 {
        Vec3(std::array::from_fn(|k| self.0[k].neg()))
    }

    pub fn scale(&self, s: &ExactScalar) -> Vec3 {
        Vec3(std::array::from_fn(|k| self.0[k].mul(s)))
    }

    /// Plain euclidean dot product.
    pub fn dot(&self, o: &Vec3) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for k in 0..3 {
            acc = acc.add(&self.0[k].mul(&o.0[k]));
        }
        acc
    }

    /// Standard vector (cross) product.
    pub fn cross(&self, o: &Vec3) -> Vec3 {
        let a = &self.0;
        let b = &o.0;
        Vec3([
            a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
            a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
            a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
        ])
    }

    /// Row-vector times matrix: (v M)_j = sum_i v_i m_ij.
    pub fn mul_mat(&self, m: &Mat3) -> Vec3 {
        Vec3(std::array::from_fn(|j| {
            let mut acc = ExactScalar::zero();
            for i in 0..3 {
                if !self.0[i].is_zero() {
                    acc = acc.add(&self.0[i].mul(&m.0[i][j]));
                }
            }
            acc
        }))
    }

    /// Matrix times column-vector: (M v)_i = sum_j m_ij v_j.
    pub fn mul_mat_left(&self, m: &Mat3) -> Vec3 {
        m.mul_vec(self)
    }
}

impl Mat3 {
    pub fn zero() -> Mat3 {
        MAT3_ZERO
    }

    pub fn identity() -> Mat3 {
        let mut m = Mat3::zero();
        for k in 0..3 {
            m.0[k][k] = ExactScalar::one();
        }
        m
    }

    /// Matrix unit E_{ij} (0-based).
    pub fn unit(i: usize, j: usize) -> Mat3 {
        let mut m = Mat3::zero();
        m.0[i][j] = ExactScalar::one();
        m
    }

    pub fn diag(a: ExactScalar, b: ExactScalar, c: ExactScalar) -> Mat3 {
        let mut m = Mat3::zero();
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    pub fn scalar(s: &ExactScalar) -> Mat3 {
        Mat3::diag(s.clone(), s.clone(), s.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|row| row.iter().all(|c| c.is_zero()))
    }

    pub fn add(&self, o: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j].add(&o.0[i][j]))
        }))
    }

    pub fn sub(&self, o: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j].sub(&o.0[i][j]))
        }))
    }

    pub fn neg(&self) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].neg())))
    }

    pub fn scale(&self, s: &ExactScalar) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].mul(s))))
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        let mut out = Mat3::zero();
        for i in 0..3 {
            for k in 0..3 {
                if self.0[i][k].is_zero() {
                    continue;
                }
                for j in 0..3 {
                    if o.0[k][j].is_zero() {
                        continue;
                    }
                    out.0[i][j] = out.0[i][j].add(&self.0[i][k].mul(&o.0[k][j]));
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &Mat3) -> Mat3 {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn trace(&self) -> ExactScalar {
        self.0[0][0].add(&self.0[1][1]).add(&self.0[2][2])
    }

    pub fn is_traceless(&self) -> bool {
        self.trace().is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self == &self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.add(&self.transpose()).is_zero()
    }

    /// Column vector image: (M v)_i = sum_j m_ij v_j.
    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        Vec3(std::array::from_fn(|i| {
            let mut acc = ExactScalar::zero();
            for j in 0..3 {
                if !v.0[j].is_zero() {
                    acc = acc.add(&self.0[i][j].mul(&v.0[j]));
                }
            }
            acc
        }))
    }

    /// Outer product of a column and a row vector: (a b)_ij = a_i b_j.
    pub fn outer(col: &Vec3, row: &Vec3) -> Mat3 {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| col.0[i].mul(&row.0[j]))
        }))
    }
}

/// Incremental exact row reduction used for span/rank computations over the
/// scalar field. Rows are dense coordinate vectors of a fixed width.
pub struct RowSpan {
    width: usize,
    /// Reduced rows, each normalized to a unit leading entry.
    rows: Vec<Vec<ExactScalar>>,
    /// Leading column of each reduced row.
    pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new(width: usize) -> RowSpan {
        RowSpan { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `row` against the span; returns the remainder.
    pub fn reduce(&self, mut row: Vec<ExactScalar>) -> Vec<ExactScalar> {
        assert_eq!(row.len(), self.width);
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for k in p..self.width {
                if !r[k].is_zero() {
                    row[k] = row[k].sub(&f.mul(&r[k]));
                }
            }
        }
        row
    }

    /// Tries to add `row` to the span. Returns true when the rank grew.
    pub fn insert(&mut self, row: Vec<ExactScalar>) -> bool {
        let mut rem = self.reduce(row);
        let Some(p) = rem.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = rem[p].inv().expect("nonzero pivot");
        for c in rem.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(&inv);
            }
        }
        // back-substitute into existing rows to keep the basis reduced
        for r in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for k in 0..self.width {
                if !rem[k].is_zero() {
                    r[k] = r[k].sub(&f.mul(&rem[k]));
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.rows.insert(at, rem);
        self.pivots.insert(at, p);
        true
    }

    pub fn contains(&self, row: Vec<ExactScalar>) -> bool {
        self.reduce(row).iter().all(|c| c.is_zero())
    }
}

/// Solves a square system A x = b over the scalar field; `None` if singular.
pub fn solve_square(a: &[Vec<ExactScalar>], b: &[ExactScalar]) -> Option<Vec<ExactScalar>> {
    let n = b.len();
    let mut m: Vec<Vec<ExactScalar>> = a.to_vec();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].inv().ok()?;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&inv);
            for k in col..n {
                if !m[col][k].is_zero() {
                    let t = m[col][k].mul(&f);
                    m[r][k] = m[r][k].sub(&t);
                }
            }
            let t = rhs[col].mul(&f);
            rhs[r] = rhs[r].sub(&t);
        }
    }
    let mut x = vec![ExactScalar::zero(); n];
    for k in 0..n {
        let inv = m[k][k].inv().ok()?;
        x[k] = rhs[k].mul(&inv);
    }
    Some(x)
}

/// Scalar helper: value as a plain rational, if it has no radical part.
pub fn as_plain_rat(s: &ExactScalar) -> Option<Rat> {
    if s.c[1..].iter().all(|r| r.is_zero()) {
        Some(s.c[0].clone())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_and_outer() {
        let e1 = Vec3::e(0);
        let e2 = Vec3::e(1);
        assert_eq!(e1.cross(&e2), Vec3::e(2));
        assert_eq!(e2.cross(&e1), Vec3::e(2).neg());
        let m = Mat3::outer(&e1, &e2);
        assert_eq!(m, Mat3::unit(0, 1));
        assert!(m.trace().is_zero());
    }

    #[test]
    fn matrix_algebra() {
        let a = Mat3::unit(0, 1);
        let b = Mat3::unit(1, 0);
        assert_eq!(a.mul(&b), Mat3::unit(0, 0));
        assert_eq!(
            a.commutator(&b),
            Mat3::unit(0, 0).sub(&Mat3::unit(1, 1))
        );
    }

    #[test]
    fn row_span_rank() {
        let one = ExactScalar::one;
        let mut span = RowSpan::new(3);
        assert!(span.insert(vec![one(), one(), ExactScalar::zero()]));
        assert!(span.insert(vec![ExactScalar::zero(), one(), one()]));
        // dependent row
        assert!(!span.insert(vec![one(), ExactScalar::int(2), one()]));
        assert_eq!(span.rank(), 2);
        assert!(span.contains(vec![one(), ExactScalar::zero(), one().neg()]));
        assert!(!span.contains(vec![one(), ExactScalar::zero(), ExactScalar::zero()]));
    }
}
