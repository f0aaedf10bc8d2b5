//! Exact rational linear algebra: reduced row echelon form, rank and the
//! canonical null-space basis.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::graph::VertexSet;

pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Vector of exact rationals indexed by vertex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalVector(pub Vec<Rational>);

impl RationalVector {
    pub fn zeros(n: usize) -> Self {
        RationalVector(vec![Rational::zero(); n])
    }

    pub fn from_i64(values: &[i64]) -> Self {
        RationalVector(values.iter().map(|&v| rational(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        RationalVector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &RationalVector) -> Self {
        assert_eq!(self.len(), other.len());
        RationalVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + c * b)
                .collect(),
        )
    }

    /// Multiplies by the lcm of the denominators, giving an integer vector
    /// with the same direction.
    pub fn cleared_denominators(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        self.0
            .iter()
            .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
            .collect()
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for RationalVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&v| rational(v)).collect(),
        }
    }

    /// Matrix whose rows are the given vectors; `cols` fixes the width when
    /// the list is empty.
    pub fn from_row_vectors(vectors: &[RationalVector], cols: usize) -> Self {
        assert!(vectors.iter().all(|v| v.len() == cols));
        RationalMatrix {
            rows: vectors.len(),
            cols,
            data: vectors.iter().flat_map(|v| v.0.iter().cloned()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul_vec(&self, x: &RationalVector) -> RationalVector {
        assert_eq!(x.len(), self.cols, "dimension mismatch");
        RationalVector(
            (0..self.rows)
                .map(|r| {
                    self.row(r)
                        .iter()
                        .zip(&x.0)
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        )
    }

    /// Integer view for tests; panics on non-integer or oversized entries.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|x| {
                        assert!(x.is_integer());
                        x.to_integer().to_i64().expect("entry fits in i64")
                    })
                    .collect()
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: RationalMatrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Gauss-Jordan elimination with first-nonzero pivoting.
pub fn rref(m: &RationalMatrix) -> Rref {
    let mut r = m.clone();
    let mut pivot_columns = Vec::new();
    let mut row = 0;
    for col in 0..r.cols {
        if row == r.rows {
            break;
        }
        let Some(p) = (row..r.rows).find(|&i| !r[(i, col)].is_zero()) else {
            continue;
        };
        r.swap_rows(row, p);
        let inv = r[(row, col)].recip();
        for c in col..r.cols {
            let v = &r[(row, c)] * &inv;
            r[(row, c)] = v;
        }
        for i in 0..r.rows {
            if i == row || r[(i, col)].is_zero() {
                continue;
            }
            let factor = r[(i, col)].clone();
            for c in col..r.cols {
                if r[(row, c)].is_zero() {
                    continue;
                }
                let v = &r[(i, c)] - &factor * &r[(row, c)];
                r[(i, c)] = v;
            }
        }
        pivot_columns.push(col);
        row += 1;
    }
    Rref {
        rank: pivot_columns.len(),
        reduced: r,
        pivot_columns,
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    rref(m).rank
}

/// Canonical basis of the right null space: one vector per free column,
/// equal to 1 there and 0 at every other free column, ordered by free column.
pub fn null_space_basis(m: &RationalMatrix) -> Vec<RationalVector> {
    let Rref {
        reduced,
        pivot_columns,
        ..
    } = rref(m);
    let mut is_pivot = vec![false; m.cols()];
    for &c in &pivot_columns {
        is_pivot[c] = true;
    }
    (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = RationalVector::zeros(m.cols());
            x[free] = Rational::one();
            for (r, &pc) in pivot_columns.iter().enumerate() {
                x[pc] = -reduced[(r, free)].clone();
            }
            x
        })
        .collect()
}

pub fn nullity(m: &RationalMatrix) -> usize {
    m.cols() - rank(m)
}

/// True when both vector families span the same subspace of `Q^dim`.
pub fn same_span(a: &[RationalVector], b: &[RationalVector], dim: usize) -> bool {
    let ra = rref(&RationalMatrix::from_row_vectors(a, dim));
    let rb = rref(&RationalMatrix::from_row_vectors(b, dim));
    ra.rank == rb.rank
        && ra.pivot_columns == rb.pivot_columns
        && (0..ra.rank).all(|r| ra.reduced.row(r) == rb.reduced.row(r))
}

/// True when the vectors are linearly independent.
pub fn independent(vectors: &[RationalVector], dim: usize) -> bool {
    rank(&RationalMatrix::from_row_vectors(vectors, dim)) == vectors.len()
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
