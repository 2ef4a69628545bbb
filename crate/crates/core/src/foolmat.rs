//! Fooling-set matrices `M[k][l] = f(k - l)` built from the order-`r`
//! sequence with `r = p^t + 1`, and the checks that certify them.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lrs::Lrs;
use crate::matrix::Matrix;

/// Largest matrix side `construct` accepts unless told otherwise.
pub const DEFAULT_SIZE_LIMIT: u64 = 5000;

/// `n x n` matrix with entry `(k, l) = f(k - l)`, indices 0-based.
pub fn matrix_from_sequence(seq: &Lrs, n: usize) -> Matrix {
    assert!(n >= 1, "matrix size must be positive");
    let offset = n as i64 - 1;
    // w[d + n - 1] = f(d) for d in -(n-1)..=(n-1)
    let w = seq.window_raw(-offset, 2 * n - 1);
    Matrix::from_fn(seq.field(), n, n, |k, l| w[k + n - 1 - l] as u64)
}

/// First violation of the fooling-set property, or `Pass`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoolingWitness {
    Pass,
    ZeroDiagonal { k: usize },
    /// `M[k][l]` and `M[l][k]` are both nonzero.
    SymmetricPair { k: usize, l: usize },
}

impl FoolingWitness {
    pub fn passed(&self) -> bool {
        matches!(self, FoolingWitness::Pass)
    }
}

impl fmt::Display for FoolingWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoolingWitness::Pass => write!(f, "pass"),
            FoolingWitness::ZeroDiagonal { k } => write!(f, "zero-diagonal {k}"),
            FoolingWitness::SymmetricPair { k, l } => write!(f, "symmetric-pair {k} {l}"),
        }
    }
}

/// Checks `M[k][k] != 0` and `M[k][l] M[l][k] = 0` for `k != l`, reporting
/// the first violation in row-major order.
pub fn verify_fooling(m: &Matrix) -> Result<FoolingWitness> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    for k in 0..n {
        for l in 0..n {
            if k == l {
                if m.get(k, k) == 0 {
                    return Ok(FoolingWitness::ZeroDiagonal { k });
                }
            } else if m.get(k, l) != 0 && m.get(l, k) != 0 {
                return Ok(FoolingWitness::SymmetricPair { k, l });
            }
        }
    }
    Ok(FoolingWitness::Pass)
}

/// Everything known about the matrix for one `(p, t)`.
#[derive(Debug, Clone)]
pub struct FoolingBundle {
    pub p: u64,
    pub t: u32,
    pub r: usize,
    pub n: usize,
    pub seq: Lrs,
    pub matrix: Matrix,
    pub rank: usize,
    pub witness: FoolingWitness,
}

impl FoolingBundle {
    pub fn fooling(&self) -> bool {
        self.witness.passed()
    }

    /// `n / rank^2` as an exact fraction.
    pub fn ratio(&self) -> Ratio<i64> {
        Ratio::new(self.n as i64, (self.rank as i64).pow(2).max(1))
    }
}

/// `(r, n) = (p^t + 1, r(r-1) + 1)`, or `None` on overflow.
pub fn parameters(p: u64, t: u32) -> Option<(u64, u64)> {
    let r = p.checked_pow(t)?.checked_add(1)?;
    let n = r.checked_mul(r - 1)?.checked_add(1)?;
    Some((r, n))
}

pub fn construct(p: u64, t: u32) -> Result<FoolingBundle> {
    construct_with_limit(p, t, DEFAULT_SIZE_LIMIT)
}

/// Builds the `n x n` matrix for `r = p^t + 1`, `n = r(r-1) + 1`, and fills
/// in its rank and fooling witness.
pub fn construct_with_limit(p: u64, t: u32, size_limit: u64) -> Result<FoolingBundle> {
    if t < 1 {
        return Err(Error::InvalidParameter(format!("t must be at least 1, got {t}")));
    }
    let field = crate::field::PrimeField::new(p)?;
    let (r, n) = parameters(p, t).ok_or(Error::SizeLimit { size: u64::MAX, limit: size_limit })?;
    if n > size_limit {
        return Err(Error::SizeLimit { size: n, limit: size_limit });
    }
    let (r, n) = (r as usize, n as usize);
    let seq = Lrs::standard(field.modulus() as u64, r)?;
    let matrix = matrix_from_sequence(&seq, n);
    let rank = matrix.rank();
    let witness = verify_fooling(&matrix)?;
    Ok(FoolingBundle { p, t, r, n, seq, matrix, rank, witness })
}

/// Outcome of [`row_recurrence_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowRecurrenceReport {
    pub r: usize,
    /// Rows `k >= r` with `row k != -row(k-r) - row(k-r+1)`.
    pub recurrence_violations: Vec<usize>,
    /// Cells of the top-left `r x r` block breaking upper-triangularity
    /// (nonzero below the diagonal, or zero on it).
    pub triangle_violations: Vec<(usize, usize)>,
    /// The matrix is too small to hold an `r x r` block.
    pub block_missing: bool,
}

impl RowRecurrenceReport {
    pub fn passed(&self) -> bool {
        self.recurrence_violations.is_empty()
            && self.triangle_violations.is_empty()
            && !self.block_missing
    }
}

/// Checks the row relation that bounds the rank by `r`, and that the leading
/// `r x r` block is upper-triangular with nonzero diagonal (rank at least `r`).
pub fn row_recurrence_check(m: &Matrix, r: usize) -> RowRecurrenceReport {
    let f = m.field();
    let mut recurrence_violations = Vec::new();
    if r >= 1 {
        for k in r..m.rows() {
            let (a, b) = (m.row(k - r), m.row(k - r + 1));
            let ok = m
                .row(k)
                .iter()
                .zip(a.iter().zip(b))
                .all(|(&x, (&y, &z))| x == f.neg(f.add(y, z)));
            if !ok {
                recurrence_violations.push(k);
            }
        }
    }
    let block_missing = r > m.rows() || r > m.cols();
    let mut triangle_violations = Vec::new();
    if !block_missing {
        for k in 0..r {
            for l in 0..=k {
                let v = m.get(k, l);
                if (k == l && v == 0) || (k != l && v != 0) {
                    triangle_violations.push((k, l));
                }
            }
        }
    }
    RowRecurrenceReport { r, recurrence_violations, triangle_violations, block_missing }
}

/// One line of the convergence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioRow {
    pub p: u64,
    pub t: u32,
    pub r: usize,
    pub n: usize,
    pub rank: usize,
    pub ratio: Ratio<i64>,
}

impl RatioRow {
    pub fn from_bundle(b: &FoolingBundle) -> RatioRow {
        RatioRow { p: b.p, t: b.t, r: b.r, n: b.n, rank: b.rank, ratio: b.ratio() }
    }

    /// `1 - p^{-t}`.
    pub fn lower_bound(&self) -> Ratio<i64> {
        let pt = (self.p as i64).pow(self.t);
        Ratio::new(pt - 1, pt)
    }

    /// Checks `1 - ratio = (r-1)/r^2`, `ratio >= 1 - p^{-t}` and `n <= rank^2`.
    pub fn check(&self) -> Result<()> {
        let r = self.r as i64;
        let deficit = Ratio::from_integer(1) - self.ratio;
        if deficit != Ratio::new(r - 1, r * r) {
            return Err(Error::InvariantViolated(format!(
                "p={} t={}: 1 - n/rank^2 = {deficit}, expected {}/{}",
                self.p,
                self.t,
                r - 1,
                r * r
            )));
        }
        if self.ratio < self.lower_bound() {
            return Err(Error::InvariantViolated(format!(
                "p={} t={}: ratio {} below 1 - p^-t = {}",
                self.p,
                self.t,
                self.ratio,
                self.lower_bound()
            )));
        }
        if self.n > self.rank * self.rank {
            return Err(Error::InvariantViolated(format!(
                "p={} t={}: n = {} exceeds rank^2 = {}",
                self.p,
                self.t,
                self.n,
                self.rank * self.rank
            )));
        }
        Ok(())
    }
}

/// Rows for `t = 1..=t_max`, each checked with [`RatioRow::check`].
pub fn ratio_report(p: u64, t_max: u32, size_limit: u64) -> Result<Vec<RatioRow>> {
    let mut rows = Vec::with_capacity(t_max as usize);
    for t in 1..=t_max {
        let bundle = construct_with_limit(p, t, size_limit)?;
        if !bundle.fooling() {
            return Err(Error::InvariantViolated(format!(
                "p={p} t={t}: matrix is not a fooling-set matrix ({})",
                bundle.witness
            )));
        }
        let row = RatioRow::from_bundle(&bundle);
        row.check()?;
        rows.push(row);
    }
    Ok(rows)
}
