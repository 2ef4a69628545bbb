//! Kronecker products and tensor powers over F_p.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// `kron` with a row/column limit equal to the default construction limit.
pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    kron_with_limit(a, b, crate::foolmat::DEFAULT_SIZE_LIMIT)
}

/// Kronecker product. Entry `(k * rows_b + k', l * cols_b + l')` is
/// `a[k][l] * b[k'][l']`.
pub fn kron_with_limit(a: &Matrix, b: &Matrix, size_limit: u64) -> Result<Matrix> {
    let field = a.field();
    if field != b.field() {
        return Err(Error::FieldMismatch {
            left: field.modulus(),
            right: b.field().modulus(),
        });
    }
    let rows = checked_dim(a.rows(), b.rows(), size_limit)?;
    let cols = checked_dim(a.cols(), b.cols(), size_limit)?;
    let (br, bc) = (b.rows(), b.cols());
    Ok(Matrix::from_fn(field, rows, cols, |i, j| {
        field.mul(a.get(i / br, j / bc), b.get(i % br, j % bc)) as u64
    }))
}

fn checked_dim(x: usize, y: usize, limit: u64) -> Result<usize> {
    match x.checked_mul(y) {
        Some(d) if d as u64 <= limit => Ok(d),
        Some(d) => Err(Error::SizeLimit { size: d as u64, limit }),
        None => Err(Error::SizeLimit { size: u64::MAX, limit }),
    }
}

pub fn tensor_power(m: &Matrix, k: u32) -> Result<Matrix> {
    tensor_power_with_limit(m, k, crate::foolmat::DEFAULT_SIZE_LIMIT)
}

/// `m ⊗ m ⊗ ... ⊗ m` (`k` factors).
pub fn tensor_power_with_limit(m: &Matrix, k: u32, size_limit: u64) -> Result<Matrix> {
    if k < 1 {
        return Err(Error::InvalidParameter("tensor power needs k >= 1".into()));
    }
    // Check the final size before building anything.
    let side = |d: usize| (d as u64).checked_pow(k);
    for d in [m.rows(), m.cols()] {
        match side(d) {
            Some(s) if s <= size_limit => {}
            Some(s) => return Err(Error::SizeLimit { size: s, limit: size_limit }),
            None => return Err(Error::SizeLimit { size: u64::MAX, limit: size_limit }),
        }
    }
    let mut acc = m.clone();
    for _ in 1..k {
        acc = kron_with_limit(&acc, m, size_limit)?;
    }
    Ok(acc)
}

/// Growth exponent obtained by tensoring a seed fooling-set matrix of size
/// `n0` and rank `r0`: powers have size `n0^k` and rank `r0^k`, so
/// `size = rank^(log n0 / log r0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentEstimate {
    pub n0: u64,
    pub r0: u64,
    /// `log(n0) / log(r0)`.
    pub exponent: f64,
    /// `(k, n0^k / (r0^k)^2)` for `k = 1..=4`.
    pub ratios: Vec<(u32, Ratio<u128>)>,
}

impl ExponentEstimate {
    /// The exponent printed to 10 decimal places.
    pub fn exponent_string(&self) -> String {
        format!("{:.10}", self.exponent)
    }
}

pub fn exponent_estimate(n0: u64, r0: u64) -> Result<ExponentEstimate> {
    if n0 < 2 || r0 < 2 {
        return Err(Error::InvalidParameter(format!(
            "exponent estimate needs n0 >= 2 and r0 >= 2, got ({n0}, {r0})"
        )));
    }
    let exponent = (n0 as f64).ln() / (r0 as f64).ln();
    let ratios = (1..=4u32)
        .map(|k| {
            let n = (n0 as u128).pow(k);
            let r = (r0 as u128).pow(k);
            (k, Ratio::new(n, r * r))
        })
        .collect();
    Ok(ExponentEstimate { n0, r0, exponent, ratios })
}
