//! Linear recurring sequences over F_p, evaluable on all of Z.
//!
//! A sequence of order `r` satisfies `f(k+r) = sum_i c_i f(k+i)` for every
//! integer `k`. With `c_0 != 0` the relation can be solved for `f(k)`, so the
//! sequence extends uniquely to negative indices:
//!
//! ```text
//! f(k) = c_0^{-1} (f(k+r) - sum_{i>=1} c_i f(k+i))
//! ```

use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::field::{FpElement, PrimeField};

/// Step cap used by [`Lrs::period`] callers that have no better bound.
pub const DEFAULT_PERIOD_CAP: u64 = 10_000_000;

#[derive(Clone, Default)]
struct Cache {
    /// f(0), f(1), ... (always holds at least the initial values)
    forward: Vec<u32>,
    /// f(-1), f(-2), ...
    backward: Vec<u32>,
    period: Option<u64>,
}

/// A reversible linear recurring sequence `f: Z -> F_p`.
///
/// Values are memoised in a window around the origin that grows on demand in
/// both directions. The cache is an implementation detail: results are the
/// same as direct evaluation.
pub struct Lrs {
    field: PrimeField,
    coeffs: Vec<u32>,
    init: Vec<u32>,
    inv_c0: u32,
    cache: Mutex<Cache>,
}

impl Lrs {
    /// The sequence `f(k+r) = -f(k) - f(k+1)` with `f(0) = 1` and
    /// `f(1) = ... = f(r-1) = 0`.
    pub fn standard(p: u64, r: usize) -> Result<Lrs> {
        let field = PrimeField::new(p)?;
        if r < 2 {
            return Err(Error::InvalidOrder(r));
        }
        let minus_one = field.neg(1);
        let mut coeffs = vec![0u32; r];
        coeffs[0] = minus_one;
        coeffs[1] = minus_one;
        let mut init = vec![0u32; r];
        init[0] = 1;
        Lrs::from_residues(field, coeffs, init)
    }

    /// A general sequence `f(k+r) = sum_i coeffs[i] f(k+i)` with
    /// `f(i) = init[i]`. Entries are reduced mod `p`, so `-1` is accepted.
    pub fn general(p: u64, coeffs: &[i64], init: &[i64]) -> Result<Lrs> {
        let field = PrimeField::new(p)?;
        let coeffs = coeffs.iter().map(|&c| field.reduce_signed(c)).collect();
        let init = init.iter().map(|&v| field.reduce_signed(v)).collect();
        Lrs::from_residues(field, coeffs, init)
    }

    pub fn from_residues(field: PrimeField, coeffs: Vec<u32>, init: Vec<u32>) -> Result<Lrs> {
        if coeffs.len() != init.len() {
            return Err(Error::LengthMismatch { coeffs: coeffs.len(), init: init.len() });
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidOrder(0));
        }
        let p = field.modulus();
        let coeffs: Vec<u32> = coeffs.into_iter().map(|c| c % p).collect();
        let init: Vec<u32> = init.into_iter().map(|v| v % p).collect();
        let inv_c0 = field.inv(coeffs[0]).map_err(|_| Error::Irreversible)?;
        let cache = Cache { forward: init.clone(), ..Cache::default() };
        Ok(Lrs { field, coeffs, init, inv_c0, cache: Mutex::new(cache) })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn init(&self) -> &[u32] {
        &self.init
    }

    /// `f(k)` for any integer `k`.
    pub fn eval(&self, k: i64) -> FpElement {
        self.field.element(self.eval_raw(k) as u64)
    }

    /// `f(k)` as a bare residue.
    pub fn eval_raw(&self, k: i64) -> u32 {
        let mut cache = self.lock();
        self.extend_to(&mut cache, k);
        lookup(&cache, k)
    }

    /// `[f(start), ..., f(start + len - 1)]`.
    pub fn window(&self, start: i64, len: usize) -> Vec<FpElement> {
        self.window_raw(start, len)
            .into_iter()
            .map(|v| self.field.element(v as u64))
            .collect()
    }

    pub fn window_raw(&self, start: i64, len: usize) -> Vec<u32> {
        if len == 0 {
            return Vec::new();
        }
        let end = start + len as i64 - 1;
        let mut cache = self.lock();
        self.extend_to(&mut cache, start);
        self.extend_to(&mut cache, end);
        (start..=end).map(|k| lookup(&cache, k)).collect()
    }

    /// The same recurrence with initial values `f(offset), ..., f(offset + r - 1)`,
    /// so that `rebased(o).eval(j) == eval(o + j)`.
    pub fn rebased(&self, offset: i64) -> Lrs {
        let init = self.window_raw(offset, self.order());
        Lrs::from_residues(self.field, self.coeffs.clone(), init)
            .expect("rebasing keeps the recurrence reversible")
    }

    /// Minimal `n >= 1` with `state(n) = state(0)`, where
    /// `state(k) = (f(k), ..., f(k+r-1))`, found by stepping the companion map.
    pub fn period(&self, cap: u64) -> Result<u64> {
        if let Some(n) = self.lock().period {
            return if n <= cap { Ok(n) } else { Err(Error::CapExceeded(cap)) };
        }
        let f = self.field;
        let r = self.order();
        let start = self.init.clone();
        let mut state = start.clone();
        for step in 1..=cap {
            let next = state
                .iter()
                .zip(&self.coeffs)
                .fold(0u32, |acc, (&s, &c)| f.add(acc, f.mul(c, s)));
            state.copy_within(1..r, 0);
            state[r - 1] = next;
            if state == start {
                self.lock().period = Some(step);
                return Ok(step);
            }
        }
        Err(Error::CapExceeded(cap))
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, Cache> {
        // A poisoned cache is still consistent: entries are only ever appended.
        self.cache.lock().unwrap_or_else(|e| e.into_inner())
    }

    fn extend_to(&self, cache: &mut Cache, k: i64) {
        let f = self.field;
        let r = self.order();
        if k >= 0 {
            let target = k as usize;
            while cache.forward.len() <= target {
                let m = cache.forward.len();
                let base = m - r;
                let next = (0..r).fold(0u32, |acc, i| {
                    f.add(acc, f.mul(self.coeffs[i], cache.forward[base + i]))
                });
                cache.forward.push(next);
            }
        } else {
            let target = (-k) as usize;
            while cache.backward.len() < target {
                let m = -(cache.backward.len() as i64) - 1;
                let mut acc = lookup(cache, m + r as i64);
                for i in 1..r {
                    let term = f.mul(self.coeffs[i], lookup(cache, m + i as i64));
                    acc = f.sub(acc, term);
                }
                cache.backward.push(f.mul(self.inv_c0, acc));
            }
        }
    }
}

fn lookup(cache: &Cache, k: i64) -> u32 {
    if k >= 0 {
        cache.forward[k as usize]
    } else {
        cache.backward[(-k - 1) as usize]
    }
}

impl Clone for Lrs {
    fn clone(&self) -> Self {
        let cache = self.lock().clone();
        Lrs {
            field: self.field,
            coeffs: self.coeffs.clone(),
            init: self.init.clone(),
            inv_c0: self.inv_c0,
            cache: Mutex::new(cache),
        }
    }
}

impl fmt::Debug for Lrs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lrs")
            .field("field", &self.field)
            .field("coeffs", &self.coeffs)
            .field("init", &self.init)
            .finish()
    }
}

impl PartialEq for Lrs {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs && self.init == other.init
    }
}

impl Eq for Lrs {}

/// Outcome of [`zero_blocks_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroBlockReport {
    pub r: usize,
    /// Number of `(j, i)` positions inspected.
    pub checked: usize,
    /// Positions `(j, i)` with `f(jr + i) != 0`.
    pub violations: Vec<(usize, usize)>,
}

impl ZeroBlockReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the zero blocks `f(jr + i) = 0` for `j = 0..=r-2`, `i = 1..=r-1-j`.
pub fn zero_blocks_check(seq: &Lrs, r: usize) -> ZeroBlockReport {
    let mut checked = 0;
    let mut violations = Vec::new();
    for j in 0..r.saturating_sub(1) {
        for i in 1..r - j {
            checked += 1;
            if seq.eval_raw((j * r + i) as i64) != 0 {
                violations.push((j, i));
            }
        }
    }
    ZeroBlockReport { r, checked, violations }
}

/// Outcome of [`cross_symmetry_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossSymmetryReport {
    pub n: u64,
    /// Indices `k` in `1..n` with `f(k) f(-k) != 0`.
    pub violations: Vec<u64>,
}

impl CrossSymmetryReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `f(k) f(-k) = 0` for all `k = 1..n-1`.
pub fn cross_symmetry_check(seq: &Lrs, n: u64) -> CrossSymmetryReport {
    let f = seq.field();
    let violations = (1..n)
        .filter(|&k| f.mul(seq.eval_raw(k as i64), seq.eval_raw(-(k as i64))) != 0)
        .collect();
    CrossSymmetryReport { n, violations }
}
