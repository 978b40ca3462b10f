//! Exact scalars and the binomial conventions used by every counting path.
//!
//! Counts are [`ExactInt`] (arbitrary precision), series coefficients and
//! hypergeometric partial sums are [`ExactRat`] (always in lowest terms).
//! [`binomial_ext`] is a total function: it extends the binomial coefficient
//! to negative entries instead of failing, so that sums over candidate
//! parameters can be written without guards.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// Default number of factorials kept in the shared memo table.
pub const DEFAULT_FACTORIAL_CAP: usize = 1024;

/// Grow-only table of factorials `0!, 1!, ...` up to a fixed cap.
///
/// Readers take a shared lock; a miss below the cap extends the table under
/// the write lock. Requests beyond the cap are computed without memoizing.
#[derive(Debug)]
pub struct FactorialTable {
    cap: usize,
    table: RwLock<Vec<ExactInt>>,
}

impl FactorialTable {
    pub fn with_cap(cap: usize) -> Self {
        FactorialTable {
            cap,
            table: RwLock::new(vec![ExactInt::one()]),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("factorial table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, n: usize) -> ExactInt {
        if n > self.cap {
            let mut acc = self.get(self.cap);
            for i in self.cap + 1..=n {
                acc *= i;
            }
            return acc;
        }
        {
            let table = self.table.read().expect("factorial table poisoned");
            if let Some(v) = table.get(n) {
                return v.clone();
            }
        }
        let mut table = self.table.write().expect("factorial table poisoned");
        while table.len() <= n {
            let next = table.last().expect("table starts with 0!") * table.len();
            table.push(next);
        }
        table[n].clone()
    }
}

impl Default for FactorialTable {
    fn default() -> Self {
        FactorialTable::with_cap(DEFAULT_FACTORIAL_CAP)
    }
}

/// The process-wide factorial memo.
pub fn factorials() -> &'static FactorialTable {
    static TABLE: OnceLock<FactorialTable> = OnceLock::new();
    TABLE.get_or_init(FactorialTable::default)
}

pub fn factorial(n: usize) -> ExactInt {
    factorials().get(n)
}

/// `binom(n, k)` for `0 <= k <= n`.
fn binomial_standard(n: u64, k: u64) -> ExactInt {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    let table = factorials();
    if (n as usize) <= table.cap() {
        return table.get(n as usize) / (table.get(k as usize) * table.get((n - k) as usize));
    }
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Binomial coefficient extended to all integer arguments.
///
/// * `k < 0`: zero, except `binom(-1, -1) = 1`;
/// * `n >= 0`: the usual value, zero for `k > n`;
/// * `n < 0, k >= 0`: `(-1)^k binom(-n + k - 1, k)`.
pub fn binomial_ext(n: i64, k: i64) -> ExactInt {
    if k < 0 {
        return if n == -1 && k == -1 {
            ExactInt::one()
        } else {
            ExactInt::zero()
        };
    }
    if n >= 0 {
        if k > n {
            ExactInt::zero()
        } else {
            binomial_standard(n as u64, k as u64)
        }
    } else {
        let magnitude = binomial_standard((-n + k - 1) as u64, k as u64);
        if k % 2 == 0 {
            magnitude
        } else {
            -magnitude
        }
    }
}

/// `(e-1)! / (e+1-N)!`, the prefactor of the closed-form counts.
///
/// For `N >= 2` this is an integer (a product of `N - 2` consecutive
/// integers); for `N = 1` it is `1/e`.
pub fn falling_ratio(e: i64, n_roots: i64) -> Result<ExactRat> {
    if e < 1 || n_roots < 1 || n_roots > e + 1 {
        return Err(Error::domain(format!(
            "falling_ratio needs e >= 1 and 1 <= N <= e+1, got e={e}, N={n_roots}"
        )));
    }
    if n_roots == 1 {
        return Ok(ExactRat::new(ExactInt::one(), ExactInt::from(e)));
    }
    let mut acc = ExactInt::one();
    for i in (e + 2 - n_roots)..e {
        acc *= i;
    }
    Ok(ExactRat::from_integer(acc))
}

/// Converts an exact rational known to be integral, or reports the remainder.
pub fn expect_integer(value: ExactRat, context: &str) -> ExactInt {
    assert!(
        value.is_integer(),
        "{context}: expected an integer, got {value}"
    );
    value.to_integer()
}

pub(crate) fn rat(n: i64, d: i64) -> ExactRat {
    ExactRat::new(ExactInt::from(n), ExactInt::from(d))
}

pub(crate) fn int_rat(n: impl Into<ExactInt>) -> ExactRat {
    ExactRat::from_integer(n.into())
}
