//! Binomial sums that come out of the three-root deletion recursion, and
//! the identities relating them.
//!
//! ```text
//! S1(n,r,s)   = Σ_{k=0..n}   binom(2n-2k+s, n-k) binom(2k+r, k) / (k+r+1)
//! S2(n,r,s)   = Σ_{k=0..n+s} binom(2n-2k+s, n-k+s) binom(2k+r, k) / (k+r+1)
//! S3(n,r)     = Σ_{k=0..n}   binom(2n-2k, n-k) binom(2k+r, k) / (n-k+1)
//! S4(n,r)     = Σ_{k=0..n}   binom(2n-2k+2, n-k) binom(2k+r, k) / (n-k+1)
//! S5(n,r,s)   = Σ_{k=0..n}   binom(2n-2k+s, n-k) binom(2k+r, k)
//! S6(n,r,s,t) = Σ_{k=0..n}   r/(tk+r) binom(tk+r, k) binom(tn-tk+s, n-k)
//! ```
//!
//! In `S6` a vanishing `tk + r` cancels against the binomial beside it.
//! `S2` takes the lower index `n-k+s` so that the range `k <= n+s` is the
//! natural one; it agrees with `n-k` whenever both are in range.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_form::count_raw;
use crate::error::{Error, Result};
use crate::exact::{binomial_ext, int_rat, ExactInt, ExactRat};

fn b(n: i64, k: i64) -> ExactRat {
    ExactRat::from_integer(binomial_ext(n, k))
}

fn arity(which: u8, args: &[i64], expected: usize) -> Result<()> {
    if args.len() != expected {
        return Err(Error::domain(format!("S_{which} takes {expected} arguments, got {}", args.len())));
    }
    if args[0] < 0 {
        return Err(Error::domain(format!("S_{which} needs n >= 0, got n={}", args[0])));
    }
    Ok(())
}

fn checked_ratio(num: ExactRat, den: i64, which: u8, k: i64) -> Result<ExactRat> {
    if den == 0 {
        return Err(Error::domain(format!("S_{which}: zero denominator at k={k}")));
    }
    Ok(num / int_rat(den))
}

/// `S_which(args)` by direct summation.
pub fn sum_s(which: u8, args: &[i64]) -> Result<ExactRat> {
    let mut acc = ExactRat::zero();
    match which {
        1 => {
            arity(1, args, 3)?;
            let (n, r, s) = (args[0], args[1], args[2]);
            for k in 0..=n {
                acc += checked_ratio(b(2 * n - 2 * k + s, n - k) * b(2 * k + r, k), k + r + 1, 1, k)?;
            }
        }
        2 => {
            arity(2, args, 3)?;
            let (n, r, s) = (args[0], args[1], args[2]);
            for k in 0..=n + s {
                acc += checked_ratio(b(2 * n - 2 * k + s, n - k + s) * b(2 * k + r, k), k + r + 1, 2, k)?;
            }
        }
        3 => {
            arity(3, args, 2)?;
            let (n, r) = (args[0], args[1]);
            for k in 0..=n {
                acc += b(2 * n - 2 * k, n - k) * b(2 * k + r, k) / int_rat(n - k + 1);
            }
        }
        4 => {
            arity(4, args, 2)?;
            let (n, r) = (args[0], args[1]);
            for k in 0..=n {
                acc += b(2 * n - 2 * k + 2, n - k) * b(2 * k + r, k) / int_rat(n - k + 1);
            }
        }
        5 => {
            arity(5, args, 3)?;
            return Ok(ExactRat::from_integer(s5(args[0], args[1], args[2])));
        }
        6 => {
            arity(6, args, 4)?;
            let (n, r, s, t) = (args[0], args[1], args[2], args[3]);
            for k in 0..=n {
                let m = t * k + r;
                let weight = if m != 0 {
                    int_rat(r) / int_rat(m) * b(m, k)
                } else if k == 0 {
                    ExactRat::one()
                } else {
                    // r/(tk+r) binom(tk+r, k) = r/k binom(tk+r-1, k-1)
                    int_rat(r) / int_rat(k) * b(m - 1, k - 1)
                };
                acc += weight * b(t * n - t * k + s, n - k);
            }
        }
        _ => return Err(Error::domain(format!("no sum S_{which}"))),
    }
    Ok(acc)
}

/// `S5(n, r, s)`, integral by construction.
pub fn s5(n: i64, r: i64, s: i64) -> ExactInt {
    (0..=n).map(|k| binomial_ext(2 * n - 2 * k + s, n - k) * binomial_ext(2 * k + r, k)).sum()
}

/// Closed forms of `S1..S4` and `S6`; `S5` has none.
pub fn closed_form_s(which: u8, args: &[i64]) -> Result<ExactRat> {
    match which {
        1 | 2 => {
            arity(which, args, 3)?;
            let (n, r, s) = (args[0], args[1], args[2]);
            if r < 0 {
                return Err(Error::domain(format!("closed form of S_{which} needs r >= 0")));
            }
            let lower = if which == 1 { n } else { n + s };
            Ok(b(2 * n + r + s + 1, lower) / int_rat(r + 1))
        }
        3 => {
            arity(3, args, 2)?;
            Ok(b(2 * args[0] + args[1] + 1, args[0]))
        }
        4 => {
            arity(4, args, 2)?;
            Ok(b(2 * args[0] + args[1] + 2, args[0]))
        }
        5 => Err(Error::UnsupportedIndex(5)),
        6 => {
            arity(6, args, 4)?;
            let (n, r, s, t) = (args[0], args[1], args[2], args[3]);
            Ok(b(t * n + r + s, n))
        }
        _ => Err(Error::domain(format!("no sum S_{which}"))),
    }
}

/// Arguments `(n, r, s)` of one sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Triple {
    pub n: i64,
    pub r: i64,
    pub s: i64,
}

impl Triple {
    pub fn is_non_negative(&self) -> bool {
        self.n >= 0 && self.r >= 0 && self.s >= 0
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.r, self.s)
    }
}

/// The seven argument triples of the three-root decomposition, as functions
/// of `(e, d1, d2, d3)`. Index 0 holds the first triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SigmaParamTable {
    pub triples: [Triple; 7],
}

impl SigmaParamTable {
    pub fn new(e: i64, d1: i64, d2: i64, d3: i64) -> Self {
        let n = e + 1 - d1 - d2 - d3;
        let t = |n, r, s| Triple { n, r, s };
        SigmaParamTable {
            triples: [
                t(n, d1 - 2, d2 + d3 - 2),
                t(n, d1 + d2 + d3 - 6, 2),
                t(n, d1 + d2 - 4, d3),
                t(n, d1 + d3 - 4, d2),
                t(n + 1, d1 - 2, d2 + d3 - 4),
                t(n + 1, d2 - 2, d1 + d3 - 4),
                t(n + 1, d3 - 2, d1 + d2 - 4),
            ],
        }
    }

    /// Triple `i`, counted from 1.
    pub fn get(&self, i: usize) -> Triple {
        self.triples[i - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaTerm {
    /// Value from counts, summed over the edge split.
    pub raw: String,
    /// Value of the binomial-sum expression; `None` when its arguments are
    /// negative and the comparison is skipped.
    pub stated: Option<String>,
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaReport {
    pub e: i64,
    pub degrees: [i64; 3],
    pub terms: Vec<SigmaTerm>,
    /// The first term summed over its explicit binomial form.
    pub first_term_direct: String,
    pub first_term_direct_agrees: bool,
    pub total: String,
    pub expected_total: String,
    pub ok: bool,
}

fn t(n: i64, e: i64, d: &[i64]) -> ExactInt {
    count_raw(n, e, d)
}

/// The eight terms of the three-root deletion recursion, from counts.
fn raw_sigma_terms(e: i64, d1: i64, d2: i64, d3: i64) -> [ExactInt; 8] {
    let mut out: [ExactInt; 8] = Default::default();
    for e1 in 0..e {
        let e2 = e - 1 - e1;
        out[0] += t(1, e1, &[d1 - 1]) * t(3, e2, &[d2, d3]);
        out[1] += t(3, e1, &[d1 - 1, d2, d3]) * t(1, e2, &[]);
        out[2] += t(2, e1, &[d1 - 1, d2]) * t(2, e2, &[d3]);
        out[3] += t(2, e1, &[d1 - 1, d3]) * t(2, e2, &[d2]);
        out[4] += t(1, e1, &[d1 - 1]) * t(2, e2, &[d2 - 1, d3]) * d2;
        out[5] += t(2, e1, &[d1 - 1, d3]) * t(1, e2, &[d2 - 1]) * d2;
        out[6] += t(2, e1, &[d1 - 1, d2]) * t(1, e2, &[d3 - 1]) * d3;
        out[7] += t(1, e1, &[d1 - 1]) * t(2, e2, &[d3 - 1, d2]) * d3;
    }
    out
}

fn s(which: u8, p: Triple) -> ExactRat {
    let args: Vec<i64> = if which == 4 { vec![p.n, p.r] } else { vec![p.n, p.r, p.s] };
    sum_s(which, &args).expect("non-negative arguments")
}

/// The eight terms as combinations of `S1`, `S4`, `S5`.
fn stated_sigma_terms(e: i64, d1: i64, d2: i64, d3: i64, table: &SigmaParamTable) -> [Option<ExactRat>; 8] {
    let c = int_rat((d1 - 1) * d2 * d3);
    let e_2 = int_rat(e - 2);
    let p = |i| table.get(i);
    let ok = |i: usize| p(i).is_non_negative();
    let mut out: [Option<ExactRat>; 8] = Default::default();
    if ok(1) {
        out[0] = Some(&c * &e_2 * s(1, p(1)) - &c * s(5, p(1)));
    }
    if ok(2) {
        let tail = ExactRat::from_integer(t(3, e - 1, &[d1 - 1, d2, d3]));
        out[1] = Some(&c * &e_2 * s(4, p(2)) - &c * s(5, p(2)) + tail);
    }
    if ok(3) {
        out[2] = Some(&c * s(5, p(3)));
    }
    if ok(4) {
        out[3] = Some(&c * s(5, p(4)));
    }
    if ok(5) {
        out[4] = Some(&c * int_rat(d2 - 1) * s(1, p(5)));
    }
    if ok(6) {
        out[5] = Some(&c * int_rat(d2 - 1) * s(1, p(6)));
    }
    if ok(7) {
        out[6] = Some(&c * int_rat(d3 - 1) * s(1, p(7)));
    }
    if ok(5) {
        out[7] = Some(&c * int_rat(d3 - 1) * s(1, p(5)));
    }
    out
}

/// The first term written out as a single sum over the edge count of the
/// left tree.
fn first_term_direct(e: i64, d1: i64, d2: i64, d3: i64) -> ExactRat {
    let mut acc = ExactRat::zero();
    for e1 in (d1 - 1).max(1)..=e - d2 - d3 {
        let weight = int_rat((d1 - 1) * (e - 2 - e1) * d2 * d3) / int_rat(e1);
        acc += weight * b(2 * e1 - d1, e1 - 1) * b(2 * e - 2 * e1 - 2 - d2 - d3, e - 2 - e1);
    }
    acc
}

/// Splits `T_3(e; d1, d2, d3)` into the eight terms of the deletion
/// recursion and compares each with its binomial-sum expression.
pub fn sigma_decomposition_check(e: i64, d1: i64, d2: i64, d3: i64) -> Result<SigmaReport> {
    if d1 < 2 {
        return Err(Error::domain("the decomposition assumes d1 >= 2"));
    }
    if e < 1 || d2 < 1 || d3 < 1 {
        return Err(Error::domain("need e >= 1 and positive degrees"));
    }
    let table = SigmaParamTable::new(e, d1, d2, d3);
    let raw = raw_sigma_terms(e, d1, d2, d3);
    let stated = stated_sigma_terms(e, d1, d2, d3, &table);
    let mut ok = true;
    let terms = raw
        .iter()
        .zip(stated.iter())
        .map(|(r, st)| {
            let agrees = st.as_ref().map(|v| *v == ExactRat::from_integer(r.clone()));
            ok &= agrees.unwrap_or(true);
            SigmaTerm {
                raw: r.to_string(),
                stated: st.as_ref().map(|v| v.to_string()),
                agrees,
            }
        })
        .collect();
    let direct = first_term_direct(e, d1, d2, d3);
    let direct_agrees = direct == ExactRat::from_integer(raw[0].clone())
        && stated[0].as_ref().is_none_or(|v| *v == direct);
    ok &= direct_agrees;
    let total: ExactInt = raw.iter().sum();
    let expected = t(3, e, &[d1, d2, d3]);
    ok &= total == expected;
    Ok(SigmaReport {
        e,
        degrees: [d1, d2, d3],
        terms,
        first_term_direct: direct.to_string(),
        first_term_direct_agrees: direct_agrees,
        total: total.to_string(),
        expected_total: expected.to_string(),
        ok,
    })
}

/// `S5(q3) + S5(q4) - S5(q1) - S5(q2) = 0` for four non-negative triples.
pub fn four_term_check(quad: [Triple; 4]) -> Result<bool> {
    if let Some(bad) = quad.iter().find(|q| !q.is_non_negative()) {
        return Err(Error::domain(format!("triple {bad} has a negative entry")));
    }
    let v = |q: Triple| s5(q.n, q.r, q.s);
    Ok(v(quad[2]) + v(quad[3]) - v(quad[0]) - v(quad[1]) == ExactInt::zero())
}

/// [`four_term_check`] on the first four triples induced by `(e, d1, d2, d3)`.
pub fn four_term_check_degrees(e: i64, d1: i64, d2: i64, d3: i64) -> Result<bool> {
    let table = SigmaParamTable::new(e, d1, d2, d3);
    four_term_check([table.get(1), table.get(2), table.get(3), table.get(4)])
}

/// Both sides of the conjectured `S5` identity at one point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialRowRecord {
    pub triple: Triple,
    pub lhs: String,
    /// `Σ_{k <= n/2} binom(2n+2+r+s, n-2k)`.
    pub rhs_even_steps: String,
    /// `Σ_{l <= n} binom(2n+1+r+s, l)`.
    pub rhs_partial_row: String,
    pub holds: bool,
}

pub fn partial_row_check(n: i64, r: i64, s: i64) -> Result<PartialRowRecord> {
    if n < 0 {
        return Err(Error::domain("need n >= 0"));
    }
    let m = r + s;
    let lhs = s5(n, r, s);
    let even: ExactInt = (0..=n / 2).map(|k| binomial_ext(2 * n + 2 + m, n - 2 * k)).sum();
    let row = partial_row_sum(n, m);
    Ok(PartialRowRecord {
        triple: Triple { n, r, s },
        holds: lhs == even && even == row,
        lhs: lhs.to_string(),
        rhs_even_steps: even.to_string(),
        rhs_partial_row: row.to_string(),
    })
}

fn partial_row_sum(n: i64, m: i64) -> ExactInt {
    (0..=n).map(|l| binomial_ext(2 * n + 1 + m, l)).sum()
}

/// Result of a parameter sweep; failures are kept as records.
#[derive(Debug, Clone, Serialize)]
pub struct Sweep<R> {
    pub checked: usize,
    pub failures: Vec<R>,
}

impl<R> Sweep<R> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// [`partial_row_check`] over `0 <= n <= n_max` and the given `r`, `s`
/// ranges. Counterexamples are returned, never dropped.
pub fn partial_row_sweep(
    n_max: i64,
    r_range: std::ops::RangeInclusive<i64>,
    s_range: std::ops::RangeInclusive<i64>,
) -> Sweep<PartialRowRecord> {
    let mut cells = Vec::new();
    for n in 0..=n_max {
        for r in r_range.clone() {
            for s in s_range.clone() {
                cells.push((n, r, s));
            }
        }
    }
    let mut failures: Vec<PartialRowRecord> = cells
        .par_iter()
        .filter_map(|&(n, r, s)| {
            let rec = partial_row_check(n, r, s).expect("n >= 0");
            (!rec.holds).then_some(rec)
        })
        .collect();
    failures.sort_by_key(|rec| (rec.triple.n, rec.triple.r, rec.triple.s));
    Sweep { checked: cells.len(), failures }
}

/// Terminating `pFq(upper; lower; arg)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeomSpec {
    pub upper: Vec<ExactRat>,
    pub lower: Vec<ExactRat>,
    pub arg: ExactRat,
}

impl HypergeomSpec {
    pub fn new(upper: Vec<ExactRat>, lower: Vec<ExactRat>, arg: ExactRat) -> Self {
        HypergeomSpec { upper, lower, arg }
    }

    /// Last index with a possibly nonzero term: the smallest `-a` over
    /// upper parameters `a` that are non-positive integers.
    pub fn termination_index(&self) -> Option<usize> {
        self.upper
            .iter()
            .filter(|a| a.is_integer() && !a.is_positive())
            .filter_map(|a| usize::try_from(-a.to_integer()).ok())
            .min()
    }
}

fn pochhammer_step(params: &[ExactRat], k: usize) -> ExactRat {
    let k = int_rat(k as i64);
    params.iter().map(|a| a + &k).product()
}

/// Exact value of a terminating hypergeometric series.
pub fn eval_pfq(spec: &HypergeomSpec) -> Result<ExactRat> {
    let last = spec.termination_index().ok_or(Error::NonTerminating)?;
    let mut term = ExactRat::one();
    let mut acc = ExactRat::one();
    for k in 0..last {
        if let Some(b) = spec.lower.iter().find(|b| (*b + int_rat(k as i64)).is_zero()) {
            return Err(Error::UndefinedSeries { param: b.to_string(), index: k + 1 });
        }
        term = term * pochhammer_step(&spec.upper, k) / pochhammer_step(&spec.lower, k) * &spec.arg
            / int_rat(k as i64 + 1);
        acc += &term;
    }
    Ok(acc)
}

fn half(n: i64) -> ExactRat {
    ExactRat::new(n.into(), 2.into())
}

/// Both sides of the partial-row identity at one point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowHypergeomRecord {
    pub triple: Triple,
    pub row_sum: String,
    pub hypergeometric: String,
    pub holds: bool,
}

/// `Σ_{l<=n} binom(2n+1+m, l) = binom(2n+2+m, n) 3F2(1, (1-n)/2, -n/2;
/// (n+3+m)/2, 2+(n+m)/2; 1)` with `m = r + s`.
pub fn row_hypergeom_check(n: i64, r: i64, s: i64) -> Result<RowHypergeomRecord> {
    if n < 0 || r + s < 0 {
        return Err(Error::domain(format!("need n >= 0 and r+s >= 0, got n={n}, r+s={}", r + s)));
    }
    let m = r + s;
    let rhs = row_hypergeom_form(n, m)?;
    let lhs = ExactRat::from_integer(partial_row_sum(n, m));
    Ok(RowHypergeomRecord {
        triple: Triple { n, r, s },
        holds: lhs == rhs,
        row_sum: lhs.to_string(),
        hypergeometric: rhs.to_string(),
    })
}

fn row_hypergeom_form(n: i64, m: i64) -> Result<ExactRat> {
    let spec = HypergeomSpec::new(
        vec![ExactRat::one(), half(1 - n), half(-n)],
        vec![half(n + 3 + m), int_rat(2) + half(n + m)],
        ExactRat::one(),
    );
    Ok(b(2 * n + 2 + m, n) * eval_pfq(&spec)?)
}

pub fn row_hypergeom_sweep(n_max: i64, m_max: i64) -> Sweep<RowHypergeomRecord> {
    let cells: Vec<(i64, i64)> = (0..=n_max).flat_map(|n| (0..=m_max).map(move |m| (n, m))).collect();
    let mut failures: Vec<RowHypergeomRecord> = cells
        .par_iter()
        .filter_map(|&(n, m)| {
            let rec = row_hypergeom_check(n, m, 0).expect("in domain");
            (!rec.holds).then_some(rec)
        })
        .collect();
    failures.sort_by_key(|rec| (rec.triple.n, rec.triple.r));
    Sweep { checked: cells.len(), failures }
}

/// `S5(n, r, s)` against its `4F3` form, and that form against the `3F2`
/// side of the partial-row identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S5FormRecord {
    pub triple: Triple,
    pub s5: String,
    /// `None` when a lower parameter vanishes before the series ends.
    pub hypergeometric: Option<String>,
    pub undefined: Option<String>,
    pub partial_row_form: String,
    pub form_matches_sum: Option<bool>,
    pub forms_agree: Option<bool>,
}

impl S5FormRecord {
    pub fn holds(&self) -> bool {
        self.form_matches_sum == Some(true) && self.forms_agree == Some(true)
    }
}

pub fn s5_hypergeom_check(n: i64, r: i64, s: i64) -> Result<S5FormRecord> {
    if n < 0 || r < 0 || s < 0 {
        return Err(Error::domain(format!("need n, r, s >= 0, got ({n}, {r}, {s})")));
    }
    let sum = ExactRat::from_integer(s5(n, r, s));
    let spec = HypergeomSpec::new(
        vec![ExactRat::one() + half(r), half(1 + r), int_rat(-n), int_rat(-n - s)],
        vec![int_rat(1 + r), int_rat(-n) - half(s), int_rat(-n) + half(1 - s)],
        ExactRat::one(),
    );
    let other = row_hypergeom_form(n, r + s)?;
    let (form, undefined) = match eval_pfq(&spec) {
        Ok(v) => (Some(b(2 * n + s, n) * v), None),
        Err(err @ Error::UndefinedSeries { .. }) => (None, Some(err.to_string())),
        Err(err) => return Err(err),
    };
    Ok(S5FormRecord {
        triple: Triple { n, r, s },
        s5: sum.to_string(),
        form_matches_sum: form.as_ref().map(|f| *f == sum),
        forms_agree: form.as_ref().map(|f| *f == other),
        hypergeometric: form.map(|f| f.to_string()),
        undefined,
        partial_row_form: other.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn int(v: i64) -> ExactRat {
        int_rat(v)
    }

    #[test]
    fn sum_examples() {
        assert_eq!(sum_s(1, &[1, 0, 0]).unwrap(), int(3));
        assert_eq!(sum_s(5, &[1, 2, 3]).unwrap(), int(9));
        assert_eq!(sum_s(6, &[2, 1, 1, 1]).unwrap(), int(6));
        assert_eq!(sum_s(3, &[2, 1]).unwrap(), int(15));
        assert_eq!(sum_s(4, &[2, 0]).unwrap(), int(15));
        assert!(sum_s(1, &[-1, 0, 0]).is_err());
        assert!(sum_s(3, &[1, 0, 0]).is_err());
        assert!(sum_s(7, &[1]).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_s(1, &[1, 0, 0]).unwrap(), int(3));
        assert_eq!(closed_form_s(3, &[2, 1]).unwrap(), int(15));
        assert_eq!(closed_form_s(4, &[2, 0]).unwrap(), int(15));
        assert_eq!(closed_form_s(5, &[1, 0, 0]), Err(Error::UnsupportedIndex(5)));
    }

    #[test]
    fn closed_forms_match_sums() {
        for n in 0..=30 {
            for r in 0..=15 {
                for s in -15..=15 {
                    for which in [1, 2] {
                        assert_eq!(sum_s(which, &[n, r, s]).unwrap(), closed_form_s(which, &[n, r, s]).unwrap());
                    }
                }
            }
            for r in -15..=15 {
                for which in [3, 4] {
                    assert_eq!(sum_s(which, &[n, r]).unwrap(), closed_form_s(which, &[n, r]).unwrap());
                }
                for s in -15..=15 {
                    for tt in 1..=3 {
                        let args = [n, r, s, tt];
                        assert_eq!(sum_s(6, &args).unwrap(), closed_form_s(6, &args).unwrap(), "{args:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn param_table_sums_are_constant() {
        for e in 1..=20 {
            for d1 in 1..=e {
                for d2 in 1..=e {
                    for d3 in 1..=e {
                        let table = SigmaParamTable::new(e, d1, d2, d3);
                        for i in 1..=4 {
                            let p = table.get(i);
                            assert_eq!(p.r + p.s, d1 + d2 + d3 - 4);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let rep = sigma_decomposition_check(5, 2, 2, 2).unwrap();
        assert!(rep.ok, "{rep:?}");
        assert_eq!(rep.total, "96");
        let raw: Vec<&str> = rep.terms.iter().map(|t| t.raw.as_str()).collect();
        assert_eq!(raw, ["8", "32", "4", "4", "12", "12", "12", "12"]);
        let rep = sigma_decomposition_check(4, 2, 1, 1).unwrap();
        assert!(rep.ok, "{rep:?}");
        assert_eq!(rep.total, "18");
        assert!(sigma_decomposition_check(9, 3, 3, 3).unwrap().ok);
        assert!(sigma_decomposition_check(5, 1, 2, 2).is_err());
    }

    #[test]
    fn sigma_grid() {
        for e in 2..=12 {
            for d1 in 2..=e {
                for d2 in 1..=e {
                    for d3 in 1..=e {
                        let rep = sigma_decomposition_check(e, d1, d2, d3).unwrap();
                        assert!(rep.ok, "{rep:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn four_term_examples() {
        assert!(four_term_check_degrees(12, 4, 3, 3).unwrap());
        assert!(four_term_check_degrees(9, 3, 3, 3).unwrap());
        let q = Triple { n: 3, r: 1, s: 2 };
        assert!(four_term_check([q, q, q, q]).unwrap());
        assert!(four_term_check_degrees(3, 2, 2, 2).is_err());
    }

    #[test]
    fn partial_row_examples() {
        for (n, r, s, v) in [(1, 0, 0, "4"), (2, 1, 0, "22"), (2, -1, 2, "22")] {
            let rec = partial_row_check(n, r, s).unwrap();
            assert!(rec.holds);
            assert_eq!(rec.lhs, v);
        }
        assert!(partial_row_check(-1, 0, 0).is_err());
    }

    #[test]
    fn pfq_examples() {
        let f = |u: Vec<ExactRat>, l: Vec<ExactRat>| eval_pfq(&HypergeomSpec::new(u, l, int(1)));
        assert_eq!(f(vec![int(-1), int(1)], vec![int(2)]).unwrap(), rat(1, 2));
        assert_eq!(f(vec![int(1), int(0), rat(-1, 2)], vec![int(3), rat(5, 2)]).unwrap(), int(1));
        assert_eq!(f(vec![int(1), rat(-1, 2), int(-1)], vec![rat(5, 2), int(3)]).unwrap(), rat(16, 15));
        assert_eq!(f(vec![int(1), rat(1, 2)], vec![int(2)]), Err(Error::NonTerminating));
        assert!(matches!(f(vec![int(-3)], vec![int(-1)]), Err(Error::UndefinedSeries { index: 2, .. })));
    }

    #[test]
    fn row_hypergeom_examples() {
        for (n, r, s, lhs) in [(1, 0, 0, "4"), (2, 0, 0, "16"), (3, 1, 0, "93")] {
            let rec = row_hypergeom_check(n, r, s).unwrap();
            assert!(rec.holds, "{rec:?}");
            assert_eq!(rec.row_sum, lhs);
        }
        assert!(row_hypergeom_check(2, -3, 1).is_err());
    }

    #[test]
    fn s5_hypergeom_examples() {
        let rec = s5_hypergeom_check(1, 2, 3).unwrap();
        assert_eq!(rec.s5, "9");
        assert!(rec.holds(), "{rec:?}");
        let rec = s5_hypergeom_check(2, 0, 0).unwrap();
        assert_eq!(rec.s5, "16");
        assert!(rec.holds(), "{rec:?}");
        for r in 0..5 {
            for s in 0..5 {
                assert!(s5_hypergeom_check(0, r, s).unwrap().holds());
            }
        }
    }

    #[test]
    fn s5_hypergeom_grid() {
        for n in 0..=12 {
            for r in 0..=8 {
                for s in 0..=8 {
                    let rec = s5_hypergeom_check(n, r, s).unwrap();
                    assert!(rec.holds(), "{rec:?}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn s5_depends_on_r_plus_s_only(n in 0i64..25, r in -10i64..15, s in -10i64..15, shift in -5i64..5) {
            prop_assert_eq!(s5(n, r, s), s5(n, r + shift, s - shift));
        }
    }
}
