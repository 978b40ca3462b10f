//! Cross-checks between the counting methods, the series and the sums.
//!
//! Every check walks a fixed parameter grid and keeps one line per failing
//! cell. Grids run in parallel; failures are sorted before reporting.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_form::{count, count_partial, count_total};
use crate::degree_spec::{max_degree, DegreeSpec};
use crate::error::{Error, Result};
use crate::exact::ExactRat;
use crate::genfun::{
    all_ones_gf, all_ones_part, catalan_gf, closed_form_gf, three_root_shape_check, bounce_path_check,
    matches_counts, recursion_gf, sqrt_one_minus_4t,
};
use crate::identities::{
    closed_form_s, s5_hypergeom_check, partial_row_sweep, four_term_check_degrees, sigma_decomposition_check, sum_s,
    row_hypergeom_check, row_hypergeom_sweep,
};
use crate::oracle::{dyck_valley_total, permutation_model_count, Census, PERMUTATION_MODEL_MAX_EDGES};
use crate::recursion::Recursions;
use crate::series::TruncSeries;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: &str, checked: usize, mut failures: Vec<String>) -> Self {
        failures.sort();
        Check { name: name.to_string(), passed: failures.is_empty(), checked, failures }
    }

    fn single(name: &str, ok: bool, what: impl Into<String>) -> Self {
        Self::new(name, 1, if ok { Vec::new() } else { vec![what.into()] })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        Report { suite: suite.name().to_string(), passed: checks.iter().all(|c| c.passed), checks }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// Summary counts per check, plus one line per failing cell.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "ok" } else { "FAILED" };
            let _ = writeln!(out, "{}: {status} ({} checked, {} failed)", c.name, c.checked, c.failures.len());
            for f in &c.failures {
                let _ = writeln!(out, "  {f}");
            }
        }
        let _ = writeln!(out, "{}: {}", self.suite, if self.passed { "pass" } else { "FAIL" });
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Recursions,
    Oracle,
    Series,
    Identities,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Recursions => "recursions",
            Suite::Oracle => "oracle",
            Suite::Series => "series",
            Suite::Identities => "identities",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::Recursions, Suite::Oracle, Suite::Series, Suite::Identities, Suite::All]
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::parse(s, "expected recursions, oracle, series, identities or all"))
    }
}

/// Grid sizes. The defaults are the full acceptance grids.
#[derive(Debug, Clone)]
pub struct Grids {
    pub oracle_edges: usize,
    /// Larger edge bound for specs with at most one fixed degree.
    pub oracle_edges_one_degree: usize,
    pub recursion_edges: usize,
    pub recursion_roots: usize,
    pub permutation_edges: usize,
    pub permutation_roots: usize,
    pub valley_edges: usize,
    pub order: usize,
    pub budget: u128,
}

impl Default for Grids {
    fn default() -> Self {
        Grids {
            oracle_edges: 7,
            oracle_edges_one_degree: 9,
            recursion_edges: 9,
            recursion_roots: 5,
            permutation_edges: PERMUTATION_MODEL_MAX_EDGES,
            permutation_roots: 3,
            valley_edges: 9,
            order: crate::genfun::DEFAULT_ORDER,
            budget: crate::oracle::DEFAULT_BUDGET,
        }
    }
}

/// Degree tuples of length `len` for `e` edges. Every entry runs over
/// `1..=e`; only prefixes that still pass the prefix-sum bound are
/// extended, so the result holds all admissible tuples and the
/// inadmissible ones one step past an admissible prefix.
pub fn degree_tuples(e: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(e: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for d in 1..=e {
            cur.push(d);
            let k = cur.len();
            let prefix_ok = cur.iter().sum::<usize>() < e + k;
            if prefix_ok || cur.len() == len {
                go(e, len, cur, out);
            }
            cur.pop();
        }
    }
    go(e, len, &mut cur, &mut out);
    out
}

/// All specs (valid or not) with `e` edges whose number of fixed degrees
/// is at most `max_fixed`.
fn specs_for(e: usize, max_fixed: usize) -> Vec<DegreeSpec> {
    let mut out = Vec::new();
    for n in 1..=e + 1 {
        for s in 0..=n.min(max_fixed) {
            for d in degree_tuples(e, s) {
                out.push(DegreeSpec::new(n, e, d).expect("positive degrees"));
            }
        }
    }
    if e == 0 {
        out.push(DegreeSpec::new(1, 0, vec![0]).expect("single vertex"));
    }
    out
}

/// Oracle against the closed forms: equal on valid specs, both zero on
/// invalid ones; partial counts equal the sum over the next degree.
pub fn check_oracle(grids: &Grids) -> Result<Check> {
    let edges: Vec<usize> = (0..=grids.oracle_edges_one_degree).collect();
    let per_e: Vec<(usize, Vec<String>)> = edges
        .into_par_iter()
        .map(|e| {
            let census = Census::build(e, grids.budget)?;
            let max_fixed = if e <= grids.oracle_edges { usize::MAX } else { 1 };
            let specs = specs_for(e, max_fixed);
            let mut failures = Vec::new();
            for spec in &specs {
                let oracle = census.count(spec);
                let closed = count(spec);
                if spec.is_valid() {
                    if oracle != closed {
                        failures.push(format!("{spec}: oracle {oracle}, closed form {closed}"));
                    }
                    if !spec.is_full() {
                        let d_max = max_degree(spec)?;
                        let split: crate::ExactInt = (0..=d_max)
                            .filter_map(|d| spec.with_degree(d).ok())
                            .filter(|s| s.is_valid())
                            .map(|s| count(&s))
                            .sum();
                        if count_partial(spec) != split {
                            failures.push(format!("{spec}: partial {} but next-degree split {split}", count_partial(spec)));
                        }
                    }
                    if spec.constrained() == 0 && count_total(spec.n_roots(), e) != oracle {
                        failures.push(format!("{spec}: total {} vs oracle {oracle}", count_total(spec.n_roots(), e)));
                    }
                } else if !oracle.is_zero() || !closed.is_zero() {
                    failures.push(format!("{spec} (invalid): oracle {oracle}, closed form {closed}"));
                }
            }
            Ok((specs.len(), failures))
        })
        .collect::<Result<_>>()?;
    let checked = per_e.iter().map(|(n, _)| n).sum();
    Ok(Check::new("oracle equals closed form", checked, per_e.into_iter().flat_map(|(_, f)| f).collect()))
}

/// Both recursions against the closed form on full specs.
pub fn check_recursions(grids: &Grids) -> Check {
    let engines = Recursions::new();
    let mut cells = Vec::new();
    for e in 0..=grids.recursion_edges {
        for n in 1..=grids.recursion_roots.min(e + 1) {
            for d in degree_tuples(e, n) {
                cells.push(DegreeSpec::full(n, e, d).expect("positive degrees"));
            }
        }
    }
    cells.push(DegreeSpec::full(1, 0, vec![0]).expect("single vertex"));
    let failures: Vec<String> = cells
        .par_iter()
        .filter_map(|spec| {
            let closed = count(spec);
            let (c, d) = (engines.contraction(spec), engines.deletion(spec));
            (c != closed || d != closed).then(|| format!("{spec}: contraction {c}, deletion {d}, closed form {closed}"))
        })
        .collect();
    Check::new("recursions equal closed form", cells.len(), failures)
}

/// Permutation-pair model against the oracle on totals.
pub fn check_permutation_model(grids: &Grids) -> Result<Check> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for e in 0..=grids.permutation_edges {
        let census = Census::build(e, grids.budget)?;
        for n in 1..=grids.permutation_roots.min(e + 1) {
            let model = permutation_model_count(n, e)?;
            let oracle = census.count(&DegreeSpec::total(n, e)?);
            checked += 1;
            if model != oracle {
                failures.push(format!("N={n} e={e}: permutation model {model}, oracle {oracle}"));
            }
        }
    }
    Ok(Check::new("permutation model equals oracle", checked, failures))
}

/// Valleys over Dyck paths of semilength `e + 1` against `T_2(e)`.
pub fn check_valleys(grids: &Grids) -> Result<Check> {
    let mut failures = Vec::new();
    for e in 1..=grids.valley_edges {
        let valleys = dyck_valley_total(e, grids.budget)?;
        let two_rooted = count_total(2, e);
        if valleys != two_rooted {
            failures.push(format!("e={e}: {valleys} valleys, T_2 = {two_rooted}"));
        }
    }
    if grids.valley_edges >= 2 && dyck_valley_total(2, grids.budget)? != 5u32.into() {
        failures.push("e=2: expected five valleys".to_string());
    }
    Ok(Check::new("dyck valleys equal two-rooted totals", grids.valley_edges, failures))
}

fn count_fn(n: usize) -> impl Fn(usize, &[usize]) -> crate::ExactInt {
    move |e, d| match DegreeSpec::full(n, e, d.to_vec()) {
        Ok(spec) => count(&spec),
        Err(_) => crate::ExactInt::zero(),
    }
}

pub fn check_series(order: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let t = TruncSeries::t(order, 0);
    let one = TruncSeries::one(order, 0);
    let c = catalan_gf(order, 0)?;
    let y = sqrt_one_minus_4t(order, 0);
    let ct_rel = c == one.add(&t.mul(&c).mul(&c)) && c.mul(&t).scale(&ExactRat::from_integer(2.into())) == one.sub(&y);
    checks.push(Check::single("catalan relations", ct_rel, "C = 1 + tC^2 or 2tC = 1 - y fails"));

    let g1 = closed_form_gf(1, order)?;
    let at_one = g1.set_var_one(0);
    let g1_rel = g1 == TruncSeries::one(order, 1).add(&g1.mul(&at_one).mul_monomial(1, &[1], &ExactRat::from_integer(1.into())))
        && at_one == catalan_gf(order, 1)?;
    checks.push(Check::single("one-root functional equation", g1_rel, "G1 = 1 + t x G1 C fails"));

    let closed: Vec<TruncSeries> = (1..=3).map(|n| closed_form_gf(n, order)).collect::<Result<_>>()?;
    let recursive: Vec<TruncSeries> = (2..=3).map(|n| recursion_gf(n, order)).collect::<Result<_>>()?;
    let mut failures = Vec::new();
    for (i, g) in recursive.iter().enumerate() {
        if *g != closed[i + 1] {
            failures.push(format!("N={}: recursive series differs from closed form", i + 2));
        }
    }
    checks.push(Check::new("recursive series equal closed forms", 2, failures));

    let failures: Vec<String> = closed
        .iter()
        .enumerate()
        .filter(|(i, g)| !matches_counts(g, count_fn(i + 1)))
        .map(|(i, _)| format!("N={}: a coefficient differs from the count", i + 1))
        .collect();
    checks.push(Check::new("series coefficients equal counts", 3, failures));

    let mut failures = Vec::new();
    for n in 2..=3usize {
        let g = all_ones_gf(n, order)?;
        if all_ones_part(&closed[n - 1]) != g {
            failures.push(format!("N={n}: all-leaf closed form differs from the series"));
        }
        for e in 0..=order {
            let want = count_fn(n)(e, &vec![1; n]);
            if g.coeff(e, &[]) != ExactRat::from_integer(want.clone()) {
                failures.push(format!("N={n} e={e}: all-leaf coefficient {} vs count {want}", g.coeff(e, &[])));
            }
        }
    }
    checks.push(Check::new("all-leaf series", 2, failures));

    checks.push(Check::single("bounce-path relation", bounce_path_check(order)?, "G1 residual is nonzero"));

    let mut failures = Vec::new();
    if !three_root_shape_check(&closed[2])? {
        failures.push("closed-form G3 fails the shape check".to_string());
    }
    if !three_root_shape_check(&recursive[1])? {
        failures.push("recursive G3 fails the shape check".to_string());
    }
    checks.push(Check::new("three-root shape", 2, failures));
    Ok(checks)
}

/// Closed forms of the binomial sums over `n <= n_max`, `0 <= r, s <= 15`.
pub fn check_sums(n_max: i64) -> Check {
    let mut cells: Vec<(u8, Vec<i64>)> = Vec::new();
    for n in 0..=n_max {
        for r in 0..=15 {
            for which in [3, 4] {
                cells.push((which, vec![n, r]));
            }
            for s in 0..=15 {
                for which in [1, 2] {
                    cells.push((which, vec![n, r, s]));
                }
                for t in 1..=3 {
                    cells.push((6, vec![n, r, s, t]));
                }
            }
        }
    }
    let failures: Vec<String> = cells
        .par_iter()
        .filter_map(|(which, args)| match (sum_s(*which, args), closed_form_s(*which, args)) {
            (Ok(a), Ok(b)) if a == b => None,
            (a, b) => Some(format!("S{which}{args:?}: sum {a:?}, closed form {b:?}")),
        })
        .collect();
    Check::new("binomial sums equal closed forms", cells.len(), failures)
}

/// Degree triples `d1 >= 2`, `d2, d3 >= 1` admissible for three roots.
fn three_root_cells(e_max: i64) -> Vec<(i64, i64, i64, i64)> {
    let mut cells = Vec::new();
    for e in 2..=e_max {
        for d1 in 2..=e {
            for d2 in 1..=e {
                for d3 in 1..=e {
                    let spec = DegreeSpec::full(3, e as usize, vec![d1 as usize, d2 as usize, d3 as usize]);
                    if spec.is_ok_and(|s| s.is_valid()) {
                        cells.push((e, d1, d2, d3));
                    }
                }
            }
        }
    }
    cells
}

pub fn check_sigma(e_max: i64) -> Check {
    let cells = three_root_cells(e_max);
    let failures: Vec<String> = cells
        .par_iter()
        .filter_map(|&(e, d1, d2, d3)| match sigma_decomposition_check(e, d1, d2, d3) {
            Ok(rep) if rep.ok => None,
            Ok(rep) => Some(format!("e={e} d={d1},{d2},{d3}: {}", serde_json::to_string(&rep).unwrap_or_default())),
            Err(err) => Some(format!("e={e} d={d1},{d2},{d3}: {err}")),
        })
        .collect();
    Check::new("deletion terms equal binomial sums", cells.len(), failures)
}

/// The four-term `S5` relation wherever its induced triples are
/// non-negative.
pub fn check_four_term(e_max: i64) -> Check {
    let cells: Vec<(i64, i64, i64, i64)> = (2..=e_max)
        .flat_map(|e| (2..=e).flat_map(move |d1| (1..=e).flat_map(move |d2| (1..=e).map(move |d3| (e, d1, d2, d3)))))
        .collect();
    let results: Vec<Option<String>> = cells
        .par_iter()
        .filter_map(|&(e, d1, d2, d3)| match four_term_check_degrees(e, d1, d2, d3) {
            Ok(true) => Some(None),
            Ok(false) => Some(Some(format!("e={e} d={d1},{d2},{d3}: four-term relation fails"))),
            Err(_) => None,
        })
        .collect();
    let checked = results.len();
    Check::new("four-term S5 relation", checked, results.into_iter().flatten().collect())
}

pub fn check_partial_row(n_max: i64) -> Check {
    let sweep = partial_row_sweep(n_max, -10..=15, -10..=15);
    let failures = sweep
        .failures
        .iter()
        .map(|r| format!("{}: S5 {}, even steps {}, partial row {}", r.triple, r.lhs, r.rhs_even_steps, r.rhs_partial_row))
        .collect();
    Check::new("S5 partial-row identity", sweep.checked, failures)
}

pub fn check_row_hypergeom(n_max: i64, m_max: i64) -> Result<Check> {
    let sweep = row_hypergeom_sweep(n_max, m_max);
    let mut failures: Vec<String> = sweep
        .failures
        .iter()
        .map(|r| format!("{}: row sum {}, hypergeometric {}", r.triple, r.row_sum, r.hypergeometric))
        .collect();
    for (n, want) in [(1, "4"), (2, "16")] {
        let rec = row_hypergeom_check(n, 0, 0)?;
        if !rec.holds || rec.row_sum != want {
            failures.push(format!("worked cell n={n}: expected {want}, got {}", rec.row_sum));
        }
    }
    Ok(Check::new("partial-row hypergeometric form", sweep.checked + 2, failures))
}

/// The `4F3` form of `S5`; cells where a lower parameter vanishes first
/// are counted but not failed.
pub fn check_s5_hypergeom(n_max: i64, rs_max: i64) -> Result<Check> {
    let cells: Vec<(i64, i64, i64)> =
        (0..=n_max).flat_map(|n| (0..=rs_max).flat_map(move |r| (0..=rs_max).map(move |s| (n, r, s)))).collect();
    let records: Vec<_> = cells.par_iter().map(|&(n, r, s)| s5_hypergeom_check(n, r, s)).collect::<Result<_>>()?;
    let failures = records
        .iter()
        .filter(|rec| rec.undefined.is_none() && !rec.holds())
        .map(|rec| format!("{}: S5 {}, 4F3 form {:?}, 3F2 form {}", rec.triple, rec.s5, rec.hypergeometric, rec.partial_row_form))
        .collect();
    Ok(Check::new("S5 four-parameter hypergeometric form", records.len(), failures))
}

pub fn check_identities() -> Result<Vec<Check>> {
    Ok(vec![
        check_sums(30),
        check_sigma(15),
        check_four_term(20),
        check_partial_row(40),
        check_row_hypergeom(40, 30)?,
        check_s5_hypergeom(12, 8)?,
    ])
}

pub fn run_suite(suite: Suite, grids: &Grids) -> Result<Report> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Recursions | Suite::All) {
        checks.push(check_recursions(grids));
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        checks.push(check_oracle(grids)?);
        checks.push(check_permutation_model(grids)?);
        checks.push(check_valleys(grids)?);
    }
    if matches!(suite, Suite::Series | Suite::All) {
        checks.extend(check_series(grids.order)?);
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        checks.extend(check_identities()?);
    }
    Ok(Report::new(suite, checks))
}
