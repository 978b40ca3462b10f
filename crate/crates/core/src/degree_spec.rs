//! Counting queries `(N, e, d_1..d_s)` and their admissibility conditions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A family of `N`-rooted plane trees with `e` edges whose first `s` root
/// vertices `v_1..v_s` have the listed degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSpec {
    n_roots: usize,
    edges: usize,
    degrees: Vec<usize>,
}

/// One clause of the admissibility conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// `N >= 1` and `e >= N - 1`.
    RootCount,
    /// `0 < d_i <= e`, except the single-vertex tree `N = 1, e = d_1 = 0`.
    DegreeRange,
    /// `d_1 + .. + d_k <= e + k - 1` for every prefix.
    PrefixSum,
    /// A maximally rooted family (`s = N = e + 1`) has `d_1 + .. + d_N = 2e`.
    MaximalSum,
    /// At most `e` leaves among the listed degrees (at most 2 when `e = 1`).
    LeafCount,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::RootCount => "root-count",
            Rule::DegreeRange => "degree-range",
            Rule::PrefixSum => "prefix-sum",
            Rule::MaximalSum => "maximal-sum",
            Rule::LeafCount => "leaf-count",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub valid: bool,
    pub violated_rules: Vec<Rule>,
}

impl ValidityReport {
    fn from_violations(violated_rules: Vec<Rule>) -> Self {
        ValidityReport {
            valid: violated_rules.is_empty(),
            violated_rules,
        }
    }
}

impl DegreeSpec {
    /// Builds a spec, rejecting only structurally malformed input: `N = 0`,
    /// more degrees than roots, or a zero degree outside `(1, 0, (0))`.
    pub fn new(n_roots: usize, edges: usize, degrees: Vec<usize>) -> Result<Self> {
        if n_roots == 0 {
            return Err(Error::domain("a spec needs at least one root"));
        }
        if degrees.len() > n_roots {
            return Err(Error::domain(format!(
                "{} degrees listed for {} roots",
                degrees.len(),
                n_roots
            )));
        }
        let single_vertex = n_roots == 1 && edges == 0 && degrees == [0];
        if !single_vertex && degrees.contains(&0) {
            return Err(Error::domain(
                "degree 0 is only allowed for the single-vertex tree N=1 e=0 d=0",
            ));
        }
        Ok(DegreeSpec {
            n_roots,
            edges,
            degrees,
        })
    }

    /// All degrees constrained.
    pub fn full(n_roots: usize, edges: usize, degrees: Vec<usize>) -> Result<Self> {
        if degrees.len() != n_roots {
            return Err(Error::domain(format!(
                "a full spec needs {} degrees, got {}",
                n_roots,
                degrees.len()
            )));
        }
        Self::new(n_roots, edges, degrees)
    }

    /// No degree constrained.
    pub fn total(n_roots: usize, edges: usize) -> Result<Self> {
        Self::new(n_roots, edges, Vec::new())
    }

    pub fn n_roots(&self) -> usize {
        self.n_roots
    }

    pub fn edges(&self) -> usize {
        self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of constrained degrees `s`.
    pub fn constrained(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_full(&self) -> bool {
        self.degrees.len() == self.n_roots
    }

    /// Sorted copy of the degrees; counts are invariant under permuting them.
    pub fn canonical_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }

    pub fn with_degree(&self, d: usize) -> Result<Self> {
        let mut degrees = self.degrees.clone();
        degrees.push(d);
        Self::new(self.n_roots, self.edges, degrees)
    }

    pub fn validate(&self) -> ValidityReport {
        validate(self)
    }

    pub fn is_valid(&self) -> bool {
        violations(self.n_roots as i64, self.edges as i64, &self.signed_degrees()).is_empty()
    }

    pub(crate) fn signed_degrees(&self) -> Vec<i64> {
        self.degrees.iter().map(|&d| d as i64).collect()
    }
}

impl fmt::Display for DegreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} e={}", self.n_roots, self.edges)?;
        if !self.degrees.is_empty() {
            let d: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
            write!(f, " d={}", d.join(","))?;
        }
        Ok(())
    }
}

/// Parses the textual form `N=3 e=6 d=3,1,4` (the `d=` part is optional,
/// fields may come in any order).
impl FromStr for DegreeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut e = None;
        let mut d = None;
        for field in s.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::parse(s, format!("expected key=value, got {field:?}")))?;
            let slot = match key {
                "N" | "n" => &mut n,
                "e" | "E" => &mut e,
                "d" | "D" => {
                    if d.is_some() {
                        return Err(Error::parse(s, "d given twice"));
                    }
                    let parsed = if value.is_empty() {
                        Vec::new()
                    } else {
                        value
                            .split(',')
                            .map(|x| {
                                x.trim()
                                    .parse::<usize>()
                                    .map_err(|_| Error::parse(s, format!("bad degree {x:?}")))
                            })
                            .collect::<Result<Vec<_>>>()?
                    };
                    d = Some(parsed);
                    continue;
                }
                other => return Err(Error::parse(s, format!("unknown key {other:?}"))),
            };
            if slot.is_some() {
                return Err(Error::parse(s, format!("{key} given twice")));
            }
            *slot = Some(
                value
                    .parse::<usize>()
                    .map_err(|_| Error::parse(s, format!("bad value for {key}: {value:?}")))?,
            );
        }
        let n = n.ok_or_else(|| Error::parse(s, "missing N="))?;
        let e = e.ok_or_else(|| Error::parse(s, "missing e="))?;
        DegreeSpec::new(n, e, d.unwrap_or_default()).map_err(|err| Error::parse(s, err.to_string()))
    }
}

pub fn validate(spec: &DegreeSpec) -> ValidityReport {
    ValidityReport::from_violations(violations(
        spec.n_roots as i64,
        spec.edges as i64,
        &spec.signed_degrees(),
    ))
}

/// The admissibility clauses on raw integers, in order. Recursion engines
/// call this with degrees that may be zero or negative.
pub(crate) fn violations(n: i64, e: i64, degrees: &[i64]) -> Vec<Rule> {
    let mut out = Vec::new();
    if n < 1 || e < n - 1 || degrees.len() as i64 > n {
        out.push(Rule::RootCount);
    }
    let single_vertex = n == 1 && e == 0 && degrees == [0];
    if !single_vertex && degrees.iter().any(|&d| d <= 0 || d > e) {
        out.push(Rule::DegreeRange);
    }
    let mut prefix = 0;
    for (i, &d) in degrees.iter().enumerate() {
        prefix += d;
        let k = i as i64 + 1;
        if prefix > e + k - 1 {
            out.push(Rule::PrefixSum);
            break;
        }
    }
    if degrees.len() as i64 == n && n == e + 1 && !single_vertex && prefix != 2 * e {
        out.push(Rule::MaximalSum);
    }
    let leaves = degrees.iter().filter(|&&d| d == 1).count() as i64;
    let leaf_cap = if e >= 2 { e } else { 2 };
    if e >= 1 && leaves > leaf_cap {
        out.push(Rule::LeafCount);
    }
    out
}

pub(crate) fn is_admissible(n: i64, e: i64, degrees: &[i64]) -> bool {
    violations(n, e, degrees).is_empty()
}

/// Largest admissible degree `D_k = e + k - 1 - (d_1 + .. + d_{k-1})` of the
/// next root vertex `v_k`, `k = s + 1`, given the degrees fixed so far.
pub fn max_degree(spec: &DegreeSpec) -> Result<usize> {
    let k = spec.constrained() + 1;
    if k > spec.n_roots {
        return Err(Error::domain(format!("all {} degrees of {spec} are already fixed", spec.n_roots)));
    }
    let report = spec.validate();
    if !report.valid {
        return Err(Error::domain(format!(
            "fixed prefix of {spec} is inadmissible ({})",
            report
                .violated_rules
                .iter()
                .map(|r| r.id())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    Ok(max_degree_raw(spec.edges as i64, &spec.signed_degrees()) as usize)
}

pub(crate) fn max_degree_raw(e: i64, prefix: &[i64]) -> i64 {
    let k = prefix.len() as i64 + 1;
    e + k - 1 - prefix.iter().sum::<i64>()
}
