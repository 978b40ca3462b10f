//! Sample tables of counts and integer sequences in OEIS b-file form.
//!
//! A cell is `-` when the parameters are inadmissible (the count is zero
//! for structural reasons); the row `d = 0` of the Catalan triangle is the
//! exception and lists `T_1(e; 0) = [e = 0]` explicitly.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::closed_form::{count, count_total};
use crate::degree_spec::DegreeSpec;
use crate::error::{Error, Result};
use crate::exact::{factorial, ExactInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// `T_N(e)` by number of roots and edges.
    Example51,
    /// `T_1(e; d)`, the Catalan triangle.
    Example52,
    /// `T_2(e; d1, d2)` for a few degree pairs.
    Example53,
    /// `T_N(e; 1, .., 1)`.
    Example54,
}

impl TableKind {
    pub const ALL: [TableKind; 4] = [Self::Example51, Self::Example52, Self::Example53, Self::Example54];

    pub fn name(self) -> &'static str {
        match self {
            Self::Example51 => "example51",
            Self::Example52 => "example52",
            Self::Example53 => "example53",
            Self::Example54 => "example54",
        }
    }

    fn row_label(self) -> &'static str {
        match self {
            Self::Example51 | Self::Example54 => "N",
            Self::Example52 => "d",
            Self::Example53 => "d1:d2",
        }
    }

    /// Default `(last row, first e, last e)`.
    pub fn default_ranges(self) -> TableRanges {
        match self {
            Self::Example51 => TableRanges { rows: 7, e_min: 0, e_max: 9 },
            Self::Example52 => TableRanges { rows: 7, e_min: 0, e_max: 11 },
            Self::Example53 => TableRanges { rows: 8, e_min: 1, e_max: 10 },
            Self::Example54 => TableRanges { rows: 8, e_min: 1, e_max: 10 },
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::parse(s, "expected example51, example52, example53 or example54"))
    }
}

/// Row and column extent of a table. `rows` is the last `N` (or `d`) for
/// the tables indexed by it and the number of degree pairs for the
/// `T_2` table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRanges {
    pub rows: usize,
    pub e_min: usize,
    pub e_max: usize,
}

/// Degree pairs of the `T_2` table, in display order.
pub const DEGREE_PAIRS: [(usize, usize); 8] = [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub key: String,
    pub cells: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub kind: TableKind,
    pub row_label: String,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

fn cell(spec: Result<DegreeSpec>) -> String {
    match spec {
        Ok(spec) if spec.is_valid() => count(&spec).to_string(),
        _ => "-".to_string(),
    }
}

impl Table {
    pub fn generate(kind: TableKind) -> Self {
        Self::generate_with(kind, kind.default_ranges())
    }

    pub fn generate_with(kind: TableKind, ranges: TableRanges) -> Self {
        let es: Vec<usize> = (ranges.e_min..=ranges.e_max).collect();
        let rows = match kind {
            TableKind::Example51 => (1..=ranges.rows)
                .map(|n| Row {
                    key: n.to_string(),
                    cells: es.iter().map(|&e| cell(DegreeSpec::total(n, e))).collect(),
                })
                .collect(),
            TableKind::Example52 => (0..=ranges.rows)
                .map(|d| Row {
                    key: d.to_string(),
                    cells: es
                        .iter()
                        .map(|&e| match d {
                            0 => u8::from(e == 0).to_string(),
                            _ => cell(DegreeSpec::full(1, e, vec![d])),
                        })
                        .collect(),
                })
                .collect(),
            TableKind::Example53 => DEGREE_PAIRS
                .iter()
                .take(ranges.rows)
                .map(|&(d1, d2)| Row {
                    key: format!("{d1}:{d2}"),
                    cells: es.iter().map(|&e| cell(DegreeSpec::full(2, e, vec![d1, d2]))).collect(),
                })
                .collect(),
            TableKind::Example54 => (1..=ranges.rows)
                .map(|n| Row {
                    key: n.to_string(),
                    cells: es.iter().map(|&e| cell(DegreeSpec::full(n, e, vec![1; n]))).collect(),
                })
                .collect(),
        };
        Table {
            kind,
            row_label: kind.row_label().to_string(),
            columns: es.iter().map(|e| e.to_string()).collect(),
            rows,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.row_label);
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.key);
            for c in &row.cells {
                out.push(',');
                out.push_str(c);
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(kind: TableKind, text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::parse(text, "empty table"))?;
        let mut fields = header.split(',');
        let row_label = fields.next().unwrap_or_default().to_string();
        let columns: Vec<String> = fields.map(str::to_string).collect();
        let mut rows = Vec::new();
        for line in lines {
            let mut fields = line.split(',');
            let key = fields.next().unwrap_or_default().to_string();
            let cells: Vec<String> = fields.map(str::to_string).collect();
            if cells.len() != columns.len() {
                return Err(Error::parse(line, format!("expected {} cells", columns.len())));
            }
            rows.push(Row { key, cells });
        }
        Ok(Table { kind, row_label, columns, rows })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(text, e.to_string()))
    }

    /// Right-aligned columns for reading.
    pub fn to_text(&self) -> String {
        let mut grid = vec![std::iter::once(&self.row_label).chain(&self.columns).cloned().collect::<Vec<_>>()];
        for row in &self.rows {
            grid.push(std::iter::once(&row.key).chain(&row.cells).cloned().collect());
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|j| grid.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for r in &grid {
            let line: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Integer sequences drawn from the counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    /// `T_2(e)`, from `e = 1`.
    TwoRootedTotal,
    /// `T_3(e) / 3`, from `e = 2`.
    ThreeRootedTotalThird,
    /// `T_{e+1}(e)`, maximally rooted trees, from `e = 0`.
    MaximallyRooted,
    /// `T_2(e; 1, 1)`, from `e = 1`.
    TwoLeafRoots,
}

impl Sequence {
    pub const ALL: [Sequence; 4] = [
        Self::TwoRootedTotal,
        Self::ThreeRootedTotalThird,
        Self::MaximallyRooted,
        Self::TwoLeafRoots,
    ];

    /// The OEIS entry the sequence is compared with.
    pub fn oeis_id(self) -> &'static str {
        match self {
            Self::TwoRootedTotal => "A002054",
            Self::ThreeRootedTotalThird => "A074922",
            Self::MaximallyRooted => "A001763",
            Self::TwoLeafRoots => "A088218",
        }
    }

    /// First index of the b-file: the first admissible edge count.
    pub fn first_index(self) -> usize {
        match self {
            Self::TwoRootedTotal | Self::TwoLeafRoots => 1,
            Self::ThreeRootedTotalThird => 2,
            Self::MaximallyRooted => 0,
        }
    }

    /// OEIS index of the term with edge count `e`.
    pub fn oeis_index(self, e: usize) -> i64 {
        match self {
            // a(0) = 1, a(n) = binom(2n-1, n) lines up with e = n + 1
            Self::TwoLeafRoots => e as i64 - 1,
            _ => e as i64,
        }
    }

    /// `(e, value)` for `terms` consecutive edge counts.
    pub fn terms(self, terms: usize) -> Result<Vec<(usize, ExactInt)>> {
        let start = self.first_index();
        (start..start + terms)
            .map(|e| {
                let v = match self {
                    Self::TwoRootedTotal => count_total(2, e),
                    Self::ThreeRootedTotalThird => {
                        let total = count_total(3, e);
                        let (q, r) = total.div_rem(&ExactInt::from(3));
                        if !r.is_zero() {
                            return Err(Error::NonIntegral { index: e, value: total.to_string(), divisor: "3".into() });
                        }
                        q
                    }
                    Self::MaximallyRooted => count_total(e + 1, e),
                    Self::TwoLeafRoots => count(&DegreeSpec::full(2, e, vec![1, 1])?),
                };
                Ok((e, v))
            })
            .collect()
    }

    /// Lines `index value`, indexed by edge count.
    pub fn bfile(self, terms: usize) -> Result<String> {
        Ok(self.terms(terms)?.iter().map(|(e, v)| format!("{e} {v}\n")).collect())
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.to_ascii_uppercase();
        Self::ALL
            .into_iter()
            .find(|q| q.oeis_id() == wanted)
            .ok_or_else(|| Error::parse(s, "expected one of A002054, A074922, A001763, A088218"))
    }
}

/// Parses `index value` lines.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, ExactInt)>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut parts = line.split_whitespace();
            let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::parse(line, "expected `index value`"));
            };
            let i = i.parse().map_err(|_| Error::parse(line, "bad index"))?;
            let v = v.parse().map_err(|_| Error::parse(line, "bad value"))?;
            Ok((i, v))
        })
        .collect()
}

/// Compares generated terms with a reference b-file, matching indices
/// through [`Sequence::oeis_index`]. Returns the number of matched terms.
pub fn compare_with_reference(seq: Sequence, reference: &str, terms: usize) -> Result<usize> {
    let reference = parse_bfile(reference)?;
    let generated = seq.terms(terms)?;
    let mut matched = 0;
    for (e, v) in generated {
        let idx = seq.oeis_index(e);
        match reference.iter().find(|(i, _)| *i == idx) {
            Some((_, want)) if *want == v => matched += 1,
            Some((_, want)) => {
                return Err(Error::domain(format!("{} term {idx}: generated {v}, reference {want}", seq.oeis_id())))
            }
            None => break,
        }
    }
    Ok(matched)
}

/// `T_N(e; 1..1) / (N-1)!`, the normalization under which those rows
/// appear as triangle columns.
pub fn all_leaf_roots_normalized(n: usize, e: usize) -> Result<ExactInt> {
    let spec = DegreeSpec::full(n, e, vec![1; n])?;
    let v = count(&spec);
    let f = factorial(n - 1);
    let (q, r) = v.div_rem(&f);
    if !r.is_zero() {
        return Err(Error::NonIntegral { index: e, value: v.to_string(), divisor: f.to_string() });
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_entries() {
        let t = Table::generate(TableKind::Example51);
        assert_eq!(t.rows[6].cells[6], "1028160");
        assert_eq!(t.rows[4].cells[9], "107442720");
        assert_eq!(t.rows[1].cells[0], "-");
        let t = Table::generate(TableKind::Example54);
        assert_eq!(t.rows[7].cells[7], "5040");
        assert_eq!(t.rows[7].cells[6], "-");
    }

    #[test]
    fn csv_and_json_round_trip() {
        for kind in TableKind::ALL {
            let t = Table::generate(kind);
            let csv = t.to_csv();
            assert_eq!(Table::from_csv(kind, &csv).unwrap().to_csv(), csv);
            let json = t.to_json();
            assert_eq!(Table::from_json(&json).unwrap().to_json(), json);
        }
    }

    #[test]
    fn sequences() {
        assert_eq!(Sequence::TwoRootedTotal.bfile(3).unwrap(), "1 1\n2 5\n3 21\n");
        assert_eq!(Sequence::MaximallyRooted.bfile(4).unwrap(), "0 1\n1 1\n2 6\n3 72\n");
        let err = Sequence::ThreeRootedTotalThird.terms(3).unwrap_err();
        assert!(matches!(err, Error::NonIntegral { index: 3, .. }));
        assert_eq!("a002054".parse::<Sequence>().unwrap(), Sequence::TwoRootedTotal);
    }

    #[test]
    fn normalized_leaf_rows() {
        assert_eq!(all_leaf_roots_normalized(3, 4).unwrap(), ExactInt::from(6));
        assert_eq!(all_leaf_roots_normalized(5, 6).unwrap(), ExactInt::from(15));
    }

    #[test]
    fn bfile_parsing() {
        let parsed = parse_bfile("# header\n1 1\n2 5\n").unwrap();
        assert_eq!(parsed, vec![(1, ExactInt::from(1)), (2, ExactInt::from(5))]);
        assert!(parse_bfile("1 2 3").is_err());
    }
}
