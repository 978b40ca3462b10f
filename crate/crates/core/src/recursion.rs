//! Two independent recursive evaluations of `T_N(e; d_1..d_N)`.
//!
//! Neither engine calls the closed form. Both reduce the edge count by one
//! per step and bottom out at the single-vertex tree `T_1(0; 0) = 1`;
//! inadmissible sub-terms contribute zero, so the sums below are written
//! over all candidate parameters without guards.
//!
//! * **contraction** contracts the edge carrying the root of `v_N`;
//! * **deletion** removes the edge carrying the first root and splits the
//!   remaining root labels between the two resulting trees.
//!
//! Terms in which one root vertex has an unconstrained degree are expanded
//! into sums of fully constrained counts, each degree running up to its
//! largest admissible value.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::degree_spec::{is_admissible, max_degree_raw, DegreeSpec};
use crate::exact::ExactInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Engine {
    Contraction,
    Deletion,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MemoKey {
    pub engine: Engine,
    pub n_roots: i64,
    pub edges: i64,
    /// Sorted: counts are symmetric in the degrees.
    pub degrees: Vec<i64>,
    /// Number of constrained degrees.
    pub constrained: usize,
}

impl MemoKey {
    fn new(engine: Engine, n_roots: i64, edges: i64, degrees: &[i64]) -> Self {
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable();
        MemoKey {
            engine,
            n_roots,
            edges,
            constrained: sorted.len(),
            degrees: sorted,
        }
    }
}

/// Shared memo for both engines. Keys carry the engine tag, so one engine
/// never reads values produced by the other. Concurrent writers of the same
/// key store identical values; the last write wins.
#[derive(Debug, Default)]
pub struct MemoTable {
    map: RwLock<HashMap<MemoKey, ExactInt>>,
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &MemoKey) -> Option<ExactInt> {
        self.map.read().expect("memo poisoned").get(key).cloned()
    }

    pub fn insert(&self, key: MemoKey, value: ExactInt) {
        self.map.write().expect("memo poisoned").insert(key, value);
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn entries_for(&self, engine: Engine) -> usize {
        self.map
            .read()
            .expect("memo poisoned")
            .keys()
            .filter(|k| k.engine == engine)
            .count()
    }

    fn cached(&self, key: MemoKey, compute: impl FnOnce() -> ExactInt) -> ExactInt {
        if let Some(v) = self.get(&key) {
            return v;
        }
        let v = compute();
        self.insert(key, v.clone());
        v
    }
}

/// One term of the deletion recursion at fixed `(e_1, e_2)`: root labels
/// (0-based indices into `d_2..d_N`) going to the tree of `v_1` (`left`) or
/// to the other tree (`right`), and, in the second family of terms, the
/// root `v_r` at the far end of the deleted edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTerm {
    pub partner: Option<usize>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// All split terms for `N` roots: `2^(N-1)` ordered splits of `{2..N}`,
/// then `2^(N-2)` splits of `{2..N} \ {r}` for each `r`. Labels are
/// distinct even when their degrees coincide.
pub fn split_terms(n_roots: usize) -> Vec<SplitTerm> {
    assert!(n_roots >= 1);
    let labels: Vec<usize> = (0..n_roots - 1).collect();
    let mut out = Vec::new();
    push_splits(&labels, None, &mut out);
    for &r in &labels {
        let rest: Vec<usize> = labels.iter().copied().filter(|&l| l != r).collect();
        push_splits(&rest, Some(r), &mut out);
    }
    out
}

fn push_splits(labels: &[usize], partner: Option<usize>, out: &mut Vec<SplitTerm>) {
    for mask in 0u64..(1u64 << labels.len()) {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (bit, &label) in labels.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                left.push(label);
            } else {
                right.push(label);
            }
        }
        out.push(SplitTerm {
            partner,
            left,
            right,
        });
    }
}

/// Evaluator bound to a memo table.
#[derive(Debug, Default)]
pub struct Recursions {
    memo: MemoTable,
}

impl Recursions {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo(&self) -> &MemoTable {
        &self.memo
    }

    pub fn contraction(&self, spec: &DegreeSpec) -> ExactInt {
        self.count(Engine::Contraction, spec)
    }

    pub fn deletion(&self, spec: &DegreeSpec) -> ExactInt {
        self.count(Engine::Deletion, spec)
    }

    /// Any spec, full or partial; partial specs are expanded over the free
    /// degrees with the chosen engine.
    pub fn count(&self, engine: Engine, spec: &DegreeSpec) -> ExactInt {
        self.partial(
            engine,
            spec.n_roots() as i64,
            spec.edges() as i64,
            &spec.signed_degrees(),
        )
    }

    fn full(&self, engine: Engine, n: i64, e: i64, degrees: &[i64]) -> ExactInt {
        debug_assert_eq!(degrees.len() as i64, n);
        if !is_admissible(n, e, degrees) {
            return ExactInt::zero();
        }
        if n == 1 && e == 0 {
            return ExactInt::one();
        }
        match engine {
            Engine::Contraction if n == 1 && e == 1 => ExactInt::one(),
            Engine::Contraction => self.memo.cached(MemoKey::new(engine, n, e, degrees), || {
                self.contract(n, e, degrees)
            }),
            Engine::Deletion => self
                .memo
                .cached(MemoKey::new(engine, n, e, degrees), || self.delete(n, e, degrees)),
        }
    }

    /// `T_N(e; prefix)` as the nested sum of full counts over the remaining
    /// degrees.
    fn partial(&self, engine: Engine, n: i64, e: i64, prefix: &[i64]) -> ExactInt {
        if prefix.len() as i64 == n {
            return self.full(engine, n, e, prefix);
        }
        if !is_admissible(n, e, prefix) {
            return ExactInt::zero();
        }
        if e == 0 {
            // the lone vertex of the one-rooted tree has degree 0
            return if n == 1 && prefix.is_empty() {
                self.full(engine, 1, 0, &[0])
            } else {
                ExactInt::zero()
            };
        }
        self.memo.cached(MemoKey::new(engine, n, e, prefix), || {
            let top = max_degree_raw(e, prefix);
            let mut extended = prefix.to_vec();
            extended.push(0);
            let mut acc = ExactInt::zero();
            for d in 1..=top {
                *extended.last_mut().expect("pushed") = d;
                acc += self.partial(engine, n, e, &extended);
            }
            acc
        })
    }

    fn contract(&self, n: i64, e: i64, degrees: &[i64]) -> ExactInt {
        let (rest, last) = degrees.split_at(degrees.len() - 1);
        let d_n = last[0];
        let mut acc = ExactInt::zero();

        // v_N joined to another root v_i: merged vertex of degree d_i + d_N - 2
        let mut merged = rest.to_vec();
        for i in 0..rest.len() {
            merged[i] = rest[i] + d_n - 2;
            acc += self.full(Engine::Contraction, n - 1, e - 1, &merged) * rest[i];
            merged[i] = rest[i];
        }

        // v_N joined to a non-root vertex: every merged degree >= d_N - 1
        acc += self.partial(Engine::Contraction, n, e - 1, rest);
        let mut extended = rest.to_vec();
        extended.push(0);
        for d in 1..=d_n - 2 {
            *extended.last_mut().expect("pushed") = d;
            acc -= self.full(Engine::Contraction, n, e - 1, &extended);
        }
        acc
    }

    fn delete(&self, n: i64, e: i64, degrees: &[i64]) -> ExactInt {
        let d_1 = degrees[0];
        let others = &degrees[1..];
        let terms = split_terms(n as usize);
        let mut acc = ExactInt::zero();
        let mut left = Vec::with_capacity(n as usize);
        let mut right = Vec::with_capacity(n as usize);
        for e_1 in 0..e {
            let e_2 = e - 1 - e_1;
            for term in &terms {
                left.clear();
                left.push(d_1 - 1);
                left.extend(term.left.iter().map(|&l| others[l]));
                let left_count = self.full(Engine::Deletion, left.len() as i64, e_1, &left);
                if left_count.is_zero() {
                    continue;
                }
                right.clear();
                match term.partner {
                    None => {
                        // the far end is a non-root vertex of unconstrained degree
                        right.extend(term.right.iter().map(|&l| others[l]));
                        let right_count =
                            self.partial(Engine::Deletion, right.len() as i64 + 1, e_2, &right);
                        acc += left_count * right_count;
                    }
                    Some(r) => {
                        let d_r = others[r];
                        right.push(d_r - 1);
                        right.extend(term.right.iter().map(|&l| others[l]));
                        let right_count =
                            self.full(Engine::Deletion, right.len() as i64, e_2, &right);
                        acc += left_count * right_count * d_r;
                    }
                }
            }
        }
        acc
    }
}

/// Contraction recursion with a fresh memo.
pub fn count_by_contraction(spec: &DegreeSpec) -> ExactInt {
    Recursions::new().contraction(spec)
}

/// Deletion recursion with a fresh memo.
pub fn count_by_deletion(spec: &DegreeSpec) -> ExactInt {
    Recursions::new().deletion(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::count_full;

    fn full(n: usize, e: usize, d: &[usize]) -> DegreeSpec {
        DegreeSpec::full(n, e, d.to_vec()).unwrap()
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(count_by_contraction(&full(2, 1, &[1, 1])), ExactInt::from(1));
        assert_eq!(count_by_contraction(&full(3, 3, &[1, 1, 1])), ExactInt::from(2));
        assert_eq!(count_by_contraction(&full(2, 5, &[2, 3])), ExactInt::from(24));
        assert_eq!(count_by_contraction(&full(1, 0, &[0])), ExactInt::from(1));
        assert_eq!(count_by_contraction(&full(2, 3, &[3, 3])), ExactInt::from(0));
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(count_by_deletion(&full(1, 3, &[2])), ExactInt::from(2));
        assert_eq!(count_by_deletion(&full(2, 4, &[2, 2])), ExactInt::from(12));
        assert_eq!(count_by_deletion(&full(3, 4, &[2, 1, 1])), ExactInt::from(18));
        assert_eq!(count_by_deletion(&full(2, 1, &[1, 1])), ExactInt::from(1));
    }

    #[test]
    fn split_term_counts() {
        for n in 1..=8usize {
            let expected = (1usize << (n - 1)) + (n - 1) * if n >= 2 { 1usize << (n - 2) } else { 0 };
            assert_eq!(split_terms(n).len(), expected, "N={n}");
        }
        let terms = split_terms(3);
        assert_eq!(terms.iter().filter(|t| t.partner.is_none()).count(), 4);
        // equal degrees at different labels are still distinct splits
        assert!(terms.contains(&SplitTerm { partner: None, left: vec![0], right: vec![1] }));
        assert!(terms.contains(&SplitTerm { partner: None, left: vec![1], right: vec![0] }));
    }

    #[test]
    fn engines_keep_separate_memo_entries() {
        let engines = Recursions::new();
        let spec = full(3, 5, &[2, 2, 2]);
        assert_eq!(engines.contraction(&spec), ExactInt::from(96));
        let after_contraction = engines.memo().entries_for(Engine::Contraction);
        assert!(after_contraction > 0);
        assert_eq!(engines.memo().entries_for(Engine::Deletion), 0);
        assert_eq!(engines.deletion(&spec), ExactInt::from(96));
        assert!(engines.memo().entries_for(Engine::Deletion) > 0);
        assert_eq!(engines.memo().entries_for(Engine::Contraction), after_contraction);
    }

    #[test]
    fn partial_specs_through_engines() {
        let engines = Recursions::new();
        let spec = DegreeSpec::new(2, 4, vec![1]).unwrap();
        assert_eq!(engines.count(Engine::Contraction, &spec), ExactInt::from(35));
        assert_eq!(engines.count(Engine::Deletion, &spec), ExactInt::from(35));
        let spec = DegreeSpec::total(3, 4).unwrap();
        assert_eq!(engines.count(Engine::Deletion, &spec), ExactInt::from(360));
    }

    #[test]
    fn engines_agree_with_closed_form_small_grid() {
        let engines = Recursions::new();
        for e in 0..=6usize {
            for n in 1..=4usize {
                let mut d = vec![1usize; n];
                loop {
                    let spec = full(n, e, &d);
                    let expected = count_full(&spec);
                    assert_eq!(engines.contraction(&spec), expected, "{spec}");
                    assert_eq!(engines.deletion(&spec), expected, "{spec}");
                    let mut i = 0;
                    while i < n && d[i] >= e.max(1) {
                        d[i] = 1;
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                    d[i] += 1;
                }
            }
        }
    }
}
