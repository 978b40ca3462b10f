//! Brute-force counts from explicit plane trees.
//!
//! A one-rooted plane tree with `e` edges is a balanced parenthesis word of
//! length `2e`: the root half-edge sits in the corner before the first
//! symbol and children are read in counterclockwise order. Adding further
//! roots means choosing distinct non-root vertices and, at each, one of its
//! `deg` half-edges. A tree with one root has no nontrivial automorphisms,
//! so every choice gives a distinct `N`-rooted tree.
//!
//! Words are packed into a `u64`, bit `i` set for `(` at position `i`.

use std::collections::{HashMap, HashSet};
use std::io::{self, Write};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::degree_spec::DegreeSpec;
use crate::error::{Error, Result};
use crate::exact::{factorial, ExactInt};

/// Default cap on the number of trees an enumeration may visit (`C_14 < 10^6 < C_15`).
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "PLANETREES_BUDGET";

/// Largest edge count the permutation model accepts.
pub const PERMUTATION_MODEL_MAX_EDGES: usize = 4;

/// Budget from the environment, else the default.
pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// `C_e`, saturating at `u128::MAX`.
pub fn catalan(e: usize) -> u128 {
    let c = factorial(2 * e) / (factorial(e) * factorial(e + 1));
    u128::try_from(c).unwrap_or(u128::MAX)
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::Budget { needed, budget })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneRootedTree {
    pub dyck: String,
    /// Entry 0 is the root vertex.
    pub vertex_degrees: Vec<usize>,
}

impl OneRootedTree {
    pub fn from_dyck(word: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut balance = 0i64;
        if word.len() % 2 == 1 || word.len() > 64 {
            return Err(Error::parse(word, "expected an even-length word of at most 64 symbols"));
        }
        for (i, c) in word.chars().enumerate() {
            match c {
                '(' => {
                    bits |= 1 << i;
                    balance += 1;
                }
                ')' => balance -= 1,
                _ => return Err(Error::parse(word, format!("unexpected symbol {c:?}"))),
            }
            if balance < 0 {
                return Err(Error::parse(word, "unbalanced"));
            }
        }
        if balance != 0 {
            return Err(Error::parse(word, "unbalanced"));
        }
        Ok(Self::from_bits(bits, word.len() / 2))
    }

    fn from_bits(bits: u64, edges: usize) -> Self {
        OneRootedTree {
            dyck: word_string(bits, 2 * edges),
            vertex_degrees: vertex_degrees(bits, edges),
        }
    }

    pub fn edges(&self) -> usize {
        self.dyck.len() / 2
    }

    pub fn root_degree(&self) -> usize {
        self.vertex_degrees[0]
    }
}

fn word_string(bits: u64, len: usize) -> String {
    (0..len).map(|i| if bits >> i & 1 == 1 { '(' } else { ')' }).collect()
}

/// Degrees in preorder. The root's degree is its number of children; every
/// other vertex also counts the edge to its parent.
fn vertex_degrees(bits: u64, edges: usize) -> Vec<usize> {
    let mut degrees = vec![0usize; edges + 1];
    let mut stack = Vec::with_capacity(edges + 1);
    stack.push(0usize);
    let mut next = 1;
    for i in 0..2 * edges {
        if bits >> i & 1 == 1 {
            let parent = *stack.last().expect("balanced");
            degrees[parent] += 1;
            degrees[next] = 1;
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    degrees
}

/// Balanced words of semilength `e` in lexicographic order, `(` before `)`.
#[derive(Debug, Clone)]
pub struct DyckWords {
    half: usize,
    current: Option<u64>,
}

impl DyckWords {
    pub fn new(half: usize) -> Self {
        assert!(half <= 31, "semilength {half} does not fit a u64 word");
        DyckWords {
            half,
            current: Some(fill_tail(0, 0, half, half)),
        }
    }
}

/// Opens then closes from position `from`, with `opens` opens still to place.
fn fill_tail(bits: u64, from: usize, opens: usize, half: usize) -> u64 {
    let mut bits = if from >= 64 { bits } else { bits & ((1u64 << from) - 1) };
    for i in from..from + opens {
        bits |= 1 << i;
    }
    debug_assert!(from + opens <= 2 * half);
    bits
}

fn successor(bits: u64, half: usize) -> Option<u64> {
    let len = 2 * half;
    let mut balance = Vec::with_capacity(len + 1);
    let mut b = 0i64;
    for i in 0..len {
        balance.push(b);
        b += if bits >> i & 1 == 1 { 1 } else { -1 };
    }
    // rightmost '(' that can become ')' without going negative
    let mut opens_after = 0usize;
    for i in (0..len).rev() {
        if bits >> i & 1 == 1 {
            if balance[i] >= 1 {
                let cleared = bits & !(1u64 << i);
                return Some(fill_tail(cleared, i + 1, opens_after + 1, half));
            }
            opens_after += 1;
        }
    }
    None
}

impl Iterator for DyckWords {
    type Item = OneRootedTree;

    fn next(&mut self) -> Option<OneRootedTree> {
        let bits = self.current?;
        self.current = successor(bits, self.half);
        Some(OneRootedTree::from_bits(bits, self.half))
    }
}

/// Streams every one-rooted plane tree with `e` edges.
pub fn enumerate_one_rooted(e: usize) -> DyckWords {
    DyckWords::new(e)
}

/// Calls `visit` on every balanced word with the given prefix.
fn for_each_completion(half: usize, bits: u64, len: usize, opens: usize, visit: &mut impl FnMut(u64)) {
    if len == 2 * half {
        visit(bits);
        return;
    }
    let closes = len - opens;
    if opens < half {
        for_each_completion(half, bits | 1 << len, len + 1, opens + 1, visit);
    }
    if closes < opens {
        for_each_completion(half, bits, len + 1, opens, visit);
    }
}

/// Valid prefixes of length `len`, used to split work between threads.
fn prefixes(half: usize, len: usize) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    fn go(half: usize, target: usize, bits: u64, len: usize, opens: usize, out: &mut Vec<(u64, usize)>) {
        if len == target {
            out.push((bits, opens));
            return;
        }
        if opens < half {
            go(half, target, bits | 1 << len, len + 1, opens + 1, out);
        }
        if len - opens < opens {
            go(half, target, bits, len + 1, opens, out);
        }
    }
    go(half, len, 0, 0, 0, &mut out);
    out
}

/// Folds every word of semilength `half` in parallel, one accumulator per
/// prefix, then combines them. The result does not depend on the split.
fn par_fold_words<A, F, M>(half: usize, init: impl Fn() -> A + Sync, fold: F, merge: M) -> A
where
    A: Send,
    F: Fn(&mut A, u64) + Sync,
    M: Fn(A, A) -> A + Sync + Send,
{
    let split = (2 * half).min(12);
    prefixes(half, split)
        .into_par_iter()
        .map(|(bits, opens)| {
            let mut acc = init();
            for_each_completion(half, bits, split, opens, &mut |w| fold(&mut acc, w));
            acc
        })
        .reduce(&init, merge)
}

/// Trees grouped by root degree and by how many non-root vertices have
/// each degree: `counts[d-1]` vertices of degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeProfile {
    pub root_degree: usize,
    pub counts: Vec<u32>,
}

/// Number of one-rooted trees with `e` edges per [`DegreeProfile`].
#[derive(Debug, Clone)]
pub struct Census {
    edges: usize,
    profiles: HashMap<DegreeProfile, u64>,
}

impl Census {
    pub fn build(e: usize, budget: u128) -> Result<Self> {
        check_budget(catalan(e), budget)?;
        if e == 0 {
            let mut profiles = HashMap::new();
            profiles.insert(DegreeProfile { root_degree: 0, counts: Vec::new() }, 1);
            return Ok(Census { edges: 0, profiles });
        }
        let profiles = par_fold_words(
            e,
            HashMap::new,
            |acc: &mut HashMap<DegreeProfile, u64>, bits| {
                let degrees = vertex_degrees(bits, e);
                let mut counts = vec![0u32; e];
                for &d in &degrees[1..] {
                    counts[d - 1] += 1;
                }
                *acc.entry(DegreeProfile { root_degree: degrees[0], counts }).or_insert(0) += 1;
            },
            |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            },
        );
        Ok(Census { edges: e, profiles })
    }

    pub fn edges(&self) -> usize {
        self.edges
    }

    pub fn trees(&self) -> u64 {
        self.profiles.values().sum()
    }

    pub fn profiles(&self) -> impl Iterator<Item = (&DegreeProfile, u64)> {
        self.profiles.iter().map(|(k, &v)| (k, v))
    }

    /// Count of `N`-rooted trees matching `spec`, which must have this
    /// census's edge count.
    pub fn count(&self, spec: &DegreeSpec) -> ExactInt {
        assert_eq!(spec.edges(), self.edges, "census built for another edge count");
        let n = spec.n_roots();
        let fixed = spec.degrees();
        let free = n - fixed.len().max(1);
        let mut total = ExactInt::zero();
        for (profile, &trees) in &self.profiles {
            if let Some(&d1) = fixed.first() {
                if profile.root_degree != d1 {
                    continue;
                }
            }
            let weight = tuple_weight(&profile.counts, fixed.get(1..).unwrap_or(&[]), free);
            if !weight.is_zero() {
                total += weight * trees;
            }
        }
        total
    }
}

/// Weighted number of ordered tuples of distinct non-root vertices: first
/// one vertex per entry of `fixed` with that degree, then `free` more of any
/// degree. Each vertex weighs its degree (the choice of root half-edge).
fn tuple_weight(counts: &[u32], fixed: &[usize], free: usize) -> ExactInt {
    let mut left: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
    let mut weight = ExactInt::one();
    for &d in fixed {
        if d == 0 || d > left.len() || left[d - 1] == 0 {
            return ExactInt::zero();
        }
        weight *= left[d - 1] * d as i64;
        left[d - 1] -= 1;
    }
    if free == 0 {
        return weight;
    }
    // elementary symmetric polynomial of degree `free` in the remaining degrees
    let mut esym = vec![ExactInt::zero(); free + 1];
    esym[0] = ExactInt::one();
    for (i, &c) in left.iter().enumerate() {
        let d = ExactInt::from(i + 1);
        for _ in 0..c {
            for k in (1..=free).rev() {
                let term = &esym[k - 1] * &d;
                esym[k] += term;
            }
        }
    }
    weight * &esym[free] * factorial(free)
}

/// Direct count of the trees described by `spec`, within `budget` trees.
pub fn oracle_count_with_budget(spec: &DegreeSpec, budget: u128) -> Result<ExactInt> {
    Ok(Census::build(spec.edges(), budget)?.count(spec))
}

/// [`oracle_count_with_budget`] with the budget from [`budget_from_env`].
pub fn oracle_count(spec: &DegreeSpec) -> Result<ExactInt> {
    oracle_count_with_budget(spec, budget_from_env())
}

/// Literal version of the oracle: walks every tree and every ordered tuple
/// of further roots. Only for small trees.
pub fn oracle_count_by_tuples(spec: &DegreeSpec, budget: u128) -> Result<ExactInt> {
    check_budget(catalan(spec.edges()), budget)?;
    let n = spec.n_roots();
    let fixed = spec.degrees();
    let mut total = ExactInt::zero();
    for tree in enumerate_one_rooted(spec.edges()) {
        let deg = &tree.vertex_degrees;
        if fixed.first().is_some_and(|&d| d != deg[0]) {
            continue;
        }
        let mut chosen = vec![0usize];
        total += extend_tuples(deg, fixed, n, &mut chosen);
    }
    Ok(total)
}

fn extend_tuples(deg: &[usize], fixed: &[usize], n: usize, chosen: &mut Vec<usize>) -> ExactInt {
    if chosen.len() == n {
        return chosen[1..].iter().map(|&v| ExactInt::from(deg[v])).product();
    }
    let position = chosen.len();
    let mut acc = ExactInt::zero();
    for v in 1..deg.len() {
        if chosen.contains(&v) || fixed.get(position).is_some_and(|&d| d != deg[v]) {
            continue;
        }
        chosen.push(v);
        acc += extend_tuples(deg, fixed, n, chosen);
        chosen.pop();
    }
    acc
}

/// Total number of valleys (a `)` followed by `(`) over all Dyck paths of
/// semilength `e + 1`.
pub fn dyck_valley_total(e: usize, budget: u128) -> Result<ExactInt> {
    if e < 1 {
        return Err(Error::domain("valley totals need e >= 1"));
    }
    check_budget(catalan(e + 1), budget)?;
    let half = e + 1;
    let len = 2 * half;
    let total = par_fold_words(
        half,
        || 0u64,
        |acc, bits| {
            // valley at i: bit i clear, bit i+1 set
            let valleys = !bits & (bits >> 1) & ((1u64 << (len - 1)) - 1);
            *acc += valleys.count_ones() as u64;
        },
        |a, b| a + b,
    );
    Ok(ExactInt::from(total))
}

/// Writes every tree with `e` edges, one parenthesis word per line.
pub fn write_tree_dump(e: usize, budget: u128, out: &mut impl Write) -> Result<()> {
    check_budget(catalan(e), budget)?;
    let mut emit = || -> io::Result<()> {
        for tree in enumerate_one_rooted(e) {
            writeln!(out, "{}", tree.dyck)?;
        }
        Ok(())
    };
    emit().map_err(|err| Error::domain(format!("tree dump failed: {err}")))
}

/// An `N`-rooted plane tree on labeled half-edges `0..2e`: `alpha` pairs the
/// two halves of each edge, the cycles of `sigma` list the half-edges around
/// each vertex counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationTree {
    pub alpha: Vec<u8>,
    pub sigma: Vec<u8>,
    pub roots: Vec<u8>,
}

impl PermutationTree {
    pub fn half_edges(&self) -> usize {
        self.alpha.len()
    }

    /// Relabels half-edges in first-visit order of a breadth-first walk from
    /// the first root that steps along `sigma` before `alpha`.
    pub fn canonical(&self) -> PermutationTree {
        let h = self.half_edges();
        let mut label = vec![u8::MAX; h];
        let mut order = Vec::with_capacity(h);
        let visit = |x: u8, label: &mut Vec<u8>, order: &mut Vec<u8>| {
            if label[x as usize] == u8::MAX {
                label[x as usize] = order.len() as u8;
                order.push(x);
            }
        };
        visit(self.roots[0], &mut label, &mut order);
        let mut head = 0;
        while head < order.len() {
            let x = order[head] as usize;
            head += 1;
            visit(self.sigma[x], &mut label, &mut order);
            visit(self.alpha[x], &mut label, &mut order);
        }
        debug_assert_eq!(order.len(), h, "walk must reach every half-edge");
        let relabel = |perm: &[u8]| -> Vec<u8> { order.iter().map(|&x| label[perm[x as usize] as usize]).collect() };
        PermutationTree {
            alpha: relabel(&self.alpha),
            sigma: relabel(&self.sigma),
            roots: self.roots.iter().map(|&r| label[r as usize]).collect(),
        }
    }
}

fn involutions(h: usize) -> Vec<Vec<u8>> {
    fn go(alpha: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let Some(first) = alpha.iter().position(|&x| x == u8::MAX) else {
            out.push(alpha.clone());
            return;
        };
        for partner in first + 1..alpha.len() {
            if alpha[partner] == u8::MAX {
                alpha[first] = partner as u8;
                alpha[partner] = first as u8;
                go(alpha, out);
                alpha[first] = u8::MAX;
                alpha[partner] = u8::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![u8::MAX; h], &mut out);
    out
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Cycle index of every half-edge, and the number of cycles.
fn cycles(sigma: &[u8]) -> (Vec<u8>, usize) {
    let mut id = vec![u8::MAX; sigma.len()];
    let mut count = 0;
    for start in 0..sigma.len() {
        if id[start] != u8::MAX {
            continue;
        }
        let mut x = start;
        while id[x] == u8::MAX {
            id[x] = count as u8;
            x = sigma[x] as usize;
        }
        count += 1;
    }
    (id, count)
}

fn transitive(alpha: &[u8], sigma: &[u8]) -> bool {
    let mut seen = vec![false; alpha.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for y in [alpha[x] as usize, sigma[x] as usize] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == alpha.len()
}

fn root_tuples(cycle_of: &[u8], n: usize, chosen: &mut Vec<u8>, visit: &mut impl FnMut(&[u8])) {
    if chosen.len() == n {
        visit(chosen);
        return;
    }
    for h in 0..cycle_of.len() as u8 {
        if chosen.iter().all(|&r| cycle_of[r as usize] != cycle_of[h as usize]) {
            chosen.push(h);
            root_tuples(cycle_of, n, chosen, visit);
            chosen.pop();
        }
    }
}

/// Number of `N`-rooted plane trees with `e` edges, counted as isomorphism
/// classes of labeled `(alpha, sigma, roots)` triples.
pub fn permutation_model_count(n_roots: usize, e: usize) -> Result<ExactInt> {
    if e > PERMUTATION_MODEL_MAX_EDGES {
        return Err(Error::Budget {
            needed: (e as u128) * 2,
            budget: (PERMUTATION_MODEL_MAX_EDGES as u128) * 2,
        });
    }
    if n_roots == 0 {
        return Ok(ExactInt::zero());
    }
    if e == 0 {
        return Ok(ExactInt::from(u8::from(n_roots == 1)));
    }
    let h = 2 * e;
    let classes: HashSet<PermutationTree> = involutions(h)
        .into_par_iter()
        .map(|alpha| {
            let mut seen = HashSet::new();
            let mut sigma: Vec<u8> = (0..h as u8).collect();
            loop {
                let (cycle_of, count) = cycles(&sigma);
                if count == e + 1 && transitive(&alpha, &sigma) {
                    root_tuples(&cycle_of, n_roots, &mut Vec::new(), &mut |roots| {
                        let tree = PermutationTree { alpha: alpha.clone(), sigma: sigma.clone(), roots: roots.to_vec() };
                        seen.insert(tree.canonical());
                    });
                }
                if !next_permutation(&mut sigma) {
                    break;
                }
            }
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(ExactInt::from(classes.len()))
}
