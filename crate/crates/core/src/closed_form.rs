//! Closed-form counts of `N`-rooted plane trees.
//!
//! With `e >= 1`,
//!
//! ```text
//! T_N(e; d_1..d_s) = (e-1)!/(e+1-N)! * binom(2e+N-s-1-Σd, e+N-2s) * Π d_j
//! ```
//!
//! which specializes to the fully constrained count for `s = N` and to the
//! total count for `s = 0`. Inadmissible specs count zero.

use num_traits::{One, Zero};

use crate::degree_spec::{is_admissible, DegreeSpec};
use crate::exact::{binomial_ext, expect_integer, falling_ratio, ExactInt, ExactRat};

/// Count for arbitrary raw parameters; zero whenever the admissibility
/// clauses fail.
pub(crate) fn count_raw(n: i64, e: i64, degrees: &[i64]) -> ExactInt {
    if !is_admissible(n, e, degrees) {
        return ExactInt::zero();
    }
    if e == 0 {
        // only N = 1 survives admissibility here: the single-vertex tree
        return ExactInt::one();
    }
    let s = degrees.len() as i64;
    let sum: i64 = degrees.iter().sum();
    let product: ExactInt = degrees.iter().map(|&d| ExactInt::from(d)).product();
    let binom = binomial_ext(2 * e + n - s - 1 - sum, e + n - 2 * s);
    let ratio = falling_ratio(e, n).expect("admissible spec has 1 <= N <= e+1");
    // prefactor last: for N = 1 the 1/e division must come out exact
    expect_integer(ratio * ExactRat::from_integer(binom * product), "closed-form count")
}

/// `T_N(e; d_1..d_N)` with every root degree fixed.
pub fn count_full(spec: &DegreeSpec) -> ExactInt {
    debug_assert!(spec.is_full(), "count_full on {spec}");
    count_raw(spec.n_roots() as i64, spec.edges() as i64, &spec.signed_degrees())
}

/// `T_N(e; d_1..d_s)` for `s < N`, summed over the free degrees.
pub fn count_partial(spec: &DegreeSpec) -> ExactInt {
    count_raw(spec.n_roots() as i64, spec.edges() as i64, &spec.signed_degrees())
}

/// `T_N(e)`, all `N`-rooted plane trees with `e` edges.
pub fn count_total(n_roots: usize, edges: usize) -> ExactInt {
    let (n, e) = (n_roots as i64, edges as i64);
    if n < 1 || e < n - 1 {
        return ExactInt::zero();
    }
    if e == 0 {
        return ExactInt::one();
    }
    let ratio = falling_ratio(e, n).expect("checked 1 <= N <= e+1");
    expect_integer(
        ratio * ExactRat::from_integer(binomial_ext(2 * e + n - 1, e - 1)),
        "total count",
    )
}

/// Dispatches on the number of constrained degrees.
pub fn count(spec: &DegreeSpec) -> ExactInt {
    if spec.constrained() == 0 {
        count_total(spec.n_roots(), spec.edges())
    } else {
        count_partial(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree_spec::max_degree_raw;
    use crate::exact::factorial;

    fn full(n: usize, e: usize, d: &[usize]) -> ExactInt {
        count_full(&DegreeSpec::full(n, e, d.to_vec()).unwrap())
    }

    fn partial(n: usize, e: usize, d: &[usize]) -> ExactInt {
        count_partial(&DegreeSpec::new(n, e, d.to_vec()).unwrap())
    }

    fn int(v: u64) -> ExactInt {
        ExactInt::from(v)
    }

    /// Explicit nested sum over the unconstrained degrees, each up to its
    /// largest admissible value.
    fn nested_sum(n: i64, e: i64, prefix: &mut Vec<i64>) -> ExactInt {
        if prefix.len() as i64 == n {
            return count_raw(n, e, prefix);
        }
        let top = max_degree_raw(e, prefix);
        let mut acc = ExactInt::zero();
        for d in 1..=top.max(0) {
            prefix.push(d);
            acc += nested_sum(n, e, prefix);
            prefix.pop();
        }
        acc
    }

    #[test]
    fn full_examples() {
        assert_eq!(full(2, 3, &[1, 2]), int(4));
        assert_eq!(full(3, 2, &[2, 1, 1]), int(2));
        assert_eq!(full(3, 5, &[2, 2, 2]), int(96));
        assert_eq!(full(1, 4, &[3]), int(3));
        assert_eq!(full(1, 0, &[0]), int(1));
        assert_eq!(full(2, 3, &[3, 3]), int(0));
    }

    #[test]
    fn partial_examples() {
        assert_eq!(partial(2, 4, &[1]), int(35));
        assert_eq!(partial(1, 5, &[3]), int(9));
        assert_eq!(partial(3, 4, &[]), int(360));
    }

    #[test]
    fn total_examples() {
        assert_eq!(count_total(2, 2), int(5));
        assert_eq!(count_total(7, 6), int(1_028_160));
        assert_eq!(count_total(1, 6), int(132));
        assert_eq!(count_total(1, 0), int(1));
        assert_eq!(count_total(2, 0), int(0));
        assert_eq!(count_total(5, 3), int(0));
    }

    #[test]
    fn catalan_partition_by_root_degree() {
        for e in 1..=20usize {
            let sum: ExactInt = (1..=e).map(|d| full(1, e, &[d])).sum();
            let catalan = factorial(2 * e) / (factorial(e) * factorial(e + 1));
            assert_eq!(sum, catalan);
            assert_eq!(count_total(1, e), catalan);
        }
    }

    /// `T_1(e; d)` with the row `d = 0` equal to `[e == 0]`.
    fn t1(e: usize, d: usize) -> ExactInt {
        if d == 0 {
            if e == 0 { int(1) } else { int(0) }
        } else {
            count_raw(1, e as i64, &[d as i64])
        }
    }

    #[test]
    fn catalan_column_recurrence() {
        for e in 1..=20usize {
            for d in 1..=e {
                let rhs: ExactInt = (d - 1..e).map(|b| t1(e - 1, b)).sum();
                assert_eq!(full(1, e, &[d]), rhs, "e={e} d={d}");
            }
        }
    }

    #[test]
    fn catalan_triangle_recurrence() {
        for e in 1..=15 {
            for d in 2..=e + 1 {
                assert_eq!(t1(e, d), t1(e, d - 1) - t1(e - 1, d - 2), "e={e} d={d}");
            }
        }
    }

    #[test]
    fn degree_permutation_symmetry() {
        for e in 1..=10usize {
            for d1 in 1..=e {
                for d2 in 1..=e {
                    for d3 in 1..=e {
                        let a = full(3, e, &[d1, d2, d3]);
                        assert_eq!(a, full(3, e, &[d3, d1, d2]));
                        assert_eq!(a, full(3, e, &[d2, d1, d3]));
                    }
                }
            }
        }
    }

    #[test]
    fn leaf_swap_remark() {
        // T_N(e; 2,..,2,1) = T_N(e; 2,..,2) for N <= e-1
        for e in 2..=11usize {
            for n in 1..=e - 1 {
                let mut twos = vec![2; n];
                let a = full(n, e, &twos);
                twos[n - 1] = 1;
                assert_eq!(a, full(n, e, &twos), "N={n} e={e}");
            }
        }
    }

    #[test]
    fn maximally_rooted_counts() {
        // N = e+1, Σd = 2e: count is (N-2)! Π d
        for e in 1..=7usize {
            let n = e + 1;
            let mut d = vec![1usize; n];
            loop {
                if d.iter().sum::<usize>() == 2 * e {
                    let product: ExactInt = d.iter().map(|&x| int(x as u64)).product();
                    assert_eq!(full(n, e, &d), factorial(n - 2) * product, "d={d:?}");
                }
                let mut i = 0;
                while i < n && d[i] == e {
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

    #[test]
    fn partial_counts_equal_nested_sums() {
        for e in 1..=8i64 {
            for n in 1..=e + 1 {
                for s in 0..n {
                    let mut prefix = vec![1i64; s as usize];
                    loop {
                        let direct = count_raw(n, e, &prefix);
                        let mut p = prefix.clone();
                        let summed = if is_admissible(n, e, &prefix) { nested_sum(n, e, &mut p) } else { int(0) };
                        assert_eq!(direct, summed, "N={n} e={e} d={prefix:?}");
                        let mut i = 0;
                        while i < prefix.len() && prefix[i] == e {
                            prefix[i] = 1;
                            i += 1;
                        }
                        if i == prefix.len() {
                            break;
                        }
                        prefix[i] += 1;
                    }
                }
            }
        }
    }
}
