//! Generating functions `G_N(t, x_1..x_N) = Σ T_N(e; d) x^d t^e`.
//!
//! Closed forms are rational in `t`, `x` and `y = sqrt(1 - 4t)`; they are
//! expanded by substituting the series of `y`. The recursive construction
//! builds `G_N` from `G_1..G_{N-1}` by adding one root at a time and then
//! joining two smaller trees by a new edge at the first root.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int_rat, rat, ExactRat};
use crate::series::TruncSeries;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 12;

/// `y = sqrt(1 - 4t)` with constant term 1, as a series in `var_count`
/// variables that do not occur.
pub fn sqrt_one_minus_4t(order: usize, var_count: usize) -> TruncSeries {
    // binom(1/2, k) (-4)^k, successive ratio (4k - 6)/k
    let mut coeffs = vec![ExactRat::one()];
    for k in 1..=order as i64 {
        let prev = coeffs.last().expect("nonempty").clone();
        coeffs.push(prev * rat(4 * k - 6, k));
    }
    TruncSeries::from_t_coeffs(order, var_count, &coeffs)
}

/// Catalan generating function `C = (1 - y)/(2t)`, constant term 1.
pub fn catalan_gf(order: usize, var_count: usize) -> Result<TruncSeries> {
    let y = sqrt_one_minus_4t(order + 1, var_count);
    TruncSeries::one(order + 1, var_count)
        .sub(&y)
        .div_t_pow(1)
        .map(|s| s.scale(&rat(1, 2)))
}

/// `1 + y - 2 t x_j`.
fn linear_factor(y: &TruncSeries, j: usize) -> TruncSeries {
    let (order, m) = (y.order(), y.var_count());
    let mut exps = vec![0; m];
    exps[j] = 1;
    TruncSeries::one(order, m)
        .add(y)
        .sub(&TruncSeries::monomial(order, m, 1, &exps, int_rat(2)))
}

fn product_of_vars(order: usize, m: usize) -> TruncSeries {
    TruncSeries::monomial(order, m, 0, &vec![1; m], ExactRat::one())
}

/// Closed form of `G_N` for `N = 1, 2, 3`, with variables `x_1..x_N`.
pub fn closed_form_gf(n_roots: usize, order: usize) -> Result<TruncSeries> {
    let m = n_roots;
    let y = sqrt_one_minus_4t(order, m);
    let one = TruncSeries::one(order, m);
    let factors: Vec<TruncSeries> = (0..m).map(|j| linear_factor(&y, j)).collect();
    match n_roots {
        1 => one.add(&y).div(&factors[0]),
        2 => {
            let numer = product_of_vars(order, m).mul(&one.add(&y).pow(5)).mul_monomial(1, &[0, 0], &rat(1, 2));
            let denom = y.mul(&factors[0].pow(2)).mul(&factors[1].pow(2));
            numer.div(&denom)
        }
        3 => {
            let prefactor = product_of_vars(order, m).mul(&one.add(&y).pow(10)).mul_monomial(2, &[0; 3], &rat(1, 2));
            let denom = y.pow(3).mul(&factors[0].pow(3)).mul(&factors[1].pow(3)).mul(&factors[2].pow(3));
            prefactor.mul(&g3_bracket(&y)).div(&denom)
        }
        _ => Err(Error::domain(format!("no closed form for N={n_roots}, only N = 1, 2, 3"))),
    }
}

/// The polynomial factor of the `N = 3` closed form:
/// `1 - y + (2y - 2t) e1 + (y-1)(1+3y-6t)/2 e2 + (y-1)^2 (2+4y-10t)/4 e3`
/// with `e_k` the elementary symmetric polynomials in `x_1, x_2, x_3`.
pub fn g3_bracket(y: &TruncSeries) -> TruncSeries {
    let (order, m) = (y.order(), 3);
    let one = TruncSeries::one(order, m);
    let t = TruncSeries::t(order, m);
    let x: Vec<TruncSeries> = (0..3).map(|j| TruncSeries::x(order, m, j)).collect();
    let e1 = x[0].add(&x[1]).add(&x[2]);
    let e2 = x[0].mul(&x[1]).add(&x[0].mul(&x[2])).add(&x[1].mul(&x[2]));
    let e3 = x[0].mul(&x[1]).mul(&x[2]);
    let y_minus_1 = y.sub(&one);
    let c1 = y.scale(&int_rat(2)).sub(&t.scale(&int_rat(2)));
    let c2 = y_minus_1
        .mul(&one.add(&y.scale(&int_rat(3))).sub(&t.scale(&int_rat(6))))
        .scale(&rat(1, 2));
    let c3 = y_minus_1
        .pow(2)
        .mul(&one.scale(&int_rat(2)).add(&y.scale(&int_rat(4))).sub(&t.scale(&int_rat(10))))
        .scale(&rat(1, 4));
    one.sub(y).add(&c1.mul(&e1)).add(&c2.mul(&e2)).add(&c3.mul(&e3))
}

/// `(2t d/dt - Σ_{k in active} x_k d/dx_k) G`: multiplies the coefficient of
/// `x^d t^e` by `2e - Σ d_k`, the number of ways to add one more root.
pub fn root_adding_operator(g: &TruncSeries, active: &[usize]) -> TruncSeries {
    let mut out = g.t_dt().scale(&int_rat(2));
    for &k in active {
        out = out.sub(&g.x_dx(k));
    }
    out
}

/// Catalan series from `C = 1 + t C^2` by fixed-point iteration.
fn catalan_by_iteration(order: usize, var_count: usize) -> TruncSeries {
    let one = TruncSeries::one(order, var_count);
    let t = TruncSeries::t(order, var_count);
    let mut c = one.clone();
    for _ in 0..=order {
        c = one.add(&t.mul(&c).mul(&c));
    }
    c
}

/// Generating functions built by the recursion on the number of roots.
///
/// `full[M]` is `G_M(t; x_1..x_M)` and `partial[M]` is
/// `G_M(t; x_1..x_{M-1})`, the last degree left free.
#[derive(Debug, Clone)]
pub struct RecursiveFamily {
    pub order: usize,
    pub full: Vec<TruncSeries>,
    pub partial: Vec<TruncSeries>,
}

impl RecursiveFamily {
    /// `G_1..G_N` to order `T`.
    pub fn build(n_roots: usize, order: usize) -> Result<Self> {
        if n_roots == 0 {
            return Err(Error::domain("need at least one root"));
        }
        // index 0 unused
        let placeholder = TruncSeries::zero(order, 0);
        let catalan = catalan_by_iteration(order, 0);
        let mut full = vec![placeholder.clone()];
        let mut partial = vec![placeholder, catalan.clone()];
        // G_1 = 1 + t x G_1 C  =>  G_1 = 1/(1 - t x C)
        let g1 = TruncSeries::one(order, 1)
            .sub(&catalan.embed(1, &[]).mul_monomial(1, &[1], &ExactRat::one()))
            .inverse()?;
        full.push(g1);
        for m in 2..=n_roots {
            partial.push(root_adding_operator(&full[m - 1], &(0..m - 1).collect::<Vec<_>>()));
            let g = Self::join(&full, &partial, m, order)?;
            full.push(g);
        }
        Ok(RecursiveFamily { order, full, partial })
    }

    /// Solves the edge-joining equation for `G_M(t; x_1..x_M)`.
    fn join(full: &[TruncSeries], partial: &[TruncSeries], m: usize, order: usize) -> Result<TruncSeries> {
        let others: Vec<usize> = (1..m).collect();
        let mut rest = TruncSeries::zero(order, m);

        // first root's edge ends at a non-root vertex of the right tree
        for (left_vars, right_vars) in splits(&others) {
            if right_vars.is_empty() {
                // the unknown G_M(t; x_1..x_M) times G_1(t, 1); moved to the left side
                continue;
            }
            let left = embed_with_first(&full[left_vars.len() + 1], m, 0, &left_vars);
            let right = partial[right_vars.len() + 1].embed(m, &right_vars);
            rest = rest.add(&left.mul(&right));
        }

        // first root's edge ends at root vertex v_r
        for &r in &others {
            let without_r: Vec<usize> = others.iter().copied().filter(|&k| k != r).collect();
            for (left_vars, right_vars) in splits(&without_r) {
                let left = embed_with_first(&full[left_vars.len() + 1], m, 0, &left_vars);
                let right = embed_with_first(&full[right_vars.len() + 1], m, r, &right_vars);
                let mut x_r = vec![0; m];
                x_r[r] = 1;
                let right = right.dx_x(r).mul_monomial(0, &x_r, &ExactRat::one());
                rest = rest.add(&left.mul(&right));
            }
        }

        let mut x_1 = vec![0; m];
        x_1[0] = 1;
        let rest = rest.mul_monomial(1, &x_1, &ExactRat::one());
        let divisor = TruncSeries::one(order, m).sub(&partial[1].embed(m, &[]).mul_monomial(1, &x_1, &ExactRat::one()));
        rest.div(&divisor)
    }
}

/// Ordered splits of `labels` into two disjoint parts.
fn splits(labels: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    (0u64..1 << labels.len())
        .map(|mask| {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (bit, &l) in labels.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    left.push(l);
                } else {
                    right.push(l);
                }
            }
            (left, right)
        })
        .collect()
}

/// Places a series in `1 + rest.len()` variables into `m` variables: its
/// first variable at `first`, the others at `rest`.
fn embed_with_first(g: &TruncSeries, m: usize, first: usize, rest: &[usize]) -> TruncSeries {
    let mut targets = vec![first];
    targets.extend_from_slice(rest);
    g.embed(m, &targets)
}

/// `G_N(t, x_1..x_N)` from the recursion alone, without any closed form.
pub fn recursion_gf(n_roots: usize, order: usize) -> Result<TruncSeries> {
    let mut family = RecursiveFamily::build(n_roots, order)?;
    Ok(family.full.swap_remove(n_roots))
}

/// Closed forms for the trees with every root a leaf:
/// `(1+y) t / (2y)` for `N = 2` and `2t^3 / y^3` for `N = 3`.
pub fn all_ones_gf(n_roots: usize, order: usize) -> Result<TruncSeries> {
    let y = sqrt_one_minus_4t(order, 0);
    match n_roots {
        2 => TruncSeries::one(order, 0)
            .add(&y)
            .mul_monomial(1, &[], &rat(1, 2))
            .div(&y),
        3 => TruncSeries::monomial(order, 0, 3, &[], int_rat(2)).div(&y.pow(3)),
        _ => Err(Error::domain(format!("all-leaf closed form only for N = 2, 3, got {n_roots}"))),
    }
}

/// The coefficient of `x_1 x_2 .. x_N`, as a series in `t`.
pub fn all_ones_part(g: &TruncSeries) -> TruncSeries {
    let m = g.var_count();
    let ones = vec![1; m];
    let coeffs: Vec<ExactRat> = (0..=g.order()).map(|e| g.coeff(e, &ones)).collect();
    TruncSeries::from_t_coeffs(g.order(), 0, &coeffs)
}

/// `F(t, x, 0) = ((x-2)(y-1) + 2(x-1)t) / ((2 + x(y-1)) t)`, the bounce-path
/// series with the crossing variable set to zero.
pub fn bounce_path_series(order: usize) -> Result<TruncSeries> {
    let y = sqrt_one_minus_4t(order + 1, 1);
    let one = TruncSeries::one(order + 1, 1);
    let x = TruncSeries::x(order + 1, 1, 0);
    let t = TruncSeries::t(order + 1, 1);
    let two = int_rat(2);
    let y_minus_1 = y.sub(&one);
    let numer = x
        .sub(&one.scale(&two))
        .mul(&y_minus_1)
        .add(&x.sub(&one).mul(&t).scale(&two))
        .div_t_pow(1)?;
    let denom = one.scale(&two).add(&x.mul(&y_minus_1)).truncate(order);
    numer.div(&denom)
}

/// Residual `G_1 - [x^2 t (F + 1 - 2C) + x^2 t (C - 1) + x t C + 1]`.
pub fn bounce_path_residual(order: usize) -> Result<TruncSeries> {
    let g1 = closed_form_gf(1, order)?;
    let f = bounce_path_series(order)?;
    let c = catalan_gf(order, 1)?;
    let one = TruncSeries::one(order, 1);
    let two = int_rat(2);
    let unit = ExactRat::one();
    let rhs = f
        .add(&one)
        .sub(&c.scale(&two))
        .mul_monomial(1, &[2], &unit)
        .add(&c.sub(&one).mul_monomial(1, &[2], &unit))
        .add(&c.mul_monomial(1, &[1], &unit))
        .add(&one);
    Ok(g1.sub(&rhs))
}

/// Whether the bounce-path series reproduces `G_1` to order `T`.
pub fn bounce_path_check(order: usize) -> Result<bool> {
    Ok(bounce_path_residual(order)?.is_zero())
}

/// Whether `g3 * y^3 * Π(1+y-2t x_k)^3 = (1/2) t^2 (1+y)^10 x_1 x_2 x_3 * P`
/// with `P` the polynomial of [`g3_bracket`]. Passes for any series equal
/// to `G_3` up to its order.
pub fn three_root_shape_check(g3: &TruncSeries) -> Result<bool> {
    if g3.var_count() != 3 {
        return Err(Error::domain("shape check needs a series in three variables"));
    }
    let order = g3.order();
    let y = sqrt_one_minus_4t(order, 3);
    let one = TruncSeries::one(order, 3);
    let mut lhs = g3.mul(&y.pow(3));
    for j in 0..3 {
        lhs = lhs.mul(&linear_factor(&y, j).pow(3));
    }
    let rhs = product_of_vars(order, 3)
        .mul(&one.add(&y).pow(10))
        .mul_monomial(2, &[0; 3], &rat(1, 2))
        .mul(&g3_bracket(&y));
    Ok(lhs.sub(&rhs).is_zero())
}

/// Whether `g` is unchanged by every transposition of adjacent variables.
pub fn is_symmetric(g: &TruncSeries) -> bool {
    let m = g.var_count();
    (0..m.saturating_sub(1)).all(|j| {
        let mut targets: Vec<usize> = (0..m).collect();
        targets.swap(j, j + 1);
        g.embed(m, &targets) == *g
    })
}

/// Whether the coefficient of `x^d t^e` equals `count(e, d)` for every
/// `e <= T` and every degree tuple with entries at most `e`.
pub fn matches_counts(g: &TruncSeries, count: impl Fn(usize, &[usize]) -> crate::exact::ExactInt) -> bool {
    let m = g.var_count();
    for e in 0..=g.order() {
        for (mono, c) in g.poly(e) {
            let d: Vec<usize> = mono.iter().map(|&a| a as usize).collect();
            if *c != ExactRat::from_integer(count(e, &d)) {
                return false;
            }
        }
        // and nothing the counts say is missing
        let mut d = vec![0usize; m];
        loop {
            let expected = count(e, &d);
            if !expected.is_zero() {
                let exps: Vec<u32> = d.iter().map(|&a| a as u32).collect();
                if g.coeff(e, &exps) != ExactRat::from_integer(expected) {
                    return false;
                }
            }
            let mut i = 0;
            while i < m && d[i] == e {
                d[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            d[i] += 1;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::count_raw;
    use crate::exact::ExactInt;

    fn count(n: usize) -> impl Fn(usize, &[usize]) -> ExactInt {
        move |e, d| {
            let d: Vec<i64> = d.iter().map(|&x| x as i64).collect();
            count_raw(n as i64, e as i64, &d)
        }
    }

    fn ints(s: &TruncSeries, upto: usize) -> Vec<i64> {
        (0..=upto).map(|e| i64::try_from(s.coeff(e, &[]).to_integer()).unwrap()).collect()
    }

    #[test]
    fn sqrt_series() {
        let y = sqrt_one_minus_4t(4, 0);
        assert_eq!(ints(&y, 4), vec![1, -2, -2, -4, -10]);
        let y = sqrt_one_minus_4t(20, 0);
        let expected = TruncSeries::one(20, 0).sub(&TruncSeries::t(20, 0).scale(&int_rat(4)));
        assert_eq!(y.mul(&y), expected);
    }

    #[test]
    fn catalan_relations() {
        let order = 30;
        let c = catalan_gf(order, 0).unwrap();
        let t = TruncSeries::t(order, 0);
        let one = TruncSeries::one(order, 0);
        assert_eq!(c, one.add(&t.mul(&c).mul(&c)));
        assert_eq!(c, catalan_by_iteration(order, 0));
        // 2tC = 1 - y
        let y = sqrt_one_minus_4t(order, 0);
        assert_eq!(c.mul_monomial(1, &[], &int_rat(2)), one.sub(&y));
        assert_eq!(ints(&c, 6), vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn closed_form_coefficients() {
        let g1 = closed_form_gf(1, 8).unwrap();
        assert_eq!(g1.coeff(4, &[3]), int_rat(3));
        let g2 = closed_form_gf(2, 6).unwrap();
        assert_eq!(g2.coeff(5, &[2, 3]), int_rat(24));
        let g3 = closed_form_gf(3, 4).unwrap();
        assert_eq!(g3.coeff(3, &[1, 1, 1]), int_rat(2));
        assert!(closed_form_gf(4, 3).is_err());
    }

    #[test]
    fn g1_functional_equation() {
        let order = 12;
        let g1 = closed_form_gf(1, order).unwrap();
        let at_one = g1.set_var_one(0);
        let rhs = TruncSeries::one(order, 1).add(&g1.mul(&at_one).mul_monomial(1, &[1], &ExactRat::one()));
        assert_eq!(g1, rhs);
        assert_eq!(at_one, catalan_gf(order, 1).unwrap());
    }

    #[test]
    fn closed_forms_match_counts() {
        assert!(matches_counts(&closed_form_gf(1, 12).unwrap(), count(1)));
        assert!(matches_counts(&closed_form_gf(2, 9).unwrap(), count(2)));
        assert!(matches_counts(&closed_form_gf(3, 6).unwrap(), count(3)));
    }

    #[test]
    fn root_adding_operator_examples() {
        let g1 = closed_form_gf(1, 6).unwrap();
        let g2_partial = root_adding_operator(&g1, &[0]);
        for e in 0..=6usize {
            for d in 0..=e as u32 {
                let factor = int_rat(2 * e as i64 - d as i64);
                assert_eq!(g2_partial.coeff(e, &[d]), g1.coeff(e, &[d]) * factor);
            }
        }
        assert_eq!(g2_partial.set_var_one(0).coeff(2, &[0]), int_rat(5));
        assert!(root_adding_operator(&TruncSeries::one(6, 1), &[0]).is_zero());
    }

    #[test]
    fn recursion_reproduces_closed_forms() {
        let family = RecursiveFamily::build(3, 7).unwrap();
        assert_eq!(family.full[1], closed_form_gf(1, 7).unwrap());
        assert_eq!(family.full[2], closed_form_gf(2, 7).unwrap());
        assert_eq!(family.full[3], closed_form_gf(3, 7).unwrap());
    }

    #[test]
    fn recursion_four_roots() {
        let g4 = recursion_gf(4, 5).unwrap();
        assert_eq!(g4.coeff(4, &[1, 1, 1, 1]), int_rat(6));
        assert!(matches_counts(&g4, count(4)));
    }

    #[test]
    fn all_ones_series() {
        let g = all_ones_gf(2, 8).unwrap();
        assert_eq!(ints(&g, 5), vec![0, 1, 1, 3, 10, 35]);
        let g = all_ones_gf(3, 8).unwrap();
        assert_eq!(ints(&g, 6), vec![0, 0, 0, 2, 12, 60, 280]);
        assert_eq!(all_ones_part(&closed_form_gf(2, 8).unwrap()), all_ones_gf(2, 8).unwrap());
        assert_eq!(all_ones_part(&closed_form_gf(3, 6).unwrap()), all_ones_gf(3, 6).unwrap());
    }

    #[test]
    fn bounce_path_relation() {
        assert!(bounce_path_check(2).unwrap());
        assert!(bounce_path_check(10).unwrap());
        // F(t, x, 0) carries T_1(e; d) for d >= 3
        let f = bounce_path_series(8).unwrap();
        let g1 = closed_form_gf(1, 8).unwrap();
        for e in 3..=8 {
            for d in 3..=e as u32 {
                assert_eq!(f.coeff(e - 1, &[d - 2]), g1.coeff(e, &[d]), "e={e} d={d}");
            }
        }
    }

    #[test]
    fn g3_shape() {
        assert!(three_root_shape_check(&closed_form_gf(3, 6).unwrap()).unwrap());
        assert!(three_root_shape_check(&recursion_gf(3, 6).unwrap()).unwrap());
        let mut wrong = closed_form_gf(3, 6).unwrap();
        wrong = wrong.add(&TruncSeries::monomial(6, 3, 4, &[1, 1, 1], int_rat(1)));
        assert!(!three_root_shape_check(&wrong).unwrap());
    }

    #[test]
    fn symmetric_in_variables() {
        assert!(is_symmetric(&closed_form_gf(2, 8).unwrap()));
        assert!(is_symmetric(&closed_form_gf(3, 5).unwrap()));
        assert!(!is_symmetric(&TruncSeries::x(3, 2, 0)));
    }
}
