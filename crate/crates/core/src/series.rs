//! Power series in `t`, truncated after `t^T`, whose coefficients are
//! polynomials in `x_1..x_m` with exact rational coefficients.
//!
//! Monomials in which some `x_j` has exponent above `T` are dropped as
//! well. Both truncations are ideals of the polynomial ring, so sums,
//! products, inverses and the operators `t d/dt`, `x d/dx` stay consistent.
//! Setting a variable to 1 is only meaningful on series whose `t^e`
//! coefficient has `x`-degree at most `e`, which holds for every tree
//! generating function.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int_rat, ExactRat};

/// Exponents of `x_1..x_m`.
pub type Monomial = Vec<u32>;

/// Sparse polynomial in `x_1..x_m`; zero coefficients are never stored.
pub type Poly = BTreeMap<Monomial, ExactRat>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    var_count: usize,
    coeffs: Vec<Poly>,
}

fn add_into(poly: &mut Poly, mono: Monomial, value: ExactRat) {
    if value.is_zero() {
        return;
    }
    match poly.entry(mono) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += value;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl TruncSeries {
    pub fn zero(order: usize, var_count: usize) -> Self {
        TruncSeries {
            order,
            var_count,
            coeffs: vec![Poly::new(); order + 1],
        }
    }

    pub fn constant(order: usize, var_count: usize, c: ExactRat) -> Self {
        Self::monomial(order, var_count, 0, &vec![0; var_count], c)
    }

    pub fn one(order: usize, var_count: usize) -> Self {
        Self::constant(order, var_count, ExactRat::one())
    }

    /// `c * t^t_exp * x^exps`.
    pub fn monomial(order: usize, var_count: usize, t_exp: usize, exps: &[u32], c: ExactRat) -> Self {
        assert_eq!(exps.len(), var_count);
        let mut s = Self::zero(order, var_count);
        if t_exp <= order && exps.iter().all(|&a| a as usize <= order) {
            add_into(&mut s.coeffs[t_exp], exps.to_vec(), c);
        }
        s
    }

    /// `t`.
    pub fn t(order: usize, var_count: usize) -> Self {
        Self::monomial(order, var_count, 1, &vec![0; var_count], ExactRat::one())
    }

    /// The variable `x_j` (0-based).
    pub fn x(order: usize, var_count: usize, j: usize) -> Self {
        let mut exps = vec![0; var_count];
        exps[j] = 1;
        Self::monomial(order, var_count, 0, &exps, ExactRat::one())
    }

    /// Univariate series in `t` from its first coefficients.
    pub fn from_t_coeffs(order: usize, var_count: usize, coeffs: &[ExactRat]) -> Self {
        let mut s = Self::zero(order, var_count);
        for (e, c) in coeffs.iter().enumerate().take(order + 1) {
            add_into(&mut s.coeffs[e], vec![0; var_count], c.clone());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    /// Coefficient polynomial of `t^e`.
    pub fn poly(&self, e: usize) -> &Poly {
        &self.coeffs[e]
    }

    /// Coefficient of `t^e x^exps`.
    pub fn coeff(&self, e: usize, exps: &[u32]) -> ExactRat {
        assert_eq!(exps.len(), self.var_count);
        self.coeffs
            .get(e)
            .and_then(|p| p.get(exps))
            .cloned()
            .unwrap_or_else(ExactRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|p| p.is_empty())
    }

    /// Drops everything above `t^order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot raise the order from {} to {order}", self.order);
        let mut out = Self::zero(order, self.var_count);
        for (e, poly) in self.coeffs.iter().take(order + 1).enumerate() {
            for (mono, c) in poly {
                if mono.iter().all(|&a| a as usize <= order) {
                    out.coeffs[e].insert(mono.clone(), c.clone());
                }
            }
        }
        out
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.var_count, other.var_count, "series over different variables");
    }

    /// Common order of a binary operation: the smaller one.
    fn joint_order(&self, other: &Self) -> usize {
        self.check_compatible(other);
        self.order.min(other.order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.joint_order(other);
        let mut out = self.truncate(order);
        for (e, poly) in other.coeffs.iter().take(order + 1).enumerate() {
            for (mono, c) in poly {
                if mono.iter().all(|&a| a as usize <= order) {
                    add_into(&mut out.coeffs[e], mono.clone(), c.clone());
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-ExactRat::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        let mut out = Self::zero(self.order, self.var_count);
        if c.is_zero() {
            return out;
        }
        for (e, poly) in self.coeffs.iter().enumerate() {
            out.coeffs[e] = poly.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.joint_order(other);
        let mut out = Self::zero(order, self.var_count);
        for e1 in 0..=order {
            let left = &self.coeffs[e1];
            if left.is_empty() {
                continue;
            }
            for e2 in 0..=order - e1 {
                let right = &other.coeffs[e2];
                if right.is_empty() {
                    continue;
                }
                let target = &mut out.coeffs[e1 + e2];
                for (m1, c1) in left {
                    for (m2, c2) in right {
                        let mono: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                        if mono.iter().all(|&a| a as usize <= order) {
                            add_into(target, mono, c1 * c2);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order, self.var_count);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `c * t^t_exp * x^exps`.
    pub fn mul_monomial(&self, t_exp: usize, exps: &[u32], c: &ExactRat) -> Self {
        self.mul(&Self::monomial(self.order, self.var_count, t_exp, exps, c.clone()))
    }

    /// Multiplicative inverse; the `t^0` coefficient must be a nonzero
    /// constant.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = match self.coeffs[0].len() {
            1 => self.coeffs[0].get(&vec![0; self.var_count]).cloned(),
            _ => None,
        }
        .ok_or_else(|| Error::Cancellation("divisor has no invertible constant term".into()))?;
        let c0_inv = c0.recip();
        // b_e = -(1/c0) Σ_{k=1..e} a_k b_{e-k}
        let mut out = Self::zero(self.order, self.var_count);
        out.coeffs[0].insert(vec![0; self.var_count], c0_inv.clone());
        let minus_inv = -c0_inv;
        for e in 1..=self.order {
            let mut acc = Poly::new();
            for k in 1..=e {
                for (m1, c1) in &self.coeffs[k] {
                    for (m2, c2) in &out.coeffs[e - k] {
                        let mono: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                        if mono.iter().all(|&a| a as usize <= self.order) {
                            add_into(&mut acc, mono, c1 * c2);
                        }
                    }
                }
            }
            out.coeffs[e] = acc.into_iter().map(|(m, c)| (m, c * &minus_inv)).collect();
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Exact division by `t^k`; the result has order `order - k`.
    pub fn div_t_pow(&self, k: usize) -> Result<Self> {
        if k > self.order {
            return Err(Error::Cancellation(format!("cannot divide an order-{} series by t^{k}", self.order)));
        }
        if let Some(e) = (0..k).find(|&e| !self.coeffs[e].is_empty()) {
            return Err(Error::Cancellation(format!("t^{e} coefficient is nonzero, not divisible by t^{k}")));
        }
        let out = TruncSeries {
            order: self.order - k,
            var_count: self.var_count,
            coeffs: self.coeffs[k..].to_vec(),
        };
        Ok(out.truncate(self.order - k))
    }

    /// Exact division by `x^exps`.
    pub fn div_x_monomial(&self, exps: &[u32]) -> Result<Self> {
        assert_eq!(exps.len(), self.var_count);
        let mut out = Self::zero(self.order, self.var_count);
        for (e, poly) in self.coeffs.iter().enumerate() {
            for (mono, c) in poly {
                if mono.iter().zip(exps).any(|(a, b)| a < b) {
                    return Err(Error::Cancellation(format!("t^{e} x^{mono:?} is not divisible by x^{exps:?}")));
                }
                let m = mono.iter().zip(exps).map(|(a, b)| a - b).collect();
                out.coeffs[e].insert(m, c.clone());
            }
        }
        Ok(out)
    }

    /// Substitutes `x_j = 1`; the variable stays but no longer occurs.
    pub fn set_var_one(&self, j: usize) -> Self {
        let mut out = Self::zero(self.order, self.var_count);
        for (e, poly) in self.coeffs.iter().enumerate() {
            for (mono, c) in poly {
                let mut m = mono.clone();
                m[j] = 0;
                add_into(&mut out.coeffs[e], m, c.clone());
            }
        }
        out
    }

    /// Substitutes `x_j = 0`.
    pub fn set_var_zero(&self, j: usize) -> Self {
        let mut out = Self::zero(self.order, self.var_count);
        for (e, poly) in self.coeffs.iter().enumerate() {
            out.coeffs[e] = poly.iter().filter(|(m, _)| m[j] == 0).map(|(m, c)| (m.clone(), c.clone())).collect();
        }
        out
    }

    /// Moves variable `i` to position `targets[i]` of a series in
    /// `var_count` variables.
    pub fn embed(&self, var_count: usize, targets: &[usize]) -> Self {
        assert_eq!(targets.len(), self.var_count);
        let mut out = Self::zero(self.order, var_count);
        for (e, poly) in self.coeffs.iter().enumerate() {
            for (mono, c) in poly {
                let mut m = vec![0; var_count];
                for (i, &a) in mono.iter().enumerate() {
                    m[targets[i]] += a;
                }
                add_into(&mut out.coeffs[e], m, c.clone());
            }
        }
        out
    }

    /// Keeps the listed variables, in that order; all others must be absent.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let mut out = Self::zero(self.order, keep.len());
        for (e, poly) in self.coeffs.iter().enumerate() {
            for (mono, c) in poly {
                debug_assert!((0..self.var_count).all(|j| keep.contains(&j) || mono[j] == 0));
                let m = keep.iter().map(|&j| mono[j]).collect();
                add_into(&mut out.coeffs[e], m, c.clone());
            }
        }
        out
    }

    fn map_terms(&self, weight: impl Fn(usize, &Monomial) -> i64) -> Self {
        let mut out = Self::zero(self.order, self.var_count);
        for (e, poly) in self.coeffs.iter().enumerate() {
            for (mono, c) in poly {
                add_into(&mut out.coeffs[e], mono.clone(), c * int_rat(weight(e, mono)));
            }
        }
        out
    }

    /// `t d/dt`.
    pub fn t_dt(&self) -> Self {
        self.map_terms(|e, _| e as i64)
    }

    /// `x_j d/dx_j`.
    pub fn x_dx(&self, j: usize) -> Self {
        self.map_terms(|_, m| m[j] as i64)
    }

    /// `d/dx_j (x_j ·)`.
    pub fn dx_x(&self, j: usize) -> Self {
        self.map_terms(|_, m| m[j] as i64 + 1)
    }

    /// Lines `e d1 d2 ... : num/den`, by increasing `e` then exponents.
    pub fn dump_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (e, poly) in self.coeffs.iter().enumerate() {
            for (mono, c) in poly {
                let mut line = e.to_string();
                for a in mono {
                    line.push(' ');
                    line.push_str(&a.to_string());
                }
                line.push_str(&format!(" : {}/{}", c.numer(), c.denom()));
                out.push(line);
            }
        }
        out
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, poly) in self.coeffs.iter().enumerate() {
            for (mono, c) in poly {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({c})")?;
                for (j, &a) in mono.iter().enumerate() {
                    match a {
                        0 => {}
                        1 => write!(f, "*x{}", j + 1)?,
                        _ => write!(f, "*x{}^{a}", j + 1)?,
                    }
                }
                match e {
                    0 => {}
                    1 => write!(f, "*t")?,
                    _ => write!(f, "*t^{e}")?,
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}
