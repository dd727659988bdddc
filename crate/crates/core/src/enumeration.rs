//! Exact counting: recurrence tables, closed forms and truncated power series,
//! plus a cross-check of all of them against brute-force enumeration.

use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::{standard_config, Family};
use crate::partition::count_noncrossing_capped;

/// Default cap on configuration size for the brute-force leg of [`cross_check`].
pub const DEFAULT_BRUTE_FORCE_POINTS: usize = 10;

fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

fn matrix_json(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(|v| Value::String(v.to_string())).collect()))
            .collect(),
    )
}

/// A power series in one variable truncated after `x^{len−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateSeries {
    coeffs: Vec<BigInt>,
}

impl UnivariateSeries {
    /// `coeffs` padded with zeros (or truncated) to `order + 1` terms.
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        UnivariateSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies by `x^k` (`k > 0`) or divides by `x^{−k}`, discarding
    /// the low terms; callers divide only when those terms are zero.
    pub fn shift(&self, k: isize) -> Self {
        let order = self.order();
        let coeffs = (0..=order)
            .map(|i| {
                let src = i as isize - k;
                if src < 0 {
                    BigInt::zero()
                } else {
                    self.coeff(src as usize)
                }
            })
            .collect();
        UnivariateSeries { coeffs }
    }

    /// `1 / self`; the constant term must be `±1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::InvalidInput("reciprocal needs constant term ±1".into()));
        }
        let mut r = vec![BigInt::zero(); self.coeffs.len()];
        for n in 0..r.len() {
            let mut acc = if n == 0 { BigInt::one() } else { BigInt::zero() };
            for k in 1..=n {
                acc -= &self.coeffs[k] * &r[n - k];
            }
            r[n] = acc * c0;
        }
        Ok(UnivariateSeries { coeffs: r })
    }
}

impl Add for &UnivariateSeries {
    type Output = UnivariateSeries;
    fn add(self, rhs: Self) -> UnivariateSeries {
        let order = self.order().min(rhs.order());
        UnivariateSeries::new((0..=order).map(|k| self.coeff(k) + rhs.coeff(k)).collect(), order)
    }
}

impl Sub for &UnivariateSeries {
    type Output = UnivariateSeries;
    fn sub(self, rhs: Self) -> UnivariateSeries {
        self + &-rhs
    }
}

impl Neg for &UnivariateSeries {
    type Output = UnivariateSeries;
    fn neg(self) -> UnivariateSeries {
        UnivariateSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UnivariateSeries {
    type Output = UnivariateSeries;
    fn mul(self, rhs: Self) -> UnivariateSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| (0..=n).map(|k| &self.coeffs[k] * &rhs.coeffs[n - k]).sum())
            .collect();
        UnivariateSeries { coeffs }
    }
}

/// A power series in `x, y` truncated to `x^0..x^M`, `y^0..y^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    coeffs: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn zero(order_x: usize, order_y: usize) -> Self {
        BivariateSeries {
            coeffs: vec![vec![BigInt::zero(); order_y + 1]; order_x + 1],
        }
    }

    /// A polynomial from `(i, j, c)` terms meaning `c·x^i·y^j`; terms beyond the orders are dropped.
    pub fn polynomial(terms: &[(usize, usize, i64)], order_x: usize, order_y: usize) -> Self {
        let mut s = Self::zero(order_x, order_y);
        for &(i, j, c) in terms {
            if i <= order_x && j <= order_y {
                s.coeffs[i][j] += c;
            }
        }
        s
    }

    /// `x^i · f(y)`.
    pub fn from_y_series(i: usize, f: &UnivariateSeries, order_x: usize, order_y: usize) -> Self {
        let mut s = Self::zero(order_x, order_y);
        if i <= order_x {
            for j in 0..=order_y {
                s.coeffs[i][j] = f.coeff(j);
            }
        }
        s
    }

    pub fn order_x(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn order_y(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, m: usize, n: usize) -> BigInt {
        self.coeffs
            .get(m)
            .and_then(|row| row.get(n))
            .cloned()
            .unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    /// Coefficient matrix with entries as decimal strings.
    pub fn to_json(&self) -> Value {
        matrix_json(&self.coeffs)
    }

    /// `1 / self`; the constant term must be `±1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0][0];
        if c0.abs() != BigInt::one() {
            return Err(Error::InvalidInput("reciprocal needs constant term ±1".into()));
        }
        let (mx, my) = (self.order_x(), self.order_y());
        let mut r = Self::zero(mx, my);
        for m in 0..=mx {
            for n in 0..=my {
                let mut acc = if m == 0 && n == 0 { BigInt::one() } else { BigInt::zero() };
                for i in 0..=m {
                    for j in 0..=n {
                        if (i, j) != (0, 0) && !self.coeffs[i][j].is_zero() {
                            acc -= &self.coeffs[i][j] * &r.coeffs[m - i][n - j];
                        }
                    }
                }
                r.coeffs[m][n] = acc * c0;
            }
        }
        Ok(r)
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, rhs: Self) -> BivariateSeries {
        let (mx, my) = (self.order_x().min(rhs.order_x()), self.order_y().min(rhs.order_y()));
        let mut s = BivariateSeries::zero(mx, my);
        for m in 0..=mx {
            for n in 0..=my {
                s.coeffs[m][n] = &self.coeffs[m][n] + &rhs.coeffs[m][n];
            }
        }
        s
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;
    fn mul(self, rhs: Self) -> BivariateSeries {
        let (mx, my) = (self.order_x().min(rhs.order_x()), self.order_y().min(rhs.order_y()));
        let mut s = BivariateSeries::zero(mx, my);
        for i in 0..=mx {
            for j in 0..=my {
                if self.coeffs[i][j].is_zero() {
                    continue;
                }
                for k in 0..=mx - i {
                    for l in 0..=my - j {
                        s.coeffs[i + k][j + l] += &self.coeffs[i][j] * &rhs.coeffs[k][l];
                    }
                }
            }
        }
        s
    }
}

/// Counts for one family indexed by `(m, n)`. The `T` family uses the single
/// row `m = 0` indexed by `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub family: Family,
    pub values: Vec<Vec<BigInt>>,
}

impl CountTable {
    pub fn get(&self, m: usize, n: usize) -> &BigInt {
        &self.values[m][n]
    }

    pub fn rows(&self) -> usize {
        self.values.len()
    }

    pub fn cols(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    /// Header row holds `n`, first column holds `m`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m\\n");
        for n in 0..self.cols() {
            let _ = write!(out, ",{n}");
        }
        out.push('\n');
        for (m, row) in self.values.iter().enumerate() {
            let _ = write!(out, "{m}");
            for v in row {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({ "family": self.family.letter(), "values": matrix_json(&self.values) })
    }

    fn from_series(family: Family, s: &BivariateSeries) -> Self {
        CountTable {
            family,
            values: s.coeffs.clone(),
        }
    }
}

/// Catalan numbers `C_0..=C_k` by the convolution recurrence.
pub fn catalan_numbers(k: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for n in 0..k {
        let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        c.push(next);
    }
    c
}

pub fn catalan(k: usize) -> BigInt {
    catalan_numbers(k).pop().expect("nonempty")
}

/// `(n+3)·2^{n−2}` for `n ≥ 2`, with `t_0 = 1` and `t_1 = 2`.
pub fn t_closed(n: usize) -> BigInt {
    match n {
        0 => BigInt::one(),
        1 => BigInt::from(2),
        _ => BigInt::from(n + 3) * pow2(n - 2),
    }
}

/// `t_0..=t_n` from `t_k = 2t_{k−1} + 2^{k−2}`.
pub fn t_recurrence_table(n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::one(), BigInt::from(2)];
    for k in 2..=n {
        let next = BigInt::from(2) * &t[k - 1] + pow2(k - 2);
        t.push(next);
    }
    t.truncate(n + 1);
    t
}

pub fn t_table(n: usize) -> CountTable {
    CountTable {
        family: Family::T,
        values: vec![t_recurrence_table(n)],
    }
}

pub fn u_table(mm: usize, nn: usize) -> CountTable {
    let size = mm.max(nn).max(1);
    let t = t_recurrence_table(size);
    let mut u = vec![vec![BigInt::zero(); nn + 1]; mm + 1];
    for m in 0..=mm {
        for n in 0..=nn {
            u[m][n] = match (m, n) {
                (0, 0) => BigInt::zero(),
                (0, n) => pow2(n - 1),
                (m, 0) => pow2(m - 1),
                (1, n) => t[n].clone(),
                (m, n) => {
                    let mut acc = BigInt::from(2) * &u[m - 1][n];
                    for k in 1..=n {
                        acc += &u[m - 1][k - 1] * pow2(n - k);
                    }
                    acc
                }
            };
        }
    }
    CountTable {
        family: Family::U,
        values: u,
    }
}

pub fn v_table(mm: usize, nn: usize) -> CountTable {
    let u = u_table(mm, nn);
    let mut v = vec![vec![BigInt::zero(); nn + 1]; mm + 1];
    for m in 0..=mm {
        for n in 0..=nn {
            v[m][n] = match (m, n) {
                (0, n) => pow2(n),
                (m, 0) => pow2(m),
                (m, n) => u.get(m, n) + &v[m - 1][n] + &v[m][n - 1] - &v[m - 1][n - 1],
            };
        }
    }
    CountTable {
        family: Family::V,
        values: v,
    }
}

pub fn s_table(mm: usize, nn: usize) -> CountTable {
    s_table_with_offset(mm, nn, 0)
}

/// `s_table` with the Catalan index in the interior recurrence shifted by
/// `offset`; a nonzero offset exists only to exercise failure reporting.
#[doc(hidden)]
pub fn s_table_with_offset(mm: usize, nn: usize, offset: usize) -> CountTable {
    let c = catalan_numbers(nn + 2 + offset);
    let mut s = vec![vec![BigInt::zero(); nn + 1]; mm + 1];
    for m in 0..=mm {
        for n in 0..=nn {
            s[m][n] = match (m, n) {
                (m, 0) => pow2(m + 1),
                (0, n) => c[n + 2].clone(),
                (m, n) => {
                    let mut acc = BigInt::from(2) * &s[m - 1][n];
                    for k in 1..=n {
                        acc += &s[m - 1][k - 1] * &c[n - k + 1 + offset];
                    }
                    acc
                }
            };
        }
    }
    CountTable {
        family: Family::S,
        values: s,
    }
}

fn cone_denominator(mm: usize, nn: usize) -> BivariateSeries {
    BivariateSeries::polynomial(&[(0, 0, 1), (1, 0, -2), (0, 1, -2), (1, 1, 3)], mm, nn)
}

/// `(x + y − 2xy) / (1 − 2x − 2y + 3xy)`.
pub fn series_u(mm: usize, nn: usize) -> BivariateSeries {
    let num = BivariateSeries::polynomial(&[(1, 0, 1), (0, 1, 1), (1, 1, -2)], mm, nn);
    &num * &cone_denominator(mm, nn).reciprocal().expect("unit constant term")
}

/// `1 / (1 − 2x − 2y + 3xy)`.
pub fn series_v(mm: usize, nn: usize) -> BivariateSeries {
    cone_denominator(mm, nn).reciprocal().expect("unit constant term")
}

/// `C(y) = Σ C_n y^n`.
pub fn catalan_series(order: usize) -> UnivariateSeries {
    UnivariateSeries::new(catalan_numbers(order), order)
}

/// `((C(y) − 1 − y) / y²) · 1 / (1 − x(1 + C(y)))`.
pub fn series_s(mm: usize, nn: usize) -> BivariateSeries {
    // two extra terms so the division by y² keeps order nn
    let c = catalan_series(nn + 2);
    let head = &c - &UnivariateSeries::from_ints(&[1, 1], nn + 2);
    let d = UnivariateSeries::new(head.shift(-2).coeffs()[..=nn].to_vec(), nn);
    let one_plus_c = &UnivariateSeries::from_ints(&[1], nn) + &catalan_series(nn);
    let one = BivariateSeries::polynomial(&[(0, 0, 1)], mm, nn);
    let ratio = BivariateSeries::from_y_series(1, &-&one_plus_c, mm, nn);
    let geometric = (&one + &ratio).reciprocal().expect("unit constant term");
    &BivariateSeries::from_y_series(0, &d, mm, nn) * &geometric
}

/// `(1 − x)² / (1 − 2x)²`.
pub fn series_t(order: usize) -> UnivariateSeries {
    let num = UnivariateSeries::from_ints(&[1, -2, 1], order);
    let den = UnivariateSeries::from_ints(&[1, -4, 4], order);
    &num * &den.reciprocal().expect("unit constant term")
}

/// Series coefficients arranged like the recurrence table of `family`.
pub fn series_table(family: Family, mm: usize, nn: usize) -> Result<CountTable> {
    Ok(match family {
        Family::U => CountTable::from_series(family, &series_u(mm, nn)),
        Family::V => CountTable::from_series(family, &series_v(mm, nn)),
        Family::S => CountTable::from_series(family, &series_s(mm, nn)),
        Family::T => CountTable {
            family,
            values: vec![series_t(nn).coeffs().to_vec()],
        },
        other => return Err(Error::UnknownFamily(other.letter().into())),
    })
}

pub fn recurrence_table(family: Family, mm: usize, nn: usize) -> Result<CountTable> {
    Ok(match family {
        Family::U => u_table(mm, nn),
        Family::V => v_table(mm, nn),
        Family::S => s_table(mm, nn),
        Family::T => t_table(nn),
        other => return Err(Error::UnknownFamily(other.letter().into())),
    })
}

fn configuration_size(family: Family, m: usize, n: usize) -> usize {
    match family {
        Family::U => m + n,
        Family::V => m + n + 1,
        Family::S => m + n + 2,
        Family::T => n + 1,
        _ => m,
    }
}

/// Brute-force lattice sizes for cells whose configuration has at most
/// `max_points` points; other cells are `None`. `U_{0,0}` is reported as `0`
/// to follow the table convention (the empty configuration has one partition).
pub fn brute_force_table(family: Family, mm: usize, nn: usize, max_points: usize) -> Result<Vec<Vec<Option<BigInt>>>> {
    let rows = if family == Family::T { 0 } else { mm };
    let mut out = vec![vec![None; nn + 1]; rows + 1];
    for (m, row) in out.iter_mut().enumerate() {
        for (n, cell) in row.iter_mut().enumerate() {
            if configuration_size(family, m, n) > max_points {
                continue;
            }
            *cell = Some(if family == Family::U && m == 0 && n == 0 {
                BigInt::zero()
            } else {
                let (cm, cn) = if family == Family::T { (n, 0) } else { (m, n) };
                BigInt::from(count_noncrossing_capped(&standard_config(family, cm, cn)?, max_points)?)
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Legs {
    pub recurrence: bool,
    pub series: bool,
    pub brute: bool,
}

impl Legs {
    pub const ALL: Legs = Legs {
        recurrence: true,
        series: true,
        brute: true,
    };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub m: usize,
    pub n: usize,
    pub leg: &'static str,
    pub expected: BigInt,
    pub found: BigInt,
    pub against: &'static str,
}

#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub family: Family,
    pub recurrence: Option<CountTable>,
    pub series: Option<CountTable>,
    pub brute: Option<Vec<Vec<Option<BigInt>>>>,
    /// Number of cells compared by the brute-force leg.
    pub brute_cells: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.letter(),
            "recurrence": self.recurrence.as_ref().map(CountTable::to_json),
            "series": self.series.as_ref().map(CountTable::to_json),
            "brute": self.brute.as_ref().map(|b| {
                b.iter()
                    .map(|row| row.iter().map(|c| c.as_ref().map(|v| v.to_string())).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            }),
            "brute_cells": self.brute_cells,
            "mismatches": self.mismatches.iter().map(|x| json!({
                "m": x.m, "n": x.n, "leg": x.leg, "against": x.against,
                "expected": x.expected.to_string(), "found": x.found.to_string(),
            })).collect::<Vec<_>>(),
            "agrees": self.agrees(),
        })
    }
}

/// Compares the requested legs cell by cell; the first requested of
/// recurrence and series serves as the reference.
pub fn cross_check(family: Family, mm: usize, nn: usize, legs: Legs, max_points: usize) -> Result<CrossCheck> {
    let recurrence = legs.recurrence.then(|| recurrence_table(family, mm, nn)).transpose()?;
    let series = legs.series.then(|| series_table(family, mm, nn)).transpose()?;
    let brute = legs.brute.then(|| brute_force_table(family, mm, nn, max_points)).transpose()?;
    let mut mismatches = Vec::new();
    let reference = recurrence
        .as_ref()
        .map(|t| (t, "recurrence"))
        .or(series.as_ref().map(|t| (t, "series")));
    let mut brute_cells = 0;
    if let Some((reference, ref_name)) = reference {
        if let (Some(s), Some(_)) = (&series, &recurrence) {
            for (m, row) in s.values.iter().enumerate() {
                for (n, v) in row.iter().enumerate() {
                    if v != reference.get(m, n) {
                        mismatches.push(Mismatch {
                            m,
                            n,
                            leg: "series",
                            expected: reference.get(m, n).clone(),
                            found: v.clone(),
                            against: ref_name,
                        });
                    }
                }
            }
        }
        if let Some(b) = &brute {
            for (m, row) in b.iter().enumerate() {
                for (n, v) in row.iter().enumerate() {
                    let Some(v) = v else { continue };
                    brute_cells += 1;
                    if v != reference.get(m, n) {
                        mismatches.push(Mismatch {
                            m,
                            n,
                            leg: "brute",
                            expected: reference.get(m, n).clone(),
                            found: v.clone(),
                            against: ref_name,
                        });
                    }
                }
            }
        }
    } else if let Some(b) = &brute {
        brute_cells = b.iter().flatten().filter(|c| c.is_some()).count();
    }
    Ok(CrossCheck {
        family,
        recurrence,
        series,
        brute,
        brute_cells,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan_numbers(6), ints(&[1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(catalan(4), BigInt::from(14));
        let c = catalan_numbers(11);
        for k in 0..=10 {
            let conv: BigInt = (0..=k).map(|i| &c[i] * &c[k - i]).sum();
            assert_eq!(conv, c[k + 1]);
        }
    }

    // independent oracle: binomial(2n, n) / (n + 1)
    #[test]
    fn catalan_matches_binomial_formula() {
        for n in 0..30u64 {
            let mut binom = BigInt::one();
            for i in 0..n {
                binom = binom * BigInt::from(2 * n - i) / BigInt::from(i + 1);
            }
            assert_eq!(catalan(n as usize), binom / BigInt::from(n + 1));
        }
    }

    #[test]
    fn t_values() {
        assert_eq!(t_recurrence_table(5), ints(&[1, 2, 5, 12, 28, 64]));
        assert_eq!(t_closed(2), BigInt::from(5));
        assert_eq!(t_closed(10), t_recurrence_table(10)[10]);
        assert_eq!(t_recurrence_table(0), ints(&[1]));
    }

    #[test]
    fn table_corners() {
        assert_eq!(u_table(4, 4).get(4, 4), &BigInt::from(838));
        assert_eq!(v_table(3, 3).get(3, 3), &BigInt::from(245));
        assert_eq!(s_table(4, 3).get(4, 3), &BigInt::from(2088));
        assert_ne!(s_table_with_offset(4, 3, 1).get(4, 3), &BigInt::from(2088));
    }

    #[test]
    fn tables_symmetry() {
        let (u, v, s) = (u_table(8, 8), v_table(8, 8), s_table(3, 3));
        for m in 0..=8 {
            for n in 0..=8 {
                assert_eq!(u.get(m, n), u.get(n, m));
                assert_eq!(v.get(m, n), v.get(n, m));
            }
        }
        assert_ne!(s.get(1, 2), s.get(2, 1));
    }

    #[test]
    fn denominator_recurrence_for_v() {
        let v = v_table(10, 10);
        for m in 1..=10 {
            for n in 1..=10 {
                let rhs = BigInt::from(2) * v.get(m - 1, n) + BigInt::from(2) * v.get(m, n - 1)
                    - BigInt::from(3) * v.get(m - 1, n - 1);
                assert_eq!(v.get(m, n), &rhs);
            }
        }
    }

    #[test]
    fn series_spot_values() {
        assert_eq!(series_v(3, 3).coeff(0, 0), BigInt::one());
        assert_eq!(series_u(3, 3).coeff(0, 0), BigInt::zero());
        assert_eq!(series_s(3, 4).coeff(2, 3), BigInt::from(317));
        assert_eq!(series_t(5).coeffs(), &ints(&[1, 2, 5, 12, 28, 64])[..]);
    }

    #[test]
    fn univariate_reciprocal() {
        let one_minus_x = UnivariateSeries::from_ints(&[1, -1], 6);
        let geo = one_minus_x.reciprocal().unwrap();
        assert_eq!(geo.coeffs(), &ints(&[1; 7])[..]);
        assert!(UnivariateSeries::from_ints(&[2, 1], 3).reciprocal().is_err());
    }

    #[test]
    fn recurrence_equals_series_on_large_range() {
        for family in [Family::U, Family::V, Family::S] {
            let c = cross_check(family, 12, 12, Legs { brute: false, ..Legs::ALL }, 0).unwrap();
            assert!(c.agrees(), "{family:?}: {:?}", c.mismatches);
        }
    }

    #[test]
    fn brute_leg_small() {
        let c = cross_check(Family::U, 2, 3, Legs::ALL, 10).unwrap();
        assert!(c.agrees(), "{:?}", c.mismatches);
        assert_eq!(c.brute_cells, 12);
        let t = cross_check(Family::T, 0, 6, Legs::ALL, 10).unwrap();
        assert!(t.agrees(), "{:?}", t.mismatches);
    }

    #[test]
    fn csv_layout() {
        let csv = u_table(1, 2).to_csv();
        assert_eq!(csv, "m\\n,0,1,2\n0,0,1,2\n1,1,2,5\n");
    }
}
