//! Generating series of intervals by size `t` and blocks of the bottom `s`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::dexter;
use crate::error::{Error, Result};
use crate::monoid::is_shape_b;
use crate::poly::{IntPoly, Var};
use crate::verify::{Check, Report};

use super::{check_cap, interval_count_formula};

/// All intervals, reduced intervals, or core intervals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    A,
    R,
    C,
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SeriesKind> {
        match s {
            "A" | "a" => Ok(SeriesKind::A),
            "R" | "r" => Ok(SeriesKind::R),
            "C" | "c" => Ok(SeriesKind::C),
            other => Err(Error::InvalidArgument(format!("unknown series kind {other:?}"))),
        }
    }
}

/// `coeffs[n][j]` counts intervals of size `n` whose bottom has `j` blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    pub kind: SeriesKind,
    pub coeffs: Vec<Vec<BigInt>>,
}

impl SeriesTable {
    fn empty(kind: SeriesKind, max: usize) -> SeriesTable {
        SeriesTable {
            kind,
            coeffs: (0..=max).map(|n| vec![BigInt::zero(); n + 1]).collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, n: usize, j: usize) -> BigInt {
        self.coeffs.get(n).and_then(|r| r.get(j)).cloned().unwrap_or_default()
    }

    /// Sum over `j` of the `t^n` coefficients.
    pub fn total(&self, n: usize) -> BigInt {
        self.coeffs[n].iter().sum()
    }

    pub fn to_poly(&self) -> IntPoly {
        let mut p = IntPoly::zero();
        for (n, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let mut e = [0; 6];
                e[Var::T as usize] = n as i32;
                e[Var::S as usize] = j as i32;
                p = &p + &IntPoly::monomial(c.clone(), e);
            }
        }
        p
    }
}

impl fmt::Display for SeriesTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Brute-force tables for all three kinds through `t^max`.
pub fn all_series(max: usize) -> Result<[SeriesTable; 3]> {
    check_cap(max)?;
    let mut a = SeriesTable::empty(SeriesKind::A, max);
    let mut r = SeriesTable::empty(SeriesKind::R, max);
    let mut c = SeriesTable::empty(SeriesKind::C, max);
    for n in 0..=max {
        let d = dexter::hasse(n)?;
        let els = d.elements();
        for i in 0..d.len() {
            let bottom = els[i];
            let j = bottom.num_blocks();
            let up = d.up_set(i);
            let count = BigInt::from(up.len());
            a.coeffs[n][j] += &count;
            if bottom.is_empty() || bottom.ends_with_peak() {
                r.coeffs[n][j] += &count;
            }
            if bottom.ends_with_peak() {
                let cores = up.iter().filter(|&&k| is_shape_b(els[k])).count();
                c.coeffs[n][j] += BigInt::from(cores);
            }
        }
        if n == 2 {
            // The diagonal interval at (1,0,1,0).
            c.coeffs[2][2] += 1;
        }
    }
    Ok([a, r, c])
}

pub fn series(kind: SeriesKind, max: usize) -> Result<SeriesTable> {
    let [a, r, c] = all_series(max)?;
    Ok(match kind {
        SeriesKind::A => a,
        SeriesKind::R => r,
        SeriesKind::C => c,
    })
}

fn s() -> IntPoly {
    IntPoly::var(Var::S)
}

fn t() -> IntPoly {
    IntPoly::var(Var::T)
}

fn at_s1(p: &IntPoly) -> IntPoly {
    p.eval_var(Var::S, &BigInt::from(1))
}

/// `(s f - f|_{s=1}) / (s - 1)`, exactly.
fn divided_difference(f: &IntPoly) -> Result<IntPoly> {
    let num = &(&s() * f) - &at_s1(f);
    num.div_exact(&(&s() - &IntPoly::one()))
}

/// Evaluates the four functional equations on the given series, comparing
/// both sides through `t^deg`. The inputs must be known through `t^(deg+1)`.
pub fn check_functional_equations(
    a: &IntPoly,
    r: &IntPoly,
    c: &IntPoly,
    deg: i32,
) -> Result<[bool; 4]> {
    let one = IntPoly::one();
    let st = &s() * &t();
    let a1 = at_s1(a);
    let am1 = a - &one;
    let tr = |p: &IntPoly| p.truncate(Var::T, deg);
    let mul = |x: &IntPoly, y: &IntPoly| x.mul_trunc(y, Var::T, deg);

    let rhs1 = r + &mul(&(&t() * &am1), &a1);
    let eq1 = tr(a) == tr(&rhs1);

    let lhs2 = (r - &one).div_exact(&st)?;
    let rhs2 = &one + &mul(&am1.div_exact(&st)?, &c.div_exact(&st)?);
    let eq2 = tr(&lhs2) == tr(&rhs2);

    let dd = divided_difference(&a.truncate(Var::T, deg))?;
    let s2t2 = &st * &st;
    let rhs3 = mul(&s2t2, &(&one + &dd));
    let eq3 = tr(c) == tr(&rhs3);

    let rhs4 = &(&(&one + &st) + &mul(&mul(&st, &am1), &(&one + &dd))) + &mul(&(&t() * &am1), &a1);
    let eq4 = tr(a) == tr(&rhs4);
    Ok([eq1, eq2, eq3, eq4])
}

/// Builds the tables by enumeration through `t^(deg+1)` and checks the
/// four functional equations through `t^deg`.
pub fn verify_functional_equations(deg: usize) -> Result<Report> {
    let [a, r, c] = all_series(deg + 1)?;
    let res = check_functional_equations(&a.to_poly(), &r.to_poly(), &c.to_poly(), deg as i32)?;
    let names = [
        ("f_A = f_R + t (f_A - 1) f_A|s=1", "non-reduced intervals factor through strips"),
        ("(f_R - 1)/(st) = 1 + (f_A - 1)/(st) * f_C/(st)", "last factor of a reduced interval is core"),
        ("f_C = s^2 t^2 (1 + (s f_A - f_A|s=1)/(s - 1))", "core intervals and chains"),
        ("f_A = 1 + st + st (f_A - 1)(1 + ...) + t (f_A - 1) f_A|s=1", "combined functional equation"),
    ];
    let mut report = Report::new();
    for ((name, reference), ok) in names.iter().zip(res) {
        report.push(Check::new(*name, *reference, ok, format!("through t^{deg}")));
    }
    Ok(report)
}

/// `g = sum_n count(n) t^n` from the closed formula, through `t^deg`.
pub fn g_from_formula(deg: usize) -> IntPoly {
    let coeffs: Vec<BigInt> = (0..=deg).map(interval_count_formula).collect();
    IntPoly::from_coeffs(Var::T, &coeffs)
}

/// `16 g^2 t^2 - g (8 t^2 + 12 t - 1) + t^2 + 11 t - 1` through `t^deg`.
pub fn algebraic_residual(g: &IntPoly, deg: usize) -> IntPoly {
    let deg = deg as i32;
    let c = |k: i64| IntPoly::constant(k);
    let t = t();
    let t2 = &t * &t;
    let g2 = g.mul_trunc(g, Var::T, deg);
    let term1 = (&c(16) * &t2).mul_trunc(&g2, Var::T, deg);
    let lin = &(&(&c(8) * &t2) + &(&c(12) * &t)) - &c(1);
    let term2 = g.mul_trunc(&lin, Var::T, deg);
    let rest = &(&t2 + &(&c(11) * &t)) - &c(1);
    (&(&term1 - &term2) + &rest).truncate(Var::T, deg)
}

/// Checks the algebraic equation through `t^deg` and the agreement of the
/// formula with enumeration up to `enum_max`.
pub fn verify_algebraic_equation(deg: usize, enum_max: usize) -> Result<Report> {
    let mut report = Report::new();
    let residual = algebraic_residual(&g_from_formula(deg), deg);
    report.push(Check::new(
        "algebraic equation for g",
        "closed formula for the interval counts",
        residual.is_zero(),
        format!("residual through t^{deg}: {residual}"),
    ));
    let mut mismatches = vec![];
    for n in 0..=enum_max {
        let got = BigInt::from(super::count_intervals(n)?);
        if got != interval_count_formula(n) {
            mismatches.push(n);
        }
    }
    report.push(Check::new(
        "closed formula matches enumeration",
        "interval count sequence",
        mismatches.is_empty(),
        format!("n = 0..={enum_max}, mismatches at {mismatches:?}"),
    ));
    Ok(report)
}
