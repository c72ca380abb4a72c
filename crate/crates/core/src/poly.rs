//! Exact polynomials with big-integer coefficients.
//!
//! [`IntPoly`] is a sparse Laurent polynomial in the variables `t, s, x, r,
//! b, q`. Univariate helpers working on dense coefficient vectors (lowest
//! degree first) live in [`upoly`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Variables available to [`IntPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T = 0,
    S = 1,
    X = 2,
    R = 3,
    B = 4,
    Q = 5,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::T, Var::S, Var::X, Var::R, Var::B, Var::Q];

    pub fn name(self) -> &'static str {
        ["t", "s", "x", "r", "b", "q"][self as usize]
    }
}

pub type Exponents = [i32; 6];

/// Sparse polynomial with integer coefficients. Exponents may be negative.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly::default()
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> IntPoly {
        IntPoly::monomial(c, [0; 6])
    }

    pub fn monomial(c: impl Into<BigInt>, e: Exponents) -> IntPoly {
        let mut p = IntPoly::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn var(v: Var) -> IntPoly {
        IntPoly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, k: i32) -> IntPoly {
        let mut e = [0; 6];
        e[v as usize] = k;
        IntPoly::monomial(1, e)
    }

    /// `sum c_k v^k` from coefficients listed lowest degree first.
    pub fn from_coeffs(v: Var, coeffs: &[BigInt]) -> IntPoly {
        let mut p = IntPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = [0; 6];
            e[v as usize] = k as i32;
            p.add_term(e, c.clone());
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exponents) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Highest exponent of `v`, or `None` for the zero polynomial.
    pub fn degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v as usize]).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v as usize]).min()
    }

    /// The coefficient of `v^k`, a polynomial in the other variables.
    pub fn coeff_of(&self, v: Var, k: i32) -> IntPoly {
        let mut out = IntPoly::zero();
        for (e, c) in &self.terms {
            if e[v as usize] == k {
                let mut e2 = *e;
                e2[v as usize] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Drops every term with `v`-degree above `max`.
    pub fn truncate(&self, v: Var, max: i32) -> IntPoly {
        IntPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[v as usize] <= max)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        let mut out = IntPoly::zero();
        for (e, x) in &self.terms {
            out.add_term(*e, x * c);
        }
        out
    }

    /// Multiplies by a monomial with coefficient 1.
    pub fn shift(&self, e: Exponents) -> IntPoly {
        self.map_exponents(|x| {
            let mut y = *x;
            for i in 0..6 {
                y[i] += e[i];
            }
            y
        })
    }

    /// Applies `f` to every exponent vector, adding up colliding terms.
    pub fn map_exponents(&self, f: impl Fn(&Exponents) -> Exponents) -> IntPoly {
        let mut out = IntPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Product truncated to `v`-degree at most `max`.
    pub fn mul_trunc(&self, other: &IntPoly, v: Var, max: i32) -> IntPoly {
        let mut out = IntPoly::zero();
        let i = v as usize;
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                if e1[i] + e2[i] > max {
                    continue;
                }
                let mut e = *e1;
                for k in 0..6 {
                    e[k] += e2[k];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Replaces `v` by the integer `value` (nonnegative exponents of `v` only).
    pub fn eval_var(&self, v: Var, value: &BigInt) -> IntPoly {
        let mut out = IntPoly::zero();
        for (e, c) in &self.terms {
            let k = e[v as usize];
            assert!(k >= 0, "negative exponent when evaluating {}", v.name());
            let mut e2 = *e;
            e2[v as usize] = 0;
            out.add_term(e2, c * value.pow(k as u32));
        }
        out
    }

    /// Replaces `v` by the polynomial `p` (nonnegative exponents of `v` only).
    pub fn substitute(&self, v: Var, p: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (e, c) in &self.terms {
            let k = e[v as usize];
            assert!(k >= 0, "negative exponent when substituting {}", v.name());
            let mut e2 = *e;
            e2[v as usize] = 0;
            out = &out + &p.pow(k as u32).shift(e2).scale(c);
        }
        out
    }

    /// Inverse of a power series in `v` with constant term 1, through `v^max`.
    pub fn inv_series(&self, v: Var, max: i32) -> Result<IntPoly> {
        if self.coeff_of(v, 0) != IntPoly::one() || self.min_degree(v).unwrap_or(0) < 0 {
            return Err(Error::InvalidArgument("series must have constant term 1".into()));
        }
        let q = self - &IntPoly::one();
        let neg_q = -&q;
        let mut term = IntPoly::one();
        let mut acc = IntPoly::one();
        for _ in 0..max {
            term = term.mul_trunc(&neg_q, v, max);
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc.truncate(v, max))
    }

    /// Exact division. Fails unless `divisor` divides `self`.
    ///
    /// Lexicographic long division. In an exact quotient every exponent of
    /// each variable lies between the differences of the minimum and of the
    /// maximum degrees, which bounds the loop.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (lead_e, lead_c) = divisor.terms.iter().next_back().ok_or(Error::DivisionNotExact)?;
        let mut lo = [0i32; 6];
        let mut hi = [0i32; 6];
        if !self.is_zero() {
            for v in Var::ALL {
                let i = v as usize;
                lo[i] = self.min_degree(v).unwrap() - divisor.min_degree(v).unwrap();
                hi[i] = self.degree(v).unwrap() - divisor.degree(v).unwrap();
            }
        }
        let mut rem = self.clone();
        let mut quot = IntPoly::zero();
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::DivisionNotExact);
            }
            let mut qe = [0; 6];
            for i in 0..6 {
                qe[i] = e[i] - lead_e[i];
                if qe[i] < lo[i] || qe[i] > hi[i] {
                    return Err(Error::DivisionNotExact);
                }
            }
            let t = IntPoly::monomial(q, qe);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Dense coefficients of a univariate polynomial in `v`, lowest first.
    pub fn to_coeffs(&self, v: Var) -> Result<Vec<BigInt>> {
        let mut out: Vec<BigInt> = vec![];
        for (e, c) in &self.terms {
            let k = e[v as usize];
            if k < 0 || (0..6).any(|i| i != v as usize && e[i] != 0) {
                return Err(Error::InvalidArgument(format!("not a polynomial in {} alone", v.name())));
            }
            let k = k as usize;
            if out.len() <= k {
                out.resize(k + 1, BigInt::zero());
            }
            out[k] = c.clone();
        }
        Ok(out)
    }
}

impl fmt::Display for IntPoly {
    /// Terms in increasing exponent order, e.g. `s*t + 2*s^2*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Terms by increasing t-degree; within a term t is written last.
        let mut first = true;
        for (e, c) in &self.terms {
            let mut factors = vec![];
            for v in [Var::S, Var::X, Var::R, Var::B, Var::Q, Var::T] {
                match e[v as usize] {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    k => factors.push(format!("{}^{}", v.name(), k)),
                }
            }
            let neg = c.is_negative();
            let abs = c.abs();
            let body = if factors.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", abs, factors.join("*"))
            };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = *e1;
                for k in 0..6 {
                    e[k] += e2[k];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Dense univariate polynomials, coefficients lowest degree first.
pub mod upoly {
    use super::*;

    pub fn trim(p: &mut Vec<BigInt>) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    pub fn degree(p: &[BigInt]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }

    pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(&mut out);
        out
    }

    /// Exact quotient `a / b`, or `None` when `b` does not divide `a` in `Z[x]`.
    pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
        let db = degree(b)?;
        let mut rem: Vec<BigInt> = a.to_vec();
        trim(&mut rem);
        if rem.is_empty() {
            return Some(vec![]);
        }
        let da = rem.len() - 1;
        if da < db {
            return None;
        }
        let lead = &b[db];
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = &rem[k + db];
            if c.is_zero() {
                continue;
            }
            let (qq, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, y) in b.iter().enumerate().take(db + 1) {
                rem[k + j] -= &qq * y;
            }
            q[k] = qq;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        trim(&mut q);
        Some(q)
    }

    pub fn derivative(p: &[BigInt]) -> Vec<BigInt> {
        let mut out: Vec<BigInt> =
            p.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
        trim(&mut out);
        out
    }

    fn content(p: &[BigInt]) -> BigInt {
        p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive(p: &[BigInt]) -> Vec<BigInt> {
        let mut g = content(p);
        if g.is_zero() {
            return vec![];
        }
        if degree(p).is_some_and(|d| p[d].is_negative()) {
            g = -g;
        }
        let mut out: Vec<BigInt> = p.iter().map(|c| c / &g).collect();
        trim(&mut out);
        out
    }

    /// Pseudo-remainder of `a` by `b`.
    fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let db = degree(b).expect("nonzero divisor");
        let mut r: Vec<BigInt> = a.to_vec();
        trim(&mut r);
        let lead = b[db].clone();
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let c = r[dr].clone();
            for x in r.iter_mut() {
                *x *= &lead;
            }
            for (j, y) in b.iter().enumerate().take(db + 1) {
                r[dr - db + j] -= &c * y;
            }
            trim(&mut r);
        }
        r
    }

    /// Greatest common divisor in `Z[x]`, primitive with positive leading coefficient.
    pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut x = primitive(a);
        let mut y = primitive(b);
        if x.is_empty() {
            return y;
        }
        while !y.is_empty() {
            let r = prem(&x, &y);
            x = y;
            y = primitive(&r);
        }
        primitive(&x)
    }

    /// Product of the distinct irreducible factors of `p`, up to a constant.
    pub fn squarefree_part(p: &[BigInt]) -> Vec<BigInt> {
        let d = derivative(p);
        if d.is_empty() {
            return primitive(p);
        }
        let g = gcd(p, &d);
        div_exact(&primitive(p), &g).map(|q| primitive(&q)).unwrap_or_else(|| primitive(p))
    }

    pub fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
        p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn to_f64(p: &[BigInt]) -> Vec<f64> {
        p.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn from_i64(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut n0 = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n0 {
        if n0.is_multiple_of(p) {
            while n0.is_multiple_of(p) {
                n0 /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n0 > 1 {
        out -= out / n0;
    }
    out
}

fn mobius(n: u64) -> i32 {
    let mut n0 = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n0 {
        if n0.is_multiple_of(p) {
            n0 /= p;
            if n0.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n0 > 1 {
        sign = -sign;
    }
    sign
}

/// Coefficients of the cyclotomic polynomial `Phi_d`, lowest degree first.
///
/// Uses `Phi_d = prod_{e | d} (1 - x^e)^{mu(d/e)}` for `d >= 2`, expanded as
/// a power series truncated at the degree `phi(d)`.
pub fn cyclotomic(d: u64) -> Vec<BigInt> {
    assert!(d >= 1);
    if d == 1 {
        return upoly::from_i64(&[-1, 1]);
    }
    let deg = totient(d) as usize;
    let mut s = vec![0i64; deg + 1];
    s[0] = 1;
    let divisors: Vec<u64> = (1..=d).filter(|e| d.is_multiple_of(*e)).collect();
    for &e in &divisors {
        let e_us = e as usize;
        match mobius(d / e) {
            1 => {
                // Multiply by (1 - x^e).
                for k in (e_us..=deg).rev() {
                    s[k] -= s[k - e_us];
                }
            }
            -1 => {
                // Multiply by 1 / (1 - x^e) = 1 + x^e + x^2e + ...
                for k in e_us..=deg {
                    s[k] += s[k - e_us];
                }
            }
            _ => {}
        }
    }
    upoly::from_i64(&s)
}

/// Multiplicities of cyclotomic factors and the cyclotomic-free remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactorization {
    /// `(d, multiplicity)` with `d` increasing.
    pub factors: Vec<(u64, u32)>,
    pub remainder: Vec<BigInt>,
}

impl CycloFactorization {
    /// Multiplies everything back together.
    pub fn expand(&self) -> Vec<BigInt> {
        let mut acc = self.remainder.clone();
        for &(d, m) in &self.factors {
            let phi = cyclotomic(d);
            for _ in 0..m {
                acc = upoly::mul(&acc, &phi);
            }
        }
        acc
    }

    /// `true` when the remainder is the constant 1 or -1.
    pub fn is_complete(&self) -> bool {
        self.remainder.len() == 1 && self.remainder[0].abs().is_one()
    }

    /// Compact form such as `Phi1^2 Phi2 Phi3 Phi5`, with a sign or
    /// remainder when needed.
    pub fn to_notation(&self) -> String {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(d, m)| if m == 1 { format!("Phi{d}") } else { format!("Phi{d}^{m}") })
            .collect();
        if !self.is_complete() {
            parts.push(format!("({})", IntPoly::from_coeffs(Var::X, &self.remainder)));
        } else if self.remainder[0].is_negative() {
            parts.insert(0, "-".into());
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

const SIEVE_PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

fn mod_coeffs(p: &[BigInt]) -> Vec<u64> {
    let m = BigInt::from(SIEVE_PRIME);
    p.iter().map(|c| c.mod_floor(&m).to_u64().unwrap()).collect()
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % SIEVE_PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

/// Divisibility test modulo a large prime, used to skip hopeless trial divisions.
fn divides_mod_p(a: &[u64], b: &[u64]) -> bool {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return a.iter().all(|&c| c == 0);
    }
    let inv = powmod(b[db], SIEVE_PRIME - 2);
    let mut r = a.to_vec();
    for k in (0..=a.len() - b.len()).rev() {
        let c = mulmod(r[k + db], inv);
        if c == 0 {
            continue;
        }
        for j in 0..=db {
            let sub = mulmod(c, b[j]);
            r[k + j] = (r[k + j] + SIEVE_PRIME - sub) % SIEVE_PRIME;
        }
    }
    r.iter().all(|&c| c == 0)
}

/// Strips all cyclotomic factors from `p` by exact trial division, trying
/// every `d` with `phi(d)` at most the remaining degree.
pub fn cyclotomic_factor(p: &[BigInt]) -> CycloFactorization {
    let mut rem: Vec<BigInt> = p.to_vec();
    upoly::trim(&mut rem);
    let mut factors = vec![];
    let Some(mut deg) = upoly::degree(&rem) else {
        return CycloFactorization { factors, remainder: rem };
    };
    // phi(d) >= sqrt(d / 2), so d <= 2 deg^2 covers every candidate.
    let bound = (2 * (deg as u64).pow(2)).max(2);
    let mut d = 1;
    while d <= bound {
        let phi = totient(d) as usize;
        if phi <= deg {
            let cyc = cyclotomic(d);
            let cyc_mod = mod_coeffs(&cyc);
            let mut mult = 0;
            while phi <= deg && divides_mod_p(&mod_coeffs(&rem), &cyc_mod) {
                match upoly::div_exact(&rem, &cyc) {
                    Some(q) => {
                        rem = q;
                        mult += 1;
                        deg -= phi;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                factors.push((d, mult));
            }
        }
        d += 1;
    }
    CycloFactorization { factors, remainder: rem }
}

/// Builds a polynomial from `(d, multiplicity)` cyclotomic factors.
pub fn cyclotomic_product(factors: &[(u64, u32)]) -> Vec<BigInt> {
    CycloFactorization { factors: factors.to_vec(), remainder: vec![BigInt::one()] }.expand()
}
