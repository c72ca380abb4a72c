//! Verification suites run by `dexter verify`. Each suite checks a group of
//! identities exhaustively up to the sizes in [`Caps`].

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::Caps;
use crate::dyck::{kappa, kappa_inv, DyckPath, PseudoDyckPath};
use crate::error::{Error, Result};
use crate::hochschild::{self, TernaryWord};
use crate::intervals::core::{chain_e, chain_position, core_bijection, core_inverse, in_e, theta};
use crate::intervals::series::{self, SeriesKind};
use crate::intervals::{self, Interval};
use crate::invariants::{self, DEFAULT_ROOT_TOL};
use crate::poset::Poset;
use crate::verify::{Check, Report};
use crate::{dexter, meet, monoid, related};

/// Interval counts of `D_0, ..., D_7`.
pub const INTERVAL_COUNTS: [u64; 8] = [1, 1, 3, 12, 56, 288, 1584, 9152];
/// `|F_n|` for `n = 1..=6`.
pub const F_SIZES: [u64; 6] = [2, 5, 12, 28, 64, 144];
/// Generators of the interval monoid by size, from size 2.
pub const M2_GENERATORS: [u64; 6] = [3, 3, 11, 51, 267, 1507];
/// Zeta polynomial of `D_n` at -1 and -2, `n = 1..=8`.
pub const ZETA_AT_MINUS_ONE: [i64; 8] = [1, -1, 2, -5, 14, -42, 132, -429];
pub const ZETA_AT_MINUS_TWO: [i64; 8] = [1, -2, 7, -29, 131, -625, 3099, -15818];

pub const F_A_THROUGH_T4: &str =
    "1 + s*t + s*t^2 + 2*s^2*t^2 + 2*s*t^3 + 5*s^2*t^3 + 5*s^3*t^3 + 6*s*t^4 + 15*s^2*t^4 + 21*s^3*t^4 + 14*s^4*t^4";
pub const F_R_THROUGH_T4: &str =
    "1 + s*t + 2*s^2*t^2 + 3*s^2*t^3 + 5*s^3*t^3 + 8*s^2*t^4 + 16*s^3*t^4 + 14*s^4*t^4";
pub const F_C_THROUGH_T4: &str =
    "2*s^2*t^2 + s^2*t^3 + s^3*t^3 + 3*s^2*t^4 + 3*s^3*t^4 + 2*s^4*t^4";

/// Coxeter factorizations of `J(w)` for the listed `w`.
pub const COXETER_EXAMPLES: [(&str, &str); 6] = [
    ("101100", "Phi1^2 Phi2 Phi3 Phi5"),
    ("110010", "Phi1^2 Phi2 Phi3 Phi5"),
    ("11011000", "Phi2 Phi4 Phi18 Phi54"),
    ("11101000", "Phi2 Phi4 Phi18 Phi54"),
    ("10111000", "Phi1^2 Phi2^2 Phi3 Phi5 Phi6^2 Phi7"),
    ("11001100", "Phi1^2 Phi2^2 Phi3 Phi5 Phi6^2 Phi7"),
];
pub const COXETER_F5: &str = "Phi1^2 Phi2^4 Phi6^4 Phi7 Phi23^2";
/// Top of an interval above `w_min(7)` whose Coxeter polynomial has roots
/// off the unit circle.
pub const OFF_CIRCLE_TOP: &str = "11111001000100";
/// Top of an interval above `w_min(6)` that is neither semidistributive nor
/// extremal.
pub const NOT_SEMIDISTRIBUTIVE_TOP: &str = "111100100100";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Counts,
    Series,
    Monoids,
    Meet,
    Hochschild,
    Invariants,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Counts, Suite::Series, Suite::Monoids, Suite::Meet, Suite::Hochschild, Suite::Invariants];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "counts" => Suite::Counts,
            "series" => Suite::Series,
            "monoids" => Suite::Monoids,
            "meet" => Suite::Meet,
            "hochschild" => Suite::Hochschild,
            "invariants" => Suite::Invariants,
            "all" => Suite::All,
            other => return Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Counts => "counts",
            Suite::Series => "series",
            Suite::Monoids => "monoids",
            Suite::Meet => "meet",
            Suite::Hochschild => "hochschild",
            Suite::Invariants => "invariants",
            Suite::All => "all",
        })
    }
}

pub fn run_suite(suite: Suite, caps: &Caps, seed: u64) -> Result<Report> {
    caps.validate()?;
    match suite {
        Suite::Counts => counts(caps),
        Suite::Series => series_suite(caps),
        Suite::Monoids => monoids(caps, seed),
        Suite::Meet => meet_suite(caps, seed),
        Suite::Hochschild => hochschild_suite(caps),
        Suite::Invariants => invariants_suite(caps),
        Suite::All => {
            let mut r = Report::new();
            for s in Suite::EACH {
                r.extend(run_suite(s, caps, seed)?);
            }
            Ok(r)
        }
    }
}

/// Records the first failure of a family of checks.
struct Tally {
    count: usize,
    first_bad: Option<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { count: 0, first_bad: None }
    }

    fn see(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok && self.first_bad.is_none() {
            self.first_bad = Some(what());
        }
    }

    fn check(self, name: impl Into<String>, reference: &str) -> Check {
        let ok = self.first_bad.is_none();
        let witness = match self.first_bad {
            Some(b) => format!("fails at {b}"),
            None => format!("{} cases", self.count),
        };
        Check::new(name, reference, ok, witness)
    }
}

/// Motzkin numbers `M_0, ..., M_n`.
pub fn motzkin(n: usize) -> Vec<u64> {
    let mut m = vec![1u64; n + 1];
    for k in 2..=n {
        m[k] = m[k - 1] + (0..=k - 2).map(|j| m[j] * m[k - 2 - j]).sum::<u64>();
    }
    m
}

/// `floor(n^2 / 4) + 1`.
pub fn quarter_squares_plus_one(n: usize) -> usize {
    n * n / 4 + 1
}

fn counts(caps: &Caps) -> Result<Report> {
    let mut r = Report::new();

    let mut got = vec![];
    let mut ok = true;
    for n in 0..=caps.counts {
        let c = intervals::count_intervals(n)?;
        ok &= BigInt::from(c) == intervals::interval_count_formula(n);
        ok &= INTERVAL_COUNTS.get(n).is_none_or(|&e| e == c);
        got.push(c);
    }
    r.push(Check::new(
        format!("interval counts n = 0..={}", caps.counts),
        "enumeration, closed formula and printed sequence agree",
        ok,
        format!("{got:?}"),
    ));

    let mz = motzkin(caps.structure);
    let mut maxima = vec![];
    let mut t = Tally::new();
    for n in 1..=caps.structure {
        let mut c = 0;
        for w in DyckPath::all(n) {
            let m = dexter::is_maximal(w);
            t.see(m == dexter::covers(w).is_empty(), || w.to_string());
            c += m as u64;
        }
        t.see(c == mz[n - 1], || format!("count at n = {n}"));
        maxima.push(c);
    }
    let mut chk = t.check(format!("maximal elements n = 1..={}", caps.structure), "Motzkin numbers");
    chk.witness = format!("{maxima:?}; {}", chk.witness);
    r.push(chk);

    let mut t = Tally::new();
    for n in 0..=caps.structure {
        let d = dexter::hasse(n)?;
        t.see(d.is_transitively_reduced(), || format!("n = {n} not reduced"));
        let min: Vec<DyckPath> = d.minimal_elements().iter().map(|&i| d.elements()[i]).collect();
        t.see(min == [DyckPath::w_min(n)], || format!("n = {n} sources {min:?}"));
    }
    r.push(t.check(format!("Hasse diagrams n <= {}", caps.structure), "transitively reduced with one source"));

    let mut t = Tally::new();
    for n in 0..=caps.structure {
        for w in DyckPath::all(n) {
            let tree = kappa(w);
            let ok = tree.inner_nodes() == n
                && kappa_inv(&tree)? == w
                && tree.rightmost_branch_len() == w.trailing_zeros();
            t.see(ok, || w.to_string());
        }
    }
    r.push(t.check(
        format!("kappa roundtrip n <= {}", caps.structure),
        "binary trees; rightmost branch equals final zeros",
    ));

    let mut t = Tally::new();
    for n in 0..=caps.orders {
        let d = dexter::hasse(n)?;
        let c = related::comb_hasse(n)?;
        let tam = related::tamari_hasse(n)?;
        t.see(related::order_contains(&c, &d)?, || format!("comb not in dexter, n = {n}"));
        t.see(related::order_contains(&d, &tam)?, || format!("dexter not in Tamari, n = {n}"));
    }
    r.push(t.check(format!("comb <= dexter <= Tamari, n <= {}", caps.orders), "order comparisons"));

    let mut t = Tally::new();
    for n in 0..=caps.orders {
        for w in DyckPath::all(n) {
            for m in dexter::cover_moves(w) {
                let a = related::tamari_interval_chain(w, m.span, m.i)?;
                let b = related::stepwise_slides(w, m.span, m.i)?;
                t.see(a == b, || format!("{w} span {:?} i = {}", m.span, m.i));
            }
        }
    }
    r.push(t.check(
        format!("Tamari intervals of dexter covers, n <= {}", caps.orders),
        "chain of one-step slides",
    ));
    Ok(r)
}

fn series_suite(caps: &Caps) -> Result<Report> {
    let mut r = Report::new();
    let [a, rr, c] = series::all_series(4)?;
    for (name, got, want) in [
        ("f_A", a.to_poly().to_string(), F_A_THROUGH_T4),
        ("f_R", rr.to_poly().to_string(), F_R_THROUGH_T4),
        ("f_C", c.to_poly().to_string(), F_C_THROUGH_T4),
    ] {
        r.push(Check::new(
            format!("{name} through t^4"),
            "printed expansion",
            got == want,
            got,
        ));
    }
    r.extend(series::verify_functional_equations(caps.series)?);
    r.extend(series::verify_algebraic_equation(caps.algebraic, caps.counts.min(6))?);
    r.extend(core_checks(caps.core)?);
    Ok(r)
}

/// Chains `E(w)`, the map `theta` and the core bijection up to size `max`.
pub fn core_checks(max: usize) -> Result<Report> {
    let mut r = Report::new();
    let mut ideal = Tally::new();
    let mut orbits = Tally::new();
    let mut bij = Tally::new();
    let c_table = series::series(SeriesKind::C, max)?;
    for n in 2..=max {
        let e: HashSet<DyckPath> = DyckPath::all(n).into_iter().filter(|&w| in_e(w)).collect();
        for &w in &e {
            for (u, _) in dexter::lower_covers(w) {
                ideal.see(in_e(u), || format!("{u} below {w}"));
            }
        }
        let mut seen = HashSet::new();
        for w in DyckPath::all(n - 2) {
            let chain = chain_e(w);
            for (j, &u) in chain.iter().enumerate() {
                let next = chain[(j + 1) % chain.len()];
                orbits.see(seen.insert(u) && theta(u)? == next && chain_position(u)? == (w, j), || {
                    u.to_string()
                });
            }
        }
        orbits.see(seen == e, || format!("E_{n} not covered"));

        let mut direct = 0u64;
        for i in intervals::all_intervals(n)?.into_iter().filter(Interval::is_core) {
            direct += 1;
            if i == Interval::point(DyckPath::w_min(2)) {
                continue;
            }
            let (small, j) = core_bijection(i)?;
            bij.see(core_inverse(small, j)? == i, || format!("[{}, {}]", i.bottom, i.top));
        }
        let via: u64 = intervals::all_intervals(n - 2)?
            .iter()
            .map(|i| i.bottom.num_blocks() as u64 + 1)
            .sum::<u64>()
            + (n == 2) as u64;
        let fc = c_table.total(n);
        bij.see(BigInt::from(via) == fc && BigInt::from(direct) == fc, || {
            format!("n = {n}: {direct} core, {via} via bijection, f_C {fc}")
        });
    }
    r.push(ideal.check(format!("E_n is a lower ideal, n <= {max}"), "core intervals"));
    r.push(orbits.check(format!("chains E(w) partition E_n as theta-orbits, n <= {max}"), "core intervals"));
    r.push(bij.check(format!("core bijection roundtrip and counts, n <= {max}"), "core intervals"));
    Ok(r)
}

fn pseudo(n: usize) -> Vec<PseudoDyckPath> {
    DyckPath::all(n + 1).into_iter().map(|w| w.bar().expect("non-empty")).collect()
}

fn random_path(rng: &mut ChaCha8Rng, n: usize) -> DyckPath {
    // Uniform over words with n ones, rejected until Dyck. Cheap at these sizes.
    loop {
        let mut letters = vec![0u8; 2 * n];
        let mut ones = 0;
        for k in 0..2 * n {
            let left = 2 * n - k;
            if rng.gen_range(0..left) < n - ones {
                letters[k] = 1;
                ones += 1;
            }
        }
        if let Ok(w) = DyckPath::new(&letters) {
            return w;
        }
    }
}

fn m2_product_all(parts: &[Interval]) -> Result<Interval> {
    let unit = Interval::point("10".parse()?);
    parts.iter().try_fold(unit, |acc, &g| monoid::m2_product(acc, g))
}

fn monoids(caps: &Caps, seed: u64) -> Result<Report> {
    let mut r = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut t = Tally::new();
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                for &x in &pseudo(a) {
                    for &y in &pseudo(b) {
                        for &z in &pseudo(c) {
                            let ok = monoid::star(monoid::star(x, y), z) == monoid::star(x, monoid::star(y, z));
                            t.see(ok, || format!("{x} {y} {z}"));
                        }
                    }
                }
            }
        }
    }
    for _ in 0..500 {
        let [x, y, z] = [0; 3].map(|_| {
            let n = rng.gen_range(1..=8);
            random_path(&mut rng, n).bar().expect("non-empty")
        });
        t.see(monoid::star(monoid::star(x, y), z) == monoid::star(x, monoid::star(y, z)), || {
            format!("{x} {y} {z}")
        });
    }
    r.push(t.check("pseudo-Dyck product is associative", "exhaustive up to size 3, 500 sampled triples"));

    let unit: DyckPath = "10".parse()?;
    let mut units = Tally::new();
    let mut fact = Tally::new();
    for n in 1..=caps.monoids {
        for w in DyckPath::all(n) {
            units.see(monoid::sharp(unit, w)? == w && monoid::sharp(w, unit)? == w, || w.to_string());
            let f = monoid::m1_factor(w)?;
            let ok = f.iter().all(|&g| monoid::is_m1_generator(g)) && monoid::sharp_all(&f)? == w;
            fact.see(ok, || w.to_string());
        }
    }
    for _ in 0..500 {
        let [u, v, w] = [0; 3].map(|_| {
            let n = rng.gen_range(1..=10);
            random_path(&mut rng, n)
        });
        let lhs = monoid::sharp(monoid::sharp(u, v)?, w)?;
        let rhs = monoid::sharp(u, monoid::sharp(v, w)?)?;
        units.see(lhs == rhs, || format!("associativity at {u} {v} {w}"));
    }
    r.push(units.check(format!("(1,0) is a unit and # is associative, n <= {}", caps.monoids), "monoid M1"));
    r.push(fact.check(format!("M1 factorization roundtrip, n <= {}", caps.monoids), "free monoid M1"));

    let mut t = Tally::new();
    for n in 1..=caps.monoids.min(7) {
        for i in intervals::all_intervals(n)? {
            let f = monoid::m2_factor(i)?;
            let ok = f.iter().all(|&g| monoid::is_m2_generator(g)) && m2_product_all(&f)? == i;
            t.see(ok, || format!("[{}, {}]", i.bottom, i.top));
        }
    }
    r.push(t.check(format!("M2 factorization roundtrip, n <= {}", caps.monoids.min(7)), "free monoid M2"));

    let top = caps.monoids.clamp(2, M2_GENERATORS.len() + 1);
    let got: Vec<u64> = (2..=top).map(monoid::m2_generator_count).collect();
    r.push(Check::new(
        format!("M2 generator counts, sizes 2..={top}"),
        "generators of the interval monoid",
        got[..] == M2_GENERATORS[..got.len()],
        format!("{got:?}"),
    ));

    r.extend(factorization_checks(caps.factorization)?);
    Ok(r)
}

/// Product decompositions of intervals and upper ideals up to size `max`.
pub fn factorization_checks(max: usize) -> Result<Report> {
    let mut r = Report::new();

    let mut t = Tally::new();
    for a in 1..=max {
        for b in 1..=max + 1 - a {
            let gens_a: Vec<Interval> =
                intervals::all_intervals(a)?.into_iter().filter(|&i| monoid::is_m2_generator(i)).collect();
            let gens_b: Vec<Interval> =
                intervals::all_intervals(b)?.into_iter().filter(|&i| monoid::is_m2_generator(i)).collect();
            for &x in &gens_a {
                for &y in &gens_b {
                    t.see(intervals::sharp_isomorphism_holds(x, y)?, || {
                        format!("[{}, {}] # [{}, {}]", x.bottom, x.top, y.bottom, y.top)
                    });
                }
            }
        }
    }
    r.push(t.check(
        format!("I1 x I2 -> I1 # I2 is an isomorphism, generators up to size {max}"),
        "interval monoid",
    ));

    let mut t = Tally::new();
    for n in 1..=max {
        for i in intervals::all_intervals(n)? {
            let f = monoid::m2_factor(i)?;
            let ok = invariants::poset_isomorphic(&i.poset(), &intervals::product_of(&f))?;
            t.see(ok, || format!("[{}, {}]", i.bottom, i.top));
        }
    }
    r.push(t.check(format!("every interval is the product of its factors, n <= {max}"), "interval monoid"));

    let mut t = Tally::new();
    for n in 1..=max {
        for w in DyckPath::all(n) {
            if intervals::upper_ideal_factor(w).is_some() {
                t.see(intervals::upper_ideal_map_holds(w), || w.to_string());
            }
        }
    }
    r.push(t.check(format!("upper ideals split along strips, n <= {max}"), "strips"));

    for n in 1..=max {
        r.extend(intervals::level_multiset_isomorphism_check(n)?);
    }
    Ok(r)
}

/// Down-sets as bitsets, for greatest lower bounds by intersection.
fn down_bitsets<T>(p: &Poset<T>) -> Vec<Vec<u64>> {
    let words = p.len().div_ceil(64);
    (0..p.len())
        .map(|i| {
            let mut b = vec![0u64; words];
            for k in p.down_set(i) {
                b[k / 64] |= 1 << (k % 64);
            }
            b
        })
        .collect()
}

/// Greatest lower bound of every pair by intersecting down-sets, or `None`
/// when some pair has none.
pub fn brute_force_meets<T: Sync>(p: &Poset<T>) -> Option<Vec<Vec<usize>>> {
    let down = down_bitsets(p);
    let sizes: Vec<u32> = down.iter().map(|b| b.iter().map(|x| x.count_ones()).sum()).collect();
    (0..p.len())
        .into_par_iter()
        .map(|i| {
            (0..p.len())
                .map(|j| {
                    let common: Vec<u64> = down[i].iter().zip(&down[j]).map(|(a, b)| a & b).collect();
                    let size: u32 = common.iter().map(|x| x.count_ones()).sum();
                    for (wi, &word) in common.iter().enumerate() {
                        let mut bits = word;
                        while bits != 0 {
                            let m = wi * 64 + bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            if sizes[m] == size {
                                return Some(m);
                            }
                        }
                    }
                    None
                })
                .collect::<Option<Vec<usize>>>()
        })
        .collect()
}

fn shares_prefix(a: DyckPath, b: DyckPath, i: usize) -> bool {
    (0..i).all(|k| a.step(k) == b.step(k))
}

/// Rise, min_R, Desc and s against brute force over the order, up to `max`.
pub fn meet_lemma_checks(max: usize) -> Result<Report> {
    let mut rise_t = Tally::new();
    let mut min_t = Tally::new();
    let mut desc_t = Tally::new();
    let mut s_t = Tally::new();
    for n in 1..=max {
        let d = dexter::hasse(n)?;
        let els = d.elements();
        for (ui, &u) in els.iter().enumerate() {
            let up = d.up_set(ui);
            for i in (0..u.len()).filter(|&i| u.step(i) == 0) {
                let rset: Vec<usize> = up
                    .iter()
                    .copied()
                    .filter(|&v| shares_prefix(els[v], u, i) && els[v].step(i) == 1)
                    .collect();
                match meet::rise(u, i)? {
                    Some(x) => {
                        let ok = shares_prefix(x, u, i)
                            && dexter::path_leq(u, x)
                            && rset.iter().all(|&v| dexter::path_leq(x, els[v]));
                        rise_t.see(ok, || format!("{u} at {i}"));
                    }
                    None => rise_t.see(rset.is_empty(), || format!("{u} at {i}")),
                }
                let minimal: Vec<DyckPath> = rset
                    .iter()
                    .copied()
                    .filter(|&v| rset.iter().all(|&x| x == v || !d.leq(x, v)))
                    .map(|v| els[v])
                    .collect();
                min_t.see(minimal.len() <= 1 && meet::min_r(u, i)? == minimal.first().copied(), || {
                    format!("{u} at {i}")
                });
            }
        }
        for (wi, &w) in els.iter().enumerate() {
            let h = w.heights();
            let down = d.down_set(wi);
            for s in (0..w.len()).filter(|&s| w.step(s) == 1 && h[s] > 0) {
                let set: Vec<usize> = down
                    .iter()
                    .copied()
                    .filter(|&u| shares_prefix(els[u], w, s) && els[u].step(s) == 0)
                    .collect();
                let dw = meet::desc(w, s)?;
                let is_cover = dexter::covers(dw).iter().any(|e| e.0 == w);
                desc_t.see(is_cover && set.iter().all(|&u| dexter::path_leq(els[u], dw)), || {
                    format!("{w} at {s}")
                });
                let maximal: Vec<DyckPath> = set
                    .iter()
                    .copied()
                    .filter(|&u| set.iter().all(|&x| x == u || !d.leq(u, x)))
                    .map(|u| els[u])
                    .collect();
                s_t.see(maximal == [meet::s_op(w, s)?], || format!("{w} at {s}"));
            }
        }
    }
    let mut r = Report::new();
    r.push(rise_t.check(format!("Rise is below every element of R_i, n <= {max}"), "meet construction"));
    r.push(min_t.check(format!("min_R is the unique minimum of R_i, n <= {max}"), "meet construction"));
    r.push(desc_t.check(format!("Desc is a lower cover above S_i, n <= {max}"), "meet construction"));
    r.push(s_t.check(format!("s_i is the unique maximum of S_i, n <= {max}"), "meet construction"));
    Ok(r)
}

fn meet_suite(caps: &Caps, seed: u64) -> Result<Report> {
    let mut r = Report::new();
    for n in 0..=caps.meet {
        let d = dexter::hasse(n)?;
        let glb = brute_force_meets(&d);
        let els = d.elements();
        let bad = match &glb {
            None => Some("some pair has no greatest lower bound".to_string()),
            Some(table) => (0..d.len())
                .into_par_iter()
                .find_map_any(|i| {
                    (0..d.len()).find_map(|j| match meet::meet(els[i], els[j]) {
                        Ok(m) if m == els[table[i][j]] => None,
                        Ok(m) => Some(format!("meet({}, {}) = {m}", els[i], els[j])),
                        Err(e) => Some(e.to_string()),
                    })
                }),
        };
        r.push(Check::new(
            format!("meet equals the greatest lower bound, n = {n}"),
            "meet-semilattice",
            bad.is_none(),
            bad.unwrap_or_else(|| format!("{} pairs", d.len() * d.len())),
        ));
    }
    r.extend(meet_lemma_checks(caps.meet_lemmas)?);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = caps.meet + 1;
    let all = DyckPath::all(n);
    let mut t = Tally::new();
    for _ in 0..1000 {
        let [a, b, c] = [0; 3].map(|_| all[rng.gen_range(0..all.len())]);
        let ab_c = meet::meet(meet::meet(a, b)?, c)?;
        let a_bc = meet::meet(a, meet::meet(b, c)?)?;
        t.see(ab_c == a_bc && meet::meet(a, b)? == meet::meet(b, a)?, || format!("{a} {b} {c}"));
    }
    r.push(t.check(format!("meet is associative and commutative, 1000 triples at n = {n}"), "meet laws"));
    Ok(r)
}

fn hochschild_suite(caps: &Caps) -> Result<Report> {
    let mut r = Report::new();
    let sizes: Vec<u64> =
        (1..=caps.hochschild).map(|n| Ok(hochschild::f_poset(n)?.len() as u64)).collect::<Result<_>>()?;
    let ok = sizes.iter().enumerate().all(|(k, &s)| {
        s == hochschild::f_size_formula(k + 1) && F_SIZES.get(k).is_none_or(|&e| e == s)
    });
    r.push(Check::new(
        format!("|F_n| for n = 1..={}", caps.hochschild),
        "2^(n-2)(n+3)",
        ok,
        format!("{sizes:?}"),
    ));

    let w: DyckPath = "1110010010".parse()?;
    let z: TernaryWord = "102".parse()?;
    let got = hochschild::rho(w)?;
    let pre = hochschild::rho_inv(&z)?;
    r.push(Check::new(
        "rho examples",
        "rho(1110010010) = 120 and rho^-1(102) = 1101100010",
        got.to_string() == "120" && pre.to_string() == "1101100010",
        format!("{got}, {pre}"),
    ));

    for n in 1..=caps.hochschild {
        r.extend(hochschild::verify_f(n)?);
    }
    for n in 2..caps.hochschild {
        r.extend(hochschild::structural_bijections(n)?);
    }
    for n in 2..=caps.boolean {
        r.extend(hochschild::boolean_parts(n)?);
    }
    Ok(r)
}

fn invariants_suite(caps: &Caps) -> Result<Report> {
    let mut r = Report::new();
    for (w, want) in COXETER_EXAMPLES {
        let j = dexter::j_interval(w.parse()?);
        let f = invariants::coxeter_factorization(&j)?;
        r.push(Check::new(
            format!("Coxeter polynomial of J({w}), {} elements", j.len()),
            want,
            f.to_notation() == want,
            f.to_notation(),
        ));
    }
    let f5 = invariants::coxeter_factorization(&hochschild::f_poset(5)?)?;
    r.push(Check::new("Coxeter polynomial of F_5", COXETER_F5, f5.to_notation() == COXETER_F5, f5.to_notation()));

    let mut t = Tally::new();
    for n in 1..=caps.coxeter {
        let c = invariants::coxeter_coeffs(&hochschild::f_poset(n)?)?;
        t.see(invariants::roots_on_unit_circle(&c, DEFAULT_ROOT_TOL), || format!("F_{n}"));
    }
    r.push(t.check(format!("Coxeter roots of F_n on the unit circle, n <= {}", caps.coxeter), "tolerance 1e-8"));

    let off = dexter::interval_poset(DyckPath::w_min(7), OFF_CIRCLE_TOP.parse()?)?;
    let c = invariants::coxeter_coeffs(&off)?;
    let on = invariants::roots_on_unit_circle(&c, DEFAULT_ROOT_TOL);
    r.push(Check::new(
        format!("Coxeter roots of [w_min(7), {OFF_CIRCLE_TOP}] leave the unit circle"),
        "tolerance 1e-8",
        !on,
        format!("{} elements", off.len()),
    ));

    let neg = dexter::interval_poset(DyckPath::w_min(6), NOT_SEMIDISTRIBUTIVE_TOP.parse()?)?;
    let sd = invariants::is_semidistributive(&neg)?;
    let ex = invariants::is_extremal(&neg)?;
    r.push(Check::new(
        format!("[w_min(6), {NOT_SEMIDISTRIBUTIVE_TOP}] is neither semidistributive nor extremal"),
        "lattice properties",
        !sd && !ex,
        format!("semidistributive: {sd}, extremal: {ex}"),
    ));

    let mut m1 = vec![];
    let mut m2 = vec![];
    for n in 1..=caps.zeta {
        let z = invariants::zeta_polynomial(&dexter::hasse(n)?)?;
        m1.push(z.eval(-1));
        m2.push(z.eval(-2));
    }
    let ok = m1.iter().zip(ZETA_AT_MINUS_ONE).all(|(a, b)| *a == BigInt::from(b))
        && m2.iter().zip(ZETA_AT_MINUS_TWO).all(|(a, b)| *a == BigInt::from(b));
    r.push(Check::new(
        format!("zeta polynomial of D_n at -1 and -2, n = 1..={}", caps.zeta),
        "printed values",
        ok,
        format!("{m1:?} / {m2:?}"),
    ));

    r.extend(invariants::verify_h_equations(caps.hpoly)?);
    let mut sym = Tally::new();
    let mut nar = Tally::new();
    for n in 1..=caps.narayana {
        let an = invariants::colored_h_polynomial(n)?;
        if n <= caps.hpoly {
            sym.see(invariants::h_symmetry_holds(&an, n), || format!("n = {n}"));
        }
        nar.see(invariants::narayana_matches(&an, n), || format!("n = {n}"));
    }
    r.push(sym.check(format!("A_n(r, rb) = r^(n-1) A_n(1/r, b/r), n <= {}", caps.hpoly), "colored h-polynomials"));
    r.push(nar.check(format!("uncolored h-polynomials are Narayana, n <= {}", caps.narayana), "colored h-polynomials"));
    Ok(r)
}

/// For each `n`: the number of elements of a longest chain of `D_n` and
/// `floor(n^2/4) + 1`. Reported, not checked.
pub fn longest_chain_report(max: usize) -> Result<Vec<(usize, usize, usize)>> {
    (1..=max)
        .map(|n| Ok((n, invariants::longest_chain(&dexter::hasse(n)?) + 1, quarter_squares_plus_one(n))))
        .collect()
}
