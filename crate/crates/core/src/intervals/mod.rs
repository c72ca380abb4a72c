//! Intervals of the dexter order: enumeration, factorisations and the
//! structures used to count them.

pub mod core;
pub mod series;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dexter;
use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::invariants;
use crate::monoid;
use crate::poset::Poset;
use crate::verify::{Check, Report};
use crate::word::Word;

pub use self::core::{chain_e, chain_position, core_bijection, core_inverse, is_shape_a, theta};
pub use self::series::{SeriesKind, SeriesTable};

/// Default cap on `n` for enumerating every interval of `D_n`.
pub const DEFAULT_INTERVAL_CAP: usize = 9;

/// A pair `bottom <= top` of paths of the same size.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub bottom: DyckPath,
    pub top: DyckPath,
}

impl Interval {
    /// Checks `bottom <= top` by searching upwards from `bottom`.
    pub fn new(bottom: DyckPath, top: DyckPath) -> Result<Interval> {
        if bottom.size() != top.size() || !dexter::path_leq(bottom, top) {
            return Err(Error::NotAnInterval { bottom: bottom.to_string(), top: top.to_string() });
        }
        Ok(Interval { bottom, top })
    }

    pub(crate) fn new_unchecked(bottom: DyckPath, top: DyckPath) -> Interval {
        Interval { bottom, top }
    }

    /// The one-element interval `[w, w]`.
    pub fn point(w: DyckPath) -> Interval {
        Interval { bottom: w, top: w }
    }

    /// Size of the paths, not the number of elements.
    pub fn size(&self) -> usize {
        self.top.size()
    }

    /// Number of elements.
    pub fn cardinality(&self) -> usize {
        self.elements().len()
    }

    pub fn elements(&self) -> Vec<DyckPath> {
        dexter::interval_elements(self.bottom, self.top)
    }

    pub fn poset(&self) -> Poset<DyckPath> {
        dexter::interval_poset(self.bottom, self.top).expect("valid interval")
    }

    /// Bottom empty or of shape `(w, 1, 0)`.
    pub fn is_reduced(&self) -> bool {
        self.bottom.is_empty() || self.bottom.ends_with_peak()
    }

    /// Bottom of shape `(v, 1, 0)` and top of shape `(1, w, 1, 0, 0)`, plus the
    /// diagonal interval at `(1, 0, 1, 0)`.
    pub fn is_core(&self) -> bool {
        let d2 = DyckPath::w_min(2);
        (self.bottom == d2 && self.top == d2)
            || (self.bottom.ends_with_peak() && monoid::is_shape_b(self.top))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.bottom, self.top)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.bottom, self.top)
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > DEFAULT_INTERVAL_CAP {
        return Err(Error::SizeTooLarge { n, cap: DEFAULT_INTERVAL_CAP });
    }
    Ok(())
}

/// Every interval of `D_n`, sorted by `(bottom, top)`.
pub fn all_intervals(n: usize) -> Result<Vec<Interval>> {
    check_cap(n)?;
    let d = dexter::hasse(n)?;
    let els = d.elements();
    let out: Vec<Interval> = (0..d.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let d = &d;
            d.up_set(i).into_iter().map(move |j| Interval::new_unchecked(els[i], els[j]))
        })
        .collect();
    Ok(out)
}

/// Number of intervals of `D_n` by enumeration.
pub fn count_intervals(n: usize) -> Result<u64> {
    check_cap(n)?;
    Ok(dexter::hasse(n)?.num_intervals() as u64)
}

/// `3 * 2^(n-1) (2n)! / (n! (n+2)!)` for `n >= 1`, and 1 for `n = 0`.
pub fn interval_count_formula(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    let fact = |k: usize| -> BigInt { (1..=k).map(BigInt::from).product() };
    let num = BigInt::from(3) * (BigInt::from(1) << (n - 1)) * fact(2 * n);
    num / (fact(n) * fact(n + 2))
}

/// Positions just after each block of `w`.
fn touch_points(w: DyckPath) -> Vec<usize> {
    let mut out = vec![];
    let mut pos = 0;
    for b in w.blocks() {
        pos += b.len();
        out.push(pos);
    }
    out
}

/// Cuts both ends of the interval where the top returns to height 0.
pub fn block_factor(i: Interval) -> Vec<Interval> {
    let mut out = vec![];
    let mut start = 0;
    for end in touch_points(i.top) {
        let b = DyckPath::from_word_unchecked(i.bottom.word().slice(start, end));
        let t = DyckPath::from_word_unchecked(i.top.word().slice(start, end));
        out.push(Interval::new_unchecked(b, t));
        start = end;
    }
    out
}

/// Cartesian product of the posets of a list of intervals.
pub fn product_of(intervals: &[Interval]) -> Poset<Vec<DyckPath>> {
    let mut acc: Poset<Vec<DyckPath>> = Poset::from_covers(vec![vec![]], vec![]);
    for i in intervals {
        let p = i.poset();
        acc = invariants::cartesian_product(&acc, &p).map_labels(|_, (a, b)| {
            let mut v = a.clone();
            v.push(*b);
            v
        });
    }
    acc
}

/// Checks that `(a, b) -> a # b` is an isomorphism from `I1 x I2` onto `I1 # I2`.
pub fn sharp_isomorphism_holds(i1: Interval, i2: Interval) -> Result<bool> {
    let prod = monoid::m2_product(i1, i2)?;
    let big = prod.poset();
    let p1 = i1.poset();
    let p2 = i2.poset();
    if big.len() != p1.len() * p2.len() {
        return Ok(false);
    }
    let mut image = vec![vec![0usize; p2.len()]; p1.len()];
    let mut hit = vec![false; big.len()];
    for (a, &x) in p1.elements().iter().enumerate() {
        for (b, &y) in p2.elements().iter().enumerate() {
            let Some(k) = big.index_of(&monoid::sharp(x, y)?) else { return Ok(false) };
            if hit[k] {
                return Ok(false);
            }
            hit[k] = true;
            image[a][b] = k;
        }
    }
    // Covers of the product map to covers, and the counts agree.
    let mut covers = 0;
    for (a, row) in image.iter().enumerate() {
        for (b, &k) in row.iter().enumerate() {
            for (a2, _) in p1.upper_covers(a) {
                covers += 1;
                if big.cover_color(k, image[a2][b]).is_none() {
                    return Ok(false);
                }
            }
            for (b2, _) in p2.upper_covers(b) {
                covers += 1;
                if big.cover_color(k, image[a][b2]).is_none() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(covers == big.num_covers())
}

/// `(u', v)` with `u' = (u, 1, 0, 0^k)` when `w = (u, 1, v, 1, 0, 0, 0^k)`
/// has a strip; `None` when `w` is empty or ends with `(1, 0)`.
pub fn upper_ideal_factor(w: DyckPath) -> Option<(DyckPath, DyckPath)> {
    w.find_strip().map(|s| (s.collapsed(), s.inner))
}

/// The principal upper ideal `Up(w)`.
pub fn upper_ideal(w: DyckPath) -> Poset<DyckPath> {
    dexter::upper_ideal(w)
}

/// Checks that collapsing the strip of every element of `Up(w)` is an
/// isomorphism onto `Up(u') x Up(v)`.
pub fn upper_ideal_map_holds(w: DyckPath) -> bool {
    let Some((u1, v)) = upper_ideal_factor(w) else { return false };
    let up = upper_ideal(w);
    let pu = upper_ideal(u1);
    let pv = upper_ideal(v);
    if up.len() != pu.len() * pv.len() {
        return false;
    }
    let mut image = Vec::with_capacity(up.len());
    let mut seen = std::collections::HashSet::new();
    for &x in up.elements() {
        let Some(s) = x.find_strip() else { return false };
        let (Some(a), Some(b)) = (pu.index_of(&s.collapsed()), pv.index_of(&s.inner)) else {
            return false;
        };
        if !seen.insert((a, b)) {
            return false;
        }
        image.push((a, b));
    }
    let mut covers = 0;
    for (i, j, _) in up.edges() {
        let (a, b) = image[i];
        let (a2, b2) = image[j];
        let ok = (b == b2 && pu.cover_color(a, a2).is_some()) || (a == a2 && pv.cover_color(b, b2).is_some());
        if !ok {
            return false;
        }
        covers += 1;
    }
    covers == pu.num_covers() * pv.len() + pv.num_covers() * pu.len()
}

/// Sends a non-reduced interval to a pair (non-empty interval, interval)
/// by collapsing the common strip of its ends.
pub fn non_reduced_witness(i: Interval) -> Option<(Interval, Interval)> {
    if i.is_reduced() {
        return None;
    }
    let sb = i.bottom.find_strip()?;
    let st = i.top.find_strip()?;
    debug_assert_eq!(sb.inner.size(), st.inner.size());
    Some((
        Interval::new_unchecked(sb.collapsed(), st.collapsed()),
        Interval::new_unchecked(sb.inner, st.inner),
    ))
}

/// Inverse of [`non_reduced_witness`].
pub fn non_reduced_from_pair(a: Interval, b: Interval) -> Result<Interval> {
    if a.bottom.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let rebuild = |x: DyckPath, v: DyckPath| -> Result<DyckPath> {
        let k = x.trailing_zeros() - 1;
        let prefix = x.word().slice(0, x.len() - k - 2);
        let w = prefix
            .try_concat(Word::repeat(1, 1))?
            .try_concat(v.word())?
            .try_concat(Word::from_letters(&[1, 0, 0])?)?
            .try_concat(Word::repeat(0, k))?;
        Ok(DyckPath::from_word_unchecked(w))
    };
    Ok(Interval::new_unchecked(rebuild(a.bottom, b.bottom)?, rebuild(a.top, b.top)?))
}

/// Level parts of all blocks of `w`, sorted.
pub fn level_multiset(w: DyckPath) -> Vec<DyckPath> {
    let mut parts: Vec<DyckPath> = w
        .blocks()
        .into_iter()
        .flat_map(|b| b.level_decomposition().expect("blocks are indecomposable"))
        .collect();
    parts.sort();
    parts
}

/// Groups `D_n` by the level multiset and checks that the lower intervals
/// `I(w)` are isomorphic within each group, and that `I(w)` is the product
/// of the `J(w_i)` for block-indecomposable `w`.
pub fn level_multiset_isomorphism_check(n: usize) -> Result<Report> {
    let mut report = Report::new();
    let mut groups: BTreeMap<Vec<DyckPath>, Vec<DyckPath>> = BTreeMap::new();
    for w in DyckPath::all(n) {
        groups.entry(level_multiset(w)).or_default().push(w);
    }
    let mut bad_groups = vec![];
    for (key, members) in &groups {
        let rep = dexter::lower_interval(members[0]);
        for &w in &members[1..] {
            if !invariants::poset_isomorphic(&rep, &dexter::lower_interval(w))? {
                bad_groups.push(format!("{:?} vs {:?} (key {:?})", members[0], w, key));
            }
        }
    }
    report.push(Check::new(
        format!("lower intervals depend only on the level multiset, n = {n}"),
        "isomorphism type of I(w)",
        bad_groups.is_empty(),
        format!("{} groups; failures: {:?}", groups.len(), bad_groups),
    ));
    let mut bad = vec![];
    let mut checked = 0;
    for w in DyckPath::all(n).into_iter().filter(|w| w.is_block_indecomposable()) {
        let parts = w.level_decomposition()?;
        let factors: Vec<Interval> = parts
            .iter()
            .map(|&p| Interval::new_unchecked(DyckPath::w_min(p.size() + 2), dexter::j_top(p)))
            .collect();
        let prod = product_of(&factors);
        checked += 1;
        if !invariants::poset_isomorphic(&dexter::lower_interval(w), &prod)? {
            bad.push(w);
        }
    }
    report.push(Check::new(
        format!("I(w) is the product of the J(w_i), n = {n}"),
        "level decomposition factorisation",
        bad.is_empty(),
        format!("{checked} block-indecomposable paths; failures: {bad:?}"),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        let want = [1u64, 1, 3, 12, 56, 288, 1584, 9152];
        for (n, &c) in want.iter().enumerate() {
            assert_eq!(count_intervals(n).unwrap(), c);
            assert_eq!(interval_count_formula(n), BigInt::from(c));
        }
        assert_eq!(all_intervals(3).unwrap().len(), 12);
        assert!(matches!(all_intervals(10), Err(Error::SizeTooLarge { .. })));
    }

    #[test]
    fn interval_validation() {
        assert!(Interval::new(p("1010"), p("1100")).is_ok());
        assert!(matches!(Interval::new(p("1100"), p("1010")), Err(Error::NotAnInterval { .. })));
    }

    #[test]
    fn shapes() {
        assert!(Interval::point(p("1010")).is_core());
        assert!(Interval::new(p("1010"), p("1100")).unwrap().is_reduced());
        assert!(!Interval::point(p("1100")).is_reduced());
    }

    #[test]
    fn block_factor_cardinality() {
        for n in 1..=6 {
            for i in all_intervals(n).unwrap() {
                let f = block_factor(i);
                assert_eq!(f.len(), i.top.num_blocks());
                let prod: usize = f.iter().map(|x| x.elements().len()).product();
                assert_eq!(prod, i.elements().len(), "{i}");
            }
        }
        let f = block_factor(Interval::point(DyckPath::w_min(4)));
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn upper_ideal_example() {
        let w = p("1011010100");
        let (u1, v) = upper_ideal_factor(w).unwrap();
        assert_eq!(u1, p("1010"));
        assert_eq!(v, p("1010"));
        assert_eq!(upper_ideal(w).len(), upper_ideal(p("1010")).len().pow(2));
        assert!(upper_ideal_map_holds(w));
        assert_eq!(upper_ideal_factor(p("110010")), None);
    }

    #[test]
    fn upper_ideal_cardinalities() {
        for n in 1..=7 {
            for w in DyckPath::all(n) {
                if let Some((u1, v)) = upper_ideal_factor(w) {
                    assert_eq!(
                        dexter::up_set(w).len(),
                        dexter::up_set(u1).len() * dexter::up_set(v).len(),
                        "{w}"
                    );
                }
            }
        }
    }

    #[test]
    fn non_reduced_bijection() {
        for n in 1..=6 {
            let mut images = HashSet::new();
            let mut count = 0;
            for i in all_intervals(n).unwrap().into_iter().filter(|i| !i.is_reduced()) {
                let (a, b) = non_reduced_witness(i).unwrap();
                assert!(!a.bottom.is_empty());
                assert_eq!(a.size() + b.size() + 1, n);
                assert!(dexter::path_leq(a.bottom, a.top));
                assert!(dexter::path_leq(b.bottom, b.top));
                assert_eq!(a.bottom.num_blocks(), i.bottom.num_blocks());
                assert_eq!(non_reduced_from_pair(a, b).unwrap(), i);
                images.insert((a, b));
                count += 1;
            }
            assert_eq!(images.len(), count);
            // Surjective: every pair of the right sizes is hit.
            let mut pairs = 0;
            for m in 1..n {
                pairs += all_intervals(m).unwrap().len() * all_intervals(n - 1 - m).unwrap().len();
            }
            assert_eq!(count, pairs, "n = {n}");
        }
    }

    #[test]
    fn level_multiset_groups() {
        for n in 1..=5 {
            let r = level_multiset_isomorphism_check(n).unwrap();
            assert!(r.all_passed(), "{r:?}");
        }
        let a = dexter::lower_interval(p("11011000"));
        let b = dexter::lower_interval(p("11101000"));
        assert!(invariants::poset_isomorphic(&a, &b).unwrap());
        let c = dexter::lower_interval(p("101100"));
        let d = dexter::lower_interval(p("110010"));
        assert!(invariants::poset_isomorphic(&c, &d).unwrap());
    }

    #[test]
    fn sharp_isomorphism_small() {
        for m in 1..=3 {
            for k in 1..=3 {
                for i1 in all_intervals(m).unwrap() {
                    for i2 in all_intervals(k).unwrap() {
                        assert!(sharp_isomorphism_holds(i1, i2).unwrap(), "{i1} {i2}");
                    }
                }
            }
        }
    }
}
