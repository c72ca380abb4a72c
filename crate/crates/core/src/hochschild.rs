//! The Hochschild interval `F_n` in `D_{n+2}` and its encoding by ternary
//! words.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dexter;
use crate::dyck::{DyckPath, Span};
use crate::error::{Error, Result};
use crate::intervals::Interval;
use crate::invariants;
use crate::poset::{EdgeColor, Poset};
use crate::verify::{Check, Report};
use crate::word::Word;

/// Word over `{0, 1, 2}`, written as a digit string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryWord(pub Vec<u8>);

impl TernaryWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    fn with(&self, last: u8) -> TernaryWord {
        let mut v = self.0.clone();
        v.push(last);
        TernaryWord(v)
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for TernaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<TernaryWord> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        s.chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(Error::InvalidArgument(format!("not a ternary word: {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(TernaryWord)
    }
}

impl Serialize for TernaryWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TernaryWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<TernaryWord, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn path(letters: &[u8]) -> DyckPath {
    DyckPath::new(letters).expect("valid Dyck word")
}

fn repeat_10(k: usize) -> Vec<u8> {
    [1, 0].repeat(k)
}

/// `(1,1,0,0,(1,0)^n)`.
pub fn f_bottom(n: usize) -> DyckPath {
    let mut v = vec![1, 1, 0, 0];
    v.extend(repeat_10(n));
    path(&v)
}

/// `(1,1^n,0^n,1,0,0)`.
pub fn f_top(n: usize) -> DyckPath {
    let mut v = vec![1; n + 1];
    v.extend(vec![0; n]);
    v.extend([1, 0, 0]);
    path(&v)
}

/// `(1,1,(0,1)^n,0,0)`.
pub fn w_nb(n: usize) -> DyckPath {
    let mut v = vec![1, 1];
    v.extend([0, 1].repeat(n));
    v.extend([0, 0]);
    path(&v)
}

/// `(1,1,0,1,0,0,(1,0)^(n-1))`.
pub fn w_n1(n: usize) -> DyckPath {
    let mut v = vec![1, 1, 0, 1, 0, 0];
    v.extend(repeat_10(n - 1));
    path(&v)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n + 2 > 32 {
        return Err(Error::InvalidArgument(format!("Hochschild index {n} outside 1..=30")));
    }
    Ok(())
}

pub fn f_interval(n: usize) -> Result<Interval> {
    check_n(n)?;
    Interval::new(f_bottom(n), f_top(n))
}

pub fn f_poset(n: usize) -> Result<Poset<DyckPath>> {
    Ok(f_interval(n)?.poset())
}

/// `(position, height)` of each subword `(0,1)`; the position is the point
/// between the two letters.
pub fn valleys(w: DyckPath) -> Vec<(usize, i32)> {
    let h = w.heights();
    (1..w.len()).filter(|&p| w.step(p - 1) == 0 && w.step(p) == 1).map(|p| (p, h[p])).collect()
}

/// `(position, height)` of each subword `(1,0)`.
pub fn peaks(w: DyckPath) -> Vec<(usize, i32)> {
    let h = w.heights();
    (1..w.len()).filter(|&p| w.step(p - 1) == 1 && w.step(p) == 0).map(|p| (p, h[p])).collect()
}

fn ends_with(w: DyckPath, suffix: &[u8]) -> bool {
    let n = w.len();
    n >= suffix.len() && suffix.iter().enumerate().all(|(k, &b)| w.step(n - suffix.len() + k) == b)
}

/// Starts with `(1,1)`, valleys at heights 0 or 1 weakly decreasing, and
/// ends with `(0,1,0)` or `(0,1,0,0)`.
pub fn in_f(w: DyckPath, n: usize) -> bool {
    if w.size() != n + 2 || w.len() < 2 || w.step(0) != 1 || w.step(1) != 1 {
        return false;
    }
    let hs: Vec<i32> = valleys(w).iter().map(|v| v.1).collect();
    if hs.iter().any(|&h| h > 1) || hs.windows(2).any(|p| p[0] < p[1]) {
        return false;
    }
    ends_with(w, &[0, 1, 0]) || ends_with(w, &[0, 1, 0, 0])
}

fn size_index(w: DyckPath) -> Result<usize> {
    let n = w.size().checked_sub(2).filter(|&n| n >= 1 && in_f(w, n));
    n.ok_or_else(|| Error::NotInF(w.to_string()))
}

pub fn rho(w: DyckPath) -> Result<TernaryWord> {
    size_index(w)?;
    let h = w.heights();
    let mut out = vec![];
    let mut n2 = 0;
    for k in 2..w.len() {
        if w.step(k) == 1 && w.step(k - 1) == 1 {
            n2 += 1;
        }
        if w.step(k) == 1 && w.step(k - 1) == 0 {
            out.push(h[k] as u8);
            out.extend(std::iter::repeat_n(2, n2));
            n2 = 0;
        }
    }
    Ok(TernaryWord(out))
}

/// Rebuilds the path from its bricks `[0,2,...,2]` and `[1,2,...,2]`.
pub fn rho_inv(z: &TernaryWord) -> Result<DyckPath> {
    let bad = || Error::NotInImage(z.to_string());
    let letters = z.letters();
    if letters.is_empty() || letters[0] == 2 || letters.iter().any(|&d| d > 2) {
        return Err(bad());
    }
    let mut bricks: Vec<(u8, usize)> = vec![];
    for &d in letters {
        match d {
            2 => bricks.last_mut().expect("first letter is not 2").1 += 1,
            x => bricks.push((x, 0)),
        }
    }
    let mut word = vec![];
    let mut height = 0usize;
    for (k, &(target, twos)) in bricks.iter().enumerate() {
        let up = twos + 1 + (k == 0) as usize;
        word.extend(std::iter::repeat_n(1, up));
        height += up;
        let target = target as usize;
        if height <= target {
            return Err(bad());
        }
        word.extend(std::iter::repeat_n(0, height - target));
        height = target;
    }
    word.push(1);
    word.extend(std::iter::repeat_n(0, height + 1));
    let w = DyckPath::new(&word).map_err(|_| bad())?;
    if rho(w).ok().as_ref() != Some(z) {
        return Err(bad());
    }
    Ok(w)
}

/// `Z_{n,0}`, `Z_{n,1}` and `Z_{n,b}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZSets {
    pub zero: BTreeSet<TernaryWord>,
    pub one: BTreeSet<TernaryWord>,
    pub b: BTreeSet<TernaryWord>,
}

impl ZSets {
    pub fn all(&self) -> BTreeSet<TernaryWord> {
        self.zero.union(&self.one).cloned().collect()
    }
}

pub fn z_sets(n: usize) -> Result<ZSets> {
    check_n(n)?;
    let single = |d: u8| BTreeSet::from([TernaryWord(vec![d])]);
    let mut z = ZSets { zero: single(0), one: single(1), b: single(1) };
    for _ in 1..n {
        let mut one = BTreeSet::new();
        for x in &z.one {
            one.insert(x.with(0));
            one.insert(x.with(2));
        }
        for x in &z.b {
            one.insert(x.with(1));
        }
        let b = z.b.iter().flat_map(|x| [x.with(1), x.with(2)]).collect();
        let zero = one
            .iter()
            .filter(|x| !x.0[1..].contains(&1))
            .map(|x| {
                let mut v = x.0.clone();
                v[0] = 0;
                TernaryWord(v)
            })
            .collect();
        z = ZSets { zero, one, b };
    }
    Ok(z)
}

/// `2^(n-2) (n+3)`, written as `(n+3) 2^n / 4`.
pub fn f_size_formula(n: usize) -> u64 {
    ((n as u64 + 3) << n) / 4
}

pub fn termwise_leq(z: &TernaryWord, y: &TernaryWord) -> Result<bool> {
    if z.len() != y.len() {
        return Err(Error::LengthMismatch(z.len(), y.len()));
    }
    Ok(z.0.iter().zip(&y.0).all(|(a, b)| a <= b))
}

fn insert_at(w: DyckPath, pos: usize, piece: &[u8]) -> Result<DyckPath> {
    let word = w.word();
    let mid = Word::from_letters(piece)?;
    let out = word.slice(0, pos).try_concat(mid)?.try_concat(word.slice(pos, w.len()))?;
    DyckPath::from_word(out)
}

/// Inserts `(1,0)` at the top of the next-to-rightmost peak.
pub fn insert_next_to_last_peak(w: DyckPath) -> Result<DyckPath> {
    let pk = peaks(w);
    if pk.len() < 2 {
        return Err(Error::InvalidArgument(format!("{w} has fewer than two peaks")));
    }
    insert_at(w, pk[pk.len() - 2].0, &[1, 0])
}

/// Appends `(1,0)`.
pub fn mu(w: DyckPath) -> Result<DyckPath> {
    insert_at(w, w.len(), &[1, 0])
}

/// Inserts `(1,0)` just before the final letter.
pub fn insert_before_last(w: DyckPath) -> Result<DyckPath> {
    if w.is_empty() {
        return Err(Error::InvalidArgument("empty path".into()));
    }
    insert_at(w, w.len() - 1, &[1, 0])
}

/// Slides the subpath after the first valley down by one step.
pub fn slide_down_after_first_valley(w: DyckPath) -> Result<DyckPath> {
    let bad = || Error::InvalidArgument(format!("{w} has no subpath to slide down after its first valley"));
    let &(p, _) = valleys(w).first().ok_or_else(bad)?;
    let x = w.subpath_at(p).ok_or_else(bad)?;
    if x.end() >= w.len() || w.step(x.end()) != 0 {
        return Err(bad());
    }
    let word = w.word();
    let out = word
        .slice(0, p)
        .concat(Word::repeat(0, 1))
        .concat(word.slice(p, x.end()))
        .concat(word.slice(x.end() + 1, w.len()));
    DyckPath::from_word(out)
}

/// Slides the subpath after the first valley up by one step.
pub fn slide_up_after_first_valley(w: DyckPath) -> Result<DyckPath> {
    let bad = || Error::InvalidArgument(format!("{w} has no valley"));
    let &(p, _) = valleys(w).first().ok_or_else(bad)?;
    let x = w.subpath_at(p).ok_or_else(bad)?;
    dexter::slide(w, Span::new(x.start, x.len), 1)
}

/// Elements of `F_n` keyed by the classes used in the recursive count.
struct Parts {
    all: Vec<DyckPath>,
    rho: Vec<TernaryWord>,
}

impl Parts {
    fn new(n: usize) -> Result<Parts> {
        let all = f_interval(n)?.elements();
        let rho = all.iter().map(|&w| rho(w)).collect::<Result<_>>()?;
        Ok(Parts { all, rho })
    }

    fn filter(&self, f: impl Fn(DyckPath, &TernaryWord) -> bool) -> BTreeSet<DyckPath> {
        self.all.iter().zip(&self.rho).filter(|(w, z)| f(**w, z)).map(|(w, _)| *w).collect()
    }
}

fn first(z: &TernaryWord) -> u8 {
    z.0[0]
}

fn last(z: &TernaryWord) -> u8 {
    *z.0.last().expect("non-empty")
}

/// Checks a map is a bijection between the given sets and acts on
/// `rho` images as `expected`.
fn bijection_check(
    name: &str,
    domain: &BTreeSet<DyckPath>,
    codomain: &BTreeSet<DyckPath>,
    f: impl Fn(DyckPath) -> Result<DyckPath>,
    expected: impl Fn(&TernaryWord) -> TernaryWord,
) -> Check {
    let mut image = BTreeSet::new();
    let mut problem = None;
    for &w in domain {
        match f(w) {
            Ok(x) => {
                if !codomain.contains(&x) {
                    problem.get_or_insert(format!("{w} maps outside the codomain to {x}"));
                }
                if rho(x).ok() != rho(w).ok().map(|z| expected(&z)) {
                    problem.get_or_insert(format!("rho image of {x} is not the expected one"));
                }
                image.insert(x);
            }
            Err(e) => {
                problem.get_or_insert(format!("{w}: {e}"));
            }
        }
    }
    if image.len() != domain.len() {
        problem.get_or_insert("not injective".into());
    }
    if &image != codomain {
        problem.get_or_insert("not surjective".into());
    }
    let witness = problem.clone().unwrap_or_else(|| format!("{} elements", domain.len()));
    Check::new(name, "structural bijection between parts of F_n", problem.is_none(), witness)
}

/// The four explicit bijections from `F_n` parts to `F_{n+1}` parts.
pub fn structural_bijections(n: usize) -> Result<Report> {
    let small = Parts::new(n)?;
    let big = Parts::new(n + 1)?;
    let f_n1 = small.filter(|_, z| first(z) == 1);
    let f_nb = small.filter(|w, _| w.is_block_indecomposable());
    let mut report = Report::new();
    report.push(bijection_check(
        &format!("F_{n},1 -> F_{},1,2 inserting (1,0) at the next-to-rightmost peak", n + 1),
        &f_n1,
        &big.filter(|_, z| first(z) == 1 && last(z) == 2),
        insert_next_to_last_peak,
        |z| z.with(2),
    ));
    report.push(bijection_check(
        &format!("F_{n},1 -> F_{},1,0 appending (1,0)", n + 1),
        &f_n1,
        &big.filter(|_, z| first(z) == 1 && last(z) == 0),
        mu,
        |z| z.with(0),
    ));
    report.push(bijection_check(
        &format!("F_{n},b -> F_{},1,1 inserting (1,0) before the last letter", n + 1),
        &f_nb,
        &big.filter(|_, z| first(z) == 1 && last(z) == 1),
        insert_before_last,
        |z| z.with(1),
    ));
    report.push(bijection_check(
        &format!("F_{n},1 with one height-1 valley -> F_{n},0 sliding after the first valley"),
        &small.filter(|_, z| first(z) == 1 && !z.0[1..].contains(&1)),
        &small.filter(|_, z| first(z) == 0),
        slide_down_after_first_valley,
        |z| {
            let mut v = z.0.clone();
            v[0] = 0;
            TernaryWord(v)
        },
    ));
    Ok(report)
}

/// Boolean lattice with `2^k` elements.
pub fn boolean_lattice(k: usize) -> Poset<u64> {
    let n = 1u64 << k;
    let mut edges = vec![];
    for x in 0..n {
        for b in 0..k {
            if x & (1 << b) == 0 {
                edges.push((x as usize, (x | 1 << b) as usize, EdgeColor::Uncolored));
            }
        }
    }
    Poset::from_covers((0..n).collect(), edges)
}

/// Induced subposet of `F_n` on the given paths, with the order of `F_n`.
fn induced(f: &Poset<DyckPath>, set: &[DyckPath]) -> Poset<DyckPath> {
    let idx: Vec<usize> = set.iter().map(|w| f.index_of(w).expect("element of F_n")).collect();
    f.induced(&idx)
}

/// `F_{n,b}` and the elements with only height-0 valleys are boolean
/// lattices with `2^(n-1)` elements.
pub fn boolean_parts(n: usize) -> Result<Report> {
    let f = f_poset(n)?;
    let b: Vec<DyckPath> = f.elements().iter().copied().filter(|w| w.is_block_indecomposable()).collect();
    let low: Vec<DyckPath> = f.elements().iter().copied().filter(|&w| valleys(w).iter().all(|v| v.1 == 0)).collect();
    let target = boolean_lattice(n - 1);
    let mut report = Report::new();
    for (name, set, bottom) in [
        (format!("F_{n},b is boolean of size 2^{}", n - 1), b, Some(w_nb(n))),
        (format!("height-0 valley part of F_{n} is boolean of size 2^{}", n - 1), low, None),
    ] {
        let p = induced(&f, &set);
        let iso = invariants::poset_isomorphic(&p, &target)?;
        let min_ok = bottom.is_none_or(|m| p.minimal_elements().iter().map(|&i| p.elements()[i]).eq([m]));
        report.push(Check::new(
            name,
            "boolean sublattices of F_n",
            set.len() == 1 << (n - 1) && iso && min_ok,
            format!("{} elements, isomorphic: {iso}", set.len()),
        ));
    }
    Ok(report)
}

/// Every ordering fact about `F_n` that can be checked exhaustively.
pub fn verify_f(n: usize) -> Result<Report> {
    let mut report = Report::new();
    let interval = f_interval(n)?;
    let f = interval.poset();
    let els: HashSet<DyckPath> = f.elements().iter().copied().collect();
    let size_ok = els.len() as u64 == f_size_formula(n);
    report.push(Check::new(
        format!("|F_{n}| = 2^(n-2)(n+3)"),
        "size of the Hochschild interval",
        size_ok,
        format!("{} elements, formula {}", els.len(), f_size_formula(n)),
    ));

    let mismatch = DyckPath::all(n + 2).into_iter().find(|&w| in_f(w, n) != els.contains(&w));
    report.push(Check::new(
        format!("intrinsic description of F_{n}"),
        "membership predicate agrees with the interval",
        mismatch.is_none(),
        mismatch.map_or("all paths agree".into(), |w| format!("disagreement at {w}")),
    ));

    let shape_bad = f.elements().iter().copied().find(|&w| {
        let hs: Vec<i32> = valleys(w).iter().map(|v| v.1).collect();
        hs.windows(2).any(|p| p[0] < p[1])
            || !(ends_with(w, &[0, 1, 0]) || ends_with(w, &[0, 1, 0, 0]))
            || peaks(w).len() < 2
            || hs.iter().any(|&h| h > 1)
    });
    report.push(Check::new(
        format!("valleys, endings and peaks in F_{n}"),
        "valley heights in {0,1} decreasing, final (0,1,0) or (0,1,0,0), two peaks",
        shape_bad.is_none(),
        shape_bad.map_or("all elements".into(), |w| format!("fails at {w}")),
    ));

    let images: Vec<TernaryWord> = f.elements().iter().map(|&w| rho(w)).collect::<Result<_>>()?;
    let roundtrip = f.elements().iter().zip(&images).all(|(&w, z)| z.len() == n && rho_inv(z).ok() == Some(w));
    report.push(Check::new(
        format!("rho roundtrip on F_{n}"),
        "brick inverse of rho",
        roundtrip,
        format!("{} words", images.len()),
    ));

    let z = z_sets(n)?;
    let part = |pred: &dyn Fn(DyckPath) -> bool| -> BTreeSet<TernaryWord> {
        f.elements().iter().zip(&images).filter(|(w, _)| pred(**w)).map(|(_, z)| z.clone()).collect()
    };
    let first_valley = |w: DyckPath| valleys(w).first().map(|v| v.1);
    let image_all: BTreeSet<TernaryWord> = images.iter().cloned().collect();
    let parts_ok = image_all == z.all()
        && part(&|w| first_valley(w) == Some(0)) == z.zero
        && part(&|w| first_valley(w) == Some(1)) == z.one
        && part(&|w| w.is_block_indecomposable()) == z.b;
    report.push(Check::new(
        format!("rho(F_{n}) = Z_{n} with its parts"),
        "recursive description of the Hochschild vertex set",
        parts_ok,
        format!("|Z_{n}| = {}, |Z_{n},b| = {}", z.all().len(), z.b.len()),
    ));

    let bad_edge = f.edges().find(|&(i, j, _)| {
        let (a, b) = (&images[i], &images[j]);
        let diff: Vec<usize> = (0..n).filter(|&k| a.0[k] != b.0[k]).collect();
        !(diff.len() == 1 && a.0[diff[0]] < b.0[diff[0]])
    });
    report.push(Check::new(
        format!("covers of F_{n} raise one letter"),
        "rho along cover edges",
        bad_edge.is_none(),
        bad_edge.map_or(format!("{} edges", f.num_covers()), |(i, j, _)| {
            format!("{} -> {}", f.elements()[i], f.elements()[j])
        }),
    ));

    let f1: BTreeSet<DyckPath> = f.elements().iter().copied().filter(|&w| first_valley(w) == Some(1)).collect();
    let above: BTreeSet<DyckPath> = interval.elements().into_iter().filter(|&w| dexter::path_leq(w_n1(n), w)).collect();
    report.push(Check::new(
        format!("F_{n},1 is the interval above w_{n},1"),
        "first valley at height 1",
        f1 == above,
        format!("{} elements", f1.len()),
    ));

    let f12: Vec<usize> = (0..f.len()).filter(|&i| first(&images[i]) == 1 && last(&images[i]) == 2).collect();
    let upper = f12.iter().all(|&i| f.upper_covers(i).all(|(j, _)| f12.contains(&j)));
    report.push(Check::new(
        format!("F_{n},1,2 is an upper ideal"),
        "last letter 2 is stable upwards",
        upper,
        format!("{} elements", f12.len()),
    ));
    Ok(report)
}

/// Whether the dexter order on `F_n` equals the termwise order on the
/// `rho` images, with a disagreeing pair when it does not.
pub fn termwise_experiment(n: usize) -> Result<(bool, Option<(DyckPath, DyckPath)>)> {
    let f = f_poset(n)?;
    let images: Vec<TernaryWord> = f.elements().iter().map(|&w| rho(w)).collect::<Result<_>>()?;
    for i in 0..f.len() {
        for j in 0..f.len() {
            if f.leq(i, j) != termwise_leq(&images[i], &images[j])? {
                return Ok((false, Some((f.elements()[i], f.elements()[j]))));
            }
        }
    }
    Ok((true, None))
}
