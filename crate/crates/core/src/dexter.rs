//! The dexter order: slides of movable subpaths and the posets they generate.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::dyck::{DyckPath, Span};
use crate::error::{Error, Result};
use crate::poset::{EdgeColor, Poset};
use crate::word::Word;

/// Default cap on the size `n` for building the whole of `D_n`.
pub const DEFAULT_HASSE_CAP: usize = 14;

/// A single slide: the subpath at `span` jumps over `i` zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverMove {
    pub span: Span,
    pub i: usize,
    pub color: EdgeColor,
}

/// Subpaths preceded by 0 and either followed by 1 or ending the word.
pub fn movable_subpaths(w: DyckPath) -> Vec<Span> {
    w.subpaths().into_iter().filter(|&x| is_movable(w, x)).collect()
}

fn is_movable(w: DyckPath, x: Span) -> bool {
    x.start > 0 && w.step(x.start - 1) == 0 && (x.end() == w.len() || w.step(x.end()) == 1)
}

/// Number of consecutive zeros just before `x`.
pub fn zeros_before(w: DyckPath, x: Span) -> usize {
    (0..x.start).rev().take_while(|&k| w.step(k) == 0).count()
}

fn check_span(w: DyckPath, x: Span) -> Result<()> {
    let ok = x.end() <= w.len() && x.len >= 2 && w.subpath_at(x.start) == Some(x) && is_movable(w, x);
    if ok {
        Ok(())
    } else {
        Err(Error::NotMovable { start: x.start, len: x.len })
    }
}

/// `M(w, x, i)`: moves the subpath `x` north-west over `i` of the zeros
/// preceding it. `i = N(w, x)` is the highest possible position.
pub fn slide(w: DyckPath, x: Span, i: usize) -> Result<DyckPath> {
    check_span(w, x)?;
    let max = zeros_before(w, x);
    if i == 0 || i > max {
        return Err(Error::ChoiceOutOfRange { i, max });
    }
    Ok(slide_unchecked(w, x, i))
}

pub(crate) fn slide_unchecked(w: DyckPath, x: Span, i: usize) -> DyckPath {
    let word = w.word();
    let out = word
        .slice(0, x.start - i)
        .concat(word.slice(x.start, x.end()))
        .concat(Word::repeat(0, i))
        .concat(word.slice(x.end(), w.len()));
    DyckPath::from_word_unchecked(out)
}

/// Every `(span, i)` witness of an upward cover of `w`.
pub fn cover_moves(w: DyckPath) -> Vec<CoverMove> {
    let mut out = vec![];
    for x in movable_subpaths(w) {
        let n = zeros_before(w, x);
        for i in 1..=n {
            let color = if i == n { EdgeColor::Red } else { EdgeColor::Blue };
            out.push(CoverMove { span: x, i, color });
        }
    }
    out
}

fn merge_colors(mut v: Vec<(DyckPath, EdgeColor)>) -> Vec<(DyckPath, EdgeColor)> {
    // Red sorts before blue, so the first entry of each run wins.
    v.sort();
    v.dedup_by_key(|e| e.0);
    v
}

/// Upper covers of `w` with their colours, sorted by path.
/// A target is red when some witness slides to the highest position.
pub fn covers(w: DyckPath) -> Vec<(DyckPath, EdgeColor)> {
    let v = cover_moves(w)
        .into_iter()
        .map(|m| (slide_unchecked(w, m.span, m.i), m.color))
        .collect();
    merge_colors(v)
}

/// Lower covers of `w` with the colour of the edge into `w`, sorted by path.
///
/// A subpath followed by a maximal run of `m >= 1` zeros came from the
/// path where it sits after those zeros; the edge is red when nothing but
/// a 1 or the word start precedes it.
pub fn lower_covers(w: DyckPath) -> Vec<(DyckPath, EdgeColor)> {
    let word = w.word();
    let len = w.len();
    let mut v = vec![];
    for x in w.subpaths() {
        let m = (x.end()..len).take_while(|&k| w.step(k) == 0).count();
        if m == 0 {
            continue;
        }
        let red = x.start == 0 || w.step(x.start - 1) == 1;
        let out = word
            .slice(0, x.start)
            .concat(Word::repeat(0, m))
            .concat(word.slice(x.start, x.end()))
            .concat(word.slice(x.end() + m, len));
        let color = if red { EdgeColor::Red } else { EdgeColor::Blue };
        v.push((DyckPath::from_word_unchecked(out), color));
    }
    merge_colors(v)
}

/// Characterisation of maximal elements: block-indecomposable, with no
/// subpath both preceded by 0 and followed by 1.
pub fn is_maximal(w: DyckPath) -> bool {
    if !w.is_block_indecomposable() {
        return w.is_empty();
    }
    !w.subpaths()
        .into_iter()
        .any(|x| x.start > 0 && w.step(x.start - 1) == 0 && x.end() < w.len() && w.step(x.end()) == 1)
}

pub fn w_min(n: usize) -> DyckPath {
    DyckPath::w_min(n)
}

/// Builds `D_n` with coloured covers.
pub fn hasse(n: usize) -> Result<Poset<DyckPath>> {
    hasse_with_cap(n, DEFAULT_HASSE_CAP)
}

pub fn hasse_with_cap(n: usize, cap: usize) -> Result<Poset<DyckPath>> {
    if n > cap {
        return Err(Error::SizeTooLarge { n, cap });
    }
    let elements = DyckPath::all(n);
    Ok(poset_on(elements))
}

/// The subposet of the dexter order on a convex set of paths of equal size.
fn poset_on(mut elements: Vec<DyckPath>) -> Poset<DyckPath> {
    elements.sort_unstable();
    let edges: Vec<(usize, usize, EdgeColor)> = elements
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, &w)| {
            let targets = covers(w);
            let els = &elements;
            targets.into_iter().filter_map(move |(t, c)| {
                els.binary_search(&t).ok().map(|j| (i, j, c))
            })
        })
        .collect();
    Poset::from_covers(elements, edges)
}

/// Comparison in the poset, by value.
pub fn leq(p: &Poset<DyckPath>, u: DyckPath, v: DyckPath) -> Result<bool> {
    p.leq_elems(&u, &v)
}

fn closure(start: DyckPath, step: impl Fn(DyckPath) -> Vec<(DyckPath, EdgeColor)>) -> Vec<DyckPath> {
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for (v, _) in step(u) {
            if seen.insert(v) {
                stack.push(v);
            }
        }
    }
    let mut out: Vec<DyckPath> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// `{ v : w <= v }`, sorted.
pub fn up_set(w: DyckPath) -> Vec<DyckPath> {
    closure(w, covers)
}

/// `{ v : v <= w }`, sorted.
pub fn down_set(w: DyckPath) -> Vec<DyckPath> {
    closure(w, lower_covers)
}

/// Elements of `[bottom, top]`, sorted; empty when `bottom` is not below `top`.
pub fn interval_elements(bottom: DyckPath, top: DyckPath) -> Vec<DyckPath> {
    if bottom.size() != top.size() {
        return vec![];
    }
    let below: HashSet<DyckPath> = down_set(top).into_iter().collect();
    if !below.contains(&bottom) {
        return vec![];
    }
    let mut seen = HashSet::from([bottom]);
    let mut stack = vec![bottom];
    while let Some(u) = stack.pop() {
        for (v, _) in covers(u) {
            if below.contains(&v) && seen.insert(v) {
                stack.push(v);
            }
        }
    }
    let mut out: Vec<DyckPath> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// `u <= v` in the dexter order, by search.
pub fn path_leq(u: DyckPath, v: DyckPath) -> bool {
    if u == v {
        return true;
    }
    if u.size() != v.size() || u.area() >= v.area() {
        return false;
    }
    let target_area = v.area();
    let mut seen = HashSet::from([u]);
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for (y, _) in covers(x) {
            if y == v {
                return true;
            }
            if y.area() < target_area && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    false
}

/// The interval `[bottom, top]` as a poset with inherited colours.
pub fn interval_poset(bottom: DyckPath, top: DyckPath) -> Result<Poset<DyckPath>> {
    let els = interval_elements(bottom, top);
    if els.is_empty() {
        return Err(Error::NotAnInterval { bottom: bottom.to_string(), top: top.to_string() });
    }
    Ok(poset_on(els))
}

/// `I(w) = [w_min, w]`.
pub fn lower_interval(w: DyckPath) -> Poset<DyckPath> {
    poset_on(down_set(w))
}

/// `J(w) = [w_min, (1, w, 1, 0, 0)]`.
pub fn j_interval(w: DyckPath) -> Poset<DyckPath> {
    lower_interval(j_top(w))
}

/// `(1, w, 1, 0, 0)`.
pub fn j_top(w: DyckPath) -> DyckPath {
    let word = Word::repeat(1, 1)
        .concat(w.word())
        .concat(Word::from_letters(&[1, 0, 0]).unwrap());
    DyckPath::from_word_unchecked(word)
}

/// The principal upper ideal `Up(w)`.
pub fn upper_ideal(w: DyckPath) -> Poset<DyckPath> {
    poset_on(up_set(w))
}

/// Lookup table from path to index for a sorted element list.
pub fn index_map(elements: &[DyckPath]) -> HashMap<DyckPath, usize> {
    elements.iter().enumerate().map(|(i, &w)| (w, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::Span;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn movable_examples() {
        let w = p("1011010010");
        let m = movable_subpaths(w);
        assert!(m.contains(&Span::new(2, 6)));
        assert!(m.contains(&Span::new(8, 2)));
        assert!(!m.contains(&Span::new(5, 2)));
        assert!(movable_subpaths(p("1100")).is_empty());
        // Every peak but the first of w_min is movable.
        assert_eq!(movable_subpaths(w_min(4)).len(), 3);
    }

    #[test]
    fn slide_examples() {
        let w = p("111010001100");
        assert_eq!(slide(w, Span::new(8, 4), 2).unwrap(), p("111010110000"));
        assert_eq!(slide(p("1010"), Span::new(2, 2), 1).unwrap(), p("1100"));
        assert_eq!(
            slide(w, Span::new(8, 4), 4),
            Err(Error::ChoiceOutOfRange { i: 4, max: 3 })
        );
        assert_eq!(
            slide(p("1011010010"), Span::new(5, 2), 1),
            Err(Error::NotMovable { start: 5, len: 2 })
        );
    }

    #[test]
    fn cover_examples() {
        assert_eq!(covers(w_min(4)).len(), 3);
        assert!(covers(p("11110000")).is_empty());
        assert_eq!(covers(p("1010")), vec![(p("1100"), EdgeColor::Red)]);
    }

    #[test]
    fn lower_covers_match_covers() {
        for n in 0..=7 {
            let mut up = vec![];
            let mut down = vec![];
            for w in DyckPath::all(n) {
                for (v, c) in covers(w) {
                    up.push((w, v, c));
                }
                for (u, c) in lower_covers(w) {
                    down.push((u, w, c));
                }
            }
            up.sort();
            down.sort();
            assert_eq!(up, down, "n = {n}");
        }
    }

    #[test]
    fn small_hasse() {
        assert_eq!(hasse(0).unwrap().len(), 1);
        let d1 = hasse(1).unwrap();
        assert_eq!((d1.len(), d1.num_covers()), (1, 0));
        assert_eq!(hasse(4).unwrap().len(), 14);
        assert!(matches!(hasse(15), Err(Error::SizeTooLarge { n: 15, cap: 14 })));
    }

    #[test]
    fn area_increases_and_single_source() {
        for n in 1..=8 {
            let d = hasse(n).unwrap();
            assert!(d.is_acyclic());
            for (i, j, _) in d.edges() {
                assert!(d.element(i).area() < d.element(j).area());
            }
            let sources = d.minimal_elements();
            assert_eq!(sources.len(), 1);
            assert_eq!(*d.element(sources[0]), w_min(n));
        }
    }

    #[test]
    fn transitively_reduced() {
        for n in 1..=8 {
            assert!(hasse(n).unwrap().is_transitively_reduced(), "n = {n}");
        }
    }

    /// Brute-force reachability by breadth-first search from each vertex.
    fn bfs_leq(u: DyckPath, v: DyckPath) -> bool {
        let mut seen = HashSet::from([u]);
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                return true;
            }
            for (y, _) in covers(x) {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        false
    }

    #[test]
    fn leq_matches_bfs() {
        for n in 0..=6 {
            let d = hasse(n).unwrap();
            for &u in d.elements() {
                assert!(leq(&d, w_min(n), u).unwrap());
                for &v in d.elements() {
                    let expected = bfs_leq(u, v);
                    assert_eq!(leq(&d, u, v).unwrap(), expected);
                    assert_eq!(path_leq(u, v), expected);
                }
            }
        }
    }

    #[test]
    fn maximal_characterisation() {
        let motzkin = [1, 1, 2, 4, 9, 21, 51, 127, 323];
        for n in 1..=9 {
            let mut count = 0;
            for w in DyckPath::all(n) {
                assert_eq!(is_maximal(w), covers(w).is_empty(), "{w}");
                count += is_maximal(w) as usize;
            }
            assert_eq!(count, motzkin[n - 1], "n = {n}");
        }
        assert!(is_maximal(p("1100")));
        assert!(!is_maximal(p("1010")));
    }

    #[test]
    fn embeddings_preserve_covers() {
        let unit = p("10");
        for n in 0..=6 {
            for w in DyckPath::all(n) {
                let left: Vec<DyckPath> = covers(w).iter().map(|&(v, _)| unit.concat(v)).collect();
                let right: Vec<DyckPath> = covers(w).iter().map(|&(v, _)| v.concat(unit)).collect();
                let lw: Vec<DyckPath> = covers(unit.concat(w)).iter().map(|e| e.0).collect();
                let rw: Vec<DyckPath> = covers(w.concat(unit)).iter().map(|e| e.0).collect();
                assert!(left.iter().all(|v| lw.contains(v)));
                assert!(right.iter().all(|v| rw.contains(v)));
            }
        }
    }

    #[test]
    fn intervals_by_search_match_poset() {
        let d = hasse(5).unwrap();
        for (i, &u) in d.elements().iter().enumerate() {
            let up: Vec<DyckPath> = d.up_set(i).into_iter().map(|k| *d.element(k)).collect();
            assert_eq!(up_set(u), up);
            let down: Vec<DyckPath> = d.down_set(i).into_iter().map(|k| *d.element(k)).collect();
            assert_eq!(down_set(u), down);
        }
        let top = p("1110100100");
        let got = interval_elements(w_min(5), top);
        let want: Vec<DyckPath> = d
            .interval(0, d.index_of(&top).unwrap())
            .into_iter()
            .map(|k| *d.element(k))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn j_interval_sizes() {
        assert_eq!(j_interval(p("101100")).len(), 9);
        assert_eq!(j_interval(p("110010")).len(), 9);
        assert_eq!(j_interval(p("11011000")).len(), 27);
        assert_eq!(j_interval(p("11101000")).len(), 27);
        assert_eq!(j_interval(p("10111000")).len(), 20);
        assert_eq!(j_interval(p("11001100")).len(), 20);
    }
}
