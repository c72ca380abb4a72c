//! Dyck paths, pseudo-Dyck paths and their decompositions.
//!
//! Paths are words over {0,1} where `1` is a north-east step and `0` a
//! south-east step. Positions are 0-based step indices throughout.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::Word;

/// Largest supported path size (64 steps).
pub const MAX_SIZE: usize = Word::MAX_LEN / 2;

/// A Dyck path: every prefix has at least as many 1s as 0s, with equality
/// at the end. The empty path is the unique path of size 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath(Word);

/// A contiguous range of steps `start..start + len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub len: usize,
}

impl Span {
    pub fn new(start: usize, len: usize) -> Span {
        Span { start, len }
    }

    /// One past the last step.
    pub fn end(self) -> usize {
        self.start + self.len
    }
}

/// The decomposition `w = (prefix, 1, inner, 1, 0, 0, 0^extra_zeros)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strip {
    pub prefix: Word,
    pub inner: DyckPath,
    pub extra_zeros: usize,
}

impl Strip {
    /// The path `(prefix, 1, 0, 0^extra_zeros)` obtained by collapsing the strip.
    pub fn collapsed(&self) -> DyckPath {
        let w = self
            .prefix
            .concat(Word::from_letters(&[1, 0]).unwrap())
            .concat(Word::repeat(0, self.extra_zeros));
        DyckPath(w)
    }

    /// Reassembles the original path.
    pub fn assemble(&self) -> DyckPath {
        let w = self
            .prefix
            .concat(Word::repeat(1, 1))
            .concat(self.inner.0)
            .concat(Word::from_letters(&[1, 0, 0]).unwrap())
            .concat(Word::repeat(0, self.extra_zeros));
        DyckPath(w)
    }
}

impl DyckPath {
    pub const EMPTY: DyckPath = DyckPath(Word::EMPTY);

    /// Validates a step sequence.
    pub fn new(letters: &[u8]) -> Result<DyckPath> {
        let w = Word::from_letters(letters).map_err(|e| match e {
            Error::InvalidArgument(_) => Error::NotADyckWord(format!("{letters:?}")),
            other => other,
        })?;
        DyckPath::from_word(w)
    }

    pub fn from_word(w: Word) -> Result<DyckPath> {
        let mut h = 0i32;
        for b in w.letters() {
            h += if b == 1 { 1 } else { -1 };
            if h < 0 {
                return Err(Error::NotADyckWord(w.to_string()));
            }
        }
        if h != 0 {
            return Err(Error::NotADyckWord(w.to_string()));
        }
        Ok(DyckPath(w))
    }

    /// Wraps a word already known to be a Dyck word.
    pub(crate) fn from_word_unchecked(w: Word) -> DyckPath {
        debug_assert!(DyckPath::from_word(w).is_ok(), "not a Dyck word: {w}");
        DyckPath(w)
    }

    /// The path `(1,0)^n`, bottom of every order on paths of size `n`.
    pub fn w_min(n: usize) -> DyckPath {
        assert!(n <= MAX_SIZE);
        let mut w = Word::EMPTY;
        for _ in 0..n {
            w.push(1);
            w.push(0);
        }
        DyckPath(w)
    }

    /// The path `1^n 0^n`.
    pub fn w_max(n: usize) -> DyckPath {
        DyckPath(Word::repeat(1, n).concat(Word::repeat(0, n)))
    }

    pub fn word(self) -> Word {
        self.0
    }

    /// Number of 1 letters.
    pub fn size(self) -> usize {
        self.0.len() / 2
    }

    /// Number of steps.
    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn step(self, i: usize) -> u8 {
        self.0.get(i)
    }

    pub fn letters(self) -> impl Iterator<Item = u8> {
        self.0.letters()
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.0.to_vec()
    }

    pub fn heights(self) -> Vec<i32> {
        self.0.heights()
    }

    pub fn tuple(self) -> String {
        self.0.tuple()
    }

    pub fn concat(self, other: DyckPath) -> DyckPath {
        DyckPath(self.0.concat(other.0))
    }

    /// `(1, self, 0)`.
    pub fn lift(self) -> DyckPath {
        DyckPath(Word::repeat(1, 1).concat(self.0).concat(Word::repeat(0, 1)))
    }

    pub fn trailing_zeros(self) -> usize {
        self.0.trailing_zeros()
    }

    /// True when the path ends with `(1,0)`.
    pub fn ends_with_peak(self) -> bool {
        let n = self.len();
        n >= 2 && self.step(n - 2) == 1 && self.step(n - 1) == 0
    }

    /// Splits at every return to height 0.
    pub fn blocks(self) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let mut h = 0i32;
        let mut start = 0;
        for (i, b) in self.letters().enumerate() {
            h += if b == 1 { 1 } else { -1 };
            if h == 0 {
                out.push(DyckPath(self.0.slice(start, i + 1)));
                start = i + 1;
            }
        }
        out
    }

    pub fn num_blocks(self) -> usize {
        let mut h = 0i32;
        let mut count = 0;
        for b in self.letters() {
            h += if b == 1 { 1 } else { -1 };
            if h == 0 {
                count += 1;
            }
        }
        count
    }

    pub fn is_block_indecomposable(self) -> bool {
        self.num_blocks() == 1
    }

    /// Sum over steps of the height at the midpoint of the step.
    ///
    /// With this normalisation `(1,0)` has area 1 and the area is the sum of
    /// the heights at the starting point of every step.
    pub fn area(self) -> u64 {
        let h = self.heights();
        h[..self.len()].iter().map(|&x| x as u64).sum()
    }

    /// Height just after each letter 1.
    pub fn height_sequence(self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        let mut h = 0i32;
        for b in self.letters() {
            if b == 1 {
                h += 1;
                out.push(h as u32);
            } else {
                h -= 1;
            }
        }
        out
    }

    /// The subpath starting with the up step at `start`: that step together
    /// with everything up to its matching down step.
    pub fn subpath_at(self, start: usize) -> Option<Span> {
        if start >= self.len() || self.step(start) == 0 {
            return None;
        }
        let mut depth = 0i32;
        for i in start..self.len() {
            depth += if self.step(i) == 1 { 1 } else { -1 };
            if depth == 0 {
                return Some(Span::new(start, i + 1 - start));
            }
        }
        None
    }

    /// The subpath ending with the down step at `last`.
    pub fn subpath_ending_at(self, last: usize) -> Option<Span> {
        if last >= self.len() || self.step(last) == 1 {
            return None;
        }
        let mut depth = 0i32;
        for i in (0..=last).rev() {
            depth += if self.step(i) == 0 { 1 } else { -1 };
            if depth == 0 {
                return Some(Span::new(i, last + 1 - i));
            }
        }
        None
    }

    /// All subpaths, ordered by start. There is exactly one per up step.
    pub fn subpaths(self) -> Vec<Span> {
        // Stack-based matching of up and down steps.
        let mut open = Vec::new();
        let mut out = Vec::with_capacity(self.size());
        for (i, b) in self.letters().enumerate() {
            if b == 1 {
                open.push(i);
            } else {
                let s = open.pop().expect("valid Dyck path");
                out.push(Span::new(s, i + 1 - s));
            }
        }
        out.sort();
        out
    }

    pub fn slice_span(self, span: Span) -> DyckPath {
        DyckPath(self.0.slice(span.start, span.end()))
    }

    /// Level decomposition of a block-indecomposable path
    /// `(1, w_1, 1, w_2, ..., 1, w_k, 1, 0^{k+1})`.
    ///
    /// Strips, from the right, the largest suffix whose height stays at or
    /// above its final height, one level at a time.
    pub fn level_decomposition(self) -> Result<Vec<DyckPath>> {
        if !self.is_block_indecomposable() {
            return Err(Error::NotBlockIndecomposable(self.to_string()));
        }
        let h = self.heights();
        let zeros = self.trailing_zeros();
        let k = zeros - 1;
        // Drop the final (1, 0^{k+1}).
        let mut end = self.len() - zeros - 1;
        let mut parts = Vec::with_capacity(k);
        for level in (1..=k as i32).rev() {
            debug_assert_eq!(h[end], level);
            let mut start = end;
            while start > 0 && h[start - 1] >= level {
                start -= 1;
            }
            debug_assert_eq!(self.step(start - 1), 1);
            parts.push(DyckPath(self.0.slice(start, end)));
            end = start - 1;
        }
        debug_assert_eq!(end, 0);
        parts.reverse();
        Ok(parts)
    }

    /// Inverse of [`DyckPath::level_decomposition`].
    pub fn level_compose(parts: &[DyckPath]) -> DyckPath {
        let one = Word::repeat(1, 1);
        let mut w = Word::EMPTY;
        for p in parts {
            w = w.concat(one).concat(p.0);
        }
        w = w.concat(one).concat(Word::repeat(0, parts.len() + 1));
        DyckPath(w)
    }

    /// Locates a strip anchored at the second 0 of the final run of 0s.
    /// Returns `None` exactly when the path is empty or ends with `(1,0)`.
    pub fn find_strip(self) -> Option<Strip> {
        if self.is_empty() {
            return None;
        }
        let run = self.trailing_zeros();
        if run < 2 {
            return None;
        }
        let anchor = self.len() - run + 1;
        let x = self.subpath_ending_at(anchor).expect("down step has a match");
        // x = (1, v, 1, 0, 0)
        let inner = DyckPath(self.0.slice(x.start + 1, x.end() - 3));
        Some(Strip {
            prefix: self.0.slice(0, x.start),
            inner,
            extra_zeros: run - 2,
        })
    }

    /// The pseudo-Dyck path obtained by removing the first and last letters.
    pub fn bar(self) -> Result<PseudoDyckPath> {
        if self.is_empty() {
            return Err(Error::EmptyOperand);
        }
        Ok(PseudoDyckPath(self.0.slice(1, self.len() - 1)))
    }

    /// All Dyck paths of size `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<DyckPath> {
        assert!(n <= MAX_SIZE);
        let mut out = Vec::new();
        fn rec(w: Word, ones: usize, zeros: usize, n: usize, out: &mut Vec<DyckPath>) {
            if ones == n && zeros == n {
                out.push(DyckPath(w));
                return;
            }
            if zeros < ones {
                let mut x = w;
                x.push(0);
                rec(x, ones, zeros + 1, n, out);
            }
            if ones < n {
                let mut x = w;
                x.push(1);
                rec(x, ones + 1, zeros, n, out);
            }
        }
        rec(Word::EMPTY, 0, 0, n, &mut out);
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.tuple())
    }
}

/// Parses `"110100"` or the tuple form `"(1,1,0,1,0,0)"`.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    for c in s.chars() {
        match c {
            '0' => out.push(0),
            '1' => out.push(1),
            '(' | ')' | ',' | ' ' | '[' | ']' => {}
            other => {
                return Err(Error::InvalidArgument(format!("unexpected character {other:?} in {s:?}")))
            }
        }
    }
    Ok(out)
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<DyckPath> {
        DyckPath::new(&parse_letters(s)?)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let letters = Vec::<u8>::deserialize(deserializer)?;
        DyckPath::new(&letters).map_err(serde::de::Error::custom)
    }
}

/// A non-empty Dyck path with its first and last letters removed. Heights
/// may reach -1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PseudoDyckPath(Word);

impl PseudoDyckPath {
    pub const EMPTY: PseudoDyckPath = PseudoDyckPath(Word::EMPTY);

    pub fn new(letters: &[u8]) -> Result<PseudoDyckPath> {
        let w = Word::from_letters(letters)
            .map_err(|_| Error::NotAPseudoDyckWord(format!("{letters:?}")))?;
        PseudoDyckPath::from_word(w)
    }

    pub fn from_word(w: Word) -> Result<PseudoDyckPath> {
        let mut h = 0i32;
        for b in w.letters() {
            h += if b == 1 { 1 } else { -1 };
            if h < -1 {
                return Err(Error::NotAPseudoDyckWord(w.to_string()));
            }
        }
        if h != 0 || w.len() + 2 > Word::MAX_LEN {
            return Err(Error::NotAPseudoDyckWord(w.to_string()));
        }
        Ok(PseudoDyckPath(w))
    }

    pub fn word(self) -> Word {
        self.0
    }

    pub fn size(self) -> usize {
        self.0.len() / 2
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    /// `(1, self, 0)`.
    pub fn unbar(self) -> DyckPath {
        DyckPath(Word::repeat(1, 1).concat(self.0).concat(Word::repeat(0, 1)))
    }
}

impl fmt::Display for PseudoDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for PseudoDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.tuple())
    }
}

impl FromStr for PseudoDyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<PseudoDyckPath> {
        PseudoDyckPath::new(&parse_letters(s)?)
    }
}

/// A planar rooted binary tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> BinaryTree {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn inner_nodes(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.inner_nodes() + r.inner_nodes(),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Inner vertices on the path from the root following right children.
    pub fn rightmost_branch_len(&self) -> usize {
        let mut t = self;
        let mut count = 0;
        while let BinaryTree::Node(_, r) = t {
            count += 1;
            t = r;
        }
        count
    }

    /// Replaces the `k`-th leaf counted from the right (`k = 1` is the
    /// rightmost). Returns the number of leaves still to skip when the
    /// replacement did not happen inside `self`.
    fn replace_leaf_from_right(&mut self, k: usize, with: &mut Option<BinaryTree>) -> usize {
        match self {
            BinaryTree::Leaf => {
                if k == 1 {
                    *self = with.take().expect("replacement used once");
                    0
                } else {
                    k - 1
                }
            }
            BinaryTree::Node(l, r) => {
                let k = r.replace_leaf_from_right(k, with);
                if k == 0 {
                    0
                } else {
                    l.replace_leaf_from_right(k, with)
                }
            }
        }
    }

    /// Bracket notation: `.` for a leaf, `(L R)` for a node.
    pub fn to_bracket(&self) -> String {
        match self {
            BinaryTree::Leaf => ".".to_string(),
            BinaryTree::Node(l, r) => format!("({} {})", l.to_bracket(), r.to_bracket()),
        }
    }
}

/// Bijection from Dyck paths of size `n` to binary trees with `n` inner nodes.
///
/// A block-indecomposable `(1,w',0)` grows `kappa(w')` by a node on its
/// rightmost leaf; otherwise `w = w1 w2` with `w2` the last block and the
/// root of `kappa(w1)` is grafted on the second leaf from the right of
/// `kappa(w2)`.
pub fn kappa(w: DyckPath) -> BinaryTree {
    if w.is_empty() {
        return BinaryTree::Leaf;
    }
    let blocks = w.blocks();
    if blocks.len() == 1 {
        let inner = DyckPath(w.0.slice(1, w.len() - 1));
        let mut t = kappa(inner);
        let mut with = Some(BinaryTree::node(BinaryTree::Leaf, BinaryTree::Leaf));
        t.replace_leaf_from_right(1, &mut with);
        t
    } else {
        let last = *blocks.last().unwrap();
        let first = DyckPath(w.0.slice(0, w.len() - last.len()));
        let mut t = kappa(last);
        let mut with = Some(kappa(first));
        let rest = t.replace_leaf_from_right(2, &mut with);
        debug_assert_eq!(rest, 0);
        t
    }
}

/// Inverse of [`kappa`].
pub fn kappa_inv(t: &BinaryTree) -> Result<DyckPath> {
    if t.inner_nodes() > MAX_SIZE {
        return Err(Error::PathTooLong(2 * t.inner_nodes()));
    }
    Ok(kappa_inv_rec(t))
}

fn kappa_inv_rec(t: &BinaryTree) -> DyckPath {
    let BinaryTree::Node(_, _) = t else {
        return DyckPath::EMPTY;
    };
    // Find the parent of the rightmost leaf and split there.
    let mut t2 = t.clone();
    let mut cur = &mut t2;
    loop {
        let BinaryTree::Node(_, r) = cur else { unreachable!() };
        if matches!(**r, BinaryTree::Leaf) {
            break;
        }
        cur = match cur {
            BinaryTree::Node(_, r) => r.as_mut(),
            BinaryTree::Leaf => unreachable!(),
        };
    }
    let BinaryTree::Node(left, _) = cur else { unreachable!() };
    if matches!(**left, BinaryTree::Leaf) {
        *cur = BinaryTree::Leaf;
        kappa_inv_rec(&t2).lift()
    } else {
        let t1 = std::mem::replace(left.as_mut(), BinaryTree::Leaf);
        kappa_inv_rec(&t1).concat(kappa_inv_rec(&t2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    /// Path of the 48-step introductory figure, transcribed from its vertices.
    fn figure_path() -> DyckPath {
        let ys = [
            0, 1, 2, 3, 4, 3, 4, 5, 4, 3, 4, 5, 4, 3, 2, 1, 2, 1, 0, 1, 2, 1, 2, 3, 2, 3, 4, 3, 4,
            5, 6, 5, 6, 5, 6, 7, 8, 7, 6, 5, 4, 5, 4, 3, 2, 1, 0, 1, 0,
        ];
        let letters: Vec<u8> = ys.windows(2).map(|w| (w[1] > w[0]) as u8).collect();
        DyckPath::new(&letters).unwrap()
    }

    #[test]
    fn validate() {
        assert_eq!(DyckPath::new(&[1, 0]).unwrap().size(), 1);
        assert!(matches!(DyckPath::new(&[0, 1]), Err(Error::NotADyckWord(_))));
        assert!(matches!(DyckPath::new(&[1, 1, 0]), Err(Error::NotADyckWord(_))));
        let fig = figure_path();
        assert_eq!(fig.len(), 48);
        assert_eq!(fig.size(), 24);
    }

    #[test]
    fn blocks() {
        assert_eq!(p("1010").blocks(), vec![p("10"), p("10")]);
        assert_eq!(p("1100").blocks(), vec![p("1100")]);
        assert_eq!(figure_path().blocks().len(), 3);
        assert!(DyckPath::EMPTY.blocks().is_empty());
    }

    #[test]
    fn area() {
        assert_eq!(p("10").area(), 1);
        assert_eq!(p("1100").area(), 4);
        for n in 0..6 {
            assert_eq!(DyckPath::w_min(n).area(), n as u64);
        }
    }

    #[test]
    fn height_sequence() {
        assert_eq!(p("1010").height_sequence(), vec![1, 1]);
        assert_eq!(p("1100").height_sequence(), vec![1, 2]);
        assert_eq!(p("110100").height_sequence(), vec![1, 2, 2]);
    }

    #[test]
    fn subpaths() {
        assert_eq!(p("10").subpaths(), vec![Span::new(0, 2)]);
        assert_eq!(p("1100").subpaths(), vec![Span::new(0, 4), Span::new(1, 2)]);
        let w = p("1011010010");
        let spans = w.subpaths();
        for s in [Span::new(2, 6), Span::new(8, 2), Span::new(5, 2)] {
            assert!(spans.contains(&s), "{s:?}");
        }
        assert!(DyckPath::EMPTY.subpaths().is_empty());
    }

    #[test]
    fn level_decomposition_examples() {
        assert_eq!(p("10").level_decomposition().unwrap(), vec![]);
        assert_eq!(
            p("11011000").level_decomposition().unwrap(),
            vec![p("10"), DyckPath::EMPTY]
        );
        assert_eq!(
            p("11101000").level_decomposition().unwrap(),
            vec![DyckPath::EMPTY, p("10")]
        );
        assert!(matches!(
            p("1010").level_decomposition(),
            Err(Error::NotBlockIndecomposable(_))
        ));
    }

    #[test]
    fn level_compose_examples() {
        assert_eq!(DyckPath::level_compose(&[]), p("10"));
        assert_eq!(DyckPath::level_compose(&[p("10")]), p("110100"));
        assert_eq!(DyckPath::level_compose(&[p("10"), DyckPath::EMPTY]), p("11011000"));
    }

    #[test]
    fn level_roundtrip_exhaustive() {
        for n in 1..=10 {
            for w in DyckPath::all(n).into_iter().filter(|w| w.is_block_indecomposable()) {
                let parts = w.level_decomposition().unwrap();
                assert_eq!(DyckPath::level_compose(&parts), w);
            }
        }
    }

    /// All sequences of Dyck paths with the given total size.
    fn sequences(total: usize) -> Vec<Vec<DyckPath>> {
        if total == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for first in 0..=total {
            for head in DyckPath::all(first) {
                if first == 0 {
                    // Empty parts are allowed but must not loop forever.
                    continue;
                }
                for mut tail in sequences(total - first) {
                    tail.insert(0, head);
                    out.push(tail);
                }
            }
        }
        out
    }

    #[test]
    fn level_compose_roundtrip_on_lists() {
        // Lists of total size <= 8, with up to two empty parts inserted.
        for total in 0..=6 {
            for seq in sequences(total) {
                for extra in 0..=2usize.min(8 - total) {
                    for pos in 0..=seq.len() {
                        let mut s = seq.clone();
                        for _ in 0..extra {
                            s.insert(pos, DyckPath::EMPTY);
                        }
                        if s.len() + total > MAX_SIZE {
                            continue;
                        }
                        let w = DyckPath::level_compose(&s);
                        assert_eq!(w.level_decomposition().unwrap(), s);
                    }
                }
            }
        }
    }

    #[test]
    fn strip_examples() {
        assert_eq!(p("10").find_strip(), None);
        assert_eq!(
            p("1100").find_strip(),
            Some(Strip { prefix: Word::EMPTY, inner: DyckPath::EMPTY, extra_zeros: 0 })
        );
        // Brute force: every decomposition (u,1,v,1,0,0,0^k) of the word.
        let w = p("1011010100");
        let mut all = vec![];
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                let prefix = w.word().slice(0, a);
                if w.step(a) != 1 {
                    continue;
                }
                let inner = w.word().slice(a + 1, b);
                let Ok(inner) = DyckPath::from_word(inner) else { continue };
                let rest = w.word().slice(b, w.len());
                if rest.len() >= 3
                    && rest.get(0) == 1
                    && rest.letters().skip(1).all(|x| x == 0)
                {
                    all.push(Strip { prefix, inner, extra_zeros: rest.len() - 3 });
                }
            }
        }
        let s = w.find_strip().unwrap();
        assert!(all.contains(&s));
        assert_eq!(s.prefix.to_vec(), vec![1, 0]);
        assert_eq!(s.inner, p("1010"));
        assert_eq!(s.extra_zeros, 0);
        assert_eq!(s.collapsed(), p("1010"));
        assert_eq!(s.assemble(), w);
    }

    #[test]
    fn strip_exists_iff_not_ending_with_peak() {
        for n in 0..=10 {
            for w in DyckPath::all(n) {
                let s = w.find_strip();
                assert_eq!(s.is_none(), w.is_empty() || w.ends_with_peak(), "{w}");
                if let Some(s) = s {
                    assert_eq!(s.assemble(), w);
                }
            }
        }
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(DyckPath::EMPTY), BinaryTree::Leaf);
        assert_eq!(kappa(p("10")), BinaryTree::node(BinaryTree::Leaf, BinaryTree::Leaf));
    }

    #[test]
    fn kappa_is_a_bijection() {
        for n in 0..=8 {
            let mut seen = std::collections::HashSet::new();
            for w in DyckPath::all(n) {
                let t = kappa(w);
                assert_eq!(t.inner_nodes(), n);
                assert_eq!(t.leaves(), n + 1);
                assert_eq!(t.rightmost_branch_len(), w.trailing_zeros(), "{w}");
                assert_eq!(kappa_inv(&t).unwrap(), w);
                seen.insert(t);
            }
            assert_eq!(seen.len(), DyckPath::all(n).len());
        }
    }

    #[test]
    fn catalan_counts() {
        let cat = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (n, &c) in cat.iter().enumerate() {
            let all = DyckPath::all(n);
            assert_eq!(all.len(), c);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn serde_forms() {
        let w = p("110100");
        assert_eq!(serde_json::to_string(&w).unwrap(), "[1,1,0,1,0,0]");
        let back: DyckPath = serde_json::from_str("[1,1,0,1,0,0]").unwrap();
        assert_eq!(back, w);
        assert_eq!(w.to_string(), "110100");
        assert_eq!("(1,1,0,1,0,0)".parse::<DyckPath>().unwrap(), w);
        assert!(serde_json::from_str::<DyckPath>("[0,1]").is_err());
    }

    #[test]
    fn pseudo_paths() {
        assert!(PseudoDyckPath::new(&[0, 1]).is_ok());
        assert!(PseudoDyckPath::new(&[0, 0, 1, 1]).is_err());
        assert_eq!(p("1010").bar().unwrap().word().to_vec(), vec![0, 1]);
        assert_eq!(PseudoDyckPath::EMPTY.unbar(), p("10"));
    }
}
