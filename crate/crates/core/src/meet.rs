//! Constructive meet of two Dyck paths.
//!
//! Positions are 0-based letter indices. The letter at index `i` is the
//! one following a prefix of length `i`.

use crate::dexter;
use crate::dyck::{DyckPath, Span};
use crate::error::{Error, Result};
use crate::word::Word;

/// `u = p 0^l X_0 0^(k_0) ... X_r 0^(k_r) X_(r+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrozenDecomposition {
    pub prefix: Word,
    pub lead_zeros: usize,
    /// `(X_j, k_j)` for `j = 0..=r`.
    pub segments: Vec<(DyckPath, usize)>,
    pub tail: DyckPath,
}

impl FrozenDecomposition {
    pub fn reassemble(&self) -> Word {
        let mut w = self.prefix.concat(Word::repeat(0, self.lead_zeros));
        for (x, k) in &self.segments {
            w = w.concat(x.word()).concat(Word::repeat(0, *k));
        }
        w.concat(self.tail.word())
    }

    /// Movability of each block of `X_0, ..., X_r, X_(r+1)`: all blocks of
    /// a segment but its last, and every block of the tail.
    pub fn movable_blocks(&self) -> Vec<Vec<bool>> {
        let mut out: Vec<Vec<bool>> = self
            .segments
            .iter()
            .map(|(x, _)| {
                let b = x.num_blocks();
                (0..b).map(|i| i + 1 < b).collect()
            })
            .collect();
        out.push(vec![true; self.tail.num_blocks()]);
        out
    }

    pub fn has_movable_block(&self) -> bool {
        self.movable_blocks().iter().flatten().any(|&m| m)
    }

    /// Index of the first `X_j` with a movable block, where `r + 1` means
    /// the tail.
    fn first_movable(&self) -> Option<usize> {
        self.movable_blocks().iter().position(|b| b.iter().any(|&m| m))
    }

    /// Start index of `X_j` in the reassembled word.
    fn segment_start(&self, j: usize) -> usize {
        let mut pos = self.prefix.len() + self.lead_zeros;
        for (x, k) in &self.segments[..j] {
            pos += x.len() + k;
        }
        pos
    }

    fn segment(&self, j: usize) -> DyckPath {
        self.segments.get(j).map_or(self.tail, |s| s.0)
    }
}

fn check_zero(u: DyckPath, i: usize) -> Result<()> {
    if i >= u.len() || u.step(i) != 0 {
        return Err(Error::LetterNotZero { pos: i });
    }
    Ok(())
}

fn zero_run(u: DyckPath, from: usize) -> usize {
    (from..u.len()).take_while(|&k| u.step(k) == 0).count()
}

pub fn frozen_decompose(u: DyckPath, i: usize) -> Result<FrozenDecomposition> {
    check_zero(u, i)?;
    let word = u.word();
    let h = u.heights();
    let len = u.len();
    let lead_zeros = zero_run(u, i);
    let mut pos = i + lead_zeros;
    let mut segments = vec![];
    let tail = loop {
        if pos == len {
            break DyckPath::EMPTY;
        }
        let base = h[pos];
        let mut end = pos + 1;
        while !(h[end] == base && (end == len || u.step(end) == 0)) {
            end += 1;
        }
        let x = DyckPath::from_word_unchecked(word.slice(pos, end));
        if end == len {
            break x;
        }
        let k = zero_run(u, end);
        segments.push((x, k));
        pos = end + k;
    };
    Ok(FrozenDecomposition { prefix: word.slice(0, i), lead_zeros, segments, tail })
}

/// `Rise_i(u)`: slides the first block of the first `X_j` holding a
/// movable block over the whole zero run before it.
pub fn rise(u: DyckPath, i: usize) -> Result<Option<DyckPath>> {
    let d = frozen_decompose(u, i)?;
    let Some(j) = d.first_movable() else { return Ok(None) };
    let amount = if j == 0 { d.lead_zeros } else { d.segments[j - 1].1 };
    let first = d.segment(j).blocks()[0];
    let span = Span::new(d.segment_start(j), first.len());
    Ok(Some(dexter::slide(u, span, amount)?))
}

/// Least element above `u` sharing its first `i` letters and with a 1 at
/// index `i`, if any.
pub fn min_r(u: DyckPath, i: usize) -> Result<Option<DyckPath>> {
    check_zero(u, i)?;
    let mut x = u;
    // Each rise moves the first movable segment one step to the left.
    for _ in 0..=u.len() {
        match rise(x, i)? {
            None => return Ok(None),
            Some(y) if y.step(i) == 1 => return Ok(Some(y)),
            Some(y) => x = y,
        }
    }
    unreachable!("rise did not reach index {i} from {u}")
}

fn check_up_step(w: DyckPath, s: usize) -> Result<Vec<i32>> {
    if s >= w.len() || w.step(s) != 1 {
        return Err(Error::StepNotOne { pos: s });
    }
    let h = w.heights();
    if h[s] == 0 {
        return Err(Error::StartsAtGroundLevel { pos: s });
    }
    Ok(h)
}

/// The subpaths `x_1, ..., x_N` from the start of step `s` to the first
/// point at the same height followed by a 0.
fn subpaths_after(w: DyckPath, s: usize, h: &[i32]) -> Vec<Span> {
    let mut out = vec![];
    let mut pos = s;
    while w.step(pos) == 1 {
        let x = w.subpath_at(pos).expect("up step starts a subpath");
        out.push(x);
        pos = x.end();
        debug_assert_eq!(h[pos], h[s]);
    }
    out
}

/// `Desc_s(w)`: slides the last subpath `x_N` after step `s` down past the
/// zeros that follow it.
pub fn desc(w: DyckPath, s: usize) -> Result<DyckPath> {
    let h = check_up_step(w, s)?;
    let xs = subpaths_after(w, s, &h);
    let x = *xs.last().expect("at least one subpath");
    let m = zero_run(w, x.end());
    let word = w.word();
    let out = word
        .slice(0, x.start)
        .concat(Word::repeat(0, m))
        .concat(word.slice(x.start, x.end()))
        .concat(word.slice(x.end() + m, w.len()));
    Ok(DyckPath::from_word_unchecked(out))
}

/// `s_s(w)`: `Desc_s` iterated `N` times, with `N` read off `w`.
pub fn s_op(w: DyckPath, s: usize) -> Result<DyckPath> {
    let h = check_up_step(w, s)?;
    let n = subpaths_after(w, s, &h).len();
    let mut x = w;
    for _ in 0..n {
        x = desc(x, s)?;
    }
    debug_assert_eq!(x.step(s), 0);
    Ok(x)
}

fn common_prefix(v: DyckPath, w: DyckPath) -> usize {
    (0..v.len()).take_while(|&k| v.step(k) == w.step(k)).count()
}

/// Meet together with the successive pairs visited.
pub fn meet_with_trace(v: DyckPath, w: DyckPath) -> Result<(DyckPath, Vec<(DyckPath, DyckPath)>)> {
    if v.size() != w.size() {
        return Err(Error::SizeMismatch(v.size(), w.size()));
    }
    let (mut a, mut b) = (v, w);
    let mut trace = vec![(a, b)];
    while a != b {
        let i = common_prefix(a, b);
        if a.step(i) == 1 {
            std::mem::swap(&mut a, &mut b);
        }
        b = s_op(b, i)?;
        let j = common_prefix(a, b);
        assert!(j > i, "common prefix did not grow");
        trace.push((a, b));
    }
    Ok((a, trace))
}

pub fn meet(v: DyckPath, w: DyckPath) -> Result<DyckPath> {
    Ok(meet_with_trace(v, w)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;
    use rand::{Rng, SeedableRng};

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn zero_positions(u: DyckPath) -> Vec<usize> {
        (0..u.len()).filter(|&i| u.step(i) == 0).collect()
    }

    #[test]
    fn decomposition_example() {
        let d = frozen_decompose(p("1010"), 1).unwrap();
        assert_eq!(d.prefix, Word::from_letters(&[1]).unwrap());
        assert_eq!(d.lead_zeros, 1);
        assert!(d.segments.is_empty());
        assert_eq!(d.tail, p("10"));
        assert!(d.has_movable_block());
        assert_eq!(rise(p("1010"), 1).unwrap(), Some(p("1100")));
        assert_eq!(frozen_decompose(p("1010"), 0), Err(Error::LetterNotZero { pos: 0 }));
        // 1 1 0 [10] 0: one segment with a single frozen block.
        let d = frozen_decompose(p("110100"), 2).unwrap();
        assert_eq!(d.segments, vec![(p("10"), 1)]);
        assert!(!d.has_movable_block());
        assert_eq!(min_r(p("110100"), 2).unwrap(), None);
    }

    #[test]
    fn decomposition_roundtrip() {
        for n in 1..=7 {
            for u in DyckPath::all(n) {
                for i in zero_positions(u) {
                    let d = frozen_decompose(u, i).unwrap();
                    assert_eq!(d.reassemble(), u.word());
                    assert!(d.lead_zeros > 0);
                    assert!(d.segments.iter().all(|(x, k)| !x.is_empty() && *k > 0));
                }
            }
        }
    }

    fn shares_prefix(a: DyckPath, b: DyckPath, i: usize) -> bool {
        (0..i).all(|k| a.step(k) == b.step(k))
    }

    #[test]
    fn rise_and_min_r_match_brute_force() {
        for n in 1..=6 {
            let d = dexter::hasse(n).unwrap();
            for (ui, &u) in d.elements().iter().enumerate() {
                let up = d.up_set(ui);
                for i in zero_positions(u) {
                    let rset: Vec<usize> = up
                        .iter()
                        .copied()
                        .filter(|&v| shares_prefix(d.elements()[v], u, i) && d.elements()[v].step(i) == 1)
                        .collect();
                    let r = rise(u, i).unwrap();
                    if let Some(x) = r {
                        assert!(shares_prefix(x, u, i));
                        assert!(dexter::path_leq(u, x));
                        for &v in &rset {
                            assert!(dexter::path_leq(x, d.elements()[v]), "{u} {i}");
                        }
                    }
                    let minimal: Vec<DyckPath> = rset
                        .iter()
                        .copied()
                        .filter(|&v| rset.iter().all(|&x| x == v || !d.leq(x, v)))
                        .map(|v| d.elements()[v])
                        .collect();
                    assert!(minimal.len() <= 1);
                    assert_eq!(min_r(u, i).unwrap(), minimal.first().copied(), "{u} {i}");
                    if r.is_none() {
                        assert!(rset.is_empty());
                    }
                }
            }
        }
    }

    fn up_steps_off_ground(w: DyckPath) -> Vec<usize> {
        let h = w.heights();
        (0..w.len()).filter(|&s| w.step(s) == 1 && h[s] > 0).collect()
    }

    #[test]
    fn desc_is_a_lower_cover() {
        assert_eq!(desc(p("1100"), 1).unwrap(), p("1010"));
        assert_eq!(desc(p("1100"), 0), Err(Error::StartsAtGroundLevel { pos: 0 }));
        assert_eq!(desc(p("1100"), 2), Err(Error::StepNotOne { pos: 2 }));
        for n in 1..=7 {
            for w in DyckPath::all(n) {
                for s in up_steps_off_ground(w) {
                    let x = desc(w, s).unwrap();
                    assert!(dexter::covers(x).iter().any(|e| e.0 == w), "{x} -> {w}");
                    let y = s_op(w, s).unwrap();
                    assert!(shares_prefix(y, w, s));
                    assert_eq!(y.step(s), 0);
                }
            }
        }
    }

    #[test]
    fn s_op_is_max_of_s_set() {
        for n in 1..=6 {
            let d = dexter::hasse(n).unwrap();
            for (wi, &w) in d.elements().iter().enumerate() {
                let down = d.down_set(wi);
                for s in up_steps_off_ground(w) {
                    let set: Vec<usize> = down
                        .iter()
                        .copied()
                        .filter(|&u| shares_prefix(d.elements()[u], w, s) && d.elements()[u].step(s) == 0)
                        .collect();
                    let dw = desc(w, s).unwrap();
                    for &u in &set {
                        assert!(dexter::path_leq(d.elements()[u], dw));
                    }
                    let maximal: Vec<DyckPath> = set
                        .iter()
                        .copied()
                        .filter(|&u| set.iter().all(|&x| x == u || !d.leq(u, x)))
                        .map(|u| d.elements()[u])
                        .collect();
                    assert_eq!(maximal, vec![s_op(w, s).unwrap()], "{w} {s}");
                }
            }
        }
    }

    /// Greatest element of the common down-set, by brute force.
    fn glb(d: &Poset<DyckPath>, i: usize, j: usize) -> Option<usize> {
        let common: Vec<usize> = d.down_set(i).into_iter().filter(|&k| d.leq(k, j)).collect();
        common.iter().copied().find(|&m| common.iter().all(|&k| d.leq(k, m)))
    }

    #[test]
    fn meet_matches_brute_force() {
        for n in 0..=6 {
            let d = dexter::hasse(n).unwrap();
            for i in 0..d.len() {
                for j in 0..d.len() {
                    let m = meet(d.elements()[i], d.elements()[j]).unwrap();
                    assert_eq!(Some(d.index_of(&m).unwrap()), glb(&d, i, j));
                }
            }
        }
    }

    #[test]
    fn meet_laws() {
        let v = p("110100");
        assert_eq!(meet(v, v).unwrap(), v);
        assert_eq!(meet(DyckPath::w_min(3), v).unwrap(), DyckPath::w_min(3));
        assert_eq!(meet(v, p("10")), Err(Error::SizeMismatch(3, 1)));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in [7, 8] {
            let all = DyckPath::all(n);
            for _ in 0..300 {
                let [a, b, c] = [0; 3].map(|_| all[rng.gen_range(0..all.len())]);
                let ab_c = meet(meet(a, b).unwrap(), c).unwrap();
                let a_bc = meet(a, meet(b, c).unwrap()).unwrap();
                assert_eq!(ab_c, a_bc);
                assert_eq!(meet(a, b).unwrap(), meet(b, a).unwrap());
            }
        }
    }

    #[test]
    fn lifting_into_common_prefix() {
        for n in 1..=5 {
            let d = dexter::hasse(n).unwrap();
            for vi in 0..d.len() {
                for wi in 0..d.len() {
                    let (v, w) = (d.elements()[vi], d.elements()[wi]);
                    let len = common_prefix(v, w);
                    for ui in d.down_set(vi).into_iter().filter(|&u| d.leq(u, wi)) {
                        let mut u = d.elements()[ui];
                        for i in 0..len {
                            if u.step(i) != v.step(i) {
                                u = min_r(u, i).unwrap().expect("R_i contains v and w");
                            }
                        }
                        assert!(shares_prefix(u, v, len));
                        assert!(dexter::path_leq(u, v) && dexter::path_leq(u, w));
                    }
                }
            }
        }
    }
}
