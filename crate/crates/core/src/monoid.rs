//! The monoids on pseudo-Dyck paths, Dyck paths and intervals.

use crate::dexter;
use crate::dyck::{DyckPath, PseudoDyckPath};
use crate::error::{Error, Result};
use crate::intervals::Interval;
use crate::word::Word;

/// `u * v = (u', v', 0^k, v'')` where `u = (u', 0^k)` and `v'` is the
/// longest prefix of `v` never going below height 0.
pub fn star(u: PseudoDyckPath, v: PseudoDyckPath) -> PseudoDyckPath {
    let uw = u.word();
    let vw = v.word();
    let k = uw.trailing_zeros();
    let u1 = uw.slice(0, uw.len() - k);
    let mut h = 0i32;
    let mut cut = vw.len();
    for (i, b) in vw.letters().enumerate() {
        h += if b == 1 { 1 } else { -1 };
        if h < 0 {
            cut = i;
            break;
        }
    }
    let w = u1
        .concat(vw.slice(0, cut))
        .concat(Word::repeat(0, k))
        .concat(vw.slice(cut, vw.len()));
    PseudoDyckPath::from_word(w).expect("star of pseudo-Dyck paths")
}

/// `u # v = (1, bar(u) * bar(v), 0)`. The unit is `(1,0)`.
pub fn sharp(u: DyckPath, v: DyckPath) -> Result<DyckPath> {
    let total = u.size() + v.size();
    if total > crate::dyck::MAX_SIZE + 1 {
        return Err(Error::PathTooLong(2 * total - 2));
    }
    Ok(star(u.bar()?, v.bar()?).unbar())
}

/// `sharp` over a list; the empty product is `(1,0)`.
pub fn sharp_all(parts: &[DyckPath]) -> Result<DyckPath> {
    let mut acc = DyckPath::w_min(1);
    for &p in parts {
        acc = sharp(acc, p)?;
    }
    Ok(acc)
}

/// Whether `w` is `(1,0,1,0)` or of shape `(1,w',1,0,0)`.
pub fn is_m1_generator(w: DyckPath) -> bool {
    w.word() == Word::from_letters(&[1, 0, 1, 0]).unwrap() || is_shape_b(w)
}

/// Shape `(1, w', 1, 0, 0)`.
pub fn is_shape_b(w: DyckPath) -> bool {
    w.size() >= 2
        && w.is_block_indecomposable()
        && w.step(w.len() - 3) == 1
        && w.step(w.len() - 2) == 0
}

/// Grade of an element of the Dyck path monoid: size minus one.
pub fn grade(w: DyckPath) -> usize {
    w.size().saturating_sub(1)
}

/// Unique factorisation of `w` into generators of the Dyck path monoid.
pub fn m1_factor(w: DyckPath) -> Result<Vec<DyckPath>> {
    if w.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let bridge = DyckPath::w_min(2);
    let mut out = vec![];
    for (b, block) in w.blocks().into_iter().enumerate() {
        if b > 0 {
            out.push(bridge);
        }
        for part in block.level_decomposition()? {
            out.push(dexter::j_top(part));
        }
    }
    Ok(out)
}

/// Product of two intervals: `[a, b] # [c, d] = [a # c, b # d]`.
pub fn m2_product(i: Interval, j: Interval) -> Result<Interval> {
    Ok(Interval::new_unchecked(sharp(i.bottom, j.bottom)?, sharp(i.top, j.top)?))
}

pub fn is_m2_generator(i: Interval) -> bool {
    let d2 = DyckPath::w_min(2);
    (i.bottom == d2 && i.top == d2) || is_shape_b(i.top)
}

/// Unique factorisation of an interval into generators of the interval monoid.
///
/// The top is factored first; the generators of the bottom are then
/// grouped consecutively so that the grades match those of the top.
pub fn m2_factor(i: Interval) -> Result<Vec<Interval>> {
    let tops = m1_factor(i.top)?;
    let bottoms = m1_factor(i.bottom)?;
    let mut out = Vec::with_capacity(tops.len());
    let mut it = bottoms.into_iter().peekable();
    for t in tops {
        let want = grade(t);
        let mut got = 0;
        let mut group = vec![];
        while got < want {
            let g = it.next().ok_or(Error::NotAnInterval {
                bottom: i.bottom.to_string(),
                top: i.top.to_string(),
            })?;
            got += grade(g);
            group.push(g);
        }
        if got != want {
            return Err(Error::NotAnInterval { bottom: i.bottom.to_string(), top: i.top.to_string() });
        }
        out.push(Interval::new_unchecked(sharp_all(&group)?, t));
    }
    Ok(out)
}

/// Number of generators of the interval monoid made of paths of size `n`.
pub fn m2_generator_count(n: usize) -> u64 {
    if n < 2 {
        return 0;
    }
    let mut count = if n == 2 { 1 } else { 0 };
    for w in DyckPath::all(n - 2) {
        count += dexter::down_set(dexter::j_top(w)).len() as u64;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn q(s: &str) -> PseudoDyckPath {
        s.parse().unwrap()
    }

    /// Every pseudo-Dyck path of size `n`.
    fn pseudo(n: usize) -> Vec<PseudoDyckPath> {
        DyckPath::all(n + 1).into_iter().map(|w| w.bar().unwrap()).collect()
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(q("10"), q("01")), q("1001"));
        assert_eq!(star(q("0110"), q("1010")), q("01110100"));
        for v in pseudo(3) {
            assert_eq!(star(PseudoDyckPath::EMPTY, v), v);
            assert_eq!(star(v, PseudoDyckPath::EMPTY), v);
        }
    }

    #[test]
    fn star_associative_small() {
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=3 {
                    for x in pseudo(a) {
                        for y in pseudo(b) {
                            for z in pseudo(c) {
                                assert_eq!(star(star(x, y), z), star(x, star(y, z)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sharp_examples() {
        let unit = p("10");
        for n in 1..=4 {
            for w in DyckPath::all(n) {
                assert_eq!(sharp(unit, w).unwrap(), w);
                assert_eq!(sharp(w, unit).unwrap(), w);
            }
        }
        assert_eq!(sharp(p("1100"), p("1100")).unwrap(), p("111000"));
        assert_eq!(sharp(DyckPath::EMPTY, unit), Err(Error::EmptyOperand));
    }

    #[test]
    fn bar_of_concatenation() {
        let bridge = q("01");
        for a in 1..=4 {
            for b in 1..=4 {
                for u in DyckPath::all(a) {
                    for v in DyckPath::all(b) {
                        let lhs = star(star(u.bar().unwrap(), bridge), v.bar().unwrap());
                        assert_eq!(lhs, u.concat(v).bar().unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn m1_examples() {
        assert_eq!(m1_factor(p("10")).unwrap(), vec![]);
        assert_eq!(m1_factor(p("1010")).unwrap(), vec![p("1010")]);
        assert_eq!(m1_factor(DyckPath::EMPTY), Err(Error::EmptyOperand));
    }

    #[test]
    fn m1_roundtrip() {
        for n in 1..=9 {
            for w in DyckPath::all(n) {
                let f = m1_factor(w).unwrap();
                assert!(f.iter().all(|&g| is_m1_generator(g)));
                assert_eq!(sharp_all(&f).unwrap(), w);
                assert_eq!(f.iter().map(|&g| grade(g)).sum::<usize>(), n - 1);
            }
        }
    }

    #[test]
    fn cover_compatibility() {
        for a in 1..=4 {
            for b in 1..=4 {
                for u in DyckPath::all(a) {
                    for w in DyckPath::all(b) {
                        for (w2, _) in dexter::covers(w) {
                            let left = sharp(u, w2).unwrap();
                            let right = sharp(w2, u).unwrap();
                            assert!(dexter::covers(sharp(u, w).unwrap()).iter().any(|e| e.0 == left));
                            assert!(dexter::covers(sharp(w, u).unwrap()).iter().any(|e| e.0 == right));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn covers_do_not_split_factors() {
        for n in 1..=7 {
            for w in DyckPath::all(n) {
                let k = m1_factor(w).unwrap().len();
                for (v, _) in dexter::covers(w) {
                    assert!(m1_factor(v).unwrap().len() <= k, "{w} -> {v}");
                }
            }
        }
    }

    #[test]
    fn generator_counts() {
        let want = [3, 3, 11, 51, 267, 1507];
        for (k, &c) in want.iter().enumerate() {
            assert_eq!(m2_generator_count(k + 2), c);
        }
    }
}
