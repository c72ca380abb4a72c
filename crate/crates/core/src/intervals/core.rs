//! Core intervals: the chains `E(w)`, the map `theta` and the bijection
//! with pairs (interval of `D_{n-2}`, position in a chain).

use crate::dexter;
use crate::dyck::{DyckPath, Span};
use crate::error::{Error, Result};
use crate::monoid::is_shape_b;
use crate::word::Word;

use super::Interval;

/// Shape `(v, 1, 0)` with at least two blocks.
pub fn is_shape_a(w: DyckPath) -> bool {
    w.size() >= 2 && w.ends_with_peak()
}

/// Shape A or shape B.
pub fn in_e(w: DyckPath) -> bool {
    is_shape_a(w) || is_shape_b(w)
}

/// The chain `e_0(w), ..., e_k(w)` in `D_{n+2}`, where `k` is one more than
/// the number of blocks of `w`. Here
/// `e_{i-1}(w) = (1, w_1, ..., w_{i-1}, 0, w_i, ..., w_{k-1}, 1, 0)` and
/// `e_k(w) = (1, w, 1, 0, 0)`.
pub fn chain_e(w: DyckPath) -> Vec<DyckPath> {
    let blocks = w.blocks();
    let k = blocks.len() + 1;
    let one = Word::repeat(1, 1);
    let zero = Word::repeat(0, 1);
    let mut out = Vec::with_capacity(k + 1);
    for i in 1..=k {
        let mut x = one;
        for b in &blocks[..i - 1] {
            x = x.concat(b.word());
        }
        x = x.concat(zero);
        for b in &blocks[i - 1..] {
            x = x.concat(b.word());
        }
        x = x.concat(Word::from_letters(&[1, 0]).unwrap());
        out.push(DyckPath::from_word_unchecked(x));
    }
    out.push(dexter::j_top(w));
    out
}

/// Shape A: slide the second block up one level. Shape B
/// `(1, w', 1, 0, 0)`: return `(1, 0, w', 1, 0)`.
pub fn theta(u: DyckPath) -> Result<DyckPath> {
    if is_shape_a(u) {
        let first = u.blocks()[0];
        let x = u.subpath_at(first.len()).expect("second block");
        return dexter::slide(u, Span::new(x.start, x.len), 1);
    }
    if is_shape_b(u) {
        let inner = u.word().slice(1, u.len() - 3);
        let w = Word::from_letters(&[1, 0])
            .unwrap()
            .concat(inner)
            .concat(Word::from_letters(&[1, 0]).unwrap());
        return Ok(DyckPath::from_word_unchecked(w));
    }
    Err(Error::NotInE(u.to_string()))
}

/// For `u` in `E_n`, the path `w` with `u` in `E(w)` and the index of `u`.
pub fn chain_position(u: DyckPath) -> Result<(DyckPath, usize)> {
    if !in_e(u) {
        return Err(Error::NotInE(u.to_string()));
    }
    let mut x = u;
    let mut steps = 0;
    while !is_shape_b(x) {
        x = theta(x)?;
        steps += 1;
    }
    let w = DyckPath::from_word_unchecked(x.word().slice(1, x.len() - 3));
    let k = w.num_blocks() + 1;
    Ok((w, k - steps))
}

/// `[u, (1, w', 1, 0, 0)]` goes to `([w, w'], j)` where `u = e_j(w)`.
///
/// The diagonal interval at `(1, 0, 1, 0)` is core by convention but has
/// no image; it yields [`Error::NotCore`] like any non-core interval.
pub fn core_bijection(i: Interval) -> Result<(Interval, usize)> {
    if !(i.bottom.ends_with_peak() && is_shape_b(i.top)) {
        return Err(Error::NotCore);
    }
    let (w, j) = chain_position(i.bottom)?;
    let w2 = DyckPath::from_word_unchecked(i.top.word().slice(1, i.top.len() - 3));
    Ok((Interval::new_unchecked(w, w2), j))
}

/// Inverse of [`core_bijection`].
pub fn core_inverse(i: Interval, j: usize) -> Result<Interval> {
    let chain = chain_e(i.bottom);
    if j + 1 >= chain.len() {
        return Err(Error::ChoiceOutOfRange { i: j, max: chain.len() - 2 });
    }
    Ok(Interval::new_unchecked(chain[j], dexter::j_top(i.top)))
}
