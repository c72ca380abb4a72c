use std::fmt;

use crate::error::{Error, Result};

/// A packed word over {0,1} with at most 64 letters.
///
/// Letter `i` lives in bit `63 - i`, so the derived ordering on `(bits, len)`
/// is the lexicographic order on words, a proper prefix sorting first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    bits: u64,
    len: u8,
}

impl Word {
    pub const MAX_LEN: usize = 64;
    pub const EMPTY: Word = Word { bits: 0, len: 0 };

    pub fn from_letters(letters: &[u8]) -> Result<Word> {
        if letters.len() > Self::MAX_LEN {
            return Err(Error::PathTooLong(letters.len()));
        }
        let mut w = Word::EMPTY;
        for &b in letters {
            if b > 1 {
                return Err(Error::InvalidArgument(format!("letter {b} is not 0 or 1")));
            }
            w.push(b);
        }
        Ok(w)
    }

    /// `count` copies of `letter`.
    pub fn repeat(letter: u8, count: usize) -> Word {
        assert!(count <= Self::MAX_LEN);
        let mut w = Word::EMPTY;
        for _ in 0..count {
            w.push(letter);
        }
        w
    }

    #[inline]
    pub fn len(self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        ((self.bits >> (63 - i)) & 1) as u8
    }

    /// Appends a letter. Panics past 64 letters.
    #[inline]
    pub fn push(&mut self, b: u8) {
        assert!(self.len() < Self::MAX_LEN, "word exceeds 64 letters");
        if b == 1 {
            self.bits |= 1u64 << (63 - self.len());
        }
        self.len += 1;
    }

    pub fn try_concat(self, other: Word) -> Result<Word> {
        let total = self.len() + other.len();
        if total > Self::MAX_LEN {
            return Err(Error::PathTooLong(total));
        }
        let shifted = if self.len() == 64 { 0 } else { other.bits >> self.len() };
        Ok(Word { bits: self.bits | shifted, len: total as u8 })
    }

    /// Concatenation. Panics if the result exceeds 64 letters.
    pub fn concat(self, other: Word) -> Word {
        self.try_concat(other).expect("word exceeds 64 letters")
    }

    /// Letters `start..end`.
    pub fn slice(self, start: usize, end: usize) -> Word {
        assert!(start <= end && end <= self.len());
        let n = end - start;
        if n == 0 {
            return Word::EMPTY;
        }
        let shifted = self.bits << start;
        let mask = if n == 64 { u64::MAX } else { !(u64::MAX >> n) };
        Word { bits: shifted & mask, len: n as u8 }
    }

    pub fn letters(self) -> impl Iterator<Item = u8> {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.letters().collect()
    }

    pub fn count_ones(self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Heights at the `len + 1` lattice points, starting from 0.
    pub fn heights(self) -> Vec<i32> {
        let mut h = Vec::with_capacity(self.len() + 1);
        let mut cur = 0i32;
        h.push(cur);
        for b in self.letters() {
            cur += if b == 1 { 1 } else { -1 };
            h.push(cur);
        }
        h
    }

    /// Number of trailing 0 letters.
    pub fn trailing_zeros(self) -> usize {
        (0..self.len()).rev().take_while(|&i| self.get(i) == 0).count()
    }

    /// Tuple notation `(1,0,1,0)`.
    pub fn tuple(self) -> String {
        let inner: Vec<String> = self.letters().map(|b| b.to_string()).collect();
        format!("({})", inner.join(","))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.letters() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slice_and_concat() {
        let w = Word::from_letters(&[1, 1, 0, 1, 0, 0]).unwrap();
        assert_eq!(w.slice(1, 4).to_vec(), vec![1, 0, 1]);
        assert_eq!(w.slice(0, 0), Word::EMPTY);
        assert_eq!(w.slice(2, 6).concat(w.slice(0, 2)).to_vec(), vec![0, 1, 0, 0, 1, 1]);
        assert_eq!(w.trailing_zeros(), 2);
    }

    #[test]
    fn ordering_is_lexicographic() {
        let a = Word::from_letters(&[1, 0]).unwrap();
        let b = Word::from_letters(&[1, 0, 1, 0]).unwrap();
        let c = Word::from_letters(&[1, 1, 0, 0]).unwrap();
        assert!(a < b && b < c);
    }

    #[test]
    fn full_length_words() {
        let w = Word::repeat(1, 64);
        assert_eq!(w.len(), 64);
        assert_eq!(w.slice(10, 64).len(), 54);
        assert!(w.try_concat(Word::repeat(0, 1)).is_err());
    }
}
