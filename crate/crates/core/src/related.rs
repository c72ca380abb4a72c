//! The Tamari and comb orders on Dyck paths, compared with the dexter order.

use std::collections::HashSet;
use std::hash::Hash;

use rayon::prelude::*;

use crate::dexter::{self, slide_unchecked, zeros_before};
use crate::dyck::{DyckPath, Span};
use crate::error::{Error, Result};
use crate::poset::{EdgeColor, Poset};
use crate::word::Word;

/// The three orders available on `D_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Dexter,
    Tamari,
    Comb,
}

impl std::str::FromStr for Order {
    type Err = Error;

    fn from_str(s: &str) -> Result<Order> {
        match s {
            "dexter" => Ok(Order::Dexter),
            "tamari" => Ok(Order::Tamari),
            "comb" => Ok(Order::Comb),
            other => Err(Error::InvalidArgument(format!("unknown order {other:?}"))),
        }
    }
}

impl std::fmt::Display for Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Order::Dexter => "dexter",
            Order::Tamari => "tamari",
            Order::Comb => "comb",
        })
    }
}

fn rotations(w: DyckPath, ground_only: bool) -> Vec<DyckPath> {
    let h = w.heights();
    let word = w.word();
    let mut out = vec![];
    for k in 0..w.len().saturating_sub(1) {
        if w.step(k) != 0 || w.step(k + 1) != 1 {
            continue;
        }
        if ground_only && h[k + 1] != 0 {
            continue;
        }
        let x = w.subpath_at(k + 1).expect("up step");
        let v = word
            .slice(0, k)
            .concat(word.slice(x.start, x.end()))
            .concat(Word::repeat(0, 1))
            .concat(word.slice(x.end(), w.len()));
        out.push(DyckPath::from_word_unchecked(v));
    }
    out.sort_unstable();
    out
}

/// Exchanges a 0 followed by 1 with the subpath after it.
pub fn tamari_covers(w: DyckPath) -> Vec<DyckPath> {
    rotations(w, false)
}

/// Tamari covers whose slid subpath starts at height 0.
pub fn comb_covers(w: DyckPath) -> Vec<DyckPath> {
    rotations(w, true)
}

/// Length of the subpath opened by each up step.
pub fn bracket_vector(w: DyckPath) -> Vec<usize> {
    let mut out = vec![];
    for k in 0..w.len() {
        if w.step(k) == 1 {
            out.push(w.subpath_at(k).unwrap().len);
        }
    }
    out
}

/// Tamari comparison through the componentwise order on bracket vectors.
pub fn tamari_leq(u: DyckPath, v: DyckPath) -> bool {
    u.size() == v.size()
        && bracket_vector(u).iter().zip(bracket_vector(v)).all(|(a, b)| *a <= b)
}

fn build(n: usize, cover: fn(DyckPath) -> Vec<DyckPath>) -> Poset<DyckPath> {
    let elements = DyckPath::all(n);
    let edges: Vec<(usize, usize, EdgeColor)> = elements
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, &w)| {
            let els = &elements;
            cover(w)
                .into_iter()
                .map(move |t| (i, els.binary_search(&t).unwrap(), EdgeColor::Uncolored))
        })
        .collect();
    Poset::from_covers(elements, edges)
}

pub fn tamari_hasse(n: usize) -> Result<Poset<DyckPath>> {
    check_cap(n)?;
    Ok(build(n, tamari_covers))
}

pub fn comb_hasse(n: usize) -> Result<Poset<DyckPath>> {
    check_cap(n)?;
    Ok(build(n, comb_covers))
}

fn check_cap(n: usize) -> Result<()> {
    if n > dexter::DEFAULT_HASSE_CAP {
        return Err(Error::SizeTooLarge { n, cap: dexter::DEFAULT_HASSE_CAP });
    }
    Ok(())
}

/// Builds the requested order on `D_n`.
pub fn hasse(n: usize, order: Order) -> Result<Poset<DyckPath>> {
    match order {
        Order::Dexter => dexter::hasse(n),
        Order::Tamari => tamari_hasse(n),
        Order::Comb => comb_hasse(n),
    }
}

/// Whether every relation of `p` holds in `q`.
pub fn order_contains<T: Clone + Eq + Hash>(p: &Poset<T>, q: &Poset<T>) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::ElementSetMismatch);
    }
    let map: Vec<usize> = p
        .elements()
        .iter()
        .map(|e| q.index_of(e).ok_or(Error::ElementSetMismatch))
        .collect::<Result<_>>()?;
    for i in 0..p.len() {
        for j in p.up_set(i) {
            if !q.leq(map[i], map[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The Tamari interval between `w` and the dexter slide `M(w, x, i)`,
/// sorted from bottom to top.
pub fn tamari_interval_chain(w: DyckPath, x: Span, i: usize) -> Result<Vec<DyckPath>> {
    let top = dexter::slide(w, x, i)?;
    let mut seen = HashSet::from([w]);
    let mut stack = vec![w];
    while let Some(u) = stack.pop() {
        for v in tamari_covers(u) {
            if tamari_leq(v, top) && seen.insert(v) {
                stack.push(v);
            }
        }
    }
    let mut out: Vec<DyckPath> = seen.into_iter().collect();
    out.sort_by_key(|u| (u.area(), *u));
    Ok(out)
}

/// `[w, M(w,x,1), ..., M(w,x,i)]`, sliding the subpath one zero at a time.
pub fn stepwise_slides(w: DyckPath, x: Span, i: usize) -> Result<Vec<DyckPath>> {
    dexter::slide(w, x, i)?;
    debug_assert!(i <= zeros_before(w, x));
    Ok((0..=i)
        .map(|k| if k == 0 { w } else { slide_unchecked(w, x, k) })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn cover_examples() {
        assert_eq!(tamari_covers(p("1010")), vec![p("1100")]);
        assert_eq!(comb_covers(p("1010")), vec![p("1100")]);
        assert!(tamari_covers(p("1100")).is_empty());
        assert_eq!(tamari_hasse(3).unwrap().num_covers(), 5);
        assert_eq!(comb_hasse(3).unwrap().num_covers(), 4);
    }

    #[test]
    fn dexter_maximal_path_has_tamari_moves_only() {
        let w = p("110100");
        assert!(comb_covers(w).is_empty());
        assert!(dexter::covers(w).is_empty());
        assert_eq!(tamari_covers(w), vec![p("111000")]);
    }

    #[test]
    fn bracket_order_matches_reachability() {
        for n in 0..=6 {
            let t = tamari_hasse(n).unwrap();
            for (i, &u) in t.elements().iter().enumerate() {
                for (j, &v) in t.elements().iter().enumerate() {
                    assert_eq!(t.leq(i, j), tamari_leq(u, v), "{u} {v}");
                }
            }
        }
    }

    #[test]
    fn sandwich() {
        for n in 0..=6 {
            let d = dexter::hasse(n).unwrap();
            let t = tamari_hasse(n).unwrap();
            let c = comb_hasse(n).unwrap();
            assert!(order_contains(&c, &d).unwrap());
            assert!(order_contains(&d, &t).unwrap());
        }
        let d3 = dexter::hasse(3).unwrap();
        assert!(!order_contains(&d3, &comb_hasse(3).unwrap()).unwrap());
        assert_eq!(
            order_contains(&d3, &dexter::hasse(2).unwrap()),
            Err(Error::ElementSetMismatch)
        );
    }

    #[test]
    fn figure_chain() {
        let w = p("111010001100");
        let chain = tamari_interval_chain(w, Span::new(8, 4), 2).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain, stepwise_slides(w, Span::new(8, 4), 2).unwrap());
    }
}
