//! Explicit finite posets given by their cover graph.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Colour of a cover edge. Dexter covers are red when the subpath slides
/// to its highest possible position and blue otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Red,
    Blue,
    Uncolored,
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeColor::Red => "red",
            EdgeColor::Blue => "blue",
            EdgeColor::Uncolored => "uncolored",
        })
    }
}

/// Largest poset for which the full reachability matrix is materialised.
/// Beyond this, comparisons fall back to a breadth-first search.
pub const DENSE_REACH_CAP: usize = 20_000;

/// Square bit matrix, one packed row per element.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> BitMatrix {
        let words = n.div_ceil(64);
        BitMatrix { n, words, data: vec![0; n * words] }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// `row[dst] |= row[src]`.
    pub fn or_row(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        let w = self.words;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * w);
            (&mut lo[dst * w..(dst + 1) * w], &hi[..w])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * w);
            (&mut hi[..w], &lo[src * w..(src + 1) * w])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x |= *y;
        }
    }

    pub fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|x| x.count_ones() as usize).sum()
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

/// Adjacency in compressed sparse row form.
#[derive(Clone, Debug, Default)]
struct Csr {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Csr {
    fn build(n: usize, pairs: &[(u32, u32)]) -> Csr {
        let mut offsets = vec![0u32; n + 1];
        for &(s, _) in pairs {
            offsets[s as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; pairs.len()];
        for &(s, t) in pairs {
            targets[fill[s as usize] as usize] = t;
            fill[s as usize] += 1;
        }
        Csr { offsets, targets }
    }

    #[inline]
    fn range(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i] as usize..self.offsets[i + 1] as usize
    }
}

/// A finite poset stored as its Hasse diagram.
///
/// Elements are indexed `0..len()`; cover edges point upwards. The
/// reachability matrix is built the first time a comparison is requested.
pub struct Poset<T> {
    elements: Vec<T>,
    index: HashMap<T, u32>,
    up: Csr,
    up_color: Vec<EdgeColor>,
    down: Csr,
    reach: OnceLock<Option<BitMatrix>>,
}

impl<T: Clone> Clone for Poset<T> {
    fn clone(&self) -> Self {
        Poset {
            elements: self.elements.clone(),
            index: self.index.clone(),
            up: self.up.clone(),
            up_color: self.up_color.clone(),
            down: self.down.clone(),
            reach: self.reach.clone(),
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for Poset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("len", &self.elements.len())
            .field("covers", &self.up.targets.len())
            .finish()
    }
}

impl<T: Clone + Eq + Hash> Poset<T> {
    /// Builds a poset from its elements and its cover edges `(lower, upper, colour)`.
    /// The edges must form an acyclic, transitively reduced graph.
    pub fn from_covers(elements: Vec<T>, edges: Vec<(usize, usize, EdgeColor)>) -> Poset<T> {
        let n = elements.len();
        assert!(n < u32::MAX as usize);
        let index: HashMap<T, u32> =
            elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        assert_eq!(index.len(), n, "duplicate elements");
        let mut edges = edges;
        edges.sort_by_key(|&(s, t, _)| (s, t));
        edges.dedup_by_key(|&mut (s, t, _)| (s, t));
        let up_pairs: Vec<(u32, u32)> = edges.iter().map(|&(s, t, _)| (s as u32, t as u32)).collect();
        let up = Csr::build(n, &up_pairs);
        let up_color = edges.iter().map(|&(_, _, c)| c).collect();
        let mut down_pairs: Vec<(u32, u32)> = up_pairs.iter().map(|&(s, t)| (t, s)).collect();
        down_pairs.sort_unstable();
        let down = Csr::build(n, &down_pairs);
        Poset { elements, index, up, up_color, down, reach: OnceLock::new() }
    }

    /// Builds a poset from a partial order relation, computing the covers.
    pub fn from_relation(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Poset<T> {
        let n = elements.len();
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if i == j || leq(&elements[i], &elements[j]) {
                    m.set(i, j);
                }
            }
        }
        Self::from_reach_matrix(elements, m)
    }

    /// Builds a poset from a reflexive, transitive, antisymmetric matrix.
    pub fn from_reach_matrix(elements: Vec<T>, m: BitMatrix) -> Poset<T> {
        let n = elements.len();
        let edges = covers_from_matrix(&m);
        let p = Poset::from_covers(elements, edges);
        debug_assert_eq!(m.size(), n);
        let _ = p.reach.set(Some(m));
        p
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).map(|&i| i as usize)
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index.contains_key(x)
    }

    /// Comparison of two elements given by value.
    pub fn leq_elems(&self, x: &T, y: &T) -> Result<bool>
    where
        T: fmt::Debug,
    {
        let i = self.index_of(x).ok_or_else(|| Error::ElementNotInPoset(format!("{x:?}")))?;
        let j = self.index_of(y).ok_or_else(|| Error::ElementNotInPoset(format!("{y:?}")))?;
        Ok(self.leq(i, j))
    }

    /// The subposet on `indices`, with covers recomputed from the order.
    pub fn induced(&self, indices: &[usize]) -> Poset<T> {
        let n = indices.len();
        let mut m = BitMatrix::new(n);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                if self.leq(i, j) {
                    m.set(a, b);
                }
            }
        }
        let elements = indices.iter().map(|&i| self.elements[i].clone()).collect();
        Poset::from_reach_matrix(elements, m)
    }

    /// The subposet on a convex set of indices (an interval, an upper or a
    /// lower set). Covers and their colours are inherited unchanged.
    pub fn induced_convex(&self, indices: &[usize]) -> Poset<T> {
        let local: HashMap<usize, usize> =
            indices.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let mut edges = Vec::new();
        for (a, &i) in indices.iter().enumerate() {
            for (j, c) in self.upper_covers(i) {
                if let Some(&b) = local.get(&j) {
                    edges.push((a, b, c));
                }
            }
        }
        let elements = indices.iter().map(|&i| self.elements[i].clone()).collect();
        Poset::from_covers(elements, edges)
    }

    /// The closed interval `[i, j]` as a subposet.
    pub fn interval_poset(&self, i: usize, j: usize) -> Poset<T> {
        self.induced_convex(&self.interval(i, j))
    }

    /// Relabels elements by their index.
    pub fn forget_labels(&self) -> Poset<usize> {
        self.map_labels(|i, _| i)
    }

    pub fn map_labels<U: Clone + Eq + Hash>(&self, f: impl Fn(usize, &T) -> U) -> Poset<U> {
        let elements = self.elements.iter().enumerate().map(|(i, e)| f(i, e)).collect();
        Poset {
            elements,
            index: HashMap::new(),
            up: self.up.clone(),
            up_color: self.up_color.clone(),
            down: self.down.clone(),
            reach: self.reach.clone(),
        }
        .reindex()
    }

    fn reindex(mut self) -> Self {
        self.index = self.elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        assert_eq!(self.index.len(), self.elements.len(), "duplicate labels");
        self
    }
}

impl<T> Poset<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn num_covers(&self) -> usize {
        self.up.targets.len()
    }

    /// Upper covers of `i` with their colours.
    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = (usize, EdgeColor)> + '_ {
        self.up.range(i).map(move |k| (self.up.targets[k] as usize, self.up_color[k]))
    }

    pub fn lower_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.down.range(i).map(move |k| self.down.targets[k] as usize)
    }

    pub fn up_degree(&self, i: usize) -> usize {
        self.up.range(i).len()
    }

    pub fn down_degree(&self, i: usize) -> usize {
        self.down.range(i).len()
    }

    /// All cover edges `(lower, upper, colour)` in index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeColor)> + '_ {
        (0..self.len()).flat_map(move |i| self.upper_covers(i).map(move |(j, c)| (i, j, c)))
    }

    /// Colour of the cover `i -> j`, if it is one.
    pub fn cover_color(&self, i: usize, j: usize) -> Option<EdgeColor> {
        self.upper_covers(i).find(|&(t, _)| t == j).map(|(_, c)| c)
    }

    /// Elements in an order compatible with the poset (Kahn's algorithm).
    /// Returns `None` when the cover graph has a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut indeg: Vec<usize> = (0..n).map(|i| self.down_degree(i)).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for (j, _) in self.upper_covers(i) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    fn build_reach(&self) -> Option<BitMatrix> {
        let n = self.len();
        if n > DENSE_REACH_CAP {
            return None;
        }
        let order = self.topological_order().expect("cover graph must be acyclic");
        let mut m = BitMatrix::new(n);
        for &i in order.iter().rev() {
            m.set(i, i);
            for (j, _) in self.upper_covers(i) {
                m.or_row(i, j);
            }
        }
        Some(m)
    }

    /// The materialised reachability matrix, when the poset is small enough.
    pub fn reach_matrix(&self) -> Option<&BitMatrix> {
        self.reach.get_or_init(|| self.build_reach()).as_ref()
    }

    /// `i <= j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        match self.reach_matrix() {
            Some(m) => m.get(i, j),
            None => self.bfs_reaches(i, j),
        }
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    fn bfs_reaches(&self, i: usize, j: usize) -> bool {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![i];
        seen[i] = true;
        while let Some(u) = stack.pop() {
            if u == j {
                return true;
            }
            for (v, _) in self.upper_covers(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        false
    }

    fn closure(&self, start: usize, upward: bool) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut out = vec![];
        while let Some(u) = stack.pop() {
            out.push(u);
            let next: Vec<usize> = if upward {
                self.upper_covers(u).map(|(v, _)| v).collect()
            } else {
                self.lower_covers(u).collect()
            };
            for v in next {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Indices of `{ j : i <= j }`, sorted.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        self.closure(i, true)
    }

    /// Indices of `{ j : j <= i }`, sorted.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        self.closure(i, false)
    }

    /// Indices of `[i, j]`, sorted. Empty when `i` is not below `j`.
    pub fn interval(&self, i: usize, j: usize) -> Vec<usize> {
        if !self.leq(i, j) {
            return vec![];
        }
        self.up_set(i).into_iter().filter(|&k| self.leq(k, j)).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down_degree(i) == 0).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up_degree(i) == 0).collect()
    }

    /// No cover edge `i -> j` is implied by a longer path.
    pub fn is_transitively_reduced(&self) -> bool {
        (0..self.len()).all(|i| {
            let covers: Vec<usize> = self.upper_covers(i).map(|(j, _)| j).collect();
            covers.iter().all(|&j| covers.iter().all(|&k| k == j || !self.leq(k, j)))
        })
    }

    /// Number of pairs `i <= j`.
    pub fn num_intervals(&self) -> usize {
        match self.reach_matrix() {
            Some(m) => (0..self.len()).map(|i| m.row_count(i)).sum(),
            None => (0..self.len()).map(|i| self.up_set(i).len()).sum(),
        }
    }
}

fn covers_from_matrix(m: &BitMatrix) -> Vec<(usize, usize, EdgeColor)> {
    let n = m.size();
    // Strict down-sets as packed rows.
    let mut below = BitMatrix::new(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && m.get(i, j) {
                below.set(j, i);
            }
        }
    }
    let mut edges = vec![];
    for i in 0..n {
        for j in 0..n {
            if i == j || !m.get(i, j) {
                continue;
            }
            // i < j is a cover when nothing lies strictly between.
            let strictly_between = (0..m.words).any(|w| {
                let mut up = m.row(i)[w];
                if w == i / 64 {
                    up &= !(1u64 << (i % 64));
                }
                up & below.row(j)[w] != 0
            });
            if !strictly_between {
                edges.push((i, j, EdgeColor::Uncolored));
            }
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset<usize> {
        Poset::from_covers((0..n).collect(), (1..n).map(|i| (i - 1, i, EdgeColor::Uncolored)).collect())
    }

    #[test]
    fn chain_reachability() {
        let c = chain(5);
        assert!(c.leq(0, 4));
        assert!(!c.leq(4, 0));
        assert!(c.is_transitively_reduced());
        assert_eq!(c.num_intervals(), 15);
        assert_eq!(c.interval(1, 3), vec![1, 2, 3]);
    }

    #[test]
    fn relation_to_covers() {
        // Divisibility on 1..=12.
        let p = Poset::from_relation((1..=12u32).collect(), |a, b| b % a == 0);
        assert_eq!(p.minimal_elements(), vec![0]);
        assert!(p.cover_color(0, 1).is_some()); // 1 -> 2
        assert!(p.cover_color(0, 3).is_none()); // 1 -> 4 is not a cover
        assert!(p.is_transitively_reduced());
        let sub = p.induced(&[0, 3, 11]);
        assert_eq!(sub.num_covers(), 2);
    }

    #[test]
    fn transitive_edge_detected() {
        let p = Poset::from_covers(
            vec![0, 1, 2],
            vec![(0, 1, EdgeColor::Red), (1, 2, EdgeColor::Red), (0, 2, EdgeColor::Blue)],
        );
        assert!(!p.is_transitively_reduced());
    }

    #[test]
    fn cycle_detected() {
        let p = Poset::from_covers(vec![0, 1], vec![(0, 1, EdgeColor::Red), (1, 0, EdgeColor::Red)]);
        assert!(!p.is_acyclic());
    }

    #[test]
    fn convex_subposet_keeps_colors() {
        let p = Poset::from_covers(
            vec!['a', 'b', 'c'],
            vec![(0, 1, EdgeColor::Red), (1, 2, EdgeColor::Blue)],
        );
        let q = p.interval_poset(1, 2);
        assert_eq!(q.elements(), &['b', 'c']);
        assert_eq!(q.cover_color(0, 1), Some(EdgeColor::Blue));
        assert_eq!(p.leq_elems(&'a', &'c'), Ok(true));
        assert!(matches!(p.leq_elems(&'z', &'c'), Err(Error::ElementNotInPoset(_))));
    }
}
