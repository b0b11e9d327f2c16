//! Brute-force ground truth: `Q_d(f)` built explicitly, distances by BFS,
//! critical pairs straight from their definition.
//!
//! Vertices are packed words, so a word of length `d` is its own index into
//! `2^d`-sized tables. The isometry test runs a level-synchronous BFS on
//! bitsets from every source and compares, level by level, the size of the
//! BFS ball with the number of graph vertices in the Hamming ball of the same
//! radius. Since graph distance never undercuts Hamming distance, the two
//! counts agree at every radius exactly when the source sees every vertex at
//! its Hamming distance.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{mask, Pattern, Word};

pub const DEFAULT_DIMENSION_CAP: usize = 25;
/// Hard ceiling for any configured cap (`u32` vertex indices, `2^d` tables).
pub const MAX_DIMENSION_CAP: usize = 30;

const ABSENT: u32 = u32::MAX;

/// `Q_d(f)`: the length-`d` words avoiding `f`, adjacency by single flips.
#[derive(Clone)]
pub struct AvoidanceGraph {
    dimension: usize,
    pattern: Pattern,
    /// Membership bitset over all `2^d` words.
    member: Vec<u64>,
    /// Vertices ascending (= lexicographic).
    vertices: Vec<u64>,
    /// Word -> position in `vertices`, or `ABSENT`.
    index: Vec<u32>,
}

impl std::fmt::Debug for AvoidanceGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AvoidanceGraph")
            .field("dimension", &self.dimension)
            .field("pattern", &self.pattern)
            .field("vertices", &self.vertices.len())
            .finish()
    }
}

pub fn build_graph(f: &Pattern, d: usize) -> Result<AvoidanceGraph> {
    AvoidanceGraph::build(f, d)
}

impl AvoidanceGraph {
    pub fn build(f: &Pattern, d: usize) -> Result<Self> {
        Self::build_with_cap(f, d, DEFAULT_DIMENSION_CAP)
    }

    pub fn build_with_cap(f: &Pattern, d: usize, cap: usize) -> Result<Self> {
        let cap = cap.min(MAX_DIMENSION_CAP);
        if d == 0 || d > cap {
            return Err(Error::DimensionCap { dimension: d, cap });
        }
        let forbidden = forbidden_table(f, d);
        let size = 1usize << d;
        let mut member = vec![0u64; size.div_ceil(64)];
        let mut vertices = Vec::new();
        let mut index = vec![ABSENT; size];
        for (x, &bad) in forbidden.iter().enumerate() {
            if !bad {
                member[x >> 6] |= 1 << (x & 63);
                index[x] = vertices.len() as u32;
                vertices.push(x as u64);
            }
        }
        Ok(Self {
            dimension: d,
            pattern: *f,
            member,
            vertices,
            index,
        })
    }

    /// Arbitrary induced subgraph of `Q_d`, for exercising the checks on
    /// vertex sets no pattern produces.
    #[cfg(test)]
    pub(crate) fn from_vertex_bits(f: &Pattern, d: usize, bits: &[u64]) -> Self {
        let size = 1usize << d;
        let mut member = vec![0u64; size.div_ceil(64)];
        let mut vertices: Vec<u64> = bits.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        let mut index = vec![ABSENT; size];
        for (i, &x) in vertices.iter().enumerate() {
            member[(x >> 6) as usize] |= 1 << (x & 63);
            index[x as usize] = i as u32;
        }
        Self {
            dimension: d,
            pattern: *f,
            member,
            vertices,
            index,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = Word> + '_ {
        self.vertices
            .iter()
            .map(|&b| Word::from_bits_unchecked(b, self.dimension))
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.dimension && self.has_bits(w.bits())
    }

    fn has_bits(&self, x: u64) -> bool {
        (self.member[(x >> 6) as usize] >> (x & 63)) & 1 == 1
    }

    fn require_vertex(&self, w: &Word) -> Result<u64> {
        if self.contains(w) {
            Ok(w.bits())
        } else {
            Err(Error::NotAVertex(w.to_string()))
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> Vec<(Word, Word)> {
        let d = self.dimension;
        let mut out = Vec::new();
        for &u in &self.vertices {
            for bit in (0..d).rev() {
                let v = u ^ (1 << bit);
                if v > u && self.has_bits(v) {
                    out.push((
                        Word::from_bits_unchecked(u, d),
                        Word::from_bits_unchecked(v, d),
                    ));
                }
            }
        }
        out.sort();
        out
    }

    /// BFS distance inside `Q_d(f)`; `None` when `b` is unreachable from `a`.
    pub fn graph_distance(&self, a: &Word, b: &Word) -> Result<Option<usize>> {
        let src = self.require_vertex(a)?;
        let dst = self.require_vertex(b)?;
        Ok(self.bfs_distance(src, dst))
    }

    fn bfs_distance(&self, src: u64, dst: u64) -> Option<usize> {
        if src == dst {
            return Some(0);
        }
        let mut dist = vec![u32::MAX; self.vertices.len()];
        dist[self.index[src as usize] as usize] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[self.index[u as usize] as usize];
            for bit in 0..self.dimension {
                let v = u ^ (1 << bit);
                let vi = self.index[v as usize];
                if vi == ABSENT || dist[vi as usize] != u32::MAX {
                    continue;
                }
                if v == dst {
                    return Some(du as usize + 1);
                }
                dist[vi as usize] = du + 1;
                queue.push_back(v);
            }
        }
        None
    }

    /// Decides whether `Q_d(f)` is isometric in `Q_d`.
    ///
    /// Sources are scanned in lexicographic order and the scan stops at the
    /// first source with a violation; the reported pair is that source with
    /// the lexicographically smallest vertex it fails to reach in time.
    pub fn is_isometric(&self) -> Verdict {
        let violation = (0..self.vertices.len())
            .into_par_iter()
            .map_init(
                || BfsScratch::new(self.dimension),
                |scratch, si| self.source_violation(self.vertices[si], scratch),
            )
            .find_map_first(|v| v);
        Verdict {
            isometric: violation.is_none(),
            violating_pair: violation,
            minimal_critical_p: None,
        }
    }

    /// [`is_isometric`](Self::is_isometric) plus the minimal `p` of the
    /// critical pairs, found by the definition-level scan.
    pub fn full_verdict(&self) -> Verdict {
        let mut verdict = self.is_isometric();
        if !verdict.isometric {
            verdict.minimal_critical_p = self.minimal_critical_p();
        }
        verdict
    }

    fn source_violation(&self, src: u64, scratch: &mut BfsScratch) -> Option<Violation> {
        let d = self.dimension;
        let total = self.vertices.len();
        // ball[r] = number of vertices with Hamming distance <= r from src
        let mut ball = [0usize; 64];
        for &v in &self.vertices {
            ball[(src ^ v).count_ones() as usize] += 1;
        }
        for r in 1..=d {
            ball[r] += ball[r - 1];
        }
        let BfsScratch {
            visited,
            frontier,
            next,
        } = scratch;
        visited.fill(0);
        frontier.fill(0);
        set_bit(visited, src);
        set_bit(frontier, src);
        let mut reached = 1usize;
        for (radius, &in_ball) in ball.iter().enumerate().take(d + 1).skip(1) {
            if reached == total {
                return None;
            }
            expand(frontier, next, d);
            for ((n, &m), v) in next.iter_mut().zip(&self.member).zip(visited.iter_mut()) {
                *n &= m & !*v;
                *v |= *n;
                reached += n.count_ones() as usize;
            }
            std::mem::swap(frontier, next);
            if reached < in_ball {
                let beta = self
                    .vertices
                    .iter()
                    .copied()
                    .find(|&v| (src ^ v).count_ones() as usize <= radius && !get_bit(visited, v))
                    .expect("ball count exceeds reached count");
                return Some(Violation {
                    alpha: Word::from_bits_unchecked(src, d),
                    beta: Word::from_bits_unchecked(beta, d),
                    graph_distance: self.bfs_distance(src, beta),
                    hamming: (src ^ beta).count_ones() as usize,
                });
            }
        }
        None
    }

    fn blocked(&self, from: u64, diff: u64) -> bool {
        let mut rest = diff;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if self.has_bits(from ^ bit) {
                return false;
            }
            rest ^= bit;
        }
        true
    }

    fn pair_at(&self, ai: usize, bi: usize) -> Option<CriticalPair> {
        let (a, b) = (self.vertices[ai], self.vertices[bi]);
        let diff = a ^ b;
        let p = diff.count_ones() as usize;
        if p < 2 {
            return None;
        }
        let side = match (self.blocked(a, diff), self.blocked(b, diff)) {
            (true, true) => BlockedSide::Both,
            (true, false) => BlockedSide::Alpha,
            (false, true) => BlockedSide::Beta,
            (false, false) => return None,
        };
        let d = self.dimension;
        Some(CriticalPair {
            alpha: Word::from_bits_unchecked(a, d),
            beta: Word::from_bits_unchecked(b, d),
            p,
            blocked_side: side,
        })
    }

    /// Every critical pair (or only those of minimal `p`), `alpha < beta`,
    /// sorted by `(alpha, beta)`.
    pub fn find_critical_pairs(&self, minimal_only: bool) -> Vec<CriticalPair> {
        let n = self.vertices.len();
        let min_p = if minimal_only {
            match self.minimal_critical_p() {
                Some(p) => Some(p),
                None => return Vec::new(),
            }
        } else {
            None
        };
        (0..n)
            .into_par_iter()
            .flat_map_iter(|ai| {
                ((ai + 1)..n).filter_map(move |bi| {
                    if let Some(p) = min_p {
                        if (self.vertices[ai] ^ self.vertices[bi]).count_ones() as usize != p {
                            return None;
                        }
                    }
                    self.pair_at(ai, bi)
                })
            })
            .collect()
    }

    pub fn has_critical_pair(&self) -> bool {
        let n = self.vertices.len();
        (0..n)
            .into_par_iter()
            .any(|ai| ((ai + 1)..n).any(|bi| self.pair_at(ai, bi).is_some()))
    }

    pub fn minimal_critical_p(&self) -> Option<usize> {
        let n = self.vertices.len();
        (0..n)
            .into_par_iter()
            .filter_map(|ai| {
                ((ai + 1)..n)
                    .filter_map(|bi| self.pair_at(ai, bi).map(|c| c.p))
                    .min()
            })
            .min()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"Q{}({})\" {{", self.dimension, self.pattern);
        for v in self.vertices() {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  \"{u}\" -- \"{v}\";");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        let mut adjacency = std::collections::BTreeMap::new();
        for v in self.vertices() {
            let neighbours: Vec<String> = (1..=self.dimension)
                .map(|i| v.flip_unchecked(i))
                .filter(|w| self.contains(w))
                .map(|w| w.to_string())
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            adjacency.insert(v.to_string(), neighbours);
        }
        GraphJson {
            pattern: self.pattern.to_string(),
            dimension: self.dimension,
            vertex_count: self.vertices.len(),
            adjacency,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub pattern: String,
    pub dimension: usize,
    pub vertex_count: usize,
    pub adjacency: std::collections::BTreeMap<String, Vec<String>>,
}

/// `forbidden[x]` iff the length-`d` word `x` contains `f`.
///
/// A word contains `f` iff its prefix of length `d-1` does or its last `|f|`
/// bits spell `f`, so the table is grown one length at a time.
fn forbidden_table(f: &Pattern, d: usize) -> Vec<bool> {
    let m = f.len();
    let fbits = f.word().bits();
    let fmask = mask(m);
    if m > d {
        return vec![false; 1 << d];
    }
    let mut table = vec![false; 1 << m];
    table[fbits as usize] = true;
    for len in (m + 1)..=d {
        let prev = table;
        table = (0..1u64 << len)
            .map(|x| prev[(x >> 1) as usize] || x & fmask == fbits)
            .collect();
    }
    table
}

struct BfsScratch {
    visited: Vec<u64>,
    frontier: Vec<u64>,
    next: Vec<u64>,
}

impl BfsScratch {
    fn new(d: usize) -> Self {
        let words = (1usize << d).div_ceil(64);
        Self {
            visited: vec![0; words],
            frontier: vec![0; words],
            next: vec![0; words],
        }
    }
}

fn set_bit(set: &mut [u64], x: u64) {
    set[(x >> 6) as usize] |= 1 << (x & 63);
}

fn get_bit(set: &[u64], x: u64) -> bool {
    (set[(x >> 6) as usize] >> (x & 63)) & 1 == 1
}

/// Bit `i` of a word index clear in these positions of a 64-bit block.
const LOW_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// `next = union over coordinates i of (frontier XOR e_i)`.
fn expand(frontier: &[u64], next: &mut [u64], d: usize) {
    next.fill(0);
    for (i, &m) in LOW_MASKS.iter().enumerate().take(d) {
        let sh = 1u32 << i;
        for (n, &f) in next.iter_mut().zip(frontier) {
            *n |= ((f & m) << sh) | ((f >> sh) & m);
        }
    }
    for i in 6..d {
        let stride = 1usize << (i - 6);
        for (j, n) in next.iter_mut().enumerate() {
            *n |= frontier[j ^ stride];
        }
    }
}

/// A pair whose graph distance exceeds its Hamming distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub alpha: Word,
    pub beta: Word,
    /// `None` when `beta` is unreachable from `alpha`.
    pub graph_distance: Option<usize>,
    pub hamming: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub isometric: bool,
    pub violating_pair: Option<Violation>,
    pub minimal_critical_p: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockedSide {
    Alpha,
    Beta,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CriticalPair {
    pub alpha: Word,
    pub beta: Word,
    pub p: usize,
    pub blocked_side: BlockedSide,
}

pub fn graph_distance(g: &AvoidanceGraph, a: &Word, b: &Word) -> Result<Option<usize>> {
    g.graph_distance(a, b)
}

pub fn is_isometric(g: &AvoidanceGraph) -> Verdict {
    g.is_isometric()
}

pub fn find_critical_pairs(g: &AvoidanceGraph, minimal_only: bool) -> Vec<CriticalPair> {
    g.find_critical_pairs(minimal_only)
}

/// Good, or bad with its index `B(f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Goodness {
    Good,
    Bad { index: usize },
}

impl Goodness {
    pub fn is_good(&self) -> bool {
        matches!(self, Goodness::Good)
    }

    pub fn index(&self) -> Option<usize> {
        match self {
            Goodness::Good => None,
            Goodness::Bad { index } => Some(*index),
        }
    }
}

/// First failing dimension found by scanning `d = 1..=2|f|-1`, which is
/// enough because a bad pattern always fails below `2|f|`.
pub fn index_bruteforce(f: &Pattern) -> Result<Goodness> {
    index_bruteforce_with_cap(f, DEFAULT_DIMENSION_CAP)
}

pub fn index_bruteforce_with_cap(f: &Pattern, cap: usize) -> Result<Goodness> {
    first_failure_up_to(f, 2 * f.len() - 1, cap)
}

/// First `d <= max_dimension` with `Q_d(f)` not isometric.
pub fn first_failure_up_to(f: &Pattern, max_dimension: usize, cap: usize) -> Result<Goodness> {
    let cap = cap.min(MAX_DIMENSION_CAP);
    if max_dimension > cap {
        return Err(Error::DimensionCap {
            dimension: max_dimension,
            cap,
        });
    }
    for d in 1..=max_dimension {
        if !AvoidanceGraph::build_with_cap(f, d, cap)?
            .is_isometric()
            .isometric
        {
            return Ok(Goodness::Bad { index: d });
        }
    }
    Ok(Goodness::Good)
}
