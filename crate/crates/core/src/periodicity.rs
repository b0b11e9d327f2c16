//! Period-propagation equations and the overlap graph `G^(r,s)`.
//!
//! For shifts `r`, `s` with `g = gcd(r, s)`, `k1 = r/g`, `k2 = s/g`, the
//! equations relative to a base position `t` are
//!
//! * type 2: `f[t+(i-1)g] = f[t+(i-1)g+s]` for `i = 1..=k1`
//! * type 3: `f[t+(j-1)g] = f[t+(j-1)g+r]` for `j = 1..=k2`
//! * type 4: the tautologies `f[t+(i-1)g] = f[t+(i-1)g]` for `i = 1..=k1+k2`
//!
//! The overlap graph has one vertex per equation side and is a single cycle,
//! which is why dropping any one type-2/type-3 equation loses nothing.
//! [`closure_implies`] answers "is this equality forced?" by union-find over
//! relative positions, independently of the graph walk in
//! [`OverlapGraph::is_single_cycle`].

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Pattern;

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A vertex on the `X` side: `v^1_i` stands for `f[t+(i-1)g]`, `v^3_k` for
/// `f[t+(k-1)g+r]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum XVertex {
    First(usize),
    Third(usize),
}

/// `v^2_j`, standing for `f[t+(j-1)g]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct YVertex(pub usize);

/// Which equation an overlap-graph edge encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeKind {
    Type2(usize),
    Type3(usize),
    /// Type-4 identification of two labels for the same position.
    Identity(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OverlapEdge {
    pub x: XVertex,
    pub y: YVertex,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverlapGraph {
    pub r: usize,
    pub s: usize,
    pub g: usize,
    pub k1: usize,
    pub k2: usize,
    pub edges: Vec<OverlapEdge>,
}

pub fn build_overlap_graph(r: usize, s: usize) -> Result<OverlapGraph> {
    OverlapGraph::new(r, s)
}

impl OverlapGraph {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::NonPositiveShift { r, s });
        }
        let g = gcd(r, s);
        let (k1, k2) = (r / g, s / g);
        let mut edges = Vec::with_capacity(2 * (k1 + k2));
        for i in 1..=k1 {
            edges.push(OverlapEdge {
                x: XVertex::First(i),
                y: YVertex(i),
                kind: EdgeKind::Identity(i),
            });
            edges.push(OverlapEdge {
                x: XVertex::First(i),
                y: YVertex(i + k2),
                kind: EdgeKind::Type2(i),
            });
        }
        for k in 1..=k2 {
            edges.push(OverlapEdge {
                x: XVertex::Third(k),
                y: YVertex(k),
                kind: EdgeKind::Type3(k),
            });
            edges.push(OverlapEdge {
                x: XVertex::Third(k),
                y: YVertex(k + k1),
                kind: EdgeKind::Identity(k + k1),
            });
        }
        Ok(Self {
            r,
            s,
            g,
            k1,
            k2,
            edges,
        })
    }

    pub fn x_vertices(&self) -> Vec<XVertex> {
        (1..=self.k1)
            .map(XVertex::First)
            .chain((1..=self.k2).map(XVertex::Third))
            .collect()
    }

    pub fn y_vertices(&self) -> Vec<YVertex> {
        (1..=self.k1 + self.k2).map(YVertex).collect()
    }

    pub fn vertex_count(&self) -> usize {
        2 * (self.k1 + self.k2)
    }

    /// Dense ids: `X` first (`v^1` then `v^3`), then `Y`.
    fn x_id(&self, x: XVertex) -> usize {
        match x {
            XVertex::First(i) => i - 1,
            XVertex::Third(k) => self.k1 + k - 1,
        }
    }

    fn y_id(&self, y: YVertex) -> usize {
        self.k1 + self.k2 + y.0 - 1
    }

    /// Relative position (offset from `t`) a vertex stands for.
    pub fn x_position(&self, x: XVertex) -> usize {
        match x {
            XVertex::First(i) => (i - 1) * self.g,
            XVertex::Third(k) => (k - 1) * self.g + self.r,
        }
    }

    pub fn y_position(&self, y: YVertex) -> usize {
        (y.0 - 1) * self.g
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            let (a, b) = (self.x_id(e.x), self.y_id(e.y));
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(Vec::len).collect()
    }

    pub fn is_two_regular(&self) -> bool {
        self.degrees().iter().all(|&d| d == 2)
    }

    /// Connected; with 2-regularity this means one cycle through every vertex.
    pub fn is_single_cycle(&self) -> bool {
        let adj = self.adjacency();
        if !adj.iter().all(|n| n.len() == 2) {
            return false;
        }
        let mut seen = vec![false; adj.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == adj.len()
    }

    /// The cycle as a closed walk of `Y` indices starting at `v^2_1` and
    /// leaving through `v^3_1`, i.e. the order in which `Y` is visited.
    pub fn y_walk(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let n_y = self.k1 + self.k2;
        let start = self.y_id(YVertex(1));
        let mut prev = start;
        let mut cur = self.x_id(XVertex::Third(1));
        let mut walk = vec![1];
        loop {
            let next = if adj[cur][0] != prev {
                adj[cur][0]
            } else {
                adj[cur][1]
            };
            (prev, cur) = (cur, next);
            if cur == start || walk.len() > adj.len() {
                break;
            }
            if cur >= self.k1 + self.k2 {
                walk.push(cur - (self.k1 + self.k2) + 1);
            }
        }
        debug_assert!(walk.len() <= n_y);
        walk
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph overlap_{}_{} {{", self.r, self.s);
        for x in self.x_vertices() {
            let _ = writeln!(out, "  \"{}\";", x_label(x));
        }
        for y in self.y_vertices() {
            let _ = writeln!(out, "  \"{}\";", y_label(y));
        }
        for e in &self.edges {
            let label = match e.kind {
                EdgeKind::Type2(i) => format!("(2,{i})"),
                EdgeKind::Type3(j) => format!("(3,{j})"),
                EdgeKind::Identity(i) => format!("(4,{i})"),
            };
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{label}\"];",
                x_label(e.x),
                y_label(e.y)
            );
        }
        out.push_str("}\n");
        out
    }
}

fn x_label(x: XVertex) -> String {
    match x {
        XVertex::First(i) => format!("v1_{i}"),
        XVertex::Third(k) => format!("v3_{k}"),
    }
}

fn y_label(y: YVertex) -> String {
    format!("v2_{}", y.0)
}

/// `h_j = (j-1)·k1 mod (k1+k2)` for `j = 1..=k1+k2`.
pub fn residue_sequence(k1: usize, k2: usize) -> Result<Vec<usize>> {
    if k1 == 0 || k2 == 0 || gcd(k1, k2) != 1 {
        return Err(Error::NotCoprime { k1, k2 });
    }
    let m = k1 + k2;
    Ok((0..m).map(|j| (j * k1) % m).collect())
}

/// An equation that may be assumed in [`closure_implies`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Equation {
    /// `(2, i)`, `1 <= i <= r/g`.
    Type2(usize),
    /// `(3, j)`, `1 <= j <= s/g`.
    Type3(usize),
    /// An explicit equality between two relative positions in `0..=r+s`.
    Positions(usize, usize),
}

/// The concrete equations for shifts `r`, `s` anchored at absolute position `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationSystem {
    pub r: usize,
    pub s: usize,
    pub g: usize,
    pub base: usize,
}

impl EquationSystem {
    pub fn new(r: usize, s: usize, base: usize) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::NonPositiveShift { r, s });
        }
        Ok(Self {
            r,
            s,
            g: gcd(r, s),
            base,
        })
    }

    pub fn k1(&self) -> usize {
        self.r / self.g
    }

    pub fn k2(&self) -> usize {
        self.s / self.g
    }

    /// Largest relative position any equation may mention.
    pub fn span_max(&self) -> usize {
        self.r + self.s
    }

    pub fn span(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.span_max()).map(move |p| self.base + p)
    }

    pub fn type2(&self) -> Vec<Equation> {
        (1..=self.k1()).map(Equation::Type2).collect()
    }

    pub fn type3(&self) -> Vec<Equation> {
        (1..=self.k2()).map(Equation::Type3).collect()
    }

    /// All type-2 and type-3 equations, type 2 first.
    pub fn shift_equations(&self) -> Vec<Equation> {
        let mut all = self.type2();
        all.extend(self.type3());
        all
    }

    /// Type-4 identifications as relative positions.
    pub fn type4(&self) -> Vec<(usize, usize)> {
        (1..=self.k1() + self.k2())
            .map(|i| ((i - 1) * self.g, (i - 1) * self.g))
            .collect()
    }

    /// Relative positions equated by `eq`.
    pub fn relative(&self, eq: Equation) -> Result<(usize, usize)> {
        let pair = match eq {
            Equation::Type2(i) if (1..=self.k1()).contains(&i) => {
                ((i - 1) * self.g, (i - 1) * self.g + self.s)
            }
            Equation::Type3(j) if (1..=self.k2()).contains(&j) => {
                ((j - 1) * self.g, (j - 1) * self.g + self.r)
            }
            Equation::Positions(a, b) if a <= self.span_max() && b <= self.span_max() => (a, b),
            _ => {
                return Err(Error::MalformedEquation(format!(
                    "{eq:?} for r={}, s={}",
                    self.r, self.s
                )))
            }
        };
        Ok(pair)
    }

    /// Absolute 1-based positions equated by `eq`.
    pub fn absolute(&self, eq: Equation) -> Result<(usize, usize)> {
        let (a, b) = self.relative(eq)?;
        Ok((self.base + a, self.base + b))
    }

    /// Does `eq` hold on `f`? Positions past the end of `f` are an error.
    pub fn holds_on(&self, f: &Pattern, eq: Equation) -> Result<bool> {
        let (a, b) = self.absolute(eq)?;
        Ok(f.word().bit(a)? == f.word().bit(b)?)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Is `f[t+a] = f[t+b]` forced by the `assumed` equations (plus the type-4
/// identifications, which are always present)?
///
/// `queried` is a pair of positions relative to `t`, both in `0..=r+s`.
pub fn closure_implies(
    r: usize,
    s: usize,
    assumed: &[Equation],
    queried: (usize, usize),
) -> Result<bool> {
    let system = EquationSystem::new(r, s, 0)?;
    let max = system.span_max();
    for p in [queried.0, queried.1] {
        if p > max {
            return Err(Error::OutsideSpan { position: p, max });
        }
    }
    let mut uf = UnionFind::new(max + 1);
    for (a, b) in system.type4() {
        uf.union(a, b);
    }
    for &eq in assumed {
        let (a, b) = system.relative(eq)?;
        uf.union(a, b);
    }
    Ok(uf.find(queried.0) == uf.find(queried.1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeriodCheck {
    pub holds: bool,
    /// The hypotheses failed on the concrete word, so `holds` is vacuous.
    pub vacuous: bool,
}

/// For `|f| = r + s`: if `f` has periods `s` (on `1..=r`) and `r` (on `1..=s`),
/// check that equations (2) and (3) hold for every base `t = 1..=g`.
pub fn period_closure_check(f: &Pattern, r: usize, s: usize) -> Result<PeriodCheck> {
    if r == 0 || s == 0 {
        return Err(Error::NonPositiveShift { r, s });
    }
    if f.len() != r + s {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: r + s,
        });
    }
    let w = f.word();
    let bit = |i: usize| w.bit_unchecked(i);
    let hypotheses = (1..=r).all(|i| bit(i) == bit(i + s)) && (1..=s).all(|j| bit(j) == bit(j + r));
    if !hypotheses {
        return Ok(PeriodCheck {
            holds: true,
            vacuous: true,
        });
    }
    let g = gcd(r, s);
    for t in 1..=g {
        let system = EquationSystem::new(r, s, t)?;
        for eq in system.shift_equations() {
            if !system.holds_on(f, eq)? {
                return Ok(PeriodCheck {
                    holds: false,
                    vacuous: false,
                });
            }
        }
    }
    Ok(PeriodCheck {
        holds: true,
        vacuous: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;
    use proptest::prelude::*;

    #[test]
    fn figure_one_shape() {
        let g = build_overlap_graph(10, 3).unwrap();
        assert_eq!((g.k1, g.k2), (10, 3));
        assert_eq!(g.x_vertices().len(), 13);
        assert_eq!(g.y_vertices().len(), 13);
        assert_eq!(g.edges.len(), 26);
        assert!(g.is_single_cycle());
    }

    #[test]
    fn unit_shifts_give_four_cycle() {
        let g = build_overlap_graph(1, 1).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges.len(), 4);
        assert!(g.is_single_cycle());
    }

    #[test]
    fn shared_divisor() {
        let g = build_overlap_graph(2, 4).unwrap();
        assert_eq!((g.g, g.k1, g.k2), (2, 1, 2));
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edges.len(), 6);
        assert!(g.is_single_cycle());
        assert!(build_overlap_graph(6, 9).unwrap().is_single_cycle());
    }

    #[test]
    fn rejects_zero_shift() {
        assert_eq!(
            build_overlap_graph(0, 3),
            Err(Error::NonPositiveShift { r: 0, s: 3 })
        );
        assert!(closure_implies(2, 0, &[], (0, 1)).is_err());
    }

    #[test]
    fn missing_edge_breaks_cycle() {
        let mut g = build_overlap_graph(4, 3).unwrap();
        g.edges.pop();
        assert!(!g.is_single_cycle());
    }

    #[test]
    fn residues() {
        assert_eq!(
            residue_sequence(10, 3).unwrap(),
            vec![0, 10, 7, 4, 1, 11, 8, 5, 2, 12, 9, 6, 3]
        );
        assert_eq!(residue_sequence(1, 1).unwrap(), vec![0, 1]);
        assert_eq!(residue_sequence(2, 3).unwrap(), vec![0, 2, 4, 1, 3]);
        assert_eq!(
            residue_sequence(2, 4),
            Err(Error::NotCoprime { k1: 2, k2: 4 })
        );
    }

    #[test]
    fn walk_follows_residues() {
        // the cycle visits v^2_{1+h_k} in order
        for (k1, k2) in [(10, 3), (2, 3), (3, 2), (1, 1), (5, 7)] {
            let g = build_overlap_graph(k1, k2).unwrap();
            let expected: Vec<usize> = residue_sequence(k1, k2)
                .unwrap()
                .into_iter()
                .map(|h| h + 1)
                .collect();
            assert_eq!(g.y_walk(), expected, "k1={k1} k2={k2}");
        }
    }

    #[test]
    fn triangle_closure() {
        let assumed = [Equation::Positions(0, 1), Equation::Positions(1, 2)];
        assert!(closure_implies(1, 1, &assumed, (0, 2)).unwrap());
        assert!(!closure_implies(1, 1, &assumed[..1], (0, 2)).unwrap());
    }

    #[test]
    fn any_single_missing_equation_is_forced() {
        for (r, s) in [(10, 3), (6, 9), (4, 6), (1, 1), (5, 2)] {
            let sys = EquationSystem::new(r, s, 0).unwrap();
            for missing in sys.shift_equations() {
                let rest: Vec<_> = sys
                    .shift_equations()
                    .into_iter()
                    .filter(|e| *e != missing)
                    .collect();
                let q = sys.relative(missing).unwrap();
                assert!(
                    closure_implies(r, s, &rest, q).unwrap(),
                    "{r} {s} {missing:?}"
                );
            }
        }
    }

    #[test]
    fn two_deleted_edges_cross_pairs() {
        for (r, s) in [(10, 3), (9, 6), (5, 3), (7, 2)] {
            let sys = EquationSystem::new(r, s, 0).unwrap();
            let g = sys.g;
            let k1 = sys.k1();
            let k2 = sys.k2();
            for i1 in 1..=k1 {
                for i2 in (i1 + 1)..=k1 {
                    let assumed: Vec<_> = sys
                        .shift_equations()
                        .into_iter()
                        .filter(|e| *e != Equation::Type2(i1) && *e != Equation::Type2(i2))
                        .collect();
                    let a = ((i1 - 1) * g, (i2 - 1) * g + s);
                    let b = ((i2 - 1) * g, (i1 - 1) * g + s);
                    assert!(closure_implies(r, s, &assumed, a).unwrap());
                    assert!(closure_implies(r, s, &assumed, b).unwrap());
                }
            }
            for j1 in 1..=k2 {
                for j2 in (j1 + 1)..=k2 {
                    let assumed: Vec<_> = sys
                        .shift_equations()
                        .into_iter()
                        .filter(|e| *e != Equation::Type3(j1) && *e != Equation::Type3(j2))
                        .collect();
                    let a = ((j1 - 1) * g, (j2 - 1) * g + r);
                    let b = ((j2 - 1) * g, (j1 - 1) * g + r);
                    assert!(closure_implies(r, s, &assumed, a).unwrap());
                    assert!(closure_implies(r, s, &assumed, b).unwrap());
                }
            }
            for i1 in 1..=k1 {
                for j1 in 1..=k2 {
                    let assumed: Vec<_> = sys
                        .shift_equations()
                        .into_iter()
                        .filter(|e| *e != Equation::Type2(i1) && *e != Equation::Type3(j1))
                        .collect();
                    let a = ((i1 - 1) * g, (j1 - 1) * g);
                    let b = ((i1 - 1) * g + s, (j1 - 1) * g + r);
                    assert!(closure_implies(r, s, &assumed, a).unwrap());
                    assert!(closure_implies(r, s, &assumed, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn malformed_ids() {
        assert!(matches!(
            closure_implies(4, 6, &[Equation::Type2(3)], (0, 2)),
            Err(Error::MalformedEquation(_))
        ));
        assert!(closure_implies(4, 6, &[Equation::Type3(0)], (0, 2)).is_err());
        assert!(closure_implies(4, 6, &[Equation::Positions(0, 11)], (0, 2)).is_err());
        assert_eq!(
            closure_implies(4, 6, &[], (0, 11)),
            Err(Error::OutsideSpan {
                position: 11,
                max: 10
            })
        );
    }

    #[test]
    fn period_check_examples() {
        let p = |s: &str| s.parse::<Pattern>().unwrap();
        assert_eq!(
            period_closure_check(&p("0000"), 1, 3).unwrap(),
            PeriodCheck {
                holds: true,
                vacuous: false
            }
        );
        assert_eq!(
            period_closure_check(&p("010101"), 2, 4).unwrap(),
            PeriodCheck {
                holds: true,
                vacuous: false
            }
        );
        assert_eq!(
            period_closure_check(&p("011010"), 2, 4).unwrap(),
            PeriodCheck {
                holds: true,
                vacuous: true
            }
        );
        assert!(period_closure_check(&p("0110"), 2, 4).is_err());
    }

    #[test]
    fn period_check_exhaustive() {
        for n in 2..=12 {
            for w in Word::all(n) {
                let f = Pattern::new(w);
                for r in 1..n {
                    let res = period_closure_check(&f, r, n - r).unwrap();
                    assert!(res.holds, "{f} r={r}");
                }
            }
        }
    }

    #[test]
    fn closure_is_sound_on_real_words() {
        // every equality the closure derives from equations that hold on f
        // also holds bit-wise on f
        for n in 2..=12usize {
            for w in Word::all(n) {
                let f = Pattern::new(w);
                for r in 1..n {
                    for s in 1..n {
                        let sys = EquationSystem::new(r, s, 1).unwrap();
                        let top = r + s - sys.g + 1;
                        if top > n {
                            continue;
                        }
                        let holding: Vec<_> = sys
                            .shift_equations()
                            .into_iter()
                            .filter(|&e| sys.holds_on(&f, e).unwrap())
                            .collect();
                        for a in (0..top).step_by(sys.g) {
                            for b in (a..top).step_by(sys.g) {
                                if closure_implies(r, s, &holding, (a, b)).unwrap() {
                                    assert_eq!(
                                        w.bit(1 + a).unwrap(),
                                        w.bit(1 + b).unwrap(),
                                        "{f} r={r} s={s} ({a},{b})"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn overlap_graph_is_one_cycle(r in 1usize..=20, s in 1usize..=20) {
            let g = build_overlap_graph(r, s).unwrap();
            prop_assert!(g.is_two_regular());
            prop_assert_eq!(g.edges.len(), 2 * (g.k1 + g.k2));
            prop_assert!(g.is_single_cycle());
        }

        #[test]
        fn full_system_joins_congruent_positions(r in 1usize..=15, s in 1usize..=15) {
            let sys = EquationSystem::new(r, s, 0).unwrap();
            let all = sys.shift_equations();
            let top = r + s - sys.g;
            for a in 0..=r + s {
                for b in 0..=r + s {
                    let joined = closure_implies(r, s, &all, (a, b)).unwrap();
                    let expected = a == b
                        || (a % sys.g == 0 && b % sys.g == 0 && a <= top && b <= top);
                    prop_assert_eq!(joined, expected, "({}, {})", a, b);
                }
            }
        }

        #[test]
        fn closure_is_monotone(
            r in 1usize..=12,
            s in 1usize..=12,
            keep in proptest::collection::vec(any::<bool>(), 24),
            extra in 0usize..24,
            a in 0usize..=24,
            b in 0usize..=24,
        ) {
            let sys = EquationSystem::new(r, s, 0).unwrap();
            prop_assume!(a <= r + s && b <= r + s);
            let eqs = sys.shift_equations();
            let subset: Vec<_> = eqs.iter().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| *e).collect();
            let mut bigger = subset.clone();
            bigger.push(eqs[extra % eqs.len()]);
            if closure_implies(r, s, &subset, (a, b)).unwrap() {
                prop_assert!(closure_implies(r, s, &bigger, (a, b)).unwrap());
            }
        }

        #[test]
        fn residue_sequence_is_permutation(k1 in 1usize..40, k2 in 1usize..40) {
            prop_assume!(k1 + k2 <= 40 && gcd(k1, k2) == 1);
            let h = residue_sequence(k1, k2).unwrap();
            let mut sorted = h.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (0..k1 + k2).collect::<Vec<_>>());
            prop_assert_eq!(h.iter().position(|&x| x == k2), Some(k1 + k2 - 1));
        }
    }
}
