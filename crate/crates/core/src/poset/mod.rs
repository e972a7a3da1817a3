//! Finite posets, their lower ideals and antichains, and the two reverse
//! operators acting on them.
//!
//! Elements are identified by their position in a fixed canonical order.
//! Subsets (ideals, antichains) are [`Bits`] over that order, so equality and
//! hashing of ideals is exact and cheap.

mod build;
mod ideal;
mod iso;

pub use build::{KPoset, ProductPoset};
pub use ideal::{Antichain, IdealSet, DEFAULT_ENUMERATION_CAP};

use crate::bits::Bits;
use crate::error::{Error, Result};
use std::fmt::Write as _;

/// A finite partially ordered set with a precomputed order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    /// Cover pairs `(lower, upper)`, sorted.
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    /// `down[x] = { y | y <= x }`
    down: Vec<Bits>,
    /// `up[x] = { y | y >= x }`
    up: Vec<Bits>,
    rank: Option<Vec<usize>>,
}

impl FinitePoset {
    /// Builds a poset from element labels and a generating set of strict
    /// relations `(a, b)` meaning `a < b`. The order is their
    /// reflexive-transitive closure; redundant pairs are allowed.
    pub fn from_relations(
        labels: Vec<String>,
        relations: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::NotPartialOrder(format!(
                    "relation ({a}, {b}) out of range for {n} elements"
                )));
            }
            if a == b {
                return Err(Error::NotPartialOrder(format!(
                    "strict relation on `{}` with itself",
                    labels[a]
                )));
            }
            above[a].push(b);
        }

        // up[x] by graph search from x
        let mut up = Vec::with_capacity(n);
        for x in 0..n {
            let mut seen = Bits::empty(n);
            seen.insert(x);
            let mut stack = vec![x];
            while let Some(v) = stack.pop() {
                for &w in &above[v] {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            up.push(seen);
        }
        Self::from_up_sets(labels, up)
    }

    /// Builds a poset from a `leq(a, b)` predicate evaluated on all pairs.
    /// The predicate must already be a partial order.
    pub fn from_leq(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let up: Vec<Bits> = (0..n)
            .map(|x| Bits::from_indices(n, (0..n).filter(|&y| leq(x, y))))
            .collect();
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotPartialOrder(format!(
                    "`{}` is not related to itself",
                    labels[x]
                )));
            }
            for y in up[x].iter() {
                if !up[y].is_subset(&up[x]) {
                    return Err(Error::NotPartialOrder(format!(
                        "not transitive through `{}` <= `{}`",
                        labels[x], labels[y]
                    )));
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    fn from_up_sets(labels: Vec<String>, up: Vec<Bits>) -> Result<Self> {
        let n = labels.len();
        let mut down = vec![Bits::empty(n); n];
        for (x, ups) in up.iter().enumerate() {
            for y in ups.iter() {
                down[y].insert(x);
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::NotPartialOrder(format!(
                        "`{}` and `{}` lie on a cycle",
                        labels[x], labels[y]
                    )));
                }
            }
        }

        // y covers x iff x < y and nothing lies strictly between
        let mut covers = Vec::new();
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for x in 0..n {
            for y in up[x].iter() {
                if y == x {
                    continue;
                }
                let mut between = up[x].clone();
                between.intersect_with(&down[y]);
                if between.count() == 2 {
                    covers.push((x, y));
                    lower_covers[y].push(x);
                    upper_covers[x].push(y);
                }
            }
        }
        covers.sort_unstable();

        let mut poset = FinitePoset {
            labels,
            covers,
            lower_covers,
            upper_covers,
            down,
            up,
            rank: None,
        };
        poset.rank = poset.compute_rank();
        Ok(poset)
    }

    /// Rank = 1 + length of the longest chain below; kept only when every
    /// cover raises it by exactly one.
    fn compute_rank(&self) -> Option<Vec<usize>> {
        let mut depth = vec![0usize; self.len()];
        for &x in &self.linear_extension() {
            depth[x] = 1 + self.lower_covers[x]
                .iter()
                .map(|&y| depth[y])
                .max()
                .unwrap_or(0);
        }
        let graded = self.covers.iter().all(|&(a, b)| depth[b] == depth[a] + 1);
        graded.then_some(depth)
    }

    /// Returns a copy with new element labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::WidthMismatch {
                expected: self.len(),
                found: labels.len(),
            });
        }
        Ok(FinitePoset {
            labels,
            ..self.clone()
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// First element carrying `label`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Principal lower ideal `{ y | y <= x }`.
    pub fn down_set(&self, x: usize) -> &Bits {
        &self.down[x]
    }

    /// Principal upper ideal `{ y | y >= x }`.
    pub fn up_set(&self, x: usize) -> &Bits {
        &self.up[x]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.lower_covers[x].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.upper_covers[x].is_empty())
            .collect()
    }

    /// Topological order, smallest available index first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut indeg: Vec<usize> = self.lower_covers.iter().map(Vec::len).collect();
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = ready.pop_first() {
            order.push(x);
            for &y in &self.upper_covers[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.insert(y);
                }
            }
        }
        order
    }

    pub fn is_graded(&self) -> bool {
        self.rank.is_some()
    }

    pub fn rank(&self, x: usize) -> Option<usize> {
        self.rank.as_ref().map(|r| r[x])
    }

    /// Number of rank levels `d`, or `None` for ungraded posets.
    pub fn rank_levels(&self) -> Option<usize> {
        self.rank
            .as_ref()
            .map(|r| r.iter().copied().max().unwrap_or(0))
    }

    /// Elements of rank exactly `i`.
    pub fn rank_level(&self, i: usize) -> Result<Vec<usize>> {
        let rank = self.require_rank()?;
        Ok((0..self.len()).filter(|&x| rank[x] == i).collect())
    }

    /// Rank level lower ideal `L_i`: the union of rank levels `1..=i`.
    pub fn rank_level_ideal(&self, i: usize) -> Result<IdealSet> {
        let rank = self.require_rank()?;
        let d = self.rank_levels().unwrap_or(0);
        if i > d {
            return Err(Error::InvalidArgument(format!(
                "rank level {i} exceeds the {d} levels of this poset"
            )));
        }
        Ok(IdealSet::from_bits_unchecked(Bits::from_indices(
            self.len(),
            (0..self.len()).filter(|&x| rank[x] <= i),
        )))
    }

    /// When `ideal` equals some `L_i`, returns `i`.
    pub fn rank_level_of(&self, ideal: &IdealSet) -> Option<usize> {
        let rank = self.rank.as_ref()?;
        let top = ideal.iter().map(|x| rank[x]).max().unwrap_or(0);
        let below = (0..self.len()).filter(|&x| rank[x] <= top).count();
        (below == ideal.len()).then_some(top)
    }

    fn require_rank(&self) -> Result<&[usize]> {
        self.rank
            .as_deref()
            .ok_or_else(|| Error::StructureMismatch("poset is not graded".into()))
    }

    /// Hasse diagram as a DOT digraph: one node per element, one edge per
    /// cover pair pointing from the lower element to the upper one.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape_dot(name));
        let _ = writeln!(out, "  rankdir=BT;");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", escape_dot(l));
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn covers_drop_implied_pairs() {
        let p = FinitePoset::from_relations(labels(3), [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
    }

    #[test]
    fn cycles_are_rejected() {
        let err = FinitePoset::from_relations(labels(2), [(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::NotPartialOrder(_)));
        let err = FinitePoset::from_relations(labels(1), [(0, 0)]).unwrap_err();
        assert!(matches!(err, Error::NotPartialOrder(_)));
    }

    #[test]
    fn leq_predicate_must_be_transitive() {
        // 0 <= 1 <= 2 but not 0 <= 2
        let rel = |a: usize, b: usize| a == b || (a, b) == (0, 1) || (a, b) == (1, 2);
        assert!(FinitePoset::from_leq(labels(3), rel).is_err());
    }

    #[test]
    fn rank_requires_unit_cover_steps() {
        // 0 < 1 < 2 and 0 < 3 < 2 is graded; adding 4 with 0 < 4 < 1? no, 4 < 2 only
        let graded =
            FinitePoset::from_relations(labels(4), [(0, 1), (1, 2), (0, 3), (3, 2)]).unwrap();
        assert_eq!(graded.rank_levels(), Some(3));
        let skew = FinitePoset::from_relations(labels(4), [(0, 1), (1, 2), (3, 2)]).unwrap();
        assert!(!skew.is_graded());
        assert!(skew.rank_level_ideal(1).is_err());
    }

    #[test]
    fn dot_is_stable_and_lists_covers() {
        let p = FinitePoset::from_relations(labels(3), [(0, 1), (1, 2)]).unwrap();
        let dot = p.to_dot("chain");
        assert_eq!(
            dot,
            "digraph \"chain\" {\n  rankdir=BT;\n  n0 [label=\"1\"];\n  n1 [label=\"2\"];\n  n2 [label=\"3\"];\n  n0 -> n1;\n  n1 -> n2;\n}\n"
        );
        assert_eq!(dot, p.clone().to_dot("chain"));
    }
}
