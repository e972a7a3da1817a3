//! Finite irreducible root systems and the extra-special grading data.
//!
//! Simple roots follow Bourbaki numbering. The inner product is normalized so
//! that long roots have squared length 2; in particular `(θ, θ) = 2` and
//! `(α, θ^∨) = (α, θ)` for every root `α`.
//!
//! | family | simple roots (Bourbaki)                          | long simples |
//! |--------|--------------------------------------------------|--------------|
//! | `A_n`  | chain `1 - 2 - .. - n`                           | all          |
//! | `B_n`  | chain, `α_n` short                               | `α_1..α_{n-1}` |
//! | `C_n`  | chain, `α_n` long, the rest short                | `α_n`        |
//! | `D_n`  | chain `1 - .. - (n-2)`, with `n-1` and `n` on `n-2` | all       |
//! | `E_n`  | `1-3-4-5-6-7-8`, with `2` attached to `4`          | all        |
//! | `F_4`  | `1 - 2 => 3 - 4`, `α_3, α_4` short                | `α_1, α_2`   |
//! | `G_2`  | `α_1` short, `α_2` long                           | `α_2`        |

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use num_rational::Rational64;
use serde::{Serialize, Serializer};
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn admissible(self) -> &'static str {
        match self {
            Family::A => "n >= 1",
            Family::B | Family::C => "n >= 2",
            Family::D => "n >= 4",
            Family::E => "6, 7, 8",
            Family::F => "4",
            Family::G => "2",
        }
    }

    fn accepts(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Exceptional families have a single admissible rank (or three for E).
    pub fn is_exceptional(self) -> bool {
        matches!(self, Family::E | Family::F | Family::G)
    }
}

/// A Cartan–Killing type such as `B_5` or `E_6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.accepts(rank) {
            return Err(Error::InadmissibleType {
                family: family.letter(),
                rank,
                admissible: family.admissible(),
            });
        }
        Ok(SimpleType { family, rank })
    }

    /// Parses names like `"E6"`, `"b5"` or `"D_4"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::UnknownFamily(String::new()))?;
        let family = Family::from_letter(letter).ok_or_else(|| Error::UnknownFamily(s.into()))?;
        let digits = chars.as_str().trim_start_matches('_');
        let rank = digits
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("cannot read a rank from `{s}`")))?;
        SimpleType::new(family, rank)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// `dim 𝔤` for this type.
    pub fn dimension(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Squared lengths of the simple roots and their pairwise inner products.
    fn dynkin_data(self) -> (Vec<Rational64>, Vec<(usize, usize, Rational64)>) {
        let n = self.rank;
        let r = |a: i64, b: i64| Rational64::new(a, b);
        let two = r(2, 1);
        let one = r(1, 1);
        let chain_edges = |w: Rational64| (0..n.saturating_sub(1)).map(move |i| (i, i + 1, w));
        match self.family {
            Family::A => (vec![two; n], chain_edges(-one).collect()),
            Family::B => {
                let mut sq = vec![two; n];
                sq[n - 1] = one;
                (sq, chain_edges(-one).collect())
            }
            Family::C => {
                let mut sq = vec![one; n];
                sq[n - 1] = two;
                let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1, r(-1, 2))).collect();
                edges.push((n - 2, n - 1, -one));
                (sq, edges)
            }
            Family::D => {
                let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1, -one)).collect();
                edges.push((n - 3, n - 1, -one));
                (vec![two; n], edges)
            }
            Family::E => {
                let all = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
                let edges = all
                    .into_iter()
                    .filter(|&(a, b)| a < n && b < n)
                    .map(|(a, b)| (a, b, -one))
                    .collect();
                (vec![two; n], edges)
            }
            Family::F => (
                vec![two, two, one, one],
                vec![(0, 1, -one), (1, 2, -one), (2, 3, r(-1, 2))],
            ),
            Family::G => (vec![r(2, 3), two], vec![(0, 1, -one)]),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

/// A positive root written in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
    length: LengthClass,
}

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn length_class(&self) -> LengthClass {
        self.length
    }

    pub fn is_long(&self) -> bool {
        self.length == LengthClass::Long
    }

    /// `self <= other` in the root order: `other - self` has nonnegative
    /// coefficients.
    pub fn le(&self, other: &Root) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    /// Coefficient string such as `12321` (all coefficients are below 10).
    pub fn label(&self) -> String {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// A finite irreducible root system with its positive roots and the
/// invariants of its extra-special grading.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: SimpleType,
    gram: Vec<Vec<Rational64>>,
    simples: Vec<Root>,
    positives: Vec<Root>,
    theta: Root,
    coxeter: usize,
    dual_coxeter: usize,
    long_simples: usize,
}

impl RootSystem {
    pub fn new(kind: SimpleType) -> Result<Self> {
        let kind = SimpleType::new(kind.family, kind.rank)?;
        let n = kind.rank;
        let (sq, edges) = kind.dynkin_data();
        let mut gram = vec![vec![Rational64::from_integer(0); n]; n];
        for (i, s) in sq.iter().enumerate() {
            gram[i][i] = *s;
        }
        for (a, b, w) in edges {
            gram[a][b] = w;
            gram[b][a] = w;
        }

        let coeff_sets = positive_root_closure(&gram);
        let norm = |c: &[i64]| quad_form(&gram, c, c);
        let long_sq = Rational64::from_integer(2);
        let make = |coeffs: Vec<i64>| {
            let length = if norm(&coeffs) == long_sq {
                LengthClass::Long
            } else {
                LengthClass::Short
            };
            Root { coeffs, length }
        };
        let positives: Vec<Root> = coeff_sets.into_iter().map(make).collect();
        let simples: Vec<Root> = (0..n)
            .map(|i| make((0..n).map(|j| i64::from(i == j)).collect()))
            .collect();

        let top = positives.iter().map(Root::height).max().expect("nonempty");
        let theta = positives
            .iter()
            .find(|r| r.height() == top)
            .cloned()
            .expect("a root of maximal height");

        // θ^∨ = 2θ/(θ,θ) = θ; in coroots α_i^∨ = 2α_i/(α_i,α_i) the
        // coefficient of α_i^∨ is c_i·(α_i,α_i)/2.
        let coroot_height: Rational64 = theta
            .coeffs
            .iter()
            .zip(&sq)
            .map(|(&c, &s)| Rational64::from_integer(c) * s / 2)
            .sum();
        assert!(
            coroot_height.is_integer(),
            "θ^∨ has integral coroot coefficients"
        );

        let long_simples = simples.iter().filter(|r| r.is_long()).count();
        Ok(RootSystem {
            kind,
            coxeter: theta.height() as usize + 1,
            dual_coxeter: 1 + coroot_height.to_integer() as usize,
            gram,
            simples,
            positives,
            theta,
            long_simples,
        })
    }

    pub fn kind(&self) -> SimpleType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    pub fn simples(&self) -> &[Root] {
        &self.simples
    }

    /// `Δ⁺`, sorted by height and then by coefficient vector.
    pub fn positives(&self) -> &[Root] {
        &self.positives
    }

    pub fn gram(&self) -> &[Vec<Rational64>] {
        &self.gram
    }

    /// Highest root `θ`.
    pub fn theta(&self) -> &Root {
        &self.theta
    }

    /// Coxeter number `h = ht(θ) + 1`.
    pub fn coxeter_number(&self) -> usize {
        self.coxeter
    }

    /// Dual Coxeter number `h* = 1 + ht(θ^∨)`, the height taken in the
    /// basis of simple coroots.
    pub fn dual_coxeter_number(&self) -> usize {
        self.dual_coxeter
    }

    /// `(h, h*)`.
    pub fn coxeter_numbers(&self) -> (usize, usize) {
        (self.coxeter, self.dual_coxeter)
    }

    /// `|Π_l|`; every simple root counts as long in the simply-laced types.
    pub fn long_simple_count(&self) -> usize {
        self.long_simples
    }

    pub fn inner_product(&self, a: &Root, b: &Root) -> Rational64 {
        quad_form(&self.gram, &a.coeffs, &b.coeffs)
    }

    /// `(α, θ^∨)`. With `(θ, θ) = 2` this is `(α, θ)`.
    pub fn pairing_with_theta_coroot(&self, a: &Root) -> Rational64 {
        let tt = self.inner_product(&self.theta, &self.theta);
        self.inner_product(a, &self.theta) * 2 / tt
    }

    /// Roots of `Δ(1)`, in canonical order (height, then coefficients).
    pub fn delta_one_roots(&self) -> Vec<&Root> {
        let one = Rational64::from_integer(1);
        self.positives
            .iter()
            .filter(|r| self.pairing_with_theta_coroot(r) == one)
            .collect()
    }

    /// `Δ(1)` as a poset under the root order, elements labeled by their
    /// coefficient strings.
    pub fn delta_one(&self) -> FinitePoset {
        let roots = self.delta_one_roots();
        let labels = roots.iter().map(|r| r.label()).collect();
        FinitePoset::from_leq(labels, |a, b| roots[a].le(roots[b]))
            .expect("the root order is a partial order")
    }
}

fn quad_form(gram: &[Vec<Rational64>], a: &[i64], b: &[i64]) -> Rational64 {
    let mut acc = Rational64::from_integer(0);
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                acc += gram[i][j] * (ai * bj);
            }
        }
    }
    acc
}

/// Positive roots by height, grown with root strings: for a root `β` and a
/// simple root `α_i`, `β + α_i` is a root iff `p - ⟨β, α_i^∨⟩ > 0` where `p`
/// is the largest `k` with `β - kα_i` a root.
fn positive_root_closure(gram: &[Vec<Rational64>]) -> Vec<Vec<i64>> {
    let n = gram.len();
    let unit = |i: usize| (0..n).map(|j| i64::from(i == j)).collect::<Vec<i64>>();
    let mut known: HashSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut level: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut all = Vec::new();

    while !level.is_empty() {
        level.sort();
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 1;
                let pairing = quad_form(gram, beta, &e) * 2 / gram[i][i];
                debug_assert!(pairing.is_integer());
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing.to_integer() > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    all
}

/// The sweep of types checked by default: `A_1..A_8`, `B_2..B_8`,
/// `C_2..C_8`, `D_4..D_9` and all exceptional types.
pub fn default_sweep() -> Vec<SimpleType> {
    sweep_up_to(8, 9)
}

/// Classical types up to `max_rank` (`D` up to `max_rank_d`) followed by the
/// exceptional ones.
pub fn sweep_up_to(max_rank: usize, max_rank_d: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    let mut push = |f: Family, ranks: std::ops::RangeInclusive<usize>| {
        for r in ranks {
            out.push(SimpleType::new(f, r).expect("admissible"));
        }
    };
    push(Family::A, 1..=max_rank);
    push(Family::B, 2..=max_rank);
    push(Family::C, 2..=max_rank);
    push(Family::D, 4..=max_rank_d);
    push(Family::E, 6..=8);
    push(Family::F, 4..=4);
    push(Family::G, 2..=2);
    out
}
