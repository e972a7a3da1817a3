//! Closed-form rowmotion on `[m] × P` for ideals described by rank
//! signatures.
//!
//! A lower ideal of `[m] × P` is a nested sequence `I_1 ⊇ .. ⊇ I_m` of ideals
//! of `P`. When every `I_k` is a named slice of `P` (a rank level ideal `L_i`,
//! or for `K_{n-1}` one of `I_n`, `I_{n'}`), the sequence is written with
//! multiplicities, e.g. `(L_d^{n_0}, L_{i_1}^{n_1}, .., L_{i_s}^{n_s})`.
//!
//! Both rules below are a shift: every block hands its multiplicity to the
//! image of the block after it, the leading `L_d` block gains one row and the
//! last block loses one row to `L_0`.

use super::Orbit;
use crate::error::{Error, Result};
use crate::poset::{FinitePoset, IdealSet, KPoset, ProductPoset};
use std::fmt;

/// A named lower ideal of the factor poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    /// `L_i`, the union of the first `i` rank levels.
    Level(usize),
    /// `I_n = {1, .., n-1, n}` in `K_{n-1}`.
    Unprimed,
    /// `I_{n'} = {1, .., n-1, n'}` in `K_{n-1}`.
    Primed,
}

impl Slice {
    fn swapped(self) -> Slice {
        match self {
            Slice::Unprimed => Slice::Primed,
            Slice::Primed => Slice::Unprimed,
            s => s,
        }
    }

    fn level(self) -> Option<usize> {
        match self {
            Slice::Level(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slice::Level(i) => write!(f, "L_{i}"),
            Slice::Unprimed => f.write_str("I_n"),
            Slice::Primed => f.write_str("I_n'"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub slice: Slice,
    pub mult: usize,
}

/// Rows of a product ideal grouped into blocks of equal slices, top row
/// first. Zero-multiplicity blocks are dropped and equal neighbours merged.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankSignature {
    blocks: Vec<Block>,
}

impl RankSignature {
    pub fn new(blocks: impl IntoIterator<Item = (Slice, usize)>) -> Self {
        let mut out: Vec<Block> = Vec::new();
        for (slice, mult) in blocks {
            if mult == 0 {
                continue;
            }
            match out.last_mut() {
                Some(b) if b.slice == slice => b.mult += mult,
                _ => out.push(Block { slice, mult }),
            }
        }
        RankSignature { blocks: out }
    }

    pub fn from_rows(rows: &[Slice]) -> Self {
        RankSignature::new(rows.iter().map(|&s| (s, 1)))
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// One slice per row, `I_1` first.
    pub fn rows(&self) -> Vec<Slice> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.slice, b.mult))
            .collect()
    }

    pub fn row_count(&self) -> usize {
        self.blocks.iter().map(|b| b.mult).sum()
    }

    /// Every row is a rank level ideal.
    pub fn is_full_rank(&self) -> bool {
        self.blocks.iter().all(|b| b.slice.level().is_some())
    }

    fn swapped(&self) -> Self {
        RankSignature::new(self.blocks.iter().map(|b| (b.slice.swapped(), b.mult)))
    }

    fn check_rows(&self, m: usize) -> Result<()> {
        if self.row_count() != m {
            return Err(Error::MalformedSignature(format!(
                "{self} has {} rows, expected {m}",
                self.row_count()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for RankSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}^{}", b.slice, b.mult)?;
        }
        f.write_str(")")
    }
}

/// A factor poset whose named slices can be resolved to ideals.
pub trait SliceFamily {
    fn factor(&self) -> &FinitePoset;

    fn slice_ideal(&self, slice: Slice) -> Result<IdealSet>;

    /// The slice equal to `ideal`, if any.
    fn identify(&self, ideal: &IdealSet) -> Option<Slice>;
}

impl SliceFamily for FinitePoset {
    fn factor(&self) -> &FinitePoset {
        self
    }

    fn slice_ideal(&self, slice: Slice) -> Result<IdealSet> {
        match slice {
            Slice::Level(i) => self.rank_level_ideal(i),
            other => Err(Error::StructureMismatch(format!(
                "{other} is only defined on K-posets"
            ))),
        }
    }

    fn identify(&self, ideal: &IdealSet) -> Option<Slice> {
        self.rank_level_of(ideal).map(Slice::Level)
    }
}

impl SliceFamily for KPoset {
    fn factor(&self) -> &FinitePoset {
        self.poset()
    }

    fn slice_ideal(&self, slice: Slice) -> Result<IdealSet> {
        match slice {
            Slice::Level(i) => self.level(i),
            Slice::Unprimed => Ok(self.unprimed_ideal()),
            Slice::Primed => Ok(self.primed_ideal()),
        }
    }

    fn identify(&self, ideal: &IdealSet) -> Option<Slice> {
        if *ideal == self.unprimed_ideal() {
            Some(Slice::Unprimed)
        } else if *ideal == self.primed_ideal() {
            Some(Slice::Primed)
        } else {
            self.poset().rank_level_of(ideal).map(Slice::Level)
        }
    }
}

fn check_family<F: SliceFamily + ?Sized>(product: &ProductPoset, family: &F) -> Result<()> {
    if product.factor() != family.factor() {
        return Err(Error::StructureMismatch(
            "slice family does not match the product's factor".into(),
        ));
    }
    Ok(())
}

/// Reads off the signature of a product ideal whose rows are all named slices.
pub fn signature_of<F: SliceFamily + ?Sized>(
    product: &ProductPoset,
    family: &F,
    ideal: &IdealSet,
) -> Result<RankSignature> {
    check_family(product, family)?;
    let rows = product.profile(ideal)?;
    let slices = rows
        .iter()
        .enumerate()
        .map(|(k, r)| {
            family.identify(r).ok_or_else(|| {
                Error::StructureMismatch(format!("row {} is not a named slice", k + 1))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RankSignature::from_rows(&slices))
}

/// Assembles the product ideal described by `sig`.
pub fn ideal_of_signature<F: SliceFamily + ?Sized>(
    product: &ProductPoset,
    family: &F,
    sig: &RankSignature,
) -> Result<IdealSet> {
    check_family(product, family)?;
    sig.check_rows(product.rows())?;
    let rows = sig
        .rows()
        .into_iter()
        .map(|s| family.slice_ideal(s))
        .collect::<Result<Vec<_>>>()?;
    product.assemble(&rows)
}

/// Splits off a leading `top` block, returning its multiplicity (possibly 0).
fn split_top(blocks: &[Block], top: usize) -> (usize, &[Block]) {
    match blocks.first() {
        Some(b) if b.slice == Slice::Level(top) => (b.mult, &blocks[1..]),
        _ => (0, blocks),
    }
}

/// `(T_1^{n_0+1}, T_2^{c_1}, .., T_K^{c_{K-1}}, L_0^{c_K - 1})` where
/// `T_k = next(source_k)` and `c_k` is the multiplicity of `source_k`.
fn shift(top_mult: usize, sources: &[Block], next: impl Fn(Slice) -> Slice) -> RankSignature {
    let mut out = Vec::with_capacity(sources.len() + 1);
    let mut carry = top_mult + 1;
    for b in sources {
        out.push((next(b.slice), carry));
        carry = b.mult;
    }
    out.push((Slice::Level(0), carry - 1));
    RankSignature::new(out)
}

fn strictly_decreasing_levels(
    blocks: &[Block],
    lo: usize,
    hi: usize,
    sig: &RankSignature,
) -> Result<()> {
    let mut prev: Option<usize> = None;
    for b in blocks {
        let i = b.slice.level().ok_or_else(|| {
            Error::MalformedSignature(format!("{sig}: unexpected {} block", b.slice))
        })?;
        if i < lo || i > hi {
            return Err(Error::MalformedSignature(format!(
                "{sig}: level {i} outside {lo}..={hi}"
            )));
        }
        if prev.is_some_and(|p| p <= i) {
            return Err(Error::MalformedSignature(format!(
                "{sig}: levels must strictly decrease"
            )));
        }
        prev = Some(i);
    }
    Ok(())
}

/// Rowmotion on a full-rank ideal of `[m] × P`, `P` with `d` rank levels:
///
/// `(L_d^{n_0}, L_{i_1}^{n_1}, .., L_{i_s}^{n_s})
///   ↦ (L_{i_1+1}^{n_0+1}, L_{i_2+1}^{n_1}, .., L_{i_s+1}^{n_{s-1}}, L_0^{n_s-1})`
///
/// with `0 <= i_s < .. < i_1 < d`. The all-`L_d` ideal maps to all-`L_0`.
pub fn rowmotion_product_closed_form(
    sig: &RankSignature,
    d: usize,
    m: usize,
) -> Result<RankSignature> {
    sig.check_rows(m)?;
    strictly_decreasing_levels(&sig.blocks, 0, d, sig)?;
    let (n0, sources) = split_top(&sig.blocks, d);
    if sources.is_empty() {
        return Ok(RankSignature::new([(Slice::Level(0), m)]));
    }
    Ok(shift(n0, sources, |s| match s {
        Slice::Level(i) => Slice::Level(i + 1),
        other => other,
    }))
}

/// Rowmotion on a non-full-rank ideal of `[m] × K_{n-1}`:
///
/// `(L_{2n-1}^{n_0}, L_{i_1}^{n_1}, .., L_{i_s}^{n_s}, I_n^{m_0}, L_{j_1}^{m_1}, .., L_{j_t}^{m_t})`
/// with `0 <= j_t < .. < j_1 < n <= i_s < .. < i_1 < 2n-1` maps to
///
/// * `(L_{i_1+1}^{n_0+1}, .., L_{i_s+1}^{n_{s-1}}, I_{n'}^{n_s}, L_{j_1+1}^{m_0}, .., L_{j_t+1}^{m_{t-1}}, L_0^{m_t-1})`
///   when `j_1 < n-1` (or there are no `L_j` blocks),
/// * `(L_{i_1+1}^{n_0+1}, .., L_{i_s+1}^{n_{s-1}}, L_n^{n_s}, I_n^{m_0}, L_{j_2+1}^{m_1}, .., L_{j_t+1}^{m_{t-1}}, L_0^{m_t-1})`
///   when `j_1 = n-1`.
///
/// Signatures built on `I_{n'}` are handled through the symmetry `n ↔ n'`.
pub fn rowmotion_cmk_closed_form(sig: &RankSignature, n: usize, m: usize) -> Result<RankSignature> {
    if n < 2 {
        return Err(Error::MalformedSignature(format!(
            "K_{{n-1}} needs n >= 2, got {n}"
        )));
    }
    sig.check_rows(m)?;
    let doubled: Vec<usize> = (0..sig.blocks.len())
        .filter(|&k| sig.blocks[k].slice.level().is_none())
        .collect();
    let &[mid] = doubled.as_slice() else {
        return Err(Error::MalformedSignature(format!(
            "{sig}: expected exactly one I_n or I_n' block"
        )));
    };
    if sig.blocks[mid].slice == Slice::Primed {
        return rowmotion_cmk_closed_form(&sig.swapped(), n, m).map(|s| s.swapped());
    }

    let top = 2 * n - 1;
    strictly_decreasing_levels(&sig.blocks[..mid], n, top, sig)?;
    strictly_decreasing_levels(&sig.blocks[mid + 1..], 0, n - 1, sig)?;
    let (n0, sources) = split_top(&sig.blocks, top);
    let lower = &sig.blocks[mid + 1..];

    let first_branch = match lower.first() {
        None => true,
        Some(b) => b.slice.level().expect("checked") < n - 1,
    };
    let image = if first_branch {
        shift(n0, sources, |s| match s {
            Slice::Level(i) => Slice::Level(i + 1),
            Slice::Unprimed => Slice::Primed,
            Slice::Primed => unreachable!("normalized to the unprimed form"),
        })
    } else {
        shift(n0, sources, |s| match s {
            Slice::Level(i) if i == n - 1 => Slice::Unprimed,
            Slice::Level(i) => Slice::Level(i + 1),
            Slice::Unprimed => Slice::Level(n),
            Slice::Primed => unreachable!("normalized to the unprimed form"),
        })
    };
    Ok(image)
}

/// Closed-form rowmotion on any ideal of `[m] × K_{n-1}`, dispatching on
/// whether the signature is full rank.
pub fn rowmotion_k_closed_form(sig: &RankSignature, n: usize, m: usize) -> Result<RankSignature> {
    if sig.is_full_rank() {
        rowmotion_product_closed_form(sig, 2 * n - 1, m)
    } else {
        rowmotion_cmk_closed_form(sig, n, m)
    }
}

/// Type I orbits consist of full-rank ideals, type II of ideals that are not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitType {
    TypeI,
    TypeII,
}

/// Classifies an orbit of `[m] × P`, checking every member. An orbit mixing
/// full-rank and other ideals is reported as an error.
pub fn classify_orbit(orbit: &Orbit, product: &ProductPoset) -> Result<OrbitType> {
    let factor = product.factor();
    if !factor.is_graded() {
        return Err(Error::StructureMismatch(
            "factor poset is not graded".into(),
        ));
    }
    let mut kinds = orbit.ideals().iter().map(|ideal| {
        let rows = product.profile(ideal)?;
        Ok(rows.iter().all(|r| factor.rank_level_of(r).is_some()))
    });
    let first: bool = kinds.next().expect("orbits are nonempty")?;
    for k in kinds {
        if k? != first {
            return Err(Error::StructureMismatch(
                "orbit mixes full-rank and non-full-rank ideals".into(),
            ));
        }
    }
    Ok(if first {
        OrbitType::TypeI
    } else {
        OrbitType::TypeII
    })
}
