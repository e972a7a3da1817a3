//! Rowmotion orbits on `J(P)` and their statistics.
//!
//! The generic operator [`FinitePoset::reverse_operator`] is the source of
//! truth here. The closed-form rules in [`closed_form`] describe the same map
//! on product posets in terms of rank signatures and are checked against it.

pub mod closed_form;

pub use closed_form::{
    classify_orbit, ideal_of_signature, rowmotion_cmk_closed_form, rowmotion_k_closed_form,
    rowmotion_product_closed_form, signature_of, Block, OrbitType, RankSignature, Slice,
    SliceFamily,
};

use crate::error::{Error, Result};
use crate::poset::{FinitePoset, IdealSet};
use std::collections::{HashMap, HashSet};

/// Default bound on the number of steps taken while closing an orbit.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// A rowmotion orbit, listed from its smallest ideal in application order:
/// `reverse_operator(ideals[k]) == ideals[(k + 1) % size]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    ideals: Vec<IdealSet>,
}

impl Orbit {
    pub fn ideals(&self) -> &[IdealSet] {
        &self.ideals
    }

    pub fn size(&self) -> usize {
        self.ideals.len()
    }

    /// Smallest ideal of the orbit in canonical order.
    pub fn representative(&self) -> &IdealSet {
        &self.ideals[0]
    }

    /// `|I|` for each ideal, in orbit order.
    pub fn cardinalities(&self) -> Vec<usize> {
        self.ideals.iter().map(IdealSet::len).collect()
    }

    /// Cardinalities as a sorted multiset.
    pub fn sorted_cardinalities(&self) -> Vec<usize> {
        let mut c = self.cardinalities();
        c.sort_unstable();
        c
    }

    pub fn contains(&self, ideal: &IdealSet) -> bool {
        self.ideals.contains(ideal)
    }
}

/// Number of ideals in `orbit` with exactly `target` elements.
pub fn lagrangian_count(orbit: &Orbit, target: i64) -> usize {
    orbit
        .ideals
        .iter()
        .filter(|i| i.len() as i64 == target)
        .count()
}

/// Applies the reverse operator `k` times.
pub fn iterate(p: &FinitePoset, ideal: &IdealSet, k: usize) -> IdealSet {
    let mut cur = ideal.clone();
    for _ in 0..k {
        cur = p.reverse_operator(&cur);
    }
    cur
}

/// The orbit of `ideal`, closed within `cap` steps.
pub fn orbit_of(p: &FinitePoset, ideal: &IdealSet, cap: usize) -> Result<Orbit> {
    p.ideal(ideal.bits().clone())?;
    let mut seen = HashSet::new();
    let mut ideals = vec![ideal.clone()];
    seen.insert(ideal.clone());
    loop {
        if ideals.len() > cap {
            return Err(Error::OrbitCap { cap });
        }
        let next = p.reverse_operator(ideals.last().expect("nonempty"));
        if next == *ideal {
            break;
        }
        if !seen.insert(next.clone()) {
            // a rho-shaped trajectory means the operator is not a bijection
            return Err(Error::StructureMismatch(
                "reverse operator revisited an ideal before returning to the start".into(),
            ));
        }
        ideals.push(next);
    }
    let start = ideals
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(k, _)| k)
        .expect("nonempty");
    ideals.rotate_left(start);
    Ok(Orbit { ideals })
}

/// Partitions `J(p)` into rowmotion orbits, sorted by representative.
pub fn orbit_decomposition(p: &FinitePoset, cap: usize) -> Result<Vec<Orbit>> {
    let all = p.enumerate_lower_ideals(cap)?;
    let index: HashMap<&IdealSet, usize> = all.iter().enumerate().map(|(k, i)| (i, k)).collect();
    let mut visited = vec![false; all.len()];
    let mut orbits = Vec::new();
    for (k, ideal) in all.iter().enumerate() {
        if visited[k] {
            continue;
        }
        let orbit = orbit_of(p, ideal, cap)?;
        for member in &orbit.ideals {
            let j = *index.get(member).ok_or_else(|| {
                Error::StructureMismatch("orbit left the enumerated ideals".into())
            })?;
            visited[j] = true;
        }
        orbits.push(orbit);
    }
    orbits.sort_by(|a, b| a.representative().cmp(b.representative()));
    Ok(orbits)
}
