use super::FinitePoset;
use crate::bits::Bits;
use crate::error::{Error, Result};

/// Default bound on the number of lower ideals an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// A lower ideal of some [`FinitePoset`], as a bit vector over its
/// canonical element order.
///
/// Values carry no reference to their poset; operations that need the order
/// take the poset explicitly and check the width.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealSet {
    bits: Bits,
}

/// A set of pairwise incomparable elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antichain {
    bits: Bits,
}

impl IdealSet {
    pub(crate) fn from_bits_unchecked(bits: Bits) -> Self {
        IdealSet { bits }
    }

    pub fn empty(width: usize) -> Self {
        IdealSet {
            bits: Bits::empty(width),
        }
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    /// Cardinality `|I|`.
    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }
}

impl std::fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IdealSet({})", self.bits.to_bit_string())
    }
}

impl Antichain {
    pub fn empty(width: usize) -> Self {
        Antichain {
            bits: Bits::empty(width),
        }
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }
}

impl std::fmt::Debug for Antichain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Antichain({})", self.bits.to_bit_string())
    }
}

impl FinitePoset {
    fn check_width(&self, bits: &Bits) -> Result<()> {
        if bits.len() != self.len() {
            return Err(Error::WidthMismatch {
                expected: self.len(),
                found: bits.len(),
            });
        }
        Ok(())
    }

    /// Validates `bits` as a lower ideal.
    pub fn ideal(&self, bits: Bits) -> Result<IdealSet> {
        self.check_width(&bits)?;
        for x in bits.iter() {
            if let Some(&y) = self.lower_covers(x).iter().find(|&&y| !bits.contains(y)) {
                return Err(Error::NotIdeal {
                    present: self.label(x).to_owned(),
                    missing: self.label(y).to_owned(),
                });
            }
        }
        Ok(IdealSet { bits })
    }

    /// Validates an element list as a lower ideal.
    pub fn ideal_from_elements(&self, elems: impl IntoIterator<Item = usize>) -> Result<IdealSet> {
        self.ideal(Bits::from_indices(self.len(), elems))
    }

    /// Lower ideal generated by arbitrary elements.
    pub fn down_closure(&self, elems: impl IntoIterator<Item = usize>) -> IdealSet {
        let mut bits = Bits::empty(self.len());
        for x in elems {
            bits.union_with(self.down_set(x));
        }
        IdealSet { bits }
    }

    pub fn full_ideal(&self) -> IdealSet {
        IdealSet {
            bits: Bits::full(self.len()),
        }
    }

    /// Validates `bits` as an antichain.
    pub fn antichain(&self, bits: Bits) -> Result<Antichain> {
        self.check_width(&bits)?;
        for x in bits.iter() {
            if bits.intersection_count(self.down_set(x)) > 1 {
                let y = bits
                    .iter()
                    .find(|&y| y != x && self.leq(y, x))
                    .expect("comparable element present");
                return Err(Error::NotAntichain(
                    self.label(y).to_owned(),
                    self.label(x).to_owned(),
                ));
            }
        }
        Ok(Antichain { bits })
    }

    pub fn antichain_from_elements(
        &self,
        elems: impl IntoIterator<Item = usize>,
    ) -> Result<Antichain> {
        self.antichain(Bits::from_indices(self.len(), elems))
    }

    /// `I(A)`, the union of the principal ideals below the members of `A`.
    pub fn ideal_of_antichain(&self, a: &Antichain) -> Result<IdealSet> {
        self.antichain(a.bits.clone())?;
        Ok(self.down_closure(a.iter()))
    }

    /// Maximal elements of a lower ideal.
    pub fn antichain_of_ideal(&self, ideal: &IdealSet) -> Result<Antichain> {
        self.ideal(ideal.bits.clone())?;
        Ok(Antichain {
            bits: self.maximal_within(&ideal.bits),
        })
    }

    /// `min(S)` for an arbitrary subset.
    pub fn minimal_within(&self, set: &Bits) -> Bits {
        Bits::from_indices(
            self.len(),
            set.iter()
                .filter(|&x| set.intersection_count(self.down_set(x)) == 1),
        )
    }

    /// `max(S)` for an arbitrary subset.
    pub fn maximal_within(&self, set: &Bits) -> Bits {
        Bits::from_indices(
            self.len(),
            set.iter()
                .filter(|&x| set.intersection_count(self.up_set(x)) == 1),
        )
    }

    /// The reverse operator on antichains: `A ↦ min(P ∖ I(A))`.
    pub fn reverse_antichain(&self, a: &Antichain) -> Antichain {
        let generated = self.down_closure(a.iter());
        Antichain {
            bits: self.minimal_within(&generated.bits.complement()),
        }
    }

    /// The inverse reverse operator on antichains: `A ↦ max(P ∖ I₊(A))`,
    /// where `I₊(A)` is the upper ideal generated by `A`.
    pub fn reverse_antichain_prime(&self, a: &Antichain) -> Antichain {
        let mut upper = Bits::empty(self.len());
        for x in a.iter() {
            upper.union_with(self.up_set(x));
        }
        Antichain {
            bits: self.maximal_within(&upper.complement()),
        }
    }

    /// Rowmotion on lower ideals: the ideal generated by `min(P ∖ I)`.
    /// The full ideal maps to the empty one.
    pub fn reverse_operator(&self, ideal: &IdealSet) -> IdealSet {
        debug_assert_eq!(ideal.width(), self.len());
        let mins = self.minimal_within(&ideal.bits.complement());
        self.down_closure(mins.iter())
    }

    /// Inverse of [`reverse_operator`](Self::reverse_operator), acting through
    /// the antichain of maximal elements of `ideal`.
    pub fn reverse_operator_prime(&self, ideal: &IdealSet) -> IdealSet {
        debug_assert_eq!(ideal.width(), self.len());
        let a = Antichain {
            bits: self.maximal_within(&ideal.bits),
        };
        let image = self.reverse_antichain_prime(&a);
        self.down_closure(image.iter())
    }

    /// Every lower ideal exactly once, sorted by cardinality and then by
    /// membership sequence.
    pub fn enumerate_lower_ideals(&self, cap: usize) -> Result<Vec<IdealSet>> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        let mut current = Bits::empty(self.len());
        self.extend_ideals(&order, 0, &mut current, &mut out, cap)?;
        out.sort_unstable();
        Ok(out.into_iter().map(|bits| IdealSet { bits }).collect())
    }

    // Take/skip each element along a linear extension; an element may be taken
    // only when all of its lower covers are already present.
    fn extend_ideals(
        &self,
        order: &[usize],
        pos: usize,
        current: &mut Bits,
        out: &mut Vec<Bits>,
        cap: usize,
    ) -> Result<()> {
        let Some(&x) = order.get(pos) else {
            if out.len() >= cap {
                return Err(Error::EnumerationCap { cap });
            }
            out.push(current.clone());
            return Ok(());
        };
        self.extend_ideals(order, pos + 1, current, out, cap)?;
        if self.lower_covers(x).iter().all(|&y| current.contains(y)) {
            current.insert(x);
            self.extend_ideals(order, pos + 1, current, out, cap)?;
            current.remove(x);
        }
        Ok(())
    }

    /// Number of lower ideals.
    pub fn count_lower_ideals(&self, cap: usize) -> Result<usize> {
        self.enumerate_lower_ideals(cap).map(|v| v.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain4() -> FinitePoset {
        FinitePoset::chain(4)
    }

    #[test]
    fn antichain_and_ideal_conversions() {
        let p = chain4();
        let a = p.antichain_from_elements([]).unwrap();
        assert!(p.ideal_of_antichain(&a).unwrap().is_empty());

        let a = p.antichain_from_elements([2]).unwrap();
        let i = p.ideal_of_antichain(&a).unwrap();
        assert_eq!(i.iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(p.antichain_of_ideal(&i).unwrap(), a);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let p = chain4();
        assert!(matches!(
            p.antichain_from_elements([0, 2]),
            Err(Error::NotAntichain(_, _))
        ));
        assert!(matches!(
            p.ideal_from_elements([1]),
            Err(Error::NotIdeal { .. })
        ));
        assert!(matches!(
            p.ideal(Bits::empty(3)),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn reverse_operator_on_a_chain() {
        let p = chain4();
        let full = p.full_ideal();
        assert!(p.reverse_operator(&full).is_empty());
        let i12 = p.ideal_from_elements([0, 1]).unwrap();
        let i123 = p.ideal_from_elements([0, 1, 2]).unwrap();
        assert_eq!(p.reverse_operator(&i12), i123);
        assert_eq!(p.reverse_operator_prime(&i123), i12);
        assert_eq!(p.reverse_operator_prime(&IdealSet::empty(4)), full);
    }

    #[test]
    fn reverse_antichain_matches_ideal_form() {
        let p = FinitePoset::product(&FinitePoset::chain(2), &FinitePoset::chain(3));
        for i in p.enumerate_lower_ideals(DEFAULT_ENUMERATION_CAP).unwrap() {
            let a = p.antichain_of_ideal(&i).unwrap();
            let image = p.reverse_antichain(&a);
            assert_eq!(
                p.ideal_of_antichain(&image).unwrap(),
                p.reverse_operator(&i)
            );
            assert_eq!(p.reverse_antichain_prime(&image), a);
        }
    }

    #[test]
    fn enumeration_order_and_cap() {
        let p = FinitePoset::chain(0);
        assert_eq!(
            p.enumerate_lower_ideals(10).unwrap(),
            vec![IdealSet::empty(0)]
        );

        let q = FinitePoset::product(&FinitePoset::chain(2), &FinitePoset::chain(3));
        let all = q.enumerate_lower_ideals(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.windows(2).all(|w| w[0].len() <= w[1].len()));

        assert_eq!(
            q.enumerate_lower_ideals(9).unwrap_err(),
            Error::EnumerationCap { cap: 9 }
        );
    }
}
