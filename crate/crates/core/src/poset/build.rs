use super::{FinitePoset, IdealSet};
use crate::bits::Bits;
use crate::error::{Error, Result};

impl FinitePoset {
    /// The chain `[m] = {1 < 2 < .. < m}`.
    pub fn chain(m: usize) -> Self {
        let labels = (1..=m).map(|i| i.to_string()).collect();
        FinitePoset::from_relations(labels, (1..m).map(|i| (i - 1, i)))
            .expect("a chain is a partial order")
    }

    /// `p ⊔ q`: elements of `p` then elements of `q`, no relations between them.
    pub fn disjoint_union(p: &FinitePoset, q: &FinitePoset) -> Self {
        let off = p.len();
        let labels = p.labels.iter().chain(&q.labels).cloned().collect();
        let rel = p
            .covers
            .iter()
            .copied()
            .chain(q.covers.iter().map(|&(a, b)| (a + off, b + off)));
        FinitePoset::from_relations(labels, rel).expect("disjoint union of posets")
    }

    /// `p ⊕ q`: every element of `p` lies below every element of `q`.
    pub fn ordinal_sum(p: &FinitePoset, q: &FinitePoset) -> Self {
        let off = p.len();
        let labels = p.labels.iter().chain(&q.labels).cloned().collect();
        let bridge = p
            .maximal_elements()
            .into_iter()
            .flat_map(|a| q.minimal_elements().into_iter().map(move |b| (a, b + off)));
        let rel = p
            .covers
            .iter()
            .copied()
            .chain(q.covers.iter().map(|&(a, b)| (a + off, b + off)))
            .chain(bridge);
        FinitePoset::from_relations(labels, rel).expect("ordinal sum of posets")
    }

    /// `p × q` with the componentwise order. Element `(a, b)` sits at index
    /// `a * |q| + b`.
    pub fn product(p: &FinitePoset, q: &FinitePoset) -> Self {
        let w = q.len();
        let labels = p
            .labels
            .iter()
            .flat_map(|a| q.labels.iter().map(move |b| format!("({a},{b})")))
            .collect();
        FinitePoset::from_leq(labels, |x, y| p.leq(x / w, y / w) && q.leq(x % w, y % w))
            .expect("product of posets")
    }
}

/// `K_{n-1} = [n-1] ⊕ ([1] ⊔ [1]) ⊕ [n-1]`: a chain of length `2n-1` whose
/// `n`-th level is doubled into two incomparable elements `n` and `n'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPoset {
    n: usize,
    poset: FinitePoset,
}

impl KPoset {
    /// Builds `K_{n-1}` with labels `1, .., n-1, n, n', n+1, .., 2n-1`.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "K_{{n-1}} needs n >= 2, got n = {n}"
            )));
        }
        let tail = FinitePoset::chain(n - 1);
        let middle = FinitePoset::disjoint_union(&FinitePoset::chain(1), &FinitePoset::chain(1));
        let raw = FinitePoset::ordinal_sum(&FinitePoset::ordinal_sum(&tail, &middle), &tail);
        let labels = (1..=n)
            .map(|i| i.to_string())
            .chain(std::iter::once(format!("{n}'")))
            .chain((n + 1..2 * n).map(|i| i.to_string()))
            .collect();
        Ok(KPoset {
            n,
            poset: raw.relabeled(labels)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// Number of rank levels, `2n - 1`.
    pub fn levels(&self) -> usize {
        2 * self.n - 1
    }

    /// Index of the element labeled `n`.
    pub fn unprimed_element(&self) -> usize {
        self.n - 1
    }

    /// Index of the element labeled `n'`.
    pub fn primed_element(&self) -> usize {
        self.n
    }

    /// `L_i`, `0 <= i <= 2n-1`.
    pub fn level(&self, i: usize) -> Result<IdealSet> {
        self.poset.rank_level_ideal(i)
    }

    /// `I_n = {1, .., n-1, n}`.
    pub fn unprimed_ideal(&self) -> IdealSet {
        self.poset.down_closure([self.unprimed_element()])
    }

    /// `I_{n'} = {1, .., n-1, n'}`.
    pub fn primed_ideal(&self) -> IdealSet {
        self.poset.down_closure([self.primed_element()])
    }
}

/// `[m] × P` together with its factor, so that lower ideals can be split
/// into their row profiles `(I_1, .., I_m)` and reassembled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductPoset {
    m: usize,
    factor: FinitePoset,
    poset: FinitePoset,
}

impl ProductPoset {
    pub fn new(m: usize, factor: FinitePoset) -> Self {
        let poset = FinitePoset::product(&FinitePoset::chain(m), &factor);
        ProductPoset { m, factor, poset }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn factor(&self) -> &FinitePoset {
        &self.factor
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// Splits a lower ideal of `[m] × P` into `(I_1, .., I_m)` with
    /// `I_i = { a | (i, a) ∈ I }`, so `I_m ⊆ .. ⊆ I_1`.
    pub fn profile(&self, ideal: &IdealSet) -> Result<Vec<IdealSet>> {
        self.poset.ideal(ideal.bits().clone())?;
        let w = self.factor.len();
        Ok((0..self.m)
            .map(|row| {
                IdealSet::from_bits_unchecked(Bits::from_indices(
                    w,
                    (0..w).filter(|&a| ideal.contains(row * w + a)),
                ))
            })
            .collect())
    }

    /// Inverse of [`profile`](Self::profile). Rejects rows that are not
    /// ideals of the factor or that fail to be nested.
    pub fn assemble(&self, rows: &[IdealSet]) -> Result<IdealSet> {
        if rows.len() != self.m {
            return Err(Error::WidthMismatch {
                expected: self.m,
                found: rows.len(),
            });
        }
        for r in rows {
            self.factor.ideal(r.bits().clone())?;
        }
        if let Some(k) = rows.windows(2).position(|w| !w[1].is_subset(&w[0])) {
            return Err(Error::StructureMismatch(format!(
                "row {} is not contained in row {}",
                k + 2,
                k + 1
            )));
        }
        let w = self.factor.len();
        let bits = Bits::from_indices(
            self.poset.len(),
            rows.iter()
                .enumerate()
                .flat_map(|(row, r)| r.iter().map(move |a| row * w + a)),
        );
        Ok(IdealSet::from_bits_unchecked(bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::DEFAULT_ENUMERATION_CAP;

    #[test]
    fn chain_zero_has_one_ideal() {
        let p = FinitePoset::chain(0);
        assert!(p.is_empty());
        assert_eq!(p.count_lower_ideals(DEFAULT_ENUMERATION_CAP).unwrap(), 1);
    }

    #[test]
    fn product_of_small_chains() {
        let p = FinitePoset::product(&FinitePoset::chain(2), &FinitePoset::chain(3));
        assert_eq!(p.len(), 6);
        assert_eq!(p.count_lower_ideals(DEFAULT_ENUMERATION_CAP).unwrap(), 10);
        assert_eq!(p.label(4), "(2,2)");
        assert_eq!(p.rank_levels(), Some(4));
    }

    #[test]
    fn k3_labels_and_single_incomparable_pair() {
        let k = KPoset::new(4).unwrap();
        let p = k.poset();
        assert_eq!(p.labels(), &["1", "2", "3", "4", "4'", "5", "6", "7"]);
        let incomparable: Vec<_> = (0..p.len())
            .flat_map(|x| (x + 1..p.len()).map(move |y| (x, y)))
            .filter(|&(x, y)| !p.comparable(x, y))
            .collect();
        assert_eq!(incomparable, vec![(3, 4)]);
        assert_eq!(k.levels(), 7);
        assert_eq!(
            k.level(4).unwrap().iter().collect::<Vec<_>>(),
            vec![0, 1, 2, 3, 4]
        );
        assert_eq!(
            k.unprimed_ideal().iter().collect::<Vec<_>>(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            k.primed_ideal().iter().collect::<Vec<_>>(),
            vec![0, 1, 2, 4]
        );
    }

    #[test]
    fn k1_is_a_diamond() {
        let k = KPoset::new(2).unwrap();
        let p = k.poset();
        assert_eq!(p.labels(), &["1", "2", "2'", "3"]);
        assert_eq!(p.covers(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(KPoset::new(1).is_err());
    }

    #[test]
    fn antichain_of_doubled_level_generates_l_n() {
        let k = KPoset::new(4).unwrap();
        let p = k.poset();
        let a = p.antichain_from_elements([3, 4]).unwrap();
        assert_eq!(p.ideal_of_antichain(&a).unwrap(), k.level(4).unwrap());
    }

    #[test]
    fn profile_of_small_product() {
        let pp = ProductPoset::new(2, FinitePoset::chain(3));
        let c = pp.factor();
        let ideal = pp.poset().ideal_from_elements([0, 1, 2, 3]).unwrap();
        let rows = pp.profile(&ideal).unwrap();
        assert_eq!(
            rows,
            vec![
                c.rank_level_ideal(3).unwrap(),
                c.rank_level_ideal(1).unwrap()
            ]
        );
        assert_eq!(pp.assemble(&rows).unwrap(), ideal);

        let empty = IdealSet::empty(6);
        assert_eq!(pp.profile(&empty).unwrap(), vec![IdealSet::empty(3); 2]);
        let full = pp.poset().full_ideal();
        assert_eq!(pp.profile(&full).unwrap(), vec![c.full_ideal(); 2]);
    }

    #[test]
    fn assemble_rejects_unnested_rows() {
        let pp = ProductPoset::new(2, FinitePoset::chain(3));
        let c = pp.factor();
        let rows = [
            c.rank_level_ideal(1).unwrap(),
            c.rank_level_ideal(2).unwrap(),
        ];
        assert!(matches!(
            pp.assemble(&rows),
            Err(Error::StructureMismatch(_))
        ));
        assert!(pp.profile(&IdealSet::empty(5)).is_err());
    }
}
