use super::FinitePoset;

/// Per-element invariant preserved by any order isomorphism.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Signature {
    depth: usize,
    coheight: usize,
    below: usize,
    above: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn signatures(p: &FinitePoset) -> Vec<Signature> {
    let order = p.linear_extension();
    let mut depth = vec![0usize; p.len()];
    for &x in &order {
        depth[x] = p
            .lower_covers(x)
            .iter()
            .map(|&y| depth[y] + 1)
            .max()
            .unwrap_or(0);
    }
    let mut coheight = vec![0usize; p.len()];
    for &x in order.iter().rev() {
        coheight[x] = p
            .upper_covers(x)
            .iter()
            .map(|&y| coheight[y] + 1)
            .max()
            .unwrap_or(0);
    }
    (0..p.len())
        .map(|x| Signature {
            depth: depth[x],
            coheight: coheight[x],
            below: p.down_set(x).count(),
            above: p.up_set(x).count(),
            lower_covers: p.lower_covers(x).len(),
            upper_covers: p.upper_covers(x).len(),
        })
        .collect()
}

impl FinitePoset {
    /// Finds an order isomorphism `self → other`, returned as the image of
    /// each element of `self`. Candidates are pruned by element invariants
    /// and tried in index order, so the answer is deterministic.
    pub fn is_isomorphic(&self, other: &FinitePoset) -> Option<Vec<usize>> {
        if self.len() != other.len() || self.covers().len() != other.covers().len() {
            return None;
        }
        let sa = signatures(self);
        let sb = signatures(other);
        let mut ma = sa.clone();
        let mut mb = sb.clone();
        ma.sort_unstable();
        mb.sort_unstable();
        if ma != mb {
            return None;
        }

        let order = self.linear_extension();
        let candidates: Vec<Vec<usize>> = (0..self.len())
            .map(|x| (0..other.len()).filter(|&y| sb[y] == sa[x]).collect())
            .collect();
        let mut map = vec![usize::MAX; self.len()];
        let mut used = vec![false; other.len()];
        self.extend_map(other, &order, 0, &candidates, &mut map, &mut used)
            .then_some(map)
    }

    fn extend_map(
        &self,
        other: &FinitePoset,
        order: &[usize],
        pos: usize,
        candidates: &[Vec<usize>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(pos) else {
            return true;
        };
        for &y in &candidates[x] {
            if used[y] {
                continue;
            }
            let consistent = order[..pos].iter().all(|&u| {
                let v = map[u];
                self.leq(u, x) == other.leq(v, y) && self.leq(x, u) == other.leq(y, v)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend_map(other, order, pos + 1, candidates, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }

    /// Checks that `map` is a bijection `self → other` preserving and
    /// reflecting the order.
    pub fn is_order_isomorphism(&self, other: &FinitePoset, map: &[usize]) -> bool {
        if map.len() != self.len() || self.len() != other.len() {
            return false;
        }
        let mut seen = vec![false; other.len()];
        for &y in map {
            if y >= other.len() || std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        (0..self.len())
            .all(|x| (0..self.len()).all(|z| self.leq(x, z) == other.leq(map[x], map[z])))
    }
}
