//! Exact minimum hitting set and maximum set packing over small set systems.
//!
//! Both searches first drop every set that strictly contains (or repeats)
//! another: hitting a subset hits its supersets, and a packing stays a
//! packing when a member is swapped for a subset. Optimal values are found
//! by iterative deepening; witnesses are then fixed element by element to
//! obtain the lexicographically least optimum.

use fixedbitset::FixedBitSet;

#[derive(Debug, Clone)]
pub struct SetFamily {
    universe: usize,
    sets: Vec<FixedBitSet>,
}

impl SetFamily {
    pub fn new<I, S>(universe: usize, sets: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        let sets = sets
            .into_iter()
            .map(|s| {
                let mut b = FixedBitSet::with_capacity(universe);
                for x in s {
                    b.insert(x);
                }
                b
            })
            .collect();
        SetFamily { universe, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Indices of inclusion-minimal sets; among equal sets the first is kept.
    pub fn minimal_indices(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.sets.len()).collect();
        order.sort_by_key(|&i| (self.sets[i].count_ones(..), i));
        let mut kept: Vec<usize> = Vec::new();
        for i in order {
            if !kept.iter().any(|&j| self.sets[j].is_subset(&self.sets[i])) {
                kept.push(i);
            }
        }
        kept.sort_unstable();
        kept
    }

    /// Lexicographically least minimum hitting set, or `None` when some
    /// member is empty.
    pub fn min_hitting_set(&self) -> Option<Vec<usize>> {
        if self.sets.iter().any(|s| s.count_ones(..) == 0) {
            return None;
        }
        let keep = self.minimal_indices();
        let sets: Vec<FixedBitSet> = keep.iter().map(|&i| self.sets[i].clone()).collect();
        let search = Search {
            sets: &sets,
            universe: self.universe,
        };
        let all: Vec<usize> = (0..sets.len()).collect();
        let full = full_set(self.universe);
        let mut k = search.disjoint_lower_bound(&all, &full);
        while search.hit_within(&all, &full, k).is_none() {
            k += 1;
        }
        let mut chosen = Vec::with_capacity(k);
        let mut active = all;
        let mut next_min = 0;
        for placed in 0..k {
            let pick = (next_min..self.universe).find_map(|e| {
                if !active.iter().any(|&i| sets[i].contains(e)) {
                    return None;
                }
                let rest: Vec<usize> = active
                    .iter()
                    .copied()
                    .filter(|&i| !sets[i].contains(e))
                    .collect();
                let mut allowed = FixedBitSet::with_capacity(self.universe);
                allowed.insert_range(e + 1..);
                search
                    .hit_within(&rest, &allowed, k - placed - 1)
                    .map(|_| (e, rest))
            });
            let (e, rest) = pick.expect("an optimum extends the current prefix");
            chosen.push(e);
            active = rest;
            next_min = e + 1;
        }
        debug_assert!(active.is_empty());
        Some(chosen)
    }

    /// Lexicographically least maximum family of pairwise disjoint members,
    /// as indices into this family.
    pub fn max_packing(&self) -> Vec<usize> {
        let keep: Vec<usize> = self
            .minimal_indices()
            .into_iter()
            .filter(|&i| self.sets[i].count_ones(..) > 0)
            .collect();
        let empties: Vec<usize> = (0..self.sets.len())
            .filter(|&i| self.sets[i].count_ones(..) == 0)
            .collect();
        // Empty sets are disjoint from everything, including each other.
        let sets: Vec<FixedBitSet> = keep.iter().map(|&i| self.sets[i].clone()).collect();
        let search = Search {
            sets: &sets,
            universe: self.universe,
        };
        let all: Vec<usize> = (0..sets.len()).collect();
        let mut k = search.greedy_packing(&all).len();
        while search.pack_at_least(&all, k + 1).is_some() {
            k += 1;
        }
        let mut chosen = Vec::with_capacity(k);
        let mut cand = all;
        for placed in 0..k {
            let pick = cand.iter().enumerate().find_map(|(pos, &i)| {
                let rest: Vec<usize> = cand[pos + 1..]
                    .iter()
                    .copied()
                    .filter(|&j| sets[j].is_disjoint(&sets[i]))
                    .collect();
                search
                    .pack_at_least(&rest, k - placed - 1)
                    .map(|_| (i, rest))
            });
            let (i, rest) = pick.expect("an optimum extends the current prefix");
            chosen.push(i);
            cand = rest;
        }
        let mut out: Vec<usize> = chosen.into_iter().map(|i| keep[i]).collect();
        out.extend(empties);
        out.sort_unstable();
        out
    }
}

fn full_set(universe: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(universe);
    b.insert_range(..);
    b
}

struct Search<'a> {
    sets: &'a [FixedBitSet],
    universe: usize,
}

impl Search<'_> {
    fn effective(&self, i: usize, allowed: &FixedBitSet) -> FixedBitSet {
        let mut s = self.sets[i].clone();
        s.intersect_with(allowed);
        s
    }

    /// Size of a greedily built family of disjoint effective sets.
    fn disjoint_lower_bound(&self, active: &[usize], allowed: &FixedBitSet) -> usize {
        let mut eff: Vec<FixedBitSet> = active.iter().map(|&i| self.effective(i, allowed)).collect();
        eff.sort_by_key(|s| s.count_ones(..));
        let mut used = FixedBitSet::with_capacity(self.universe);
        let mut count = 0;
        for s in eff {
            if s.is_disjoint(&used) {
                used.union_with(&s);
                count += 1;
            }
        }
        count
    }

    /// Some hitting set of the `active` sets with at most `k` elements drawn
    /// from `allowed`.
    fn hit_within(&self, active: &[usize], allowed: &FixedBitSet, k: usize) -> Option<Vec<usize>> {
        if active.is_empty() {
            return Some(Vec::new());
        }
        if k == 0 {
            return None;
        }
        let mut branch: Option<FixedBitSet> = None;
        let mut branch_size = usize::MAX;
        for &i in active {
            let eff = self.effective(i, allowed);
            let size = eff.count_ones(..);
            if size == 0 {
                return None;
            }
            if size < branch_size {
                branch_size = size;
                branch = Some(eff);
            }
        }
        if self.disjoint_lower_bound(active, allowed) > k {
            return None;
        }
        let branch = branch.expect("active is non-empty");
        let mut allowed = allowed.clone();
        for e in branch.ones() {
            let rest: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&i| !self.sets[i].contains(e))
                .collect();
            if let Some(mut found) = self.hit_within(&rest, &allowed, k - 1) {
                found.push(e);
                found.sort_unstable();
                return Some(found);
            }
            allowed.set(e, false);
        }
        None
    }

    fn greedy_packing(&self, cand: &[usize]) -> Vec<usize> {
        let mut order = cand.to_vec();
        order.sort_by_key(|&i| (self.sets[i].count_ones(..), i));
        let mut used = FixedBitSet::with_capacity(self.universe);
        let mut out = Vec::new();
        for i in order {
            if self.sets[i].is_disjoint(&used) {
                used.union_with(&self.sets[i]);
                out.push(i);
            }
        }
        out
    }

    /// Size of a greedy hitting set: an upper bound on any packing.
    fn greedy_hitting_bound(&self, cand: &[usize]) -> usize {
        let mut left: Vec<usize> = cand.to_vec();
        let mut count = 0;
        let mut freq = vec![0usize; self.universe];
        while !left.is_empty() {
            freq.iter_mut().for_each(|f| *f = 0);
            for &i in &left {
                for e in self.sets[i].ones() {
                    freq[e] += 1;
                }
            }
            let e = (0..self.universe).max_by_key(|&e| (freq[e], std::cmp::Reverse(e))).unwrap();
            left.retain(|&i| !self.sets[i].contains(e));
            count += 1;
        }
        count
    }

    /// Some `k` pairwise disjoint sets among `cand`.
    fn pack_at_least(&self, cand: &[usize], k: usize) -> Option<Vec<usize>> {
        if k == 0 {
            return Some(Vec::new());
        }
        if cand.len() < k {
            return None;
        }
        let greedy = self.greedy_packing(cand);
        if greedy.len() >= k {
            return Some(greedy[..k].to_vec());
        }
        if self.greedy_hitting_bound(cand) < k {
            return None;
        }
        // Branch on the rarest element: some member covers it, or none does.
        let mut freq = vec![0usize; self.universe];
        for &i in cand {
            for e in self.sets[i].ones() {
                freq[e] += 1;
            }
        }
        let e = (0..self.universe)
            .filter(|&e| freq[e] > 0)
            .min_by_key(|&e| (freq[e], e))
            .expect("non-empty sets");
        for &i in cand.iter().filter(|&&i| self.sets[i].contains(e)) {
            let rest: Vec<usize> = cand
                .iter()
                .copied()
                .filter(|&j| j != i && self.sets[j].is_disjoint(&self.sets[i]))
                .collect();
            if let Some(mut found) = self.pack_at_least(&rest, k - 1) {
                found.push(i);
                return Some(found);
            }
        }
        let rest: Vec<usize> = cand
            .iter()
            .copied()
            .filter(|&j| !self.sets[j].contains(e))
            .collect();
        self.pack_at_least(&rest, k)
    }
}
