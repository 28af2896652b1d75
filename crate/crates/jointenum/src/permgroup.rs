//! Permutations on finite labelled point sets, composition in left-to-right
//! order, cycle decomposition, subgroup closure and enumeration of conjugate
//! copies inside the full symmetric group.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on group closure size.
pub const MAX_GROUP: usize = 100_000;
/// Conjugate enumeration walks all of Sym(point set); keep it small.
pub const MAX_CONJUGACY_POINTS: usize = 8;

/// The set permutations act on.  Either plain labels 1..n or the product
/// {1..n} x A^l ordered coordinate-major (i first, then the A^l vector
/// lexicographically with the first row most significant).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PointSet {
    Abstract { n: usize },
    Product { n: usize, m: usize, l: usize },
}

impl PointSet {
    pub fn size(&self) -> usize {
        match self {
            PointSet::Abstract { n } => *n,
            PointSet::Product { n, m, l } => n * m.pow(*l as u32),
        }
    }

    /// Index of the point (i, x) with coordinate i in 1..n and x in A^l.
    pub fn product_index(&self, i: usize, x: &[u8]) -> usize {
        let PointSet::Product { m, l, .. } = self else {
            panic!("product_index on an abstract point set");
        };
        debug_assert_eq!(x.len(), *l);
        let mut y = 0usize;
        for &c in x {
            y = y * m + c as usize;
        }
        (i - 1) * m.pow(*l as u32) + y
    }

    /// Inverse of [`Self::product_index`]: the pair (i, x) at a point index.
    pub fn product_label(&self, idx: usize) -> (usize, Vec<u8>) {
        let PointSet::Product { m, l, .. } = self else {
            panic!("product_label on an abstract point set");
        };
        let block = m.pow(*l as u32);
        let i = idx / block + 1;
        let mut y = idx % block;
        let mut x = vec![0u8; *l];
        for j in (0..*l).rev() {
            x[j] = (y % m) as u8;
            y /= m;
        }
        (i, x)
    }
}

/// A permutation stored as its image array over point indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    points: PointSet,
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(points: PointSet) -> Self {
        Permutation {
            points,
            images: (0..points.size() as u32).collect(),
        }
    }

    pub fn from_images(points: PointSet, images: Vec<u32>) -> Result<Self> {
        if images.len() != points.size() {
            return Err(Error::NotAPermutation);
        }
        let mut seen = vec![false; images.len()];
        for &img in &images {
            let i = img as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Permutation { points, images })
    }

    /// Build from disjoint cycles over 1-based labels, e.g. `&[&[1, 2]]`.
    pub fn from_cycles(points: PointSet, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..points.size() as u32).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                if from >= images.len() || to >= images.len() {
                    return Err(Error::NotAPermutation);
                }
                images[from] = to as u32;
            }
        }
        Self::from_images(points, images)
    }

    pub fn points(&self) -> PointSet {
        self.points
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Product in left-to-right order: (self . other)(x) = other(self(x)).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.points != other.points {
            return Err(Error::PointSetMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|&mid| other.images[mid as usize])
            .collect();
        Ok(Permutation {
            points: self.points,
            images,
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Permutation {
            points: self.points,
            images,
        }
    }

    /// Disjoint cycles, each rotated to start at its least point, sorted by
    /// that point.  Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_counts(&self) -> CycleType {
        let mut counts = BTreeMap::new();
        for cycle in self.cycles() {
            *counts.entry(cycle.len()).or_insert(0) += 1;
        }
        CycleType(counts)
    }

    /// Conjugate by sigma: x -> sigma(self(sigma^-1(x))).
    pub fn conjugate_by(&self, sigma: &Permutation) -> Result<Self> {
        sigma.inverse().compose(self)?.compose(sigma)
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle notation over 1-based labels; identity prints `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if moved.is_empty() {
            return write!(f, "()");
        }
        for cycle in moved {
            write!(f, "(")?;
            for (j, p) in cycle.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Census of disjoint cycles: length -> count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleType(pub BTreeMap<usize, usize>);

impl CycleType {
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        CycleType(pairs.iter().copied().collect())
    }

    pub fn count(&self, len: usize) -> usize {
        self.0.get(&len).copied().unwrap_or(0)
    }

    /// Sum of length x count; always the point-set size.
    pub fn total_points(&self) -> usize {
        self.0.iter().map(|(len, count)| len * count).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&l, &c)| (l, c))
    }
}

/// A permutation group stored by its full, sorted element list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermGroup {
    points: PointSet,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn trivial(points: PointSet) -> Self {
        PermGroup {
            points,
            elements: vec![Permutation::identity(points)],
        }
    }

    /// Smallest group containing the generators, capped at `cap` elements.
    pub fn closure(points: PointSet, generators: &[Permutation], cap: usize) -> Result<Self> {
        for g in generators {
            if g.points() != points {
                return Err(Error::PointSetMismatch);
            }
        }
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut elements = vec![Permutation::identity(points)];
        seen.insert(elements[0].images.to_vec());
        let mut frontier = elements.clone();
        while let Some(p) = frontier.pop() {
            for g in generators {
                let next = p.compose(g)?;
                if seen.insert(next.images.to_vec()) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    elements.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        elements.sort();
        Ok(PermGroup { points, elements })
    }

    /// For element lists already known to form a group (e.g. homomorphic
    /// images of a group); skips the closure check.
    pub(crate) fn from_sorted_unchecked(points: PointSet, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        PermGroup { points, elements }
    }

    /// The group formed by an explicit element list; checks closure.
    pub fn from_elements(points: PointSet, mut elements: Vec<Permutation>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let group = PermGroup { points, elements };
        let set: HashSet<&[u32]> = group.elements.iter().map(|p| p.images()).collect();
        if !set.contains(Permutation::identity(points).images()) {
            return Err(Error::NotAPermutation);
        }
        for a in &group.elements {
            for b in &group.elements {
                if !set.contains(a.compose(b)?.images()) {
                    return Err(Error::NotAPermutation);
                }
            }
        }
        Ok(group)
    }

    pub fn points(&self) -> PointSet {
        self.points
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Number of elements shared with another group on the same point set.
    pub fn intersection_size(&self, other: &PermGroup) -> Result<usize> {
        if self.points != other.points {
            return Err(Error::PointSetMismatch);
        }
        Ok(self.elements.iter().filter(|p| other.contains(p)).count())
    }

    /// Distinct conjugates sigma^-1 G sigma over all sigma in Sym(points),
    /// paired with how many sigma produce each; deterministic order.
    pub fn conjugate_copies(&self) -> Result<Vec<(PermGroup, usize)>> {
        let n = self.points.size();
        if n > MAX_CONJUGACY_POINTS {
            return Err(Error::PointSetTooLarge {
                size: n,
                cap: MAX_CONJUGACY_POINTS,
            });
        }
        let mut copies: BTreeMap<Vec<Vec<u32>>, usize> = BTreeMap::new();
        for images in sym_group_images(n) {
            let sigma = Permutation {
                points: self.points,
                images,
            };
            let mut conj: Vec<Vec<u32>> = self
                .elements
                .iter()
                .map(|g| g.conjugate_by(&sigma).map(|p| p.images))
                .collect::<Result<_>>()?;
            conj.sort();
            *copies.entry(conj).or_insert(0) += 1;
        }
        Ok(copies
            .into_iter()
            .map(|(elements, mult)| {
                let group = PermGroup {
                    points: self.points,
                    elements: elements
                        .into_iter()
                        .map(|images| Permutation {
                            points: self.points,
                            images,
                        })
                        .collect(),
                };
                (group, mult)
            })
            .collect())
    }

    /// The distinct permutation-isomorphic copies of this group within the
    /// symmetric group on its point set (conjugacy under Sym).
    pub fn isomorphic_copies(&self) -> Result<Vec<PermGroup>> {
        Ok(self
            .conjugate_copies()?
            .into_iter()
            .map(|(group, _)| group)
            .collect())
    }
}

/// All image arrays of Sym({0..n-1}) in lexicographic order.
pub fn sym_group_images(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v as u32);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PointSet {
        PointSet::Abstract { n: 3 }
    }

    #[test]
    fn compose_identity_law() {
        let ps = PointSet::Abstract { n: 5 };
        let id = Permutation::identity(ps);
        let g = Permutation::from_cycles(ps, &[&[1, 4, 2]]).unwrap();
        assert_eq!(id.compose(&g).unwrap(), g);
        assert_eq!(g.compose(&id).unwrap(), g);
    }

    #[test]
    fn compose_left_to_right() {
        // (1,2) then (1,2,3): fixes 2, swaps 1 and 3
        let g = Permutation::from_cycles(s3(), &[&[1, 2]]).unwrap();
        let h = Permutation::from_cycles(s3(), &[&[1, 2, 3]]).unwrap();
        let prod = g.compose(&h).unwrap();
        assert_eq!(prod, Permutation::from_cycles(s3(), &[&[1, 3]]).unwrap());
        assert_eq!(
            prod.cycle_counts(),
            CycleType::from_pairs(&[(1, 1), (2, 1)])
        );
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let ps = PointSet::Abstract { n: 6 };
        for cycles in [vec![vec![1, 2, 3], vec![4, 5]], vec![vec![2, 6, 3, 1]]] {
            let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
            let g = Permutation::from_cycles(ps, &refs).unwrap();
            assert!(g.compose(&g.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn cycle_counts_examples() {
        let id4 = Permutation::identity(PointSet::Abstract { n: 4 });
        assert_eq!(id4.cycle_counts(), CycleType::from_pairs(&[(1, 4)]));
        let three = Permutation::from_cycles(s3(), &[&[1, 2, 3]]).unwrap();
        assert_eq!(three.cycle_counts(), CycleType::from_pairs(&[(3, 1)]));
        assert_eq!(three.cycle_counts().total_points(), 3);
    }

    #[test]
    fn closure_examples() {
        let g1 = PermGroup::closure(
            s3(),
            &[Permutation::from_cycles(s3(), &[&[1, 2]]).unwrap()],
            MAX_GROUP,
        )
        .unwrap();
        assert_eq!(g1.order(), 2);
        let g2 = PermGroup::closure(
            s3(),
            &[Permutation::from_cycles(s3(), &[&[1, 3, 2]]).unwrap()],
            MAX_GROUP,
        )
        .unwrap();
        assert_eq!(g2.order(), 3);
        let trivial = PermGroup::closure(s3(), &[], MAX_GROUP).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(trivial.elements()[0].is_identity());
    }

    #[test]
    fn closure_cap_is_enforced() {
        let ps = PointSet::Abstract { n: 5 };
        let g = Permutation::from_cycles(ps, &[&[1, 2, 3, 4, 5]]).unwrap();
        let h = Permutation::from_cycles(ps, &[&[1, 2]]).unwrap();
        assert!(matches!(
            PermGroup::closure(ps, &[g, h], 10),
            Err(Error::GroupTooLarge { cap: 10 })
        ));
    }

    #[test]
    fn isomorphic_copies_of_a_transposition_group() {
        let g = PermGroup::closure(
            s3(),
            &[Permutation::from_cycles(s3(), &[&[1, 2]]).unwrap()],
            MAX_GROUP,
        )
        .unwrap();
        let copies = g.isomorphic_copies().unwrap();
        assert_eq!(copies.len(), 3);
        for pair in [[1usize, 2], [1, 3], [2, 3]] {
            let gen = Permutation::from_cycles(s3(), &[&pair[..]]).unwrap();
            let hits = copies.iter().filter(|c| c.contains(&gen)).count();
            assert_eq!(hits, 1, "generator {gen} not in exactly one copy");
        }
        for copy in &copies {
            assert_eq!(copy.order(), 2);
        }
    }

    #[test]
    fn normal_subgroup_has_one_copy() {
        let g = PermGroup::closure(
            s3(),
            &[Permutation::from_cycles(s3(), &[&[1, 2, 3]]).unwrap()],
            MAX_GROUP,
        )
        .unwrap();
        let copies = g.isomorphic_copies().unwrap();
        assert_eq!(copies.len(), 1);
        assert_eq!(copies[0], g);
        let trivial = PermGroup::trivial(s3());
        assert_eq!(trivial.isomorphic_copies().unwrap(), vec![trivial.clone()]);
    }

    #[test]
    fn copies_preserve_order_and_cycle_types() {
        let ps = PointSet::Abstract { n: 5 };
        let g = PermGroup::closure(
            ps,
            &[Permutation::from_cycles(ps, &[&[1, 2], &[3, 4, 5]]).unwrap()],
            MAX_GROUP,
        )
        .unwrap();
        let mut base: Vec<CycleType> = g.elements().iter().map(|p| p.cycle_counts()).collect();
        base.sort_by_key(|t| format!("{t:?}"));
        for copy in g.isomorphic_copies().unwrap() {
            assert_eq!(copy.order(), g.order());
            let mut types: Vec<CycleType> =
                copy.elements().iter().map(|p| p.cycle_counts()).collect();
            types.sort_by_key(|t| format!("{t:?}"));
            assert_eq!(types, base);
        }
    }

    #[test]
    fn compose_is_associative_on_samples() {
        let ps = PointSet::Abstract { n: 6 };
        let perms = [
            Permutation::from_cycles(ps, &[&[1, 2, 3]]).unwrap(),
            Permutation::from_cycles(ps, &[&[2, 5], &[4, 6]]).unwrap(),
            Permutation::from_cycles(ps, &[&[1, 6, 5, 4, 3, 2]]).unwrap(),
        ];
        for a in &perms {
            for b in &perms {
                for c in &perms {
                    let left = a.compose(b).unwrap().compose(c).unwrap();
                    let right = a.compose(&b.compose(c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn display_cycle_notation() {
        let ps = PointSet::Abstract { n: 4 };
        assert_eq!(Permutation::identity(ps).to_string(), "()");
        let g = Permutation::from_cycles(ps, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(g.to_string(), "(1,2)(3,4)");
    }

    #[test]
    fn product_point_indexing_round_trips() {
        let ps = PointSet::Product { n: 3, m: 4, l: 2 };
        assert_eq!(ps.size(), 48);
        for idx in 0..ps.size() {
            let (i, x) = ps.product_label(idx);
            assert_eq!(ps.product_index(i, &x), idx);
        }
        // coordinate-major order: first block is i = 1
        assert_eq!(ps.product_label(0), (1, vec![0, 0]));
        assert_eq!(ps.product_label(1), (1, vec![0, 1]));
        assert_eq!(ps.product_label(4), (1, vec![1, 0]));
        assert_eq!(ps.product_label(16), (2, vec![0, 0]));
    }

    #[test]
    fn mismatched_point_sets_are_rejected() {
        let a = Permutation::identity(PointSet::Abstract { n: 3 });
        let b = Permutation::identity(PointSet::Abstract { n: 4 });
        assert!(matches!(a.compose(&b), Err(Error::PointSetMismatch)));
    }
}
