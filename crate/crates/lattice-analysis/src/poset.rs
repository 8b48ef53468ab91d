use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet, VecDeque};
use std::hash::Hash;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use thiserror::Error;

/// An explicit finite poset: element table, covering edges, and a bottom
/// element that reaches everything.
///
/// Elements are kept in a topological order of the covering relation, so
/// every cover `(i, j)` satisfies `i < j` and the bottom sits at index 0.
/// The reachability closures (up-sets and down-sets) are computed once on
/// first use and shared by all analyses.
#[derive(Debug, Clone)]
pub struct Poset<E> {
    elements: Vec<E>,
    covers: Vec<(usize, usize)>,
    up: OnceLock<Vec<FixedBitSet>>,
    down: OnceLock<Vec<FixedBitSet>>,
}

/// Element and covering-edge cardinalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PosetStats {
    pub elements: usize,
    pub covers: usize,
}

/// Lengths, in covering edges, of a shortest and a longest saturated chain
/// from the bottom to the unique maximal element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainExtrema {
    pub shortest_edges: usize,
    pub longest_edges: usize,
}

/// Structural errors raised when assembling or analysing a poset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("a poset needs at least its bottom element")]
    Empty,
    #[error("bottom index {bottom} out of range for {elements} element(s)")]
    BottomOutOfRange { bottom: usize, elements: usize },
    #[error("cover ({low}, {high}) mentions an index out of range")]
    CoverOutOfRange { low: usize, high: usize },
    #[error("elements at indices {first} and {second} are equal")]
    DuplicateElement { first: usize, second: usize },
    #[error("the covering relation has a cycle")]
    Cycle,
    #[error("{count} element(s) unreachable from the bottom")]
    Unrooted { count: usize },
    #[error("expected a unique maximal element, found {count}")]
    MultipleMaximalElements { count: usize },
    #[error("malformed poset document: {0}")]
    InvalidDocument(String),
}

impl<E> Poset<E> {
    /// Assembles a poset from raw parts, reindexing the elements
    /// topologically. Rejects duplicate elements, cycles, out-of-range
    /// indices, and elements unreachable from the bottom.
    pub fn new(
        elements: Vec<E>,
        covers: impl IntoIterator<Item = (usize, usize)>,
        bottom: usize,
    ) -> Result<Poset<E>, PosetError>
    where
        E: Eq + Hash,
    {
        let n = elements.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if bottom >= n {
            return Err(PosetError::BottomOutOfRange {
                bottom,
                elements: n,
            });
        }
        {
            let mut seen: HashMap<&E, usize> = HashMap::with_capacity(n);
            for (i, e) in elements.iter().enumerate() {
                if let Some(&first) = seen.get(e) {
                    return Err(PosetError::DuplicateElement { first, second: i });
                }
                seen.insert(e, i);
            }
        }
        let mut raw: Vec<(usize, usize)> = covers.into_iter().collect();
        raw.sort_unstable();
        raw.dedup();
        for &(low, high) in &raw {
            if low >= n || high >= n {
                return Err(PosetError::CoverOutOfRange { low, high });
            }
            if low == high {
                return Err(PosetError::Cycle);
            }
        }

        // Kahn's algorithm; always taking the smallest ready index keeps
        // the final order deterministic.
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(low, high) in &raw {
            out[low].push(high);
            indegree[high] += 1;
        }
        let mut ready: BinaryHeap<Reverse<usize>> = (0..n)
            .filter(|&i| indegree[i] == 0)
            .map(Reverse)
            .collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(i)) = ready.pop() {
            order.push(i);
            for &j in &out[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(Reverse(j));
                }
            }
        }
        if order.len() < n {
            return Err(PosetError::Cycle);
        }
        let mut new_index = vec![0usize; n];
        for (pos, &old) in order.iter().enumerate() {
            new_index[old] = pos;
        }

        let mut slots: Vec<Option<E>> = elements.into_iter().map(Some).collect();
        let reordered: Vec<E> = order
            .iter()
            .map(|&old| slots[old].take().expect("each slot moved once"))
            .collect();
        let mut covers: Vec<(usize, usize)> = raw
            .iter()
            .map(|&(low, high)| (new_index[low], new_index[high]))
            .collect();
        covers.sort_unstable();
        let bottom = new_index[bottom];

        // Everything must sit above the bottom.
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(bottom);
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(low, high) in &covers {
            out[low].push(high);
        }
        let mut queue = VecDeque::from([bottom]);
        while let Some(i) = queue.pop_front() {
            for &j in &out[i] {
                if !seen.contains(j) {
                    seen.insert(j);
                    queue.push_back(j);
                }
            }
        }
        let unreachable = n - seen.count_ones(..);
        if unreachable > 0 {
            return Err(PosetError::Unrooted { count: unreachable });
        }
        debug_assert_eq!(bottom, 0, "topological order places the root first");

        Ok(Poset {
            elements: reordered,
            covers,
            up: OnceLock::new(),
            down: OnceLock::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The elements, in topological order of the covering relation.
    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    /// The covering edges as `(lower, higher)` index pairs, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Index of the bottom element (always 0 in the topological order).
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the given element, by structural equality.
    pub fn index_of(&self, element: &E) -> Option<usize>
    where
        E: PartialEq,
    {
        self.elements.iter().position(|e| e == element)
    }

    /// Element and cover counts.
    pub fn stats(&self) -> PosetStats {
        PosetStats {
            elements: self.elements.len(),
            covers: self.covers.len(),
        }
    }

    fn up_sets(&self) -> &[FixedBitSet] {
        self.up.get_or_init(|| {
            let n = self.len();
            let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
            for &(low, high) in &self.covers {
                out[low].push(high);
            }
            let mut up = vec![FixedBitSet::with_capacity(n); n];
            for i in (0..n).rev() {
                let mut set = FixedBitSet::with_capacity(n);
                set.insert(i);
                for &j in &out[i] {
                    set.union_with(&up[j]);
                }
                up[i] = set;
            }
            up
        })
    }

    fn down_sets(&self) -> &[FixedBitSet] {
        self.down.get_or_init(|| {
            let n = self.len();
            let mut into: Vec<Vec<usize>> = vec![Vec::new(); n];
            for &(low, high) in &self.covers {
                into[high].push(low);
            }
            let mut down = vec![FixedBitSet::with_capacity(n); n];
            for i in 0..n {
                let mut set = FixedBitSet::with_capacity(n);
                set.insert(i);
                for &j in &into[i] {
                    set.union_with(&down[j]);
                }
                down[i] = set;
            }
            down
        })
    }

    /// Whether `low <= high` in the order generated by the covers.
    pub fn leq(&self, low: usize, high: usize) -> bool {
        self.up_sets()[low].contains(high)
    }

    /// Number of ordered pairs `(x, y)` with `x <= y`, reflexive pairs
    /// included.
    pub fn count_intervals(&self) -> BigUint {
        let total: u128 = self
            .up_sets()
            .iter()
            .map(|set| set.count_ones(..) as u128)
            .sum();
        BigUint::from(total)
    }

    /// Indices of elements with no strict successor.
    pub fn maximal_elements(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.len()];
        for &(low, _) in &self.covers {
            has_out[low] = true;
        }
        (0..self.len()).filter(|&i| !has_out[i]).collect()
    }

    /// Shortest and longest saturated chain, in covering edges, from the
    /// bottom to the unique maximal element. Errors when the maximal
    /// element is not unique.
    pub fn chain_extrema(&self) -> Result<ChainExtrema, PosetError> {
        let maximal = self.maximal_elements();
        let &top = match maximal.as_slice() {
            [top] => top,
            _ => {
                return Err(PosetError::MultipleMaximalElements {
                    count: maximal.len(),
                })
            }
        };
        let n = self.len();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(low, high) in &self.covers {
            out[low].push(high);
        }
        // Shortest: plain breadth-first distance from the bottom.
        let mut dist = vec![usize::MAX; n];
        dist[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &j in &out[i] {
                if dist[j] == usize::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        // Longest: dynamic programming along the topological index order.
        let mut longest = vec![0usize; n];
        for &(low, high) in &self.covers {
            longest[high] = longest[high].max(longest[low] + 1);
        }
        Ok(ChainExtrema {
            shortest_edges: dist[top],
            longest_edges: longest[top],
        })
    }

    /// Least upper bound of two elements, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let up = self.up_sets();
        let mut common = up[a].clone();
        common.intersect_with(&up[b]);
        // The lowest topological index in the common up-set is a minimal
        // common upper bound; it is the join exactly when it sits below
        // every other common upper bound.
        let candidate = common.ones().next()?;
        common.is_subset(&up[candidate]).then_some(candidate)
    }

    /// Greatest lower bound of two elements, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let down = self.down_sets();
        let mut common = down[a].clone();
        common.intersect_with(&down[b]);
        let candidate = common.ones().max()?;
        common.is_subset(&down[candidate]).then_some(candidate)
    }

    /// Whether every pair of elements has both a least upper bound and a
    /// greatest lower bound.
    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        let up = self.up_sets();
        let down = self.down_sets();
        let mut common = FixedBitSet::with_capacity(n);
        for a in 0..n {
            for b in (a + 1)..n {
                common.clone_from(&up[a]);
                common.intersect_with(&up[b]);
                let Some(c) = common.ones().next() else {
                    return false;
                };
                if !common.is_subset(&up[c]) {
                    return false;
                }
                common.clone_from(&down[a]);
                common.intersect_with(&down[b]);
                let Some(c) = common.ones().max() else {
                    return false;
                };
                if !common.is_subset(&down[c]) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether no covering edge is implied by a longer path, i.e. the
    /// covers are their own transitive reduction.
    pub fn transitive_reduction_check(&self) -> bool {
        let n = self.len();
        let up = self.up_sets();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(low, high) in &self.covers {
            out[low].push(high);
        }
        self.covers.iter().all(|&(low, high)| {
            out[low]
                .iter()
                .all(|&mid| mid == high || !up[mid].contains(high))
        })
    }

    /// Per-element count of covering edges arriving at it.
    pub fn cover_indegrees(&self) -> Vec<usize> {
        let mut indegree = vec![0usize; self.len()];
        for &(_, high) in &self.covers {
            indegree[high] += 1;
        }
        indegree
    }

    /// Per-element count of elements below or equal to it.
    pub fn interval_sizes(&self) -> Vec<usize> {
        self.down_sets()
            .iter()
            .map(|set| set.count_ones(..))
            .collect()
    }
}

impl<E: PartialEq> PartialEq for Poset<E> {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.covers == other.covers
    }
}

impl<E: Eq> Eq for Poset<E> {}

/// Materialises the part of a relation reachable from `bottom`, with the
/// one-step pairs as covering edges.
///
/// `successors` must be deterministic and must generate a finite, acyclic
/// closure; a cycle surfaces as [`PosetError::Cycle`]. Strict successor
/// relations of rooted rewrite systems fit this shape directly.
pub fn poset_from_successors<E, F, I>(bottom: E, mut successors: F) -> Result<Poset<E>, PosetError>
where
    E: Clone + Eq + Hash,
    F: FnMut(&E) -> I,
    I: IntoIterator<Item = E>,
{
    let mut index: HashMap<E, usize> = HashMap::new();
    index.insert(bottom.clone(), 0);
    let mut elements = vec![bottom];
    let mut covers = Vec::new();
    let mut cursor = 0;
    while cursor < elements.len() {
        let current = elements[cursor].clone();
        for next in successors(&current) {
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    let j = elements.len();
                    elements.push(next.clone());
                    index.insert(next, j);
                    j
                }
            };
            covers.push((cursor, j));
        }
        cursor += 1;
    }
    Poset::new(elements, covers, 0)
}

/// Whether `map` realises an isomorphism from `p` onto `q`: a bijection of
/// element sets carrying the covering edges of `p` exactly onto those of
/// `q` and the bottom onto the bottom.
pub fn is_isomorphic_by<A, B, F>(p: &Poset<A>, q: &Poset<B>, mut map: F) -> bool
where
    B: Eq + Hash,
    F: FnMut(&A) -> B,
{
    if p.len() != q.len() {
        return false;
    }
    let target_index: HashMap<&B, usize> = q
        .elements()
        .iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let mut image = Vec::with_capacity(p.len());
    let mut hit = vec![false; q.len()];
    for e in p.elements() {
        let mapped = map(e);
        let Some(&j) = target_index.get(&mapped) else {
            return false;
        };
        if hit[j] {
            return false;
        }
        hit[j] = true;
        image.push(j);
    }
    if image[p.bottom()] != q.bottom() {
        return false;
    }
    let mapped_covers: HashSet<(usize, usize)> = p
        .covers()
        .iter()
        .map(|&(low, high)| (image[low], image[high]))
        .collect();
    if mapped_covers.len() != q.covers().len() {
        return false;
    }
    q.covers().iter().all(|pair| mapped_covers.contains(pair))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset<usize> {
        Poset::new((0..n).collect(), (1..n).map(|i| (i - 1, i)), 0).unwrap()
    }

    #[test]
    fn singleton_statistics() {
        let p = Poset::new(vec![7usize], [], 0).unwrap();
        assert_eq!(p.stats(), PosetStats { elements: 1, covers: 0 });
        assert_eq!(p.count_intervals(), BigUint::from(1u32));
        assert_eq!(
            p.chain_extrema().unwrap(),
            ChainExtrema { shortest_edges: 0, longest_edges: 0 }
        );
        assert!(p.is_lattice());
        assert!(p.transitive_reduction_check());
    }

    #[test]
    fn two_element_chain_has_three_intervals() {
        let p = chain(2);
        assert_eq!(p.count_intervals(), BigUint::from(3u32));
        assert!(p.is_lattice());
    }

    #[test]
    fn any_chain_is_a_lattice() {
        for n in 1..7 {
            assert!(chain(n).is_lattice());
        }
    }

    #[test]
    fn triangle_fails_transitive_reduction() {
        let p = Poset::new(vec![0usize, 1, 2], [(0, 1), (1, 2), (0, 2)], 0).unwrap();
        assert!(!p.transitive_reduction_check());
        // Still a total order, hence still a lattice.
        assert!(p.is_lattice());
    }

    #[test]
    fn diamond_joins_and_meets() {
        let p = Poset::new(
            vec!["a", "b", "c", "d"],
            [(0, 1), (0, 2), (1, 3), (2, 3)],
            0,
        )
        .unwrap();
        let (b, c) = (1, 2);
        assert_eq!(p.join(b, c), Some(3));
        assert_eq!(p.meet(b, c), Some(0));
        assert!(p.is_lattice());
        assert_eq!(p.count_intervals(), BigUint::from(9u32));
        assert_eq!(p.interval_sizes(), vec![1, 2, 2, 4]);
        assert_eq!(p.cover_indegrees(), vec![0, 1, 1, 2]);
    }

    #[test]
    fn incomparable_upper_bounds_break_the_lattice_property() {
        // bottom below x and y, both below the incomparable u and v.
        let p = Poset::new(
            vec!["bot", "x", "y", "u", "v"],
            [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
            0,
        )
        .unwrap();
        assert_eq!(p.join(1, 2), None);
        assert!(!p.is_lattice());
        assert!(matches!(
            p.chain_extrema(),
            Err(PosetError::MultipleMaximalElements { count: 2 })
        ));
    }

    #[test]
    fn construction_rejects_structural_defects() {
        assert!(matches!(
            Poset::<usize>::new(vec![], [], 0),
            Err(PosetError::Empty)
        ));
        assert!(matches!(
            Poset::new(vec![1usize, 1], [(0, 1)], 0),
            Err(PosetError::DuplicateElement { .. })
        ));
        assert!(matches!(
            Poset::new(vec![0usize, 1], [(0, 1), (1, 0)], 0),
            Err(PosetError::Cycle)
        ));
        assert!(matches!(
            Poset::new(vec![0usize, 1, 2], [(0, 1)], 0),
            Err(PosetError::Unrooted { count: 1 })
        ));
        assert!(matches!(
            Poset::new(vec![0usize, 1], [(0, 5)], 0),
            Err(PosetError::CoverOutOfRange { .. })
        ));
    }

    #[test]
    fn reindexing_is_topological_and_keeps_labels() {
        // Feed the diamond in scrambled index order.
        let p = Poset::new(
            vec!["d", "b", "a", "c"],
            [(2, 1), (2, 3), (1, 0), (3, 0)],
            2,
        )
        .unwrap();
        assert_eq!(p.elements()[0], "a");
        assert_eq!(p.elements()[3], "d");
        for &(low, high) in p.covers() {
            assert!(low < high);
        }
    }

    #[test]
    fn successor_closure_builds_the_divisor_diamond() {
        // Divisors of 6 ordered by divisibility, generated from 1.
        let p = poset_from_successors(1u32, |&n| match n {
            1 => vec![2, 3],
            2 | 3 => vec![6],
            _ => vec![],
        })
        .unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.is_lattice());
    }

    #[test]
    fn isomorphism_check_requires_cover_preservation() {
        let p = chain(3);
        let q = Poset::new(vec![10usize, 11, 12], [(0, 1), (1, 2)], 0).unwrap();
        assert!(is_isomorphic_by(&p, &q, |&e| e + 10));
        // A bijection that scrambles the order is rejected.
        assert!(!is_isomorphic_by(&p, &q, |&e| 12 - e));
        // Non-bijective maps are rejected.
        assert!(!is_isomorphic_by(&p, &q, |_| 10));
    }
}
