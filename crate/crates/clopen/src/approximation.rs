//! Approximation spaces: a universe carved into equivalence classes, with
//! the upper and lower approximation operators that carving induces.

use crate::error::{Error, Result};
use crate::operators::FiniteTopology;
use crate::sets::{Subset, Universe};
use std::fmt;

/// Largest number of blocks for which [`ApproximationSpace::clopen_topology`]
/// will materialize the full family of opens.
pub const MAX_TOPOLOGY_BLOCKS: u32 = 16;

/// A partition of a universe into nonempty, pairwise disjoint blocks that
/// cover it. Equivalently, an equivalence relation.
///
/// Blocks are kept sorted by their least element, so two equal partitions
/// are structurally identical regardless of construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    universe: Universe,
    blocks: Vec<Subset>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Builds a partition from blocks of element names.
    pub fn from_blocks<I, B, S>(universe: &Universe, blocks: I) -> Result<Partition>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut subsets = Vec::new();
        for block in blocks {
            subsets.push(Subset::from_names(universe, block)?);
        }
        Partition::from_subsets(universe, subsets)
    }

    /// Builds a partition from blocks given as subsets.
    pub fn from_subsets(universe: &Universe, blocks: Vec<Subset>) -> Result<Partition> {
        let mut block_of = vec![usize::MAX; universe.len()];
        for block in &blocks {
            if block.universe() != universe {
                return Err(Error::UniverseMismatch(
                    "block from a different universe".to_string(),
                ));
            }
            if block.is_empty() {
                return Err(Error::invalid("partition", "empty block"));
            }
            for i in block.iter_indices() {
                if block_of[i] != usize::MAX {
                    return Err(Error::invalid(
                        "partition",
                        format!("element `{}` appears in two blocks", universe.name(i)),
                    ));
                }
                block_of[i] = 0;
            }
        }
        if let Some(i) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::invalid(
                "partition",
                format!("element `{}` is in no block", universe.name(i)),
            ));
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|b| b.iter_indices().next().unwrap_or(usize::MAX));
        for (bi, block) in blocks.iter().enumerate() {
            for i in block.iter_indices() {
                block_of[i] = bi;
            }
        }
        Ok(Partition {
            universe: universe.clone(),
            blocks,
            block_of,
        })
    }

    /// Builds a partition from the pairs of an equivalence relation. The
    /// pair list is verified to be reflexive, symmetric, and transitive;
    /// it is not closed up, so a missing pair is an error.
    pub fn from_pairs<'a, I>(universe: &Universe, pairs: I) -> Result<Partition>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let n = universe.len();
        let mut related = vec![false; n * n];
        for (x, y) in pairs {
            let i = universe.index_of(x)?;
            let j = universe.index_of(y)?;
            related[i * n + j] = true;
        }
        for i in 0..n {
            if !related[i * n + i] {
                return Err(Error::invalid(
                    "relation",
                    format!("not reflexive: missing ({0},{0})", universe.name(i)),
                ));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if related[i * n + j] && !related[j * n + i] {
                    return Err(Error::invalid(
                        "relation",
                        format!(
                            "not symmetric: has ({},{}) but not ({},{})",
                            universe.name(i),
                            universe.name(j),
                            universe.name(j),
                            universe.name(i)
                        ),
                    ));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !related[i * n + j] {
                    continue;
                }
                for k in 0..n {
                    if related[j * n + k] && !related[i * n + k] {
                        return Err(Error::invalid(
                            "relation",
                            format!(
                                "not transitive: has ({},{}) and ({},{}) but not ({},{})",
                                universe.name(i),
                                universe.name(j),
                                universe.name(j),
                                universe.name(k),
                                universe.name(i),
                                universe.name(k)
                            ),
                        ));
                    }
                }
            }
        }
        let mut blocks: Vec<Subset> = Vec::new();
        let mut assigned = vec![false; n];
        for i in 0..n {
            if assigned[i] {
                continue;
            }
            let mut block = Subset::empty(universe);
            for j in 0..n {
                if related[i * n + j] {
                    block.insert_index(j);
                    assigned[j] = true;
                }
            }
            blocks.push(block);
        }
        Partition::from_subsets(universe, blocks)
    }

    /// The discrete partition: every element in its own block.
    pub fn identity(universe: &Universe) -> Partition {
        let blocks = (0..universe.len())
            .map(|i| Subset::singleton_index(universe, i))
            .collect();
        Partition {
            universe: universe.clone(),
            blocks,
            block_of: (0..universe.len()).collect(),
        }
    }

    /// The indiscrete partition: one block holding everything. On the
    /// empty universe this is the partition with no blocks.
    pub fn universal(universe: &Universe) -> Partition {
        if universe.is_empty() {
            return Partition {
                universe: universe.clone(),
                blocks: Vec::new(),
                block_of: Vec::new(),
            };
        }
        Partition {
            universe: universe.clone(),
            blocks: vec![Subset::full(universe)],
            block_of: vec![0; universe.len()],
        }
    }

    /// Universe being partitioned.
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// The blocks, sorted by least element.
    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The block containing the element at `index`. Panics if out of range.
    pub fn class_of_index(&self, index: usize) -> &Subset {
        &self.blocks[self.block_of[index]]
    }

    /// The block containing the named element.
    pub fn class_of(&self, name: &str) -> Result<&Subset> {
        Ok(self.class_of_index(self.universe.index_of(name)?))
    }

    /// Block index of the element at `index`. Panics if out of range.
    pub fn block_index_of(&self, index: usize) -> usize {
        self.block_of[index]
    }

    /// True when the elements at `i` and `j` share a block.
    pub fn related(&self, i: usize, j: usize) -> bool {
        self.block_of[i] == self.block_of[j]
    }

    pub(crate) fn upper_union(&self, x: &Subset) -> Subset {
        debug_assert!(x.universe() == &self.universe);
        let mut out = Subset::empty(&self.universe);
        for block in &self.blocks {
            if block.intersects(x) {
                out = out.union(block);
            }
        }
        out
    }

    pub(crate) fn lower_union(&self, x: &Subset) -> Subset {
        debug_assert!(x.universe() == &self.universe);
        let mut out = Subset::empty(&self.universe);
        for block in &self.blocks {
            if block.is_subset_of(x) {
                out = out.union(block);
            }
        }
        out
    }

    /// True when every block of `self` sits inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        assert!(
            self.universe == other.universe,
            "refinement between partitions of different universes"
        );
        self.blocks.iter().all(|block| {
            let i = block.iter_indices().next().unwrap();
            block.is_subset_of(other.class_of_index(i))
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join("/"))
    }
}

/// A universe with an equivalence relation: the setting in which subsets
/// get upper and lower approximations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationSpace {
    partition: Partition,
}

impl ApproximationSpace {
    /// Wraps a partition as a space.
    pub fn new(partition: Partition) -> ApproximationSpace {
        ApproximationSpace { partition }
    }

    /// Space from blocks of element names.
    pub fn from_blocks<I, B, S>(universe: &Universe, blocks: I) -> Result<ApproximationSpace>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(ApproximationSpace::new(Partition::from_blocks(
            universe, blocks,
        )?))
    }

    /// Universe of the space.
    pub fn universe(&self) -> &Universe {
        self.partition.universe()
    }

    /// The underlying partition.
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    fn check_universe(&self, x: &Subset) -> Result<()> {
        if x.universe() != self.universe() {
            return Err(Error::UniverseMismatch(
                "subset belongs to a different universe than the space".to_string(),
            ));
        }
        Ok(())
    }

    /// Upper approximation: the union of the blocks that meet `x`.
    pub fn upper(&self, x: &Subset) -> Result<Subset> {
        self.check_universe(x)?;
        Ok(self.partition.upper_union(x))
    }

    /// Lower approximation: the union of the blocks contained in `x`.
    pub fn lower(&self, x: &Subset) -> Result<Subset> {
        self.check_universe(x)?;
        Ok(self.partition.lower_union(x))
    }

    /// Boundary region: upper approximation minus lower approximation.
    pub fn boundary(&self, x: &Subset) -> Result<Subset> {
        Ok(self.upper(x)?.difference(&self.lower(x)?))
    }

    /// The topology whose opens are exactly the unions of blocks. Every
    /// open is also closed, so the family is clopen. Requires at most
    /// [`MAX_TOPOLOGY_BLOCKS`] blocks, since all unions are materialized.
    pub fn clopen_topology(&self) -> Result<FiniteTopology> {
        let k = self.partition.block_count();
        if k > MAX_TOPOLOGY_BLOCKS as usize {
            return Err(Error::Capacity {
                what: "clopen topology opens (2^blocks)",
                limit: 1u64 << MAX_TOPOLOGY_BLOCKS,
                actual: 2f64.powi(k as i32) as u64,
            });
        }
        let mut opens = Vec::with_capacity(1 << k);
        for mask in 0u32..(1u32 << k) {
            let mut open = Subset::empty(self.universe());
            for (bi, block) in self.partition.blocks().iter().enumerate() {
                if mask >> bi & 1 == 1 {
                    open = open.union(block);
                }
            }
            opens.push(open);
        }
        FiniteTopology::from_family(self.universe(), opens)
    }
}

impl fmt::Display for ApproximationSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.universe(), self.partition)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> Universe {
        Universe::new(["a", "b", "c", "d"]).unwrap()
    }

    fn pairs_space() -> ApproximationSpace {
        ApproximationSpace::from_blocks(&abcd(), [["a", "b"], ["c", "d"]]).unwrap()
    }

    /// Upper approximation straight from its pointwise definition: the
    /// elements whose class meets `x`.
    fn upper_by_definition(space: &ApproximationSpace, x: &Subset) -> Subset {
        let u = space.universe();
        let mut out = Subset::empty(u);
        for i in 0..u.len() {
            if space.partition().class_of_index(i).intersects(x) {
                out.insert_index(i);
            }
        }
        out
    }

    /// Lower approximation straight from its pointwise definition: the
    /// elements whose class sits inside `x`.
    fn lower_by_definition(space: &ApproximationSpace, x: &Subset) -> Subset {
        let u = space.universe();
        let mut out = Subset::empty(u);
        for i in 0..u.len() {
            if space.partition().class_of_index(i).is_subset_of(x) {
                out.insert_index(i);
            }
        }
        out
    }

    #[test]
    fn partition_construction_validates() {
        let u = abcd();
        assert!(Partition::from_blocks(&u, [vec!["a", "b"], vec![]]).is_err());
        assert!(Partition::from_blocks(&u, [vec!["a", "b"], vec!["b", "c", "d"]]).is_err());
        assert!(Partition::from_blocks(&u, [vec!["a", "b"]]).is_err());
        assert!(Partition::from_blocks(&u, [vec!["a", "x"]]).is_err());
        let p = Partition::from_blocks(&u, [vec!["c", "d"], vec!["b", "a"]]).unwrap();
        assert_eq!(p.to_string(), "{a,b}/{c,d}");
    }

    #[test]
    fn partition_equality_ignores_block_order() {
        let u = abcd();
        let p = Partition::from_blocks(&u, [vec!["a", "b"], vec!["c", "d"]]).unwrap();
        let q = Partition::from_blocks(&u, [vec!["d", "c"], vec!["b", "a"]]).unwrap();
        assert_eq!(p, q);
        assert_ne!(p, Partition::identity(&u));
    }

    #[test]
    fn relation_pairs_are_verified_not_closed() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let full = |items: &[(&'static str, &'static str)]| items.to_vec();

        let ok = Partition::from_pairs(
            &u,
            full(&[
                ("a", "a"),
                ("b", "b"),
                ("c", "c"),
                ("a", "b"),
                ("b", "a"),
            ]),
        )
        .unwrap();
        assert_eq!(ok.to_string(), "{a,b}/{c}");

        let missing_reflexive =
            Partition::from_pairs(&u, full(&[("a", "a"), ("b", "b")]));
        assert!(matches!(missing_reflexive, Err(Error::Invalid { .. })));

        let asymmetric = Partition::from_pairs(
            &u,
            full(&[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b")]),
        );
        assert!(asymmetric.is_err());

        let intransitive = Partition::from_pairs(
            &u,
            full(&[
                ("a", "a"),
                ("b", "b"),
                ("c", "c"),
                ("a", "b"),
                ("b", "a"),
                ("b", "c"),
                ("c", "b"),
            ]),
        );
        assert!(intransitive.is_err());
    }

    #[test]
    fn approximations_match_pointwise_definitions() {
        let space = pairs_space();
        let u = space.universe().clone();
        for mask in 0u64..16 {
            let x = Subset::from_mask(&u, mask);
            assert_eq!(space.upper(&x).unwrap(), upper_by_definition(&space, &x));
            assert_eq!(space.lower(&x).unwrap(), lower_by_definition(&space, &x));
        }
    }

    #[test]
    fn approximations_on_a_mixed_subset() {
        let space = pairs_space();
        let u = space.universe().clone();
        let x = Subset::from_names(&u, ["a", "c"]).unwrap();
        assert_eq!(space.upper(&x).unwrap(), Subset::full(&u));
        assert!(space.lower(&x).unwrap().is_empty());
        assert_eq!(space.boundary(&x).unwrap(), Subset::full(&u));

        let y = Subset::from_names(&u, ["a", "b", "c"]).unwrap();
        assert_eq!(space.upper(&y).unwrap(), Subset::full(&u));
        assert_eq!(space.lower(&y).unwrap().to_string(), "{a,b}");
        assert_eq!(space.boundary(&y).unwrap().to_string(), "{c,d}");
    }

    #[test]
    fn lower_is_dual_of_upper() {
        let space = pairs_space();
        let u = space.universe().clone();
        for mask in 0u64..16 {
            let x = Subset::from_mask(&u, mask);
            let dual = space.upper(&x.complement()).unwrap().complement();
            assert_eq!(space.lower(&x).unwrap(), dual);
        }
    }

    #[test]
    fn extreme_partitions() {
        let u = abcd();
        let discrete = ApproximationSpace::new(Partition::identity(&u));
        let indiscrete = ApproximationSpace::new(Partition::universal(&u));
        let x = Subset::from_names(&u, ["a", "c"]).unwrap();
        assert_eq!(discrete.upper(&x).unwrap(), x);
        assert_eq!(discrete.lower(&x).unwrap(), x);
        assert_eq!(indiscrete.upper(&x).unwrap(), Subset::full(&u));
        assert!(indiscrete.lower(&x).unwrap().is_empty());
        assert!(Partition::identity(&u).refines(&Partition::universal(&u)));
        assert!(!Partition::universal(&u).refines(&Partition::identity(&u)));
    }

    #[test]
    fn empty_universe_space() {
        let u = Universe::new(Vec::<String>::new()).unwrap();
        let space = ApproximationSpace::new(Partition::universal(&u));
        assert_eq!(space.partition().block_count(), 0);
        let e = Subset::empty(&u);
        assert_eq!(space.upper(&e).unwrap(), e);
        assert_eq!(space.lower(&e).unwrap(), e);
    }

    #[test]
    fn universe_mismatch_is_reported() {
        let space = pairs_space();
        let other = Universe::new(["x", "y"]).unwrap();
        let x = Subset::full(&other);
        assert!(matches!(
            space.upper(&x),
            Err(Error::UniverseMismatch(_))
        ));
    }

    #[test]
    fn clopen_topology_is_the_unions_of_blocks() {
        let space = pairs_space();
        let topo = space.clopen_topology().unwrap();
        let names: Vec<String> = topo.opens().iter().map(|o| o.to_string()).collect();
        assert_eq!(names, vec!["{}", "{a,b}", "{c,d}", "{a,b,c,d}"]);
    }
}
