//! Finite universes, subsets, and total maps between universes.
//!
//! A [`Universe`] is an ordered list of named elements. Cloning one is
//! cheap; all structures built on the same universe share it. A [`Subset`]
//! is a bitset over a universe, and a [`TotalMap`] is a function between
//! two universes given pointwise.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

#[derive(Debug)]
struct UniverseInner {
    elements: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered finite set of named elements.
///
/// Element order is the order given at construction and is the canonical
/// order used everywhere: subset printing, witness selection, and block
/// naming all follow it.
#[derive(Debug, Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

impl Universe {
    /// Builds a universe from element names. Names must be distinct; the
    /// empty universe is allowed.
    pub fn new<I, S>(elements: I) -> Result<Universe>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(elements.len());
        for (i, name) in elements.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::invalid(
                    "universe",
                    format!("duplicate element `{name}`"),
                ));
            }
        }
        Ok(Universe {
            inner: Arc::new(UniverseInner { elements, index }),
        })
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.inner.elements.len()
    }

    /// True when the universe has no elements.
    pub fn is_empty(&self) -> bool {
        self.inner.elements.is_empty()
    }

    /// Element names in canonical order.
    pub fn elements(&self) -> &[String] {
        &self.inner.elements
    }

    /// Name of the element at `index`. Panics if out of range.
    pub fn name(&self, index: usize) -> &str {
        &self.inner.elements[index]
    }

    /// Position of `name`, if present.
    pub fn position(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    /// Position of `name`, or an error naming the missing element.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.position(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// True when both handles point at the same allocation.
    pub fn same_instance(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub(crate) fn word_count(&self) -> usize {
        self.len().div_ceil(64)
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_instance(other) || self.inner.elements == other.inner.elements
    }
}

impl Eq for Universe {}

impl Hash for Universe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.elements.hash(state);
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.inner.elements.join(","))
    }
}

/// A subset of a [`Universe`], stored as a bitset.
#[derive(Debug, Clone)]
pub struct Subset {
    universe: Universe,
    words: Vec<u64>,
}

impl Subset {
    /// The empty subset.
    pub fn empty(universe: &Universe) -> Subset {
        Subset {
            universe: universe.clone(),
            words: vec![0; universe.word_count()],
        }
    }

    /// The whole universe as a subset.
    pub fn full(universe: &Universe) -> Subset {
        let mut s = Subset::empty(universe);
        for i in 0..universe.len() {
            s.insert_index(i);
        }
        s
    }

    /// Subset containing exactly the named elements.
    pub fn from_names<I, S>(universe: &Universe, names: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = Subset::empty(universe);
        for name in names {
            s.insert_index(universe.index_of(name.as_ref())?);
        }
        Ok(s)
    }

    /// Subset containing one named element.
    pub fn singleton(universe: &Universe, name: &str) -> Result<Subset> {
        Subset::from_names(universe, [name])
    }

    /// Subset containing one element given by index. Panics if out of range.
    pub fn singleton_index(universe: &Universe, index: usize) -> Subset {
        assert!(index < universe.len(), "element index out of range");
        let mut s = Subset::empty(universe);
        s.insert_index(index);
        s
    }

    /// Subset from element indices. Panics if any index is out of range.
    pub fn from_indices(universe: &Universe, indices: impl IntoIterator<Item = usize>) -> Subset {
        let mut s = Subset::empty(universe);
        for i in indices {
            assert!(i < universe.len(), "element index out of range");
            s.insert_index(i);
        }
        s
    }

    /// Subset whose bit `i` is bit `i` of `mask`. Requires a universe of at
    /// most 64 elements; bits at or above the universe size must be zero.
    pub fn from_mask(universe: &Universe, mask: u64) -> Subset {
        let n = universe.len();
        assert!(n <= 64, "mask form needs a universe of at most 64 elements");
        assert!(
            n == 64 || mask & !((1u64 << n) - 1) == 0,
            "mask has bits outside the universe"
        );
        Subset {
            universe: universe.clone(),
            words: if n == 0 { Vec::new() } else { vec![mask] },
        }
    }

    /// The subset as a single machine word. Requires at most 64 elements.
    pub fn to_mask(&self) -> u64 {
        assert!(
            self.universe.len() <= 64,
            "mask form needs a universe of at most 64 elements"
        );
        self.words.first().copied().unwrap_or(0)
    }

    /// Universe this subset lives in.
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Number of elements in the subset.
    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when no element is present.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when every universe element is present.
    pub fn is_full(&self) -> bool {
        self.cardinality() == self.universe.len()
    }

    /// Membership by element index. Panics if out of range.
    pub fn contains_index(&self, index: usize) -> bool {
        assert!(index < self.universe.len(), "element index out of range");
        self.words[index / 64] >> (index % 64) & 1 == 1
    }

    /// Membership by element name.
    pub fn contains(&self, name: &str) -> Result<bool> {
        Ok(self.contains_index(self.universe.index_of(name)?))
    }

    /// Adds the element at `index`. Panics if out of range.
    pub fn insert_index(&mut self, index: usize) {
        assert!(index < self.universe.len(), "element index out of range");
        self.words[index / 64] |= 1u64 << (index % 64);
    }

    /// Removes the element at `index`. Panics if out of range.
    pub fn remove_index(&mut self, index: usize) {
        assert!(index < self.universe.len(), "element index out of range");
        self.words[index / 64] &= !(1u64 << (index % 64));
    }

    fn assert_same_universe(&self, other: &Subset, op: &str) {
        assert!(
            self.universe == other.universe,
            "{op} between subsets of different universes"
        );
    }

    /// Set union.
    pub fn union(&self, other: &Subset) -> Subset {
        self.assert_same_universe(other, "union");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        Subset {
            universe: self.universe.clone(),
            words,
        }
    }

    /// Set intersection.
    pub fn intersection(&self, other: &Subset) -> Subset {
        self.assert_same_universe(other, "intersection");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Subset {
            universe: self.universe.clone(),
            words,
        }
    }

    /// Set difference, `self` minus `other`.
    pub fn difference(&self, other: &Subset) -> Subset {
        self.assert_same_universe(other, "difference");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        Subset {
            universe: self.universe.clone(),
            words,
        }
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Subset {
        Subset::full(&self.universe).difference(self)
    }

    /// True when every element of `self` is in `other`.
    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.assert_same_universe(other, "inclusion");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// True when the two subsets share at least one element.
    pub fn intersects(&self, other: &Subset) -> bool {
        self.assert_same_universe(other, "intersection test");
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Indices of the elements present, ascending.
    pub fn iter_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }

    /// Names of the elements present, in canonical order.
    pub fn names(&self) -> Vec<&str> {
        self.iter_indices().map(|i| self.universe.name(i)).collect()
    }

    /// Total order on subsets of one universe: the bitset read as an
    /// integer, so witness selection is deterministic across runs.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        self.assert_same_universe(other, "comparison");
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.words == other.words
    }
}

impl Eq for Subset {}

impl Hash for Subset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.universe.len().hash(state);
        self.words.hash(state);
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(","))
    }
}

/// A total function between two universes.
#[derive(Debug, Clone)]
pub struct TotalMap {
    source: Universe,
    target: Universe,
    assignment: Vec<usize>,
}

impl TotalMap {
    /// Builds a map from `(source element, target element)` pairs. Every
    /// source element must appear exactly once.
    pub fn from_pairs<'a, I>(source: &Universe, target: &Universe, pairs: I) -> Result<TotalMap>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut assignment = vec![usize::MAX; source.len()];
        for (from, to) in pairs {
            let i = source.index_of(from)?;
            let j = target.index_of(to)?;
            if assignment[i] != usize::MAX {
                return Err(Error::invalid(
                    "map",
                    format!("element `{from}` assigned twice"),
                ));
            }
            assignment[i] = j;
        }
        if let Some(i) = assignment.iter().position(|&j| j == usize::MAX) {
            return Err(Error::invalid(
                "map",
                format!("element `{}` has no image", source.name(i)),
            ));
        }
        Ok(TotalMap {
            source: source.clone(),
            target: target.clone(),
            assignment,
        })
    }

    /// Builds a map by evaluating `f` on each source index. `f` must return
    /// valid target indices.
    pub fn from_fn(
        source: &Universe,
        target: &Universe,
        mut f: impl FnMut(usize) -> usize,
    ) -> Result<TotalMap> {
        if target.is_empty() && !source.is_empty() {
            return Err(Error::invalid(
                "map",
                "no map exists from a nonempty universe into an empty one",
            ));
        }
        let assignment: Vec<usize> = (0..source.len()).map(&mut f).collect();
        if let Some(&bad) = assignment.iter().find(|&&j| j >= target.len()) {
            return Err(Error::invalid(
                "map",
                format!("image index {bad} outside the target universe"),
            ));
        }
        Ok(TotalMap {
            source: source.clone(),
            target: target.clone(),
            assignment,
        })
    }

    /// The identity map on `universe`.
    pub fn identity(universe: &Universe) -> TotalMap {
        TotalMap {
            source: universe.clone(),
            target: universe.clone(),
            assignment: (0..universe.len()).collect(),
        }
    }

    /// Source universe.
    pub fn source(&self) -> &Universe {
        &self.source
    }

    /// Target universe.
    pub fn target(&self) -> &Universe {
        &self.target
    }

    /// Image of the source element at `index`, as a target index.
    pub fn apply_index(&self, index: usize) -> usize {
        self.assignment[index]
    }

    /// Image of a named source element, as a target name.
    pub fn apply(&self, name: &str) -> Result<&str> {
        let i = self.source.index_of(name)?;
        Ok(self.target.name(self.assignment[i]))
    }

    /// Composition `g` after `self`: first `self`, then `g`.
    pub fn then(&self, g: &TotalMap) -> Result<TotalMap> {
        if self.target != g.source {
            return Err(Error::UniverseMismatch(format!(
                "cannot compose: intermediate universes {} and {} differ",
                self.target, g.source
            )));
        }
        Ok(TotalMap {
            source: self.source.clone(),
            target: g.target.clone(),
            assignment: self.assignment.iter().map(|&i| g.assignment[i]).collect(),
        })
    }

    /// True when no two source elements share an image.
    pub fn is_injective(&self) -> bool {
        let mut seen = Subset::empty(&self.target);
        for &j in &self.assignment {
            if seen.contains_index(j) {
                return false;
            }
            seen.insert_index(j);
        }
        true
    }

    /// True when every target element is an image.
    pub fn is_surjective(&self) -> bool {
        let mut seen = Subset::empty(&self.target);
        for &j in &self.assignment {
            seen.insert_index(j);
        }
        seen.is_full()
    }

    /// True when the map is a bijection.
    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && self.is_injective()
    }

    /// The inverse map, when the map is a bijection.
    pub fn inverse(&self) -> Result<TotalMap> {
        if !self.is_bijective() {
            return Err(Error::Domain(
                "only a bijection has an inverse".to_string(),
            ));
        }
        let mut assignment = vec![0; self.target.len()];
        for (i, &j) in self.assignment.iter().enumerate() {
            assignment[j] = i;
        }
        Ok(TotalMap {
            source: self.target.clone(),
            target: self.source.clone(),
            assignment,
        })
    }

    /// Image of a source subset.
    pub fn direct_image(&self, x: &Subset) -> Subset {
        assert!(
            x.universe() == &self.source,
            "direct image of a subset from a different universe"
        );
        let mut out = Subset::empty(&self.target);
        for i in x.iter_indices() {
            out.insert_index(self.assignment[i]);
        }
        out
    }

    /// Preimage of a target subset.
    pub fn inverse_image(&self, y: &Subset) -> Subset {
        assert!(
            y.universe() == &self.target,
            "inverse image of a subset from a different universe"
        );
        let mut out = Subset::empty(&self.source);
        for (i, &j) in self.assignment.iter().enumerate() {
            if y.contains_index(j) {
                out.insert_index(i);
            }
        }
        out
    }
}

impl PartialEq for TotalMap {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.assignment == other.assignment
    }
}

impl Eq for TotalMap {}

impl fmt::Display for TotalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.source.len())
            .map(|i| {
                format!(
                    "{}->{}",
                    self.source.name(i),
                    self.target.name(self.assignment[i])
                )
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
