//! Information systems: object-attribute-value tables, indiscernibility
//! partitions, attribute reduction, and the homomorphisms that connect
//! NeIS with approximation spaces in both directions.

use crate::approximation::{ApproximationSpace, Partition};
use crate::error::{Error, Result};
use crate::functors::{AprsCorpus, FunctorCheckReport, RoundtripVerdict};
use crate::morphisms::is_relation_preserving;
use crate::sets::{Subset, TotalMap, Universe};
use crate::verify::{Verdict, VerifyMode};
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

/// Attribute count above which exhaustive reduct search is refused.
pub const MAX_REDUCT_ATTRIBUTES: usize = 20;

/// A finite object-attribute-value table. Every cell is filled; attribute
/// names are distinct. Equality is structural: universes, attribute lists
/// (names and order), and tables compare cell-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfoSystem {
    objects: Universe,
    attributes: Vec<String>,
    values: Vec<Vec<String>>,
}

impl InfoSystem {
    /// Builds a system from one value row per object, each row listing
    /// values in attribute order.
    pub fn from_rows<A, R, V>(
        objects: Universe,
        attributes: impl IntoIterator<Item = A>,
        rows: impl IntoIterator<Item = R>,
    ) -> Result<InfoSystem>
    where
        A: Into<String>,
        R: IntoIterator<Item = V>,
        V: Into<String>,
    {
        let attributes: Vec<String> = attributes.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for name in &attributes {
            if !seen.insert(name.as_str()) {
                return Err(Error::invalid(
                    "information system",
                    format!("duplicate attribute `{name}`"),
                ));
            }
        }
        let values: Vec<Vec<String>> = rows
            .into_iter()
            .map(|row| row.into_iter().map(Into::into).collect())
            .collect();
        if values.len() != objects.len() {
            return Err(Error::invalid(
                "information system",
                format!(
                    "{} value rows for {} objects",
                    values.len(),
                    objects.len()
                ),
            ));
        }
        for (i, row) in values.iter().enumerate() {
            if row.len() != attributes.len() {
                return Err(Error::invalid(
                    "information system",
                    format!(
                        "row for `{}` has {} values, expected {}",
                        objects.name(i),
                        row.len(),
                        attributes.len()
                    ),
                ));
            }
        }
        Ok(InfoSystem {
            objects,
            attributes,
            values,
        })
    }

    pub fn objects(&self) -> &Universe {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    /// Position of `name` among the attributes.
    pub fn attribute_index(&self, name: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownAttribute(name.to_string()))
    }

    /// Value of `attribute` at `object`.
    pub fn value(&self, object: &str, attribute: &str) -> Result<&str> {
        let o = self.objects.index_of(object)?;
        let a = self.attribute_index(attribute)?;
        Ok(&self.values[o][a])
    }

    /// Value at the given object and attribute positions. Panics if out
    /// of range.
    pub fn value_at(&self, object: usize, attribute: usize) -> &str {
        &self.values[object][attribute]
    }

    /// Every value string the table uses.
    pub fn domain(&self) -> BTreeSet<&str> {
        self.values
            .iter()
            .flat_map(|row| row.iter().map(String::as_str))
            .collect()
    }

    fn indiscernibility_by_indices(&self, attrs: &[usize]) -> Partition {
        let mut groups: BTreeMap<Vec<&str>, Vec<usize>> = BTreeMap::new();
        for o in 0..self.objects.len() {
            let key: Vec<&str> = attrs.iter().map(|&a| self.values[o][a].as_str()).collect();
            groups.entry(key).or_default().push(o);
        }
        let blocks: Vec<Subset> = groups
            .into_values()
            .map(|members| Subset::from_indices(&self.objects, members))
            .collect();
        Partition::from_subsets(&self.objects, blocks)
            .expect("value-tuple groups partition the objects")
    }

    /// The partition grouping objects with identical value tuples over
    /// the named attributes. The empty attribute set yields the universal
    /// partition.
    pub fn indiscernibility<S: AsRef<str>>(
        &self,
        attributes: impl IntoIterator<Item = S>,
    ) -> Result<Partition> {
        let attrs: Vec<usize> = attributes
            .into_iter()
            .map(|name| self.attribute_index(name.as_ref()))
            .collect::<Result<_>>()?;
        Ok(self.indiscernibility_by_indices(&attrs))
    }

    /// The approximation space over the full attribute set.
    pub fn finest_space(&self) -> ApproximationSpace {
        let all: Vec<usize> = (0..self.attributes.len()).collect();
        ApproximationSpace::new(self.indiscernibility_by_indices(&all))
    }

    /// All inclusion-minimal attribute subsets inducing the same
    /// indiscernibility as the full set. Each reduct lists attributes in
    /// table order; the reducts themselves are sorted lexicographically.
    pub fn find_reducts(&self) -> Result<Vec<Vec<String>>> {
        let k = self.attributes.len();
        if k > MAX_REDUCT_ATTRIBUTES {
            return Err(Error::Capacity {
                what: "reduct search attribute count",
                limit: MAX_REDUCT_ATTRIBUTES as u64,
                actual: k as u64,
            });
        }
        let full: Vec<usize> = (0..k).collect();
        let goal = self.indiscernibility_by_indices(&full);
        let mut matching: HashSet<u32> = HashSet::new();
        for mask in 0..(1u32 << k) {
            let attrs: Vec<usize> = (0..k).filter(|&a| mask >> a & 1 == 1).collect();
            if self.indiscernibility_by_indices(&attrs) == goal {
                matching.insert(mask);
            }
        }
        // Monotonicity makes one-attribute removals a complete minimality
        // test: any working proper subset forces a working single removal.
        let mut reducts: Vec<Vec<String>> = matching
            .iter()
            .copied()
            .filter(|&mask| {
                (0..k).all(|a| mask >> a & 1 == 0 || !matching.contains(&(mask & !(1 << a))))
            })
            .map(|mask| {
                (0..k)
                    .filter(|&a| mask >> a & 1 == 1)
                    .map(|a| self.attributes[a].clone())
                    .collect()
            })
            .collect();
        reducts.sort();
        Ok(reducts)
    }
}

impl fmt::Display for InfoSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut widths: Vec<usize> = Vec::with_capacity(self.attributes.len() + 1);
        widths.push(
            self.objects
                .elements()
                .iter()
                .map(String::len)
                .max()
                .unwrap_or(0)
                .max("object".len()),
        );
        for (a, name) in self.attributes.iter().enumerate() {
            let cells = (0..self.objects.len()).map(|o| self.values[o][a].len());
            widths.push(cells.max().unwrap_or(0).max(name.len()));
        }
        write!(f, "{:w$}", "object", w = widths[0])?;
        for (a, name) in self.attributes.iter().enumerate() {
            write!(f, " | {:w$}", name, w = widths[a + 1])?;
        }
        for o in 0..self.objects.len() {
            write!(f, "\n{:w$}", self.objects.name(o), w = widths[0])?;
            for a in 0..self.attributes.len() {
                write!(f, " | {:w$}", self.values[o][a], w = widths[a + 1])?;
            }
        }
        Ok(())
    }
}

/// The attribute name used when a space is presented as a one-attribute
/// system.
pub const CLASS_ATTRIBUTE: &str = "a_t";

/// Presents a space as a single-attribute system: the attribute assigns
/// each element the canonical name of its block. Taking the finest space
/// of the result recovers the partition.
pub fn single_attribute_system(space: &ApproximationSpace) -> InfoSystem {
    let universe = space.universe().clone();
    let rows: Vec<Vec<String>> = (0..universe.len())
        .map(|u| vec![space.partition().class_of_index(u).to_string()])
        .collect();
    InfoSystem::from_rows(universe, [CLASS_ATTRIBUTE], rows)
        .expect("one well-formed row per element")
}

/// A homomorphism candidate between information systems: an object map
/// plus total maps on source attributes and source domain values.
/// Attribute images must name target attributes; value images are
/// unconstrained strings, compared by the homomorphism condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OadHom {
    source: InfoSystem,
    target: InfoSystem,
    objects: TotalMap,
    attributes: BTreeMap<String, String>,
    values: BTreeMap<String, String>,
}

impl OadHom {
    pub fn new(
        source: InfoSystem,
        target: InfoSystem,
        objects: TotalMap,
        attributes: BTreeMap<String, String>,
        values: BTreeMap<String, String>,
    ) -> Result<OadHom> {
        if objects.source() != source.objects() || objects.target() != target.objects() {
            return Err(Error::UniverseMismatch(
                "object map endpoints differ from the systems' objects".to_string(),
            ));
        }
        for name in source.attributes() {
            let image = attributes.get(name).ok_or_else(|| {
                Error::invalid(
                    "homomorphism",
                    format!("attribute `{name}` has no image"),
                )
            })?;
            target.attribute_index(image)?;
        }
        for name in attributes.keys() {
            source.attribute_index(name)?;
        }
        let domain = source.domain();
        for value in &domain {
            if !values.contains_key(*value) {
                return Err(Error::invalid(
                    "homomorphism",
                    format!("value `{value}` has no image"),
                ));
            }
        }
        for value in values.keys() {
            if !domain.contains(value.as_str()) {
                return Err(Error::invalid(
                    "homomorphism",
                    format!("value map covers `{value}`, which the source never uses"),
                ));
            }
        }
        Ok(OadHom {
            source,
            target,
            objects,
            attributes,
            values,
        })
    }

    pub fn identity(system: &InfoSystem) -> OadHom {
        let attributes = system
            .attributes()
            .iter()
            .map(|a| (a.clone(), a.clone()))
            .collect();
        let values = system
            .domain()
            .into_iter()
            .map(|v| (v.to_string(), v.to_string()))
            .collect();
        OadHom {
            source: system.clone(),
            target: system.clone(),
            objects: TotalMap::identity(system.objects()),
            attributes,
            values,
        }
    }

    /// The composite homomorphism candidate, this one first.
    pub fn then(&self, other: &OadHom) -> Result<OadHom> {
        if self.target != other.source {
            return Err(Error::Domain(
                "cannot compose: the middle systems differ".to_string(),
            ));
        }
        let attributes = self
            .attributes
            .iter()
            .map(|(a, mid)| {
                other
                    .attributes
                    .get(mid)
                    .map(|image| (a.clone(), image.clone()))
                    .ok_or_else(|| {
                        Error::Domain(format!(
                            "composite attribute map undefined at `{a}` (image `{mid}` not covered)"
                        ))
                    })
            })
            .collect::<Result<_>>()?;
        let values = self
            .values
            .iter()
            .map(|(v, mid)| {
                other
                    .values
                    .get(mid)
                    .map(|image| (v.clone(), image.clone()))
                    .ok_or_else(|| {
                        Error::Domain(format!(
                            "composite value map undefined at `{v}` (image `{mid}` not covered)"
                        ))
                    })
            })
            .collect::<Result<_>>()?;
        Ok(OadHom {
            source: self.source.clone(),
            target: other.target.clone(),
            objects: self.objects.then(&other.objects)?,
            attributes,
            values,
        })
    }

    pub fn source(&self) -> &InfoSystem {
        &self.source
    }

    pub fn target(&self) -> &InfoSystem {
        &self.target
    }

    pub fn objects_map(&self) -> &TotalMap {
        &self.objects
    }

    pub fn attribute_map(&self) -> &BTreeMap<String, String> {
        &self.attributes
    }

    pub fn value_map(&self) -> &BTreeMap<String, String> {
        &self.values
    }

    fn attribute_image(&self, name: &str) -> &str {
        &self.attributes[name]
    }

    fn value_image(&self, value: &str) -> &str {
        &self.values[value]
    }
}

impl fmt::Display for OadHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let attrs: Vec<String> = self
            .attributes
            .iter()
            .map(|(a, b)| format!("{a}->{b}"))
            .collect();
        let values: Vec<String> = self
            .values
            .iter()
            .map(|(v, w)| format!("{v}->{w}"))
            .collect();
        write!(
            f,
            "objects {}, attributes [{}], values [{}]",
            self.objects,
            attrs.join(", "),
            values.join(", ")
        )
    }
}

/// The cell at which the homomorphism condition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomWitness {
    pub attribute: String,
    pub object: String,
}

impl fmt::Display for HomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.attribute, self.object)
    }
}

/// Whether the value image of every cell matches the image attribute's
/// value at the image object, over all (attribute, object) pairs.
pub fn is_oad_homomorphism(h: &OadHom) -> Verdict<HomWitness> {
    let attrs = h.source.attributes();
    let objects = h.source.objects();
    let mode = VerifyMode::Exhaustive {
        checked: (attrs.len() * objects.len()) as u64,
    };
    for (a, name) in attrs.iter().enumerate() {
        let image_attr = h
            .target
            .attribute_index(h.attribute_image(name))
            .expect("attribute images are validated at construction");
        for o in 0..objects.len() {
            let mapped_value = h.value_image(h.source.value_at(o, a));
            let target_value = h.target.value_at(h.objects.apply_index(o), image_attr);
            if mapped_value != target_value {
                return Verdict::fail(
                    HomWitness {
                        attribute: name.clone(),
                        object: objects.name(o).to_string(),
                    },
                    mode,
                );
            }
        }
    }
    Verdict::pass(mode)
}

/// Whether the attribute map is onto the target attributes. The witness
/// is the first target attribute nothing maps to.
pub fn is_non_expansive(h: &OadHom) -> Verdict<String> {
    let mode = VerifyMode::Exhaustive {
        checked: h.target.attributes().len() as u64,
    };
    let hit: HashSet<&str> = h.attributes.values().map(String::as_str).collect();
    for name in h.target.attributes() {
        if !hit.contains(name.as_str()) {
            return Verdict::fail(name.clone(), mode);
        }
    }
    Verdict::pass(mode)
}

/// Arrow action NeIS → AprS: extracts the object map of a verified
/// non-expansive homomorphism. Non-expansiveness forces the object map to
/// preserve indiscernibility between the finest spaces; that guarantee is
/// re-checked here rather than assumed.
pub fn finest_space_arrow(h: &OadHom) -> Result<TotalMap> {
    let hom = is_oad_homomorphism(h);
    if !hom.holds {
        return Err(Error::Domain(format!(
            "not an O-A-D homomorphism (fails at {})",
            hom.witness.expect("failing verdict carries a witness")
        )));
    }
    let onto = is_non_expansive(h);
    if !onto.holds {
        return Err(Error::Domain(format!(
            "homomorphism is expansive: target attribute `{}` is never hit",
            onto.witness.expect("failing verdict carries a witness")
        )));
    }
    let source_space = h.source.finest_space();
    let target_space = h.target.finest_space();
    let preserving = is_relation_preserving(&h.objects, &source_space, &target_space)?;
    if !preserving.holds {
        return Err(Error::Internal(format!(
            "object map of a verified non-expansive homomorphism does not preserve \
             indiscernibility (witness {}); this contradicts the guarantee the \
             arrow action relies on",
            preserving.witness.expect("failing verdict carries a witness")
        )));
    }
    Ok(h.objects.clone())
}

/// Arrow action AprS → NeIS: wraps a relation-preserving map as a
/// homomorphism between the single-attribute presentations. The value map
/// sends each source block name to the name of the block its image lands
/// in; relation preservation makes that assignment well defined, and the
/// well-definedness is asserted per block member.
pub fn single_attribute_arrow(
    f: &TotalMap,
    source: &ApproximationSpace,
    target: &ApproximationSpace,
) -> Result<OadHom> {
    let preserving = is_relation_preserving(f, source, target)?;
    if !preserving.holds {
        return Err(Error::Domain(format!(
            "map is not relation-preserving (witness {})",
            preserving.witness.expect("failing verdict carries a witness")
        )));
    }
    let mut values = BTreeMap::new();
    for block in source.partition().blocks() {
        let mut image_block: Option<&Subset> = None;
        for u in block.iter_indices() {
            let class = target.partition().class_of_index(f.apply_index(u));
            match image_block {
                None => image_block = Some(class),
                Some(prev) if prev == class => {}
                Some(_) => {
                    return Err(Error::Internal(format!(
                        "block {block} maps into more than one target block under a \
                         relation-preserving map"
                    )))
                }
            }
        }
        let image = image_block.expect("partition blocks are nonempty");
        values.insert(block.to_string(), image.to_string());
    }
    OadHom::new(
        single_attribute_system(source),
        single_attribute_system(target),
        f.clone(),
        BTreeMap::from([(CLASS_ATTRIBUTE.to_string(), CLASS_ATTRIBUTE.to_string())]),
        values,
    )
}

/// Checks over the corpus that presenting a space as a one-attribute
/// system and taking its finest space is the identity, on objects, on
/// identity arrows, and on composites, and that every corpus arrow
/// survives the round trip as the same function.
pub fn verify_neis_roundtrip(corpus: &AprsCorpus) -> Result<FunctorCheckReport> {
    let mut roundtrips = Vec::new();
    let mut checked = 0u64;

    for space in corpus.spaces() {
        let system = single_attribute_system(space);
        let back = system.finest_space();
        checked += 1;
        let verdict = if back == *space {
            Verdict::pass(VerifyMode::Exhaustive { checked: 1 })
        } else {
            Verdict::fail(
                format!("came back as {}", back.partition()),
                VerifyMode::Exhaustive { checked: 1 },
            )
        };
        roundtrips.push(RoundtripVerdict {
            label: format!(
                "space {}: finest after single-attribute is identity",
                space.partition()
            ),
            verdict,
        });
    }

    let mut identity_failure: Option<String> = None;
    for space in corpus.spaces() {
        checked += 1;
        let id = TotalMap::identity(space.universe());
        let hom = single_attribute_arrow(&id, space, space)?;
        let expected = OadHom::identity(&single_attribute_system(space));
        if hom != expected && identity_failure.is_none() {
            identity_failure = Some(format!(
                "identity on {} does not transport to the identity homomorphism",
                space.partition()
            ));
        }
        if finest_space_arrow(&hom)? != id && identity_failure.is_none() {
            identity_failure = Some(format!(
                "transported identity on {} does not come back as the identity map",
                space.partition()
            ));
        }
    }

    for arrow in corpus.arrows() {
        let source = &corpus.spaces()[arrow.source];
        let target = &corpus.spaces()[arrow.target];
        let hom = single_attribute_arrow(&arrow.map, source, target)?;
        let is_hom = is_oad_homomorphism(&hom);
        let onto = is_non_expansive(&hom);
        checked += 1;
        let verdict = if !is_hom.holds {
            Verdict::fail(
                format!(
                    "transport is not a homomorphism (fails at {})",
                    is_hom.witness.expect("failing verdict carries a witness")
                ),
                VerifyMode::Exhaustive { checked: 1 },
            )
        } else if !onto.holds {
            Verdict::fail(
                "transport is expansive".to_string(),
                VerifyMode::Exhaustive { checked: 1 },
            )
        } else if finest_space_arrow(&hom)? != arrow.map {
            Verdict::fail(
                "round-tripped arrow is a different function".to_string(),
                VerifyMode::Exhaustive { checked: 1 },
            )
        } else {
            Verdict::pass(VerifyMode::Exhaustive { checked: 1 })
        };
        roundtrips.push(RoundtripVerdict {
            label: format!(
                "arrow {} : {} -> {}: survives the round trip",
                arrow.map,
                source.partition(),
                target.partition()
            ),
            verdict,
        });
    }

    let mut composition_failure: Option<String> = None;
    for (f, g) in corpus.composable_pairs() {
        checked += 1;
        let mid = &corpus.spaces()[f.target];
        let hf = single_attribute_arrow(&f.map, &corpus.spaces()[f.source], mid)?;
        let hg = single_attribute_arrow(&g.map, mid, &corpus.spaces()[g.target])?;
        let composite =
            single_attribute_arrow(&f.map.then(&g.map)?, &corpus.spaces()[f.source], &corpus.spaces()[g.target])?;
        if hf.then(&hg)? != composite && composition_failure.is_none() {
            composition_failure = Some(format!(
                "transport of {} then {} differs from the transported composite",
                f.map, g.map
            ));
        }
    }

    let mode = VerifyMode::Exhaustive { checked };
    Ok(FunctorCheckReport {
        identity_law: Some(match identity_failure {
            None => Verdict::pass(mode),
            Some(msg) => Verdict::fail(msg, mode),
        }),
        composition_law: Some(match composition_failure {
            None => Verdict::pass(mode),
            Some(msg) => Verdict::fail(msg, mode),
        }),
        roundtrips,
        objects: corpus
            .spaces()
            .iter()
            .map(|s| format!("space {}", s.partition()))
            .collect(),
        arrows: corpus
            .arrows()
            .iter()
            .map(|a| format!("{}", a.map))
            .collect(),
        mode,
    })
}

/// A stored two-attribute system together with its double transport
/// through the finest-space and single-attribute constructions. The two
/// differ structurally (two attributes against one), witnessing that the
/// transport is not the identity on systems.
pub fn hprime_h_counterexample() -> (InfoSystem, InfoSystem) {
    let objects =
        Universe::new(["x1", "x2", "x3", "x4"]).expect("stored names are distinct");
    let system = InfoSystem::from_rows(
        objects,
        ["color", "size"],
        [
            ["R", "S"],
            ["R", "M"],
            ["G", "S"],
            ["G", "M"],
        ],
    )
    .expect("stored table is well-formed");
    let roundtripped = single_attribute_system(&system.finest_space());
    (system, roundtripped)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn color_size() -> InfoSystem {
        hprime_h_counterexample().0
    }

    fn space(universe: &Universe, blocks: &[&[&str]]) -> ApproximationSpace {
        ApproximationSpace::new(
            Partition::from_blocks(universe, blocks.iter().map(|b| b.iter().copied())).unwrap(),
        )
    }

    #[test]
    fn indiscernibility_groups_by_value_tuples() {
        let t = color_size();
        assert_eq!(
            t.indiscernibility(["color"]).unwrap().to_string(),
            "{x1,x2}/{x3,x4}"
        );
        assert_eq!(
            t.indiscernibility(["size"]).unwrap().to_string(),
            "{x1,x3}/{x2,x4}"
        );
        assert_eq!(
            t.indiscernibility(["color", "size"]).unwrap().block_count(),
            4
        );
        assert_eq!(
            t.indiscernibility(Vec::<&str>::new()).unwrap().to_string(),
            "{x1,x2,x3,x4}"
        );
        assert!(matches!(
            t.indiscernibility(["weight"]),
            Err(Error::UnknownAttribute(_))
        ));
    }

    #[test]
    fn finest_space_uses_all_attributes() {
        let t = color_size();
        assert_eq!(t.finest_space().partition().block_count(), 4);

        let constant = InfoSystem::from_rows(
            Universe::new(["x1", "x2", "x3"]).unwrap(),
            ["c"],
            [["k"], ["k"], ["k"]],
        )
        .unwrap();
        assert_eq!(constant.finest_space().partition().block_count(), 1);

        let bare = InfoSystem::from_rows(
            Universe::new(["x1", "x2"]).unwrap(),
            Vec::<String>::new(),
            [Vec::<String>::new(), Vec::<String>::new()],
        )
        .unwrap();
        assert_eq!(bare.finest_space().partition().block_count(), 1);
    }

    #[test]
    fn single_attribute_presentation_names_blocks() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let sys = single_attribute_system(&s);
        assert_eq!(sys.attributes(), ["a_t"]);
        assert_eq!(sys.value("a", "a_t").unwrap(), "{a,b}");
        assert_eq!(sys.value("b", "a_t").unwrap(), "{a,b}");
        assert_eq!(sys.value("c", "a_t").unwrap(), "{c,d}");
        assert_eq!(sys.finest_space(), s);

        let discrete = space(&u, &[&["a"], &["b"], &["c"], &["d"]]);
        let sys = single_attribute_system(&discrete);
        assert_eq!(sys.domain().len(), 4);

        let indiscrete = space(&u, &[&["a", "b", "c", "d"]]);
        let sys = single_attribute_system(&indiscrete);
        assert_eq!(sys.domain().len(), 1);
    }

    #[test]
    fn homomorphism_condition_checks_every_cell() {
        let t = color_size();
        let id = OadHom::identity(&t);
        assert!(is_oad_homomorphism(&id).holds);
        assert!(is_non_expansive(&id).holds);

        let mut perturbed_values: BTreeMap<String, String> =
            t.domain().into_iter().map(|v| (v.to_string(), v.to_string())).collect();
        perturbed_values.insert("R".to_string(), "G".to_string());
        let attributes: BTreeMap<String, String> = t
            .attributes()
            .iter()
            .map(|a| (a.clone(), a.clone()))
            .collect();
        let perturbed = OadHom::new(
            t.clone(),
            t.clone(),
            TotalMap::identity(t.objects()),
            attributes,
            perturbed_values,
        )
        .unwrap();
        let verdict = is_oad_homomorphism(&perturbed);
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().to_string(), "(color, x1)");
    }

    #[test]
    fn expansive_homomorphisms_are_detected() {
        let t = color_size();
        let color_only = InfoSystem::from_rows(
            t.objects().clone(),
            ["color"],
            [["R"], ["R"], ["G"], ["G"]],
        )
        .unwrap();
        let hom = OadHom::new(
            color_only.clone(),
            t.clone(),
            TotalMap::identity(t.objects()),
            BTreeMap::from([("color".to_string(), "color".to_string())]),
            BTreeMap::from([
                ("R".to_string(), "R".to_string()),
                ("G".to_string(), "G".to_string()),
            ]),
        )
        .unwrap();
        assert!(is_oad_homomorphism(&hom).holds);
        let onto = is_non_expansive(&hom);
        assert!(!onto.holds);
        assert_eq!(onto.witness.unwrap(), "size");
        assert!(matches!(
            finest_space_arrow(&hom),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn arrow_transport_round_trips_through_systems() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let v = Universe::new(["p", "q"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let t = space(&v, &[&["p"], &["q"]]);
        let f = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p"), ("c", "q"), ("d", "q")])
            .unwrap();
        let hom = single_attribute_arrow(&f, &s, &t).unwrap();
        assert_eq!(hom.value_map()["{a,b}"], "{p}");
        assert_eq!(hom.value_map()["{c,d}"], "{q}");
        assert!(is_oad_homomorphism(&hom).holds);
        assert!(is_non_expansive(&hom).holds);
        assert_eq!(finest_space_arrow(&hom).unwrap(), f);

        let one = space(&u, &[&["a", "b", "c", "d"]]);
        let splitting = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "q"), ("c", "p"), ("d", "q")])
            .unwrap();
        assert!(matches!(
            single_attribute_arrow(&splitting, &one, &t),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn roundtrip_law_holds_on_the_small_corpus() {
        let corpus = AprsCorpus::exhaustive_up_to(3).unwrap();
        let report = verify_neis_roundtrip(&corpus).unwrap();
        assert!(report.all_hold(), "{report}");
        assert!(report.identity_law.is_some());
        assert!(report.composition_law.is_some());
    }

    #[test]
    fn stored_counterexample_defeats_the_reverse_roundtrip() {
        let (system, roundtripped) = hprime_h_counterexample();
        assert_eq!(system.attributes().len(), 2);
        assert_eq!(roundtripped.attributes().len(), 1);
        assert_ne!(system, roundtripped);
        assert_eq!(system.finest_space(), roundtripped.finest_space());
    }

    #[test]
    fn reducts_are_minimal_and_complete() {
        let t = color_size();
        assert_eq!(
            t.find_reducts().unwrap(),
            vec![vec!["color".to_string(), "size".to_string()]]
        );

        let duplicated = InfoSystem::from_rows(
            Universe::new(["x1", "x2"]).unwrap(),
            ["a1", "a2"],
            [["0", "0"], ["1", "1"]],
        )
        .unwrap();
        assert_eq!(
            duplicated.find_reducts().unwrap(),
            vec![vec!["a1".to_string()], vec!["a2".to_string()]]
        );

        let single = InfoSystem::from_rows(
            Universe::new(["x1", "x2"]).unwrap(),
            ["a"],
            [["0"], ["1"]],
        )
        .unwrap();
        assert_eq!(single.find_reducts().unwrap(), vec![vec!["a".to_string()]]);

        let constant = InfoSystem::from_rows(
            Universe::new(["x1", "x2"]).unwrap(),
            ["a"],
            [["k"], ["k"]],
        )
        .unwrap();
        assert_eq!(constant.find_reducts().unwrap(), vec![Vec::<String>::new()]);

        let wide_attrs: Vec<String> = (0..21).map(|i| format!("a{i}")).collect();
        let wide = InfoSystem::from_rows(
            Universe::new(["x1"]).unwrap(),
            wide_attrs,
            [vec!["0"; 21]],
        )
        .unwrap();
        assert!(matches!(wide.find_reducts(), Err(Error::Capacity { .. })));
    }

    #[test]
    fn indiscernibility_is_monotone_in_the_attribute_set() {
        let t = color_size();
        let k = t.attributes().len();
        for small in 0..(1u32 << k) {
            for big in 0..(1u32 << k) {
                if small & big != small {
                    continue;
                }
                let small_attrs: Vec<&String> = (0..k)
                    .filter(|&a| small >> a & 1 == 1)
                    .map(|a| &t.attributes()[a])
                    .collect();
                let big_attrs: Vec<&String> = (0..k)
                    .filter(|&a| big >> a & 1 == 1)
                    .map(|a| &t.attributes()[a])
                    .collect();
                let coarse = t.indiscernibility(small_attrs).unwrap();
                let fine = t.indiscernibility(big_attrs).unwrap();
                assert!(fine.refines(&coarse));
            }
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let u = Universe::new(["x1", "x2"]).unwrap();
        assert!(matches!(
            InfoSystem::from_rows(u.clone(), ["a", "a"], [["0", "0"], ["1", "1"]]),
            Err(Error::Invalid { .. })
        ));
        assert!(matches!(
            InfoSystem::from_rows(u.clone(), ["a"], [["0"]]),
            Err(Error::Invalid { .. })
        ));
        assert!(matches!(
            InfoSystem::from_rows(u, ["a"], [vec!["0"], vec!["1", "2"]]),
            Err(Error::Invalid { .. })
        ));
    }

    #[test]
    fn hom_construction_validates_coverage() {
        let t = color_size();
        let attributes: BTreeMap<String, String> = t
            .attributes()
            .iter()
            .map(|a| (a.clone(), a.clone()))
            .collect();
        let missing_value = BTreeMap::from([("R".to_string(), "R".to_string())]);
        assert!(matches!(
            OadHom::new(
                t.clone(),
                t.clone(),
                TotalMap::identity(t.objects()),
                attributes.clone(),
                missing_value,
            ),
            Err(Error::Invalid { .. })
        ));

        let bad_attr = BTreeMap::from([
            ("color".to_string(), "shade".to_string()),
            ("size".to_string(), "size".to_string()),
        ]);
        let values: BTreeMap<String, String> = t
            .domain()
            .into_iter()
            .map(|v| (v.to_string(), v.to_string()))
            .collect();
        assert!(matches!(
            OadHom::new(
                t.clone(),
                t.clone(),
                TotalMap::identity(t.objects()),
                bad_attr,
                values,
            ),
            Err(Error::UnknownAttribute(_))
        ));
    }
}
