//! Object constructions for the functors connecting AprS, RCls, and
//! RInt, plus machine verification of the functor laws and round-trip
//! identities that make those categories isomorphic.
//!
//! All four functors act on arrows as the identity on underlying
//! functions, so the law checks reduce to two substantive claims: the
//! transported function is a valid arrow of the target category, and
//! composites transport to composites.

use crate::approximation::{ApproximationSpace, Partition};
use crate::error::{Error, Result};
use crate::morphisms::{
    is_continuous_closure_map, is_continuous_interior_map, is_relation_preserving,
};
use crate::operators::SetOperator;
use crate::sets::{Subset, TotalMap};
use crate::verify::{Verdict, VerifyConfig, VerifyMode};
use std::fmt;

/// AprS → RCls on objects: the partition-backed upper approximation
/// operator, classified so rough-closure preconditions hold downstream.
pub fn upper_operator(space: &ApproximationSpace, cfg: &VerifyConfig) -> SetOperator {
    let op = SetOperator::upper_of(space.partition().clone());
    op.classify_closure(cfg);
    debug_assert!(op.is_verified_rough_closure());
    op
}

/// RCls → AprS on objects: rebuilds the space whose block containing
/// each element is that element's point closure. The operator must be a
/// verified rough closure; its point closures then partition the
/// universe, and the rebuilt space's upper approximation agrees with the
/// operator on every subset.
pub fn induced_space(op: &SetOperator) -> Result<ApproximationSpace> {
    op.require_rough_closure()?;
    let universe = op.universe().clone();
    let mut blocks: Vec<Subset> = Vec::new();
    for u in 0..universe.len() {
        let block = op.apply(&Subset::singleton_index(&universe, u))?;
        if !blocks.contains(&block) {
            blocks.push(block);
        }
    }
    let partition = Partition::from_subsets(&universe, blocks).map_err(|e| {
        Error::Internal(format!(
            "point closures of a verified rough closure operator do not partition \
             the universe ({e}); this indicates a classification bug or a sampling miss"
        ))
    })?;
    Ok(ApproximationSpace::new(partition))
}

/// RCls → RInt on objects: the dual interior of a verified rough
/// closure, re-classified on the interior side.
pub fn to_rough_interior(op: &SetOperator, cfg: &VerifyConfig) -> Result<SetOperator> {
    op.require_rough_closure()?;
    let dual = op.dual_interior();
    dual.classify_interior(cfg);
    if !dual.is_verified_rough_interior() {
        return Err(Error::Internal(
            "dual of a verified rough closure operator failed interior classification; \
             this indicates a classification bug or a sampling miss"
                .to_string(),
        ));
    }
    Ok(dual)
}

/// RInt → RCls on objects: the dual closure of a verified rough
/// interior, re-classified on the closure side.
pub fn to_rough_closure(op: &SetOperator, cfg: &VerifyConfig) -> Result<SetOperator> {
    op.require_rough_interior()?;
    let dual = op.dual_closure();
    dual.classify_closure(cfg);
    if !dual.is_verified_rough_closure() {
        return Err(Error::Internal(
            "dual of a verified rough interior operator failed closure classification; \
             this indicates a classification bug or a sampling miss"
                .to_string(),
        ));
    }
    Ok(dual)
}

/// A corpus arrow: a relation-preserving map between two corpus spaces,
/// referenced by index.
#[derive(Debug, Clone)]
pub struct CorpusArrow {
    pub source: usize,
    pub target: usize,
    pub map: TotalMap,
}

/// A finite presentation of AprS: spaces plus relation-preserving maps
/// between them. Arrows are verified at insertion, so every law checker
/// may assume its input arrows are genuine.
#[derive(Debug, Clone, Default)]
pub struct AprsCorpus {
    spaces: Vec<ApproximationSpace>,
    arrows: Vec<CorpusArrow>,
}

impl AprsCorpus {
    pub fn new() -> AprsCorpus {
        AprsCorpus::default()
    }

    /// Every partition of fresh universes of sizes `1..=max_size`, with
    /// every relation-preserving map between every ordered pair of the
    /// resulting spaces (identities included).
    pub fn exhaustive_up_to(max_size: usize) -> Result<AprsCorpus> {
        use crate::enumerate::{all_partitions, all_total_maps};
        use crate::sets::Universe;

        let mut corpus = AprsCorpus::new();
        let mut universes = Vec::new();
        for n in 1..=max_size {
            let names: Vec<String> = (0..n).map(|i| format!("u{i}")).collect();
            universes.push(Universe::new(names)?);
        }
        for universe in &universes {
            for partition in all_partitions(universe)? {
                corpus.add_space(ApproximationSpace::new(partition));
            }
        }
        for source in 0..corpus.spaces.len() {
            for target in 0..corpus.spaces.len() {
                let maps = all_total_maps(
                    corpus.spaces[source].universe(),
                    corpus.spaces[target].universe(),
                )?;
                for map in maps {
                    let verdict = is_relation_preserving(
                        &map,
                        &corpus.spaces[source],
                        &corpus.spaces[target],
                    )?;
                    if verdict.holds {
                        corpus.arrows.push(CorpusArrow { source, target, map });
                    }
                }
            }
        }
        Ok(corpus)
    }

    pub fn add_space(&mut self, space: ApproximationSpace) -> usize {
        self.spaces.push(space);
        self.spaces.len() - 1
    }

    /// Adds an arrow after verifying it is relation-preserving.
    pub fn add_arrow(&mut self, source: usize, target: usize, map: TotalMap) -> Result<usize> {
        let (s, t) = match (self.spaces.get(source), self.spaces.get(target)) {
            (Some(s), Some(t)) => (s, t),
            _ => {
                return Err(Error::invalid(
                    "corpus",
                    format!("arrow endpoints {source}->{target} are out of range"),
                ))
            }
        };
        let verdict = is_relation_preserving(&map, s, t)?;
        if !verdict.holds {
            return Err(Error::Domain(format!(
                "map {map} is not relation-preserving between the given spaces \
                 (witness {})",
                verdict.witness.expect("failing verdict carries a witness")
            )));
        }
        self.arrows.push(CorpusArrow { source, target, map });
        Ok(self.arrows.len() - 1)
    }

    /// Adds the identity arrow on every space.
    pub fn add_identity_arrows(&mut self) {
        for (index, space) in self.spaces.iter().enumerate() {
            self.arrows.push(CorpusArrow {
                source: index,
                target: index,
                map: TotalMap::identity(space.universe()),
            });
        }
    }

    pub fn spaces(&self) -> &[ApproximationSpace] {
        &self.spaces
    }

    pub fn arrows(&self) -> &[CorpusArrow] {
        &self.arrows
    }

    /// All pairs `(f, g)` with the target of `f` equal to the source of
    /// `g`, i.e. those for which `g ∘ f` is defined.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (&CorpusArrow, &CorpusArrow)> {
        self.arrows.iter().flat_map(move |f| {
            self.arrows
                .iter()
                .filter(move |g| g.source == f.target)
                .map(move |g| (f, g))
        })
    }

    fn arrow_label(&self, arrow: &CorpusArrow) -> String {
        format!(
            "{} : {} -> {}",
            arrow.map,
            self.spaces[arrow.source].partition(),
            self.spaces[arrow.target].partition()
        )
    }
}

/// The four functors whose laws this module can check, identified by
/// their object action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctorId {
    /// AprS → RCls, space to upper operator.
    UpperOperator,
    /// RCls → AprS, operator to point-closure space.
    InducedSpace,
    /// RCls → RInt, closure to dual interior.
    DualInterior,
    /// RInt → RCls, interior to dual closure.
    DualClosure,
}

impl FunctorId {
    pub fn name(&self) -> &'static str {
        match self {
            FunctorId::UpperOperator => "upper-operator",
            FunctorId::InducedSpace => "induced-space",
            FunctorId::DualInterior => "dual-interior",
            FunctorId::DualClosure => "dual-closure",
        }
    }

    pub fn signature(&self) -> &'static str {
        match self {
            FunctorId::UpperOperator => "AprS -> RCls",
            FunctorId::InducedSpace => "RCls -> AprS",
            FunctorId::DualInterior => "RCls -> RInt",
            FunctorId::DualClosure => "RInt -> RCls",
        }
    }
}

impl fmt::Display for FunctorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.signature())
    }
}

/// One named round-trip or transport check with its verdict.
#[derive(Debug, Clone)]
pub struct RoundtripVerdict {
    pub label: String,
    pub verdict: Verdict<String>,
}

impl fmt::Display for RoundtripVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label, self.verdict)
    }
}

/// Outcome of a functor-law or round-trip sweep. The inventories list
/// every object and arrow that was examined.
#[derive(Debug, Clone)]
pub struct FunctorCheckReport {
    pub identity_law: Option<Verdict<String>>,
    pub composition_law: Option<Verdict<String>>,
    pub roundtrips: Vec<RoundtripVerdict>,
    pub objects: Vec<String>,
    pub arrows: Vec<String>,
    pub mode: VerifyMode,
}

impl FunctorCheckReport {
    pub fn all_hold(&self) -> bool {
        self.identity_law.as_ref().is_none_or(|v| v.holds)
            && self.composition_law.as_ref().is_none_or(|v| v.holds)
            && self.roundtrips.iter().all(|r| r.verdict.holds)
    }
}

impl fmt::Display for FunctorCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(identity) = &self.identity_law {
            writeln!(f, "identity law: {identity}")?;
        }
        if let Some(composition) = &self.composition_law {
            writeln!(f, "composition law: {composition}")?;
        }
        let failures: Vec<&RoundtripVerdict> = self
            .roundtrips
            .iter()
            .filter(|r| !r.verdict.holds)
            .collect();
        if !self.roundtrips.is_empty() {
            writeln!(
                f,
                "round-trips: {}/{} hold",
                self.roundtrips.len() - failures.len(),
                self.roundtrips.len()
            )?;
            for failure in failures {
                writeln!(f, "  {failure}")?;
            }
        }
        write!(
            f,
            "examined {} objects, {} arrows ({})",
            self.objects.len(),
            self.arrows.len(),
            self.mode
        )
    }
}

/// Shared accounting for sweeps that aggregate many verdicts.
struct SweepState {
    checked: u64,
    all_exhaustive: bool,
}

impl SweepState {
    fn new() -> SweepState {
        SweepState {
            checked: 0,
            all_exhaustive: true,
        }
    }

    fn absorb(&mut self, mode: VerifyMode) {
        self.checked += 1;
        self.all_exhaustive &= mode.is_exhaustive();
    }

    fn note(&mut self) {
        self.checked += 1;
    }

    fn mode(&self, cfg: &VerifyConfig) -> VerifyMode {
        if self.all_exhaustive {
            VerifyMode::Exhaustive {
                checked: self.checked,
            }
        } else {
            VerifyMode::Sampled {
                seed: cfg.seed,
                trials: cfg.trials,
            }
        }
    }
}

/// The functor's domain presentation derived from an AprS corpus: for
/// each corpus space, the object the functor consumes, plus its image.
struct TransportedObjects {
    /// Per space: human label of the domain object.
    domain_labels: Vec<String>,
    /// Checks that `map` is a valid target-category arrow between the
    /// images of spaces `source` and `target`.
    validity: Box<dyn Fn(&TotalMap, usize, usize) -> Result<Verdict<String>>>,
}

fn describe<W: fmt::Display>(verdict: Verdict<W>) -> Verdict<String> {
    verdict.map_witness(|w| w.to_string())
}

fn transported(
    functor: FunctorId,
    corpus: &AprsCorpus,
    cfg: &VerifyConfig,
) -> Result<TransportedObjects> {
    let spaces = corpus.spaces().to_vec();
    let uppers: Vec<SetOperator> = spaces
        .iter()
        .map(|s| upper_operator(s, cfg))
        .collect();
    match functor {
        FunctorId::UpperOperator => {
            let domain_labels = spaces
                .iter()
                .map(|s| format!("space {}", s.partition()))
                .collect();
            let cfg = cfg.clone();
            Ok(TransportedObjects {
                domain_labels,
                validity: Box::new(move |map, s, t| {
                    Ok(describe(is_continuous_closure_map(
                        map, &uppers[s], &uppers[t], &cfg,
                    )?))
                }),
            })
        }
        FunctorId::InducedSpace => {
            let domain_labels = uppers
                .iter()
                .map(|op| format!("closure operator {op}"))
                .collect();
            let images: Vec<ApproximationSpace> = uppers
                .iter()
                .map(induced_space)
                .collect::<Result<_>>()?;
            Ok(TransportedObjects {
                domain_labels,
                validity: Box::new(move |map, s, t| {
                    Ok(describe(is_relation_preserving(
                        map, &images[s], &images[t],
                    )?))
                }),
            })
        }
        FunctorId::DualInterior => {
            let domain_labels = uppers
                .iter()
                .map(|op| format!("closure operator {op}"))
                .collect();
            let images: Vec<SetOperator> = uppers
                .iter()
                .map(|op| to_rough_interior(op, cfg))
                .collect::<Result<_>>()?;
            let cfg = cfg.clone();
            Ok(TransportedObjects {
                domain_labels,
                validity: Box::new(move |map, s, t| {
                    Ok(describe(is_continuous_interior_map(
                        map, &images[s], &images[t], &cfg,
                    )?))
                }),
            })
        }
        FunctorId::DualClosure => {
            let interiors: Vec<SetOperator> = uppers
                .iter()
                .map(|op| to_rough_interior(op, cfg))
                .collect::<Result<_>>()?;
            let domain_labels = interiors
                .iter()
                .map(|op| format!("interior operator {op}"))
                .collect();
            let images: Vec<SetOperator> = interiors
                .iter()
                .map(|op| to_rough_closure(op, cfg))
                .collect::<Result<_>>()?;
            let cfg = cfg.clone();
            Ok(TransportedObjects {
                domain_labels,
                validity: Box::new(move |map, s, t| {
                    Ok(describe(is_continuous_closure_map(
                        map, &images[s], &images[t], &cfg,
                    )?))
                }),
            })
        }
    }
}

/// Checks the two functor laws for `functor` over the corpus: the
/// identity arrow of every object transports to the identity arrow of
/// its image, and `F(g ∘ f) = F(g) ∘ F(f)` for every composable pair.
/// Since arrow actions are the identity on functions, both checks
/// include the substantive claim that each transported function is a
/// valid arrow of the target category.
pub fn verify_functor_laws(
    functor: FunctorId,
    corpus: &AprsCorpus,
    cfg: &VerifyConfig,
) -> Result<FunctorCheckReport> {
    let presentation = transported(functor, corpus, cfg)?;
    let mut state = SweepState::new();

    let mut identity_law = None;
    for (index, space) in corpus.spaces().iter().enumerate() {
        let id = TotalMap::identity(space.universe());
        let verdict = (presentation.validity)(&id, index, index)?;
        state.absorb(verdict.mode);
        if !verdict.holds && identity_law.is_none() {
            identity_law = Some(Verdict::fail(
                format!(
                    "identity of {} does not transport to a valid arrow: {}",
                    presentation.domain_labels[index],
                    verdict.witness.unwrap_or_default()
                ),
                verdict.mode,
            ));
        }
    }

    let mut composition_law = None;
    for arrow in corpus.arrows() {
        let verdict = (presentation.validity)(&arrow.map, arrow.source, arrow.target)?;
        state.absorb(verdict.mode);
        if !verdict.holds && composition_law.is_none() {
            composition_law = Some(Verdict::fail(
                format!(
                    "transported arrow {} is not a valid arrow: {}",
                    corpus.arrow_label(arrow),
                    verdict.witness.unwrap_or_default()
                ),
                verdict.mode,
            ));
        }
    }
    for (f, g) in corpus.composable_pairs() {
        let composite = f.map.then(&g.map)?;
        state.note();
        // Arrow actions are identities on functions, so the transported
        // composite and the composite of the transported arrows are the
        // same map; assert that pointwise, then check it is an arrow.
        let agrees = (0..composite.source().len())
            .all(|u| composite.apply_index(u) == g.map.apply_index(f.map.apply_index(u)));
        if !agrees && composition_law.is_none() {
            composition_law = Some(Verdict::fail(
                format!(
                    "composite of {} and {} transports to a different function",
                    corpus.arrow_label(f),
                    corpus.arrow_label(g)
                ),
                VerifyMode::Exhaustive { checked: 1 },
            ));
        }
        let verdict = (presentation.validity)(&composite, f.source, g.target)?;
        state.absorb(verdict.mode);
        if !verdict.holds && composition_law.is_none() {
            composition_law = Some(Verdict::fail(
                format!(
                    "composite of {} and {} is not a valid arrow: {}",
                    corpus.arrow_label(f),
                    corpus.arrow_label(g),
                    verdict.witness.unwrap_or_default()
                ),
                verdict.mode,
            ));
        }
    }

    let mode = state.mode(cfg);
    Ok(FunctorCheckReport {
        identity_law: Some(identity_law.unwrap_or(Verdict::pass(mode))),
        composition_law: Some(composition_law.unwrap_or(Verdict::pass(mode))),
        roundtrips: Vec::new(),
        objects: presentation.domain_labels,
        arrows: corpus.arrows().iter().map(|a| corpus.arrow_label(a)).collect(),
        mode,
    })
}

/// Checks the round-trip identities over the corpus: rebuilding each
/// space from its upper operator returns the same partition, the upper
/// operator of the rebuilt space agrees with the original operator on
/// every subset, dualizing twice returns the operator, and every corpus
/// arrow stays a valid arrow after transport in both directions.
pub fn verify_roundtrips(corpus: &AprsCorpus, cfg: &VerifyConfig) -> Result<FunctorCheckReport> {
    let mut roundtrips = Vec::new();
    let mut state = SweepState::new();
    let mut uppers = Vec::new();

    for space in corpus.spaces() {
        let label_base = format!("space {}", space.partition());
        let op = upper_operator(space, cfg);

        let rebuilt = induced_space(&op)?;
        let space_verdict = if rebuilt == *space {
            Verdict::pass(VerifyMode::Exhaustive { checked: 1 })
        } else {
            Verdict::fail(
                format!("rebuilt as {}", rebuilt.partition()),
                VerifyMode::Exhaustive { checked: 1 },
            )
        };
        state.absorb(space_verdict.mode);
        roundtrips.push(RoundtripVerdict {
            label: format!("{label_base}: rebuild after upper is identity"),
            verdict: space_verdict,
        });

        let reupper = upper_operator(&rebuilt, cfg);
        let op_verdict = describe(op.extensionally_equal(&reupper, cfg)?);
        state.absorb(op_verdict.mode);
        roundtrips.push(RoundtripVerdict {
            label: format!("{label_base}: upper after rebuild is identity"),
            verdict: op_verdict,
        });

        let interior = to_rough_interior(&op, cfg)?;
        let back = to_rough_closure(&interior, cfg)?;
        let dual_verdict = describe(op.extensionally_equal(&back, cfg)?);
        state.absorb(dual_verdict.mode);
        roundtrips.push(RoundtripVerdict {
            label: format!("{label_base}: dual closure after dual interior is identity"),
            verdict: dual_verdict,
        });

        let re_interior = to_rough_interior(&back, cfg)?;
        let dual_verdict = describe(interior.extensionally_equal(&re_interior, cfg)?);
        state.absorb(dual_verdict.mode);
        roundtrips.push(RoundtripVerdict {
            label: format!("{label_base}: dual interior after dual closure is identity"),
            verdict: dual_verdict,
        });

        uppers.push(op);
    }

    for arrow in corpus.arrows() {
        let rcls_verdict = describe(is_continuous_closure_map(
            &arrow.map,
            &uppers[arrow.source],
            &uppers[arrow.target],
            cfg,
        )?);
        state.absorb(rcls_verdict.mode);
        roundtrips.push(RoundtripVerdict {
            label: format!("arrow {}: valid after transport", corpus.arrow_label(arrow)),
            verdict: rcls_verdict,
        });

        let back_source = induced_space(&uppers[arrow.source])?;
        let back_target = induced_space(&uppers[arrow.target])?;
        let aprs_verdict = describe(is_relation_preserving(
            &arrow.map,
            &back_source,
            &back_target,
        )?);
        state.absorb(aprs_verdict.mode);
        roundtrips.push(RoundtripVerdict {
            label: format!(
                "arrow {}: valid after round-trip",
                corpus.arrow_label(arrow)
            ),
            verdict: aprs_verdict,
        });
    }

    let mode = state.mode(cfg);
    Ok(FunctorCheckReport {
        identity_law: None,
        composition_law: None,
        roundtrips,
        objects: corpus
            .spaces()
            .iter()
            .map(|s| format!("space {}", s.partition()))
            .collect(),
        arrows: corpus.arrows().iter().map(|a| corpus.arrow_label(a)).collect(),
        mode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::Universe;

    fn cfg() -> VerifyConfig {
        VerifyConfig::default()
    }

    fn space(universe: &Universe, blocks: &[&[&str]]) -> ApproximationSpace {
        ApproximationSpace::new(
            Partition::from_blocks(universe, blocks.iter().map(|b| b.iter().copied())).unwrap(),
        )
    }

    #[test]
    fn upper_operator_closes_singletons_to_blocks() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let op = upper_operator(&s, &cfg());
        let a = Subset::singleton(&u, "a").unwrap();
        assert_eq!(op.apply(&a).unwrap().to_string(), "{a,b}");
        let c = Subset::singleton(&u, "c").unwrap();
        assert_eq!(op.apply(&c).unwrap().to_string(), "{c,d}");

        let discrete = space(&u, &[&["a"], &["b"], &["c"], &["d"]]);
        let id_op = upper_operator(&discrete, &cfg());
        for mask in 0..16u64 {
            let x = Subset::from_mask(&u, mask);
            assert_eq!(id_op.apply(&x).unwrap(), x);
        }

        let indiscrete = space(&u, &[&["a", "b", "c", "d"]]);
        let all_op = upper_operator(&indiscrete, &cfg());
        for mask in 1..16u64 {
            let x = Subset::from_mask(&u, mask);
            assert!(all_op.apply(&x).unwrap().is_full());
        }
        assert!(all_op.apply(&Subset::empty(&u)).unwrap().is_empty());
    }

    #[test]
    fn induced_space_recovers_blocks_from_point_closures() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let op = upper_operator(&s, &cfg());
        assert_eq!(induced_space(&op).unwrap(), s);

        let unclassified = SetOperator::upper_of(s.partition().clone());
        assert!(matches!(
            induced_space(&unclassified),
            Err(Error::Domain(_))
        ));

        let identity = SetOperator::identity(&u);
        identity.classify_closure(&cfg());
        let rebuilt = induced_space(&identity).unwrap();
        assert_eq!(rebuilt.partition().block_count(), 4);

        let universal = SetOperator::from_fn(&u, |x| {
            if x.is_empty() {
                x.clone()
            } else {
                Subset::full(&u)
            }
        })
        .unwrap();
        universal.classify_closure(&cfg());
        let rebuilt = induced_space(&universal).unwrap();
        assert_eq!(rebuilt.partition().block_count(), 1);
    }

    #[test]
    fn duals_swap_upper_and_lower() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let op = upper_operator(&s, &cfg());
        let interior = to_rough_interior(&op, &cfg()).unwrap();
        let lower = SetOperator::lower_of(s.partition().clone());
        for mask in 0..16u64 {
            let x = Subset::from_mask(&u, mask);
            assert_eq!(interior.apply(&x).unwrap(), lower.apply(&x).unwrap());
        }

        let id = SetOperator::identity(&u);
        id.classify_closure(&cfg());
        let id_dual = to_rough_interior(&id, &cfg()).unwrap();
        for mask in 0..16u64 {
            let x = Subset::from_mask(&u, mask);
            assert_eq!(id_dual.apply(&x).unwrap(), x);
        }

        let back = to_rough_closure(&to_rough_interior(&op, &cfg()).unwrap(), &cfg()).unwrap();
        assert!(op.extensionally_equal(&back, &cfg()).unwrap().holds);

        let not_rough = SetOperator::from_fn(&u, |x| {
            if x.contains("a").unwrap_or(false) {
                Subset::full(&u)
            } else {
                x.clone()
            }
        })
        .unwrap();
        not_rough.classify_closure(&cfg());
        assert!(matches!(
            to_rough_interior(&not_rough, &cfg()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn roundtrips_hold_on_the_exhaustive_small_corpus() {
        let corpus = AprsCorpus::exhaustive_up_to(3).unwrap();
        assert_eq!(corpus.spaces().len(), 1 + 2 + 5);
        let report = verify_roundtrips(&corpus, &cfg()).unwrap();
        assert!(report.all_hold(), "{report}");
        assert_eq!(report.objects.len(), 8);
        assert!(report.mode.is_exhaustive());
    }

    #[test]
    fn functor_laws_hold_on_the_exhaustive_small_corpus() {
        let corpus = AprsCorpus::exhaustive_up_to(2).unwrap();
        for functor in [
            FunctorId::UpperOperator,
            FunctorId::InducedSpace,
            FunctorId::DualInterior,
            FunctorId::DualClosure,
        ] {
            let report = verify_functor_laws(functor, &corpus, &cfg()).unwrap();
            assert!(report.all_hold(), "{functor}: {report}");
            assert!(report.identity_law.is_some());
            assert!(report.composition_law.is_some());
            assert_eq!(report.objects.len(), corpus.spaces().len());
            assert_eq!(report.arrows.len(), corpus.arrows().len());
        }
    }

    #[test]
    fn corpus_rejects_non_arrows() {
        let u = Universe::new(["a", "b"]).unwrap();
        let v = Universe::new(["p", "q"]).unwrap();
        let mut corpus = AprsCorpus::new();
        let one = corpus.add_space(space(&u, &[&["a", "b"]]));
        let split = corpus.add_space(space(&v, &[&["p"], &["q"]]));
        let g = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "q")]).unwrap();
        assert!(matches!(
            corpus.add_arrow(one, split, g),
            Err(Error::Domain(_))
        ));
        let constant = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p")]).unwrap();
        corpus.add_arrow(one, split, constant).unwrap();
        assert!(matches!(
            corpus.add_arrow(5, split, TotalMap::identity(&u)),
            Err(Error::Invalid { .. })
        ));
    }

    #[test]
    fn composable_pairs_respect_endpoints() {
        let corpus = AprsCorpus::exhaustive_up_to(2).unwrap();
        let mut count = 0usize;
        for (f, g) in corpus.composable_pairs() {
            assert_eq!(f.target, g.source);
            count += 1;
        }
        assert!(count > 0);
    }
}
