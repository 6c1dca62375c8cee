//! Arrow predicates: relation preservation between approximation spaces,
//! the six-way continuity equivalence, isomorphism detection, continuity
//! between closure (or interior) spaces, and the stricter natural
//! transformation conditions.
//!
//! The production decision procedure for "is this map an arrow" is the
//! class-containment test, linear in the universe. The other five
//! characterizations are implemented as independent verifiers so the
//! equivalence itself can be machine-checked.

use crate::approximation::{ApproximationSpace, Partition};
use crate::enumerate::random_subset;
use crate::error::{Error, Result};
use crate::operators::SetOperator;
use crate::sets::{Subset, TotalMap, Universe};
use crate::verify::{Verdict, VerifyConfig, VerifyMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Largest universe for which subset-quantified conditions are swept
/// exhaustively; beyond it they are sampled.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 12;

fn check_map_universes(
    f: &TotalMap,
    source: &Universe,
    target: &Universe,
) -> Result<()> {
    if f.source() != source {
        return Err(Error::UniverseMismatch(
            "map source differs from the source space's universe".to_string(),
        ));
    }
    if f.target() != target {
        return Err(Error::UniverseMismatch(
            "map target differs from the target space's universe".to_string(),
        ));
    }
    Ok(())
}

/// A related pair whose images are not related: the witness that a map
/// fails to preserve the relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatedPair {
    pub u: String,
    pub v: String,
}

impl fmt::Display for RelatedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Whether `f` carries the source relation into the target relation.
/// Decided through class containment, with the failing related pair as
/// witness.
pub fn is_relation_preserving(
    f: &TotalMap,
    source: &ApproximationSpace,
    target: &ApproximationSpace,
) -> Result<Verdict<RelatedPair>> {
    check_map_universes(f, source.universe(), target.universe())?;
    let n = source.universe().len();
    let mode = VerifyMode::Exhaustive {
        checked: (n * n) as u64,
    };
    for u in 0..n {
        let image_class = target.partition().class_of_index(f.apply_index(u));
        let class = source.partition().class_of_index(u);
        if f.direct_image(class).is_subset_of(image_class) {
            continue;
        }
        for v in class.iter_indices() {
            if !image_class.contains_index(f.apply_index(v)) {
                return Ok(Verdict::fail(
                    RelatedPair {
                        u: source.universe().name(u).to_string(),
                        v: source.universe().name(v).to_string(),
                    },
                    mode,
                ));
            }
        }
    }
    Ok(Verdict::pass(mode))
}

/// The six equivalent characterizations of continuity for a map between
/// approximation spaces, named by what each one quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContinuityCondition {
    /// Related pairs map to related pairs.
    RelationPairs,
    /// Preimages of opens of the target's clopen topology are open.
    OpenPreimages,
    /// The image of each class lies inside the image point's class.
    ClassImages,
    /// Images of upper approximations lie in upper approximations of
    /// images.
    UpperImages,
    /// Upper approximation of a preimage lies in the preimage of the
    /// upper approximation.
    UpperPreimages,
    /// Preimage of a lower approximation lies in the lower approximation
    /// of the preimage.
    LowerPreimages,
}

impl ContinuityCondition {
    pub fn name(&self) -> &'static str {
        match self {
            ContinuityCondition::RelationPairs => "relation pairs",
            ContinuityCondition::OpenPreimages => "open preimages",
            ContinuityCondition::ClassImages => "class images",
            ContinuityCondition::UpperImages => "upper images",
            ContinuityCondition::UpperPreimages => "upper preimages",
            ContinuityCondition::LowerPreimages => "lower preimages",
        }
    }

    pub fn statement(&self) -> &'static str {
        match self {
            ContinuityCondition::RelationPairs => "u ~ u′ implies f(u) ~ f(u′)",
            ContinuityCondition::OpenPreimages => "f⁻¹(O) is open for every open O",
            ContinuityCondition::ClassImages => "f[[u]] ⊆ [f(u)] for every u",
            ContinuityCondition::UpperImages => "f[upper(X)] ⊆ upper(f[X]) for every X",
            ContinuityCondition::UpperPreimages => "upper(f⁻¹(Y)) ⊆ f⁻¹(upper(Y)) for every Y",
            ContinuityCondition::LowerPreimages => "f⁻¹(lower(Y)) ⊆ lower(f⁻¹(Y)) for every Y",
        }
    }
}

impl fmt::Display for ContinuityCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.statement())
    }
}

/// Where a continuity condition failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionWitness {
    Pair(RelatedPair),
    Open(Subset),
    Element(String),
    SourceSubset(Subset),
    TargetSubset(Subset),
}

impl fmt::Display for ConditionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionWitness::Pair(p) => write!(f, "pair {p}"),
            ConditionWitness::Open(o) => write!(f, "open O={o}"),
            ConditionWitness::Element(u) => write!(f, "u={u}"),
            ConditionWitness::SourceSubset(x) => write!(f, "X={x}"),
            ConditionWitness::TargetSubset(y) => write!(f, "Y={y}"),
        }
    }
}

/// Verdict for one continuity condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionVerdict {
    pub condition: ContinuityCondition,
    pub verdict: Verdict<ConditionWitness>,
}

impl fmt::Display for ConditionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.condition, self.verdict)
    }
}

/// Independent verdicts for all six continuity conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityReport {
    pub conditions: Vec<ConditionVerdict>,
}

impl ContinuityReport {
    /// True when every condition held.
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.verdict.holds)
    }

    /// True when the six verdicts agree (all hold or all fail).
    pub fn unanimous(&self) -> bool {
        self.conditions.iter().all(|c| c.verdict.holds)
            || self.conditions.iter().all(|c| !c.verdict.holds)
    }

    /// True when every condition was decided exhaustively.
    pub fn fully_exhaustive(&self) -> bool {
        self.conditions
            .iter()
            .all(|c| c.verdict.mode.is_exhaustive())
    }
}

impl fmt::Display for ContinuityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for condition in &self.conditions {
            writeln!(f, "{condition}")?;
        }
        write!(
            f,
            "agreement: {}",
            if self.unanimous() {
                "unanimous"
            } else {
                "MIXED (sampling missed a counterexample)"
            }
        )
    }
}

/// Evaluates all six continuity characterizations independently, with no
/// shortcuts from one to another. In fully exhaustive mode the six
/// verdicts must agree; disagreement is reported as an internal error
/// because it would contradict their equivalence.
pub fn continuity_suite(
    f: &TotalMap,
    source: &ApproximationSpace,
    target: &ApproximationSpace,
    cfg: &VerifyConfig,
) -> Result<ContinuityReport> {
    check_map_universes(f, source.universe(), target.universe())?;
    let u_size = source.universe().len();
    let v_size = target.universe().len();

    // Condition: relation pairs, swept directly over all ordered pairs.
    let pairs = {
        let mode = VerifyMode::Exhaustive {
            checked: (u_size * u_size) as u64,
        };
        let mut verdict = Verdict::pass(mode);
        'outer: for u in 0..u_size {
            for v in 0..u_size {
                if !source.partition().related(u, v) {
                    continue;
                }
                let fu = f.apply_index(u);
                let fv = f.apply_index(v);
                if !target.partition().related(fu, fv) {
                    verdict = Verdict::fail(
                        ConditionWitness::Pair(RelatedPair {
                            u: source.universe().name(u).to_string(),
                            v: source.universe().name(v).to_string(),
                        }),
                        mode,
                    );
                    break 'outer;
                }
            }
        }
        ConditionVerdict {
            condition: ContinuityCondition::RelationPairs,
            verdict,
        }
    };

    // Condition: open preimages. Opens of the target are the unions of
    // its blocks; a set is open in the source iff it is its own lower
    // approximation.
    let opens = {
        let blocks = target.partition().blocks();
        let k = blocks.len();
        let open_for = |mask: u64| {
            let mut open = Subset::empty(target.universe());
            for (bi, block) in blocks.iter().enumerate() {
                if mask >> bi & 1 == 1 {
                    open = open.union(block);
                }
            }
            open
        };
        let check = |open: &Subset| {
            let preimage = f.inverse_image(open);
            source.partition().lower_union(&preimage) == preimage
        };
        let mut verdict;
        if v_size <= EXHAUSTIVE_SUBSET_LIMIT {
            let mode = VerifyMode::Exhaustive {
                checked: 1u64 << k,
            };
            verdict = Verdict::pass(mode);
            for mask in 0..(1u64 << k) {
                let open = open_for(mask);
                if !check(&open) {
                    verdict = Verdict::fail(ConditionWitness::Open(open), mode);
                    break;
                }
            }
        } else {
            let mode = VerifyMode::Sampled {
                seed: cfg.seed,
                trials: cfg.trials,
            };
            verdict = Verdict::pass(mode);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            for _ in 0..cfg.trials {
                let mask = rng.gen::<u64>() & ((1u64 << k.min(63)) - 1);
                let open = open_for(mask);
                if !check(&open) {
                    verdict = Verdict::fail(ConditionWitness::Open(open), mode);
                    break;
                }
            }
        }
        ConditionVerdict {
            condition: ContinuityCondition::OpenPreimages,
            verdict,
        }
    };

    // Condition: class images.
    let classes = {
        let mode = VerifyMode::Exhaustive {
            checked: u_size as u64,
        };
        let mut verdict = Verdict::pass(mode);
        for u in 0..u_size {
            let image = f.direct_image(source.partition().class_of_index(u));
            let target_class = target.partition().class_of_index(f.apply_index(u));
            if !image.is_subset_of(target_class) {
                verdict = Verdict::fail(
                    ConditionWitness::Element(source.universe().name(u).to_string()),
                    mode,
                );
                break;
            }
        }
        ConditionVerdict {
            condition: ContinuityCondition::ClassImages,
            verdict,
        }
    };

    // The three subset-quantified conditions share a sweep harness over
    // either the source or the target power set.
    let sweep = |over_source: bool,
                 condition: ContinuityCondition,
                 check: &dyn Fn(&Subset) -> bool|
     -> ConditionVerdict {
        let universe = if over_source {
            source.universe()
        } else {
            target.universe()
        };
        let n = universe.len();
        let wrap = |s: Subset| {
            if over_source {
                ConditionWitness::SourceSubset(s)
            } else {
                ConditionWitness::TargetSubset(s)
            }
        };
        let verdict = if n <= EXHAUSTIVE_SUBSET_LIMIT {
            let mode = VerifyMode::Exhaustive {
                checked: 1u64 << n,
            };
            let mut v = Verdict::pass(mode);
            for mask in 0..(1u64 << n) {
                let x = Subset::from_mask(universe, mask);
                if !check(&x) {
                    v = Verdict::fail(wrap(x), mode);
                    break;
                }
            }
            v
        } else {
            let mode = VerifyMode::Sampled {
                seed: cfg.seed,
                trials: cfg.trials,
            };
            let mut v = Verdict::pass(mode);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            for _ in 0..cfg.trials {
                let x = random_subset(&mut rng, universe);
                if !check(&x) {
                    v = Verdict::fail(wrap(x), mode);
                    break;
                }
            }
            v
        };
        ConditionVerdict { condition, verdict }
    };

    let upper_images = sweep(true, ContinuityCondition::UpperImages, &|x| {
        f.direct_image(&source.partition().upper_union(x))
            .is_subset_of(&target.partition().upper_union(&f.direct_image(x)))
    });
    let upper_preimages = sweep(false, ContinuityCondition::UpperPreimages, &|y| {
        source
            .partition()
            .upper_union(&f.inverse_image(y))
            .is_subset_of(&f.inverse_image(&target.partition().upper_union(y)))
    });
    let lower_preimages = sweep(false, ContinuityCondition::LowerPreimages, &|y| {
        f.inverse_image(&target.partition().lower_union(y))
            .is_subset_of(&source.partition().lower_union(&f.inverse_image(y)))
    });

    let report = ContinuityReport {
        conditions: vec![
            pairs,
            opens,
            classes,
            upper_images,
            upper_preimages,
            lower_preimages,
        ],
    };
    if report.fully_exhaustive() && !report.unanimous() {
        return Err(Error::Internal(format!(
            "exhaustive continuity conditions disagree for {f}: {report}"
        )));
    }
    Ok(report)
}

/// Why a map fails to be an isomorphism of approximation spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoWitness {
    SizeMismatch { source: usize, target: usize },
    NotInjective { u: String, v: String },
    /// The image of this element's class differs from its image's class.
    ClassMismatch { u: String },
}

impl fmt::Display for IsoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoWitness::SizeMismatch { source, target } => {
                write!(f, "universe sizes differ ({source} vs {target})")
            }
            IsoWitness::NotInjective { u, v } => {
                write!(f, "not injective: {u} and {v} share an image")
            }
            IsoWitness::ClassMismatch { u } => {
                write!(f, "f[[{u}]] ≠ [f({u})]")
            }
        }
    }
}

/// Whether `f` is an isomorphism: bijective with every class mapped onto
/// the image's class. Decided two ways (class equality, and relation
/// preservation of both `f` and its inverse) and the routes must agree.
pub fn is_aprs_isomorphism(
    f: &TotalMap,
    source: &ApproximationSpace,
    target: &ApproximationSpace,
) -> Result<Verdict<IsoWitness>> {
    check_map_universes(f, source.universe(), target.universe())?;
    let n = source.universe().len();
    let mode = VerifyMode::Exhaustive {
        checked: (n + 1) as u64,
    };

    let by_classes = (|| {
        if source.universe().len() != target.universe().len() {
            return Verdict::fail(
                IsoWitness::SizeMismatch {
                    source: source.universe().len(),
                    target: target.universe().len(),
                },
                mode,
            );
        }
        let mut seen: Vec<Option<usize>> = vec![None; target.universe().len()];
        for u in 0..n {
            let image = f.apply_index(u);
            if let Some(prev) = seen[image] {
                return Verdict::fail(
                    IsoWitness::NotInjective {
                        u: source.universe().name(prev).to_string(),
                        v: source.universe().name(u).to_string(),
                    },
                    mode,
                );
            }
            seen[image] = Some(u);
        }
        for u in 0..n {
            let image_class = target.partition().class_of_index(f.apply_index(u));
            if f.direct_image(source.partition().class_of_index(u)) != *image_class {
                return Verdict::fail(
                    IsoWitness::ClassMismatch {
                        u: source.universe().name(u).to_string(),
                    },
                    mode,
                );
            }
        }
        Verdict::pass(mode)
    })();

    let by_inverse = f.is_bijective()
        && is_relation_preserving(f, source, target)?.holds
        && is_relation_preserving(&f.inverse()?, target, source)?.holds;
    if by_classes.holds != by_inverse {
        return Err(Error::Internal(format!(
            "isomorphism routes disagree for {f}"
        )));
    }
    Ok(by_classes)
}

fn subset_sweep(
    universe: &Universe,
    cfg: &VerifyConfig,
    check: impl Fn(&Subset) -> bool,
) -> Verdict<Subset> {
    let n = universe.len();
    if n <= EXHAUSTIVE_SUBSET_LIMIT {
        let mode = VerifyMode::Exhaustive {
            checked: 1u64 << n,
        };
        for mask in 0..(1u64 << n) {
            let x = Subset::from_mask(universe, mask);
            if !check(&x) {
                return Verdict::fail(x, mode);
            }
        }
        Verdict::pass(mode)
    } else {
        let mode = VerifyMode::Sampled {
            seed: cfg.seed,
            trials: cfg.trials,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.trials {
            let x = random_subset(&mut rng, universe);
            if !check(&x) {
                return Verdict::fail(x, mode);
            }
        }
        Verdict::pass(mode)
    }
}

/// Continuity of `f` between closure spaces: the image of each closure
/// lies in the closure of the image. Both operators must be classified
/// closure operators. The equivalent preimage form is also checked, and
/// in exhaustive mode the two must agree. The witness is a source subset.
pub fn is_continuous_closure_map(
    f: &TotalMap,
    source_op: &SetOperator,
    target_op: &SetOperator,
    cfg: &VerifyConfig,
) -> Result<Verdict<Subset>> {
    check_map_universes(f, source_op.universe(), target_op.universe())?;
    source_op.require_closure()?;
    target_op.require_closure()?;

    let image_form = subset_sweep(source_op.universe(), cfg, |x| {
        let closed = source_op.apply(x).expect("subset over the source universe");
        f.direct_image(&closed).is_subset_of(
            &target_op
                .apply(&f.direct_image(x))
                .expect("image lies in the target universe"),
        )
    });
    let preimage_form = subset_sweep(target_op.universe(), cfg, |y| {
        source_op
            .apply(&f.inverse_image(y))
            .expect("preimage lies in the source universe")
            .is_subset_of(&f.inverse_image(
                &target_op.apply(y).expect("subset over the target universe"),
            ))
    });
    if image_form.mode.is_exhaustive()
        && preimage_form.mode.is_exhaustive()
        && image_form.holds != preimage_form.holds
    {
        return Err(Error::Internal(format!(
            "closure continuity forms disagree for {f}"
        )));
    }
    Ok(image_form)
}

/// Continuity of `f` between interior spaces: the preimage of each
/// interior lies in the interior of the preimage. Both operators must be
/// classified interior operators. The same condition is re-derived
/// through the dual closure operators and must agree in exhaustive mode.
/// The witness is a target subset.
pub fn is_continuous_interior_map(
    f: &TotalMap,
    source_op: &SetOperator,
    target_op: &SetOperator,
    cfg: &VerifyConfig,
) -> Result<Verdict<Subset>> {
    check_map_universes(f, source_op.universe(), target_op.universe())?;
    source_op.require_interior()?;
    target_op.require_interior()?;

    let direct = subset_sweep(target_op.universe(), cfg, |y| {
        f.inverse_image(&target_op.apply(y).expect("subset over the target universe"))
            .is_subset_of(
                &source_op
                    .apply(&f.inverse_image(y))
                    .expect("preimage lies in the source universe"),
            )
    });

    // Complementing both sides turns the condition into closure
    // continuity (preimage form) of the dual operators.
    let dual_source = source_op.dual_closure();
    let dual_target = target_op.dual_closure();
    let via_duals = subset_sweep(target_op.universe(), cfg, |z| {
        dual_source
            .apply(&f.inverse_image(z))
            .expect("preimage lies in the source universe")
            .is_subset_of(&f.inverse_image(
                &dual_target.apply(z).expect("subset over the target universe"),
            ))
    });
    if direct.mode.is_exhaustive()
        && via_duals.mode.is_exhaustive()
        && direct.holds != via_duals.holds
    {
        return Err(Error::Internal(format!(
            "interior continuity routes disagree for {f}"
        )));
    }
    Ok(direct)
}

/// Whether upper approximation commutes with the direct image of `f`
/// exactly: `upper(f[X]) = f[upper(X)]` for every source subset.
pub fn is_upper_natural_transformation(
    f: &TotalMap,
    source: &ApproximationSpace,
    target: &ApproximationSpace,
    cfg: &VerifyConfig,
) -> Result<Verdict<Subset>> {
    check_map_universes(f, source.universe(), target.universe())?;
    Ok(subset_sweep(source.universe(), cfg, |x| {
        target.partition().upper_union(&f.direct_image(x))
            == f.direct_image(&source.partition().upper_union(x))
    }))
}

/// Whether lower approximation commutes with the direct image of `f`
/// exactly: `lower(f[X]) = f[lower(X)]` for every source subset.
pub fn is_lower_natural_transformation(
    f: &TotalMap,
    source: &ApproximationSpace,
    target: &ApproximationSpace,
    cfg: &VerifyConfig,
) -> Result<Verdict<Subset>> {
    check_map_universes(f, source.universe(), target.universe())?;
    Ok(subset_sweep(source.universe(), cfg, |x| {
        target.partition().lower_union(&f.direct_image(x))
            == f.direct_image(&source.partition().lower_union(x))
    }))
}

/// Stored map showing that relation preservation does not imply upper
/// naturality. Both spaces have a single block; collapsing {a,b} onto p
/// lands the class inside a strictly larger one, so images of classes are
/// contained in classes without equalling them. Returns (source, target,
/// map).
pub fn upper_naturality_counterexample() -> (ApproximationSpace, ApproximationSpace, TotalMap) {
    let u = Universe::new(["a", "b"]).expect("stored names are distinct");
    let v = Universe::new(["p", "q"]).expect("stored names are distinct");
    let source = ApproximationSpace::new(Partition::universal(&u));
    let target = ApproximationSpace::new(Partition::universal(&v));
    let map =
        TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p")]).expect("stored pairs are total");
    (source, target, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approximation::Partition;
    use crate::enumerate::{all_partitions, all_total_maps};

    fn space(universe: &Universe, blocks: &[&[&str]]) -> ApproximationSpace {
        ApproximationSpace::new(
            Partition::from_blocks(universe, blocks.iter().map(|b| b.iter().copied())).unwrap(),
        )
    }

    fn cfg() -> VerifyConfig {
        VerifyConfig::default()
    }

    #[test]
    fn preserving_and_splitting_maps() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let v = Universe::new(["p", "q"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let t = space(&v, &[&["p"], &["q"]]);
        let f = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p"), ("c", "q"), ("d", "q")])
            .unwrap();
        assert!(is_relation_preserving(&f, &s, &t).unwrap().holds);

        let one_block = space(&u, &[&["a", "b", "c", "d"]]);
        let g = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p"), ("c", "q"), ("d", "q")])
            .unwrap();
        let verdict = is_relation_preserving(&g, &one_block, &t).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().to_string(), "(a,c)");

        let id = TotalMap::identity(&u);
        assert!(is_relation_preserving(&id, &s, &s).unwrap().holds);

        let wrong = TotalMap::identity(&v);
        assert!(is_relation_preserving(&wrong, &s, &t).is_err());
    }

    #[test]
    fn suite_is_unanimous_on_both_outcomes() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let v = Universe::new(["p", "q"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let t = space(&v, &[&["p"], &["q"]]);
        let f = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p"), ("c", "q"), ("d", "q")])
            .unwrap();
        let good = continuity_suite(&f, &s, &t, &cfg()).unwrap();
        assert!(good.all_hold());
        assert!(good.unanimous());
        assert!(good.fully_exhaustive());

        let ab = Universe::new(["a", "b"]).unwrap();
        let pq = Universe::new(["p", "q"]).unwrap();
        let one = space(&ab, &[&["a", "b"]]);
        let split = space(&pq, &[&["p"], &["q"]]);
        let g = TotalMap::from_pairs(&ab, &pq, [("a", "p"), ("b", "q")]).unwrap();
        let bad = continuity_suite(&g, &one, &split, &cfg()).unwrap();
        assert!(!bad.all_hold());
        assert!(bad.unanimous());
        for c in &bad.conditions {
            assert!(!c.verdict.holds, "{c}");
        }
    }

    #[test]
    fn six_conditions_agree_across_all_small_cases() {
        let mut universes = Vec::new();
        for n in 1..=4usize {
            let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
            universes.push(Universe::new(names).unwrap());
        }
        for source_u in &universes {
            for target_u in &universes {
                let source_parts = all_partitions(source_u).unwrap();
                let target_parts = all_partitions(target_u).unwrap();
                for sp in &source_parts {
                    let s = ApproximationSpace::new(sp.clone());
                    for tp in &target_parts {
                        let t = ApproximationSpace::new(tp.clone());
                        for f in all_total_maps(source_u, target_u).unwrap() {
                            // Unanimity in exhaustive mode is asserted
                            // inside the suite itself.
                            let report = continuity_suite(&f, &s, &t, &cfg()).unwrap();
                            assert!(report.fully_exhaustive());
                            assert_eq!(
                                report.all_hold(),
                                is_relation_preserving(&f, &s, &t).unwrap().holds
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn isomorphism_detection() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let v = Universe::new(["1", "2", "3", "4"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let t = space(&v, &[&["1", "2"], &["3", "4"]]);
        let f = TotalMap::from_pairs(&u, &v, [("a", "1"), ("b", "2"), ("c", "3"), ("d", "4")])
            .unwrap();
        assert!(is_aprs_isomorphism(&f, &s, &t).unwrap().holds);

        // Same spaces, but crossing the blocks: relation-preserving fails,
        // so not an isomorphism.
        let twist = TotalMap::from_pairs(&u, &v, [("a", "1"), ("b", "3"), ("c", "2"), ("d", "4")])
            .unwrap();
        let verdict = is_aprs_isomorphism(&twist, &s, &t).unwrap();
        assert!(!verdict.holds);
        assert!(matches!(
            verdict.witness.unwrap(),
            IsoWitness::ClassMismatch { .. }
        ));

        let pq = Universe::new(["p", "q"]).unwrap();
        let collapse = TotalMap::from_pairs(&u, &pq, [("a", "p"), ("b", "p"), ("c", "q"), ("d", "q")])
            .unwrap();
        let t2 = space(&pq, &[&["p"], &["q"]]);
        let verdict = is_aprs_isomorphism(&collapse, &s, &t2).unwrap();
        assert!(matches!(
            verdict.witness.unwrap(),
            IsoWitness::SizeMismatch { .. }
        ));

        let discrete = space(&u, &[&["a"], &["b"], &["c"], &["d"]]);
        let indiscrete = space(&u, &[&["a", "b", "c", "d"]]);
        let id = TotalMap::identity(&u);
        let verdict = is_aprs_isomorphism(&id, &discrete, &indiscrete).unwrap();
        assert!(!verdict.holds);
        assert!(matches!(
            verdict.witness.unwrap(),
            IsoWitness::ClassMismatch { .. }
        ));

        let duplicating = TotalMap::from_pairs(&u, &v, [("a", "1"), ("b", "1"), ("c", "3"), ("d", "4")])
            .unwrap();
        let verdict = is_aprs_isomorphism(&duplicating, &s, &t).unwrap();
        assert!(matches!(
            verdict.witness.unwrap(),
            IsoWitness::NotInjective { .. }
        ));
    }

    #[test]
    fn closure_continuity_follows_relation_preservation() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let v = Universe::new(["p", "q"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let t = space(&v, &[&["p"], &["q"]]);
        let f = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p"), ("c", "q"), ("d", "q")])
            .unwrap();
        let cu = SetOperator::upper_of(s.partition().clone());
        let cv = SetOperator::upper_of(t.partition().clone());
        assert!(matches!(
            is_continuous_closure_map(&f, &cu, &cv, &cfg()),
            Err(Error::Domain(_))
        ));
        cu.classify_closure(&cfg());
        cv.classify_closure(&cfg());
        assert!(is_continuous_closure_map(&f, &cu, &cv, &cfg())
            .unwrap()
            .holds);

        let ab = Universe::new(["a", "b"]).unwrap();
        let pq = Universe::new(["p", "q"]).unwrap();
        let one = space(&ab, &[&["a", "b"]]);
        let split = space(&pq, &[&["p"], &["q"]]);
        let g = TotalMap::from_pairs(&ab, &pq, [("a", "p"), ("b", "q")]).unwrap();
        let cu = SetOperator::upper_of(one.partition().clone());
        let cv = SetOperator::upper_of(split.partition().clone());
        cu.classify_closure(&cfg());
        cv.classify_closure(&cfg());
        let verdict = is_continuous_closure_map(&g, &cu, &cv, &cfg()).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().to_string(), "{a}");
    }

    #[test]
    fn interior_continuity_mirrors_closure_continuity() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let v = Universe::new(["p", "q"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let t = space(&v, &[&["p"], &["q"]]);
        let f = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p"), ("c", "q"), ("d", "q")])
            .unwrap();
        let iu = SetOperator::lower_of(s.partition().clone());
        let iv = SetOperator::lower_of(t.partition().clone());
        iu.classify_interior(&cfg());
        iv.classify_interior(&cfg());
        assert!(is_continuous_interior_map(&f, &iu, &iv, &cfg())
            .unwrap()
            .holds);

        let ab = Universe::new(["a", "b"]).unwrap();
        let pq = Universe::new(["p", "q"]).unwrap();
        let one = space(&ab, &[&["a", "b"]]);
        let split = space(&pq, &[&["p"], &["q"]]);
        let g = TotalMap::from_pairs(&ab, &pq, [("a", "p"), ("b", "q")]).unwrap();
        let iu = SetOperator::lower_of(one.partition().clone());
        let iv = SetOperator::lower_of(split.partition().clone());
        iu.classify_interior(&cfg());
        iv.classify_interior(&cfg());
        let verdict = is_continuous_interior_map(&g, &iu, &iv, &cfg()).unwrap();
        assert!(!verdict.holds);
    }

    #[test]
    fn natural_transformations_are_stricter_than_preservation() {
        let (s, t, f) = upper_naturality_counterexample();

        assert!(is_relation_preserving(&f, &s, &t).unwrap().holds);
        let upper = is_upper_natural_transformation(&f, &s, &t, &cfg()).unwrap();
        assert!(!upper.holds);
        assert_eq!(upper.witness.unwrap().to_string(), "{a}");
        let lower = is_lower_natural_transformation(&f, &s, &t, &cfg()).unwrap();
        assert!(!lower.holds);
        assert_eq!(lower.witness.unwrap().to_string(), "{a,b}");
    }

    #[test]
    fn class_preserving_maps_are_upper_natural() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let v = Universe::new(["p", "q"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let t = space(&v, &[&["p"], &["q"]]);
        let f = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p"), ("c", "q"), ("d", "q")])
            .unwrap();
        assert!(is_upper_natural_transformation(&f, &s, &t, &cfg())
            .unwrap()
            .holds);
        // Lower naturality is stronger: collapsing a class inflates
        // lower(f[X]) past f[lower(X)].
        let lower = is_lower_natural_transformation(&f, &s, &t, &cfg()).unwrap();
        assert!(!lower.holds);
        assert_eq!(lower.witness.unwrap().to_string(), "{a}");
    }

    #[test]
    fn isomorphisms_are_natural_both_ways() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let v = Universe::new(["1", "2", "3", "4"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let t = space(&v, &[&["1", "2"], &["3", "4"]]);
        let f = TotalMap::from_pairs(&u, &v, [("a", "1"), ("b", "2"), ("c", "3"), ("d", "4")])
            .unwrap();
        assert!(is_upper_natural_transformation(&f, &s, &t, &cfg())
            .unwrap()
            .holds);
        assert!(is_lower_natural_transformation(&f, &s, &t, &cfg())
            .unwrap()
            .holds);
    }

    #[test]
    fn composition_preserves_arrows() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let v = Universe::new(["p", "q"]).unwrap();
        let w = Universe::new(["x"]).unwrap();
        let s = space(&u, &[&["a", "b"], &["c", "d"]]);
        let t = space(&v, &[&["p"], &["q"]]);
        let r = space(&w, &[&["x"]]);
        let f = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p"), ("c", "q"), ("d", "q")])
            .unwrap();
        let g = TotalMap::from_pairs(&v, &w, [("p", "x"), ("q", "x")]).unwrap();
        assert!(is_relation_preserving(&f, &s, &t).unwrap().holds);
        assert!(is_relation_preserving(&g, &t, &r).unwrap().holds);
        let composed = f.then(&g).unwrap();
        assert!(is_relation_preserving(&composed, &s, &r).unwrap().holds);
    }
}
