//! Set operators `2^U -> 2^U`, their classification against the closure
//! and interior axioms, the stronger rough conditions, associated
//! topologies, and analysis of finite open-set families.
//!
//! An operator either stores its full value table (bounded universes) or
//! evaluates through a partition, which scales to any universe size.
//! Classification sweeps are exhaustive below the documented thresholds
//! and seeded-random above them; every verdict records which.

use crate::approximation::Partition;
use crate::enumerate::{self, random_subset};
use crate::error::{Error, Result};
use crate::sets::{Subset, Universe};
use crate::verify::{Verdict, VerifyConfig, VerifyMode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Largest universe for which operators can be stored as value tables.
pub const MAX_TABLE_UNIVERSE: usize = 16;

/// Largest universe for which single-set conditions are swept exhaustively.
pub const EXHAUSTIVE_SINGLE_LIMIT: usize = 14;

/// Largest universe for which two-set conditions are swept exhaustively.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 10;

/// Largest universe size accepted by [`rough_closure_census`].
pub const MAX_CENSUS_UNIVERSE: usize = 3;

#[derive(Debug, Clone)]
enum Backing {
    Table(Arc<Vec<Subset>>),
    Upper(Partition),
    Lower(Partition),
}

/// A total function from subsets of a universe to subsets of the same
/// universe.
///
/// Classification results are cached on first computation, so the
/// "verified rough closure" state that other modules demand is a property
/// of the value, not of the call site.
#[derive(Debug, Clone)]
pub struct SetOperator {
    universe: Universe,
    backing: Backing,
    closure_report: OnceLock<Arc<AxiomReport>>,
    interior_report: OnceLock<Arc<AxiomReport>>,
}

impl SetOperator {
    /// Operator from an explicit value table given as `(input, output)`
    /// pairs. The table must contain every subset of the universe exactly
    /// once, which bounds the universe at [`MAX_TABLE_UNIVERSE`] elements.
    pub fn from_table(
        universe: &Universe,
        entries: impl IntoIterator<Item = (Subset, Subset)>,
    ) -> Result<SetOperator> {
        let n = universe.len();
        if n > MAX_TABLE_UNIVERSE {
            return Err(Error::Capacity {
                what: "operator table universe",
                limit: MAX_TABLE_UNIVERSE as u64,
                actual: n as u64,
            });
        }
        let size = 1usize << n;
        let mut table: Vec<Option<Subset>> = vec![None; size];
        for (input, output) in entries {
            if input.universe() != universe || output.universe() != universe {
                return Err(Error::UniverseMismatch(
                    "table entry from a different universe".to_string(),
                ));
            }
            let slot = &mut table[input.to_mask() as usize];
            if slot.is_some() {
                return Err(Error::invalid(
                    "operator table",
                    format!("duplicate entry for {input}"),
                ));
            }
            *slot = Some(output);
        }
        if let Some(mask) = table.iter().position(Option::is_none) {
            return Err(Error::invalid(
                "operator table",
                format!("missing entry for {}", Subset::from_mask(universe, mask as u64)),
            ));
        }
        Ok(SetOperator {
            universe: universe.clone(),
            backing: Backing::Table(Arc::new(table.into_iter().flatten().collect())),
            closure_report: OnceLock::new(),
            interior_report: OnceLock::new(),
        })
    }

    /// Operator tabulated by evaluating `f` on every subset, in canonical
    /// order. Same size bound as [`SetOperator::from_table`].
    pub fn from_fn(
        universe: &Universe,
        mut f: impl FnMut(&Subset) -> Subset,
    ) -> Result<SetOperator> {
        let n = universe.len();
        if n > MAX_TABLE_UNIVERSE {
            return Err(Error::Capacity {
                what: "operator table universe",
                limit: MAX_TABLE_UNIVERSE as u64,
                actual: n as u64,
            });
        }
        let mut table = Vec::with_capacity(1 << n);
        for mask in 0..(1u64 << n) {
            let out = f(&Subset::from_mask(universe, mask));
            if out.universe() != universe {
                return Err(Error::UniverseMismatch(
                    "operator image from a different universe".to_string(),
                ));
            }
            table.push(out);
        }
        Ok(SetOperator {
            universe: universe.clone(),
            backing: Backing::Table(Arc::new(table)),
            closure_report: OnceLock::new(),
            interior_report: OnceLock::new(),
        })
    }

    /// The upper-approximation operator of a partition. No size bound:
    /// evaluation walks the blocks instead of a table.
    pub fn upper_of(partition: Partition) -> SetOperator {
        SetOperator {
            universe: partition.universe().clone(),
            backing: Backing::Upper(partition),
            closure_report: OnceLock::new(),
            interior_report: OnceLock::new(),
        }
    }

    /// The lower-approximation operator of a partition.
    pub fn lower_of(partition: Partition) -> SetOperator {
        SetOperator {
            universe: partition.universe().clone(),
            backing: Backing::Lower(partition),
            closure_report: OnceLock::new(),
            interior_report: OnceLock::new(),
        }
    }

    /// The identity operator, backed by the discrete partition so it
    /// works on universes of any size.
    pub fn identity(universe: &Universe) -> SetOperator {
        SetOperator::upper_of(Partition::identity(universe))
    }

    /// Universe the operator acts on.
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// The partition behind a partition-backed operator.
    pub fn partition(&self) -> Option<&Partition> {
        match &self.backing {
            Backing::Table(_) => None,
            Backing::Upper(p) | Backing::Lower(p) => Some(p),
        }
    }

    fn eval(&self, x: &Subset) -> Subset {
        debug_assert!(x.universe() == &self.universe);
        match &self.backing {
            Backing::Table(t) => t[x.to_mask() as usize].clone(),
            Backing::Upper(p) => p.upper_union(x),
            Backing::Lower(p) => p.lower_union(x),
        }
    }

    /// Applies the operator to `x`.
    pub fn apply(&self, x: &Subset) -> Result<Subset> {
        if x.universe() != &self.universe {
            return Err(Error::UniverseMismatch(
                "subset belongs to a different universe than the operator".to_string(),
            ));
        }
        Ok(self.eval(x))
    }

    /// The dual operator `X -> U - op(U - X)`. Turns a closure operator
    /// into its interior operator.
    pub fn dual_interior(&self) -> SetOperator {
        self.dual()
    }

    /// The dual operator `X -> U - op(U - X)`. Turns an interior operator
    /// into its closure operator.
    pub fn dual_closure(&self) -> SetOperator {
        self.dual()
    }

    fn dual(&self) -> SetOperator {
        let backing = match &self.backing {
            Backing::Upper(p) => Backing::Lower(p.clone()),
            Backing::Lower(p) => Backing::Upper(p.clone()),
            Backing::Table(t) => {
                let size = t.len();
                let table: Vec<Subset> = (0..size)
                    .map(|mask| t[size - 1 - mask].complement())
                    .collect();
                Backing::Table(Arc::new(table))
            }
        };
        SetOperator {
            universe: self.universe.clone(),
            backing,
            closure_report: OnceLock::new(),
            interior_report: OnceLock::new(),
        }
    }

    /// Re-tabulates the operator as an explicit table.
    pub fn to_table(&self) -> Result<SetOperator> {
        SetOperator::from_fn(&self.universe, |x| self.eval(x))
    }

    /// Classifies the operator against the closure axioms and the rough
    /// closure condition. The report is computed once and cached; later
    /// calls return the cached report regardless of `cfg`.
    pub fn classify_closure(&self, cfg: &VerifyConfig) -> &AxiomReport {
        self.closure_report
            .get_or_init(|| Arc::new(classify(self, OperatorKind::Closure, cfg)))
    }

    /// Classifies the operator against the interior axioms and the rough
    /// interior condition. Cached like [`SetOperator::classify_closure`].
    pub fn classify_interior(&self, cfg: &VerifyConfig) -> &AxiomReport {
        self.interior_report
            .get_or_init(|| Arc::new(classify(self, OperatorKind::Interior, cfg)))
    }

    /// True when a cached closure report exists and shows a rough closure
    /// operator.
    pub fn is_verified_rough_closure(&self) -> bool {
        self.closure_report.get().is_some_and(|r| r.is_rough())
    }

    /// True when a cached interior report exists and shows a rough
    /// interior operator.
    pub fn is_verified_rough_interior(&self) -> bool {
        self.interior_report.get().is_some_and(|r| r.is_rough())
    }

    pub(crate) fn require_closure(&self) -> Result<&AxiomReport> {
        let report = self.closure_report.get().ok_or_else(|| {
            Error::Domain(
                "operator has not been classified; run classify_closure first".to_string(),
            )
        })?;
        if !report.is_operator() {
            return Err(Error::Domain(format!(
                "operator is not a closure operator ({})",
                report.summary()
            )));
        }
        Ok(report)
    }

    pub(crate) fn require_interior(&self) -> Result<&AxiomReport> {
        let report = self.interior_report.get().ok_or_else(|| {
            Error::Domain(
                "operator has not been classified; run classify_interior first".to_string(),
            )
        })?;
        if !report.is_operator() {
            return Err(Error::Domain(format!(
                "operator is not an interior operator ({})",
                report.summary()
            )));
        }
        Ok(report)
    }

    pub(crate) fn require_rough_closure(&self) -> Result<&AxiomReport> {
        let report = self.closure_report.get().ok_or_else(|| {
            Error::Domain(
                "operator has not been classified; run classify_closure first".to_string(),
            )
        })?;
        if !report.is_rough() {
            return Err(Error::Domain(format!(
                "operator is not a rough closure operator ({})",
                report.summary()
            )));
        }
        Ok(report)
    }

    pub(crate) fn require_rough_interior(&self) -> Result<&AxiomReport> {
        let report = self.interior_report.get().ok_or_else(|| {
            Error::Domain(
                "operator has not been classified; run classify_interior first".to_string(),
            )
        })?;
        if !report.is_rough() {
            return Err(Error::Domain(format!(
                "operator is not a rough interior operator ({})",
                report.summary()
            )));
        }
        Ok(report)
    }

    /// Extensional equality with `other`: agreement on every subset below
    /// the exhaustive threshold. Above it, two verified rough closure
    /// operators are compared on singletons alone, which point-closure
    /// reconstruction makes a complete check; otherwise sampled subsets
    /// decide, and a pass is only "no disagreement found".
    pub fn extensionally_equal(
        &self,
        other: &SetOperator,
        cfg: &VerifyConfig,
    ) -> Result<Verdict<Subset>> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch(
                "operators act on different universes".to_string(),
            ));
        }
        let n = self.universe.len();
        if n <= EXHAUSTIVE_SINGLE_LIMIT {
            let mode = VerifyMode::Exhaustive { checked: 1 << n };
            for mask in 0..(1u64 << n) {
                let x = Subset::from_mask(&self.universe, mask);
                if self.eval(&x) != other.eval(&x) {
                    return Ok(Verdict::fail(x, mode));
                }
            }
            return Ok(Verdict::pass(mode));
        }
        if self.is_verified_rough_closure() && other.is_verified_rough_closure() {
            let mode = VerifyMode::Exhaustive { checked: n as u64 };
            for i in 0..n {
                let x = Subset::singleton_index(&self.universe, i);
                if self.eval(&x) != other.eval(&x) {
                    return Ok(Verdict::fail(x, mode));
                }
            }
            return Ok(Verdict::pass(mode));
        }
        let mode = VerifyMode::Sampled {
            seed: cfg.seed,
            trials: cfg.trials,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for trial in 0..cfg.trials {
            let x = match trial as usize {
                0 => Subset::empty(&self.universe),
                1 => Subset::full(&self.universe),
                t if t - 2 < n => Subset::singleton_index(&self.universe, t - 2),
                _ => random_subset(&mut rng, &self.universe),
            };
            if self.eval(&x) != other.eval(&x) {
                return Ok(Verdict::fail(x, mode));
            }
        }
        Ok(Verdict::pass(mode))
    }

    /// The topology whose opens are the fixed points of the dual: the
    /// sets `X` with `op(U - X) = U - X`. Requires the operator to be a
    /// classified closure operator, and a universe small enough to sweep.
    pub fn operator_topology(&self, cfg: &VerifyConfig) -> Result<FiniteTopology> {
        let report = self.classify_closure(cfg);
        if !report.is_operator() {
            return Err(Error::Domain(format!(
                "not a closure operator ({})",
                report.summary()
            )));
        }
        let n = self.universe.len();
        if n > MAX_TABLE_UNIVERSE {
            return Err(Error::Capacity {
                what: "topology fixed-point sweep universe",
                limit: MAX_TABLE_UNIVERSE as u64,
                actual: n as u64,
            });
        }
        let mut opens = Vec::new();
        for mask in 0..(1u64 << n) {
            let x = Subset::from_mask(&self.universe, mask);
            let closed = x.complement();
            if self.eval(&closed) == closed {
                opens.push(x);
            }
        }
        FiniteTopology::from_family(&self.universe, opens)
    }

    /// The point closures `op({u})`, deduplicated and in canonical order.
    /// For a verified rough closure operator these are the unique minimal
    /// base of the associated topology.
    pub fn point_closure_basis(&self) -> Result<Vec<Subset>> {
        self.require_rough_closure()?;
        let mut basis: Vec<Subset> = Vec::new();
        for i in 0..self.universe.len() {
            let c = self.eval(&Subset::singleton_index(&self.universe, i));
            if !basis.contains(&c) {
                basis.push(c);
            }
        }
        basis.sort_by(|a, b| a.canonical_cmp(b));
        Ok(basis)
    }
}

impl fmt::Display for SetOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.backing {
            Backing::Table(_) => write!(f, "table operator on {}", self.universe),
            Backing::Upper(p) => write!(f, "upper operator of {p}"),
            Backing::Lower(p) => write!(f, "lower operator of {p}"),
        }
    }
}

/// Whether a report classifies against the closure or the interior axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Closure,
    Interior,
}

/// One axiom or condition an operator is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Kc1,
    Kc2,
    Kc3,
    Kc4,
    RoughClosure,
    Ki1,
    Ki2,
    Ki3,
    Ki4,
    RoughInterior,
}

impl Axiom {
    /// Short name, e.g. `KC1`.
    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Kc1 => "KC1",
            Axiom::Kc2 => "KC2",
            Axiom::Kc3 => "KC3",
            Axiom::Kc4 => "KC4",
            Axiom::RoughClosure => "rough closure",
            Axiom::Ki1 => "KI1",
            Axiom::Ki2 => "KI2",
            Axiom::Ki3 => "KI3",
            Axiom::Ki4 => "KI4",
            Axiom::RoughInterior => "rough interior",
        }
    }

    /// The condition in formula form.
    pub fn statement(&self) -> &'static str {
        match self {
            Axiom::Kc1 => "c(∅) = ∅",
            Axiom::Kc2 => "X ⊆ c(X)",
            Axiom::Kc3 => "c(c(X)) = c(X)",
            Axiom::Kc4 => "c(X ∪ Y) = c(X) ∪ c(Y)",
            Axiom::RoughClosure => "c(X) = U − c(U − c(X))",
            Axiom::Ki1 => "i(U) = U",
            Axiom::Ki2 => "i(X) ⊆ X",
            Axiom::Ki3 => "i(i(X)) = i(X)",
            Axiom::Ki4 => "i(X ∩ Y) = i(X) ∩ i(Y)",
            Axiom::RoughInterior => "i(X) = U − i(U − i(X))",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.statement())
    }
}

/// The subset(s) at which a condition failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCounterexample {
    pub x: Subset,
    pub y: Option<Subset>,
}

impl fmt::Display for AxiomCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.y {
            Some(y) => write!(f, "X={}, Y={}", self.x, y),
            None => write!(f, "X={}", self.x),
        }
    }
}

/// Verdict for a single axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub verdict: Verdict<AxiomCounterexample>,
}

impl fmt::Display for AxiomVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.verdict)
    }
}

/// Full classification of an operator: the four axioms of its kind plus
/// the rough condition, each with its own scope and counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub kind: OperatorKind,
    pub axioms: Vec<AxiomVerdict>,
    pub rough: AxiomVerdict,
}

impl AxiomReport {
    /// True when all four axioms hold, i.e. the operator is a closure
    /// (resp. interior) operator over the checked cases.
    pub fn is_operator(&self) -> bool {
        self.axioms.iter().all(|a| a.verdict.holds)
    }

    /// True when the operator additionally satisfies the rough condition.
    pub fn is_rough(&self) -> bool {
        self.is_operator() && self.rough.verdict.holds
    }

    /// One-line summary such as `closure ✓, rough ✗`.
    pub fn summary(&self) -> String {
        let kind = match self.kind {
            OperatorKind::Closure => "closure",
            OperatorKind::Interior => "interior",
        };
        let mark = |ok: bool| if ok { "✓" } else { "✗" };
        format!(
            "{kind} {}, rough {}",
            mark(self.is_operator()),
            mark(self.rough.verdict.holds)
        )
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for axiom in &self.axioms {
            writeln!(f, "{axiom}")?;
        }
        writeln!(f, "{}", self.rough)?;
        write!(f, "verdict: {}", self.summary())
    }
}

struct ConditionSweep {
    axiom: Axiom,
    failure: Option<AxiomCounterexample>,
}

impl ConditionSweep {
    fn new(axiom: Axiom) -> Self {
        ConditionSweep {
            axiom,
            failure: None,
        }
    }

    fn observe(&mut self, ok: bool, witness: impl FnOnce() -> AxiomCounterexample) {
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn into_verdict(self, mode: VerifyMode) -> AxiomVerdict {
        AxiomVerdict {
            axiom: self.axiom,
            verdict: match self.failure {
                None => Verdict::pass(mode),
                Some(w) => Verdict::fail(w, mode),
            },
        }
    }
}

fn classify(op: &SetOperator, kind: OperatorKind, cfg: &VerifyConfig) -> AxiomReport {
    let universe = op.universe().clone();
    let n = universe.len();

    // The fixed-set axiom is a single evaluation.
    let (fixed_axiom, fixed_input) = match kind {
        OperatorKind::Closure => (Axiom::Kc1, Subset::empty(&universe)),
        OperatorKind::Interior => (Axiom::Ki1, Subset::full(&universe)),
    };
    let fixed_ok = op.eval(&fixed_input) == fixed_input;
    let fixed = AxiomVerdict {
        axiom: fixed_axiom,
        verdict: if fixed_ok {
            Verdict::pass(VerifyMode::Exhaustive { checked: 1 })
        } else {
            Verdict::fail(
                AxiomCounterexample {
                    x: fixed_input,
                    y: None,
                },
                VerifyMode::Exhaustive { checked: 1 },
            )
        },
    };

    let (bound_axiom, idem_axiom, rough_axiom, pair_axiom) = match kind {
        OperatorKind::Closure => (Axiom::Kc2, Axiom::Kc3, Axiom::RoughClosure, Axiom::Kc4),
        OperatorKind::Interior => (Axiom::Ki2, Axiom::Ki3, Axiom::RoughInterior, Axiom::Ki4),
    };
    let mut bound = ConditionSweep::new(bound_axiom);
    let mut idem = ConditionSweep::new(idem_axiom);
    let mut rough = ConditionSweep::new(rough_axiom);

    let mut check_single = |x: &Subset| {
        let ox = op.eval(x);
        let bound_ok = match kind {
            OperatorKind::Closure => x.is_subset_of(&ox),
            OperatorKind::Interior => ox.is_subset_of(x),
        };
        bound.observe(bound_ok, || AxiomCounterexample {
            x: x.clone(),
            y: None,
        });
        idem.observe(op.eval(&ox) == ox, || AxiomCounterexample {
            x: x.clone(),
            y: None,
        });
        // Both rough conditions have the shape op(X) = U - op(U - op(X)).
        let reflected = op.eval(&ox.complement()).complement();
        rough.observe(reflected == ox, || AxiomCounterexample {
            x: x.clone(),
            y: None,
        });
    };

    let single_mode = if n <= EXHAUSTIVE_SINGLE_LIMIT {
        for mask in 0..(1u64 << n) {
            check_single(&Subset::from_mask(&universe, mask));
        }
        VerifyMode::Exhaustive { checked: 1 << n }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.trials {
            check_single(&random_subset(&mut rng, &universe));
        }
        VerifyMode::Sampled {
            seed: cfg.seed,
            trials: cfg.trials,
        }
    };

    let mut pair = ConditionSweep::new(pair_axiom);
    let mut check_pair = |x: &Subset, y: &Subset| {
        let combined = match kind {
            OperatorKind::Closure => op.eval(&x.union(y)),
            OperatorKind::Interior => op.eval(&x.intersection(y)),
        };
        let pointwise = match kind {
            OperatorKind::Closure => op.eval(x).union(&op.eval(y)),
            OperatorKind::Interior => op.eval(x).intersection(&op.eval(y)),
        };
        pair.observe(combined == pointwise, || AxiomCounterexample {
            x: x.clone(),
            y: Some(y.clone()),
        });
    };
    let pair_mode = if n <= EXHAUSTIVE_PAIR_LIMIT {
        for xm in 0..(1u64 << n) {
            let x = Subset::from_mask(&universe, xm);
            for ym in 0..(1u64 << n) {
                check_pair(&x, &Subset::from_mask(&universe, ym));
            }
        }
        VerifyMode::Exhaustive {
            checked: 1u64 << (2 * n),
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.trials {
            let x = random_subset(&mut rng, &universe);
            let y = random_subset(&mut rng, &universe);
            check_pair(&x, &y);
        }
        VerifyMode::Sampled {
            seed: cfg.seed,
            trials: cfg.trials,
        }
    };

    AxiomReport {
        kind,
        axioms: vec![
            fixed,
            bound.into_verdict(single_mode),
            idem.into_verdict(single_mode),
            pair.into_verdict(pair_mode),
        ],
        rough: rough.into_verdict(single_mode),
    }
}

/// A finite family of subsets held as candidate opens of a topology.
///
/// Construction only normalizes (dedup, canonical order); it does not
/// check the topology axioms. [`FiniteTopology::analyze`] diagnoses the
/// family, and families produced by this crate's constructors are
/// topologies by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    universe: Universe,
    opens: Vec<Subset>,
}

impl FiniteTopology {
    /// Normalizes a family of subsets into a candidate topology.
    pub fn from_family(universe: &Universe, opens: Vec<Subset>) -> Result<FiniteTopology> {
        for open in &opens {
            if open.universe() != universe {
                return Err(Error::UniverseMismatch(
                    "open from a different universe".to_string(),
                ));
            }
        }
        let mut opens = opens;
        opens.sort_by(|a, b| a.canonical_cmp(b));
        opens.dedup();
        Ok(FiniteTopology {
            universe: universe.clone(),
            opens,
        })
    }

    /// Universe of the space.
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// The opens, deduplicated, in canonical order.
    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    /// Membership test.
    pub fn contains(&self, s: &Subset) -> bool {
        self.opens
            .binary_search_by(|o| o.canonical_cmp(s))
            .is_ok()
    }

    /// The smallest open containing the named element: the intersection
    /// of all opens containing it. Meaningful for actual topologies.
    pub fn minimal_neighborhood(&self, element: &str) -> Result<Subset> {
        let i = self.universe.index_of(element)?;
        self.neighborhood_by_index(i).ok_or_else(|| {
            Error::Domain(format!(
                "no open contains `{element}`; the family is not a topology"
            ))
        })
    }

    fn neighborhood_by_index(&self, i: usize) -> Option<Subset> {
        let mut acc: Option<Subset> = None;
        for open in &self.opens {
            if open.contains_index(i) {
                acc = Some(match acc {
                    None => open.clone(),
                    Some(p) => p.intersection(open),
                });
            }
        }
        acc
    }

    /// True when every member of the family is a union of `candidate`
    /// sets and every candidate is itself open.
    pub fn is_base(&self, candidate: &[Subset]) -> bool {
        if candidate.iter().any(|b| !self.contains(b)) {
            return false;
        }
        self.opens.iter().all(|open| {
            let mut built = Subset::empty(&self.universe);
            for b in candidate {
                if b.is_subset_of(open) {
                    built = built.union(b);
                }
            }
            built == *open
        })
    }

    /// Diagnoses the family: topology axioms with a violating pair on
    /// failure, clopen-ness, and the minimal base.
    pub fn analyze(&self) -> TopologyReport {
        let violation = self.find_violation();
        let is_topology = violation.is_none();

        let mut clopen_witness = None;
        for open in &self.opens {
            if !self.contains(&open.complement()) {
                clopen_witness = Some(open.clone());
                break;
            }
        }

        let minimal_base = if is_topology {
            let mut base: Vec<Subset> = Vec::new();
            for i in 0..self.universe.len() {
                let n = self
                    .neighborhood_by_index(i)
                    .expect("a topology covers every element");
                if !base.contains(&n) {
                    base.push(n);
                }
            }
            base.sort_by(|a, b| a.canonical_cmp(b));
            Some(base)
        } else {
            None
        };

        TopologyReport {
            is_topology,
            violation,
            is_clopen: clopen_witness.is_none(),
            clopen_witness,
            is_alexandroff: is_topology,
            minimal_base,
        }
    }

    // Checks ∅ and U membership, then intersection closure by folding
    // the opens containing each element, then union closure by unioning
    // every open with every minimal neighborhood. With all neighborhoods
    // in the family, those two sweeps imply closure under arbitrary
    // pairwise intersections and unions.
    fn find_violation(&self) -> Option<TopologyViolation> {
        if !self.contains(&Subset::empty(&self.universe)) {
            return Some(TopologyViolation::MissingEmptySet);
        }
        if !self.contains(&Subset::full(&self.universe)) {
            return Some(TopologyViolation::MissingUniverse);
        }
        let mut neighborhoods: Vec<Subset> = Vec::new();
        for i in 0..self.universe.len() {
            let mut acc: Option<Subset> = None;
            for open in &self.opens {
                if !open.contains_index(i) {
                    continue;
                }
                acc = Some(match acc {
                    None => open.clone(),
                    Some(p) => {
                        let next = p.intersection(open);
                        if !self.contains(&next) {
                            return Some(TopologyViolation::IntersectionNotClosed(
                                p,
                                open.clone(),
                            ));
                        }
                        next
                    }
                });
            }
            let n = acc.expect("the full set contains every element");
            if !neighborhoods.contains(&n) {
                neighborhoods.push(n);
            }
        }
        for open in &self.opens {
            for nb in &neighborhoods {
                let joined = open.union(nb);
                if !self.contains(&joined) {
                    return Some(TopologyViolation::UnionNotClosed(open.clone(), nb.clone()));
                }
            }
        }
        None
    }
}

impl fmt::Display for FiniteTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} opens on {}", self.opens.len(), self.universe)
    }
}

/// Why a family fails the topology axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingEmptySet,
    MissingUniverse,
    /// Both sets are in the family; their union is not.
    UnionNotClosed(Subset, Subset),
    /// Both sets are in the family; their intersection is not.
    IntersectionNotClosed(Subset, Subset),
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyViolation::MissingEmptySet => write!(f, "∅ is not in the family"),
            TopologyViolation::MissingUniverse => write!(f, "U is not in the family"),
            TopologyViolation::UnionNotClosed(a, b) => {
                write!(f, "{a} ∪ {b} = {} is not in the family", a.union(b))
            }
            TopologyViolation::IntersectionNotClosed(a, b) => {
                write!(f, "{a} ∩ {b} = {} is not in the family", a.intersection(b))
            }
        }
    }
}

/// Outcome of [`FiniteTopology::analyze`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyReport {
    pub is_topology: bool,
    pub violation: Option<TopologyViolation>,
    pub is_clopen: bool,
    /// An open whose complement is not open, when one exists.
    pub clopen_witness: Option<Subset>,
    /// Every finite topology is Alexandroff, so this mirrors
    /// `is_topology`.
    pub is_alexandroff: bool,
    /// Deduplicated minimal neighborhoods; present iff the family is a
    /// topology.
    pub minimal_base: Option<Vec<Subset>>,
}

impl fmt::Display for TopologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => writeln!(f, "topology: ✓")?,
            Some(v) => writeln!(f, "topology: ✗ ({v})")?,
        }
        match &self.clopen_witness {
            None => writeln!(f, "clopen: ✓")?,
            Some(w) => writeln!(f, "clopen: ✗ (complement of {w} is not open)")?,
        }
        writeln!(
            f,
            "alexandroff: {} (every finite topology is Alexandroff)",
            if self.is_alexandroff { "✓" } else { "✗" }
        )?;
        match &self.minimal_base {
            Some(base) => {
                let names: Vec<String> = base.iter().map(|b| b.to_string()).collect();
                write!(f, "minimal base: {}", names.join(", "))
            }
            None => write!(f, "minimal base: (none; not a topology)"),
        }
    }
}

/// Counts of the brute-force sweep over every operator table on a small
/// universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub universe_size: usize,
    pub tables_total: u64,
    pub rough_closure_count: u64,
    pub partition_count: u64,
}

impl CensusReport {
    /// True when the rough closure operators are in bijection with the
    /// partitions, as the count predicts.
    pub fn matches(&self) -> bool {
        self.rough_closure_count == self.partition_count
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} tables, {} rough closure operators, {} partitions — {}",
            self.tables_total,
            self.rough_closure_count,
            self.partition_count,
            if self.matches() { "MATCH" } else { "MISMATCH" }
        )
    }
}

// Raw-mask check mirroring `classify`: tables are arrays of subset masks
// indexed by subset mask. Kept separate so the census can sweep millions
// of tables without constructing operators.
fn mask_table_is_rough_closure(table: &[u32], full: u32) -> bool {
    if table[0] != 0 {
        return false;
    }
    let size = table.len();
    for x in 0..size {
        if x as u32 & !table[x] != 0 {
            return false;
        }
    }
    for x in 0..size {
        let cx = table[x];
        if table[cx as usize] != cx {
            return false;
        }
    }
    for x in 0..size {
        let cx = table[x];
        if cx != full & !table[(full & !cx) as usize] {
            return false;
        }
    }
    for x in 0..size {
        for y in x..size {
            if table[x | y] != table[x] | table[y] {
                return false;
            }
        }
    }
    true
}

/// Sweeps every operator table on an `n`-element universe, counting those
/// that are rough closure operators, and pairs the count with the number
/// of partitions of the universe. The table space has `(2^n)^(2^n)`
/// members, which caps `n` at [`MAX_CENSUS_UNIVERSE`].
pub fn rough_closure_census(n: usize) -> Result<CensusReport> {
    if n > MAX_CENSUS_UNIVERSE {
        return Err(Error::Capacity {
            what: "census universe size",
            limit: MAX_CENSUS_UNIVERSE as u64,
            actual: n as u64,
        });
    }
    let size = 1usize << n;
    let full = (size - 1) as u32;
    let tables_total = (size as u64).pow(size as u32);
    let mut rough = 0u64;
    let mut table = vec![0u32; size];
    if n == 0 {
        // One table: the empty-universe operator, which is rough.
        rough = 1;
    } else {
        let digit_bits = n as u32;
        for code in 0..tables_total {
            // The low digit is the image of ∅; KC1 rejects everything else.
            if code as u32 & full != 0 {
                continue;
            }
            for (i, slot) in table.iter_mut().enumerate() {
                *slot = (code >> (digit_bits * i as u32)) as u32 & full;
            }
            if mask_table_is_rough_closure(&table, full) {
                rough += 1;
            }
        }
    }
    Ok(CensusReport {
        universe_size: n,
        tables_total,
        rough_closure_count: rough,
        partition_count: enumerate::bell_number(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approximation::ApproximationSpace;

    fn ab() -> Universe {
        Universe::new(["a", "b"]).unwrap()
    }

    fn abcd() -> Universe {
        Universe::new(["a", "b", "c", "d"]).unwrap()
    }

    fn two_block_partition() -> Partition {
        Partition::from_blocks(&abcd(), [["a", "b"], ["c", "d"]]).unwrap()
    }

    fn table_op(universe: &Universe, rows: &[(&[&str], &[&str])]) -> SetOperator {
        let entries: Vec<(Subset, Subset)> = rows
            .iter()
            .map(|(input, output)| {
                (
                    Subset::from_names(universe, input.iter().copied()).unwrap(),
                    Subset::from_names(universe, output.iter().copied()).unwrap(),
                )
            })
            .collect();
        SetOperator::from_table(universe, entries).unwrap()
    }

    fn cfg() -> VerifyConfig {
        VerifyConfig::default()
    }

    #[test]
    fn table_construction_validates() {
        let u = ab();
        let x = |names: &[&str]| Subset::from_names(&u, names.iter().copied()).unwrap();
        let missing = SetOperator::from_table(&u, [(x(&[]), x(&[]))]);
        assert!(matches!(missing, Err(Error::Invalid { .. })));
        let duplicate = SetOperator::from_table(
            &u,
            [
                (x(&[]), x(&[])),
                (x(&[]), x(&["a"])),
                (x(&["a"]), x(&["a"])),
                (x(&["b"]), x(&["b"])),
                (x(&["a", "b"]), x(&["a", "b"])),
            ],
        );
        assert!(matches!(duplicate, Err(Error::Invalid { .. })));

        let big = Universe::new((0..17).map(|i| format!("e{i}"))).unwrap();
        assert!(matches!(
            SetOperator::from_fn(&big, |x| x.clone()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn partition_backings_match_space_and_table() {
        let p = two_block_partition();
        let space = ApproximationSpace::new(p.clone());
        let upper = SetOperator::upper_of(p.clone());
        let lower = SetOperator::lower_of(p.clone());
        let upper_table = upper.to_table().unwrap();
        let u = space.universe().clone();
        for mask in 0..16u64 {
            let x = Subset::from_mask(&u, mask);
            assert_eq!(upper.apply(&x).unwrap(), space.upper(&x).unwrap());
            assert_eq!(lower.apply(&x).unwrap(), space.lower(&x).unwrap());
            assert_eq!(upper_table.apply(&x).unwrap(), space.upper(&x).unwrap());
        }
    }

    #[test]
    fn rough_closure_example_passes() {
        let u = ab();
        let op = table_op(
            &u,
            &[
                (&[], &[]),
                (&["a"], &["a", "b"]),
                (&["b"], &["a", "b"]),
                (&["a", "b"], &["a", "b"]),
            ],
        );
        let report = op.classify_closure(&cfg());
        assert!(report.is_operator());
        assert!(report.is_rough());
        assert_eq!(report.summary(), "closure ✓, rough ✓");
    }

    #[test]
    fn sierpinski_closure_is_not_rough() {
        let u = ab();
        let op = table_op(
            &u,
            &[
                (&[], &[]),
                (&["a"], &["a"]),
                (&["b"], &["a", "b"]),
                (&["a", "b"], &["a", "b"]),
            ],
        );
        let report = op.classify_closure(&cfg());
        assert!(report.is_operator());
        assert!(!report.is_rough());
        let witness = report.rough.verdict.witness.as_ref().unwrap();
        assert_eq!(witness.x.to_string(), "{a}");

        let opens = op.operator_topology(&cfg()).unwrap();
        let listed: Vec<String> = opens.opens().iter().map(|o| o.to_string()).collect();
        assert_eq!(listed, vec!["{}", "{b}", "{a,b}"]);
        assert!(op.point_closure_basis().is_err());
    }

    #[test]
    fn interior_example_is_not_rough() {
        let u = ab();
        let op = table_op(
            &u,
            &[
                (&[], &[]),
                (&["a"], &["a"]),
                (&["b"], &[]),
                (&["a", "b"], &["a", "b"]),
            ],
        );
        let report = op.classify_interior(&cfg());
        assert!(report.is_operator());
        assert!(!report.is_rough());
        let witness = report.rough.verdict.witness.as_ref().unwrap();
        assert_eq!(witness.x.to_string(), "{a}");
    }

    #[test]
    fn partition_backed_operators_are_rough() {
        let p = two_block_partition();
        let upper = SetOperator::upper_of(p.clone());
        let lower = SetOperator::lower_of(p);
        assert!(upper.classify_closure(&cfg()).is_rough());
        assert!(lower.classify_interior(&cfg()).is_rough());
        assert!(upper.is_verified_rough_closure());
        assert!(lower.is_verified_rough_interior());
    }

    #[test]
    fn axiom_failures_carry_least_witnesses() {
        let u = ab();
        // Constant-to-{a} table: breaks KC1 at ∅ and KC2 at {b}.
        let op = table_op(
            &u,
            &[
                (&[], &["a"]),
                (&["a"], &["a"]),
                (&["b"], &["a"]),
                (&["a", "b"], &["a"]),
            ],
        );
        let report = op.classify_closure(&cfg());
        assert!(!report.is_operator());
        let kc1 = &report.axioms[0];
        assert_eq!(kc1.axiom, Axiom::Kc1);
        assert!(!kc1.verdict.holds);
        let kc2 = &report.axioms[1];
        assert_eq!(kc2.axiom, Axiom::Kc2);
        assert_eq!(
            kc2.verdict.witness.as_ref().unwrap().x.to_string(),
            "{b}"
        );
    }

    #[test]
    fn duality_swaps_upper_and_lower() {
        let p = two_block_partition();
        let upper = SetOperator::upper_of(p.clone());
        let lower = SetOperator::lower_of(p);
        let dual = upper.dual_interior();
        assert!(dual
            .extensionally_equal(&lower, &cfg())
            .unwrap()
            .holds);
        let back = dual.dual_closure();
        assert!(back
            .extensionally_equal(&upper, &cfg())
            .unwrap()
            .holds);
    }

    #[test]
    fn duality_on_tables_matches_pointwise_definition() {
        let u = ab();
        let op = table_op(
            &u,
            &[
                (&[], &[]),
                (&["a"], &["a"]),
                (&["b"], &["a", "b"]),
                (&["a", "b"], &["a", "b"]),
            ],
        );
        let dual = op.dual_interior();
        for mask in 0..4u64 {
            let x = Subset::from_mask(&u, mask);
            let expected = op.apply(&x.complement()).unwrap().complement();
            assert_eq!(dual.apply(&x).unwrap(), expected);
        }
    }

    #[test]
    fn extensional_equality_reports_a_witness() {
        let u = ab();
        let id = SetOperator::from_fn(&u, |x| x.clone()).unwrap();
        let other = table_op(
            &u,
            &[
                (&[], &[]),
                (&["a"], &["a"]),
                (&["b"], &["a", "b"]),
                (&["a", "b"], &["a", "b"]),
            ],
        );
        let verdict = id.extensionally_equal(&other, &cfg()).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap().to_string(), "{b}");
    }

    #[test]
    fn rough_singleton_shortcut_on_large_universes() {
        let names: Vec<String> = (0..20).map(|i| format!("e{i}")).collect();
        let u = Universe::new(names).unwrap();
        let blocks: Vec<Vec<String>> = (0..10)
            .map(|b| vec![format!("e{}", 2 * b), format!("e{}", 2 * b + 1)])
            .collect();
        let p = Partition::from_blocks(&u, blocks).unwrap();
        let op1 = SetOperator::upper_of(p.clone());
        let op2 = SetOperator::upper_of(p);
        op1.classify_closure(&cfg());
        op2.classify_closure(&cfg());
        let verdict = op1.extensionally_equal(&op2, &cfg()).unwrap();
        assert!(verdict.holds);
        assert_eq!(verdict.mode, VerifyMode::Exhaustive { checked: 20 });

        let q = Partition::identity(&u);
        let op3 = SetOperator::upper_of(q);
        op3.classify_closure(&cfg());
        let differs = op1.extensionally_equal(&op3, &cfg()).unwrap();
        assert!(!differs.holds);
    }

    #[test]
    fn operator_topology_matches_clopen_topology() {
        let p = two_block_partition();
        let space = ApproximationSpace::new(p.clone());
        let op = SetOperator::upper_of(p);
        let fixed_points = op.operator_topology(&cfg()).unwrap();
        let block_unions = space.clopen_topology().unwrap();
        assert_eq!(fixed_points, block_unions);
    }

    #[test]
    fn point_closure_basis_is_the_minimal_base() {
        let p = two_block_partition();
        let op = SetOperator::upper_of(p);
        op.classify_closure(&cfg());
        let basis = op.point_closure_basis().unwrap();
        let report = op.operator_topology(&cfg()).unwrap().analyze();
        assert_eq!(basis, report.minimal_base.unwrap());
    }

    #[test]
    fn point_closures_are_symmetric_and_equal_or_disjoint() {
        let u = abcd();
        for p in enumerate::all_partitions(&u).unwrap() {
            let op = SetOperator::upper_of(p);
            op.classify_closure(&cfg());
            let n = u.len();
            let closures: Vec<Subset> = (0..n)
                .map(|i| op.apply(&Subset::singleton_index(&u, i)).unwrap())
                .collect();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(
                        closures[i].contains_index(j),
                        closures[j].contains_index(i)
                    );
                    assert!(
                        closures[i] == closures[j] || !closures[i].intersects(&closures[j])
                    );
                }
            }
        }
    }

    #[test]
    fn unclassified_operator_is_rejected_where_roughness_is_required() {
        let p = two_block_partition();
        let op = SetOperator::upper_of(p);
        assert!(matches!(
            op.point_closure_basis(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn topology_analysis_diagnoses_families() {
        let u = abcd();
        let space = ApproximationSpace::new(two_block_partition());
        let topo = space.clopen_topology().unwrap();
        let report = topo.analyze();
        assert!(report.is_topology);
        assert!(report.is_clopen);
        assert!(report.is_alexandroff);
        let base: Vec<String> = report
            .minimal_base
            .unwrap()
            .iter()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(base, vec!["{a,b}", "{c,d}"]);

        let sets = |masks: &[u64]| {
            masks
                .iter()
                .map(|&m| Subset::from_mask(&u, m))
                .collect::<Vec<_>>()
        };
        let missing_empty =
            FiniteTopology::from_family(&u, sets(&[0b1111])).unwrap().analyze();
        assert_eq!(
            missing_empty.violation,
            Some(TopologyViolation::MissingEmptySet)
        );

        let missing_universe =
            FiniteTopology::from_family(&u, sets(&[0b0000])).unwrap().analyze();
        assert_eq!(
            missing_universe.violation,
            Some(TopologyViolation::MissingUniverse)
        );

        let union_gap = FiniteTopology::from_family(&u, sets(&[0b0000, 0b0001, 0b0010, 0b1111]))
            .unwrap()
            .analyze();
        assert!(!union_gap.is_topology);
        assert!(matches!(
            union_gap.violation,
            Some(TopologyViolation::UnionNotClosed(_, _))
        ));

        let meet_gap =
            FiniteTopology::from_family(&u, sets(&[0b0000, 0b0011, 0b0110, 0b0111, 0b1111]))
                .unwrap()
                .analyze();
        assert!(!meet_gap.is_topology);
        assert!(matches!(
            meet_gap.violation,
            Some(TopologyViolation::IntersectionNotClosed(_, _))
        ));
    }

    #[test]
    fn topology_analysis_agrees_with_direct_pairwise_check() {
        // Oracle: literal pairwise closure under union and intersection.
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let all_members = |family: &FiniteTopology| -> bool {
            let opens = family.opens();
            let mut ok = family.contains(&Subset::empty(&u))
                && family.contains(&Subset::full(&u));
            for x in opens {
                for y in opens {
                    ok &= family.contains(&x.union(y)) && family.contains(&x.intersection(y));
                }
            }
            ok
        };
        for family_bits in 0u32..256 {
            let opens: Vec<Subset> = (0..8u64)
                .filter(|m| family_bits >> m & 1 == 1)
                .map(|m| Subset::from_mask(&u, m))
                .collect();
            let topo = FiniteTopology::from_family(&u, opens).unwrap();
            assert_eq!(
                topo.analyze().is_topology,
                all_members(&topo),
                "family bits {family_bits:#b}"
            );
        }
    }

    #[test]
    fn sierpinski_family_is_topology_but_not_clopen() {
        let u = ab();
        let opens = vec![
            Subset::empty(&u),
            Subset::singleton(&u, "a").unwrap(),
            Subset::full(&u),
        ];
        let report = FiniteTopology::from_family(&u, opens).unwrap().analyze();
        assert!(report.is_topology);
        assert!(!report.is_clopen);
        assert_eq!(report.clopen_witness.unwrap().to_string(), "{a}");
    }

    #[test]
    fn indiscrete_and_discrete_analysis() {
        let u = ab();
        let indiscrete =
            FiniteTopology::from_family(&u, vec![Subset::empty(&u), Subset::full(&u)])
                .unwrap();
        let report = indiscrete.analyze();
        assert!(report.is_topology);
        assert!(report.is_clopen);
        assert_eq!(
            report.minimal_base.unwrap(),
            vec![Subset::full(&u)]
        );
        assert_eq!(
            indiscrete.minimal_neighborhood("a").unwrap(),
            Subset::full(&u)
        );

        let discrete = ApproximationSpace::new(Partition::identity(&u))
            .clopen_topology()
            .unwrap();
        assert_eq!(discrete.opens().len(), 4);
        assert_eq!(
            discrete.minimal_neighborhood("b").unwrap().to_string(),
            "{b}"
        );
        assert!(discrete.minimal_neighborhood("zzz").is_err());
    }

    #[test]
    fn base_detection_requires_every_block() {
        let space = ApproximationSpace::new(two_block_partition());
        let topo = space.clopen_topology().unwrap();
        let blocks = space.partition().blocks().to_vec();
        assert!(topo.is_base(&blocks));
        assert!(!topo.is_base(&blocks[..1]));
        assert!(!topo.is_base(&[]));
    }

    #[test]
    fn census_counts_match_partition_counts() {
        for n in 0..=2 {
            let report = rough_closure_census(n).unwrap();
            assert!(report.matches(), "size {n}: {report}");
        }
        let two = rough_closure_census(2).unwrap();
        assert_eq!(two.tables_total, 256);
        assert_eq!(two.rough_closure_count, 2);
        assert!(rough_closure_census(4).is_err());
    }

    #[test]
    fn census_fast_path_agrees_with_classifier_at_size_two() {
        let u = ab();
        let mut fast = 0u64;
        let mut slow = 0u64;
        for code in 0..256u64 {
            let table: Vec<u32> = (0..4).map(|i| (code >> (2 * i)) as u32 & 3).collect();
            let fast_verdict = mask_table_is_rough_closure(&table, 3);
            let op = SetOperator::from_fn(&u, |x| {
                Subset::from_mask(&u, table[x.to_mask() as usize] as u64)
            })
            .unwrap();
            let slow_verdict = op.classify_closure(&cfg()).is_rough();
            assert_eq!(fast_verdict, slow_verdict, "table code {code}");
            fast += fast_verdict as u64;
            slow += slow_verdict as u64;
        }
        assert_eq!(fast, 2);
        assert_eq!(slow, 2);
    }

    #[test]
    fn empty_universe_operator() {
        let u = Universe::new(Vec::<String>::new()).unwrap();
        let op = SetOperator::from_fn(&u, |x| x.clone()).unwrap();
        let report = op.classify_closure(&cfg());
        assert!(report.is_rough());
        let topo = op.operator_topology(&cfg()).unwrap();
        assert_eq!(topo.opens().len(), 1);
        assert!(topo.analyze().is_topology);
    }
}
