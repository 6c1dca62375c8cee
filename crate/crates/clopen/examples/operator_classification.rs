//! Classifying set operators against the closure and interior axioms.
//!
//! A rough closure operator satisfies the four Kuratowski closure axioms
//! plus the rough condition `c(X) = U − c(U − c(X))`; rough interior
//! operators are the duals. This example classifies three operators: an
//! upper approximation (rough closure), its dual lower approximation
//! (rough interior), and a topological closure that is not rough.

use clopen::{ApproximationSpace, Partition, SetOperator, Subset, Universe, VerifyConfig};

fn main() -> clopen::Result<()> {
    let cfg = VerifyConfig::default();
    let u = Universe::new(["a", "b", "c"])?;
    let partition = Partition::from_blocks(&u, [vec!["a", "b"], vec!["c"]])?;

    let upper = SetOperator::upper_of(partition.clone());
    println!("upper approximation of {partition}:");
    println!("{}", upper.classify_closure(&cfg));

    let lower = clopen::functors::to_rough_interior(&upper, &cfg)?;
    println!();
    println!("its dual, classified as an interior operator:");
    println!("{}", lower.classify_interior(&cfg));

    // Closure of the nested topology {∅, {a}, U} on {a,b}: idempotent and
    // additive, but its opens are not closed under complement, so the rough
    // condition fails.
    let two = Universe::new(["a", "b"])?;
    let b = Subset::from_names(&two, ["b"])?;
    let sierpinski = SetOperator::from_fn(&two, |x| {
        if x == &b {
            Subset::full(&two)
        } else {
            x.clone()
        }
    })?;
    println!();
    println!("closure from a non-clopen topology:");
    println!("{}", sierpinski.classify_closure(&cfg));

    // Round trip through an approximation space: a verified rough closure
    // is the upper operator of the space its point closures rebuild.
    let rebuilt = clopen::functors::induced_space(&upper)?;
    let space = ApproximationSpace::new(partition);
    assert_eq!(rebuilt, space);
    println!();
    println!("point closures rebuild the original space: {}", rebuilt.partition());
    Ok(())
}
