//! Naturality of upper and lower approximation along a map.
//!
//! A map is upper-natural when taking the upper approximation commutes with
//! the direct image on every subset, and that holds exactly when the map
//! carries each equivalence class onto an equivalence class. Lower
//! naturality is strictly stronger: a class-preserving collapse already
//! fails it, while isomorphisms satisfy both.

use clopen::morphisms::{
    is_lower_natural_transformation, is_relation_preserving, is_upper_natural_transformation,
};
use clopen::{ApproximationSpace, Partition, TotalMap, Universe, VerifyConfig};

fn main() -> clopen::Result<()> {
    let cfg = VerifyConfig::default();
    let u = Universe::new(["a", "b"])?;
    let v = Universe::new(["p"])?;
    let source = ApproximationSpace::new(Partition::from_blocks(&u, [vec!["a", "b"]])?);
    let target = ApproximationSpace::new(Partition::from_blocks(&v, [vec!["p"]])?);

    // Collapsing {a,b} onto {p} maps the class onto a class, hence is
    // upper-natural.
    let collapse = TotalMap::from_pairs(&u, &v, [("a", "p"), ("b", "p")])?;
    println!("collapse of {} onto {}:", source.partition(), target.partition());
    println!(
        "  relation-preserving: {}",
        is_relation_preserving(&collapse, &source, &target)?
    );
    println!(
        "  upper natural:       {}",
        is_upper_natural_transformation(&collapse, &source, &target, &cfg)?
    );

    // Lower naturality fails on X = {a}: the image of the empty lower
    // approximation is empty, but the lower approximation of {p} is {p}.
    let lower = is_lower_natural_transformation(&collapse, &source, &target, &cfg)?;
    println!("  lower natural:       {lower}");
    assert!(!lower.holds);

    // A bijection carrying classes to classes is natural in both
    // directions.
    let w = Universe::new(["x", "y"])?;
    let swapped = ApproximationSpace::new(Partition::from_blocks(&w, [vec!["x", "y"]])?);
    let swap = TotalMap::from_pairs(&u, &w, [("a", "y"), ("b", "x")])?;
    println!();
    println!("bijection of {} onto {}:", source.partition(), swapped.partition());
    println!(
        "  upper natural:       {}",
        is_upper_natural_transformation(&swap, &source, &swapped, &cfg)?
    );
    println!(
        "  lower natural:       {}",
        is_lower_natural_transformation(&swap, &source, &swapped, &cfg)?
    );
    Ok(())
}
