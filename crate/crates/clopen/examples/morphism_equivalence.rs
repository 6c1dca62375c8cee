//! Six equivalent faces of continuity between approximation spaces.
//!
//! For a map between spaces, preserving the indiscernibility relation is
//! the same property as continuity for the clopen topologies, and the same
//! again as four approximation-operator conditions. The example runs the
//! whole suite on a preserving map and on a splitting map, then checks a
//! bijection for being an isomorphism.

use clopen::morphisms::{continuity_suite, is_aprs_isomorphism, is_relation_preserving};
use clopen::{ApproximationSpace, Partition, TotalMap, Universe, VerifyConfig};

fn space(
    names: &[&str],
    blocks: &[&[&str]],
) -> clopen::Result<ApproximationSpace> {
    let u = Universe::new(names.iter().copied())?;
    let blocks: Vec<Vec<&str>> = blocks.iter().map(|b| b.to_vec()).collect();
    Ok(ApproximationSpace::new(Partition::from_blocks(&u, blocks)?))
}

fn main() -> clopen::Result<()> {
    let cfg = VerifyConfig::default();
    let coarse = space(&["a", "b", "c", "d"], &[&["a", "b"], &["c", "d"]])?;
    let merged = space(&["p", "q"], &[&["p", "q"]])?;
    let split = space(&["p", "q"], &[&["p"], &["q"]])?;

    // Sending both blocks onto one block can only merge classes. Every
    // condition in the suite holds.
    let collapse = TotalMap::from_pairs(
        coarse.universe(),
        merged.universe(),
        [("a", "p"), ("b", "p"), ("c", "q"), ("d", "q")],
    )?;
    println!("collapse {} onto one block:", coarse.partition());
    println!("{}", continuity_suite(&collapse, &coarse, &merged, &cfg)?);

    // Splitting a block across two classes breaks preservation, and every
    // condition fails with it.
    let splitter = TotalMap::from_pairs(
        coarse.universe(),
        split.universe(),
        [("a", "p"), ("b", "q"), ("c", "p"), ("d", "q")],
    )?;
    println!();
    println!("split each block across two classes:");
    let report = continuity_suite(&splitter, &coarse, &split, &cfg)?;
    println!("{report}");
    assert!(report.unanimous());
    assert!(!report.all_hold());

    let direct = is_relation_preserving(&splitter, &coarse, &split)?;
    println!("direct check agrees: {direct}");

    // An isomorphism must be bijective and carry classes onto classes
    // exactly.
    let two = space(&["x", "y"], &[&["x"], &["y"]])?;
    let swap = TotalMap::from_pairs(
        split.universe(),
        two.universe(),
        [("p", "y"), ("q", "x")],
    )?;
    println!();
    println!("swap of two singleton classes: {}", is_aprs_isomorphism(&swap, &split, &two)?);

    let squash = TotalMap::from_pairs(
        split.universe(),
        merged.universe(),
        [("p", "p"), ("q", "p")],
    )?;
    println!("squash onto one point: {}", is_aprs_isomorphism(&squash, &split, &merged)?);
    Ok(())
}
