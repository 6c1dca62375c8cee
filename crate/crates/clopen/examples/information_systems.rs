//! Information systems: indiscernibility, reducts, and homomorphisms.
//!
//! An information system is a finite attribute-value table. Each attribute
//! subset induces an indiscernibility partition; a reduct is a minimal
//! subset inducing the same partition as the full attribute set. Structure
//! maps between systems are triples acting on objects, attributes, and
//! values, and the non-expansive ones induce relation-preserving maps
//! between the finest spaces.

use clopen::infosys::{
    finest_space_arrow, hprime_h_counterexample, is_non_expansive, is_oad_homomorphism,
    single_attribute_system, OadHom,
};
use clopen::{InfoSystem, TotalMap, Universe};
use std::collections::BTreeMap;

fn main() -> clopen::Result<()> {
    let objects = Universe::new(["x1", "x2", "x3", "x4", "x5", "x6"])?;
    let system = InfoSystem::from_rows(
        objects,
        ["color", "size", "weight"],
        [
            ["red", "small", "light"],
            ["red", "small", "light"],
            ["red", "large", "heavy"],
            ["green", "large", "heavy"],
            ["green", "large", "heavy"],
            ["green", "small", "light"],
        ],
    )?;
    println!("{system}");

    println!();
    for attrs in [vec![], vec!["color"], vec!["size"], vec!["color", "size"]] {
        let partition = system.indiscernibility(attrs.iter().copied())?;
        println!("ind({{{}}}) = {partition}", attrs.join(","));
    }

    // Weight duplicates size here, so {color,size} and {color,weight} are
    // both reducts while the full set is not minimal.
    println!();
    for reduct in system.find_reducts()? {
        println!("reduct: {{{}}}", reduct.join(","));
    }

    // The finest partition, presented as a single-attribute system, carries
    // the same structure with canonical class names for values.
    let space = system.finest_space();
    println!();
    println!("finest partition: {}", space.partition());
    println!();
    println!("{}", single_attribute_system(&space));

    // A homomorphism onto a coarser system: every attribute must land on a
    // target attribute, so weight folds into the same column as size.
    let target_objects = Universe::new(["y1", "y2", "y3"])?;
    let target = InfoSystem::from_rows(
        target_objects.clone(),
        ["hue", "bulk"],
        [["dark", "small"], ["dark", "large"], ["dark", "small"]],
    )?;
    let objects_map = TotalMap::from_pairs(
        system.objects(),
        &target_objects,
        [
            ("x1", "y1"),
            ("x2", "y1"),
            ("x3", "y2"),
            ("x4", "y2"),
            ("x5", "y2"),
            ("x6", "y3"),
        ],
    )?;
    let attributes = BTreeMap::from([
        ("color".to_string(), "hue".to_string()),
        ("size".to_string(), "bulk".to_string()),
        ("weight".to_string(), "bulk".to_string()),
    ]);
    let values = BTreeMap::from([
        ("red".to_string(), "dark".to_string()),
        ("green".to_string(), "dark".to_string()),
        ("small".to_string(), "small".to_string()),
        ("large".to_string(), "large".to_string()),
        ("light".to_string(), "small".to_string()),
        ("heavy".to_string(), "large".to_string()),
    ]);
    let hom = OadHom::new(system.clone(), target, objects_map, attributes, values)?;
    println!();
    println!("homomorphism: {}", is_oad_homomorphism(&hom));
    println!("non-expansive: {}", is_non_expansive(&hom));

    // Non-expansive homomorphisms act on the finest spaces.
    let arrow = finest_space_arrow(&hom)?;
    println!("induced map on finest spaces: {arrow}");

    // Round-tripping a two-attribute system through its finest space
    // forgets the attribute structure: partitions survive, tables do not.
    let (original, roundtripped) = hprime_h_counterexample();
    println!();
    println!(
        "round trip keeps the partition but rebuilds {} attributes as {}",
        original.attributes().len(),
        roundtripped.attributes().len()
    );
    assert_eq!(
        original.finest_space().partition(),
        roundtripped.finest_space().partition()
    );
    assert_ne!(original, roundtripped);
    Ok(())
}
