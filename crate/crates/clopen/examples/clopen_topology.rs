//! The clopen topology induced by a partition.
//!
//! Every approximation space yields a topology whose opens are exactly the
//! unions of equivalence classes. This example prints the opens, verifies
//! that every open is also closed, and shows that the blocks form the unique
//! minimal base: dropping any one of them stops the family from generating
//! the topology.

use clopen::{ApproximationSpace, FiniteTopology, Partition, Universe};

fn main() -> clopen::Result<()> {
    let u = Universe::new(["a", "b", "c", "d", "e"])?;
    let space = ApproximationSpace::new(Partition::from_blocks(
        &u,
        [vec!["a", "b"], vec!["c"], vec!["d", "e"]],
    )?);
    let topology = space.clopen_topology()?;

    println!("space: {}", space.partition());
    println!("opens ({} of {} subsets):", topology.opens().len(), 1u64 << u.len());
    for open in topology.opens() {
        println!("  {open}");
    }

    let report = topology.analyze();
    println!();
    println!("{report}");

    let base = report.minimal_base.as_ref().expect("family is a topology");
    println!();
    println!("the minimal base is exactly the blocks; no proper subfamily works:");
    for skip in 0..base.len() {
        let rest: Vec<_> = base
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, b)| b.clone())
            .collect();
        let still_base = topology.is_base(&rest);
        println!("  without {}: base = {}", base[skip], still_base);
        assert!(!still_base);
    }

    // A family that is a topology without being clopen: the Sierpinski-style
    // nesting on two points.
    let two = Universe::new(["0", "1"])?;
    let nested = FiniteTopology::from_family(
        &two,
        vec![
            clopen::Subset::empty(&two),
            clopen::Subset::from_names(&two, ["0"])?,
            clopen::Subset::full(&two),
        ],
    )?;
    println!();
    println!("nested family on two points:");
    println!("{}", nested.analyze());
    Ok(())
}
