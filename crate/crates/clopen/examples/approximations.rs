//! Lower and upper approximations in a Pawlak space.
//!
//! Builds a four-element universe partitioned into two blocks, then walks
//! every subset through its lower approximation, upper approximation, and
//! boundary, checking the duality `lower(X) = U − upper(U − X)` as it goes.

use clopen::{ApproximationSpace, Partition, Subset, Universe};

fn main() -> clopen::Result<()> {
    let u = Universe::new(["a", "b", "c", "d"])?;
    let space = ApproximationSpace::new(Partition::from_blocks(
        &u,
        [vec!["a", "b"], vec!["c", "d"]],
    )?);

    println!("space: {}", space.partition());
    println!();
    println!("{:<12} {:<12} {:<12} {:<12}", "X", "lower", "upper", "boundary");
    for mask in 0..(1u64 << u.len()) {
        let x = Subset::from_mask(&u, mask);
        let lower = space.lower(&x)?;
        let upper = space.upper(&x)?;
        let boundary = space.boundary(&x)?;
        println!(
            "{:<12} {:<12} {:<12} {:<12}",
            x.to_string(),
            lower.to_string(),
            upper.to_string(),
            boundary.to_string()
        );

        let dual = space.upper(&x.complement())?.complement();
        assert_eq!(lower, dual);
    }

    println!();
    println!("definable sets are exactly the unions of blocks:");
    for mask in 0..(1u64 << u.len()) {
        let x = Subset::from_mask(&u, mask);
        if space.lower(&x)? == space.upper(&x)? {
            println!("  {x}");
        }
    }
    Ok(())
}
