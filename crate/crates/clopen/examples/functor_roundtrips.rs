//! Functor laws and round-trip identities between the categories.
//!
//! Four constructions connect approximation spaces, rough closure
//! operators, and rough interior operators: space to upper operator, rough
//! closure back to the space of its point closures, and the two duals.
//! This example builds an exhaustive corpus of small spaces with every
//! relation-preserving map between them, replays identity and composition
//! laws for each construction, and checks all four round trips.

use clopen::functors::{
    verify_functor_laws, verify_roundtrips, AprsCorpus, FunctorId,
};
use clopen::infosys::verify_neis_roundtrip;
use clopen::VerifyConfig;

fn main() -> clopen::Result<()> {
    let cfg = VerifyConfig::default();
    let corpus = AprsCorpus::exhaustive_up_to(2)?;
    println!(
        "corpus: {} spaces, {} arrows, {} composable pairs",
        corpus.spaces().len(),
        corpus.arrows().len(),
        corpus.composable_pairs().count()
    );

    for functor in [
        FunctorId::UpperOperator,
        FunctorId::InducedSpace,
        FunctorId::DualInterior,
        FunctorId::DualClosure,
    ] {
        let report = verify_functor_laws(functor, &corpus, &cfg)?;
        println!();
        println!("{} ({}):", functor.name(), functor.signature());
        println!("{report}");
        assert!(report.all_hold());
    }

    println!();
    println!("round trips across the corpus:");
    let report = verify_roundtrips(&corpus, &cfg)?;
    println!("{report}");
    assert!(report.all_hold());

    println!();
    println!("information-system round trip:");
    let report = verify_neis_roundtrip(&corpus)?;
    println!("{report}");
    assert!(report.all_hold());
    Ok(())
}
