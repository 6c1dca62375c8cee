//! Exhaustive and seeded-random generation of the small structures the
//! verification sweeps run over: subsets, partitions, and total maps.

use crate::approximation::Partition;
use crate::error::{Error, Result};
use crate::sets::{Subset, TotalMap, Universe};
use rand::Rng;

/// Largest universe [`all_partitions`] will enumerate.
pub const MAX_PARTITION_ENUM: usize = 10;

/// Largest universe [`all_subsets`] will enumerate.
pub const MAX_SUBSET_ENUM: usize = 24;

/// Largest function-space size [`all_total_maps`] will enumerate.
pub const MAX_MAP_ENUM: u64 = 1 << 20;

/// Number of partitions of an `n`-element set. Small `n` only; the
/// sequence outgrows u64 shortly after n = 25.
pub fn bell_number(n: usize) -> u64 {
    assert!(n <= 25, "Bell numbers overflow u64 past n = 25");
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

/// Every partition of the universe, enumerated through restricted growth
/// strings so each partition appears exactly once.
pub fn all_partitions(universe: &Universe) -> Result<Vec<Partition>> {
    let n = universe.len();
    if n > MAX_PARTITION_ENUM {
        return Err(Error::Capacity {
            what: "partition enumeration universe",
            limit: MAX_PARTITION_ENUM as u64,
            actual: n as u64,
        });
    }
    if n == 0 {
        return Ok(vec![Partition::universal(universe)]);
    }
    let mut out = Vec::with_capacity(bell_number(n) as usize);
    let mut digits = vec![0usize; n];
    collect_rgs(universe, &mut digits, 1, 1, &mut out);
    Ok(out)
}

fn collect_rgs(
    universe: &Universe,
    digits: &mut [usize],
    position: usize,
    block_count: usize,
    out: &mut Vec<Partition>,
) {
    if position == digits.len() {
        out.push(partition_of_rgs(universe, digits, block_count));
        return;
    }
    for d in 0..=block_count {
        digits[position] = d;
        let next_count = block_count.max(d + 1);
        collect_rgs(universe, digits, position + 1, next_count, out);
    }
}

fn partition_of_rgs(universe: &Universe, digits: &[usize], block_count: usize) -> Partition {
    let mut blocks = vec![Subset::empty(universe); block_count];
    for (i, &d) in digits.iter().enumerate() {
        blocks[d].insert_index(i);
    }
    Partition::from_subsets(universe, blocks).expect("growth strings encode valid partitions")
}

/// Every subset of the universe in canonical (ascending mask) order.
pub fn all_subsets(universe: &Universe) -> Result<impl Iterator<Item = Subset>> {
    let n = universe.len();
    if n > MAX_SUBSET_ENUM {
        return Err(Error::Capacity {
            what: "subset enumeration universe",
            limit: MAX_SUBSET_ENUM as u64,
            actual: n as u64,
        });
    }
    let u = universe.clone();
    Ok((0..(1u64 << n)).map(move |mask| Subset::from_mask(&u, mask)))
}

/// Every total map from `source` into `target`. Empty when the target is
/// empty and the source is not; the single empty map when the source is
/// empty.
pub fn all_total_maps(
    source: &Universe,
    target: &Universe,
) -> Result<impl Iterator<Item = TotalMap>> {
    let s = source.len() as u32;
    let t = target.len() as u64;
    let count = if s == 0 {
        1
    } else if t == 0 {
        0
    } else {
        let count = t.checked_pow(s).filter(|&c| c <= MAX_MAP_ENUM);
        match count {
            Some(c) => c,
            None => {
                return Err(Error::Capacity {
                    what: "function space enumeration",
                    limit: MAX_MAP_ENUM,
                    actual: u64::MAX,
                })
            }
        }
    };
    let source = source.clone();
    let target = target.clone();
    Ok((0..count).map(move |code| {
        TotalMap::from_fn(&source, &target, |i| {
            (code / t.pow(i as u32) % t) as usize
        })
        .expect("digits index the target universe")
    }))
}

/// Uniformly random subset: each element is included with probability
/// one half.
pub fn random_subset(rng: &mut impl Rng, universe: &Universe) -> Subset {
    let mut s = Subset::empty(universe);
    for i in 0..universe.len() {
        if rng.gen_bool(0.5) {
            s.insert_index(i);
        }
    }
    s
}

/// Random partition drawn by sampling a restricted growth string. Every
/// partition has positive probability; the distribution is not uniform.
pub fn random_partition(rng: &mut impl Rng, universe: &Universe) -> Partition {
    let n = universe.len();
    if n == 0 {
        return Partition::universal(universe);
    }
    let mut digits = vec![0usize; n];
    let mut block_count = 1;
    for d in digits.iter_mut().skip(1) {
        *d = rng.gen_range(0..=block_count);
        block_count = block_count.max(*d + 1);
    }
    partition_of_rgs(universe, &digits, block_count)
}

/// Uniformly random total map.
pub fn random_total_map(
    rng: &mut impl Rng,
    source: &Universe,
    target: &Universe,
) -> Result<TotalMap> {
    TotalMap::from_fn(source, target, |_| rng.gen_range(0..target.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn bell_numbers_match_known_values() {
        let known = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &expected) in known.iter().enumerate() {
            assert_eq!(bell_number(n), expected, "Bell({n})");
        }
    }

    #[test]
    fn partition_enumeration_agrees_with_bell_triangle() {
        for n in 0..=6 {
            let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
            let u = Universe::new(names).unwrap();
            let parts = all_partitions(&u).unwrap();
            assert_eq!(parts.len() as u64, bell_number(n), "count at n = {n}");
            let distinct: HashSet<String> = parts.iter().map(|p| p.to_string()).collect();
            assert_eq!(distinct.len(), parts.len(), "duplicates at n = {n}");
        }
        let big = Universe::new((0..11).map(|i| format!("e{i}"))).unwrap();
        assert!(all_partitions(&big).is_err());
    }

    #[test]
    fn subset_enumeration_is_ascending_and_complete() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let subsets: Vec<Subset> = all_subsets(&u).unwrap().collect();
        assert_eq!(subsets.len(), 8);
        for pair in subsets.windows(2) {
            assert!(pair[0].canonical_cmp(&pair[1]).is_lt());
        }
    }

    #[test]
    fn map_enumeration_counts_functions() {
        let u = Universe::new(["a", "b"]).unwrap();
        let v = Universe::new(["p", "q", "r"]).unwrap();
        let maps: Vec<TotalMap> = all_total_maps(&u, &v).unwrap().collect();
        assert_eq!(maps.len(), 9);
        let distinct: HashSet<String> = maps.iter().map(|m| m.to_string()).collect();
        assert_eq!(distinct.len(), 9);

        let empty = Universe::new(Vec::<String>::new()).unwrap();
        assert_eq!(all_total_maps(&empty, &v).unwrap().count(), 1);
        assert_eq!(all_total_maps(&u, &empty).unwrap().count(), 0);
        assert_eq!(all_total_maps(&empty, &empty).unwrap().count(), 1);
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let u = Universe::new((0..12).map(|i| format!("e{i}"))).unwrap();
        let draw = |seed: u64| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = random_subset(&mut rng, &u);
            let p = random_partition(&mut rng, &u);
            let f = random_total_map(&mut rng, &u, &u).unwrap();
            (s, p, f)
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7).0, draw(8).0);
    }

    #[test]
    fn random_partitions_are_valid() {
        let u = Universe::new((0..9).map(|i| format!("e{i}"))).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..200 {
            let p = random_partition(&mut rng, &u);
            let covered: usize = p.blocks().iter().map(Subset::cardinality).sum();
            assert_eq!(covered, u.len());
        }
    }
}
