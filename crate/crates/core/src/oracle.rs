//! Brute-force reference counts for small degree.
//!
//! Deliberately naive and independent of the rigid enumerator: every pair in
//! `S_d × S_d` is examined, classes are closed under all `d!` conjugators,
//! and the flexible quotients come from closing under single moves that may
//! pass through data with the partitions in another order.

use std::collections::HashMap;

use itertools::Itertools;
use petgraph::unionfind::UnionFind;

use crate::datum::BranchDatum;
use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};

pub const ORACLE_MAX_DEGREE: usize = 6;

/// `(rigid, flexible, very_flexible)`.
pub type CountTriple = (usize, usize, usize);

fn connected(alpha: &Permutation, beta: &Permutation) -> bool {
    let d = alpha.degree();
    let mut uf = UnionFind::<usize>::new(d);
    for x in 0..d {
        uf.union(x, alpha.apply(x));
        uf.union(x, beta.apply(x));
    }
    (0..d).all(|x| uf.equiv(0, x))
}

type RawPair = (Permutation, Permutation);

fn third(pair: &RawPair) -> Permutation {
    pair.0.compose(&pair.1).expect("equal degrees").inverse()
}

fn conj(pair: &RawPair, g: &Permutation) -> RawPair {
    (pair.0.conjugate(g).unwrap(), pair.1.conjugate(g).unwrap())
}

/// `(alpha, beta) ↦ (beta, alpha)`; the third permutation becomes
/// `(beta alpha)⁻¹`, conjugate to the old one.
fn switch(pair: &RawPair) -> RawPair {
    (pair.1.clone(), pair.0.clone())
}

/// `(alpha, beta) ↦ (gamma, alpha)`.
fn cycle_back(pair: &RawPair) -> RawPair {
    (third(pair), pair.0.clone())
}

/// `(alpha, beta) ↦ (alpha⁻¹, alpha beta⁻¹ alpha⁻¹)`; the third becomes `gamma⁻¹`.
fn reflect(pair: &RawPair) -> RawPair {
    let a_inv = pair.0.inverse();
    let b = pair.1.inverse().conjugate(&pair.0).unwrap();
    (a_inv, b)
}

/// Counts for a three-point datum of degree at most [`ORACLE_MAX_DEGREE`].
pub fn brute_force_counts(datum: &BranchDatum) -> Result<CountTriple> {
    let d = datum.degree();
    if d > ORACLE_MAX_DEGREE {
        return Err(Error::OracleDegree {
            degree: d,
            max: ORACLE_MAX_DEGREE,
        });
    }
    let triple: Vec<Partition> = datum.triple()?.into_iter().cloned().collect();

    // every ordering of the datum's partitions
    let orderings: Vec<Vec<Partition>> = triple.iter().cloned().permutations(3).unique().collect();

    let group: Vec<Permutation> = (0..d)
        .permutations(d)
        .map(|v| Permutation::new(v).unwrap())
        .collect();
    let typed: Vec<(Permutation, Partition)> =
        group.iter().map(|p| (p.clone(), p.cycle_type())).collect();

    let mut universe: Vec<(RawPair, bool)> = Vec::new();
    for (alpha, ta) in &typed {
        for (beta, tb) in &typed {
            if !orderings.iter().any(|o| o[0] == *ta && o[1] == *tb) {
                continue;
            }
            let pair = (alpha.clone(), beta.clone());
            let tc = third(&pair).cycle_type();
            let Some(order) = orderings
                .iter()
                .find(|o| o[0] == *ta && o[1] == *tb && o[2] == tc)
            else {
                continue;
            };
            if connected(alpha, beta) {
                universe.push((pair, *order == triple));
            }
        }
    }

    // conjugacy classes by explicit closure
    let mut class_of: HashMap<RawPair, usize> = HashMap::new();
    let mut reps: Vec<(RawPair, bool)> = Vec::new();
    for (pair, in_datum) in &universe {
        if class_of.contains_key(pair) {
            continue;
        }
        let id = reps.len();
        for g in &group {
            class_of.insert(conj(pair, g), id);
        }
        reps.push((pair.clone(), *in_datum));
    }
    if class_of.len() != universe.len() {
        return Err(Error::Invariant(
            "oracle conjugation closure left the universe".into(),
        ));
    }

    let rigid = reps.iter().filter(|(_, in_datum)| *in_datum).count();
    let lookup = |p: &RawPair| {
        class_of
            .get(p)
            .copied()
            .ok_or_else(|| Error::Invariant("oracle move left the universe".into()))
    };

    let components = |with_reflection: bool| -> Result<usize> {
        let mut uf = UnionFind::<usize>::new(reps.len());
        for (id, (pair, _)) in reps.iter().enumerate() {
            uf.union(id, lookup(&switch(pair))?);
            uf.union(id, lookup(&cycle_back(pair))?);
            if with_reflection {
                uf.union(id, lookup(&reflect(pair))?);
            }
        }
        Ok(reps
            .iter()
            .enumerate()
            .filter(|(_, (_, in_datum))| *in_datum)
            .map(|(id, _)| uf.find(id))
            .unique()
            .count())
    };
    let flexible = components(false)?;
    let very_flexible = components(true)?;
    Ok((rigid, flexible, very_flexible))
}
