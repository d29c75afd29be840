//! Dessin moves and the flexible / very flexible quotients of the rigid classes.
//!
//! The colour switch and the region move permute the roles of the three
//! branching points; the mirror reverses the orientation of the cover. At
//! the level of conjugacy classes they generate an action of `S₃ × Z₂`.
//! A composite of moves lands back among the datum's own dessins exactly
//! when its role permutation fixes the ordered triple `(π₁, π₂, π₃)`, so the
//! quotients are orbits of that stabilizer.

use std::collections::{BTreeMap, VecDeque};

use crate::datum::BranchDatum;
use crate::error::{Error, Result};
use crate::rigid::{class_key, ConstellationPair};

/// Colour switch: `(alpha, beta) ↦ (beta, beta⁻¹ alpha beta)`.
/// Keeps `gamma`; cycle types become `(π₂, π₁, π₃)`.
pub fn swap_colours(pair: &ConstellationPair) -> ConstellationPair {
    let beta = pair.beta();
    let alpha = pair.alpha().conjugate_unchecked(&beta.inverse());
    ConstellationPair::new(beta.clone(), alpha).expect("equal degrees")
}

/// Region move on monodromy: `(alpha, beta) ↦ (beta, gamma)`; the new third
/// permutation is `alpha`, so applying this three times is the identity.
pub fn rotate_roles(pair: &ConstellationPair) -> ConstellationPair {
    ConstellationPair::new(pair.beta().clone(), pair.gamma().clone()).expect("equal degrees")
}

/// Orientation reversal: `(alpha, beta) ↦ (alpha⁻¹, beta⁻¹)`. Cycle types
/// are unchanged and the new `gamma = beta ∘ alpha`.
pub fn mirror(pair: &ConstellationPair) -> ConstellationPair {
    ConstellationPair::new(pair.alpha().inverse(), pair.beta().inverse()).expect("equal degrees")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Generator {
    Swap,
    Rotate,
}

impl Generator {
    fn on_roles(self, r: [u8; 3]) -> [u8; 3] {
        match self {
            Generator::Swap => [r[1], r[0], r[2]],
            Generator::Rotate => [r[1], r[2], r[0]],
        }
    }

    fn on_pair(self, pair: &ConstellationPair) -> ConstellationPair {
        match self {
            Generator::Swap => swap_colours(pair),
            Generator::Rotate => rotate_roles(pair),
        }
    }
}

/// An element of the move group `S₃ × Z₂`.
///
/// `role_perm[i]` names the original slot whose permutation ends up in slot
/// `i`; `mirrored` records an orientation reversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveElement {
    pub role_perm: [u8; 3],
    pub mirrored: bool,
}

impl MoveElement {
    pub const IDENTITY: MoveElement = MoveElement {
        role_perm: [0, 1, 2],
        mirrored: false,
    };

    /// All 12 elements.
    pub fn all() -> Vec<MoveElement> {
        let mut out = Vec::with_capacity(12);
        for mirrored in [false, true] {
            for (role_perm, _) in role_words() {
                out.push(MoveElement {
                    role_perm,
                    mirrored,
                });
            }
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MoveElement) -> MoveElement {
        let r = self.role_perm;
        MoveElement {
            role_perm: [
                other.role_perm[r[0] as usize],
                other.role_perm[r[1] as usize],
                other.role_perm[r[2] as usize],
            ],
            mirrored: self.mirrored ^ other.mirrored,
        }
    }

    /// Acts on a pair through a fixed word in the generators. The result is
    /// well defined up to simultaneous conjugation.
    pub fn apply(&self, pair: &ConstellationPair) -> ConstellationPair {
        let word = role_words()
            .into_iter()
            .find(|(r, _)| *r == self.role_perm)
            .map(|(_, w)| w)
            .expect("role_perm is a permutation of three slots");
        let mut out = pair.clone();
        for g in word {
            out = g.on_pair(&out);
        }
        if self.mirrored {
            out = mirror(&out);
        }
        out
    }
}

/// The six role permutations, each with a shortest generator word reaching it.
fn role_words() -> Vec<([u8; 3], Vec<Generator>)> {
    let mut found: Vec<([u8; 3], Vec<Generator>)> = vec![([0, 1, 2], Vec::new())];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in [Generator::Swap, Generator::Rotate] {
            let r = g.on_roles(found[i].0);
            if found.iter().all(|(s, _)| *s != r) {
                let mut word = found[i].1.clone();
                word.push(g);
                found.push((r, word));
                queue.push_back(found.len() - 1);
            }
        }
    }
    found.sort_by_key(|(r, _)| *r);
    found
}

/// Move elements whose role permutation fixes the ordered triple of the
/// datum's partitions; with `include_mirror`, each is also taken mirrored.
pub fn stabilizer_moves(datum: &BranchDatum, include_mirror: bool) -> Result<Vec<MoveElement>> {
    let triple = datum.triple()?;
    let mirror_flags: &[bool] = if include_mirror {
        &[false, true]
    } else {
        &[false]
    };
    let mut out = Vec::new();
    for &mirrored in mirror_flags {
        for (role_perm, _) in role_words() {
            if (0..3).all(|i| triple[role_perm[i] as usize] == triple[i]) {
                out.push(MoveElement {
                    role_perm,
                    mirrored,
                });
            }
        }
    }
    Ok(out)
}

/// Orbit count plus the orbit of each rigid class (indexed like the input).
/// Orbit ids are numbered in order of their smallest class index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub count: usize,
    pub orbit_of: Vec<usize>,
}

impl OrbitPartition {
    /// `{"<rigid class index>": orbit id}`.
    pub fn to_json(&self) -> String {
        let map: BTreeMap<String, usize> = self
            .orbit_of
            .iter()
            .enumerate()
            .map(|(i, &o)| (i.to_string(), o))
            .collect();
        serde_json::to_string(&map).expect("string map serializes")
    }
}

fn orbits(rigid_reps: &[ConstellationPair], group: &[MoveElement]) -> Result<OrbitPartition> {
    let index: BTreeMap<_, _> = rigid_reps
        .iter()
        .enumerate()
        .map(|(i, p)| (class_key(p), i))
        .collect();
    if index.len() != rigid_reps.len() {
        return Err(Error::Invariant(
            "duplicate rigid class representatives".into(),
        ));
    }
    let mut orbit_of = vec![usize::MAX; rigid_reps.len()];
    let mut count = 0;
    for (i, rep) in rigid_reps.iter().enumerate() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        for g in group {
            let image = g.apply(rep);
            let j = *index.get(&class_key(&image)).ok_or_else(|| {
                Error::Invariant(format!("move {g:?} left the set of rigid classes"))
            })?;
            match orbit_of[j] {
                usize::MAX => orbit_of[j] = count,
                o if o == count => {}
                _ => return Err(Error::Invariant("move orbits overlap".into())),
            }
        }
        count += 1;
    }
    Ok(OrbitPartition { count, orbit_of })
}

/// Flexible classes: orbits of the rigid classes under the orientation
/// preserving moves that stabilize the datum.
pub fn count_flexible(
    rigid_reps: &[ConstellationPair],
    datum: &BranchDatum,
) -> Result<OrbitPartition> {
    orbits(rigid_reps, &stabilizer_moves(datum, false)?)
}

/// Very flexible classes: as [`count_flexible`], with the mirror allowed.
pub fn count_very_flexible(
    rigid_reps: &[ConstellationPair],
    datum: &BranchDatum,
) -> Result<OrbitPartition> {
    orbits(rigid_reps, &stabilizer_moves(datum, true)?)
}
