//! Explicit dessins (bipartite combinatorial maps) and their DOT / JSON forms.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::datum::BranchDatum;
use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation};
use crate::rigid::ConstellationPair;

/// A dessin on a closed orientable surface.
///
/// Edges are labelled `0..degree`. Each vertex lists its incident edges in
/// counterclockwise order; vertices are ordered by smallest incident edge
/// and each list starts at that edge. Faces are the cycles of `gamma`, one
/// entry per black corner, so a face's list length is its region length.
///
/// Fields are declared in key order so the JSON form is key-sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CombinatorialMap {
    pub black: Vec<Vec<usize>>,
    pub degree: usize,
    pub faces: Vec<Vec<usize>>,
    pub genus: usize,
    pub white: Vec<Vec<usize>>,
}

fn lengths(cycles: &[Vec<usize>]) -> Result<Partition> {
    Partition::new(cycles.iter().map(Vec::len).collect())
}

impl CombinatorialMap {
    fn from_pair(pair: &ConstellationPair, genus: usize) -> Self {
        Self {
            black: pair.alpha().cycles(),
            degree: pair.degree(),
            faces: pair.gamma().cycles(),
            genus,
            white: pair.beta().cycles(),
        }
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        (self.black.len() + self.white.len() + self.faces.len()) as i64 - self.degree as i64
    }

    pub fn black_valences(&self) -> Result<Partition> {
        lengths(&self.black)
    }

    pub fn white_valences(&self) -> Result<Partition> {
        lengths(&self.white)
    }

    pub fn face_lengths(&self) -> Result<Partition> {
        lengths(&self.faces)
    }

    /// Rebuilds the monodromy pair from the vertex rotations.
    pub fn to_pair(&self) -> Result<ConstellationPair> {
        let alpha = Permutation::from_cycles(self.degree, &self.black)?;
        let beta = Permutation::from_cycles(self.degree, &self.white)?;
        ConstellationPair::new(alpha, beta)
    }

    /// Checks edge coverage, face consistency with the rotations, vertex
    /// naming order, and the Euler identity against `genus`.
    pub fn validate(&self) -> Result<()> {
        let covers_all = |cycles: &[Vec<usize>]| {
            let mut seen = vec![false; self.degree];
            cycles
                .iter()
                .flatten()
                .all(|&e| e < self.degree && !std::mem::replace(&mut seen[e], true))
                && seen.iter().all(|&s| s)
        };
        for (name, cycles) in [
            ("black", &self.black),
            ("white", &self.white),
            ("faces", &self.faces),
        ] {
            if !covers_all(cycles) {
                return Err(Error::InvalidPair(format!(
                    "{name} cycles do not partition the edges"
                )));
            }
        }
        let pair = self.to_pair()?;
        if pair.alpha().cycles() != self.black || pair.beta().cycles() != self.white {
            return Err(Error::InvalidPair(
                "vertex lists are not in canonical order".into(),
            ));
        }
        if pair.gamma().cycles() != self.faces {
            return Err(Error::InvalidPair(
                "faces do not match the vertex rotations".into(),
            ));
        }
        if self.euler_characteristic() != 2 - 2 * self.genus as i64 {
            return Err(Error::Invariant(format!(
                "Euler characteristic {} does not match genus {}",
                self.euler_characteristic(),
                self.genus
            )));
        }
        Ok(())
    }
}

/// The dessin of a constellation pair of `datum`.
pub fn to_map(pair: &ConstellationPair, datum: &BranchDatum) -> Result<CombinatorialMap> {
    let map = CombinatorialMap::from_pair(pair, datum.cover_genus());
    map.validate()?;
    let [p1, p2, p3] = datum.triple()?;
    if map.black_valences()? != *p1 || map.white_valences()? != *p2 || map.face_lengths()? != *p3 {
        return Err(Error::Invariant(format!(
            "map valences do not match datum {datum}"
        )));
    }
    Ok(map)
}

fn rotation_attr(cycle: &[usize]) -> String {
    cycle
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Graphviz text for the map.
///
/// Black vertices are filled, white hollow. The embedding is kept in `rot`
/// attributes: on a vertex, its incident edges in rotation order; on an
/// edge, `"i,j"` gives the edge's position in the rotation of its black and
/// of its white end.
pub fn emit_dot(map: &CombinatorialMap) -> String {
    let mut black_end = vec![(0, 0); map.degree];
    let mut white_end = vec![(0, 0); map.degree];
    for (v, cycle) in map.black.iter().enumerate() {
        for (pos, &e) in cycle.iter().enumerate() {
            black_end[e] = (v, pos);
        }
    }
    for (v, cycle) in map.white.iter().enumerate() {
        for (pos, &e) in cycle.iter().enumerate() {
            white_end[e] = (v, pos);
        }
    }

    let mut out = String::new();
    out.push_str("graph dessin {\n");
    let _ = writeln!(out, "  degree={};", map.degree);
    let _ = writeln!(out, "  genus={};", map.genus);
    out.push_str("  node [shape=circle, label=\"\", width=0.2];\n");
    for (v, cycle) in map.black.iter().enumerate() {
        let _ = writeln!(
            out,
            "  b{v} [style=filled, fillcolor=black, rot=\"{}\"];",
            rotation_attr(cycle)
        );
    }
    for (v, cycle) in map.white.iter().enumerate() {
        let _ = writeln!(
            out,
            "  w{v} [style=solid, fillcolor=white, rot=\"{}\"];",
            rotation_attr(cycle)
        );
    }
    for e in 0..map.degree {
        let (b, bpos) = black_end[e];
        let (w, wpos) = white_end[e];
        let _ = writeln!(
            out,
            "  b{b} -- w{w} [label=\"{e}\", rot=\"{bpos},{wpos}\"];"
        );
    }
    out.push_str("}\n");
    out
}

/// Pretty-printed JSON with keys in sorted order.
pub fn emit_json(map: &CombinatorialMap) -> String {
    serde_json::to_string_pretty(map).expect("map serializes")
}

/// Inverse of [`emit_json`]; rejects documents that are not valid maps.
pub fn parse_json(text: &str) -> Result<CombinatorialMap> {
    let map: CombinatorialMap =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("dessin JSON: {e}")))?;
    map.validate()
        .map_err(|e| Error::Parse(format!("dessin JSON: {e}")))?;
    Ok(map)
}
