//! Branch data over the sphere and the Riemann–Hurwitz compatibility check.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Partition;
use crate::MAX_DEGREE;

/// The base surface. Only the sphere (Euler characteristic 2) is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BaseSurface {
    #[default]
    Sphere,
}

impl BaseSurface {
    pub fn euler_characteristic(self) -> i64 {
        match self {
            BaseSurface::Sphere => 2,
        }
    }
}

/// A compatible abstract branch datum `(d, π₁, …, π_n)` over the sphere,
/// together with the genus of the (orientable, connected) cover it forces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BranchDatum {
    degree: usize,
    partitions: Vec<Partition>,
    cover_genus: usize,
    base: BaseSurface,
}

impl BranchDatum {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Number of branching points `n`.
    pub fn point_count(&self) -> usize {
        self.partitions.len()
    }

    pub fn cover_genus(&self) -> usize {
        self.cover_genus
    }

    pub fn cover_euler_characteristic(&self) -> i64 {
        2 - 2 * self.cover_genus as i64
    }

    pub fn base(&self) -> BaseSurface {
        self.base
    }

    /// Some point carries the all-ones partition, i.e. is not actually branched.
    pub fn is_degenerate(&self) -> bool {
        self.partitions.iter().any(Partition::is_all_ones)
    }

    /// The three partitions, or an error when `n != 3`.
    pub fn triple(&self) -> Result<[&Partition; 3]> {
        match self.partitions.as_slice() {
            [a, b, c] => Ok([a, b, c]),
            other => Err(Error::NotThreePoints(other.len())),
        }
    }

    /// Total number of parts `ℓ₁ + … + ℓ_n`.
    pub fn total_length(&self) -> usize {
        self.partitions.iter().map(Partition::len).sum()
    }
}

impl fmt::Display for BranchDatum {
    /// `d; π₁; π₂; …`, the same syntax [`FromStr`] accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.degree)?;
        for p in &self.partitions {
            write!(f, "; {p}")?;
        }
        Ok(())
    }
}

impl FromStr for BranchDatum {
    type Err = Error;

    /// Parses `"7; 3,2,1,1; 3,2,1,1; 7"` and runs [`check_compatibility`].
    fn from_str(s: &str) -> Result<Self> {
        let mut fields = s.split(';').map(str::trim);
        let head = fields.next().unwrap_or_default();
        let degree: usize = head
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree {head:?} in {s:?}")))?;
        let partitions = fields
            .map(str::parse::<Partition>)
            .collect::<Result<Vec<_>>>()?;
        if partitions.is_empty() {
            return Err(Error::Parse(format!("no partitions in {s:?}")));
        }
        check_compatibility(degree, partitions)
    }
}

/// Twice the cover genus forced by Riemann–Hurwitz over the sphere:
/// `2g̃ = d(n-2) - Σℓ_j + 2`.
fn twice_cover_genus(degree: usize, partitions: &[Partition]) -> i64 {
    let n = partitions.len() as i64;
    let lengths: i64 = partitions.iter().map(|p| p.len() as i64).sum();
    degree as i64 * (n - 2) - lengths + BaseSurface::Sphere.euler_characteristic()
}

/// Validates `(degree, partitions)` against Riemann–Hurwitz and derives the
/// cover genus. Data with an all-ones partition are accepted (see
/// [`BranchDatum::is_degenerate`]).
pub fn check_compatibility(degree: usize, partitions: Vec<Partition>) -> Result<BranchDatum> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(degree));
    }
    if partitions.is_empty() {
        return Err(Error::InvalidPartition(
            "a datum needs at least one partition".into(),
        ));
    }
    for p in &partitions {
        if p.total() != degree {
            return Err(Error::PartitionSum {
                partition: p.to_string(),
                sum: p.total(),
                degree,
            });
        }
    }
    let twice = twice_cover_genus(degree, &partitions);
    if twice % 2 != 0 {
        return Err(Error::Parity);
    }
    if twice < 0 {
        return Err(Error::NegativeGenus { twice_genus: twice });
    }
    Ok(BranchDatum {
        degree,
        partitions,
        cover_genus: (twice / 2) as usize,
        base: BaseSurface::Sphere,
    })
}

/// As [`check_compatibility`], additionally requiring the derived cover genus
/// to equal `expected_genus`.
pub fn check_compatibility_with_genus(
    degree: usize,
    partitions: Vec<Partition>,
    expected_genus: usize,
) -> Result<BranchDatum> {
    let datum = check_compatibility(degree, partitions)?;
    if datum.cover_genus != expected_genus {
        return Err(Error::GenusMismatch {
            expected: expected_genus,
            derived: datum.cover_genus,
        });
    }
    Ok(datum)
}

/// Every compatible datum with three genuinely branched points over the
/// sphere, one per unordered triple. Each triple is stored with
/// `π₁ ≥ π₂ ≥ π₃` lexicographically and the list is in decreasing order.
pub fn enumerate_compatible_data(degree: usize) -> Vec<BranchDatum> {
    if degree == 0 || degree > MAX_DEGREE {
        return Vec::new();
    }
    let parts: Vec<Partition> = Partition::all(degree)
        .into_iter()
        .filter(|p| !p.is_all_ones())
        .collect();
    let mut out = Vec::new();
    for i in 0..parts.len() {
        for j in i..parts.len() {
            for k in j..parts.len() {
                let triple = vec![parts[i].clone(), parts[j].clone(), parts[k].clone()];
                if let Ok(datum) = check_compatibility(degree, triple) {
                    out.push(datum);
                }
            }
        }
    }
    out
}
