//! Rigid classes: transitive constellation pairs up to simultaneous
//! conjugation, enumerated with `alpha` pinned to its canonical class
//! representative so that only the centralizer of `alpha` remains to quotient by.

use std::fmt;

use rayon::prelude::*;

use crate::datum::BranchDatum;
use crate::error::{Error, Result};
use crate::perm::{canonical_class_rep, centralizer_elements, Partition, Permutation};

/// Monodromy `(alpha, beta, gamma)` with `alpha ∘ beta ∘ gamma = id`.
///
/// Edges of the dessin are the points; black vertices are the cycles of
/// `alpha`, white vertices those of `beta`, and faces those of `gamma`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConstellationPair {
    alpha: Permutation,
    beta: Permutation,
    gamma: Permutation,
}

impl ConstellationPair {
    /// Derives `gamma = (alpha ∘ beta)⁻¹`.
    pub fn new(alpha: Permutation, beta: Permutation) -> Result<Self> {
        let gamma = alpha.compose(&beta)?.inverse();
        Ok(Self { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn beta(&self) -> &Permutation {
        &self.beta
    }

    pub fn gamma(&self) -> &Permutation {
        &self.gamma
    }

    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }

    pub fn cycle_types(&self) -> [Partition; 3] {
        [
            self.alpha.cycle_type(),
            self.beta.cycle_type(),
            self.gamma.cycle_type(),
        ]
    }

    /// Conjugates all three permutations by `g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Self> {
        Ok(Self {
            alpha: self.alpha.conjugate(g)?,
            beta: self.beta.conjugate(g)?,
            gamma: self.gamma.conjugate(g)?,
        })
    }

    /// Re-checks the product identity, transitivity, and that the cycle
    /// types are the datum's `(π₁, π₂, π₃)`.
    pub fn validate(&self, datum: &BranchDatum) -> Result<()> {
        let [p1, p2, p3] = datum.triple()?;
        if self.degree() != datum.degree() {
            return Err(Error::InvalidPair(format!(
                "degree {} does not match datum degree {}",
                self.degree(),
                datum.degree()
            )));
        }
        let product = self.alpha.compose(&self.beta.compose(&self.gamma)?)?;
        if !product.is_identity() {
            return Err(Error::InvalidPair(
                "alpha ∘ beta ∘ gamma is not the identity".into(),
            ));
        }
        if !is_transitive(self) {
            return Err(Error::InvalidPair("monodromy is not transitive".into()));
        }
        if self.cycle_types() != [p1.clone(), p2.clone(), p3.clone()] {
            return Err(Error::InvalidPair(format!(
                "cycle types {:?} do not match datum {datum}",
                self.cycle_types()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ConstellationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={}; beta={}; gamma={}",
            self.alpha, self.beta, self.gamma
        )
    }
}

impl fmt::Debug for ConstellationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConstellationPair[{}]({self})", self.degree())
    }
}

/// Canonical form of a pair under simultaneous conjugation: images of the
/// canonical `alpha` followed by the lexicographically least `beta`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RigidClassKey(Vec<u8>);

impl RigidClassKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for RigidClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RigidClassKey({:?})", self.0)
    }
}

/// Whether `⟨alpha, beta⟩` acts transitively, i.e. the cover is connected.
pub fn is_transitive(pair: &ConstellationPair) -> bool {
    let d = pair.degree();
    if d == 0 {
        return true;
    }
    let mut seen = vec![false; d];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for y in [pair.alpha.apply(x), pair.beta.apply(x)] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == d
}

/// The conjugator taking `alpha` to its canonical class representative:
/// cycles are matched by decreasing length, ties broken by smallest point,
/// each cycle read from its smallest point.
fn aligning_conjugator(alpha: &Permutation) -> Permutation {
    let mut cycles = alpha.cycles();
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let mut images = vec![0u8; alpha.degree()];
    let mut next = 0u8;
    for cycle in cycles {
        for x in cycle {
            images[x] = next;
            next += 1;
        }
    }
    Permutation::from_images_unchecked(images)
}

/// Centralizer elements paired with their inverses, as raw image tables.
fn centralizer_table(alpha: &Permutation) -> Vec<(Vec<u8>, Vec<u8>)> {
    centralizer_elements(alpha)
        .expect("alpha is canonical")
        .map(|c| {
            let inv = c.inverse();
            (c.images().to_vec(), inv.images().to_vec())
        })
        .collect()
}

/// Is `beta` lexicographically minimal among `c beta c⁻¹` for `c` in the table?
fn is_orbit_minimum(beta: &[u8], table: &[(Vec<u8>, Vec<u8>)]) -> bool {
    table.iter().all(|(c, c_inv)| {
        for (i, &b) in beta.iter().enumerate() {
            let conj = c[beta[c_inv[i] as usize] as usize];
            if conj != b {
                return conj > b;
            }
        }
        true
    })
}

fn orbit_minimum(beta: &[u8], table: &[(Vec<u8>, Vec<u8>)]) -> Vec<u8> {
    let mut best = beta.to_vec();
    let mut cand = vec![0u8; beta.len()];
    for (c, c_inv) in table {
        for (i, slot) in cand.iter_mut().enumerate() {
            *slot = c[beta[c_inv[i] as usize] as usize];
        }
        if cand < best {
            best.copy_from_slice(&cand);
        }
    }
    best
}

/// Canonical key of the pair's simultaneous-conjugacy class.
pub fn class_key(pair: &ConstellationPair) -> RigidClassKey {
    let g = aligning_conjugator(&pair.alpha);
    let alpha = pair.alpha.conjugate_unchecked(&g);
    debug_assert_eq!(alpha, canonical_class_rep(&alpha.cycle_type()));
    let beta = pair.beta.conjugate_unchecked(&g);
    let table = centralizer_table(&alpha);
    let mut bytes = alpha.images().to_vec();
    bytes.extend(orbit_minimum(beta.images(), &table));
    RigidClassKey(bytes)
}

const UNSET: u8 = u8::MAX;

/// Backtracking search for `beta` given a fixed canonical `alpha`.
///
/// `beta` is built cycle by cycle, each cycle opened at the smallest unused
/// point, so every permutation of cycle type `π₂` is produced exactly once.
/// The partial product `alpha ∘ beta = gamma⁻¹` is tracked alongside; a
/// closed cycle must match an unused part of `π₃`, and an open chain may not
/// outgrow the largest unused part.
#[derive(Clone)]
struct Search<'a> {
    alpha: &'a [u8],
    centralizer: &'a [(Vec<u8>, Vec<u8>)],
    beta: Vec<u8>,
    used: Vec<bool>,
    delta: Vec<u8>,
    delta_inv: Vec<u8>,
    beta_parts: Vec<usize>,
    gamma_parts: Vec<usize>,
    found: Vec<Vec<u8>>,
}

/// First choice point: length of the cycle through 0 and `beta(0)`.
#[derive(Debug, Clone, Copy)]
struct Branch {
    len: usize,
    first_image: usize,
}

impl<'a> Search<'a> {
    fn new(
        alpha: &'a [u8],
        centralizer: &'a [(Vec<u8>, Vec<u8>)],
        pi2: &Partition,
        pi3: &Partition,
    ) -> Self {
        let d = alpha.len();
        Self {
            alpha,
            centralizer,
            beta: vec![UNSET; d],
            used: vec![false; d],
            delta: vec![UNSET; d],
            delta_inv: vec![UNSET; d],
            beta_parts: pi2.multiplicities(),
            gamma_parts: pi3.multiplicities(),
            found: Vec::new(),
        }
    }

    fn degree(&self) -> usize {
        self.alpha.len()
    }

    fn lengths_available(&self) -> Vec<usize> {
        (1..self.beta_parts.len())
            .rev()
            .filter(|&l| self.beta_parts[l] > 0)
            .collect()
    }

    fn branches(&self) -> Vec<Branch> {
        let mut out = Vec::new();
        for len in self.lengths_available() {
            if len == 1 {
                out.push(Branch {
                    len,
                    first_image: 0,
                });
            } else {
                out.extend((1..self.degree()).map(|first_image| Branch { len, first_image }));
            }
        }
        out
    }

    fn run_branch(mut self, branch: Branch) -> Vec<Vec<u8>> {
        self.beta_parts[branch.len] -= 1;
        self.used[0] = true;
        self.used[branch.first_image] = true;
        if let Some(consumed) = self.assign(0, branch.first_image) {
            if branch.len == 1 {
                self.open_cycle();
            } else {
                self.grow(0, branch.first_image, branch.len - 2);
            }
            self.unassign(0, consumed);
        }
        self.found
    }

    fn max_gamma_part(&self) -> usize {
        (1..self.gamma_parts.len())
            .rev()
            .find(|&l| self.gamma_parts[l] > 0)
            .unwrap_or(0)
    }

    /// Sets `beta(x) = y`. Returns `None` (with state untouched) if this
    /// prunes, else `Some(closed_len)` where `closed_len` is the length of the
    /// gamma cycle this closed, or 0.
    fn assign(&mut self, x: usize, y: usize) -> Option<usize> {
        let z = self.alpha[y];
        self.beta[x] = y as u8;
        self.delta[x] = z;
        self.delta_inv[z as usize] = x as u8;

        let mut forward = 1;
        let mut node = z as usize;
        let mut closed = true;
        while node != x {
            let next = self.delta[node];
            if next == UNSET {
                closed = false;
                break;
            }
            node = next as usize;
            forward += 1;
        }
        if closed {
            if self.gamma_parts.get(forward).copied().unwrap_or(0) > 0 {
                self.gamma_parts[forward] -= 1;
                return Some(forward);
            }
        } else {
            let mut backward = 1;
            let mut node = x;
            while self.delta_inv[node] != UNSET {
                node = self.delta_inv[node] as usize;
                backward += 1;
            }
            if forward + backward <= self.max_gamma_part() {
                return Some(0);
            }
        }
        self.clear(x);
        None
    }

    fn clear(&mut self, x: usize) {
        let z = self.delta[x];
        self.beta[x] = UNSET;
        self.delta[x] = UNSET;
        self.delta_inv[z as usize] = UNSET;
    }

    fn unassign(&mut self, x: usize, consumed: usize) {
        if consumed > 0 {
            self.gamma_parts[consumed] += 1;
        }
        self.clear(x);
    }

    fn open_cycle(&mut self) {
        let Some(start) = self.used.iter().position(|&u| !u) else {
            self.finish();
            return;
        };
        for len in self.lengths_available() {
            self.beta_parts[len] -= 1;
            self.used[start] = true;
            self.grow(start, start, len - 1);
            self.used[start] = false;
            self.beta_parts[len] += 1;
        }
    }

    /// Extends the open beta cycle that began at `start` and currently ends at
    /// `last`, with `remaining` more points to place.
    fn grow(&mut self, start: usize, last: usize, remaining: usize) {
        if remaining == 0 {
            if let Some(consumed) = self.assign(last, start) {
                self.open_cycle();
                self.unassign(last, consumed);
            }
            return;
        }
        for next in start + 1..self.degree() {
            if self.used[next] {
                continue;
            }
            self.used[next] = true;
            if let Some(consumed) = self.assign(last, next) {
                self.grow(start, next, remaining - 1);
                self.unassign(last, consumed);
            }
            self.used[next] = false;
        }
    }

    fn finish(&mut self) {
        if self.gamma_parts.iter().any(|&k| k > 0) {
            return;
        }
        if !transitive_raw(self.alpha, &self.beta) {
            return;
        }
        if is_orbit_minimum(&self.beta, self.centralizer) {
            self.found.push(self.beta.clone());
        }
    }
}

fn transitive_raw(alpha: &[u8], beta: &[u8]) -> bool {
    let d = alpha.len();
    let mut seen = vec![false; d];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for y in [alpha[x] as usize, beta[x] as usize] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == d
}

/// One representative per rigid class of `datum`, sorted by class key.
/// Runs on the current rayon pool when `parallel` is set.
pub(crate) fn enumerate_in_pool(
    datum: &BranchDatum,
    parallel: bool,
) -> Result<Vec<ConstellationPair>> {
    let [p1, p2, p3] = datum.triple()?;
    let alpha = canonical_class_rep(p1);
    let table = centralizer_table(&alpha);
    let search = Search::new(alpha.images(), &table, p2, p3);
    let branches = search.branches();
    let mut betas: Vec<Vec<u8>> = if parallel {
        branches
            .par_iter()
            .flat_map_iter(|&b| search.clone().run_branch(b))
            .collect()
    } else {
        branches
            .iter()
            .flat_map(|&b| search.clone().run_branch(b))
            .collect()
    };
    betas.sort_unstable();

    betas
        .into_iter()
        .map(|beta| {
            let pair =
                ConstellationPair::new(alpha.clone(), Permutation::from_images_unchecked(beta))?;
            pair.validate(datum)
                .map_err(|e| Error::Invariant(format!("enumerated pair failed validation: {e}")))?;
            Ok(pair)
        })
        .collect()
}

/// Enumerates the rigid classes of a three-point datum, one representative
/// per class, in increasing [`class_key`] order. `jobs` worker threads
/// explore the search tree; the output does not depend on `jobs`.
pub fn enumerate_rigid_classes_with_jobs(
    datum: &BranchDatum,
    jobs: usize,
) -> Result<Vec<ConstellationPair>> {
    if jobs <= 1 {
        return enumerate_in_pool(datum, false);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    pool.install(|| enumerate_in_pool(datum, true))
}

/// Single-threaded [`enumerate_rigid_classes_with_jobs`].
pub fn enumerate_rigid_classes(datum: &BranchDatum) -> Result<Vec<ConstellationPair>> {
    enumerate_rigid_classes_with_jobs(datum, 1)
}
