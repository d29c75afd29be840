//! Permutations of `{0, …, d-1}`, partitions of `d`, and the conjugacy-class
//! machinery the enumerators are built on.
//!
//! Composition applies the right factor first: `p.compose(&q)` maps `x` to
//! `p(q(x))`. Points are 0-indexed internally; the textual cycle notation
//! accepted and produced here is 1-indexed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{0, …, d-1}` stored as its image table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its images, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree > u8::MAX as usize {
            return Err(Error::InvalidPermutation {
                degree,
                reason: "degree too large".into(),
            });
        }
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree {
                return Err(Error::InvalidPermutation {
                    degree,
                    reason: format!("image {x} out of range"),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation {
                    degree,
                    reason: format!("image {x} repeated"),
                });
            }
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// Caller guarantees `images` is a bijection of `0..images.len()`.
    pub(crate) fn from_images_unchecked(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x as usize)
        });
        Self { images }
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation of the given degree from disjoint 0-indexed cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::InvalidPermutation {
                        degree,
                        reason: format!("point {} out of range", x + 1),
                    });
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::InvalidPermutation {
                        degree,
                        reason: format!("point {} appears twice", x + 1),
                    });
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    /// Parses 1-indexed cycle notation such as `(1 2 3)(4 5)`; `()` or an
    /// empty string is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|tok| !tok.is_empty())
                .map(|tok| match tok.parse::<usize>() {
                    Ok(0) | Err(_) => Err(Error::Parse(format!(
                        "bad point {tok:?}: points are positive integers"
                    ))),
                    Ok(v) => Ok(v - 1),
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() == other.degree() {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            })
        }
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Self { images }
    }

    /// `g ∘ self ∘ g⁻¹`, i.e. `self` with its points relabelled through `g`.
    pub fn conjugate(&self, g: &Self) -> Result<Self> {
        self.check_degree(g)?;
        Ok(self.conjugate_unchecked(g))
    }

    pub(crate) fn conjugate_unchecked(&self, g: &Self) -> Self {
        let mut images = vec![0u8; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[g.images[x] as usize] = g.images[y as usize];
        }
        Self { images }
    }

    /// Disjoint cycles including fixed points, each starting at its minimum,
    /// listed by increasing minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_sorted(sorted_desc(self.cycles().iter().map(Vec::len).collect()))
    }
}

impl fmt::Display for Permutation {
    /// 1-indexed cycle notation with fixed points omitted; the identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

fn sorted_desc(mut parts: Vec<usize>) -> Vec<usize> {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// A partition of `total()`, stored weakly decreasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Normalizes any part order. Rejects empty input and zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        Ok(Self::from_sorted(sorted_desc(parts)))
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when every part is 1 (an unbranched point).
    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// `multiplicities()[i]` is the number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.total() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// All partitions of `n`, in lexicographically decreasing order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated positive integers, e.g. `3,2,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// The permutation `(0 … p₁-1)(p₁ … p₁+p₂-1)…` of cycle type `pi`.
pub fn canonical_class_rep(pi: &Partition) -> Permutation {
    let mut images = Vec::with_capacity(pi.total());
    let mut start = 0u8;
    for &len in pi.parts() {
        let len = len as u8;
        images.extend((1..len).map(|k| start + k));
        images.push(start);
        start += len;
    }
    Permutation::from_images_unchecked(images)
}

/// Equal-length cycles of a canonical representative: `count` consecutive
/// cycles of length `len`, starting at point `start`.
#[derive(Debug, Clone, Copy)]
struct Block {
    start: usize,
    len: usize,
    count: usize,
}

/// Lazily enumerates the centralizer of a canonical class representative.
///
/// Every element permutes the cycles inside each block of equal-length
/// cycles and rotates each cycle, so the order is `∏ i^{k_i} · k_i!`.
#[derive(Debug, Clone)]
pub struct Centralizer {
    degree: usize,
    blocks: Vec<Block>,
    arrangement: Vec<Vec<usize>>,
    rotation: Vec<Vec<usize>>,
    done: bool,
}

impl Centralizer {
    /// Number of elements, `∏ i^{k_i} · k_i!`.
    pub fn order(&self) -> u64 {
        self.blocks
            .iter()
            .map(|b| {
                let rot = (b.len as u64).pow(b.count as u32);
                let fact: u64 = (1..=b.count as u64).product();
                rot * fact
            })
            .product()
    }

    fn current(&self) -> Permutation {
        let mut images = vec![0u8; self.degree];
        for (b, block) in self.blocks.iter().enumerate() {
            let (i, arr, rot) = (block.len, &self.arrangement[b], &self.rotation[b]);
            for j in 0..block.count {
                for t in 0..i {
                    images[block.start + j * i + t] =
                        (block.start + arr[j] * i + (t + rot[j]) % i) as u8;
                }
            }
        }
        Permutation::from_images_unchecked(images)
    }

    fn advance(&mut self) {
        for b in 0..self.blocks.len() {
            let len = self.blocks[b].len;
            for r in self.rotation[b].iter_mut() {
                *r += 1;
                if *r < len {
                    return;
                }
                *r = 0;
            }
            if next_permutation(&mut self.arrangement[b]) {
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Centralizer {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let g = self.current();
        self.advance();
        Some(g)
    }
}

/// Lexicographic successor in place; on the last permutation, resets to
/// sorted order and returns `false`.
fn next_permutation(xs: &mut [usize]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// All `g` with `g p g⁻¹ = p`, for `p` a canonical class representative.
pub fn centralizer_elements(p: &Permutation) -> Result<Centralizer> {
    let pi = p.cycle_type();
    if canonical_class_rep(&pi) != *p {
        return Err(Error::NonCanonical);
    }
    let mut blocks: Vec<Block> = Vec::new();
    let mut start = 0;
    for &len in pi.parts() {
        match blocks.last_mut() {
            Some(b) if b.len == len => b.count += 1,
            _ => blocks.push(Block {
                start,
                len,
                count: 1,
            }),
        }
        start += len;
    }
    Ok(Centralizer {
        degree: p.degree(),
        arrangement: blocks.iter().map(|b| (0..b.count).collect()).collect(),
        rotation: blocks.iter().map(|b| vec![0; b.count]).collect(),
        blocks,
        done: false,
    })
}
