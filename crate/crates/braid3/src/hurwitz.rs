//! The Hurwitz action on factorization tuples.
//!
//! A [`Factorization`] is an ordered tuple of bands (conjugates of `s1`)
//! stored in canonical form together with its cached product. The move
//! `S_i` replaces the adjacent entries `(X_i, X_{i+1})` by
//! `(X_i X_{i+1} X_i^-1, X_i)`; its inverse replaces them by
//! `(X_{i+1}, X_{i+1}^-1 X_i X_{i+1})`. Moves preserve the product and the
//! band property, so the orbit of a factorization consists of factorizations
//! of the same braid.
//!
//! Orbits are enumerated by plain breadth-first search deduplicated on
//! canonical keys. Termination is a theorem for genuine band tuples, but a
//! configurable cap guards against misuse: hitting the cap is an error,
//! never a silently truncated answer. Expansion order is fixed (forward
//! moves by ascending index, then inverse moves), which makes member lists,
//! orbit sizes, and witness move sequences reproducible across runs.

use crate::bands::is_band;
use crate::garside::Braid;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

/// One Hurwitz move: the generator `S_index` or its inverse, `index` 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Move {
    /// Position of the left entry of the swapped pair, `1 <= index < k`.
    pub index: usize,
    pub inverse: bool,
}

impl Move {
    pub fn forward(index: usize) -> Move {
        Move { index, inverse: false }
    }

    pub fn inverse(index: usize) -> Move {
        Move { index, inverse: true }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "S{}^-1", self.index)
        } else {
            write!(f, "S{}", self.index)
        }
    }
}

pub type MoveSequence = Vec<Move>;

/// An ordered tuple of bands with its product.
#[derive(Debug, Clone)]
pub struct Factorization {
    factors: Vec<Braid>,
    product: Braid,
}

impl PartialEq for Factorization {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for Factorization {}

impl std::hash::Hash for Factorization {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.factors.hash(state);
    }
}

impl PartialOrd for Factorization {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Factorization {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.factors.cmp(&other.factors)
    }
}

/// Opaque comparable key: equal exactly for tuples of the same length with
/// component-wise equal canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorizationKey(Vec<u8>);

impl Factorization {
    /// Builds a factorization, checking that every entry is a band.
    pub fn new(factors: Vec<Braid>) -> Result<Factorization> {
        for (i, f) in factors.iter().enumerate() {
            if !is_band(f) {
                return Err(Error::Precondition(format!(
                    "factor {} ({}) is not a conjugate of s1",
                    i + 1,
                    f
                )));
            }
        }
        Ok(Factorization::from_bands_unchecked(factors))
    }

    /// Builds a factorization from entries already known to be bands.
    pub(crate) fn from_bands_unchecked(factors: Vec<Braid>) -> Factorization {
        let product = factors
            .iter()
            .fold(Braid::identity(), |acc, f| acc.mul(f));
        Factorization { factors, product }
    }

    pub fn factors(&self) -> &[Braid] {
        &self.factors
    }

    pub fn product(&self) -> &Braid {
        &self.product
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn canonical_key(&self) -> FactorizationKey {
        let mut bytes = Vec::new();
        for b in &self.factors {
            let inf = i16::try_from(b.inf()).expect("inf out of key range");
            bytes.extend_from_slice(&inf.to_be_bytes());
            bytes.push(b.factors().len() as u8);
            bytes.extend(b.factors().iter().map(|&f| f as u8 + 1));
            bytes.push(0xff);
        }
        FactorizationKey(bytes)
    }

    /// Applies one Hurwitz move. The product is unchanged and band entries
    /// stay bands, so no revalidation happens.
    pub fn sigma_move(&self, mv: Move) -> Result<Factorization> {
        let i = mv.index;
        if i < 1 || i >= self.factors.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.factors.len() });
        }
        let mut factors = self.factors.clone();
        let a = factors[i - 1].clone();
        let b = factors[i].clone();
        if mv.inverse {
            factors[i - 1] = b.clone();
            factors[i] = a.conjugate_by(&b);
        } else {
            factors[i - 1] = a.mul(&b).mul(&a.inverse());
            factors[i] = a;
        }
        Ok(Factorization { factors, product: self.product.clone() })
    }

    pub fn apply_moves(&self, moves: &[Move]) -> Result<Factorization> {
        let mut f = self.clone();
        for &mv in moves {
            f = f.sigma_move(mv)?;
        }
        Ok(f)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, b) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", b.to_reduced_word())?;
        }
        f.write_str(")")
    }
}

struct Explored {
    nodes: Vec<Factorization>,
    parents: Vec<Option<(usize, Move)>>,
    found: Option<usize>,
}

/// BFS closure of `start` under all moves. Stops early when `target` is hit.
fn explore(start: &Factorization, cap: usize, target: Option<&Factorization>) -> Result<Explored> {
    let mut nodes = vec![start.clone()];
    let mut parents: Vec<Option<(usize, Move)>> = vec![None];
    let mut index: HashMap<FactorizationKey, usize> = HashMap::new();
    index.insert(start.canonical_key(), 0);
    if target == Some(start) {
        return Ok(Explored { nodes, parents, found: Some(0) });
    }
    let k = start.len();
    let mut moves = Vec::with_capacity(2 * k.saturating_sub(1));
    for i in 1..k {
        moves.push(Move::forward(i));
    }
    for i in 1..k {
        moves.push(Move::inverse(i));
    }
    let mut at = 0;
    while at < nodes.len() {
        for &mv in &moves {
            let next = nodes[at].sigma_move(mv)?;
            match index.entry(next.canonical_key()) {
                Entry::Occupied(_) => {}
                Entry::Vacant(slot) => {
                    if nodes.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    slot.insert(nodes.len());
                    let hit = target == Some(&next);
                    nodes.push(next);
                    parents.push(Some((at, mv)));
                    if hit {
                        return Ok(Explored {
                            found: Some(nodes.len() - 1),
                            nodes,
                            parents,
                        });
                    }
                }
            }
        }
        at += 1;
    }
    Ok(Explored { nodes, parents, found: None })
}

fn path_to(explored: &Explored, mut idx: usize) -> MoveSequence {
    let mut moves = Vec::new();
    while let Some((parent, mv)) = explored.parents[idx] {
        moves.push(mv);
        idx = parent;
    }
    moves.reverse();
    moves
}

/// A completed Hurwitz orbit, members sorted by canonical key.
#[derive(Debug, Clone)]
pub struct Orbit {
    members: Vec<Factorization>,
}

impl Orbit {
    pub fn members(&self) -> &[Factorization] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, f: &Factorization) -> bool {
        self.members.binary_search(f).is_ok()
    }
}

/// Breadth-first closure of `f` under all moves, deduplicated by canonical
/// key and returned in sorted order. Exceeding `cap` is an error distinct
/// from any mathematical answer.
pub fn orbit(f: &Factorization, cap: usize) -> Result<Orbit> {
    let explored = explore(f, cap, None)?;
    let mut members = explored.nodes;
    members.sort();
    Ok(Orbit { members })
}

/// Orbit of `f` together with a replayable move sequence from `f` to each
/// member (members sorted by canonical key).
pub fn orbit_with_witnesses(
    f: &Factorization,
    cap: usize,
) -> Result<Vec<(Factorization, MoveSequence)>> {
    let explored = explore(f, cap, None)?;
    let mut out: Vec<(Factorization, MoveSequence)> = (0..explored.nodes.len())
        .map(|i| (explored.nodes[i].clone(), path_to(&explored, i)))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Decides Hurwitz equivalence. Returns a witness move sequence mapping `f1`
/// to `f2` exactly when they lie in the same orbit.
pub fn equivalent(
    f1: &Factorization,
    f2: &Factorization,
    cap: usize,
) -> Result<Option<MoveSequence>> {
    if f1.len() != f2.len() || f1.product() != f2.product() {
        return Ok(None);
    }
    let explored = explore(f1, cap, Some(f2))?;
    Ok(explored.found.map(|idx| path_to(&explored, idx)))
}

/// Partitions the input list into Hurwitz-equivalence classes, returned as
/// groups of input indices. Groups are ordered by their least canonical key;
/// indices inside a group keep input order.
pub fn orbit_partition(fs: &[Factorization], cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut assigned = vec![false; fs.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..fs.len() {
        if assigned[i] {
            continue;
        }
        assigned[i] = true;
        let mut group = vec![i];
        let candidates: Vec<usize> = (i + 1..fs.len())
            .filter(|&j| !assigned[j])
            .filter(|&j| fs[j].len() == fs[i].len() && fs[j].product() == fs[i].product())
            .collect();
        if !candidates.is_empty() {
            let orb = orbit(&fs[i], cap)?;
            for j in candidates {
                if orb.contains(&fs[j]) {
                    assigned[j] = true;
                    group.push(j);
                }
            }
        }
        groups.push(group);
    }
    groups.sort_by_key(|g| {
        g.iter()
            .map(|&j| fs[j].canonical_key())
            .min()
            .expect("empty group")
    });
    Ok(groups)
}
