//! Quasipositivity and orbit-representative search.
//!
//! Given a positive word `W` of length `n` and `p >= 0`, selecting letters at
//! a 1-based index set `I = {i_1 < ... < i_k}` induces the factorization
//! `(A_1 x_1 A_1^-1, ..., A_k x_k A_k^-1)` of `W G^-p`, where `x_j` is the
//! letter at `i_j`, the complementary pieces are `W_1, ..., W_{k+1}`, and
//! `A_j = W_1 ... W_j`. This tuple factors `W G^-p` into bands exactly when
//! the word left after deleting the selected letters equals `G^p` (`G` the
//! Garside element of the chosen structure), and every Hurwitz orbit of
//! quasipositive factorizations contains such a tuple for a word-minimal
//! index set. Enumerating word-minimal index sets therefore yields a complete
//! list of orbit representatives in either structure.
//!
//! The search is a depth-first scan over positions with two prunings: a count
//! bound on the removals still available, and a left-divisibility test of the
//! kept prefix against `G^p`. Both prunings are exact (a kept prefix that
//! does not divide `G^p` can never complete), which is checked against the
//! unpruned subset enumeration in the test suite.

use crate::garside::{to_dual_positive_form, to_positive_form, Braid, DualBraid, Structure};
use crate::hurwitz::{orbit_partition, Factorization};
use crate::word::{Gen, PositiveWord, Word};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Strictly increasing 1-based positions into a positive word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(positions: Vec<usize>) -> Result<IndexSet> {
        if positions.first().is_some_and(|&p| p == 0)
            || positions.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::Precondition(format!(
                "positions {positions:?} are not strictly increasing 1-based indices"
            )));
        }
        Ok(IndexSet(positions))
    }

    pub fn empty() -> IndexSet {
        IndexSet(Vec::new())
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Number of selected positions strictly below `i`.
    pub fn rank_below(&self, i: usize) -> usize {
        self.0.partition_point(|&p| p < i)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// The subword of `word` omitting exactly the positions in `idx`.
pub fn remove_letters(word: &PositiveWord, idx: &IndexSet) -> Result<PositiveWord> {
    if let Some(&last) = idx.positions().last() {
        if last > word.len() {
            return Err(Error::IndexOutOfRange { index: last, len: word.len() });
        }
    }
    let gens = word
        .gens()
        .iter()
        .enumerate()
        .filter(|(i, _)| !idx.contains(i + 1))
        .map(|(_, &g)| g)
        .collect();
    PositiveWord::new(word.mode(), gens)
}

/// An index set is word-minimal when no selected position can slide left
/// across an equal unselected letter: no `i` in the set has `i-1` outside it
/// with `letter(i-1) = letter(i)`.
pub fn is_word_minimal(word: &PositiveWord, idx: &IndexSet) -> bool {
    idx.positions()
        .iter()
        .all(|&i| i < 2 || idx.contains(i - 1) || word.letter(i - 1) != word.letter(i))
}

/// Slides violating positions left across equal letters until word-minimal.
/// The induced factorization is the identical tuple of braids, not merely an
/// equivalent one.
pub fn minimalize(word: &PositiveWord, idx: &IndexSet) -> IndexSet {
    let mut positions = idx.positions().to_vec();
    loop {
        let mut changed = false;
        for j in 0..positions.len() {
            let i = positions[j];
            if i >= 2 && !positions.contains(&(i - 1)) && word.letter(i - 1) == word.letter(i) {
                positions[j] = i - 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    positions.sort_unstable();
    IndexSet(positions)
}

/// The factorization induced by selecting the letters of `word` at `idx`:
/// entry `j` is the letter at the `j`-th selected position conjugated by the
/// product of all unselected letters to its left. Well-defined for any index
/// set; it factors `word · G^-p` exactly when the unselected letters spell
/// `G^p`.
pub fn factorization_from_indices(word: &PositiveWord, idx: &IndexSet) -> Result<Factorization> {
    if let Some(&last) = idx.positions().last() {
        if last > word.len() {
            return Err(Error::IndexOutOfRange { index: last, len: word.len() });
        }
    }
    let mut prefix = Braid::identity();
    let mut entries = Vec::with_capacity(idx.len());
    let mut next = 0;
    for (i, &g) in word.gens().iter().enumerate() {
        let pos = i + 1;
        if next < idx.len() && idx.positions()[next] == pos {
            entries.push(Braid::generator(g).conjugate_by(&prefix.inverse()));
            next += 1;
        } else {
            prefix = prefix.mul(&Braid::generator(g));
        }
    }
    Ok(Factorization::from_bands_unchecked(entries))
}

fn garside_letters(s: Structure) -> usize {
    match s {
        Structure::Classical => 3,
        Structure::Dual => 2,
    }
}

/// Kept-prefix state of the search, one variant per Garside structure.
#[derive(Clone)]
enum Prefix {
    Classical(Braid),
    Dual(DualBraid),
}

impl Prefix {
    fn start(s: Structure) -> Prefix {
        match s {
            Structure::Classical => Prefix::Classical(Braid::identity()),
            Structure::Dual => Prefix::Dual(DualBraid::identity()),
        }
    }

    fn push(&self, g: Gen) -> Prefix {
        match self {
            Prefix::Classical(b) => Prefix::Classical(b.mul(&Braid::generator(g))),
            Prefix::Dual(b) => Prefix::Dual(b.mul(&DualBraid::generator(g))),
        }
    }

    fn divides_power(&self, p: usize) -> bool {
        match self {
            Prefix::Classical(b) => b.inverse().mul(&Braid::delta_power(p as i32)).inf() >= 0,
            Prefix::Dual(b) => b.inverse().mul(&DualBraid::delta_power(p as i32)).inf() >= 0,
        }
    }

    fn mul_is_power(&self, rest: &Prefix, p: usize) -> bool {
        match (self, rest) {
            (Prefix::Classical(a), Prefix::Classical(b)) => {
                a.mul(b) == Braid::delta_power(p as i32)
            }
            (Prefix::Dual(a), Prefix::Dual(b)) => a.mul(b).is_delta_power(p as i32),
            _ => unreachable!("mixed structures"),
        }
    }
}

struct Search<'a> {
    word: &'a PositiveWord,
    p: usize,
    k: usize,
    suffixes: Vec<Prefix>,
    out: Vec<IndexSet>,
    limit: Option<usize>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.out.len() >= l)
    }

    fn dfs(&mut self, pos: usize, chosen: &mut Vec<usize>, prefix: Prefix, prev_removed: bool) {
        if self.done() {
            return;
        }
        let n = self.word.len();
        if chosen.len() == self.k {
            // suffixes[pos-1] is the product of the letters pos ..= n
            if prefix.mul_is_power(&self.suffixes[pos - 1], self.p) {
                self.out.push(IndexSet(chosen.clone()));
            }
            return;
        }
        if pos > n || self.k - chosen.len() > n - pos + 1 {
            return;
        }
        let letter = self.word.letter(pos).unwrap();
        // removal first keeps the output lexicographic; removals that break
        // word-minimality are skipped
        let minimal_ok = pos < 2 || prev_removed || self.word.letter(pos - 1) != Some(letter);
        if minimal_ok {
            chosen.push(pos);
            self.dfs(pos + 1, chosen, prefix.clone(), true);
            chosen.pop();
            if self.done() {
                return;
            }
        }
        let kept = prefix.push(letter);
        if kept.divides_power(self.p) {
            self.dfs(pos + 1, chosen, kept, false);
        }
    }
}

fn enumerate_limited(
    word: &PositiveWord,
    p: usize,
    s: Structure,
    limit: Option<usize>,
) -> Vec<IndexSet> {
    let k = word.len() as i64 - (garside_letters(s) * p) as i64;
    if k < 0 {
        return Vec::new();
    }
    // suffix products: suffixes[i] = letters i+1 ..= n multiplied out
    let mut suffixes: Vec<Prefix> = Vec::with_capacity(word.len() + 1);
    suffixes.push(Prefix::start(s));
    for &g in word.gens().iter().rev() {
        let ext = match suffixes.last().unwrap() {
            Prefix::Classical(b) => Prefix::Classical(Braid::generator(g).mul(b)),
            Prefix::Dual(b) => Prefix::Dual(DualBraid::generator(g).mul(b)),
        };
        suffixes.push(ext);
    }
    suffixes.reverse();
    let mut search = Search {
        word,
        p,
        k: k as usize,
        suffixes,
        out: Vec::new(),
        limit,
    };
    let mut chosen = Vec::with_capacity(search.k);
    search.dfs(1, &mut chosen, Prefix::start(s), false);
    search.out
}

/// All word-minimal index sets of the forced size (every band has exponent
/// sum 1) whose removal leaves a word equal to `G^p`, in lexicographic order.
pub fn enumerate_minimal_index_sets(word: &PositiveWord, p: usize, s: Structure) -> Vec<IndexSet> {
    enumerate_limited(word, p, s, None)
}

/// Unpruned reference enumeration: every subset of the forced size, filtered
/// by word-minimality and the Garside-power check. Kept independent of the
/// pruned search so the prunings can be validated against it.
pub fn enumerate_minimal_index_sets_unpruned(
    word: &PositiveWord,
    p: usize,
    s: Structure,
) -> Vec<IndexSet> {
    let k = word.len() as i64 - (garside_letters(s) * p) as i64;
    if k < 0 {
        return Vec::new();
    }
    let (k, n) = (k as usize, word.len());
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (1..=k).collect();
    loop {
        let idx = IndexSet(subset.clone());
        if is_word_minimal(word, &idx) {
            let rest = remove_letters(word, &idx).unwrap();
            if crate::garside::is_garside_power(&rest, p as u32, s) {
                out.push(idx);
            }
        }
        if k == 0 {
            break;
        }
        // next k-combination of 1..=n in lexicographic order
        let mut j = k;
        while j > 0 && subset[j - 1] == n - (k - j) {
            j -= 1;
        }
        if j == 0 {
            break;
        }
        subset[j - 1] += 1;
        for l in j..k {
            subset[l] = subset[l - 1] + 1;
        }
    }
    out
}

/// Decides quasipositivity: writes `x = W D^-p` and searches for one
/// word-minimal index set realizing `D^p`. The identity braid is
/// quasipositive with the empty factorization.
pub fn is_quasipositive(x: &Word) -> bool {
    let (word, p) = to_positive_form(x);
    !enumerate_limited(&word, p, Structure::Classical, Some(1)).is_empty()
}

/// The same decision through the dual route: `x = W d^-p` with BKL-positive
/// `W`, removal down to `d^p`.
pub fn is_quasipositive_dual(x: &Word) -> bool {
    let (word, p) = to_dual_positive_form(x);
    !enumerate_limited(&word, p, Structure::Dual, Some(1)).is_empty()
}

/// One representative per Hurwitz orbit of quasipositive factorizations of
/// `x`: the factorizations of all word-minimal index sets are partitioned by
/// Hurwitz equivalence and each class reports its lexicographically least
/// index set. The list is complete and irredundant.
pub fn orbit_representatives(
    x: &Word,
    s: Structure,
    cap: usize,
) -> Result<Vec<(IndexSet, Factorization)>> {
    let (word, p) = match s {
        Structure::Classical => to_positive_form(x),
        Structure::Dual => to_dual_positive_form(x),
    };
    let sets = enumerate_minimal_index_sets(&word, p, s);
    let candidates: Vec<Factorization> = sets
        .iter()
        .map(|i| factorization_from_indices(&word, i))
        .collect::<Result<_>>()?;
    let groups = orbit_partition(&candidates, cap)?;
    let mut reps: Vec<(IndexSet, Factorization)> = groups
        .into_iter()
        .map(|group| {
            let best = group
                .into_iter()
                .min_by(|&a, &b| sets[a].cmp(&sets[b]))
                .expect("empty group");
            (sets[best].clone(), candidates[best].clone())
        })
        .collect();
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(reps)
}

/// Number of Hurwitz orbits of quasipositive factorizations of `x`
/// (0 when `x` is not quasipositive).
pub fn count_orbits(x: &Word, cap: usize) -> Result<usize> {
    Ok(orbit_representatives(x, Structure::Classical, cap)?.len())
}

/// Machine-readable summary of the search for one braid.
#[derive(Debug, Clone, Serialize)]
pub struct BraidReport {
    pub input: String,
    pub positive_form: PositiveForm,
    pub quasipositive: bool,
    pub orbit_count: usize,
    pub representatives: Vec<Representative>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PositiveForm {
    #[serde(rename = "W")]
    pub word: String,
    pub p: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Representative {
    #[serde(rename = "I")]
    pub indices: Vec<usize>,
    pub factors: Vec<String>,
}

pub fn report(x: &Word, s: Structure, cap: usize) -> Result<BraidReport> {
    let (word, p) = match s {
        Structure::Classical => to_positive_form(x),
        Structure::Dual => to_dual_positive_form(x),
    };
    let reps = orbit_representatives(x, s, cap)?;
    Ok(BraidReport {
        input: x.to_string(),
        positive_form: PositiveForm { word: word.to_string(), p },
        quasipositive: !reps.is_empty(),
        orbit_count: reps.len(),
        representatives: reps
            .into_iter()
            .map(|(idx, f)| Representative {
                indices: idx.positions().to_vec(),
                factors: f
                    .factors()
                    .iter()
                    .map(|b| b.to_reduced_word().to_string())
                    .collect(),
            })
            .collect(),
    })
}
