//! The word problem for B3 via Garside normal forms.
//!
//! Two Garside structures are implemented with hand-rolled tables, since the
//! group is fixed and the divisor lattices are tiny:
//!
//! * classical: Garside element `D = s1 s2 s1` (the half-twist), simple
//!   elements `{1, s1, s2, s1 s2, s2 s1, D}`;
//! * dual: Garside element `d = s2 s1`, simple elements
//!   `{1, s0, s1, s2, d}` with the relations `s2 s1 = s1 s0 = s0 s2 = d`.
//!
//! A braid is stored as `D^inf · f1 ... fl` (resp. `d^inf · f1 ... fl`) where
//! the factors are proper simples and every junction is left-weighted. Two
//! words represent the same braid exactly when their canonical forms agree
//! component-wise, so [`Braid`] doubles as the equality and deduplication
//! currency of the whole crate. All equality questions are routed through the
//! classical form; the dual form is used where an algorithm needs
//! BKL-positivity or divisibility of powers of `d`.

use crate::word::{
    bkl_to_artin, swap_artin, tau_dual_gen, tau_dual_gen_inv, Gen, Letter, Mode, PositiveWord,
    Sign, Word,
};
use std::fmt;

/// Which Garside structure an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Structure {
    Classical,
    Dual,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Structure::Classical => "classical",
            Structure::Dual => "dual",
        })
    }
}

/// A proper simple element of the classical structure: a divisor of the
/// half-twist other than 1 and the half-twist itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalFactor {
    S1,
    S2,
    S12,
    S21,
}

impl ClassicalFactor {
    pub fn gens(self) -> &'static [Gen] {
        match self {
            ClassicalFactor::S1 => &[Gen::S1],
            ClassicalFactor::S2 => &[Gen::S2],
            ClassicalFactor::S12 => &[Gen::S1, Gen::S2],
            ClassicalFactor::S21 => &[Gen::S2, Gen::S1],
        }
    }

    /// First letter.
    pub fn head(self) -> Gen {
        self.gens()[0]
    }

    /// Last letter.
    pub fn tail(self) -> Gen {
        *self.gens().last().unwrap()
    }

    pub fn len(self) -> usize {
        self.gens().len()
    }

    /// Image under conjugation by the half-twist (swap of the two letters).
    pub fn tau(self) -> ClassicalFactor {
        match self {
            ClassicalFactor::S1 => ClassicalFactor::S2,
            ClassicalFactor::S2 => ClassicalFactor::S1,
            ClassicalFactor::S12 => ClassicalFactor::S21,
            ClassicalFactor::S21 => ClassicalFactor::S12,
        }
    }
}

/// Working alphabet for normalization: the full divisor lattice of `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CSim {
    One,
    F(ClassicalFactor),
    Delta,
}

impl CSim {
    fn gens(self) -> &'static [Gen] {
        match self {
            CSim::One => &[],
            CSim::F(f) => f.gens(),
            CSim::Delta => &[Gen::S1, Gen::S2, Gen::S1],
        }
    }
}

fn csim_from_gens(gens: &[Gen]) -> Option<CSim> {
    use ClassicalFactor::*;
    use Gen::{S1, S2};
    match gens {
        [] => Some(CSim::One),
        [S1] => Some(CSim::F(ClassicalFactor::S1)),
        [S2] => Some(CSim::F(ClassicalFactor::S2)),
        [S1, S2] => Some(CSim::F(S12)),
        [S2, S1] => Some(CSim::F(S21)),
        [S1, S2, S1] | [S2, S1, S2] => Some(CSim::Delta),
        _ => None,
    }
}

/// Left divisibility in the lattice of divisors of `D`.
fn divides(a: CSim, b: CSim) -> bool {
    use ClassicalFactor::*;
    match (a, b) {
        (CSim::One, _) => true,
        (_, CSim::Delta) => true,
        (x, y) if x == y => true,
        (CSim::F(S1), CSim::F(S12)) => true,
        (CSim::F(S2), CSim::F(S21)) => true,
        _ => false,
    }
}

/// Meet (left gcd) in the divisor lattice.
fn gcd(a: CSim, b: CSim) -> CSim {
    use ClassicalFactor::*;
    for c in [
        CSim::Delta,
        CSim::F(S12),
        CSim::F(S21),
        CSim::F(S1),
        CSim::F(S2),
    ] {
        if divides(c, a) && divides(c, b) {
            return c;
        }
    }
    CSim::One
}

/// The right complement: `x * complement(x) = D`.
fn complement(x: CSim) -> CSim {
    use ClassicalFactor::*;
    match x {
        CSim::One => CSim::Delta,
        CSim::F(S1) => CSim::F(S21),
        CSim::F(S2) => CSim::F(S12),
        CSim::F(S12) => CSim::F(S1),
        CSim::F(S21) => CSim::F(S2),
        CSim::Delta => CSim::One,
    }
}

/// `x * s`, defined whenever `s` divides `complement(x)`.
fn absorb(x: CSim, s: CSim) -> CSim {
    let mut gens = x.gens().to_vec();
    gens.extend_from_slice(s.gens());
    csim_from_gens(&gens).expect("absorb outside the divisor lattice")
}

/// `s^-1 * y` for `s` dividing `y`.
fn quotient(s: CSim, y: CSim) -> CSim {
    use ClassicalFactor::*;
    match (s, y) {
        (CSim::One, y) => y,
        (x, y) if x == y => CSim::One,
        (CSim::F(S1), CSim::F(S12)) => CSim::F(S2),
        (CSim::F(S2), CSim::F(S21)) => CSim::F(S1),
        (CSim::F(S1), CSim::Delta) => CSim::F(S21),
        (CSim::F(S2), CSim::Delta) => CSim::F(S12),
        (CSim::F(S12), CSim::Delta) => CSim::F(S1),
        (CSim::F(S21), CSim::Delta) => CSim::F(S2),
        _ => unreachable!("quotient of non-divisor"),
    }
}

fn tau_sim(x: CSim) -> CSim {
    match x {
        CSim::F(f) => CSim::F(f.tau()),
        other => other,
    }
}

/// The canonical form of a braid in the classical structure:
/// `D^inf · f1 ... fl` with proper simple factors and every junction
/// left-weighted. Structural equality coincides with equality in B3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Braid {
    inf: i32,
    factors: Vec<ClassicalFactor>,
}

/// Brings a factor sequence into left-greedy normal form. Local moves slide
/// divisors leftward across junctions; half-twists commute to the front
/// (twisting what they pass) and trivial factors drop out. The loop runs to a
/// fixpoint, which is the unique left-weighted sequence.
fn normalize_classical(mut inf: i32, mut entries: Vec<CSim>) -> Braid {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < entries.len() {
            match entries[i] {
                CSim::One => {
                    entries.remove(i);
                    changed = true;
                }
                CSim::Delta => {
                    inf += 1;
                    for e in &mut entries[..i] {
                        *e = tau_sim(*e);
                    }
                    entries.remove(i);
                    changed = true;
                }
                _ => i += 1,
            }
        }
        let mut moved = false;
        let mut i = 0;
        while i + 1 < entries.len() {
            let (x, y) = (entries[i], entries[i + 1]);
            let s = gcd(complement(x), y);
            if s != CSim::One {
                entries[i] = absorb(x, s);
                entries[i + 1] = quotient(s, y);
                moved = true;
            }
            i += 1;
        }
        if !changed && !moved {
            break;
        }
    }
    let factors = entries
        .into_iter()
        .map(|e| match e {
            CSim::F(f) => f,
            _ => unreachable!("improper factor survived normalization"),
        })
        .collect();
    Braid { inf, factors }
}

impl Braid {
    pub fn identity() -> Braid {
        Braid { inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(p: i32) -> Braid {
        Braid { inf: p, factors: Vec::new() }
    }

    /// Canonical form of a single signed letter (s0 included).
    fn letter(l: Letter) -> Braid {
        use ClassicalFactor::*;
        match (l.gen, l.sign) {
            (Gen::S1, Sign::Pos) => Braid { inf: 0, factors: vec![S1] },
            (Gen::S2, Sign::Pos) => Braid { inf: 0, factors: vec![S2] },
            (Gen::S1, Sign::Neg) => Braid { inf: -1, factors: vec![S12] },
            (Gen::S2, Sign::Neg) => Braid { inf: -1, factors: vec![S21] },
            // s0 = s1^-1 s2 s1 and its inverse
            (Gen::S0, Sign::Pos) => Braid { inf: -1, factors: vec![S12, S21] },
            (Gen::S0, Sign::Neg) => Braid { inf: -1, factors: vec![S1, S1] },
        }
    }

    pub fn generator(g: Gen) -> Braid {
        Braid::letter(Letter::positive(g))
    }

    pub fn from_word(w: &Word) -> Braid {
        let mut acc = Braid::identity();
        for &l in w.letters() {
            acc = acc.mul(&Braid::letter(l));
        }
        acc
    }

    pub fn from_positive(w: &PositiveWord) -> Braid {
        Braid::from_word(&w.to_word())
    }

    pub fn inf(&self) -> i32 {
        self.inf
    }

    pub fn factors(&self) -> &[ClassicalFactor] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn mul(&self, rhs: &Braid) -> Braid {
        let inf = self.inf + rhs.inf;
        let twist = rhs.inf.rem_euclid(2) == 1;
        let mut entries: Vec<CSim> = Vec::with_capacity(self.factors.len() + rhs.factors.len());
        for &f in &self.factors {
            entries.push(CSim::F(if twist { f.tau() } else { f }));
        }
        entries.extend(rhs.factors.iter().map(|&f| CSim::F(f)));
        normalize_classical(inf, entries)
    }

    pub fn inverse(&self) -> Braid {
        // (D^t f1..fl)^-1 = fl^-1 ... f1^-1 D^-t with f^-1 = D^-1 tau(complement(f))
        let mut acc = Braid::identity();
        for &f in self.factors.iter().rev() {
            let inv = match tau_sim(complement(CSim::F(f))) {
                CSim::F(g) => g,
                _ => unreachable!(),
            };
            acc = acc.mul(&Braid { inf: -1, factors: vec![inv] });
        }
        acc.mul(&Braid::delta_power(-self.inf))
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Braid) -> Braid {
        g.inverse().mul(self).mul(g)
    }

    pub fn pow(&self, n: u32) -> Braid {
        let mut acc = Braid::identity();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn exponent_sum(&self) -> i64 {
        3 * self.inf as i64 + self.factors.iter().map(|f| f.len() as i64).sum::<i64>()
    }

    /// A word spelling this braid exactly: `inf` copies of `D^±1` followed by
    /// the factor letters.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        let delta = [
            Letter::positive(Gen::S1),
            Letter::positive(Gen::S2),
            Letter::positive(Gen::S1),
        ];
        let delta_inv = [
            Letter::negative(Gen::S1),
            Letter::negative(Gen::S2),
            Letter::negative(Gen::S1),
        ];
        for _ in 0..self.inf.unsigned_abs() {
            letters.extend_from_slice(if self.inf >= 0 { &delta } else { &delta_inv });
        }
        for f in &self.factors {
            letters.extend(f.gens().iter().map(|&g| Letter::positive(g)));
        }
        Word::new(Mode::Artin, letters).unwrap()
    }

    /// Freely reduced spelling, used for display and JSON output.
    pub fn to_reduced_word(&self) -> Word {
        self.to_word().free_reduce()
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "D^{}", self.inf);
        }
        if self.inf != 0 {
            write!(f, "D^{}", self.inf)?;
        }
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 || self.inf != 0 {
                f.write_str(" · ")?;
            }
            f.write_str(match fac {
                ClassicalFactor::S1 => "s1",
                ClassicalFactor::S2 => "s2",
                ClassicalFactor::S12 => "s1 s2",
                ClassicalFactor::S21 => "s2 s1",
            })?;
        }
        Ok(())
    }
}

/// True iff the two words represent the same element of B3.
pub fn equal(u: &Word, v: &Word) -> bool {
    Braid::from_word(u) == Braid::from_word(v)
}

// ---------------------------------------------------------------------------
// Dual structure
// ---------------------------------------------------------------------------

/// `y * x = d` exactly when `y = dual_pred(x)`.
fn dual_pred(g: Gen) -> Gen {
    match g {
        Gen::S1 => Gen::S2,
        Gen::S2 => Gen::S0,
        Gen::S0 => Gen::S1,
    }
}

/// `x * dual_complement(x) = d`.
pub(crate) fn dual_complement(g: Gen) -> Gen {
    match g {
        Gen::S1 => Gen::S0,
        Gen::S0 => Gen::S2,
        Gen::S2 => Gen::S1,
    }
}

fn tau_dual_pow(g: Gen, t: i32) -> Gen {
    match t.rem_euclid(3) {
        0 => g,
        1 => tau_dual_gen(g),
        _ => tau_dual_gen_inv(g),
    }
}

/// Canonical form in the dual structure: `d^inf · f1 ... fl` where the
/// factors are band generators and no adjacent pair multiplies to `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualBraid {
    inf: i32,
    factors: Vec<Gen>,
}

fn normalize_dual(mut inf: i32, mut entries: Vec<Option<Gen>>) -> DualBraid {
    // None marks an extracted slot; adjacent pairs multiplying to d collapse
    // into a power of d which commutes to the front twisting what it passes.
    loop {
        entries.retain(|e| e.is_some());
        let mut moved = false;
        let mut i = 0;
        while i + 1 < entries.len() {
            let (x, y) = (entries[i].unwrap(), entries[i + 1].unwrap());
            if y == dual_complement(x) {
                inf += 1;
                for e in entries[..i].iter_mut().flatten() {
                    *e = tau_dual_gen(*e);
                }
                entries[i] = None;
                entries[i + 1] = None;
                moved = true;
                i += 2;
            } else {
                i += 1;
            }
        }
        if !moved {
            break;
        }
    }
    DualBraid {
        inf,
        factors: entries.into_iter().flatten().collect(),
    }
}

impl DualBraid {
    pub fn identity() -> DualBraid {
        DualBraid { inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(p: i32) -> DualBraid {
        DualBraid { inf: p, factors: Vec::new() }
    }

    fn letter(l: Letter) -> DualBraid {
        match l.sign {
            Sign::Pos => DualBraid { inf: 0, factors: vec![l.gen] },
            // x^-1 = d^-1 * dual_pred(x)
            Sign::Neg => DualBraid { inf: -1, factors: vec![dual_pred(l.gen)] },
        }
    }

    pub fn generator(g: Gen) -> DualBraid {
        DualBraid::letter(Letter::positive(g))
    }

    pub fn from_word(w: &Word) -> DualBraid {
        let mut acc = DualBraid::identity();
        for &l in w.letters() {
            acc = acc.mul(&DualBraid::letter(l));
        }
        acc
    }

    pub fn from_positive(w: &PositiveWord) -> DualBraid {
        DualBraid::from_word(&w.to_word())
    }

    pub fn inf(&self) -> i32 {
        self.inf
    }

    pub fn factors(&self) -> &[Gen] {
        &self.factors
    }

    pub fn is_delta_power(&self, p: i32) -> bool {
        self.inf == p && self.factors.is_empty()
    }

    pub fn mul(&self, rhs: &DualBraid) -> DualBraid {
        let inf = self.inf + rhs.inf;
        let mut entries: Vec<Option<Gen>> =
            Vec::with_capacity(self.factors.len() + rhs.factors.len());
        entries.extend(
            self.factors
                .iter()
                .map(|&g| Some(tau_dual_pow(g, rhs.inf))),
        );
        entries.extend(rhs.factors.iter().map(|&g| Some(g)));
        normalize_dual(inf, entries)
    }

    pub fn inverse(&self) -> DualBraid {
        let mut acc = DualBraid::identity();
        for &g in self.factors.iter().rev() {
            // g^-1 = d^-1 * tau^-1(dual_complement(g))
            acc = acc.mul(&DualBraid {
                inf: -1,
                factors: vec![tau_dual_gen_inv(dual_complement(g))],
            });
        }
        acc.mul(&DualBraid::delta_power(-self.inf))
    }

    pub fn exponent_sum(&self) -> i64 {
        2 * self.inf as i64 + self.factors.len() as i64
    }

    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        let delta = [Letter::positive(Gen::S2), Letter::positive(Gen::S1)];
        let delta_inv = [Letter::negative(Gen::S1), Letter::negative(Gen::S2)];
        for _ in 0..self.inf.unsigned_abs() {
            letters.extend_from_slice(if self.inf >= 0 { &delta } else { &delta_inv });
        }
        letters.extend(self.factors.iter().map(|&g| Letter::positive(g)));
        Word::new(Mode::Bkl, letters).unwrap()
    }
}

impl fmt::Display for DualBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "d^{}", self.inf);
        }
        if self.inf != 0 {
            write!(f, "d^{}", self.inf)?;
        }
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 || self.inf != 0 {
                f.write_str(" · ")?;
            }
            f.write_str(g.token())?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Divisibility and positive-form conversions
// ---------------------------------------------------------------------------

/// True iff the positive word equals the `p`-th power of the Garside element
/// of the given structure.
pub fn is_garside_power(w: &PositiveWord, p: u32, s: Structure) -> bool {
    match s {
        Structure::Classical => {
            let b = Braid::from_positive(w);
            b.inf == p as i32 && b.factors.is_empty()
        }
        Structure::Dual => DualBraid::from_positive(w).is_delta_power(p as i32),
    }
}

/// True iff `prefix` left-divides the `p`-th power of the Garside element,
/// i.e. `prefix^-1 * G^p` is a positive braid (canonical inf >= 0).
pub fn is_prefix_divisor(prefix: &PositiveWord, p: u32, s: Structure) -> bool {
    match s {
        Structure::Classical => {
            Braid::from_positive(prefix)
                .inverse()
                .mul(&Braid::delta_power(p as i32))
                .inf
                >= 0
        }
        Structure::Dual => {
            DualBraid::from_positive(prefix)
                .inverse()
                .mul(&DualBraid::delta_power(p as i32))
                .inf
                >= 0
        }
    }
}

/// Writes an arbitrary word as `W * D^-p` with `W` positive over the Artin
/// alphabet. Letters are scanned left to right; each negative letter turns
/// into the two-letter completion of the half-twist (`s1^-1 -> s2 s1`,
/// `s2^-1 -> s1 s2`) and leaves one `D^-1` pending at the right end, swapping
/// the letters that later cross it. `p` equals the number of negative letters
/// of the freely reduced input and is not minimized further.
pub fn to_positive_form(w: &Word) -> (PositiveWord, usize) {
    let reduced = if w.mode() == Mode::Bkl {
        bkl_to_artin(&w.free_reduce()).free_reduce()
    } else {
        w.free_reduce()
    };
    let mut gens: Vec<Gen> = Vec::with_capacity(reduced.len() * 2);
    let mut p = 0usize;
    for l in reduced.letters() {
        let g = if p % 2 == 1 { swap_artin(l.gen) } else { l.gen };
        match l.sign {
            Sign::Pos => gens.push(g),
            Sign::Neg => {
                match g {
                    Gen::S1 => gens.extend_from_slice(&[Gen::S2, Gen::S1]),
                    Gen::S2 => gens.extend_from_slice(&[Gen::S1, Gen::S2]),
                    Gen::S0 => unreachable!("s0 after Artin conversion"),
                }
                p += 1;
            }
        }
    }
    (PositiveWord::new(Mode::Artin, gens).unwrap(), p)
}

/// Writes an arbitrary word as `W * d^-p` with `W` BKL-positive. Each
/// negative letter `x^-1` becomes the band generator completing `x` to `d`
/// (`x * y = d`), with one `d^-1` pending at the right end cycling the
/// letters that later cross it.
pub fn to_dual_positive_form(w: &Word) -> (PositiveWord, usize) {
    let reduced = w.free_reduce();
    let mut gens: Vec<Gen> = Vec::with_capacity(reduced.len());
    let mut p = 0usize;
    for l in reduced.letters() {
        let g = tau_dual_pow(l.gen, p as i32);
        match l.sign {
            Sign::Pos => gens.push(g),
            Sign::Neg => {
                gens.push(dual_complement(g));
                p += 1;
            }
        }
    }
    (PositiveWord::new(Mode::Bkl, gens).unwrap(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::tau_dual;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(text: &str) -> Word {
        Word::parse_auto(text).unwrap()
    }

    fn pw(text: &str) -> PositiveWord {
        PositiveWord::from_word(&w(text)).unwrap()
    }

    fn nf(text: &str) -> Braid {
        Braid::from_word(&w(text))
    }

    // Exact 2x2 integer image in SL(2,Z): s1 -> [[1,1],[0,1]], s2 -> [[1,0],[-1,1]].
    // The kernel is generated by D^4, which has exponent sum 12, so the pair
    // (matrix, exponent sum) separates every pair of braids. This is an
    // oracle for equality that is completely independent of the normal form.
    type Mat = [[i128; 2]; 2];

    fn mat_mul(a: Mat, b: Mat) -> Mat {
        let mut c = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        c
    }

    fn mat_of(word: &Word) -> Mat {
        let m1: Mat = [[1, 1], [0, 1]];
        let m1i: Mat = [[1, -1], [0, 1]];
        let m2: Mat = [[1, 0], [-1, 1]];
        let m2i: Mat = [[1, 0], [1, 1]];
        let mut acc: Mat = [[1, 0], [0, 1]];
        for l in bkl_to_artin(word).letters() {
            let m = match (l.gen, l.sign) {
                (Gen::S1, Sign::Pos) => m1,
                (Gen::S1, Sign::Neg) => m1i,
                (Gen::S2, Sign::Pos) => m2,
                (Gen::S2, Sign::Neg) => m2i,
                _ => unreachable!(),
            };
            acc = mat_mul(acc, m);
        }
        acc
    }

    fn oracle_equal(u: &Word, v: &Word) -> bool {
        u.exponent_sum() == v.exponent_sum() && mat_of(u) == mat_of(v)
    }

    fn random_word(rng: &mut ChaCha8Rng, mode: Mode, max_len: usize) -> Word {
        let len = rng.gen_range(0..=max_len);
        let letters = (0..len)
            .map(|_| {
                let gen = match rng.gen_range(0..if mode == Mode::Bkl { 3 } else { 2 }) {
                    0 => Gen::S1,
                    1 => Gen::S2,
                    _ => Gen::S0,
                };
                let sign = if rng.gen() { Sign::Pos } else { Sign::Neg };
                Letter { gen, sign }
            })
            .collect();
        Word::new(mode, letters).unwrap()
    }

    #[test]
    fn half_twist_words_normalize_to_delta() {
        let b = nf("s1 s2 s1");
        assert_eq!((b.inf(), b.factors().len()), (1, 0));
        let b = nf("s2 s1 s2");
        assert_eq!((b.inf(), b.factors().len()), (1, 0));
    }

    #[test]
    fn dual_element_normalizes_to_delta() {
        let b = DualBraid::from_word(&w("d"));
        assert!(b.is_delta_power(1));
    }

    #[test]
    fn presentation_relation_holds() {
        assert!(equal(&w("s1 s2 s1"), &w("s2 s1 s2")));
        assert!(!equal(&w("s1"), &w("s2")));
    }

    #[test]
    fn cube_of_dual_element_is_full_twist() {
        assert!(equal(&w("d^3"), &w("D^2")));
        assert!(DualBraid::from_word(&w("d^3")).is_delta_power(3));
    }

    #[test]
    fn band_generator_defining_relations() {
        assert!(equal(&w("s2 s1"), &w("s1 s0")));
        assert!(equal(&w("s1 s0"), &w("s0 s2")));
        assert!(equal(&w("s0"), &w("s1^-1 s2 s1")));
    }

    #[test]
    fn example_word_normal_form() {
        use ClassicalFactor::*;
        let b = nf("s1^2 s2^2 s1^2 s2^2 D^-2");
        assert_eq!(b.inf(), -2);
        assert_eq!(b.factors(), &[S1, S12, S21, S12, S2]);
        assert_eq!(b.exponent_sum(), 2);
    }

    #[test]
    fn normal_form_roundtrips_through_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let word = random_word(&mut rng, Mode::Bkl, 16);
            let b = Braid::from_word(&word);
            assert_eq!(Braid::from_word(&b.to_word()), b);
            assert_eq!(Braid::from_word(&b.to_reduced_word()), b);
            assert_eq!(b.exponent_sum(), word.exponent_sum());
        }
    }

    #[test]
    fn equality_agrees_with_matrix_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut seen_equal = 0;
        for _ in 0..4000 {
            let u = random_word(&mut rng, Mode::Bkl, 12);
            let v = random_word(&mut rng, Mode::Bkl, 12);
            let got = equal(&u, &v);
            assert_eq!(got, oracle_equal(&u, &v), "u={u} v={v}");
            if got {
                seen_equal += 1;
            }
        }
        // inserting relators and cancelling pairs produces equal pairs
        for _ in 0..500 {
            let u = random_word(&mut rng, Mode::Artin, 10);
            let mut letters = u.letters().to_vec();
            for _ in 0..rng.gen_range(1..4) {
                let at = rng.gen_range(0..=letters.len());
                match rng.gen_range(0..3) {
                    0 => {
                        let l = Letter {
                            gen: if rng.gen() { Gen::S1 } else { Gen::S2 },
                            sign: if rng.gen() { Sign::Pos } else { Sign::Neg },
                        };
                        letters.splice(at..at, [l, l.inverse()]);
                    }
                    1 => {
                        // insert a spelling of D followed by a different
                        // spelling of D^-1
                        let six = [
                            Letter::positive(Gen::S1),
                            Letter::positive(Gen::S2),
                            Letter::positive(Gen::S1),
                            Letter::negative(Gen::S2),
                            Letter::negative(Gen::S1),
                            Letter::negative(Gen::S2),
                        ];
                        letters.splice(at..at, six);
                    }
                    _ => {
                        // rewrite a positive braid-relation occurrence if present
                        let pat = [
                            Letter::positive(Gen::S1),
                            Letter::positive(Gen::S2),
                            Letter::positive(Gen::S1),
                        ];
                        let rep = [
                            Letter::positive(Gen::S2),
                            Letter::positive(Gen::S1),
                            Letter::positive(Gen::S2),
                        ];
                        if let Some(pos) = letters.windows(3).position(|t| t == pat) {
                            letters.splice(pos..pos + 3, rep);
                        }
                    }
                }
            }
            let v = Word::new(Mode::Artin, letters).unwrap();
            assert!(equal(&u, &v), "relator insertion changed {u} vs {v}");
            seen_equal += 1;
        }
        assert!(seen_equal >= 500);
    }

    #[test]
    fn dual_and_classical_equality_verdicts_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10_000 {
            let u = random_word(&mut rng, Mode::Bkl, 10);
            let v = random_word(&mut rng, Mode::Bkl, 10);
            let classical = equal(&u, &v);
            let dual = DualBraid::from_word(&u) == DualBraid::from_word(&v);
            assert_eq!(classical, dual, "u={u} v={v}");
        }
    }

    #[test]
    fn multiplying_by_half_twist_increments_inf() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..200 {
            let u = random_word(&mut rng, Mode::Artin, 12);
            let b = Braid::from_word(&u);
            let shifted = b.mul(&Braid::delta_power(1));
            assert_eq!(shifted.inf(), b.inf() + 1);
            assert_eq!(shifted.factors().len(), b.factors().len());
        }
    }

    #[test]
    fn inverse_and_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..200 {
            let u = random_word(&mut rng, Mode::Bkl, 10);
            let b = Braid::from_word(&u);
            assert!(b.mul(&b.inverse()).is_identity());
            assert!(b.inverse().mul(&b).is_identity());
        }
        // s1^-1 s2 s1 is the band generator s0
        let conj = Braid::generator(Gen::S2).conjugate_by(&Braid::generator(Gen::S1));
        assert_eq!(conj, Braid::generator(Gen::S0));
        // the full twist is central
        let full = Braid::delta_power(2);
        for _ in 0..50 {
            let g = Braid::from_word(&random_word(&mut rng, Mode::Bkl, 8));
            assert_eq!(full.conjugate_by(&g), full);
        }
        let x = nf("s1 s2^-1 s1");
        assert_eq!(x.conjugate_by(&Braid::identity()), x);
    }

    #[test]
    fn dual_inverse_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..200 {
            let u = random_word(&mut rng, Mode::Bkl, 10);
            let b = DualBraid::from_word(&u);
            assert!(b.mul(&b.inverse()).is_delta_power(0));
            assert_eq!(DualBraid::from_word(&b.to_word()), b);
        }
    }

    #[test]
    fn garside_power_detection() {
        assert!(is_garside_power(&pw("s1 s2^2 s1 s2^2"), 2, Structure::Classical));
        assert!(is_garside_power(&pw("s1^2 s2 s1^2 s2"), 2, Structure::Classical));
        assert!(!is_garside_power(&pw("s1 s1 s2"), 1, Structure::Classical));
        assert!(is_garside_power(&pw("s1 s0"), 1, Structure::Dual));
        assert!(is_garside_power(&PositiveWord::empty(Mode::Artin), 0, Structure::Classical));
    }

    #[test]
    fn prefix_divisor_detection() {
        assert!(is_prefix_divisor(&pw("s1 s2"), 1, Structure::Classical));
        assert!(!is_prefix_divisor(&pw("s1 s1"), 1, Structure::Classical));
        assert!(is_prefix_divisor(&PositiveWord::empty(Mode::Artin), 0, Structure::Classical));
        assert!(is_prefix_divisor(&pw("s2"), 1, Structure::Dual));
        assert!(!is_prefix_divisor(&pw("s1 s1"), 1, Structure::Dual));
    }

    #[test]
    fn positive_form_satisfies_defining_equation() {
        let cases = ["s2^-1", "s1 s2 s1", "D^-1", "s1 s2^-1 s0 s1^-1", ""];
        for text in cases {
            let word = w(text);
            let (pos, p) = to_positive_form(&word);
            let rebuilt = pos
                .to_word()
                .concat(&Word::parse(&format!("D^-{p}"), Mode::Artin).unwrap());
            assert!(equal(&word, &rebuilt), "{text}: W={pos} p={p}");
        }
        let (pos, p) = to_positive_form(&w("s2^-1"));
        assert_eq!((pos.to_word().to_string(), p), ("s1 s2".to_string(), 1));
        let (pos, p) = to_positive_form(&w("D^-1"));
        assert_eq!(p, 3);
        assert_eq!(pos.len(), 6);
        let (pos, p) = to_positive_form(&w("s1 s2 s1"));
        assert_eq!((pos.gens().len(), p), (3, 0));
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..300 {
            let word = random_word(&mut rng, Mode::Bkl, 10);
            let (pos, p) = to_positive_form(&word);
            let rebuilt = pos
                .to_word()
                .concat(&Word::parse(&format!("D^-{p}"), Mode::Artin).unwrap());
            assert!(equal(&word, &rebuilt));
        }
    }

    #[test]
    fn dual_positive_form_satisfies_defining_equation() {
        let (pos, p) = to_dual_positive_form(&w("s1^-1"));
        assert_eq!((pos.gens(), p), (&[Gen::S0][..], 1));
        let (pos, p) = to_dual_positive_form(&w("s2^-1"));
        assert_eq!((pos.gens(), p), (&[Gen::S1][..], 1));
        let (pos, p) = to_dual_positive_form(&w("s1 s0 s2"));
        assert_eq!((pos.len(), p), (3, 0));
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for _ in 0..300 {
            let word = random_word(&mut rng, Mode::Bkl, 10);
            let (pos, p) = to_dual_positive_form(&word);
            let rebuilt = pos
                .to_word()
                .concat(&Word::parse(&format!("d^-{p}"), Mode::Bkl).unwrap());
            assert!(equal(&word, &rebuilt), "{word}: W={pos} p={p}");
        }
    }

    #[test]
    fn dual_twist_matches_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..200 {
            let word = random_word(&mut rng, Mode::Bkl, 8);
            let twisted = tau_dual(&word);
            let conj = w("d^-1").concat(&word).concat(&w("d"));
            assert!(equal(&twisted, &conj));
        }
    }
}
