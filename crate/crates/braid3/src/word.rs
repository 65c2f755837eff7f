//! Words over the two generating alphabets of B3.
//!
//! The Artin alphabet is `{s1, s2}`; the band-generator (BKL) alphabet adds
//! `s0 = s1^-1 s2 s1`. A [`Word`] is an immutable sequence of signed letters
//! together with the [`Mode`] recording which alphabet it lives in. The empty
//! word denotes the identity braid.
//!
//! Token grammar (whitespace separated): `token := atom ('^' integer)?` with
//! `atom := "s1" | "s2" | "s0" | "D" | "d"`. `D` expands to `s1 s2 s1` (the
//! half-twist) and `d` to `s2 s1`; a negative exponent expands to copies of
//! the inverted atom.

use crate::{Error, Result};
use std::fmt;

/// A generator of B3. `S0` is the extra band generator, valid only in BKL mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    S1,
    S2,
    S0,
}

impl Gen {
    pub fn token(self) -> &'static str {
        match self {
            Gen::S1 => "s1",
            Gen::S2 => "s2",
            Gen::S0 => "s0",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A signed letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub sign: Sign,
}

impl Letter {
    pub fn positive(gen: Gen) -> Letter {
        Letter { gen, sign: Sign::Pos }
    }

    pub fn negative(gen: Gen) -> Letter {
        Letter { gen, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, sign: self.sign.flip() }
    }

    /// Contribution to the exponent sum homomorphism (every generator counts 1).
    pub fn exponent(self) -> i64 {
        match self.sign {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Artin,
    Bkl,
}

impl Mode {
    pub fn permits(self, gen: Gen) -> bool {
        gen != Gen::S0 || self == Mode::Bkl
    }

    /// Smallest mode containing both alphabets.
    pub fn join(self, other: Mode) -> Mode {
        if self == Mode::Bkl || other == Mode::Bkl {
            Mode::Bkl
        } else {
            Mode::Artin
        }
    }
}

/// An immutable word over one of the two alphabets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    mode: Mode,
}

impl Word {
    pub fn new(mode: Mode, letters: Vec<Letter>) -> Result<Word> {
        if let Some(l) = letters.iter().find(|l| !mode.permits(l.gen)) {
            return Err(Error::ModeViolation(format!(
                "letter {} is not valid in Artin mode",
                l.gen.token()
            )));
        }
        Ok(Word { letters, mode })
    }

    pub fn empty(mode: Mode) -> Word {
        Word { letters: Vec::new(), mode }
    }

    /// Parses the token grammar, inferring BKL mode when `s0` occurs.
    pub fn parse_auto(text: &str) -> Result<Word> {
        let mode = if text.split_whitespace().any(|t| t.starts_with("s0")) {
            Mode::Bkl
        } else {
            Mode::Artin
        };
        Word::parse(text, mode)
    }

    /// Parses the token grammar in a fixed mode.
    pub fn parse(text: &str, mode: Mode) -> Result<Word> {
        let mut letters = Vec::new();
        for (pos, tok) in text.split_whitespace().enumerate() {
            let token = pos + 1;
            let (atom, exp) = match tok.split_once('^') {
                None => (tok, 1i64),
                Some((a, e)) => {
                    let exp = e.parse::<i64>().map_err(|_| Error::Syntax {
                        token,
                        message: format!("bad exponent {e:?} in {tok:?}"),
                    })?;
                    (a, exp)
                }
            };
            let base: &[Letter] = match atom {
                "s1" => &[Letter::positive(Gen::S1)],
                "s2" => &[Letter::positive(Gen::S2)],
                "s0" => &[Letter::positive(Gen::S0)],
                "D" => &[
                    Letter::positive(Gen::S1),
                    Letter::positive(Gen::S2),
                    Letter::positive(Gen::S1),
                ],
                "d" => &[Letter::positive(Gen::S2), Letter::positive(Gen::S1)],
                _ => {
                    return Err(Error::Syntax {
                        token,
                        message: format!("unknown atom {tok:?}"),
                    })
                }
            };
            if atom == "s0" && mode == Mode::Artin {
                return Err(Error::ModeViolation(format!(
                    "token {token}: s0 is not valid in Artin mode"
                )));
            }
            if exp.unsigned_abs() > 100_000 {
                return Err(Error::Syntax {
                    token,
                    message: format!("exponent {exp} too large"),
                });
            }
            if exp >= 0 {
                for _ in 0..exp {
                    letters.extend_from_slice(base);
                }
            } else {
                let inv: Vec<Letter> = base.iter().rev().map(|l| l.inverse()).collect();
                for _ in 0..exp.unsigned_abs() {
                    letters.extend_from_slice(&inv);
                }
            }
        }
        Ok(Word { letters, mode })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The homomorphism sending every generator to 1.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent()).sum()
    }

    /// Reversed sequence with all signs flipped.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            mode: self.mode,
        }
    }

    /// Cancels adjacent letter-inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out, mode: self.mode }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, mode: self.mode.join(other.mode) }
    }

    pub fn repeated(&self, n: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters, mode: self.mode }
    }
}

impl fmt::Display for Word {
    /// Canonical token form: runs of an identical letter collapse to `atom^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match (l.sign, run) {
                (Sign::Pos, 1) => write!(f, "{}", l.gen.token())?,
                (Sign::Pos, k) => write!(f, "{}^{}", l.gen.token(), k)?,
                (Sign::Neg, k) => write!(f, "{}^-{}", l.gen.token(), k)?,
            }
            i += run;
        }
        Ok(())
    }
}

/// Letterwise conjugation by the dual Garside element `d = s2 s1`:
/// the cycle s1 -> s2 -> s0 -> s1, signs preserved. Applying it three times
/// is the identity map because `d^3` is central.
pub fn tau_dual(w: &Word) -> Word {
    let letters = w
        .letters
        .iter()
        .map(|l| Letter { gen: tau_dual_gen(l.gen), sign: l.sign })
        .collect();
    Word { letters, mode: Mode::Bkl }
}

pub(crate) fn tau_dual_gen(g: Gen) -> Gen {
    match g {
        Gen::S1 => Gen::S2,
        Gen::S2 => Gen::S0,
        Gen::S0 => Gen::S1,
    }
}

pub(crate) fn tau_dual_gen_inv(g: Gen) -> Gen {
    match g {
        Gen::S2 => Gen::S1,
        Gen::S0 => Gen::S2,
        Gen::S1 => Gen::S0,
    }
}

/// Letterwise conjugation by the half-twist `D = s1 s2 s1`: swaps s1 and s2.
/// Restricted to the Artin alphabet, since `D`-conjugation maps s0 outside the
/// BKL alphabet; conjugating general braids is done on canonical forms.
pub fn tau_classical(w: &Word) -> Result<Word> {
    let mut letters = Vec::with_capacity(w.letters.len());
    for l in &w.letters {
        let gen = match l.gen {
            Gen::S1 => Gen::S2,
            Gen::S2 => Gen::S1,
            Gen::S0 => {
                return Err(Error::ModeViolation(
                    "half-twist conjugation is only defined on the Artin alphabet".into(),
                ))
            }
        };
        letters.push(Letter { gen, sign: l.sign });
    }
    Ok(Word { letters, mode: Mode::Artin })
}

pub(crate) fn swap_artin(g: Gen) -> Gen {
    match g {
        Gen::S1 => Gen::S2,
        Gen::S2 => Gen::S1,
        Gen::S0 => unreachable!("swap_artin on s0"),
    }
}

/// Replaces every `s0^±1` by `(s1^-1 s2 s1)^±1`; the result is the same braid
/// in Artin mode.
pub fn bkl_to_artin(w: &Word) -> Word {
    let mut letters = Vec::with_capacity(w.letters.len());
    for l in &w.letters {
        match (l.gen, l.sign) {
            (Gen::S0, Sign::Pos) => letters.extend_from_slice(&[
                Letter::negative(Gen::S1),
                Letter::positive(Gen::S2),
                Letter::positive(Gen::S1),
            ]),
            (Gen::S0, Sign::Neg) => letters.extend_from_slice(&[
                Letter::negative(Gen::S1),
                Letter::negative(Gen::S2),
                Letter::positive(Gen::S1),
            ]),
            _ => letters.push(*l),
        }
    }
    Word { letters, mode: Mode::Artin }
}

/// A word all of whose letters are positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveWord {
    gens: Vec<Gen>,
    mode: Mode,
}

impl PositiveWord {
    pub fn new(mode: Mode, gens: Vec<Gen>) -> Result<PositiveWord> {
        if let Some(g) = gens.iter().find(|g| !mode.permits(**g)) {
            return Err(Error::ModeViolation(format!(
                "letter {} is not valid in Artin mode",
                g.token()
            )));
        }
        Ok(PositiveWord { gens, mode })
    }

    pub fn empty(mode: Mode) -> PositiveWord {
        PositiveWord { gens: Vec::new(), mode }
    }

    pub fn from_word(w: &Word) -> Result<PositiveWord> {
        let mut gens = Vec::with_capacity(w.len());
        for l in w.letters() {
            if l.sign == Sign::Neg {
                return Err(Error::Precondition(format!(
                    "word {w} contains a negative letter"
                )));
            }
            gens.push(l.gen);
        }
        Ok(PositiveWord { gens, mode: w.mode() })
    }

    pub fn parse(text: &str, mode: Mode) -> Result<PositiveWord> {
        PositiveWord::from_word(&Word::parse(text, mode)?)
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Letter at a 1-based position.
    pub fn letter(&self, i: usize) -> Option<Gen> {
        if i >= 1 {
            self.gens.get(i - 1).copied()
        } else {
            None
        }
    }

    pub fn to_word(&self) -> Word {
        Word {
            letters: self.gens.iter().map(|&g| Letter::positive(g)).collect(),
            mode: self.mode,
        }
    }
}

impl fmt::Display for PositiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}
