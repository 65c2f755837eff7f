//! Recognition of bands and validation of quasipositive factorizations.
//!
//! A band is a conjugate of `s1`. A braid with exponent sum 1 is a band
//! exactly when it is quasipositive: any quasipositive factorization of it
//! has a single factor, and that factor is the braid itself. Band
//! recognition therefore routes through the quasipositivity decision rather
//! than through conjugacy machinery.

use crate::factorsearch::is_quasipositive;
use crate::garside::{equal, Braid};
use crate::word::Word;

/// True iff `x` is conjugate to `s1` in B3.
pub fn is_band(x: &Braid) -> bool {
    x.exponent_sum() == 1 && is_quasipositive(&x.to_word())
}

pub fn is_band_word(w: &Word) -> bool {
    is_band(&Braid::from_word(w))
}

/// True iff every factor is a band and the ordered product equals `x` in B3.
pub fn validate_factorization(x: &Word, factors: &[Word]) -> bool {
    let product = factors
        .iter()
        .fold(Word::empty(x.mode()), |acc, f| acc.concat(f));
    factors.iter().all(is_band_word) && equal(x, &product)
}
