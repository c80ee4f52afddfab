//! Coefficient sequences `(t_1, …, t_L)` over `{0, 1, 2}`.
//!
//! A sequence is *canonical* when a 2 may only appear with zeros before it.
//! With weights `2^i - 1` this is the skew-binary numeral system: every
//! target in `0 ..= 2^(L+1) - 2` has exactly one canonical sequence of
//! length `L`, which [`coeff_solve`] finds greedily from the top digit.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::ThabitError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoeffSeq(Vec<u8>);

impl CoeffSeq {
    pub fn new(digits: Vec<u8>) -> Result<Self, ThabitError> {
        if let Some(&digit) = digits.iter().find(|&&d| d > 2) {
            return Err(ThabitError::InvalidDigit { digit });
        }
        Ok(Self(digits))
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `t_i` with 1-based indexing.
    pub fn t(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    /// `P_upto = Σ_{i ≤ upto} t_i (2^i - 1)`.
    pub fn skew_weight(&self, upto: usize) -> BigUint {
        self.0[..upto]
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(idx, &d)| skew_digit_weight(idx + 1) * d)
            .sum()
    }

    /// No 2 has a nonzero digit before it.
    pub fn is_canonical(&self) -> bool {
        match self.0.iter().position(|&d| d == 2) {
            Some(j) => self.0[..j].iter().all(|&d| d == 0) && !self.0[j + 1..].contains(&2),
            None => true,
        }
    }

    /// Membership in `A(n, δ)`: canonical with a last digit of 0 or 1.
    pub fn in_a_set(&self) -> bool {
        self.is_canonical() && self.0.last().is_none_or(|&d| d <= 1)
    }
}

impl fmt::Display for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// `2^i - 1`.
pub fn skew_digit_weight(i: usize) -> BigUint {
    (BigUint::one() << i) - 1u32
}

/// The canonical sequence of length `length` with `P = target`, or `None`
/// when `target > 2^(length+1) - 2`.
pub fn coeff_solve(target: &BigUint, length: usize) -> Option<CoeffSeq> {
    if *target > skew_digit_weight(length) * 2u32 {
        return None;
    }
    let mut digits = vec![0u8; length];
    let mut rest = target.clone();
    for i in (1..=length).rev() {
        if rest.is_zero() {
            break;
        }
        let w = skew_digit_weight(i);
        if rest >= w {
            if rest == &w * 2u32 {
                digits[i - 1] = 2;
                rest.set_zero();
            } else {
                digits[i - 1] = 1;
                rest -= w;
            }
        }
    }
    // the remainder always fits the lower digits, so it is exhausted here
    assert!(rest.is_zero(), "skew-binary greedy left a remainder");
    Some(CoeffSeq(digits))
}

/// All canonical sequences of `length` digits (`2^(length+1) - 1` of them).
pub fn canonical_sequences(length: usize) -> impl Iterator<Item = CoeffSeq> {
    sequences(length, true)
}

/// All of `A(n, δ)` for `length = n + δ`: canonical, last digit at most 1.
pub fn a_sequences(length: usize) -> impl Iterator<Item = CoeffSeq> {
    sequences(length, false)
}

fn sequences(length: usize, two_at_end: bool) -> impl Iterator<Item = CoeffSeq> {
    assert!(
        length < 63,
        "sequence enumeration of length {length} is infeasible"
    );
    let binary = (0u64..1 << length).map(move |mask| CoeffSeq(bits(mask, length)));
    let last_two = if two_at_end {
        length
    } else {
        length.saturating_sub(1)
    };
    // a 2 at position j, zeros before it, free bits after it
    let with_two = (1..=last_two).flat_map(move |j| {
        (0u64..1 << (length - j)).map(move |mask| {
            let mut digits = vec![0u8; j];
            digits[j - 1] = 2;
            digits.extend(bits(mask, length - j));
            CoeffSeq(digits)
        })
    });
    binary.chain(with_two)
}

fn bits(mask: u64, len: usize) -> Vec<u8> {
    (0..len).map(|i| ((mask >> i) & 1) as u8).collect()
}
