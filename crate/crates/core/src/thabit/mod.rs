//! Closed forms for generalized Thabit numerical semigroups
//! `GT(n, k) = <(2^k + 1)·2^(n+i) - (2^k - 1) : i ≥ 0>`.
//!
//! With `s_i` the i-th generator and `δ` the case offset below,
//! `{s_0, …, s_(n+δ)}` is the minimal system of generators. Every element of
//! the Apéry set of `s_0` is `Q = Σ t_i s_i` for a coefficient sequence drawn
//! from a case-specific subset of `A(n, δ)`; the largest one gives the
//! Frobenius number and the whole set gives the genus.

pub mod coeff;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::ThabitError;
use crate::oracle::GeneratorSet;
pub use coeff::{a_sequences, canonical_sequences, coeff_solve, CoeffSeq};

/// Apéry set of `GT(1, 2) = <7, 17, 37>`, the one case outside the general
/// coefficient description.
pub const EXCEPTION_12_APERY: [u64; 7] = [0, 17, 34, 37, 54, 71, 74];

/// Coefficient forms of [`EXCEPTION_12_APERY`]; `(0, 2)` is `2·s_2`.
const EXCEPTION_12_COEFFS: [[u8; 2]; 7] = [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [2, 1], [0, 2]];

/// Which closed form applies to `(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `n = 0`
    N0,
    /// `n ≥ 1, k = 1` (the Thabit semigroups)
    K1,
    /// `2 ≤ k < n`
    KltN,
    /// `k = n ≥ 2`
    KeqN,
    /// `n ≥ 1, k > n`, except `(1, 2)`
    KgtN,
    /// `(n, k) = (1, 2)`
    Exception12,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::N0 => "N0",
            CaseTag::K1 => "K1",
            CaseTag::KltN => "KltN",
            CaseTag::KeqN => "KeqN",
            CaseTag::KgtN => "KgtN",
            CaseTag::Exception12 => "Exception12",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The index pair of `GT(n, k)`; `k ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GtParams {
    n: u32,
    k: u32,
}

impl GtParams {
    pub fn new(n: u32, k: u32) -> Result<Self, ThabitError> {
        if k == 0 {
            return Err(ThabitError::ZeroK);
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `s_i = (2^k + 1)·2^(n+i) - (2^k - 1)`.
    pub fn generator_at(&self, i: u32) -> BigUint {
        let two_k = BigUint::one() << self.k;
        ((&two_k + 1u32) << (self.n + i)) - (two_k - 1u32)
    }

    pub fn s0(&self) -> BigUint {
        self.generator_at(0)
    }

    /// `2^k - 1`, the step of the closure and step-down properties.
    pub fn odd_part(&self) -> BigUint {
        (BigUint::one() << self.k) - 1u32
    }

    pub fn delta(&self) -> u32 {
        if self.n == 0 {
            1
        } else if self.k <= self.n {
            self.k
        } else {
            self.k - 1
        }
    }

    /// Index of the last minimal generator, `n + δ`; also the length of
    /// every coefficient sequence.
    pub fn top(&self) -> u32 {
        self.n + self.delta()
    }

    pub fn embedding_dimension(&self) -> u32 {
        self.top() + 1
    }

    /// `s_0, …, s_(n+δ)`.
    pub fn generators(&self) -> Vec<BigUint> {
        (0..=self.top()).map(|i| self.generator_at(i)).collect()
    }

    pub fn minimal_generating_set(&self) -> GeneratorSet {
        GeneratorSet::new(self.generators()).expect("gcd(s_0, s_1) = 1 for every (n, k)")
    }

    pub fn case(&self) -> CaseTag {
        let (n, k) = (self.n, self.k);
        if n == 0 {
            CaseTag::N0
        } else if k == 1 {
            CaseTag::K1
        } else if (n, k) == (1, 2) {
            CaseTag::Exception12
        } else if k == n {
            CaseTag::KeqN
        } else if k < n {
            CaseTag::KltN
        } else {
            CaseTag::KgtN
        }
    }

    /// `Q = Σ t_i s_i`; the sequence must have length `n + δ`.
    pub fn coeff_value(&self, c: &CoeffSeq) -> Result<BigUint, ThabitError> {
        let expected = self.top() as usize;
        if c.len() != expected {
            return Err(ThabitError::LengthMismatch {
                expected,
                actual: c.len(),
            });
        }
        Ok(q_value(&self.generators(), c))
    }

    /// Coefficient sequence of the largest Apéry element.
    pub fn max_apery_coeffs(&self) -> CoeffSeq {
        let (n, k) = (self.n as usize, self.k as usize);
        let len = self.top() as usize;
        let mut digits = vec![0u8; len];
        match self.case() {
            CaseTag::N0 => digits[0] = 1,
            CaseTag::K1 => {
                digits[n - 1] = 1;
                digits[n] = 1;
            }
            CaseTag::KltN => {
                // P_(n-2) = 2^(n-1) - 2^k + 2, then s_(n-1) + s_(n+k)
                let target = (BigUint::one() << (n - 1)) + 2u32 - (BigUint::one() << k);
                let prefix = coeff_solve(&target, n - 2).expect("target is at most 2^(n-1) - 2");
                digits[..n - 2].copy_from_slice(prefix.digits());
                digits[n - 2] = 1;
                digits[n + k - 1] = 1;
            }
            CaseTag::KeqN => {
                digits[0] = 1;
                digits[2 * n - 1] = 1;
            }
            CaseTag::KgtN => {
                // P_(k-1) = 2^n + n, then s_k + … + s_(n+k-1)
                let target = (BigUint::one() << n) + n;
                let prefix = coeff_solve(&target, k - 1).expect("2^n + n ≤ 2^k - 2 when k > n");
                digits[..k - 1].copy_from_slice(prefix.digits());
                digits[k - 1..].fill(1);
            }
            CaseTag::Exception12 => digits.copy_from_slice(&EXCEPTION_12_COEFFS[6]),
        }
        CoeffSeq::new(digits).expect("digits are in {0, 1, 2}")
    }

    pub fn max_apery(&self) -> BigUint {
        q_value(&self.generators(), &self.max_apery_coeffs())
    }

    pub fn frobenius_closed(&self) -> BigUint {
        self.max_apery() - self.s0()
    }

    /// Shortcut for `2 ≤ k < n ≤ 2^k + k - 3`: solve `P_(k-1) = n + 1 - k`
    /// and take `Q_(k-1) + s_k + … + s_(n-1) + s_(n+k)`.
    pub fn max_apery_fast_kltn(&self) -> Result<BigUint, ThabitError> {
        let (n, k) = (self.n as usize, self.k as usize);
        if !(2 <= k && k < n) {
            return Err(ThabitError::DomainError(format!(
                "shortcut needs 2 ≤ k < n, got (n, k) = ({n}, {k})"
            )));
        }
        // n ≤ 2^k + k - 3, written to avoid shifting by huge k
        if k < 64 && (n as u128) + 3 > (1u128 << k) + k as u128 {
            return Err(ThabitError::DomainError(format!(
                "shortcut needs n ≤ 2^k + k - 3, got (n, k) = ({n}, {k})"
            )));
        }
        let prefix = coeff_solve(&BigUint::from(n + 1 - k), k - 1)
            .expect("n + 1 - k ≤ 2^k - 2 under the precondition");
        let gens = self.generators();
        let mut total = q_value(&gens, &prefix);
        for g in &gens[k..n] {
            total += g;
        }
        total += &gens[n + k];
        Ok(total)
    }

    /// Whether `c` (of length `n + δ`) is one of the coefficient sequences
    /// enumerating the Apéry set.
    pub fn admits(&self, c: &CoeffSeq) -> bool {
        if c.len() != self.top() as usize {
            return false;
        }
        let (n, k) = (self.n as usize, self.k as usize);
        match self.case() {
            CaseTag::Exception12 => EXCEPTION_12_COEFFS.iter().any(|e| e[..] == *c.digits()),
            _ if !c.in_a_set() => false,
            CaseTag::N0 => true,
            CaseTag::K1 => {
                // t_n = 2 forces t_(n+1) = 0; t_n = t_(n+1) = 1 forces zeros below
                if c.t(n + 1) == 1 {
                    match c.t(n) {
                        2 => false,
                        1 => c.digits()[..n - 1].iter().all(|&d| d == 0),
                        _ => true,
                    }
                } else {
                    true
                }
            }
            CaseTag::KltN => {
                if c.t(n + k) == 0 {
                    return true;
                }
                // t_n .. t_(n+k-1) vanish, t_(n-1) ∈ {0, 1}, and with
                // t_(n-1) = 1 the prefix stays at most 2^(n-1) - 2^k + 2
                if c.digits()[n - 1..n + k - 1].iter().any(|&d| d != 0) {
                    return false;
                }
                match c.t(n - 1) {
                    0 => true,
                    1 => {
                        let bound = (BigUint::one() << (n - 1)) + 2u32 - (BigUint::one() << k);
                        c.skew_weight(n - 2) <= bound
                    }
                    _ => false,
                }
            }
            CaseTag::KeqN => {
                c.t(2 * n) == 0 || (c.t(1) <= 1 && c.digits()[1..2 * n - 1].iter().all(|&d| d == 0))
            }
            CaseTag::KgtN => {
                let block = &c.digits()[k - 1..];
                if block.iter().all(|&d| d == 1) {
                    return c.skew_weight(k - 1) <= (BigUint::one() << n) + n;
                }
                // a 2 inside the block may not be followed only by ones
                match block.iter().position(|&d| d == 2) {
                    Some(j) => !block[j + 1..].iter().all(|&d| d == 1),
                    None => true,
                }
            }
        }
    }

    /// Streams the coefficient sequences of the Apéry set. Yields exactly
    /// `s_0` sequences; for large `(n, k)` this is a lot.
    pub fn apery_coeffs(&self) -> Box<dyn Iterator<Item = CoeffSeq>> {
        if self.case() == CaseTag::Exception12 {
            return Box::new(
                EXCEPTION_12_COEFFS
                    .iter()
                    .map(|d| CoeffSeq::new(d.to_vec()).expect("literal digits")),
            );
        }
        let params = *self;
        Box::new(a_sequences(self.top() as usize).filter(move |c| params.admits(c)))
    }

    /// Apéry set elements with their coefficient sequences, by value.
    pub fn apery_entries(&self) -> Vec<(BigUint, CoeffSeq)> {
        let gens = self.generators();
        let mut out: Vec<(BigUint, CoeffSeq)> = self
            .apery_coeffs()
            .map(|c| (q_value(&gens, &c), c))
            .collect();
        out.sort();
        out
    }

    /// The Apéry set of `s_0`, ascending.
    pub fn apery_set_closed(&self) -> Vec<BigUint> {
        match self.case() {
            CaseTag::N0 => vec![BigUint::zero(), self.generator_at(1)],
            CaseTag::Exception12 => EXCEPTION_12_APERY
                .iter()
                .map(|&v| BigUint::from(v))
                .collect(),
            _ => self.apery_entries().into_iter().map(|(v, _)| v).collect(),
        }
    }

    /// Genus from the closed Apéry set: `sum / s_0 - (s_0 - 1) / 2`.
    pub fn genus_closed(&self) -> Result<BigUint, ThabitError> {
        genus_from_apery(&self.apery_set_closed(), &self.s0())
    }
}

impl fmt::Display for GtParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GT({},{})", self.n, self.k)
    }
}

/// `2 · Σ w = 2 · x · g + x (x - 1)`, solved for `g` with exactness checked.
pub fn genus_from_apery(apery: &[BigUint], x: &BigUint) -> Result<BigUint, ThabitError> {
    if BigUint::from(apery.len()) != *x {
        return Err(ThabitError::InternalInconsistency(format!(
            "Apéry set has {} elements, modulus is {x}",
            apery.len()
        )));
    }
    let twice: BigUint = apery.iter().sum::<BigUint>() << 1u32;
    let offset = x * (x - 1u32);
    if twice < offset {
        return Err(ThabitError::InternalInconsistency(
            "Apéry sum below x(x - 1) / 2".into(),
        ));
    }
    let (g, rem) = (twice - offset).div_rem(&(x << 1u32));
    if !rem.is_zero() {
        return Err(ThabitError::InternalInconsistency(format!(
            "genus formula is not integral for modulus {x}"
        )));
    }
    Ok(g)
}

/// Frobenius number of `GT(n, 2)` for `n ≥ 3`:
/// `2 s_(n-2) + s_(n-1) + s_(n+2) - s_0 = 100·2^(2n-2) - 5·2^n - 9`.
pub fn frobenius_k2_closed(n: u32) -> Result<BigUint, ThabitError> {
    if n < 3 {
        return Err(ThabitError::DomainError(format!(
            "k = 2 formula needs n ≥ 3 (n = 2 is the k = n case), got n = {n}"
        )));
    }
    Ok((BigUint::from(100u32) << (2 * n - 2)) - (BigUint::from(5u32) << n) - 9u32)
}

/// `Σ t_i s_i` over the digits of `c`, which start at `s_1`.
fn q_value(gens: &[BigUint], c: &CoeffSeq) -> BigUint {
    let mut total = BigUint::zero();
    for (g, &d) in gens[1..].iter().zip(c.digits()) {
        match d {
            0 => {}
            1 => total += g,
            _ => total += g * d,
        }
    }
    total
}

#[cfg(test)]
mod tests;
