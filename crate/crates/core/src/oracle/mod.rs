//! Formula-free numerical semigroup computations.
//!
//! A [`GeneratorSet`] is a normalized list of positive integers with gcd 1.
//! Everything else is derived from its Apéry table: the least element of the
//! semigroup in each residue class modulo a chosen element `x`. From that
//! table the Frobenius number is `max(Ap) - x`, the genus is
//! `sum(Ap) / x - (x - 1) / 2`, and `v` is a member iff `v >= w[v mod x]`.

mod residue;
pub mod scan;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::OracleError;
use residue::{dijkstra, edges_big, edges_u128, fits_u128, residue_of, round_robin_add};

/// Largest modulus accepted for a residue table.
pub const MAX_MODULUS: usize = u32::MAX as usize;

/// Sorted, deduplicated positive generators with gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<BigUint>,
}

impl GeneratorSet {
    /// Normalizes `gens` (sorts, removes duplicates and zeros) and checks the
    /// gcd condition.
    pub fn new<I>(gens: I) -> Result<Self, OracleError>
    where
        I: IntoIterator<Item = BigUint>,
    {
        let mut gens: Vec<BigUint> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(OracleError::EmptyInput);
        }
        gens.sort();
        gens.dedup();
        let gcd = gens.iter().fold(BigUint::zero(), |acc, g| acc.gcd(g));
        if !gcd.is_one() {
            return Err(OracleError::GcdNotOne { gcd });
        }
        Ok(Self { gens })
    }

    pub fn from_u64(gens: &[u64]) -> Result<Self, OracleError> {
        Self::new(gens.iter().map(|&g| BigUint::from(g)))
    }

    pub fn gens(&self) -> &[BigUint] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn smallest(&self) -> &BigUint {
        &self.gens[0]
    }

    pub fn largest(&self) -> &BigUint {
        self.gens.last().expect("generator sets are nonempty")
    }

    /// Apéry table of `x`, which must be a positive member.
    pub fn apery_set(&self, x: &BigUint) -> Result<AperyTable, OracleError> {
        if x.is_zero() {
            return Err(OracleError::ZeroModulus);
        }
        if x != self.smallest() && !self.apery_default()?.is_member(x) {
            return Err(OracleError::NotMember { value: x.clone() });
        }
        self.table_for(x)
    }

    /// Apéry table with respect to the smallest generator.
    pub fn apery_default(&self) -> Result<AperyTable, OracleError> {
        self.table_for(self.smallest())
    }

    fn table_for(&self, x: &BigUint) -> Result<AperyTable, OracleError> {
        let modulus = modulus_usize(x)?;
        let w: Vec<BigUint> = if fits_u128(modulus, self.largest().max(x)) {
            dijkstra(modulus, &edges_u128(&self.gens, modulus))
                .into_iter()
                .map(|d| BigUint::from(d.expect("gcd 1 reaches every residue")))
                .collect()
        } else {
            dijkstra(modulus, &edges_big(&self.gens, modulus))
                .into_iter()
                .map(|d| d.expect("gcd 1 reaches every residue"))
                .collect()
        };
        Ok(AperyTable {
            modulus: x.clone(),
            w,
        })
    }

    /// Frobenius number; `-1` when the semigroup is all of ℕ.
    pub fn frobenius(&self) -> Result<BigInt, OracleError> {
        Ok(self.apery_default()?.frobenius())
    }

    pub fn genus(&self) -> Result<BigUint, OracleError> {
        Ok(self.apery_default()?.genus())
    }

    pub fn is_member(&self, value: &BigUint) -> Result<bool, OracleError> {
        Ok(self.apery_default()?.is_member(value))
    }

    /// The unique minimal system of generators.
    ///
    /// A generator can only be written with strictly smaller generators, so
    /// walking them in ascending order and keeping those outside the monoid
    /// of the kept ones gives the minimal system. The monoid is tracked as a
    /// residue table modulo the smallest generator, updated round-robin.
    pub fn minimal_generators(&self) -> Result<GeneratorSet, OracleError> {
        let modulus = modulus_usize(self.smallest())?;
        let kept = if fits_u128(modulus, self.largest()) {
            minimal_with(&self.gens, modulus, edges_u128(&self.gens, modulus))
        } else {
            minimal_with(&self.gens, modulus, edges_big(&self.gens, modulus))
        };
        Ok(GeneratorSet { gens: kept })
    }
}

fn minimal_with<W>(gens: &[BigUint], modulus: usize, edges: Vec<residue::Edge<W>>) -> Vec<BigUint>
where
    W: residue::Weight + Into<BigUint>,
{
    let mut table: Vec<Option<W>> = vec![None; modulus];
    table[0] = Some(W::zero());
    let mut kept = vec![gens[0].clone()];
    for (g, edge) in gens.iter().zip(edges).skip(1) {
        let reached = table[edge.residue]
            .clone()
            .is_some_and(|least| least.into() <= *g);
        if !reached {
            kept.push(g.clone());
            round_robin_add(&mut table, &edge);
        }
    }
    kept
}

fn modulus_usize(x: &BigUint) -> Result<usize, OracleError> {
    match x.to_usize() {
        Some(0) => Err(OracleError::ZeroModulus),
        Some(m) if m <= MAX_MODULUS => Ok(m),
        _ => Err(OracleError::ModulusTooLarge { modulus: x.clone() }),
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Least semigroup element in each residue class modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyTable {
    modulus: BigUint,
    w: Vec<BigUint>,
}

impl AperyTable {
    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    /// Entries indexed by residue.
    pub fn entries(&self) -> &[BigUint] {
        &self.w
    }

    pub fn get(&self, residue: usize) -> &BigUint {
        &self.w[residue]
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    /// The Apéry set in ascending order.
    pub fn sorted_values(&self) -> Vec<BigUint> {
        let mut v = self.w.clone();
        v.sort();
        v
    }

    pub fn max(&self) -> &BigUint {
        self.w.iter().max().expect("tables have at least residue 0")
    }

    /// Semigroup membership: `value ≥ w[value mod x]`.
    pub fn is_member(&self, value: &BigUint) -> bool {
        *value >= self.w[residue_of(value, self.w.len())]
    }

    /// Whether `value` is itself an element of the Apéry set.
    pub fn contains(&self, value: &BigUint) -> bool {
        *value == self.w[residue_of(value, self.w.len())]
    }

    pub fn frobenius(&self) -> BigInt {
        BigInt::from(self.max().clone()) - BigInt::from(self.modulus.clone())
    }

    /// Genus from the Apéry sum. The identity `2·sum = 2·x·g + x(x-1)` is
    /// exact for a genuine Apéry table.
    pub fn genus(&self) -> BigUint {
        let x = &self.modulus;
        let sum: BigUint = self.w.iter().sum();
        let twice = sum << 1u32;
        let offset = x * (x - 1u32);
        let (g, rem) = (twice - offset).div_rem(&(x << 1u32));
        debug_assert!(rem.is_zero(), "Apéry sum not divisible by the modulus");
        g
    }
}
