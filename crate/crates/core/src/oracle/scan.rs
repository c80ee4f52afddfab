//! Direct representability scans.
//!
//! These walk the integers one by one with a subset-sum sieve and never look
//! at residue tables, so they serve as an independent check of the Apéry
//! route on small inputs.

/// `out[v]` is true iff `v` is a nonnegative integer combination of `gens`.
pub fn representable_up_to(gens: &[u64], limit: usize) -> Vec<bool> {
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for v in 1..=limit {
        reach[v] = gens
            .iter()
            .any(|&g| g as usize <= v && g > 0 && reach[v - g as usize]);
    }
    reach
}

/// Gap structure found by scanning until `min(gens)` consecutive integers are
/// representable; every later integer is then representable too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    /// Largest gap, `-1` if there is none.
    pub frobenius: i64,
    pub genus: u64,
}

/// Scans for gaps. Panics if `gens` has no positive entry or gcd > 1, since
/// the scan would never terminate.
pub fn scan_gaps(gens: &[u64]) -> ScanResult {
    let smallest = gens
        .iter()
        .copied()
        .filter(|&g| g > 0)
        .min()
        .expect("scan needs a positive generator") as usize;
    assert!(
        gens.iter().fold(0u64, |a, &g| gcd(a, g)) == 1,
        "scan needs gcd 1"
    );

    let mut reach: Vec<bool> = vec![true];
    let mut run = 1usize;
    let mut frobenius = -1i64;
    let mut genus = 0u64;
    let mut v = 0usize;
    while run < smallest {
        v += 1;
        let hit = gens
            .iter()
            .any(|&g| g > 0 && g as usize <= v && reach[v - g as usize]);
        reach.push(hit);
        if hit {
            run += 1;
        } else {
            run = 0;
            frobenius = v as i64;
            genus += 1;
        }
    }
    ScanResult { frobenius, genus }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
