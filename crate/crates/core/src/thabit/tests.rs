use super::*;
use crate::oracle::GeneratorSet;

fn gt(n: u32, k: u32) -> GtParams {
    GtParams::new(n, k).unwrap()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn bigs(vs: &[u64]) -> Vec<BigUint> {
    vs.iter().map(|&v| big(v)).collect()
}

/// Parses sums such as `2s1+s2+s5` (or `0`) into a coefficient sequence.
fn parse_combo(expr: &str, len: usize) -> CoeffSeq {
    let mut digits = vec![0u8; len];
    if expr != "0" {
        for term in expr.split('+') {
            let (coef, idx) = term.split_once('s').unwrap();
            let coef: u8 = if coef.is_empty() {
                1
            } else {
                coef.parse().unwrap()
            };
            digits[idx.parse::<usize>().unwrap() - 1] += coef;
        }
    }
    CoeffSeq::new(digits).unwrap()
}

fn parse_listing(listing: &str, len: usize) -> Vec<CoeffSeq> {
    listing
        .split(',')
        .map(|t| parse_combo(t.trim(), len))
        .collect()
}

// Apéry listings as printed for GT(2,2), GT(3,2) and GT(2,3)
const AP_2_2: &str = "0,s1,2s1,s2,s1+s2,2s1+s2,2s2,s3,s1+s3,2s1+s3,s2+s3,s1+s2+s3,2s1+s2+s3,\
                      2s2+s3,2s3,s4,s1+s4";
const AP_3_2: &str = "0,s1,2s1,s2,s1+s2,2s1+s2,2s2,s3,s1+s3,2s1+s3,s2+s3,s1+s2+s3,2s1+s2+s3,\
                      2s2+s3,2s3,s4,s1+s4,2s1+s4,s2+s4,s1+s2+s4,2s1+s2+s4,2s2+s4,s3+s4,s1+s3+s4,\
                      2s1+s3+s4,s2+s3+s4,s1+s2+s3+s4,2s1+s2+s3+s4,2s2+s3+s4,2s3+s4,2s4,s5,s1+s5,\
                      2s1+s5,s2+s5,s1+s2+s5,2s1+s2+s5";
const AP_2_3: &str = "0,s1,2s1,s2,s1+s2,2s1+s2,2s2,s3,s1+s3,2s1+s3,s2+s3,s1+s2+s3,2s1+s2+s3,\
                      2s2+s3,2s3,s4,s1+s4,2s1+s4,s2+s4,s1+s2+s4,2s1+s2+s4,2s2+s4,s3+s4,s1+s3+s4,\
                      2s1+s3+s4,s2+s3+s4,s1+s2+s3+s4,2s1+s2+s3+s4,2s2+s3+s4";

#[test]
fn k_zero_is_rejected() {
    assert_eq!(GtParams::new(3, 0), Err(ThabitError::ZeroK));
}

#[test]
fn generator_examples() {
    assert_eq!(gt(0, 3).generator_at(0), big(2));
    assert_eq!(gt(3, 2).generator_at(5), big(1277));
    assert_eq!(gt(5, 3).generator_at(0), big(281));
    assert_eq!(gt(2, 1).odd_part(), big(1));
    assert_eq!(gt(2, 4).odd_part(), big(15));
}

#[test]
fn delta_and_embedding_dimension() {
    assert_eq!(gt(0, 3).delta(), 1);
    assert_eq!(gt(3, 2).delta(), 2);
    assert_eq!(gt(1, 3).delta(), 2);
    assert_eq!(gt(0, 3).embedding_dimension(), 2);
    assert_eq!(gt(3, 2).embedding_dimension(), 6);
    assert_eq!(gt(7, 3).embedding_dimension(), 11);
    assert_eq!(gt(1, 3).embedding_dimension(), 4);
}

#[test]
fn minimal_generating_sets_match_listings() {
    let cases: [((u32, u32), &[u64]); 7] = [
        ((0, 3), &[2, 11]),
        ((3, 2), &[37, 77, 157, 317, 637, 1277]),
        ((1, 3), &[11, 29, 65, 137]),
        ((2, 3), &[29, 65, 137, 281, 569]),
        ((0, 1), &[2, 5]),
        (
            (5, 3),
            &[281, 569, 1145, 2297, 4601, 9209, 18425, 36857, 73721],
        ),
        (
            (7, 3),
            &[
                1145, 2297, 4601, 9209, 18425, 36857, 73721, 147449, 294905, 589817, 1179641,
            ],
        ),
    ];
    for ((n, k), gens) in cases {
        let expect = GeneratorSet::from_u64(gens).unwrap();
        assert_eq!(gt(n, k).minimal_generating_set(), expect, "GT({n},{k})");
        assert_eq!(
            expect.minimal_generators().unwrap(),
            expect,
            "GT({n},{k}) minimality"
        );
    }
}

#[test]
fn case_tags() {
    assert_eq!(gt(1, 2).case(), CaseTag::Exception12);
    assert_eq!(gt(0, 7).case(), CaseTag::N0);
    assert_eq!(gt(4, 4).case(), CaseTag::KeqN);
    assert_eq!(gt(1, 1).case(), CaseTag::K1);
    assert_eq!(gt(0, 1).case(), CaseTag::N0);
    assert_eq!(gt(5, 3).case(), CaseTag::KltN);
    assert_eq!(gt(2, 3).case(), CaseTag::KgtN);
    assert_eq!(gt(1, 3).case(), CaseTag::KgtN);

    for n in 0..12 {
        for k in 1..12 {
            let expect = if n == 0 {
                CaseTag::N0
            } else if k == 1 {
                CaseTag::K1
            } else if (n, k) == (1, 2) {
                CaseTag::Exception12
            } else if n == k {
                CaseTag::KeqN
            } else if k < n {
                CaseTag::KltN
            } else {
                CaseTag::KgtN
            };
            assert_eq!(gt(n, k).case(), expect);
        }
    }
}

#[test]
fn coeff_value_examples() {
    let c = CoeffSeq::new(vec![0, 1, 1, 1, 0, 0, 0, 1]).unwrap();
    assert_eq!(gt(5, 3).coeff_value(&c).unwrap(), big(81764));
    assert_eq!(gt(5, 3).coeff_value(&CoeffSeq::zeros(8)).unwrap(), big(0));
    let c = CoeffSeq::new(vec![0, 2, 1, 1]).unwrap();
    assert_eq!(gt(2, 3).coeff_value(&c).unwrap(), big(1124));
    assert_eq!(
        gt(2, 3).coeff_value(&CoeffSeq::zeros(3)),
        Err(ThabitError::LengthMismatch {
            expected: 4,
            actual: 3
        })
    );
}

#[test]
fn max_apery_examples() {
    assert_eq!(gt(5, 3).max_apery(), big(81764));
    assert_eq!(gt(2, 2).max_apery(), big(37 + 317));
    assert_eq!(gt(2, 3).max_apery(), big(1124));
    assert_eq!(gt(7, 3).max_apery(), big(1327048));
    assert_eq!(gt(1, 2).max_apery(), big(74));
    let p = gt(3, 2);
    assert_eq!(
        p.max_apery(),
        p.coeff_value(&parse_combo("2s1+s2+s5", 5)).unwrap()
    );
    // n = 0: s_1
    assert_eq!(gt(0, 5).max_apery(), gt(0, 5).generator_at(1));
}

#[test]
fn frobenius_examples() {
    assert_eq!(gt(5, 3).frobenius_closed(), big(81483));
    assert_eq!(gt(7, 3).frobenius_closed(), big(1325903));
    assert_eq!(gt(2, 3).frobenius_closed(), big(1095));
    assert_eq!(gt(1, 2).frobenius_closed(), big(67));
    assert_eq!(gt(0, 3).frobenius_closed(), big(9));
}

#[test]
fn thabit_and_diagonal_formulas() {
    for n in 1..=12u32 {
        let two_n = BigUint::one() << n;
        let expect = big(9) * &two_n * &two_n - big(3) * &two_n - 1u32;
        assert_eq!(gt(n, 1).frobenius_closed(), expect, "k = 1, n = {n}");
    }
    for n in 1..=10u32 {
        let two_n = BigUint::one() << n;
        let expect = (&two_n + 1u32) * &two_n * (&two_n * &two_n + 1u32) - (&two_n - 1u32);
        assert_eq!(gt(n, n).frobenius_closed(), expect, "k = n = {n}");
    }
    // n = k = 1 routes through the Thabit case and agrees with the diagonal
    assert_eq!(gt(1, 1).case(), CaseTag::K1);
    assert_eq!(gt(1, 1).frobenius_closed(), big(29));
}

#[test]
fn subdiagonal_frobenius() {
    // F(GT(n, n-1)) = (2^(n-1) + 1)·2^n·(3 + 2^(n-1) + 2^(2n-1)) - 3(2^(n-1) - 1)
    for n in 3..=14u32 {
        let h = BigUint::one() << (n - 1);
        let expect =
            (&h + 1u32) * (BigUint::one() << n) * (&h + 3u32 + (BigUint::one() << (2 * n - 1)))
                - (&h - 1u32) * 3u32;
        assert_eq!(gt(n, n - 1).frobenius_closed(), expect, "n = {n}");
        assert_eq!(gt(n, n - 1).max_apery_coeffs().t(1), 2);
    }
}

#[test]
fn k2_formula() {
    assert!(matches!(
        frobenius_k2_closed(2),
        Err(ThabitError::DomainError(_))
    ));
    assert!(matches!(
        frobenius_k2_closed(0),
        Err(ThabitError::DomainError(_))
    ));
    assert_eq!(frobenius_k2_closed(3).unwrap(), big(1551));
    assert_eq!(frobenius_k2_closed(4).unwrap(), big(6311));
    for n in 3..=40 {
        assert_eq!(
            frobenius_k2_closed(n).unwrap(),
            gt(n, 2).frobenius_closed(),
            "n = {n}"
        );
        // the maximal element is 2 s_(n-2) + s_(n-1) + s_(n+2)
        let c = gt(n, 2).max_apery_coeffs();
        assert_eq!(c.t(n as usize - 2), 2);
        assert_eq!(c.skew_weight(n as usize - 3), big(0));
    }
    // n = 2 is the diagonal case: s_1 + s_4 - s_0
    assert_eq!(gt(2, 2).frobenius_closed(), big(337));
}

#[test]
fn apery_listings_match() {
    for ((n, k), listing, count) in [
        ((2, 2), AP_2_2, 17),
        ((3, 2), AP_3_2, 37),
        ((2, 3), AP_2_3, 29),
    ] {
        let p = gt(n, k);
        let len = p.top() as usize;
        let mut listed = parse_listing(listing, len);
        assert_eq!(listed.len(), count);
        let mut ours: Vec<CoeffSeq> = p.apery_coeffs().collect();
        listed.sort();
        ours.sort();
        assert_eq!(ours, listed, "GT({n},{k})");
        assert_eq!(p.apery_set_closed().len(), count);
    }
}

#[test]
fn apery_set_literals() {
    assert_eq!(
        gt(1, 2).apery_set_closed(),
        bigs(&[0, 17, 34, 37, 54, 71, 74])
    );
    assert_eq!(gt(0, 3).apery_set_closed(), bigs(&[0, 11]));
    assert_eq!(gt(0, 5).apery_set_closed(), bigs(&[0, 35]));
    // the exceptional coefficient forms reproduce the literal set
    let from_coeffs: Vec<BigUint> = gt(1, 2)
        .apery_entries()
        .into_iter()
        .map(|(v, _)| v)
        .collect();
    assert_eq!(from_coeffs, bigs(&EXCEPTION_12_APERY));
    let from_coeffs: Vec<BigUint> = gt(0, 3)
        .apery_entries()
        .into_iter()
        .map(|(v, _)| v)
        .collect();
    assert_eq!(from_coeffs, bigs(&[0, 11]));
}

#[test]
fn genus_examples() {
    assert_eq!(gt(0, 3).genus_closed().unwrap(), big(5));
    assert_eq!(gt(1, 2).genus_closed().unwrap(), big(38));
    let thabit_1 = GeneratorSet::from_u64(&[5, 11, 23]).unwrap();
    assert_eq!(gt(1, 1).genus_closed().unwrap(), thabit_1.genus().unwrap());
}

#[test]
fn genus_formula_rejects_inconsistent_sets() {
    // right size, wrong sum parity
    let err = genus_from_apery(&bigs(&[0, 12]), &big(2)).unwrap_err();
    assert!(matches!(err, ThabitError::InternalInconsistency(_)));
    let err = genus_from_apery(&bigs(&[0]), &big(2)).unwrap_err();
    assert!(matches!(err, ThabitError::InternalInconsistency(_)));
}

#[test]
fn fast_kltn_shortcut() {
    assert_eq!(gt(5, 3).max_apery_fast_kltn().unwrap(), big(81764));
    assert_eq!(gt(7, 3).max_apery_fast_kltn().unwrap(), big(1327048));
    assert_eq!(
        gt(3, 2).max_apery_fast_kltn().unwrap(),
        gt(3, 2).max_apery()
    );
    for k in 2..=6u32 {
        for n in k + 1..=((1 << k) + k - 3).min(20) {
            assert_eq!(
                gt(n, k).max_apery_fast_kltn().unwrap(),
                gt(n, k).max_apery(),
                "GT({n},{k})"
            );
        }
    }
    assert!(gt(3, 3).max_apery_fast_kltn().is_err());
    assert!(gt(2, 3).max_apery_fast_kltn().is_err());
    // n = 2^k + k - 2 is just past the shortcut's range
    assert!(gt(3, 2).max_apery_fast_kltn().is_ok());
    assert!(gt(4, 2).max_apery_fast_kltn().is_err());
    assert!(gt(17, 4).max_apery_fast_kltn().is_ok());
    assert!(gt(18, 4).max_apery_fast_kltn().is_err());
}

#[test]
fn coeff_lengths_are_checked_by_admits() {
    let p = gt(3, 2);
    assert!(!p.admits(&CoeffSeq::zeros(4)));
    assert!(p.admits(&CoeffSeq::zeros(5)));
    // a 2 in the last position is never admitted outside (1, 2)
    assert!(!p.admits(&parse_combo("2s5", 5)));
    assert!(gt(1, 2).admits(&parse_combo("2s2", 2)));
}
