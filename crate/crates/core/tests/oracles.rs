//! Frozen values from the operator and pairing oracles.

use cuspalg::classify::{classify_n2, classify_n3, Coupling, N2Case};
use cuspalg::cusp::{build_sigma, h_sigma, represent, t_matrix};
use cuspalg::dual::{closed_pairing, monomial_letters, unit_preserved, PairingOracle};
use cuspalg::exactalg::{LaurentPoly, Scalar};
use cuspalg::star::dictionary_star;

fn t(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(Scalar::from_int(c), e)
}

#[test]
fn generators_on_low_monomials() {
    let h = h_sigma();
    let table: [(&str, [LaurentPoly; 5]); 4] = [
        ("K", [t(1, 2), t(-1, 3), t(1, 4), t(-1, 5), t(1, 6)]),
        ("D", [LaurentPoly::zero(), t(1, 2), LaurentPoly::zero(), t(1, 4), LaurentPoly::zero()]),
        ("Y", [t(2, 0), LaurentPoly::zero(), t(4, 2), t(2, 3), t(6, 4)]),
        ("C", [LaurentPoly::zero(), t(2, 0), LaurentPoly::zero(), t(2, 2), LaurentPoly::zero()]),
    ];
    for (g, images) in table {
        let op = represent(&h.gen(g), 12);
        for (e, want) in (2..=6).zip(images) {
            assert_eq!(op.apply(&LaurentPoly::t_pow(e)), want, "{g} on t^{e}");
        }
        let unit = if g == "K" { LaurentPoly::one() } else { LaurentPoly::zero() };
        assert_eq!(op.apply(&LaurentPoly::one()), unit, "{g} on 1");
    }
}

#[test]
fn sigma_reproduces_the_entries_of_t() {
    let sigma = build_sigma(12).unwrap();
    let tm = t_matrix();
    // σ_ij(t²)·… is determined by T²; on t³ it is T³.
    let t3 = tm.mul(&tm).mul(&tm);
    for i in 1..=3 {
        for j in 1..=3 {
            assert_eq!(sigma.entry(i, j).apply(&LaurentPoly::t_pow(3)), *t3.get(i - 1, j - 1));
        }
    }
}

#[test]
fn pairing_values() {
    let oracle = PairingOracle::new();
    let h = h_sigma();
    let pair = |x: &str, a, b, c| oracle.pair(&h.parse(x).unwrap(), &monomial_letters(a, b, c));
    assert_eq!(pair("Y", 0, 2, 0), Scalar::from_int(6));
    assert_eq!(pair("YY", 0, 4, 0), Scalar::from_int(72));
    assert_eq!(pair("K", 0, 0, 1), Scalar::from_int(-1));
    assert_eq!(pair("D", 0, 1, 0), Scalar::from_int(1));
    assert_eq!(pair("C", 1, 0, 0), Scalar::from_int(2));
    assert_eq!(pair("DK", 0, 1, 1), Scalar::from_int(-1));
}

#[test]
fn pairing_cells_missed_by_the_closed_formula() {
    let oracle = PairingOracle::new();
    let h = h_sigma();
    for (l, value) in [(2u32, 12), (3, 216), (4, 5184)] {
        let y = h.parse(&"Y".repeat(l as usize)).unwrap();
        assert_eq!(oracle.pair(&y, &monomial_letters(1, 2 * l - 3, 0)), Scalar::from_int(value));
        assert_eq!(closed_pairing([0, 0, 0, l], [1, 2 * l - 3, 0]), Scalar::from_int(0));
    }
}

#[test]
fn star_on_generators() {
    let h = h_sigma();
    let star = dictionary_star(&h);
    for (g, image) in [("C", "-C"), ("D", "-D"), ("K", "K"), ("Y", "-Y")] {
        assert_eq!(star.apply(&h, &h.gen(g)), h.parse(image).unwrap(), "{g}*");
    }
}

#[test]
fn classification_of_the_cusp_matrix() {
    let tm = t_matrix();
    let (one, m1) = (Scalar::from_int(1), Scalar::from_int(-1));
    let d = classify_n3(&one, &m1, &m1, tm.get(0, 1), tm.get(1, 2), tm.get(0, 2)).unwrap();
    assert!(d.accepted, "{:?}", d.failures);
    match d.coupling {
        Coupling::Regular { a, b } => {
            assert_eq!(a, LaurentPoly::constant(Scalar::ratio(-1, 3)));
            assert_eq!(b, LaurentPoly::monomial(Scalar::ratio(1, 2), 3));
        }
        other => panic!("expected the regular case, got {other:?}"),
    }
}

#[test]
fn size_two_cases() {
    let one = Scalar::from_int(1);
    let decide = |beta: i64, z: LaurentPoly| classify_n2(&one, &Scalar::from_int(beta), &z).unwrap();
    assert_eq!(decide(2, t(1, 1)).case, N2Case::Generic);
    assert!(decide(2, t(1, 1)).accepted);
    assert!(!decide(2, t(1, 0)).accepted);
    assert_eq!(decide(-1, t(1, 0)).case, N2Case::MinusOne);
    assert!(decide(-1, t(1, 0)).accepted);
    assert!(decide(-1, t(1, -2)).accepted);
    assert!(!decide(-1, t(1, -1)).accepted);
}

#[test]
fn embedding_preserves_the_unit() {
    for lambda in [Scalar::from_int(0), Scalar::from_int(1), Scalar::i()] {
        assert!(unit_preserved(&lambda), "λ = {lambda}");
    }
}
