use cuspalg::classify::{classify_n2, classify_n3, extend_to_ratfunc, n2_matrix, n3_matrix, MoebiusParams, TriangularT};
use cuspalg::cusp::{h_sigma, induced_operators, TruncatedOperator};
use cuspalg::exactalg::{cusp_exponents, LaurentPoly, RationalFunction, Scalar};
use cuspalg::hopfcore::TensorPoly;
use cuspalg::ncmatrix::{is_quantum_automorphism, MatrixJson, DecodedMatrix, Opposite, RingMatrix};
use cuspalg::rewrite::NCPoly;
use cuspalg::star::{dagger, vartheta, InvolutivePermutation};
use num_traits::{One, Zero};
use proptest::collection::vec;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3)
        .prop_map(|(a, b, c, d)| Scalar::complex(Scalar::ratio(a, b), Scalar::ratio(c, d)))
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn laurent(lo: i64, hi: i64, terms: usize) -> impl Strategy<Value = LaurentPoly> {
    vec((lo..=hi, scalar()), 0..=terms).prop_map(LaurentPoly::from_terms)
}

fn nonzero_laurent(lo: i64, hi: i64) -> impl Strategy<Value = LaurentPoly> {
    laurent(lo, hi, 3).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (laurent(0, 3, 3), nonzero_laurent(0, 2)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn laurent_matrix(n: usize) -> impl Strategy<Value = RingMatrix<LaurentPoly>> {
    vec(vec(laurent(-2, 3, 2), n), n).prop_map(RingMatrix::from_rows)
}

/// Involutions of `1..=n` as 1-based image lists, built from a random pairing.
fn involution(n: usize) -> impl Strategy<Value = InvolutivePermutation> {
    (Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(), vec(any::<bool>(), n)).prop_map(move |(order, swap)| {
        let mut images: Vec<usize> = (1..=n).collect();
        for (k, pair) in order.chunks(2).enumerate() {
            if let [a, b] = *pair {
                if swap[k] {
                    images[a - 1] = b;
                    images[b - 1] = a;
                }
            }
        }
        InvolutivePermutation::new(&images).unwrap()
    })
}

const OP_DEGREE: i64 = 8;

/// Operators on the degree-`≤ 8` cusp space with random images.
fn operator() -> impl Strategy<Value = TruncatedOperator> {
    let basis: Vec<i64> = cusp_exponents(OP_DEGREE).collect();
    let k = basis.len();
    vec(vec(prop_oneof![3 => Just(Scalar::zero()), 1 => scalar()], k), k).prop_map(move |coeffs| {
        let images: BTreeMap<i64, LaurentPoly> = basis
            .iter()
            .zip(&coeffs)
            .map(|(&e, row)| (e, LaurentPoly::from_terms(basis.iter().copied().zip(row.iter().cloned()))))
            .collect();
        TruncatedOperator::from_fn(OP_DEGREE, |e| images[&e].clone()).unwrap()
    })
}

fn operator_matrix(n: usize) -> impl Strategy<Value = RingMatrix<TruncatedOperator>> {
    vec(vec(operator(), n), n).prop_map(RingMatrix::from_rows)
}

fn free_poly() -> impl Strategy<Value = NCPoly> {
    vec((vec(0u8..2, 0..=3), scalar()), 0..=3).prop_map(|terms| {
        let mut p = NCPoly::zero();
        for (letters, c) in terms {
            let word = letters.iter().fold(NCPoly::one(), |acc, &s| &acc * &NCPoly::sym(s));
            p.add_scaled(&word, &c);
        }
        p
    })
}

fn free_matrix(n: usize) -> impl Strategy<Value = RingMatrix<NCPoly>> {
    vec(vec(free_poly(), n), n).prop_map(RingMatrix::from_rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars_form_a_field(a in scalar(), b in scalar(), c in nonzero_scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&c * &c.inv().unwrap(), Scalar::one());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(-3, 4, 3), b in laurent(-3, 4, 3), c in laurent(-3, 4, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn rational_functions_form_a_field(f in ratfunc(), g in ratfunc()) {
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        if !g.is_zero() {
            prop_assert_eq!(&(&f * &g) * &g.inv().unwrap(), f);
        }
    }

    #[test]
    fn dagger_is_an_involutive_antihomomorphism(
        (s, a, b) in (1usize..=4).prop_flat_map(|n| (involution(n), laurent_matrix(n), laurent_matrix(n)))
    ) {
        prop_assert_eq!(dagger(&dagger(&a, &s), &s), a.clone());
        prop_assert_eq!(dagger(&a.mul(&b), &s), dagger(&b, &s).mul(&dagger(&a, &s)));
    }

    #[test]
    fn transpose_reverses_products_in_the_opposite_ring(a in free_matrix(2), b in free_matrix(2)) {
        let op = |m: &RingMatrix<NCPoly>| m.map(|x| Opposite(x.clone()));
        let lhs = a.mul(&b).transpose();
        let rhs = op(&b.transpose()).mul(&op(&a.transpose())).map(|x| x.0.clone());
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn vartheta_is_involutive((s, m) in (1usize..=3).prop_flat_map(|n| (involution(n), operator_matrix(n)))) {
        prop_assert_eq!(vartheta(&vartheta(&m, &s), &s), m);
    }

    #[test]
    fn symmetrized_matrices_are_self_conjugate(
        (s, m) in (1usize..=3).prop_flat_map(|n| (involution(n), operator_matrix(n)))
    ) {
        let sym = m.add(&vartheta(&m, &s).transpose());
        prop_assert_eq!(vartheta(&sym, &s).transpose(), sym);
    }

    #[test]
    fn extension_to_rational_functions_is_multiplicative(
        alpha in nonzero_scalar(),
        beta in nonzero_scalar(),
        z in laurent(0, 2, 2),
        f in ratfunc(),
        g in ratfunc(),
    ) {
        let t = TriangularT::from_laurent(&n2_matrix(&alpha, &beta, &z)).unwrap();
        let (ef, eg) = (extend_to_ratfunc(&t, &f), extend_to_ratfunc(&t, &g));
        prop_assume!(ef.is_ok() && eg.is_ok());
        let efg = extend_to_ratfunc(&t, &(&f * &g));
        prop_assume!(efg.is_ok());
        prop_assert_eq!(efg.unwrap(), ef.unwrap().mul(&eg.unwrap()));
    }

    #[test]
    fn moebius_round_trip(a in scalar(), b in scalar(), c in scalar(), d in scalar()) {
        if let Ok(m) = MoebiusParams::new(a, b, c, d) {
            let back = MoebiusParams::from_ratfunc(&m.to_ratfunc()).unwrap();
            prop_assert_eq!(back.to_ratfunc(), m.to_ratfunc());
        }
    }

    #[test]
    fn laurent_matrix_json_round_trip(m in laurent_matrix(3)) {
        let text = serde_json::to_string(&MatrixJson::from_laurent(&m)).unwrap();
        let decoded = MatrixJson::parse(&text).unwrap().decode().unwrap();
        prop_assert_eq!(decoded, DecodedMatrix::Laurent(m));
    }

    #[test]
    fn h_sigma_multiplication_is_associative(a in vec(0u8..4, 0..4), b in vec(0u8..4, 0..4), c in vec(0u8..4, 0..4)) {
        let h = h_sigma();
        let word = |w: &[u8]| w.iter().fold(NCPoly::one(), |acc, &s| &acc * &NCPoly::sym(s));
        let (a, b, c) = (word(&a), word(&b), word(&c));
        prop_assert_eq!(h.mul(&h.mul(&a, &b), &c), h.mul(&a, &h.mul(&b, &c)));
    }

    #[test]
    fn h_sigma_coproduct_is_multiplicative(a in vec(0u8..4, 1..3), b in vec(0u8..4, 1..3)) {
        let h = h_sigma();
        let word = |w: &[u8]| w.iter().fold(NCPoly::one(), |acc, &s| &acc * &NCPoly::sym(s));
        let (a, b) = (word(&a), word(&b));
        let lhs: TensorPoly = h.tensor_nf(&h.coproduct(&h.mul(&a, &b)));
        let rhs = h.tensor_mul(&h.coproduct(&a), &h.coproduct(&b));
        prop_assert_eq!(lhs, h.tensor_nf(&rhs));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn accepted_size_two_matrices_are_quantum_automorphisms(
        alpha in nonzero_scalar(),
        beta in prop_oneof![Just(Scalar::from_int(-1)), nonzero_scalar()],
        z in laurent(0, 1, 2),
    ) {
        let d = classify_n2(&alpha, &beta, &z).unwrap();
        prop_assume!(d.accepted);
        let sigma = induced_operators(&n2_matrix(&alpha, &beta, &z), 20).unwrap();
        let rep = is_quantum_automorphism(&sigma, 20, 1);
        prop_assert!(rep.passed, "{:?}", rep.witnesses);
    }

    #[test]
    fn accepted_size_three_matrices_are_quantum_automorphisms(
        alpha in nonzero_scalar(),
        beta in nonzero_scalar(),
        gamma in nonzero_scalar(),
        x in laurent(0, 1, 2),
        y in laurent(0, 1, 2),
        z in laurent(0, 1, 2),
    ) {
        let d = classify_n3(&alpha, &beta, &gamma, &x, &y, &z).unwrap();
        prop_assume!(d.accepted);
        let sigma = induced_operators(&n3_matrix(&alpha, &beta, &gamma, &x, &y, &z), 20).unwrap();
        let rep = is_quantum_automorphism(&sigma, 20, 1);
        prop_assert!(rep.passed, "{:?}", rep.witnesses);
    }
}
