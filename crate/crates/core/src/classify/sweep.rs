//! Seeded random comparison of the closed-form decisions with the direct
//! test on `T²` and `T³`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::lemma::{classify_n2, classify_n3, n2_matrix, n3_matrix, N2Case};
use super::triangular::{degree_bound_validate, restricts_to_cusp, TriangularT};
use crate::exactalg::{LaurentPoly, Scalar};
use crate::report::{Check, Report};

/// Entry supports are drawn from `[−SUPPORT, SUPPORT]`.
pub const SUPPORT: i64 = 5;
pub const DEFAULT_INSTANCES: usize = 1000;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SweepSummary {
    pub family: String,
    pub instances: usize,
    pub accepted: usize,
    /// Instances where the closed form and the direct test disagree.
    pub disagreements: Vec<String>,
    /// Accepted instances failing the degree bound.
    pub degree_bound_failures: Vec<String>,
    pub cases: BTreeMap<String, usize>,
}

impl SweepSummary {
    fn new(family: &str) -> Self {
        SweepSummary { family: family.to_string(), ..Default::default() }
    }

    fn record(&mut self, accepted: bool, brute: bool, case: String, t: &TriangularT, describe: impl Fn() -> String) {
        self.instances += 1;
        *self.cases.entry(case).or_default() += 1;
        if accepted != brute {
            self.disagreements.push(describe());
        }
        if accepted {
            self.accepted += 1;
            if !degree_bound_validate(t).passed() {
                self.degree_bound_failures.push(describe());
            }
        }
    }

    pub fn clean(&self) -> bool {
        self.disagreements.is_empty() && self.degree_bound_failures.is_empty()
    }
}

fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let re = rng.gen_range(-3..=3);
        let im = if rng.gen_bool(0.25) { rng.gen_range(-2..=2) } else { 0 };
        let s = Scalar::complex(Scalar::from_int(re), Scalar::from_int(im));
        if !s.is_zero() {
            return if rng.gen_bool(0.2) { &s * &Scalar::ratio(1, 2) } else { s };
        }
    }
}

/// A random Laurent polynomial supported on a subset of `exps`.
fn random_poly(rng: &mut ChaCha8Rng, exps: &[i64], density: f64) -> LaurentPoly {
    let mut terms = Vec::new();
    for &e in exps {
        if rng.gen_bool(density) {
            terms.push((e, small_scalar(rng)));
        }
    }
    LaurentPoly::from_terms(terms)
}

fn full_range(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).collect()
}

fn allowed(case: N2Case, lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).filter(|e| case.allows(*e)).collect()
}

/// Half of the entries are drawn from the exponents the case permits, half
/// from the full range, so both verdicts occur often.
fn entry_for(rng: &mut ChaCha8Rng, case: N2Case) -> LaurentPoly {
    if rng.gen_bool(0.5) {
        random_poly(rng, &allowed(case, -SUPPORT, SUPPORT), 0.3)
    } else {
        random_poly(rng, &full_range(-SUPPORT, SUPPORT), 0.2)
    }
}

const GENERIC_BETAS: [(i64, i64); 6] = [(1, 1), (2, 1), (-2, 1), (1, 2), (-1, 3), (3, 2)];

fn generic_beta(rng: &mut ChaCha8Rng) -> Scalar {
    if rng.gen_bool(0.2) {
        return if rng.gen_bool(0.5) { Scalar::i() } else { Scalar::complex(Scalar::from_int(1), Scalar::from_int(1)) };
    }
    let (p, q) = *GENERIC_BETAS.choose(rng).expect("nonempty");
    Scalar::ratio(p, q)
}

/// Families `β = −1` and generic `β` for the size-2 decision.
pub fn sweep_n2(seed: u64, instances: usize) -> Vec<SweepSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for family in ["beta=-1", "generic"] {
        let mut s = SweepSummary::new(family);
        for _ in 0..instances {
            let alpha = small_scalar(&mut rng);
            let beta = if family == "beta=-1" { -Scalar::from_int(1) } else { generic_beta(&mut rng) };
            let z = entry_for(&mut rng, N2Case::of(&beta));
            let d = classify_n2(&alpha, &beta, &z).expect("α ≠ 0");
            let t = TriangularT::from_laurent(&n2_matrix(&alpha, &beta, &z)).expect("triangular");
            let brute = restricts_to_cusp(&t);
            s.record(d.accepted, brute, format!("case {}", d.case.number()), &t, || format!("α={alpha} β={beta} z={z}"));
        }
        out.push(s);
    }
    out
}

/// `1 + γ + βγ ≠ 0` (with `β, γ` sometimes `−1`) and the singular family
/// `β = −1 − γ⁻¹`.
pub fn sweep_n3(seed: u64, instances: usize) -> Vec<SweepSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6e33);
    let mut out = Vec::new();
    for family in ["regular", "singular"] {
        let mut s = SweepSummary::new(family);
        let mut done = 0;
        while done < instances {
            let alpha = small_scalar(&mut rng);
            let pick = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.3) { -Scalar::from_int(1) } else { generic_beta(rng) };
            let gamma = pick(&mut rng);
            let beta = if family == "singular" {
                &(-Scalar::from_int(1)) - &gamma.inv().expect("nonzero")
            } else {
                pick(&mut rng)
            };
            let d = &(&Scalar::from_int(1) + &gamma) + &(&beta * &gamma);
            if beta.is_zero() || (family == "regular") == d.is_zero() {
                continue;
            }
            done += 1;
            let structured = rng.gen_bool(0.5);
            let (x, y) = if structured {
                // Narrow supports keep the constructed z inside the range.
                (
                    random_poly(&mut rng, &allowed(N2Case::of(&beta), -2, 3), 0.4),
                    random_poly(&mut rng, &allowed(N2Case::of(&gamma), -2, 3), 0.4),
                )
            } else {
                (entry_for(&mut rng, N2Case::of(&beta)), entry_for(&mut rng, N2Case::of(&gamma)))
            };
            let z = if structured { coupled_z(&mut rng, &alpha, &beta, &gamma, &x, &y) } else { None };
            let z = z.unwrap_or_else(|| random_poly(&mut rng, &full_range(-SUPPORT, SUPPORT), 0.2));
            let dec = classify_n3(&alpha, &beta, &gamma, &x, &y, &z).expect("nonzero parameters");
            let t = TriangularT::from_laurent(&n3_matrix(&alpha, &beta, &gamma, &x, &y, &z)).expect("triangular");
            let brute = restricts_to_cusp(&t);
            let case = format!("x case {}, y case {}", dec.x_case.number(), dec.y_case.number());
            s.record(dec.accepted, brute, case, &t, || format!("α={alpha} β={beta} γ={gamma} x={x} y={y} z={z}"));
        }
        out.push(s);
    }
    out
}

/// A `z` making the first coupling quantity a cusp element: `(T²)₁₃ = u`
/// for random `u ∈ k[t², t³]`. `None` if it falls outside the support range.
fn coupled_z(
    rng: &mut ChaCha8Rng,
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
    x: &LaurentPoly,
    y: &LaurentPoly,
) -> Option<LaurentPoly> {
    let bg = beta * gamma;
    let coeff = alpha * &(&Scalar::from_int(1) + &bg);
    if coeff.is_zero() {
        return None;
    }
    let u = random_poly(rng, &[0, 2, 3, 4], 0.5);
    let z = (&u - &(x * y)).shift(-1).ok()?.scale(&coeff.inv().ok()?);
    let in_range = z.terms().all(|(e, _)| (-SUPPORT..=SUPPORT).contains(&e));
    in_range.then_some(z)
}

/// Both sweeps as a report, plus the vacuous cube-root branch.
pub fn classify_checks(seed: u64, instances: usize) -> Report {
    let mut rep = Report::new("classify").bound("seed", seed).bound("instances", instances).bound("support", SUPPORT);
    for (n, sums) in [(2, sweep_n2(seed, instances)), (3, sweep_n3(seed, instances))] {
        for s in sums {
            rep.push(Check::new(
                format!("n = {n}, {}: closed form agrees with T², T³ ∈ k[t², t³]", s.family),
                format!("classify.n{n}.equivalence"),
                s.disagreements.is_empty(),
                Some(s.disagreements.first().cloned().unwrap_or_else(|| {
                    format!("{} instances, {} accepted, {:?}", s.instances, s.accepted, s.cases)
                })),
            ));
            rep.push(Check::new(
                format!("n = {n}, {}: degree bound on accepted instances", s.family),
                format!("classify.n{n}.degree_bound"),
                s.degree_bound_failures.is_empty(),
                s.degree_bound_failures.first().cloned(),
            ));
        }
    }
    rep.push(Check::vacuous(
        "case [[3]]_β = 0",
        "classify.cube_root",
        "β² + β + 1 has no root in Q(i)",
    ));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_agree() {
        for s in sweep_n2(7, 150).into_iter().chain(sweep_n3(7, 150)) {
            assert!(s.clean(), "{s:?}");
            assert!(s.accepted > 10 && s.accepted < s.instances, "{s:?}");
        }
    }

    #[test]
    fn sweeps_are_deterministic() {
        assert_eq!(sweep_n3(3, 40), sweep_n3(3, 40));
    }
}
