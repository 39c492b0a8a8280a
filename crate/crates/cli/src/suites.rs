use clap::ValueEnum;
use cuspalg::classify::{classify_checks, DEFAULT_INSTANCES};
use cuspalg::cusp::{braiding_check, build_sigma, h_sigma_hopf_checks, h_sigma_rewriting_checks, sigma_checks, verify_cusp};
use cuspalg::dual::{a_sigma_checks, translation_checks, verify_dual};
use cuspalg::exactalg::Scalar;
use cuspalg::report::{Check, Report};
use cuspalg::star::verify_star;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Ncmatrix,
    Rewrite,
    Hopf,
    Cusp,
    Dual,
    Classify,
    Star,
}

pub struct Bounds {
    pub max_degree: i64,
    pub hopf_degree: u32,
    pub pair_l: u32,
    pub pair_b: u32,
    pub seed: u64,
    pub lambda: Option<Scalar>,
}

const ORBIT_RADIUS: i64 = 3;
/// The braiding is checked below the full truncation.
const BRAIDING_DEGREE: i64 = 10;

fn with_extra(mut fixed: Vec<Scalar>, extra: &Option<Scalar>) -> Vec<Scalar> {
    if let Some(l) = extra {
        if !fixed.contains(l) {
            fixed.push(l.clone());
        }
    }
    fixed
}

fn ncmatrix(b: &Bounds) -> Report {
    match build_sigma(b.max_degree) {
        Ok(sigma) => sigma_checks(&sigma, ORBIT_RADIUS),
        Err(e) => {
            let mut rep = Report::new("cusp sigma");
            rep.push(Check::fail("build σ", "sigma.build", e.to_string()));
            rep
        }
    }
}

fn rewrite(b: &Bounds) -> Report {
    let mut rep = h_sigma_rewriting_checks(b.hopf_degree);
    rep.extend(a_sigma_checks(b.pair_b));
    rep
}

fn hopf(b: &Bounds) -> Report {
    let mut rep = h_sigma_hopf_checks(b.hopf_degree);
    rep.extend(braiding_check(b.max_degree.min(BRAIDING_DEGREE), &Scalar::from_int(0)));
    rep
}

fn dual(b: &Bounds) -> Report {
    let lambdas = with_extra(vec![Scalar::from_int(0), Scalar::from_int(1), Scalar::from_int(2), Scalar::i()], &b.lambda);
    let mut rep = verify_dual(b.pair_l, b.pair_b, &lambdas, b.max_degree);
    rep.extend(translation_checks());
    rep
}

fn star(b: &Bounds) -> Report {
    let lambdas = with_extra(vec![Scalar::from_int(0), Scalar::from_int(1)], &b.lambda);
    verify_star(b.max_degree, b.hopf_degree, &lambdas)
}

pub fn run(suite: Suite, b: &Bounds) -> Report {
    let mut rep = match suite {
        Suite::All => {
            let mut all = Report::new("all");
            for s in [Suite::Ncmatrix, Suite::Rewrite, Suite::Hopf, Suite::Cusp, Suite::Dual, Suite::Classify, Suite::Star] {
                all.extend(run(s, b));
            }
            all
        }
        Suite::Ncmatrix => ncmatrix(b),
        Suite::Rewrite => rewrite(b),
        Suite::Hopf => hopf(b),
        Suite::Cusp => verify_cusp(b.max_degree, b.hopf_degree),
        Suite::Dual => dual(b),
        Suite::Classify => classify_checks(b.seed, DEFAULT_INSTANCES),
        Suite::Star => star(b),
    };
    rep.suite = suite.to_possible_value().expect("no skipped variants").get_name().to_string();
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds { max_degree: 8, hopf_degree: 1, pair_l: 1, pair_b: 2, seed: 0, lambda: None }
    }

    #[test]
    fn extra_lambda_is_appended_once() {
        let fixed = vec![Scalar::from_int(0), Scalar::from_int(1)];
        assert_eq!(with_extra(fixed.clone(), &Some(Scalar::from_int(1))), fixed);
        assert_eq!(with_extra(fixed.clone(), &Some(Scalar::i())).len(), 3);
    }

    #[test]
    fn suites_are_named_after_the_command() {
        for s in [Suite::Ncmatrix, Suite::Rewrite, Suite::Cusp] {
            let rep = run(s, &small());
            assert_eq!(rep.suite, s.to_possible_value().unwrap().get_name());
            assert!(rep.passed(), "{rep}");
        }
    }
}
