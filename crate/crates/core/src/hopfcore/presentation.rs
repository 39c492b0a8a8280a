//! Hopf algebras given by generators, rewriting rules and structure maps on
//! generators.

use num_traits::Zero;

use super::TensorPoly;
use crate::exactalg::Scalar;
use crate::linalg::{self, SparseRow};
use crate::report::{Check, Report};
use crate::rewrite::{
    parse_poly, parse_system, split_coeff, split_signed_terms, Alphabet, NCPoly, ReductionSystem, RewriteError,
    Sym, Word,
};

/// A presented Hopf algebra. `Δ` and `ε` extend multiplicatively, `S`
/// anti-multiplicatively.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    name: String,
    sys: ReductionSystem,
    delta: Vec<TensorPoly>,
    eps: Vec<Scalar>,
    antipode: Vec<NCPoly>,
}

impl HopfPresentation {
    pub fn new(
        name: impl Into<String>,
        sys: ReductionSystem,
        delta: Vec<TensorPoly>,
        eps: Vec<Scalar>,
        antipode: Vec<NCPoly>,
    ) -> Self {
        let n = sys.alphabet().len();
        assert!(delta.len() == n && eps.len() == n && antipode.len() == n, "structure maps per generator");
        assert!(delta.iter().all(|d| d.rank() == 2), "coproducts have rank two");
        HopfPresentation { name: name.into(), sys, delta, eps, antipode }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn system(&self) -> &ReductionSystem {
        &self.sys
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.sys.alphabet()
    }

    /// Generator by name; panics on an unknown name.
    pub fn gen(&self, name: &str) -> NCPoly {
        NCPoly::sym(self.alphabet().sym(name).unwrap_or_else(|| panic!("unknown generator {name}")))
    }

    pub fn parse(&self, s: &str) -> Result<NCPoly, RewriteError> {
        Ok(self.nf(&parse_poly(self.alphabet(), s)?))
    }

    pub fn show(&self, p: &NCPoly) -> String {
        self.alphabet().show(p)
    }

    pub fn nf(&self, p: &NCPoly) -> NCPoly {
        self.sys.nf(p)
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.sys.mul(a, b)
    }

    pub fn pow(&self, a: &NCPoly, e: u32) -> NCPoly {
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Image of `p` under the algebra map sending symbol `k` of its
    /// alphabet to `images[k]`, reduced here.
    pub fn substitute(&self, p: &NCPoly, images: &[NCPoly]) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let img = w.iter().fold(NCPoly::one(), |acc, s| self.mul(&acc, &images[*s as usize]));
            out.add_scaled(&img, c);
        }
        out
    }

    /// `f ⊗ g` applied legwise to a rank-two tensor, legs reduced here.
    pub fn substitute_tensor(&self, t: &TensorPoly, images: &[NCPoly]) -> TensorPoly {
        let mut out = TensorPoly::zero(t.rank());
        for (legs, c) in t.terms() {
            let polys: Vec<NCPoly> = legs.iter().map(|w| self.substitute(&NCPoly::word(w.clone()), images)).collect();
            add_product_of_legs(&mut out, &polys, c);
        }
        out
    }

    /// Legwise product `(a₁ ⊗ …)(b₁ ⊗ …)` with every leg reduced.
    pub fn tensor_mul(&self, a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
        assert_eq!(a.rank(), b.rank());
        let mut out = TensorPoly::zero(a.rank());
        for (la, ca) in a.terms() {
            for (lb, cb) in b.terms() {
                let c = ca * cb;
                let legs: Vec<NCPoly> = la
                    .iter()
                    .zip(lb)
                    .map(|(u, v)| {
                        let mut w = u.clone();
                        w.extend_from_slice(v);
                        self.nf(&NCPoly::word(w))
                    })
                    .collect();
                add_product_of_legs(&mut out, &legs, &c);
            }
        }
        out
    }

    /// Reduces every leg of a tensor.
    pub fn tensor_nf(&self, t: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero(t.rank());
        for (legs, c) in t.terms() {
            let polys: Vec<NCPoly> = legs.iter().map(|w| self.nf(&NCPoly::word(w.clone()))).collect();
            add_product_of_legs(&mut out, &polys, c);
        }
        out
    }

    pub fn coproduct_word(&self, w: &[Sym]) -> TensorPoly {
        let mut acc = TensorPoly::one(2);
        for s in w {
            acc = self.tensor_mul(&acc, &self.delta[*s as usize]);
        }
        acc
    }

    pub fn coproduct(&self, p: &NCPoly) -> TensorPoly {
        let mut out = TensorPoly::zero(2);
        for (w, c) in p.terms() {
            out.add_scaled(&self.coproduct_word(w), c);
        }
        out
    }

    pub fn counit(&self, p: &NCPoly) -> Scalar {
        p.terms()
            .map(|(w, c)| w.iter().fold(c.clone(), |acc, s| acc * &self.eps[*s as usize]))
            .sum()
    }

    pub fn antipode_word(&self, w: &[Sym]) -> NCPoly {
        let mut acc = NCPoly::one();
        for s in w.iter().rev() {
            acc = self.mul(&acc, &self.antipode[*s as usize]);
        }
        acc
    }

    pub fn antipode(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.antipode_word(w), c);
        }
        out
    }

    /// Applies `Δ` to leg `k` of a tensor, raising its rank by one.
    pub fn coproduct_leg(&self, t: &TensorPoly, k: usize) -> TensorPoly {
        let mut out = TensorPoly::zero(t.rank() + 1);
        for (legs, c) in t.terms() {
            for (pair, d) in self.coproduct_word(&legs[k]).terms() {
                let mut nl = legs.clone();
                nl.splice(k..=k, pair.iter().cloned());
                out.add_term(nl, &(c * d));
            }
        }
        out
    }

    /// Applies `ε` to leg `k`, lowering the rank by one.
    pub fn counit_leg(&self, t: &TensorPoly, k: usize) -> TensorPoly {
        let mut out = TensorPoly::zero(t.rank() - 1);
        for (legs, c) in t.terms() {
            let e = self.counit(&NCPoly::word(legs[k].clone()));
            let mut nl = legs.clone();
            nl.remove(k);
            out.add_term(nl, &(c * e));
        }
        out
    }

    /// Converts a rank-one tensor back to a polynomial.
    pub fn rank_one(&self, t: &TensorPoly) -> NCPoly {
        assert_eq!(t.rank(), 1);
        NCPoly::from_terms(t.terms().map(|(l, c)| (l[0].clone(), c.clone())))
    }

    /// `m ∘ (f ⊗ g)` on a rank-two tensor.
    pub fn multiply_legs(
        &self,
        t: &TensorPoly,
        f: impl Fn(&NCPoly) -> NCPoly,
        g: impl Fn(&NCPoly) -> NCPoly,
    ) -> NCPoly {
        let mut out = NCPoly::zero();
        for (legs, c) in t.terms() {
            let a = f(&NCPoly::word(legs[0].clone()));
            let b = g(&NCPoly::word(legs[1].clone()));
            out.add_scaled(&self.mul(&a, &b), c);
        }
        out
    }

    /// Verifies on `words` (normal-form basis words): coassociativity, both
    /// counit laws, both antipode laws; and that `Δ`, `ε`, `S` respect every rule.
    pub fn check_hopf_axioms(&self, words: &[Word]) -> Report {
        let a = self.alphabet();
        let mut rep = Report::new(format!("{} Hopf axioms", self.name)).bound("basis words", words.len());
        let mut fails = [None, None, None, None];
        for w in words {
            let x = NCPoly::word(w.clone());
            let d = self.coproduct_word(w);
            if fails[0].is_none() && self.coproduct_leg(&d, 0) != self.coproduct_leg(&d, 1) {
                fails[0] = Some(a.show_word(w));
            }
            let left = self.rank_one(&self.counit_leg(&d, 0));
            let right = self.rank_one(&self.counit_leg(&d, 1));
            if fails[1].is_none() && (self.nf(&left) != x || self.nf(&right) != x) {
                fails[1] = Some(a.show_word(w));
            }
            let unit = NCPoly::constant(self.counit(&x));
            let sl = self.multiply_legs(&d, |p| self.antipode(p), |p| p.clone());
            let sr = self.multiply_legs(&d, |p| p.clone(), |p| self.antipode(p));
            if fails[2].is_none() && (sl != unit || sr != unit) {
                fails[2] = Some(format!("{}: S*id = {}, id*S = {}", a.show_word(w), self.show(&sl), self.show(&sr)));
            }
            if fails[3].is_none() && self.counit(&self.antipode(&x)) != self.counit(&x) {
                fails[3] = Some(a.show_word(w));
            }
        }
        let names = ["coassociativity", "counit laws", "antipode laws", "counit of antipode"];
        let anchors = ["hopf.coassociative", "hopf.counit", "hopf.antipode", "hopf.eps_S"];
        for k in 0..4 {
            rep.push(Check::new(names[k], anchors[k], fails[k].is_none(), fails[k].take()));
        }
        rep.extend(self.check_relations());
        rep
    }

    /// `Δ`, `ε` and `S` vanish on `lhs − rhs` of every rule.
    pub fn check_relations(&self) -> Report {
        let mut rep = Report::new(format!("{} relations", self.name));
        let mut bad = Vec::new();
        for r in self.sys.rules() {
            let rel = &NCPoly::word(r.lhs.clone()) - &r.rhs;
            let d = self.coproduct(&rel);
            let e = self.counit(&rel);
            let s = self.nf(&self.antipode(&rel));
            if !d.is_zero() || !e.is_zero() || !s.is_zero() {
                bad.push(self.alphabet().show_word(&r.lhs));
            }
        }
        let w = (!bad.is_empty()).then(|| format!("rules not respected: {}", bad.join(", ")));
        rep.push(Check::new("structure maps respect relations", "hopf.well_defined", bad.is_empty(), w));
        rep
    }

    /// Certifies that `S` is bijective on the span of `words`, assuming the
    /// span is `S`-stable (which is also checked).
    pub fn antipode_bijective_on(&self, words: &[Word]) -> Result<(), String> {
        let index: std::collections::HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut rows: Vec<SparseRow> = Vec::new();
        for w in words {
            let img = self.antipode_word(w);
            let mut row = SparseRow::new();
            for (u, c) in img.terms() {
                let &col = index.get(u).ok_or_else(|| {
                    format!("S({}) leaves the span at {}", self.alphabet().show_word(w), self.alphabet().show_word(u))
                })?;
                row.insert(col, c.clone());
            }
            rows.push(row);
        }
        let r = linalg::rank(rows);
        if r == words.len() {
            Ok(())
        } else {
            Err(format!("S has rank {r} on {} words", words.len()))
        }
    }

    /// Loads the text format of [`crate::rewrite::parse_system`] extended with
    /// `Delta g = a (x) b + …`, `eps g = c` and `S g = p` lines; every
    /// generator needs all three.
    pub fn from_text(name: &str, text: &str) -> Result<Self, RewriteError> {
        let sys = parse_system(text)?;
        let a = sys.alphabet().clone();
        let n = a.len();
        let mut delta = vec![None; n];
        let mut eps = vec![None; n];
        let mut anti = vec![None; n];
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let Some((head, body)) = line.split_once(" = ") else { continue };
            let mut parts = head.split_whitespace();
            let (Some(kind), Some(g), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(RewriteError::Parse(format!("bad structure line {line:?}")));
            };
            let s = a.sym(g).ok_or_else(|| RewriteError::Parse(format!("unknown generator {g}")))? as usize;
            match kind {
                "Delta" => delta[s] = Some(parse_tensor(&a, body)?),
                "eps" => {
                    let v = parse_poly(&a, body)?;
                    if v.terms().any(|(w, _)| !w.is_empty()) {
                        return Err(RewriteError::Parse(format!("bad counit value {body:?}")));
                    }
                    eps[s] = Some(v.constant_term());
                }
                "S" => anti[s] = Some(parse_poly(&a, body)?),
                _ => return Err(RewriteError::Parse(format!("unknown structure map {kind}"))),
            }
        }
        let missing = |what: &str, k: usize| RewriteError::Parse(format!("missing {what} for {}", a.name(k as Sym)));
        let delta = delta.into_iter().enumerate().map(|(k, d)| d.ok_or_else(|| missing("Delta", k))).collect::<Result<_, _>>()?;
        let eps = eps.into_iter().enumerate().map(|(k, d)| d.ok_or_else(|| missing("eps", k))).collect::<Result<_, _>>()?;
        let anti = anti.into_iter().enumerate().map(|(k, d)| d.ok_or_else(|| missing("S", k))).collect::<Result<_, _>>()?;
        Ok(HopfPresentation::new(name, sys, delta, eps, anti))
    }

    /// Text form accepted by [`HopfPresentation::from_text`].
    pub fn to_text(&self) -> String {
        let a = self.alphabet();
        let mut out = crate::rewrite::format_system(&self.sys);
        for k in 0..a.len() {
            let g = a.name(k as Sym);
            let d: Vec<String> = self.delta[k]
                .terms()
                .map(|(legs, c)| {
                    let js = serde_json::to_string(c).expect("scalar serializes");
                    format!("{js} {} (x) {}", a.show_word(&legs[0]), a.show_word(&legs[1]))
                })
                .collect();
            out.push_str(&format!("Delta {g} = {}\n", d.join(" + ")));
            out.push_str(&format!("eps {g} = {}\n", serde_json::to_string(&self.eps[k]).expect("scalar")));
            let s: Vec<String> = self.antipode[k]
                .terms()
                .map(|(w, c)| format!("{} {}", serde_json::to_string(c).expect("scalar"), a.show_word(w)))
                .collect();
            out.push_str(&format!("S {g} = {}\n", if s.is_empty() { "0".into() } else { s.join(" + ") }));
        }
        out
    }
}

/// Adds `c · (p₁ ⊗ p₂ ⊗ …)` to `out`, expanding each leg polynomial.
fn add_product_of_legs(out: &mut TensorPoly, legs: &[NCPoly], c: &Scalar) {
    let mut partial: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), c.clone())];
    for p in legs {
        let mut next = Vec::new();
        for (ws, x) in &partial {
            for (w, y) in p.terms() {
                let mut nws = ws.clone();
                nws.push(w.clone());
                next.push((nws, x * y));
            }
        }
        partial = next;
    }
    for (ws, x) in partial {
        out.add_term(ws, &x);
    }
}

fn parse_tensor(a: &Alphabet, s: &str) -> Result<TensorPoly, RewriteError> {
    let mut out = TensorPoly::zero(2);
    for (neg, term) in split_signed_terms(s) {
        let (mut c, rest) = split_coeff(&term)?;
        if neg {
            c = -c;
        }
        let legs: Vec<&str> = rest.split("(x)").flat_map(|p| p.split('⊗')).collect();
        if legs.len() != 2 {
            return Err(RewriteError::Parse(format!("expected two tensor legs in {term:?}")));
        }
        let parse_leg = |l: &str| -> Result<Word, RewriteError> {
            let l = l.trim();
            if l.is_empty() {
                Ok(Vec::new())
            } else {
                a.parse_word(l)
            }
        };
        out.add_term(vec![parse_leg(legs[0])?, parse_leg(legs[1])?], &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Sweedler's four-dimensional algebra: g² = 1, x² = 0, xg = −gx.
    const SWEEDLER: &str = "
symbols: x g
gg -> 1
xx -> 0
gx -> -xg
Delta g = g (x) g
Delta x = 1 (x) x + x (x) g
eps g = 1
eps x = 0
S g = g
S x = -xg
";

    #[test]
    fn sweedler_axioms() {
        let h = HopfPresentation::from_text("sweedler", SWEEDLER).unwrap();
        assert!(h.system().check_confluence(10).is_confluent());
        let words = h.system().enumerate_basis(4);
        assert_eq!(words.len(), 4);
        let rep = h.check_hopf_axioms(&words);
        assert!(rep.passed(), "{rep}");
        assert!(h.antipode_bijective_on(&words).is_ok());
    }

    #[test]
    fn antipode_square_of_skew_primitive() {
        let h = HopfPresentation::from_text("sweedler", SWEEDLER).unwrap();
        let x = h.gen("x");
        assert_eq!(h.antipode(&h.antipode(&x)), -&x);
    }

    #[test]
    fn broken_coproduct_is_caught() {
        let bad = SWEEDLER.replace("Delta x = 1 (x) x + x (x) g", "Delta x = 1 (x) x + x (x) 1");
        let h = HopfPresentation::from_text("broken", &bad).unwrap();
        let rep = h.check_relations();
        assert!(!rep.passed());
    }

    #[test]
    fn text_round_trip() {
        let h = HopfPresentation::from_text("sweedler", SWEEDLER).unwrap();
        let again = HopfPresentation::from_text("sweedler", &h.to_text()).unwrap();
        let x = h.gen("x");
        assert_eq!(h.coproduct(&x), again.coproduct(&x));
        assert_eq!(h.antipode(&x), again.antipode(&x));
    }
}
