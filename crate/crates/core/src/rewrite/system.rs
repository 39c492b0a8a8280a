//! Reduction systems on free algebras, normal forms and the diamond-lemma check.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Zero};

use super::{NCPoly, RewriteError, Sym, Word};
use crate::exactalg::Scalar;

/// Maximum number of single-rule rewrites in one normal-form computation.
pub const REDUCTION_FUSE: usize = 1_000_000;

/// Generator names; the index order is the symbol order used by the monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Alphabet { names: names.iter().map(|s| s.as_ref().to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, s: Sym) -> &str {
        &self.names[s as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn sym(&self, name: &str) -> Option<Sym> {
        self.names.iter().position(|n| n == name).map(|i| i as Sym)
    }

    /// Parses a juxtaposition of generator names, longest match first.
    /// Whitespace is ignored; `1` is the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word, RewriteError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "1" {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((i, n)) => {
                    out.push(i as Sym);
                    rest = &rest[n.len()..];
                }
                None => return Err(RewriteError::Parse(format!("unknown symbol at {rest:?}"))),
            }
        }
        Ok(out)
    }

    pub fn show_word(&self, w: &[Sym]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let multi = self.names.iter().any(|n| n.chars().count() > 1);
        let parts: Vec<&str> = w.iter().map(|s| self.name(*s)).collect();
        if multi {
            parts.join(" ")
        } else {
            parts.concat()
        }
    }

    pub fn show(&self, p: &NCPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in p.terms().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            if c.is_one() {
                out.push_str(&self.show_word(w));
            } else if w.is_empty() {
                let _ = write!(out, "{c}");
            } else {
                let _ = write!(out, "{c}*{}", self.show_word(w));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// An ambiguity whose two reductions disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Ambiguity {
    pub word: Word,
    pub kind: AmbiguityKind,
    pub rules: (usize, usize),
    pub difference: NCPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConfluenceReport {
    pub overlaps_checked: usize,
    pub inclusions_checked: usize,
    pub unresolved: Vec<Ambiguity>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.unresolved.is_empty()
    }
}

/// Rules over an alphabet, oriented by a weighted degree-lexicographic order:
/// words are compared first by total weight, then lexicographically in symbol
/// order (a proper prefix is smaller). Weight-zero symbols must sit above every
/// weighted symbol so that the order stays a well-order.
#[derive(Clone, Debug)]
pub struct ReductionSystem {
    alphabet: Alphabet,
    weights: Vec<u64>,
    grading: Vec<u64>,
    rules: Vec<Rule>,
    index: HashMap<Word, usize>,
    lhs_lens: Vec<usize>,
}

impl ReductionSystem {
    /// Unit weights, grading equal to the weights.
    pub fn new(alphabet: Alphabet, rules: Vec<Rule>) -> Result<Self, RewriteError> {
        let w = vec![1; alphabet.len()];
        Self::with_weights(alphabet, w.clone(), w, rules)
    }

    pub fn with_weights(
        alphabet: Alphabet,
        weights: Vec<u64>,
        grading: Vec<u64>,
        rules: Vec<Rule>,
    ) -> Result<Self, RewriteError> {
        let n = alphabet.len();
        if weights.len() != n || grading.len() != n {
            return Err(RewriteError::Invalid("weight vector length mismatch".into()));
        }
        let max_weighted = (0..n).filter(|i| weights[*i] > 0).max();
        let min_unweighted = (0..n).filter(|i| weights[*i] == 0).min();
        if let (Some(a), Some(b)) = (max_weighted, min_unweighted) {
            if b < a {
                return Err(RewriteError::Invalid(
                    "weight-zero symbols must follow all weighted symbols".into(),
                ));
            }
        }
        let mut sys = ReductionSystem {
            alphabet,
            weights,
            grading,
            rules: Vec::new(),
            index: HashMap::new(),
            lhs_lens: Vec::new(),
        };
        for r in rules {
            sys.push_rule(r)?;
        }
        Ok(sys)
    }

    fn push_rule(&mut self, r: Rule) -> Result<(), RewriteError> {
        if r.lhs.is_empty() {
            return Err(RewriteError::Invalid("empty left-hand side".into()));
        }
        if let Some((w, _)) = r.rhs.terms().find(|(w, _)| self.cmp_words(w, &r.lhs) != Ordering::Less) {
            return Err(RewriteError::NotDecreasing {
                lhs: self.alphabet.show_word(&r.lhs),
                term: self.alphabet.show_word(w),
            });
        }
        if self.index.contains_key(&r.lhs) {
            return Err(RewriteError::Invalid(format!(
                "duplicate rule for {}",
                self.alphabet.show_word(&r.lhs)
            )));
        }
        self.index.insert(r.lhs.clone(), self.rules.len());
        if !self.lhs_lens.contains(&r.lhs.len()) {
            self.lhs_lens.push(r.lhs.len());
            self.lhs_lens.sort_unstable();
        }
        self.rules.push(r);
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn grading(&self) -> &[u64] {
        &self.grading
    }

    pub fn weight(&self, w: &[Sym]) -> u64 {
        w.iter().map(|s| self.weights[*s as usize]).sum()
    }

    pub fn graded_degree(&self, w: &[Sym]) -> u64 {
        w.iter().map(|s| self.grading[*s as usize]).sum()
    }

    /// The monomial order.
    pub fn cmp_words(&self, a: &[Sym], b: &[Sym]) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| a.cmp(b))
    }

    /// Position and rule index of the leftmost rule occurrence in `w`.
    fn find_redex(&self, w: &[Sym]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for &len in &self.lhs_lens {
                if start + len > w.len() {
                    break;
                }
                if let Some(&r) = self.index.get(&w[start..start + len]) {
                    return Some((start, r));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &[Sym]) -> bool {
        self.find_redex(w).is_none()
    }

    /// Reduces `p` until no term contains a rule's left-hand side.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly, RewriteError> {
        // Terms are processed from the largest down; every rewrite produces
        // strictly smaller words, so each key is visited at most once.
        let mut pending: BTreeMap<(u64, Word), Scalar> = BTreeMap::new();
        for (w, c) in p.terms() {
            pending.insert((self.weight(w), w.clone()), c.clone());
        }
        let mut out = NCPoly::zero();
        let mut steps = 0usize;
        while let Some(((_, w), c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.find_redex(&w) {
                None => out.add_term(w, &c),
                Some((pos, r)) => {
                    steps += 1;
                    if steps > REDUCTION_FUSE {
                        return Err(RewriteError::FuseExceeded(REDUCTION_FUSE));
                    }
                    let rule = &self.rules[r];
                    let (pre, post) = (&w[..pos], &w[pos + rule.lhs.len()..]);
                    for (m, v) in rule.rhs.terms() {
                        let mut nw = Vec::with_capacity(pre.len() + m.len() + post.len());
                        nw.extend_from_slice(pre);
                        nw.extend_from_slice(m);
                        nw.extend_from_slice(post);
                        let key = (self.weight(&nw), nw);
                        let e = pending.entry(key).or_insert_with(Scalar::zero);
                        *e += &(&c * v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Normal form, panicking if the fuse blows. For systems already checked
    /// to terminate this cannot fail.
    pub fn nf(&self, p: &NCPoly) -> NCPoly {
        self.normal_form(p).expect("reduction fuse exceeded")
    }

    /// Product of two elements followed by reduction.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.nf(&(a * b))
    }

    /// Checks every overlap and inclusion ambiguity among the rules whose
    /// ambiguous word has weight at most `bound`.
    pub fn check_confluence(&self, bound: u64) -> ConfluenceReport {
        let mut report = ConfluenceReport { overlaps_checked: 0, inclusions_checked: 0, unresolved: Vec::new() };
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                // Overlaps: r1 = u v, r2 = v w with u, v, w nonempty.
                for k in 1..r1.lhs.len() {
                    let v = &r1.lhs[k..];
                    if v.len() >= r2.lhs.len() || !r2.lhs.starts_with(v) {
                        continue;
                    }
                    let u = &r1.lhs[..k];
                    let w = &r2.lhs[v.len()..];
                    let mut word = r1.lhs.clone();
                    word.extend_from_slice(w);
                    if self.weight(&word) > bound {
                        continue;
                    }
                    report.overlaps_checked += 1;
                    let left = &r1.rhs * &NCPoly::word(w.to_vec());
                    let right = &NCPoly::word(u.to_vec()) * &r2.rhs;
                    self.record(&mut report, word, AmbiguityKind::Overlap, (i, j), &left, &right);
                }
                // Inclusions: r1 occurs inside r2.
                if i != j && r1.lhs.len() <= r2.lhs.len() {
                    for pos in 0..=(r2.lhs.len() - r1.lhs.len()) {
                        if r2.lhs[pos..pos + r1.lhs.len()] != r1.lhs[..] {
                            continue;
                        }
                        if self.weight(&r2.lhs) > bound {
                            continue;
                        }
                        report.inclusions_checked += 1;
                        let pre = NCPoly::word(r2.lhs[..pos].to_vec());
                        let post = NCPoly::word(r2.lhs[pos + r1.lhs.len()..].to_vec());
                        let left = &(&pre * &r1.rhs) * &post;
                        self.record(&mut report, r2.lhs.clone(), AmbiguityKind::Inclusion, (i, j), &left, &r2.rhs);
                    }
                }
            }
        }
        report
    }

    fn record(
        &self,
        report: &mut ConfluenceReport,
        word: Word,
        kind: AmbiguityKind,
        rules: (usize, usize),
        left: &NCPoly,
        right: &NCPoly,
    ) {
        let diff = match (self.normal_form(left), self.normal_form(right)) {
            (Ok(a), Ok(b)) => &a - &b,
            _ => NCPoly::term(Scalar::one(), word.clone()),
        };
        if !diff.is_zero() {
            report.unresolved.push(Ambiguity { word, kind, rules, difference: diff });
        }
    }

    /// Irreducible words of graded degree at most `bound`, sorted by the
    /// monomial order. Word length is capped at `max_len` so that grading-zero
    /// loops cannot run forever.
    pub fn enumerate_basis_capped(&self, bound: u64, max_len: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        while let Some(w) = frontier.pop() {
            if w.len() >= max_len {
                continue;
            }
            for s in 0..self.alphabet.len() as Sym {
                let mut nw = w.clone();
                nw.push(s);
                if self.graded_degree(&nw) > bound || self.has_redex_suffix(&nw) {
                    continue;
                }
                out.push(nw.clone());
                frontier.push(nw);
            }
        }
        out.sort_by(|a, b| self.cmp_words(a, b));
        out
    }

    pub fn enumerate_basis(&self, bound: u64) -> Vec<Word> {
        self.enumerate_basis_capped(bound, 64)
    }

    fn has_redex_suffix(&self, w: &[Sym]) -> bool {
        self.lhs_lens
            .iter()
            .any(|&len| len <= w.len() && self.index.contains_key(&w[w.len() - len..]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(names: &[&str], rules: &[(&str, NCPoly)]) -> ReductionSystem {
        let a = Alphabet::new(names);
        let rules = rules
            .iter()
            .map(|(l, r)| Rule { lhs: a.parse_word(l).unwrap(), rhs: r.clone() })
            .collect();
        ReductionSystem::new(a, rules).unwrap()
    }

    #[test]
    fn commutation_rule_is_confluent() {
        // xy -> yx is not decreasing when x < y; orient as yx -> xy.
        let s = sys(&["x", "y"], &[("yx", NCPoly::word(vec![0, 1]))]);
        assert!(s.check_confluence(10).is_confluent());
        let p = NCPoly::word(vec![1, 1, 0, 0]);
        assert_eq!(s.nf(&p), NCPoly::word(vec![0, 0, 1, 1]));
    }

    #[test]
    fn increasing_rule_rejected() {
        let a = Alphabet::new(&["x", "y"]);
        let r = Rule { lhs: vec![0, 1], rhs: NCPoly::word(vec![1, 0]) };
        assert!(matches!(ReductionSystem::new(a, vec![r]), Err(RewriteError::NotDecreasing { .. })));
    }

    #[test]
    fn empty_system_basis() {
        let s = sys(&["x"], &[]);
        assert_eq!(s.enumerate_basis(2), vec![vec![], vec![0], vec![0, 0]]);
    }

    #[test]
    fn non_confluent_pair_detected() {
        // xx -> x and xx -> 0 cannot both hold; use xy -> x, yz -> z on xyz.
        let s = sys(&["x", "y", "z"], &[("xy", NCPoly::zero()), ("yz", NCPoly::word(vec![0]))]);
        let rep = s.check_confluence(10);
        assert_eq!(rep.overlaps_checked, 1);
        assert!(!rep.is_confluent());
    }

    #[test]
    fn weight_zero_symbols_must_be_last() {
        let a = Alphabet::new(&["c", "a"]);
        assert!(ReductionSystem::with_weights(a, vec![0, 1], vec![0, 1], vec![]).is_err());
    }

    #[test]
    fn parse_and_show_words() {
        let a = Alphabet::new(&["phi", "psi", "gamma"]);
        let w = a.parse_word("phi psi gamma").unwrap();
        assert_eq!(w, vec![0, 1, 2]);
        assert_eq!(a.show_word(&w), "phi psi gamma");
        assert_eq!(a.parse_word("1").unwrap(), Vec::<Sym>::new());
    }
}
