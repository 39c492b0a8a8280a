//! Plain-text presentations.
//!
//! ```text
//! # comment
//! symbols: C D K Y
//! weights: 1 1 1 1        (optional)
//! grading: 0 0 0 1        (optional, defaults to weights)
//! KK -> 1
//! YD -> DY + C
//! phi gamma -> -gamma phi + (1/3) phi phi phi phi
//! ```
//!
//! Coefficients are a JSON scalar object such as `{"re":"1/3","im":"0"}`, a
//! rational literal like `2/3`, or a parenthesized Gaussian literal `(1/2-i)`.

use super::{Alphabet, NCPoly, ReductionSystem, RewriteError, Rule};
use crate::exactalg::Scalar;

/// Splits `s` at top-level `+`/`-` signs, keeping the sign with each piece.
pub(crate) fn split_signed_terms(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let mut prev = ' ';
    for ch in s.chars() {
        match ch {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && prev != '/' {
            if !cur.trim().is_empty() {
                out.push((neg, cur.trim().to_string()));
            }
            cur.clear();
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = ch;
        }
    }
    if !cur.trim().is_empty() {
        out.push((neg, cur.trim().to_string()));
    }
    out
}

/// Splits a leading coefficient off a term; returns `(coefficient, rest)`.
pub(crate) fn split_coeff(term: &str) -> Result<(Scalar, &str), RewriteError> {
    let t = term.trim_start();
    let bad = |m: &str| RewriteError::Parse(format!("{m} in {term:?}"));
    let (c, rest) = if t.starts_with('{') {
        let end = t.find('}').ok_or_else(|| bad("unclosed brace"))?;
        let c: Scalar = serde_json::from_str(&t[..=end]).map_err(|e| bad(&e.to_string()))?;
        (c, &t[end + 1..])
    } else if t.starts_with('(') {
        let end = t.find(')').ok_or_else(|| bad("unclosed parenthesis"))?;
        let c: Scalar = t[1..end].parse().map_err(|_| bad("bad coefficient"))?;
        (c, &t[end + 1..])
    } else {
        let end = t.find(|ch: char| !(ch.is_ascii_digit() || ch == '/')).unwrap_or(t.len());
        if end == 0 {
            return Ok((Scalar::from_int(1), t));
        }
        let c: Scalar = t[..end].parse().map_err(|_| bad("bad coefficient"))?;
        (c, &t[end..])
    };
    let rest = rest.trim_start();
    Ok((c, rest.strip_prefix('*').unwrap_or(rest).trim()))
}

pub fn parse_poly(alphabet: &Alphabet, s: &str) -> Result<NCPoly, RewriteError> {
    let mut p = NCPoly::zero();
    for (neg, term) in split_signed_terms(s) {
        let (mut c, rest) = split_coeff(&term)?;
        if neg {
            c = -c;
        }
        let w = if rest.is_empty() { Vec::new() } else { alphabet.parse_word(rest)? };
        p.add_term(w, &c);
    }
    Ok(p)
}

fn parse_numbers(s: &str) -> Result<Vec<u64>, RewriteError> {
    s.split_whitespace()
        .map(|x| x.parse().map_err(|_| RewriteError::Parse(format!("bad number {x:?}"))))
        .collect()
}

pub fn parse_system(text: &str) -> Result<ReductionSystem, RewriteError> {
    let mut alphabet = None;
    let mut weights = None;
    let mut grading = None;
    let mut rules = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("symbols:") {
            let names: Vec<&str> = rest.split_whitespace().collect();
            alphabet = Some(Alphabet::new(&names));
        } else if let Some(rest) = line.strip_prefix("weights:") {
            weights = Some(parse_numbers(rest)?);
        } else if let Some(rest) = line.strip_prefix("grading:") {
            grading = Some(parse_numbers(rest)?);
        } else if let Some((l, r)) = line.split_once("->") {
            let a = alphabet.as_ref().ok_or_else(|| RewriteError::Parse("rule before symbols line".into()))?;
            rules.push(Rule { lhs: a.parse_word(l)?, rhs: parse_poly(a, r)? });
        } else if line.contains(" = ") {
            // Hopf structure lines are handled by the presentation loader.
            continue;
        } else {
            return Err(RewriteError::Parse(format!("unrecognized line {line:?}")));
        }
    }
    let alphabet = alphabet.ok_or_else(|| RewriteError::Parse("missing symbols line".into()))?;
    let weights = weights.unwrap_or_else(|| vec![1; alphabet.len()]);
    let grading = grading.unwrap_or_else(|| weights.clone());
    ReductionSystem::with_weights(alphabet, weights, grading, rules)
}

/// Inverse of [`parse_system`] up to formatting.
pub fn format_system(sys: &ReductionSystem) -> String {
    let a = sys.alphabet();
    let mut out = format!("symbols: {}\n", a.names().join(" "));
    let ws: Vec<String> = (0..a.len()).map(|i| sys.weight(&[i as u8]).to_string()).collect();
    out.push_str(&format!("weights: {}\n", ws.join(" ")));
    let gs: Vec<String> = sys.grading().iter().map(u64::to_string).collect();
    out.push_str(&format!("grading: {}\n", gs.join(" ")));
    for r in sys.rules() {
        let rhs: Vec<String> = r
            .rhs
            .terms()
            .map(|(w, c)| {
                let js = serde_json::to_string(c).expect("scalar serializes");
                if w.is_empty() {
                    js
                } else {
                    format!("{js} {}", a.show_word(w))
                }
            })
            .collect();
        let rhs = if rhs.is_empty() { "0".to_string() } else { rhs.join(" + ") };
        out.push_str(&format!("{} -> {}\n", a.show_word(&r.lhs), rhs));
    }
    out
}
