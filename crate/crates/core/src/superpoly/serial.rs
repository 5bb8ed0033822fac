//! Text and JSON forms of [`SuperPoly`].
//!
//! Text: terms in descending graded order joined by ` + ` / ` - `, each term
//! `coeff*var^exp*...` with unit coefficients and unit exponents omitted.
//! JSON: `[{"coeff": "num/den", "monomial": [["var", exp], ...]}, ...]` in
//! the same order. Both forms list factors in canonical order, so printing
//! then parsing reproduces the polynomial exactly.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::alphabet::{Alphabet, VarId};
use super::poly::SuperPoly;
use super::rational::ExactRational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub monomial: Vec<(String, u32)>,
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let alpha = self.alphabet();
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let mag = if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                c.abs()
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
                c.abs()
            };
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            for (k, (v, e)) in m.factors().enumerate() {
                if k > 0 {
                    write!(f, "*")?;
                }
                write!(f, "{}", alpha.name(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.pos < self.s.len() && f(self.s[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).expect("ascii")
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }
}

impl SuperPoly {
    /// Parses the text form. Odd factors may appear in any order; the sign
    /// of the reordering is applied.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<SuperPoly> {
        let mut cur = Cursor {
            s: text.as_bytes(),
            pos: 0,
        };
        let mut out = SuperPoly::zero(alphabet);
        let mut first = true;
        loop {
            let mut negative = false;
            match cur.peek() {
                None if first => return Err(cur.err("empty input")),
                None => break,
                Some(b'+') if !first => cur.pos += 1,
                Some(b'-') => {
                    negative = true;
                    cur.pos += 1;
                }
                Some(_) if first => {}
                Some(_) => return Err(cur.err("expected `+` or `-`")),
            }
            first = false;
            let mut coeff = ExactRational::one();
            let mut factors: Vec<(VarId, u32)> = Vec::new();
            loop {
                match cur.peek() {
                    Some(c) if c.is_ascii_digit() => {
                        let num = cur.take_while(|c| c.is_ascii_digit() || c == b'/');
                        coeff = &coeff * &num.parse::<ExactRational>()?;
                    }
                    Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                        let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
                        let v = alphabet.var(name)?;
                        let mut e = 1u32;
                        if cur.peek() == Some(b'^') {
                            cur.pos += 1;
                            cur.skip_ws();
                            let digits = cur.take_while(|c| c.is_ascii_digit());
                            e = digits.parse().map_err(|_| cur.err("bad exponent"))?;
                        }
                        factors.push((v, e));
                    }
                    _ => return Err(cur.err("expected a factor")),
                }
                if cur.peek() == Some(b'*') {
                    cur.pos += 1;
                } else {
                    break;
                }
            }
            if negative {
                coeff = -coeff;
            }
            let term = SuperPoly::from_factors(alphabet, coeff, &factors);
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        let alpha = self.alphabet();
        self.terms()
            .rev()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                monomial: m
                    .factors()
                    .map(|(v, e)| (alpha.name(v).to_string(), e))
                    .collect(),
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_terms()).expect("serializable")
    }

    pub fn from_json_terms(alphabet: &Arc<Alphabet>, terms: &[JsonTerm]) -> Result<SuperPoly> {
        let mut out = SuperPoly::zero(alphabet);
        for t in terms {
            let c: ExactRational = t.coeff.parse()?;
            let factors = t
                .monomial
                .iter()
                .map(|(name, e)| Ok((alphabet.var(name)?, *e)))
                .collect::<Result<Vec<_>>>()?;
            out = &out + &SuperPoly::from_factors(alphabet, c, &factors);
        }
        Ok(out)
    }

    pub fn from_json(alphabet: &Arc<Alphabet>, value: &serde_json::Value) -> Result<SuperPoly> {
        let terms: Vec<JsonTerm> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        SuperPoly::from_json_terms(alphabet, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpoly::VarSpec;

    fn alpha() -> Arc<Alphabet> {
        Alphabet::new(vec![
            VarSpec::even("a0", 1, 0),
            VarSpec::even("c1", 2, 0),
            VarSpec::odd("phi0", 1, 0),
            VarSpec::odd("psi0", 1, 0),
        ])
        .unwrap()
    }

    #[test]
    fn text_round_trip() {
        let a = alpha();
        let p = SuperPoly::parse(&a, "3/2*a0^2*c1 - phi0*psi0 + 7 - a0").unwrap();
        let s = p.to_string();
        assert_eq!(SuperPoly::parse(&a, &s).unwrap(), p);
        assert_eq!(SuperPoly::parse(&a, "0").unwrap(), SuperPoly::zero(&a));
        assert_eq!(SuperPoly::zero(&a).to_string(), "0");
    }

    #[test]
    fn out_of_order_odd_factors_pick_up_sign() {
        let a = alpha();
        let p = SuperPoly::parse(&a, "psi0*phi0").unwrap();
        assert_eq!(p.to_string(), "-phi0*psi0");
        assert!(SuperPoly::parse(&a, "phi0*phi0").unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let a = alpha();
        let p = SuperPoly::parse(&a, "-1/3*a0*phi0 + c1^4").unwrap();
        let j = p.to_json();
        assert_eq!(
            j,
            serde_json::json!([
                {"coeff": "1", "monomial": [["c1", 4]]},
                {"coeff": "-1/3", "monomial": [["a0", 1], ["phi0", 1]]}
            ])
        );
        assert_eq!(SuperPoly::from_json(&a, &j).unwrap(), p);
    }

    #[test]
    fn parse_errors() {
        let a = alpha();
        assert!(SuperPoly::parse(&a, "").is_err());
        assert!(SuperPoly::parse(&a, "a0 +").is_err());
        assert!(SuperPoly::parse(&a, "x1").is_err());
        assert!(SuperPoly::parse(&a, "a0 a0").is_err());
    }
}
