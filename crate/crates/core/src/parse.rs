//! Text syntax for ordinal terms.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr := sum
//! sum  := prod ("+" prod)*
//! prod := pow ("*" pow)*
//! pow  := atom ("^" pow)?          // right-associative
//! atom := natural | "w" | "w_" natural | name | "(" expr ")"
//! ```
//!
//! `w` is ω, `w_k` is the k-th uncountable regular cardinal Ω_k (1 ≤ k ≤ 64),
//! and `name` resolves against the caller-supplied bindings (used by the
//! interactive shell). Operators evaluate with ordinal semantics as they
//! parse, so `1 + w` yields `w`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use thiserror::Error;

use crate::arith::{add, mul, pow};
use crate::term::{OrdinalTerm, MAX_ATOM_INDEX};

/// Default maximum nesting depth (parentheses and exponent towers).
pub const DEFAULT_MAX_DEPTH: usize = 32;

/// A parse failure, pointing at the character offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseDiagnostic {
    pub position: usize,
    pub message: String,
}

/// Knobs for [`parse_with`]: nesting depth and name bindings.
#[derive(Debug, Clone)]
pub struct ParseOptions {
    pub max_depth: usize,
    pub bindings: BTreeMap<String, OrdinalTerm>,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            max_depth: DEFAULT_MAX_DEPTH,
            bindings: BTreeMap::new(),
        }
    }
}

/// Parses an expression with default options.
pub fn parse(input: &str) -> Result<OrdinalTerm, ParseDiagnostic> {
    parse_with(input, &ParseOptions::default())
}

/// Parses an expression, resolving free names against `opts.bindings`.
pub fn parse_with(input: &str, opts: &ParseOptions) -> Result<OrdinalTerm, ParseDiagnostic> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
        opts,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("expected an expression"));
    }
    let value = p.parse_sum(0)?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected character '{c}'")));
    }
    Ok(value)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    opts: &'a ParseOptions,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().map(|c| c.is_whitespace()).unwrap_or(false) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseDiagnostic {
        ParseDiagnostic {
            position: self.pos,
            message: message.into(),
        }
    }

    fn check_depth(&self, depth: usize) -> Result<(), ParseDiagnostic> {
        if depth > self.opts.max_depth {
            Err(self.error(format!(
                "expression nesting exceeds the depth limit of {}",
                self.opts.max_depth
            )))
        } else {
            Ok(())
        }
    }

    fn parse_sum(&mut self, depth: usize) -> Result<OrdinalTerm, ParseDiagnostic> {
        let mut acc = self.parse_prod(depth)?;
        while self.eat('+') {
            let rhs = self.parse_prod(depth)?;
            acc = add(&acc, &rhs);
        }
        Ok(acc)
    }

    fn parse_prod(&mut self, depth: usize) -> Result<OrdinalTerm, ParseDiagnostic> {
        let mut acc = self.parse_pow(depth)?;
        while self.eat('*') {
            let rhs = self.parse_pow(depth)?;
            acc = mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn parse_pow(&mut self, depth: usize) -> Result<OrdinalTerm, ParseDiagnostic> {
        let base = self.parse_atom(depth)?;
        if self.eat('^') {
            self.check_depth(depth + 1)?;
            let exp = self.parse_pow(depth + 1)?;
            Ok(pow(&base, &exp))
        } else {
            Ok(base)
        }
    }

    fn parse_atom(&mut self, depth: usize) -> Result<OrdinalTerm, ParseDiagnostic> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error("expected a number, 'w', 'w_k', a name, or '('")),
            Some('(') => {
                self.bump();
                self.check_depth(depth + 1)?;
                let inner = self.parse_sum(depth + 1)?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let value = digits
                    .parse::<BigUint>()
                    .expect("a run of ASCII digits is a valid natural");
                Ok(OrdinalTerm::nat_big(value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                self.resolve_name(&name, start)
            }
            Some(c) => Err(self.error(format!("unexpected character '{c}'"))),
        }
    }

    fn take_while(&mut self, keep: impl Fn(char) -> bool) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if keep(c) {
                out.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        out
    }

    fn resolve_name(&self, name: &str, start: usize) -> Result<OrdinalTerm, ParseDiagnostic> {
        if name == "w" {
            return Ok(OrdinalTerm::omega());
        }
        if let Some(rest) = name.strip_prefix("w_") {
            if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
                let index: u32 = rest.parse().unwrap_or(u32::MAX);
                return OrdinalTerm::atom(index).ok_or_else(|| ParseDiagnostic {
                    position: start,
                    message: format!(
                        "atom index must be between 1 and {MAX_ATOM_INDEX}, got {rest}"
                    ),
                });
            }
        }
        match self.opts.bindings.get(name) {
            Some(t) => Ok(t.clone()),
            None => Err(ParseDiagnostic {
                position: start,
                message: format!("unknown name '{name}'"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(s: &str) {
        let t = parse(s).unwrap();
        assert_eq!(t.render(), s, "render should reproduce canonical input");
        assert_eq!(
            parse(&t.render()).unwrap(),
            t,
            "render must re-parse to the same term"
        );
    }

    #[test]
    fn canonical_round_trips() {
        for s in [
            "0",
            "42",
            "w",
            "w + 1",
            "w*3 + 5",
            "w^2",
            "w^w*2 + w*3 + 5",
            "w_1",
            "w_64",
            "w_2 + w^(w_1 + 1) + w_1*4 + w^2",
            "w^(w^w)",
            "w^(w + 1)*7",
        ] {
            roundtrip(s);
        }
    }

    #[test]
    fn evaluation_uses_ordinal_semantics() {
        assert_eq!(parse("1 + w").unwrap(), parse("w").unwrap());
        assert_eq!(parse("2*w").unwrap(), parse("w").unwrap());
        assert_eq!(parse("(w + 1)*2").unwrap().render(), "w*2 + 1");
        assert_eq!(parse("2^(w + 3)").unwrap().render(), "w*8");
        assert_eq!(parse("w^w_1").unwrap().render(), "w_1");
    }

    #[test]
    fn power_is_right_associative() {
        // 2^2^3 = 2^8 = 256
        assert_eq!(parse("2^2^3").unwrap(), OrdinalTerm::nat(256));
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse("w^2+w*3  +5").unwrap(),
            parse(" w^2 + w*3 + 5 ").unwrap()
        );
    }

    #[test]
    fn rejects_bad_atom_indices() {
        let err = parse("w_0").unwrap_err();
        assert_eq!(err.position, 0);
        assert!(err.message.contains("between 1 and 64"));
        assert!(parse("w_65").is_err());
        assert!(parse("w_99999999999999").is_err());
        assert!(parse("w_64").is_ok());
    }

    #[test]
    fn reports_positions() {
        let err = parse("w + ").unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse("w + %").unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse("w 3").unwrap_err();
        assert_eq!(err.position, 2);
        let err = parse("(w + 1").unwrap_err();
        assert_eq!(err.position, 6);
        assert!(err.message.contains("')'"));
        let err = parse("").unwrap_err();
        assert_eq!(err.position, 0);
    }

    #[test]
    fn unknown_names_are_rejected_unless_bound() {
        let err = parse("alpha + 1").unwrap_err();
        assert_eq!(err.position, 0);
        assert!(err.message.contains("alpha"));

        let mut opts = ParseOptions::default();
        opts.bindings
            .insert("alpha".to_string(), parse("w^2").unwrap());
        assert_eq!(parse_with("alpha + 1", &opts).unwrap().render(), "w^2 + 1");
    }

    #[test]
    fn depth_limit_applies_to_parens_and_towers() {
        let deep_parens = format!("{}w{}", "(".repeat(40), ")".repeat(40));
        let err = parse(&deep_parens).unwrap_err();
        assert!(err.message.contains("depth limit"));

        let tower = vec!["w"; 40].join("^");
        assert!(parse(&tower).unwrap_err().message.contains("depth limit"));

        let opts = ParseOptions {
            max_depth: 64,
            ..Default::default()
        };
        assert!(parse_with(&deep_parens, &opts).is_ok());
    }

    #[test]
    fn large_coefficients_are_exact() {
        let t = parse("w*340282366920938463463374607431768211456 + 1").unwrap();
        assert_eq!(t.render(), "w*340282366920938463463374607431768211456 + 1");
    }
}
