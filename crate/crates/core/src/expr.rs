//! Text syntax for multivector fields.
//!
//! ```text
//! expr      := term (("+" | "-") term)*
//! term      := "-"? factor ("*" factor)*
//! factor    := rational | monomial | wedgeblock
//! rational  := integer ("/" posint)?
//! monomial  := ("x" | "y" | "z") ("^" nat)?
//! wedgeblock:= gen ("^" gen)*
//! gen       := "dx" | "dy" | "dz"
//! ```
//!
//! `dx`, `dy`, `dz` are the coordinate *vector fields* `∂x`, `∂y`, `∂z`.
//! `^` is a power after a variable and a wedge between generators. A term
//! holds at most one wedge block and every term must have the same number
//! of generators. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::multivector::{blade_name, blades_of_degree, wedge_sign};
use crate::algebra::polynomial::format_scaled;
use crate::algebra::{Monomial, MultiVector, Polynomial, Rational, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Gen(Var),
    Caret,
    Plus,
    Minus,
    Star,
    Slash,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(text[start..i].parse().unwrap()), start));
                continue;
            }
            b'x' => Tok::Var(Var::X),
            b'y' => Tok::Var(Var::Y),
            b'z' => Tok::Var(Var::Z),
            b'd' => {
                let v = match bytes.get(i + 1) {
                    Some(b'x') => Var::X,
                    Some(b'y') => Var::Y,
                    Some(b'z') => Var::Z,
                    _ => {
                        return Err(Error::Syntax {
                            pos: start,
                            message: "expected dx, dy or dz".into(),
                        })
                    }
                };
                i += 1;
                Tok::Gen(v)
            }
            b'^' => Tok::Caret,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(Error::Syntax {
                    pos: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

struct Term {
    coeff: Rational,
    mono: Monomial,
    gens: Vec<Var>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<MultiVector> {
        let mut acc: Option<MultiVector> = None;
        let mut negate = false;
        loop {
            let term = self.term()?;
            let value = term_value(&term, negate);
            acc = Some(match acc {
                None => value,
                Some(prev) if prev.degree() == value.degree() => &prev + &value,
                Some(prev) => {
                    return Err(Error::MixedDegree {
                        first: prev.degree(),
                        second: value.degree(),
                    });
                }
            });
            match self.peek() {
                Tok::Plus => negate = false,
                Tok::Minus => negate = true,
                Tok::End => break,
                _ => return self.syntax("expected `+`, `-` or end of input"),
            }
            self.bump();
        }
        Ok(acc.expect("at least one term"))
    }

    fn term(&mut self) -> Result<Term> {
        let mut term = Term {
            coeff: Rational::one(),
            mono: Monomial::ONE,
            gens: Vec::new(),
        };
        if *self.peek() == Tok::Minus {
            self.bump();
            term.coeff = -term.coeff;
        }
        let mut seen_block = false;
        loop {
            match self.peek().clone() {
                Tok::Num(n) => {
                    self.bump();
                    let mut value = Rational::from_integer(n);
                    if *self.peek() == Tok::Slash {
                        self.bump();
                        let pos = self.pos();
                        match self.bump() {
                            Tok::Num(d) if d.is_zero() => return Err(Error::ZeroDenominator { pos }),
                            Tok::Num(d) => value /= Rational::from_integer(d),
                            _ => {
                                return Err(Error::Syntax {
                                    pos,
                                    message: "expected a positive integer denominator".into(),
                                })
                            }
                        }
                    }
                    term.coeff *= value;
                }
                Tok::Var(v) => {
                    self.bump();
                    let mut e = 1u32;
                    if *self.peek() == Tok::Caret {
                        self.bump();
                        let pos = self.pos();
                        match self.bump() {
                            Tok::Num(n) => {
                                e = u32::try_from(n).map_err(|_| Error::Syntax {
                                    pos,
                                    message: "exponent too large".into(),
                                })?;
                            }
                            _ => {
                                return Err(Error::Syntax {
                                    pos,
                                    message: "expected an exponent".into(),
                                })
                            }
                        }
                    }
                    term.mono.exps[v.index()] += e;
                }
                Tok::Gen(v) => {
                    if seen_block {
                        return self.syntax("at most one wedge block per term");
                    }
                    seen_block = true;
                    self.bump();
                    term.gens.push(v);
                    while *self.peek() == Tok::Caret {
                        self.bump();
                        match self.bump() {
                            Tok::Gen(w) => term.gens.push(w),
                            _ => {
                                self.at -= 1;
                                return self.syntax("expected dx, dy or dz after `^`");
                            }
                        }
                    }
                }
                _ => return self.syntax("expected a number, a variable or a generator"),
            }
            if *self.peek() == Tok::Star {
                self.bump();
            } else {
                break;
            }
        }
        Ok(term)
    }
}

fn term_value(term: &Term, negate: bool) -> MultiVector {
    let degree = term.gens.len();
    let mut coeff = term.coeff.clone();
    if negate {
        coeff = -coeff;
    }
    let mut mask = 0u8;
    let mut sign = 1i8;
    for g in &term.gens {
        let bit = 1u8 << g.index();
        if mask & bit != 0 || degree > 3 {
            return MultiVector::zero(degree);
        }
        sign *= wedge_sign(mask, bit);
        mask |= bit;
    }
    if sign < 0 {
        coeff = -coeff;
    }
    MultiVector::blade(mask, Polynomial::term(coeff, term.mono))
}

/// Parses an expression into a multivector.
pub fn parse_multivector(text: &str) -> Result<MultiVector> {
    let toks = tokenize(text)?;
    if toks.len() == 1 {
        return Err(Error::Syntax {
            pos: 0,
            message: "empty expression".into(),
        });
    }
    let mut p = Parser { toks, at: 0 };
    p.expr()
}

/// Parses an expression that must be a function.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let v = parse_multivector(text)?;
    if v.degree() != 0 {
        return Err(Error::MixedDegree {
            first: 0,
            second: v.degree(),
        });
    }
    Ok(v.into_components().pop().unwrap())
}

/// Canonical text: blades in order `dx, dy, dz` / `dx^dy, dx^dz, dy^dz`,
/// monomials in monomial order within a blade, reduced fractions, and
/// generators ascending with the orientation sign moved into the coefficient.
pub fn format_multivector(v: &MultiVector) -> String {
    let mut out = String::new();
    for &mask in blades_of_degree(v.degree()) {
        let coeff = v.blade_coeff(mask);
        for (m, c) in coeff.sorted_terms() {
            let mut parts = Vec::new();
            if m != Monomial::ONE {
                parts.push(m.to_string());
            }
            if mask != 0 {
                parts.push(blade_name(mask));
            }
            let body = (!parts.is_empty()).then(|| parts.join("*"));
            if out.is_empty() {
                out.push_str(&format_scaled(&c, body.as_deref()));
            } else if c.is_negative() {
                out.push_str(" - ");
                out.push_str(&format_scaled(&-c, body.as_deref()));
            } else {
                out.push_str(" + ");
                out.push_str(&format_scaled(&c, body.as_deref()));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
