//! A small expression reader for polynomials, used by tests and the CLI.
//!
//! Grammar: sums and products of integers, `y`, `h`, `a1..a8` (lattice
//! variables in root coordinates for cohomology) and `e(c1,..,cr)` standing for
//! `e^{c1 alpha_1 + ... + cr alpha_r}`. Powers use `^` with an integer exponent;
//! juxtaposition multiplies.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{to_zpoly, Mono, QPoly, ZPoly, LANE_H, LANE_Y};
use crate::error::{Error, Result};
use crate::lie::RootSystem;

/// Parses into a Laurent polynomial in `e^lambda` and `y`.
pub fn parse_laurent(rs: &RootSystem, s: &str) -> Result<ZPoly> {
    let p = Parser::new(s, Some(rs)).parse()?;
    to_zpoly(&p).ok_or_else(|| Error::Parse(format!("non-integral coefficient in `{s}`")))
}

/// Parses into a rational polynomial in `a1..ar`, `h` and `y`.
pub fn parse_coh(s: &str) -> Result<QPoly> {
    Parser::new(s, None).parse()
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    rs: Option<&'a RootSystem>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, rs: Option<&'a RootSystem>) -> Self {
        Parser {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            rs,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(mut self) -> Result<QPoly> {
        let p = self.sum()?;
        if self.pos != self.chars.len() {
            return Err(self.err("unexpected input"));
        }
        Ok(p)
    }

    fn sum(&mut self) -> Result<QPoly> {
        let mut acc = if self.eat('-') {
            -self.product()?
        } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<QPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let n = self.integer()?;
                if n.is_zero() {
                    return Err(self.err("division by zero"));
                }
                acc = acc.scale(&BigRational::new(BigInt::one(), n));
            } else if matches!(self.peek(), Some(c) if c == '(' || c.is_ascii_alphanumeric()) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<QPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let k = self.integer()?;
            let k: u32 = k.try_into().map_err(|_| self.err("exponent too large"))?;
            if neg {
                // only monomials may be inverted
                if base.len() != 1 || !base.terms()[0].1.is_one() {
                    return Err(self.err("negative power of a non-monomial"));
                }
                let m = base.terms()[0].0;
                return Ok(QPoly::mono(Mono::ONE - m).pow(k));
            }
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn signed_int(&mut self) -> Result<i32> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let n = self.integer()?;
        let n: i32 = n.try_into().map_err(|_| self.err("integer too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<QPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.sum()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                Ok(QPoly::constant(BigRational::from_integer(self.integer()?)))
            }
            Some('y') => {
                self.pos += 1;
                Ok(QPoly::mono(Mono::lane(LANE_Y, 1)))
            }
            Some('h') => {
                self.pos += 1;
                Ok(QPoly::mono(Mono::lane(LANE_H, 1)))
            }
            Some('a') => {
                self.pos += 1;
                let k = self.integer()?;
                let k: usize = k.try_into().map_err(|_| self.err("bad index"))?;
                if k == 0 || k > crate::lie::MAX_RANK {
                    return Err(self.err("variable index out of range"));
                }
                Ok(QPoly::mono(Mono::lane(k - 1, 1)))
            }
            Some('e') => {
                self.pos += 1;
                let rs = self
                    .rs
                    .ok_or_else(|| self.err("`e(..)` needs a root system"))?;
                if !self.eat('(') {
                    return Err(self.err("expected `(` after `e`"));
                }
                let mut c = Vec::new();
                loop {
                    c.push(self.signed_int()?);
                    if self.eat(')') {
                        break;
                    }
                    if !self.eat(',') {
                        return Err(self.err("expected `,` or `)`"));
                    }
                }
                if c.len() != rs.rank() {
                    return Err(self.err("wrong number of root coordinates"));
                }
                Ok(QPoly::mono(Mono::from_weight(&rs.from_root_coords(&c))))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::{int, one_plus_ye, y};
    use crate::lie::LieType;

    #[test]
    fn reads_products_and_roots() {
        let rs = RootSystem::new(LieType::A, 2).unwrap();
        let a1 = rs.simple_root(0);
        let a2 = rs.simple_root(1);
        let p = parse_laurent(&rs, "(1+e(-1,0)y)(1+e(-1,-1)*y)").unwrap();
        assert_eq!(p, &one_plus_ye(&-a1) * &one_plus_ye(&-(a1 + a2)));
        let q = parse_laurent(&rs, "-(1 + 2y)^2").unwrap();
        assert_eq!(q, -(&int(1) + &(&int(2) * &y())).pow(2));
        assert!(parse_laurent(&rs, "e(1)").is_err());
        assert!(parse_laurent(&rs, "1/2").is_err());
    }

    #[test]
    fn reads_cohomology() {
        let p = parse_coh("h - a1 + 1/2 a2^2").unwrap();
        assert_eq!(p.len(), 3);
        assert!(parse_coh("a0").is_err());
    }
}
