//! Parser for tensor expressions.
//!
//! ```text
//! expr  := sign? term (('+' | '-') term)*  |  '0'
//! term  := (coeff '*'?)? basis
//! basis := 'e(' int ',' int ',' int ')'  |  'e' digit digit digit
//! coeff := int | int '/' int
//! ```
//!
//! Whitespace is ignored. The compact `eIJK` form takes one digit per index.

use num_bigint::BigInt;
use num_traits::One;

use super::tensor::SkewTensor;
use crate::error::{Error, Result};
use crate::exact::Rat;

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), pos: 0, src }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |(o, _)| *o)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.offset(), msg: msg.into() })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.err(format!("expected '{want}', found '{c}'")),
            None => self.err(format!("expected '{want}', found end of input")),
        }
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        Ok(self.chars[start..self.pos].iter().map(|(_, c)| c).collect())
    }

    fn index(&mut self) -> Result<usize> {
        let s = self.digits()?;
        s.parse().or_else(|_| self.err("index too large"))
    }

    fn coefficient(&mut self) -> Result<Rat> {
        let num: BigInt = self.digits()?.parse().expect("digits only");
        if self.peek() == Some('/') {
            self.pos += 1;
            let den: BigInt = self.digits()?.parse().expect("digits only");
            if den == BigInt::from(0) {
                return self.err("zero denominator");
            }
            return Ok(Rat::new(num, den));
        }
        Ok(Rat::from_integer(num))
    }

    fn basis(&mut self) -> Result<(usize, usize, usize)> {
        self.expect('e')?;
        if self.peek() == Some('(') {
            self.pos += 1;
            let i = self.index()?;
            self.expect(',')?;
            let j = self.index()?;
            self.expect(',')?;
            let k = self.index()?;
            self.expect(')')?;
            return Ok((i, j, k));
        }
        let mut idx = [0usize; 3];
        for slot in &mut idx {
            match self.bump() {
                Some(c) if c.is_ascii_digit() => *slot = c.to_digit(10).unwrap() as usize,
                _ => {
                    self.pos -= 1;
                    return self.err("expected three index digits after 'e'");
                }
            }
        }
        Ok((idx[0], idx[1], idx[2]))
    }
}

/// Parses an expression such as `e(1,2,7) + 2*e(3,4,8) - e367` for signature `(m, n)`.
pub fn parse_tensor(src: &str, m: usize, n: usize) -> Result<SkewTensor> {
    let mut cur = Cursor::new(src);
    let mut out = SkewTensor::zero(m, n);
    if cur.chars.len() == 1 && cur.peek() == Some('0') {
        return Ok(out);
    }
    if cur.peek().is_none() {
        return cur.err("empty expression");
    }
    let mut first = true;
    while cur.peek().is_some() {
        let mut sign = Rat::one();
        match cur.peek() {
            Some('+') => {
                cur.pos += 1;
            }
            Some('-') => {
                cur.pos += 1;
                sign = -sign;
            }
            _ if first => {}
            Some(c) => return cur.err(format!("expected '+' or '-', found '{c}'")),
            None => unreachable!(),
        }
        first = false;
        let coeff = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = cur.coefficient()?;
            if cur.peek() == Some('*') {
                cur.pos += 1;
            }
            c
        } else {
            Rat::one()
        };
        let at = cur.offset();
        let (i, j, k) = cur.basis()?;
        out.add_term(i, j, k, sign * coeff).map_err(|e| match e {
            Error::IndexRange(msg) => Error::Parse { offset: at, msg },
            other => other,
        })?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn grammar_and_compact_forms_agree() {
        let a = parse_tensor("e(1,3,8)+e(1,4,7)+e(1,5,6)-e(2,3,7)+e(2,4,8)+e(3,4,6)", 5, 3).unwrap();
        let b = parse_tensor("e138 +e147 +e156 -e237 +e248 +e346", 5, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.term_count(), 6);
    }

    #[test]
    fn swapped_indices_flip_sign() {
        assert_eq!(parse_tensor("e(3,1,8)", 5, 3).unwrap(), parse_tensor("-e(1,3,8)", 5, 3).unwrap());
    }

    #[test]
    fn coefficients() {
        let e = parse_tensor("2*e(2,3,6)+2*e(2,4,8)", 5, 3).unwrap();
        assert!(e.terms().all(|(_, c)| *c == rat(2)));
        let f = parse_tensor("3/2 e126 - 1/2*e126", 5, 3).unwrap();
        assert_eq!(f, parse_tensor("e126", 5, 3).unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(parse_tensor("e(1,1,8)", 5, 3), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_tensor("e126+e(1,2,5)", 5, 3), Err(Error::Parse { offset: 5, .. })));
        assert!(matches!(parse_tensor("e12", 5, 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_tensor("e126 e127", 5, 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_tensor("", 5, 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_tensor("1/0*e126", 5, 3), Err(Error::Parse { .. })));
    }

    #[test]
    fn zero_expression() {
        assert!(parse_tensor("0", 4, 4).unwrap().is_zero());
    }
}
