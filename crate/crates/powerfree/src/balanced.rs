//! Balanced ternary: base-3 notation with digit set {-1, 0, +1}.
//!
//! Every integer has a unique canonical representation (no leading zeros;
//! zero itself is the empty digit string). Digits render as 'T', '0', '1'
//! for -1, 0, +1, so 5 = 9 - 3 - 1 is written "1TT".

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A single balanced-ternary digit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Digit {
    Minus,
    Zero,
    Plus,
}

impl Digit {
    pub fn value(self) -> i64 {
        match self {
            Digit::Minus => -1,
            Digit::Zero => 0,
            Digit::Plus => 1,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Digit::Minus => 'T',
            Digit::Zero => '0',
            Digit::Plus => '1',
        }
    }

    pub fn from_char(c: char) -> Result<Digit, Error> {
        match c {
            'T' => Ok(Digit::Minus),
            '0' => Ok(Digit::Zero),
            '1' => Ok(Digit::Plus),
            _ => Err(Error::InvalidDigit(c)),
        }
    }
}

/// Canonical balanced-ternary digits, most significant first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BalancedTernaryDigits {
    digits: Vec<Digit>,
}

impl BalancedTernaryDigits {
    /// Canonicalizes an arbitrary digit sequence by dropping leading zeros;
    /// the represented value is unchanged.
    pub fn from_digits(digits: Vec<Digit>) -> BalancedTernaryDigits {
        let first_nonzero = digits.iter().position(|&d| d != Digit::Zero);
        match first_nonzero {
            Some(k) => BalancedTernaryDigits { digits: digits[k..].to_vec() },
            None => BalancedTernaryDigits { digits: Vec::new() },
        }
    }

    /// Canonical digits of `value`; zero maps to the empty sequence.
    pub fn from_integer(value: i64) -> BalancedTernaryDigits {
        let mut v = value;
        let mut digits = Vec::new();
        while v != 0 {
            // Euclidean remainder in {0, 1, 2}; remainder 2 stands for
            // digit -1 with a carry.
            match v.rem_euclid(3) {
                0 => {
                    digits.push(Digit::Zero);
                    v /= 3;
                }
                1 => {
                    digits.push(Digit::Plus);
                    v = (v - 1) / 3;
                }
                _ => {
                    digits.push(Digit::Minus);
                    v = (v + 1) / 3;
                }
            }
        }
        digits.reverse();
        BalancedTernaryDigits { digits }
    }

    /// The represented integer, usable on canonical and non-canonical input
    /// alike via [`value_of_digits`].
    pub fn value(&self) -> i64 {
        value_of_digits(&self.digits)
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

/// Value of an arbitrary (possibly non-canonical) MSB-first digit sequence.
pub fn value_of_digits(digits: &[Digit]) -> i64 {
    digits.iter().fold(0i64, |acc, d| acc * 3 + d.value())
}

impl fmt::Display for BalancedTernaryDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return f.write_str("0");
        }
        for d in &self.digits {
            write!(f, "{}", d.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for BalancedTernaryDigits {
    type Err = Error;

    fn from_str(s: &str) -> Result<BalancedTernaryDigits, Error> {
        let digits = s.chars().map(Digit::from_char).collect::<Result<Vec<_>, _>>()?;
        Ok(BalancedTernaryDigits::from_digits(digits))
    }
}
