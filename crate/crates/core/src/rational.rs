use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::Error;

/// An approximation factor `num/den >= 1`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::InvalidArguments("zero denominator".into()));
        }
        if num < den {
            return Err(Error::InvalidArguments(format!(
                "approximation factor {num}/{den} is below 1"
            )));
        }
        let g = num.gcd(&den);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// `a / self <= b`, decided by cross-multiplication.
    pub fn ratio_within(self, a: usize, b: usize) -> bool {
        a as u128 * self.den as u128 <= b as u128 * self.num as u128
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `p/q` or a bare integer `p`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArguments(format!("malformed rational {s:?}"));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: u64 = p.parse().map_err(|_| bad())?;
        let q: u64 = q.parse().map_err(|_| bad())?;
        Rational::new(p, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_orders() {
        let r = Rational::new(6, 4).unwrap();
        assert_eq!((r.num(), r.den()), (3, 2));
        assert!(Rational::ONE < r);
        assert_eq!("3/2".parse::<Rational>().unwrap(), r);
        assert_eq!("2".parse::<Rational>().unwrap(), Rational::new(2, 1).unwrap());
        assert_eq!(r.to_string(), "3/2");
    }

    #[test]
    fn rejects_below_one() {
        assert!(Rational::new(1, 2).is_err());
        assert!(Rational::new(1, 0).is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn exact_boundary() {
        let r = Rational::new(3, 2).unwrap();
        assert!(r.ratio_within(3, 2));
        assert!(!r.ratio_within(4, 2));
    }
}
