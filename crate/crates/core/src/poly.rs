//! Exact Laurent polynomials in `q` with integer coefficients.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Sparse Laurent polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    /// `c·q^k`.
    pub fn monomial(c: i64, k: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(c, k);
        p
    }

    pub fn add_term(&mut self, c: i64, k: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(k).or_insert(0);
        *e = e.checked_add(c).expect("coefficient overflow");
        if *e == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Substitutes `q ↦ q^k`.
    pub fn subs_power(&self, k: i64) -> LaurentPoly {
        assert!(k != 0, "substitution exponent must be nonzero");
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e * k, c)).collect() }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    /// Substitutes `q ↦ q^{num/den}`; panics when an exponent does not divide.
    pub fn subs_rational(&self, num: i64, den: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e, &c) in &self.terms {
            assert!((e * num) % den == 0, "exponent {} not divisible by {}", e * num, den);
            out.add_term(c, e * num / den);
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&k, &a) in &self.terms {
            out.add_term(a.checked_mul(c).expect("coefficient overflow"), k);
        }
        out
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// JSON-friendly map from exponent to coefficient.
    pub fn to_map(&self) -> BTreeMap<i64, i64> {
        self.terms.clone()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&k, &c) in &self.terms {
            let (sign, a) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            match (a, k) {
                (a, 0) => write!(f, "{}", a)?,
                (1, 1) => f.write_str("q")?,
                (1, k) => write!(f, "q^{}", k)?,
                (a, 1) => write!(f, "{}*q", a)?,
                (a, k) => write!(f, "{}*q^{}", a, k)?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, &c) in &rhs.terms {
            self.add_term(c, k);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, &c) in &self.terms {
            for (&b, &d) in &rhs.terms {
                out.add_term(c.checked_mul(d).expect("coefficient overflow"), a + b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_arith() {
        let q = LaurentPoly::monomial(1, 1);
        let p = &(&q * &q) + &q;
        assert_eq!(p.to_string(), "q + q^2");
        assert_eq!((&p - &p).to_string(), "0");
        assert_eq!(p.subs_power(-1).to_string(), "q^-2 + q^-1");
        assert_eq!(LaurentPoly::monomial(-3, 0).to_string(), "-3");
        assert_eq!(p.at_one(), 2);
    }
}
