//! Coefficient rings: the integers and the residue rings `Z/m`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for `Z/m`. Products of two residues must fit in `u128`
/// with room to spare, and anything bigger is far outside desk scale anyway.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    IntegersMod(u64),
}

impl Ring {
    pub fn integers() -> Self {
        Ring::Integers
    }

    pub fn modulo(m: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&m) {
            return Err(Error::InvalidRing(format!(
                "modulus must lie in [2, {MAX_MODULUS}], got {m}"
            )));
        }
        Ok(Ring::IntegersMod(m))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Ring::Integers => None,
            Ring::IntegersMod(m) => Some(*m),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ring::IntegersMod(_))
    }

    /// Canonical representative: unchanged over `Z`, the residue in `[0, m)` over `Z/m`.
    pub fn reduce(&self, x: &BigInt) -> BigInt {
        match self {
            Ring::Integers => x.clone(),
            Ring::IntegersMod(m) => x.mod_floor(&BigInt::from(*m)),
        }
    }

    pub fn is_unit(&self, x: &BigInt) -> bool {
        match self {
            Ring::Integers => x.abs().is_one(),
            Ring::IntegersMod(m) => {
                let r = x.mod_floor(&BigInt::from(*m));
                !r.is_zero() && r.gcd(&BigInt::from(*m)).is_one()
            }
        }
    }

    /// Residue as a machine word. Only meaningful over `Z/m`.
    pub(crate) fn residue(&self, x: &BigInt) -> u64 {
        let m = self.modulus().expect("residue taken over Z");
        let r = x.mod_floor(&BigInt::from(m));
        u64::try_from(r).expect("residue fits in u64")
    }

    /// Whether `R` is a field, i.e. `Z/p` with `p` prime.
    pub fn is_field(&self) -> bool {
        match self {
            Ring::Integers => false,
            Ring::IntegersMod(m) => is_prime(*m),
        }
    }
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::IntegersMod(m) => write!(f, "Zmod:{m}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    /// Accepts `Z` and `Zmod:m`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(Ring::Integers);
        }
        if let Some(m) = s.strip_prefix("Zmod:") {
            let m: u64 = m
                .parse()
                .map_err(|_| Error::InvalidRing(format!("bad modulus in {s:?}")))?;
            return Ring::modulo(m);
        }
        Err(Error::InvalidRing(format!(
            "expected `Z` or `Zmod:<m>`, got {s:?}"
        )))
    }
}

pub(crate) fn sign_power(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("Z".parse::<Ring>().unwrap(), Ring::Integers);
        assert_eq!("Zmod:4".parse::<Ring>().unwrap(), Ring::IntegersMod(4));
        assert!("Zmod:1".parse::<Ring>().is_err());
        assert!("Q".parse::<Ring>().is_err());
        assert_eq!(Ring::IntegersMod(6).to_string(), "Zmod:6");
    }

    #[test]
    fn units_and_fields() {
        let z4 = Ring::IntegersMod(4);
        assert!(z4.is_unit(&BigInt::from(3)));
        assert!(!z4.is_unit(&BigInt::from(2)));
        assert!(Ring::Integers.is_unit(&BigInt::from(-1)));
        assert!(Ring::IntegersMod(5).is_field());
        assert!(!z4.is_field());
        assert_eq!(z4.reduce(&BigInt::from(-1)), BigInt::from(3));
    }
}
