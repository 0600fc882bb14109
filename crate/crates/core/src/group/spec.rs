use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::prime_power;
use crate::error::{Error, Result};

/// Matrix group families between Ω and Δ of the classical catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    GL,
    SL,
    GU,
    SU,
    Sp,
    GO,
    SO,
    Omega,
}

/// Witt type of an even-dimensional orthogonal space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::GL,
        Family::SL,
        Family::GU,
        Family::SU,
        Family::Sp,
        Family::GO,
        Family::SO,
        Family::Omega,
    ];

    pub fn is_unitary(self) -> bool {
        matches!(self, Family::GU | Family::SU)
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(self, Family::GO | Family::SO | Family::Omega)
    }

    /// Whether membership requires determinant 1.
    pub fn needs_det_one(self) -> bool {
        matches!(self, Family::SL | Family::SU | Family::SO | Family::Omega)
    }

    pub fn code(self) -> u8 {
        Family::ALL.iter().position(|&f| f == self).unwrap() as u8
    }

    pub fn from_code(c: u8) -> Option<Family> {
        Family::ALL.get(c as usize).copied()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::GL => "GL",
            Family::SL => "SL",
            Family::GU => "GU",
            Family::SU => "SU",
            Family::Sp => "Sp",
            Family::GO => "GO",
            Family::SO => "SO",
            Family::Omega => "Omega",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "gl" => Family::GL,
            "sl" => Family::SL,
            "gu" => Family::GU,
            "su" => Family::SU,
            "sp" => Family::Sp,
            "go" | "o" => Family::GO,
            "so" => Family::SO,
            "omega" => Family::Omega,
            _ => return Err(Error::InvalidInput(format!("unknown family {s:?}"))),
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
            "-" | "-1" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::InvalidInput(format!("unknown sign {s:?}"))),
        }
    }
}

/// Size limits on the concrete groups that may be constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecLimits {
    pub max_n: usize,
    pub max_q: u64,
}

impl Default for SpecLimits {
    fn default() -> Self {
        SpecLimits {
            max_n: 6,
            max_q: 13,
        }
    }
}

/// A concrete classical matrix group, optionally taken modulo its centre.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub sign: Option<Sign>,
    pub n: usize,
    pub q: u64,
    pub projective: bool,
}

impl GroupSpec {
    pub fn new(family: Family, n: usize, q: u64) -> Result<Self> {
        Self::with_sign(family, None, n, q)
    }

    pub fn with_sign(family: Family, sign: Option<Sign>, n: usize, q: u64) -> Result<Self> {
        let spec = GroupSpec {
            family,
            sign,
            n,
            q,
            projective: false,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn projective(mut self) -> Self {
        self.projective = true;
        self
    }

    /// `(p, f)` with `q = p^f`.
    pub fn char_and_degree(&self) -> (u64, u32) {
        prime_power(self.q).expect("validated spec")
    }

    pub fn characteristic(&self) -> u64 {
        self.char_and_degree().0
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::UnsupportedGroup(m));
        match prime_power(self.q) {
            Some((p, _)) if p % 2 == 1 => {}
            _ => return bad(format!("q = {} is not an odd prime power", self.q)),
        }
        if self.n == 0 {
            return bad("dimension must be positive".into());
        }
        match self.family {
            Family::Sp if self.n % 2 == 1 => {
                return bad(format!("Sp needs even dimension, got {}", self.n))
            }
            f if f.is_orthogonal() => {
                if self.n < 3 {
                    return bad(format!("{f} needs dimension at least 3"));
                }
                if self.n.is_multiple_of(2) && self.sign.is_none() {
                    return bad(format!("{f}({}) needs a sign", self.n));
                }
                if self.n % 2 == 1 && self.sign.is_some() {
                    return bad(format!("{f}({}) takes no sign", self.n));
                }
            }
            _ if self.sign.is_some() => {
                return bad(format!("{} takes no sign", self.family));
            }
            _ => {}
        }
        Ok(())
    }

    pub fn check_limits(&self, limits: SpecLimits) -> Result<()> {
        if self.n > limits.max_n || self.q > limits.max_q {
            return Err(Error::UnsupportedGroup(format!(
                "{self} exceeds limits n <= {}, q <= {}",
                limits.max_n, limits.max_q
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.projective {
            write!(f, "P")?;
        }
        write!(f, "{}", self.family)?;
        if let Some(s) = self.sign {
            write!(f, "{}", if s == Sign::Plus { "+" } else { "-" })?;
        }
        write!(f, "({},{})", self.n, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(GroupSpec::new(Family::SL, 3, 3).is_ok());
        assert!(GroupSpec::new(Family::SL, 3, 4).is_err());
        assert!(GroupSpec::new(Family::SL, 3, 6).is_err());
        assert!(GroupSpec::new(Family::Sp, 5, 3).is_err());
        assert!(GroupSpec::new(Family::GO, 4, 3).is_err());
        assert!(GroupSpec::with_sign(Family::GO, Some(Sign::Minus), 4, 3).is_ok());
        assert!(GroupSpec::with_sign(Family::GO, Some(Sign::Minus), 5, 3).is_err());
        assert!(GroupSpec::with_sign(Family::SL, Some(Sign::Minus), 3, 3).is_err());
    }

    #[test]
    fn display_and_parse() {
        let s = GroupSpec::new(Family::SU, 3, 3).unwrap().projective();
        assert_eq!(s.to_string(), "PSU(3,3)");
        assert_eq!("omega".parse::<Family>().unwrap(), Family::Omega);
        for f in Family::ALL {
            assert_eq!(Family::from_code(f.code()), Some(f));
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }
}
