//! Exact coefficients `(p + q√2) / 2^e`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An element of `ℤ[√2, 1/2]`, kept in canonical form: `e = 0`, or `p` and
/// `q` not both even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ICoefficient {
    p: i64,
    q: i64,
    e: u32,
}

impl ICoefficient {
    pub const ZERO: ICoefficient = ICoefficient { p: 0, q: 0, e: 0 };
    pub const ONE: ICoefficient = ICoefficient { p: 1, q: 0, e: 0 };
    /// `1/√2 = √2/2`
    pub const INV_SQRT2: ICoefficient = ICoefficient { p: 0, q: 1, e: 1 };
    pub const SQRT2: ICoefficient = ICoefficient { p: 0, q: 1, e: 0 };

    pub fn new(p: i64, q: i64, e: u32) -> Self {
        let (mut p, mut q, mut e) = (p, q, e);
        if p == 0 && q == 0 {
            return Self::ZERO;
        }
        while e > 0 && p % 2 == 0 && q % 2 == 0 {
            p /= 2;
            q /= 2;
            e -= 1;
        }
        ICoefficient { p, q, e }
    }

    pub fn integer(p: i64) -> Self {
        Self::new(p, 0, 0)
    }

    pub fn parts(&self) -> (i64, i64, u32) {
        (self.p, self.q, self.e)
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0 && self.q == 0
    }

    pub fn to_f64(&self) -> f64 {
        (self.p as f64 + self.q as f64 * std::f64::consts::SQRT_2) / (1u64 << self.e) as f64
    }

    fn raised(&self, e: u32) -> (i64, i64) {
        let k = 1i64 << (e - self.e);
        (self.p * k, self.q * k)
    }
}

impl Default for ICoefficient {
    fn default() -> Self {
        Self::ZERO
    }
}

impl Add for ICoefficient {
    type Output = ICoefficient;

    fn add(self, rhs: Self) -> Self {
        let e = self.e.max(rhs.e);
        let (p1, q1) = self.raised(e);
        let (p2, q2) = rhs.raised(e);
        ICoefficient::new(p1 + p2, q1 + q2, e)
    }
}

impl Neg for ICoefficient {
    type Output = ICoefficient;

    fn neg(self) -> Self {
        ICoefficient { p: -self.p, q: -self.q, e: self.e }
    }
}

impl Sub for ICoefficient {
    type Output = ICoefficient;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ICoefficient {
    type Output = ICoefficient;

    fn mul(self, rhs: Self) -> Self {
        ICoefficient::new(
            self.p * rhs.p + 2 * self.q * rhs.q,
            self.p * rhs.q + self.q * rhs.p,
            self.e + rhs.e,
        )
    }
}

impl fmt::Display for ICoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q, e) = (self.p, self.q, self.e);
        if p == 0 && e == 1 && q.abs() == 1 {
            return f.write_str(if q > 0 { "1/√2" } else { "-1/√2" });
        }
        let surd = |q: i64| match q {
            1 => "√2".to_string(),
            -1 => "-√2".to_string(),
            q => format!("{q}√2"),
        };
        let num = match (p, q) {
            (p, 0) => p.to_string(),
            (0, q) => surd(q),
            (p, q) if q > 0 => format!("({p}+{})", surd(q)),
            (p, q) => format!("({p}{})", surd(q)),
        };
        match e {
            0 => f.write_str(&num),
            1 => write!(f, "{num}/2"),
            e => write!(f, "{num}/2^{e}"),
        }
    }
}

impl FromStr for ICoefficient {
    type Err = Error;

    /// Parses the forms produced by `Display`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || Error::ParseCoefficient(text.to_string());
        let t = text.trim();
        match t {
            "1/√2" => return Ok(Self::INV_SQRT2),
            "-1/√2" => return Ok(-Self::INV_SQRT2),
            _ => {}
        }
        let (num, e) = match t.rsplit_once("/2") {
            Some((num, "")) => (num, 1),
            Some((num, rest)) => (num, rest.strip_prefix('^').and_then(|x| x.parse().ok()).ok_or_else(err)?),
            None => (t, 0),
        };
        let num = num.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(num);
        let surd = |s: &str| -> Option<i64> {
            let coeff = s.strip_suffix("√2")?;
            match coeff {
                "" | "+" => Some(1),
                "-" => Some(-1),
                c => c.parse().ok(),
            }
        };
        let (p, q) = if !num.contains('√') {
            (num.parse().map_err(|_| err())?, 0)
        } else {
            // split "p+q√2" / "p-q√2" at the sign that starts the surd term
            let cut = num
                .char_indices()
                .skip(1)
                .filter(|&(_, c)| c == '+' || c == '-')
                .map(|(k, _)| k)
                .last();
            match cut {
                Some(k) => (num[..k].parse().map_err(|_| err())?, surd(&num[k..]).ok_or_else(err)?),
                None => (0, surd(num).ok_or_else(err)?),
            }
        };
        Ok(ICoefficient::new(p, q, e))
    }
}

impl Serialize for ICoefficient {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ICoefficient {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
