//! Quasi-split Satake diagrams on the affine type-A Dynkin cycle.
//!
//! Nodes are the residues `0..n` with `0` the affine node. Only the three
//! quasi-split families A.1, A.3 and A.4 are representable, and the only
//! parameters kept are the integers `s_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    A1,
    A3,
    A4,
}

impl Family {
    /// Whether the K-matrix lands in the dual crystal.
    pub fn is_twisted(self) -> bool {
        matches!(self, Family::A1 | Family::A4)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A1 => "a1",
            Family::A3 => "a3",
            Family::A4 => "a4",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a1" => Ok(Family::A1),
            "a3" => Ok(Family::A3),
            "a4" => Ok(Family::A4),
            other => Err(format!("unknown family {other:?} (expected a1, a3 or a4)")),
        }
    }
}

/// Pairing `a_{i,tau(i)}` of a node with its image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// `tau(i) = i`
    Fixed,
    /// `tau(i)` is neither `i` nor adjacent to it.
    Apart,
    /// `tau(i)` is adjacent to `i`.
    Adjacent,
}

impl Pairing {
    pub fn value(self) -> i32 {
        match self {
            Pairing::Fixed => 2,
            Pairing::Apart => 0,
            Pairing::Adjacent => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct SatakeDiagram {
    family: Family,
    n: usize,
}

#[derive(Deserialize)]
struct RawDiagram {
    family: Family,
    n: usize,
}

impl TryFrom<RawDiagram> for SatakeDiagram {
    type Error = Error;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        SatakeDiagram::new(raw.family, raw.n)
    }
}

impl SatakeDiagram {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let ok = match family {
            Family::A1 | Family::A3 => n >= 3,
            Family::A4 => n >= 4 && n % 2 == 0,
        };
        if ok {
            Ok(Self { family, n })
        } else {
            Err(Error::InvalidDiagram { family, n })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// `n'`: `(n - 1) / 2` for A.3, `n / 2` for A.4, `None` for A.1.
    pub fn n_prime(&self) -> Option<usize> {
        match self.family {
            Family::A1 => None,
            Family::A3 => Some((self.n - 1) / 2),
            Family::A4 => Some(self.n / 2),
        }
    }

    pub fn tau(&self, i: usize) -> usize {
        let n = self.n;
        let i = i % n;
        match self.family {
            Family::A1 => i,
            Family::A3 => (n - i) % n,
            Family::A4 => (i + n / 2) % n,
        }
    }

    pub fn pairing(&self, i: usize) -> Pairing {
        let n = self.n;
        let i = i % n;
        let t = self.tau(i);
        if t == i {
            Pairing::Fixed
        } else if (t + 1) % n == i || (i + 1) % n == t {
            Pairing::Adjacent
        } else {
            Pairing::Apart
        }
    }

    /// `a_{i,tau(i)}` as an integer in `{2, 0, -1}`.
    pub fn a_pair(&self, i: usize) -> i32 {
        self.pairing(i).value()
    }

    pub fn s_param(&self, i: usize) -> Result<i64> {
        let i = i % self.n;
        match self.pairing(i) {
            Pairing::Apart => Err(Error::NoSParameter { node: i }),
            Pairing::Fixed => Ok(0),
            // only A.3 with n odd, at i = n' and n' + 1
            Pairing::Adjacent => {
                let np = (self.n - 1) / 2;
                Ok(if i == np + 1 { 1 } else { 0 })
            }
        }
    }

    /// True if some node has `a_{i,tau(i)} = -1`; dual crystals are then unsupported.
    pub fn has_adjacent_pair(&self) -> bool {
        self.nodes().any(|i| self.pairing(i) == Pairing::Adjacent)
    }
}

impl fmt::Display for SatakeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.family, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(family: Family, n: usize) -> SatakeDiagram {
        SatakeDiagram::new(family, n).unwrap()
    }

    #[test]
    fn tau_examples() {
        assert_eq!(d(Family::A1, 3).tau(1), 1);
        assert_eq!(d(Family::A3, 5).tau(1), 4);
        assert_eq!(d(Family::A4, 6).tau(0), 3);
    }

    #[test]
    fn a_pair_examples() {
        for i in 0..5 {
            assert_eq!(d(Family::A1, 5).a_pair(i), 2);
        }
        assert_eq!(d(Family::A3, 5).a_pair(2), -1);
        assert_eq!(d(Family::A3, 5).a_pair(3), -1);
        assert_eq!(d(Family::A3, 5).a_pair(0), 2);
        assert_eq!(d(Family::A3, 5).a_pair(1), 0);
        assert_eq!(d(Family::A4, 6).a_pair(1), 0);
    }

    #[test]
    fn s_param_examples() {
        assert_eq!(d(Family::A1, 4).s_param(2), Ok(0));
        assert_eq!(d(Family::A3, 5).s_param(3), Ok(1));
        assert_eq!(d(Family::A3, 5).s_param(2), Ok(0));
        assert_eq!(d(Family::A3, 4).s_param(2), Ok(0));
        assert_eq!(d(Family::A3, 4).s_param(1), Err(Error::NoSParameter { node: 1 }));
        assert!(d(Family::A4, 4).s_param(0).is_err());
    }

    #[test]
    fn construction_rules() {
        assert!(SatakeDiagram::new(Family::A4, 5).is_err());
        assert!(SatakeDiagram::new(Family::A4, 2).is_err());
        assert!(SatakeDiagram::new(Family::A1, 2).is_err());
        assert!(SatakeDiagram::new(Family::A3, 3).is_ok());
    }

    #[test]
    fn involution_and_cartan_symmetry() {
        for (fam, ns) in [(Family::A1, 3..9), (Family::A3, 3..9), (Family::A4, 4..9)] {
            for n in ns {
                let Ok(dg) = SatakeDiagram::new(fam, n) else { continue };
                let adj = |a: usize, b: usize| (a + 1) % n == b || (b + 1) % n == a;
                for i in 0..n {
                    assert_eq!(dg.tau(dg.tau(i)), i);
                    assert!([2, 0, -1].contains(&dg.a_pair(i)));
                    for j in 0..n {
                        assert_eq!(adj(i, j), adj(dg.tau(i), dg.tau(j)));
                    }
                }
                if fam == Family::A3 && n % 2 == 1 {
                    let np = (n - 1) / 2;
                    assert_eq!(dg.s_param(np).unwrap() + dg.s_param(np + 1).unwrap(), 1);
                    let adjacent: Vec<_> = (0..n).filter(|&i| dg.a_pair(i) == -1).collect();
                    assert_eq!(adjacent, vec![np, np + 1]);
                }
            }
        }
    }

    #[test]
    fn json_encoding() {
        let dg: SatakeDiagram = serde_json::from_str(r#"{"family": "a3", "n": 5}"#).unwrap();
        assert_eq!(dg, d(Family::A3, 5));
        assert!(serde_json::from_str::<SatakeDiagram>(r#"{"family": "a4", "n": 5}"#).is_err());
        assert_eq!(serde_json::to_string(&dg).unwrap(), r#"{"family":"a3","n":5}"#);
    }
}
