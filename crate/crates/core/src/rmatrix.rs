//! Piecewise-linear combinatorial R-matrices among `B_s` and `B_s^∨`.
//!
//! Three orderings are covered: plain ⊗ plain ([`RKind::RR`]), dual ⊗ plain
//! ([`RKind::DR`]) and dual ⊗ dual ([`RKind::DD`]). Each map swaps the two
//! factors. The formulas act on native exponents; slots at an inverse
//! parameter are converted on the way in and out.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use crate::crystal::OrientedSlot;
use crate::crystal::{AffineElement, Composition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RKind {
    /// `B_s ⊗ B_{s'}`
    RR,
    /// `B_s^∨ ⊗ B_{s'}`
    DR,
    /// `B_s^∨ ⊗ B_{s'}^∨`
    DD,
}

impl RKind {
    pub const ALL: [RKind; 3] = [RKind::RR, RKind::DR, RKind::DD];

    pub fn of(first_dual: bool, second_dual: bool) -> Option<RKind> {
        match (first_dual, second_dual) {
            (false, false) => Some(RKind::RR),
            (true, false) => Some(RKind::DR),
            (true, true) => Some(RKind::DD),
            (false, true) => None,
        }
    }

    pub fn flags(self) -> (bool, bool) {
        match self {
            RKind::RR => (false, false),
            RKind::DR => (true, false),
            RKind::DD => (true, true),
        }
    }
}

impl fmt::Display for RKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RKind::RR => "rr",
            RKind::DR => "dr",
            RKind::DD => "dd",
        })
    }
}

impl FromStr for RKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "rr" => Ok(RKind::RR),
            "dr" => Ok(RKind::DR),
            "dd" => Ok(RKind::DD),
            other => Err(format!("unknown R-matrix kind {other:?} (expected rr, dr or dd)")),
        }
    }
}

/// Which variant of the piecewise-linear R formulas to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RFormula {
    /// The forms that are crystal morphisms and reproduce the worked examples.
    Corrected,
    /// Uncorrected variant: the DR shift is `Q_0(α,β)` and the DD `α'`
    /// uses `Q_i(α,β)`. Kept for the counterexample check.
    Literal,
}

fn check_rank(alpha: &Composition, beta: &Composition) -> Result<()> {
    if alpha.n() != beta.n() {
        return Err(Error::RankMismatch { expected: alpha.n(), found: beta.n() });
    }
    Ok(())
}

fn q_raw(i: i64, alpha: &Composition, beta: &Composition) -> i64 {
    let n = alpha.n() as i64;
    (1..=n)
        .map(|k| {
            let tail: i64 = (k + 1..=n).map(|j| alpha.at(i + j)).sum();
            let head: i64 = (1..k).map(|j| beta.at(i + j)).sum();
            tail + head
        })
        .min()
        .unwrap_or(0)
}

/// `Q_i(α,β) = min_{1≤k≤n} (Σ_{j=k+1}^{n} α_{i+j} + Σ_{j=1}^{k−1} β_{i+j})`.
pub fn q_shift(i: i64, alpha: &Composition, beta: &Composition) -> Result<i64> {
    check_rank(alpha, beta)?;
    Ok(q_raw(i, alpha, beta))
}

/// `P_i(α,β) = min(α_{i+1}, β_{i+1})`.
pub fn p_shift(i: i64, alpha: &Composition, beta: &Composition) -> Result<i64> {
    check_rank(alpha, beta)?;
    Ok(alpha.at(i + 1).min(beta.at(i + 1)))
}

/// Raw output of a piecewise-linear R-formula before validation: the new
/// second-factor composition `β'`, the new first-factor composition `α'`, and
/// the exponent transfer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RImages {
    pub beta: Vec<i64>,
    pub alpha: Vec<i64>,
    pub shift: i64,
}

pub fn r_images(kind: RKind, formula: RFormula, alpha: &Composition, beta: &Composition) -> Result<RImages> {
    check_rank(alpha, beta)?;
    let n = alpha.n() as i64;
    let images = match kind {
        RKind::RR => {
            let q: Vec<i64> = (0..=n).map(|i| q_raw(i, alpha, beta)).collect();
            RImages {
                beta: (1..=n).map(|i| beta.at(i) + q[i as usize] - q[i as usize - 1]).collect(),
                alpha: (1..=n).map(|i| alpha.at(i) + q[i as usize - 1] - q[i as usize]).collect(),
                shift: q[0],
            }
        }
        RKind::DR => {
            let p = |i: i64| alpha.at(i + 1).min(beta.at(i + 1));
            RImages {
                beta: (1..=n).map(|i| beta.at(i) + p(i) - p(i - 1)).collect(),
                alpha: (1..=n).map(|i| alpha.at(i) + p(i) - p(i - 1)).collect(),
                shift: match formula {
                    RFormula::Corrected => p(0),
                    RFormula::Literal => q_raw(0, alpha, beta),
                },
            }
        }
        RKind::DD => {
            let qb: Vec<i64> = (0..=n).map(|i| q_raw(i, beta, alpha)).collect();
            let qa: Vec<i64> = match formula {
                RFormula::Corrected => qb.clone(),
                RFormula::Literal => (0..=n).map(|i| q_raw(i, alpha, beta)).collect(),
            };
            RImages {
                beta: (1..=n).map(|i| beta.at(i) + qb[i as usize - 1] - qb[i as usize]).collect(),
                alpha: (1..=n).map(|i| alpha.at(i) + qa[i as usize] - qa[i as usize - 1]).collect(),
                shift: qb[0],
            }
        }
    };
    Ok(images)
}

fn check_kind(kind: RKind, slot1: &OrientedSlot, slot2: &OrientedSlot) -> Result<()> {
    if kind.flags() != (slot1.elem.dual, slot2.elem.dual) {
        return Err(Error::KindMismatch(kind));
    }
    Ok(())
}

pub fn r_apply_with(
    kind: RKind,
    formula: RFormula,
    slot1: &OrientedSlot,
    slot2: &OrientedSlot,
) -> Result<(OrientedSlot, OrientedSlot)> {
    check_kind(kind, slot1, slot2)?;
    let img = r_images(kind, formula, &slot1.elem.alpha, &slot2.elem.alpha)?;
    let new_second = AffineElement { alpha: Composition::from_signed(&img.beta)?, ..slot2.elem.clone() };
    let new_first = AffineElement { alpha: Composition::from_signed(&img.alpha)?, ..slot1.elem.clone() };
    let out1 = OrientedSlot::new(new_second, slot2.at_inverse).with_native_power(slot2.native_power() + img.shift);
    let out2 = OrientedSlot::new(new_first, slot1.at_inverse).with_native_power(slot1.native_power() - img.shift);
    Ok((out1, out2))
}

/// `R(x^d b ⊗ y^e b') = y^{e+shift} b'' ⊗ x^{d−shift} b'''`, with orientation
/// handling for slots at inverse parameters.
pub fn r_apply(kind: RKind, slot1: &OrientedSlot, slot2: &OrientedSlot) -> Result<(OrientedSlot, OrientedSlot)> {
    r_apply_with(kind, RFormula::Corrected, slot1, slot2)
}

/// [`r_apply`] with the kind read off the slot flags.
pub fn r_apply_auto(slot1: &OrientedSlot, slot2: &OrientedSlot) -> Result<(OrientedSlot, OrientedSlot)> {
    let kind = RKind::of(slot1.elem.dual, slot2.elem.dual).ok_or(Error::UnsupportedKind)?;
    r_apply(kind, slot1, slot2)
}
