//! KR crystals `B_s`, their duals `B_s^∨`, affinizations, and the tensor rule.
//!
//! An element `x^d b_α` (or `x^d b_α^∨`) is an [`AffineElement`]. Its stored
//! `power` is always the exponent of the displayed indeterminate. Plain
//! elements are read as living in `B_s(x)` and dual ones in `B_s^∨(x^{-1})`,
//! which is the orientation the operator formulas on [`AffineElement`] use.
//! [`OrientedSlot`] makes the orientation explicit for the places where it
//! differs (R-matrix substitutions, the untwisted K-matrix codomain).
//!
//! ZERO is `None` throughout.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `α = (α_1, …, α_n)` with nonnegative entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition(entries)
    }

    /// Builds a composition from signed entries, failing if any is negative.
    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        entries
            .iter()
            .map(|&v| u32::try_from(v).map_err(|_| Error::InvalidComposition(entries.to_vec())))
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn s(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `α_i` with the 1-based index taken mod n, so `α_0 = α_n`.
    pub fn at(&self, i: i64) -> i64 {
        let n = self.0.len() as i64;
        self.0[(i - 1).rem_euclid(n) as usize] as i64
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|&v| v as i64).collect()
    }

    /// `α + c·(e_i − e_j)`, or `None` if an entry would go negative.
    pub fn shifted(&self, c: i64, i: i64, j: i64) -> Option<Composition> {
        let n = self.0.len() as i64;
        let mut v = self.to_signed();
        v[(i - 1).rem_euclid(n) as usize] += c;
        v[(j - 1).rem_euclid(n) as usize] -= c;
        Composition::from_signed(&v).ok()
    }

    /// The unit-vector composition `s·e_k` (1-based `k`).
    pub fn concentrated(n: usize, s: u32, k: usize) -> Composition {
        let mut v = vec![0; n];
        v[(k + n - 1) % n] = s;
        Composition(v)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let short = self.0.iter().all(|&v| v < 10);
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 && !short {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Composition(v)
    }
}

/// All compositions of `s` into `n` nonnegative parts, lexicographically ascending.
pub fn enumerate(n: usize, s: u32) -> Result<Vec<Composition>> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    Ok(enumerate_unchecked(n, s))
}

pub(crate) fn enumerate_unchecked(n: usize, s: u32) -> Vec<Composition> {
    fn go(n: usize, s: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if prefix.len() + 1 == n {
            prefix.push(s);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in 0..=s {
            prefix.push(a);
            go(n, s - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(n, s, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Number of compositions of `s` into `n` parts, `C(s + n − 1, n − 1)`.
pub fn crystal_size(n: usize, s: u32) -> usize {
    let (top, k) = (s as u64 + n as u64 - 1, n as u64 - 1);
    (0..k).fold(1u64, |acc, j| acc * (top - j) / (j + 1)) as usize
}

/// Classical weight as the vector of pairings `⟨h_i, wt⟩`, `i ∈ ℤ/nℤ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i % self.0.len()]
    }

    pub fn is_level_zero(&self) -> bool {
        self.0.iter().sum::<i64>() == 0
    }
}

/// `x^d b_α` (`dual = false`) or `x^d b_α^∨` (`dual = true`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineElement {
    pub dual: bool,
    pub power: i64,
    pub alpha: Composition,
}

impl AffineElement {
    pub fn plain(power: i64, alpha: impl Into<Composition>) -> Self {
        AffineElement { dual: false, power, alpha: alpha.into() }
    }

    pub fn dual(power: i64, alpha: impl Into<Composition>) -> Self {
        AffineElement { dual: true, power, alpha: alpha.into() }
    }

    pub fn n(&self) -> usize {
        self.alpha.n()
    }

    pub fn s(&self) -> u32 {
        self.alpha.s()
    }

    pub fn with_power(&self, power: i64) -> Self {
        AffineElement { power, ..self.clone() }
    }

    /// Orientation the displayed operator formulas assume for this element.
    pub fn default_slot(&self) -> OrientedSlot {
        OrientedSlot { elem: self.clone(), at_inverse: self.dual }
    }

    /// Display label in the style `x^{-1}(320)^∨`.
    pub fn label(&self, var: char) -> String {
        format!("{var}^{}{}{}", self.power, self.alpha, if self.dual { "^∨" } else { "" })
    }
}

/// A tensor factor together with the orientation of its spectral parameter.
///
/// `at_inverse` marks a factor sitting at the inverse of its base
/// indeterminate (e.g. `B_s(x^{-1})`). The stored power stays a
/// base-indeterminate exponent; [`OrientedSlot::native_power`] is the
/// exponent of the indeterminate the crystal is affinized in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrientedSlot {
    pub elem: AffineElement,
    pub at_inverse: bool,
}

impl OrientedSlot {
    pub fn new(elem: AffineElement, at_inverse: bool) -> Self {
        OrientedSlot { elem, at_inverse }
    }

    pub fn direct(elem: AffineElement) -> Self {
        OrientedSlot { elem, at_inverse: false }
    }

    fn sign(&self) -> i64 {
        if self.at_inverse {
            -1
        } else {
            1
        }
    }

    pub fn native_power(&self) -> i64 {
        self.sign() * self.elem.power
    }

    /// Replaces the power, given as a native exponent.
    pub fn with_native_power(&self, native: i64) -> Self {
        OrientedSlot { elem: self.elem.with_power(self.sign() * native), at_inverse: self.at_inverse }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    E,
    F,
}

/// Minimal crystal interface shared by single factors and tensor words.
pub trait CrystalElement: Sized {
    fn rank(&self) -> usize;
    fn eps(&self, i: usize) -> u32;
    fn phi(&self, i: usize) -> u32;
    fn e(&self, i: usize) -> Option<Self>;
    fn f(&self, i: usize) -> Option<Self>;

    fn apply(&self, op: Op, i: usize) -> Option<Self> {
        match op {
            Op::E => self.e(i),
            Op::F => self.f(i),
        }
    }
}

fn node_index(i: usize, n: usize) -> i64 {
    (i % n) as i64
}

pub fn eps(i: usize, e: &AffineElement) -> u32 {
    let i = node_index(i, e.n());
    let v = if e.dual { e.alpha.at(i) } else { e.alpha.at(i + 1) };
    v as u32
}

pub fn phi(i: usize, e: &AffineElement) -> u32 {
    let i = node_index(i, e.n());
    let v = if e.dual { e.alpha.at(i + 1) } else { e.alpha.at(i) };
    v as u32
}

pub fn weight(e: &AffineElement) -> Weight {
    let n = e.n();
    Weight((0..n).map(|i| phi(i, e) as i64 - eps(i, e) as i64).collect())
}

/// Classical part of `Ẽ_i` / `F̃_i` plus the native exponent shift.
fn raw_op(op: Op, i: usize, e: &AffineElement) -> Option<(Composition, i64)> {
    let n = e.n();
    let i = node_index(i, n);
    // plain Ẽ_i adds e_i − e_{i+1}; the dual crystal swaps Ẽ and F̃
    let c = match (op, e.dual) {
        (Op::E, false) | (Op::F, true) => 1,
        (Op::F, false) | (Op::E, true) => -1,
    };
    let alpha = e.alpha.shifted(c, i, i + 1)?;
    let delta = if i == 0 { 1 } else { 0 };
    let native = match op {
        Op::E => delta,
        Op::F => -delta,
    };
    Some((alpha, native))
}

impl CrystalElement for OrientedSlot {
    fn rank(&self) -> usize {
        self.elem.n()
    }

    fn eps(&self, i: usize) -> u32 {
        eps(i, &self.elem)
    }

    fn phi(&self, i: usize) -> u32 {
        phi(i, &self.elem)
    }

    fn e(&self, i: usize) -> Option<Self> {
        oriented_op(Op::E, i, self)
    }

    fn f(&self, i: usize) -> Option<Self> {
        oriented_op(Op::F, i, self)
    }
}

fn oriented_op(op: Op, i: usize, slot: &OrientedSlot) -> Option<OrientedSlot> {
    let (alpha, shift) = raw_op(op, i, &slot.elem)?;
    let moved = OrientedSlot {
        elem: AffineElement { alpha, ..slot.elem.clone() },
        at_inverse: slot.at_inverse,
    };
    Some(moved.with_native_power(slot.native_power() + shift))
}

impl CrystalElement for AffineElement {
    fn rank(&self) -> usize {
        self.n()
    }

    fn eps(&self, i: usize) -> u32 {
        eps(i, self)
    }

    fn phi(&self, i: usize) -> u32 {
        phi(i, self)
    }

    fn e(&self, i: usize) -> Option<Self> {
        etilde(i, self)
    }

    fn f(&self, i: usize) -> Option<Self> {
        ftilde(i, self)
    }
}

/// `Ẽ_i` in the default orientation (plain at `x`, dual at `x^{-1}`).
pub fn etilde(i: usize, e: &AffineElement) -> Option<AffineElement> {
    oriented_op(Op::E, i, &e.default_slot()).map(|s| s.elem)
}

/// `F̃_i` in the default orientation.
pub fn ftilde(i: usize, e: &AffineElement) -> Option<AffineElement> {
    oriented_op(Op::F, i, &e.default_slot()).map(|s| s.elem)
}

pub fn dualize(e: &AffineElement) -> AffineElement {
    AffineElement { dual: !e.dual, ..e.clone() }
}

/// Two-factor tensor word `b1 ⊗ b2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor<A, B>(pub A, pub B);

impl<A: CrystalElement + Clone, B: CrystalElement + Clone> CrystalElement for Tensor<A, B> {
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn eps(&self, i: usize) -> u32 {
        let (e1, p2) = (self.0.eps(i), self.1.phi(i));
        self.1.eps(i) + e1.saturating_sub(p2)
    }

    fn phi(&self, i: usize) -> u32 {
        let (p2, e1) = (self.1.phi(i), self.0.eps(i));
        self.0.phi(i) + p2.saturating_sub(e1)
    }

    fn e(&self, i: usize) -> Option<Self> {
        if self.0.eps(i) > self.1.phi(i) {
            Some(Tensor(self.0.e(i)?, self.1.clone()))
        } else {
            Some(Tensor(self.0.clone(), self.1.e(i)?))
        }
    }

    fn f(&self, i: usize) -> Option<Self> {
        if self.0.eps(i) >= self.1.phi(i) {
            Some(Tensor(self.0.f(i)?, self.1.clone()))
        } else {
            Some(Tensor(self.0.clone(), self.1.f(i)?))
        }
    }
}

fn same_rank<A: CrystalElement, B: CrystalElement>(b1: &A, b2: &B) -> Result<()> {
    if b1.rank() != b2.rank() {
        return Err(Error::RankMismatch { expected: b1.rank(), found: b2.rank() });
    }
    Ok(())
}

pub fn tensor_op<A, B>(op: Op, i: usize, b1: &A, b2: &B) -> Result<Option<(A, B)>>
where
    A: CrystalElement + Clone,
    B: CrystalElement + Clone,
{
    same_rank(b1, b2)?;
    Ok(Tensor(b1.clone(), b2.clone()).apply(op, i).map(|Tensor(a, b)| (a, b)))
}

pub fn tensor_eps<A, B>(i: usize, b1: &A, b2: &B) -> Result<u32>
where
    A: CrystalElement + Clone,
    B: CrystalElement + Clone,
{
    same_rank(b1, b2)?;
    Ok(Tensor(b1.clone(), b2.clone()).eps(i))
}

pub fn tensor_phi<A, B>(i: usize, b1: &A, b2: &B) -> Result<u32>
where
    A: CrystalElement + Clone,
    B: CrystalElement + Clone,
{
    same_rank(b1, b2)?;
    Ok(Tensor(b1.clone(), b2.clone()).phi(i))
}
