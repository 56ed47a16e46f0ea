//! Pell-type equations `x² − D·y² = N` for `N ∈ {±1, ±4}`.
//!
//! Everything here is unit-theoretic rather than search-based. The solutions
//! of `x² − D·y² = ±4` are exactly the doubled coordinates of units of the
//! order attached to `D`, and the `±1` equations are the same statement for
//! the subring `ℤ[√D]`. So the solver computes one fundamental unit `ε` (from
//! the continued fraction of `√D`, with a small brute-force net for `D ≤ 16`
//! where norm-`±4` witnesses need not be convergents — `D = 12` is the
//! classic example, whose unit `2 + √3` hides between convergents) and then
//! answers every question by taking powers:
//!
//! * `N = −4` is solvable iff `ε` has norm `−1`, with `ε` itself minimal;
//! * `N = +4` has minimal solution `ε` or `ε²` according to that norm;
//! * `N = ±1` runs the same argument on `ε_ℤ`, the smallest power of `ε`
//!   with integral coordinates (`ε` itself or `ε³`);
//! * the full positive-solution list is one orbit under multiplication by
//!   the smallest norm-`+1` unit of the relevant ring.
//!
//! Unsolvable cases return a checkable [`Certificate`]: a modulus where the
//! congruence `x² − D·y² ≡ N` already fails, or the norm of the fundamental
//! unit when no small modulus works.

use crate::cf::CfExpansion;
use crate::quad::{QuadInt, Radicand};
use crate::scalar::{int, perfect_sqrt, Scalar};
use num_traits::RefNum;

/// Supported right-hand sides of `x² − D·y² = N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PellRhs {
    PlusOne,
    MinusOne,
    PlusFour,
    MinusFour,
}

impl PellRhs {
    pub fn value<T: Scalar>(self) -> T {
        match self {
            PellRhs::PlusOne => int(1),
            PellRhs::MinusOne => int(-1),
            PellRhs::PlusFour => int(4),
            PellRhs::MinusFour => int(-4),
        }
    }

    /// Maps `±1`/`±4` to the corresponding variant.
    pub fn from_value<T: Scalar>(v: &T) -> Option<Self> {
        match v.to_i64() {
            Some(1) => Some(PellRhs::PlusOne),
            Some(-1) => Some(PellRhs::MinusOne),
            Some(4) => Some(PellRhs::PlusFour),
            Some(-4) => Some(PellRhs::MinusFour),
            _ => None,
        }
    }

    pub fn is_negative(self) -> bool {
        matches!(self, PellRhs::MinusOne | PellRhs::MinusFour)
    }

    /// `±1` equations live in `ℤ[√D]`; `±4` in the full order.
    fn integral(self) -> bool {
        matches!(self, PellRhs::PlusOne | PellRhs::MinusOne)
    }
}

/// The smallest unit `> 1` of the order attached to `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalUnit<T> {
    unit: QuadInt<T>,
}

impl<T: Scalar> FundamentalUnit<T>
where
    for<'a> &'a T: RefNum<T>,
{
    pub fn unit(&self) -> &QuadInt<T> {
        &self.unit
    }

    /// `+1` or `−1`.
    pub fn norm_sign(&self) -> i8 {
        if self.unit.norm().is_negative() {
            -1
        } else {
            1
        }
    }

    /// True when the doubled coordinates are odd (so the unit is a genuine
    /// half-integer, possible only for `D ≡ 1 mod 4`).
    pub fn is_half_integer(&self) -> bool {
        self.unit.a().is_odd()
    }

    /// The smallest power landing in `ℤ[√D]`: the unit itself, or its cube.
    pub fn integral_power(&self) -> QuadInt<T> {
        if self.is_half_integer() {
            self.unit.pow(3)
        } else {
            self.unit.clone()
        }
    }
}

/// Computes the fundamental unit from the continued fraction of `√D`.
///
/// Candidates are the first-period convergents with defect `±4` (taken as
/// halved elements) or `±1` (doubled into the order); for `D ≤ 16` a direct
/// scan of small `b` is added, because `|N| = 4` is only guaranteed to force
/// convergents once `√D > 4`. The smallest candidate by `(b, a)` is the unit.
pub fn fundamental_unit<T: Scalar>(rad: &Radicand<T>) -> FundamentalUnit<T>
where
    for<'a> &'a T: RefNum<T>,
{
    let d = rad.get();
    let four = int::<T>(4);
    let one = T::one();
    let two = int::<T>(2);

    let expansion = CfExpansion::sqrt(rad);
    let convergents = expansion.convergents(expansion.period_len());
    let mut candidates: Vec<(T, T)> = Vec::new();
    let mut pm1: Option<(T, T)> = None;
    for c in &convergents {
        let abs = c.defect.abs();
        if abs == four {
            candidates.push((c.h.clone(), c.k.clone()));
        } else if abs == one {
            candidates.push((&two * &c.h, &two * &c.k));
            if pm1.is_none() {
                pm1 = Some((c.h.clone(), c.k.clone()));
            }
        }
    }

    if *d <= int(16) {
        // Scan b up to the ±1 witness, which always exists in the first
        // period, so the net below is never empty.
        let (_, q) = pm1.expect("√D has a ±1 convergent at the period end");
        let bound = &two * &q;
        let mut b = T::one();
        while b <= bound {
            let dbb = &(&b * &b) * d;
            for n in [four.clone(), -four.clone()] {
                let aa = &dbb + &n;
                if let Some(a) = perfect_sqrt(&aa) {
                    candidates.push((a, b.clone()));
                }
            }
            b = b + T::one();
        }
    }

    let (a, b) = candidates
        .into_iter()
        .min_by(|(a1, b1), (a2, b2)| b1.cmp(b2).then(a1.cmp(a2)))
        .expect("the period-end convergent always supplies a candidate");
    let unit = QuadInt::new(a, b, rad.clone()).expect("norm ±4 implies order membership");
    FundamentalUnit { unit }
}

/// Why an equation has no solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate<T> {
    /// `x² − D·y² ≡ N (mod m)` already has no solutions; checkable by
    /// enumerating both residues mod `m`.
    Residue { modulus: T },
    /// Every unit of the relevant ring has norm `+1` (witnessed by the
    /// fundamental one), so no element can have a negative norm.
    UnitNorm { fundamental: QuadInt<T> },
}

/// Result of solving `x² − D·y² = N`: the minimal solution with `x, y > 0`,
/// or a proof that none exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PellOutcome<T> {
    Solvable { x: T, y: T },
    Unsolvable(Certificate<T>),
}

impl<T> PellOutcome<T> {
    pub fn is_solvable(&self) -> bool {
        matches!(self, PellOutcome::Solvable { .. })
    }
}

const SIEVE_MODULI: [i64; 12] = [3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49];

/// Searches the fixed modulus list for one where `x² − D·y² ≡ N` has no
/// solutions at all.
pub fn residue_obstruction<T: Scalar>(d: &T, n: &T) -> Option<T>
where
    for<'a> &'a T: RefNum<T>,
{
    for m in SIEVE_MODULI {
        let mt = int::<T>(m);
        let dm = d.mod_floor(&mt).to_i64().expect("residue fits in i64");
        let nm = n.mod_floor(&mt).to_i64().expect("residue fits in i64");
        let mut solvable = false;
        'search: for x in 0..m {
            for y in 0..m {
                if (x * x - dm * y * y - nm).rem_euclid(m) == 0 {
                    solvable = true;
                    break 'search;
                }
            }
        }
        if !solvable {
            return Some(mt);
        }
    }
    None
}

fn halved_coords<T: Scalar>(u: &QuadInt<T>) -> (T, T)
where
    for<'a> &'a T: RefNum<T>,
{
    let two = int::<T>(2);
    debug_assert!(u.a().is_even() && u.b().is_even());
    (u.a().div_floor(&two), u.b().div_floor(&two))
}

fn coords_for<T: Scalar>(u: &QuadInt<T>, rhs: PellRhs) -> (T, T)
where
    for<'a> &'a T: RefNum<T>,
{
    if rhs.integral() {
        halved_coords(u)
    } else {
        (u.a().clone(), u.b().clone())
    }
}

/// Minimal positive solution of `x² − D·y² = N`, or a certificate of
/// unsolvability. For `N = +4` and `N = +1` the trivial `y = 0` solutions
/// `(2, 0)` and `(1, 0)` are *not* reported; callers that care about them
/// (the root enumerator does) handle `y = 0` separately.
pub fn solve<T: Scalar>(rad: &Radicand<T>, rhs: PellRhs) -> PellOutcome<T>
where
    for<'a> &'a T: RefNum<T>,
{
    let eps = fundamental_unit(rad);
    let base = if rhs.integral() {
        eps.integral_power()
    } else {
        eps.unit().clone()
    };
    let norm_negative = base.norm().is_negative();
    if rhs.is_negative() {
        if norm_negative {
            let (x, y) = coords_for(&base, rhs);
            PellOutcome::Solvable { x, y }
        } else {
            let cert = match residue_obstruction(rad.get(), &rhs.value::<T>()) {
                Some(modulus) => Certificate::Residue { modulus },
                None => Certificate::UnitNorm { fundamental: base },
            };
            PellOutcome::Unsolvable(cert)
        }
    } else {
        let u = if norm_negative { base.pow(2) } else { base };
        let (x, y) = coords_for(&u, rhs);
        PellOutcome::Solvable { x, y }
    }
}

pub fn is_solvable<T: Scalar>(rad: &Radicand<T>, rhs: PellRhs) -> bool
where
    for<'a> &'a T: RefNum<T>,
{
    solve(rad, rhs).is_solvable()
}

/// All solutions of `x² − D·y² = N` with `x, y > 0` in increasing order
/// (one orbit under the smallest norm-`+1` unit of the relevant ring).
/// `None` when the equation is unsolvable.
pub struct PellStream<T> {
    current: QuadInt<T>,
    multiplier: QuadInt<T>,
    rhs: PellRhs,
}

pub fn solution_stream<T: Scalar>(rad: &Radicand<T>, rhs: PellRhs) -> Option<PellStream<T>>
where
    for<'a> &'a T: RefNum<T>,
{
    let eps = fundamental_unit(rad);
    let base = if rhs.integral() {
        eps.integral_power()
    } else {
        eps.unit().clone()
    };
    let norm_negative = base.norm().is_negative();
    let (start, multiplier) = if rhs.is_negative() {
        if !norm_negative {
            return None;
        }
        (base.clone(), base.pow(2))
    } else {
        let u = if norm_negative { base.pow(2) } else { base };
        (u.clone(), u)
    };
    Some(PellStream {
        current: start,
        multiplier,
        rhs,
    })
}

impl<T: Scalar> Iterator for PellStream<T>
where
    for<'a> &'a T: RefNum<T>,
{
    type Item = (T, T);

    fn next(&mut self) -> Option<(T, T)> {
        let out = coords_for(&self.current, self.rhs);
        self.current = self
            .current
            .checked_mul(&self.multiplier)
            .expect("stream stays in one order");
        Some(out)
    }
}
