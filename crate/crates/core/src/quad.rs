//! Exact arithmetic in real quadratic orders.
//!
//! [`QuadInt`] stores `(a + b√D)/2` with doubled integer coordinates, subject
//! to the order invariant `2 | a − b·D` and `4 | a² − D·b²`. That is exactly
//! the ring `ℤ[(1+√D)/2]` for `D ≡ 1 (mod 4)` (all the lattice-family
//! radicands `d²±4` land here, where the invariant reads `a ≡ b (mod 2)`),
//! `ℤ[√(D/4)]` for `D ≡ 0 (mod 4)`, and `ℤ[√D]` otherwise. The invariant is
//! what keeps norms integral and multiplication closed; radicands are taken
//! literally, with no squarefree reduction (so `D = 45` works in the order
//! attached to 45, not in `ℚ(√5)`'s maximal order).
//!
//! [`QuadRat`] is the field companion `(a + b√r)/den` in lowest terms, used
//! for cone geometry where division is needed. A zero radicand marks a
//! rational value, following the usual surd-normalization convention.
//!
//! Signs are decided purely in integer arithmetic by comparing `a²` against
//! `D·b²` on opposite-sign parts; no floating point anywhere.

use crate::scalar::{int, perfect_sqrt, sign_i8, Scalar};
use crate::{Error, Result};
use num_traits::RefNum;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A positive non-square integer `D`, the radicand of `√D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radicand<T>(T);

impl<T: Scalar> Radicand<T> {
    pub fn new(d: T) -> Result<Self> {
        if !d.is_positive() || perfect_sqrt(&d).is_some() {
            return Err(Error::InvalidRadicand(d.to_string()));
        }
        Ok(Radicand(d))
    }

    pub fn get(&self) -> &T {
        &self.0
    }
}

impl<T: fmt::Display> fmt::Display for Radicand<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "√{}", self.0)
    }
}

/// `(a + b√D)/2` in the order attached to `D`; see the module docs for the
/// exact invariant. Equality and hashing are structural, which is sound
/// because the representation is unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt<T> {
    a: T,
    b: T,
    rad: Radicand<T>,
}

fn order_valid<T: Scalar>(a: &T, b: &T, d: &T) -> bool
where
    for<'a> &'a T: RefNum<T>,
{
    let two = int::<T>(2);
    let four = int::<T>(4);
    if !(a - &(b * d)).mod_floor(&two).is_zero() {
        return false;
    }
    (&(a * a) - &(&(b * b) * d)).mod_floor(&four).is_zero()
}

impl<T: Scalar> QuadInt<T>
where
    for<'a> &'a T: RefNum<T>,
{
    /// Builds `(a + b√D)/2`, rejecting pairs outside the order.
    pub fn new(a: T, b: T, rad: Radicand<T>) -> Result<Self> {
        if !order_valid(&a, &b, rad.get()) {
            return Err(Error::OrderViolation {
                a: a.to_string(),
                b: b.to_string(),
                d: rad.get().to_string(),
            });
        }
        Ok(QuadInt { a, b, rad })
    }

    /// The ordinary integer `n`, i.e. `(2n + 0√D)/2`.
    pub fn from_int(n: T, rad: Radicand<T>) -> Self {
        QuadInt {
            a: int::<T>(2) * n,
            b: T::zero(),
            rad,
        }
    }

    pub fn zero(rad: Radicand<T>) -> Self {
        Self::from_int(T::zero(), rad)
    }

    pub fn one(rad: Radicand<T>) -> Self {
        Self::from_int(T::one(), rad)
    }

    /// Doubled rational part.
    pub fn a(&self) -> &T {
        &self.a
    }

    /// Doubled irrational part.
    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn radicand(&self) -> &Radicand<T> {
        &self.rad
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate `(a − b√D)/2`.
    pub fn conj(&self) -> Self {
        QuadInt {
            a: self.a.clone(),
            b: -self.b.clone(),
            rad: self.rad.clone(),
        }
    }

    /// Field trace `x + x̄ = a` (integral by the order invariant).
    pub fn trace(&self) -> T {
        self.a.clone()
    }

    /// Field norm `x·x̄ = (a² − D·b²)/4`, always an integer.
    pub fn norm(&self) -> T {
        let num = &(&self.a * &self.a) - &(&(&self.b * &self.b) * self.rad.get());
        let four = int::<T>(4);
        debug_assert!(num.mod_floor(&four).is_zero());
        num.div_floor(&four)
    }

    /// Exact sign in {-1, 0, 1}, by integer casework: when `a` and `b`
    /// disagree in sign, compare `a²` with `D·b²` to see which part wins.
    pub fn sign(&self) -> i8 {
        let sa = sign_i8(&self.a);
        let sb = sign_i8(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (x, y) if x == y => x,
            _ => {
                let aa = &self.a * &self.a;
                let dbb = &(&self.b * &self.b) * self.rad.get();
                // aa == dbb would force D to be a square; unreachable here.
                debug_assert!(aa != dbb);
                if aa > dbb {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(QuadInt {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            rad: self.rad.clone(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(QuadInt {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            rad: self.rad.clone(),
        })
    }

    /// `((a₁ + b₁√D)/2)·((a₂ + b₂√D)/2)`; the halved cross terms are exact
    /// integers precisely because both factors satisfy the order invariant.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let two = int::<T>(2);
        let a_num = &(&self.a * &other.a) + &(&(&self.b * &other.b) * self.rad.get());
        let b_num = &(&self.a * &other.b) + &(&self.b * &other.a);
        debug_assert!(a_num.mod_floor(&two).is_zero() && b_num.mod_floor(&two).is_zero());
        let out = QuadInt {
            a: a_num.div_floor(&two),
            b: b_num.div_floor(&two),
            rad: self.rad.clone(),
        };
        debug_assert!(order_valid(&out.a, &out.b, out.rad.get()));
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.rad.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same radicand");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same radicand");
            }
        }
        acc
    }

    /// Scale by an ordinary integer.
    pub fn scale(&self, k: &T) -> Self {
        QuadInt {
            a: &self.a * k,
            b: &self.b * k,
            rad: self.rad.clone(),
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.rad != other.rad {
            return Err(Error::MismatchedRadicands(
                self.rad.get().to_string(),
                other.rad.get().to_string(),
            ));
        }
        Ok(())
    }
}

impl<T: Scalar> PartialOrd for QuadInt<T>
where
    for<'a> &'a T: RefNum<T>,
{
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for QuadInt<T>
where
    for<'a> &'a T: RefNum<T>,
{
    /// Order as real numbers (panics on mismatched radicands).
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.checked_sub(other).expect("same radicand");
        match diff.sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

// Binary operators are provided on owned values only. An `impl … for
// &QuadInt<T>` whose where-clause repeats the `RefNum` bound would become a
// candidate whenever the solver asks `&_: Add<&_>` with an open inference
// variable, and the attempt `_ = QuadInt<U>` recurses without bound.
macro_rules! quadint_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: Scalar> $trait for QuadInt<T>
        where
            for<'a> &'a T: RefNum<T>,
        {
            type Output = QuadInt<T>;
            fn $method(self, rhs: QuadInt<T>) -> QuadInt<T> {
                self.$checked(&rhs).expect("same radicand")
            }
        }
    };
}

quadint_binop!(Add, add, checked_add);
quadint_binop!(Sub, sub, checked_sub);
quadint_binop!(Mul, mul, checked_mul);

impl<T: Scalar> Neg for &QuadInt<T>
where
    for<'a> &'a T: RefNum<T>,
{
    type Output = QuadInt<T>;
    fn neg(self) -> QuadInt<T> {
        QuadInt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            rad: self.rad.clone(),
        }
    }
}

impl<T: Scalar> fmt::Display for QuadInt<T>
where
    for<'a> &'a T: RefNum<T>,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_one() {
            write!(f, "({} + √{})/2", self.a, self.rad.get())
        } else if (-self.b.clone()).is_one() {
            write!(f, "({} - √{})/2", self.a, self.rad.get())
        } else if self.b.is_negative() {
            write!(f, "({} - {}√{})/2", self.a, -self.b.clone(), self.rad.get())
        } else {
            write!(f, "({} + {}√{})/2", self.a, self.b, self.rad.get())
        }
    }
}

/// `(a + b√r)/den` in lowest terms: `den > 0`, `gcd(a, b, den) = 1`, and
/// `r = 0` exactly when the value is rational (`b = 0`). This is a field
/// element, so no order constraint applies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadRat<T> {
    a: T,
    b: T,
    r: T,
    den: T,
}

impl<T: Scalar> QuadRat<T>
where
    for<'a> &'a T: RefNum<T>,
{
    fn reduced(mut a: T, mut b: T, mut r: T, mut den: T) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if b.is_zero() {
            r = T::zero();
        }
        if den.is_negative() {
            a = -a;
            b = -b;
            den = -den;
        }
        let g = a.gcd(&b).gcd(&den);
        if !g.is_zero() && !g.is_one() {
            a = a.div_floor(&g);
            b = b.div_floor(&g);
            den = den.div_floor(&g);
        }
        Ok(QuadRat { a, b, r, den })
    }

    pub fn rational(num: T, den: T) -> Result<Self> {
        Self::reduced(num, T::zero(), T::zero(), den)
    }

    pub fn from_int(n: T) -> Self {
        QuadRat {
            a: n,
            b: T::zero(),
            r: T::zero(),
            den: T::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(T::zero())
    }

    /// `(a + b√r)/den` for a genuine radicand.
    pub fn new(a: T, b: T, rad: &Radicand<T>, den: T) -> Result<Self> {
        Self::reduced(a, b, rad.get().clone(), den)
    }

    pub fn from_quad_int(x: &QuadInt<T>) -> Self {
        Self::reduced(
            x.a().clone(),
            x.b().clone(),
            x.radicand().get().clone(),
            int::<T>(2),
        )
        .expect("denominator 2 is nonzero")
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    /// Zero for rational values.
    pub fn radicand_value(&self) -> &T {
        &self.r
    }

    pub fn den(&self) -> &T {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Shared radicand for a binary operation; rational operands are
    /// compatible with everything.
    fn join_radicand(&self, other: &Self) -> Result<T> {
        if self.r.is_zero() {
            return Ok(other.r.clone());
        }
        if other.r.is_zero() || self.r == other.r {
            return Ok(self.r.clone());
        }
        Err(Error::MismatchedRadicands(
            self.r.to_string(),
            other.r.to_string(),
        ))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let r = self.join_radicand(other)?;
        Self::reduced(
            &(&self.a * &other.den) + &(&other.a * &self.den),
            &(&self.b * &other.den) + &(&other.b * &self.den),
            r,
            &self.den * &other.den,
        )
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let r = self.join_radicand(other)?;
        Self::reduced(
            &(&self.a * &other.a) + &(&(&self.b * &other.b) * &r),
            &(&self.a * &other.b) + &(&self.b * &other.a),
            r,
            &self.den * &other.den,
        )
    }

    /// Multiplicative inverse via the conjugate; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        // 1/((a+b√r)/den) = den(a − b√r) / (a² − r·b²)
        let m = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &self.r);
        debug_assert!(!m.is_zero(), "radicand is non-square, so a² ≠ r·b²");
        Self::reduced(&self.den * &self.a, -(&self.den * &self.b), self.r.clone(), m)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    pub fn scale_int(&self, k: &T) -> Self {
        Self::reduced(&self.a * k, &self.b * k, self.r.clone(), self.den.clone())
            .expect("denominator unchanged")
    }

    /// Exact sign in {-1, 0, 1}.
    pub fn sign(&self) -> i8 {
        let sa = sign_i8(&self.a);
        let sb = sign_i8(&self.b);
        let s_num = match (sa, sb) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (x, y) if x == y => x,
            _ => {
                let aa = &self.a * &self.a;
                let rbb = &(&self.b * &self.b) * &self.r;
                debug_assert!(aa != rbb);
                if aa > rbb {
                    sa
                } else {
                    sb
                }
            }
        };
        s_num * sign_i8(&self.den)
    }

    /// Parts `(a, b, D, den)` of the normalized shape `(a + b√D)/(2·den)`
    /// used by the report layer; `D = 0` marks a rational value.
    pub fn doubled_parts(&self) -> (T, T, T, T) {
        let two = int::<T>(2);
        if self.den.is_even() {
            (
                self.a.clone(),
                self.b.clone(),
                self.r.clone(),
                self.den.div_floor(&two),
            )
        } else {
            (
                &self.a * &two,
                &self.b * &two,
                self.r.clone(),
                self.den.clone(),
            )
        }
    }

    /// Inverse of [`Self::doubled_parts`].
    pub fn from_doubled_parts(a: T, b: T, r: T, den: T) -> Result<Self> {
        Self::reduced(a, b, r, int::<T>(2) * den)
    }
}

// Owned-value operators only, for the same trait-solver reason as
// `quadint_binop` above.
macro_rules! quadrat_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: Scalar> $trait for QuadRat<T>
        where
            for<'a> &'a T: RefNum<T>,
        {
            type Output = QuadRat<T>;
            fn $method(self, rhs: QuadRat<T>) -> QuadRat<T> {
                self.$checked(&rhs).expect("compatible radicands")
            }
        }
    };
}

quadrat_binop!(Add, add, checked_add);
quadrat_binop!(Sub, sub, checked_sub);
quadrat_binop!(Mul, mul, checked_mul);

impl<T: Scalar> Neg for &QuadRat<T>
where
    for<'a> &'a T: RefNum<T>,
{
    type Output = QuadRat<T>;
    fn neg(self) -> QuadRat<T> {
        QuadRat {
            a: -self.a.clone(),
            b: -self.b.clone(),
            r: self.r.clone(),
            den: self.den.clone(),
        }
    }
}

impl<T: Scalar> fmt::Display for QuadRat<T>
where
    for<'a> &'a T: RefNum<T>,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            if self.den.is_one() {
                return write!(f, "{}", self.a);
            }
            return write!(f, "{}/{}", self.a, self.den);
        }
        let (sign, magnitude) = if self.b.is_negative() {
            ("-", -self.b.clone())
        } else {
            ("+", self.b.clone())
        };
        let root = if magnitude.is_one() {
            format!("√{}", self.r)
        } else {
            format!("{magnitude}√{}", self.r)
        };
        if self.den.is_one() && self.a.is_zero() {
            let bare = if sign == "-" { "-" } else { "" };
            return write!(f, "{bare}{root}");
        }
        if self.den.is_one() {
            return write!(f, "{} {sign} {root}", self.a);
        }
        write!(f, "({} {sign} {root})/{}", self.a, self.den)
    }
}
