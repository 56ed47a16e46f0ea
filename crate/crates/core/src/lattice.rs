//! Rank-2 even lattices: Gram forms, vectors, isometries, and root systems.
//!
//! The central objects are [`GramForm`] (a symmetric 2×2 integer matrix with
//! even diagonal and nonzero determinant) and the two one-parameter families
//!
//! ```text
//! L_d = [[2, d], [d, -2]]     M_d = [[2, d], [d, 2]]      (d odd, d ≥ 3)
//! ```
//!
//! Root enumeration reduces `Q(v) = −2` to a Pell-type equation by
//! completing the square: with `u = g₀₀x + g₀₁y` and `Δ = g₀₁² − g₀₀g₁₁`,
//!
//! ```text
//! u² − Δ·y² = −2·g₀₀.
//! ```
//!
//! When `|g₀₀| = 2` the right side is `∓4` and the unit-theoretic solver in
//! [`crate::pell`] answers completely: either a certified empty list or an
//! infinite family listed up to a bound. Square `Δ` collapses to a finite
//! divisor enumeration, and anything else falls back to a bounded scan that
//! still tries the residue sieve for an emptiness proof.

use crate::pell::{self, Certificate, PellOutcome, PellRhs};
use crate::quad::Radicand;
use crate::scalar::{int, perfect_sqrt, Scalar};
use crate::{Error, Result};
use num_traits::RefNum;
use std::fmt;

/// A column vector in the lattice `ℤ²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector<T>(pub T, pub T);

impl<T: Scalar> LatticeVector<T>
where
    for<'a> &'a T: RefNum<T>,
{
    pub fn from_i64(x: i64, y: i64) -> Self {
        LatticeVector(int(x), int(y))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }

    pub fn neg(&self) -> Self {
        LatticeVector(-self.0.clone(), -self.1.clone())
    }

    /// Representative of `{v, −v}` with positive first nonzero coordinate.
    pub fn canonical_class(&self) -> Self {
        if self.0.is_negative() || (self.0.is_zero() && self.1.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Divides out the content; the zero vector is returned unchanged.
    pub fn primitive(&self) -> Self {
        let g = self.0.gcd(&self.1);
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        LatticeVector(self.0.div_floor(&g), self.1.div_floor(&g))
    }

    /// The determinant `x₁y₂ − y₁x₂`; positive when `other` sits
    /// counterclockwise from `self`.
    pub fn cross(&self, other: &Self) -> T {
        &(&self.0 * &other.1) - &(&self.1 * &other.0)
    }
}

impl<T: fmt::Display> fmt::Display for LatticeVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// A 2×2 integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2<T> {
    pub m00: T,
    pub m01: T,
    pub m10: T,
    pub m11: T,
}

impl<T: Scalar> Mat2<T>
where
    for<'a> &'a T: RefNum<T>,
{
    pub fn new(m00: T, m01: T, m10: T, m11: T) -> Self {
        Mat2 { m00, m01, m10, m11 }
    }

    pub fn from_i64(m00: i64, m01: i64, m10: i64, m11: i64) -> Self {
        Mat2::new(int(m00), int(m01), int(m10), int(m11))
    }

    pub fn identity() -> Self {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn minus_identity() -> Self {
        Mat2::new(-T::one(), T::zero(), T::zero(), -T::one())
    }

    pub fn from_columns(c0: &LatticeVector<T>, c1: &LatticeVector<T>) -> Self {
        Mat2::new(c0.0.clone(), c1.0.clone(), c0.1.clone(), c1.1.clone())
    }

    pub fn column(&self, j: usize) -> LatticeVector<T> {
        match j {
            0 => LatticeVector(self.m00.clone(), self.m10.clone()),
            _ => LatticeVector(self.m01.clone(), self.m11.clone()),
        }
    }

    pub fn det(&self) -> T {
        &(&self.m00 * &self.m11) - &(&self.m01 * &self.m10)
    }

    pub fn trace(&self) -> T {
        &self.m00 + &self.m11
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(
            self.m00.clone(),
            self.m10.clone(),
            self.m01.clone(),
            self.m11.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        Mat2::new(
            -self.m00.clone(),
            -self.m01.clone(),
            -self.m10.clone(),
            -self.m11.clone(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2::new(
            &(&self.m00 * &rhs.m00) + &(&self.m01 * &rhs.m10),
            &(&self.m00 * &rhs.m01) + &(&self.m01 * &rhs.m11),
            &(&self.m10 * &rhs.m00) + &(&self.m11 * &rhs.m10),
            &(&self.m10 * &rhs.m01) + &(&self.m11 * &rhs.m11),
        )
    }

    pub fn apply(&self, v: &LatticeVector<T>) -> LatticeVector<T> {
        LatticeVector(
            &(&self.m00 * &v.0) + &(&self.m01 * &v.1),
            &(&self.m10 * &v.0) + &(&self.m11 * &v.1),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Inverse of a unimodular matrix (`det = ±1`); `None` otherwise.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        let adj = Mat2::new(
            self.m11.clone(),
            -self.m01.clone(),
            -self.m10.clone(),
            self.m00.clone(),
        );
        if det.is_one() {
            Some(adj)
        } else if (-det).is_one() {
            Some(adj.neg())
        } else {
            None
        }
    }

    pub fn is_identity(&self) -> bool {
        self.m00.is_one() && self.m11.is_one() && self.m01.is_zero() && self.m10.is_zero()
    }

    pub fn is_minus_identity(&self) -> bool {
        (-self.m00.clone()).is_one()
            && (-self.m11.clone()).is_one()
            && self.m01.is_zero()
            && self.m10.is_zero()
    }

    pub fn row_major(&self) -> [T; 4] {
        [
            self.m00.clone(),
            self.m01.clone(),
            self.m10.clone(),
            self.m11.clone(),
        ]
    }
}

impl<T: fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m00, self.m01, self.m10, self.m11
        )
    }
}

/// An even symmetric bilinear form on `ℤ²` with nonzero determinant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramForm<T> {
    g00: T,
    g01: T,
    g11: T,
}

/// Which lattice family a Gram matrix belongs to, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormClass<T> {
    FamilyL { d: T },
    FamilyM { d: T },
    Generic,
}

impl<T: Scalar> GramForm<T>
where
    for<'a> &'a T: RefNum<T>,
{
    /// Builds the form `[[g00, g01], [g01, g11]]`, rejecting odd diagonal
    /// entries and zero determinant.
    pub fn new(g00: T, g01: T, g11: T) -> Result<Self> {
        if g00.is_odd() {
            return Err(Error::OddDiagonal(g00.to_string()));
        }
        if g11.is_odd() {
            return Err(Error::OddDiagonal(g11.to_string()));
        }
        let form = GramForm { g00, g01, g11 };
        if form.det().is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(form)
    }

    fn family_parameter(d: &T) -> Result<T> {
        if d.is_even() || *d < int(3) {
            return Err(Error::InvalidFamilyParameter(d.to_string()));
        }
        Ok(d.clone())
    }

    /// `L_d = [[2, d], [d, −2]]` for odd `d ≥ 3`.
    pub fn family_l(d: &T) -> Result<Self> {
        let d = Self::family_parameter(d)?;
        GramForm::new(int(2), d, int(-2))
    }

    /// `M_d = [[2, d], [d, 2]]` for odd `d ≥ 3`.
    pub fn family_m(d: &T) -> Result<Self> {
        let d = Self::family_parameter(d)?;
        GramForm::new(int(2), d, int(2))
    }

    pub fn g00(&self) -> &T {
        &self.g00
    }

    pub fn g01(&self) -> &T {
        &self.g01
    }

    pub fn g11(&self) -> &T {
        &self.g11
    }

    pub fn matrix(&self) -> Mat2<T> {
        Mat2::new(
            self.g00.clone(),
            self.g01.clone(),
            self.g01.clone(),
            self.g11.clone(),
        )
    }

    pub fn det(&self) -> T {
        &(&self.g00 * &self.g11) - &(&self.g01 * &self.g01)
    }

    /// `Δ = g₀₁² − g₀₀·g₁₁ = −det`, the discriminant of the squared-up
    /// root equation.
    pub fn disc(&self) -> T {
        &(&self.g01 * &self.g01) - &(&self.g00 * &self.g11)
    }

    /// `(p, n)` counts of positive and negative eigenvalues.
    pub fn signature(&self) -> (u8, u8) {
        if self.det().is_negative() {
            (1, 1)
        } else {
            // Definite (det > 0 and the diagonal cannot vanish): the sign
            // of g00 decides which kind.
            if self.g00.is_positive() {
                (2, 0)
            } else {
                (0, 2)
            }
        }
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.signature() == (1, 1)
    }

    pub fn require_hyperbolic(&self) -> Result<()> {
        let sig = self.signature();
        if sig != (1, 1) {
            return Err(Error::NotHyperbolic { signature: sig });
        }
        Ok(())
    }

    /// `Q(v) = v·G·v`.
    pub fn evaluate(&self, v: &LatticeVector<T>) -> T {
        self.pair(v, v)
    }

    /// `⟨u, v⟩ = u·G·v`.
    pub fn pair(&self, u: &LatticeVector<T>, v: &LatticeVector<T>) -> T {
        let gx = &(&self.g00 * &v.0) + &(&self.g01 * &v.1);
        let gy = &(&self.g01 * &v.0) + &(&self.g11 * &v.1);
        &(&u.0 * &gx) + &(&u.1 * &gy)
    }

    /// Recognizes the `L_d` / `M_d` shapes (odd `d ≥ 3`).
    pub fn classify(&self) -> FormClass<T> {
        let two = int::<T>(2);
        if self.g00 == two && self.g01.is_odd() && self.g01 >= int(3) {
            if self.g11 == -two.clone() {
                return FormClass::FamilyL {
                    d: self.g01.clone(),
                };
            }
            if self.g11 == two {
                return FormClass::FamilyM {
                    d: self.g01.clone(),
                };
            }
        }
        FormClass::Generic
    }
}

impl<T: Scalar> fmt::Display for GramForm<T>
where
    for<'a> &'a T: RefNum<T>,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.g00, self.g01, self.g01, self.g11
        )
    }
}

/// True when `ᵗM·G·M = G`.
pub fn is_isometry<T: Scalar>(form: &GramForm<T>, m: &Mat2<T>) -> bool
where
    for<'a> &'a T: RefNum<T>,
{
    let g = form.matrix();
    m.transpose().mul(&g).mul(m) == g
}

/// A matrix checked to be an isometry of a particular form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsometryMatrix<T> {
    mat: Mat2<T>,
}

impl<T: Scalar> IsometryMatrix<T>
where
    for<'a> &'a T: RefNum<T>,
{
    pub fn new(form: &GramForm<T>, mat: Mat2<T>) -> Result<Self> {
        if !is_isometry(form, &mat) {
            return Err(Error::NotAnIsometry);
        }
        Ok(IsometryMatrix { mat })
    }

    pub fn matrix(&self) -> &Mat2<T> {
        &self.mat
    }

    pub fn into_matrix(self) -> Mat2<T> {
        self.mat
    }
}

/// A generator or distinguished isometry with its conventional label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedIsometry<T> {
    pub name: &'static str,
    pub matrix: Mat2<T>,
}

/// Generating set of `O(L_d)`: `−I` and the two root reflections fixing the
/// wall roots `(0,1)` and `(d,−1)`.
pub fn l_family_generators<T: Scalar>(d: &T) -> Vec<NamedIsometry<T>>
where
    for<'a> &'a T: RefNum<T>,
{
    vec![
        NamedIsometry {
            name: "-I",
            matrix: Mat2::minus_identity(),
        },
        NamedIsometry {
            name: "S0+",
            matrix: Mat2::new(-T::one(), T::zero(), -d.clone(), T::one()),
        },
        NamedIsometry {
            name: "S0-",
            matrix: Mat2::new(-T::one(), -d.clone(), T::zero(), T::one()),
        },
    ]
}

/// Generating set of `O(M_d)`: `−I`, the rotation-like `X`, and the swap `Y`.
pub fn m_family_generators<T: Scalar>(d: &T) -> Vec<NamedIsometry<T>>
where
    for<'a> &'a T: RefNum<T>,
{
    vec![
        NamedIsometry {
            name: "-I",
            matrix: Mat2::minus_identity(),
        },
        NamedIsometry {
            name: "X",
            matrix: Mat2::new(d.clone(), T::one(), -T::one(), T::zero()),
        },
        NamedIsometry {
            name: "Y",
            matrix: Mat2::new(T::zero(), T::one(), T::one(), T::zero()),
        },
    ]
}

/// The derived `M_d` elements `P = YX` and `Q = −XY` that appear in the
/// automorphism analysis.
pub fn m_family_derived<T: Scalar>(d: &T) -> Vec<NamedIsometry<T>>
where
    for<'a> &'a T: RefNum<T>,
{
    vec![
        NamedIsometry {
            name: "P",
            matrix: Mat2::new(-T::one(), T::zero(), d.clone(), T::one()),
        },
        NamedIsometry {
            name: "Q",
            matrix: Mat2::new(-T::one(), -d.clone(), T::zero(), T::one()),
        },
    ]
}

/// All vectors with `Q(v) = target` and both coordinates bounded by `bound`
/// in absolute value.
pub fn vectors_of_norm<T: Scalar>(
    form: &GramForm<T>,
    target: &T,
    bound: i64,
) -> Vec<LatticeVector<T>>
where
    for<'a> &'a T: RefNum<T>,
{
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            let v = LatticeVector::from_i64(x, y);
            if form.evaluate(&v) == *target {
                out.push(v);
            }
        }
    }
    out
}

/// Every isometry whose entries are bounded by `bound` in absolute value,
/// found by pairing column candidates; sorted row-major. This is the oracle
/// the family generator sets are tested against.
pub fn brute_force_isometries<T: Scalar>(form: &GramForm<T>, bound: i64) -> Vec<Mat2<T>>
where
    for<'a> &'a T: RefNum<T>,
{
    let c0s = vectors_of_norm(form, form.g00(), bound);
    let c1s = if form.g00() == form.g11() {
        c0s.clone()
    } else {
        vectors_of_norm(form, form.g11(), bound)
    };
    let mut out = Vec::new();
    for c0 in &c0s {
        for c1 in &c1s {
            if form.pair(c0, c1) == *form.g01() {
                // The three pairing conditions are exactly ᵗM·G·M = G.
                out.push(Mat2::from_columns(c0, c1));
            }
        }
    }
    out.sort_by(|a, b| a.row_major().cmp(&b.row_major()));
    out
}

/// Root classes (`Q(r) = −2`, up to sign) with a statement about how
/// complete the list is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEnumeration<T> {
    pub classes: Vec<LatticeVector<T>>,
    pub status: RootStatus<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootStatus<T> {
    /// The listed classes are provably all of them.
    CompleteFinite,
    /// No roots at all, certified by the attached unsolvability proof.
    Empty { certificate: Certificate<T> },
    /// Infinitely many classes; listed here up to `|y| ≤ bound`.
    InfiniteFamily,
    /// Scan up to the bound only; completeness unknown.
    BoundedScan,
}

/// Positive divisors of `|n|` (unsorted), `n ≠ 0`.
fn divisors_abs<T: Scalar>(n: &T) -> Vec<T>
where
    for<'a> &'a T: RefNum<T>,
{
    let n = n.abs();
    let mut out = Vec::new();
    let mut i = T::one();
    while &(&i * &i) <= &n {
        if n.mod_floor(&i).is_zero() {
            let j = n.div_floor(&i);
            out.push(i.clone());
            if j != i {
                out.push(j);
            }
        }
        i = i + T::one();
    }
    out
}

fn push_class<T: Scalar>(classes: &mut Vec<LatticeVector<T>>, v: LatticeVector<T>)
where
    for<'a> &'a T: RefNum<T>,
{
    let c = v.canonical_class();
    if !classes.contains(&c) {
        classes.push(c);
    }
}

/// Enumerates root classes of a hyperbolic form; see the module docs for the
/// case split. `bound` caps `|y|` wherever the listing is not provably
/// finite.
pub fn root_classes<T: Scalar>(form: &GramForm<T>, bound: i64) -> Result<RootEnumeration<T>>
where
    for<'a> &'a T: RefNum<T>,
{
    form.require_hyperbolic()?;
    root_classes_inner(form, bound, false)
}

fn root_classes_inner<T: Scalar>(
    form: &GramForm<T>,
    bound: i64,
    swapped: bool,
) -> Result<RootEnumeration<T>>
where
    for<'a> &'a T: RefNum<T>,
{
    let two = int::<T>(2);
    let minus_two = int::<T>(-2);

    // Case 1: g00 = 0, so y·(2·g01·x + g11·y) = −2 and y | 2.
    if form.g00.is_zero() {
        let mut classes = Vec::new();
        for y in [1i64, -1, 2, -2] {
            let y = int::<T>(y);
            let t = minus_two.div_floor(&y) - &(&form.g11 * &y);
            let den = &two * &form.g01;
            if t.mod_floor(&den).is_zero() {
                let x = t.div_floor(&den);
                push_class(&mut classes, LatticeVector(x, y));
            }
        }
        classes.sort_by_key(|v| (v.1.abs(), v.0.abs(), v.1.clone(), v.0.clone()));
        return Ok(RootEnumeration {
            classes,
            status: RootStatus::CompleteFinite,
        });
    }

    let delta = form.disc();
    let target = &minus_two * &form.g00;

    // Case 2: Δ = s², so (u − s·y)(u + s·y) = −2·g00 is a finite divisor
    // problem.
    if let Some(s) = perfect_sqrt(&delta) {
        let mut classes = Vec::new();
        let two_s = &two * &s;
        for e_abs in divisors_abs(&target) {
            for e in [e_abs.clone(), -e_abs] {
                let f = target.div_floor(&e);
                debug_assert_eq!(&e * &f, target);
                let sum = &e + &f;
                let diff = &f - &e;
                if !sum.is_even() || !diff.mod_floor(&two_s).is_zero() {
                    continue;
                }
                let u = sum.div_floor(&two);
                let y = diff.div_floor(&two_s);
                let x_num = &u - &(&form.g01 * &y);
                if x_num.mod_floor(&form.g00).is_zero() {
                    push_class(&mut classes, LatticeVector(x_num.div_floor(&form.g00), y));
                }
            }
        }
        classes.sort_by_key(|v| (v.1.abs(), v.0.abs(), v.1.clone(), v.0.clone()));
        return Ok(RootEnumeration {
            classes,
            status: RootStatus::CompleteFinite,
        });
    }

    // Case 3: |g00| = 2 — the exact Pell route.
    if form.g00.abs() == two {
        let rad = Radicand::new(delta.clone()).expect("Δ > 0 and non-square here");
        let rhs = if form.g00.is_positive() {
            PellRhs::MinusFour
        } else {
            PellRhs::PlusFour
        };
        return Ok(match pell::solution_stream(&rad, rhs) {
            None => {
                let certificate = match pell::solve(&rad, rhs) {
                    PellOutcome::Unsolvable(c) => c,
                    PellOutcome::Solvable { .. } => unreachable!("stream was empty"),
                };
                RootEnumeration {
                    classes: Vec::new(),
                    status: RootStatus::Empty { certificate },
                }
            }
            Some(stream) => {
                let mut classes = Vec::new();
                if rhs == PellRhs::PlusFour {
                    // y = 0 gives u = ±2 and the root class (1, 0).
                    push_class(&mut classes, LatticeVector(T::one(), T::zero()));
                }
                let bound_t = int::<T>(bound.max(0));
                for (u, y) in stream.take_while(|(_, y)| y <= &bound_t) {
                    for su in [u.clone(), -u.clone()] {
                        let x_num = &su - &(&form.g01 * &y);
                        debug_assert!(x_num.mod_floor(&form.g00).is_zero());
                        push_class(
                            &mut classes,
                            LatticeVector(x_num.div_floor(&form.g00), y.clone()),
                        );
                    }
                }
                RootEnumeration {
                    classes,
                    status: RootStatus::InfiniteFamily,
                }
            }
        });
    }

    // Case 3': |g11| = 2 — swap the basis vectors and reuse case 3.
    if !swapped && form.g11.abs() == two {
        let flipped = GramForm::new(form.g11.clone(), form.g01.clone(), form.g00.clone())?;
        let inner = root_classes_inner(&flipped, bound, true)?;
        let classes = inner
            .classes
            .into_iter()
            .map(|v| LatticeVector(v.1, v.0).canonical_class())
            .collect();
        return Ok(RootEnumeration {
            classes,
            status: inner.status,
        });
    }

    // Case 4: bounded scan over y, with a sieve attempt at an emptiness
    // certificate.
    let mut classes = Vec::new();
    for y in 0..=bound.max(0) {
        let y = int::<T>(y);
        let uu = &(&(&y * &y) * &delta) + &target;
        let Some(u) = perfect_sqrt(&uu) else {
            continue;
        };
        let signs = if u.is_zero() {
            vec![u.clone()]
        } else {
            vec![u.clone(), -u.clone()]
        };
        for su in signs {
            let x_num = &su - &(&form.g01 * &y);
            if x_num.mod_floor(&form.g00).is_zero() {
                push_class(
                    &mut classes,
                    LatticeVector(x_num.div_floor(&form.g00), y.clone()),
                );
            }
        }
    }
    let status = if classes.is_empty() {
        match pell::residue_obstruction(&delta, &target) {
            Some(modulus) => RootStatus::Empty {
                certificate: Certificate::Residue { modulus },
            },
            None => RootStatus::BoundedScan,
        }
    } else {
        RootStatus::BoundedScan
    };
    Ok(RootEnumeration { classes, status })
}

/// Primitive isotropic classes (`Q(v) = 0`, up to sign). Nonempty exactly
/// when `Δ` is a perfect square.
pub fn isotropic_classes<T: Scalar>(form: &GramForm<T>) -> Vec<LatticeVector<T>>
where
    for<'a> &'a T: RefNum<T>,
{
    let delta = form.disc();
    let Some(s) = perfect_sqrt(&delta) else {
        return Vec::new();
    };
    let two = int::<T>(2);
    let mut out = Vec::new();
    if form.g00.is_zero() {
        out.push(LatticeVector(T::one(), T::zero()));
        out.push(
            LatticeVector(-form.g11.clone(), &two * &form.g01)
                .primitive()
                .canonical_class(),
        );
    } else {
        for root in [&s - &form.g01, -(&s + &form.g01)] {
            out.push(
                LatticeVector(root, form.g00.clone())
                    .primitive()
                    .canonical_class(),
            );
        }
    }
    out.dedup();
    out
}
