//! Kähler-cone chambers for hyperbolic rank-2 forms.
//!
//! The positive cone `{Q > 0}` of a signature-(1,1) form has two components,
//! each an open angular sector bounded by the two isotropic directions. Root
//! hyperplanes `r^⊥` (one line per root class) slice the component into
//! chambers; everything downstream needs the chamber containing a fixed
//! integer interior point `w₀`.
//!
//! All geometry here is exact. A wall line through a root `r` is spanned by
//! `t = J·G·r` (with `J` the quarter turn), sign-normalized into `w₀`'s
//! component via the pairing — two positive vectors pair positively exactly
//! when they share a component, so the orientation never degenerates.
//! Angular comparisons between candidate walls are plain integer cross
//! products, valid because the component spans less than a half plane.
//! Boundary rays of the component are quadratic irrationals `(±1, ·)` in
//! [`QuadRat`] coordinates (rational when the discriminant is a square), so
//! chamber preservation by an isometry is a decidable, exact ray-set
//! comparison.

use crate::lattice::{isotropic_classes, GramForm, LatticeVector, Mat2};
use crate::quad::{QuadRat, Radicand};
use crate::scalar::{int, perfect_sqrt, Scalar};
use crate::Result;
use num_traits::RefNum;
use std::fmt;

/// A direction (not a ± class) with exact coordinates, normalized so the
/// first nonzero coordinate is `±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ray<T> {
    x: QuadRat<T>,
    y: QuadRat<T>,
}

impl<T: Scalar> Ray<T>
where
    for<'a> &'a T: RefNum<T>,
{
    /// Scales `(x, y) ≠ 0` by a positive factor into normal form.
    pub fn new(x: QuadRat<T>, y: QuadRat<T>) -> Self {
        let pick = if x.is_zero() { &y } else { &x };
        assert!(!pick.is_zero(), "a ray needs a nonzero direction");
        let scale = match pick.sign() {
            -1 => (-pick).inv(),
            _ => pick.inv(),
        }
        .expect("nonzero by choice");
        Ray {
            x: x.checked_mul(&scale).expect("shared radicand"),
            y: y.checked_mul(&scale).expect("shared radicand"),
        }
    }

    pub fn from_integer(v: &LatticeVector<T>) -> Self {
        Ray::new(
            QuadRat::rational(v.0.clone(), T::one()).expect("denominator 1"),
            QuadRat::rational(v.1.clone(), T::one()).expect("denominator 1"),
        )
    }

    pub fn x(&self) -> &QuadRat<T> {
        &self.x
    }

    pub fn y(&self) -> &QuadRat<T> {
        &self.y
    }

    /// Image under an integer matrix, renormalized.
    pub fn apply(&self, m: &Mat2<T>) -> Self {
        let x = self
            .x
            .scale_int(&m.m00)
            .checked_add(&self.y.scale_int(&m.m01))
            .expect("shared radicand");
        let y = self
            .x
            .scale_int(&m.m10)
            .checked_add(&self.y.scale_int(&m.m11))
            .expect("shared radicand");
        Ray::new(x, y)
    }
}

impl<T: Scalar> fmt::Display for Ray<T>
where
    for<'a> &'a T: RefNum<T>,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WallKind {
    /// Orthogonal line of a root class.
    Root,
    /// Isotropic boundary of the positive cone (no root beyond it).
    ConeBoundary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall<T> {
    pub kind: WallKind,
    pub ray: Ray<T>,
    /// The root class cutting this wall, for [`WallKind::Root`].
    pub root: Option<LatticeVector<T>>,
}

/// The chamber of the positive cone containing `interior`, listed with its
/// counterclockwise (`left`) and clockwise (`right`) walls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber<T> {
    pub left: Wall<T>,
    pub right: Wall<T>,
    pub interior: LatticeVector<T>,
}

/// Deterministic integer interior point: `(1, 0)` when it qualifies, else
/// the first point in a fixed spiral order. A point qualifies when
/// `Q(w) > 0` and it pairs nonzero against every listed root (so no listed
/// wall passes through it).
pub fn interior_point<T: Scalar>(
    form: &GramForm<T>,
    roots: &[LatticeVector<T>],
) -> LatticeVector<T>
where
    for<'a> &'a T: RefNum<T>,
{
    let qualifies = |w: &LatticeVector<T>| {
        form.evaluate(w).is_positive()
            && roots.iter().all(|r| !form.pair(w, r).is_zero())
    };
    let e1 = LatticeVector::from_i64(1, 0);
    if qualifies(&e1) {
        return e1;
    }
    for k in 1..=1_000_000i64 {
        for x in (-k..=k).rev() {
            for y in -k..=k {
                if x.abs().max(y.abs()) != k {
                    continue;
                }
                let w = LatticeVector::from_i64(x, y);
                if qualifies(&w) {
                    return w;
                }
            }
        }
    }
    unreachable!("a hyperbolic form has positive vectors off finitely many walls")
}

fn quarter_turn<T: Scalar>(u: &LatticeVector<T>) -> LatticeVector<T>
where
    for<'a> &'a T: RefNum<T>,
{
    LatticeVector(-u.1.clone(), u.0.clone())
}

fn cross_rational<T: Scalar>(a: &Ray<T>, b: &Ray<T>) -> QuadRat<T>
where
    for<'a> &'a T: RefNum<T>,
{
    a.x()
        .checked_mul(b.y())
        .and_then(|p| {
            a.y()
                .checked_mul(b.x())
                .and_then(|q| p.checked_sub(&q))
        })
        .expect("rays share one radicand")
}

/// The two boundary rays of `w₀`'s cone component, `(left, right)`.
fn boundary_rays<T: Scalar>(
    form: &GramForm<T>,
    w0: &LatticeVector<T>,
) -> (Ray<T>, Ray<T>)
where
    for<'a> &'a T: RefNum<T>,
{
    let delta = form.disc();
    let gw0 = LatticeVector(
        form.pair(&LatticeVector(T::one(), T::zero()), w0),
        form.pair(&LatticeVector(T::zero(), T::one()), w0),
    );
    let mut rays: Vec<Ray<T>> = Vec::new();
    if perfect_sqrt(&delta).is_some() {
        for v in isotropic_classes(form) {
            // Orient the ± class toward w₀'s component.
            let oriented = if form.pair(&v, w0).is_negative() {
                v.neg()
            } else {
                v
            };
            rays.push(Ray::from_integer(&oriented));
        }
    } else {
        let rad = Radicand::new(delta).expect("non-square by the branch");
        for sign in [1i64, -1] {
            // Direction (−g01 ± √Δ, g00); g00 ≠ 0 whenever Δ is not a
            // perfect square.
            let x = QuadRat::new(-form.g01().clone(), int(sign), &rad, T::one())
                .expect("denominator 1");
            let y = QuadRat::rational(form.g00().clone(), T::one()).expect("denominator 1");
            // Pairing against w₀ selects the component's ray on this line.
            let pairing = x
                .scale_int(&gw0.0)
                .checked_add(&y.scale_int(&gw0.1))
                .expect("shared radicand");
            let ray = match pairing.sign() {
                -1 => Ray::new(-&x, -&y),
                _ => Ray::new(x, y),
            };
            rays.push(ray);
        }
    }
    let w0_ray = Ray::from_integer(w0);
    let mut left = None;
    let mut right = None;
    for ray in rays {
        match cross_rational(&w0_ray, &ray).sign() {
            1 => left = Some(ray),
            -1 => right = Some(ray),
            _ => unreachable!("w₀ is positive, boundary rays are isotropic"),
        }
    }
    (
        left.expect("one boundary ray on each side"),
        right.expect("one boundary ray on each side"),
    )
}

/// The chamber around `w0` cut out by the given root classes. `w0` must
/// come from [`interior_point`] over the same root list (positive, and off
/// every listed wall).
pub fn chamber<T: Scalar>(
    form: &GramForm<T>,
    roots: &[LatticeVector<T>],
    w0: &LatticeVector<T>,
) -> Result<Chamber<T>>
where
    for<'a> &'a T: RefNum<T>,
{
    form.require_hyperbolic()?;
    debug_assert!(form.evaluate(w0).is_positive());

    let gw0 = LatticeVector(
        form.pair(&LatticeVector(T::one(), T::zero()), w0),
        form.pair(&LatticeVector(T::zero(), T::one()), w0),
    );

    // Oriented wall directions, split by side of w₀. Each wall keeps the
    // effective representative of its root: the sign pairing positively
    // with the interior point.
    let mut lefts: Vec<(LatticeVector<T>, LatticeVector<T>)> = Vec::new();
    let mut rights: Vec<(LatticeVector<T>, LatticeVector<T>)> = Vec::new();
    for r in roots {
        let gr = LatticeVector(
            form.pair(&LatticeVector(T::one(), T::zero()), r),
            form.pair(&LatticeVector(T::zero(), T::one()), r),
        );
        let mut t = quarter_turn(&gr);
        let pairing = &(&t.0 * &gw0.0) + &(&t.1 * &gw0.1);
        debug_assert!(!pairing.is_zero(), "positive vectors never pair to zero");
        if pairing.is_negative() {
            t = t.neg();
        }
        let w0_r = &(&w0.0 * &gr.0) + &(&w0.1 * &gr.1);
        assert!(
            !w0_r.is_zero() && !w0.cross(&t).is_zero(),
            "interior point must avoid the wall of {r}"
        );
        let effective = if w0_r.is_negative() { r.neg() } else { r.clone() };
        if w0.cross(&t).is_positive() {
            lefts.push((t, effective));
        } else {
            rights.push((t, effective));
        }
    }

    // Angular nearest on each side; within a half plane the cross product
    // is a total order.
    let nearest_left = lefts.into_iter().reduce(|best, cand| {
        if best.0.cross(&cand.0).is_positive() {
            best
        } else {
            cand
        }
    });
    let nearest_right = rights.into_iter().reduce(|best, cand| {
        if best.0.cross(&cand.0).is_negative() {
            best
        } else {
            cand
        }
    });

    let need_boundary = nearest_left.is_none() || nearest_right.is_none();
    let boundary = if need_boundary {
        Some(boundary_rays(form, w0))
    } else {
        None
    };

    let left = match nearest_left {
        Some((t, r)) => Wall {
            kind: WallKind::Root,
            ray: Ray::from_integer(&t),
            root: Some(r),
        },
        None => Wall {
            kind: WallKind::ConeBoundary,
            ray: boundary.as_ref().unwrap().0.clone(),
            root: None,
        },
    };
    let right = match nearest_right {
        Some((t, r)) => Wall {
            kind: WallKind::Root,
            ray: Ray::from_integer(&t),
            root: Some(r),
        },
        None => Wall {
            kind: WallKind::ConeBoundary,
            ray: boundary.as_ref().unwrap().1.clone(),
            root: None,
        },
    };

    Ok(Chamber {
        left,
        right,
        interior: w0.clone(),
    })
}

impl<T: Scalar> Chamber<T>
where
    for<'a> &'a T: RefNum<T>,
{
    /// Strict interior test by Cramer signs: `v = α·left + β·right` with
    /// `α, β > 0`.
    pub fn contains(&self, v: &LatticeVector<T>) -> bool {
        let vr = Ray::from_integer(v);
        let a = &self.left.ray;
        let b = &self.right.ray;
        let s = cross_rational(a, b).sign();
        cross_rational(&vr, b).sign() == s && cross_rational(a, &vr).sign() == s
    }

    /// Whether an isometry maps this chamber onto itself (possibly swapping
    /// the two walls). Ray directions are genuine directions, so a map onto
    /// the opposite component fails here; the interior image is re-checked
    /// as well.
    pub fn preserved_by(&self, m: &Mat2<T>) -> bool {
        let il = self.left.ray.apply(m);
        let ir = self.right.ray.apply(m);
        let rays_fixed = (il == self.left.ray && ir == self.right.ray)
            || (il == self.right.ray && ir == self.left.ray);
        rays_fixed && self.contains(&m.apply(&self.interior))
    }
}
