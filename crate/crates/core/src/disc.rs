//! Discriminant groups `A_L = L*/L` and the action isometries induce on
//! them.
//!
//! For a nondegenerate Gram matrix `G` the dual quotient is `A_L ≅ ℤ²/Gℤ²`,
//! made explicit by a Smith normal form `U·G·V = diag(d₁, d₂)` with
//! unimodular transforms: the class of a dual vector `w ∈ L*` gets
//! coordinates `U·G·w` in `ℤ/d₁ ⊕ ℤ/d₂`. An isometry `M` acts on duals the
//! same way it acts on the lattice, and in these coordinates the action is
//! the integer matrix
//!
//! ```text
//! B = U · ᵗM⁻¹ · U⁻¹      (using G·M·G⁻¹ = ᵗM⁻¹)
//! ```
//!
//! reduced row-wise mod the invariant factors. Factor-1 components are
//! dropped, so for both lattice families the group is cyclic and the action
//! is a single residue. The gluing layer only ever asks whether that action
//! is `±identity`.

use crate::lattice::{GramForm, Mat2};
use crate::scalar::Scalar;
use num_rational::Ratio;
use num_traits::RefNum;

/// `U·M·V = diag(d₁, d₂)` with `d₁ | d₂`, both nonnegative, `U`, `V`
/// unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub u: Mat2<T>,
    pub v: Mat2<T>,
    pub d1: T,
    pub d2: T,
}

fn row_swap<T: Scalar>(a: &mut Mat2<T>, u: &mut Mat2<T>)
where
    for<'a> &'a T: RefNum<T>,
{
    std::mem::swap(&mut a.m00, &mut a.m10);
    std::mem::swap(&mut a.m01, &mut a.m11);
    std::mem::swap(&mut u.m00, &mut u.m10);
    std::mem::swap(&mut u.m01, &mut u.m11);
}

fn col_swap<T: Scalar>(a: &mut Mat2<T>, v: &mut Mat2<T>)
where
    for<'a> &'a T: RefNum<T>,
{
    std::mem::swap(&mut a.m00, &mut a.m01);
    std::mem::swap(&mut a.m10, &mut a.m11);
    std::mem::swap(&mut v.m00, &mut v.m01);
    std::mem::swap(&mut v.m10, &mut v.m11);
}

/// `row₂ −= q·row₁`.
fn row_sub<T: Scalar>(a: &mut Mat2<T>, u: &mut Mat2<T>, q: &T)
where
    for<'a> &'a T: RefNum<T>,
{
    a.m10 = &a.m10 - &(q * &a.m00);
    a.m11 = &a.m11 - &(q * &a.m01);
    u.m10 = &u.m10 - &(q * &u.m00);
    u.m11 = &u.m11 - &(q * &u.m01);
}

/// `col₂ −= q·col₁`.
fn col_sub<T: Scalar>(a: &mut Mat2<T>, v: &mut Mat2<T>, q: &T)
where
    for<'a> &'a T: RefNum<T>,
{
    a.m01 = &a.m01 - &(q * &a.m00);
    a.m11 = &a.m11 - &(q * &a.m10);
    v.m01 = &v.m01 - &(q * &v.m00);
    v.m11 = &v.m11 - &(q * &v.m10);
}

/// `col₁ += col₂`.
fn col_add<T: Scalar>(a: &mut Mat2<T>, v: &mut Mat2<T>)
where
    for<'a> &'a T: RefNum<T>,
{
    a.m00 = &a.m00 + &a.m01;
    a.m10 = &a.m10 + &a.m11;
    v.m00 = &v.m00 + &v.m01;
    v.m10 = &v.m10 + &v.m11;
}

/// Smith normal form of a 2×2 integer matrix, with transforms.
pub fn smith_form<T: Scalar>(m: &Mat2<T>) -> SmithForm<T>
where
    for<'a> &'a T: RefNum<T>,
{
    let mut a = m.clone();
    let mut u = Mat2::identity();
    let mut v = Mat2::identity();
    loop {
        // Keep a nonzero pivot unless the matrix is zero.
        if a.m00.is_zero() {
            if !a.m10.is_zero() {
                row_swap(&mut a, &mut u);
            } else if !a.m01.is_zero() {
                col_swap(&mut a, &mut v);
            } else if !a.m11.is_zero() {
                row_swap(&mut a, &mut u);
                col_swap(&mut a, &mut v);
            } else {
                break;
            }
        }
        if !a.m10.is_zero() {
            let q = a.m10.div_floor(&a.m00);
            row_sub(&mut a, &mut u, &q);
            if !a.m10.is_zero() {
                row_swap(&mut a, &mut u);
            }
            continue;
        }
        if !a.m01.is_zero() {
            let q = a.m01.div_floor(&a.m00);
            col_sub(&mut a, &mut v, &q);
            if !a.m01.is_zero() {
                col_swap(&mut a, &mut v);
            }
            continue;
        }
        // Diagonal; enforce d₁ | d₂ by folding col₂ into col₁ and rerunning.
        if !a.m11.is_zero() && !a.m11.mod_floor(&a.m00).is_zero() {
            col_add(&mut a, &mut v);
            continue;
        }
        break;
    }
    if a.m00.is_negative() {
        a.m00 = -a.m00;
        u.m00 = -u.m00.clone();
        u.m01 = -u.m01.clone();
    }
    if a.m11.is_negative() {
        a.m11 = -a.m11;
        u.m10 = -u.m10.clone();
        u.m11 = -u.m11.clone();
    }
    debug_assert!(u.det().abs().is_one() && v.det().abs().is_one());
    SmithForm {
        d1: a.m00,
        d2: a.m11,
        u,
        v,
    }
}

/// The finite group `A_L = L*/L` with a fixed coordinate system.
#[derive(Debug, Clone)]
pub struct DiscriminantGroup<T> {
    u: Mat2<T>,
    u_inv: Mat2<T>,
    factors_all: [T; 2],
    kept: Vec<usize>,
    generators: Vec<(Ratio<T>, Ratio<T>)>,
}

impl<T: Scalar> DiscriminantGroup<T>
where
    for<'a> &'a T: RefNum<T>,
{
    pub fn from_form(form: &GramForm<T>) -> Self {
        let snf = smith_form(&form.matrix());
        let u_inv = snf.u.inverse().expect("SNF transform is unimodular");
        let det = form.det();
        // adj(G)/det = G⁻¹; generator i of ℤ/dᵢ pulls back to the dual
        // vector xᵢ = G⁻¹·U⁻¹·êᵢ.
        let adj = Mat2::new(
            form.g11().clone(),
            -form.g01().clone(),
            -form.g01().clone(),
            form.g00().clone(),
        );
        let factors_all = [snf.d1.clone(), snf.d2.clone()];
        let mut kept = Vec::new();
        let mut generators = Vec::new();
        for (i, f) in factors_all.iter().enumerate() {
            if f.is_one() {
                continue;
            }
            kept.push(i);
            let col = u_inv.column(i);
            let num = adj.apply(&col);
            generators.push((
                Ratio::new(num.0, det.clone()),
                Ratio::new(num.1, det.clone()),
            ));
        }
        DiscriminantGroup {
            u: snf.u,
            u_inv,
            factors_all,
            kept,
            generators,
        }
    }

    /// `|A_L| = |det G|`.
    pub fn order(&self) -> T {
        &self.factors_all[0] * &self.factors_all[1]
    }

    /// Invariant factors `> 1`.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.kept
            .iter()
            .map(|&i| self.factors_all[i].clone())
            .collect()
    }

    /// Dual vectors in `L ⊗ ℚ` representing the generators, parallel to
    /// [`Self::invariant_factors`].
    pub fn generators(&self) -> &[(Ratio<T>, Ratio<T>)] {
        &self.generators
    }

    /// The action a lattice isometry induces on `A_L`. The matrix must be
    /// unimodular (every isometry of a nondegenerate form is).
    pub fn action(&self, m: &Mat2<T>) -> DiscAction<T> {
        let m_inv = m.inverse().expect("isometries are unimodular");
        let b = self.u.mul(&m_inv.transpose()).mul(&self.u_inv);
        let full = [[b.m00, b.m01], [b.m10, b.m11]];
        let factors: Vec<T> = self.invariant_factors();
        let entries = self
            .kept
            .iter()
            .map(|&i| {
                self.kept
                    .iter()
                    .map(|&j| full[i][j].mod_floor(&self.factors_all[i]))
                    .collect()
            })
            .collect();
        DiscAction { factors, entries }
    }
}

/// An endomorphism of `⊕ᵢ ℤ/dᵢ`, entries in row `i` reduced mod `dᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscAction<T> {
    factors: Vec<T>,
    entries: Vec<Vec<T>>,
}

impl<T: Scalar> DiscAction<T>
where
    for<'a> &'a T: RefNum<T>,
{
    pub fn factors(&self) -> &[T] {
        &self.factors
    }

    pub fn entries(&self) -> &[Vec<T>] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.matches(|i, j, d| {
            if i == j {
                T::one().mod_floor(d)
            } else {
                T::zero()
            }
        })
    }

    pub fn is_minus_identity(&self) -> bool {
        self.matches(|i, j, d| {
            if i == j {
                (-T::one()).mod_floor(d)
            } else {
                T::zero()
            }
        })
    }

    /// `+1` / `−1` when the action is plus or minus the identity (preferring
    /// `+1` where the two coincide), `None` otherwise.
    pub fn pm_identity_sign(&self) -> Option<i8> {
        if self.is_identity() {
            Some(1)
        } else if self.is_minus_identity() {
            Some(-1)
        } else {
            None
        }
    }

    fn matches(&self, expect: impl Fn(usize, usize, &T) -> T) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| *e == expect(i, j, &self.factors[i]))
        })
    }

    /// Composition `self ∘ other`, row-wise reduced.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.factors, other.factors, "actions on different groups");
        let k = self.factors.len();
        let entries = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let mut acc = T::zero();
                        for l in 0..k {
                            acc = acc + &self.entries[i][l] * &other.entries[l][j];
                        }
                        acc.mod_floor(&self.factors[i])
                    })
                    .collect()
            })
            .collect();
        DiscAction {
            factors: self.factors.clone(),
            entries,
        }
    }
}
