//! Continued-fraction expansion of `√D` for non-square `D > 0`.
//!
//! The expansion `[a₀; a₁, …, a_ℓ]` (with the overline on `a₁…a_ℓ` implied)
//! is computed with the classical integer recurrence
//!
//! ```text
//! P₀ = 0, Q₀ = 1, a₀ = ⌊√D⌋
//! P' = a·Q − P,  Q' = (D − P'²)/Q,  a' = ⌊(a₀ + P')/Q'⌋
//! ```
//!
//! where every division is exact. The period closes at the first index with
//! `Q = 1` again, and the closing term is always `2·a₀`. Convergents `h/k`
//! satisfy the standard two-term recurrence; their defects `h² − D·k²` are
//! the raw material of the Pell solver next door.

use crate::quad::Radicand;
use crate::scalar::{int, isqrt, Scalar};
use num_traits::RefNum;

/// The periodic continued fraction of `√D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion<T> {
    radicand: T,
    floor_term: T,
    periodic: Vec<T>,
}

/// One convergent `h/k` of `√D` together with its defect `h² − D·k²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent<T> {
    pub h: T,
    pub k: T,
    pub defect: T,
}

impl<T: Scalar> CfExpansion<T>
where
    for<'a> &'a T: RefNum<T>,
{
    pub fn sqrt(rad: &Radicand<T>) -> Self {
        let d = rad.get().clone();
        let a0 = isqrt(&d);
        let mut periodic: Vec<T> = Vec::new();
        let mut p = T::zero();
        let mut q = T::one();
        loop {
            // Advance (P, Q) one step using the current term.
            let a = if periodic.is_empty() {
                a0.clone()
            } else {
                periodic.last().unwrap().clone()
            };
            let p_next = &(&a * &q) - &p;
            let q_next_num = &d - &(&p_next * &p_next);
            debug_assert!(q_next_num.mod_floor(&q).is_zero());
            let q_next = q_next_num.div_floor(&q);
            let term = (&a0 + &p_next).div_floor(&q_next);
            periodic.push(term);
            p = p_next;
            q = q_next;
            if q.is_one() {
                break;
            }
        }
        debug_assert_eq!(*periodic.last().unwrap(), int::<T>(2) * a0.clone());
        CfExpansion {
            radicand: d,
            floor_term: a0,
            periodic,
        }
    }

    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    /// `a₀ = ⌊√D⌋`.
    pub fn floor_term(&self) -> &T {
        &self.floor_term
    }

    /// The repeating block `a₁, …, a_ℓ`.
    pub fn periodic(&self) -> &[T] {
        &self.periodic
    }

    pub fn period_len(&self) -> usize {
        self.periodic.len()
    }

    /// Term `aᵢ` with the periodic block extended indefinitely.
    pub fn term(&self, i: usize) -> &T {
        if i == 0 {
            &self.floor_term
        } else {
            &self.periodic[(i - 1) % self.periodic.len()]
        }
    }

    /// The first `count` convergents `h₀/k₀, h₁/k₁, …` with their defects.
    pub fn convergents(&self, count: usize) -> Vec<Convergent<T>> {
        let mut out = Vec::with_capacity(count);
        let (mut h_prev, mut h) = (T::zero(), T::one());
        let (mut k_prev, mut k) = (T::one(), T::zero());
        for i in 0..count {
            let a = self.term(i);
            let h_next = &(a * &h) + &h_prev;
            let k_next = &(a * &k) + &k_prev;
            h_prev = h;
            k_prev = k;
            h = h_next;
            k = k_next;
            let defect = &(&h * &h) - &(&(&k * &k) * &self.radicand);
            out.push(Convergent {
                h: h.clone(),
                k: k.clone(),
                defect,
            });
        }
        out
    }
}
