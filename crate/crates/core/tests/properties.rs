//! Cross-module property tests. Every computation with an independent
//! low-tech oracle — interval arithmetic, brute-force scans, closed-form
//! classifications — is checked against that oracle here, so the fast exact
//! paths never have to be trusted on their own word.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use k3aut::aut::{
    aut_group, finite_order, gluing_filter, named_alphabet_with_inverses, named_word_ball,
    GlueAssumption,
};
use k3aut::cone::chamber;
use k3aut::disc::{smith_form, DiscriminantGroup};
use k3aut::lattice::{
    brute_force_isometries, l_family_generators, m_family_derived, m_family_generators,
    root_classes, GramForm, IsometryMatrix, LatticeVector, Mat2, NamedIsometry,
};
use k3aut::pell::{solve, PellOutcome, PellRhs};
use k3aut::quad::{QuadInt, QuadRat, Radicand};
use k3aut::scalar::{isqrt, perfect_sqrt};

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn l_form(d: i64) -> GramForm<BigInt> {
    GramForm::new(big(2), big(d), big(-2)).unwrap()
}

fn m_form(d: i64) -> GramForm<BigInt> {
    GramForm::new(big(2), big(d), big(2)).unwrap()
}

fn named_gens(gens: Vec<NamedIsometry<BigInt>>) -> Vec<(String, Mat2<BigInt>)> {
    gens.into_iter()
        .map(|g| (g.name.to_string(), g.matrix))
        .collect()
}

fn random_word(rng: &mut StdRng, letters: &[Mat2<BigInt>], max_len: usize) -> Mat2<BigInt> {
    let len = rng.gen_range(1..=max_len);
    let mut m = Mat2::identity();
    for _ in 0..len {
        m = m.mul(&letters[rng.gen_range(0..letters.len())]);
    }
    m
}

// ---------------------------------------------------------------------------
// Quadratic integers: the norm form is multiplicative, and products stay in
// the order (their doubled coordinates pass the checked constructor again).
// ---------------------------------------------------------------------------

const RADICANDS: [i64; 7] = [2, 3, 5, 8, 13, 21, 29];

proptest! {
    #[test]
    fn quad_int_norm_is_multiplicative(
        d in prop::sample::select(&RADICANDS[..]),
        s1 in -40i64..=40, t1 in -40i64..=40,
        s2 in -40i64..=40, t2 in -40i64..=40,
    ) {
        let rad = Radicand::new(big(d)).unwrap();
        let x = QuadInt::new(big(2 * s1), big(2 * t1), rad.clone()).unwrap();
        let y = QuadInt::new(big(2 * s2), big(2 * t2), rad.clone()).unwrap();
        let p = x.checked_mul(&y).unwrap();
        prop_assert_eq!(p.norm(), x.norm() * y.norm());
        prop_assert!(QuadInt::new(p.a().clone(), p.b().clone(), rad).is_ok());
    }

    // Same again on genuine half-integers (both doubled coordinates odd),
    // which exist exactly when D ≡ 1 (mod 4).
    #[test]
    fn quad_int_norm_is_multiplicative_on_half_integers(
        d in prop::sample::select(&[5i64, 13, 21, 29][..]),
        s1 in -40i64..=40, t1 in -40i64..=40,
        s2 in -40i64..=40, t2 in -40i64..=40,
    ) {
        let rad = Radicand::new(big(d)).unwrap();
        let x = QuadInt::new(big(2 * s1 + 1), big(2 * t1 + 1), rad.clone()).unwrap();
        let y = QuadInt::new(big(2 * s2 + 1), big(2 * t2 + 1), rad.clone()).unwrap();
        let p = x.checked_mul(&y).unwrap();
        prop_assert_eq!(p.norm(), x.norm() * y.norm());
        prop_assert!(QuadInt::new(p.a().clone(), p.b().clone(), rad).is_ok());
    }
}

// ---------------------------------------------------------------------------
// Exact signs of quadratic rationals against interval arithmetic.
// ---------------------------------------------------------------------------

/// Sign of `(a + b√d)/den` by sandwiching `√d·10¹²` between consecutive
/// integers. The enclosure has width `|b|·10⁻¹²`, far below the minimum
/// magnitude `1/(|a| + |b|√d) > 10⁻³` of a nonzero value in the sampled
/// coefficient range, so it can only straddle zero on a genuine bug.
fn interval_sign(a: i64, b: i64, d: i64, den: i64) -> i8 {
    let q = BigInt::from(10).pow(12);
    let p = isqrt(&(&q * &q * big(d)));
    let aq = big(a) * &q;
    let (lo, hi) = if b >= 0 {
        (&aq + &p * big(b), &aq + (&p + 1) * big(b))
    } else {
        (&aq + (&p + 1) * big(b), &aq + &p * big(b))
    };
    let s = if lo.is_positive() {
        1
    } else if hi.is_negative() {
        -1
    } else if lo.is_zero() && hi.is_zero() {
        0
    } else {
        panic!("interval for {a} + {b}√{d} straddles zero");
    };
    if den < 0 {
        -s
    } else {
        s
    }
}

proptest! {
    #[test]
    fn quad_rat_sign_matches_interval_oracle(
        d in prop::sample::select(&[2i64, 3, 5, 7, 13, 21][..]),
        a in -100i64..=100,
        b in -100i64..=100,
        den in prop_oneof![-50i64..=-1, 1i64..=50],
    ) {
        let rad = Radicand::new(big(d)).unwrap();
        let x = QuadRat::new(big(a), big(b), &rad, big(den)).unwrap();
        prop_assert_eq!(x.sign(), interval_sign(a, b, d, den));
    }
}

// ---------------------------------------------------------------------------
// Pell solver against a direct scan for the least solution.
// ---------------------------------------------------------------------------

fn brute_pell(d: i64, n: i64, bound: i64) -> Option<(BigInt, BigInt)> {
    for y in 1..=bound {
        let t = d * y * y + n;
        if t < 0 {
            continue;
        }
        if let Some(x) = perfect_sqrt(&big(t)) {
            return Some((x, big(y)));
        }
    }
    None
}

#[test]
fn pell_fundamental_solutions_match_brute_scan() {
    const BOUND: i64 = 10_000;
    let cases = [
        (PellRhs::PlusOne, 1i64),
        (PellRhs::MinusOne, -1),
        (PellRhs::PlusFour, 4),
        (PellRhs::MinusFour, -4),
    ];
    for d in [5i64, 13, 21, 29, 45, 53, 77, 125] {
        let rad = Radicand::new(big(d)).unwrap();
        for (rhs, n) in cases {
            let brute = brute_pell(d, n, BOUND);
            match solve(&rad, rhs) {
                PellOutcome::Solvable { x, y } => {
                    assert_eq!(
                        &x * &x - big(d) * &y * &y,
                        big(n),
                        "claimed solution fails for D = {d}, N = {n}"
                    );
                    assert!(x.is_positive() && y.is_positive());
                    if y <= big(BOUND) {
                        assert_eq!(
                            brute,
                            Some((x, y)),
                            "not the least solution for D = {d}, N = {n}"
                        );
                    } else {
                        assert_eq!(brute, None, "smaller solution exists for D = {d}, N = {n}");
                    }
                }
                PellOutcome::Unsolvable(_) => {
                    assert_eq!(brute, None, "missed solution for D = {d}, N = {n}");
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Smith normal form and the discriminant group order.
// ---------------------------------------------------------------------------

#[test]
fn smith_form_invariants_on_random_even_forms() {
    let mut rng = StdRng::seed_from_u64(0x5EED_0001);
    let mut checked = 0;
    while checked < 50 {
        let g00 = 2 * rng.gen_range(-10i64..=10);
        let g01 = rng.gen_range(-20i64..=20);
        let g11 = 2 * rng.gen_range(-10i64..=10);
        if g00 * g11 - g01 * g01 == 0 {
            continue;
        }
        let form = GramForm::new(big(g00), big(g01), big(g11)).unwrap();
        let gm = form.matrix();
        let s = smith_form(&gm);
        assert!(s.d1.is_positive() && s.d2.is_positive());
        assert!((&s.d2 % &s.d1).is_zero(), "d₁ ∤ d₂ for {gm:?}");
        assert_eq!(
            s.u.mul(&gm).mul(&s.v),
            Mat2::new(s.d1.clone(), BigInt::zero(), BigInt::zero(), s.d2.clone()),
        );
        assert_eq!(s.u.det().abs(), big(1));
        assert_eq!(s.v.det().abs(), big(1));
        assert_eq!(&s.d1 * &s.d2, form.det().abs());
        assert_eq!(DiscriminantGroup::from_form(&form).order(), form.det().abs());
        checked += 1;
    }
}

// ---------------------------------------------------------------------------
// The induced action on the discriminant group is a homomorphism.
// ---------------------------------------------------------------------------

#[test]
fn discriminant_action_is_functorial() {
    let cases: Vec<(GramForm<BigInt>, Vec<Mat2<BigInt>>)> = vec![
        (
            l_form(3),
            l_family_generators(&big(3))
                .into_iter()
                .map(|g| g.matrix)
                .collect(),
        ),
        (
            m_form(5),
            m_family_generators(&big(5))
                .into_iter()
                .chain(m_family_derived(&big(5)))
                .map(|g| g.matrix)
                .collect(),
        ),
    ];
    let mut rng = StdRng::seed_from_u64(0x5EED_0002);
    for (form, letters) in &cases {
        let disc = DiscriminantGroup::from_form(form);
        for _ in 0..50 {
            let m1 = random_word(&mut rng, letters, 5);
            let m2 = random_word(&mut rng, letters, 5);
            assert_eq!(
                disc.action(&m1.mul(&m2)),
                disc.action(&m1).compose(&disc.action(&m2)),
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Finite order of ±1-determinant matrices against the trace classification.
// ---------------------------------------------------------------------------

/// Order from the characteristic polynomial alone. By Cayley–Hamilton,
/// `M² = tr·M − det·I`: with `det = −1` the matrix is an involution exactly
/// when `tr = 0` (otherwise its real eigenvalues `λ, −1/λ` leave the unit
/// circle); with `det = 1`, finite order forces `tr ∈ {−2,…,2}` — elliptic
/// orders 3, 4, 6 for `|tr| < 2`, and `tr = ±2` only for `±I` itself.
fn order_from_trace(m: &Mat2<BigInt>) -> Option<u32> {
    let tr = m.trace();
    let det = m.det();
    if det == big(-1) {
        return if tr.is_zero() { Some(2) } else { None };
    }
    if det != big(1) {
        return None;
    }
    if tr == big(2) {
        if m.is_identity() {
            Some(1)
        } else {
            None
        }
    } else if tr == big(-2) {
        if m.is_minus_identity() {
            Some(2)
        } else {
            None
        }
    } else if tr.is_zero() {
        Some(4)
    } else if tr == big(1) {
        Some(6)
    } else if tr == big(-1) {
        Some(3)
    } else {
        None
    }
}

#[test]
fn finite_order_matches_trace_classification() {
    let letters = [
        Mat2::from_i64(1, 1, 0, 1),
        Mat2::from_i64(1, 0, 1, 1),
        Mat2::from_i64(0, 1, 1, 0),
        Mat2::from_i64(-1, 0, 0, -1),
        Mat2::from_i64(0, -1, 1, 0),
    ];
    let mut rng = StdRng::seed_from_u64(0x5EED_0003);
    for _ in 0..500 {
        let m = random_word(&mut rng, &letters, 8);
        assert_eq!(finite_order(&m), order_from_trace(&m), "for {m:?}");
    }
}

// ---------------------------------------------------------------------------
// The documented generator sets really generate: every isometry found by the
// entry-bounded scan is a short word in them, and every short word with
// small entries is found by the scan.
// ---------------------------------------------------------------------------

#[test]
fn family_generators_span_all_small_isometries() {
    let cases: Vec<(GramForm<BigInt>, Vec<(String, Mat2<BigInt>)>)> = vec![
        (l_form(3), named_gens(l_family_generators(&big(3)))),
        (l_form(5), named_gens(l_family_generators(&big(5)))),
        (l_form(7), named_gens(l_family_generators(&big(7)))),
        (m_form(3), named_gens(m_family_generators(&big(3)))),
        (m_form(5), named_gens(m_family_generators(&big(5)))),
        (m_form(7), named_gens(m_family_generators(&big(7)))),
    ];
    for (form, gens) in &cases {
        let alphabet = named_alphabet_with_inverses(gens);
        let ball = named_word_ball(&alphabet, 12);
        let ball_keys: HashSet<[BigInt; 4]> =
            ball.iter().map(|(_, m, _)| m.row_major()).collect();
        let brute = brute_force_isometries(form, 30);
        for m in &brute {
            assert!(
                ball_keys.contains(&m.row_major()),
                "isometry {m:?} of {form:?} is not a short generator word",
            );
        }
        let brute_keys: HashSet<[BigInt; 4]> = brute.iter().map(|m| m.row_major()).collect();
        for (word, m, _) in &ball {
            if m.row_major().iter().all(|e| e.abs() <= big(30)) {
                assert!(
                    brute_keys.contains(&m.row_major()),
                    "word {word} = {m:?} missed by the isometry scan",
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The assembled automorphism generators span exactly the isometries that
// survive both filters (chamber preservation and ±id discriminant action).
// ---------------------------------------------------------------------------

#[test]
fn aut_generators_span_the_chamber_stabilizer() {
    for form in [l_form(3), l_form(5), m_form(5)] {
        let report = aut_group(&form, GlueAssumption::Generic).unwrap();
        let disc = DiscriminantGroup::from_form(&form);
        let stabilizer: HashSet<[BigInt; 4]> = brute_force_isometries(&form, 30)
            .into_iter()
            .filter(|m| {
                report.chamber.preserved_by(m)
                    && gluing_filter(m, &disc, GlueAssumption::Generic)
            })
            .map(|m| m.row_major())
            .collect();
        let gens: Vec<(String, Mat2<BigInt>)> = report
            .presentation
            .generators
            .iter()
            .map(|g| (g.name.clone(), g.matrix.clone()))
            .collect();
        let alphabet = named_alphabet_with_inverses(&gens);
        let spanned: HashSet<[BigInt; 4]> = named_word_ball(&alphabet, 12)
            .into_iter()
            .filter(|(_, m, _)| m.row_major().iter().all(|e| e.abs() <= big(30)))
            .map(|(_, m, _)| m.row_major())
            .collect();
        assert_eq!(spanned, stabilizer, "stabilizer mismatch for {form:?}");
    }
}

// ---------------------------------------------------------------------------
// Chamber walls are a property of the chamber, not of the sample point used
// to locate it.
// ---------------------------------------------------------------------------

#[test]
fn chamber_walls_do_not_depend_on_the_interior_sample() {
    for form in [l_form(3), m_form(3), m_form(5)] {
        let roots = root_classes(&form, 10_000).unwrap().classes;
        let base = chamber(&form, &roots, &LatticeVector::from_i64(1, 0)).unwrap();
        let alt = LatticeVector::from_i64(2, 1);
        assert!(base.contains(&alt), "sample {alt} not interior for {form:?}");
        let again = chamber(&form, &roots, &alt).unwrap();
        assert_eq!(base.left, again.left);
        assert_eq!(base.right, again.right);
    }
}

// ---------------------------------------------------------------------------
// The checked isometry constructor agrees with the defining identity.
// ---------------------------------------------------------------------------

proptest! {
    #[test]
    fn isometry_constructor_agrees_with_the_defining_identity(
        e in prop::array::uniform4(-5i64..=5),
    ) {
        for form in [l_form(3), m_form(5)] {
            let m = Mat2::from_i64(e[0], e[1], e[2], e[3]);
            let g = form.matrix();
            let preserves = m.transpose().mul(&g).mul(&m) == g;
            prop_assert_eq!(IsometryMatrix::new(&form, m).is_ok(), preserves);
        }
    }
}
