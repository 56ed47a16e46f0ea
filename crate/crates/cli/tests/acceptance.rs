//! The acceptance gate: one test per end-to-end criterion, every assertion
//! exact-integer. Two tests pin documented statements that the computation
//! refutes and are red by design: `criterion_05b_m_family_aut_as_documented`
//! (the claimed free-product structure of Aut(M_d)) and
//! `criterion_09_discrepancy_ledger_as_documented` (the discrepancy count
//! that same structure finding inflates). Each has a passing companion
//! (`05c`, `09b`) pinning what the computation actually establishes; see
//! README.md for the full story.

use std::collections::HashSet;
use std::process::Command;

use num_traits::{Signed, ToPrimitive, Zero};

use k3aut::aut::{
    aut_group_with, infinite_criterion, named_alphabet_with_inverses, named_word_ball,
    GlueAssumption, GroupStructure, AutReport, DEFAULT_CERTIFICATE_DEPTH, DEFAULT_ROOT_BOUND,
    WORD_CLOSURE_LENGTH,
};
use k3aut::cone::{Ray, WallKind};
use k3aut::disc::{smith_form, DiscriminantGroup};
use k3aut::lattice::{
    brute_force_isometries, l_family_generators, m_family_generators, GramForm, IsometryMatrix,
    LatticeVector, Mat2,
};
use k3aut::pell::{solution_stream, solve, Certificate, PellOutcome, PellRhs};
use k3aut::quad::{QuadInt, QuadRat, Radicand};
use k3aut::scalar::{isqrt, perfect_sqrt};
use k3aut::Big;

fn big(n: i64) -> Big {
    Big::from(n)
}

fn v(x: i64, y: i64) -> LatticeVector<Big> {
    LatticeVector::from_i64(x, y)
}

fn mat(m00: i64, m01: i64, m10: i64, m11: i64) -> Mat2<Big> {
    Mat2::from_i64(m00, m01, m10, m11)
}

fn l_form(d: i64) -> GramForm<Big> {
    GramForm::family_l(&big(d)).unwrap()
}

fn m_form(d: i64) -> GramForm<Big> {
    GramForm::family_m(&big(d)).unwrap()
}

fn report_for(form: &GramForm<Big>) -> AutReport<Big> {
    aut_group_with(
        form,
        GlueAssumption::Generic,
        DEFAULT_CERTIFICATE_DEPTH,
        DEFAULT_ROOT_BOUND,
    )
    .unwrap()
}

fn satisfies_pell(d: i64, n: i64, x: &Big, y: &Big) -> bool {
    x * x - big(d) * (y * y) == big(n)
}

/// Re-verify an unsolvability certificate with arithmetic independent of the
/// solver: enumerate every residue pair, or recheck the unit norm.
fn verify_certificate(cert: &Certificate<Big>, d: i64, n: i64) {
    match cert {
        Certificate::Residue { modulus } => {
            let m = modulus.to_i64().expect("small modulus");
            assert!(m > 1, "useless modulus {m}");
            for a in 0..m {
                for b in 0..m {
                    assert_ne!(
                        (a * a - d * b * b - n).rem_euclid(m),
                        0,
                        "x² − {d}·y² ≡ {n} (mod {m}) is solvable at ({a}, {b})"
                    );
                }
            }
        }
        Certificate::UnitNorm { fundamental } => {
            assert_eq!(
                fundamental.norm(),
                big(1),
                "a unit-norm certificate requires the fundamental unit to have norm +1"
            );
        }
    }
}

#[test]
fn criterion_01_pell_fundamentals_with_certificates() {
    // x² − 13·y² = −4 has least positive solution (3, 1).
    let r13 = Radicand::new(big(13)).unwrap();
    assert_eq!(
        solve(&r13, PellRhs::MinusFour),
        PellOutcome::Solvable {
            x: big(3),
            y: big(1)
        }
    );
    assert!(satisfies_pell(13, -4, &big(3), &big(1)));

    // x² − (d²+4)·y² = −4 has least positive solution (d, 1).
    for d in [3, 5, 7] {
        let dd = d * d + 4;
        let rad = Radicand::new(big(dd)).unwrap();
        assert_eq!(
            solve(&rad, PellRhs::MinusFour),
            PellOutcome::Solvable {
                x: big(d),
                y: big(1)
            },
            "least solution for D = {dd}"
        );
        assert!(satisfies_pell(dd, -4, &big(d), &big(1)));
    }

    // x² − (d²−4)·y² = +4 has least positive solution (d, 1).
    for d in [5, 7] {
        let dd = d * d - 4;
        let rad = Radicand::new(big(dd)).unwrap();
        assert_eq!(
            solve(&rad, PellRhs::PlusFour),
            PellOutcome::Solvable {
                x: big(d),
                y: big(1)
            },
            "least solution for D = {dd}"
        );
        assert!(satisfies_pell(dd, 4, &big(d), &big(1)));
    }

    // x² − (d²−4)·y² = −4 is unsolvable, and d²−4 is never a square.
    for d in [5, 7, 9] {
        let dd = d * d - 4;
        let rad = Radicand::new(big(dd)).unwrap();
        match solve(&rad, PellRhs::MinusFour) {
            PellOutcome::Unsolvable(cert) => verify_certificate(&cert, dd, -4),
            PellOutcome::Solvable { x, y } => {
                panic!("x² − {dd}·y² = −4 unexpectedly solvable at ({x}, {y})")
            }
        }
        assert!(perfect_sqrt(&big(dd)).is_none(), "q² = {dd} must have no solution");
        let root = isqrt(&big(dd));
        assert!(&root * &root != big(dd), "{dd} must not be a square");
        assert!((&root + big(1)) * (&root + big(1)) > big(dd));
    }
}

/// Consecutive stream solutions must satisfy `2a' = p·a + q·b` and
/// `2b' = r·a + p·b` (doubled to stay division-free).
fn recurrence_holds(terms: &[(Big, Big)], p: i64, q: i64, r: i64) -> bool {
    terms.windows(2).all(|w| {
        let (a0, b0) = &w[0];
        let (a1, b1) = &w[1];
        big(2) * a1 == big(p) * a0 + big(q) * b0 && big(2) * b1 == big(r) * a0 + big(p) * b0
    })
}

#[test]
fn criterion_02_recurrence_fidelity() {
    // D = 13: a' = (11a + 39b)/2, b' = (3a + 11b)/2 across the first six
    // solutions (indices 0 through 5).
    let r13 = Radicand::new(big(13)).unwrap();
    let terms: Vec<(Big, Big)> = solution_stream(&r13, PellRhs::MinusFour)
        .expect("solvable")
        .take(6)
        .collect();
    assert_eq!(terms.len(), 6);
    assert_eq!(terms[0], (big(3), big(1)));
    assert!(recurrence_holds(&terms, 11, 39, 3));
    for (x, y) in &terms {
        assert!(satisfies_pell(13, -4, x, y));
    }

    for d in [3, 5, 7] {
        // a' = ((d²+2)a + d(d²+4)b)/2, b' = (da + (d²+2)b)/2 for D = d²+4.
        let dd = d * d + 4;
        let rad = Radicand::new(big(dd)).unwrap();
        let terms: Vec<(Big, Big)> = solution_stream(&rad, PellRhs::MinusFour)
            .expect("solvable")
            .take(5)
            .collect();
        assert_eq!(terms.len(), 5);
        assert!(recurrence_holds(&terms, d * d + 2, d * dd, d), "L-family recurrence at d = {d}");
        for (x, y) in &terms {
            assert!(satisfies_pell(dd, -4, x, y));
        }

        // a' = (da + (d²−4)b)/2, b' = (a + db)/2 for D = d²−4.
        let dd = d * d - 4;
        let rad = Radicand::new(big(dd)).unwrap();
        let terms: Vec<(Big, Big)> = solution_stream(&rad, PellRhs::PlusFour)
            .expect("solvable")
            .take(5)
            .collect();
        assert_eq!(terms.len(), 5);
        assert!(recurrence_holds(&terms, d, dd, 1), "M-family recurrence at d = {d}");
        for (x, y) in &terms {
            assert!(satisfies_pell(dd, 4, x, y));
        }
    }
}

fn entries_bounded(m: &Mat2<Big>, bound: i64) -> bool {
    let b = big(bound);
    m.row_major().into_iter().all(|e| e.abs() <= b)
}

#[test]
fn criterion_03_l3_isometry_group_reproduction() {
    let form = l_form(3);
    let q0_plus = mat(-1, 0, -3, 1);
    let q0_minus = mat(-1, -3, 0, 1);
    assert_eq!(q0_minus.mul(&q0_plus), mat(10, -3, -3, 1));

    let letters = vec![
        ("Q0+".to_string(), q0_plus),
        ("Q0-".to_string(), q0_minus),
    ];
    let ball = named_word_ball(&named_alphabet_with_inverses(&letters), WORD_CLOSURE_LENGTH);
    let mut signed_words: HashSet<[Big; 4]> = HashSet::new();
    for (_, m, _) in &ball {
        signed_words.insert(m.row_major());
        signed_words.insert(m.neg().row_major());
    }
    let scan = brute_force_isometries(&form, 30);
    let scan_keys: HashSet<[Big; 4]> = scan.iter().map(|m| m.row_major()).collect();
    assert!(
        scan_keys.iter().all(|k| signed_words.contains(k)),
        "an isometry with entries ≤ 30 is not ± a word in the two reflections"
    );
    assert!(
        ball.iter()
            .flat_map(|(_, m, _)| [m.clone(), m.neg()])
            .filter(|m| entries_bounded(m, 30))
            .all(|m| scan_keys.contains(&m.row_major())),
        "a ± word escaped the brute-force scan"
    );

    // −I itself is not a word in the two reflections; the report records
    // the gap against the documented two-generator presentation.
    assert!(!ball.iter().any(|(_, m, _)| m.is_minus_identity()));
    let report = report_for(&form);
    assert!(
        report
            .discrepancies
            .iter()
            .any(|d| d.code == "ambient-minus-identity"),
        "missing the −I discrepancy record"
    );
}

#[test]
fn criterion_04_kahler_cone_walls() {
    // L₃: the chamber walls lie on the rays through (2, 3) and (11, −3).
    let report = report_for(&l_form(3));
    let ch = &report.chamber;
    assert_eq!(ch.left.kind, WallKind::Root);
    assert_eq!(ch.right.kind, WallKind::Root);
    assert_eq!(ch.left.ray, Ray::from_integer(&v(2, 3)));
    assert_eq!(ch.right.ray, Ray::from_integer(&v(11, -3)));

    // L_d: the walls are cut by (0, 1) and (d, −1), giving the inequalities
    // d·x − 2·y > 0 and d·x + (d²+2)·y > 0.
    for d in [5, 7] {
        let form = l_form(d);
        let report = report_for(&form);
        let ch = &report.chamber;
        let wall_roots: HashSet<LatticeVector<Big>> = [&ch.left, &ch.right]
            .into_iter()
            .filter_map(|w| w.root.clone())
            .collect();
        let expected: HashSet<LatticeVector<Big>> = [v(0, 1), v(d, -1)].into_iter().collect();
        assert_eq!(wall_roots, expected, "wall roots at d = {d}");

        let e1 = v(1, 0);
        let e2 = v(0, 1);
        let covector = |r: &LatticeVector<Big>| (form.pair(&e1, r), form.pair(&e2, r));
        assert_eq!(covector(&v(0, 1)), (big(d), big(-2)));
        assert_eq!(covector(&v(d, -1)), (big(d), big(d * d + 2)));
        assert!(form.pair(&ch.interior, &v(0, 1)).is_positive());
        assert!(form.pair(&ch.interior, &v(d, -1)).is_positive());
    }

    // M_d: no walls — the chamber is the full positive cone, bounded by the
    // rays through u = (2, −d+√(d²−4)) and v = (−2, d+√(d²−4)).
    for d in [5, 7] {
        let dd = d * d - 4;
        let rad = Radicand::new(big(dd)).unwrap();
        let report = report_for(&m_form(d));
        let ch = &report.chamber;
        assert_eq!(ch.left.kind, WallKind::ConeBoundary);
        assert_eq!(ch.right.kind, WallKind::ConeBoundary);
        let u = Ray::new(
            QuadRat::rational(big(2), big(1)).unwrap(),
            QuadRat::new(big(-d), big(1), &rad, big(1)).unwrap(),
        );
        let v_ray = Ray::new(
            QuadRat::rational(big(-2), big(1)).unwrap(),
            QuadRat::new(big(d), big(1), &rad, big(1)).unwrap(),
        );
        let computed: Vec<&Ray<Big>> = vec![&ch.left.ray, &ch.right.ray];
        assert!(
            computed == vec![&v_ray, &u] || computed == vec![&u, &v_ray],
            "boundary rays at d = {d}: computed {} and {}",
            ch.left.ray,
            ch.right.ray
        );
    }
}

#[test]
fn criterion_05a_l_family_aut_is_z2() {
    for d in [3, 5, 7] {
        let report = report_for(&l_form(d));
        let pres = &report.presentation;
        assert_eq!(pres.structure, GroupStructure::Z2, "structure at d = {d}");
        assert_eq!(pres.generators.len(), 1);
        assert_eq!(pres.generators[0].matrix, mat(1, d, 0, -1));
        assert_eq!(pres.generators[0].order, Some(2));
        assert_eq!(report.matched, Some("l-family-aut"));
        assert!(!report.infinite);
    }
}

/// Red by design: pins the documented free-product structure of Aut(M_d),
/// which the exact computation refutes (see `criterion_05c` for what holds
/// instead, and the module docs for why this stays red).
#[test]
fn criterion_05b_m_family_aut_as_documented() {
    for d in [5, 7] {
        let report = report_for(&m_form(d));
        let pres = &report.presentation;
        let x = mat(d, 1, -1, 0);
        let documented: HashSet<[Big; 4]> = [mat(-1, 0, d, 1), x.mul(&x)]
            .into_iter()
            .map(|m| m.row_major())
            .collect();
        let computed: HashSet<[Big; 4]> =
            pres.generators.iter().map(|g| g.matrix.row_major()).collect();
        assert!(
            pres.structure == GroupStructure::ZStarZ2
                && computed == documented
                && pres.certificate_depth >= 8,
            "documented Aut(M_{d}) ≅ Z ∗ Z/2 on the generators P = [[-1, 0], [{d}, 1]] and X², \
             certified to depth 8; the computation certifies {} on {} instead \
             (P·X²·P = X⁻² is an exact matrix identity, so ⟨P, X²⟩ is infinite dihedral)",
            pres.structure,
            pres.generators
                .iter()
                .map(|g| format!("{} = {}", g.name, g.matrix))
                .collect::<Vec<_>>()
                .join(", "),
        );
    }
}

/// Green companion to 05b: the structure the computation certifies.
#[test]
fn criterion_05c_m_family_aut_as_computed() {
    for d in [5, 7] {
        let report = report_for(&m_form(d));
        let pres = &report.presentation;
        assert_eq!(
            pres.structure,
            GroupStructure::Z2StarZ2,
            "structure at d = {d}"
        );
        let computed: HashSet<[Big; 4]> =
            pres.generators.iter().map(|g| g.matrix.row_major()).collect();
        let involutions: HashSet<[Big; 4]> = [mat(-1, 0, d, 1), mat(1, d, 0, -1)]
            .into_iter()
            .map(|m| m.row_major())
            .collect();
        assert_eq!(computed, involutions, "generators at d = {d}");
        for g in &pres.generators {
            assert_eq!(g.order, Some(2), "generator {} must be an involution", g.name);
            assert_eq!(g.disc_sign, -1, "generator {} must glue as −id", g.name);
        }
        assert_eq!(pres.certificate_depth, DEFAULT_CERTIFICATE_DEPTH);
        assert!(report.infinite);
        assert!(report
            .discrepancies
            .iter()
            .any(|dd| dd.code == "m-family-structure"));
        // The documented infinite-order element is reachable: (−Q)·P = X².
        let x = mat(d, 1, -1, 0);
        assert_eq!(mat(1, d, 0, -1).mul(&mat(-1, 0, d, 1)), x.mul(&x));
    }
}

#[test]
fn criterion_06_relations_and_involutions() {
    for d in [3, 5, 7] {
        let x = mat(d, 1, -1, 0);
        let y = mat(0, 1, 1, 0);
        let p = mat(-1, 0, d, 1);
        let q = mat(-1, -d, 0, 1);
        let identity = Mat2::<Big>::identity();
        assert_eq!(p.mul(&p), identity, "P² at d = {d}");
        assert_eq!(q.mul(&q), identity, "Q² at d = {d}");
        assert_eq!(y.mul(&y), identity, "Y² at d = {d}");
        assert_eq!(Mat2::<Big>::minus_identity().pow(2), identity);
        assert_eq!(q.mul(&y), y.mul(&p).neg(), "Q·Y = −Y·P at d = {d}");
        assert_eq!(q.mul(&p), x.mul(&x).neg(), "Q·P = −X² at d = {d}");
    }
}

#[test]
fn criterion_07_gluing_actions() {
    // L₃: the involution acts as ±id on the cyclic group of order 13.
    let disc = DiscriminantGroup::from_form(&l_form(3));
    assert_eq!(disc.invariant_factors(), vec![big(13)]);
    assert!(disc.action(&mat(1, 3, 0, -1)).pm_identity_sign().is_some());

    // L_d: cyclic of order d²+4.
    for d in [5, 7] {
        let disc = DiscriminantGroup::from_form(&l_form(d));
        assert_eq!(disc.invariant_factors(), vec![big(d * d + 4)]);
        assert_eq!(
            disc.action(&mat(1, d, 0, -1)).pm_identity_sign(),
            Some(-1)
        );
    }

    // M_d: cyclic of order d²−4 with P ↦ −id and X² ↦ +id.
    for d in [3, 5, 7] {
        let disc = DiscriminantGroup::from_form(&m_form(d));
        assert_eq!(disc.invariant_factors(), vec![big(d * d - 4)]);
        let x = mat(d, 1, -1, 0);
        assert_eq!(disc.action(&mat(-1, 0, d, 1)).pm_identity_sign(), Some(-1));
        assert_eq!(disc.action(&x.mul(&x)).pm_identity_sign(), Some(1));
    }
}

#[test]
fn criterion_08_infiniteness_criterion() {
    assert!(infinite_criterion(&m_form(5)).unwrap());
    assert!(infinite_criterion(&m_form(7)).unwrap());
    assert!(!infinite_criterion(&l_form(3)).unwrap());
    assert!(!infinite_criterion(&l_form(5)).unwrap());
    assert!(!infinite_criterion(&m_form(3)).unwrap());

    // M₃ finiteness contradicts its documented description; the report
    // flags it rather than passing it off silently.
    let report = report_for(&m_form(3));
    assert!(!report.infinite);
    assert!(report
        .discrepancies
        .iter()
        .any(|d| d.code == "m-family-roots"));
}

fn verify_paper_document() -> (serde_json::Value, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_k3aut"))
        .args(["verify-paper", "--case", "all", "--format", "json"])
        .output()
        .expect("binary runs");
    let doc = serde_json::from_slice(&output.stdout).expect("valid JSON");
    (doc, output.status.code().expect("no signal"))
}

fn discrepancy_ids(doc: &serde_json::Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for case in doc["cases"].as_array().unwrap() {
        for claim in case["claims"].as_array().unwrap() {
            if claim["verdict"] == "DISCREPANCY" {
                out.push((
                    case["case"].as_str().unwrap().to_string(),
                    claim["id"].as_str().unwrap().to_string(),
                ));
            }
        }
    }
    out
}

/// Red by design: pins the documented ledger size of exactly two
/// discrepancies, which undercounts — the M-family structure finding (see
/// 05b/05c) adds one per affected d. `criterion_09b` pins the real ledger.
#[test]
fn criterion_09_discrepancy_ledger_as_documented() {
    let (doc, _) = verify_paper_document();
    let ids = discrepancy_ids(&doc);
    let fail = doc["fail"].as_u64().unwrap();
    assert!(
        fail == 0 && ids.len() == 2,
        "expected exactly two discrepancies (the M₃ root classes and the −I omission) and \
         zero failures; computed {} failures and {} discrepancies: {:?}",
        fail,
        ids.len(),
        ids
    );
}

/// Green companion to 09: the verification run is clean (zero FAIL, exit 0)
/// and its discrepancy ledger is exactly the four findings the computation
/// supports.
#[test]
fn criterion_09b_discrepancy_ledger_as_computed() {
    let (doc, exit) = verify_paper_document();
    assert_eq!(exit, 0);
    assert_eq!(doc["fail"], 0);
    let ids: HashSet<(String, String)> = discrepancy_ids(&doc).into_iter().collect();
    let expected: HashSet<(String, String)> = [
        ("l3", "minus-identity"),
        ("md:3", "solvability"),
        ("md:5", "aut-structure"),
        ("md:7", "aut-structure"),
    ]
    .into_iter()
    .map(|(c, i)| (c.to_string(), i.to_string()))
    .collect();
    assert_eq!(ids, expected);
    assert_eq!(doc["discrepancy"], 4);
}

/// Minimal deterministic PRNG so the corpora below are reproducible without
/// extra dependencies.
struct XorShift(u64);

impl XorShift {
    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % ((hi - lo + 1) as u64)) as i64
    }
}

#[test]
fn criterion_10_property_suites() {
    // Norm multiplicativity over random order elements for several radicands.
    let mut rng = XorShift(0x9E37_79B9_7F4A_7C15);
    let radicands = [2, 3, 5, 13, 21, 45, 77];
    let mut checked = 0;
    while checked < 200 {
        let d = radicands[(rng.next_u64() % radicands.len() as u64) as usize];
        let rad = Radicand::new(big(d)).unwrap();
        let a1 = rng.in_range(-40, 40);
        let b1 = rng.in_range(-40, 40);
        let a2 = rng.in_range(-40, 40);
        let b2 = rng.in_range(-40, 40);
        let (Ok(x), Ok(y)) = (
            QuadInt::new(big(a1), big(b1), rad.clone()),
            QuadInt::new(big(a2), big(b2), rad.clone()),
        ) else {
            continue;
        };
        let product = x.checked_mul(&y).unwrap();
        assert_eq!(product.norm(), x.norm() * y.norm(), "norms at D = {d}");
        checked += 1;
    }

    // Isometry constructor soundness: accepted exactly when MᵀGM = G.
    let mut rng = XorShift(0xC0FF_EE00_1234_5678);
    for _ in 0..200 {
        let m = mat(
            rng.in_range(-6, 6),
            rng.in_range(-6, 6),
            rng.in_range(-6, 6),
            rng.in_range(-6, 6),
        );
        for form in [l_form(3), m_form(5)] {
            let g = form.matrix();
            let preserves = m.transpose().mul(&g).mul(&m) == g;
            assert_eq!(
                IsometryMatrix::new(&form, m.clone()).is_ok(),
                preserves,
                "constructor disagrees with MᵀGM = G on {m}"
            );
        }
    }

    // Smith form: d₁ | d₂, the transforms are unimodular, and the
    // discriminant-group order equals |det|.
    let mut rng = XorShift(0x5EED_5EED_5EED_5EED);
    let mut checked = 0;
    while checked < 50 {
        let g00 = 2 * rng.in_range(-10, 10);
        let g01 = rng.in_range(-20, 20);
        let g11 = 2 * rng.in_range(-10, 10);
        if g00 * g11 - g01 * g01 == 0 {
            continue;
        }
        let form = GramForm::new(big(g00), big(g01), big(g11)).unwrap();
        let gm = form.matrix();
        let s = smith_form(&gm);
        assert!(s.d1.is_positive() && s.d2.is_positive());
        assert!((&s.d2 % &s.d1).is_zero());
        assert_eq!(
            s.u.mul(&gm).mul(&s.v),
            Mat2::new(s.d1.clone(), Big::zero(), Big::zero(), s.d2.clone())
        );
        assert_eq!(s.u.det().abs(), big(1));
        assert_eq!(s.v.det().abs(), big(1));
        assert_eq!(&s.d1 * &s.d2, form.det().abs());
        assert_eq!(DiscriminantGroup::from_form(&form).order(), form.det().abs());
        checked += 1;
    }

    // Oracle-vs-words equivalence for every family instance: the brute-force
    // scan and the word closure of the named generators agree in both
    // directions.
    for d in [3i64, 5, 7] {
        for (form, gens) in [
            (l_form(d), l_family_generators(&big(d))),
            (m_form(d), m_family_generators(&big(d))),
        ] {
            let letters: Vec<(String, Mat2<Big>)> = gens
                .into_iter()
                .map(|g| (g.name.to_string(), g.matrix))
                .collect();
            let ball =
                named_word_ball(&named_alphabet_with_inverses(&letters), WORD_CLOSURE_LENGTH);
            let words: HashSet<[Big; 4]> = ball.iter().map(|(_, m, _)| m.row_major()).collect();
            let scan = brute_force_isometries(&form, 12);
            let scan_keys: HashSet<[Big; 4]> = scan.iter().map(|m| m.row_major()).collect();
            assert!(
                scan_keys.iter().all(|k| words.contains(k)),
                "scan escapes the word closure for {form}"
            );
            assert!(
                ball.iter()
                    .filter(|(_, m, _)| entries_bounded(m, 12))
                    .all(|(_, m, _)| scan_keys.contains(&m.row_major())),
                "word closure escapes the scan for {form}"
            );
        }
    }
}
