use nashcert::algebra::{ComplexPoint, GaussianRational, MultiPoly, Var, VarSpace};
use nashcert::analytic::{eval_expr, parse_expr, verify_certificate, SampleRegion};
use nashcert::certificates::{
    cartan_lift, merge_real_pair, split_complex, AnnihilatorCertificate, BaseData, Flag, Part,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Functions with a hand-derived annihilator, the radius they are sampled on
/// and their exact value at the origin.
const CATALOG: &[(&str, &str, f64, (i64, i64))] = &[
    ("z1", "t - z1", 1.0, (0, 0)),
    ("z1^2", "t - z1^2", 1.0, (0, 0)),
    ("1/(1 + z1)", "z1*t + t - 1", 0.5, (1, 0)),
    ("sqrt(1 + z1^2)", "t^2 - z1^2 - 1", 0.5, (1, 0)),
    ("z1*sqrt(1 + z1^2)", "t^2 - z1^4 - z1^2", 0.5, (0, 0)),
    ("(1 + z1)*z1^2", "t - z1^3 - z1^2", 1.0, (0, 0)),
];

fn region(radius: f64) -> SampleRegion {
    SampleRegion::new(vec![Complex64::new(0.0, 0.0)], radius).unwrap()
}

#[test]
fn hand_annihilators_are_sound() {
    for &(f, p, r, _) in CATALOG {
        let cert = AnnihilatorCertificate::parse(p, Part::F).unwrap();
        let rep =
            verify_certificate(&cert, &parse_expr(f).unwrap(), &region(r), 200, 1e-8, 1).unwrap();
        assert!(rep.pass, "{f}: {p} residual {}", rep.max_relative_residual);
    }
}

#[test]
fn split_certificates_annihilate_the_parts() {
    for &(f, p, r, _) in CATALOG {
        let (a1, a2) = split_complex(&AnnihilatorCertificate::parse(p, Part::F).unwrap()).unwrap();
        let e = parse_expr(f).unwrap();
        for c in [&a1, &a2] {
            let rep = verify_certificate(c, &e, &region(r), 200, 1e-8, 1).unwrap();
            assert!(
                rep.pass,
                "{f}: {} of {} residual {}",
                c.part(),
                c.poly(),
                rep.max_relative_residual
            );
        }
    }
}

#[test]
fn lift_of_real_part_recovers_f() {
    for &(f, p, r, (re, im)) in CATALOG {
        let (a1, _) = split_complex(&AnnihilatorCertificate::parse(p, Part::F).unwrap()).unwrap();
        let base = BaseData::new(
            vec![GaussianRational::from(0)],
            GaussianRational::from_integers(re, im),
        );
        let lifted = cartan_lift(&a1, &base).unwrap();
        let rep =
            verify_certificate(&lifted, &parse_expr(f).unwrap(), &region(r), 200, 1e-8, 1).unwrap();
        assert!(
            rep.pass,
            "{f}: lifted {} residual {}",
            lifted.poly(),
            rep.max_relative_residual
        );
    }
}

#[test]
fn merge_of_split_recovers_f() {
    for &(f, p, r, _) in &CATALOG[..3] {
        let (a1, a2) = split_complex(&AnnihilatorCertificate::parse(p, Part::F).unwrap()).unwrap();
        let merged = merge_real_pair(&a1, &a2, None).unwrap();
        assert!(merged.has_flag(Flag::RequiresVerification));
        let rep =
            verify_certificate(&merged, &parse_expr(f).unwrap(), &region(r), 200, 1e-8, 1).unwrap();
        assert!(
            rep.pass,
            "{f}: merged {} residual {}",
            merged.poly(),
            rep.max_relative_residual
        );
    }
}

#[test]
fn split_commutes_with_translation() {
    // P(z + a, t) annihilates f(z + a); for real a its parts are the parts of f shifted by a.
    // A complex a makes the coefficients complex, and realify then doubles the degree.
    let a = GaussianRational::from(3);
    let complex = VarSpace::complex(1);
    let real = VarSpace::real(1);
    for &(_, p, _, _) in CATALOG {
        let p = MultiPoly::parse_in(p, complex).unwrap();
        let z = MultiPoly::var(complex, Var::Z(1)).unwrap();
        let shifted = p
            .substitute(
                &[(Var::Z(1), &z + &MultiPoly::constant(complex, a.clone()))],
                complex,
            )
            .unwrap();
        let (b1, b2) = split_complex(&AnnihilatorCertificate::new(p, Part::F).unwrap()).unwrap();
        let (s1, s2) =
            split_complex(&AnnihilatorCertificate::new(shifted, Part::F).unwrap()).unwrap();
        let x = MultiPoly::var(real, Var::X(1)).unwrap();
        let y = MultiPoly::var(real, Var::Y(1)).unwrap();
        let shift = [
            (
                Var::X(1),
                &x + &MultiPoly::constant(real, GaussianRational::from(3)),
            ),
            (Var::Y(1), y.clone()),
        ];
        for (base, moved) in [(b1, s1), (b2, s2)] {
            let expect = base
                .poly()
                .substitute(&shift, real)
                .unwrap()
                .content_normalize()
                .unwrap();
            assert_eq!(moved.poly(), &expect);
        }
    }
}

#[test]
fn lift_commutes_with_translation() {
    // g(z) = f(z - a) + c: lifting the shifted real annihilator with base (a, f(0) + c)
    // gives the lift of the original shifted by (a, c)
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let real = VarSpace::real(1);
    let complex = VarSpace::complex(1);
    let g = |rng: &mut ChaCha8Rng| {
        GaussianRational::from_integers(rng.gen_range(-4..=4), rng.gen_range(-4..=4))
    };
    for _ in 0..50 {
        let [al, be, ga, de] = [0; 4].map(|_| rng.gen_range(-5i64..=5));
        let al = if al == 0 { 1 } else { al };
        let a = MultiPoly::parse_in(
            &format!("{al}*t + {be}*x1 + {ga}*y1 + {de}").replace("+ -", "- "),
            real,
        )
        .unwrap();
        let (shift, c, w0) = (g(&mut rng), g(&mut rng), g(&mut rng));
        let original = cartan_lift(
            &AnnihilatorCertificate::new(a.clone(), Part::Re).unwrap(),
            &BaseData::new(vec![GaussianRational::from(0)], w0.clone()),
        )
        .unwrap();

        let var = |s, v| MultiPoly::var(s, v).unwrap();
        let konst = |s, v: &num_rational::BigRational| {
            MultiPoly::constant(s, GaussianRational::real(v.clone()))
        };
        let moved_a = a
            .substitute(
                &[
                    (Var::X(1), &var(real, Var::X(1)) - &konst(real, shift.re())),
                    (Var::Y(1), &var(real, Var::Y(1)) - &konst(real, shift.im())),
                    (Var::T, &var(real, Var::T) - &konst(real, c.re())),
                ],
                real,
            )
            .unwrap();
        let moved = cartan_lift(
            &AnnihilatorCertificate::new(moved_a, Part::Re).unwrap(),
            &BaseData::new(vec![shift.clone()], &w0 + &c),
        )
        .unwrap();

        let expect = original
            .poly()
            .substitute(
                &[
                    (
                        Var::Z(1),
                        &var(complex, Var::Z(1)) - &MultiPoly::constant(complex, shift.clone()),
                    ),
                    (
                        Var::T,
                        &var(complex, Var::T) - &MultiPoly::constant(complex, c.clone()),
                    ),
                ],
                complex,
            )
            .unwrap()
            .content_normalize()
            .unwrap();
        assert_eq!(
            moved.poly(),
            &expect,
            "A = {a}, shift {shift}, c {c}, w0 {w0}"
        );
    }
}

#[test]
fn anti_holomorphic_merge_is_caught() {
    let re = AnnihilatorCertificate::parse("t - x1", Part::Re).unwrap();
    let im = AnnihilatorCertificate::parse("t + y1", Part::Im).unwrap();
    let merged = merge_real_pair(&re, &im, None).unwrap();
    let rep = verify_certificate(
        &merged,
        &parse_expr("conj(z1)").unwrap(),
        &region(1.0),
        200,
        1e-8,
        0,
    )
    .unwrap();
    assert!(!rep.pass);
    assert!(rep.max_relative_residual > 1e-3);
}

#[test]
fn evaluation_examples() {
    let at = |e: &str, z: Complex64| {
        eval_expr(
            &parse_expr(e).unwrap(),
            &ComplexPoint::new(vec![z]).unwrap(),
            1e-3,
        )
        .unwrap()
    };
    assert_eq!(
        at("sqrt(1 + z1^2)", Complex64::new(0.0, 0.0)),
        Some(Complex64::new(1.0, 0.0))
    );
    assert_eq!(
        at("z1/(1 + z1)", Complex64::new(1.0, 0.0)),
        Some(Complex64::new(0.5, 0.0))
    );
    assert_eq!(at("sqrt(1 + z1^2)", Complex64::new(0.0, 1.0)), None);
}
