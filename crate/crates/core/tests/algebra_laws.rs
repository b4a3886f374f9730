use nashcert::algebra::{phi, phi_inverse, GaussianRational, MultiPoly, Var, VarSpace};
use proptest::prelude::*;

type Term = (i64, i64, Vec<u32>);

fn build(space: VarSpace, vars: &[Var], terms: &[Term]) -> MultiPoly {
    let mut p = MultiPoly::zero(space);
    for (re, im, exps) in terms {
        let powers: Vec<(Var, u32)> = vars.iter().copied().zip(exps.iter().copied()).collect();
        let m =
            MultiPoly::monomial(space, &powers, GaussianRational::from_integers(*re, *im)).unwrap();
        p = &p + &m;
    }
    p
}

fn terms(nvars: usize) -> impl Strategy<Value = Vec<Term>> {
    prop::collection::vec(
        (-5i64..=5, -5i64..=5, prop::collection::vec(0u32..=2, nvars)),
        0..5,
    )
}

fn pair_space() -> (VarSpace, Vec<Var>) {
    let s = VarSpace::conjugate_pair(2);
    (
        s,
        vec![Var::Z(1), Var::Z(2), Var::ZBar(1), Var::ZBar(2), Var::T],
    )
}

fn real_space() -> (VarSpace, Vec<Var>) {
    let s = VarSpace::real(2);
    (s, vec![Var::X(1), Var::X(2), Var::Y(1), Var::Y(2), Var::T])
}

fn pair_poly() -> impl Strategy<Value = MultiPoly> {
    terms(5).prop_map(|t| {
        let (s, v) = pair_space();
        build(s, &v, &t)
    })
}

fn real_poly() -> impl Strategy<Value = MultiPoly> {
    terms(5).prop_map(|t| {
        let (s, v) = real_space();
        build(s, &v, &t)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn conjugation_is_an_involution(p in pair_poly()) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn conjugation_is_multiplicative(p in pair_poly(), q in pair_poly()) {
        prop_assert_eq!((&p * &q).conjugate(), &p.conjugate() * &q.conjugate());
        prop_assert_eq!((&p + &q).conjugate(), &p.conjugate() + &q.conjugate());
    }

    #[test]
    fn realify_has_exactly_real_coefficients(p in pair_poly()) {
        prop_assume!(!p.is_zero());
        let r = p.realify().unwrap();
        prop_assert!(!r.is_zero());
        prop_assert!(r.terms().all(|(_, c)| c.is_real()));
    }

    #[test]
    fn phi_is_a_ring_homomorphism(p in pair_poly(), q in pair_poly()) {
        prop_assert_eq!(phi(&(&p * &q)).unwrap(), &phi(&p).unwrap() * &phi(&q).unwrap());
        prop_assert_eq!(phi(&(&p + &q)).unwrap(), &phi(&p).unwrap() + &phi(&q).unwrap());
        let one = MultiPoly::one(p.space());
        prop_assert_eq!(phi(&one).unwrap(), MultiPoly::one(VarSpace::real(2)));
    }

    #[test]
    fn phi_round_trips(p in pair_poly(), a in real_poly()) {
        prop_assert_eq!(phi_inverse(&phi(&p).unwrap()).unwrap(), p);
        prop_assert_eq!(phi(&phi_inverse(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn phi_maps_real_to_conjugation_symmetric(a in real_poly()) {
        // a real polynomial in x, y comes from one fixed by conj + swap(z, zb)
        let a = a.map_coeffs(|c| GaussianRational::real(c.re().clone()));
        let p = phi_inverse(&a).unwrap();
        let s = p.space();
        let swap: Vec<(Var, MultiPoly)> = (1..=2)
            .flat_map(|k| {
                [
                    (Var::Z(k), MultiPoly::var(s, Var::ZBar(k)).unwrap()),
                    (Var::ZBar(k), MultiPoly::var(s, Var::Z(k)).unwrap()),
                ]
            })
            .collect();
        prop_assert_eq!(p.conjugate().substitute(&swap, s).unwrap(), p);
    }

    #[test]
    fn content_normalize_is_idempotent(p in pair_poly(), d in 1i64..7, re in -3i64..=3, im in -3i64..=3) {
        prop_assume!(!p.is_zero());
        let c = GaussianRational::from_integers(re, im);
        prop_assume!(!num_traits::Zero::is_zero(&c));
        let once = p.content_normalize().unwrap();
        prop_assert_eq!(once.content_normalize().unwrap(), once.clone());
        // invariant under scaling by any nonzero constant
        let scaled = p.scale(&(&c / &GaussianRational::from(d)));
        prop_assert_eq!(scaled.content_normalize().unwrap(), once);
    }

    #[test]
    fn text_round_trips(p in pair_poly()) {
        let text = p.to_string();
        prop_assert_eq!(MultiPoly::parse_in(&text, p.space()).unwrap(), p);
    }
}
