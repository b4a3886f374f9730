//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use nashcert::algebra::{
    phi, phi_inverse, Assignment, Family, GaussianRational, MultiPoly, Var, VarSpace,
};
use nashcert::certificates::{
    cartan_lift, merge_real_pair, split_complex, AnnihilatorCertificate, BaseData, Part,
};
use nashcert::elimination::resultant_wrt;
use nashcert_cli::{run, EXIT_DEGENERATE, EXIT_OK, EXIT_VERIFICATION};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<String, String>;

/// f, a hand-derived annihilator, sampling radius, f(0).
const CATALOG: &[(&str, &str, &str, &str)] = &[
    ("z1", "t - z1", "1", "0"),
    ("z1^2", "t - z1^2", "1", "0"),
    ("1/(1 + z1)", "z1*t + t - 1", "1/2", "1"),
    ("sqrt(1 + z1^2)", "t^2 - z1^2 - 1", "1/2", "1"),
    ("z1*sqrt(1 + z1^2)", "t^2 - z1^4 - z1^2", "1/2", "0"),
    ("(1 + z1)*z1^2", "t - z1^3 - z1^2", "1", "0"),
];

const TOL: f64 = 1e-8;

fn cli(args: &[&str]) -> (i32, String) {
    let out = run(["nashcert", "--machine"].iter().chain(args.iter()).copied());
    (out.exit, out.stdout)
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("machine output is JSON")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn regressions() -> Check {
    let start = Instant::now();
    let f = |s: &str| AnnihilatorCertificate::parse(s, Part::F).unwrap();
    let re = |s: &str| AnnihilatorCertificate::parse(s, Part::Re).unwrap();
    let im = |s: &str| AnnihilatorCertificate::parse(s, Part::Im).unwrap();
    let mut got = Vec::new();
    for p in ["t - z1", "t - z1^2"] {
        let (a, b) = split_complex(&f(p)).map_err(|e| e.to_string())?;
        got.push(a.poly().to_string());
        got.push(b.poly().to_string());
    }
    got.push(
        cartan_lift(&re("t - x1^2 + y1^2"), &BaseData::origin(1))
            .map_err(|e| e.to_string())?
            .poly()
            .to_string(),
    );
    got.push(
        merge_real_pair(&re("t - x1"), &im("t - y1"), None)
            .map_err(|e| e.to_string())?
            .poly()
            .to_string(),
    );
    let want = [
        "t - x1",
        "t - y1",
        "t - x1^2 + y1^2",
        "t - 2*x1*y1",
        "t - z1^2",
        "t - z1",
    ];
    ensure(got == want, || format!("got {got:?}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "6/6 canonical strings match in {:.3} s",
        elapsed.as_secs_f64()
    ))
}

/// Machine documents of every verification run, in order, for the determinism check.
fn verification_suite(docs: &mut Vec<String>) -> (Check, Check, Check) {
    let mut worst = 0.0f64;
    let mut slowest = Duration::ZERO;
    let mut soundness = Ok(());
    for (f, p, r, _) in CATALOG {
        let start = Instant::now();
        let (exit, out) = cli(&[
            "split",
            "--annihilator",
            p,
            "--verify",
            f,
            "--radius",
            r,
            "--count",
            "200",
            "--seed",
            "1",
        ]);
        slowest = slowest.max(start.elapsed());
        let v = json(&out);
        docs.push(out);
        for rep in v["reports"].as_array().into_iter().flatten() {
            let res = rep["report"]["max_relative_residual"]
                .as_f64()
                .unwrap_or(f64::INFINITY);
            let n = rep["report"]["points_checked"].as_u64().unwrap_or(0);
            worst = worst.max(res);
            if soundness.is_ok() && (res > TOL || n != 200) {
                soundness = Err(format!(
                    "{f}: {} residual {res:e} over {n} points",
                    rep["part"]
                ));
            }
        }
        if soundness.is_ok() && exit != EXIT_OK {
            soundness = Err(format!("{f}: split exited {exit}: {}", v["error"]));
        }
    }
    let catalog = soundness
        .and_then(|_| {
            ensure(slowest < Duration::from_secs(10), || {
                format!("slowest function took {slowest:?}")
            })
        })
        .map(|_| {
            format!(
                "12 certificates, max residual {worst:.2e} <= 1e-8, slowest {:.2} s",
                slowest.as_secs_f64()
            )
        });

    let mut round = Ok(());
    let mut worst_rt = 0.0f64;
    for (f, p, r, w0) in CATALOG {
        let cert = AnnihilatorCertificate::parse(p, Part::F).unwrap();
        let a1 = match split_complex(&cert) {
            Ok((a1, _)) => a1.poly().to_string(),
            Err(e) => {
                round = round.and(Err(format!("{f}: split failed: {e}")));
                continue;
            }
        };
        let (exit, out) = cli(&[
            "lift",
            "--real-annihilator",
            &a1,
            "--base",
            "0",
            "--value",
            w0,
            "--verify",
            f,
            "--radius",
            r,
            "--seed",
            "2",
        ]);
        let v = json(&out);
        docs.push(out);
        let res = v["reports"][0]["report"]["max_relative_residual"]
            .as_f64()
            .unwrap_or(f64::INFINITY);
        worst_rt = worst_rt.max(res);
        if round.is_ok() && (exit != EXIT_OK || res > TOL) {
            round = Err(format!(
                "{f}: lift exited {exit}, residual {res:e}, {}",
                v["error"]
            ));
        }
    }
    let round =
        round.map(|_| format!("6/6 lifted certificates annihilate f, max residual {worst_rt:.2e}"));

    let (exit, out) = cli(&[
        "merge", "--p1", "t - x1", "--p2", "t + y1", "--verify", "conj(z1)", "--radius", "1",
    ]);
    let v = json(&out);
    docs.push(out);
    let res = v["reports"][0]["report"]["max_relative_residual"]
        .as_f64()
        .unwrap_or(0.0);
    let mut negative = ensure(exit == EXIT_VERIFICATION && res > 1e-3, || {
        format!("merge vs conj(z1): exit {exit}, residual {res:e}")
    });
    for k in [1, 2] {
        let p = MultiPoly::parse("x1^2 + y1^2").unwrap().pow(k).to_string();
        let (exit, out) = cli(&[
            "lift",
            "--real-annihilator",
            &p,
            "--base",
            "0",
            "--value",
            "0",
        ]);
        docs.push(out);
        negative = negative.and(ensure(exit == EXIT_DEGENERATE, || {
            format!("lift of ({p}) exited {exit}")
        }));
    }
    let negative = negative.map(|_| {
        format!("conj(z1) residual {res:.3} > 1e-3 (exit 3); (x1^2+y1^2)^k, k=1,2 exit 2")
    });
    (catalog, round, negative)
}

fn oracle_space() -> VarSpace {
    VarSpace::complex(2).with(Family::W)
}

fn random_coeff(rng: &mut ChaCha8Rng, extras: &[Var], nonzero: bool) -> MultiPoly {
    loop {
        let mut p = MultiPoly::zero(oracle_space());
        for _ in 0..rng.gen_range(1..=3) {
            let powers: Vec<(Var, u32)> =
                extras.iter().map(|&v| (v, rng.gen_range(0..=2))).collect();
            let c = GaussianRational::from(rng.gen_range(-5i64..=5));
            p = &p + &MultiPoly::monomial(oracle_space(), &powers, c).unwrap();
        }
        if !nonzero || !p.is_zero() {
            return p;
        }
    }
}

fn random_w_poly(rng: &mut ChaCha8Rng, extras: &[Var]) -> MultiPoly {
    let deg = rng.gen_range(1..=3);
    let coeffs: Vec<MultiPoly> = (0..=deg)
        .map(|i| random_coeff(rng, extras, i == deg))
        .collect();
    MultiPoly::from_coeffs_in(oracle_space(), Var::W, &coeffs)
}

fn sylvester_det(p: &MultiPoly, q: &MultiPoly, at: &Assignment) -> Complex64 {
    let eval = |c: &MultiPoly| c.eval(at).unwrap().value;
    let a: Vec<Complex64> = p.coeffs_in(Var::W).iter().map(eval).collect();
    let b: Vec<Complex64> = q.coeffs_in(Var::W).iter().map(eval).collect();
    let (m, n) = (a.len() - 1, b.len() - 1);
    let mut s = DMatrix::<Complex64>::zeros(m + n, m + n);
    for r in 0..n {
        for (j, c) in a.iter().rev().enumerate() {
            s[(r, r + j)] = *c;
        }
    }
    for r in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            s[(n + r, r + j)] = *c;
        }
    }
    s.determinant()
}

fn resultant_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let vars = [Var::Z(1), Var::Z(2)];
    let mut worst = 0.0f64;
    let mut reduced = 0;
    for case in 0..100 {
        let extras = &vars[..rng.gen_range(0..=2)];
        let p = random_w_poly(&mut rng, extras);
        let q = random_w_poly(&mut rng, extras);
        let r = resultant_wrt(&p, &q, Var::W).map_err(|e| format!("case {case}: {e}"))?;
        reduced += usize::from(r.reduced);
        for _ in 0..10 {
            let mut at = Assignment::new(oracle_space());
            for v in [Var::Z(1), Var::Z(2), Var::T] {
                at.set(
                    v,
                    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                );
            }
            let num = sylvester_det(&p, &q, &at);
            if r.reduced {
                ensure(num.norm() < 1e-6, || {
                    format!("case {case}: reduced but numeric det {num}")
                })?;
                continue;
            }
            let sym = r.resultant.eval(&at).unwrap().value;
            let rel = (sym - num).norm() / sym.norm().max(num.norm()).max(f64::MIN_POSITIVE);
            worst = worst.max(rel);
            ensure(rel <= 1e-9, || {
                format!("case {case}: p = {p}, q = {q}: {sym} vs {num}")
            })?;
        }
    }
    Ok(format!(
        "100 pairs x 10 points, max relative error {worst:.2e} ({reduced} pairs shared a factor)"
    ))
}

fn random_pair_poly(rng: &mut ChaCha8Rng) -> MultiPoly {
    let s = VarSpace::conjugate_pair(2);
    let vars = [Var::Z(1), Var::Z(2), Var::ZBar(1), Var::ZBar(2), Var::T];
    let mut p = MultiPoly::zero(s);
    for _ in 0..rng.gen_range(1..=4) {
        let powers: Vec<(Var, u32)> = vars.iter().map(|&v| (v, rng.gen_range(0..=2))).collect();
        let c = GaussianRational::from_integers(rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        p = &p
            + &MultiPoly::monomial(
                s,
                &powers,
                &c / &GaussianRational::from(rng.gen_range(1..=4)),
            )
            .unwrap();
    }
    p
}

fn algebra_laws() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut failures = Vec::new();
    let mut record = |law: &str, ok: bool, p: &MultiPoly| {
        if !ok && failures.len() < 3 {
            failures.push(format!("{law} at {p}"));
        }
    };
    for _ in 0..100 {
        let p = random_pair_poly(&mut rng);
        let q = random_pair_poly(&mut rng);
        record("conj involution", p.conjugate().conjugate() == p, &p);
        record(
            "conj multiplicative",
            (&p * &q).conjugate() == &p.conjugate() * &q.conjugate(),
            &p,
        );
        if !p.is_zero() {
            let r = p.realify().map_err(|e| e.to_string())?;
            record(
                "realify real",
                !r.is_zero() && r.terms().all(|(_, c)| c.im() == &Default::default()),
                &p,
            );
            let n = p.content_normalize().map_err(|e| e.to_string())?;
            record(
                "normalize idempotent",
                n.content_normalize().map_err(|e| e.to_string())? == n,
                &p,
            );
        }
        let (fp, fq) = (
            phi(&p).map_err(|e| e.to_string())?,
            phi(&q).map_err(|e| e.to_string())?,
        );
        record(
            "phi multiplicative",
            phi(&(&p * &q)).map_err(|e| e.to_string())? == &fp * &fq,
            &p,
        );
        record(
            "phi additive",
            phi(&(&p + &q)).map_err(|e| e.to_string())? == &fp + &fq,
            &p,
        );
        record(
            "phi round trip",
            phi_inverse(&fp).map_err(|e| e.to_string())? == p,
            &p,
        );
        record(
            "phi inverse round trip",
            phi(&phi_inverse(&fp).map_err(|e| e.to_string())?).map_err(|e| e.to_string())? == fp,
            &p,
        );
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok("8 laws x 100 cases, 0 failures".into())
}

fn main() {
    let total = Instant::now();
    let mut lines: Vec<(&str, Check)> = Vec::new();
    lines.push(("exact regressions", regressions()));

    let mut first = Vec::new();
    let (catalog, round, negative) = verification_suite(&mut first);
    lines.push(("catalog soundness", catalog));
    lines.push(("round trip", round));
    lines.push(("resultant oracle", resultant_oracle()));
    lines.push(("algebra laws", algebra_laws()));
    lines.push(("negative controls", negative));

    let mut second = Vec::new();
    let _ = verification_suite(&mut second);
    let determinism = ensure(first == second, || {
        let k = first
            .iter()
            .zip(&second)
            .position(|(a, b)| a != b)
            .unwrap_or(first.len().min(second.len()));
        format!("document {k} differs between runs")
    })
    .map(|_| {
        format!(
            "{} machine documents byte-identical across two runs",
            first.len()
        )
    });
    lines.push(("determinism", determinism));

    let elapsed = total.elapsed();
    lines.push((
        "total runtime",
        ensure(elapsed < Duration::from_secs(60), || {
            format!("{:.1} s", elapsed.as_secs_f64())
        })
        .map(|_| format!("{:.2} s < 60 s", elapsed.as_secs_f64())),
    ));

    let mut failed = 0;
    for (k, (name, result)) in lines.iter().enumerate() {
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
