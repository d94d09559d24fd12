//! The acceptance blocks, one per criterion, each a list of named checks.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use ctwork_core::arith::{binomial, int, rat, Coeff, MultiPoly, Rational};
use ctwork_core::closed::{g2_hz, g2_log, macdonald_equal, morris, rhs_complex, rhs_exact, PnFamily};
use ctwork_core::combin::{
    det, enumerate_matchings, exists_signature_pair, pf_closed_q, pfaffian_by_definition, pfaffian_by_elimination,
    q_matrix, rotate_matching, sigma_matrix, signature_condition, summand, tau_even, tau_matrix, SignatureKind,
    SkewMatrix,
};
use ctwork_core::hyper::{d4_multisum, g2_b_sum, verify_certificate};
use ctwork_core::kernels::{build_kernel, ct, CtValue, KernelFamily, KernelParams, Mode};
use ctwork_core::series::Symbols;
use ctwork_core::{Error, Result};
use num_traits::One;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::fit::{fit_pn, pn_at_one, pn_at_zero};
use crate::report::VerifyReport;
use crate::structure::{fr_sequence, matching_sum_check, sign_permutation_check};
use crate::verify::{verify, Settings};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { label: label.into(), passed, detail: detail.into() }
    }

    fn from_report(r: &VerifyReport) -> Self {
        Check::new(r.id.clone(), r.passed(), r.to_string())
    }

    fn from_result<T>(label: impl Into<String>, r: Result<T>, ok: impl FnOnce(&T) -> (bool, String)) -> Self {
        match r {
            Ok(v) => {
                let (passed, detail) = ok(&v);
                Check::new(label, passed, detail)
            }
            Err(e) => Check::new(label, false, format!("error: {e}")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub criterion: u8,
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub reports: Vec<VerifyReport>,
    pub ms: u64,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        let bad = self.failures().count();
        format!(
            "criterion {:2} {:<15} {} ({} checks, {} failed, {} ms)",
            self.criterion,
            self.suite.name(),
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len(),
            bad,
            self.ms
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Dyson,
    Morris,
    TauRewrite,
    LogDyson,
    LogMorris,
    AmLog,
    G2,
    Bc,
    Pfaffian,
    Signatures,
    Certificate,
    ComplexMorris,
    ComplexG2,
    D4,
    Structure,
    PnFit,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::Dyson,
        Suite::Morris,
        Suite::TauRewrite,
        Suite::LogDyson,
        Suite::LogMorris,
        Suite::AmLog,
        Suite::G2,
        Suite::Bc,
        Suite::Pfaffian,
        Suite::Signatures,
        Suite::Certificate,
        Suite::ComplexMorris,
        Suite::ComplexG2,
        Suite::D4,
        Suite::Structure,
        Suite::PnFit,
    ];

    pub fn criterion(self) -> u8 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u8 + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dyson => "dyson",
            Suite::Morris => "morris",
            Suite::TauRewrite => "tau-rewrite",
            Suite::LogDyson => "log-dyson",
            Suite::LogMorris => "log-morris",
            Suite::AmLog => "am-log",
            Suite::G2 => "g2",
            Suite::Bc => "bc",
            Suite::Pfaffian => "pfaffian",
            Suite::Signatures => "signatures",
            Suite::Certificate => "certificate",
            Suite::ComplexMorris => "complex-morris",
            Suite::ComplexG2 => "complex-g2",
            Suite::D4 => "d4",
            Suite::Structure => "structure",
            Suite::PnFit => "pn-fit",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Ok(n) = s.parse::<usize>() {
            if (1..=16).contains(&n) {
                return Ok(Suite::ALL[n - 1]);
            }
        }
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown suite {s:?}")))
    }
}

/// Run one acceptance block.
pub fn run_suite(suite: Suite, settings: &Settings) -> SuiteOutcome {
    let start = Instant::now();
    let (checks, reports) = match suite {
        Suite::Dyson => dyson(settings),
        Suite::Morris => morris_suite(settings),
        Suite::TauRewrite => tau_rewrite(settings),
        Suite::LogDyson => log_dyson(settings),
        Suite::LogMorris => log_morris(settings),
        Suite::AmLog => am_log(settings),
        Suite::G2 => g2(settings),
        Suite::Bc => bc(settings),
        Suite::Pfaffian => (pfaffian(), Vec::new()),
        Suite::Signatures => (signatures(), Vec::new()),
        Suite::Certificate => (certificate(), Vec::new()),
        Suite::ComplexMorris => complex_morris(settings),
        Suite::ComplexG2 => complex_g2(settings),
        Suite::D4 => (d4(), Vec::new()),
        Suite::Structure => structure(),
        Suite::PnFit => (pn_fit(settings), Vec::new()),
    };
    SuiteOutcome { criterion: suite.criterion(), suite, checks, reports, ms: start.elapsed().as_millis() as u64 }
}

type Block = (Vec<Check>, Vec<VerifyReport>);

/// Verify every instance in parallel; results keep the input order.
fn verify_all(cases: Vec<(KernelFamily, KernelParams)>, s: &Settings) -> Block {
    let results: Vec<_> = cases.par_iter().map(|(f, p)| (f, p, verify(*f, p, s))).collect();
    let mut checks = Vec::new();
    let mut reports = Vec::new();
    for (f, p, r) in results {
        match r {
            Ok(r) => {
                checks.push(Check::from_report(&r));
                reports.push(r);
            }
            Err(e) => checks.push(Check::new(f.id(), false, format!("{p:?}: error: {e}"))),
        }
    }
    (checks, reports)
}

fn grid(ranges: &[u32]) -> Vec<Vec<u32>> {
    ranges.iter().fold(vec![Vec::new()], |acc, &r| {
        acc.into_iter().flat_map(|v| (0..r).map(move |x| [v.clone(), vec![x]].concat())).collect()
    })
}

fn dyson(s: &Settings) -> Block {
    let mut cases: Vec<_> = grid(&[4, 4, 4]).into_iter().chain(grid(&[3, 3, 3, 3])).collect();
    let mut rng = StdRng::seed_from_u64(2024);
    cases.extend((0..20).map(|_| (0..5).map(|_| rng.gen_range(0..=2)).collect::<Vec<u32>>()));
    let cases = cases.into_iter().map(|a| (KernelFamily::Dyson, KernelParams::new(a.len()).with_a_vec(a))).collect();
    verify_all(cases, s)
}

fn morris_params(n: usize, a: u32, b: u32, k: u32) -> KernelParams {
    KernelParams::new(n).with_a(a).with_b(b).with_k(k)
}

fn morris_suite(s: &Settings) -> Block {
    let mut cases: Vec<_> = grid(&[3, 3, 3]).into_iter().map(|v| (KernelFamily::Morris, morris_params(3, v[0], v[1], v[2]))).collect();
    cases.push((KernelFamily::Morris, morris_params(5, 1, 1, 1)));
    verify_all(cases, s)
}

fn series_equal(lhs: KernelFamily, rhs: KernelFamily, p: &KernelParams, sign: i64) -> Result<bool> {
    let sym = Symbols::plain(Rational::one());
    let l = build_kernel(lhs, p, &sym)?.expand()?;
    let r = build_kernel(rhs, p, &sym)?.expand()?;
    Ok(l == r.scale(&int(sign)))
}

fn tau_rewrite(s: &Settings) -> Block {
    let mut cases = Vec::new();
    for (n, kmax) in [(3usize, 2u32), (5, 1)] {
        let ab: &[(u32, u32)] = if n == 3 { &[(0, 0), (1, 0), (1, 1), (2, 1)] } else { &[(0, 0), (1, 0)] };
        for &(a, b) in ab {
            for k in 0..=kmax {
                cases.push((KernelFamily::MorrisTau, morris_params(n, a, b, k)));
            }
        }
    }
    let (mut checks, reports) = verify_all(cases, s);
    // the signed value is (-1)^{km} times the Morris product
    for r in &reports {
        let p = &r.params;
        let sign = if (p.k as usize * p.half()) % 2 == 1 { int(-1) } else { int(1) };
        let want = sign * morris(p.n, p.a0().unwrap_or(0), p.b, p.k);
        checks.push(Check::new("tau-sign", r.lhs.exact.as_ref() == Some(&want), format!("n={} k={} -> {want}", p.n, p.k)));
    }
    for (n, k, a, b) in [(3, 0, 0, 0), (3, 1, 0, 0), (3, 1, 1, 1), (5, 0, 0, 0), (5, 1, 0, 0)] {
        let p = morris_params(n, a, b, k);
        let sign = if (k as usize * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
        let label = format!("series rewrite n={n} k={k} a={a} b={b}");
        checks.push(Check::from_result(label, series_equal(KernelFamily::Morris, KernelFamily::MorrisTau, &p, sign), |&ok| {
            (ok, "kernel series equal up to sign".into())
        }));
    }
    (checks, reports)
}

fn log_dyson(s: &Settings) -> Block {
    let cases = [(3usize, 0u32), (3, 1), (3, 2), (3, 3), (5, 0), (5, 1)]
        .into_iter()
        .map(|(n, k)| (KernelFamily::LogDyson, KernelParams::new(n).with_k(k)))
        .collect();
    let (mut checks, reports) = verify_all(cases, s);
    let anchor = reports.iter().find(|r| r.params.n == 3 && r.params.k == 1);
    checks.push(Check::new(
        "anchor n=3 k=1",
        anchor.and_then(|r| r.lhs.exact.clone()) == Some(rat(35, 3)),
        "35/3",
    ));
    (checks, reports)
}

fn log_morris(s: &Settings) -> Block {
    let mut cases: Vec<_> = grid(&[3, 3, 2])
        .into_iter()
        .map(|v| (KernelFamily::LogMorris, morris_params(3, v[0], v[1], v[2])))
        .collect();
    cases.push((KernelFamily::LogMorris, morris_params(5, 1, 0, 0)));
    verify_all(cases, s)
}

fn am_log(s: &Settings) -> Block {
    let cases = grid(&[3, 5])
        .into_iter()
        .map(|v| (KernelFamily::AmLog, KernelParams::new(3).with_k(v[0]).with_a(v[1])))
        .collect();
    let (mut checks, reports) = verify_all(cases, s);
    let p = KernelParams::new(3).with_a(2);
    let printed = rhs_exact(KernelFamily::AmLog, &p);
    let measured = reports.iter().find(|r| r.params.k == 0 && r.params.a == vec![2]).and_then(|r| r.lhs.exact.clone());
    checks.push(Check::new(
        "anchor k=0 a=2",
        printed.as_ref().ok() == Some(&int(5)) && measured == Some(int(-5)),
        "printed value 5; the kernel with its logarithms as built gives -5 = (-1)^m 5",
    ));
    (checks, reports)
}

fn g2(s: &Settings) -> Block {
    let mut cases = Vec::new();
    for v in grid(&[3, 3]) {
        let p = KernelParams::default().with_k(v[0]).with_m(v[1]);
        for f in [KernelFamily::G2Hz, KernelFamily::G2LogLong, KernelFamily::G2LogShort] {
            cases.push((f, p.clone()));
        }
    }
    for k in 0..=2 {
        cases.push((KernelFamily::G2Equal, KernelParams::default().with_k(k)));
    }
    let (mut checks, reports) = verify_all(cases, s);
    for k in 0..=2i64 {
        let want = Rational::from_integer(binomial(2 * k, k) * binomial(6 * k, k));
        let got = rhs_exact(KernelFamily::G2Equal, &KernelParams::default().with_k(k as u32));
        checks.push(Check::new(format!("equal form k={k}"), got.ok() == Some(want.clone()), want.to_string()));
    }
    checks.push(Check::new("anchor hz(1,1)", g2_hz(1, 1) == int(12), "12"));
    checks.push(Check::new("anchor G(1,0)", g2_log(1, 0) == int(1), "1"));
    (checks, reports)
}

fn bc(s: &Settings) -> Block {
    let mut cases: Vec<_> = grid(&[3, 3, 3]).into_iter().map(|v| (KernelFamily::Bc, morris_params(2, v[0], v[1], v[2]))).collect();
    cases.extend(grid(&[2, 2, 2]).into_iter().map(|v| (KernelFamily::Bc, morris_params(3, v[0], v[1], v[2]))));
    cases.push((KernelFamily::BcSigmaTau, morris_params(4, 0, 0, 1)));
    cases.push((KernelFamily::BcSigmaTau, morris_params(5, 0, 0, 1)));
    let (mut checks, reports) = verify_all(cases, s);
    for n in [4usize, 5] {
        let p = KernelParams::new(n).with_k(1);
        checks.push(Check::from_result(
            format!("sigma/tau series n={n}"),
            series_equal(KernelFamily::Bc, KernelFamily::BcSigmaTau, &p, 1),
            |&ok| (ok, "kernel series equal".into()),
        ));
    }
    (checks, reports)
}

fn random_skew(rng: &mut StdRng, n: usize) -> SkewMatrix<Rational> {
    SkewMatrix::from_upper(n, |_, _| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
}

fn symbols(prefixes: &[(&str, usize)]) -> Vec<MultiPoly> {
    let names: Vec<String> = prefixes.iter().flat_map(|&(p, c)| (1..=c).map(move |i| format!("{p}{i}"))).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    MultiPoly::generators(&refs)
}

fn pfaffian() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut rng = StdRng::seed_from_u64(9);
    for n in (2..=10).step_by(2) {
        for t in 0..3 {
            let a = random_skew(&mut rng, n);
            let label = format!("random {n}x{n} #{t}");
            let r = (|| -> Result<(bool, bool, bool)> {
                let pf = pfaffian_by_elimination(&a)?;
                let def = pfaffian_by_definition(&a)? == pf;
                let sq = &pf * &pf == det(a.rows())?;
                let u: Vec<Vec<Rational>> = (0..n)
                    .map(|i| (0..n).map(|j| if i == j { int(1) } else if i < j { int(rng.gen_range(-3..=3)) } else { int(0) }).collect())
                    .collect();
                let cong = pfaffian_by_elimination(&a.congruent(&u)?)? == pf;
                Ok((def, sq, cong))
            })();
            checks.push(Check::from_result(label, r, |&(d, s, c)| {
                (d && s && c, format!("definition={d} square=det={s} congruence={c}"))
            }));
        }
    }
    for n in [3usize, 5] {
        let g = symbols(&[("a", n + 1), ("b", n)]);
        let (a, b) = g.split_at(n + 1);
        let r = q_matrix(a, b, None).and_then(|q| Ok(pfaffian_by_definition(&q)? == pf_closed_q(a, b, None)?));
        checks.push(Check::from_result(format!("closed form symbolic n={n}"), r, |&ok| (ok, String::new())));
        let g = symbols(&[("a", n + 1), ("b", n), ("x", n)]);
        let (a, rest) = g.split_at(n + 1);
        let (b, x) = rest.split_at(n);
        let r = q_matrix(a, b, Some(x)).and_then(|q| Ok(pfaffian_by_definition(&q)? == pf_closed_q(a, b, Some(x))?));
        checks.push(Check::from_result(format!("remark variant n={n}"), r, |&ok| (ok, String::new())));
    }
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..3 {
        let a: Vec<Rational> = (0..=7).map(|_| rat(rng.gen_range(1..=9), rng.gen_range(1..=5))).collect();
        let b: Vec<Rational> = (0..7).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
        let r = q_matrix(&a, &b, None).and_then(|q| {
            let c = pf_closed_q(&a, &b, None)?;
            Ok(pfaffian_by_definition(&q)? == c && pfaffian_by_elimination(&q)? == c)
        });
        checks.push(Check::from_result("closed form random n=7", r, |&ok| (ok, String::new())));
    }
    for n in [3usize, 5] {
        let a: Vec<Rational> = (0..=n).map(|i| int(i as i64 + 2)).collect();
        let b: Vec<Rational> = (0..n).map(|i| int(10 * i as i64 + 1)).collect();
        let mut rotated = b[1..].to_vec();
        rotated.push(b[0].clone());
        let r = (|| -> Result<(bool, usize)> {
            let qa = q_matrix(&a, &b, None)?;
            let qb = q_matrix(&a, &rotated, None)?;
            let all = enumerate_matchings(n + 1)?;
            let mut ok = true;
            for pi in &all {
                ok &= summand(&qa, pi) == summand(&qb, &rotate_matching(pi)?);
            }
            Ok((ok, all.len()))
        })();
        checks.push(Check::from_result(format!("cyclic sign law n={n}"), r, |&(ok, c)| (ok, format!("{c} matchings"))));
    }
    checks
}

fn signatures() -> Vec<Check> {
    let mut checks = Vec::new();
    let tau_ok = (1..=101).step_by(2).all(|n| {
        tau_matrix(n).is_ok_and(|t| t.is_circulant() && t.row_sums().iter().all(|&s| s == 0))
    });
    checks.push(Check::new("tau circulant, zero row sums, odd n <= 101", tau_ok, ""));
    let mut bad = Vec::new();
    for n in 1..=100usize {
        let ok = match n % 4 {
            1 => sigma_matrix(n, SignatureKind::Sigma1Mod4)
                .and_then(|s| signature_condition(&s, &tau_matrix(n)?)),
            0 => sigma_matrix(n, SignatureKind::Sigma0Mod4).and_then(|s| signature_condition(&s, &tau_even(n)?)),
            _ => continue,
        };
        if !matches!(ok, Ok(true)) {
            bad.push(n);
        }
    }
    checks.push(Check::new("sigma lemmas n = 0, 1 mod 4, n <= 100", bad.is_empty(), format!("failing n: {bad:?}")));
    for n in [2usize, 3] {
        checks.push(Check::from_result(format!("no signature pair n={n}"), exists_signature_pair(n), |&e| {
            (!e, "exhaustive search".into())
        }));
    }
    checks
}

fn certificate() -> Vec<Check> {
    let start = Instant::now();
    let rep = verify_certificate();
    let ms = start.elapsed().as_millis();
    vec![
        Check::new("polynomial identity", rep.verified, format!("{} difference terms", rep.difference_terms)),
        Check::new("runtime < 10 s", ms < 10_000, format!("{ms} ms")),
    ]
}

fn complex_morris(s: &Settings) -> Block {
    let s = Settings { order: 400, ..*s };
    let mut cases = Vec::new();
    for u in [rat(1, 2), rat(1, 4)] {
        for v in grid(&[3, 3]) {
            cases.push((KernelFamily::ComplexMorris, morris_params(3, v[0], v[1], 0).with_u(u.clone()).with_order(400)));
        }
    }
    let (mut checks, reports) = verify_all(cases, &s);
    for v in grid(&[3, 3]) {
        let (a, b) = (v[0], v[1]);
        let p = morris_params(3, a, b, 0).with_u(int(2)).with_order(400);
        // k = 1, m = 1
        let want = -morris(3, a, b, 1);
        let r = ct(KernelFamily::ComplexMorris, &p, Mode::Rational);
        checks.push(Check::from_result(format!("u=2 a={a} b={b}"), r, |r| {
            (r.exact && r.value == CtValue::Rational(want.clone()), format!("{} vs {want}", r.value))
        }));
    }
    for u in [1i64, 3] {
        let p = morris_params(3, 1, 1, 0).with_u(int(u)).with_order(400);
        let r = ct(KernelFamily::ComplexMorris, &p, Mode::Rational);
        checks.push(Check::from_result(format!("u={u} vanishes"), r, |r| {
            let v = r.value.to_f64().unwrap_or(f64::NAN).abs();
            (v <= 1e-6, format!("|CT| = {v:e}"))
        }));
    }
    (checks, reports)
}

fn complex_g2(s: &Settings) -> Block {
    let mut checks = Vec::new();
    for (u, v) in [(rat(1, 2), rat(1, 3)), (rat(1, 4), rat(1, 4))] {
        let p = KernelParams::default().with_u(u.clone()).with_v(v.clone());
        let r = g2_b_sum(&u, &v, 8000, s.prec)
            .and_then(|b| Ok((b, rhs_complex(KernelFamily::G2Complex, &p, s.prec)?)));
        checks.push(Check::from_result(format!("b-sum u={u} v={v}"), r, |(b, rhs)| {
            let err = b.value.sub_ref(&rhs.numeric).abs().to_f64();
            (err < 1e-8, format!("|diff| = {err:e}, tail {:e}", b.tail))
        }));
    }
    let mut cases = Vec::new();
    for v in grid(&[3, 3]) {
        let p = KernelParams::default().with_u(int(2 * v[0] as i64)).with_v(int(2 * v[1] as i64)).with_order(20);
        cases.push((KernelFamily::G2Complex, p));
    }
    let (vchecks, reports) = verify_all(cases, s);
    checks.extend(vchecks);
    for r in &reports {
        let (k, m) = (r.params.u.clone().unwrap_or_default() / int(2), r.params.v.clone().unwrap_or_default() / int(2));
        let (k, m) = (k.to_integer().try_into().unwrap_or(0u32), m.to_integer().try_into().unwrap_or(0u32));
        let sign = if (k + m) % 2 == 1 { int(-1) } else { int(1) };
        let want = sign * g2_hz(k, m);
        checks.push(Check::new(format!("hz at (2k,2m)=({},{})", 2 * k, 2 * m), r.lhs.exact.as_ref() == Some(&want), want.to_string()));
    }
    (checks, reports)
}

fn d4() -> Vec<Check> {
    let start = Instant::now();
    let mut checks = Vec::new();
    for (u, want) in [(1u32, int(0)), (2, int(192)), (3, int(0))] {
        checks.push(Check::from_result(format!("u={u}"), d4_multisum(u), |v| (*v == want, format!("{v}"))));
    }
    let mac = macdonald_equal(&[2, 4, 4, 6], 1);
    checks.push(Check::new("Macdonald D4 product", mac == int(192), mac.to_string()));
    let ms = start.elapsed().as_millis();
    checks.push(Check::new("runtime < 2 min", ms < 120_000, format!("{ms} ms")));
    checks
}

fn structure() -> Block {
    let mut fr_cases = Vec::new();
    for k in 0..=1 {
        for a in 0..=2 {
            for b in 0..=1 {
                fr_cases.push((a, b, k));
            }
        }
    }
    let mut checks: Vec<Check> = fr_cases
        .par_iter()
        .map(|&(a, b, k)| {
            Check::from_result(format!("f_r n=3 a={a} b={b} k={k}"), fr_sequence(3, a, b, k), |r| {
                (r.passed(), format!("f = {:?}", r.values.iter().map(ToString::to_string).collect::<Vec<_>>()))
            })
        })
        .collect();
    let matching = [(3usize, 0u32, 0u32, 0u32), (3, 1, 1, 1), (3, 2, 0, 1), (5, 0, 0, 0), (5, 1, 0, 0)];
    let mut reports = Vec::new();
    for r in matching.par_iter().map(|&(n, a, b, k)| (n, matching_sum_check(n, a, b, k))).collect::<Vec<_>>() {
        match r {
            (_, Ok(r)) => {
                checks.push(Check::new("matching sum", r.passed(), r.to_string()));
                reports.push(r);
            }
            (n, Err(e)) => checks.push(Check::new(format!("matching sum n={n}"), false, e.to_string())),
        }
    }
    let mut perms: Vec<(usize, u32, Vec<usize>)> = Vec::new();
    for w in permutations(3) {
        perms.push((3, 1, w));
    }
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..6 {
        let mut w: Vec<usize> = (1..=5).collect();
        w.shuffle(&mut rng);
        perms.push((5, 0, w));
    }
    checks.extend(perms.par_iter().map(|(n, k, w)| {
        Check::from_result(format!("sign law n={n} w={w:?}"), sign_permutation_check(*n, *k, w), |&ok| (ok, String::new()))
    }).collect::<Vec<_>>());
    (checks, reports)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

fn pn_fit(s: &Settings) -> Vec<Check> {
    let mut checks = Vec::new();
    let r = fit_pn(PnFamily::A, 5, &[rat(1, 2), rat(1, 4)], 24, s.prec, false);
    checks.push(Check::from_result("n=5 fit at window 24", r, |f| {
        let d = f.distance.unwrap_or(f64::INFINITY);
        (d <= 1e-3, format!("fitted {:?}, target {:?}, distance {d:e}", f.fitted, f.known))
    }));
    checks.push(Check::from_result("P5(1) = 1", pn_at_one(5), |v| (v.is_one(), v.to_string())));
    checks.push(Check::from_result("P5(0) = 1/3!!", pn_at_zero(5), |v| (*v == rat(1, 3), v.to_string())));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(s.criterion().to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("17".parse::<Suite>().is_err());
        assert_eq!(Suite::Certificate.criterion(), 11);
    }

    #[test]
    fn helpers() {
        assert_eq!(grid(&[2, 3]).len(), 6);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn fast_suites_pass() {
        let s = Settings::default();
        for suite in [Suite::Signatures, Suite::Pfaffian, Suite::Certificate] {
            let o = run_suite(suite, &s);
            assert!(o.passed(), "{}: {:?}", o.summary(), o.failures().collect::<Vec<_>>());
        }
    }
}
