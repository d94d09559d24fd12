use super::family::{KernelFamily, KernelParams};
use crate::arith::Coeff;
use crate::combin::{sigma_matrix, tau_even, tau_matrix, SignatureKind, SignatureMatrix};
use crate::error::{Error, Result};
use crate::series::{
    expand_factor, indexed_vars, vandermonde, vars, ExponentKind, ExponentVector, FactorSpec, LaurentSeries, Symbols,
    Vars,
};

/// A kernel as a list of finite (or truncated) factors and logarithms `log(1 - M)`.
///
/// Logarithm orders are chosen when the constant term is taken.
#[derive(Clone, Debug)]
pub struct Kernel<C> {
    pub vars: Vars,
    pub factors: Vec<LaurentSeries<C>>,
    pub logs: Vec<ExponentVector>,
    /// False when some formal binomial series was cut off.
    pub exact: bool,
}

impl<C: Coeff> Kernel<C> {
    /// Full product of the factors; logs must be absent.
    pub fn expand(&self) -> Result<LaurentSeries<C>> {
        if !self.logs.is_empty() {
            return Err(Error::InvalidParams("kernel has logarithms; expand them first".into()));
        }
        let mut sorted: Vec<&LaurentSeries<C>> = self.factors.iter().collect();
        sorted.sort_by_key(|f| f.len());
        let mut acc = LaurentSeries::constant(self.vars.clone(), C::one());
        for f in sorted {
            acc = acc.mul_full(f)?;
        }
        Ok(acc)
    }

    pub fn with_factor(mut self, f: LaurentSeries<C>) -> Result<Self> {
        if f.vars() != &self.vars {
            return Err(Error::VariableMismatch("extra factor over other variables".into()));
        }
        self.factors.push(f);
        Ok(self)
    }

    pub fn with_logs(mut self, logs: Vec<ExponentVector>) -> Self {
        self.logs = logs;
        self
    }
}

struct Recipe {
    vars: Vars,
    monomial: Option<ExponentVector>,
    vandermonde: bool,
    factors: Vec<(ExponentVector, ExponentKind)>,
    logs: Vec<ExponentVector>,
}

impl Recipe {
    fn new(vars: Vars) -> Self {
        Recipe { vars, monomial: None, vandermonde: false, factors: Vec::new(), logs: Vec::new() }
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn push(&mut self, base: ExponentVector, kind: ExponentKind) {
        if kind != ExponentKind::Int(0) {
            self.factors.push((base, kind));
        }
    }

    /// `(1 - x_i)^a (1 - 1/x_i)^b` for every variable.
    fn morris_edges(&mut self, a: u32, b: u32) {
        let n = self.n();
        for i in 0..n {
            self.push(ExponentVector::unit(n, i, 1), ExponentKind::Int(a));
            self.push(ExponentVector::unit(n, i, -1), ExponentKind::Int(b));
        }
    }

    /// `(1 - x_i^±)^a (1 - x_i^{±2})^b` for every variable.
    fn bc_edges(&mut self, a: u32, b: u32) {
        let n = self.n();
        for i in 0..n {
            for s in [1, -1] {
                self.push(ExponentVector::unit(n, i, s), ExponentKind::Int(a));
                self.push(ExponentVector::unit(n, i, 2 * s), ExponentKind::Int(b));
            }
        }
    }

    /// `(1 - x_i/x_j)^{e_i}` over ordered pairs `i != j`.
    fn all_ratios(&mut self, e: impl Fn(usize) -> u32) {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    self.push(ExponentVector::ratio(n, i, j), ExponentKind::Int(e(i)));
                }
            }
        }
    }

    /// `(1 - (x_i/x_j)^{tau_ij})^E` over `i < j`.
    fn signed_ratios(&mut self, tau: &SignatureMatrix, kind: &ExponentKind) {
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                let base = if tau.get(i, j) > 0 { ExponentVector::ratio(n, i, j) } else { ExponentVector::ratio(n, j, i) };
                self.push(base, kind.clone());
            }
        }
    }

    /// `(1 - (x_i x_j)^{sigma_ij})^E` over `i < j`.
    fn signed_products(&mut self, sigma: &SignatureMatrix, kind: &ExponentKind) {
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                let s = sigma.get(i, j) as i32;
                let base = ExponentVector::unit(n, i, s).add(&ExponentVector::unit(n, j, s));
                self.push(base, kind.clone());
            }
        }
    }

    /// `log(1 - x_{2i}/x_{2i-1})` for `i = 1..m`, with the Vandermonde product.
    fn paired_logs(&mut self) {
        let n = self.n();
        self.vandermonde = true;
        for i in 0..(n - 1) / 2 {
            self.logs.push(ExponentVector::ratio(n, 2 * i + 1, 2 * i));
        }
    }
}

fn g2(e: [i32; 3]) -> ExponentVector {
    ExponentVector::from(e)
}

/// Long roots of G2 in `(x, y, z)`, positive ones first.
const LONG: [[i32; 3]; 6] = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2], [-2, 1, 1], [1, -2, 1], [1, 1, -2]];
const SHORT: [[i32; 3]; 6] = [[1, -1, 0], [1, 0, -1], [0, 1, -1], [-1, 1, 0], [-1, 0, 1], [0, -1, 1]];

fn g2_all(r: &mut Recipe, k: u32, m: u32) {
    for e in LONG {
        r.push(g2(e), ExponentKind::Int(k));
    }
    for e in SHORT {
        r.push(g2(e), ExponentKind::Int(m));
    }
}

fn u_kind() -> ExponentKind {
    ExponentKind::U { shift: 0 }
}

fn v_kind() -> ExponentKind {
    ExponentKind::V { shift: 0 }
}

fn bc_sigma_tau(n: usize) -> Result<(SignatureMatrix, SignatureMatrix)> {
    if n % 4 == 1 {
        Ok((sigma_matrix(n, SignatureKind::Sigma1Mod4)?, tau_matrix(n)?))
    } else {
        Ok((sigma_matrix(n, SignatureKind::Sigma0Mod4)?, tau_even(n)?))
    }
}

fn recipe(family: KernelFamily, p: &KernelParams) -> Result<Recipe> {
    use KernelFamily::*;
    p.validate(family)?;
    let n = p.n;
    let xyz = || vars(&["x", "y", "z"]);
    let mut r = Recipe::new(if family.is_g2() { xyz() } else { indexed_vars("x", n) });
    match family {
        Dyson => {
            let a = p.a_vec()?;
            r.all_ratios(|i| a[i]);
        }
        Morris => {
            r.morris_edges(p.a0()?, p.b);
            r.all_ratios(|_| p.k);
        }
        MorrisTau => {
            r.morris_edges(p.a0()?, p.b);
            r.signed_ratios(&tau_matrix(n)?, &ExponentKind::Int(2 * p.k));
        }
        LogDyson | LogMorris => {
            if family == LogMorris {
                r.morris_edges(p.a0()?, p.b);
            }
            r.monomial = Some(ExponentVector::from(vec![-(p.half() as i32); n]));
            r.paired_logs();
            r.all_ratios(|_| p.k);
        }
        AmLog => {
            let e = 2 - (p.k as i32 + 1) * (n as i32 + 1);
            r.monomial = Some(ExponentVector::from(vec![e; n]));
            for i in 0..n {
                r.push(ExponentVector::unit(n, i, 1), ExponentKind::Int(p.a0()?));
            }
            r.paired_logs();
            r.all_ratios(|_| p.k);
        }
        ComplexMorris | ComplexDyson => {
            if family == ComplexMorris {
                r.morris_edges(p.a0()?, p.b);
            }
            r.signed_ratios(&tau_matrix(n)?, &u_kind());
        }
        G2Equal => g2_all(&mut r, p.k, p.k),
        G2Hz => g2_all(&mut r, p.k, p.m),
        G2Complex => {
            for e in &LONG[3..] {
                r.push(g2(*e), u_kind());
            }
            for e in [[1, -1, 0], [0, 1, -1], [-1, 0, 1]] {
                r.push(g2(e), v_kind());
            }
        }
        G2LogLong => {
            r.monomial = Some(g2([-1, -1, 2]));
            for e in [[2, -1, -1], [-1, 2, -1], [1, 1, -2]] {
                r.push(g2(e), ExponentKind::Int(1));
            }
            r.logs.push(g2([-1, 2, -1]));
            g2_all(&mut r, p.k, p.m);
        }
        G2LogShort => {
            r.monomial = Some(g2([-1, 0, 1]));
            for e in [[1, -1, 0], [0, 1, -1], [1, 0, -1]] {
                r.push(g2(e), ExponentKind::Int(1));
            }
            r.logs.push(g2([1, -1, 0]));
            g2_all(&mut r, p.k, p.m);
        }
        Bc => {
            r.bc_edges(p.a0()?, p.b);
            for i in 0..n {
                for j in i + 1..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let base = ExponentVector::unit(n, i, si).add(&ExponentVector::unit(n, j, sj));
                        r.push(base, ExponentKind::Int(p.k));
                    }
                }
            }
        }
        BcSigmaTau | BcComplex => {
            r.bc_edges(p.a0()?, p.b);
            let (sigma, tau) = bc_sigma_tau(n)?;
            let kind = if family == BcComplex { u_kind() } else { ExponentKind::Int(2 * p.k) };
            r.signed_products(&sigma, &kind);
            r.signed_ratios(&tau, &kind);
        }
    }
    Ok(r)
}

/// Assemble the kernel of `family` over the coefficient ring of `sym`.
///
/// Formal exponents take their values from `sym`; their binomial series are
/// cut at `p.order`.
pub fn build_kernel<C: Coeff>(family: KernelFamily, p: &KernelParams, sym: &Symbols<C>) -> Result<Kernel<C>> {
    let r = recipe(family, p)?;
    let mut factors = Vec::with_capacity(r.factors.len() + 2);
    let mut exact = true;
    if let Some(e) = r.monomial {
        factors.push(LaurentSeries::monomial(r.vars.clone(), e, sym.one.clone()));
    }
    if r.vandermonde {
        factors.push(vandermonde::<C>(r.vars.clone())?.map_coeffs(|c| c.mul_ref(&sym.one)));
    }
    for (base, kind) in r.factors {
        let mut spec = FactorSpec::new(base, kind);
        if !spec.kind.is_finite() {
            let order = p
                .order
                .ok_or_else(|| Error::MissingTruncation(format!("{family} needs a truncation order")))?;
            spec = spec.with_order(order);
        }
        let e = expand_factor(&spec, &r.vars, sym)?;
        exact &= e.exact;
        factors.push(e.series);
    }
    if factors.is_empty() {
        factors.push(LaurentSeries::constant(r.vars.clone(), sym.one.clone()));
    }
    Ok(Kernel { vars: r.vars, factors, logs: r.logs, exact })
}

/// `e_r(x_1, ..., x_n)`.
pub fn elementary_symmetric<C: Coeff>(vars: &Vars, r: usize, one: &C) -> Result<LaurentSeries<C>> {
    let n = vars.len();
    if r > n {
        return Err(Error::InvalidParams(format!("e_{r} in {n} variables")));
    }
    let mut terms = Vec::new();
    let mut subset: Vec<usize> = (0..r).collect();
    loop {
        let mut e = ExponentVector::zeros(n);
        for &i in &subset {
            e.set(i, 1);
        }
        terms.push((e, one.clone()));
        // next r-subset in lexicographic order
        let Some(pos) = (0..r).rev().find(|&t| subset[t] < n - r + t) else { break };
        subset[pos] += 1;
        for t in pos + 1..r {
            subset[t] = subset[t - 1] + 1;
        }
    }
    LaurentSeries::from_terms(vars.clone(), terms)
}
