use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{int, rat, Coeff, MultiPoly, Rational};

/// Indeterminates of the certificate identity.
pub const CERT_VARS: [&str; 6] = ["u", "v", "b", "m0", "m1", "m2"];

/// A deliberate corruption of the certificate, to check that the verifier can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    None,
    FlipRSign,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub verified: bool,
    /// Numerator of `lhs - rhs` over the common denominator.
    pub difference: String,
    pub difference_terms: usize,
    /// Degree in each of `u, v, b, m0, m1, m2` of the cleared left side.
    pub degrees: Vec<u32>,
    pub total_degree: u32,
    pub denominator_factors: usize,
}

/// A rational function whose denominator is a product of polynomial factors.
#[derive(Clone, Debug)]
struct Frac {
    num: MultiPoly,
    den: Vec<MultiPoly>,
}

impl Frac {
    fn poly(p: MultiPoly) -> Self {
        Frac { num: p, den: Vec::new() }
    }

    fn over(num: MultiPoly, den: Vec<MultiPoly>) -> Self {
        let mut f = Frac { num, den: Vec::new() };
        for d in den {
            let (d, flip) = normalise(d);
            if flip {
                f.num = f.num.neg_ref();
            }
            f.den.push(d);
        }
        f
    }

    fn mul(&self, rhs: &Frac) -> Frac {
        let mut den = self.den.clone();
        den.extend(rhs.den.iter().cloned());
        Frac { num: self.num.mul_ref(&rhs.num), den }
    }

    fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let mut d = Rational::one();
        for f in &self.den {
            d *= f.eval(point);
        }
        (!d.is_zero()).then(|| self.num.eval(point) / d)
    }
}

/// Make the coefficient of the largest monomial positive; report whether it flipped.
fn normalise(p: MultiPoly) -> (MultiPoly, bool) {
    let negative = p.terms().last().is_some_and(|(_, c)| c.is_negative());
    if negative {
        (p.neg_ref(), true)
    } else {
        (p, false)
    }
}

/// Numerators of a sum of fractions over the least common multiple of their denominators.
fn clear(terms: &[Frac]) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
    let mut lcm: Vec<(MultiPoly, usize)> = Vec::new();
    for t in terms {
        let mut counts: Vec<(MultiPoly, usize)> = Vec::new();
        for d in &t.den {
            match counts.iter_mut().find(|(p, _)| p == d) {
                Some((_, c)) => *c += 1,
                None => counts.push((d.clone(), 1)),
            }
        }
        for (d, c) in counts {
            match lcm.iter_mut().find(|(p, _)| *p == d) {
                Some((_, l)) => *l = (*l).max(c),
                None => lcm.push((d, c)),
            }
        }
    }
    let nums = terms
        .iter()
        .map(|t| {
            let mut n = t.num.clone();
            for (d, l) in &lcm {
                let have = t.den.iter().filter(|x| *x == d).count();
                for _ in have..*l {
                    n = n.mul_ref(d);
                }
            }
            n
        })
        .collect();
    let factors = lcm.into_iter().flat_map(|(d, l)| std::iter::repeat_n(d, l)).collect();
    (nums, factors)
}

struct Ring {
    u: MultiPoly,
    v: MultiPoly,
    b: MultiPoly,
    m: [MultiPoly; 3],
}

impl Ring {
    fn new() -> Self {
        let g = MultiPoly::generators(&CERT_VARS);
        Ring { u: g[0].clone(), v: g[1].clone(), b: g[2].clone(), m: [g[3].clone(), g[4].clone(), g[5].clone()] }
    }

    fn c(x: i64) -> MultiPoly {
        MultiPoly::constant(int(x))
    }

    /// `r_b(m)`.
    fn r(&self, m: &[MultiPoly; 3], mutation: Mutation) -> Frac {
        let (u, v, b) = (&self.u, &self.v, &self.b);
        let [m0, m1, m2] = m.clone();
        let bb = b.clone() * b.clone();
        let first = (Self::c(2) * b.clone() + v.clone())
            * (Self::c(3) * bb.clone() + Self::c(3) * b.clone() * v.clone() + Self::c(2) * u.clone() * v.clone());
        let second = Self::c(2)
            * (m1.clone() - m2.clone())
            * (Self::c(3) * bb + Self::c(3) * b.clone() * v.clone() + v.clone() * v.clone() - u.clone() * v.clone());
        let mut num = (m0.clone() * (b.clone() + v.clone() + m2.clone() - m0.clone()) * (first + second)).scale(&rat(-1, 6));
        if mutation == Mutation::FlipRSign {
            num = num.neg_ref();
        }
        Frac::over(num, vec![b.clone() + m1 - m2.clone(), b.clone() + m2 - m0])
    }

    /// `s_b(m) = -f_{b-1}(e_1 + m) / f_{b-1}(m)`.
    fn s(&self, m: &[MultiPoly; 3]) -> Frac {
        let (u, v, b) = (&self.u, &self.v, &self.b);
        let [m0, m1, m2] = m.clone();
        let one = Self::c(1);
        let num = (Self::c(2) * u.clone() - m0.clone())
            * (b.clone() + v.clone() + m0.clone() - m1.clone())
            * (b.clone() + m2.clone() - m0.clone() - one.clone());
        let den = vec![
            one.clone() + m0.clone(),
            b.clone() + m0.clone() - m1,
            b.clone() + v.clone() + m2 - m0 - one,
        ];
        Frac::over(num, den)
    }

    /// `t_b(m) = -f_b(m) / f_{b-1}(m)`.
    fn t(&self, m: &[MultiPoly; 3]) -> Frac {
        let (v, b) = (&self.v, &self.b);
        let mut num = Self::c(1);
        let mut den = Vec::new();
        for i in 0..3 {
            let d = m[i].clone() - m[(i + 1) % 3].clone();
            num = num * (b.clone() + v.clone() + d.clone());
            den.push(b.clone() + d);
        }
        Frac::over(num, den)
    }

    /// `C^i(m)` with `C(m0, m1, m2) = (m2, m0, m1)`.
    fn rotate(m: &[MultiPoly; 3], i: usize) -> [MultiPoly; 3] {
        let mut out = m.clone();
        for _ in 0..i {
            out = [out[2].clone(), out[0].clone(), out[1].clone()];
        }
        out
    }

    fn shift(m: &[MultiPoly; 3]) -> [MultiPoly; 3] {
        [m[0].clone() + Self::c(1), m[1].clone(), m[2].clone()]
    }

    fn lhs(&self) -> Vec<Frac> {
        let (u, v, b) = (&self.u, &self.v, &self.b);
        let mut up = Self::c(1);
        let mut down = Self::c(1);
        for i in 0..3 {
            up = up * (b.clone() + Self::c(i) * u.clone());
            down = down * (b.clone() + v.clone() - Self::c(i) * u.clone());
        }
        vec![Frac::poly(down), self.t(&self.m).mul(&Frac::poly(up.neg_ref()))]
    }

    fn rhs(&self, mutation: Mutation) -> Vec<Frac> {
        let mut out = Vec::new();
        for i in 0..3 {
            let ci = Self::rotate(&self.m, i);
            out.push(self.r(&Self::shift(&ci), mutation).mul(&self.s(&ci)));
            out.push(self.r(&ci, mutation));
        }
        out
    }
}

/// Check the creative-telescoping rational function identity for `F_b`
/// as a polynomial identity in `u, v, b, m0, m1, m2`.
pub fn verify_certificate_with(mutation: Mutation) -> CertificateReport {
    let ring = Ring::new();
    let lhs = ring.lhs();
    let rhs = ring.rhs(mutation);
    let n_lhs = lhs.len();
    let all: Vec<Frac> = lhs.into_iter().chain(rhs).collect();
    let (nums, factors) = clear(&all);
    let sum = |xs: &[MultiPoly]| xs.iter().fold(MultiPoly::zero(), |acc, x| acc + x.clone());
    let left = sum(&nums[..n_lhs]);
    let diff = left.clone() - sum(&nums[n_lhs..]);
    CertificateReport {
        verified: diff.is_zero(),
        difference: diff.to_string(),
        difference_terms: diff.len(),
        degrees: left.degrees(),
        total_degree: left.total_degree().unwrap_or(0),
        denominator_factors: factors.len(),
    }
}

pub fn verify_certificate() -> CertificateReport {
    verify_certificate_with(Mutation::None)
}

/// Both sides of the identity at a point of `(u, v, b, m0, m1, m2)`, or `None`
/// when one of the printed denominators vanishes there.
pub fn certificate_sides_at(point: &[Rational; 6]) -> Option<(Rational, Rational)> {
    let ring = Ring::new();
    let total = |fs: Vec<Frac>| fs.iter().map(|f| f.eval(point)).sum::<Option<Rational>>();
    Some((total(ring.lhs())?, total(ring.rhs(Mutation::None))?))
}

/// Both sides after multiplying through by the common denominator; defined everywhere.
pub fn certificate_cleared_at(point: &[Rational; 6]) -> (Rational, Rational) {
    let ring = Ring::new();
    let lhs = ring.lhs();
    let n_lhs = lhs.len();
    let all: Vec<Frac> = lhs.into_iter().chain(ring.rhs(Mutation::None)).collect();
    let (nums, _) = clear(&all);
    let at = |xs: &[MultiPoly]| xs.iter().map(|x| x.eval(point)).sum::<Rational>();
    (at(&nums[..n_lhs]), at(&nums[n_lhs..]))
}
