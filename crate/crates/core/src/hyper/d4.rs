use crate::arith::{binomial, Rational};
use crate::error::{Error, Result};

pub const D4_MAX_U: u32 = 3;

/// The D4 multisum `Σ ∏_{i<j} (-1)^{k_ij} binom(u, k_ij) binom(u, m_ij)` over
/// the twelve indices subject to the four linear constraints
///
/// ```text
/// k12 - k13 - k14 + m12 + m13 - m14 = 0
/// k12 - k23 + k24 - m12 + m23 - m24 = 0
/// k13 - k23 + k34 + m13 - m23 - m34 = 0
/// k14 + k24 - k34 - m14 + m24 - m34 = 0
/// ```
///
/// Eight indices run free; the constraints then fix `m14`, `m23`, `m34`, `k34`.
pub fn d4_multisum(u: u32) -> Result<Rational> {
    if u > D4_MAX_U {
        return Err(Error::Guard(format!("d4 multisum limited to u <= {D4_MAX_U}, got {u}")));
    }
    let ui = u as i64;
    let c: Vec<i64> = (0..=ui).map(|j| binomial(ui, j).try_into().expect("small binomial")).collect();
    let w = |x: i64| if (0..=ui).contains(&x) { c[x as usize] } else { 0 };
    let sw = |x: i64| if x % 2 == 1 { -w(x) } else { w(x) };
    let range = 0..=ui;
    let mut total: i64 = 0;
    for k12 in range.clone() {
        for k13 in range.clone() {
            for k14 in range.clone() {
                for m12 in range.clone() {
                    for m13 in range.clone() {
                        let m14 = k12 - k13 - k14 + m12 + m13;
                        let head = sw(k12) * sw(k13) * sw(k14) * w(m12) * w(m13) * w(m14);
                        if head == 0 {
                            continue;
                        }
                        for k23 in range.clone() {
                            for k24 in range.clone() {
                                for m24 in range.clone() {
                                    let m23 = -k12 + k23 - k24 + m12 + m24;
                                    let twice = k13 - k23 + k14 + k24 - m14 + m24 + m13 - m23;
                                    if twice % 2 != 0 {
                                        continue;
                                    }
                                    let m34 = twice / 2;
                                    let k34 = k14 + k24 - m14 + m24 - m34;
                                    total += head * sw(k23) * sw(k24) * w(m24) * w(m23) * w(m34) * sw(k34);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Rational::from_integer(total.into()))
}
