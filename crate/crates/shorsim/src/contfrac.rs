// Copyright 2026 The shorsim Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact continued fractions, convergents, and period extraction.
//!
//! A measured control index `ℓ` on `m` qubits is the exact rational
//! phase `ℓ/2^m`. Expanding it as a continued fraction and walking the
//! convergents `s/r` from the smallest denominator upward recovers the
//! period `r` whenever `|s/r − ℓ/2^m| ≤ 1/(2r²)` and the candidate
//! passes the three period conditions: `r` even (or the base a perfect
//! square), `a^{r/2} ≢ ±1`, and `a^r ≡ 1 (mod N)`.
//!
//! All arithmetic in this module is exact; no floating point enters
//! period extraction.

use serde::Serialize;

use crate::error::Error;
use crate::modexp::{gcd, mod_exp_u64};
use crate::Result;

/// Non-negative fraction kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(num, den).max(1);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Finite continued fraction `[a₀; a₁, …, a_R]`.
///
/// Expansions are canonical: the last coefficient is greater than 1
/// unless the whole expansion is the single coefficient `a₀`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuedFraction {
    coefficients: Vec<u64>,
}

impl ContinuedFraction {
    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Evaluates the nested fraction back to a rational, exactly.
    pub fn reconstruct(&self) -> Rational {
        let mut num = 1u64;
        let mut den = 0u64;
        for &a in self.coefficients.iter().rev() {
            // x → a + 1/x, tracked as num/den
            let new_num = a * num + den;
            den = num;
            num = new_num;
        }
        Rational::new(num, den).expect("reconstruction cannot produce a zero denominator")
    }
}

/// Euclidean continued-fraction expansion of a rational.
pub fn expand(x: Rational) -> ContinuedFraction {
    let mut coefficients = Vec::new();
    let mut num = x.numerator();
    let mut den = x.denominator();
    loop {
        coefficients.push(num / den);
        let rem = num % den;
        if rem == 0 {
            break;
        }
        num = den;
        den = rem;
    }
    ContinuedFraction { coefficients }
}

/// One convergent `p/q` of a continued fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Convergent {
    pub p: u64,
    pub q: u64,
    pub index: usize,
}

/// The full convergent sequence via the standard recurrence
/// `p_n = a_n p_{n−1} + p_{n−2}` (and likewise for `q`).
pub fn convergents(cf: &ContinuedFraction) -> Vec<Convergent> {
    let mut out = Vec::with_capacity(cf.coefficients.len());
    let (mut p_prev2, mut p_prev) = (0u128, 1u128);
    let (mut q_prev2, mut q_prev) = (1u128, 0u128);
    for (index, &a) in cf.coefficients.iter().enumerate() {
        let p = a as u128 * p_prev + p_prev2;
        let q = a as u128 * q_prev + q_prev2;
        out.push(Convergent {
            p: p as u64,
            q: q as u64,
            index,
        });
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
    }
    out
}

/// Verdict for one candidate period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum PeriodCheck {
    /// Both gcds are proper factors of the modulus.
    Factors { f1: u64, f2: u64 },
    /// `r` odd and the base is not a perfect square.
    OddPeriod,
    /// `a^{r/2} ≡ ±1 (mod N)`: only trivial roots of unity.
    TrivialRoot,
    /// `a^r ≢ 1 (mod N)`: not a period at all.
    NotPeriod,
}

impl PeriodCheck {
    pub fn factors(&self) -> Option<(u64, u64)> {
        match self {
            PeriodCheck::Factors { f1, f2 } => Some((*f1, *f2)),
            _ => None,
        }
    }
}

fn integer_sqrt(n: u64) -> Option<u64> {
    let c = (n as f64).sqrt() as u64;
    (c.saturating_sub(1)..=c + 1).find(|&cand| cand as u128 * cand as u128 == n as u128)
}

/// Tests a candidate period `r` for base `a` modulo `n`.
///
/// An odd `r` is admitted when `a = c²` is a perfect square, in which
/// case `b = c^r` plays the role of `a^{r/2}`.
pub fn check_period(a: u64, n: u64, r: u64) -> PeriodCheck {
    debug_assert!(r >= 1);
    let root = if r.is_multiple_of(2) {
        mod_exp_u64(a, r / 2, n)
    } else {
        match integer_sqrt(a) {
            Some(c) => mod_exp_u64(c, r, n),
            None => return PeriodCheck::OddPeriod,
        }
    };
    if mod_exp_u64(a, r, n) != 1 {
        return PeriodCheck::NotPeriod;
    }
    if root == 1 || root == n - 1 {
        return PeriodCheck::TrivialRoot;
    }
    let (f1, f2) = (gcd(root - 1, n), gcd(root + 1, n));
    // a proper square root of unity always yields proper factors
    debug_assert!(f1 > 1 && f1 < n && f2 > 1 && f2 < n);
    PeriodCheck::Factors { f1, f2 }
}

/// Factors from a proper square root of unity: `(gcd(b−1,N), gcd(b+1,N))`.
pub fn factor_from_root(b: u64, n: u64) -> Result<(u64, u64)> {
    let b = b % n;
    if (b as u128 * b as u128) % n as u128 != 1 {
        return Err(Error::TrivialRoot {
            value: b,
            modulus: n,
        });
    }
    if b == 1 || b == n - 1 {
        return Err(Error::TrivialRoot {
            value: b,
            modulus: n,
        });
    }
    Ok((gcd(b - 1, n), gcd(b + 1, n)))
}

/// One row of an extraction trace: a convergent and its verdict.
#[derive(Debug, Clone, Serialize)]
pub struct TraceRow {
    pub convergent: (u64, u64),
    pub r: u64,
    pub verdict: PeriodCheck,
}

/// Full record of a period extraction from one measured index.
#[derive(Debug, Clone, Serialize)]
pub struct Extraction {
    pub ell: u64,
    pub control_qubits: u32,
    pub phi: Rational,
    pub coefficients: Vec<u64>,
    pub rows: Vec<TraceRow>,
    /// Smallest denominator that passed all period conditions.
    pub period: Option<u64>,
    pub factors: Option<(u64, u64)>,
}

/// Extracts a period from the measured control index `ell` on
/// `control_qubits` qubits.
///
/// Forms the exact phase `ell/2^m`, expands it, and walks the
/// convergents from the smallest denominator upward. The `s = 0`
/// convergent carries no information and is recorded but never
/// accepted; `s = 1` convergents are tested like any other. Absence of
/// a factor-producing convergent is a normal empty result.
pub fn extract_period(ell: u64, control_qubits: u32, a: u64, n: u64) -> Result<Extraction> {
    if control_qubits == 0 || control_qubits > 62 {
        return Err(Error::QubitOutOfRange {
            index: control_qubits as usize,
            num_qubits: 62,
        });
    }
    let denom = 1u64 << control_qubits;
    if ell >= denom {
        return Err(Error::BasisIndexOutOfRange {
            index: ell as usize,
            num_qubits: control_qubits as usize,
        });
    }
    let phi = Rational::new(ell, denom)?;
    let cf = expand(phi);
    let convs = convergents(&cf);
    let mut rows = Vec::with_capacity(convs.len());
    let mut period = None;
    let mut factors = None;
    for conv in &convs {
        let verdict = check_period(a, n, conv.q);
        rows.push(TraceRow {
            convergent: (conv.p, conv.q),
            r: conv.q,
            verdict,
        });
        if period.is_none() && conv.p != 0 {
            if let Some(f) = verdict.factors() {
                period = Some(conv.q);
                factors = Some(f);
            }
        }
    }
    Ok(Extraction {
        ell,
        control_qubits,
        phi,
        coefficients: cf.coefficients().to_vec(),
        rows,
        period,
        factors,
    })
}

/// Extra control qubits needed for success probability `1 − epsilon`:
/// `⌈log₂(2 + 1/(2ε))⌉`.
pub fn epsilon_qubits(epsilon: f64) -> Result<u32> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    let threshold = 2.0 + 1.0 / (2.0 * epsilon);
    let mut k = 0u32;
    while ((1u64 << k) as f64) < threshold {
        k += 1;
    }
    Ok(k)
}
