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

//! Modular-exponentiation arithmetic and operator synthesis.
//!
//! The multiply operator `U[a,N] |w⟩ = |a·w mod N⟩` is a permutation of
//! the work-register basis states. Three constructions are supported,
//! selected by [`MeVersion`]:
//!
//! * `Concatenated` — the full multiply permutation composed `p` times,
//! * `PerPowerCycles` — one permutation per power built from the closed
//!   cycles of `w ↦ a^p·w mod N` seeded inside the orbit of 1,
//! * `Truncated` — only an explicitly retained subset of cycles, with
//!   every other state left fixed.
//!
//! Cycles are always recomputed from the arithmetic itself rather than
//! copied from any precomputed table.

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::statevec::StateVector;
use crate::Result;

/// Bijection on `[0, size)`, stored as the image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image table, verifying bijectivity.
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let size = map.len();
        let mut seen = vec![false; size];
        for &v in &map {
            if v >= size || seen[v] {
                return Err(Error::NotBijective { size });
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(size: usize) -> Self {
        Permutation {
            map: (0..size).collect(),
        }
    }

    /// Uniformly random permutation (Fisher–Yates); used by test oracles.
    pub fn random<R: Rng>(size: usize, rng: &mut R) -> Self {
        let mut map: Vec<usize> = (0..size).collect();
        for i in (1..size).rev() {
            let j = rng.gen_range(0..=i);
            map.swap(i, j);
        }
        Permutation { map }
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn image(&self, w: usize) -> usize {
        self.map[w]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::NotBijective { size: other.size() });
        }
        Ok(Permutation {
            map: other.map.iter().map(|&w| self.map[w]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0usize; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// Cycle decomposition; fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.map.len()];
        let mut cycles = Vec::new();
        for start in 0..self.map.len() {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.map[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.map[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

/// Construction version for a modular-exponentiation operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MeVersion {
    /// `u_ver = 0`: concatenate the full multiply permutation.
    Concatenated,
    /// `u_ver = 1`: per-power cycle permutations covering the orbit of 1.
    PerPowerCycles,
    /// `u_ver = 2`: only an explicit subset of cycles is retained.
    Truncated,
}

impl MeVersion {
    pub fn from_index(v: u8) -> Option<Self> {
        match v {
            0 => Some(MeVersion::Concatenated),
            1 => Some(MeVersion::PerPowerCycles),
            2 => Some(MeVersion::Truncated),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            MeVersion::Concatenated => 0,
            MeVersion::PerPowerCycles => 1,
            MeVersion::Truncated => 2,
        }
    }
}

/// Description of one modular-exponentiation operator `U[a,N]^p`.
///
/// Serializes to JSON with exactly the fields `a`, `N`, `p`, `version`,
/// `cycles`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeSpec {
    pub a: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub p: u64,
    pub version: MeVersion,
    pub cycles: Vec<Vec<u64>>,
}

impl MeSpec {
    /// Spec for the concatenated construction (`u_ver = 0`); the cycle
    /// list is derived, kept for inspection and serialization.
    pub fn concatenated(a: u64, n: u64, p: u64) -> Result<Self> {
        check_coprime(a, n)?;
        Ok(MeSpec {
            a,
            n,
            p,
            version: MeVersion::Concatenated,
            cycles: vec![cycle_of_one(a, n)?],
        })
    }

    /// Spec for the per-power cycle construction (`u_ver = 1`): the
    /// orbits of `1, a, a², …` under `w ↦ a^p·w` until the full cycle of
    /// 1 is covered.
    pub fn per_power_cycles(a: u64, n: u64, p: u64) -> Result<Self> {
        check_coprime(a, n)?;
        let r = order_bruteforce(a, n)?;
        let g = gcd(p % r, r).max(1);
        let seeds: Vec<u64> = (0..g).map(|j| mod_exp_u64(a, j, n)).collect();
        let cycles = power_cycles(a, n, p, &seeds)?;
        Ok(MeSpec {
            a,
            n,
            p,
            version: MeVersion::PerPowerCycles,
            cycles,
        })
    }

    /// Default truncation preset (`u_ver = 2`): retain only the orbit of
    /// 1 under `w ↦ a^p·w`, leaving every other basis state fixed.
    pub fn truncated_orbit_of_one(a: u64, n: u64, p: u64) -> Result<Self> {
        check_coprime(a, n)?;
        let cycles = power_cycles(a, n, p, &[1])?;
        Ok(MeSpec {
            a,
            n,
            p,
            version: MeVersion::Truncated,
            cycles,
        })
    }

    /// Truncated operator with caller-chosen cycles.
    pub fn truncated(a: u64, n: u64, p: u64, cycles: Vec<Vec<u64>>) -> Result<Self> {
        check_coprime(a, n)?;
        Ok(MeSpec {
            a,
            n,
            p,
            version: MeVersion::Truncated,
            cycles,
        })
    }
}

fn check_coprime(a: u64, n: u64) -> Result<()> {
    let g = gcd(a, n);
    if g != 1 {
        return Err(Error::NotCoprime { a, n, g });
    }
    Ok(())
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `a^x mod n` by square-and-multiply on machine words
/// (`u128` intermediates, so any `n < 2^64` is safe).
pub fn mod_exp_u64(a: u64, x: u64, n: u64) -> u64 {
    assert!(n >= 2, "modulus must be at least 2");
    let mut base = (a % n) as u128;
    let n128 = n as u128;
    let mut result: u128 = 1 % n128;
    let mut exp = x;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % n128;
        }
        base = base * base % n128;
        exp >>= 1;
    }
    result as u64
}

/// `a^x mod n` by square-and-multiply on arbitrary-precision integers;
/// the simulator never needs this range, the arithmetic layer supports it.
pub fn mod_exp(a: &BigUint, x: &BigUint, n: &BigUint) -> BigUint {
    assert!(*n >= BigUint::from(2u8), "modulus must be at least 2");
    let mut base = a % n;
    let mut result = BigUint::one() % n;
    let mut exp = x.clone();
    while !exp.is_zero() {
        if exp.bit(0) {
            result = &result * &base % n;
        }
        base = &base * &base % n;
        exp >>= 1;
    }
    result
}

/// Least positive `r` with `a^r ≡ 1 (mod n)`, found by linear scan.
/// This is the classical oracle the rest of the crate is tested against.
pub fn order_bruteforce(a: u64, n: u64) -> Result<u64> {
    check_coprime(a, n)?;
    let mut acc = a % n;
    let mut r = 1u64;
    while acc != 1 {
        acc = (acc as u128 * a as u128 % n as u128) as u64;
        r += 1;
    }
    Ok(r)
}

/// The full multiply permutation on an `n_qubits` work register:
/// `w ↦ a·w mod n` for `w < n`, identity for `n ≤ w < 2^n_qubits`.
pub fn full_me_permutation(a: u64, n: u64, n_qubits: usize) -> Result<Permutation> {
    check_coprime(a, n)?;
    let size = 1usize << n_qubits;
    if (size as u64) < n {
        return Err(Error::WorkRegisterTooSmall {
            n: n_qubits,
            modulus: n,
        });
    }
    let mut map = Vec::with_capacity(size);
    for w in 0..size as u64 {
        if w < n {
            map.push((w * a % n) as usize);
        } else {
            map.push(w as usize);
        }
    }
    Permutation::new(map)
}

/// Orbit of 1 under multiplication by `a` mod `n`:
/// `[1, a, a², …, a^{r−1}]`.
pub fn cycle_of_one(a: u64, n: u64) -> Result<Vec<u64>> {
    check_coprime(a, n)?;
    let mut cycle = vec![1u64];
    let mut cur = a % n;
    while cur != 1 {
        cycle.push(cur);
        cur = (cur as u128 * a as u128 % n as u128) as u64;
    }
    Ok(cycle)
}

/// Disjoint orbits of the given seeds under `w ↦ a^p·w mod n`.
pub fn power_cycles(a: u64, n: u64, p: u64, seeds: &[u64]) -> Result<Vec<Vec<u64>>> {
    check_coprime(a, n)?;
    let step = mod_exp_u64(a, p, n);
    let mut seen = std::collections::HashSet::new();
    let mut cycles = Vec::new();
    for &seed in seeds {
        if seen.contains(&seed) {
            continue;
        }
        let mut cycle = vec![seed % n];
        seen.insert(seed % n);
        let mut cur = (seed as u128 * step as u128 % n as u128) as u64;
        while cur != seed % n {
            cycle.push(cur);
            seen.insert(cur);
            cur = (cur as u128 * step as u128 % n as u128) as u64;
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Realizes an [`MeSpec`] as a permutation on `2^n_qubits` states.
pub fn build_me_operator(spec: &MeSpec, n_qubits: usize) -> Result<Permutation> {
    let size = 1usize << n_qubits;
    if (size as u64) < spec.n {
        return Err(Error::WorkRegisterTooSmall {
            n: n_qubits,
            modulus: spec.n,
        });
    }
    match spec.version {
        MeVersion::Concatenated => {
            let single = full_me_permutation(spec.a, spec.n, n_qubits)?;
            // compose p times; p is always modest at simulator scale
            let mut acc = Permutation::identity(size);
            let mut power = single;
            let mut p = spec.p;
            while p > 0 {
                if p & 1 == 1 {
                    acc = power.compose(&acc)?;
                }
                power = power.compose(&power.clone())?;
                p >>= 1;
            }
            Ok(acc)
        }
        MeVersion::PerPowerCycles | MeVersion::Truncated => {
            permutation_from_cycles(&spec.cycles, size, spec.n)
        }
    }
}

/// Permutation realizing the listed cycles, identity elsewhere.
fn permutation_from_cycles(cycles: &[Vec<u64>], size: usize, modulus: u64) -> Result<Permutation> {
    let mut map: Vec<usize> = (0..size).collect();
    let mut touched = vec![false; size];
    for cycle in cycles {
        for (i, &state) in cycle.iter().enumerate() {
            if state >= modulus || state as usize >= size {
                return Err(Error::CycleStateOutOfRange { state, modulus });
            }
            if touched[state as usize] {
                return Err(Error::OverlappingCycles { state });
            }
            touched[state as usize] = true;
            let next = cycle[(i + 1) % cycle.len()];
            map[state as usize] = next as usize;
        }
    }
    Permutation::new(map)
}

/// The phase eigenstate of the multiply operator:
/// `(1/√r) Σ_k e^{−2πi k s / r} |a^k mod n⟩` on `n_qubits` work qubits.
pub fn eigenstate(a: u64, n: u64, s: u64, n_qubits: usize) -> Result<StateVector> {
    check_coprime(a, n)?;
    if (1u64 << n_qubits) < n {
        return Err(Error::WorkRegisterTooSmall {
            n: n_qubits,
            modulus: n,
        });
    }
    let r = order_bruteforce(a, n)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
    let scale = 1.0 / (r as f64).sqrt();
    let mut state = 1u64;
    for k in 0..r {
        let angle = -2.0 * std::f64::consts::PI * (k as f64) * (s as f64) / (r as f64);
        amps[state as usize] += Complex64::from_polar(scale, angle);
        state = (state as u128 * a as u128 % n as u128) as u64;
    }
    StateVector::from_amplitudes(amps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_exp_examples() {
        assert_eq!(mod_exp_u64(8, 2, 15), 4);
        assert_eq!(mod_exp_u64(7, 0, 33), 1);
        assert_eq!(mod_exp_u64(2, 36, 247), 1);
    }

    #[test]
    fn mod_exp_big_matches_library_modpow() {
        // independent oracle for the hand-rolled ladder
        let a = BigUint::parse_bytes(
            b"2988348162058574136915891421498819466320163312926952423791023078876139",
            10,
        )
        .unwrap();
        let x = BigUint::parse_bytes(
            b"2351399303373464486466122544523690094744975233415544072992656881240319",
            10,
        )
        .unwrap();
        let n = BigUint::from(10u8).pow(40);
        assert_eq!(mod_exp(&a, &x, &n), a.modpow(&x, &n));
        assert_eq!(
            mod_exp(
                &BigUint::from(2u8),
                &BigUint::from(36u8),
                &BigUint::from(247u16)
            ),
            BigUint::one()
        );
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_bruteforce(4, 15).unwrap(), 2);
        assert_eq!(order_bruteforce(7, 33).unwrap(), 10);
        assert_eq!(order_bruteforce(5, 143).unwrap(), 20);
        assert_eq!(order_bruteforce(2, 247).unwrap(), 36);
        assert!(order_bruteforce(6, 15).is_err());
    }

    #[test]
    fn full_permutation_table_entries() {
        let u4 = full_me_permutation(4, 15, 4).unwrap();
        assert_eq!(u4.image(7), 13);
        assert_eq!(u4.image(0), 0);
        assert_eq!(u4.image(15), 15); // padding state fixed
        let u8 = full_me_permutation(8, 15, 4).unwrap();
        assert_eq!(u8.image(14), 7);
        assert_eq!(u8.image(1), 8);
        assert!(full_me_permutation(4, 35, 4).is_err());
    }

    #[test]
    fn cycle_of_one_examples() {
        assert_eq!(cycle_of_one(2, 21).unwrap(), vec![1, 2, 4, 8, 16, 11]);
        assert_eq!(cycle_of_one(4, 35).unwrap(), vec![1, 4, 16, 29, 11, 9]);
        assert_eq!(cycle_of_one(13, 21).unwrap(), vec![1, 13]);
        assert_eq!(
            cycle_of_one(7, 33).unwrap(),
            vec![1, 7, 16, 13, 25, 10, 4, 28, 31, 19]
        );
    }

    #[test]
    fn power_cycles_examples() {
        assert_eq!(
            power_cycles(2, 21, 2, &[1, 2]).unwrap(),
            vec![vec![1, 4, 16], vec![2, 8, 11]]
        );
        assert_eq!(
            power_cycles(4, 35, 4, &[1, 4]).unwrap(),
            vec![vec![1, 11, 16], vec![4, 9, 29]]
        );
        assert_eq!(
            power_cycles(5, 143, 8, &[1]).unwrap(),
            vec![vec![1, 92, 27, 53, 14]]
        );
        assert_eq!(
            power_cycles(5, 143, 16, &[1]).unwrap(),
            vec![vec![1, 27, 14, 92, 53]]
        );
    }

    #[test]
    fn power_cycles_disjoint_and_closed() {
        for &(a, n) in &[(2u64, 21u64), (4, 35), (7, 33), (5, 143), (2, 247)] {
            let r = order_bruteforce(a, n).unwrap();
            for k in 0..10u64 {
                let p = 1u64 << k;
                let g = gcd(p % r, r).max(1);
                let seeds: Vec<u64> = (0..g).map(|j| mod_exp_u64(a, j, n)).collect();
                let cycles = power_cycles(a, n, p, &seeds).unwrap();
                let step = mod_exp_u64(a, p, n);
                let mut all = std::collections::HashSet::new();
                for cycle in &cycles {
                    for (i, &w) in cycle.iter().enumerate() {
                        assert!(all.insert(w), "cycles overlap");
                        let next = cycle[(i + 1) % cycle.len()];
                        assert_eq!((w as u128 * step as u128 % n as u128) as u64, next);
                    }
                }
                assert_eq!(all.len() as u64, r, "union must cover the orbit of 1");
            }
        }
    }

    #[test]
    fn me_operator_versions() {
        // u_ver=0 with p=1 is the plain multiply permutation
        let spec = MeSpec::concatenated(2, 21, 1).unwrap();
        let op = build_me_operator(&spec, 5).unwrap();
        assert_eq!(op, full_me_permutation(2, 21, 5).unwrap());

        // u_ver=1, (2,21): U^4 sends 1 → 16
        let spec = MeSpec::per_power_cycles(2, 21, 4).unwrap();
        assert_eq!(spec.cycles, vec![vec![1, 16, 4], vec![2, 11, 8]]);
        let op = build_me_operator(&spec, 5).unwrap();
        assert_eq!(op.image(1), 16);

        // u_ver=2 for (7,33): U² retaining the orbit of 1 sends 1 → 16
        // and fixes the dropped coset
        let spec = MeSpec::truncated_orbit_of_one(7, 33, 2).unwrap();
        assert_eq!(spec.cycles, vec![vec![1, 16, 25, 4, 31]]);
        let op = build_me_operator(&spec, 6).unwrap();
        assert_eq!(op.image(1), 16);
        assert_eq!(op.image(7), 7);
        assert_eq!(op.image(13), 13);
    }

    #[test]
    fn per_power_agrees_with_iterated_full_permutation_on_cycles() {
        for &(a, n, qubits) in &[(2u64, 21u64, 5usize), (4, 35, 6), (7, 33, 6), (5, 143, 8)] {
            let full = full_me_permutation(a, n, qubits).unwrap();
            for k in 0..6u64 {
                let p = 1u64 << k;
                let spec = MeSpec::per_power_cycles(a, n, p).unwrap();
                let op = build_me_operator(&spec, qubits).unwrap();
                let mut iterated = Permutation::identity(1 << qubits);
                for _ in 0..p {
                    iterated = full.compose(&iterated).unwrap();
                }
                for cycle in &spec.cycles {
                    for &w in cycle {
                        assert_eq!(op.image(w as usize), iterated.image(w as usize));
                    }
                }
            }
        }
    }

    #[test]
    fn overlapping_cycles_rejected() {
        let spec = MeSpec::truncated(2, 21, 2, vec![vec![1, 4, 16], vec![4, 8, 11]]).unwrap();
        assert!(matches!(
            build_me_operator(&spec, 5),
            Err(Error::OverlappingCycles { state: 4 })
        ));
    }

    #[test]
    fn eigenstate_zero_phase_is_uniform_orbit() {
        // s = 0, a = 8, N = 15: (|1⟩+|8⟩+|4⟩+|2⟩)/2
        let u = eigenstate(8, 15, 0, 4).unwrap();
        for w in [1usize, 2, 4, 8] {
            assert!((u.amplitudes()[w].re - 0.5).abs() < 1e-12);
        }
        assert!((u.norm_sqr() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn eigenstate_relation_and_sum_identities() {
        for &(a, n, qubits) in &[(8u64, 15u64, 4usize), (7, 33, 6), (2, 21, 5)] {
            let r = order_bruteforce(a, n).unwrap();
            let full = full_me_permutation(a, n, qubits).unwrap();
            let work: Vec<usize> = (0..qubits).collect();

            for s in 0..r {
                let mut state = eigenstate(a, n, s, qubits).unwrap();
                let before = state.clone();
                state.apply_work_permutation(&work, &full).unwrap();
                let phase =
                    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * s as f64 / r as f64);
                for (after, orig) in state.amplitudes().iter().zip(before.amplitudes()) {
                    assert!((after - phase * orig).norm() < 1e-10);
                }
            }

            // (1/√r) Σ_s e^{2πik s/r} |u_s⟩ = |a^k mod n⟩
            for k in 0..r {
                let mut sum = vec![Complex64::new(0.0, 0.0); 1 << qubits];
                for s in 0..r {
                    let u = eigenstate(a, n, s, qubits).unwrap();
                    let phase = Complex64::from_polar(
                        1.0,
                        2.0 * std::f64::consts::PI * (k as f64) * (s as f64) / r as f64,
                    );
                    for (acc, amp) in sum.iter_mut().zip(u.amplitudes()) {
                        *acc += phase * amp / (r as f64).sqrt();
                    }
                }
                let expect = mod_exp_u64(a, k, n) as usize;
                for (i, amp) in sum.iter().enumerate() {
                    let want = if i == expect { 1.0 } else { 0.0 };
                    assert!((amp - Complex64::new(want, 0.0)).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn me_spec_json_round_trip() {
        let spec = MeSpec::per_power_cycles(2, 21, 2).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"N\":21"));
        assert!(json.contains("\"a\":2"));
        assert!(json.contains("\"p\":2"));
        assert!(json.contains("\"version\""));
        assert!(json.contains("\"cycles\""));
        let back: MeSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
    }
}
