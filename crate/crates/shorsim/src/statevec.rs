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

//! Dense state-vector representation and gate application kernels.
//!
//! A [`StateVector`] over `q` qubits stores `2^q` complex amplitudes.
//! Basis index bit `b` is the value of qubit `b`; the simulator itself is
//! agnostic about qubit-ordering conventions — the [`crate::circuit`]
//! layer decides which circuit wire ends up on which index bit.
//!
//! Controlled work-register permutations are applied by index remapping
//! rather than by materializing a dense matrix, which keeps the largest
//! runs in this crate (18 qubits) at interactive speed.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::modexp::Permutation;
use crate::tol;
use crate::Result;

/// Dense array of complex amplitudes over the `2^num_qubits` basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state `|index⟩` on `num_qubits` qubits.
    pub fn new_basis_state(num_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::BasisIndexOutOfRange { index, num_qubits });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Builds a state from raw amplitudes; the length must be a power of
    /// two and the norm must already be 1 within [`tol::NORM`].
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let num_qubits = amps.len().trailing_zeros() as usize;
        if amps.is_empty() || amps.len() != 1 << num_qubits {
            return Err(Error::BasisIndexOutOfRange {
                index: amps.len(),
                num_qubits,
            });
        }
        let state = StateVector { num_qubits, amps };
        let norm: f64 = state.norm_sqr();
        if (norm - 1.0).abs() > tol::NORM {
            return Err(Error::WeightNormalization { sum: norm });
        }
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.num_qubits {
            return Err(Error::QubitOutOfRange {
                index: q,
                num_qubits: self.num_qubits,
            });
        }
        Ok(())
    }

    /// Applies an arbitrary 2x2 unitary to `target`.
    ///
    /// The matrix is `[[u00, u01], [u10, u11]]` acting on the
    /// `(|0⟩, |1⟩)` pair of the target qubit. Rejects matrices that are
    /// not unitary within [`tol::UNITARY`].
    pub fn apply_single_qubit(&mut self, gate: [[Complex64; 2]; 2], target: usize) -> Result<()> {
        self.check_qubit(target)?;
        if !is_unitary_2x2(&gate) {
            return Err(Error::NonUnitaryGate);
        }
        self.single_qubit_kernel(gate, target);
        Ok(())
    }

    /// Same pair-update kernel without the unitarity check, for the
    /// fixed gates the circuit layer already knows are unitary.
    pub(crate) fn single_qubit_kernel(&mut self, u: [[Complex64; 2]; 2], target: usize) {
        let step = 1usize << target;
        for base in (0..self.amps.len()).step_by(2 * step) {
            for offset in 0..step {
                let i0 = base + offset;
                let i1 = i0 | step;
                let a = self.amps[i0];
                let b = self.amps[i1];
                self.amps[i0] = u[0][0] * a + u[0][1] * b;
                self.amps[i1] = u[1][0] * a + u[1][1] * b;
            }
        }
    }

    /// Hadamard gate on `target`.
    pub fn apply_h(&mut self, target: usize) -> Result<()> {
        self.check_qubit(target)?;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let s = Complex64::new(s, 0.0);
        self.single_qubit_kernel([[s, s], [s, -s]], target);
        Ok(())
    }

    /// Pauli-X gate on `target`.
    pub fn apply_x(&mut self, target: usize) -> Result<()> {
        self.check_qubit(target)?;
        let step = 1usize << target;
        for base in (0..self.amps.len()).step_by(2 * step) {
            for offset in 0..step {
                self.amps.swap(base + offset, base + offset + step);
            }
        }
        Ok(())
    }

    /// Phase gate `P(theta)` on `target`: multiplies the `|1⟩` component
    /// by `e^{i theta}`.
    pub fn apply_phase(&mut self, theta: f64, target: usize) -> Result<()> {
        self.check_qubit(target)?;
        let phase = Complex64::from_polar(1.0, theta);
        let mask = 1usize << target;
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & mask != 0 {
                *amp *= phase;
            }
        }
        Ok(())
    }

    /// Controlled phase: multiplies amplitudes with both `control` and
    /// `target` bits set by `e^{i theta}`.
    pub fn apply_controlled_phase(
        &mut self,
        theta: f64,
        control: usize,
        target: usize,
    ) -> Result<()> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::DuplicateQubit(control));
        }
        let phase = Complex64::from_polar(1.0, theta);
        let mask = (1usize << control) | (1usize << target);
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & mask == mask {
                *amp *= phase;
            }
        }
        Ok(())
    }

    /// Exchanges qubits `q1` and `q2` in every basis index.
    pub fn apply_swap(&mut self, q1: usize, q2: usize) -> Result<()> {
        self.check_qubit(q1)?;
        self.check_qubit(q2)?;
        if q1 == q2 {
            return Err(Error::DuplicateQubit(q1));
        }
        let m1 = 1usize << q1;
        let m2 = 1usize << q2;
        for i in 0..self.amps.len() {
            // visit each crossed pair once
            if i & m1 != 0 && i & m2 == 0 {
                self.amps.swap(i, i ^ m1 ^ m2);
            }
        }
        Ok(())
    }

    /// Multi-controlled X: flips `target` on basis states whose control
    /// bits match `polarities` (`true` = control on `|1⟩`). An empty
    /// control list is a plain X.
    pub fn apply_mcx(
        &mut self,
        controls: &[usize],
        polarities: &[bool],
        target: usize,
    ) -> Result<()> {
        self.check_qubit(target)?;
        if polarities.len() != controls.len() {
            return Err(Error::CircuitMismatch(format!(
                "{} controls but {} polarities",
                controls.len(),
                polarities.len()
            )));
        }
        let mut ctrl_mask = 0usize;
        let mut want = 0usize;
        for (&c, &p) in controls.iter().zip(polarities) {
            self.check_qubit(c)?;
            if c == target || ctrl_mask & (1 << c) != 0 {
                return Err(Error::DuplicateQubit(c));
            }
            ctrl_mask |= 1 << c;
            if p {
                want |= 1 << c;
            }
        }
        let t_mask = 1usize << target;
        for i in 0..self.amps.len() {
            if i & t_mask == 0 && i & ctrl_mask == want {
                self.amps.swap(i, i | t_mask);
            }
        }
        Ok(())
    }

    /// Conditionally permutes the work register.
    ///
    /// For every basis state with the `control` bit set, the sub-index
    /// read from `work_qubits` (entry `i` supplies bit `i`, so the first
    /// listed qubit is least significant) is remapped through `perm`;
    /// control-clear components are untouched.
    pub fn apply_controlled_work_permutation(
        &mut self,
        control: usize,
        work_qubits: &[usize],
        perm: &Permutation,
    ) -> Result<()> {
        self.check_qubit(control)?;
        if perm.size() != 1usize << work_qubits.len() {
            return Err(Error::NotBijective { size: perm.size() });
        }
        let mut seen = 0usize;
        for &q in work_qubits {
            self.check_qubit(q)?;
            if q == control || seen & (1 << q) != 0 {
                return Err(Error::DuplicateQubit(q));
            }
            seen |= 1 << q;
        }
        let c_mask = 1usize << control;
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (i, &amp) in self.amps.iter().enumerate() {
            if i & c_mask == 0 {
                out[i] = amp;
                continue;
            }
            let mut w = 0usize;
            for (bit, &q) in work_qubits.iter().enumerate() {
                w |= ((i >> q) & 1) << bit;
            }
            let w2 = perm.image(w);
            let mut j = i;
            for (bit, &q) in work_qubits.iter().enumerate() {
                j = (j & !(1 << q)) | (((w2 >> bit) & 1) << q);
            }
            out[j] = amp;
        }
        self.amps = out;
        Ok(())
    }

    /// Unconditional permutation of the listed qubits' sub-index.
    pub fn apply_work_permutation(
        &mut self,
        work_qubits: &[usize],
        perm: &Permutation,
    ) -> Result<()> {
        if perm.size() != 1usize << work_qubits.len() {
            return Err(Error::NotBijective { size: perm.size() });
        }
        let mut seen = 0usize;
        for &q in work_qubits {
            self.check_qubit(q)?;
            if seen & (1 << q) != 0 {
                return Err(Error::DuplicateQubit(q));
            }
            seen |= 1 << q;
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (i, &amp) in self.amps.iter().enumerate() {
            let mut w = 0usize;
            for (bit, &q) in work_qubits.iter().enumerate() {
                w |= ((i >> q) & 1) << bit;
            }
            let w2 = perm.image(w);
            let mut j = i;
            for (bit, &q) in work_qubits.iter().enumerate() {
                j = (j & !(1 << q)) | (((w2 >> bit) & 1) << q);
            }
            out[j] = amp;
        }
        self.amps = out;
        Ok(())
    }

    /// `|amplitude|^2` for every basis index.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Probabilities of the sub-index read from `qubits` (entry `i` is
    /// bit `i`), summed over all remaining qubits.
    pub fn marginal_probabilities(&self, qubits: &[usize]) -> Result<Vec<f64>> {
        if qubits.is_empty() {
            return Err(Error::CircuitMismatch("empty qubit subset".into()));
        }
        let mut seen = 0usize;
        for &q in qubits {
            self.check_qubit(q)?;
            if seen & (1 << q) != 0 {
                return Err(Error::DuplicateQubit(q));
            }
            seen |= 1 << q;
        }
        let mut out = vec![0.0; 1 << qubits.len()];
        for (i, amp) in self.amps.iter().enumerate() {
            let mut sub = 0usize;
            for (bit, &q) in qubits.iter().enumerate() {
                sub |= ((i >> q) & 1) << bit;
            }
            out[sub] += amp.norm_sqr();
        }
        Ok(out)
    }

    /// Draws `shots` basis indices from the state's exact distribution.
    /// Identical seeds produce identical samples.
    pub fn sample(&self, shots: usize, seed: u64) -> Vec<usize> {
        sample_distribution(&self.probabilities(), shots, seed)
    }
}

/// Draws `shots` i.i.d. indices from an explicit distribution.
/// Identical seeds produce identical samples.
pub fn sample_distribution(probs: &[f64], shots: usize, seed: u64) -> Vec<usize> {
    let mut cumulative = Vec::with_capacity(probs.len());
    let mut acc = 0.0;
    for &p in probs {
        acc += p;
        cumulative.push(acc);
    }
    let total = acc;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..shots)
        .map(|_| {
            let x: f64 = rand::Rng::gen::<f64>(&mut rng) * total;
            match cumulative.binary_search_by(|c| c.partial_cmp(&x).unwrap()) {
                Ok(i) => (i + 1).min(probs.len() - 1),
                Err(i) => i.min(probs.len() - 1),
            }
        })
        .collect()
}

/// Counts occurrences per index in a sample.
pub fn sample_counts(sample: &[usize], dim: usize) -> Vec<u64> {
    let mut counts = vec![0u64; dim];
    for &s in sample {
        counts[s] += 1;
    }
    counts
}

fn is_unitary_2x2(u: &[[Complex64; 2]; 2]) -> bool {
    // U† U == I entrywise
    let mut max_dev: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let mut dot = Complex64::new(0.0, 0.0);
            for (k, row) in u.iter().enumerate() {
                dot += row[i].conj() * u[k][j];
                let _ = k;
            }
            let expect = if i == j { 1.0 } else { 0.0 };
            max_dev = max_dev.max((dot - expect).norm());
        }
    }
    max_dev <= tol::UNITARY
}
