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

//! Numerical tolerances used across the crate and its test suites.

/// Norm preservation after any sequence of gate applications.
pub const NORM: f64 = 1e-10;

/// Unitarity check for user-supplied 2x2 gate matrices.
pub const UNITARY: f64 = 1e-12;

/// Entrywise comparison of dense circuit matrices against closed forms.
pub const MATRIX: f64 = 1e-12;

/// Agreement between a simulated control-register distribution and the
/// closed-form phase-estimation model.
pub const ANALYTIC_VS_SIM: f64 = 1e-9;

/// Distribution normalization checks.
pub const PROB_SUM: f64 = 1e-10;

/// Detection of an integer phase-mode number before evaluating the
/// amplitude quotient, which degenerates to 0/0 at integers.
pub const INT_PHASE: f64 = 1e-12;
