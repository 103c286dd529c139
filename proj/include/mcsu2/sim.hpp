// Copyright 2026 The mcsu2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force simulation used as the correctness oracle.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "mcsu2/circuit.hpp"

namespace mcsu2 {

using DenseUnitary = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr std::uint32_t kMaxDenseWidth = 12;
inline constexpr std::uint32_t kMaxStateWidth = 20;

/// Applies every gate of `c`, in order, to each column of `columns` (rows
/// indexed by computational basis, qubit 0 least significant).
void apply_in_place(const Circuit& c, Eigen::Ref<Eigen::MatrixXcd> columns);

/// The 2^n x 2^n unitary of `c`. Throws TooWide above `max_width`.
DenseUnitary circuit_unitary(const Circuit& c,
                             std::uint32_t max_width = kMaxDenseWidth);

/// Gate-by-gate application to a state. Throws DimMismatch or TooWide.
StateVector apply(const Circuit& c, const StateVector& s,
                  std::uint32_t max_width = kMaxStateWidth);

StateVector basis_state(std::uint32_t width, std::uint64_t index);

/// Identity except for `v` acting on `target` when every control is 1.
DenseUnitary ideal_mc_unitary(std::uint32_t width, const QubitList& controls,
                              QubitId target, const Matrix2d& v);

struct Equivalence {
  bool equivalent{false};
  double max_error{0};
  /// Unit scalar with u ~ phase * w.
  std::complex<double> phase{1, 0};
};

/// Compares u and w up to a global phase, taken from the ratio at the
/// largest-magnitude entry of w. Throws DimMismatch.
Equivalence equiv_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& w,
                        double tol = 1e-9);

}  // namespace mcsu2
