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

// Lowering of k-controlled SU(2) gates to CNOT + single-qubit netlists.
//
// n = k + 1 counts the controls and the target. Every decomposer works on
// the qubits it is given and borrows the other controls as dirty ancillas,
// so no extra qubits are required.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mcsu2/circuit.hpp"

namespace mcsu2 {

enum class Method {
  Auto,
  /// V = (z*, x; -x, z): X_{k1} A X_{k2} A^dagger, twice.
  RealOffDiag,
  /// Real main diagonal; the off-diagonal scheme conjugated by H.
  RealMainDiag,
  /// Any SU(2) through V = Q D Q^dagger.
  General,
  /// A X B X C with two MCX on k - 1 controls.
  Baseline,
};

std::string_view to_string(Method m) noexcept;

/// Parses auto, real-off-diag, real-main-diag, general, baseline.
std::optional<Method> parse_method(std::string_view text) noexcept;

struct DecompositionReport {
  std::size_t cnot_count{0};
  std::size_t depth{0};
  /// Closed-form CNOT bound of the method at this n, when it has one.
  std::optional<long> bound;
  /// True when n is in the range where the bound is guaranteed; the
  /// decomposers check cnot_count <= bound in that case.
  bool bound_asserted{false};
  std::string bound_formula;
  Method method_used{Method::Auto};
};

struct Decomposition {
  Circuit circuit;
  DecompositionReport report;
};

struct McSu2Request {
  QubitList controls;
  QubitId target;
  Matrix2d matrix = Matrix2d::Identity();
  Method method = Method::Auto;
  /// Circuit width; 0 means one past the largest qubit index.
  std::uint32_t width = 0;
};

/// 16n - 40.
long real_diag_bound(std::uint32_t n) noexcept;
/// 20n - 38 for odd n, 20n - 42 for even n.
long general_bound(std::uint32_t n) noexcept;
/// 28n - 88 for even n, 28n - 92 for odd n.
long baseline_bound(std::uint32_t n) noexcept;

/// Smallest n at which each bound is asserted.
inline constexpr std::uint32_t kRealDiagBoundFrom = 6;
inline constexpr std::uint32_t kGeneralBoundFrom = 7;
inline constexpr std::uint32_t kBaselineBoundFrom = 8;

Decomposition mc_su2_real_off_diag(const QubitList& controls, QubitId target,
                                   const RealOffDiagForm<double>& v,
                                   std::uint32_t width = 0);

/// Throws NotRealMainDiag unless Im v00 and Im v11 vanish.
Decomposition mc_su2_real_main_diag(const QubitList& controls, QubitId target,
                                    const Matrix2d& v,
                                    std::uint32_t width = 0);

Decomposition mc_rx(const QubitList& controls, QubitId target, double theta,
                    std::uint32_t width = 0);
Decomposition mc_ry(const QubitList& controls, QubitId target, double theta,
                    std::uint32_t width = 0);
Decomposition mc_rz(const QubitList& controls, QubitId target, double theta,
                    std::uint32_t width = 0);

Decomposition mc_su2_general(const QubitList& controls, QubitId target,
                             const Matrix2d& v, std::uint32_t width = 0);

Decomposition mc_su2_baseline(const QubitList& controls, QubitId target,
                              const Matrix2d& w, std::uint32_t width = 0);

/// Dispatches on req.method; Auto picks RealOffDiag for matrices with a real
/// off-diagonal (including real matrices), RealMainDiag for a real main
/// diagonal and General otherwise.
Decomposition decompose(const McSu2Request& req);

}  // namespace mcsu2
