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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mcsu2/su2.hpp"

namespace mcsu2 {

using Matrix2d = Matrix2<double>;

struct QubitId {
  std::uint32_t index{0};

  friend constexpr auto operator<=>(QubitId, QubitId) = default;
};

using QubitList = std::vector<QubitId>;

/// {first, first + 1, ..., first + count - 1}.
QubitList qubit_range(std::uint32_t first, std::uint32_t count);

QubitList qubits(std::initializer_list<std::uint32_t> indices);

/// A single-qubit unitary. The matrix is authoritative; the label is only
/// used for debugging output.
struct SingleQubitGate {
  QubitId target;
  Matrix2d matrix;
  std::string label;
};

struct CnotGate {
  QubitId control;
  QubitId target;
};

using Gate = std::variant<SingleQubitGate, CnotGate>;

bool is_cnot(const Gate& g) noexcept;

/// Gate-level netlist over `width` qubits. Gates apply in list order; qubit
/// 0 is the least-significant bit of computational-basis indices.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::uint32_t width) : width_(width) {}

  std::uint32_t width() const noexcept { return width_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  std::size_t cnot_count() const noexcept { return cnots_; }

  /// Appends a gate after validating its qubits and matrix.
  /// Throws QubitOutOfRange, InvalidGate (control == target) or
  /// InvalidMatrix (non-unitary single-qubit matrix).
  Circuit& append(Gate g);

  /// Appends every gate of `other`; widths must match.
  Circuit& append(const Circuit& other);

  Circuit& apply(QubitId q, const Matrix2d& m, std::string label = "u");
  Circuit& cx(QubitId control, QubitId target);
  Circuit& x(QubitId q);
  Circuit& h(QubitId q);
  Circuit& ry(QubitId q, double theta);
  Circuit& rz(QubitId q, double theta);

  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  std::uint32_t width_{0};
  std::vector<Gate> gates_;
  std::size_t cnots_{0};
};

/// Gates of `first` followed by gates of `second`. Throws WidthMismatch.
Circuit compose(const Circuit& first, const Circuit& second);

/// Reversed gate order with every single-qubit matrix conjugate-transposed.
Circuit inverse(const Circuit& c);

/// Copy of `c` on a wider register (same qubit indices).
Circuit widen(const Circuit& c, std::uint32_t width);

/// ASAP layer count over all gates.
std::size_t depth(const Circuit& c);

/// Number of ASAP layers that contain at least one CNOT.
std::size_t cnot_depth(const Circuit& c);

/// Multiplies runs of single-qubit gates that are adjacent on their wire
/// into one gate and drops products within `tol` of the identity. CNOTs are
/// left untouched.
Circuit fuse_single_qubit_gates(const Circuit& c, double tol = 1e-12);

/// OpenQASM 2.0 text: every single-qubit gate as u3 (global phase dropped),
/// every CNOT as cx, register `q`.
std::string to_qasm(const Circuit& c);

}  // namespace mcsu2
