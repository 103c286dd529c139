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

// Multi-controlled X building blocks.
//
// The append_* functions write into an existing circuit and are what the
// decomposers use; the value-returning overloads build a circuit just wide
// enough for the qubits involved.

#pragma once

#include "mcsu2/circuit.hpp"

namespace mcsu2 {

enum class McxMode {
  Full,
  /// Only the half that flips the target; the caller mirrors it elsewhere.
  ActionOnly,
  /// Only the half that restores the dirty ancillas.
  ResetOnly,
};

enum class ApproxPolicy {
  ExactToffolisOnly,
  /// Approximate Toffolis only where their phases cancel; the result is an
  /// exact MCX.
  ApproxWhereCancelled,
  /// Every Toffoli approximate. The result is MCX up to a diagonal on the
  /// controls and ancillas, so it is only sound in mirrored positions.
  ApproxEverywhereAllowed,
};

enum class Orientation { Forward, Reverse };

struct McxRequest {
  QubitList controls;
  QubitId target;
  QubitList dirty_ancillas;
  McxMode mode = McxMode::Full;
  ApproxPolicy approx_policy = ApproxPolicy::ApproxWhereCancelled;
  /// Permit the recursive ancilla-free construction when there are fewer
  /// than k - 2 dirty ancillas. Its CNOT cost is not linear in k.
  bool allow_ancilla_free = false;
};

/// Throws DuplicateQubit if any qubit appears twice across the lists.
void require_distinct(const QubitList& a, const QubitList& b = {},
                      const QubitList& c = {});

/// Standard 6-CNOT Toffoli.
void append_toffoli(Circuit& c, QubitId c1, QubitId c2, QubitId t);
Circuit toffoli(QubitId c1, QubitId c2, QubitId t);

/// 3-CNOT Toffoli up to a sign on |c1=0, c2=1, t=0>. The netlist is its own
/// inverse, so both orientations emit the same gates.
void append_approx_toffoli(Circuit& c, QubitId c1, QubitId c2, QubitId t,
                           Orientation orientation = Orientation::Forward);
Circuit approx_toffoli(QubitId c1, QubitId c2, QubitId t,
                       Orientation orientation = Orientation::Forward);

/// k <= 2 controls: X, CNOT or Toffoli.
void append_mcx_small(Circuit& c, const QubitList& controls, QubitId target);
Circuit mcx_small(const QubitList& controls, QubitId target);

/// V-chain of Toffolis borrowing k - 2 dirty ancillas (k >= 3). Costs for
/// Full mode: 8k - 6 CNOTs with ApproxWhereCancelled, 8k - 14 with
/// ApproxEverywhereAllowed and 24k - 48 with exact Toffolis.
void append_mcx_dirty_chain(Circuit& c, const McxRequest& req);
Circuit mcx_dirty_chain(const McxRequest& req);

/// The three pieces of the one-dirty-ancilla construction. The full MCX is
/// top, bottom_action, bottom_reset, inverse(top), bottom_action,
/// bottom_reset.
struct OneDirtyParts {
  Circuit top;
  Circuit bottom_action;
  Circuit bottom_reset;
};

OneDirtyParts mcx_one_dirty_parts(std::uint32_t width,
                                  const QubitList& controls, QubitId target,
                                  QubitId dirty, ApproxPolicy policy);

/// MCX with k >= 3 controls and a single dirty ancilla; the controls are
/// split into a top group of m1 = n - m2 - 1 and a bottom group that
/// completes m2 = ceil(n / 2) with the ancilla, n = k + 2. Costs at most
/// 16n - 56 CNOTs with ApproxWhereCancelled.
void append_mcx_one_dirty(
    Circuit& c, const QubitList& controls, QubitId target, QubitId dirty,
    ApproxPolicy policy = ApproxPolicy::ApproxWhereCancelled);
Circuit mcx_one_dirty(
    const QubitList& controls, QubitId target, QubitId dirty,
    ApproxPolicy policy = ApproxPolicy::ApproxWhereCancelled);

/// Picks the cheapest exact construction for the available dirty qubits:
/// small, chain, one-dirty split, or (if allowed) ancilla-free recursion.
/// Throws NotEnoughAncillas when nothing applies.
void append_mcx(Circuit& c, const QubitList& controls, QubitId target,
                const QubitList& dirty, bool allow_ancilla_free = false);

/// Single-controlled U(2): C, CX, B, CX, A on the target plus a phase gate
/// on the control. Two CNOTs.
void append_controlled_u2(Circuit& c, QubitId control, QubitId target,
                          const Matrix2d& u);

/// Multi-controlled U(2) by recursive square roots with no ancillas beyond
/// `spare` (which may be empty). The CNOT cost grows quadratically with the
/// number of controls, so this is only reached through opt-in flags.
void append_mc_u2_no_ancilla(Circuit& c, const QubitList& controls,
                             QubitId target, const Matrix2d& u,
                             const QubitList& spare = {});

}  // namespace mcsu2
