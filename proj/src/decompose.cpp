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

#include "mcsu2/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcsu2/mcx.hpp"

namespace mcsu2 {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::RealOffDiag: return "real-off-diag";
    case Method::RealMainDiag: return "real-main-diag";
    case Method::General: return "general";
    case Method::Baseline: return "baseline";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) noexcept {
  for (Method m : {Method::Auto, Method::RealOffDiag, Method::RealMainDiag,
                   Method::General, Method::Baseline})
    if (text == to_string(m)) return m;
  return std::nullopt;
}

long real_diag_bound(std::uint32_t n) noexcept {
  return 16 * static_cast<long>(n) - 40;
}

long general_bound(std::uint32_t n) noexcept {
  return 20 * static_cast<long>(n) - (n % 2 ? 38 : 42);
}

long baseline_bound(std::uint32_t n) noexcept {
  return 28 * static_cast<long>(n) - (n % 2 ? 92 : 88);
}

namespace {

constexpr double kTol = kDefaultTolerance;

bool near(const Matrix2d& a, const Matrix2d& b) {
  return (a - b).cwiseAbs().maxCoeff() < kTol;
}

// Validated, sorted controls and the circuit to emit into.
struct Frame {
  QubitList controls;
  QubitId target;
  Circuit circuit;
};

Frame make_frame(const QubitList& controls, QubitId target,
                 std::uint32_t width) {
  require_distinct(controls, {target});
  Frame f{controls, target, {}};
  std::sort(f.controls.begin(), f.controls.end());
  std::uint32_t needed = target.index + 1;
  for (QubitId q : controls) needed = std::max(needed, q.index + 1);
  if (width == 0) width = needed;
  if (width < needed)
    throw Error(ErrorCode::QubitOutOfRange,
                "qubit " + std::to_string(needed - 1) +
                    " outside circuit of width " + std::to_string(width));
  f.circuit = Circuit(width);
  return f;
}

void require_su2(const Matrix2d& v) {
  if (!is_su2(v, kTol)) {
    const auto det = v.determinant();
    throw Error(ErrorCode::InvalidMatrix,
                "matrix is not in SU(2): |det - 1| = " +
                    std::to_string(std::abs(det - 1.0)) +
                    ", unitary = " + (is_unitary(v, kTol) ? "yes" : "no"));
  }
}

Decomposition finish(Frame&& f, Method used) {
  Decomposition d{fuse_single_qubit_gates(f.circuit), {}};
  auto& r = d.report;
  r.cnot_count = d.circuit.cnot_count();
  r.depth = depth(d.circuit);
  r.method_used = used;
  const auto n = static_cast<std::uint32_t>(f.controls.size() + 1);
  std::uint32_t from = 0;
  switch (used) {
    case Method::RealOffDiag:
    case Method::RealMainDiag:
      r.bound = real_diag_bound(n);
      r.bound_formula = "16n-40";
      from = kRealDiagBoundFrom;
      break;
    case Method::General:
      r.bound = general_bound(n);
      r.bound_formula = n % 2 ? "20n-38" : "20n-42";
      from = kGeneralBoundFrom;
      break;
    case Method::Baseline:
      r.bound = baseline_bound(n);
      r.bound_formula = n % 2 ? "28n-92" : "28n-88";
      from = kBaselineBoundFrom;
      break;
    case Method::Auto: break;
  }
  r.bound_asserted = r.bound && n >= from;
  if (r.bound_asserted && static_cast<long>(r.cnot_count) > *r.bound)
    throw std::logic_error("CNOT count " + std::to_string(r.cnot_count) +
                           " exceeds " + r.bound_formula + " = " +
                           std::to_string(*r.bound));
  return d;
}

struct Groups {
  QubitList first;
  QubitList second;
};

// First ceil(k/2) sorted controls, then the rest.
Groups split(const QubitList& sorted) {
  const std::size_t k1 = (sorted.size() + 1) / 2;
  return {QubitList(sorted.begin(), sorted.begin() + k1),
          QubitList(sorted.begin() + k1, sorted.end())};
}

// MCX on `group` borrowing `other` as dirty ancillas. Groups of at most two
// controls have no halves, so every mode emits the whole gate.
void append_group_mcx(Circuit& c, const QubitList& group,
                      const QubitList& other, QubitId t,
                      McxMode mode = McxMode::Full) {
  if (group.size() <= 2) {
    append_mcx_small(c, group, t);
    return;
  }
  append_mcx_dirty_chain(
      c, {group, t, other, mode, ApproxPolicy::ApproxWhereCancelled});
}

// X_1 A X_2 A^dagger X_1 A X_2 A^dagger, which realizes
// (A^dagger X A X)^2 on the target when every control is set.
void append_offdiag_scheme(Circuit& c, const QubitList& sorted, QubitId t,
                           const Matrix2d& a) {
  const auto g = split(sorted);
  const Matrix2d a_dg = a.adjoint();
  for (int rep = 0; rep < 2; ++rep) {
    append_group_mcx(c, g.first, g.second, t);
    c.apply(t, a, "a");
    append_group_mcx(c, g.second, g.first, t);
    c.apply(t, a_dg, "a_dg");
  }
}

// Controlled V for V with real off-diagonal. `a` overrides the solver for
// the k >= 2 scheme.
void append_offdiag(Circuit& c, const QubitList& sorted, QubitId t,
                    const Matrix2d& v, const std::optional<Matrix2d>& a) {
  if (sorted.empty()) {
    c.apply(t, v, "v");
  } else if (sorted.size() == 1) {
    const Matrix2d b = solve_b_half(real_off_diag_form(v));
    c.cx(sorted[0], t).apply(t, b, "b").cx(sorted[0], t);
    c.apply(t, b.adjoint(), "b_dg");
  } else {
    append_offdiag_scheme(c, sorted, t,
                          a ? *a : solve_a_gate(real_off_diag_form(v)));
  }
}

void append_abc_controlled(Circuit& c, QubitId control, QubitId t,
                           const Matrix2d& w) {
  const auto f = abc_decompose(w);
  c.apply(t, f.c, "c").cx(control, t);
  c.apply(t, f.b, "b").cx(control, t);
  c.apply(t, f.a, "a");
}

Decomposition offdiag_impl(const QubitList& controls, QubitId target,
                           const Matrix2d& v, std::uint32_t width,
                           const std::optional<Matrix2d>& a) {
  Frame f = make_frame(controls, target, width);
  if (!near(v, Matrix2d::Identity()))
    append_offdiag(f.circuit, f.controls, f.target, v, a);
  return finish(std::move(f), Method::RealOffDiag);
}

Decomposition maindiag_impl(const QubitList& controls, QubitId target,
                            const Matrix2d& v, std::uint32_t width,
                            const std::optional<Matrix2d>& a) {
  Frame f = make_frame(controls, target, width);
  if (!near(v, Matrix2d::Identity())) {
    const Matrix2d h = gates::hadamard();
    f.circuit.h(f.target);
    append_offdiag(f.circuit, f.controls, f.target, h * v * h, a);
    f.circuit.h(f.target);
  }
  return finish(std::move(f), Method::RealMainDiag);
}

}  // namespace

Decomposition mc_su2_real_off_diag(const QubitList& controls, QubitId target,
                                   const RealOffDiagForm<double>& v,
                                   std::uint32_t width) {
  if (!v.is_valid(kTol))
    throw Error(ErrorCode::InvalidMatrix,
                "real-off-diagonal form violates |z|^2 + x^2 = 1");
  return offdiag_impl(controls, target, v.matrix(), width, std::nullopt);
}

Decomposition mc_su2_real_main_diag(const QubitList& controls, QubitId target,
                                    const Matrix2d& v, std::uint32_t width) {
  require_su2(v);
  const auto cls = classify_diagonal(v, kTol);
  if (cls != DiagonalClass::RealMainDiag && cls != DiagonalClass::Both)
    throw Error(ErrorCode::NotRealMainDiag,
                "main diagonal has an imaginary part");
  return maindiag_impl(controls, target, v, width, std::nullopt);
}

Decomposition mc_rx(const QubitList& controls, QubitId target, double theta,
                    std::uint32_t width) {
  // H Rx(theta) H = Rz(theta).
  return maindiag_impl(controls, target, gates::rx(theta), width,
                       gates::rz(-theta / 4));
}

Decomposition mc_ry(const QubitList& controls, QubitId target, double theta,
                    std::uint32_t width) {
  return offdiag_impl(controls, target, gates::ry(theta), width,
                      gates::ry(-theta / 4));
}

Decomposition mc_rz(const QubitList& controls, QubitId target, double theta,
                    std::uint32_t width) {
  return offdiag_impl(controls, target, gates::rz(theta), width,
                      gates::rz(-theta / 4));
}

Decomposition mc_su2_general(const QubitList& controls, QubitId target,
                             const Matrix2d& v, std::uint32_t width) {
  require_su2(v);
  if (near(v, -Matrix2d::Identity()))
    return offdiag_impl(controls, target, v, width, std::nullopt);

  Frame f = make_frame(controls, target, width);
  Circuit& c = f.circuit;
  const QubitId t = f.target;
  const std::size_t k = f.controls.size();
  if (near(v, Matrix2d::Identity())) {
  } else if (k == 0) {
    c.apply(t, v, "v");
  } else if (k == 1) {
    append_abc_controlled(c, f.controls[0], t, v);
  } else {
    const auto eig = eigendecompose(v, kTol);
    const Matrix2d a = solve_a_gate(
        RealOffDiagForm<double>{std::polar(1.0, -eig.d_phase), 0.0});
    const Matrix2d h = gates::hadamard();
    const Matrix2d b = solve_b_half(real_off_diag_form(h * eig.q * h));
    // Q = H B^dagger X B X H with H X = X H-tilde folded into the B's.
    const Matrix2d c1 = b * gates::h_tilde();
    const Matrix2d c2 = h * b.adjoint();
    const auto g = split(f.controls);

    // Q^dagger. Its trailing X_1 cancels the leading X_1 of D, and the
    // reset halves of the two X_2 around C_1^dagger A cancel each other.
    c.apply(t, c2.adjoint(), "c2_dg");
    append_group_mcx(c, g.second, g.first, t, McxMode::ActionOnly);
    c.apply(t, c1.adjoint(), "c1_dg");
    // D without its first X_1.
    c.apply(t, a, "a");
    if (g.second.size() <= 2) {
      append_group_mcx(c, g.second, g.first, t);
    } else {
      Circuit action(c.width());
      append_group_mcx(action, g.second, g.first, t, McxMode::ActionOnly);
      c.append(inverse(action));
    }
    c.apply(t, a.adjoint(), "a_dg");
    append_group_mcx(c, g.first, g.second, t);
    c.apply(t, a, "a");
    append_group_mcx(c, g.second, g.first, t);
    c.apply(t, a.adjoint(), "a_dg");
    // Q.
    append_group_mcx(c, g.first, g.second, t);
    c.apply(t, c1, "c1");
    append_group_mcx(c, g.second, g.first, t);
    c.apply(t, c2, "c2");
  }
  return finish(std::move(f), Method::General);
}

Decomposition mc_su2_baseline(const QubitList& controls, QubitId target,
                              const Matrix2d& w, std::uint32_t width) {
  require_su2(w);
  Frame f = make_frame(controls, target, width);
  Circuit& c = f.circuit;
  const QubitId t = f.target;
  const std::size_t k = f.controls.size();
  if (near(w, Matrix2d::Identity())) {
  } else if (k == 0) {
    c.apply(t, w, "w");
  } else if (k == 1) {
    append_abc_controlled(c, f.controls[0], t, w);
  } else {
    // c_k conditions A, B, C; the other controls drive two MCX that borrow
    // c_k as their dirty qubit.
    const auto abc = abc_decompose(w);
    const QubitId last = f.controls.back();
    const QubitList rest(f.controls.begin(), f.controls.end() - 1);
    const QubitList borrow{last};

    append_abc_controlled(c, last, t, abc.c);
    if (rest.size() <= 3) {
      append_group_mcx(c, rest, borrow, t);
      append_abc_controlled(c, last, t, abc.b);
      append_group_mcx(c, rest, borrow, t);
    } else {
      // The bottom reset block commutes with the controlled B, so the
      // copies closing the first MCX and opening the second cancel.
      const auto p = mcx_one_dirty_parts(c.width(), rest, t, last,
                                         ApproxPolicy::ApproxWhereCancelled);
      const Circuit top_inv = inverse(p.top);
      c.append(p.top).append(p.bottom_action).append(p.bottom_reset);
      c.append(top_inv).append(p.bottom_action);
      append_abc_controlled(c, last, t, abc.b);
      c.append(inverse(p.bottom_action)).append(p.top);
      c.append(inverse(p.bottom_reset)).append(inverse(p.bottom_action));
      c.append(top_inv);
    }
    append_abc_controlled(c, last, t, abc.a);
  }
  return finish(std::move(f), Method::Baseline);
}

Decomposition decompose(const McSu2Request& req) {
  const Matrix2d& v = req.matrix;
  switch (req.method) {
    case Method::RealOffDiag: {
      require_su2(v);
      const auto cls = classify_diagonal(v, kTol);
      if (cls != DiagonalClass::RealOffDiag && cls != DiagonalClass::Both)
        throw Error(ErrorCode::NotRealOffDiag,
                    "off-diagonal has an imaginary part");
      return offdiag_impl(req.controls, req.target, v, req.width,
                          std::nullopt);
    }
    case Method::RealMainDiag:
      return mc_su2_real_main_diag(req.controls, req.target, v, req.width);
    case Method::General:
      return mc_su2_general(req.controls, req.target, v, req.width);
    case Method::Baseline:
      return mc_su2_baseline(req.controls, req.target, v, req.width);
    case Method::Auto:
      break;
  }
  require_su2(v);
  switch (classify_diagonal(v, kTol)) {
    case DiagonalClass::RealOffDiag:
    case DiagonalClass::Both:
      return offdiag_impl(req.controls, req.target, v, req.width,
                          std::nullopt);
    case DiagonalClass::RealMainDiag:
      return maindiag_impl(req.controls, req.target, v, req.width,
                           std::nullopt);
    case DiagonalClass::Neither:
      break;
  }
  return mc_su2_general(req.controls, req.target, v, req.width);
}

}  // namespace mcsu2
