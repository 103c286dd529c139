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

#include "mcsu2/mcx.hpp"

#include <algorithm>
#include <numbers>
#include <set>

namespace mcsu2 {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4;

std::uint32_t width_for(std::initializer_list<const QubitList*> lists) {
  std::uint32_t w = 0;
  for (const auto* l : lists)
    for (QubitId q : *l) w = std::max(w, q.index + 1);
  return w;
}

// First half of the approximate Toffoli: Ry(-pi/4), CX(outer), Ry(-pi/4).
void append_w(Circuit& c, QubitId outer, QubitId t) {
  c.ry(t, -kQuarterPi).cx(outer, t).ry(t, -kQuarterPi);
}

void append_w_inverse(Circuit& c, QubitId outer, QubitId t) {
  c.ry(t, kQuarterPi).cx(outer, t).ry(t, kQuarterPi);
}

void append_any_toffoli(Circuit& c, QubitId outer, QubitId inner, QubitId t,
                        bool approximate) {
  if (approximate)
    append_approx_toffoli(c, outer, inner, t);
  else
    append_toffoli(c, outer, inner, t);
}

// The ancilla-restoring block of the chain:
//   Tof(c[k-2], a[k-4] -> a[k-3]) ... Tof(c[2], a[0] -> a[1]),
//   Tof(c[0], c[1] -> a[0]),
//   Tof(c[2], a[0] -> a[1]) ... Tof(c[k-2], a[k-4] -> a[k-3]).
// In the approximate form the trailing W^-1 of each descending Toffoli
// meets the leading W of its ascending partner and both are dropped.
void append_chain_reset(Circuit& c, const QubitList& ctl, const QubitList& anc,
                        bool approximate) {
  const std::size_t k = ctl.size();
  if (!approximate) {
    for (std::size_t i = k - 2; i >= 2; --i)
      append_toffoli(c, ctl[i], anc[i - 2], anc[i - 1]);
    append_toffoli(c, ctl[0], ctl[1], anc[0]);
    for (std::size_t i = 2; i + 2 <= k; ++i)
      append_toffoli(c, ctl[i], anc[i - 2], anc[i - 1]);
    return;
  }
  for (std::size_t i = k - 2; i >= 2; --i) {
    append_w(c, ctl[i], anc[i - 1]);
    c.cx(anc[i - 2], anc[i - 1]);
  }
  append_approx_toffoli(c, ctl[0], ctl[1], anc[0]);
  for (std::size_t i = 2; i + 2 <= k; ++i) {
    c.cx(anc[i - 2], anc[i - 1]);
    append_w_inverse(c, ctl[i], anc[i - 1]);
  }
}

}  // namespace

void require_distinct(const QubitList& a, const QubitList& b,
                      const QubitList& c) {
  std::set<QubitId> seen;
  for (const QubitList* l : {&a, &b, &c})
    for (QubitId q : *l)
      if (!seen.insert(q).second)
        throw Error(ErrorCode::DuplicateQubit,
                    "qubit " + std::to_string(q.index) + " used twice");
}

void append_toffoli(Circuit& c, QubitId a, QubitId b, QubitId t) {
  require_distinct({a, b, t});
  c.h(t).cx(b, t);
  c.apply(t, gates::t_dagger(), "tdg").cx(a, t);
  c.apply(t, gates::t_gate(), "t").cx(b, t);
  c.apply(t, gates::t_dagger(), "tdg").cx(a, t);
  c.apply(b, gates::t_gate(), "t").apply(t, gates::t_gate(), "t").h(t);
  c.cx(a, b);
  c.apply(a, gates::t_gate(), "t").apply(b, gates::t_dagger(), "tdg");
  c.cx(a, b);
}

Circuit toffoli(QubitId c1, QubitId c2, QubitId t) {
  const QubitList qs{c1, c2, t};
  Circuit c(width_for({&qs}));
  append_toffoli(c, c1, c2, t);
  return c;
}

void append_approx_toffoli(Circuit& c, QubitId c1, QubitId c2, QubitId t,
                           Orientation) {
  require_distinct({c1, c2, t});
  append_w(c, c1, t);
  c.cx(c2, t);
  append_w_inverse(c, c1, t);
}

Circuit approx_toffoli(QubitId c1, QubitId c2, QubitId t,
                       Orientation orientation) {
  const QubitList qs{c1, c2, t};
  Circuit c(width_for({&qs}));
  append_approx_toffoli(c, c1, c2, t, orientation);
  return c;
}

void append_mcx_small(Circuit& c, const QubitList& controls, QubitId target) {
  require_distinct(controls, {target});
  switch (controls.size()) {
    case 0: c.x(target); break;
    case 1: c.cx(controls[0], target); break;
    case 2: append_toffoli(c, controls[0], controls[1], target); break;
    default:
      throw Error(ErrorCode::InvalidGate,
                  "mcx_small handles at most two controls");
  }
}

Circuit mcx_small(const QubitList& controls, QubitId target) {
  const QubitList t{target};
  Circuit c(width_for({&controls, &t}));
  append_mcx_small(c, controls, target);
  return c;
}

void append_mcx_dirty_chain(Circuit& c, const McxRequest& req) {
  const QubitList& ctl = req.controls;
  const std::size_t k = ctl.size();
  if (k < 3)
    throw Error(ErrorCode::InvalidGate,
                "dirty chain needs at least three controls");
  require_distinct(ctl, {req.target}, req.dirty_ancillas);
  if (req.dirty_ancillas.size() < k - 2) {
    if (!req.allow_ancilla_free || req.mode != McxMode::Full)
      throw Error(ErrorCode::NotEnoughAncillas,
                  std::to_string(k) + " controls need " +
                      std::to_string(k - 2) + " dirty ancillas, got " +
                      std::to_string(req.dirty_ancillas.size()));
    append_mcx(c, ctl, req.target, req.dirty_ancillas, true);
    return;
  }
  const QubitList anc(req.dirty_ancillas.begin(),
                      req.dirty_ancillas.begin() + (k - 2));
  const bool approx_reset = req.approx_policy != ApproxPolicy::ExactToffolisOnly;
  const bool approx_target =
      req.approx_policy == ApproxPolicy::ApproxEverywhereAllowed;
  const QubitId top = ctl[k - 1];
  const QubitId last_anc = anc[k - 3];

  if (req.mode != McxMode::ResetOnly) {
    if (approx_target) {
      // W^-1 on the target commutes with the reset block, so the two
      // target Toffolis share their outer halves.
      append_w(c, top, req.target);
      c.cx(last_anc, req.target);
      append_chain_reset(c, ctl, anc, approx_reset);
      c.cx(last_anc, req.target);
      append_w_inverse(c, top, req.target);
    } else {
      append_any_toffoli(c, top, last_anc, req.target, false);
      append_chain_reset(c, ctl, anc, approx_reset);
      append_any_toffoli(c, top, last_anc, req.target, false);
    }
  }
  if (req.mode != McxMode::ActionOnly)
    append_chain_reset(c, ctl, anc, approx_reset);
}

Circuit mcx_dirty_chain(const McxRequest& req) {
  const QubitList t{req.target};
  Circuit c(width_for({&req.controls, &t, &req.dirty_ancillas}));
  append_mcx_dirty_chain(c, req);
  return c;
}

OneDirtyParts mcx_one_dirty_parts(std::uint32_t width,
                                  const QubitList& controls, QubitId target,
                                  QubitId dirty, ApproxPolicy policy) {
  const std::size_t k = controls.size();
  if (k < 3)
    throw Error(ErrorCode::InvalidGate,
                "one-dirty split needs at least three controls");
  require_distinct(controls, {target, dirty});
  const std::size_t n = k + 2;
  const std::size_t m2 = (n + 1) / 2;
  const std::size_t m1 = n - m2 - 1;

  const QubitList top_ctl(controls.begin(), controls.begin() + m1);
  const QubitList rest(controls.begin() + m1, controls.end());
  QubitList bottom_ctl = rest;
  bottom_ctl.push_back(dirty);

  OneDirtyParts parts{Circuit(width), Circuit(width), Circuit(width)};
  const bool exact = policy == ApproxPolicy::ExactToffolisOnly;
  if (m1 == 1) {
    parts.top.cx(top_ctl[0], dirty);
  } else if (m1 == 2) {
    append_any_toffoli(parts.top, top_ctl[0], top_ctl[1], dirty, !exact);
  } else {
    append_mcx_dirty_chain(
        parts.top,
        {top_ctl, dirty, rest, McxMode::Full,
         exact ? ApproxPolicy::ExactToffolisOnly
               : ApproxPolicy::ApproxEverywhereAllowed});
  }
  McxRequest bottom{bottom_ctl, target, top_ctl, McxMode::ActionOnly, policy};
  append_mcx_dirty_chain(parts.bottom_action, bottom);
  bottom.mode = McxMode::ResetOnly;
  append_mcx_dirty_chain(parts.bottom_reset, bottom);
  return parts;
}

void append_mcx_one_dirty(Circuit& c, const QubitList& controls,
                          QubitId target, QubitId dirty, ApproxPolicy policy) {
  const auto parts =
      mcx_one_dirty_parts(c.width(), controls, target, dirty, policy);
  const Circuit top_inv = inverse(parts.top);
  c.append(parts.top)
      .append(parts.bottom_action)
      .append(parts.bottom_reset)
      .append(top_inv)
      .append(parts.bottom_action)
      .append(parts.bottom_reset);
}

Circuit mcx_one_dirty(const QubitList& controls, QubitId target, QubitId dirty,
                      ApproxPolicy policy) {
  const QubitList extra{target, dirty};
  Circuit c(width_for({&controls, &extra}));
  append_mcx_one_dirty(c, controls, target, dirty, policy);
  return c;
}

void append_mcx(Circuit& c, const QubitList& controls, QubitId target,
                const QubitList& dirty, bool allow_ancilla_free) {
  const std::size_t k = controls.size();
  if (k <= 2) {
    append_mcx_small(c, controls, target);
  } else if (dirty.size() >= k - 2) {
    append_mcx_dirty_chain(c, {controls, target, dirty});
  } else if (!dirty.empty()) {
    append_mcx_one_dirty(c, controls, target, dirty.front());
  } else if (allow_ancilla_free) {
    append_mc_u2_no_ancilla(c, controls, target, gates::pauli_x());
  } else {
    throw Error(ErrorCode::NotEnoughAncillas,
                std::to_string(k) +
                    "-controlled X needs a dirty ancilla; enable the "
                    "ancilla-free fallback to proceed without one");
  }
}

void append_controlled_u2(Circuit& c, QubitId control, QubitId target,
                          const Matrix2d& u) {
  require_distinct({control, target});
  const std::complex<double> det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const double phi = std::arg(det) / 2;
  const Matrix2d w = u * std::polar(1.0, -phi);
  const auto f = abc_decompose(w);
  c.apply(target, f.c, "c").cx(control, target);
  c.apply(target, f.b, "b").cx(control, target);
  c.apply(target, f.a, "a");
  if (std::abs(phi) > 0) c.apply(control, gates::phase(phi), "p");
}

void append_mc_u2_no_ancilla(Circuit& c, const QubitList& controls,
                             QubitId target, const Matrix2d& u,
                             const QubitList& spare) {
  require_distinct(controls, {target}, spare);
  if (controls.empty()) {
    c.apply(target, u);
    return;
  }
  if (controls.size() == 1) {
    append_controlled_u2(c, controls[0], target, u);
    return;
  }
  const Matrix2d v = unitary_sqrt(u);
  const QubitId last = controls.back();
  const QubitList rest(controls.begin(), controls.end() - 1);
  QubitList borrow = spare;
  borrow.push_back(target);

  append_controlled_u2(c, last, target, v);
  append_mcx(c, rest, last, borrow, true);
  append_controlled_u2(c, last, target, v.adjoint());
  append_mcx(c, rest, last, borrow, true);
  QubitList spare_next = spare;
  spare_next.push_back(last);
  append_mc_u2_no_ancilla(c, rest, target, v, spare_next);
}

}  // namespace mcsu2
