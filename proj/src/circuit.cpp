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

#include "mcsu2/circuit.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace mcsu2 {

QubitList qubit_range(std::uint32_t first, std::uint32_t count) {
  QubitList out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) out.push_back({first + i});
  return out;
}

QubitList qubits(std::initializer_list<std::uint32_t> indices) {
  QubitList out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back({i});
  return out;
}

bool is_cnot(const Gate& g) noexcept {
  return std::holds_alternative<CnotGate>(g);
}

namespace {

void check_qubit(QubitId q, std::uint32_t width) {
  if (q.index >= width)
    throw Error(ErrorCode::QubitOutOfRange,
                "qubit " + std::to_string(q.index) +
                    " outside circuit of width " + std::to_string(width));
}

std::string dagger_label(const std::string& label) {
  static const std::string suffix = "_dg";
  if (label.size() > suffix.size() &&
      label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0)
    return label.substr(0, label.size() - suffix.size());
  return label + suffix;
}

}  // namespace

Circuit& Circuit::append(Gate g) {
  if (auto* s = std::get_if<SingleQubitGate>(&g)) {
    check_qubit(s->target, width_);
    if (!is_unitary(s->matrix, kDefaultTolerance))
      throw Error(ErrorCode::InvalidMatrix,
                  "single-qubit gate '" + s->label + "' is not unitary");
  } else {
    const auto& c = std::get<CnotGate>(g);
    check_qubit(c.control, width_);
    check_qubit(c.target, width_);
    if (c.control == c.target)
      throw Error(ErrorCode::InvalidGate,
                  "cnot control equals target (qubit " +
                      std::to_string(c.control.index) + ")");
    ++cnots_;
  }
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ != width_)
    throw Error(ErrorCode::WidthMismatch,
                "cannot append width " + std::to_string(other.width_) +
                    " to width " + std::to_string(width_));
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  cnots_ += other.cnots_;
  return *this;
}

Circuit& Circuit::apply(QubitId q, const Matrix2d& m, std::string label) {
  return append(SingleQubitGate{q, m, std::move(label)});
}

Circuit& Circuit::cx(QubitId control, QubitId target) {
  return append(CnotGate{control, target});
}

Circuit& Circuit::x(QubitId q) { return apply(q, gates::pauli_x(), "x"); }

Circuit& Circuit::h(QubitId q) { return apply(q, gates::hadamard(), "h"); }

Circuit& Circuit::ry(QubitId q, double theta) {
  return apply(q, gates::ry(theta), "ry");
}

Circuit& Circuit::rz(QubitId q, double theta) {
  return apply(q, gates::rz(theta), "rz");
}

bool operator==(const Circuit& a, const Circuit& b) {
  if (a.width_ != b.width_ || a.gates_.size() != b.gates_.size())
    return false;
  for (std::size_t i = 0; i < a.gates_.size(); ++i) {
    const Gate& ga = a.gates_[i];
    const Gate& gb = b.gates_[i];
    if (ga.index() != gb.index()) return false;
    if (const auto* sa = std::get_if<SingleQubitGate>(&ga)) {
      const auto& sb = std::get<SingleQubitGate>(gb);
      if (sa->target != sb.target || sa->matrix != sb.matrix) return false;
    } else {
      const auto& ca = std::get<CnotGate>(ga);
      const auto& cb = std::get<CnotGate>(gb);
      if (ca.control != cb.control || ca.target != cb.target) return false;
    }
  }
  return true;
}

Circuit compose(const Circuit& first, const Circuit& second) {
  Circuit out = first;
  out.append(second);
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.width());
  const auto& gs = c.gates();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
    if (const auto* s = std::get_if<SingleQubitGate>(&*it))
      out.append(SingleQubitGate{s->target, s->matrix.adjoint(),
                                 dagger_label(s->label)});
    else
      out.append(*it);
  }
  return out;
}

Circuit widen(const Circuit& c, std::uint32_t width) {
  if (width < c.width())
    throw Error(ErrorCode::WidthMismatch, "widen cannot shrink a circuit");
  Circuit out(width);
  for (const Gate& g : c.gates()) out.append(g);
  return out;
}

namespace {

// ASAP layer of every gate, 1-based.
std::vector<std::size_t> asap_layers(const Circuit& c) {
  std::vector<std::size_t> wire(c.width(), 0);
  std::vector<std::size_t> layers;
  layers.reserve(c.size());
  for (const Gate& g : c.gates()) {
    std::size_t layer;
    if (const auto* s = std::get_if<SingleQubitGate>(&g)) {
      layer = ++wire[s->target.index];
    } else {
      const auto& cn = std::get<CnotGate>(g);
      layer = std::max(wire[cn.control.index], wire[cn.target.index]) + 1;
      wire[cn.control.index] = wire[cn.target.index] = layer;
    }
    layers.push_back(layer);
  }
  return layers;
}

}  // namespace

std::size_t depth(const Circuit& c) {
  const auto layers = asap_layers(c);
  return layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
}

std::size_t cnot_depth(const Circuit& c) {
  const auto layers = asap_layers(c);
  std::set<std::size_t> with_cnot;
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (is_cnot(c.gates()[i])) with_cnot.insert(layers[i]);
  return with_cnot.size();
}

Circuit fuse_single_qubit_gates(const Circuit& c, double tol) {
  // Fused gates stay at the position of the first gate of their run; the
  // later members only commute past gates on other wires.
  std::vector<Gate> items;
  items.reserve(c.size());
  std::vector<std::optional<std::size_t>> open(c.width());
  for (const Gate& g : c.gates()) {
    if (const auto* s = std::get_if<SingleQubitGate>(&g)) {
      auto& run = open[s->target.index];
      if (run) {
        auto& fused = std::get<SingleQubitGate>(items[*run]);
        fused.matrix = (s->matrix * fused.matrix).eval();
        fused.label = "u";
      } else {
        run = items.size();
        items.push_back(g);
      }
    } else {
      const auto& cn = std::get<CnotGate>(g);
      open[cn.control.index].reset();
      open[cn.target.index].reset();
      items.push_back(g);
    }
  }
  Circuit out(c.width());
  for (const Gate& g : items) {
    if (const auto* s = std::get_if<SingleQubitGate>(&g);
        s && (s->matrix - Matrix2d::Identity()).cwiseAbs().maxCoeff() < tol)
      continue;
    out.append(g);
  }
  return out;
}

}  // namespace mcsu2
