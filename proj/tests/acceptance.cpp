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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "mcsu2/decompose.hpp"
#include "mcsu2/mcx.hpp"
#include "mcsu2/sim.hpp"
#include "mcsu2/stateprep.hpp"
#include "oracle.hpp"

using namespace mcsu2;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// Collects the failure reasons of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<void(Check&, std::string&)> body;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

void theorem3_bound(Check& chk, std::string& note) {
  std::mt19937_64 rng(1001);
  std::size_t worst_slack = 1000;
  for (std::uint32_t n = 6; n <= 14; ++n) {
    for (int i = 0; i < 20; ++i) {
      const auto d = mc_su2_real_off_diag(qubit_range(0, n - 1), {n - 1},
                                          oracle::random_form(rng));
      const long bound = 16L * n - 40;
      chk.expect(static_cast<long>(d.report.cnot_count) <= bound,
                 "n=" + std::to_string(n) + " count " +
                     std::to_string(d.report.cnot_count));
      worst_slack = std::min<std::size_t>(
          worst_slack, static_cast<std::size_t>(bound - d.report.cnot_count));
    }
  }
  note = "n=6..14, 20 gates each, min slack " + std::to_string(worst_slack);
}

void theorem5_bound(Check& chk, std::string& note) {
  std::mt19937_64 rng(1002);
  for (std::uint32_t n = 7; n <= 15; ++n) {
    const long bound = n % 2 ? 20L * n - 38 : 20L * n - 42;
    for (int i = 0; i < 20; ++i) {
      const auto d = mc_su2_general(qubit_range(0, n - 1), {n - 1},
                                    oracle::random_su2(rng));
      chk.expect(static_cast<long>(d.report.cnot_count) <= bound,
                 "n=" + std::to_string(n) + " count " +
                     std::to_string(d.report.cnot_count));
    }
  }
  note = "n=7..15, 20 gates each";
}

void baseline_bound_gap(Check& chk, std::string& note) {
  std::mt19937_64 rng(1003);
  std::string counts;
  for (std::uint32_t n = 8; n <= 14; ++n) {
    const long bound = n % 2 ? 28L * n - 92 : 28L * n - 88;
    const Matrix2d w = oracle::random_su2(rng);
    const auto b = mc_su2_baseline(qubit_range(0, n - 1), {n - 1}, w);
    const auto g = mc_su2_general(qubit_range(0, n - 1), {n - 1}, w);
    chk.expect(static_cast<long>(b.report.cnot_count) <= bound,
               "n=" + std::to_string(n) + " baseline over bound");
    chk.expect(b.report.cnot_count > g.report.cnot_count,
               "n=" + std::to_string(n) + " baseline not above general");
    counts += (counts.empty() ? "" : " ") + std::to_string(n) + ":" +
              std::to_string(b.report.cnot_count) + "/" +
              std::to_string(g.report.cnot_count);
  }
  note = "baseline/general " + counts;
}

void unitary_correctness(Check& chk, std::string& note) {
  std::mt19937_64 rng(1004);
  const Matrix2d h = gates::hadamard();
  std::uniform_real_distribution<double> angle(-2 * pi, 2 * pi);
  using Path = std::function<std::pair<Decomposition, Matrix2d>(
      const QubitList&, QubitId)>;
  const std::vector<std::pair<std::string, Path>> paths{
      {"real-off-diag",
       [&](const QubitList& c, QubitId t) {
         const auto v = oracle::random_form(rng);
         return std::pair{mc_su2_real_off_diag(c, t, v), v.matrix()};
       }},
      {"real-main-diag",
       [&](const QubitList& c, QubitId t) {
         const Matrix2d v = h * oracle::random_form(rng).matrix() * h;
         return std::pair{mc_su2_real_main_diag(c, t, v), v};
       }},
      {"rx",
       [&](const QubitList& c, QubitId t) {
         const double a = angle(rng);
         return std::pair{mc_rx(c, t, a), gates::rx(a)};
       }},
      {"ry",
       [&](const QubitList& c, QubitId t) {
         const double a = angle(rng);
         return std::pair{mc_ry(c, t, a), gates::ry(a)};
       }},
      {"rz",
       [&](const QubitList& c, QubitId t) {
         const double a = angle(rng);
         return std::pair{mc_rz(c, t, a), gates::rz(a)};
       }},
      {"general",
       [&](const QubitList& c, QubitId t) {
         const Matrix2d v = oracle::random_su2(rng);
         return std::pair{mc_su2_general(c, t, v), v};
       }},
      {"baseline",
       [&](const QubitList& c, QubitId t) {
         const Matrix2d v = oracle::random_su2(rng);
         return std::pair{mc_su2_baseline(c, t, v), v};
       }},
  };

  double worst = 0;
  std::size_t checked = 0;
  for (const auto& [name, path] : paths) {
    for (std::uint32_t n = 3; n <= 10; ++n) {
      const QubitList controls = qubit_range(0, n - 1);
      const QubitId target{n - 1};
      for (int i = 0; i < 50; ++i) {
        const auto [d, v] = path(controls, target);
        const auto e = equiv_phase(circuit_unitary(d.circuit),
                                   ideal_mc_unitary(n, controls, target, v));
        worst = std::max(worst, e.max_error);
        ++checked;
        chk.expect(e.equivalent && e.max_error < 1e-9,
                   name + " n=" + std::to_string(n) + " residual " +
                       fmt(e.max_error));
      }
    }
  }

  // MCX constructions over every basis state, dirty ancillas included.
  std::size_t mcx_checked = 0;
  auto check_mcx = [&](const Circuit& c, const QubitList& controls,
                       QubitId target, const std::string& label) {
    const auto u = circuit_unitary(c);
    const auto ideal =
        ideal_mc_unitary(c.width(), controls, target, gates::pauli_x());
    const double err = max_abs(u - ideal);
    worst = std::max(worst, err);
    ++mcx_checked;
    chk.expect(err < 1e-9, label + " residual " + fmt(err));
  };
  for (std::uint32_t k = 3; 2 * k - 1 <= 10; ++k) {
    for (ApproxPolicy p :
         {ApproxPolicy::ExactToffolisOnly, ApproxPolicy::ApproxWhereCancelled}) {
      McxRequest req{qubit_range(0, k), {k}, qubit_range(k + 1, k - 2)};
      req.approx_policy = p;
      check_mcx(mcx_dirty_chain(req), req.controls, req.target,
                "chain k=" + std::to_string(k));
    }
  }
  for (std::uint32_t k = 3; k + 2 <= 10; ++k) {
    const QubitList controls = qubit_range(0, k);
    check_mcx(mcx_one_dirty(controls, {k}, {k + 1}), controls, {k},
              "one-dirty k=" + std::to_string(k));
    check_mcx(mcx_one_dirty(controls, {k}, {k + 1},
                            ApproxPolicy::ExactToffolisOnly),
              controls, {k}, "one-dirty exact k=" + std::to_string(k));
  }
  note = std::to_string(checked) + " gates over 7 paths, " +
         std::to_string(mcx_checked) + " MCX netlists, worst residual " +
         fmt(worst);
}

void solver_round_trips(Check& chk, std::string& note) {
  std::mt19937_64 rng(1005);
  const Matrix2d x = gates::pauli_x();
  double worst_a = 0, worst_b = 0, worst_norm = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto v = oracle::random_form(rng);
    const Matrix2d a = solve_a_gate(v);
    const Matrix2d half = a.adjoint() * x * a * x;
    worst_a = std::max(worst_a, max_abs(half * half - v.matrix()));
    const Matrix2d b = solve_b_half(v);
    worst_b = std::max(worst_b, max_abs(b.adjoint() * x * b * x - v.matrix()));
    worst_norm = std::max(
        worst_norm, std::abs(std::norm(a(0, 0)) + std::norm(a(1, 0)) - 1));
  }
  chk.expect(worst_a < 1e-10, "A residual " + fmt(worst_a));
  chk.expect(worst_b < 1e-10, "B residual " + fmt(worst_b));
  chk.expect(worst_norm < 1e-12, "|alpha|^2+|beta|^2 off by " + fmt(worst_norm));
  note = "10^4 forms, residuals A " + fmt(worst_a) + ", B " + fmt(worst_b) +
         ", norm " + fmt(worst_norm);
}

void rotation_identities(Check& chk, std::string& note) {
  std::vector<double> angles{0, pi / 2, -pi / 2, pi, 2 * pi};
  std::mt19937_64 rng(1006);
  std::uniform_real_distribution<double> dist(-4 * pi, 4 * pi);
  while (angles.size() < 20) angles.push_back(dist(rng));
  const Matrix2d x = gates::pauli_x();
  const Matrix2d z = gates::pauli_z();
  double worst = 0;
  for (double t : angles) {
    const Matrix2d ry = gates::ry(t / 4) * x * gates::ry(-t / 4) * x;
    const Matrix2d rz = gates::rz(t / 4) * x * gates::rz(-t / 4) * x;
    const Matrix2d rx = gates::rx(t / 4) * z * gates::rx(-t / 4) * z;
    worst = std::max({worst, max_abs(ry * ry - gates::ry(t)),
                      max_abs(rz * rz - gates::rz(t)),
                      max_abs(rx * rx - gates::rx(t))});
  }
  chk.expect(worst < 1e-12, "residual " + fmt(worst));
  note = "20 angles, worst residual " + fmt(worst);
}

void approx_toffoli_check(Check& chk, std::string& note) {
  const QubitId c1{0}, c2{1}, t{2};
  const Circuit approx = approx_toffoli(c1, c2, t);
  chk.expect(approx.cnot_count() == 3,
             "cnot_count " + std::to_string(approx.cnot_count()));
  const auto u = circuit_unitary(approx);
  const auto ccx = ideal_mc_unitary(3, {c1, c2}, t, gates::pauli_x());
  const Eigen::MatrixXcd delta = u * ccx.adjoint();
  const Eigen::MatrixXcd diag = delta.diagonal().asDiagonal();
  chk.expect(max_abs(delta - diag) < 1e-12, "correction is not diagonal");
  for (Eigen::Index i = 0; i < 8; ++i) {
    const cd expected = i == 2 ? -1.0 : 1.0;
    chk.expect(std::abs(delta(i, i) - expected) < 1e-12,
               "entry " + std::to_string(i));
  }
  chk.expect(max_abs(circuit_unitary(approx_toffoli(c1, c2, t,
                                                    Orientation::Reverse)) -
                     u) < 1e-12,
             "reverse orientation differs");

  // Compute, use, uncompute with a dirty middle qubit.
  const QubitId a{2}, out{3};
  Circuit paired(4), exact(4);
  append_approx_toffoli(paired, c1, c2, a);
  paired.cx(a, out);
  append_approx_toffoli(paired, c1, c2, a, Orientation::Reverse);
  append_toffoli(exact, c1, c2, a);
  exact.cx(a, out);
  append_toffoli(exact, c1, c2, a);
  const double pair_err =
      max_abs(circuit_unitary(paired) - circuit_unitary(exact));
  chk.expect(pair_err < 1e-10, "cancelling pair residual " + fmt(pair_err));

  double chain_err = 0;
  for (std::uint32_t k = 3; k <= 5; ++k) {
    McxRequest req{qubit_range(0, k), {k}, qubit_range(k + 1, k - 2)};
    const Circuit chain = mcx_dirty_chain(req);
    chain_err = std::max(
        chain_err,
        max_abs(circuit_unitary(chain) -
                ideal_mc_unitary(chain.width(), req.controls, req.target,
                                 gates::pauli_x())));
  }
  chk.expect(chain_err < 1e-10, "chain residual " + fmt(chain_err));
  note = "3 CNOTs, -1 at |010>, pair residual " + fmt(pair_err) +
         ", chain residual " + fmt(chain_err);
}

void cvo_qram_sweep(Check& chk, std::string& note) {
  double worst_fid = 1;
  std::string means;
  for (std::uint32_t n = 6; n <= 10; ++n) {
    double sum_auto = 0, sum_base = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto ps = random_double_sparse(n, 4, 0.2, seed);
      const StateVector target = target_state(ps, n);
      for (Method m : {Method::Auto, Method::Baseline}) {
        const auto prep = cvo_qram_circuit(ps, n, m);
        const StateVector out =
            mcsu2::apply(prep.circuit, basis_state(n, 0));
        const double fid = std::abs(target.dot(out));
        worst_fid = std::min(worst_fid, fid);
        chk.expect(fid > 1 - 1e-9, "n=" + std::to_string(n) + " seed " +
                                       std::to_string(seed) + " fidelity " +
                                       fmt(fid));
        (m == Method::Auto ? sum_auto : sum_base) +=
            static_cast<double>(prep.report.cnot_count);
      }
    }
    chk.expect(sum_auto < sum_base,
               "n=" + std::to_string(n) + " optimized mean not below baseline");
    means += (means.empty() ? "" : " ") + std::to_string(n) + ":" +
             fmt(sum_auto / 10) + "/" + fmt(sum_base / 10);
  }
  note = "mean CNOTs optimized/baseline " + means + ", min fidelity " +
         std::to_string(worst_fid);
}

void qasm_round_trip(Check& chk, std::string& note) {
  std::mt19937_64 rng(1009);
  std::uniform_int_distribution<std::uint32_t> width(2, 6);
  const std::vector<Method> methods{Method::Auto, Method::RealOffDiag,
                                    Method::General, Method::Baseline};
  double worst = 0;
  for (int i = 0; i < 10; ++i) {
    const std::uint32_t n = width(rng);
    const Method m = methods[static_cast<std::size_t>(i) % methods.size()];
    const Matrix2d v = m == Method::RealOffDiag
                           ? oracle::random_form(rng).matrix()
                           : oracle::random_su2(rng);
    const auto d = decompose({qubit_range(0, n - 1), {n - 1}, v, m});
    const auto parsed = oracle::qasm_unitary(to_qasm(d.circuit));
    const double err = oracle::phase_distance(parsed, circuit_unitary(d.circuit));
    worst = std::max(worst, err);
    chk.expect(err < 1e-8, "circuit " + std::to_string(i) + " residual " +
                               fmt(err));
  }
  note = "10 circuits, widths 2..6, worst residual " + fmt(worst);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "real-diagonal bound 16n-40", 10, theorem3_bound},
      {2, "general bound 20n-38/20n-42", 10, theorem5_bound},
      {3, "baseline bound 28n-88/28n-92 and gap", 10, baseline_bound_gap},
      {4, "unitary correctness", 300, unitary_correctness},
      {5, "solver round trips", 5, solver_round_trips},
      {6, "rotation identities", 1, rotation_identities},
      {7, "approximate Toffoli", 1, approx_toffoli_check},
      {8, "CVO-QRAM sweep", 180, cvo_qram_sweep},
      {9, "QASM round trip", 60, qasm_round_trip},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Check chk;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(chk, note);
    } catch (const std::exception& e) {
      chk.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    chk.expect(secs < c.time_limit_s,
               "took " + fmt(secs) + " s, limit " + fmt(c.time_limit_s) + " s");
    all = all && chk.ok();
    std::cout << (chk.ok() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name
              << " (" << fmt(secs) << " s): " << note << chk.summary()
              << std::endl;
  }
  return all ? 0 : 1;
}
