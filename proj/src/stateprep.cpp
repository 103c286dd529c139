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

#include "mcsu2/stateprep.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

namespace mcsu2 {

Matrix2d u_matrix(std::complex<double> x, double gamma, double tol) {
  if (!(gamma > 0) || gamma > 1 + tol || !std::isfinite(std::abs(x)))
    throw Error(ErrorCode::InvalidWeight,
                "remaining weight " + std::to_string(gamma) +
                    " is outside (0, 1]");
  double rest = gamma - std::norm(x);
  if (rest < -tol)
    throw Error(ErrorCode::InvalidWeight,
                "|x|^2 = " + std::to_string(std::norm(x)) +
                    " exceeds the remaining weight " + std::to_string(gamma));
  rest = std::max(rest, 0.0);
  const double root = std::sqrt(gamma);
  const double diag = std::sqrt(rest / gamma);
  // Rescale the off-diagonal so rounding in gamma cannot break unitarity.
  const double off = std::sqrt(1 - diag * diag);
  const std::complex<double> x_hat =
      std::abs(x) > 0 ? x / std::abs(x) * off : x / root;
  Matrix2d m;
  m << diag, x_hat, -std::conj(x_hat), diag;
  return m;
}

std::uint64_t pattern_index(const std::string& bits) {
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < bits.size(); ++j)
    if (bits[j] == '1') index |= std::uint64_t{1} << (j + 1);
  return index;
}

void validate_patterns(const std::vector<SparsePattern>& patterns,
                       std::uint32_t width, double tol) {
  if (width < 1)
    throw Error(ErrorCode::InvalidPattern, "width must include the flag qubit");
  std::set<std::string> seen;
  double norm = 0;
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    const auto& p = patterns[k];
    if (p.bits.size() + 1 != width)
      throw Error(ErrorCode::InvalidPattern,
                  "pattern " + std::to_string(k) + " has " +
                      std::to_string(p.bits.size()) + " bits, expected " +
                      std::to_string(width - 1));
    if (p.bits.find_first_not_of("01") != std::string::npos)
      throw Error(ErrorCode::InvalidPattern,
                  "pattern '" + p.bits + "' contains a character other than "
                  "0 or 1");
    if (!seen.insert(p.bits).second)
      throw Error(ErrorCode::DuplicatePattern,
                  "pattern '" + p.bits + "' appears twice");
    norm += std::norm(p.amplitude);
  }
  if (std::abs(norm - 1) > tol)
    throw Error(ErrorCode::NotNormalized,
                "sum of |x_k|^2 is " + std::to_string(norm));
}

StatePrep cvo_qram_circuit(const std::vector<SparsePattern>& patterns,
                           std::uint32_t width, Method method) {
  validate_patterns(patterns, width);
  std::vector<std::size_t> order(patterns.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto popcount = [&](std::size_t k) {
    return std::count(patterns[k].bits.begin(), patterns[k].bits.end(), '1');
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return popcount(a) < popcount(b);
                   });

  StatePrep out{Circuit(width), {}, {}};
  Circuit& c = out.circuit;
  const QubitId u{0};
  c.x(u);
  double gamma = 1;
  for (std::size_t k : order) {
    const auto& p = patterns[k];
    if (std::abs(p.amplitude) == 0) continue;
    QubitList controls;
    for (std::size_t j = 0; j < p.bits.size(); ++j)
      if (p.bits[j] == '1')
        controls.push_back({static_cast<std::uint32_t>(j + 1)});

    for (QubitId m : controls) c.cx(u, m);
    const Matrix2d v = u_matrix(p.amplitude, gamma);
    auto block = decompose({controls, u, v, method, width});
    c.append(block.circuit);
    out.blocks.push_back(block.report);
    for (QubitId m : controls) c.cx(u, m);
    gamma -= std::norm(p.amplitude);
  }
  c = fuse_single_qubit_gates(c);
  out.report.cnot_count = c.cnot_count();
  out.report.depth = depth(c);
  out.report.method_used = method;
  return out;
}

StateVector target_state(const std::vector<SparsePattern>& patterns,
                         std::uint32_t width) {
  validate_patterns(patterns, width, 1e-6);
  StateVector s = StateVector::Zero(Eigen::Index{1} << width);
  for (const auto& p : patterns)
    s(static_cast<Eigen::Index>(pattern_index(p.bits))) = p.amplitude;
  return s;
}

std::vector<SparsePattern> random_double_sparse(std::uint32_t n,
                                                std::uint32_t s,
                                                double density,
                                                std::uint64_t seed) {
  if (n < 1 || n - 1 > 62 || s > 62)
    throw Error(ErrorCode::InfeasibleDensity, "unsupported register size");
  if (!(density > 0 && density < 1))
    throw Error(ErrorCode::InfeasibleDensity,
                "density must lie strictly between 0 and 1");
  const std::uint64_t count = std::uint64_t{1} << s;
  if (count > (std::uint64_t{1} << (n - 1)))
    throw Error(ErrorCode::InfeasibleDensity,
                std::to_string(count) + " distinct patterns do not fit in " +
                    std::to_string(n - 1) + " bits");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(density);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::set<std::string> seen;
  std::vector<SparsePattern> out;
  out.reserve(count);
  const std::uint64_t max_draws = 10000 * count;
  for (std::uint64_t draw = 0; out.size() < count; ++draw) {
    if (draw >= max_draws)
      throw Error(ErrorCode::InfeasibleDensity,
                  "could not draw " + std::to_string(count) +
                      " distinct patterns at density " +
                      std::to_string(density));
    std::string bits(n - 1, '0');
    for (auto& ch : bits) ch = bit(rng) ? '1' : '0';
    if (seen.insert(bits).second) out.push_back({bits, {}});
  }
  double norm = 0;
  for (auto& p : out) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    p.amplitude = {re, im};
    norm += std::norm(p.amplitude);
  }
  for (auto& p : out) p.amplitude /= std::sqrt(norm);
  return out;
}

std::vector<SweepRow> benchmark_sweep(std::uint32_t n_first,
                                      std::uint32_t n_last, std::uint32_t s,
                                      double density, std::size_t seeds,
                                      const std::vector<Method>& methods) {
  std::vector<SweepRow> rows;
  if (seeds == 0) return rows;
  for (std::uint32_t n = n_first; n <= n_last; ++n) {
    std::vector<std::vector<double>> counts(methods.size());
    for (std::size_t seed = 0; seed < seeds; ++seed) {
      const auto patterns = random_double_sparse(n, s, density, seed);
      for (std::size_t m = 0; m < methods.size(); ++m)
        counts[m].push_back(static_cast<double>(
            cvo_qram_circuit(patterns, n, methods[m]).report.cnot_count));
    }
    for (std::size_t m = 0; m < methods.size(); ++m) {
      const auto& xs = counts[m];
      const double mean =
          std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
      double ss = 0;
      for (double x : xs) ss += (x - mean) * (x - mean);
      const double sd = xs.size() > 1 ? std::sqrt(ss / (xs.size() - 1)) : 0;
      rows.push_back({n, methods[m], mean, sd, seeds});
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "n,method,mean_cnots,std_cnots,seeds\n";
  for (const auto& r : rows)
    os << r.n << ',' << to_string(r.method) << ',' << std::fixed
       << std::setprecision(4) << r.mean_cnots << ',' << r.std_cnots << ','
       << std::defaultfloat << r.seeds << '\n';
}

}  // namespace mcsu2
