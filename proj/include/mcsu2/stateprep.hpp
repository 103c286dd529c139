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

// Sparse state preparation with CVO-QRAM.
//
// Register layout: qubit 0 is the flag qubit u, which starts in |1> and
// ends in |0>; character j of a pattern's bitstring is qubit j + 1.

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcsu2/decompose.hpp"
#include "mcsu2/sim.hpp"

namespace mcsu2 {

struct SparsePattern {
  std::string bits;
  std::complex<double> amplitude;
};

/// ( sqrt((g - |x|^2) / g),  x / sqrt(g) )
/// ( -x* / sqrt(g),          sqrt((g - |x|^2) / g) )
/// Throws InvalidWeight unless 0 < g <= 1 and |x|^2 <= g (within tol).
Matrix2d u_matrix(std::complex<double> x, double gamma,
                  double tol = kDefaultTolerance);

struct StatePrep {
  Circuit circuit;
  /// Totals over the whole circuit; bound fields are left empty.
  DecompositionReport report;
  /// One report per lowered multi-controlled gate, in emission order.
  std::vector<DecompositionReport> blocks;
};

/// Checks bit characters and lengths, distinctness and normalization.
/// Throws InvalidPattern, DuplicatePattern or NotNormalized.
void validate_patterns(const std::vector<SparsePattern>& patterns,
                       std::uint32_t width, double tol = kDefaultTolerance);

/// Loads sum_k x_k |p_k> into the memory qubits. Patterns are processed in
/// order of increasing popcount (ties keep input order): a pattern whose set
/// bits all appear in an already-loaded pattern would otherwise rotate that
/// pattern's flag qubit as well.
StatePrep cvo_qram_circuit(const std::vector<SparsePattern>& patterns,
                           std::uint32_t width, Method method = Method::Auto);

/// |0>_u (x) sum_k x_k |p_k>.
StateVector target_state(const std::vector<SparsePattern>& patterns,
                         std::uint32_t width);

/// Basis index of a pattern in the full register (flag qubit clear).
std::uint64_t pattern_index(const std::string& bits);

/// 2^s distinct bitstrings of length n - 1 with independent bits set with
/// probability `density`, and normalized complex Gaussian amplitudes.
/// Deterministic for a fixed seed. Throws InfeasibleDensity when the
/// patterns cannot be drawn.
std::vector<SparsePattern> random_double_sparse(std::uint32_t n,
                                                std::uint32_t s,
                                                double density,
                                                std::uint64_t seed);

struct SweepRow {
  std::uint32_t n{0};
  Method method{Method::Auto};
  double mean_cnots{0};
  double std_cnots{0};
  std::size_t seeds{0};
};

/// Mean and sample standard deviation of the CNOT count over seeds
/// 0 .. seeds - 1, for every n in [n_first, n_last] and every method. Each
/// seed's pattern set is shared by all methods. No rows when seeds == 0.
std::vector<SweepRow> benchmark_sweep(std::uint32_t n_first,
                                      std::uint32_t n_last, std::uint32_t s,
                                      double density, std::size_t seeds,
                                      const std::vector<Method>& methods);

/// Header n,method,mean_cnots,std_cnots,seeds then one line per row.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace mcsu2
