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

#include "mcsu2/sim.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace mcsu2 {

namespace {

using cd = std::complex<double>;

enum class OpKind { General, Real, Diagonal, Cnot };

// Single-qubit ops use `bit` as the target; CNOTs use `bit` as the control
// and `target_bit` as the target. Matrix entries are split into real parts.
struct Op {
  OpKind kind;
  std::uint64_t bit;
  std::uint64_t target_bit;
  double m[8];  // re/im of m00, m01, m10, m11
};

std::vector<Op> compile(const Circuit& c) {
  std::vector<Op> ops;
  ops.reserve(c.size());
  for (const Gate& g : c.gates()) {
    if (const auto* s = std::get_if<SingleQubitGate>(&g)) {
      const auto& mat = s->matrix;
      Op op{OpKind::General, std::uint64_t{1} << s->target.index, 0, {}};
      const cd entries[4] = {mat(0, 0), mat(0, 1), mat(1, 0), mat(1, 1)};
      for (int k = 0; k < 4; ++k) {
        op.m[2 * k] = entries[k].real();
        op.m[2 * k + 1] = entries[k].imag();
      }
      if (entries[1] == 0.0 && entries[2] == 0.0)
        op.kind = OpKind::Diagonal;
      else if (op.m[1] == 0 && op.m[3] == 0 && op.m[5] == 0 && op.m[7] == 0)
        op.kind = OpKind::Real;
      ops.push_back(op);
    } else {
      const auto& x = std::get<CnotGate>(g);
      ops.push_back({OpKind::Cnot, std::uint64_t{1} << x.control.index,
                     std::uint64_t{1} << x.target.index, {}});
    }
  }
  return ops;
}

// Calls f(a, b) for the row pairs (i, i + s) of every index i with bit s
// clear; rows are `stride` doubles long.
template <typename F>
void for_pairs(double* d, std::uint64_t dim, std::uint64_t s,
               std::uint64_t stride, F&& f) {
  for (std::uint64_t base = 0; base < dim; base += 2 * s)
    for (std::uint64_t i = base; i < base + s; ++i)
      f(d + i * stride, d + (i + s) * stride);
}

// Applies the ops to a row-major block: basis index i owns the contiguous
// row of `cols` amplitudes starting at d + 2 * i * cols. Complex products
// are spelled out in doubles, which keeps the inner loops vectorizable and
// skips the NaN recovery of std::complex multiplication.
void run(const std::vector<Op>& ops, double* d, std::uint64_t dim,
         std::uint64_t cols) {
  const std::uint64_t stride = 2 * cols;
  for (const Op& op : ops) {
    const double* m = op.m;
    switch (op.kind) {
      case OpKind::General:
        for_pairs(d, dim, op.bit, stride,
                  [&](double* __restrict a, double* __restrict b) {
                    for (std::uint64_t k = 0; k < stride; k += 2) {
                      const double ar = a[k], ai = a[k + 1];
                      const double br = b[k], bi = b[k + 1];
                      a[k] = m[0] * ar - m[1] * ai + m[2] * br - m[3] * bi;
                      a[k + 1] = m[0] * ai + m[1] * ar + m[2] * bi + m[3] * br;
                      b[k] = m[4] * ar - m[5] * ai + m[6] * br - m[7] * bi;
                      b[k + 1] = m[4] * ai + m[5] * ar + m[6] * bi + m[7] * br;
                    }
                  });
        break;
      case OpKind::Real:
        for_pairs(d, dim, op.bit, stride,
                  [&](double* __restrict a, double* __restrict b) {
                    for (std::uint64_t k = 0; k < stride; ++k) {
                      const double x = a[k], y = b[k];
                      a[k] = m[0] * x + m[2] * y;
                      b[k] = m[4] * x + m[6] * y;
                    }
                  });
        break;
      case OpKind::Diagonal:
        for_pairs(d, dim, op.bit, stride,
                  [&](double* __restrict a, double* __restrict b) {
                    for (std::uint64_t k = 0; k < stride; k += 2) {
                      const double ar = a[k], ai = a[k + 1];
                      const double br = b[k], bi = b[k + 1];
                      a[k] = m[0] * ar - m[1] * ai;
                      a[k + 1] = m[0] * ai + m[1] * ar;
                      b[k] = m[6] * br - m[7] * bi;
                      b[k + 1] = m[6] * bi + m[7] * br;
                    }
                  });
        break;
      case OpKind::Cnot: {
        // Visit every index with the control set and the target clear once.
        const std::uint64_t lo = std::min(op.bit, op.target_bit);
        const std::uint64_t hi = std::max(op.bit, op.target_bit);
        for (std::uint64_t outer = 0; outer < dim; outer += 2 * hi)
          for (std::uint64_t mid = outer; mid < outer + hi; mid += 2 * lo)
            for (std::uint64_t i = mid; i < mid + lo; ++i) {
              double* a = d + (i | op.bit) * stride;
              std::swap_ranges(a, a + stride, a + op.target_bit * stride);
            }
        break;
      }
    }
  }
}

void require_width(std::uint32_t width, std::uint32_t max_width) {
  if (width > max_width)
    throw Error(ErrorCode::TooWide,
                "width " + std::to_string(width) + " exceeds the limit of " +
                    std::to_string(max_width));
}

}  // namespace

void apply_in_place(const Circuit& c, Eigen::Ref<Eigen::MatrixXcd> columns) {
  const std::uint64_t dim = std::uint64_t{1} << c.width();
  if (static_cast<std::uint64_t>(columns.rows()) != dim)
    throw Error(ErrorCode::DimMismatch,
                "expected " + std::to_string(dim) + " rows, got " +
                    std::to_string(columns.rows()));
  const auto ops = compile(c);
  if (columns.cols() == 1) {
    run(ops, reinterpret_cast<double*>(columns.data()), dim, 1);
    return;
  }
  // Blocks of a few columns stay in cache across all ops.
  using RowMajor =
      Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  constexpr Eigen::Index block = 8;
  RowMajor rows;
  for (Eigen::Index j = 0; j < columns.cols(); j += block) {
    const Eigen::Index w = std::min(block, columns.cols() - j);
    rows = columns.middleCols(j, w);
    run(ops, reinterpret_cast<double*>(rows.data()), dim,
        static_cast<std::uint64_t>(w));
    columns.middleCols(j, w) = rows;
  }
}

DenseUnitary circuit_unitary(const Circuit& c, std::uint32_t max_width) {
  require_width(c.width(), max_width);
  const Eigen::Index dim = Eigen::Index{1} << c.width();
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  apply_in_place(c, u);
  return u;
}

StateVector apply(const Circuit& c, const StateVector& s,
                  std::uint32_t max_width) {
  require_width(c.width(), max_width);
  StateVector out = s;
  apply_in_place(c, out);
  return out;
}

StateVector basis_state(std::uint32_t width, std::uint64_t index) {
  require_width(width, kMaxStateWidth);
  const std::uint64_t dim = std::uint64_t{1} << width;
  if (index >= dim)
    throw Error(ErrorCode::QubitOutOfRange,
                "basis index " + std::to_string(index) + " out of range");
  StateVector s = StateVector::Zero(static_cast<Eigen::Index>(dim));
  s(static_cast<Eigen::Index>(index)) = 1;
  return s;
}

DenseUnitary ideal_mc_unitary(std::uint32_t width, const QubitList& controls,
                              QubitId target, const Matrix2d& v) {
  std::set<QubitId> seen;
  std::uint64_t mask = 0;
  for (QubitId q : controls) {
    if (q.index >= width)
      throw Error(ErrorCode::QubitOutOfRange,
                  "control " + std::to_string(q.index) + " out of range");
    if (!seen.insert(q).second)
      throw Error(ErrorCode::DuplicateQubit, "repeated control");
    mask |= std::uint64_t{1} << q.index;
  }
  if (target.index >= width)
    throw Error(ErrorCode::QubitOutOfRange, "target out of range");
  if (seen.count(target))
    throw Error(ErrorCode::DuplicateQubit, "target is also a control");
  require_width(width, kMaxDenseWidth);

  const std::uint64_t dim = std::uint64_t{1} << width;
  const std::uint64_t t = std::uint64_t{1} << target.index;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & mask) != mask || (i & t)) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | t);
    u(i0, i0) = v(0, 0);
    u(i0, i1) = v(0, 1);
    u(i1, i0) = v(1, 0);
    u(i1, i1) = v(1, 1);
  }
  return u;
}

Equivalence equiv_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& w,
                        double tol) {
  if (u.rows() != w.rows() || u.cols() != w.cols())
    throw Error(ErrorCode::DimMismatch, "operands differ in shape");
  Equivalence out;
  if (w.size() == 0) {
    out.equivalent = true;
    return out;
  }
  Eigen::Index r = 0, c = 0;
  w.cwiseAbs().maxCoeff(&r, &c);
  const cd ratio = std::abs(w(r, c)) > 0 ? u(r, c) / w(r, c) : cd(1, 0);
  out.phase = std::abs(ratio) > 0 ? ratio / std::abs(ratio) : cd(1, 0);
  out.max_error = (u - out.phase * w).cwiseAbs().maxCoeff();
  out.equivalent = out.max_error < tol;
  return out;
}

}  // namespace mcsu2
