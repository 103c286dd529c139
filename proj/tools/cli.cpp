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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "mcsu2/decompose.hpp"
#include "mcsu2/sim.hpp"
#include "mcsu2/stateprep.hpp"

namespace mcsu2::cli {

namespace {

// Input problems the user can fix; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GateOptions {
  std::string gate = "rz";
  double angle = 0;
  std::vector<std::string> entries;
  std::uint32_t controls = 2;
  std::string method = "auto";
};

void add_gate_options(CLI::App* sub, GateOptions& g) {
  sub->add_option("--gate", g.gate, "rx, ry, rz or su2")
      ->check(CLI::IsMember({"rx", "ry", "rz", "su2"}));
  sub->add_option("--angle", g.angle, "rotation angle in radians");
  sub->add_option("--entries", g.entries,
                  "su2 entries: eight reals, re/im interleaved, row-major")
      ->expected(1, 8);
  sub->add_option("--method", g.method,
                  "auto, real-off-diag, real-main-diag, general, baseline");
}

Matrix2d parse_entries(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) joined += t + ' ';
  std::istringstream is(joined);
  is.imbue(std::locale::classic());
  std::vector<double> xs;
  for (double x; is >> x;) xs.push_back(x);
  if (!is.eof() || xs.size() != 8)
    throw UsageError("--entries needs exactly eight real numbers");
  Matrix2d m;
  m << std::complex<double>(xs[0], xs[1]), std::complex<double>(xs[2], xs[3]),
      std::complex<double>(xs[4], xs[5]), std::complex<double>(xs[6], xs[7]);
  return m;
}

Matrix2d gate_matrix(const GateOptions& g) {
  if (g.gate == "rx") return gates::rx(g.angle);
  if (g.gate == "ry") return gates::ry(g.angle);
  if (g.gate == "rz") return gates::rz(g.angle);
  if (g.entries.empty()) throw UsageError("--gate su2 requires --entries");
  const Matrix2d m = parse_entries(g.entries);
  if (!is_unitary(m))
    throw UsageError("matrix is not unitary (max |M M^dagger - I| = " +
                     std::to_string((m * m.adjoint() - Matrix2d::Identity())
                                        .cwiseAbs()
                                        .maxCoeff()) +
                     ")");
  if (!is_su2(m))
    throw UsageError("matrix determinant is not 1 (|det - 1| = " +
                     std::to_string(std::abs(m.determinant() - 1.0)) + ")");
  return m;
}

Method parse_method_or_throw(const std::string& text) {
  if (auto m = parse_method(text)) return *m;
  throw UsageError("unknown method '" + text + "'");
}

// Controls are qubits 0 .. k-1 and the target is qubit k.
Decomposition build(const GateOptions& g, std::uint32_t k) {
  const Method method = parse_method_or_throw(g.method);
  const QubitList controls = qubit_range(0, k);
  const QubitId target{k};
  if (method == Method::Auto) {
    if (g.gate == "rx") return mc_rx(controls, target, g.angle);
    if (g.gate == "ry") return mc_ry(controls, target, g.angle);
    if (g.gate == "rz") return mc_rz(controls, target, g.angle);
  }
  return decompose({controls, target, gate_matrix(g), method, k + 1});
}

void print_report(std::ostream& out, const DecompositionReport& r,
                  std::uint32_t k) {
  out << "method: " << to_string(r.method_used) << '\n'
      << "controls: " << k << '\n'
      << "width: " << k + 1 << '\n'
      << "cnot_count: " << r.cnot_count << '\n'
      << "depth: " << r.depth << '\n';
  if (r.bound)
    out << "bound: " << *r.bound << " (" << r.bound_formula << ", "
        << (r.bound_asserted ? "asserted" : "not asserted at this n")
        << ")\n";
}

// Opens `path` for writing; "-" selects `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path == "-") return;
    file_.open(path);
    if (!file_) throw UsageError("cannot write to '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_decompose(const GateOptions& g, std::ostream& out) {
  print_report(out, build(g, g.controls).report, g.controls);
  return kExitOk;
}

struct VerifyOptions {
  std::uint32_t min_width = 3;
  std::uint32_t max_width = 10;
  std::uint32_t max_dense_width = kMaxDenseWidth;
  double tol = 1e-9;
  bool corrupt = false;
};

int cmd_verify(const GateOptions& g, const VerifyOptions& v,
               std::ostream& out) {
  if (v.min_width < 1 || v.min_width > v.max_width)
    throw UsageError("empty or invalid width range");
  if (v.max_width > v.max_dense_width)
    throw Error(ErrorCode::TooWide,
                "width " + std::to_string(v.max_width) +
                    " exceeds the dense simulation limit of " +
                    std::to_string(v.max_dense_width));
  const Matrix2d m = gate_matrix(g);
  bool all_ok = true;
  out << std::scientific << std::setprecision(3);
  for (std::uint32_t n = v.min_width; n <= v.max_width; ++n) {
    const std::uint32_t k = n - 1;
    Circuit c = build(g, k).circuit;
    if (v.corrupt) c.x(QubitId{0});
    const auto e =
        equiv_phase(circuit_unitary(c, v.max_dense_width),
                    ideal_mc_unitary(n, qubit_range(0, k), {k}, m), v.tol);
    all_ok = all_ok && e.equivalent;
    out << "n=" << n << " cnots=" << c.cnot_count()
        << " residual=" << e.max_error << ' '
        << (e.equivalent ? "PASS" : "FAIL") << '\n';
  }
  out << (all_ok ? "all widths pass" : "verification failed") << '\n';
  return all_ok ? kExitOk : kExitVerifyFailed;
}

struct BenchOptions {
  std::string mode;
  std::uint32_t n_min = 6;
  std::uint32_t n_max = 12;
  std::uint32_t sparsity = 4;
  double density = 0.2;
  std::size_t seeds = 30;
  std::uint64_t seed = 7;
  std::string out = "-";
};

Matrix2d random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::complex<double> a(gauss(rng), gauss(rng));
  std::complex<double> b(gauss(rng), gauss(rng));
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  a /= norm;
  b /= norm;
  Matrix2d m;
  m << a, -std::conj(b), b, std::conj(a);
  return m;
}

void bench_mcsu2(const BenchOptions& b, std::ostream& os) {
  os << "n,rz_real_off_diag,real_main_diag,general,baseline,"
        "bound_16n_40,bound_20n_38_42,bound_28n_88_92\n";
  std::mt19937_64 rng(b.seed);
  for (std::uint32_t n = std::max(b.n_min, 2u); n <= b.n_max; ++n) {
    const std::uint32_t k = n - 1;
    const QubitList controls = qubit_range(0, k);
    const QubitId t{k};
    const Matrix2d w = random_su2(rng);
    os << n << ',' << mc_rz(controls, t, 0.7).report.cnot_count << ','
       << mc_rx(controls, t, 0.7).report.cnot_count << ','
       << mc_su2_general(controls, t, w).report.cnot_count << ','
       << mc_su2_baseline(controls, t, w).report.cnot_count << ','
       << real_diag_bound(n) << ',' << general_bound(n) << ','
       << baseline_bound(n) << '\n';
  }
}

int cmd_bench(const BenchOptions& b, std::ostream& out) {
  Sink sink(b.out, out);
  if (b.mode == "mcsu2") {
    bench_mcsu2(b, sink.get());
  } else {
    const auto rows =
        b.n_min > b.n_max
            ? std::vector<SweepRow>{}
            : benchmark_sweep(b.n_min, b.n_max, b.sparsity, b.density,
                              b.seeds, {Method::Auto, Method::Baseline});
    write_sweep_csv(sink.get(), rows);
  }
  if (!sink.get()) throw UsageError("failed writing to '" + b.out + "'");
  return kExitOk;
}

int cmd_qasm(const GateOptions& g, const std::string& path,
             std::ostream& out) {
  const auto d = build(g, g.controls);
  Sink sink(path, out);
  sink.get() << to_qasm(d.circuit);
  return kExitOk;
}

struct PrepareOptions {
  std::string input;
  std::string method = "auto";
  std::string qasm = "-";
  bool normalize = false;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& field, std::size_t line_no) {
  std::istringstream is(trim(field));
  is.imbue(std::locale::classic());
  double x;
  if (!(is >> x) || !is.eof())
    throw UsageError("line " + std::to_string(line_no) + ": '" + field +
                     "' is not a real number");
  return x;
}

std::vector<SparsePattern> read_amplitudes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::vector<SparsePattern> patterns;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 3)
      throw UsageError("line " + std::to_string(line_no) +
                       ": expected bitstring,re,im");
    const std::string bits = trim(fields[0]);
    if (bits.empty() || bits.find_first_not_of("01") != std::string::npos)
      throw UsageError("line " + std::to_string(line_no) + ": '" + bits +
                       "' is not a bitstring");
    if (!patterns.empty() && bits.size() != patterns.front().bits.size())
      throw UsageError("line " + std::to_string(line_no) +
                       ": bitstring length differs from earlier lines");
    patterns.push_back({bits, {parse_real(fields[1], line_no),
                               parse_real(fields[2], line_no)}});
  }
  if (patterns.empty()) throw UsageError("'" + path + "' has no amplitudes");
  return patterns;
}

int cmd_prepare(const PrepareOptions& p, std::ostream& out,
                std::ostream& err) {
  auto patterns = read_amplitudes(p.input);
  const auto width = static_cast<std::uint32_t>(patterns.front().bits.size() + 1);
  double norm = 0;
  for (const auto& x : patterns) norm += std::norm(x.amplitude);
  if (p.normalize && std::abs(norm - 1) > kDefaultTolerance) {
    if (!(norm > 0)) throw UsageError("all amplitudes are zero");
    err << "warning: rescaling amplitudes by 1/sqrt(" << norm << ")\n";
    for (auto& x : patterns) x.amplitude /= std::sqrt(norm);
  }
  const auto prep =
      cvo_qram_circuit(patterns, width, parse_method_or_throw(p.method));
  const StateVector prepared =
      mcsu2::apply(prep.circuit, basis_state(width, 0));
  const double fidelity =
      std::abs(target_state(patterns, width).dot(prepared));

  out << "patterns: " << patterns.size() << '\n'
      << "width: " << width << '\n'
      << "cnot_count: " << prep.report.cnot_count << '\n'
      << "depth: " << prep.report.depth << '\n'
      << "fidelity: " << std::setprecision(15) << fidelity << '\n';
  Sink sink(p.qasm, out);
  sink.get() << to_qasm(prep.circuit);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Multi-controlled SU(2) gate synthesis", "mcsu2"};
  app.require_subcommand(1);

  GateOptions gate;
  VerifyOptions verify;
  BenchOptions bench;
  PrepareOptions prep;
  std::string qasm_out = "-";

  auto* dec = app.add_subcommand("decompose", "lower a gate, print counts");
  add_gate_options(dec, gate);
  dec->add_option("--controls", gate.controls, "number of controls k");

  auto* ver = app.add_subcommand("verify", "check against the ideal unitary");
  add_gate_options(ver, gate);
  ver->add_option("--min-width", verify.min_width);
  ver->add_option("--max-width", verify.max_width);
  ver->add_option("--max-dense-width", verify.max_dense_width);
  ver->add_option("--tol", verify.tol);
  ver->add_flag("--corrupt", verify.corrupt,
                "append a stray gate to every circuit (negative control)");

  auto* ben = app.add_subcommand("bench", "CNOT-count sweeps as CSV");
  ben->add_option("mode", bench.mode, "mcsu2 or cvoqram")
      ->required()
      ->check(CLI::IsMember({"mcsu2", "cvoqram"}));
  ben->add_option("--n-min", bench.n_min);
  ben->add_option("--n-max", bench.n_max);
  ben->add_option("--sparsity", bench.sparsity, "2^s nonzero amplitudes");
  ben->add_option("--density", bench.density);
  ben->add_option("--seeds", bench.seeds);
  ben->add_option("--seed", bench.seed, "seed for the mcsu2 matrices");
  ben->add_option("--out", bench.out, "CSV path, - for stdout");

  auto* qas = app.add_subcommand("qasm", "print the lowered circuit");
  add_gate_options(qas, gate);
  qas->add_option("--controls", gate.controls);
  qas->add_option("--out", qasm_out, "QASM path, - for stdout");

  auto* pre = app.add_subcommand("prepare", "sparse state preparation");
  pre->add_option("--input", prep.input, "lines of bitstring,re,im")
      ->required();
  pre->add_option("--method", prep.method);
  pre->add_option("--qasm", prep.qasm, "QASM path, - for stdout");
  pre->add_flag("--normalize", prep.normalize,
                "rescale amplitudes to unit norm");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dec) return cmd_decompose(gate, out);
    if (*ver) return cmd_verify(gate, verify, out);
    if (*ben) return cmd_bench(bench, out);
    if (*qas) return cmd_qasm(gate, qasm_out, out);
    if (*pre) return cmd_prepare(prep, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mcsu2::cli
