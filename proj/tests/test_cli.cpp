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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"

namespace fs = std::filesystem;
using mcsu2::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Value of a "key: value" line.
std::string field(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  return {};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("mcsu2_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name, const std::string& contents = {}) const {
    const auto p = path_ / name;
    if (!contents.empty()) std::ofstream(p) << contents;
    return p;
  }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<long>> csv_rows(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::vector<long> row;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) row.push_back(std::stol(f));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"decompose", "--gate", "rw"}).code == 2);
  CHECK(invoke({"decompose", "--method", "fastest"}).code == 2);
}

TEST_CASE("decompose") {
  SUBCASE("rz with eight controls") {
    const auto r = invoke({"decompose", "--gate", "rz", "--angle", "0.7",
                           "--controls", "8"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "method") == "real-off-diag");
    CHECK(field(r.out, "width") == "9");
    CHECK(std::stol(field(r.out, "cnot_count")) <= 104);
    CHECK(field(r.out, "bound").rfind("104 (16n-40, asserted)", 0) == 0);
  }
  SUBCASE("zero angle") {
    const auto r = invoke({"decompose", "--gate", "ry", "--angle", "0",
                           "--controls", "5"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "cnot_count") == "0");
  }
  SUBCASE("su2 entries") {
    // i X
    const auto r = invoke({"decompose", "--gate", "su2", "--entries",
                           "0 0 0 1 0 1 0 0", "--controls", "6"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "method") == "real-main-diag");
  }
  SUBCASE("su2 entries as separate tokens") {
    const auto r =
        invoke({"decompose", "--gate", "su2", "--entries", "0", "0", "0", "1",
                "0", "1", "0", "0", "--method", "general"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "method") == "general");
  }
  SUBCASE("determinant other than one") {
    const auto r = invoke({"decompose", "--gate", "su2", "--entries",
                           "0 0 1 0 1 0 0 0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("determinant") != std::string::npos);
  }
  SUBCASE("too few entries") {
    CHECK(invoke({"decompose", "--gate", "su2", "--entries", "1 0 0 0"})
              .code == 2);
  }
  SUBCASE("method mismatch") {
    const auto r = invoke({"decompose", "--gate", "rx", "--angle", "0.3",
                           "--method", "real-off-diag"});
    CHECK(r.code == 2);
    CHECK(r.err.find("NotRealOffDiag") != std::string::npos);
  }
}

TEST_CASE("verify") {
  SUBCASE("rz sweep") {
    const auto r = invoke({"verify", "--gate", "rz", "--angle", "0.7",
                           "--min-width", "3", "--max-width", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("n=10 ") != std::string::npos);
  }
  SUBCASE("general sweep") {
    const auto r =
        invoke({"verify", "--gate", "su2", "--entries",
                "0.6 0.0 0.0 0.8 0.0 0.8 0.6 0.0", "--max-width", "7"});
    CHECK(r.code == 0);
  }
  SUBCASE("corrupted circuits fail") {
    const auto r = invoke({"verify", "--gate", "rz", "--angle", "0.7",
                           "--max-width", "5", "--corrupt"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
  }
  SUBCASE("too wide") {
    const auto r = invoke({"verify", "--max-width", "13"});
    CHECK(r.code == 2);
    CHECK(r.err.find("TooWide") != std::string::npos);
  }
}

TEST_CASE("bench") {
  TempDir dir;
  SUBCASE("mcsu2 counts stay under the bounds") {
    const auto path = dir.file("mcsu2.csv");
    const auto r = invoke({"bench", "mcsu2", "--n-min", "8", "--n-max", "16",
                           "--out", path.string()});
    REQUIRE(r.code == 0);
    const std::string text = slurp(path);
    CHECK(text.rfind("n,rz_real_off_diag,real_main_diag,general,baseline,"
                     "bound_16n_40,bound_20n_38_42,bound_28n_88_92\n",
                     0) == 0);
    const auto rows = csv_rows(text);
    REQUIRE(rows.size() == 9);
    for (const auto& row : rows) {
      CAPTURE(row[0]);
      CHECK(row[1] <= row[5]);
      CHECK(row[2] <= row[5]);
      CHECK(row[3] <= row[6]);
      CHECK(row[4] <= row[7]);
      CHECK(row[3] < row[4]);
    }
  }
  SUBCASE("byte-identical reruns") {
    const auto a = invoke({"bench", "mcsu2", "--n-min", "4", "--n-max", "9"});
    const auto b = invoke({"bench", "mcsu2", "--n-min", "4", "--n-max", "9"});
    CHECK(a.out == b.out);
  }
  SUBCASE("empty range") {
    const auto r = invoke({"bench", "mcsu2", "--n-min", "9", "--n-max", "8"});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
    const auto q = invoke({"bench", "cvoqram", "--n-min", "9", "--n-max", "8"});
    REQUIRE(q.code == 0);
    CHECK(q.out == "n,method,mean_cnots,std_cnots,seeds\n");
  }
  SUBCASE("cvoqram") {
    const auto r = invoke({"bench", "cvoqram", "--n-min", "6", "--n-max", "7",
                           "--sparsity", "2", "--density", "0.3", "--seeds",
                           "3"});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
    CHECK(r.out.find("6,auto,") != std::string::npos);
    CHECK(r.out.find("7,baseline,") != std::string::npos);
  }
  SUBCASE("unwritable path") {
    const auto r = invoke({"bench", "mcsu2", "--out",
                           (dir.file("missing") / "x.csv").string()});
    CHECK(r.code == 2);
  }
  SUBCASE("unknown mode") { CHECK(invoke({"bench", "other"}).code == 2); }
}

TEST_CASE("qasm") {
  const auto r = invoke({"qasm", "--gate", "rz", "--angle", "0.5",
                         "--controls", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("OPENQASM 2.0;\n", 0) == 0);
  CHECK(r.out.find("qreg q[4];") != std::string::npos);
  CHECK(r.out.find("cx q[") != std::string::npos);
}

TEST_CASE("prepare") {
  TempDir dir;
  SUBCASE("Bell-like pair") {
    const auto input = dir.file(
        "bell.txt",
        "# two patterns\n00,0.7071067811865476,0\n11,0.7071067811865476,0\n");
    const auto qasm = dir.file("bell.qasm");
    const auto r = invoke({"prepare", "--input", input.string(), "--qasm",
                           qasm.string()});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "patterns") == "2");
    CHECK(field(r.out, "width") == "3");
    CHECK(std::stod(field(r.out, "fidelity")) >= 1 - 1e-9);
    CHECK(slurp(qasm).rfind("OPENQASM 2.0;", 0) == 0);
  }
  SUBCASE("malformed line") {
    const auto input =
        dir.file("bad.txt", "# header\n01,0.6,0\n\n10,zero,0\n");
    const auto r = invoke({"prepare", "--input", input.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 4") != std::string::npos);
  }
  SUBCASE("bad bitstring") {
    const auto input = dir.file("bits.txt", "0x1,1,0\n");
    const auto r = invoke({"prepare", "--input", input.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 1") != std::string::npos);
  }
  SUBCASE("not normalized") {
    const auto input = dir.file("scaled.txt", "01,3,0\n10,0,4\n");
    CHECK(invoke({"prepare", "--input", input.string()}).code == 2);
    const auto r =
        invoke({"prepare", "--input", input.string(), "--normalize"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(std::stod(field(r.out, "fidelity")) >= 1 - 1e-9);
  }
  SUBCASE("missing file") {
    CHECK(invoke({"prepare", "--input", (dir.file("nope.txt")).string()})
              .code == 2);
  }
}
