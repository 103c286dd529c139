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

#include <iomanip>
#include <limits>
#include <sstream>

#include "mcsu2/circuit.hpp"

namespace mcsu2 {

std::string to_qasm(const Circuit& c) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  os << "OPENQASM 2.0;\n"
     << "include \"qelib1.inc\";\n"
     << "qreg q[" << c.width() << "];\n";
  for (const Gate& g : c.gates()) {
    if (const auto* s = std::get_if<SingleQubitGate>(&g)) {
      // u3(theta, phi, lambda) = Rz(phi) Ry(theta) Rz(lambda) up to phase.
      const auto e = zyz_angles(s->matrix);
      os << "u3(" << e.gamma << "," << e.beta << "," << e.delta << ") q["
         << s->target.index << "];\n";
    } else {
      const auto& cn = std::get<CnotGate>(g);
      os << "cx q[" << cn.control.index << "],q[" << cn.target.index
         << "];\n";
    }
  }
  return os.str();
}

}  // namespace mcsu2
