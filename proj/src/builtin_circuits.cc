// Copyright 2026 The Flagkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flagkit/circuit.h"

namespace flagkit {

namespace {

// Mirrors assets/magic_distillation.qc byte for byte.
constexpr std::string_view kMagicDistillation = R"qc(# Magic-state distillation benchmark: T layer, then a decoder for the
# five-qubit code (stabilizers XZZXI cyclic -> Z0..Z3, logical ZZZZZ -> Z4).
qubits 5
t 0
t 1
t 2
t 3
t 4
cnot 3 0
cnot 0 3
cnot 3 0
h 0
h 1
h 4
cnot 0 1
cnot 0 4
h 1
h 3
cnot 1 0
cnot 2 0
cnot 3 0
cnot 4 1
cnot 1 4
cnot 4 1
s 1
h 1
s 1
s 4
h 4
cnot 2 1
cnot 4 1
cnot 3 2
cnot 2 3
cnot 3 2
h 3
h 4
cnot 3 2
cnot 4 2
cnot 4 3
cnot 3 4
cnot 4 3
s 3
h 3
h 4
h 3
s 3
s 3
h 3
s 4
s 4
)qc";

}  // namespace

std::string_view magic_distillation_source() {
    return kMagicDistillation;
}

}  // namespace flagkit
