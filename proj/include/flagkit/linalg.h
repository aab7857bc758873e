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

#ifndef FLAGKIT_LINALG_H
#define FLAGKIT_LINALG_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace flagkit {

using Complex = std::complex<double>;

/// Small dense row-major complex matrix.
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    CMatrix(size_t rows, size_t cols, std::vector<Complex> data);

    static CMatrix identity(size_t dim);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    Complex &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<Complex> data() noexcept {
        return data_;
    }
    std::span<const Complex> data() const noexcept {
        return data_;
    }

    CMatrix adjoint() const;
    CMatrix operator*(const CMatrix &other) const;
    CMatrix &operator*=(Complex s);

    /// Largest entrywise absolute difference.
    double max_abs_diff(const CMatrix &other) const;
    bool is_unitary(double tol) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// True when a = e^{i phi} b for some phi, entrywise within `tol`.
bool equal_up_to_global_phase(const CMatrix &a, const CMatrix &b, double tol);

/// Applies a 2^k x 2^k matrix to `qubits` of a little-endian state vector.
/// The first listed qubit is the least significant bit of the local index.
void apply_local(std::span<Complex> amps, const CMatrix &local, std::span<const size_t> qubits);

}  // namespace flagkit

#endif
