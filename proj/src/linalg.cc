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

#include "flagkit/linalg.h"

#include <algorithm>
#include <cmath>

#include "flagkit/error.h"

namespace flagkit {

CMatrix::CMatrix(size_t rows, size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("matrix data size does not match shape");
    }
}

CMatrix CMatrix::identity(size_t dim) {
    CMatrix m(dim, dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

CMatrix CMatrix::operator*(const CMatrix &other) const {
    if (cols_ != other.rows_) {
        throw DimensionError("matrix product shape mismatch");
    }
    CMatrix r(rows_, other.cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t k = 0; k < cols_; k++) {
            Complex a = (*this)(i, k);
            if (a == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < other.cols_; j++) {
                r(i, j) += a * other(k, j);
            }
        }
    }
    return r;
}

CMatrix &CMatrix::operator*=(Complex s) {
    for (auto &v : data_) {
        v *= s;
    }
    return *this;
}

double CMatrix::max_abs_diff(const CMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("matrix shape mismatch");
    }
    double d = 0;
    for (size_t k = 0; k < data_.size(); k++) {
        d = std::max(d, std::abs(data_[k] - other.data_[k]));
    }
    return d;
}

bool CMatrix::is_unitary(double tol) const {
    if (rows_ != cols_) {
        return false;
    }
    return (adjoint() * *this).max_abs_diff(identity(rows_)) <= tol;
}

bool equal_up_to_global_phase(const CMatrix &a, const CMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    // Anchor the phase on the largest entry of b.
    size_t best = 0;
    for (size_t k = 0; k < b.data().size(); k++) {
        if (std::abs(b.data()[k]) > std::abs(b.data()[best])) {
            best = k;
        }
    }
    Complex bb = b.data()[best];
    if (std::abs(bb) < tol) {
        return a.max_abs_diff(b) <= tol;
    }
    Complex ratio = a.data()[best] / bb;
    if (std::abs(std::abs(ratio) - 1) > tol) {
        return false;
    }
    ratio /= std::abs(ratio);
    for (size_t k = 0; k < a.data().size(); k++) {
        if (std::abs(a.data()[k] - ratio * b.data()[k]) > tol) {
            return false;
        }
    }
    return true;
}

void apply_local(std::span<Complex> amps, const CMatrix &local, std::span<const size_t> qubits) {
    size_t k = qubits.size();
    size_t local_dim = size_t{1} << k;
    if (local.rows() != local_dim || local.cols() != local_dim) {
        throw DimensionError("local operator does not match qubit count");
    }
    size_t mask = 0;
    for (size_t q : qubits) {
        mask |= size_t{1} << q;
    }
    std::vector<size_t> offsets(local_dim, 0);
    for (size_t l = 0; l < local_dim; l++) {
        for (size_t j = 0; j < k; j++) {
            if ((l >> j) & 1) {
                offsets[l] |= size_t{1} << qubits[j];
            }
        }
    }
    std::vector<Complex> in(local_dim);
    for (size_t base = 0; base < amps.size(); base++) {
        if (base & mask) {
            continue;
        }
        for (size_t l = 0; l < local_dim; l++) {
            in[l] = amps[base | offsets[l]];
        }
        for (size_t r = 0; r < local_dim; r++) {
            Complex acc = 0;
            for (size_t c = 0; c < local_dim; c++) {
                acc += local(r, c) * in[c];
            }
            amps[base | offsets[r]] = acc;
        }
    }
}

}  // namespace flagkit
