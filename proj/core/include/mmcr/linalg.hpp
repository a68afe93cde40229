// SPDX-License-Identifier: Apache-2.0
//
// mmcr - hybrid precoding simulator for mmWave MIMO cognitive radio downlinks
// Copyright (C) 2026 The mmcr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#ifndef MMCR_LINALG_HPP
#define MMCR_LINALG_HPP

#include "mmcr/types.hpp"

namespace mmcr
{

// Full SVD A = U diag(s) V^H with singular values in descending order.
// Each right singular vector is rotated so that its largest-magnitude entry is
// real and positive; the paired left vector receives the same rotation, which
// leaves the factorization unchanged.
struct Svd
{
    ComplexMatrix u;  // rows x rows
    Eigen::VectorXd s; // min(rows, cols)
    ComplexMatrix v;  // cols x cols
};

Svd svd_full(const ComplexMatrix &a);

// Number of singular values above rel_tol * largest singular value.
std::size_t numerical_rank(const Eigen::VectorXd &singular_values, double rel_tol);

// Rotate the column so its largest-magnitude entry is real positive; returns the
// applied unit-modulus factor (1 for an all-zero column).
Complex normalize_column_phase(Eigen::Ref<ComplexVector> column);

// Row-wise concatenation. Column counts must agree.
ComplexMatrix vstack(const MatrixList &blocks, std::size_t cols);

} // namespace mmcr

#endif
