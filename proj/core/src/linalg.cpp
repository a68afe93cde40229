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
#include "mmcr/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace mmcr
{

Complex normalize_column_phase(Eigen::Ref<ComplexVector> column)
{
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < column.size(); ++i)
    {
        const double mag = std::abs(column(i));
        if (mag > best_mag)
        {
            best_mag = mag;
            best = i;
        }
    }
    if (best_mag <= 0.0)
        return {1.0, 0.0};
    const Complex rot = std::conj(column(best)) / best_mag;
    column *= rot;
    column(best) = Complex(std::abs(column(best)), 0.0);
    return rot;
}

Svd svd_full(const ComplexMatrix &a)
{
    Svd out;
    if (a.rows() == 0 || a.cols() == 0)
    {
        out.u = ComplexMatrix::Identity(a.rows(), a.rows());
        out.v = ComplexMatrix::Identity(a.cols(), a.cols());
        out.s.resize(0);
        return out;
    }

    Eigen::BDCSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.u = svd.matrixU();
    out.v = svd.matrixV();
    out.s = svd.singularValues();

    // Both Eigen SVDs sort descending; keep the contract explicit regardless.
    const auto n = out.s.size();
    for (Eigen::Index i = 1; i < n; ++i)
        if (out.s(i) > out.s(i - 1))
            throw std::logic_error("svd_full: singular values not sorted");

    for (Eigen::Index i = 0; i < out.v.cols(); ++i)
    {
        const Complex rot = normalize_column_phase(out.v.col(i));
        if (i < n)
            out.u.col(i) *= rot;
    }
    for (Eigen::Index i = n; i < out.u.cols(); ++i)
        normalize_column_phase(out.u.col(i));
    return out;
}

std::size_t numerical_rank(const Eigen::VectorXd &singular_values, double rel_tol)
{
    if (singular_values.size() == 0)
        return 0;
    const double largest = singular_values.maxCoeff();
    if (!(largest > 0.0))
        return 0;
    const double tol = rel_tol * largest;
    return static_cast<std::size_t>((singular_values.array() > tol).count());
}

ComplexMatrix vstack(const MatrixList &blocks, std::size_t cols)
{
    Eigen::Index rows = 0;
    for (const auto &b : blocks)
    {
        if (static_cast<std::size_t>(b.cols()) != cols)
            throw InvalidDimension("vstack: column count mismatch");
        rows += b.rows();
    }
    ComplexMatrix out(rows, static_cast<Eigen::Index>(cols));
    Eigen::Index r = 0;
    for (const auto &b : blocks)
    {
        out.middleRows(r, b.rows()) = b;
        r += b.rows();
    }
    return out;
}

} // namespace mmcr
