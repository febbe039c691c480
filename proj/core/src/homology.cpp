/*
   Copyright 2026 The riocomb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "riocomb/homology.hpp"

#include <algorithm>
#include <map>

#include "riocomb/error.hpp"

namespace riocomb {

int BoundaryMatrix::at(std::size_t row, std::size_t col) const
{
    const auto& c = columns.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, std::size_t r) { return e.first < r; });
    return it != c.end() && it->first == row ? it->second : 0;
}

std::vector<std::vector<int>> BoundaryMatrix::dense() const
{
    std::vector<std::vector<int>> out(rows, std::vector<int>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, v] : columns[j])
            out[i][j] = v;
    return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int dim)
{
    if (dim < 0 || dim > k.dimension() + 1)
        throw Error(Errc::InvalidParameters, "boundary index " + std::to_string(dim) + " outside 0.." +
                                                 std::to_string(k.dimension() + 1));
    const auto& groups = k.faces_by_dimension();
    static const std::vector<Face> empty_row{Face{}};
    static const std::vector<Face> none;
    const auto& row_faces = dim == 0 ? empty_row : groups[static_cast<std::size_t>(dim - 1)];
    const auto& col_faces = dim <= k.dimension() ? groups[static_cast<std::size_t>(dim)] : none;

    BoundaryMatrix m;
    m.k = dim;
    m.rows = row_faces.size();
    m.cols = col_faces.size();
    m.columns.resize(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        const Face& tau = col_faces[j];
        auto& column = m.columns[j];
        for (std::size_t i = 0; i < tau.size(); ++i) {
            Face sigma = tau;
            sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(i));
            const auto it = std::lower_bound(row_faces.begin(), row_faces.end(), sigma);
            column.emplace_back(static_cast<std::size_t>(it - row_faces.begin()), i % 2 == 0 ? 1 : -1);
        }
        std::sort(column.begin(), column.end());
    }
    return m;
}

namespace {

using SparseColumn = std::map<std::size_t, Integer>;

void normalize(SparseColumn& c)
{
    Integer g = 0;
    for (const auto& [r, v] : c)
        g = gcd(g, abs(v));
    if (g > 1)
        for (auto& [r, v] : c)
            v /= g;
}

} // namespace

std::size_t exact_rank(const BoundaryMatrix& m)
{
    // Reduce each column until its lowest row is not the pivot of an earlier one.
    std::map<std::size_t, SparseColumn> pivots;
    for (const auto& col : m.columns) {
        SparseColumn c;
        for (const auto& [r, v] : col)
            c.emplace(r, v);
        while (!c.empty()) {
            const auto low = std::prev(c.end());
            const auto hit = pivots.find(low->first);
            if (hit == pivots.end())
                break;
            const SparseColumn& p = hit->second;
            const Integer a = p.rbegin()->second;
            const Integer b = low->second;
            for (auto& [r, v] : c)
                v *= a;
            for (const auto& [r, v] : p) {
                auto& slot = c[r];
                slot -= b * v;
                if (slot == 0)
                    c.erase(r);
            }
            normalize(c);
        }
        if (!c.empty()) {
            const std::size_t low = c.rbegin()->first;
            pivots.emplace(low, std::move(c));
        }
    }
    return pivots.size();
}

bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper)
{
    if (lower.cols != upper.rows)
        throw Error(Errc::DimensionMismatch, "boundary maps do not compose");
    for (const auto& col : upper.columns) {
        std::map<std::size_t, long long> image;
        for (const auto& [mid, v] : col)
            for (const auto& [r, w] : lower.columns[mid])
                image[r] += static_cast<long long>(v) * w;
        if (std::any_of(image.begin(), image.end(), [](const auto& e) { return e.second != 0; }))
            return false;
    }
    return true;
}

BettiVector reduced_betti(const SimplicialComplex& k)
{
    const int d = k.dimension();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(d + 2), 0);
    for (int i = 0; i <= d + 1; ++i)
        ranks[static_cast<std::size_t>(i)] = exact_rank(boundary_matrix(k, i));
    const auto& groups = k.faces_by_dimension();
    BettiVector b;
    for (int i = 0; i <= d; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        b.entries.emplace_back(static_cast<long long>(groups[idx].size()) - static_cast<long long>(ranks[idx]) -
                               static_cast<long long>(ranks[idx + 1]));
    }
    return b;
}

Integer euler_from_betti(const BettiVector& b)
{
    Integer chi = 1;
    for (std::size_t i = 0; i < b.entries.size(); ++i)
        chi += i % 2 == 0 ? b.entries[i] : Integer(-b.entries[i]);
    return chi;
}

} // namespace riocomb
