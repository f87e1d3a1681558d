#ifndef BFC_DET_HPP
#define BFC_DET_HPP

#include <vector>

#include "bfc/poly.hpp"

namespace bfc {

template <class C>
using PolyMatrix = std::vector<std::vector<Poly<C>>>;

namespace detail {

template <class C>
Poly<C> det_rec(const PolyMatrix<C>& m, int row, std::vector<int>& cols, const Bounds& b, const Alphabet& vars) {
    const int n = static_cast<int>(m.size());
    if (row == n) return Poly<C>(vars);
    Poly<C> out(vars);
    int sign_pos = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int col = cols[c];
        if (m[row][col].is_zero()) {
            ++sign_pos;
            continue;
        }
        cols.erase(cols.begin() + static_cast<long>(c));
        Poly<C> minor = row + 1 == n ? Poly<C>() : det_rec(m, row + 1, cols, b, vars);
        cols.insert(cols.begin() + static_cast<long>(c), col);
        Poly<C> term = row + 1 == n ? m[row][col] : mul_truncated(m[row][col], minor, b);
        if (sign_pos % 2) term = -term;
        out += term;
        ++sign_pos;
    }
    return out;
}

}  // namespace detail

/// Laplace expansion along the top row, all entries over the same alphabet `vars`.
/// Products are truncated to `b` (aligned with `vars`; empty for none).
template <class C>
Poly<C> determinant(const PolyMatrix<C>& m, const Alphabet& vars, const Bounds& b = {}) {
    if (m.empty()) throw std::invalid_argument("determinant: empty matrix has no coefficient type unit");
    for (const auto& row : m) {
        if (row.size() != m.size()) throw std::invalid_argument("determinant: matrix not square");
    }
    std::vector<int> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = static_cast<int>(i);
    return detail::det_rec(m, 0, cols, b, vars);
}

}  // namespace bfc

#endif  // BFC_DET_HPP
