#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "alternative.hpp"

namespace permtab {

// A tableau is L-Bell when every topmost 1 is also the leftmost 1 of its
// row. Requires a valid tableau.
inline bool is_lbell(const PermutationTableau& t) {
    const auto& s = t.shape();
    for (int pos = 1; pos <= s.columns(); ++pos) {
        int top = 0;
        for (int row = 1; row <= s.column_height(pos); ++row)
            if (t.cell(row, pos)) {
                top = row;
                break;
            }
        if (top == 0) throw std::invalid_argument("is_lbell: column without a 1 (axiom 1)");
        for (int left = 1; left < pos; ++left)
            if (left <= s.row_length(top) && t.cell(top, left)) return false;
    }
    return true;
}

// Dot-level characterization of the inversion-free tableaux, evaluated on
// the dot diagram alone: (1) no row holds two black dots; (2) no black dot
// has, strictly to its left in its row, a cell that sits strictly below its
// own column's black dot and strictly right of the row's white dot (such a
// cell reconstructs to a 1, so the black dot would not be a leftmost 1).
// Condition (2) must look arbitrarily far left and must skip cells at or
// left of the white dot: the cell immediately left of a black dot can be
// innocent while a far one is not, and cells left of the white dot
// reconstruct to 0 no matter what is above them.
inline bool structural_noinv_check(const AlternativeRepresentation& a) {
    const auto& s = a.shape();
    std::vector<int> blacks_in_row(static_cast<std::size_t>(s.rows()) + 1, 0);
    for (int pos = 1; pos <= s.columns(); ++pos)
        if (++blacks_in_row[static_cast<std::size_t>(a.black_row_geo(pos))] > 1) return false;
    for (int pos = 1; pos <= s.columns(); ++pos) {
        const int row = a.black_row_geo(pos);
        const int wpos = a.white_pos_geo(row);  // 0 when the row has no white dot
        for (int left = wpos + 1; left < pos; ++left)
            if (a.black_row_geo(left) < row) return false;
    }
    return true;
}

// B_0..B_m by the Bell triangle: each row starts with the previous row's
// last entry, every other entry adds its left neighbour and the entry above
// it. Values through m = 20 fit comfortably in 64 bits.
inline std::vector<std::uint64_t> bell_numbers(int m) {
    if (m < 0 || m > 20) throw std::invalid_argument("bell_numbers: m must be in 0..20");
    std::vector<std::uint64_t> bell{1};  // B_0
    std::vector<std::uint64_t> row{1};   // first triangle row; its last entry is B_1
    if (m >= 1) bell.push_back(row.back());
    for (int i = 2; i <= m; ++i) {
        std::vector<std::uint64_t> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
        bell.push_back(row.back());
    }
    return bell;
}

}  // namespace permtab
