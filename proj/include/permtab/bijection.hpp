#pragma once

#include <algorithm>
#include <vector>

#include "paths.hpp"

namespace permtab {

// One-line notation; a permutation of {1..n} is a vector holding each value
// exactly once.
using Permutation = std::vector<int>;

inline bool is_permutation_of_n(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v) - 1]) return false;
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
    return true;
}

// Tableau-to-permutation map. Start from the unrestricted row labels in
// increasing order, then process column labels from largest to smallest:
// insert column label j immediately left of the row label of its black dot,
// then insert the row labels of j's white dots, increasing, as a block
// immediately left of j. Every label is placed exactly once: restricted row
// labels enter with the column of their white dot, which is processed before
// any column whose black dot sits in that row.
inline Permutation xi(const AlternativeRepresentation& a) {
    Permutation seq = a.unrestricted_row_labels();
    auto cols = a.labeling().column_labels();
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        const int j = *it;
        const int i = a.black_row_of_column(j);
        auto at = std::find(seq.begin(), seq.end(), i);
        at = seq.insert(at, j);
        const auto whites = a.white_rows_of_column(j);
        seq.insert(at, whites.begin(), whites.end());
    }
    return seq;
}

// xi sends exactly the column labels to descent positions: for 1 <= i < n,
// pi_i > pi_{i+1} iff pi_i is a column label.
inline bool descent_column_check(const AlternativeRepresentation& a) {
    const Permutation pi = xi(a);
    const auto& lab = a.labeling();
    for (std::size_t i = 0; i + 1 < pi.size(); ++i)
        if ((pi[i] > pi[i + 1]) != lab.is_column_label(pi[i])) return false;
    return true;
}

}  // namespace permtab
