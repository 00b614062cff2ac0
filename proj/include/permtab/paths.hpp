#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alternative.hpp"

namespace permtab {

// A dot is named by one label: a black dot by its column label, a white dot
// by its row label. The alternating path from a dot follows, until it stops:
//   white dot in cell (i, j)              -> black dot of column j  (label j)
//   black dot (i, j), row i restricted    -> white dot of row i     (label i)
//   black dot (i, j), row i unrestricted  -> stop
// Cells move strictly up or strictly left at each step, so the walk is
// finite and visits no dot twice.
struct AlternatingPath {
    std::vector<int> labels;
    bool operator==(const AlternatingPath&) const = default;
};

// Cell of the dot named by `label`: (row label, column label).
inline std::pair<int, int> dot_cell(const AlternativeRepresentation& a, int label) {
    const auto& lab = a.labeling();
    if (label < 1 || label > lab.n())
        throw std::invalid_argument("dot_cell: label " + std::to_string(label) + " out of range");
    if (lab.is_column_label(label)) return {a.black_row_of_column(label), label};
    const auto col = a.white_column_of_row(label);
    if (!col) throw std::invalid_argument("dot_cell: row " + std::to_string(label) + " has no white dot");
    return {label, *col};
}

// Labels that name a dot: every column label, plus row labels of restricted
// rows. Increasing.
inline std::vector<int> dot_labels(const AlternativeRepresentation& a) {
    const auto& lab = a.labeling();
    std::vector<int> out;
    for (int l = 1; l <= lab.n(); ++l) {
        if (lab.is_column_label(l)) out.push_back(l);
        else if (a.white_column_of_row(l).has_value()) out.push_back(l);
    }
    return out;
}

inline AlternatingPath alternating_path(const AlternativeRepresentation& a, int start) {
    const auto& lab = a.labeling();
    if (start < 1 || start > lab.n())
        throw std::invalid_argument("alternating_path: label " + std::to_string(start) + " out of range 1.." +
                                    std::to_string(lab.n()));
    if (lab.is_row_label(start) && !a.white_column_of_row(start).has_value())
        throw std::invalid_argument("alternating_path: row " + std::to_string(start) +
                                    " is unrestricted, it names no dot");

    AlternatingPath path;
    int cur = start;
    for (;;) {
        path.labels.push_back(cur);
        if (lab.is_column_label(cur)) {
            const int row = a.black_row_of_column(cur);
            if (a.row_is_unrestricted(row)) break;
            cur = row;
        } else {
            cur = *a.white_column_of_row(cur);
        }
    }
    return path;
}

// Total order on distinct-start paths of one representation. Either one
// label sequence is an ending segment of the other (containment), or after
// stripping the longest common ending segment both reduced paths end at
// dots in a common row or a common column; "below" (larger row label) and
// "to the right" (smaller column label) win.
enum class PathOrder { less, greater, p_contains_q, q_contains_p };

inline PathOrder compare_paths(const AlternativeRepresentation& a, const AlternatingPath& p,
                               const AlternatingPath& q) {
    const auto& pl = p.labels;
    const auto& ql = q.labels;
    if (pl.empty() || ql.empty()) throw std::invalid_argument("compare_paths: empty path");

    if (pl.size() >= ql.size() && std::equal(ql.begin(), ql.end(), pl.end() - static_cast<long>(ql.size())))
        return PathOrder::p_contains_q;
    if (ql.size() > pl.size() && std::equal(pl.begin(), pl.end(), ql.end() - static_cast<long>(pl.size())))
        return PathOrder::q_contains_p;

    std::size_t m = 0;
    const std::size_t limit = std::min(pl.size(), ql.size());
    while (m < limit && pl[pl.size() - 1 - m] == ql[ql.size() - 1 - m]) ++m;

    const auto [pr, pc] = dot_cell(a, pl[pl.size() - 1 - m]);
    const auto [qr, qc] = dot_cell(a, ql[ql.size() - 1 - m]);
    if (pr != qr) return pr > qr ? PathOrder::greater : PathOrder::less;
    return pc < qc ? PathOrder::greater : PathOrder::less;
}

// (j, k) is an inversion when j is a column label, k > j names a dot that
// does not lie on the path of j, and the path of j exceeds the path of k.
// Pairs are emitted sorted by j, then k.
inline std::vector<std::pair<int, int>> inversions(const AlternativeRepresentation& a) {
    const auto dots = dot_labels(a);
    std::vector<AlternatingPath> path_of(static_cast<std::size_t>(a.length()) + 1);
    for (int d : dots) path_of[static_cast<std::size_t>(d)] = alternating_path(a, d);

    std::vector<std::pair<int, int>> out;
    const auto& lab = a.labeling();
    for (int j : dots) {
        if (!lab.is_column_label(j)) continue;
        const auto& pj = path_of[static_cast<std::size_t>(j)];
        const std::set<int> on_path(pj.labels.begin(), pj.labels.end());
        for (int k : dots) {
            if (k <= j || on_path.count(k)) continue;
            if (compare_paths(a, pj, path_of[static_cast<std::size_t>(k)]) == PathOrder::greater)
                out.emplace_back(j, k);
        }
    }
    return out;
}

// Number of inversions (j, k) for a fixed column label j.
inline int w(const AlternativeRepresentation& a, int column_label) {
    if (!a.labeling().is_column_label(column_label))
        throw std::invalid_argument("w: " + std::to_string(column_label) + " is not a column label");
    int count = 0;
    for (const auto& [j, k] : inversions(a)) {
        (void)k;
        if (j == column_label) ++count;
    }
    return count;
}

inline int inv(const AlternativeRepresentation& a) { return static_cast<int>(inversions(a).size()); }

}  // namespace permtab
