#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "patterns.hpp"

namespace permtab {

// All shapes of border length n, descending lexicographic: the single-row
// shape first, the all-empty-rows shape last. Exactly 2^(n-1) shapes for
// n >= 1, one empty shape for n = 0.
inline std::vector<FerrersShape> shapes_of_length(int n) {
    if (n < 0) throw std::invalid_argument("shapes_of_length: n must be >= 0");
    std::vector<FerrersShape> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> lens;
    for (int r = 1; r <= n; ++r) {
        lens.assign(1, n - r);
        auto rec = [&](auto&& self, int i, int prev) -> void {
            if (i == r) {
                out.emplace_back(lens);
                return;
            }
            for (int v = prev; v >= 0; --v) {
                lens.push_back(v);
                self(self, i + 1, v);
                lens.pop_back();
            }
        };
        rec(rec, 1, n - r);
    }
    return out;
}

// Every valid filling of the shape, in a fixed order: cells are decided
// column by column from the rightmost column, top to bottom inside a column,
// trying 0 before 1. Placing a 0 below a 1 makes the cell a restricted 0,
// which locks the rest of its row (everything to the left must be 0 or
// axiom 2 breaks); a column is kept only if it received a 1 (axiom 1).
template <class Fn>
inline void for_each_tableau_of_shape(const FerrersShape& s, Fn&& fn) {
    const int r = s.rows();
    const int c = s.columns();
    std::vector<std::vector<std::uint8_t>> grid(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i)
        grid[static_cast<std::size_t>(i) - 1].assign(static_cast<std::size_t>(s.row_length(i)), 0);
    if (c == 0) {
        fn(PermutationTableau(s, grid));
        return;
    }
    std::vector<std::uint8_t> row_locked(static_cast<std::size_t>(r) + 1, 0);
    auto rec = [&](auto&& self, int pos, int row, bool col_has_one) -> void {
        if (row > s.column_height(pos)) {
            if (!col_has_one) return;
            if (pos == 1) {
                fn(PermutationTableau(s, grid));
                return;
            }
            self(self, pos - 1, 1, false);
            return;
        }
        auto& cell = grid[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(pos) - 1];
        const bool locks = col_has_one && !row_locked[static_cast<std::size_t>(row)];
        cell = 0;
        if (locks) row_locked[static_cast<std::size_t>(row)] = 1;
        self(self, pos, row + 1, col_has_one);
        if (locks) row_locked[static_cast<std::size_t>(row)] = 0;
        if (!row_locked[static_cast<std::size_t>(row)]) {
            cell = 1;
            self(self, pos, row + 1, true);
            cell = 0;
        }
    };
    rec(rec, c, 1, false);
}

inline std::vector<PermutationTableau> tableaux_of_shape(const FerrersShape& s) {
    std::vector<PermutationTableau> out;
    for_each_tableau_of_shape(s, [&](const PermutationTableau& t) { out.push_back(t); });
    return out;
}

template <class Fn>
inline void for_each_tableau(int n, Fn&& fn) {
    for (const auto& s : shapes_of_length(n)) for_each_tableau_of_shape(s, fn);
}

// Applies fn to every shape of length n on `jobs` threads and returns the
// results in shape order, so any fold over them is independent of the worker
// count. fn must be safe to call concurrently on distinct shapes.
template <class Fn>
inline auto map_shapes(int n, int jobs, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, const FerrersShape&>> {
    using R = std::invoke_result_t<Fn&, const FerrersShape&>;
    const auto shapes = shapes_of_length(n);
    std::vector<R> out(shapes.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < shapes.size(); ++i) out[i] = fn(shapes[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= shapes.size()) return;
            try {
                out[i] = fn(shapes[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

inline std::uint64_t count_tableaux(int n, int jobs = 1) {
    const auto counts = map_shapes(n, jobs, [](const FerrersShape& s) {
        std::uint64_t c = 0;
        for_each_tableau_of_shape(s, [&](const PermutationTableau&) { ++c; });
        return c;
    });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

struct StatisticDistribution {
    std::map<std::int64_t, std::uint64_t> histogram;
    std::uint64_t total = 0;

    bool operator==(const StatisticDistribution&) const = default;
};

// Histogram of inv over every tableau of length n.
inline StatisticDistribution inv_distribution(int n, int jobs = 1) {
    using Hist = std::map<std::int64_t, std::uint64_t>;
    const auto parts = map_shapes(n, jobs, [](const FerrersShape& s) {
        Hist h;
        for_each_tableau_of_shape(s, [&](const PermutationTableau& t) { ++h[inv(to_alternative(t))]; });
        return h;
    });
    StatisticDistribution d;
    for (const auto& h : parts)
        for (const auto& [k, v] : h) {
            d.histogram[k] += v;
            d.total += v;
        }
    return d;
}

// Histogram of the pattern count over every permutation of {1..n}.
inline StatisticDistribution pattern_distribution(int n, const DashedPattern& p) {
    if (n < 0) throw std::invalid_argument("pattern_distribution: n must be >= 0");
    StatisticDistribution d;
    Permutation pi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pi[static_cast<std::size_t>(i)] = i + 1;
    do {
        ++d.histogram[static_cast<std::int64_t>(count_occurrences(p, pi))];
        ++d.total;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return d;
}

// Named statistics for the command line: "inv" or "pattern:<dashed pattern>".
inline StatisticDistribution distribution(int n, const std::string& statistic, int jobs = 1) {
    if (statistic == "inv") return inv_distribution(n, jobs);
    if (statistic.rfind("pattern:", 0) == 0) return pattern_distribution(n, parse_pattern(statistic.substr(8)));
    throw std::invalid_argument("distribution: unknown statistic '" + statistic +
                                "' (expected \"inv\" or \"pattern:<pattern>\")");
}

}  // namespace permtab
