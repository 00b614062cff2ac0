#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "io.hpp"
#include "lbell.hpp"

namespace permtab {

// Self-check suites behind the `verify` command. Scope caps keep every check
// at desk scale: counting checks run up to n = 8, per-tableau checks up to
// n = 7, and the two pairwise suites (path order vs. position, dot-form
// uniqueness) up to n = 6. A requested n above a cap is clamped and the
// effective scope reported.

struct CheckResult {
    std::string name;
    int scope_n = 0;
    bool pass = false;
    std::string detail;  // counterexample when failing, summary counts when passing
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::chrono::milliseconds elapsed{0};

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline std::string report_tsv(const VerificationReport& rep) {
    std::string out;
    for (const auto& c : rep.checks)
        out += c.name + '\t' + std::to_string(c.scope_n) + '\t' + (c.pass ? "PASS" : "FAIL") + '\t' +
               c.detail + '\n';
    return out;
}

namespace golden {

// Length-11 tableau with an empty row; its rightmost restricted 0s sit at
// (5,9) and (8,10) and its unrestricted rows are 1, 2, 7, 11.
inline constexpr const char* length11 =
    "11\n5,5,3,2,2,0\n01000\n01011\n001\n11\n01\n-\n";

// Length-12 tableau whose dot form feeds the two path examples
// (6,5,12) and (7,10,4,11).
inline constexpr const char* paths_tableau =
    "12\n6,5,5,5,4,3\n110001\n01000\n00110\n01111\n0001\n000\n";
inline constexpr const char* paths_alternative =
    "12\n6,5,5,5,4,3\n"
    "B 1 2\nB 5 6\nB 4 8\nB 4 10\nB 1 11\nB 1 12\n"
    "W 3 12\nW 4 11\nW 5 12\nW 7 10\nW 9 10\n";

// One-row tableau with w_2 = 1, inv = 1, image (3,2,1).
inline constexpr const char* inv_one = "3\n2\n11\n";

// Three-row tableau with w_3 = 2, w_5 = 0, inv = 2, image (4,5,1,3,2).
inline constexpr const char* inv_two = "5\n2,2,1\n10\n11\n0\n";

}  // namespace golden

namespace detail {

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

inline std::string compact(const PermutationTableau& t) { return one_line(write_tableau(t)); }

inline std::string fmt_hist(const std::map<std::int64_t, std::uint64_t>& h) {
    std::string out;
    for (const auto& [k, v] : h) {
        if (!out.empty()) out += ' ';
        out += std::to_string(k) + ':' + std::to_string(v);
    }
    return out;
}

inline std::string fmt_perm(const Permutation& p) { return write_permutation(p); }

// Deterministic across platforms, unlike std::uniform_int_distribution.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }
    Permutation permutation(int n) {
        Permutation p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i)
            std::swap(p[static_cast<std::size_t>(i)],
                      p[static_cast<std::size_t>(below(static_cast<std::uint64_t>(i) + 1))]);
        return p;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace detail

namespace checks {

inline CheckResult count(int n, int jobs) {
    CheckResult res{"count", std::min(n, 8), true, ""};
    std::string counts;
    for (int m = 0; m <= res.scope_n; ++m) {
        const std::uint64_t got = count_tableaux(m, jobs);
        const std::uint64_t want = detail::factorial(m);
        if (!counts.empty()) counts += ',';
        counts += std::to_string(got);
        if (got != want) {
            res.pass = false;
            res.detail = "n=" + std::to_string(m) + " expected=" + std::to_string(want) +
                         " actual=" + std::to_string(got);
            return res;
        }
    }
    res.detail = "counts=" + counts;
    return res;
}

inline CheckResult theorem(int n, int jobs) {
    CheckResult res{"theorem", std::min(n, 7), true, ""};
    const DashedPattern p321 = parse_pattern("3-21");
    const DashedPattern p32_1 = parse_pattern("32-1");
    std::uint64_t checked = 0;
    for (int m = 0; m <= res.scope_n && res.pass; ++m) {
        struct Part {
            std::uint64_t count = 0;
            std::string cex;
        };
        const auto parts = map_shapes(m, jobs, [&](const FerrersShape& s) {
            Part part;
            for_each_tableau_of_shape(s, [&](const PermutationTableau& t) {
                ++part.count;
                if (!part.cex.empty()) return;
                const auto a = to_alternative(t);
                const auto v = static_cast<std::uint64_t>(inv(a));
                const Permutation pi = xi(a);
                const auto f1 = count_occurrences(p321, pi);
                const auto f2 = count_occurrences(p32_1, reverse_complement(pi));
                if (v != f1 || v != f2)
                    part.cex = detail::compact(t) + " inv=" + std::to_string(v) +
                               " f3-21=" + std::to_string(f1) + " f32-1(rc)=" + std::to_string(f2);
            });
            return part;
        });
        for (const auto& part : parts) {
            checked += part.count;
            if (!part.cex.empty() && res.pass) {
                res.pass = false;
                res.detail = part.cex;
            }
        }
    }
    if (res.pass) res.detail = "tableaux=" + std::to_string(checked);
    return res;
}

inline CheckResult distribution_match(int n, int jobs) {
    CheckResult res{"distribution", std::min(n, 7), true, ""};
    const DashedPattern p32_1 = parse_pattern("32-1");
    for (int m = 0; m <= res.scope_n; ++m) {
        const auto by_inv = inv_distribution(m, jobs);
        const auto by_pattern = pattern_distribution(m, p32_1);
        if (by_inv.histogram != by_pattern.histogram) {
            res.pass = false;
            res.detail = "n=" + std::to_string(m) + " inv={" + detail::fmt_hist(by_inv.histogram) +
                         "} f32-1={" + detail::fmt_hist(by_pattern.histogram) + "}";
            return res;
        }
    }
    res.detail = "n=0.." + std::to_string(res.scope_n);
    return res;
}

inline CheckResult bell_counts(int n, int jobs) {
    CheckResult res{"bell", std::min(n, 8), true, ""};
    const auto bell = bell_numbers(res.scope_n);
    const DashedPattern p32_1 = parse_pattern("32-1");
    std::string values;
    for (int m = 0; m <= res.scope_n; ++m) {
        const auto parts = map_shapes(m, jobs, [&](const FerrersShape& s) {
            std::pair<std::uint64_t, std::uint64_t> c{0, 0};  // inv-free, L-Bell
            for_each_tableau_of_shape(s, [&](const PermutationTableau& t) {
                if (inv(to_alternative(t)) == 0) ++c.first;
                if (is_lbell(t)) ++c.second;
            });
            return c;
        });
        std::uint64_t inv_free = 0, lbell = 0;
        for (const auto& [a, b] : parts) {
            inv_free += a;
            lbell += b;
        }
        std::uint64_t avoiders = 0;
        {
            Permutation pi(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) pi[static_cast<std::size_t>(i)] = i + 1;
            do {
                if (count_occurrences(p32_1, pi) == 0) ++avoiders;
            } while (std::next_permutation(pi.begin(), pi.end()));
        }
        const std::uint64_t want = bell[static_cast<std::size_t>(m)];
        if (inv_free != want || lbell != want || avoiders != want) {
            res.pass = false;
            res.detail = "n=" + std::to_string(m) + " inv0=" + std::to_string(inv_free) + " lbell=" +
                         std::to_string(lbell) + " avoiders=" + std::to_string(avoiders) +
                         " bell=" + std::to_string(want);
            return res;
        }
        if (!values.empty()) values += ',';
        values += std::to_string(inv_free);
    }
    res.detail = "bell=" + values;
    return res;
}

inline CheckResult lbell_equivalence(int n, int jobs) {
    CheckResult res{"lbell", std::min(n, 7), true, ""};
    std::uint64_t checked = 0;
    for (int m = 0; m <= res.scope_n && res.pass; ++m) {
        const auto parts = map_shapes(m, jobs, [&](const FerrersShape& s) {
            std::pair<std::uint64_t, std::string> part{0, ""};
            for_each_tableau_of_shape(s, [&](const PermutationTableau& t) {
                ++part.first;
                if (!part.second.empty()) return;
                const auto a = to_alternative(t);
                const bool by_inv = inv(a) == 0;
                const bool by_cells = is_lbell(t);
                const bool by_dots = structural_noinv_check(a);
                if (by_inv != by_cells || by_inv != by_dots)
                    part.second = detail::compact(t) + " inv0=" + (by_inv ? "1" : "0") + " lbell=" +
                                  (by_cells ? "1" : "0") + " structural=" + (by_dots ? "1" : "0");
            });
            return part;
        });
        for (const auto& [cnt, cex] : parts) {
            checked += cnt;
            if (!cex.empty() && res.pass) {
                res.pass = false;
                res.detail = cex;
            }
        }
    }
    if (res.pass) res.detail = "tableaux=" + std::to_string(checked);
    return res;
}

// Per-tableau predicate checks sharing one driver.
template <class Pred>
inline CheckResult per_tableau(const std::string& name, int scope, int jobs, Pred&& pred) {
    CheckResult res{name, scope, true, ""};
    std::uint64_t checked = 0;
    for (int m = 0; m <= scope && res.pass; ++m) {
        const auto parts = map_shapes(m, jobs, [&](const FerrersShape& s) {
            std::pair<std::uint64_t, std::string> part{0, ""};
            for_each_tableau_of_shape(s, [&](const PermutationTableau& t) {
                ++part.first;
                if (part.second.empty()) part.second = pred(t);  // empty = ok
            });
            return part;
        });
        for (const auto& [cnt, cex] : parts) {
            checked += cnt;
            if (!cex.empty() && res.pass) {
                res.pass = false;
                res.detail = cex;
            }
        }
    }
    if (res.pass) res.detail = "tableaux=" + std::to_string(checked);
    return res;
}

inline CheckResult lemma_descent(int n, int jobs) {
    return per_tableau("lemma-descent", std::min(n, 7), jobs, [](const PermutationTableau& t) -> std::string {
        if (descent_column_check(to_alternative(t))) return "";
        return detail::compact(t);
    });
}

inline CheckResult lemma_subsequence(int n, int jobs) {
    return per_tableau("lemma-subsequence", std::min(n, 6), jobs,
                       [](const PermutationTableau& t) -> std::string {
                           const auto a = to_alternative(t);
                           const Permutation pi = xi(a);
                           std::vector<int> pos(pi.size() + 1, 0);
                           for (std::size_t i = 0; i < pi.size(); ++i)
                               pos[static_cast<std::size_t>(pi[i])] = static_cast<int>(i);
                           for (int d : dot_labels(a)) {
                               const auto path = alternating_path(a, d);
                               for (std::size_t i = 0; i + 1 < path.labels.size(); ++i)
                                   if (pos[static_cast<std::size_t>(path.labels[i])] >=
                                       pos[static_cast<std::size_t>(path.labels[i + 1])])
                                       return detail::compact(t) + " path-of=" + std::to_string(d);
                           }
                           return "";
                       });
}

inline CheckResult lemma_order(int n, int jobs) {
    return per_tableau("lemma-order", std::min(n, 6), jobs, [](const PermutationTableau& t) -> std::string {
        const auto a = to_alternative(t);
        const Permutation pi = xi(a);
        std::vector<int> pos(pi.size() + 1, 0);
        for (std::size_t i = 0; i < pi.size(); ++i) pos[static_cast<std::size_t>(pi[i])] = static_cast<int>(i);
        const auto dots = dot_labels(a);
        std::vector<AlternatingPath> path_of(pi.size() + 1);
        for (int d : dots) path_of[static_cast<std::size_t>(d)] = alternating_path(a, d);
        for (std::size_t x = 0; x < dots.size(); ++x)
            for (std::size_t y = x + 1; y < dots.size(); ++y) {
                const int i = dots[x], j = dots[y];
                const auto o = compare_paths(a, path_of[static_cast<std::size_t>(i)],
                                             path_of[static_cast<std::size_t>(j)]);
                const bool left = pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)];
                const bool expect = (o == PathOrder::less || o == PathOrder::p_contains_q);
                if (left != expect)
                    return detail::compact(t) + " pair=(" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        return "";
    });
}

inline CheckResult oracle(std::uint64_t seed) {
    CheckResult res{"oracle", 10, true, ""};
    const char* names[] = {"32-1", "3-21", "31-2", "2-31", "1-32", "21-3"};
    std::vector<DashedPattern> pats;
    for (const char* s : names) pats.push_back(parse_pattern(s));
    detail::SplitRng rng(seed);
    std::uint64_t trials = 0;
    for (int s = 0; s < 1000; ++s) {
        const int m = 1 + static_cast<int>(rng.below(10));
        const Permutation pi = rng.permutation(m);
        for (std::size_t pi_idx = 0; pi_idx < pats.size(); ++pi_idx) {
            const auto fast = count_occurrences(pats[pi_idx], pi);
            const auto slow = oracle_count(pats[pi_idx], pi);
            ++trials;
            if (fast != slow) {
                res.pass = false;
                res.detail = std::string("pattern=") + names[pi_idx] + " perm=" + detail::fmt_perm(pi) +
                             " fast=" + std::to_string(fast) + " oracle=" + std::to_string(slow);
                return res;
            }
        }
    }
    res.detail = "trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);
    return res;
}

inline CheckResult roundtrip(int n, int jobs) {
    return per_tableau("roundtrip", std::min(n, 7), jobs, [](const PermutationTableau& t) -> std::string {
        try {
            if (reconstruct(to_alternative(t)) == t) return "";
            return detail::compact(t) + " reconstruct-differs";
        } catch (const std::exception& e) {
            return detail::compact(t) + " reconstruct-threw: " + e.what();
        }
    });
}

inline CheckResult uniqueness(int n) {
    CheckResult res{"uniqueness", std::min(n, 6), true, ""};
    for (int m = 0; m <= res.scope_n; ++m) {
        std::set<std::string> seen;
        std::uint64_t total = 0;
        for_each_tableau(m, [&](const PermutationTableau& t) {
            ++total;
            seen.insert(write_alternative(to_alternative(t)));
        });
        if (seen.size() != total) {
            res.pass = false;
            res.detail = "n=" + std::to_string(m) + " tableaux=" + std::to_string(total) +
                         " distinct-dot-forms=" + std::to_string(seen.size());
            return res;
        }
    }
    res.detail = "n=0.." + std::to_string(res.scope_n);
    return res;
}

inline CheckResult golden_examples() {
    CheckResult res{"golden", 0, true, ""};
    auto fail = [&](const std::string& msg) {
        res.pass = false;
        res.detail = msg;
        return res;
    };
    try {
        {
            const auto t = parse_tableau(golden::length11);
            if (!validate(t).ok()) return fail("length11: not a valid tableau");
            const auto cls = classify_cells(t);
            const std::vector<std::pair<int, int>> rr{{5, 9}, {8, 10}};
            if (cls.rightmost_restricted_zeros() != rr) return fail("length11: rightmost restricted 0s differ");
            const std::vector<int> unres{1, 2, 7, 11};
            if (cls.unrestricted_rows() != unres) return fail("length11: unrestricted rows differ");
        }
        {
            const auto t = parse_tableau(golden::paths_tableau);
            const auto a = parse_alternative(golden::paths_alternative);
            if (!(to_alternative(t) == a)) return fail("paths: dot form of the tableau differs");
            if (!(reconstruct(a) == t)) return fail("paths: reconstruction differs");
            if (alternating_path(a, 6).labels != std::vector<int>{6, 5, 12})
                return fail("paths: path from column 6 differs");
            if (alternating_path(a, 7).labels != std::vector<int>{7, 10, 4, 11})
                return fail("paths: path from row 7 differs");
        }
        {
            const auto a = to_alternative(parse_tableau(golden::inv_one));
            if (w(a, 2) != 1 || w(a, 3) != 0 || inv(a) != 1) return fail("inv-one: weights differ");
            if (xi(a) != Permutation{3, 2, 1}) return fail("inv-one: image differs");
        }
        {
            const auto a = to_alternative(parse_tableau(golden::inv_two));
            if (w(a, 3) != 2 || w(a, 5) != 0 || inv(a) != 2) return fail("inv-two: weights differ");
            if (xi(a) != Permutation{4, 5, 1, 3, 2}) return fail("inv-two: image differs");
            if (a.white_dots() != std::vector<std::pair<int, int>>{{4, 5}})
                return fail("inv-two: white dots differ");
            if (a.unrestricted_row_labels() != std::vector<int>{1, 2})
                return fail("inv-two: unrestricted rows differ");
        }
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
    res.detail = "examples=4";
    return res;
}

}  // namespace checks

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"count",  "theorem", "distribution", "bell",  "lbell",
                                                "lemmas", "oracle",  "roundtrip",    "golden"};
    return names;
}

// Runs the named check suites (or all of them) at scope n. Throws on n
// outside 0..8 or an unknown name.
inline VerificationReport run_checks(int n, std::vector<std::string> names, int jobs = 1,
                                     std::uint64_t seed = 0) {
    if (n < 0 || n > 8) throw std::invalid_argument("verify: n must be in 0..8");
    if (jobs < 1) jobs = 1;
    std::set<std::string> want;
    bool all = names.empty();
    for (const auto& name : names) {
        if (name == "all") {
            all = true;
            continue;
        }
        bool known = false;
        for (const auto& k : check_names()) known = known || k == name;
        if (!known) throw std::invalid_argument("verify: unknown check '" + name + "'");
        want.insert(name);
    }
    auto selected = [&](const char* name) { return all || want.count(name) > 0; };

    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    if (selected("count")) rep.checks.push_back(checks::count(n, jobs));
    if (selected("theorem")) rep.checks.push_back(checks::theorem(n, jobs));
    if (selected("distribution")) rep.checks.push_back(checks::distribution_match(n, jobs));
    if (selected("bell")) rep.checks.push_back(checks::bell_counts(n, jobs));
    if (selected("lbell")) rep.checks.push_back(checks::lbell_equivalence(n, jobs));
    if (selected("lemmas")) {
        rep.checks.push_back(checks::lemma_descent(n, jobs));
        rep.checks.push_back(checks::lemma_subsequence(n, jobs));
        rep.checks.push_back(checks::lemma_order(n, jobs));
    }
    if (selected("oracle")) rep.checks.push_back(checks::oracle(seed));
    if (selected("roundtrip")) {
        rep.checks.push_back(checks::roundtrip(n, jobs));
        rep.checks.push_back(checks::uniqueness(n));
    }
    if (selected("golden")) rep.checks.push_back(checks::golden_examples());
    rep.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return rep;
}

}  // namespace permtab
