// Acceptance suite: one line per criterion, exit code = number of failures.
// Scopes are pinned here: counting identities run to n = 8, per-tableau
// identities to n = 7, pairwise path/uniqueness suites to n = 6, and the
// pattern-counting oracle takes 1000 seeded permutations with n <= 10.
// All comparisons are exact; there are no tolerances.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <permtab/permtab.hpp>

namespace {

using namespace permtab;

constexpr int kCountScope = 8;
constexpr int kTableauScope = 7;
constexpr int kPairScope = 6;
constexpr std::uint64_t kOracleSeed = 0;
constexpr std::uint64_t kBellEight = 4140;

int jobs() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Empty string = pass; otherwise the failure detail.
std::string from_checks(const std::vector<CheckResult>& results) {
    std::string detail;
    for (const auto& c : results)
        if (!c.pass) detail += (detail.empty() ? "" : "; ") + c.name + ": " + c.detail;
    return detail;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string check_golden_files(const std::string& data_dir) {
    const std::pair<const char*, const char*> files[] = {
        {"length11_empty_row.txt", golden::length11},
        {"paths_example.txt", golden::paths_tableau},
        {"paths_example_alt.txt", golden::paths_alternative},
        {"inv1_example.txt", golden::inv_one},
        {"inv2_example.txt", golden::inv_two},
    };
    for (const auto& [name, embedded] : files) {
        const std::string on_disk = read_file(data_dir + "/" + name);
        if (on_disk != embedded) return std::string(name) + " differs from the embedded copy";
    }
    const auto examples = checks::golden_examples();
    return examples.pass ? "" : examples.detail;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: permtab_acceptance <data-dir>\n";
        return 64;
    }
    const std::string data_dir = argv[1];
    const int j = jobs();

    struct Criterion {
        const char* label;
        std::string (*run)(const std::string&, int);
    };
    const Criterion criteria[] = {
        {"1 count identity: tableaux of length n = 0..8 number n!",
         [](const std::string&, int jb) { return from_checks({checks::count(kCountScope, jb)}); }},
        {"2 main identity: inv = f3-21 of image = f32-1 of reverse complement, n <= 7",
         [](const std::string&, int jb) { return from_checks({checks::theorem(kTableauScope, jb)}); }},
        {"3 distribution: inv over tableaux matches f32-1 over permutations, n <= 7",
         [](const std::string&, int jb) {
             return from_checks({checks::distribution_match(kTableauScope, jb)});
         }},
        {"4 Bell counts: inv-free = L-Bell = 32-1-avoiders = B_n, n <= 8",
         [](const std::string&, int jb) {
             if (bell_numbers(8).back() != kBellEight) return std::string("B_8 != 4140");
             return from_checks({checks::bell_counts(kCountScope, jb)});
         }},
        {"5 equivalence: L-Bell <=> inv = 0 <=> dot-level conditions, n <= 7",
         [](const std::string&, int jb) {
             return from_checks({checks::lbell_equivalence(kTableauScope, jb)});
         }},
        {"6 bundled examples: files match embedded copies and reproduce their values",
         [](const std::string& dir, int) { return check_golden_files(dir); }},
        {"7 lemmas: descents at column labels (n <= 7); path labels are image "
         "subsequences and path order matches positions (n <= 6)",
         [](const std::string&, int jb) {
             return from_checks({checks::lemma_descent(kTableauScope, jb),
                                 checks::lemma_subsequence(kPairScope, jb),
                                 checks::lemma_order(kPairScope, jb)});
         }},
        {"8 oracle: backtracking pattern counter agrees with the brute-force count",
         [](const std::string&, int) { return from_checks({checks::oracle(kOracleSeed)}); }},
        {"9 round-trip: dot form reconstructs uniquely (n <= 7; uniqueness n <= 6)",
         [](const std::string&, int jb) {
             return from_checks({checks::roundtrip(kTableauScope, jb), checks::uniqueness(kPairScope)});
         }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.run(data_dir, j);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (detail.empty()) {
            std::cout << "PASS " << c.label << " [" << ms << " ms]\n";
        } else {
            std::cout << "FAIL " << c.label << " [" << ms << " ms] -- " << detail << '\n';
            ++failures;
        }
    }
    return failures;
}
