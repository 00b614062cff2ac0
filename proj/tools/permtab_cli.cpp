// Command-line front end: enumeration, conversion, statistics, pattern
// counting, and the self-check suites. Machine output is TSV; pretty tables
// appear only on a terminal or under --pretty.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <permtab/permtab.hpp>

namespace {

using namespace permtab;

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Accepts either text form; the dot form is expanded back to a tableau.
PermutationTableau load_tableau(const std::string& path) {
    const std::string text = read_input(path);
    if (kind_of(text) == TableauTextKind::alternative) return reconstruct(parse_alternative(text));
    PermutationTableau t = parse_tableau(text);
    const auto report = validate(t);
    if (!report.ok()) {
        std::string msg = "not a permutation tableau:";
        for (const auto& v : report.violations) msg += "\n  " + v.describe();
        throw std::runtime_error(msg);
    }
    return t;
}

std::string join_ints(const std::vector<int>& v, char sep = ',') {
    std::string out;
    for (int x : v) {
        if (!out.empty()) out += sep;
        out += std::to_string(x);
    }
    return out;
}

// Filling with border labels, for terminal use.
std::string render_grid(const PermutationTableau& t) {
    const auto& s = t.shape();
    const auto& lab = t.labeling();
    int width = 1;
    for (int n = lab.n(); n >= 10; n /= 10) ++width;
    std::ostringstream out;
    out << std::string(static_cast<std::size_t>(width) + 3, ' ');
    for (int pos = 1; pos <= s.columns(); ++pos) {
        std::string l = std::to_string(lab.column_label(pos));
        out << std::string(static_cast<std::size_t>(width) + 1 - l.size(), ' ') << l;
    }
    out << '\n';
    for (int row = 1; row <= s.rows(); ++row) {
        std::string l = std::to_string(lab.row_label(row));
        out << ' ' << std::string(static_cast<std::size_t>(width) - l.size(), ' ') << l << " |";
        for (int pos = 1; pos <= s.row_length(row); ++pos)
            out << std::string(static_cast<std::size_t>(width), ' ') << (t.cell(row, pos) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

int cmd_enumerate(int n) {
    if (n < 0 || n > 12) {
        std::cerr << "error: enumerate expects n in 0..12\n";
        return 1;
    }
    std::uint64_t total = 0;
    for_each_tableau(n, [&](const PermutationTableau& t) {
        std::cout << write_tableau(t) << '\n';
        ++total;
    });
    std::cout << "total\t" << total << '\n';
    return 0;
}

int cmd_stats(const std::string& path, bool pretty) {
    const PermutationTableau t = load_tableau(path);
    const auto a = to_alternative(t);
    const auto& lab = t.labeling();
    const Permutation pi = xi(a);
    const auto f = count_occurrences(parse_pattern("3-21"), pi);
    const auto invs = inversions(a);
    if (pretty) std::cout << render_grid(t);
    std::cout << "n\t" << lab.n() << '\n';
    std::cout << "shape\t" << join_ints(t.shape().row_lengths()) << '\n';
    std::cout << "rows\t" << join_ints(lab.row_labels()) << '\n';
    std::cout << "columns\t" << join_ints(lab.column_labels()) << '\n';
    std::cout << "unrestricted\t" << join_ints(a.unrestricted_row_labels()) << '\n';
    for (const auto& [i, j] : a.black_dots()) std::cout << "black\t" << i << '\t' << j << '\n';
    for (const auto& [i, j] : a.white_dots()) std::cout << "white\t" << i << '\t' << j << '\n';
    for (int col : lab.column_labels()) std::cout << "w\t" << col << '\t' << w(a, col) << '\n';
    std::cout << "inv\t" << invs.size() << '\n';
    std::cout << "xi\t" << write_permutation(pi) << '\n';
    std::cout << "f3-21\t" << f << '\n';
    std::cout << "lbell\t" << (is_lbell(t) ? 1 : 0) << '\n';
    return 0;
}

int cmd_xi(const std::string& path) {
    std::cout << write_permutation(xi(to_alternative(load_tableau(path)))) << '\n';
    return 0;
}

int cmd_inv(const std::string& path) {
    std::cout << inv(to_alternative(load_tableau(path))) << '\n';
    return 0;
}

int cmd_pattern(const std::string& pattern_text, const std::string& perm_text, bool rc) {
    const DashedPattern p = parse_pattern(pattern_text);
    const Permutation pi = parse_permutation(perm_text);
    const auto f = count_occurrences(p, pi);
    if (!rc) {
        std::cout << f << '\n';
        return 0;
    }
    std::cout << "f\t" << f << '\n';
    std::cout << "f_rc\t" << count_occurrences(p, reverse_complement(pi)) << '\n';
    return 0;
}

int cmd_distribution(int n, const std::string& statistic, int jobs, bool pretty) {
    if (n < 0 || n > 8) {
        std::cerr << "error: distribution expects n in 0..8\n";
        return 1;
    }
    const auto d = distribution(n, statistic, jobs);
    if (pretty) {
        for (const auto& [value, count] : d.histogram)
            std::cout << value << "  " << std::string(static_cast<std::size_t>(count), '#') << ' '
                      << count << '\n';
        std::cout << "total " << d.total << '\n';
        return 0;
    }
    std::cout << write_distribution(d);
    return 0;
}

int cmd_verify(int n, const std::vector<std::string>& names, int jobs, std::uint64_t seed, bool pretty) {
    const auto rep = run_checks(n, names, jobs, seed);
    if (pretty) {
        for (const auto& c : rep.checks)
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " (n<=" << c.scope_n << ") "
                      << c.detail << '\n';
    } else {
        std::cout << report_tsv(rep);
    }
    std::cerr << "elapsed_ms=" << rep.elapsed.count() << '\n';
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation tableau toolkit"};
    app.require_subcommand(1);

    int jobs = 0;
    std::uint64_t seed = 0;
    bool pretty_flag = false;
    app.add_option("--jobs", jobs, "worker threads (0 = all cores)");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_flag("--pretty", pretty_flag, "force human-readable tables");

    int enum_n = 0;
    auto* c_enum = app.add_subcommand("enumerate", "stream every tableau of length n");
    c_enum->add_option("n", enum_n, "length")->required();

    std::string stats_file;
    auto* c_stats = app.add_subcommand("stats", "labels, dots, weights, inv, image permutation");
    c_stats->add_option("file", stats_file, "tableau file, - for stdin")->required();

    std::string xi_file;
    auto* c_xi = app.add_subcommand("xi", "image permutation of a tableau");
    c_xi->add_option("file", xi_file, "tableau file, - for stdin")->required();

    std::string inv_file;
    auto* c_inv = app.add_subcommand("inv", "inversion count of a tableau");
    c_inv->add_option("file", inv_file, "tableau file, - for stdin")->required();

    std::string pattern_text, perm_text;
    bool rc = false;
    auto* c_pat = app.add_subcommand("pattern", "count pattern occurrences in a permutation");
    c_pat->add_option("pattern", pattern_text, "dashed pattern, e.g. 32-1")->required();
    c_pat->add_option("permutation", perm_text, "comma-separated permutation")->required();
    c_pat->add_flag("--rc", rc, "also count in the reverse complement");

    int dist_n = 0;
    std::string statistic = "inv";
    auto* c_dist = app.add_subcommand("distribution", "histogram of a statistic at length n");
    c_dist->add_option("n", dist_n, "length")->required();
    c_dist->add_option("statistic", statistic, "inv (over tableaux) or pattern:<p> (over permutations)");

    int verify_n = 0;
    std::vector<std::string> check_set;
    auto* c_verify = app.add_subcommand("verify", "run self-check suites up to length n");
    c_verify->add_option("n", verify_n, "scope (0..8; per-suite caps may clamp)")->required();
    c_verify->add_option("checks", check_set, "subset of suites (default: all)");

    CLI11_PARSE(app, argc, argv);

    const bool pretty = pretty_flag || isatty(STDOUT_FILENO);
    try {
        if (c_enum->parsed()) return cmd_enumerate(enum_n);
        if (c_stats->parsed()) return cmd_stats(stats_file, pretty);
        if (c_xi->parsed()) return cmd_xi(xi_file);
        if (c_inv->parsed()) return cmd_inv(inv_file);
        if (c_pat->parsed()) return cmd_pattern(pattern_text, perm_text, rc);
        if (c_dist->parsed()) return cmd_distribution(dist_n, statistic, resolve_jobs(jobs), pretty);
        if (c_verify->parsed()) return cmd_verify(verify_n, check_set, resolve_jobs(jobs), seed, pretty);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
