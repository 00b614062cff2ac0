#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alternative.hpp"
#include "bijection.hpp"
#include "enumerate.hpp"

namespace permtab {

// Text formats. All are line based with \n endings.
//
// Tableau:            line 1: n
//                     line 2: comma-separated row lengths incl. trailing zeros
//                             (empty line for the empty shape)
//                     then one line per row: its 0/1 cells left to right,
//                     an empty row written as the single character "-"
//
// Alternative form:   same two header lines, then one line per dot:
//                     "B <row label> <column label>" / "W <row label> <column label>",
//                     written B-lines by column label then W-lines by row label
//
// Permutation:        one line, comma-separated values (empty for n = 0)

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (!lines.empty() && lines.back().empty()) lines.pop_back();  // tolerate one trailing newline
    return lines;
}

inline int parse_int(std::string_view s, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("parse: bad ") + what + " '" + std::string(s) + "'");
    return value;
}

inline std::vector<int> parse_csv_ints(std::string_view line, const char* what) {
    std::vector<int> out;
    if (line.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        const auto tok = line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - start);
        out.push_back(parse_int(tok, what));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string join_csv(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

struct Header {
    int n;
    FerrersShape shape;
};

inline Header parse_header(const std::vector<std::string_view>& lines) {
    if (lines.size() < 2) throw std::invalid_argument("parse: expected a length line and a shape line");
    const int n = parse_int(lines[0], "length");
    if (n < 0) throw std::invalid_argument("parse: length must be >= 0");
    FerrersShape shape(parse_csv_ints(lines[1], "row length"));
    if (shape.length() != n)
        throw std::invalid_argument("parse: declared length " + std::to_string(n) +
                                    " does not match shape length " + std::to_string(shape.length()));
    return {n, std::move(shape)};
}

}  // namespace detail

inline std::string write_tableau(const PermutationTableau& t) {
    std::string out = std::to_string(t.length());
    out += '\n';
    out += detail::join_csv(t.shape().row_lengths());
    out += '\n';
    for (int row = 1; row <= t.shape().rows(); ++row) {
        const int len = t.shape().row_length(row);
        if (len == 0) out += '-';
        else
            for (int pos = 1; pos <= len; ++pos) out += t.cell(row, pos) ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline PermutationTableau parse_tableau(std::string_view text) {
    const auto lines = detail::split_lines(text);
    auto [n, shape] = detail::parse_header(lines);
    (void)n;
    if (static_cast<int>(lines.size()) != 2 + shape.rows())
        throw std::invalid_argument("parse: expected " + std::to_string(shape.rows()) + " row lines, got " +
                                    std::to_string(lines.size() - 2));
    std::vector<std::vector<std::uint8_t>> grid(static_cast<std::size_t>(shape.rows()));
    for (int row = 1; row <= shape.rows(); ++row) {
        const auto line = lines[static_cast<std::size_t>(row) + 1];
        auto& cells = grid[static_cast<std::size_t>(row) - 1];
        if (line == "-") {
            if (shape.row_length(row) != 0)
                throw std::invalid_argument("parse: row " + std::to_string(row) + " is not empty in the shape");
            continue;
        }
        if (static_cast<int>(line.size()) != shape.row_length(row))
            throw std::invalid_argument("parse: row " + std::to_string(row) + " has " +
                                        std::to_string(line.size()) + " cells, shape says " +
                                        std::to_string(shape.row_length(row)));
        for (char ch : line) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument(std::string("parse: cell must be 0 or 1, got '") + ch + "'");
            cells.push_back(ch == '1');
        }
    }
    return PermutationTableau(std::move(shape), std::move(grid));
}

inline std::string write_alternative(const AlternativeRepresentation& a) {
    std::string out = std::to_string(a.length());
    out += '\n';
    out += detail::join_csv(a.shape().row_lengths());
    out += '\n';
    for (const auto& [i, j] : a.black_dots())
        out += "B " + std::to_string(i) + ' ' + std::to_string(j) + '\n';
    for (const auto& [i, j] : a.white_dots())
        out += "W " + std::to_string(i) + ' ' + std::to_string(j) + '\n';
    return out;
}

inline AlternativeRepresentation parse_alternative(std::string_view text) {
    const auto lines = detail::split_lines(text);
    auto [n, shape] = detail::parse_header(lines);
    (void)n;
    std::vector<std::pair<int, int>> blacks, whites;
    for (std::size_t li = 2; li < lines.size(); ++li) {
        const auto line = lines[li];
        if (line.size() < 2 || (line[0] != 'B' && line[0] != 'W') || line[1] != ' ')
            throw std::invalid_argument("parse: expected 'B <row> <col>' or 'W <row> <col>', got '" +
                                        std::string(line) + "'");
        const auto rest = line.substr(2);
        const std::size_t sp = rest.find(' ');
        if (sp == std::string_view::npos)
            throw std::invalid_argument("parse: dot line needs two labels: '" + std::string(line) + "'");
        const int row = detail::parse_int(rest.substr(0, sp), "row label");
        const int col = detail::parse_int(rest.substr(sp + 1), "column label");
        (line[0] == 'B' ? blacks : whites).emplace_back(row, col);
    }
    return AlternativeRepresentation(std::move(shape), blacks, whites);
}

// Distinguishes the two formats by the first line after the header.
enum class TableauTextKind { tableau, alternative };

inline TableauTextKind kind_of(std::string_view text) {
    const auto lines = detail::split_lines(text);
    for (std::size_t li = 2; li < lines.size(); ++li)
        if (!lines[li].empty() && (lines[li][0] == 'B' || lines[li][0] == 'W'))
            return TableauTextKind::alternative;
    return TableauTextKind::tableau;
}

inline std::string write_permutation(const Permutation& p) { return detail::join_csv(p); }

inline Permutation parse_permutation(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.remove_suffix(1);
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    Permutation p = detail::parse_csv_ints(text, "permutation entry");
    if (!is_permutation_of_n(p))
        throw std::invalid_argument("parse: '" + std::string(text) + "' is not a permutation of 1..n");
    return p;
}

inline std::string write_distribution(const StatisticDistribution& d) {
    std::string out;
    for (const auto& [value, count] : d.histogram)
        out += std::to_string(value) + '\t' + std::to_string(count) + '\n';
    out += "total\t" + std::to_string(d.total) + '\n';
    return out;
}

// Single-line rendering for report counterexamples.
inline std::string one_line(std::string_view multiline) {
    std::string out;
    for (char ch : multiline) out += (ch == '\n') ? ';' : ch;
    while (!out.empty() && out.back() == ';') out.pop_back();
    return out;
}

}  // namespace permtab
