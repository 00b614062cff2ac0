#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ferrers.hpp"

namespace permtab {

// 0/1 filling of a Ferrers shape. Construction enforces the structural fit
// (row count and row lengths match the shape, entries are 0/1); the two
// filling axioms are checked separately by validate(), so an object may hold
// an axiom-violating filling and still be inspected.
class PermutationTableau {
public:
    PermutationTableau() : labeling_(shape_) {}

    PermutationTableau(FerrersShape shape, std::vector<std::vector<std::uint8_t>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)), labeling_(shape_) {
        if (static_cast<int>(rows_.size()) != shape_.rows())
            throw std::invalid_argument("PermutationTableau: row count does not match shape");
        for (int i = 1; i <= shape_.rows(); ++i) {
            const auto& row = rows_[static_cast<std::size_t>(i) - 1];
            if (static_cast<int>(row.size()) != shape_.row_length(i))
                throw std::invalid_argument("PermutationTableau: row " + std::to_string(i) +
                                            " length does not match shape");
            for (auto v : row)
                if (v > 1) throw std::invalid_argument("PermutationTableau: filling entries must be 0 or 1");
        }
    }

    const FerrersShape& shape() const { return shape_; }
    const BorderLabeling& labeling() const { return labeling_; }
    int length() const { return shape_.length(); }

    // Geometric addressing (row 1.. top-down, pos 1.. left-to-right).
    bool cell(int row, int pos) const {
        return rows_.at(static_cast<std::size_t>(row) - 1).at(static_cast<std::size_t>(pos) - 1) != 0;
    }

    // Label addressing, the public model: (row label, column label).
    bool cell_at_labels(int row_label, int col_label) const {
        return cell(labeling_.row_of_label(row_label), labeling_.column_pos_of_label(col_label));
    }

    const std::vector<std::vector<std::uint8_t>>& row_data() const { return rows_; }

    bool operator==(const PermutationTableau& o) const { return shape_ == o.shape_ && rows_ == o.rows_; }

private:
    FerrersShape shape_;
    std::vector<std::vector<std::uint8_t>> rows_;
    BorderLabeling labeling_;
};

// Axiom 1: every column contains at least one 1 (violations carry the column
// label, row_label = 0). Axiom 2: no 0 has both a 1 above it in its column
// and a 1 to its left in its row (violations carry the offending cell).
struct TableauViolation {
    int axiom = 0;
    int row_label = 0;
    int column_label = 0;

    std::string describe() const {
        if (axiom == 1) return "axiom 1: column " + std::to_string(column_label) + " contains no 1";
        return "axiom 2: cell (" + std::to_string(row_label) + "," + std::to_string(column_label) +
               ") is a 0 with a 1 above and a 1 to its left";
    }

    bool operator==(const TableauViolation&) const = default;
};

struct ValidationReport {
    std::vector<TableauViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Lists every violation: axiom 1 by column position left to right, then
// axiom 2 in row-major order.
inline ValidationReport validate(const PermutationTableau& t) {
    ValidationReport rep;
    const auto& s = t.shape();
    const auto& lab = t.labeling();
    for (int pos = 1; pos <= s.columns(); ++pos) {
        bool has_one = false;
        for (int row = 1; row <= s.column_height(pos); ++row)
            if (t.cell(row, pos)) { has_one = true; break; }
        if (!has_one) rep.violations.push_back({1, 0, lab.column_label(pos)});
    }
    for (int row = 1; row <= s.rows(); ++row) {
        bool one_to_left = false;
        for (int pos = 1; pos <= s.row_length(row); ++pos) {
            if (t.cell(row, pos)) {
                one_to_left = true;
                continue;
            }
            if (!one_to_left) continue;
            bool one_above = false;
            for (int r2 = 1; r2 < row; ++r2)
                if (t.cell(r2, pos)) { one_above = true; break; }
            if (one_above)
                rep.violations.push_back({2, lab.row_label(row), lab.column_label(pos)});
        }
    }
    return rep;
}

enum class CellClass : std::uint8_t {
    topmost_one,                // highest 1 of its column
    other_one,
    free_zero,                  // 0 with no 1 above it
    restricted_zero,            // 0 with a 1 above it
    rightmost_restricted_zero,  // the rightmost restricted 0 of its row
};

class CellClassification {
public:
    CellClassification(std::vector<std::vector<CellClass>> grid,
                       std::vector<std::pair<int, int>> topmost,
                       std::vector<std::pair<int, int>> rightmost_restricted,
                       std::vector<int> unrestricted)
        : grid_(std::move(grid)),
          topmost_(std::move(topmost)),
          rightmost_restricted_(std::move(rightmost_restricted)),
          unrestricted_(std::move(unrestricted)) {}

    CellClass at(int row, int pos) const {
        return grid_.at(static_cast<std::size_t>(row) - 1).at(static_cast<std::size_t>(pos) - 1);
    }

    // (row label, column label), sorted by column label.
    const std::vector<std::pair<int, int>>& topmost_ones() const { return topmost_; }
    // (row label, column label), sorted by row label.
    const std::vector<std::pair<int, int>>& rightmost_restricted_zeros() const { return rightmost_restricted_; }
    // Row labels of rows containing no restricted 0, increasing. Empty rows qualify.
    const std::vector<int>& unrestricted_rows() const { return unrestricted_; }

private:
    std::vector<std::vector<CellClass>> grid_;
    std::vector<std::pair<int, int>> topmost_;
    std::vector<std::pair<int, int>> rightmost_restricted_;
    std::vector<int> unrestricted_;
};

// Requires a tableau satisfying axiom 1 (every column needs a topmost 1).
inline CellClassification classify_cells(const PermutationTableau& t) {
    const auto& s = t.shape();
    const auto& lab = t.labeling();
    const int r = s.rows();
    const int c = s.columns();

    std::vector<std::vector<CellClass>> grid(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i)
        grid[static_cast<std::size_t>(i) - 1].assign(static_cast<std::size_t>(s.row_length(i)),
                                                     CellClass::free_zero);

    std::vector<int> topmost_row(static_cast<std::size_t>(c) + 1, 0);
    for (int pos = 1; pos <= c; ++pos) {
        for (int row = 1; row <= s.column_height(pos); ++row) {
            if (t.cell(row, pos)) {
                topmost_row[static_cast<std::size_t>(pos)] = row;
                break;
            }
        }
        if (topmost_row[static_cast<std::size_t>(pos)] == 0)
            throw std::invalid_argument("classify_cells: column " + std::to_string(lab.column_label(pos)) +
                                        " contains no 1 (axiom 1)");
    }

    std::vector<int> rightmost(static_cast<std::size_t>(r) + 1, 0);  // per row: position of rightmost restricted 0
    for (int row = 1; row <= r; ++row) {
        for (int pos = 1; pos <= s.row_length(row); ++pos) {
            CellClass cls;
            if (t.cell(row, pos))
                cls = (topmost_row[static_cast<std::size_t>(pos)] == row) ? CellClass::topmost_one
                                                                          : CellClass::other_one;
            else if (topmost_row[static_cast<std::size_t>(pos)] != 0 &&
                     topmost_row[static_cast<std::size_t>(pos)] < row) {
                cls = CellClass::restricted_zero;
                rightmost[static_cast<std::size_t>(row)] = pos;
            } else
                cls = CellClass::free_zero;
            grid[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(pos) - 1] = cls;
        }
    }

    std::vector<std::pair<int, int>> topmost;
    for (int pos = c; pos >= 1; --pos)  // by column label ascending = position descending
        topmost.emplace_back(lab.row_label(topmost_row[static_cast<std::size_t>(pos)]), lab.column_label(pos));

    std::vector<std::pair<int, int>> rr;
    std::vector<int> unrestricted;
    for (int row = 1; row <= r; ++row) {
        const int pos = rightmost[static_cast<std::size_t>(row)];
        if (pos == 0) {
            unrestricted.push_back(lab.row_label(row));
        } else {
            grid[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(pos) - 1] =
                CellClass::rightmost_restricted_zero;
            rr.emplace_back(lab.row_label(row), lab.column_label(pos));
        }
    }

    return CellClassification(std::move(grid), std::move(topmost), std::move(rr), std::move(unrestricted));
}

}  // namespace permtab
