#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace permtab {

// Ferrers shape given by weakly decreasing row lengths, top row first.
// Trailing zero-length rows are allowed and meaningful: they are empty rows
// that still receive a border label. The empty shape (no rows) has length 0.
//
// Geometric conventions used throughout:
//   rows    1..r   top to bottom
//   columns 1..c   left to right ("position")
class FerrersShape {
public:
    FerrersShape() = default;

    explicit FerrersShape(std::vector<int> row_lengths) : lengths_(std::move(row_lengths)) {
        for (std::size_t i = 0; i < lengths_.size(); ++i) {
            if (lengths_[i] < 0)
                throw std::invalid_argument("FerrersShape: negative row length");
            if (i > 0 && lengths_[i] > lengths_[i - 1])
                throw std::invalid_argument("FerrersShape: row lengths must be weakly decreasing");
        }
    }

    int rows() const { return static_cast<int>(lengths_.size()); }
    int columns() const { return lengths_.empty() ? 0 : lengths_.front(); }

    // Length of the tableau border: rows + columns.
    int length() const { return rows() + columns(); }

    int row_length(int row) const { return lengths_.at(static_cast<std::size_t>(row) - 1); }

    // Number of cells in the column at position pos (leftmost = 1).
    int column_height(int pos) const {
        int h = 0;
        for (int len : lengths_) {
            if (len >= pos) ++h;
            else break;
        }
        return h;
    }

    bool cell_exists(int row, int pos) const {
        return row >= 1 && row <= rows() && pos >= 1 && pos <= lengths_[static_cast<std::size_t>(row) - 1];
    }

    const std::vector<int>& row_lengths() const { return lengths_; }

    bool operator==(const FerrersShape&) const = default;

private:
    std::vector<int> lengths_;
};

// Border labels 1..n assigned along the southeast border, walking from the
// top-right corner to the bottom-left corner: every down-step labels a row,
// every left-step labels a column. Consequences relied on elsewhere:
//   - row labels increase top to bottom,
//   - column labels increase right to left (the rightmost column has the
//     smallest column label),
//   - a cell (i, j) exists iff i < j when i is its row label and j its
//     column label.
class BorderLabeling {
public:
    BorderLabeling() = default;

    explicit BorderLabeling(const FerrersShape& shape) : n_(shape.length()) {
        const int r = shape.rows();
        row_label_.assign(static_cast<std::size_t>(r) + 1, 0);
        col_label_.assign(static_cast<std::size_t>(shape.columns()) + 1, 0);
        is_col_.assign(static_cast<std::size_t>(n_) + 1, 0);
        index_.assign(static_cast<std::size_t>(n_) + 1, 0);
        int next = 1;
        for (int i = 1; i <= r; ++i) {
            row_label_[i] = next;
            index_[next] = i;
            ++next;
            const int lo = (i < r) ? shape.row_length(i + 1) : 0;
            for (int pos = shape.row_length(i); pos > lo; --pos) {
                col_label_[pos] = next;
                is_col_[next] = 1;
                index_[next] = pos;
                ++next;
            }
        }
    }

    int n() const { return n_; }

    int row_label(int row) const { return row_label_.at(static_cast<std::size_t>(row)); }
    int column_label(int pos) const { return col_label_.at(static_cast<std::size_t>(pos)); }

    bool is_column_label(int label) const {
        check(label);
        return is_col_[static_cast<std::size_t>(label)] != 0;
    }
    bool is_row_label(int label) const { return !is_column_label(label); }

    int row_of_label(int label) const {
        if (is_column_label(label))
            throw std::invalid_argument("BorderLabeling: " + std::to_string(label) + " is a column label");
        return index_[static_cast<std::size_t>(label)];
    }
    int column_pos_of_label(int label) const {
        if (!is_column_label(label))
            throw std::invalid_argument("BorderLabeling: " + std::to_string(label) + " is a row label");
        return index_[static_cast<std::size_t>(label)];
    }

    // Increasing label order.
    std::vector<int> row_labels() const {
        std::vector<int> out;
        for (int l = 1; l <= n_; ++l)
            if (!is_col_[static_cast<std::size_t>(l)]) out.push_back(l);
        return out;
    }
    std::vector<int> column_labels() const {
        std::vector<int> out;
        for (int l = 1; l <= n_; ++l)
            if (is_col_[static_cast<std::size_t>(l)]) out.push_back(l);
        return out;
    }

private:
    void check(int label) const {
        if (label < 1 || label > n_)
            throw std::out_of_range("BorderLabeling: label " + std::to_string(label) + " out of range 1.." +
                                    std::to_string(n_));
    }

    int n_ = 0;
    std::vector<int> row_label_;   // geometric row -> label
    std::vector<int> col_label_;   // geometric position -> label
    std::vector<std::uint8_t> is_col_;
    std::vector<int> index_;       // label -> geometric row or position
};

inline BorderLabeling label_border(const FerrersShape& shape) { return BorderLabeling(shape); }

}  // namespace permtab
