#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tableau.hpp"

namespace permtab {

// Dot form of a tableau: one black dot per column (the topmost 1) and at
// most one white dot per row (the rightmost restricted 0). Construction
// enforces only that structure; whether the dots actually encode a tableau
// is decided by reconstruct().
//
// Dots are addressed as (row label, column label) pairs.
class AlternativeRepresentation {
public:
    AlternativeRepresentation() : labeling_(shape_) {}

    AlternativeRepresentation(FerrersShape shape,
                              const std::vector<std::pair<int, int>>& black_dots,
                              const std::vector<std::pair<int, int>>& white_dots)
        : shape_(std::move(shape)), labeling_(shape_) {
        black_row_.assign(static_cast<std::size_t>(shape_.columns()) + 1, 0);
        white_pos_.assign(static_cast<std::size_t>(shape_.rows()) + 1, 0);
        for (const auto& [i, j] : black_dots) {
            const auto [row, pos] = locate(i, j);
            if (black_row_[static_cast<std::size_t>(pos)] != 0)
                throw std::invalid_argument("AlternativeRepresentation: two black dots in column " +
                                            std::to_string(j));
            black_row_[static_cast<std::size_t>(pos)] = row;
        }
        for (int pos = 1; pos <= shape_.columns(); ++pos)
            if (black_row_[static_cast<std::size_t>(pos)] == 0)
                throw std::invalid_argument("AlternativeRepresentation: column " +
                                            std::to_string(labeling_.column_label(pos)) + " has no black dot");
        for (const auto& [i, j] : white_dots) {
            const auto [row, pos] = locate(i, j);
            if (white_pos_[static_cast<std::size_t>(row)] != 0)
                throw std::invalid_argument("AlternativeRepresentation: two white dots in row " +
                                            std::to_string(i));
            if (black_row_[static_cast<std::size_t>(pos)] == row)
                throw std::invalid_argument("AlternativeRepresentation: black and white dot share cell (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            white_pos_[static_cast<std::size_t>(row)] = pos;
        }
    }

    const FerrersShape& shape() const { return shape_; }
    const BorderLabeling& labeling() const { return labeling_; }
    int length() const { return shape_.length(); }

    // Sorted by column label.
    std::vector<std::pair<int, int>> black_dots() const {
        std::vector<std::pair<int, int>> out;
        for (int pos = shape_.columns(); pos >= 1; --pos)
            out.emplace_back(labeling_.row_label(black_row_[static_cast<std::size_t>(pos)]),
                             labeling_.column_label(pos));
        return out;
    }

    // Sorted by row label.
    std::vector<std::pair<int, int>> white_dots() const {
        std::vector<std::pair<int, int>> out;
        for (int row = 1; row <= shape_.rows(); ++row)
            if (white_pos_[static_cast<std::size_t>(row)] != 0)
                out.emplace_back(labeling_.row_label(row),
                                 labeling_.column_label(white_pos_[static_cast<std::size_t>(row)]));
        return out;
    }

    // Row label of the black dot sitting in the given column.
    int black_row_of_column(int col_label) const {
        return labeling_.row_label(black_row_geo(labeling_.column_pos_of_label(col_label)));
    }

    // Column label of the row's white dot, if the row has one.
    std::optional<int> white_column_of_row(int row_label) const {
        const int pos = white_pos_geo(labeling_.row_of_label(row_label));
        if (pos == 0) return std::nullopt;
        return labeling_.column_label(pos);
    }

    bool row_is_unrestricted(int row_label) const { return !white_column_of_row(row_label).has_value(); }

    std::vector<int> unrestricted_row_labels() const {
        std::vector<int> out;
        for (int row = 1; row <= shape_.rows(); ++row)
            if (white_pos_[static_cast<std::size_t>(row)] == 0) out.push_back(labeling_.row_label(row));
        return out;
    }

    // Row labels of the white dots in the given column, increasing.
    std::vector<int> white_rows_of_column(int col_label) const {
        const int pos = labeling_.column_pos_of_label(col_label);
        std::vector<int> out;
        for (int row = 1; row <= shape_.rows(); ++row)
            if (white_pos_[static_cast<std::size_t>(row)] == pos) out.push_back(labeling_.row_label(row));
        return out;
    }

    // Geometric internals used by the algorithms.
    int black_row_geo(int pos) const { return black_row_.at(static_cast<std::size_t>(pos)); }
    int white_pos_geo(int row) const { return white_pos_.at(static_cast<std::size_t>(row)); }  // 0 = none

    bool operator==(const AlternativeRepresentation& o) const {
        return shape_ == o.shape_ && black_row_ == o.black_row_ && white_pos_ == o.white_pos_;
    }

private:
    std::pair<int, int> locate(int row_label, int col_label) const {
        const int row = labeling_.row_of_label(row_label);
        const int pos = labeling_.column_pos_of_label(col_label);
        if (!shape_.cell_exists(row, pos))
            throw std::invalid_argument("AlternativeRepresentation: cell (" + std::to_string(row_label) + "," +
                                        std::to_string(col_label) + ") is outside the shape");
        return {row, pos};
    }

    FerrersShape shape_;
    BorderLabeling labeling_;
    std::vector<int> black_row_;  // column position -> geometric row of its black dot
    std::vector<int> white_pos_;  // geometric row -> position of its white dot, 0 = none
};

inline AlternativeRepresentation to_alternative(const PermutationTableau& t) {
    const auto cls = classify_cells(t);
    return AlternativeRepresentation(t.shape(), cls.topmost_ones(), cls.rightmost_restricted_zeros());
}

// Inverse of to_alternative. The filling is forced: a cell above its
// column's black dot is 0, the black dot cell is 1, and a cell below is read
// off its row — rows without a white dot are all 1 below the dots, rows with
// a white dot are 0 up to and including the dot and 1 to its right. The
// result is accepted only if it is a valid tableau whose classification
// regenerates the given dots; otherwise the dots encode nothing and an
// invalid_argument is thrown.
inline PermutationTableau reconstruct(const AlternativeRepresentation& a) {
    const auto& s = a.shape();
    std::vector<std::vector<std::uint8_t>> grid(static_cast<std::size_t>(s.rows()));
    for (int row = 1; row <= s.rows(); ++row) {
        auto& line = grid[static_cast<std::size_t>(row) - 1];
        line.assign(static_cast<std::size_t>(s.row_length(row)), 0);
        const int wpos = a.white_pos_geo(row);
        for (int pos = 1; pos <= s.row_length(row); ++pos) {
            const int black = a.black_row_geo(pos);
            std::uint8_t v;
            if (row < black) v = 0;
            else if (row == black) v = 1;
            else if (wpos == 0) v = 1;
            else v = (pos > wpos) ? 1 : 0;
            line[static_cast<std::size_t>(pos) - 1] = v;
        }
    }

    PermutationTableau t(s, std::move(grid));
    const auto rep = validate(t);
    if (!rep.ok())
        throw std::invalid_argument("reconstruct: dots do not encode a tableau (" +
                                    rep.violations.front().describe() + ")");
    if (!(to_alternative(t) == a))
        throw std::invalid_argument("reconstruct: filling does not regenerate the given dots");
    return t;
}

}  // namespace permtab
