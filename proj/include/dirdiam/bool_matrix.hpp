#ifndef DIRDIAM_BOOL_MATRIX_HPP_
#define DIRDIAM_BOOL_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dirdiam {

/// Row-sparse 0/1 matrix: each row stores the sorted column indices of its ones.
class SparseBoolMatrix {
public:
    using Index = std::uint32_t;

    SparseBoolMatrix() = default;
    /// All-zero rows x cols matrix.
    SparseBoolMatrix(std::size_t rows, std::size_t cols);
    /// Rows are sorted and deduplicated; throws std::invalid_argument on an index >= cols.
    SparseBoolMatrix(std::size_t rows, std::size_t cols, std::vector<std::vector<Index>> row_entries);

    static SparseBoolMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }

    std::span<const Index> row(std::size_t i) const noexcept {
        return {entries_.data() + offsets_[i], entries_.data() + offsets_[i + 1]};
    }
    bool get(std::size_t i, std::size_t j) const;

    friend bool operator==(const SparseBoolMatrix &, const SparseBoolMatrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Index> entries_;
};

/// Rows per block whose bitset accumulator stays within 2^22 bits.
std::size_t default_block_rows(std::size_t cols);

/**
 * Boolean product C = A·B. Rows of A are processed in blocks of `block_rows`
 * (0 selects default_block_rows) with a bitset accumulator per block; blocks
 * are split across `threads` workers. Throws std::invalid_argument when
 * A.cols() != B.rows().
 */
SparseBoolMatrix product(const SparseBoolMatrix &a, const SparseBoolMatrix &b,
                         std::size_t block_rows = 0, unsigned threads = 1);

/// Some (row, col) with C[row][col] = 0 in row-major order, or none; none for an empty matrix.
std::optional<std::pair<std::size_t, std::size_t>> find_zero_entry(const SparseBoolMatrix &c);

/// As above but reports the labels attached to the row and column.
template <class Label>
std::optional<std::pair<Label, Label>> find_zero_entry(const SparseBoolMatrix &c,
                                                       std::span<const Label> row_labels,
                                                       std::span<const Label> col_labels);

using MatrixPair = std::pair<const SparseBoolMatrix *, const SparseBoolMatrix *>;

/**
 * First (row, col) in row-major order such that (A_j·B_j)[row][col] = 0 for
 * every pair in the family, without materializing the products. Returns none
 * when the family covers every pair or the shape is empty. Throws
 * std::invalid_argument on an empty family or inconsistent shapes.
 */
std::optional<std::pair<std::size_t, std::size_t>>
find_unwitnessed_pair(std::span<const MatrixPair> family, unsigned threads = 1);

/// True iff every (row, col) is covered by some product of the family.
bool all_pairs_witnessed(std::span<const MatrixPair> family, unsigned threads = 1);

template <class Label>
std::optional<std::pair<Label, Label>> find_zero_entry(const SparseBoolMatrix &c,
                                                       std::span<const Label> row_labels,
                                                       std::span<const Label> col_labels) {
    if (row_labels.size() != c.rows() || col_labels.size() != c.cols()) {
        throw std::invalid_argument("label count does not match matrix shape");
    }
    auto hit = find_zero_entry(c);
    if (!hit) {
        return std::nullopt;
    }
    return std::pair<Label, Label>{row_labels[hit->first], col_labels[hit->second]};
}

} // namespace dirdiam

#endif // DIRDIAM_BOOL_MATRIX_HPP_
