#include "dirdiam/bool_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "dirdiam/parallel.hpp"

namespace dirdiam {

namespace {

constexpr std::size_t kBlockBits = std::size_t{1} << 22;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// OR of the rows of `b` selected by `sel` into `acc`, recording touched words.
void accumulate(const SparseBoolMatrix &b, std::span<const SparseBoolMatrix::Index> sel,
                std::uint64_t *acc, std::vector<std::size_t> &touched, std::size_t word_base) {
    for (SparseBoolMatrix::Index j : sel) {
        for (SparseBoolMatrix::Index k : b.row(j)) {
            std::uint64_t &w = acc[k >> 6];
            if (w == 0) {
                touched.push_back(word_base + (k >> 6));
            }
            w |= std::uint64_t{1} << (k & 63);
        }
    }
}

} // namespace

SparseBoolMatrix::SparseBoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), offsets_(rows + 1, 0) {}

SparseBoolMatrix::SparseBoolMatrix(std::size_t rows, std::size_t cols,
                                   std::vector<std::vector<Index>> row_entries)
    : rows_(rows), cols_(cols), offsets_(rows + 1, 0) {
    if (row_entries.size() != rows) {
        throw std::invalid_argument("row count mismatch");
    }
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Index> &r = row_entries[i];
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        if (!r.empty() && r.back() >= cols) {
            throw std::invalid_argument("column index out of range");
        }
        offsets_[i + 1] = offsets_[i] + r.size();
    }
    entries_.reserve(offsets_[rows]);
    for (const std::vector<Index> &r : row_entries) {
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

SparseBoolMatrix SparseBoolMatrix::identity(std::size_t n) {
    std::vector<std::vector<Index>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].push_back(static_cast<Index>(i));
    }
    return SparseBoolMatrix(n, n, std::move(rows));
}

bool SparseBoolMatrix::get(std::size_t i, std::size_t j) const {
    auto r = row(i);
    return std::binary_search(r.begin(), r.end(), static_cast<Index>(j));
}

std::size_t default_block_rows(std::size_t cols) {
    std::size_t bits_per_row = std::max<std::size_t>(64, words_for(cols) * 64);
    return std::max<std::size_t>(1, kBlockBits / bits_per_row);
}

SparseBoolMatrix product(const SparseBoolMatrix &a, const SparseBoolMatrix &b,
                         std::size_t block_rows, unsigned threads) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("product: inner dimensions differ");
    }
    if (block_rows == 0) {
        block_rows = default_block_rows(b.cols());
    }
    std::size_t rows = a.rows();
    std::size_t words = words_for(b.cols());
    std::vector<std::vector<SparseBoolMatrix::Index>> out(rows);
    std::size_t blocks = (rows + block_rows - 1) / block_rows;
    parallel_chunks(blocks, threads, [&](std::size_t first, std::size_t last, std::size_t) {
        std::vector<std::uint64_t> acc(block_rows * words, 0);
        std::vector<std::size_t> touched;
        for (std::size_t blk = first; blk < last; ++blk) {
            std::size_t r0 = blk * block_rows;
            std::size_t r1 = std::min(rows, r0 + block_rows);
            for (std::size_t i = r0; i < r1; ++i) {
                std::size_t base = (i - r0) * words;
                std::size_t mark = touched.size();
                accumulate(b, a.row(i), acc.data() + base, touched, base);
                std::sort(touched.begin() + mark, touched.end());
            }
            // Touched words are sorted within each row and rows appear in order.
            for (std::size_t t : touched) {
                std::size_t i = r0 + t / words;
                std::size_t word = t % words;
                std::uint64_t w = acc[t];
                while (w != 0) {
                    int bit = std::countr_zero(w);
                    out[i].push_back(static_cast<SparseBoolMatrix::Index>(word * 64 + bit));
                    w &= w - 1;
                }
                acc[t] = 0;
            }
            touched.clear();
        }
    });
    return SparseBoolMatrix(rows, b.cols(), std::move(out));
}

std::optional<std::pair<std::size_t, std::size_t>> find_zero_entry(const SparseBoolMatrix &c) {
    for (std::size_t i = 0; i < c.rows(); ++i) {
        auto r = c.row(i);
        if (r.size() == c.cols()) {
            continue;
        }
        // First gap in the sorted column list.
        std::size_t k = 0;
        while (k < r.size() && r[k] == k) {
            ++k;
        }
        return std::pair{i, k};
    }
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>>
find_unwitnessed_pair(std::span<const MatrixPair> family, unsigned threads) {
    if (family.empty()) {
        throw std::invalid_argument("find_unwitnessed_pair: empty family");
    }
    std::size_t rows = family[0].first->rows();
    std::size_t cols = family[0].second->cols();
    for (const MatrixPair &p : family) {
        if (p.first->rows() != rows || p.second->cols() != cols ||
            p.first->cols() != p.second->rows()) {
            throw std::invalid_argument("find_unwitnessed_pair: inconsistent shapes");
        }
    }
    if (rows == 0 || cols == 0) {
        return std::nullopt;
    }
    std::size_t words = words_for(cols);
    std::uint64_t tail_mask = (cols % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (cols % 64)) - 1);
    std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, rows));
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> found(chunks);
    parallel_chunks(rows, threads, [&](std::size_t first, std::size_t last, std::size_t chunk) {
        std::vector<std::uint64_t> acc(words, 0);
        std::vector<std::size_t> touched;
        for (std::size_t i = first; i < last; ++i) {
            for (const MatrixPair &p : family) {
                accumulate(*p.second, p.first->row(i), acc.data(), touched, 0);
            }
            std::optional<std::size_t> gap;
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t full = (w + 1 == words) ? tail_mask : ~std::uint64_t{0};
                if (acc[w] != full) {
                    gap = w * 64 + std::countr_one(acc[w]);
                    break;
                }
            }
            for (std::size_t w : touched) {
                acc[w] = 0;
            }
            touched.clear();
            if (gap) {
                found[chunk] = std::pair{i, *gap};
                return;
            }
        }
    });
    for (auto &f : found) {
        if (f) {
            return f;
        }
    }
    return std::nullopt;
}

bool all_pairs_witnessed(std::span<const MatrixPair> family, unsigned threads) {
    return !find_unwitnessed_pair(family, threads).has_value();
}

} // namespace dirdiam
