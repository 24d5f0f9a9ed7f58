#pragma once

#include <cstdint>
#include <vector>

namespace concordia::gf2 {

// Dense matrix over the two-element field, one row per 64-bit-packed bitvector.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c) { words_[r * stride_ + c / 64] |= 1ull << (c % 64); }
    void flip(std::size_t r, std::size_t c) { words_[r * stride_ + c / 64] ^= 1ull << (c % 64); }
    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * stride_ + c / 64] >> (c % 64)) & 1;
    }

    // Rank by in-place row elimination (destroys the matrix contents).
    std::size_t rank_destructive();

    // Basis of the row-space kernel: vectors x (as rows over `rows()` columns)
    // with x * M = 0. Destroys the matrix contents.
    std::vector<std::vector<std::size_t>> left_kernel_destructive();

private:
    void xor_rows(std::size_t dst, std::size_t src);
    std::size_t rows_, cols_, stride_;
    std::vector<std::uint64_t> words_;
};

}  // namespace concordia::gf2
