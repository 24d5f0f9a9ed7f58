#include "concordia/gf2.hpp"

namespace concordia::gf2 {

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = words_.data() + dst * stride_;
    const std::uint64_t* s = words_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

std::size_t BitMatrix::rank_destructive() {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !get(pivot, c)) ++pivot;
        if (pivot == rows_) continue;
        std::swap_ranges(words_.begin() + static_cast<std::ptrdiff_t>(pivot * stride_),
                         words_.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * stride_),
                         words_.begin() + static_cast<std::ptrdiff_t>(rank * stride_));
        for (std::size_t r = rank + 1; r < rows_; ++r)
            if (get(r, c)) xor_rows(r, rank);
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::size_t>> BitMatrix::left_kernel_destructive() {
    // Augment with an identity block tracking row operations; rows that reduce to
    // zero expose kernel combinations in the tracking block.
    std::size_t aug_stride = (rows_ + 63) / 64;
    std::vector<std::uint64_t> track(rows_ * aug_stride, 0);
    for (std::size_t r = 0; r < rows_; ++r) track[r * aug_stride + r / 64] |= 1ull << (r % 64);

    auto xor_full = [&](std::size_t dst, std::size_t src) {
        xor_rows(dst, src);
        std::uint64_t* d = track.data() + dst * aug_stride;
        const std::uint64_t* s = track.data() + src * aug_stride;
        for (std::size_t w = 0; w < aug_stride; ++w) d[w] ^= s[w];
    };
    auto row_zero = [&](std::size_t r) {
        const std::uint64_t* d = words_.data() + r * stride_;
        for (std::size_t w = 0; w < stride_; ++w)
            if (d[w]) return false;
        return true;
    };

    std::vector<bool> used(rows_, false);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t pivot = rows_;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!used[r] && get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot == rows_) continue;
        used[pivot] = true;
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != pivot && get(r, c)) xor_full(r, pivot);
    }

    std::vector<std::vector<std::size_t>> kernel;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (!row_zero(r)) continue;
        std::vector<std::size_t> combo;
        for (std::size_t c = 0; c < rows_; ++c)
            if ((track[r * aug_stride + c / 64] >> (c % 64)) & 1) combo.push_back(c);
        kernel.push_back(std::move(combo));
    }
    return kernel;
}

}  // namespace concordia::gf2
