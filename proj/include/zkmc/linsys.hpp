#pragma once

#include <cstdint>
#include <vector>

#include "zkmc/common.hpp"

namespace zkmc {

// Dense integer matrix, row-major. Coefficients are bounded by the protocol
// bound M (checked at validation time), so int64 is exact.
struct IntMat {
    size_t rows = 0, cols = 0;
    std::vector<int64_t> a;

    IntMat() = default;
    IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    int64_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    int64_t at(size_t r, size_t c) const { return a[r * cols + c]; }

    bool operator==(const IntMat& o) const = default;

    // stack rows of two matrices with equal column counts
    static IntMat vstack(const IntMat& top, const IntMat& bottom);
    // embed into a wider matrix at a column offset (zero padding elsewhere)
    IntMat pad_cols(size_t new_cols, size_t col_offset) const;
    IntMat transpose() const;

    int64_t max_abs() const;
};

// A y <= b
struct LinSys {
    IntMat A;
    std::vector<int64_t> b;

    bool operator==(const LinSys& o) const = default;
    size_t rows() const { return A.rows; }
    size_t cols() const { return A.cols; }
    static LinSys vstack(const LinSys& top, const LinSys& bottom);
    LinSys pad_cols(size_t new_cols, size_t col_offset) const;
    bool sat(std::span<const int64_t> point) const;  // exact integer check
};

}  // namespace zkmc
