#include "zkmc/linsys.hpp"

namespace zkmc {

IntMat IntMat::vstack(const IntMat& top, const IntMat& bottom) {
    if (top.cols != bottom.cols && top.rows && bottom.rows)
        throw Error("vstack: column mismatch");
    IntMat out(top.rows + bottom.rows, top.rows ? top.cols : bottom.cols);
    std::copy(top.a.begin(), top.a.end(), out.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), out.a.begin() + ptrdiff_t(top.a.size()));
    return out;
}

IntMat IntMat::pad_cols(size_t new_cols, size_t col_offset) const {
    if (col_offset + cols > new_cols) throw Error("pad_cols: does not fit");
    IntMat out(rows, new_cols);
    for (size_t r = 0; r < rows; r++)
        for (size_t c = 0; c < cols; c++) out.at(r, c + col_offset) = at(r, c);
    return out;
}

IntMat IntMat::transpose() const {
    IntMat out(cols, rows);
    for (size_t r = 0; r < rows; r++)
        for (size_t c = 0; c < cols; c++) out.at(c, r) = at(r, c);
    return out;
}

int64_t IntMat::max_abs() const {
    int64_t m = 0;
    for (int64_t v : a) m = std::max(m, v < 0 ? -v : v);
    return m;
}

LinSys LinSys::vstack(const LinSys& top, const LinSys& bottom) {
    LinSys out;
    out.A = IntMat::vstack(top.A, bottom.A);
    out.b = top.b;
    out.b.insert(out.b.end(), bottom.b.begin(), bottom.b.end());
    return out;
}

LinSys LinSys::pad_cols(size_t new_cols, size_t col_offset) const {
    return {A.pad_cols(new_cols, col_offset), b};
}

bool LinSys::sat(std::span<const int64_t> point) const {
    if (point.size() != A.cols) throw Error("sat: dimension mismatch");
    for (size_t r = 0; r < A.rows; r++) {
        // __int128 accumulation: coefficients and points are well within range
        __int128 acc = 0;
        for (size_t c = 0; c < A.cols; c++) acc += __int128(A.at(r, c)) * point[c];
        if (acc > b[r]) return false;
    }
    return true;
}

}  // namespace zkmc
