#pragma once

// Exact integer and mod-2 linear algebra: Smith normal form, ranks,
// kernel triviality. The elimination kernels use OpenMP when available;
// chowring/reference.hpp keeps plain serial counterparts for testing.

#include <cstdint>
#include <vector>

#include "chowring/polynomial.hpp" // for Int

namespace chowring {

class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SmithResult {
    std::vector<Int> factors; // d_1 | d_2 | ..., all positive
    int rank = 0;             // number of nonzero factors == factors.size()
};

SmithResult smith_normal_form(const IntMatrix& m);

// Dense bit matrix over F_2, rows packed into 64-bit words.
class F2Matrix {
public:
    F2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          bits_(std::size_t(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const {
        return (bits_[std::size_t(r) * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void flip(int r, int c) { bits_[std::size_t(r) * words_ + c / 64] ^= std::uint64_t(1) << (c % 64); }
    void set(int r, int c, bool v) {
        if (get(r, c) != v) flip(r, c);
    }

    std::uint64_t* row(int r) { return bits_.data() + std::size_t(r) * words_; }
    const std::uint64_t* row(int r) const { return bits_.data() + std::size_t(r) * words_; }
    int words() const { return words_; }

private:
    int rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;
};

int f2_rank(F2Matrix m);

enum class Modulus { None, Two };

// Trivial kernel of the matrix as a map of free modules: over Z this means
// rank (from the Smith normal form) equals the number of columns; over F_2,
// full column rank of the mod-2 reduction.
bool kernel_is_zero(const IntMatrix& m, Modulus modulus);

} // namespace chowring
