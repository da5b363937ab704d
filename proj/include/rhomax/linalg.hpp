#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rhomax/numeric.hpp"

namespace rhomax {

// Dense integer matrix, row major.
class IntMat {
  public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMat(std::initializer_list<std::initializer_list<long>> init);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Exact rank by fraction-free (Bareiss) elimination with full pivoting.
std::size_t bareiss_rank(IntMat m);

// Exact rank by integer elimination with per-row gcd stripping. Same result
// as bareiss_rank, better behaved on the sparse structured matrices the
// local-algebra dimension computation produces.
std::size_t stripped_rank(IntMat m);

// Rank of the reduction mod p (p an odd prime < 2^31). Never exceeds the
// rational rank of the same integer matrix.
std::size_t rank_mod_p(const IntMat& m, std::uint32_t p);

// Sparse row set over Z for the same mod-p/exact rank pair, used by the
// Milnor number computation where materializing dense matrices is wasteful.
struct SparseRows {
    std::size_t cols = 0;
    // each row: sorted (column, value) pairs
    std::vector<std::vector<std::pair<std::size_t, Int>>> rows;
};

std::size_t sparse_rank_mod_p(const SparseRows& m, std::uint32_t p);
std::size_t sparse_rank_exact(const SparseRows& m);

}  // namespace rhomax
