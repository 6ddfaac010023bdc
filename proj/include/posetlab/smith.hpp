#pragma once

/**
 * Exact Smith normal form of sparse integer matrices.
 *
 * The eliminator first sweeps unit pivots column by column (choosing the
 * shortest pivot row), which handles almost all of a boundary matrix, then
 * diagonalises the residual block with minimal-absolute-value pivoting.
 * Arithmetic runs in overflow-checked 64-bit integers; on overflow the
 * computation restarts with arbitrary-precision integers.
 */

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace posetlab {

using BigInt = boost::multiprecision::cpp_int;

struct Triplet {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
};

struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Duplicate positions are summed.
    std::vector<Triplet> entries;
};

struct SmithForm {
    std::size_t rank = 0;
    /// Nonzero diagonal d1 | d2 | ... | d_rank, all positive.
    std::vector<BigInt> invariant_factors;
    /// True if the arbitrary-precision path was needed.
    bool used_bigint = false;

    /// Invariant factors greater than one.
    std::vector<BigInt> torsion() const;
};

SmithForm smith_normal_form(const SparseIntMatrix& m);

/// Dense textbook reference (full pivot search, arbitrary precision). Only
/// meant for small matrices; the test suite checks the sparse path against it.
SmithForm smith_normal_form_dense(const std::vector<std::vector<BigInt>>& m);

/// Rank over Z/p by Gaussian elimination.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p = 2147483647U);

/// Dense view, for tests and small inputs.
std::vector<std::vector<BigInt>> to_dense(const SparseIntMatrix& m);

/// Sparse triplet text format: a header line "rows cols" followed by one
/// "row col value" line per entry (0-based). Lines starting with '#' are
/// comments.
SparseIntMatrix read_triplets(std::istream& in);
void write_triplets(std::ostream& out, const SparseIntMatrix& m);

}  // namespace posetlab
