#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lislab/types.hpp"

namespace lislab {

/// Dense square integer matrix with entries in {0,...,M}. Boolean matrices
/// are the M = 1 case.
class Matrix {
public:
    /// All-zero n x n matrix with entry bound M. Throws InvalidInput if
    /// n < 1 or M < 1.
    Matrix(std::size_t n, Weight bound);

    /// Row-major entries; throws InvalidInput on size mismatch or any entry
    /// outside {0,...,M}.
    Matrix(std::size_t n, Weight bound, std::vector<Weight> entries);

    static Matrix from_rows(Weight bound, const std::vector<std::vector<Weight>>& rows);

    std::size_t size() const noexcept { return n_; }
    Weight bound() const noexcept { return bound_; }
    bool is_boolean() const noexcept { return bound_ == 1; }

    Weight operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
    Weight at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, Weight value);

    std::span<const Weight> row(std::size_t r) const {
        return {entries_.data() + r * n_, n_};
    }
    std::vector<Weight> column(std::size_t c) const;
    const std::vector<Weight>& entries() const noexcept { return entries_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_;
    Weight bound_;
    std::vector<Weight> entries_;
};

/// Sequence of bits, each 0 or 1.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : bits_(length, 0) {}
    explicit BitVector(std::vector<std::uint8_t> bits);

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Reference (max,+) product, plain triple loop.
Matrix maxplus_product(const Matrix& a, const Matrix& b);

/// Reference Boolean product: u[i] = OR_j (A[i][j] AND v[j]).
BitVector boolean_matvec(const Matrix& a, const BitVector& v);

// Text formats. Matrix: "n M" header line, then n rows of n integers.
// BitVector: one line of space-separated bits.
Matrix parse_matrix(std::istream& in);
Matrix parse_matrix(const std::string& text);
void write_matrix(std::ostream& out, const Matrix& m);
std::string format_matrix(const Matrix& m);

BitVector parse_bitvector(const std::string& line);
std::string format_bitvector(const BitVector& v);

}  // namespace lislab
