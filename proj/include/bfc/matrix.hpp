#pragma once

#include "bfc/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace bfc {

// Dense exact-rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Q>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Q& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Q& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Q& s) const;
    Matrix transposed() const;

    bool is_zero() const;
    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Q> data_;
};

// Fraction-free (Bareiss) elimination on the row-scaled integer matrix.
std::size_t rank(const Matrix& m);
Q determinant(const Matrix& m);

// Unique solution of A x = b. Throws std::domain_error when the system is
// inconsistent or has more than one solution.
std::vector<Q> solve_unique(const Matrix& a, const std::vector<Q>& b);

// Rank after splitting into blocks that share no nonzero row or column.
// Equal to rank(m); cheaper when m is block diagonal up to permutation.
std::size_t block_rank(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace bfc
