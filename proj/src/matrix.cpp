#include "bfc/matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace bfc {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Q(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Q>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (const auto& x : row) data_.push_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Q& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
    return *this + other.scaled(Q(-1));
}

Matrix Matrix::scaled(const Q& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

namespace {

struct Echelon {
    std::vector<std::vector<Z>> rows;
    std::vector<std::size_t> pivot_cols;
    int swaps = 0;
};

// Each row is multiplied by the lcm of its denominators; scale collects the
// product of those multipliers so determinants can be recovered.
std::vector<std::vector<Z>> integer_rows(const Matrix& m, Z* scale) {
    std::vector<std::vector<Z>> out(m.rows(), std::vector<Z>(m.cols()));
    if (scale) *scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Z l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        if (scale) *scale *= l;
    }
    return out;
}

// Bareiss: every division below is exact because each entry is a minor.
Echelon bareiss(std::vector<std::vector<Z>> a, std::size_t ncols) {
    Echelon e;
    const std::size_t nrows = a.size();
    Z prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && a[p][c] == 0) ++p;
        if (p == nrows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            ++e.swaps;
        }
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Z t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rows = std::move(a);
    return e;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(integer_rows(m, nullptr), m.cols()).pivot_cols.size();
}

Q determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Q(1);
    Z scale;
    Echelon e = bareiss(integer_rows(m, &scale), n);
    if (e.pivot_cols.size() < n) return Q(0);
    Q d(e.rows[n - 1][n - 1], scale);
    d.canonicalize();
    return (e.swaps % 2) ? Q(-d) : d;
}

std::vector<Q> solve_unique(const Matrix& a, const std::vector<Q>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    const std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    Echelon e = bareiss(integer_rows(aug, nullptr), n + 1);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) throw std::domain_error("solve: inconsistent system");
    if (e.pivot_cols.size() < n) throw std::domain_error("solve: solution is not unique");
    std::vector<Q> x(n);
    for (std::size_t r = n; r-- > 0;) {
        const std::size_t c = e.pivot_cols[r];
        Q acc(e.rows[r][n]);
        for (std::size_t j = c + 1; j < n; ++j) acc -= Q(e.rows[r][j]) * x[j];
        x[c] = acc / Q(e.rows[r][c]);
    }
    return x;
}

std::size_t block_rank(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    // Union-find over rows [0,R) and columns [R,R+C).
    std::vector<std::size_t> parent(R + C);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j)
            if (m(i, j) != 0) parent[find(i)] = find(R + j);
    std::vector<std::vector<std::size_t>> brows(R + C), bcols(R + C);
    for (std::size_t i = 0; i < R; ++i) brows[find(i)].push_back(i);
    for (std::size_t j = 0; j < C; ++j) bcols[find(R + j)].push_back(j);
    std::size_t total = 0;
    for (std::size_t b = 0; b < R + C; ++b) {
        if (brows[b].empty() || bcols[b].empty()) continue;
        Matrix sub(brows[b].size(), bcols[b].size());
        for (std::size_t i = 0; i < brows[b].size(); ++i)
            for (std::size_t j = 0; j < bcols[b].size(); ++j) sub(i, j) = m(brows[b][i], bcols[b][j]);
        total += rank(sub);
    }
    return total;
}

std::string to_string(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            s += to_string(m(i, j));
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace bfc
