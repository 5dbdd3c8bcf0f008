#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "autorec/cyclotomic.hpp"

namespace autorec {

/// Dense matrix over a cyclotomic field, row-major.
class CycloMatrix {
public:
    CycloMatrix(CycloField field, std::size_t rows, std::size_t cols);

    static CycloMatrix identity(const CycloField& field, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const CycloField& field() const noexcept { return field_; }

    CycloElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycloElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CycloElement trace() const;
    bool is_zero() const;

    CycloMatrix& operator+=(const CycloMatrix& rhs);
    CycloMatrix& operator*=(const CycloElement& c);
    friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
    friend CycloMatrix operator+(CycloMatrix a, const CycloMatrix& b) { return a += b; }
    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

    std::string to_string() const;

private:
    CycloField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<CycloElement> data_;
};

/// Basis of { x : A x = 0 } from the reduced row echelon form; each basis vector
/// has a 1 in one free column and 0 in the others.
std::vector<std::vector<CycloElement>> nullspace(const CycloMatrix& a);

std::size_t rank(const CycloMatrix& a);

/// Reduce `m` to reduced row echelon form in place; returns the pivot columns,
/// which are the greedy-leftmost maximal set of independent columns.
std::vector<std::size_t> rref_in_place(CycloMatrix& m);

/// Characteristic polynomial det(y I - A) = sum_i c_i y^i (c_n = 1) by the
/// Faddeev-LeVerrier trace recursion. Works over any commutative ring containing Q
/// since it only divides by integers. `identity` is the unit matrix of A's shape.
template <class Matrix, class Scalar>
std::vector<Scalar> faddeev_leverrier(const Matrix& a, const Matrix& identity, const Scalar& one) {
    const std::size_t n = identity.rows();
    std::vector<Scalar> c(n + 1, one * BigRational(0));
    c[n] = one;
    Matrix m = identity;
    m *= c[0];  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix scaled = identity;
        scaled *= c[n - k + 1];
        m = a * m;
        m += scaled;
        Scalar t = (a * m).trace();
        c[n - k] = t * BigRational(-1, static_cast<long>(k));
    }
    return c;
}

}  // namespace autorec
