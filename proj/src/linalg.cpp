#include "autorec/linalg.hpp"

#include <sstream>

#include "autorec/error.hpp"

namespace autorec {

CycloMatrix::CycloMatrix(CycloField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, CycloElement(field_)) {}

CycloMatrix CycloMatrix::identity(const CycloField& field, std::size_t n) {
    CycloMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloElement(field, BigRational(1));
    return m;
}

CycloElement CycloMatrix::trace() const {
    require(is_square(), "trace of a non-square matrix");
    CycloElement t(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool CycloMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

CycloMatrix& CycloMatrix::operator+=(const CycloMatrix& rhs) {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

CycloMatrix& CycloMatrix::operator*=(const CycloElement& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
    require(a.cols_ == b.rows_, "matrix shape mismatch in product");
    CycloMatrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const CycloElement& x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const CycloElement& y = b(l, j);
                if (y.is_zero()) continue;
                out(i, j) += x * y;
            }
        }
    return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string CycloMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

std::vector<std::size_t> rref_in_place(CycloMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const CycloElement inv = cyclo_inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const CycloElement factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<CycloElement>> nullspace(const CycloMatrix& a) {
    CycloMatrix m = a;
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<CycloElement>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<CycloElement> v(m.cols(), CycloElement(m.field()));
        v[free] = CycloElement(m.field(), BigRational(1));
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const CycloMatrix& a) {
    CycloMatrix m = a;
    return rref_in_place(m).size();
}

}  // namespace autorec
