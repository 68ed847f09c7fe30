#include "toric/int_matrix.hpp"

#include <cstring>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, int cols) {
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw DimensionError("row length " + std::to_string(rows[i].size()) +
                                 " does not match column count " + std::to_string(cols));
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(int i) const {
    return IntVec(a_.begin() + static_cast<size_t>(i) * cols_,
                  a_.begin() + static_cast<size_t>(i + 1) * cols_);
}

void IntMatrix::set_row(int i, const IntVec& v) {
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void IntMatrix::append_row(const IntVec& v) {
    if (rows_ == 0 && cols_ == 0)
        cols_ = static_cast<int>(v.size());
    else if (static_cast<int>(v.size()) != cols_)
        throw DimensionError("appended row has wrong length");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionError("matrix product shape mismatch");
    IntMatrix r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            i64 aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                r.at(i, j) = chk::add(r.at(i, j), chk::mul(aik, rhs.at(k, j)));
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::pow(i64 e) const {
    if (rows_ != cols_) throw DimensionError("pow of non-square matrix");
    IntMatrix acc = identity(rows_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc.mul(base);
        e >>= 1;
        if (e) base = base.mul(base);
    }
    return acc;
}

i64 IntMatrix::trace() const {
    if (rows_ != cols_) throw DimensionError("trace of non-square matrix");
    i64 t = 0;
    for (int i = 0; i < rows_; ++i) t = chk::add(t, at(i, i));
    return t;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DimensionError("vector length does not match matrix columns");
    IntVec r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        chk::Wide acc;
        for (int j = 0; j < cols_; ++j) acc.add_product(at(i, j), v[j]);
        r[i] = acc.value("matrix-vector product");
    }
    return r;
}

std::string IntMatrix::key() const {
    std::string s;
    s.resize(2 * sizeof(int) + a_.size() * sizeof(i64));
    std::memcpy(s.data(), &rows_, sizeof(int));
    std::memcpy(s.data() + sizeof(int), &cols_, sizeof(int));
    if (!a_.empty())
        std::memcpy(s.data() + 2 * sizeof(int), a_.data(), a_.size() * sizeof(i64));
    return s;
}

std::strong_ordering IntMatrix::operator<=>(const IntMatrix& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    for (size_t i = 0; i < a_.size(); ++i)
        if (auto c = a_[i] <=> o.a_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j);
    }
    os << "]";
    return os.str();
}

} // namespace toric
