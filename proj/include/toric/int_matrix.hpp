#ifndef TORIC_INT_MATRIX_HPP
#define TORIC_INT_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "toric/checked.hpp"

namespace toric {

using IntVec = std::vector<i64>;

// Dense row-major integer matrix. Sizes in this project are tiny (ambient
// rank <= 8, bases <= a few hundred rows), so there is no attempt at being
// clever; all arithmetic is overflow-checked.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    i64& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    i64 at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntVec row(int i) const;
    void set_row(int i, const IntVec& v);
    void append_row(const IntVec& v);

    IntMatrix mul(const IntMatrix& rhs) const;
    IntMatrix transpose() const;
    IntMatrix pow(i64 e) const; // square matrices, e >= 0

    i64 trace() const;
    bool is_identity() const;

    // v as a column vector: returns (*this) * v.
    IntVec apply(const IntVec& v) const;

    // Byte string usable as a hash key and for deterministic ordering.
    std::string key() const;

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    std::strong_ordering operator<=>(const IntMatrix& o) const;

    const std::vector<i64>& data() const { return a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<i64> a_;
};

std::string to_string(const IntMatrix& m);

} // namespace toric

#endif
