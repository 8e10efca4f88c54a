#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace psigma {

/// Arbitrary-precision integer used for every exact computation.
using Integer = boost::multiprecision::cpp_int;

/// Sparse exact integer matrix, row-major. Each row keeps its nonzero entries sorted by column.
class IntegerMatrix {
public:
    struct Entry {
        std::size_t col;
        Integer value;
        bool operator==(const Entry&) const = default;
    };
    using Row = std::vector<Entry>;

    struct Triplet {
        std::size_t row;
        std::size_t col;
        Integer value;
    };

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

    /// Duplicate positions are summed; zero sums are dropped.
    static IntegerMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
    static IntegerMatrix from_dense(const std::vector<std::vector<Integer>>& dense);
    static IntegerMatrix from_dense(const std::vector<std::vector<long long>>& dense);
    static IntegerMatrix identity(std::size_t size);

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const;

    const Row& row(std::size_t r) const { return data_[r]; }
    Integer at(std::size_t r, std::size_t c) const;
    /// Overwrite one entry (zero erases).
    void set(std::size_t r, std::size_t c, const Integer& v);

    bool is_zero() const { return nnz() == 0; }
    IntegerMatrix transpose() const;
    std::vector<std::vector<Integer>> to_dense() const;

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

using DenseMatrix = std::vector<std::vector<Integer>>;

DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b);

} // namespace psigma
