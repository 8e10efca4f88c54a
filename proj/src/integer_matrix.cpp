#include "psigma/integer_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace psigma {

IntegerMatrix IntegerMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets)
{
    IntegerMatrix m(rows, cols);
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t k = 0; k < triplets.size();) {
        auto& t = triplets[k];
        if (t.row >= rows || t.col >= cols)
            throw std::out_of_range("triplet outside matrix bounds");
        Integer sum = 0;
        std::size_t l = k;
        for (; l < triplets.size() && triplets[l].row == t.row && triplets[l].col == t.col; ++l)
            sum += triplets[l].value;
        if (sum != 0)
            m.data_[t.row].push_back({t.col, std::move(sum)});
        k = l;
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<Integer>>& dense)
{
    const std::size_t cols = dense.empty() ? 0 : dense.front().size();
    IntegerMatrix m(dense.size(), cols);
    for (std::size_t r = 0; r < dense.size(); ++r) {
        if (dense[r].size() != cols)
            throw std::invalid_argument("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c)
            if (dense[r][c] != 0)
                m.data_[r].push_back({c, dense[r][c]});
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<long long>>& dense)
{
    std::vector<std::vector<Integer>> big;
    for (const auto& row : dense)
        big.emplace_back(row.begin(), row.end());
    return from_dense(big);
}

IntegerMatrix IntegerMatrix::identity(std::size_t size)
{
    IntegerMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        m.data_[i].push_back({i, 1});
    return m;
}

std::size_t IntegerMatrix::nnz() const
{
    std::size_t total = 0;
    for (const auto& r : data_)
        total += r.size();
    return total;
}

Integer IntegerMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
    if (it != row.end() && it->col == c)
        return it->value;
    return 0;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const Integer& v)
{
    if (c >= cols_)
        throw std::out_of_range("column outside matrix bounds");
    auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
    if (it != row.end() && it->col == c) {
        if (v == 0)
            row.erase(it);
        else
            it->value = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
}

IntegerMatrix IntegerMatrix::transpose() const
{
    IntegerMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (const auto& e : data_[r])
            t.data_[e.col].push_back({r, e.value});
    return t;
}

std::vector<std::vector<Integer>> IntegerMatrix::to_dense() const
{
    std::vector<std::vector<Integer>> d(rows(), std::vector<Integer>(cols_));
    for (std::size_t r = 0; r < rows(); ++r)
        for (const auto& e : data_[r])
            d[r][e.col] = e.value;
    return d;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const
{
    if (cols_ != rhs.rows())
        throw std::invalid_argument("matrix dimensions do not agree");
    IntegerMatrix out(rows(), rhs.cols());
    std::vector<Integer> acc(rhs.cols());
    std::vector<char> touched(rhs.cols(), 0);
    std::vector<std::size_t> cols_used;
    for (std::size_t r = 0; r < rows(); ++r) {
        cols_used.clear();
        for (const auto& e : data_[r]) {
            for (const auto& f : rhs.data_[e.col]) {
                if (!touched[f.col]) {
                    touched[f.col] = 1;
                    cols_used.push_back(f.col);
                    acc[f.col] = 0;
                }
                acc[f.col] += e.value * f.value;
            }
        }
        std::sort(cols_used.begin(), cols_used.end());
        for (auto c : cols_used) {
            touched[c] = 0;
            if (acc[c] != 0)
                out.data_[r].push_back({c, acc[c]});
        }
    }
    return out;
}

DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b)
{
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    DenseMatrix out(a.size(), std::vector<Integer>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner)
            throw std::invalid_argument("matrix dimensions do not agree");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

} // namespace psigma
