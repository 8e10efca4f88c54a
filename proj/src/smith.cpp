#include "psigma/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>

namespace psigma {

std::vector<Integer> SNFResult::torsion() const
{
    std::vector<Integer> out;
    for (const auto& d : invariant_factors)
        if (d > 1)
            out.push_back(d);
    return out;
}

namespace {

struct Overflow {};

inline std::int64_t sub_mul(std::int64_t x, std::int64_t a, std::int64_t y)
{
    std::int64_t p = 0;
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, y, &p) || __builtin_sub_overflow(x, p, &r))
        throw Overflow{};
    return r;
}
inline Integer sub_mul(const Integer& x, const Integer& a, const Integer& y) { return x - a * y; }

inline std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t p = 0;
    if (__builtin_mul_overflow(a, b, &p))
        throw Overflow{};
    return p;
}
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }

template <class T> T from_integer(const Integer& v);
template <> std::int64_t from_integer<std::int64_t>(const Integer& v)
{
    // keep headroom so negation never overflows
    if (v > std::numeric_limits<std::int64_t>::max() / 2 || v < -(std::numeric_limits<std::int64_t>::max() / 2))
        throw Overflow{};
    return v.convert_to<std::int64_t>();
}
template <> Integer from_integer<Integer>(const Integer& v) { return v; }

template <class T> bool is_unit(const T& v) { return v == 1 || v == -1; }

Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

template <class T>
class SparseEliminator {
public:
    explicit SparseEliminator(const IntegerMatrix& m) : rows_(m.rows()), col_rows_(m.cols())
    {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            auto& row = rows_[r];
            row.reserve(m.row(r).size());
            for (const auto& e : m.row(r)) {
                row.emplace_back(static_cast<std::uint32_t>(e.col), from_integer<T>(e.value));
                col_rows_[e.col].push_back(static_cast<std::uint32_t>(r));
            }
            refresh(static_cast<std::uint32_t>(r));
        }
    }

    std::vector<Integer> run()
    {
        std::size_t units = 0;
        while (!unit_rows_.empty()) {
            const std::uint32_t r = unit_rows_.begin()->second;
            // Markowitz: among unit entries prefer the sparsest column
            std::uint32_t best_col = 0;
            std::size_t best_count = std::numeric_limits<std::size_t>::max();
            T pivot{};
            for (const auto& [c, v] : rows_[r]) {
                if (is_unit(v) && col_rows_[c].size() < best_count) {
                    best_count = col_rows_[c].size();
                    best_col = c;
                    pivot = v;
                }
            }
            eliminate(r, best_col, pivot);
            ++units;
        }

        // dense remainder
        std::vector<std::uint32_t> live_rows;
        std::vector<std::uint32_t> live_cols;
        for (std::uint32_t r = 0; r < rows_.size(); ++r)
            if (!rows_[r].empty())
                live_rows.push_back(r);
        for (std::uint32_t c = 0; c < col_rows_.size(); ++c)
            if (!col_rows_[c].empty())
                live_cols.push_back(c);
        std::vector<Integer> factors(units, Integer(1));
        if (!live_rows.empty()) {
            std::vector<std::size_t> col_index(col_rows_.size());
            for (std::size_t k = 0; k < live_cols.size(); ++k)
                col_index[live_cols[k]] = k;
            DenseMatrix dense(live_rows.size(), std::vector<Integer>(live_cols.size()));
            for (std::size_t i = 0; i < live_rows.size(); ++i)
                for (const auto& [c, v] : rows_[live_rows[i]])
                    dense[i][col_index[c]] = Integer(v);
            auto rest = smith_dense(dense);
            factors.insert(factors.end(), rest.begin(), rest.end());
        }
        return factors;
    }

private:
    using Row = std::vector<std::pair<std::uint32_t, T>>;

    void refresh(std::uint32_t r)
    {
        if (row_key_[r].first != 0)
            unit_rows_.erase(row_key_[r]);
        row_key_[r] = {0, r};
        const auto& row = rows_[r];
        if (std::any_of(row.begin(), row.end(), [](const auto& e) { return is_unit(e.second); })) {
            row_key_[r] = {row.size(), r};
            unit_rows_.insert(row_key_[r]);
        }
    }

    static void drop(std::vector<std::uint32_t>& list, std::uint32_t r)
    {
        auto it = std::find(list.begin(), list.end(), r);
        *it = list.back();
        list.pop_back();
    }

    void eliminate(std::uint32_t r, std::uint32_t c, const T& pivot)
    {
        const Row pivot_row = rows_[r];
        const std::vector<std::uint32_t> targets = col_rows_[c];
        Row merged;
        for (std::uint32_t r2 : targets) {
            if (r2 == r)
                continue;
            Row& row = rows_[r2];
            auto at = std::find_if(row.begin(), row.end(), [c](const auto& e) { return e.first == c; });
            const T factor = mul(at->second, pivot); // pivot is its own inverse
            merged.clear();
            merged.reserve(row.size() + pivot_row.size());
            auto a = row.begin();
            auto b = pivot_row.begin();
            while (a != row.end() || b != pivot_row.end()) {
                if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
                    merged.push_back(std::move(*a++));
                } else if (a == row.end() || b->first < a->first) {
                    merged.emplace_back(b->first, sub_mul(T(0), factor, b->second));
                    col_rows_[b->first].push_back(r2);
                    ++b;
                } else {
                    T value = sub_mul(a->second, factor, b->second);
                    if (value != 0)
                        merged.emplace_back(a->first, std::move(value));
                    else
                        drop(col_rows_[a->first], r2);
                    ++a;
                    ++b;
                }
            }
            row.swap(merged);
            refresh(r2);
        }
        for (const auto& e : pivot_row)
            drop(col_rows_[e.first], r);
        rows_[r].clear();
        refresh(r);
    }

    std::vector<Row> rows_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::set<std::pair<std::size_t, std::uint32_t>> unit_rows_;
    std::vector<std::pair<std::size_t, std::uint32_t>> row_key_ = std::vector<std::pair<std::size_t, std::uint32_t>>(rows_.size());
};

DenseMatrix identity_dense(std::size_t n)
{
    DenseMatrix id(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        id[i][i] = 1;
    return id;
}

} // namespace

std::vector<Integer> smith_dense(DenseMatrix& a, DenseMatrix* u, DenseMatrix* v)
{
    const std::size_t m = a.size();
    const std::size_t n = m ? a.front().size() : 0;
    if (u)
        *u = identity_dense(m);
    if (v)
        *v = identity_dense(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        std::swap(a[i], a[j]);
        if (u)
            std::swap((*u)[i], (*u)[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (auto& row : a)
            std::swap(row[i], row[j]);
        if (v)
            for (auto& row : *v)
                std::swap(row[i], row[j]);
    };
    // row_dst -= q * row_src
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t k = 0; k < n; ++k)
            if (a[src][k] != 0)
                a[dst][k] -= q * a[src][k];
        if (u)
            for (std::size_t k = 0; k < m; ++k)
                if ((*u)[src][k] != 0)
                    (*u)[dst][k] -= q * (*u)[src][k];
    };
    // col_dst -= q * col_src
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t k = 0; k < m; ++k)
            if (a[k][src] != 0)
                a[k][dst] -= q * a[k][src];
        if (v)
            for (auto& row : *v)
                if (row[src] != 0)
                    row[dst] -= q * row[src];
    };

    std::vector<Integer> factors;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // smallest nonzero magnitude in the trailing block
        std::size_t pi = m;
        std::size_t pj = n;
        Integer best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (pi == m || abs_value(a[i][j]) < best)) {
                    best = abs_value(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi == m)
            break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        while (true) {
            bool residue = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0)
                    continue;
                Integer q = a[i][t] / a[t][t];
                add_row(i, t, q);
                residue |= a[i][t] != 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0)
                    continue;
                Integer q = a[t][j] / a[t][t];
                add_col(j, t, q);
                residue |= a[t][j] != 0;
            }
            if (residue) {
                // a smaller remainder appeared in the pivot row or column; promote it
                std::size_t bi = t;
                std::size_t bj = t;
                Integer b = abs_value(a[t][t]);
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a[i][t] != 0 && abs_value(a[i][t]) < b) {
                        b = abs_value(a[i][t]);
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[t][j] != 0 && abs_value(a[t][j]) < b) {
                        b = abs_value(a[t][j]);
                        bi = t;
                        bj = j;
                    }
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            // enforce divisibility of the trailing block
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, Integer(-1));
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t])
                x = -x;
            if (u)
                for (auto& x : (*u)[t])
                    x = -x;
        }
        factors.push_back(a[t][t]);
    }
    return factors;
}

SNFResult smith_normal_form(const IntegerMatrix& m)
{
    try {
        return {SparseEliminator<std::int64_t>(m).run()};
    } catch (const Overflow&) {
        return {SparseEliminator<Integer>(m).run()};
    }
}

SmithDecomposition smith_decomposition(const IntegerMatrix& m)
{
    SmithDecomposition out;
    out.D = m.to_dense();
    if (out.D.empty()) {
        out.U = {};
        out.V = identity_dense(m.cols());
        return out;
    }
    out.invariant_factors = smith_dense(out.D, &out.U, &out.V);
    return out;
}

} // namespace psigma
