#include "psigma/ring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>

namespace psigma {

namespace {

void check_n(int n)
{
    if (n < 1 || n > kMaxRingN)
        throw RingError(RingError::Code::TooLarge, "ring computations support 1 <= n <= " + std::to_string(kMaxRingN));
}

void check_generator(const RingGenerator& g, int n)
{
    if (g.i < 1 || g.j < 1 || g.i > n || g.j > n || g.i == g.j)
        throw RingError(RingError::Code::BadIndex, "no generator " + g.to_string() + " for n=" + std::to_string(n));
}

std::uint64_t below(int slot) { return (std::uint64_t{1} << slot) - 1; }

// Parity of the permutation sorting u, v, rest (rest already sorted, u, v not in rest).
int insertion_sign(int u, int v, std::uint64_t rest)
{
    int inv = std::popcount(rest & below(u)) + std::popcount(rest & below(v)) + (u > v ? 1 : 0);
    return inv % 2 == 0 ? 1 : -1;
}

// tails[h] = bitmask of tails t with an edge h <- t
using TailTable = std::array<std::uint32_t, kMaxRingN + 1>;

TailTable tail_table(std::uint64_t bits)
{
    TailTable tails{};
    while (bits) {
        const int s = std::countr_zero(bits);
        bits &= bits - 1;
        const auto g = RingGenerator::from_slot(s);
        tails[static_cast<std::size_t>(g.i)] |= 1u << g.j;
    }
    return tails;
}

bool has_directed_cycle(const TailTable& tails)
{
    std::array<int, kMaxRingN + 1> colour{};
    auto visit = [&](auto&& self, int v) -> bool {
        colour[static_cast<std::size_t>(v)] = 1;
        for (std::uint32_t m = tails[static_cast<std::size_t>(v)]; m; m &= m - 1) {
            const int t = std::countr_zero(m);
            if (colour[static_cast<std::size_t>(t)] == 1)
                return true;
            if (colour[static_cast<std::size_t>(t)] == 0 && self(self, t))
                return true;
        }
        colour[static_cast<std::size_t>(v)] = 2;
        return false;
    };
    for (int v = 1; v <= kMaxRingN; ++v)
        if (colour[static_cast<std::size_t>(v)] == 0 && visit(visit, v))
            return true;
    return false;
}

void accumulate(std::map<RingMonomial, Integer>& terms, const RingMonomial& m, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

} // namespace

std::string RingGenerator::to_string() const { return "a(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

int RingMonomial::degree() const { return std::popcount(bits_); }

std::vector<RingGenerator> RingMonomial::generators() const
{
    std::vector<RingGenerator> out;
    for (auto b = bits_; b; b &= b - 1)
        out.push_back(RingGenerator::from_slot(std::countr_zero(b)));
    return out;
}

std::strong_ordering RingMonomial::operator<=>(const RingMonomial& o) const
{
    if (auto c = degree() <=> o.degree(); c != 0)
        return c;
    const auto diff = bits_ ^ o.bits_;
    if (diff == 0)
        return std::strong_ordering::equal;
    return (bits_ >> std::countr_zero(diff) & 1u) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string RingMonomial::to_string() const
{
    std::string s;
    for (const auto& g : generators())
        s += (s.empty() ? "" : "^") + g.to_string();
    return s.empty() ? "1" : s;
}

std::optional<PlantedForest> monomial_to_forest(int n, const RingMonomial& m)
{
    std::vector<std::pair<int, int>> edges;
    for (const auto& g : m.generators()) {
        if (g.i > n || g.j > n)
            return std::nullopt;
        edges.emplace_back(g.i, g.j);
    }
    try {
        return PlantedForest::from_edges(n, edges);
    } catch (const ForestError&) {
        return std::nullopt;
    }
}

RingMonomial forest_to_monomial(const PlantedForest& f)
{
    std::uint64_t bits = 0;
    for (auto [h, t] : f.edges())
        bits |= std::uint64_t{1} << RingGenerator{h, t}.slot();
    return RingMonomial(bits);
}

RingElement RingElement::generator(int i, int j) { return monomial({{i, j}}); }

RingElement RingElement::monomial(const std::vector<RingGenerator>& factors, const Integer& coefficient)
{
    std::uint64_t bits = 0;
    int inversions = 0;
    for (const auto& g : factors) {
        check_generator(g, kMaxRingN);
        const int s = g.slot();
        if (bits >> s & 1u)
            return {};
        inversions += std::popcount(bits & ~below(s + 1));
        bits |= std::uint64_t{1} << s;
    }
    RingElement e;
    e.add(RingMonomial(bits), inversions % 2 == 0 ? coefficient : Integer(-coefficient));
    return e;
}

void RingElement::add(const RingMonomial& m, const Integer& c) { accumulate(terms_, m, c); }

RingElement RingElement::operator+(const RingElement& o) const
{
    RingElement r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add(m, c);
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + o * Integer(-1); }

RingElement RingElement::operator*(const Integer& c) const
{
    RingElement r;
    for (const auto& [m, v] : terms_)
        r.add(m, v * c);
    return r;
}

int RingElement::max_label() const
{
    int top = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& g : m.generators())
            top = std::max({top, g.i, g.j});
    return top;
}

std::string RingElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (m.degree() == 0)
            s += mag.str();
        else
            s += (mag == 1 ? "" : mag.str() + "*") + m.to_string();
    }
    return s;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, int n) : text_(text), n_(n) {}

    RingElement parse()
    {
        skip();
        if (at_end())
            fail("empty expression");
        RingElement result;
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = get() == '-' ? -1 : 1;
            skip();
        }
        while (true) {
            result = result + term() * Integer(sign);
            skip();
            if (at_end())
                break;
            const char op = get();
            if (op != '+' && op != '-')
                fail(std::string("unexpected '") + op + "'");
            sign = op == '-' ? -1 : 1;
            skip();
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw RingError(RingError::Code::ParseError, why + " at position " + std::to_string(pos_));
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get()
    {
        if (at_end())
            fail("unexpected end of input");
        return text_[pos_++];
    }
    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    void expect(char c)
    {
        skip();
        if (get() != c)
            fail(std::string("expected '") + c + "'");
    }
    std::string digits()
    {
        skip();
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            d += get();
        if (d.empty())
            fail("expected a number");
        return d;
    }
    int small_int()
    {
        const auto d = digits();
        if (d.size() > 3)
            fail("index too large");
        return std::stoi(d);
    }

    RingElement term()
    {
        Integer coefficient = 1;
        bool have_coefficient = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = Integer(digits());
            have_coefficient = true;
            skip();
            if (peek() == '*') {
                get();
                skip();
                if (peek() != 'a')
                    fail("expected a generator after '*'");
            }
        }
        if (peek() != 'a') {
            if (!have_coefficient)
                fail("expected a term");
            return RingElement::monomial({}, coefficient);
        }
        std::vector<RingGenerator> factors{generator()};
        skip();
        while (peek() == '^') {
            get();
            skip();
            factors.push_back(generator());
            skip();
        }
        return RingElement::monomial(factors, coefficient);
    }

    RingGenerator generator()
    {
        if (get() != 'a')
            fail("expected 'a'");
        expect('(');
        RingGenerator g;
        g.i = small_int();
        expect(',');
        g.j = small_int();
        expect(')');
        check_generator(g, n_);
        return g;
    }

    const std::string& text_;
    int n_;
    std::size_t pos_ = 0;
};

// Degree-two relation polynomials: a(ij)a(ji) and the three-term relation.
std::vector<RingElement> quadratic_relations(int n)
{
    std::vector<RingElement> rel;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            rel.push_back(RingElement::monomial({{i, j}, {j, i}}));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k)
                    continue;
                rel.push_back(RingElement::monomial({{k, j}, {j, i}}) - RingElement::monomial({{k, j}, {k, i}})
                    + RingElement::monomial({{i, j}, {k, i}}));
            }
    return rel;
}

RingElement concatenate(const RingElement& a, const RingElement& b)
{
    RingElement out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.bits() & mb.bits())
                continue;
            int inv = 0;
            for (auto x = ma.bits(); x; x &= x - 1)
                inv += std::popcount(mb.bits() & below(std::countr_zero(x)));
            out.add(RingMonomial(ma.bits() | mb.bits()), inv % 2 == 0 ? Integer(ca * cb) : Integer(-(ca * cb)));
        }
    }
    return out;
}

std::vector<RingMonomial> monomials_of_degree(int n, int d)
{
    const auto gens = ring_generators(n);
    std::vector<RingMonomial> out;
    if (d < 0 || d > static_cast<int>(gens.size()))
        return out;
    std::vector<int> pick(static_cast<std::size_t>(d));
    auto rec = [&](auto&& self, std::size_t start, int depth, std::uint64_t bits) -> void {
        if (depth == d) {
            out.emplace_back(bits);
            return;
        }
        for (std::size_t k = start; k < gens.size(); ++k)
            self(self, k + 1, depth + 1, bits | std::uint64_t{1} << gens[k].slot());
    };
    rec(rec, 0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

RingElement parse_ring_element(const std::string& text, int n)
{
    check_n(n);
    return Parser(text, n).parse();
}

RingElement normal_form(const RingElement& x, int n, std::size_t budget, NormalFormStats* stats)
{
    check_n(n);
    if (x.max_label() > n)
        throw RingError(RingError::Code::BadIndex, "element uses labels beyond n=" + std::to_string(n));
    NormalFormStats local;
    std::map<RingMonomial, Integer> pending = x.terms();
    RingElement out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::uint64_t bits = node.key().bits();
        const Integer& c = node.mapped();
        const auto tails = tail_table(bits);
        if (has_directed_cycle(tails))
            continue;
        int k = 0;
        for (int h = 1; h <= n && k == 0; ++h)
            if (std::popcount(tails[static_cast<std::size_t>(h)]) >= 2)
                k = h;
        if (k == 0) {
            out.add(node.key(), c);
            continue;
        }
        if (++local.rewrites > budget) {
            local.budget_exhausted = true;
            break;
        }
        std::uint32_t t = tails[static_cast<std::size_t>(k)];
        const int j = std::countr_zero(t);
        t &= t - 1;
        const int i = std::countr_zero(t);
        const int x_slot = RingGenerator{k, j}.slot();
        const int y_slot = RingGenerator{k, i}.slot();
        const std::uint64_t rest = bits & ~(std::uint64_t{1} << x_slot) & ~(std::uint64_t{1} << y_slot);
        const int s0 = insertion_sign(x_slot, y_slot, rest);
        // a(kj)a(ki) -> a(kj)a(ji) + a(ij)a(ki)
        const std::array<std::pair<int, int>, 2> replacements{
            std::pair{x_slot, RingGenerator{j, i}.slot()},
            std::pair{RingGenerator{i, j}.slot(), y_slot},
        };
        for (auto [u, v] : replacements) {
            if ((rest >> u & 1u) || (rest >> v & 1u))
                continue;
            const int s = s0 * insertion_sign(u, v, rest);
            accumulate(pending, RingMonomial(rest | std::uint64_t{1} << u | std::uint64_t{1} << v), s > 0 ? c : Integer(-c));
        }
    }
    if (local.budget_exhausted) {
        std::map<int, RingElement> by_degree;
        for (const auto& [m, c] : x.terms())
            by_degree[m.degree()].add(m, c);
        out = RingElement();
        for (const auto& [d, part] : by_degree)
            out = out + RelationOracle(n, d).reduce(part);
    }
    if (stats)
        *stats = local;
    return out;
}

RingElement multiply(const RingElement& a, const RingElement& b, int n) { return normal_form(concatenate(a, b), n); }

RelationOracle::RelationOracle(int n, int degree) : n_(n), degree_(degree)
{
    check_n(n);
    monomials_ = monomials_of_degree(n, degree);
    if (monomials_.size() > 2'000'000)
        throw RingError(RingError::Code::TooLarge, "degree too large for the relation oracle");

    // elimination order: non-forest monomials first, then forests, each in canonical order
    std::vector<std::size_t> order;
    std::vector<std::size_t> forests;
    for (std::size_t k = 0; k < monomials_.size(); ++k)
        (monomial_to_forest(n, monomials_[k]) ? forests : order).push_back(k);
    forest_count_ = forests.size();
    const std::size_t nonforest = order.size();
    order.insert(order.end(), forests.begin(), forests.end());
    monomial_of_ = order;
    column_of_.assign(monomials_.size(), 0);
    for (std::size_t c = 0; c < order.size(); ++c)
        column_of_[order[c]] = static_cast<std::uint32_t>(c);

    auto canonical_index = [&](const RingMonomial& m) {
        return static_cast<std::uint32_t>(std::lower_bound(monomials_.begin(), monomials_.end(), m) - monomials_.begin());
    };
    if (degree >= 2) {
        const auto rel = quadratic_relations(n);
        const auto cofactors = monomials_of_degree(n, degree - 2);
        for (const auto& r : rel) {
            for (const auto& m : cofactors) {
                RingElement cofactor;
                cofactor.add(m, 1);
                const auto product = concatenate(r, cofactor);
                if (product.is_zero())
                    continue;
                SparseRow row;
                for (const auto& [mono, c] : product.terms())
                    row.emplace_back(canonical_index(mono), c);
                relations_.push_back(std::move(row));
            }
        }
    }

    // integer echelon form in elimination columns
    std::vector<SparseRow> rows;
    for (const auto& r : relations_) {
        SparseRow e;
        for (const auto& [col, c] : r)
            e.emplace_back(column_of_[col], c);
        std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(e));
    }
    std::vector<std::vector<std::size_t>> bucket(monomials_.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        bucket[rows[r].front().first].push_back(r);

    auto subtract = [](SparseRow& target, const Integer& q, const SparseRow& p) {
        SparseRow merged;
        merged.reserve(target.size() + p.size());
        auto a = target.begin();
        auto b = p.begin();
        while (a != target.end() || b != p.end()) {
            if (b == p.end() || (a != target.end() && a->first < b->first)) {
                merged.push_back(std::move(*a++));
            } else if (a == target.end() || b->first < a->first) {
                merged.emplace_back(b->first, -(q * b->second));
                ++b;
            } else {
                Integer v = a->second - q * b->second;
                if (v != 0)
                    merged.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        target.swap(merged);
    };
    auto abs_lead = [&](std::size_t r) { return rows[r].front().second < 0 ? Integer(-rows[r].front().second) : rows[r].front().second; };

    pivots_.assign(nonforest, {});
    for (std::size_t col = 0; col < monomials_.size(); ++col) {
        auto& here = bucket[col];
        if (here.empty()) {
            if (col < nonforest && basis_ok_) {
                basis_ok_ = false;
                failure_ = monomials_[monomial_of_[col]].to_string() + " is not reducible to forests";
            }
            continue;
        }
        if (col >= nonforest) {
            if (basis_ok_) {
                basis_ok_ = false;
                failure_ = "a relation survives among forest monomials";
            }
            continue;
        }
        // Euclid on the leading entries until a single row leads this column
        while (here.size() > 1) {
            auto best = std::min_element(here.begin(), here.end(), [&](std::size_t a, std::size_t b) { return abs_lead(a) < abs_lead(b); });
            const std::size_t p = *best;
            std::vector<std::size_t> keep{p};
            for (std::size_t r : here) {
                if (r == p)
                    continue;
                const Integer q = rows[r].front().second / rows[p].front().second;
                subtract(rows[r], q, rows[p]);
                if (rows[r].empty())
                    continue;
                if (rows[r].front().first == col)
                    keep.push_back(r);
                else
                    bucket[rows[r].front().first].push_back(r);
            }
            here.swap(keep);
        }
        SparseRow pivot = std::move(rows[here.front()]);
        here.clear();
        if (pivot.front().second == -1)
            for (auto& e : pivot)
                e.second = -e.second;
        if (pivot.front().second != 1 && basis_ok_) {
            basis_ok_ = false;
            failure_ = monomials_[monomial_of_[col]].to_string() + " has a non-unit pivot " + pivot.front().second.str();
        }
        pivots_[col] = std::move(pivot);
    }
}

RingElement RelationOracle::reduce(const RingElement& x) const
{
    if (!basis_ok_)
        throw RingError(RingError::Code::OracleFailure, failure_);
    std::map<std::uint32_t, Integer> v;
    for (const auto& [m, c] : x.terms()) {
        if (m.degree() != degree_)
            throw RingError(RingError::Code::BadIndex, "oracle for degree " + std::to_string(degree_) + " given " + m.to_string());
        auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
        if (it == monomials_.end() || *it != m)
            throw RingError(RingError::Code::BadIndex, m.to_string() + " uses labels beyond n");
        v[column_of_[static_cast<std::size_t>(it - monomials_.begin())]] += c;
    }
    const std::size_t nonforest = pivots_.size();
    while (!v.empty() && v.begin()->first < nonforest) {
        auto node = v.extract(v.begin());
        if (node.mapped() == 0)
            continue;
        for (const auto& [col, c] : pivots_[node.key()]) {
            if (col == node.key())
                continue;
            auto& slot = v[col];
            slot -= node.mapped() * c;
            if (slot == 0)
                v.erase(col);
        }
    }
    RingElement out;
    for (const auto& [col, c] : v)
        out.add(monomials_[monomial_of_[col]], c);
    return out;
}

IntegerMatrix RelationOracle::relation_matrix() const
{
    std::vector<IntegerMatrix::Triplet> t;
    for (std::size_t r = 0; r < relations_.size(); ++r)
        for (const auto& [col, c] : relations_[r])
            t.push_back({r, col, c});
    return IntegerMatrix::from_triplets(relations_.size(), monomials_.size(), std::move(t));
}

std::vector<std::size_t> poincare_psigma(int n)
{
    check_n(n);
    std::vector<std::size_t> out;
    for (int d = 0; d <= n - 1; ++d)
        out.push_back(enumerate_planted_forests(n, d).size());
    return out;
}

Integer euler_psigma(int n)
{
    Integer total = 0;
    int sign = 1;
    for (auto r : poincare_psigma(n)) {
        total += sign * static_cast<long long>(r);
        sign = -sign;
    }
    return total;
}

std::vector<LerayHirschRow> lh_rank_check(int n, const std::vector<std::size_t>& opsigma_column)
{
    const auto lhs = poincare_psigma(n);
    auto col = [&](int i) -> Integer {
        if (i < 0 || i >= static_cast<int>(opsigma_column.size()))
            return 0;
        return static_cast<unsigned long long>(opsigma_column[static_cast<std::size_t>(i)]);
    };
    std::vector<LerayHirschRow> rows;
    for (int i = 0; i < static_cast<int>(lhs.size()); ++i)
        rows.push_back({i, static_cast<unsigned long long>(lhs[static_cast<std::size_t>(i)]), n * col(i - 1) + col(i)});
    return rows;
}

std::vector<std::pair<int, int>> opsigma_generator_set(int n)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && i != 1 && !(i == 2 && j == 1))
                out.emplace_back(i, j);
    return out;
}

std::vector<RingGenerator> ring_generators(int n)
{
    check_n(n);
    std::vector<RingGenerator> out;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            if (i != j)
                out.push_back({i, j});
    return out;
}

} // namespace psigma
