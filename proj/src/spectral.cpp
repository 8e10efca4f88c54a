#include "psigma/spectral.hpp"

#include "psigma/parallel.hpp"
#include "psigma/smith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace psigma {

namespace {

using SmallMatrix = std::vector<std::vector<long long>>;

// q-subsets of {0..r-1} as bitmasks in lexicographic order, with the inverse lookup.
struct SubsetTable {
    std::vector<std::uint32_t> masks;
    std::vector<std::size_t> index; // by mask
};

const SubsetTable& subsets(std::size_t r, int q)
{
    static const auto tables = [] {
        std::array<std::array<SubsetTable, 8>, 8> t{};
        for (std::size_t rr = 0; rr < 8; ++rr) {
            for (int qq = 0; qq < 8; ++qq) {
                auto& tab = t[rr][static_cast<std::size_t>(qq)];
                tab.index.assign(std::size_t{1} << rr, 0);
                std::vector<std::vector<std::size_t>> lists;
                for (std::uint32_t m = 0; m < (1u << rr); ++m)
                    if (std::popcount(m) == qq) {
                        std::vector<std::size_t> l;
                        for (std::size_t k = 0; k < rr; ++k)
                            if (m >> k & 1u)
                                l.push_back(k);
                        lists.push_back(std::move(l));
                    }
                std::sort(lists.begin(), lists.end());
                for (const auto& l : lists) {
                    std::uint32_t m = 0;
                    for (auto k : l)
                        m |= 1u << k;
                    tab.index[m] = tab.masks.size();
                    tab.masks.push_back(m);
                }
            }
        }
        return t;
    }();
    if (r >= 8 || q < 0 || q >= 8)
        throw SpectralError(SpectralError::Code::BadCoordinates, "subset table out of range");
    return tables[r][static_cast<std::size_t>(q)];
}

std::vector<std::size_t> mask_positions(std::uint32_t m)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; m; ++k, m >>= 1)
        if (m & 1u)
            out.push_back(k);
    return out;
}

long long determinant(SmallMatrix a)
{
    // fraction-free elimination (Bareiss) on a tiny matrix
    const std::size_t n = a.size();
    long long sign = 1;
    long long prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

SmallMatrix restriction_small(const Hypertree& a, const Hypertree& b, const GeneratorSet& basis_a, const GeneratorSet& basis_b)
{
    SmallMatrix m(basis_b.size(), std::vector<long long>(basis_a.size(), 0));
    for (std::size_t x = 0; x < basis_b.size(); ++x) {
        const auto coords = express_in_basis(a, basis_b[x]);
        for (std::size_t y = 0; y < basis_a.size(); ++y)
            m[x][y] = coords[y];
    }
    (void)b;
    return m;
}

SmallMatrix exterior_small(const SmallMatrix& m, std::size_t rows, std::size_t cols, int q)
{
    const auto& rs = subsets(rows, q);
    const auto& cs = subsets(cols, q);
    SmallMatrix out(rs.masks.size(), std::vector<long long>(cs.masks.size(), 0));
    for (std::size_t i = 0; i < rs.masks.size(); ++i) {
        const auto ri = mask_positions(rs.masks[i]);
        for (std::size_t j = 0; j < cs.masks.size(); ++j) {
            const auto cj = mask_positions(cs.masks[j]);
            SmallMatrix minor(ri.size(), std::vector<long long>(cj.size()));
            for (std::size_t u = 0; u < ri.size(); ++u)
                for (std::size_t v = 0; v < cj.size(); ++v)
                    minor[u][v] = m[ri[u]][cj[v]];
            out[i][j] = determinant(std::move(minor));
        }
    }
    return out;
}

void check_n(int n)
{
    if (n < 2 || n > kMaxSpectralN)
        throw SpectralError(SpectralError::Code::NTooLarge, "spectral sequence supports 2 <= n <= " + std::to_string(kMaxSpectralN));
}

std::size_t find_chain(const std::vector<Chain>& chains, const Chain& c)
{
    auto it = std::lower_bound(chains.begin(), chains.end(), c);
    return static_cast<std::size_t>(it - chains.begin());
}

} // namespace

E1Page::E1Page(int n) : n_(n)
{
    check_n(n);
    poset_ = std::make_shared<HypertreePoset>(n);
    for (int p = 0;; ++p) {
        auto c = enumerate_chains(*poset_, p);
        if (c.empty())
            break;
        chains_.push_back(std::move(c));
    }
    for (const auto& t : poset_->elements())
        bases_.push_back(one_two_basis(t));
}

const std::vector<Chain>& E1Page::chains(int p) const
{
    static const std::vector<Chain> none;
    if (p < 0 || p > max_p())
        return none;
    return chains_[static_cast<std::size_t>(p)];
}

std::size_t E1Page::offset(int p, int q, std::size_t chain) const
{
    const auto& cs = chains(p);
    std::size_t total = 0;
    for (std::size_t k = 0; k < chain && k < cs.size(); ++k)
        total += subsets(bases_[cs[k].front()].size(), q).masks.size();
    return total;
}

std::size_t E1Page::rank(int p, int q) const
{
    if (q < 0)
        return 0;
    return offset(p, q, chains(p).size());
}

std::vector<E1Generator> E1Page::generators(int p, int q) const
{
    std::vector<E1Generator> out;
    if (q < 0)
        return out;
    const auto& cs = chains(p);
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (auto m : subsets(bases_[cs[k].front()].size(), q).masks)
            out.push_back({k, mask_positions(m)});
    return out;
}

std::string E1Page::describe(int p, int q, const E1Generator& g) const
{
    (void)q;
    const auto& c = chains(p).at(g.chain);
    std::string s;
    for (auto i : c) {
        if (!s.empty())
            s += " < ";
        s += poset()[i].to_string();
    }
    s += " |";
    if (g.subset.empty())
        s += " 1";
    const auto& basis = bases_[c.front()];
    for (std::size_t k = 0; k < g.subset.size(); ++k)
        s += (k ? "^" : " ") + basis[g.subset[k]].to_string();
    return s;
}

IntegerMatrix restriction_matrix(const Hypertree& a, const Hypertree& b)
{
    if (a.n() != b.n() || !leq(b, a))
        throw SpectralError(SpectralError::Code::NotComparable, b.to_string() + " is not below " + a.to_string());
    const auto ba = one_two_basis(a);
    const auto bb = one_two_basis(b);
    const auto m = restriction_small(a, b, ba, bb);
    std::vector<IntegerMatrix::Triplet> t;
    for (std::size_t i = 0; i < bb.size(); ++i)
        for (std::size_t j = 0; j < ba.size(); ++j)
            if (m[i][j] != 0)
                t.push_back({i, j, m[i][j]});
    return IntegerMatrix::from_triplets(bb.size(), ba.size(), std::move(t));
}

IntegerMatrix exterior_power(const IntegerMatrix& m, int q)
{
    if (m.rows() >= 8 || m.cols() >= 8)
        throw SpectralError(SpectralError::Code::BadCoordinates, "exterior powers are limited to matrices smaller than 8x8");
    SmallMatrix small(m.rows(), std::vector<long long>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& e : m.row(i))
            small[i][e.col] = e.value.convert_to<long long>();
    const auto ext = exterior_small(small, m.rows(), m.cols(), q);
    std::vector<IntegerMatrix::Triplet> t;
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t j = 0; j < ext[i].size(); ++j)
            if (ext[i][j] != 0)
                t.push_back({i, j, ext[i][j]});
    return IntegerMatrix::from_triplets(subsets(m.rows(), q).masks.size(), subsets(m.cols(), q).masks.size(), std::move(t));
}

IntegerMatrix d1_matrix(const E1Page& page, int p, int q, unsigned threads)
{
    if (p < 0 || q < 0)
        throw SpectralError(SpectralError::Code::BadCoordinates, "page coordinates must be non-negative");
    const auto& src = page.chains(p);
    const auto& dst = page.chains(p + 1);
    const std::size_t rows = page.rank(p + 1, q);
    const std::size_t cols = page.rank(p, q);
    if (rows == 0 || cols == 0)
        return IntegerMatrix(rows, cols);

    auto block = [&](std::size_t element) { return subsets(page.basis(element).size(), q).masks.size(); };
    std::vector<std::size_t> src_offset(src.size() + 1, 0);
    for (std::size_t k = 0; k < src.size(); ++k)
        src_offset[k + 1] = src_offset[k] + block(src[k].front());
    std::vector<std::size_t> dst_offset(dst.size() + 1, 0);
    for (std::size_t k = 0; k < dst.size(); ++k)
        dst_offset[k + 1] = dst_offset[k] + block(dst[k].front());

    // exterior powers of the restriction matrices for every (min, second) pair in use
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& c : dst)
        pairs.emplace_back(c[0], c[1]);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<SmallMatrix> ext(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t k) {
        const auto [lo, hi] = pairs[k];
        const auto& P = page.poset();
        const auto m = restriction_small(P[hi], P[lo], page.basis(hi), page.basis(lo));
        ext[k] = exterior_small(m, page.basis(lo).size(), page.basis(hi).size(), q);
    });

    const std::size_t chunk = 256;
    const std::size_t chunks = (dst.size() + chunk - 1) / chunk;
    std::vector<std::vector<IntegerMatrix::Triplet>> parts(chunks);
    parallel_for(chunks, threads, [&](std::size_t part) {
        auto& out = parts[part];
        Chain face;
        for (std::size_t k = part * chunk; k < std::min(dst.size(), (part + 1) * chunk); ++k) {
            const Chain& c = dst[k];
            const std::size_t row0 = dst_offset[k];
            const std::size_t size = dst_offset[k + 1] - row0;
            for (std::size_t i = 0; i < c.size(); ++i) {
                face = c;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                const std::size_t col0 = src_offset[find_chain(src, face)];
                const long long sign = i % 2 == 0 ? 1 : -1;
                if (i > 0) {
                    for (std::size_t s = 0; s < size; ++s)
                        out.push_back({row0 + s, col0 + s, sign});
                    continue;
                }
                const auto at = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(c[0], c[1]));
                const auto& m = ext[static_cast<std::size_t>(at - pairs.begin())];
                for (std::size_t s = 0; s < m.size(); ++s)
                    for (std::size_t t = 0; t < m[s].size(); ++t)
                        if (m[s][t] != 0)
                            out.push_back({row0 + s, col0 + t, sign * m[s][t]});
            }
        }
    });
    std::vector<IntegerMatrix::Triplet> all;
    for (auto& part : parts)
        std::move(part.begin(), part.end(), std::back_inserter(all));
    return IntegerMatrix::from_triplets(rows, cols, std::move(all));
}

const E2Entry& E2Page::at(int p, int q) const
{
    for (const auto& e : entries)
        if (e.p == p && e.q == q)
            return e;
    static const E2Entry zero;
    return zero;
}

bool E2Page::concentrated_in_first_column() const
{
    return std::all_of(entries.begin(), entries.end(),
        [](const E2Entry& e) { return e.torsion.empty() && (e.p == 0 || e.rank == 0); });
}

std::vector<std::size_t> E2Page::column() const
{
    std::vector<std::size_t> out;
    for (const auto& e : entries)
        if (e.p == 0)
            out.push_back(e.rank);
    return out;
}

E2Page compute_e2(const E1Page& page, unsigned threads)
{
    const int P = page.max_p();
    const int Q = page.max_q();
    struct Job {
        int p, q;
        SNFResult snf;
    };
    std::vector<Job> jobs;
    for (int q = 0; q <= Q; ++q)
        for (int p = 0; p <= P; ++p)
            jobs.push_back({p, q, {}});
    // a single worker per matrix; matrices are reduced side by side
    parallel_for(jobs.size(), threads, [&](std::size_t k) {
        jobs[k].snf = smith_normal_form(d1_matrix(page, jobs[k].p, jobs[k].q));
    });
    auto snf = [&](int p, int q) -> const SNFResult* {
        if (p < 0 || p > P)
            return nullptr;
        return &jobs[static_cast<std::size_t>(q * (P + 1) + p)].snf;
    };
    E2Page out;
    out.n = page.n();
    for (int q = 0; q <= Q; ++q) {
        for (int p = 0; p <= P; ++p) {
            E2Entry e;
            e.p = p;
            e.q = q;
            const auto* in = snf(p - 1, q);
            e.rank = page.rank(p, q) - snf(p, q)->rank() - (in ? in->rank() : 0);
            if (in)
                e.torsion = in->torsion();
            out.entries.push_back(std::move(e));
        }
    }
    return out;
}

E2Page e2_page(int n, unsigned threads)
{
    auto page = compute_e2(E1Page(n), threads);
    if (!page.concentrated_in_first_column()) {
        std::string where;
        for (const auto& e : page.entries)
            if (!e.torsion.empty() || (e.p != 0 && e.rank != 0))
                where += " (" + std::to_string(e.p) + "," + std::to_string(e.q) + ")";
        throw CollapseViolation("E2 page for n=" + std::to_string(n) + " is not concentrated in column p=0; offending entries:" + where);
    }
    return page;
}

std::vector<std::size_t> poincare_opsigma(int n, unsigned threads) { return e2_page(n, threads).column(); }

std::string to_string(LabelBehaviour b)
{
    switch (b) {
    case LabelBehaviour::Preserving:
        return "label-preserving";
    case LabelBehaviour::CoarseningTriangular:
        return "label-coarsening-triangular";
    case LabelBehaviour::Neither:
        break;
    }
    return "neither";
}

LabelBehaviour d1_label_diagnostic(const E1Page& page, int p, int q)
{
    // Faces other than 0 keep the minimum and act as the identity, so only face 0 matters.
    LabelBehaviour worst = LabelBehaviour::Preserving;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& c : page.chains(p + 1)) {
        if (!seen.insert({c[0], c[1]}).second)
            continue;
        const auto& P = page.poset();
        const auto& lo = page.basis(c[0]);
        const auto& hi = page.basis(c[1]);
        const auto m = restriction_small(P[c[1]], P[c[0]], hi, lo);
        const auto ext = exterior_small(m, lo.size(), hi.size(), q);
        const auto& rs = subsets(lo.size(), q);
        const auto& cs = subsets(hi.size(), q);
        for (std::size_t s = 0; s < ext.size(); ++s) {
            for (std::size_t t = 0; t < ext[s].size(); ++t) {
                if (ext[s][t] == 0)
                    continue;
                GeneratorSet target;
                for (auto k : mask_positions(rs.masks[s]))
                    target.push_back(lo[k]);
                GeneratorSet source;
                for (auto k : mask_positions(cs.masks[t]))
                    source.push_back(hi[k]);
                if (target == source)
                    continue;
                // look for a matching source (K,l) -> target (I,l) with K inside I
                std::vector<std::size_t> perm(target.size());
                std::iota(perm.begin(), perm.end(), 0);
                bool matched = false;
                do {
                    bool ok = true;
                    for (std::size_t k = 0; k < perm.size() && ok; ++k)
                        ok = source[k].j == target[perm[k]].j && source[k].I.subset_of(target[perm[k]].I);
                    matched = ok;
                } while (!matched && std::next_permutation(perm.begin(), perm.end()));
                if (!matched)
                    return LabelBehaviour::Neither;
                worst = LabelBehaviour::CoarseningTriangular;
            }
        }
    }
    return worst;
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<Integer> binomial_series(int a, int e)
{
    std::vector<Integer> out;
    Integer power = 1;
    for (int k = 0; k <= e; ++k) {
        out.push_back(binomial(e, k) * power);
        power *= a;
    }
    return out;
}

} // namespace psigma
