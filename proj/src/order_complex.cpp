#include "psigma/order_complex.hpp"

#include "psigma/smith.hpp"

#include <algorithm>

namespace psigma {

namespace {

void extend_chains(const HypertreePoset& poset, const boost::dynamic_bitset<>* subset, Chain& prefix, int remaining,
    std::vector<Chain>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        if (out.size() > kMaxChains)
            throw ComplexError(ComplexError::Code::TooLarge, "chain enumeration exceeds the configured limit");
        return;
    }
    auto next = poset.above(prefix.back());
    if (subset)
        next &= *subset;
    for (auto b = next.find_first(); b != boost::dynamic_bitset<>::npos; b = next.find_next(b)) {
        prefix.push_back(b);
        extend_chains(poset, subset, prefix, remaining - 1, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Chain> enumerate_chains(const HypertreePoset& poset, int p, const boost::dynamic_bitset<>* subset)
{
    std::vector<Chain> out;
    if (p < 0)
        return out;
    Chain prefix;
    for (std::size_t a = 0; a < poset.size(); ++a) {
        if (subset && !(*subset)[a])
            continue;
        prefix.assign(1, a);
        extend_chains(poset, subset, prefix, p, out);
    }
    return out;
}

ChainSimplex to_simplex(const HypertreePoset& poset, const Chain& c)
{
    ChainSimplex s;
    for (auto i : c)
        s.vertices.push_back(poset[i]);
    return s;
}

const std::vector<SimplicialComplex::Simplex>& SimplicialComplex::simplices(int d) const
{
    static const std::vector<Simplex> none;
    if (d < 0 || d > dimension())
        return none;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const
{
    const auto& list = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices)
{
    SimplicialComplex K;
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ComplexError(ComplexError::Code::NotAComplex, "simplices need distinct vertices");
        if (K.by_dim_.size() < s.size())
            K.by_dim_.resize(s.size());
        K.by_dim_[s.size() - 1].push_back(std::move(s));
    }
    for (auto& list : K.by_dim_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    for (int d = 1; d <= K.dimension(); ++d) {
        for (const auto& s : K.simplices(d)) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                if (!K.index_of(face))
                    throw ComplexError(ComplexError::Code::NotAComplex, "a face of a simplex is missing");
            }
        }
    }
    return K;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets)
{
    std::vector<Simplex> all;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        const std::size_t k = f.size();
        if (k == 0 || k > 24)
            throw ComplexError(ComplexError::Code::NotAComplex, "facet size out of range");
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1u)
                    s.push_back(f[i]);
            all.push_back(std::move(s));
        }
    }
    return from_simplices(std::move(all));
}

SimplicialComplex order_complex(const HypertreePoset& poset, const boost::dynamic_bitset<>* subset)
{
    std::vector<SimplicialComplex::Simplex> all;
    for (int p = 0;; ++p) {
        auto chains = enumerate_chains(poset, p, subset);
        if (chains.empty())
            break;
        for (const auto& c : chains)
            all.push_back(SimplicialComplex::Simplex(c.begin(), c.end()));
    }
    return SimplicialComplex::from_simplices(std::move(all));
}

IntegerMatrix boundary_matrix(const SimplicialComplex& K, int k, bool augmented)
{
    if (k == 0) {
        const std::size_t cols = K.count(0);
        if (!augmented)
            return IntegerMatrix(0, cols);
        std::vector<IntegerMatrix::Triplet> t;
        for (std::size_t c = 0; c < cols; ++c)
            t.push_back({0, c, 1});
        return IntegerMatrix::from_triplets(1, cols, std::move(t));
    }
    const auto& top = K.simplices(k);
    std::vector<IntegerMatrix::Triplet> t;
    for (std::size_t c = 0; c < top.size(); ++c) {
        for (std::size_t i = 0; i < top[c].size(); ++i) {
            auto face = top[c];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            t.push_back({*K.index_of(face), c, i % 2 == 0 ? 1 : -1});
        }
    }
    return IntegerMatrix::from_triplets(K.count(k - 1), top.size(), std::move(t));
}

std::vector<IntegerMatrix> coboundary_matrices(const SimplicialComplex& K)
{
    std::vector<IntegerMatrix> out;
    for (int d = 0; d < K.dimension(); ++d)
        out.push_back(boundary_matrix(K, d + 1).transpose());
    return out;
}

bool GradedGroups::trivial() const
{
    return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.trivial(); });
}

namespace {

// factors[k] = SNF of the augmented boundary d_k, k = 0 .. dim + 1
std::vector<SNFResult> boundary_snfs(const SimplicialComplex& K)
{
    std::vector<SNFResult> out;
    for (int k = 0; k <= K.dimension() + 1; ++k)
        out.push_back(smith_normal_form(boundary_matrix(K, k, true)));
    return out;
}

std::size_t chain_rank(const SimplicialComplex& K, int d) { return d < 0 ? 1 : K.count(d); }

} // namespace

GradedGroups reduced_homology(const SimplicialComplex& K)
{
    const auto snf = boundary_snfs(K);
    auto rank_of = [&](int k) -> std::size_t { return k < 0 ? 0 : snf[static_cast<std::size_t>(k)].rank(); };
    GradedGroups out;
    for (int d = -1; d <= K.dimension(); ++d) {
        HomologyGroup g;
        g.rank = chain_rank(K, d) - rank_of(d) - rank_of(d + 1);
        g.torsion = snf[static_cast<std::size_t>(d + 1)].torsion();
        out.groups.push_back(std::move(g));
    }
    return out;
}

GradedGroups reduced_cohomology(const SimplicialComplex& K)
{
    const auto snf = boundary_snfs(K);
    auto rank_of = [&](int k) -> std::size_t { return k < 0 ? 0 : snf[static_cast<std::size_t>(k)].rank(); };
    GradedGroups out;
    for (int d = -1; d <= K.dimension(); ++d) {
        HomologyGroup g;
        g.rank = chain_rank(K, d) - rank_of(d) - rank_of(d + 1);
        if (d >= 0)
            g.torsion = snf[static_cast<std::size_t>(d)].torsion();
        out.groups.push_back(std::move(g));
    }
    return out;
}

} // namespace psigma
