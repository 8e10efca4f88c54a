#include "psigma/stabilizer.hpp"

#include <algorithm>
#include <set>

namespace psigma {

std::string Generator::to_string() const { return "a(" + I.to_string() + "," + std::to_string(j) + ")"; }

namespace {

void check_generator(int n, const Generator& g)
{
    if (g.j < 1 || g.j > n || g.I.empty() || !g.I.subset_of(VertexSet::range(n)) || g.I.contains(g.j))
        throw StabilizerError(StabilizerErrc::BadIndex, "invalid generator " + g.to_string() + " for n=" + std::to_string(n));
}

std::vector<VertexSet> components_without(const Hypertree& t, int j) { return components(delete_vertex(t, j)); }

} // namespace

Generator make_one_two(int n, VertexSet I, int j)
{
    Generator g{I, j};
    check_generator(n, g);
    if (!g.is_one_two())
        throw StabilizerError(StabilizerErrc::NotOneTwo, g.to_string() + " conjugates x_" + std::to_string(hat(j)));
    return g;
}

GeneratorSet normalize(GeneratorSet gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

GeneratorSet one_two_basis(const Hypertree& t)
{
    GeneratorSet basis;
    for (int j = 1; j <= t.n(); ++j) {
        for (auto c : components_without(t, j))
            if (!c.contains(hat(j)))
                basis.push_back({c, j});
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

bool stabilizer_contains(const Hypertree& t, const Generator& g)
{
    check_generator(t.n(), g);
    VertexSet covered;
    for (auto c : components_without(t, g.j)) {
        if (c.subset_of(g.I))
            covered |= c;
        else if (c.intersects(g.I))
            return false;
    }
    return covered == g.I;
}

std::vector<int> express_in_basis(const Hypertree& t, const Generator& g)
{
    if (!stabilizer_contains(t, g))
        throw StabilizerError(StabilizerErrc::NotInStabilizer, g.to_string() + " does not fix " + t.to_string());
    const auto basis = one_two_basis(t);
    std::vector<int> coords(basis.size(), 0);
    // The product of alpha_{C,j} over all components C of t - j is conjugation by x_j,
    // which is trivial in the outer group.
    bool hat_component_inside = false;
    for (auto c : components_without(t, g.j))
        if (c.contains(hat(g.j)) && c.subset_of(g.I))
            hat_component_inside = true;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].j != g.j)
            continue;
        if (basis[k].I.subset_of(g.I))
            coords[k] += 1;
        if (hat_component_inside)
            coords[k] -= 1;
    }
    return coords;
}

Hypertree single_cone_point(int n, const Generator& g)
{
    check_generator(n, g);
    if (!g.is_one_two())
        throw StabilizerError(StabilizerErrc::NotOneTwo, g.to_string() + " is not a one-two generator");
    return Hypertree::from_trusted(n, {g.I | VertexSet::single(g.j), VertexSet::range(n) - g.I});
}

Hypertree cone_point(int n, const GeneratorSet& A)
{
    Hypertree result = Hypertree::nuclear(n);
    for (const auto& g : A) {
        auto next = join(result, single_cone_point(n, g));
        if (!next)
            throw StabilizerError(StabilizerErrc::NotCompatible, "no hypertree is fixed by every generator up to " + g.to_string());
        result = std::move(*next);
    }
    if (!supports(result, A))
        throw StabilizerError(StabilizerErrc::NotCompatible, "collection is not contained in the basis of " + result.to_string());
    return result;
}

bool is_compatible(int n, const GeneratorSet& A)
{
    try {
        cone_point(n, A);
        return true;
    } catch (const StabilizerError& e) {
        if (e.code() == StabilizerErrc::NotCompatible)
            return false;
        throw;
    }
}

bool is_essential_hypertree(const Hypertree& t)
{
    return worrisome_edges(t).empty();
}

bool is_essential(int n, const GeneratorSet& A) { return is_essential_hypertree(cone_point(n, A)); }

bool supports(const Hypertree& t, const GeneratorSet& A)
{
    const auto basis = one_two_basis(t);
    return std::all_of(A.begin(), A.end(), [&](const Generator& g) { return std::binary_search(basis.begin(), basis.end(), g); });
}

bool stabilizes(const Hypertree& t, const GeneratorSet& A)
{
    return std::all_of(A.begin(), A.end(), [&](const Generator& g) { return stabilizer_contains(t, g); });
}

SupportClassification classify_support(const HypertreePoset& poset, const GeneratorSet& A)
{
    SupportClassification out;
    for (const auto& t : poset.elements()) {
        if (!stabilizes(t, A))
            continue;
        if (supports(t, A))
            out.core.push_back(t);
        else
            out.peripheral.push_back(t);
    }
    return out;
}

SupportClassification classify_support(int n, const GeneratorSet& A) { return classify_support(HypertreePoset(n), A); }

std::vector<WorrisomeEdge> worrisome_edges(const Hypertree& t)
{
    const auto dist = edge_distances(t, 1);
    const auto path = reduced_path(t, 1, 2);
    std::vector<WorrisomeEdge> out;
    for (auto e : t.edges()) {
        if (e.size() <= 2)
            continue;
        if (e.contains(1) && !path.empty() && path.front() == e)
            continue;
        int c = e.min();
        for (int v : e)
            if (dist[v] < dist[c])
                c = v;
        VertexSet L = e;
        L.erase(c);
        out.push_back({e, c, L});
    }
    return out;
}

Hypertree split_edges(const Hypertree& t, const std::vector<std::pair<HyperEdge, Partition>>& splits)
{
    const auto worrisome = worrisome_edges(t);
    std::vector<HyperEdge> edges = t.edges();
    for (const auto& [e, P] : splits) {
        auto it = std::find_if(worrisome.begin(), worrisome.end(), [&](const WorrisomeEdge& w) { return w.edge == e; });
        if (it == worrisome.end())
            throw StabilizerError(StabilizerErrc::NotWorrisome, e.to_string() + " is not a worrisome edge of " + t.to_string());
        VertexSet seen;
        for (auto block : P) {
            if (block.empty() || block.intersects(seen))
                throw StabilizerError(StabilizerErrc::NotAPartition, "blocks must be nonempty and disjoint");
            seen |= block;
        }
        if (seen != it->L)
            throw StabilizerError(StabilizerErrc::NotAPartition, "blocks do not cover " + it->L.to_string());
        edges.erase(std::find(edges.begin(), edges.end(), e));
        for (auto block : P)
            edges.push_back(block | VertexSet::single(it->c));
    }
    return validate_hypertree(t.n(), edges);
}

Hypertree split_edge(const Hypertree& t, HyperEdge e, const Partition& P) { return split_edges(t, {{e, P}}); }

std::vector<GeneratorSet> compatible_collections(const HypertreePoset& poset, int max_size)
{
    std::set<GeneratorSet> found;
    for (const auto& t : poset.elements()) {
        const auto basis = one_two_basis(t);
        const std::size_t r = basis.size();
        for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
            if (std::popcount(mask) > max_size)
                continue;
            GeneratorSet A;
            for (std::size_t k = 0; k < r; ++k)
                if (mask >> k & 1u)
                    A.push_back(basis[k]);
            found.insert(std::move(A));
        }
    }
    return {found.begin(), found.end()};
}

} // namespace psigma
