#include "psigma/reference.hpp"

#include <algorithm>
#include <set>

namespace psigma::reference {

std::vector<Hypertree> brute_force_hypertrees(int n)
{
    std::vector<HyperEdge> candidates;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        VertexSet s;
        for (int v = 1; v <= n; ++v)
            if (m >> (v - 1) & 1u)
                s.insert(v);
        if (s.size() >= 2)
            candidates.push_back(s);
    }
    std::set<Hypertree> found;
    std::vector<HyperEdge> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!chosen.empty()) {
            try {
                found.insert(validate_hypertree(n, chosen));
            } catch (const HypertreeError&) {
            }
        }
        for (std::size_t k = start; k < candidates.size(); ++k) {
            const auto e = candidates[k];
            if (std::any_of(chosen.begin(), chosen.end(), [&](HyperEdge f) { return (e & f).size() > 1; }))
                continue;
            chosen.push_back(e);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return {found.begin(), found.end()};
}

std::optional<Hypertree> brute_force_meet(const std::vector<Hypertree>& all, const Hypertree& a, const Hypertree& b)
{
    std::vector<const Hypertree*> lower;
    for (const auto& t : all)
        if (leq(t, a) && leq(t, b))
            lower.push_back(&t);
    for (const auto* t : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](const Hypertree* s) { return leq(*s, *t); }))
            return *t;
    return std::nullopt;
}

std::optional<Hypertree> brute_force_cone_point(const std::vector<Hypertree>& all, const GeneratorSet& A)
{
    std::vector<const Hypertree*> fixed;
    for (const auto& t : all)
        if (stabilizes(t, A))
            fixed.push_back(&t);
    for (const auto* t : fixed)
        if (std::all_of(fixed.begin(), fixed.end(), [&](const Hypertree* s) { return leq(*t, *s); }))
            return *t;
    return std::nullopt;
}

bool essential_by_conditions(const Hypertree& t)
{
    std::vector<HyperEdge> fat;
    for (auto e : t.edges())
        if (e.size() > 2)
            fat.push_back(e);
    if (fat.empty())
        return true;
    if (fat.size() > 1 || !fat.front().contains(1))
        return false;
    const auto path = reduced_path(t, 1, 2);
    return std::find(path.begin(), path.end(), fat.front()) != path.end();
}

std::size_t mccool_instance_count(int n)
{
    if (n < 3)
        return 0;
    const std::size_t m = static_cast<std::size_t>(n);
    const std::size_t triples = m * (m - 1) * (m - 2);
    return triples * (m - 3) + 2 * triples;
}

} // namespace psigma::reference
