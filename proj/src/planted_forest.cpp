#include "psigma/planted_forest.hpp"

#include "psigma/stabilizer.hpp"

#include <algorithm>

namespace psigma {

namespace {

bool has_cycle(int n, const std::vector<int>& tail_of)
{
    for (int v = 1; v <= n; ++v) {
        int u = v;
        for (int steps = 0; steps <= n; ++steps) {
            u = tail_of[static_cast<std::size_t>(u)];
            if (u == 0)
                break;
            if (steps == n)
                return true;
        }
    }
    return false;
}

} // namespace

PlantedForest::PlantedForest(int n, std::vector<int> tail_of) : n_(n), tail_of_(std::move(tail_of))
{
    if (n < 1 || n > kMaxLabel)
        throw ForestError(ForestError::Code::BadIndex, "n out of range");
    if (tail_of_.size() != static_cast<std::size_t>(n) + 1)
        throw ForestError(ForestError::Code::BadIndex, "tail vector needs n + 1 slots");
    tail_of_[0] = 0;
    for (int v = 1; v <= n; ++v) {
        const int t = tail_of_[static_cast<std::size_t>(v)];
        if (t < 0 || t > n || t == v)
            throw ForestError(ForestError::Code::NotAForest, "invalid tail for vertex " + std::to_string(v));
    }
    if (has_cycle(n, tail_of_))
        throw ForestError(ForestError::Code::NotAForest, "directed cycle");
}

PlantedForest PlantedForest::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<int> tail_of(static_cast<std::size_t>(n) + 1, 0);
    for (auto [head, tail] : edges) {
        if (head < 1 || head > n || tail < 1 || tail > n)
            throw ForestError(ForestError::Code::BadIndex, "edge label out of range");
        if (tail_of[static_cast<std::size_t>(head)] != 0)
            throw ForestError(ForestError::Code::NotAForest, "vertex " + std::to_string(head) + " heads two edges");
        tail_of[static_cast<std::size_t>(head)] = tail;
    }
    return PlantedForest(n, std::move(tail_of));
}

VertexSet PlantedForest::roots() const
{
    VertexSet r;
    for (int v = 1; v <= n_; ++v)
        if (is_root(v))
            r.insert(v);
    return r;
}

std::vector<std::pair<int, int>> PlantedForest::edges() const
{
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= n_; ++v)
        if (!is_root(v))
            e.emplace_back(v, tail(v));
    return e;
}

int PlantedForest::edge_count() const
{
    return static_cast<int>(std::count_if(tail_of_.begin() + 1, tail_of_.end(), [](int t) { return t != 0; }));
}

int PlantedForest::root_of(int v) const
{
    while (!is_root(v))
        v = tail(v);
    return v;
}

std::string PlantedForest::to_string() const
{
    std::string s;
    for (auto [h, t] : edges()) {
        if (!s.empty())
            s += ", ";
        s += std::to_string(h) + "<-" + std::to_string(t);
    }
    return s.empty() ? "(no edges)" : s;
}

std::vector<PlantedForest> enumerate_planted_forests(int n, int q)
{
    if (n < 1 || n > 8)
        throw ForestError(ForestError::Code::TooLarge, "planted forest enumeration supports 1 <= n <= 8");
    std::vector<PlantedForest> out;
    if (q < 0 || q > n - 1)
        return out;
    std::vector<int> tail_of(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (used > q || used + (n - v + 1) < q)
            return;
        if (v > n) {
            if (!has_cycle(n, tail_of))
                out.emplace_back(n, tail_of);
            return;
        }
        for (int t = 0; t <= n; ++t) {
            if (t == v)
                continue;
            tail_of[static_cast<std::size_t>(v)] = t;
            self(self, v + 1, used + (t != 0));
        }
        tail_of[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 1, 0);
    return out;
}

Hypertree gather_roots(const PlantedForest& f)
{
    const VertexSet r = f.roots();
    if (r.size() < 2)
        throw ForestError(ForestError::Code::TooFewComponents, "gathering needs at least two roots");
    std::vector<HyperEdge> edges{r};
    for (auto [h, t] : f.edges())
        edges.push_back(VertexSet::single(h) | VertexSet::single(t));
    return validate_hypertree(f.n(), edges);
}

bool is_essential_forest(const PlantedForest& f)
{
    if (f.n() < 2)
        return false;
    return f.is_root(1) && f.root_of(2) != 1;
}

std::size_t count_essential_by_definition(int n, int q)
{
    std::size_t count = 0;
    for (const auto& t : enumerate_hypertrees(n))
        if (t.rank() == q && is_essential_hypertree(t))
            ++count;
    return count;
}

std::size_t count_essential_by_gathering(int n, int q)
{
    std::size_t count = 0;
    if (q > n - 2)
        return 0;
    for (const auto& f : enumerate_planted_forests(n, q))
        if (is_essential_forest(f))
            ++count;
    return count;
}

} // namespace psigma
