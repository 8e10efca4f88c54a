#include "psigma/hypertree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace psigma {

namespace {

std::string edge_list_string(const std::vector<HyperEdge>& edges)
{
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i)
            s += ',';
        s += edges[i].to_string();
    }
    return s;
}

void check_n(int n)
{
    if (n < 2 || n > kMaxLabel)
        throw HypertreeError(HypertreeErrc::InvalidN, "n must lie in 2.." + std::to_string(kMaxLabel) + ", got " + std::to_string(n));
}

void check_same_n(const Hypertree& a, const Hypertree& b)
{
    if (a.n() != b.n())
        throw HypertreeError(HypertreeErrc::MismatchedN,
            "hypertrees on different label sets (n=" + std::to_string(a.n()) + " vs n=" + std::to_string(b.n()) + ")");
}

struct UnionFind {
    explicit UnionFind(int size) : parent(size)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

std::vector<HyperEdge> canonical(std::vector<HyperEdge> edges)
{
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace

SimpleCycleError::SimpleCycleError(std::vector<int> vertices, std::vector<HyperEdge> edges)
    : HypertreeError(HypertreeErrc::SimpleCycle, [&] {
          std::string s = "simple cycle:";
          for (std::size_t i = 0; i < edges.size(); ++i)
              s += " " + std::to_string(vertices[i]) + " " + edges[i].to_string();
          if (!vertices.empty())
              s += " " + std::to_string(vertices.front());
          return s;
      }())
    , vertices_(std::move(vertices))
    , edges_(std::move(edges))
{
}

Hypertree Hypertree::nuclear(int n)
{
    check_n(n);
    return Hypertree(n, {VertexSet::range(n)});
}

Hypertree Hypertree::from_trusted(int n, std::vector<HyperEdge> edges)
{
    return Hypertree(n, canonical(std::move(edges)));
}

std::strong_ordering Hypertree::operator<=>(const Hypertree& o) const
{
    if (auto c = n_ <=> o.n_; c != 0)
        return c;
    return edges_ <=> o.edges_;
}

std::string Hypertree::to_string() const { return edge_list_string(edges_); }

std::size_t HypertreeHash::operator()(const Hypertree& t) const noexcept
{
    std::size_t h = static_cast<std::size_t>(t.n());
    for (auto e : t.edges())
        h = h * 1000003u ^ e.bits();
    return h;
}

bool find_simple_cycle(const std::vector<HyperEdge>& edges, std::vector<int>* vertices, std::vector<std::size_t>* edge_indices)
{
    // Berge cycles of the hypergraph are exactly the cycles of the bipartite incidence
    // graph. Nodes 0..31 are labels (label l at node l), nodes 32+k are edges.
    const int offset = 32;
    const int total = offset + static_cast<int>(edges.size());
    std::vector<std::vector<int>> adj(total);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        for (int v : edges[k]) {
            adj[v].push_back(offset + static_cast<int>(k));
            adj[offset + k].push_back(v);
        }
    }
    std::vector<int> state(total, 0), parent(total, -1);
    for (int start = 0; start < total; ++start) {
        if (state[start] != 0 || adj[start].empty())
            continue;
        // iterative DFS
        std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
        state[start] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next == adj[u].size()) {
                state[u] = 2;
                stack.pop_back();
                continue;
            }
            const int w = adj[u][next++];
            if (w == parent[u])
                continue;
            if (state[w] == 1) {
                // cycle: w -> ... -> u -> w along the DFS stack
                std::vector<int> cyc;
                for (int x = u; x != w; x = parent[x])
                    cyc.push_back(x);
                cyc.push_back(w);
                std::reverse(cyc.begin(), cyc.end());
                if (cyc.front() >= offset)
                    std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
                if (vertices || edge_indices) {
                    if (vertices)
                        vertices->clear();
                    if (edge_indices)
                        edge_indices->clear();
                    for (std::size_t i = 0; i < cyc.size(); ++i) {
                        if (i % 2 == 0) {
                            if (vertices)
                                vertices->push_back(cyc[i]);
                        } else if (edge_indices) {
                            edge_indices->push_back(static_cast<std::size_t>(cyc[i] - offset));
                        }
                    }
                }
                return true;
            }
            if (state[w] == 0) {
                state[w] = 1;
                parent[w] = u;
                stack.emplace_back(w, 0);
            }
        }
    }
    return false;
}

Hypertree validate_hypertree(int n, const std::vector<HyperEdge>& candidate_edges)
{
    check_n(n);
    const VertexSet all = VertexSet::range(n);
    VertexSet covered;
    for (auto e : candidate_edges) {
        if (!e.subset_of(all))
            throw HypertreeError(HypertreeErrc::LabelOutOfRange, "edge " + e.to_string() + " has a label outside 1.." + std::to_string(n));
        if (e.size() < 2)
            throw HypertreeError(HypertreeErrc::EdgeTooSmall, "edge " + e.to_string() + " has fewer than two vertices");
        covered |= e;
    }
    if (covered != all)
        throw HypertreeError(HypertreeErrc::LabelGap, "labels " + (all - covered).to_string() + " occur in no edge");

    UnionFind uf(n + 1);
    for (auto e : candidate_edges)
        for (int v : e)
            uf.unite(v, e.min());
    for (int v = 2; v <= n; ++v)
        if (uf.find(v) != uf.find(1))
            throw HypertreeError(HypertreeErrc::NotConnected, "vertices 1 and " + std::to_string(v) + " are not joined by a walk");

    std::vector<int> cyc_vertices;
    std::vector<std::size_t> cyc_edges;
    if (find_simple_cycle(candidate_edges, &cyc_vertices, &cyc_edges)) {
        std::vector<HyperEdge> witness;
        for (auto k : cyc_edges)
            witness.push_back(candidate_edges[k]);
        throw SimpleCycleError(std::move(cyc_vertices), std::move(witness));
    }
    return Hypertree::from_trusted(n, candidate_edges);
}

Hypertree validate_hypertree(int n, const std::vector<std::vector<int>>& candidate_edges)
{
    check_n(n);
    std::vector<HyperEdge> edges;
    for (const auto& labels : candidate_edges) {
        HyperEdge e;
        for (int l : labels) {
            if (l < 1 || l > n)
                throw HypertreeError(HypertreeErrc::LabelOutOfRange, "label " + std::to_string(l) + " outside 1.." + std::to_string(n));
            e.insert(l);
        }
        edges.push_back(e);
    }
    return validate_hypertree(n, edges);
}

bool leq(const Hypertree& t, const Hypertree& u)
{
    check_same_n(t, u);
    return std::all_of(u.edges().begin(), u.edges().end(), [&](HyperEdge f) {
        return std::any_of(t.edges().begin(), t.edges().end(), [&](HyperEdge e) { return f.subset_of(e); });
    });
}

Hypertree meet(const Hypertree& a, const Hypertree& b)
{
    check_same_n(a, b);
    std::vector<HyperEdge> edges = a.edges();
    edges.insert(edges.end(), b.edges().begin(), b.edges().end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::size_t> on_cycle;
    while (find_simple_cycle(edges, nullptr, &on_cycle)) {
        HyperEdge merged;
        for (auto k : on_cycle)
            merged |= edges[k];
        std::sort(on_cycle.rbegin(), on_cycle.rend());
        for (auto k : on_cycle)
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(k));
        edges.push_back(merged);
    }
    return Hypertree::from_trusted(a.n(), std::move(edges));
}

Hypertree meet(const std::vector<Hypertree>& taus)
{
    if (taus.empty())
        throw std::invalid_argument("meet of an empty list");
    Hypertree result = taus.front();
    for (std::size_t i = 1; i < taus.size(); ++i)
        result = meet(result, taus[i]);
    return result;
}

std::optional<Hypertree> join(const Hypertree& a, const Hypertree& b)
{
    check_same_n(a, b);
    std::vector<HyperEdge> edges;
    for (auto e : a.edges())
        for (auto f : b.edges())
            if ((e & f).size() >= 2)
                edges.push_back(e & f);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    try {
        return validate_hypertree(a.n(), edges);
    } catch (const HypertreeError&) {
        return std::nullopt;
    }
}

Hyperforest delete_vertex(const Hypertree& t, int j)
{
    if (j < 1 || j > t.n())
        throw HypertreeError(HypertreeErrc::LabelOutOfRange, "label " + std::to_string(j) + " outside 1.." + std::to_string(t.n()));
    Hyperforest f;
    f.labels = VertexSet::range(t.n());
    f.labels.erase(j);
    for (auto e : t.edges()) {
        e.erase(j);
        if (e.size() >= 2)
            f.edges.push_back(e);
    }
    return f;
}

std::vector<VertexSet> components(const Hyperforest& f)
{
    std::vector<VertexSet> comps;
    for (int v : f.labels)
        comps.push_back(VertexSet::single(v));
    for (auto e : f.edges) {
        VertexSet merged = e;
        std::vector<VertexSet> keep;
        for (auto c : comps) {
            if (c.intersects(e))
                merged |= c;
            else
                keep.push_back(c);
        }
        keep.push_back(merged);
        comps = std::move(keep);
    }
    std::sort(comps.begin(), comps.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
    return comps;
}

namespace {

using EdgeList = std::vector<HyperEdge>;

class HypertreeGenerator {
public:
    /// All hypertrees on vertex set s, with r in s; edge lists unsorted.
    const std::vector<EdgeList>& rooted(VertexSet s, int r)
    {
        const auto key = std::make_pair(s.bits(), r);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        std::vector<EdgeList> out;
        VertexSet rest = s;
        rest.erase(r);
        if (rest.empty())
            out.push_back({});
        else
            partitions(rest, r, {}, out);
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    // Split `rest` into the components hanging off r; each component C attaches through
    // one edge {r} u F with F a nonempty subset of C.
    void partitions(VertexSet rest, int r, const EdgeList& acc, std::vector<EdgeList>& out)
    {
        if (rest.empty()) {
            out.push_back(acc);
            return;
        }
        const int m = rest.min();
        VertexSet others = rest;
        others.erase(m);
        // enumerate subsets of `others` to join m in this component
        std::uint32_t sub = others.bits();
        while (true) {
            VertexSet comp = VertexSet(sub) | VertexSet::single(m);
            for (const auto& branch : branches(comp, r)) {
                EdgeList next = acc;
                next.insert(next.end(), branch.begin(), branch.end());
                partitions(rest - comp, r, next, out);
            }
            if (sub == 0)
                break;
            sub = (sub - 1) & others.bits();
        }
    }

    // All ways to hang component c from r through a single edge.
    std::vector<EdgeList> branches(VertexSet c, int r)
    {
        std::vector<EdgeList> out;
        std::uint32_t f = c.bits();
        while (f != 0) {
            VertexSet fset(f);
            HyperEdge edge = fset | VertexSet::single(r);
            distribute(fset.to_vector(), 0, c - fset, {edge}, out);
            f = (f - 1) & c.bits();
        }
        return out;
    }

    // Assign the remaining labels to the vertices of the attaching edge; each vertex
    // roots its own sub-hypertree.
    void distribute(const std::vector<int>& owners, std::size_t k, VertexSet remaining, const EdgeList& acc, std::vector<EdgeList>& out)
    {
        const int v = owners[k];
        if (k + 1 == owners.size()) {
            for (const auto& sub : rooted(remaining | VertexSet::single(v), v)) {
                EdgeList next = acc;
                next.insert(next.end(), sub.begin(), sub.end());
                out.push_back(std::move(next));
            }
            return;
        }
        std::uint32_t d = remaining.bits();
        while (true) {
            VertexSet mine(d);
            for (const auto& sub : rooted(mine | VertexSet::single(v), v)) {
                EdgeList next = acc;
                next.insert(next.end(), sub.begin(), sub.end());
                distribute(owners, k + 1, remaining - mine, next, out);
            }
            if (d == 0)
                break;
            d = (d - 1) & remaining.bits();
        }
    }

    std::map<std::pair<std::uint32_t, int>, std::vector<EdgeList>> memo_;
};

bool rank_then_canonical(const Hypertree& a, const Hypertree& b)
{
    if (a.rank() != b.rank())
        return a.rank() < b.rank();
    return a < b;
}

} // namespace

std::vector<Hypertree> enumerate_hypertrees(int n)
{
    check_n(n);
    if (n > kMaxEnumerationN)
        throw HypertreeError(HypertreeErrc::NTooLarge, "enumeration guard: n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxEnumerationN));
    HypertreeGenerator gen;
    const auto& lists = gen.rooted(VertexSet::range(n), 1);
    std::vector<Hypertree> out;
    out.reserve(lists.size());
    for (const auto& l : lists)
        out.push_back(Hypertree::from_trusted(n, l));
    std::sort(out.begin(), out.end(), rank_then_canonical);
    return out;
}

std::vector<int> edge_distances(const Hypertree& t, int root)
{
    std::vector<int> dist(t.n() + 1, -1);
    dist[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto e : t.edges()) {
            if (!e.contains(v))
                continue;
            for (int w : e) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return dist;
}

std::vector<HyperEdge> reduced_path(const Hypertree& t, int a, int b)
{
    std::vector<int> via_vertex(t.n() + 1, 0);
    std::vector<HyperEdge> via_edge(t.n() + 1);
    std::vector<bool> seen(t.n() + 1, false);
    seen[a] = true;
    std::deque<int> queue{a};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto e : t.edges()) {
            if (!e.contains(v))
                continue;
            for (int w : e) {
                if (!seen[w]) {
                    seen[w] = true;
                    via_vertex[w] = v;
                    via_edge[w] = e;
                    queue.push_back(w);
                }
            }
        }
    }
    std::vector<HyperEdge> path;
    for (int v = b; v != a; v = via_vertex[v])
        path.push_back(via_edge[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

HypertreePoset::HypertreePoset(int n) : n_(n), elements_(enumerate_hypertrees(n)) { build(); }

HypertreePoset::HypertreePoset(int n, std::vector<Hypertree> elements) : n_(n), elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end(), rank_then_canonical);
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    build();
}

void HypertreePoset::build()
{
    const std::size_t size = elements_.size();
    index_.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        if (elements_[i].n() != n_)
            throw HypertreeError(HypertreeErrc::MismatchedN, "poset element on the wrong label set");
        index_.emplace(elements_[i], i);
    }
    above_.assign(size, boost::dynamic_bitset<>(size));
    below_.assign(size, boost::dynamic_bitset<>(size));
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = a + 1; b < size; ++b) {
            if (elements_[a].rank() < elements_[b].rank() && leq(elements_[a], elements_[b])) {
                above_[a].set(b);
                below_[b].set(a);
            }
        }
    }
}

std::optional<std::size_t> HypertreePoset::index_of(const Hypertree& t) const
{
    if (auto it = index_.find(t); it != index_.end())
        return it->second;
    return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> HypertreePoset::cover_pairs() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
        for (auto b = above_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = above_[a].find_next(b)) {
            if (!(above_[a] & below_[b]).any())
                out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<std::pair<Hypertree, Hypertree>> hasse_cover_pairs(int n)
{
    HypertreePoset poset(n);
    std::vector<std::pair<Hypertree, Hypertree>> out;
    for (auto [a, b] : poset.cover_pairs())
        out.emplace_back(poset[a], poset[b]);
    return out;
}

std::string combinatorial_type(const Hypertree& t)
{
    const int n = t.n();
    if (n > 8)
        throw HypertreeError(HypertreeErrc::NTooLarge, "combinatorial_type supports n <= 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<HyperEdge> best;
    bool have = false;
    do {
        std::vector<HyperEdge> relabelled;
        for (auto e : t.edges()) {
            HyperEdge r;
            for (int v : e)
                r.insert(perm[v - 1]);
            relabelled.push_back(r);
        }
        std::sort(relabelled.begin(), relabelled.end());
        if (!have || relabelled < best) {
            best = std::move(relabelled);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return edge_list_string(best);
}

} // namespace psigma
