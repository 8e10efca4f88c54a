#pragma once

#include "psigma/hypertree.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace psigma {

class ForestError : public std::runtime_error {
public:
    enum class Code { NotAForest, TooFewComponents, BadIndex, TooLarge };
    ForestError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// Directed forest on [n] where every vertex is the head of at most one edge.
/// The edge head <- tail is what the class a*(head, tail) contributes to a monomial;
/// roots are the vertices heading no edge.
class PlantedForest {
public:
    /// tail_of[v] is the tail of the edge headed by v, or 0 when v is a root (index 0 unused).
    /// Throws NotAForest on cycles or out-of-range tails.
    PlantedForest(int n, std::vector<int> tail_of);
    /// Edges given as (head, tail) pairs.
    static PlantedForest from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int tail(int v) const { return tail_of_.at(static_cast<std::size_t>(v)); }
    bool is_root(int v) const { return tail(v) == 0; }
    VertexSet roots() const;
    /// (head, tail) pairs, sorted by head.
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;
    int component_count() const { return n_ - edge_count(); }
    /// Root of the tree containing v.
    int root_of(int v) const;

    bool operator==(const PlantedForest&) const = default;
    /// "3<-2, 5<-1"
    std::string to_string() const;

private:
    int n_;
    std::vector<int> tail_of_;
};

/// Every planted forest on [n] with q edges; C(n-1, q) n^q of them. Ordered by the tail vector.
std::vector<PlantedForest> enumerate_planted_forests(int n, int q);

/// The two-element edges {head, tail} together with the root set. Throws TooFewComponents
/// when f has a single component.
Hypertree gather_roots(const PlantedForest& f);

/// 1 is a root and the tree containing 2 is rooted elsewhere.
bool is_essential_forest(const PlantedForest& f);

/// Essential hypertrees of rank q, counted by filtering HT_n with is_essential_hypertree.
std::size_t count_essential_by_definition(int n, int q);
/// The same count through essential planted forests with q edges.
std::size_t count_essential_by_gathering(int n, int q);

} // namespace psigma
