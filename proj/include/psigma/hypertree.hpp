#pragma once

#include "psigma/vertex_set.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace psigma {

/// A hyperedge is a set of at least two labels.
using HyperEdge = VertexSet;

/// Largest n accepted by the exhaustive enumeration routines.
inline constexpr int kMaxEnumerationN = 7;

enum class HypertreeErrc {
    EdgeTooSmall,
    LabelOutOfRange,
    LabelGap,
    NotConnected,
    SimpleCycle,
    MismatchedN,
    NTooLarge,
    InvalidN,
};

class HypertreeError : public std::runtime_error {
public:
    HypertreeError(HypertreeErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    HypertreeErrc code() const { return code_; }

private:
    HypertreeErrc code_;
};

/// Thrown by validate_hypertree when a simple cycle exists. The witness is the walk
/// v0, e1, v1, ..., ek, v0 given as parallel lists of vertices and edges.
class SimpleCycleError : public HypertreeError {
public:
    SimpleCycleError(std::vector<int> vertices, std::vector<HyperEdge> edges);
    const std::vector<int>& cycle_vertices() const { return vertices_; }
    const std::vector<HyperEdge>& cycle_edges() const { return edges_; }

private:
    std::vector<int> vertices_;
    std::vector<HyperEdge> edges_;
};

/// An [n]-labelled hypertree in canonical form: edges sorted lexicographically.
/// Instances can only be obtained through validation or from trusted internal code,
/// so every Hypertree value satisfies the hypertree invariants.
class Hypertree {
public:
    int n() const { return n_; }
    const std::vector<HyperEdge>& edges() const { return edges_; }
    int rank() const { return static_cast<int>(edges_.size()) - 1; }

    /// The hypertree with the single edge [n].
    static Hypertree nuclear(int n);

    bool operator==(const Hypertree&) const = default;
    /// Canonical total order: by n, then lexicographically on the sorted edge list.
    std::strong_ordering operator<=>(const Hypertree& o) const;

    /// "{1,2,3},{3,4}"
    std::string to_string() const;

    /// Skips validation; edges must already describe a hypertree on [n].
    static Hypertree from_trusted(int n, std::vector<HyperEdge> edges);

private:
    Hypertree(int n, std::vector<HyperEdge> edges) : n_(n), edges_(std::move(edges)) {}

    int n_ = 0;
    std::vector<HyperEdge> edges_;
};

struct HypertreeHash {
    std::size_t operator()(const Hypertree& t) const noexcept;
};

/// A cycle-free hypergraph on an arbitrary label set; not necessarily connected.
struct Hyperforest {
    VertexSet labels;
    std::vector<HyperEdge> edges;
};

/// Validate a candidate edge list and return its canonical hypertree.
/// Throws HypertreeError (EdgeTooSmall, LabelOutOfRange, LabelGap, NotConnected, InvalidN)
/// or SimpleCycleError.
Hypertree validate_hypertree(int n, const std::vector<HyperEdge>& candidate_edges);
Hypertree validate_hypertree(int n, const std::vector<std::vector<int>>& candidate_edges);

/// True when a simple cycle exists; fills the witness walk when requested.
bool find_simple_cycle(const std::vector<HyperEdge>& edges, std::vector<int>* vertices = nullptr,
    std::vector<std::size_t>* edge_indices = nullptr);

inline int rank(const Hypertree& t) { return t.rank(); }

/// t <= u iff every edge of u lies inside an edge of t.
bool leq(const Hypertree& t, const Hypertree& u);

/// Greatest common lower bound of a nonempty list of hypertrees on the same [n].
Hypertree meet(const std::vector<Hypertree>& taus);
Hypertree meet(const Hypertree& a, const Hypertree& b);

/// Least common upper bound, when one exists: the common refinement whose edges are
/// the pairwise edge intersections of size >= 2.
std::optional<Hypertree> join(const Hypertree& a, const Hypertree& b);

/// Remove label j from every edge, then drop edges that became singletons.
Hyperforest delete_vertex(const Hypertree& t, int j);

/// Vertex sets of connected components, ordered by smallest label.
std::vector<VertexSet> components(const Hyperforest& f);

/// All hypertrees on [n], canonical and sorted by (rank, canonical order).
std::vector<Hypertree> enumerate_hypertrees(int n);

/// Edges of the reduced walk from vertex a to vertex b, in order along the walk.
std::vector<HyperEdge> reduced_path(const Hypertree& t, int a, int b);

/// Distance (in edges) from `root` to every vertex.
std::vector<int> edge_distances(const Hypertree& t, int root);

/// HT_n with precomputed order relations. Elements are indexed in (rank, canonical) order,
/// which is a linear extension of the partial order.
class HypertreePoset {
public:
    explicit HypertreePoset(int n);
    /// Induced subposet on an explicit element list (sorted internally).
    HypertreePoset(int n, std::vector<Hypertree> elements);

    int n() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Hypertree>& elements() const { return elements_; }
    const Hypertree& operator[](std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index_of(const Hypertree& t) const;

    bool less(std::size_t a, std::size_t b) const { return above_[a][b]; }
    /// Elements strictly above a.
    const boost::dynamic_bitset<>& above(std::size_t a) const { return above_[a]; }
    const boost::dynamic_bitset<>& below(std::size_t b) const { return below_[b]; }

    /// Cover relations (a, b): a < b with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

private:
    void build();

    int n_;
    std::vector<Hypertree> elements_;
    std::unordered_map<Hypertree, std::size_t, HypertreeHash> index_;
    std::vector<boost::dynamic_bitset<>> above_;
    std::vector<boost::dynamic_bitset<>> below_;
};

/// All cover pairs of HT_n.
std::vector<std::pair<Hypertree, Hypertree>> hasse_cover_pairs(int n);

/// Canonical isomorphism-type key (minimum edge list over all relabellings). Used for
/// colouring Hasse diagrams by combinatorial type; n <= 8.
std::string combinatorial_type(const Hypertree& t);

} // namespace psigma
