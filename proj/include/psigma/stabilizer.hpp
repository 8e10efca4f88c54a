#pragma once

#include "psigma/hypertree.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace psigma {

/// The index never conjugated by x_j: 1 for j != 1, and 2 for j == 1.
constexpr int hat(int j) { return j == 1 ? 2 : 1; }

/// The outer automorphism class of alpha_{I,j} = prod_{i in I} alpha_{ij}.
/// A generator is "one-two" when hat(j) is not in I.
struct Generator {
    VertexSet I;
    int j = 0;

    bool is_one_two() const { return !I.contains(hat(j)); }
    bool operator==(const Generator&) const = default;
    /// Ordered by j, then lexicographically by I.
    std::strong_ordering operator<=>(const Generator& o) const
    {
        if (auto c = j <=> o.j; c != 0)
            return c;
        return I <=> o.I;
    }
    /// "a({4,5},1)"
    std::string to_string() const;
};

enum class StabilizerErrc { BadIndex, NotOneTwo, NotInStabilizer, NotCompatible, NotWorrisome, NotAPartition };

class StabilizerError : public std::runtime_error {
public:
    StabilizerError(StabilizerErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    StabilizerErrc code() const { return code_; }

private:
    StabilizerErrc code_;
};

/// Validated constructor for a one-two generator on [n].
Generator make_one_two(int n, VertexSet I, int j);

/// A sorted, duplicate-free set of one-two generators.
using GeneratorSet = std::vector<Generator>;
GeneratorSet normalize(GeneratorSet gens);

/// The one-two basis B(t): generators (C, j) with C a component of t minus j avoiding hat(j).
/// Sorted by (j, C).
GeneratorSet one_two_basis(const Hypertree& t);

/// Whether alpha_{I,j} fixes t: I is a union of components of t minus j.
bool stabilizer_contains(const Hypertree& t, const Generator& g);

/// Coordinates of [alpha_{I,j}] in H_1(Stab t) with respect to one_two_basis(t).
std::vector<int> express_in_basis(const Hypertree& t, const Generator& g);

/// Two-edge hypertree {I u {j}, [n] \ I} whose basis is {g}.
Hypertree single_cone_point(int n, const Generator& g);

/// The least hypertree whose stabilizer contains every member of A. Throws NotCompatible
/// when A is not a subset of any one-two basis.
Hypertree cone_point(int n, const GeneratorSet& A);

bool is_compatible(int n, const GeneratorSet& A);

/// At most one fat edge; it contains 1 and lies on the reduced path from 1 to 2.
bool is_essential_hypertree(const Hypertree& t);
/// Essentiality of a compatible collection, judged on its cone point.
bool is_essential(int n, const GeneratorSet& A);

/// True when every member of A is in one_two_basis(t).
bool supports(const Hypertree& t, const GeneratorSet& A);
/// True when every member of A fixes t.
bool stabilizes(const Hypertree& t, const GeneratorSet& A);

struct SupportClassification {
    std::vector<Hypertree> core;
    std::vector<Hypertree> peripheral;
};

/// Core (A inside the basis) and peripheral (A in the stabilizer only) hypertrees, in
/// the poset's order.
SupportClassification classify_support(const HypertreePoset& poset, const GeneratorSet& A);
SupportClassification classify_support(int n, const GeneratorSet& A);

/// A fat edge that is not the first edge on the path from 1 to 2.
struct WorrisomeEdge {
    HyperEdge edge;
    int c = 0;     ///< vertex of the edge closest to 1
    VertexSet L;   ///< the remaining vertices
    bool operator==(const WorrisomeEdge&) const = default;
};

std::vector<WorrisomeEdge> worrisome_edges(const Hypertree& t);

using Partition = std::vector<VertexSet>;

/// Replace worrisome edge e by the edges {block u {c}} for each block of P.
Hypertree split_edge(const Hypertree& t, HyperEdge e, const Partition& P);
/// Split several worrisome edges at once.
Hypertree split_edges(const Hypertree& t, const std::vector<std::pair<HyperEdge, Partition>>& splits);

/// Every compatible collection of size at most max_size, sorted and deduplicated.
std::vector<GeneratorSet> compatible_collections(const HypertreePoset& poset, int max_size);

} // namespace psigma
