#pragma once

#include "psigma/hypertree.hpp"
#include "psigma/integer_matrix.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace psigma {

/// Strictly increasing chain of poset element indices. Because poset indices follow a
/// linear extension, the index order is also the poset order.
using Chain = std::vector<std::size_t>;

/// A chain spelled out as hypertrees, smallest first.
struct ChainSimplex {
    std::vector<Hypertree> vertices;
    int dimension() const { return static_cast<int>(vertices.size()) - 1; }
    const Hypertree& min() const { return vertices.front(); }
};

/// Refuses to enumerate more than this many chains.
inline constexpr std::size_t kMaxChains = 50'000'000;

class ComplexError : public std::runtime_error {
public:
    enum class Code { NotAComplex, TooLarge };
    ComplexError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// All strictly increasing (p+1)-chains, in lexicographic index order. When `subset` is
/// given, only chains inside it are produced.
std::vector<Chain> enumerate_chains(const HypertreePoset& poset, int p, const boost::dynamic_bitset<>* subset = nullptr);

ChainSimplex to_simplex(const HypertreePoset& poset, const Chain& c);

/// Finite abstract simplicial complex on integer vertices. Simplices are sorted vertex
/// tuples; simplices(d) is sorted lexicographically.
class SimplicialComplex {
public:
    using Simplex = std::vector<int>;

    SimplicialComplex() = default;
    /// Takes every simplex of the complex; throws NotAComplex if a face is missing.
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);
    /// Downward closure of the given facets.
    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Simplex>& simplices(int d) const;
    std::size_t count(int d) const { return simplices(d).size(); }
    /// Position of s within simplices(s.size() - 1), if present.
    std::optional<std::size_t> index_of(const Simplex& s) const;

private:
    std::vector<std::vector<Simplex>> by_dim_;
};

/// Order complex of the poset, or of the subposet on `subset`.
SimplicialComplex order_complex(const HypertreePoset& poset, const boost::dynamic_bitset<>* subset = nullptr);

/// Boundary d_k : C_k -> C_{k-1} (rows (k-1)-simplices, columns k-simplices), signs (-1)^i
/// for deleting the i-th vertex. With augmented = true, k = 0 maps onto C_{-1} = Z.
IntegerMatrix boundary_matrix(const SimplicialComplex& K, int k, bool augmented = false);

/// Coboundaries delta^d : C^d -> C^{d+1} for d = 0 .. dim-1 (the transposes of the boundaries).
std::vector<IntegerMatrix> coboundary_matrices(const SimplicialComplex& K);

struct HomologyGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;
    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

/// Groups indexed from degree -1 (only nonzero for the empty complex) up to the dimension.
struct GradedGroups {
    std::vector<HomologyGroup> groups;
    const HomologyGroup& degree(int d) const { return groups.at(static_cast<std::size_t>(d + 1)); }
    bool trivial() const;
};

GradedGroups reduced_homology(const SimplicialComplex& K);
GradedGroups reduced_cohomology(const SimplicialComplex& K);

} // namespace psigma
