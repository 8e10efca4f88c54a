#pragma once

#include "psigma/integer_matrix.hpp"
#include "psigma/planted_forest.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace psigma {

/// Largest n the ring code represents (64 generator slots).
inline constexpr int kMaxRingN = 8;

class RingError : public std::runtime_error {
public:
    enum class Code { BadIndex, ParseError, OracleFailure, TooLarge };
    RingError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// Degree-one class a*(i,j). Canonical order compares the second index first.
struct RingGenerator {
    int i = 0;
    int j = 0;
    int slot() const { return (j - 1) * kMaxRingN + (i - 1); }
    static RingGenerator from_slot(int s) { return {s % kMaxRingN + 1, s / kMaxRingN + 1}; }
    bool operator==(const RingGenerator&) const = default;
    std::string to_string() const;
};

/// Wedge product of distinct generators taken in canonical order, stored as a set of slots.
class RingMonomial {
public:
    RingMonomial() = default;
    explicit RingMonomial(std::uint64_t bits) : bits_(bits) {}

    std::uint64_t bits() const { return bits_; }
    int degree() const;
    std::vector<RingGenerator> generators() const;
    bool contains(const RingGenerator& g) const { return bits_ >> g.slot() & 1u; }

    /// By degree, then lexicographically on the canonical generator sequences.
    std::strong_ordering operator<=>(const RingMonomial& o) const;
    bool operator==(const RingMonomial&) const = default;

    /// "a(2,1)^a(1,3)"; the empty monomial prints as "1".
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

/// The planted forest drawn by a monomial (edge i <- j for a*(i,j)), when there is one.
std::optional<PlantedForest> monomial_to_forest(int n, const RingMonomial& m);
RingMonomial forest_to_monomial(const PlantedForest& f);

/// Integer combination of monomials; zero coefficients are never stored.
class RingElement {
public:
    using Terms = std::map<RingMonomial, Integer>;

    RingElement() = default;
    static RingElement one() { return monomial({}, 1); }
    static RingElement generator(int i, int j);
    /// Product of the generators in the given order, with the sign of sorting them.
    /// A repeated generator gives zero.
    static RingElement monomial(const std::vector<RingGenerator>& factors, const Integer& coefficient = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const RingMonomial& m, const Integer& c);

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const Integer& c) const;
    bool operator==(const RingElement&) const = default;

    /// Highest index used, 0 for constants.
    int max_label() const;
    /// "a(2,1)^a(1,3) + a(3,1)^a(2,3)", "0" for zero.
    std::string to_string() const;

private:
    Terms terms_;
};

/// Parses "2*a(2,1)^a(2,3) - a(3,1) + 1". Throws ParseError, or BadIndex for labels
/// outside [n].
RingElement parse_ring_element(const std::string& text, int n);

struct NormalFormStats {
    std::size_t rewrites = 0;
    bool budget_exhausted = false;
};

inline constexpr std::size_t kDefaultRewriteBudget = 5'000'000;

/// Reduces modulo a*a = 0, a*(ij)a*(ji) = 0 and the three-term relation to the planted-forest
/// basis. Repeated heads are rewritten at the smallest head k with its two smallest tails
/// j < i: a*(kj)a*(ki) -> a*(kj)a*(ji) + a*(ij)a*(ki); monomials with a directed cycle vanish.
/// On budget exhaustion the linear-algebra reduction is used instead.
RingElement normal_form(const RingElement& x, int n, std::size_t budget = kDefaultRewriteBudget, NormalFormStats* stats = nullptr);

/// Graded-commutative product followed by normal_form.
RingElement multiply(const RingElement& a, const RingElement& b, int n);

/// The relation lattice in one degree, reduced by integer row echelon with non-forest
/// monomials as pivot columns. Independent of the rewriting rules.
class RelationOracle {
public:
    RelationOracle(int n, int degree);

    int n() const { return n_; }
    int degree() const { return degree_; }
    std::size_t monomial_count() const { return monomials_.size(); }
    std::size_t forest_count() const { return forest_count_; }
    /// Every non-forest monomial got a unit pivot and no relation survives among forests:
    /// the forest monomials are a Z-basis of the quotient in this degree.
    bool forests_form_basis() const { return basis_ok_; }
    const std::string& failure() const { return failure_; }

    /// The unique forest-supported representative of x modulo relations (x homogeneous of
    /// this degree). Throws OracleFailure if forests_form_basis() is false.
    RingElement reduce(const RingElement& x) const;

    /// Matrix whose rows span the relations in this degree (columns: monomials in canonical order).
    IntegerMatrix relation_matrix() const;
    const std::vector<RingMonomial>& monomials() const { return monomials_; }

private:
    using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;

    int n_;
    int degree_;
    std::vector<RingMonomial> monomials_;     // canonical order
    std::vector<std::uint32_t> column_of_;    // canonical index -> elimination column
    std::vector<std::size_t> monomial_of_;    // elimination column -> canonical index
    std::size_t forest_count_ = 0;
    std::vector<SparseRow> relations_;        // in canonical columns
    std::vector<SparseRow> pivots_;           // by elimination column (non-forest part)
    bool basis_ok_ = true;
    std::string failure_;
};

/// Rank of H^d(PSigma_n) for d = 0 .. n-1, counted from planted forests.
std::vector<std::size_t> poincare_psigma(int n);
/// Alternating sum of poincare_psigma.
Integer euler_psigma(int n);

struct LerayHirschRow {
    int degree = 0;
    Integer lhs;      ///< rank H^i(PSigma_n) from forests
    Integer rhs;      ///< n * rank H^{i-1}(OPSigma_n) + rank H^i(OPSigma_n)
    bool holds() const { return lhs == rhs; }
};
/// Compares forest counts against an OPSigma_n column (for instance a computed E2 column).
std::vector<LerayHirschRow> lh_rank_check(int n, const std::vector<std::size_t>& opsigma_column);

/// Pairs (i, j) with i != j, i != 1, and (i, j) != (2, 1): the one-dimensional generators of
/// H*(OPSigma_n). Sorted lexicographically.
std::vector<std::pair<int, int>> opsigma_generator_set(int n);

/// All generators a*(i,j) of H^1(PSigma_n) in canonical order.
std::vector<RingGenerator> ring_generators(int n);

} // namespace psigma
