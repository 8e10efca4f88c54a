#pragma once

#include "psigma/integer_matrix.hpp"
#include "psigma/order_complex.hpp"
#include "psigma/stabilizer.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace psigma {

/// Largest n the page builders accept.
inline constexpr int kMaxSpectralN = 6;

class SpectralError : public std::runtime_error {
public:
    enum class Code { NTooLarge, NotComparable, BadCoordinates };
    SpectralError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// Raised when the computed E2 page has something outside column p = 0, or torsion.
class CollapseViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Basis element of E1^{p,q}: a p-chain and a sorted q-subset of the one-two basis of its
/// minimum (positions into that basis). It stands for the product of the dual classes.
struct E1Generator {
    std::size_t chain = 0;
    std::vector<std::size_t> subset;
};

/// The E1 page for OPSigma_n acting on the McCullough-Miller complex, Z coefficients.
/// Group (p, q) is the product over p-chains s of H^q(Stab(min s)) = Lambda^q of the dual basis.
class E1Page {
public:
    explicit E1Page(int n);

    int n() const { return n_; }
    const HypertreePoset& poset() const { return *poset_; }
    /// Largest p with a nonempty chain set (n - 2).
    int max_p() const { return static_cast<int>(chains_.size()) - 1; }
    /// Largest stabilizer rank (n - 2).
    int max_q() const { return std::max(0, n_ - 2); }

    const std::vector<Chain>& chains(int p) const;
    /// One-two basis of each poset element, indexed like the poset.
    const GeneratorSet& basis(std::size_t element) const { return bases_[element]; }

    std::size_t rank(int p, int q) const;
    /// Offset of the first generator of chain k in the (p, q) basis.
    std::size_t offset(int p, int q, std::size_t chain) const;
    std::vector<E1Generator> generators(int p, int q) const;
    /// "{1,2,3,4} < {1,2},{2,3,4} | a({3,4},2)"
    std::string describe(int p, int q, const E1Generator& g) const;

private:
    int n_;
    std::shared_ptr<const HypertreePoset> poset_;
    std::vector<std::vector<Chain>> chains_;
    std::vector<GeneratorSet> bases_;
};

/// Dual of H_1(Stab(b)) -> H_1(Stab(a)) for b <= a: rows indexed by B(b), columns by B(a);
/// entry (x, y) is the coefficient of y in express_in_basis(a, x). Throws NotComparable.
IntegerMatrix restriction_matrix(const Hypertree& a, const Hypertree& b);

/// q-th exterior power on sorted q-subsets of rows and columns; entries are minors.
IntegerMatrix exterior_power(const IntegerMatrix& m, int q);

/// d1 : E1^{p,q} -> E1^{p+1,q} (rows E1^{p+1,q}, columns E1^{p,q}). Face i of a (p+1)-chain
/// contributes (-1)^i; face 0 changes the minimum and goes through the exterior power of the
/// restriction matrix, the other faces act as the identity.
IntegerMatrix d1_matrix(const E1Page& page, int p, int q, unsigned threads = 1);

struct E2Entry {
    int p = 0;
    int q = 0;
    std::size_t rank = 0;
    std::vector<Integer> torsion;
};

struct E2Page {
    int n = 0;
    /// Every (p, q) with 0 <= p <= max_p, 0 <= q <= max_q, ordered by q then p.
    std::vector<E2Entry> entries;

    const E2Entry& at(int p, int q) const;
    /// Zero outside column p = 0 and torsion-free.
    bool concentrated_in_first_column() const;
    /// rank E2^{0,q} for q = 0 .. max_q.
    std::vector<std::size_t> column() const;
};

/// E2 by Smith normal form of every d1, with no shape assumption.
E2Page compute_e2(const E1Page& page, unsigned threads = 1);
/// compute_e2 followed by the one-column check; throws CollapseViolation.
E2Page e2_page(int n, unsigned threads = 1);

/// Ranks of H^k(OPSigma_n) read off the collapsed E2 column.
std::vector<std::size_t> poincare_opsigma(int n, unsigned threads = 1);

/// How d1 treats generator labels (the sets of one-two generators).
enum class LabelBehaviour {
    Preserving,           ///< every nonzero entry joins equal labels
    CoarseningTriangular, ///< each source generator (K,l) is matched to a target (I,l) with K inside I
    Neither,
};
std::string to_string(LabelBehaviour b);
LabelBehaviour d1_label_diagnostic(const E1Page& page, int p, int q);

/// Binomial coefficient as an exact integer.
Integer binomial(int n, int k);
/// Coefficients of (1 + a z)^e.
std::vector<Integer> binomial_series(int a, int e);

} // namespace psigma
