#pragma once

#include "psigma/vertex_set.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace psigma {

class FreeGroupError : public std::runtime_error {
public:
    enum class Code { BadIndex, MismatchedN, ParseError };
    FreeGroupError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// x_gen^exp with exp = +1 or -1.
struct Letter {
    int gen = 0;
    int exp = 1;
    bool operator==(const Letter&) const = default;
};

/// A freely reduced word in x_1, x_2, ...
class FreeWord {
public:
    FreeWord() = default;
    /// Reduces the given letters.
    explicit FreeWord(const std::vector<Letter>& letters);

    static FreeWord generator(int i, int exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    FreeWord inverse() const;
    /// Concatenate and reduce.
    FreeWord operator*(const FreeWord& rhs) const;
    bool operator==(const FreeWord&) const = default;

    /// "x2 x1 x2^-1"; the empty word prints as "1".
    std::string to_string() const;
    /// Accepts the to_string syntax (whitespace separated, "1" or blank for the identity).
    static FreeWord parse(const std::string& text);

private:
    std::vector<Letter> letters_;
};

/// Endomorphism of F_n given by the images of x_1..x_n.
class SymmetricAut {
public:
    explicit SymmetricAut(int n);
    SymmetricAut(int n, std::vector<FreeWord> images);

    static SymmetricAut identity(int n) { return SymmetricAut(n); }
    /// alpha_{ij}: x_i -> x_j x_i x_j^-1, other generators fixed. exp = -1 gives the inverse.
    static SymmetricAut alpha(int n, int i, int j, int exp = 1);
    /// x -> w x w^-1 for every generator.
    static SymmetricAut conjugation(int n, const FreeWord& w);

    int n() const { return n_; }
    const FreeWord& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

    FreeWord apply(const FreeWord& w) const;
    bool operator==(const SymmetricAut&) const = default;

    /// Every x_i maps to a conjugate of itself.
    bool is_basis_conjugating() const;

private:
    int n_;
    std::vector<FreeWord> images_;
};

/// a o b: apply b first, then a.
SymmetricAut compose(const SymmetricAut& a, const SymmetricAut& b);
SymmetricAut compose(const std::vector<SymmetricAut>& factors);
/// Agreement on every generator image. Throws MismatchedN.
bool equal(const SymmetricAut& a, const SymmetricAut& b);

/// prod_{i in I} alpha_{ij}; the factors commute.
SymmetricAut alpha_I_j(int n, VertexSet I, int j);

/// A word in the generators alpha_{ij}^{+-1}.
struct AlphaLetter {
    int i = 0;
    int j = 0;
    int exp = 1;
};
using AlphaWord = std::vector<AlphaLetter>;

AlphaWord inverse(const AlphaWord& w);
AlphaWord commutator(const AlphaWord& a, const AlphaWord& b);
SymmetricAut evaluate(int n, const AlphaWord& w);
std::string to_string(const AlphaWord& w);

struct McCoolReport {
    int n = 0;
    /// Instances of [a_ij, a_kl], [a_ij, a_kj], [a_ij, a_ik a_jk].
    std::size_t disjoint = 0;
    std::size_t common_target = 0;
    std::size_t triangle = 0;
    std::size_t failures = 0;
    std::string first_failure;

    std::size_t total() const { return disjoint + common_target + triangle; }
    bool ok() const { return failures == 0; }
};

/// Evaluates every instance of the three relation families as automorphisms.
McCoolReport verify_mccool(int n);

} // namespace psigma
