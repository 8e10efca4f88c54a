#include "psigma/free_group.hpp"

#include <regex>
#include <sstream>

namespace psigma {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l)
{
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
        out.pop_back();
    else
        out.push_back(l);
}

void check_index(int n, int i)
{
    if (i < 1 || i > n)
        throw FreeGroupError(FreeGroupError::Code::BadIndex, "generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

} // namespace

FreeWord::FreeWord(const std::vector<Letter>& letters)
{
    for (const auto& l : letters) {
        if (l.gen < 1 || (l.exp != 1 && l.exp != -1))
            throw FreeGroupError(FreeGroupError::Code::BadIndex, "malformed letter");
        push_reduced(letters_, l);
    }
}

FreeWord FreeWord::generator(int i, int exp) { return FreeWord({{i, exp}}); }

FreeWord FreeWord::inverse() const
{
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->exp});
    return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const
{
    FreeWord w = *this;
    for (const auto& l : rhs.letters_)
        push_reduced(w.letters_, l);
    return w;
}

std::string FreeWord::to_string() const
{
    if (letters_.empty())
        return "1";
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty())
            s += ' ';
        s += 'x' + std::to_string(l.gen);
        if (l.exp < 0)
            s += "^-1";
    }
    return s;
}

FreeWord FreeWord::parse(const std::string& text)
{
    static const std::regex token(R"(x([1-9][0-9]*)(\^(-?1))?)");
    std::istringstream in(text);
    std::vector<Letter> letters;
    std::string tok;
    bool identity_seen = false;
    while (in >> tok) {
        if (tok == "1") {
            identity_seen = true;
            continue;
        }
        std::smatch m;
        if (!std::regex_match(tok, m, token))
            throw FreeGroupError(FreeGroupError::Code::ParseError, "cannot parse word token '" + tok + "'");
        letters.push_back({std::stoi(m[1].str()), m[3].matched && m[3].str() == "-1" ? -1 : 1});
    }
    if (identity_seen && !letters.empty())
        throw FreeGroupError(FreeGroupError::Code::ParseError, "'1' only denotes the empty word");
    return FreeWord(letters);
}

SymmetricAut::SymmetricAut(int n) : n_(n)
{
    if (n < 1)
        throw FreeGroupError(FreeGroupError::Code::BadIndex, "rank must be positive");
    for (int i = 1; i <= n; ++i)
        images_.push_back(FreeWord::generator(i));
}

SymmetricAut::SymmetricAut(int n, std::vector<FreeWord> images) : n_(n), images_(std::move(images))
{
    if (static_cast<int>(images_.size()) != n)
        throw FreeGroupError(FreeGroupError::Code::MismatchedN, "expected one image per generator");
    for (const auto& w : images_)
        for (const auto& l : w.letters())
            check_index(n, l.gen);
}

SymmetricAut SymmetricAut::alpha(int n, int i, int j, int exp)
{
    check_index(n, i);
    check_index(n, j);
    if (i == j)
        throw FreeGroupError(FreeGroupError::Code::BadIndex, "alpha_{ii} is undefined");
    SymmetricAut a(n);
    const FreeWord xj = FreeWord::generator(j, exp);
    a.images_[static_cast<std::size_t>(i - 1)] = xj * FreeWord::generator(i) * xj.inverse();
    return a;
}

SymmetricAut SymmetricAut::conjugation(int n, const FreeWord& w)
{
    for (const auto& l : w.letters())
        check_index(n, l.gen);
    SymmetricAut a(n);
    for (int i = 1; i <= n; ++i)
        a.images_[static_cast<std::size_t>(i - 1)] = w * FreeWord::generator(i) * w.inverse();
    return a;
}

FreeWord SymmetricAut::apply(const FreeWord& w) const
{
    FreeWord out;
    for (const auto& l : w.letters()) {
        check_index(n_, l.gen);
        const FreeWord& img = images_[static_cast<std::size_t>(l.gen - 1)];
        out = out * (l.exp > 0 ? img : img.inverse());
    }
    return out;
}

bool SymmetricAut::is_basis_conjugating() const
{
    for (int i = 1; i <= n_; ++i) {
        const auto& w = image(i).letters();
        if (w.size() % 2 == 0)
            return false;
        const std::size_t m = w.size() / 2;
        if (w[m] != Letter{i, 1})
            return false;
        for (std::size_t k = 0; k < m; ++k)
            if (w[k].gen != w[w.size() - 1 - k].gen || w[k].exp != -w[w.size() - 1 - k].exp)
                return false;
    }
    return true;
}

SymmetricAut compose(const SymmetricAut& a, const SymmetricAut& b)
{
    if (a.n() != b.n())
        throw FreeGroupError(FreeGroupError::Code::MismatchedN, "automorphisms of different free groups");
    std::vector<FreeWord> images;
    for (int i = 1; i <= a.n(); ++i)
        images.push_back(a.apply(b.image(i)));
    return SymmetricAut(a.n(), std::move(images));
}

SymmetricAut compose(const std::vector<SymmetricAut>& factors)
{
    if (factors.empty())
        throw FreeGroupError(FreeGroupError::Code::MismatchedN, "empty product has no rank");
    SymmetricAut out = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k)
        out = compose(out, factors[k]);
    return out;
}

bool equal(const SymmetricAut& a, const SymmetricAut& b)
{
    if (a.n() != b.n())
        throw FreeGroupError(FreeGroupError::Code::MismatchedN, "automorphisms of different free groups");
    return a == b;
}

SymmetricAut alpha_I_j(int n, VertexSet I, int j)
{
    check_index(n, j);
    if (I.contains(j) || !I.subset_of(VertexSet::range(n)))
        throw FreeGroupError(FreeGroupError::Code::BadIndex, "alpha_{I,j} needs I inside [n] without j");
    SymmetricAut out(n);
    for (int i : I)
        out = compose(out, SymmetricAut::alpha(n, i, j));
    return out;
}

AlphaWord inverse(const AlphaWord& w)
{
    AlphaWord out(w.rbegin(), w.rend());
    for (auto& l : out)
        l.exp = -l.exp;
    return out;
}

AlphaWord commutator(const AlphaWord& a, const AlphaWord& b)
{
    AlphaWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    auto ai = inverse(a);
    auto bi = inverse(b);
    out.insert(out.end(), ai.begin(), ai.end());
    out.insert(out.end(), bi.begin(), bi.end());
    return out;
}

SymmetricAut evaluate(int n, const AlphaWord& w)
{
    SymmetricAut out(n);
    for (const auto& l : w)
        out = compose(out, SymmetricAut::alpha(n, l.i, l.j, l.exp));
    return out;
}

std::string to_string(const AlphaWord& w)
{
    std::string s;
    for (const auto& l : w) {
        if (!s.empty())
            s += ' ';
        s += "a" + std::to_string(l.i) + "," + std::to_string(l.j);
        if (l.exp < 0)
            s += "^-1";
    }
    return s.empty() ? "1" : s;
}

McCoolReport verify_mccool(int n)
{
    McCoolReport r;
    r.n = n;
    const SymmetricAut id(n);
    auto check = [&](const AlphaWord& w, std::size_t& counter) {
        ++counter;
        if (evaluate(n, w) != id) {
            if (r.failures++ == 0)
                r.first_failure = to_string(w);
        }
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j == i)
                continue;
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j)
                    continue;
                check(commutator({{i, j, 1}}, {{k, j, 1}}), r.common_target);
                check(commutator({{i, j, 1}}, {{i, k, 1}, {j, k, 1}}), r.triangle);
                for (int l = 1; l <= n; ++l) {
                    if (l == i || l == j || l == k)
                        continue;
                    check(commutator({{i, j, 1}}, {{k, l, 1}}), r.disjoint);
                }
            }
        }
    return r;
}

} // namespace psigma
