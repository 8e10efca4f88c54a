#include "psigma/verify.hpp"

#include "psigma/free_group.hpp"
#include "psigma/parallel.hpp"
#include "psigma/planted_forest.hpp"
#include "psigma/reference.hpp"
#include "psigma/smith.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace psigma {

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

template <class T> std::string list(const std::vector<T>& v)
{
    std::ostringstream s;
    s << '[';
    for (std::size_t k = 0; k < v.size(); ++k)
        s << (k ? "," : "") << v[k];
    s << ']';
    return s.str();
}

std::vector<Integer> as_integers(const std::vector<std::size_t>& v)
{
    std::vector<Integer> out;
    for (auto x : v)
        out.push_back(static_cast<unsigned long long>(x));
    return out;
}

Integer power(Integer base, int e)
{
    Integer r = 1;
    for (int k = 0; k < e; ++k)
        r *= base;
    return r;
}

// Lazily built, shared per-n data.
class Cache {
public:
    const HypertreePoset& poset(int n) { return *get(n).poset(n); }
    const E1Page& e1(int n) { return *get(n).e1(n); }
    const E2Page& e2(int n) { return *get(n).e2(n, *get(n).e1(n)); }

private:
    struct Slot {
        std::once_flag poset_once, e1_once, e2_once;
        std::unique_ptr<HypertreePoset> poset_value;
        std::unique_ptr<E1Page> e1_value;
        std::unique_ptr<E2Page> e2_value;

        const HypertreePoset* poset(int n)
        {
            std::call_once(poset_once, [&] { poset_value = std::make_unique<HypertreePoset>(n); });
            return poset_value.get();
        }
        const E1Page* e1(int n)
        {
            std::call_once(e1_once, [&] { e1_value = std::make_unique<E1Page>(n); });
            return e1_value.get();
        }
        const E2Page* e2(int, const E1Page& page)
        {
            std::call_once(e2_once, [&] { e2_value = std::make_unique<E2Page>(compute_e2(page)); });
            return e2_value.get();
        }
    };

    Slot& get(int n)
    {
        std::lock_guard lock(mutex_);
        auto& s = slots_[n];
        if (!s)
            s = std::make_unique<Slot>();
        return *s;
    }

    std::mutex mutex_;
    std::map<int, std::unique_ptr<Slot>> slots_;
};

struct Task {
    std::string family;
    std::string name;
    int n;
    std::string claim;
    std::function<Outcome()> run;
};

class Registry {
public:
    Registry(const VerifyOptions& o, Cache& cache) : opt_(o), cache_(cache) {}

    std::vector<Task> tasks;

    void add(const std::string& family, const std::string& name, int n, std::string claim, std::function<Outcome()> run)
    {
        tasks.push_back({family, name, n, std::move(claim), std::move(run)});
    }

    std::mt19937_64 rng(const std::string& name, int n) const
    {
        std::seed_seq seq{static_cast<std::uint64_t>(opt_.seed), static_cast<std::uint64_t>(n), std::hash<std::string>{}(name)};
        return std::mt19937_64(seq);
    }

    void census(int n);
    void basis(int n);
    void cone(int n);
    void essential(int n);
    void peripheral(int n);
    void e1(int n);
    void cochain(int n);
    void e2(int n);
    void poincare(int n);
    void ring(int n);
    void identities(int n);
    void mccool(int n);

private:
    const VerifyOptions& opt_;
    Cache& cache_;
};

void Registry::census(int n)
{
    static const std::map<int, std::size_t> known{{2, 1}, {3, 4}, {4, 29}, {5, 311}, {6, 4447}, {7, 79745}};
    add("census", "count", n, "hypertree counts 1, 4, 29, 311, 4447 for n = 2..6", [=, this] {
        const auto& all = cache_.poset(n).elements();
        if (known.count(n) && all.size() != known.at(n))
            return fail("enumerated " + std::to_string(all.size()) + ", expected " + std::to_string(known.at(n)));
        if (n <= 5) {
            const auto brute = reference::brute_force_hypertrees(n);
            auto sorted = all;
            std::sort(sorted.begin(), sorted.end());
            if (brute != sorted)
                return fail("enumeration differs from the brute-force oracle (" + std::to_string(brute.size()) + " found there)");
        }
        return Outcome{true, std::to_string(all.size()) + " hypertrees"};
    });
    add("census", "histogram", n, "rank-(n-2) hypertrees are the n^(n-2) trees; n = 4 has ranks (1, 12, 16)", [=, this] {
        std::vector<std::size_t> hist(static_cast<std::size_t>(n - 1), 0);
        for (const auto& t : cache_.poset(n).elements())
            ++hist.at(static_cast<std::size_t>(t.rank()));
        if (Integer(static_cast<unsigned long long>(hist.back())) != power(n, n - 2))
            return fail("top rank count " + std::to_string(hist.back()));
        if (n == 4 && hist != std::vector<std::size_t>{1, 12, 16})
            return fail("histogram " + list(hist));
        return Outcome{true, "histogram " + list(hist)};
    });
    add("census", "roundtrip", n, "every enumerated hypertree validates to itself", [=, this] {
        for (const auto& t : cache_.poset(n).elements()) {
            if (validate_hypertree(n, t.edges()) != t)
                return fail(t.to_string() + " does not round-trip");
            for (std::size_t a = 0; a < t.edges().size(); ++a)
                for (std::size_t b = a + 1; b < t.edges().size(); ++b)
                    if ((t.edges()[a] & t.edges()[b]).size() > 1)
                        return fail(t.to_string() + " has edges sharing two vertices");
        }
        return Outcome{};
    });
    if (n <= 5)
        add("census", "order", n, "leq is a partial order and rank is strictly monotone along it", [=, this] {
            const auto& all = cache_.poset(n).elements();
            for (const auto& a : all) {
                if (!leq(a, a))
                    return fail("not reflexive at " + a.to_string());
                for (const auto& b : all) {
                    if (a != b && leq(a, b) && leq(b, a))
                        return fail("not antisymmetric");
                    if (leq(a, b) && a != b && a.rank() >= b.rank())
                        return fail("rank not monotone: " + a.to_string() + " <= " + b.to_string());
                }
            }
            const auto& P = cache_.poset(n);
            for (std::size_t a = 0; a < P.size(); ++a)
                for (std::size_t b = 0; b < P.size(); ++b)
                    if (P.less(a, b))
                        for (std::size_t c = 0; c < P.size(); ++c)
                            if (P.less(b, c) && !leq(P[a], P[c]))
                                return fail("not transitive");
            return Outcome{};
        });
    add("census", "meet", n, "HT_n is a meet semi-lattice: meet agrees with the maximal common lower bound", [=, this] {
        const auto& all = cache_.poset(n).elements();
        auto gen = rng("census/meet", n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        const bool exhaustive = all.size() <= 40;
        const std::size_t trials = exhaustive ? all.size() * all.size() : opt_.samples;
        for (std::size_t k = 0; k < trials; ++k) {
            const auto& a = exhaustive ? all[k / all.size()] : all[pick(gen)];
            const auto& b = exhaustive ? all[k % all.size()] : all[pick(gen)];
            const auto& c = all[pick(gen)];
            const auto m = meet(a, b);
            if (m != meet(b, a))
                return fail("meet not commutative");
            if (meet(a, meet(b, c)) != meet(meet(a, b), c))
                return fail("meet not associative");
            if (n <= 5) {
                const auto oracle = reference::brute_force_meet(all, a, b);
                if (!oracle || *oracle != m)
                    return fail("meet(" + a.to_string() + "; " + b.to_string() + ") = " + m.to_string());
            }
        }
        return Outcome{true, std::to_string(trials) + " pairs"};
    });
    add("census", "hasse", n, "the Hasse diagram of HT_4 minus its minimum has 28 vertices and 36 edges", [=, this] {
        const auto& P = cache_.poset(n);
        const auto pairs = P.cover_pairs();
        std::size_t brute = 0;
        for (std::size_t a = 0; a < P.size(); ++a)
            for (std::size_t b = 0; b < P.size(); ++b) {
                if (!P.less(a, b))
                    continue;
                bool between = false;
                for (std::size_t c = 0; c < P.size() && !between; ++c)
                    between = P.less(a, c) && P.less(c, b);
                brute += !between;
            }
        if (brute != pairs.size())
            return fail("cover pairs " + std::to_string(pairs.size()) + " vs brute force " + std::to_string(brute));
        if (n == 4) {
            const auto upper = std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.first != 0; });
            if (P.size() - 1 != 28 || upper != 36)
                return fail("upper graph has " + std::to_string(P.size() - 1) + " vertices and " + std::to_string(upper) + " edges");
        }
        return Outcome{true, std::to_string(pairs.size()) + " cover pairs"};
    });
}

void Registry::basis(int n)
{
    add("basis", "size", n, "|B(tau)| = rank(tau) for every hypertree", [=, this] {
        for (const auto& t : cache_.poset(n).elements()) {
            const auto B = one_two_basis(t);
            if (static_cast<int>(B.size()) != t.rank())
                return fail(t.to_string() + " has basis of size " + std::to_string(B.size()));
            for (const auto& g : B)
                if (!g.is_one_two() || !stabilizer_contains(t, g))
                    return fail(g.to_string() + " is not a one-two stabilizer element of " + t.to_string());
        }
        return Outcome{};
    });
    add("basis", "inner-relation", n, "the product of a_{C,j} over all components C of tau - j is conjugation by x_j", [=, this] {
        for (const auto& t : cache_.poset(n).elements()) {
            const auto B = one_two_basis(t);
            for (int j = 1; j <= n; ++j) {
                std::vector<int> sum(B.size(), 0);
                std::vector<SymmetricAut> factors;
                for (auto c : components(delete_vertex(t, j))) {
                    const auto coords = express_in_basis(t, {c, j});
                    for (std::size_t k = 0; k < sum.size(); ++k)
                        sum[k] += coords[k];
                    factors.push_back(alpha_I_j(n, c, j));
                }
                if (std::any_of(sum.begin(), sum.end(), [](int x) { return x != 0; }))
                    return fail("coordinates do not cancel at " + t.to_string() + ", j=" + std::to_string(j));
                if (!equal(compose(factors), SymmetricAut::conjugation(n, FreeWord::generator(j))))
                    return fail("word-level product is not inner at " + t.to_string());
            }
        }
        return Outcome{};
    });
}

void Registry::cone(int n)
{
    add("cone", "round-trip", n, "tau(B(tau)) = tau and B(tau(A)) = A for compatible A with |A| <= 3", [=, this] {
        const auto& P = cache_.poset(n);
        for (const auto& t : P.elements())
            if (cone_point(n, one_two_basis(t)) != t)
                return fail("tau(B(tau)) differs for " + t.to_string());
        const auto collections = compatible_collections(P, 3);
        for (const auto& A : collections) {
            const auto c = cone_point(n, A);
            if (one_two_basis(c) != A)
                return fail("B(tau(A)) differs from A at " + c.to_string());
        }
        return Outcome{true, std::to_string(collections.size()) + " collections"};
    });
    add("cone", "minimality", n, "the cone point lies below every hypertree whose stabilizer contains A", [=, this] {
        const auto& P = cache_.poset(n);
        const auto collections = compatible_collections(P, 2);
        for (const auto& A : collections) {
            const auto oracle = reference::brute_force_cone_point(P.elements(), A);
            if (!oracle || *oracle != cone_point(n, A))
                return fail("cone point mismatch");
        }
        // random pairs of one-two generators: compatible exactly when some hypertree supports both
        std::set<Generator> pool;
        for (const auto& t : P.elements())
            for (const auto& g : one_two_basis(t))
                pool.insert(g);
        const std::vector<Generator> gens(pool.begin(), pool.end());
        auto gen = rng("cone/compatible", n);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        std::size_t rejected = 0;
        for (std::size_t k = 0; k < opt_.samples && gens.size() > 1; ++k) {
            const auto a = gens[pick(gen)];
            const auto b = gens[pick(gen)];
            if (a == b)
                continue;
            const GeneratorSet B = normalize({a, b});
            const bool expect = std::any_of(P.elements().begin(), P.elements().end(), [&](const Hypertree& u) { return supports(u, B); });
            if (is_compatible(n, B) != expect)
                return fail("compatibility misjudged for " + a.to_string() + ", " + b.to_string());
            rejected += !expect;
        }
        return Outcome{true, std::to_string(collections.size()) + " collections, " + std::to_string(rejected) + " incompatible pairs seen"};
    });
}

void Registry::essential(int n)
{
    add("essential", "counts", n, "number of essential hypertrees in HT_n of rank q is C(n-2,q) n^q", [=, this] {
        std::vector<std::size_t> by_def;
        for (int q = 0; q <= n - 2; ++q) {
            const auto a = count_essential_by_definition(n, q);
            const auto b = count_essential_by_gathering(n, q);
            const Integer expect = binomial(n - 2, q) * power(n, q);
            if (Integer(static_cast<unsigned long long>(a)) != expect || Integer(static_cast<unsigned long long>(b)) != expect)
                return fail("q=" + std::to_string(q) + ": " + std::to_string(a) + " by definition, " + std::to_string(b)
                    + " by gathering, expected " + expect.str());
            by_def.push_back(a);
        }
        return Outcome{true, list(by_def)};
    });
    add("essential", "predicates", n, "essential by the three conditions, by worrisome edges and by cone point agree", [=, this] {
        for (const auto& t : cache_.poset(n).elements()) {
            const bool a = reference::essential_by_conditions(t);
            if (a != is_essential_hypertree(t) || a != is_essential(n, one_two_basis(t)))
                return fail("disagreement at " + t.to_string());
        }
        return Outcome{};
    });
    add("essential", "gathering", n, "gathering is a bijection from essential planted forests onto essential hypertrees", [=, this] {
        for (int q = 0; q <= n - 2; ++q) {
            std::set<Hypertree> image;
            std::size_t forests = 0;
            for (const auto& f : enumerate_planted_forests(n, q)) {
                if (!is_essential_forest(f))
                    continue;
                ++forests;
                const auto t = gather_roots(f);
                if (t.rank() != q || !reference::essential_by_conditions(t))
                    return fail(f.to_string() + " gathers to " + t.to_string());
                image.insert(t);
            }
            if (image.size() != forests)
                return fail("gathering is not injective at q=" + std::to_string(q));
            if (image.size() != count_essential_by_definition(n, q))
                return fail("gathering is not surjective at q=" + std::to_string(q));
        }
        return Outcome{};
    });
}

void Registry::peripheral(int n)
{
    add("peripheral", "homology", n,
        "the A-peripheral complex is empty iff A is essential, and contractible (trivial reduced homology) otherwise", [=, this] {
            const auto& P = cache_.poset(n);
            std::size_t essential_count = 0;
            std::size_t inessential_count = 0;
            for (const auto& A : compatible_collections(P, 2)) {
                const auto split = classify_support(P, A);
                const auto c = cone_point(n, A);
                if (std::find(split.core.begin(), split.core.end(), c) == split.core.end())
                    return fail("cone point outside the core");
                if (is_essential(n, A)) {
                    ++essential_count;
                    if (!split.peripheral.empty())
                        return fail("essential collection with a peripheral hypertree");
                    continue;
                }
                ++inessential_count;
                if (split.peripheral.empty())
                    return fail("inessential collection with empty peripheral set");
                boost::dynamic_bitset<> mask(P.size());
                for (const auto& t : split.peripheral)
                    mask.set(*P.index_of(t));
                const auto h = reduced_homology(order_complex(P, &mask));
                if (!h.trivial())
                    return fail("peripheral complex has nontrivial reduced homology");
            }
            return Outcome{true, std::to_string(essential_count) + " essential, " + std::to_string(inessential_count) + " inessential"};
        });
}

void Registry::e1(int n)
{
    add("e1", "ranks", n, "E1^{p,q} is the sum over p-chains of Lambda^q of a free module of rank rank(min)", [=, this] {
        const auto& page = cache_.e1(n);
        const auto& P = page.poset();
        // independent chain count: extend chains one strict step at a time with leq
        std::vector<std::size_t> chains_by_len{P.size()};
        std::vector<std::size_t> layer(P.size(), 1);
        for (int p = 1; p <= page.max_p() + 1; ++p) {
            std::vector<std::size_t> next(P.size(), 0);
            for (std::size_t b = 0; b < P.size(); ++b)
                for (std::size_t a = 0; a < P.size(); ++a)
                    if (a != b && leq(P[a], P[b]))
                        next[b] += layer[a];
            layer = next;
            std::size_t total = 0;
            for (auto x : layer)
                total += x;
            chains_by_len.push_back(total);
        }
        for (int p = 0; p <= page.max_p() + 1; ++p)
            if (page.chains(p).size() != chains_by_len[static_cast<std::size_t>(p)])
                return fail("p=" + std::to_string(p) + " has " + std::to_string(page.chains(p).size()) + " chains, brute force "
                    + std::to_string(chains_by_len[static_cast<std::size_t>(p)]));
        for (int p = 0; p <= page.max_p(); ++p)
            for (int q = 0; q <= page.max_q(); ++q) {
                Integer expect = 0;
                for (const auto& c : page.chains(p))
                    expect += binomial(P[c.front()].rank(), q);
                if (Integer(static_cast<unsigned long long>(page.rank(p, q))) != expect)
                    return fail("rank mismatch at (" + std::to_string(p) + "," + std::to_string(q) + ")");
            }
        if (n == 4) {
            const std::map<std::pair<int, int>, std::size_t> expected{
                {{0, 0}, 29}, {{0, 1}, 44}, {{0, 2}, 16}, {{1, 0}, 64}, {{1, 1}, 36}, {{2, 0}, 36}};
            for (int p = 0; p <= page.max_p(); ++p)
                for (int q = 0; q <= page.max_q(); ++q) {
                    auto it = expected.find({p, q});
                    if (page.rank(p, q) != (it == expected.end() ? 0 : it->second))
                        return fail("n=4 grid differs at (" + std::to_string(p) + "," + std::to_string(q) + ")");
                }
        }
        return Outcome{true, "chains per dimension " + list(chains_by_len)};
    });
}

void Registry::cochain(int n)
{
    add("cochain", "d1-squared", n, "d1 o d1 = 0 at every (p,q)", [=, this] {
        const auto& page = cache_.e1(n);
        std::size_t checked = 0;
        for (int q = 0; q <= page.max_q(); ++q)
            for (int p = 0; p + 1 <= page.max_p(); ++p) {
                const auto prod = d1_matrix(page, p + 1, q) * d1_matrix(page, p, q);
                if (!prod.is_zero())
                    return fail("nonzero composite at (" + std::to_string(p) + "," + std::to_string(q) + ")");
                ++checked;
            }
        return Outcome{true, std::to_string(checked) + " composites"};
    });
    add("cochain", "functoriality", n, "restriction maps compose: R(a,c) = R(b,c) R(a,b) for c <= b <= a", [=, this] {
        const auto& page = cache_.e1(n);
        const auto& P = page.poset();
        const auto& chains = page.chains(2);
        auto gen = rng("cochain/functoriality", n);
        const bool exhaustive = chains.size() <= 2000;
        const std::size_t trials = exhaustive ? chains.size() : opt_.samples;
        std::uniform_int_distribution<std::size_t> pick(0, chains.empty() ? 0 : chains.size() - 1);
        for (std::size_t k = 0; k < trials && !chains.empty(); ++k) {
            const auto& c = chains[exhaustive ? k : pick(gen)];
            const auto& lo = P[c[0]];
            const auto& mid = P[c[1]];
            const auto& hi = P[c[2]];
            if (restriction_matrix(hi, lo) != restriction_matrix(mid, lo) * restriction_matrix(hi, mid))
                return fail("composition fails along " + lo.to_string() + " < " + mid.to_string() + " < " + hi.to_string());
        }
        return Outcome{true, std::to_string(trials) + " chains"};
    });
}

void Registry::e2(int n)
{
    add("e2", "collapse", n, "the E2 page is concentrated in the (0,q)-column and torsion-free", [=, this] {
        const auto& page = cache_.e2(n);
        for (const auto& e : page.entries)
            if (!e.torsion.empty() || (e.p != 0 && e.rank != 0))
                return fail("nonzero entry at (" + std::to_string(e.p) + "," + std::to_string(e.q) + ")");
        return Outcome{true, "column " + list(page.column())};
    });
    add("e2", "row-euler", n, "sum_p (-1)^p rank E1^{p,q} = rank E2^{0,q}", [=, this] {
        const auto& e1 = cache_.e1(n);
        const auto& e2 = cache_.e2(n);
        for (int q = 0; q <= e1.max_q(); ++q) {
            long long chi = 0;
            for (int p = 0; p <= e1.max_p(); ++p)
                chi += (p % 2 ? -1 : 1) * static_cast<long long>(e1.rank(p, q));
            if (chi != static_cast<long long>(e2.at(0, q).rank))
                return fail("row q=" + std::to_string(q) + ": Euler characteristic " + std::to_string(chi));
        }
        return Outcome{};
    });
}

void Registry::poincare(int n)
{
    add("poincare", "series", n, "p(z) = (1 + nz)^(n-2) for H*(OPSigma_n)", [=, this] {
        const auto& page = cache_.e2(n);
        const auto column = as_integers(page.column());
        const auto expect = binomial_series(n, n - 2);
        std::string detail = list(page.column()) + " vs (1+" + std::to_string(n) + "z)^" + std::to_string(n - 2);
        if (!page.concentrated_in_first_column() || column != expect)
            return fail(detail);
        return Outcome{true, detail};
    });
}

void Registry::ring(int n)
{
    add("ring", "basis-count", n, "rank H^d(PSigma_n) = C(n-1,d) n^d, so p(z) = (1 + nz)^(n-1)", [=, this] {
        const auto ranks = poincare_psigma(n);
        if (as_integers(ranks) != binomial_series(n, n - 1))
            return fail(list(ranks));
        if (n == 3 && ranks != std::vector<std::size_t>{1, 6, 9})
            return fail("n=3 ranks " + list(ranks));
        if (n == 4 && ranks != std::vector<std::size_t>{1, 12, 48, 64})
            return fail("n=4 ranks " + list(ranks));
        for (int d = 0; d <= std::min(n, 4); ++d) {
            RelationOracle oracle(n, d);
            const std::size_t expect = d <= n - 1 ? ranks[static_cast<std::size_t>(d)] : 0;
            if (!oracle.forests_form_basis() || oracle.forest_count() != expect)
                return fail("degree " + std::to_string(d) + ": " + oracle.failure());
        }
        return Outcome{true, list(ranks)};
    });
    add("ring", "oracle-agreement", n, "rewriting agrees with integer row reduction of the relation span", [=, this] {
        auto gen = rng("ring/oracle", n);
        std::size_t checked = 0;
        std::size_t max_rewrites = 0;
        for (int d = 0; d <= n; ++d) {
            RelationOracle oracle(n, d);
            const auto& monos = oracle.monomials();
            const bool exhaustive = n <= 4 || monos.size() <= 2000;
            const std::size_t trials = exhaustive ? monos.size() : opt_.samples;
            std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
            for (std::size_t k = 0; k < trials; ++k) {
                RingElement x;
                x.add(monos[exhaustive ? k : pick(gen)], 1);
                NormalFormStats stats;
                const auto a = normal_form(x, n, kDefaultRewriteBudget, &stats);
                max_rewrites = std::max(max_rewrites, stats.rewrites);
                if (stats.budget_exhausted)
                    return fail("rewrite budget exhausted on " + x.to_string());
                if (a != oracle.reduce(x))
                    return fail(x.to_string() + " rewrites to " + a.to_string());
                ++checked;
            }
        }
        return Outcome{true, std::to_string(checked) + " monomials, at most " + std::to_string(max_rewrites) + " rewrites each"};
    });
    if (n <= 4)
        add("ring", "torsion", n, "H*(PSigma_n) is free abelian in every degree", [=] {
            for (int d = 2; d <= n; ++d) {
                RelationOracle oracle(n, d);
                const auto snf = smith_normal_form(oracle.relation_matrix());
                if (!snf.torsion().empty())
                    return fail("torsion in degree " + std::to_string(d));
                if (snf.rank() != oracle.monomial_count() - oracle.forest_count())
                    return fail("relation rank " + std::to_string(snf.rank()) + " in degree " + std::to_string(d));
            }
            return Outcome{};
        });
    add("ring", "relations", n, "a*a = 0, a*(ij)a*(ji) = 0 and a*(kj)a*(ji) = (a*(kj) - a*(ij))a*(ki) hold", [=] {
        for (const auto& g : ring_generators(n))
            if (!multiply(RingElement::generator(g.i, g.j), RingElement::generator(g.i, g.j), n).is_zero())
                return fail("a^2 != 0");
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j)
                    continue;
                if (!multiply(RingElement::generator(i, j), RingElement::generator(j, i), n).is_zero())
                    return fail("a(ij)a(ji) != 0");
                for (int k = 1; k <= n; ++k) {
                    if (k == i || k == j)
                        continue;
                    const auto lhs = multiply(RingElement::generator(k, j), RingElement::generator(j, i), n);
                    const auto rhs = multiply(RingElement::generator(k, j) - RingElement::generator(i, j), RingElement::generator(k, i), n);
                    if (lhs != rhs)
                        return fail("three-term relation fails at k=" + std::to_string(k) + " j=" + std::to_string(j) + " i=" + std::to_string(i));
                }
            }
        return Outcome{};
    });
    add("ring", "product-laws", n, "graded commutativity, associativity and idempotent normal forms", [=, this] {
        auto gen = rng("ring/laws", n);
        const auto gens = ring_generators(n);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        std::uniform_int_distribution<int> coef(-3, 3);
        auto random_element = [&](int degree) {
            RingElement x;
            for (int t = 0; t < 3; ++t) {
                std::vector<RingGenerator> f;
                for (int k = 0; k < degree; ++k)
                    f.push_back(gens[pick(gen)]);
                x = x + RingElement::monomial(f, coef(gen));
            }
            return normal_form(x, n);
        };
        for (std::size_t s = 0; s < opt_.samples; ++s) {
            const int da = static_cast<int>(s % 2) + 1;
            const int db = static_cast<int>(s / 2 % 2) + 1;
            const auto a = random_element(da);
            const auto b = random_element(db);
            const auto c = random_element(1);
            const auto ab = multiply(a, b, n);
            if (normal_form(ab, n) != ab)
                return fail("normal form not idempotent");
            if (ab != multiply(b, a, n) * Integer(da * db % 2 ? -1 : 1))
                return fail("graded commutativity fails");
            if (multiply(ab, c, n) != multiply(a, multiply(b, c, n), n))
                return fail("associativity fails");
        }
        return Outcome{true, std::to_string(opt_.samples) + " samples"};
    });
}

void Registry::identities(int n)
{
    add("identities", "leray-hirsch", n, "C(n-1,i) n^i = n C(n-2,i-1) n^(i-1) + C(n-2,i) n^i, right side from the computed E2 column",
        [=, this] {
            const auto& page = cache_.e2(n);
            for (const auto& row : lh_rank_check(n, page.column()))
                if (!row.holds())
                    return fail("degree " + std::to_string(row.degree) + ": " + row.lhs.str() + " vs " + row.rhs.str());
            return Outcome{};
        });
    add("identities", "euler", n, "chi(PSigma_n) = (1-n)^(n-1) and the alternating E2 column sum is (1-n)^(n-2)", [=, this] {
        if (euler_psigma(n) != power(1 - n, n - 1))
            return fail("chi(PSigma_n) = " + euler_psigma(n).str());
        Integer alt = 0;
        const auto column = cache_.e2(n).column();
        for (std::size_t k = 0; k < column.size(); ++k)
            alt += (k % 2 ? -1 : 1) * static_cast<long long>(column[k]);
        if (alt != power(1 - n, n - 2))
            return fail("alternating E2 sum " + alt.str());
        return Outcome{true, "chi = " + euler_psigma(n).str() + ", " + alt.str()};
    });
    add("identities", "opsigma-generators", n, "H*(OPSigma_n) is generated by a*(ij) with i != j, i != 1, (i,j) != (2,1)", [=, this] {
        const auto gens = opsigma_generator_set(n);
        const auto column = cache_.e2(n).column();
        const std::size_t h1 = column.size() > 1 ? column[1] : 0;
        if (gens.size() != h1 || static_cast<int>(gens.size()) != n * n - 2 * n)
            return fail(std::to_string(gens.size()) + " generators, rank H^1 = " + std::to_string(h1));
        return Outcome{true, std::to_string(gens.size()) + " generators"};
    });
}

void Registry::mccool(int n)
{
    add("mccool", "relations", n, "[a_ij,a_kl], [a_ij,a_kj] and [a_ij, a_ik a_jk] are trivial in PSigma_n", [=] {
        const auto r = verify_mccool(n);
        if (!r.ok())
            return fail(std::to_string(r.failures) + " failures, first " + r.first_failure);
        if (r.total() != reference::mccool_instance_count(n))
            return fail("checked " + std::to_string(r.total()) + " instances, expected " + std::to_string(reference::mccool_instance_count(n)));
        return Outcome{true, std::to_string(r.total()) + " instances"};
    });
    add("mccool", "inner", n, "a_{[n]-j, j} is conjugation by x_j; a_{I,j} does not depend on factor order", [=] {
        for (int j = 1; j <= n; ++j) {
            const auto full = VertexSet::range(n) - VertexSet::single(j);
            if (!equal(alpha_I_j(n, full, j), SymmetricAut::conjugation(n, FreeWord::generator(j))))
                return fail("j=" + std::to_string(j));
            std::vector<int> idx = full.to_vector();
            idx.resize(std::min<std::size_t>(idx.size(), 4));
            const auto ref = alpha_I_j(n, VertexSet(idx), j);
            do {
                std::vector<SymmetricAut> f;
                for (int i : idx)
                    f.push_back(SymmetricAut::alpha(n, i, j));
                if (!equal(compose(f), ref))
                    return fail("order dependence for j=" + std::to_string(j));
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
        for (const auto& g : opsigma_generator_set(n))
            if (!SymmetricAut::alpha(n, g.first, g.second).is_basis_conjugating())
                return fail("alpha image is not a conjugate");
        return Outcome{};
    });
}

} // namespace

const std::vector<std::string>& verify_families()
{
    static const std::vector<std::string> f{
        "census", "basis", "cone", "essential", "peripheral", "e1", "cochain", "e2", "poincare", "ring", "identities", "mccool"};
    return f;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options)
{
    for (const auto& f : options.only)
        if (std::find(verify_families().begin(), verify_families().end(), f) == verify_families().end())
            throw std::invalid_argument("unknown check family '" + f + "'");
    auto selected = [&](const std::string& f) {
        return options.only.empty() || std::find(options.only.begin(), options.only.end(), f) != options.only.end();
    };
    Cache cache;
    Registry reg(options, cache);
    using Adder = void (Registry::*)(int);
    const std::vector<std::pair<std::string, Adder>> adders{
        {"census", &Registry::census},
        {"basis", &Registry::basis},
        {"cone", &Registry::cone},
        {"essential", &Registry::essential},
        {"peripheral", &Registry::peripheral},
        {"e1", &Registry::e1},
        {"cochain", &Registry::cochain},
        {"e2", &Registry::e2},
        {"poincare", &Registry::poincare},
        {"ring", &Registry::ring},
        {"identities", &Registry::identities},
        {"mccool", &Registry::mccool},
    };
    for (int n : options.ns)
        for (const auto& [family, adder] : adders)
            if (selected(family))
                (reg.*adder)(n);
    if (selected("mccool") && std::none_of(options.ns.begin(), options.ns.end(), [](int n) { return n == 6; }) && !options.ns.empty())
        reg.add("mccool", "inner-n6", 6, "a_45 a_65 a_{123,5} is an inner automorphism of F_6", [] {
            const auto product = compose({SymmetricAut::alpha(6, 4, 5), SymmetricAut::alpha(6, 6, 5), alpha_I_j(6, VertexSet{1, 2, 3}, 5)});
            if (!equal(product, SymmetricAut::conjugation(6, FreeWord::generator(5))))
                return fail("product is not conjugation by x5");
            return Outcome{};
        });

    std::vector<CheckResult> results(reg.tasks.size());
    parallel_for(reg.tasks.size(), options.threads, [&](std::size_t k) {
        const auto& task = reg.tasks[k];
        auto& r = results[k];
        r.family = task.family;
        r.name = task.name;
        r.n = task.n;
        r.claim = task.claim;
        const auto start = std::chrono::steady_clock::now();
        try {
            const auto out = task.run();
            r.passed = out.ok;
            r.detail = out.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    });
    return results;
}

Json verification_report(const std::vector<CheckResult>& results, bool with_timing)
{
    Json checks = Json::array();
    bool all = true;
    for (const auto& r : results) {
        Json c = {{"family", r.family}, {"name", r.name}, {"n", r.n}, {"passed", r.passed}, {"claim", r.claim}, {"detail", r.detail}};
        if (with_timing)
            c["seconds"] = r.seconds;
        checks.push_back(std::move(c));
        all = all && r.passed;
    }
    return {{"passed", all}, {"checks", checks}};
}

} // namespace psigma
