// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact; each
// criterion also has a wall-clock bound, listed next to the measured time.

#include "psigma/free_group.hpp"
#include "psigma/order_complex.hpp"
#include "psigma/planted_forest.hpp"
#include "psigma/reference.hpp"
#include "psigma/ring.hpp"
#include "psigma/smith.hpp"
#include "psigma/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace psigma;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Timed {
    std::string label;
    double bound;
    double took = 0;
};

struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    std::string note;
    std::vector<Timed> timings;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }

    // runs fn, records its time against `bound` seconds
    template <class Fn> void timed(const std::string& label, double bound, Fn&& fn)
    {
        const auto start = Clock::now();
        fn();
        timings.push_back({label, bound, seconds_since(start)});
        if (timings.back().took > bound)
            require(false, label + " exceeded " + std::to_string(bound) + "s");
    }

    void print() const
    {
        std::ostringstream s;
        s << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "  [";
        for (std::size_t k = 0; k < timings.size(); ++k) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%s%s %.2fs <= %.0fs", k ? ", " : "", timings[k].label.c_str(), timings[k].took, timings[k].bound);
            s << buf;
        }
        s << "]";
        if (!note.empty())
            s << "  -- " << note;
        std::printf("%s\n", s.str().c_str());
        std::fflush(stdout);
    }
};

Integer ipow(int b, int e)
{
    Integer r = 1;
    for (int k = 0; k < e; ++k)
        r *= b;
    return r;
}

Integer as_int(std::size_t v) { return Integer(static_cast<unsigned long long>(v)); }

std::string list(const std::vector<std::size_t>& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

Criterion census()
{
    Criterion c{1, "hypertree census: 29 with ranks (1,12,16), 311 = brute force, 4447"};
    c.timed("n=4", 1, [&] {
        std::map<int, std::size_t> hist;
        const auto all = enumerate_hypertrees(4);
        for (const auto& t : all)
            ++hist[t.rank()];
        c.require(all.size() == 29 && hist == std::map<int, std::size_t>{{0, 1}, {1, 12}, {2, 16}}, "n=4 census wrong");
    });
    c.timed("n=5", 30, [&] {
        auto all = enumerate_hypertrees(5);
        std::sort(all.begin(), all.end());
        c.require(all.size() == 311, "n=5 count " + std::to_string(all.size()));
        c.require(all == reference::brute_force_hypertrees(5), "n=5 differs from the brute-force oracle");
    });
    c.timed("n=6", 600, [&] { c.require(enumerate_hypertrees(6).size() == 4447, "n=6 count wrong"); });
    return c;
}

Criterion e1_page()
{
    Criterion c{2, "E1 page at n=4: p=0 column 29/44/16, p=1 64/36, p=2 36, zero elsewhere"};
    c.timed("n=4", 5, [&] {
        const E1Page page(4);
        const std::map<std::pair<int, int>, std::size_t> expect{
            {{0, 0}, 29}, {{0, 1}, 44}, {{0, 2}, 16}, {{1, 0}, 64}, {{1, 1}, 36}, {{2, 0}, 36}};
        for (int p = 0; p <= page.max_p() + 2; ++p)
            for (int q = 0; q <= page.max_q() + 2; ++q) {
                const auto it = expect.find({p, q});
                c.require(page.rank(p, q) == (it == expect.end() ? 0 : it->second),
                    "rank at (" + std::to_string(p) + "," + std::to_string(q) + ") is " + std::to_string(page.rank(p, q)));
            }
    });
    return c;
}

Criterion e2_collapse()
{
    Criterion c{3, "E2 zero off p=0, torsion-free, column = (1+nz)^(n-2) for n=3,4,5"};
    for (int n = 3; n <= 5; ++n)
        c.timed("n=" + std::to_string(n), 600, [&] {
            const auto page = compute_e2(E1Page(n));
            c.require(page.concentrated_in_first_column(), "not concentrated at n=" + std::to_string(n));
            const auto column = page.column();
            std::vector<Integer> got;
            for (auto r : column)
                got.push_back(as_int(r));
            c.require(got == binomial_series(n, n - 2), "column " + list(column) + " at n=" + std::to_string(n));
            if (c.ok)
                c.note = c.note.empty() ? list(column) : c.note + " " + list(column);
        });
    return c;
}

Criterion cochain()
{
    Criterion c{4, "d1 o d1 = 0 for every (p,q), n <= 5"};
    c.timed("n=2..5", 600, [&] {
        std::size_t count = 0;
        for (int n = 2; n <= 5; ++n) {
            const E1Page page(n);
            for (int q = 0; q <= page.max_q(); ++q)
                for (int p = 0; p + 1 <= page.max_p(); ++p) {
                    c.require((d1_matrix(page, p + 1, q) * d1_matrix(page, p, q)).is_zero(),
                        "nonzero at n=" + std::to_string(n) + " (" + std::to_string(p) + "," + std::to_string(q) + ")");
                    ++count;
                }
        }
        if (c.ok)
            c.note = std::to_string(count) + " composites";
    });
    return c;
}

Criterion essential()
{
    Criterion c{5, "essential counts C(n-2,q) n^q by definition and by gathering; Cayley n^(n-2)"};
    c.timed("n=2..5", 60, [&] {
        for (int n = 2; n <= 5; ++n) {
            for (int q = 0; q <= n - 2; ++q) {
                const Integer expect = binomial(n - 2, q) * ipow(n, q);
                c.require(as_int(count_essential_by_definition(n, q)) == expect, "definition count at n=" + std::to_string(n));
                c.require(as_int(count_essential_by_gathering(n, q)) == expect, "gathering count at n=" + std::to_string(n));
            }
            std::size_t top = 0;
            for (const auto& t : enumerate_hypertrees(n))
                top += t.rank() == n - 2;
            c.require(as_int(top) == ipow(n, n - 2), "Cayley count at n=" + std::to_string(n));
        }
    });
    return c;
}

Criterion peripheral()
{
    Criterion c{6, "peripheral complexes: trivial reduced homology if inessential, empty if essential (|A| <= 2)"};
    c.timed("n=2..5", 600, [&] {
        std::size_t inessential = 0;
        for (int n = 2; n <= 5; ++n) {
            const HypertreePoset P(n);
            for (const auto& A : compatible_collections(P, 2)) {
                const auto split = classify_support(P, A);
                if (is_essential(n, A)) {
                    c.require(split.peripheral.empty(), "essential collection with peripheral hypertrees");
                    continue;
                }
                ++inessential;
                c.require(!split.peripheral.empty(), "inessential collection with empty peripheral set");
                boost::dynamic_bitset<> mask(P.size());
                for (const auto& t : split.peripheral)
                    mask.set(*P.index_of(t));
                c.require(reduced_homology(order_complex(P, &mask)).trivial(), "nontrivial peripheral homology");
            }
        }
        if (c.ok)
            c.note = std::to_string(inessential) + " inessential collections";
    });
    return c;
}

Criterion basis_laws()
{
    Criterion c{7, "|B(tau)| = rank(tau); tau(B(tau)) = tau; B(tau(A)) = A for |A| <= 3, n <= 5"};
    c.timed("n=2..5", 600, [&] {
        for (int n = 2; n <= 5; ++n) {
            const HypertreePoset P(n);
            for (const auto& t : P.elements()) {
                const auto B = one_two_basis(t);
                c.require(static_cast<int>(B.size()) == t.rank(), "basis size at " + t.to_string());
                c.require(cone_point(n, B) == t, "tau(B(tau)) at " + t.to_string());
            }
            for (const auto& A : compatible_collections(P, 3))
                c.require(one_two_basis(cone_point(n, A)) == A, "B(tau(A)) != A");
        }
    });
    return c;
}

Criterion ring()
{
    Criterion c{8, "ring ranks C(n-1,d) n^d, (1,6,9), (1,12,48,64); rewriting = oracle (n <= 4); no torsion (n <= 4)"};
    c.timed("n=2..5", 300, [&] {
        for (int n = 2; n <= 5; ++n) {
            const auto ranks = poincare_psigma(n);
            std::vector<Integer> got;
            for (auto r : ranks)
                got.push_back(as_int(r));
            c.require(got == binomial_series(n, n - 1), "forest ranks " + list(ranks));
            for (int d = 0; d <= n; ++d) {
                RelationOracle oracle(n, d);
                c.require(oracle.forests_form_basis(), "forests are not a basis at n=" + std::to_string(n) + " d=" + std::to_string(d));
                c.require(oracle.forest_count() == (d < n ? ranks[static_cast<std::size_t>(d)] : 0), "oracle rank");
                if (n > 4)
                    continue;
                for (const auto& m : oracle.monomials()) {
                    RingElement x;
                    x.add(m, 1);
                    c.require(normal_form(x, n) == oracle.reduce(x), "rewriting disagrees on " + x.to_string());
                }
                c.require(smith_normal_form(oracle.relation_matrix()).torsion().empty(), "torsion at n=" + std::to_string(n));
            }
        }
        c.require(poincare_psigma(3) == std::vector<std::size_t>{1, 6, 9}, "n=3 ranks");
        c.require(poincare_psigma(4) == std::vector<std::size_t>{1, 12, 48, 64}, "n=4 ranks");
    });
    return c;
}

Criterion identities()
{
    Criterion c{9, "Leray-Hirsch identity from forest ranks and computed E2; chi = (1-n)^(n-1) and (1-n)^(n-2)"};
    c.timed("n=2..5", 600, [&] {
        for (int n = 2; n <= 5; ++n) {
            const auto column = compute_e2(E1Page(n)).column();
            for (const auto& row : lh_rank_check(n, column))
                c.require(row.holds(), "Leray-Hirsch fails at n=" + std::to_string(n) + " i=" + std::to_string(row.degree));
            c.require(euler_psigma(n) == ipow(1 - n, n - 1), "chi(PSigma) at n=" + std::to_string(n));
            Integer alt = 0;
            for (std::size_t k = 0; k < column.size(); ++k)
                alt += (k % 2 ? -1 : 1) * as_int(column[k]);
            c.require(alt == ipow(1 - n, n - 2), "alternating E2 sum at n=" + std::to_string(n));
        }
    });
    return c;
}

Criterion mccool()
{
    Criterion c{10, "McCool relations as automorphisms, a_{[n]-j,j} = conj(x_j) (n <= 5); a_45 a_65 a_{123,5} inner at n=6"};
    c.timed("all", 60, [&] {
        std::size_t instances = 0;
        for (int n = 2; n <= 5; ++n) {
            const auto r = verify_mccool(n);
            c.require(r.ok(), "McCool failure: " + r.first_failure);
            c.require(r.total() == reference::mccool_instance_count(n), "instance count at n=" + std::to_string(n));
            instances += r.total();
            for (int j = 1; j <= n; ++j)
                c.require(equal(alpha_I_j(n, VertexSet::range(n) - VertexSet::single(j), j), SymmetricAut::conjugation(n, FreeWord::generator(j))),
                    "a_{[n]-j,j} is not conjugation at n=" + std::to_string(n));
        }
        const auto product = compose({SymmetricAut::alpha(6, 4, 5), SymmetricAut::alpha(6, 6, 5), alpha_I_j(6, VertexSet{1, 2, 3}, 5)});
        c.require(equal(product, SymmetricAut::conjugation(6, FreeWord::generator(5))), "n=6 product is not inner");
        if (c.ok)
            c.note = std::to_string(instances) + " relation instances";
    });
    return c;
}

} // namespace

int main()
{
    const std::vector<std::function<Criterion()>> all{census, e1_page, e2_collapse, cochain, essential, peripheral, basis_laws, ring, identities, mccool};
    int failed = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
        Criterion c{static_cast<int>(k + 1), "aborted"};
        try {
            c = all[k]();
        } catch (const std::exception& e) {
            c.ok = false;
            c.note = std::string("exception: ") + e.what();
        }
        c.print();
        failed += !c.ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
