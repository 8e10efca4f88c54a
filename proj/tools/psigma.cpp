// psigma: command-line front end for the hypertree poset, the spectral sequence pages,
// the forest ring and the verification suite.
//
// Exit codes: 0 success, 1 failed checks or I/O trouble, 2 guard violation,
// 3 collapse violation, 4 ring expression error; CLI11 reports usage errors itself.

#include "psigma/free_group.hpp"
#include "psigma/io.hpp"
#include "psigma/planted_forest.hpp"
#include "psigma/ring.hpp"
#include "psigma/spectral.hpp"
#include "psigma/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace psigma;

namespace {

constexpr int kDefaultGuard = 5;
constexpr int kHardCap = 6;

enum Exit { Ok = 0, Failed = 1, Guard = 2, Collapse = 3, BadExpression = 4 };

struct ExitError {
    int code;
    std::string message;
};

struct RunConfig {
    std::string n_text;
    int max_n = 0;
    bool allow_large = false;
    unsigned threads = 0;
    std::string format = "text";
    std::string output;
    bool verbose = false;
};

int env_int(const char* name, int fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v)
        return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw ExitError{Failed, std::string("cannot parse ") + name + "='" + v + "'"};
    }
}

int guard_of(const RunConfig& c)
{
    int g = c.allow_large ? kHardCap : kDefaultGuard;
    g = env_int("PSIGMA_MAX_N", g);
    if (c.max_n > 0)
        g = c.max_n;
    return std::min(g, kHardCap);
}

unsigned threads_of(const RunConfig& c)
{
    if (c.threads > 0)
        return c.threads;
    const int env = env_int("PSIGMA_THREADS", 0);
    if (env > 0)
        return static_cast<unsigned>(env);
    return std::max(1u, std::thread::hardware_concurrency());
}

// "4", "2..5" or "2,4,5"
std::vector<int> parse_ns(const std::string& text)
{
    std::vector<int> out;
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw ExitError{Failed, "bad value '" + s + "' for --n"};
        return v;
    };
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (auto dots = piece.find(".."); dots != std::string::npos) {
            const int lo = number(piece.substr(0, dots));
            const int hi = number(piece.substr(dots + 2));
            for (int n = lo; n <= hi; ++n)
                out.push_back(n);
        } else {
            out.push_back(number(piece));
        }
    }
    if (out.empty())
        throw ExitError{Failed, "--n is empty"};
    return out;
}

std::vector<int> checked_ns(const RunConfig& c)
{
    const int guard = guard_of(c);
    auto ns = parse_ns(c.n_text);
    for (int n : ns) {
        if (n < 2)
            throw ExitError{Failed, "n must be at least 2 (got " + std::to_string(n) + ")"};
        if (n > guard)
            throw ExitError{Guard, "n = " + std::to_string(n) + " exceeds the size guard " + std::to_string(guard)
                    + (guard < kHardCap ? " (use --allow-large for n = 6)" : "")};
    }
    return ns;
}

int single_n(const RunConfig& c)
{
    const auto ns = checked_ns(c);
    if (ns.size() != 1)
        throw ExitError{Failed, "this subcommand takes a single n"};
    return ns.front();
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (c.format == f)
            return;
    std::string list;
    for (const char* f : allowed)
        list += std::string(list.empty() ? "" : ", ") + f;
    throw ExitError{Failed, "format '" + c.format + "' is not available here (choose from " + list + ")"};
}

void emit(const RunConfig& c, const std::string& stem, const std::string& body)
{
    if (c.output.empty() || c.output == "-") {
        std::cout << body;
        std::cout.flush();
        return;
    }
    std::filesystem::path path(c.output);
    if (std::filesystem::is_directory(path))
        path /= stem + "." + (c.format == "text" ? std::string("txt") : c.format);
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << body))
        throw ExitError{Failed, "cannot write " + path.string()};
    if (c.verbose)
        std::cerr << "wrote " << path.string() << '\n';
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string edge_list(const Hypertree& t)
{
    std::string s;
    for (auto e : t.edges())
        s += e.to_string();
    return s;
}

// ---------------------------------------------------------------------------

void cmd_enumerate(const RunConfig& c, bool list)
{
    require_format(c, {"json", "text", "csv"});
    const int n = single_n(c);
    const auto all = enumerate_hypertrees(n);
    std::map<int, std::size_t> hist;
    for (const auto& t : all)
        ++hist[t.rank()];
    std::string body;
    if (c.format == "json") {
        Json h = Json::object();
        for (auto [r, k] : hist)
            h[std::to_string(r)] = k;
        Json j = {{"n", n}, {"total", all.size()}, {"histogram", h}};
        if (list) {
            Json items = Json::array();
            for (const auto& t : all) {
                auto x = to_json(t);
                x["rank"] = t.rank();
                items.push_back(std::move(x));
            }
            j["hypertrees"] = std::move(items);
        }
        body = dump(j);
    } else if (c.format == "csv") {
        body = "index,rank,edges\n";
        for (std::size_t k = 0; k < all.size(); ++k)
            body += std::to_string(k) + "," + std::to_string(all[k].rank()) + ",\"" + edge_list(all[k]) + "\"\n";
    } else {
        if (list)
            for (const auto& t : all)
                body += std::to_string(t.rank()) + "  " + edge_list(t) + "\n";
        body += "n=" + std::to_string(n) + " total " + std::to_string(all.size()) + "\n";
        for (auto [r, k] : hist)
            body += "rank " + std::to_string(r) + ": " + std::to_string(k) + "\n";
    }
    emit(c, "enumerate-n" + std::to_string(n), body);
}

void cmd_poset(RunConfig c, bool drop_minimum)
{
    if (c.format == "text")
        c.format = "dot";
    require_format(c, {"dot", "json"});
    const int n = single_n(c);
    const HypertreePoset P(n);
    const std::size_t first = drop_minimum ? 1 : 0;
    const auto pairs = P.cover_pairs();
    std::string body;
    if (c.format == "json") {
        Json nodes = Json::array();
        for (std::size_t k = first; k < P.size(); ++k)
            nodes.push_back({{"id", k}, {"edges", to_json(P[k])["edges"]}, {"rank", P[k].rank()}, {"type", combinatorial_type(P[k])}});
        Json edges = Json::array();
        for (auto [a, b] : pairs)
            if (a >= first)
                edges.push_back(Json::array({a, b}));
        body = dump({{"n", n}, {"nodes", nodes}, {"edges", edges}});
    } else {
        static const char* palette[] = {"#e6f2ff", "#ffe6cc", "#e6ffe6", "#ffe6f2", "#f2e6ff", "#ffffcc", "#e0e0e0", "#ccf2f2",
            "#f2d9cc", "#d9d9f2"};
        std::map<std::string, std::size_t> type_colour;
        for (std::size_t k = first; k < P.size(); ++k)
            type_colour.emplace(combinatorial_type(P[k]), 0);
        std::size_t next = 0;
        for (auto& [type, colour] : type_colour)
            colour = next++ % std::size(palette);
        std::ostringstream s;
        s << "graph HT" << n << " {\n  node [shape=box, style=filled, fontname=\"monospace\"];\n";
        for (std::size_t k = first; k < P.size(); ++k)
            s << "  t" << k << " [label=\"" << edge_list(P[k]) << "\", fillcolor=\"" << palette[type_colour[combinatorial_type(P[k])]]
              << "\"];\n";
        for (int r = 0; r <= n - 2; ++r) {
            s << "  { rank=same;";
            for (std::size_t k = first; k < P.size(); ++k)
                if (P[k].rank() == r)
                    s << " t" << k << ";";
            s << " }\n";
        }
        for (auto [a, b] : pairs)
            if (a >= first)
                s << "  t" << a << " -- t" << b << ";\n";
        s << "}\n";
        body = s.str();
    }
    emit(c, "poset-n" + std::to_string(n), body);
}

void cmd_e1(const RunConfig& c)
{
    require_format(c, {"json", "text", "csv"});
    const int n = single_n(c);
    const E1Page page(n);
    std::string body;
    if (c.format == "json") {
        body = dump(e1_to_json(page));
    } else if (c.format == "csv") {
        body = "p,q,rank\n";
        for (int q = 0; q <= page.max_q(); ++q)
            for (int p = 0; p <= page.max_p(); ++p)
                body += std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(page.rank(p, q)) + "\n";
    } else {
        body = e1_grid(page);
    }
    emit(c, "e1-n" + std::to_string(n), body);
}

void cmd_e2(const RunConfig& c)
{
    require_format(c, {"json", "text", "csv"});
    const int n = single_n(c);
    const E1Page e1(n);
    const auto page = compute_e2(e1, threads_of(c));
    const auto column = page.column();
    std::string body;
    if (c.format == "json") {
        auto j = to_json(page);
        j["column"] = column;
        j["collapsed"] = page.concentrated_in_first_column();
        body = dump(j);
    } else if (c.format == "csv") {
        body = "p,q,rank,torsion\n";
        for (const auto& e : page.entries) {
            std::string tors;
            for (const auto& d : e.torsion)
                tors += (tors.empty() ? "" : ";") + d.str();
            body += std::to_string(e.p) + "," + std::to_string(e.q) + "," + std::to_string(e.rank) + "," + tors + "\n";
        }
    } else {
        body = e2_grid(page) + "column:";
        for (auto r : column)
            body += " " + std::to_string(r);
        body += "\n";
    }
    emit(c, "e2-n" + std::to_string(n), body);
    if (!page.concentrated_in_first_column())
        throw ExitError{Collapse, "E2 page is not concentrated in the first column and torsion-free"};
}

void cmd_ring(const RunConfig& c, const std::string& expression)
{
    require_format(c, {"json", "text"});
    const int n = single_n(c);
    RingElement x;
    try {
        x = normal_form(parse_ring_element(expression, n), n);
    } catch (const RingError& e) {
        if (e.code() == RingError::Code::ParseError || e.code() == RingError::Code::BadIndex)
            throw ExitError{BadExpression, e.what()};
        throw;
    }
    emit(c, "ring-n" + std::to_string(n), c.format == "json" ? dump(to_json(x)) : x.to_string() + "\n");
}

void cmd_counts(const RunConfig& c)
{
    require_format(c, {"json", "text", "csv"});
    const int n = single_n(c);
    std::vector<std::size_t> by_rank(static_cast<std::size_t>(n - 1), 0);
    for (const auto& t : enumerate_hypertrees(n))
        ++by_rank[static_cast<std::size_t>(t.rank())];
    std::vector<std::size_t> essential;
    for (int q = 0; q <= n - 2; ++q)
        essential.push_back(count_essential_by_definition(n, q));
    const auto forests = poincare_psigma(n);
    std::vector<std::string> opsigma_predicted;
    for (const auto& b : binomial_series(n, n - 2))
        opsigma_predicted.push_back(b.str());

    std::string body;
    if (c.format == "json") {
        body = dump({{"n", n},
            {"hypertrees_by_rank", by_rank},
            {"essential_by_rank", essential},
            {"psigma_ranks", forests},
            {"opsigma_ranks_predicted", opsigma_predicted},
            {"euler_psigma", euler_psigma(n).str()}});
    } else {
        const std::size_t rows = std::max(by_rank.size(), forests.size());
        auto cell = [](const auto& v, std::size_t k) { return k < v.size() ? std::string(v[k]) : std::string(); };
        auto num = [](const std::vector<std::size_t>& v, std::size_t k) { return k < v.size() ? std::to_string(v[k]) : std::string(); };
        if (c.format == "csv") {
            body = "degree,hypertrees,essential,opsigma,psigma\n";
            for (std::size_t k = 0; k < rows; ++k)
                body += std::to_string(k) + "," + num(by_rank, k) + "," + num(essential, k) + "," + cell(opsigma_predicted, k) + ","
                    + num(forests, k) + "\n";
        } else {
            std::ostringstream s;
            s << "n=" << n << "\n";
            s << "degree  hypertrees  essential  H(OPSigma)  H(PSigma)\n";
            for (std::size_t k = 0; k < rows; ++k) {
                char line[128];
                std::snprintf(line, sizeof line, "%6zu  %10s  %9s  %10s  %9s\n", k, num(by_rank, k).c_str(), num(essential, k).c_str(),
                    cell(opsigma_predicted, k).c_str(), num(forests, k).c_str());
                s << line;
            }
            s << "euler characteristic of PSigma: " << euler_psigma(n) << "\n";
            body = s.str();
        }
    }
    emit(c, "counts-n" + std::to_string(n), body);
}

bool cmd_verify(const RunConfig& c, const std::vector<std::string>& only, std::uint64_t seed, std::size_t samples, bool no_timing)
{
    require_format(c, {"json", "text"});
    VerifyOptions opt;
    opt.ns = checked_ns(c);
    opt.only = only;
    opt.threads = threads_of(c);
    opt.seed = seed;
    opt.samples = samples;
    std::vector<CheckResult> results;
    try {
        results = run_verification(opt);
    } catch (const std::invalid_argument& e) {
        throw ExitError{Failed, e.what()};
    }
    const auto report = verification_report(results, !no_timing);
    std::string body;
    std::string stem = "verify";
    if (c.format == "json") {
        body = dump(report);
    } else {
        std::size_t passed = 0;
        for (const auto& r : results) {
            passed += r.passed;
            std::ostringstream s;
            s << (r.passed ? "PASS " : "FAIL ") << r.family << "/" << r.name << " n=" << r.n;
            if (!no_timing) {
                char t[32];
                std::snprintf(t, sizeof t, " (%.3fs)", r.seconds);
                s << t;
            }
            s << ": " << r.claim;
            if (!r.detail.empty())
                s << " -- " << r.detail;
            body += s.str() + "\n";
        }
        body += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
    }
    emit(c, stem, body);
    return report["passed"].get<bool>();
}

// "i,j" or "i,j,exp"
SymmetricAut parse_alpha(int n, const std::string& text)
{
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string piece;
    try {
        while (std::getline(ss, piece, ','))
            parts.push_back(std::stoi(piece));
    } catch (const std::exception&) {
        parts.clear();
    }
    if (parts.size() != 2 && parts.size() != 3)
        throw ExitError{BadExpression, "--alpha expects i,j or i,j,exp (got '" + text + "')"};
    return SymmetricAut::alpha(n, parts[0], parts[1], parts.size() == 3 ? parts[2] : 1);
}

void cmd_apply(const RunConfig& c, const std::vector<std::string>& alphas, const std::string& word)
{
    require_format(c, {"json", "text"});
    const int n = single_n(c);
    try {
        auto phi = SymmetricAut::identity(n);
        for (const auto& a : alphas)
            phi = compose(parse_alpha(n, a), phi);
        const auto w = FreeWord::parse(word);
        const auto image = phi.apply(w);
        if (c.format == "json") {
            Json images = Json::array();
            for (int i = 1; i <= n; ++i)
                images.push_back(phi.image(i).to_string());
            emit(c, "apply", dump({{"word", w.to_string()}, {"image", image.to_string()}, {"generator_images", images}}));
        } else {
            emit(c, "apply", image.to_string() + "\n");
        }
    } catch (const FreeGroupError& e) {
        throw ExitError{BadExpression, e.what()};
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology of the pure symmetric automorphism groups: hypertrees, spectral sequence pages and the forest ring"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--max-n", cfg.max_n, "Size guard (default 5, env PSIGMA_MAX_N; never above 6)");
    app.add_flag("--allow-large", cfg.allow_large, "Raise the size guard to 6");
    app.add_option("-j,--threads", cfg.threads, "Worker threads (default: env PSIGMA_THREADS or all cores)")->check(CLI::PositiveNumber);
    app.add_option("-f,--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "csv", "dot"}));
    app.add_option("-o,--output", cfg.output, "Output file or directory (default stdout)");
    app.add_flag("-v,--verbose", cfg.verbose, "Report timing on stderr");

    auto n_option = [&](CLI::App* sub, const char* help) { sub->add_option("-n,--n", cfg.n_text, help)->required(); };

    bool no_list = false;
    auto* enumerate = app.add_subcommand("enumerate", "List the hypertrees on [n] with the rank histogram");
    n_option(enumerate, "Number of vertices");
    enumerate->add_flag("--summary", no_list, "Only the totals");

    bool drop_minimum = false;
    auto* poset = app.add_subcommand("poset", "Hasse diagram of HT_n as Graphviz DOT (or JSON)");
    n_option(poset, "Number of vertices");
    poset->add_flag("--drop-minimum", drop_minimum, "Leave out the one-edge hypertree");

    auto* e1 = app.add_subcommand("e1", "Ranks of the E1 page");
    n_option(e1, "Number of vertices");

    auto* e2 = app.add_subcommand("e2", "The E2 page (exit 3 unless it collapses onto p = 0)");
    n_option(e2, "Number of vertices");

    std::string expression;
    bool have_expression = false;
    auto* ring = app.add_subcommand("ring", "Normal form in H*(PSigma_n) over the planted-forest basis");
    n_option(ring, "Number of generators of the free group");
    ring->add_option("expression", expression, "e.g. \"a(2,1)^a(2,3) - 3*a(1,2)\"");

    auto* counts = app.add_subcommand("counts", "Hypertree, essential and basis counts by degree");
    n_option(counts, "Number of vertices");

    std::vector<std::string> only;
    std::uint64_t seed = VerifyOptions{}.seed;
    std::size_t samples = VerifyOptions{}.samples;
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify", "Run the verification suite; exit 0 iff every check passes");
    n_option(verify, "n, a range like 2..5, or a comma list");
    verify->add_option("--only", only, "Restrict to these check families")->delimiter(',');
    verify->add_option("--seed", seed, "Seed for sampled checks");
    verify->add_option("--samples", samples, "Sample size for sampled checks")->check(CLI::PositiveNumber);
    verify->add_flag("--no-timing", no_timing, "Omit timings so reports are byte-identical across runs");

    std::vector<std::string> alphas;
    std::string word;
    auto* apply = app.add_subcommand("apply", "Apply a product of alpha_ij to a word in F_n");
    n_option(apply, "Rank of the free group");
    apply->add_option("--alpha", alphas, "Factor i,j or i,j,exp; applied in the order given");
    apply->add_option("word", word, "e.g. \"x1 x2^-1\"")->required();

    try {
        app.parse(argc, argv);
        have_expression = ring->count("expression") > 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const auto start = std::chrono::steady_clock::now();
    int code = Ok;
    try {
        if (*enumerate)
            cmd_enumerate(cfg, !no_list);
        else if (*poset)
            cmd_poset(cfg, drop_minimum);
        else if (*e1)
            cmd_e1(cfg);
        else if (*e2)
            cmd_e2(cfg);
        else if (*ring) {
            if (!have_expression)
                throw ExitError{BadExpression, "missing ring expression"};
            cmd_ring(cfg, expression);
        } else if (*counts)
            cmd_counts(cfg);
        else if (*verify)
            code = cmd_verify(cfg, only, seed, samples, no_timing) ? Ok : Failed;
        else if (*apply)
            cmd_apply(cfg, alphas, word);
    } catch (const ExitError& e) {
        std::cerr << "psigma: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "psigma: " << e.what() << '\n';
        return Failed;
    }
    if (cfg.verbose)
        std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << "s\n";
    return code;
}
