#include "psigma/io.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace psigma {

Json to_json(const Hypertree& t)
{
    Json edges = Json::array();
    for (auto e : t.edges())
        edges.push_back(e.to_vector());
    return {{"n", t.n()}, {"edges", edges}};
}

Hypertree hypertree_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() || !j["edges"].is_array())
        throw std::invalid_argument("hypertree JSON needs integer \"n\" and array \"edges\"");
    std::vector<std::vector<int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array())
            throw std::invalid_argument("each edge must be an array of labels");
        edges.push_back(e.get<std::vector<int>>());
    }
    return validate_hypertree(j["n"].get<int>(), edges);
}

Json to_json(const Generator& g) { return {{"I", g.I.to_vector()}, {"j", g.j}}; }

Generator generator_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("I") || !j.contains("j") || !j["I"].is_array() || !j["j"].is_number_integer())
        throw std::invalid_argument("generator JSON needs array \"I\" and integer \"j\"");
    Generator g;
    for (int v : j["I"].get<std::vector<int>>()) {
        if (v < 1 || v > kMaxLabel)
            throw std::invalid_argument("generator label out of range");
        g.I.insert(v);
    }
    g.j = j["j"].get<int>();
    return g;
}

Json to_json(const IntegerMatrix& m)
{
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r))
            entries.push_back(Json::array({r, e.col, e.value.str()}));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntegerMatrix matrix_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON needs \"rows\", \"cols\" and \"entries\"");
    std::vector<IntegerMatrix::Triplet> t;
    for (const auto& e : j["entries"]) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("matrix entries are [row, col, value] triplets");
        Integer v = e[2].is_string() ? Integer(e[2].get<std::string>()) : Integer(e[2].get<long long>());
        t.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), v});
    }
    return IntegerMatrix::from_triplets(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(), std::move(t));
}

Json to_json(const RingElement& x)
{
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json mono = Json::array();
        for (const auto& g : m.generators())
            mono.push_back(Json::array({g.i, g.j}));
        terms.push_back({{"coefficient", c.str()}, {"monomial", mono}});
    }
    return {{"text", x.to_string()}, {"terms", terms}};
}

Json e1_to_json(const E1Page& page)
{
    Json entries = Json::array();
    for (int q = 0; q <= page.max_q(); ++q)
        for (int p = 0; p <= page.max_p(); ++p)
            if (auto r = page.rank(p, q))
                entries.push_back({{"p", p}, {"q", q}, {"rank", r}, {"torsion", Json::array()}});
    return {{"n", page.n()}, {"entries", entries}};
}

Json to_json(const E2Page& page)
{
    Json entries = Json::array();
    for (const auto& e : page.entries) {
        if (e.rank == 0 && e.torsion.empty())
            continue;
        Json torsion = Json::array();
        for (const auto& d : e.torsion)
            torsion.push_back(d.str());
        entries.push_back({{"p", e.p}, {"q", e.q}, {"rank", e.rank}, {"torsion", torsion}});
    }
    return {{"n", page.n}, {"entries", entries}};
}

namespace {

std::string render_grid(int max_p, int max_q, const std::function<std::string(int, int)>& cell)
{
    std::vector<std::vector<std::string>> rows;
    std::size_t width = 1;
    for (int q = max_q; q >= 0; --q) {
        std::vector<std::string> row;
        for (int p = 0; p <= max_p; ++p) {
            row.push_back(cell(p, q));
            width = std::max(width, row.back().size());
        }
        rows.push_back(std::move(row));
    }
    auto pad = [&](const std::string& s) { return std::string(width - s.size() + 2, ' ') + s; };
    std::string out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        out += "q=" + std::to_string(max_q - static_cast<int>(k)) + " |";
        for (const auto& c : rows[k])
            out += pad(c);
        out += '\n';
    }
    out += "     " + std::string((width + 2) * static_cast<std::size_t>(max_p + 1), '-') + '\n';
    out += "     ";
    for (int p = 0; p <= max_p; ++p)
        out += pad("p=" + std::to_string(p));
    out += '\n';
    return out;
}

} // namespace

std::string e1_grid(const E1Page& page)
{
    return render_grid(page.max_p(), page.max_q(), [&](int p, int q) { return std::to_string(page.rank(p, q)); });
}

std::string e2_grid(const E2Page& page)
{
    int max_p = 0;
    int max_q = 0;
    for (const auto& e : page.entries) {
        max_p = std::max(max_p, e.p);
        max_q = std::max(max_q, e.q);
    }
    return render_grid(max_p, max_q, [&](int p, int q) {
        const auto& e = page.at(p, q);
        std::string s = std::to_string(e.rank);
        for (const auto& d : e.torsion)
            s += "+Z/" + d.str();
        return s;
    });
}

} // namespace psigma
