#include "posetlab/io.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

#include "posetlab/enumerate.hpp"

namespace posetlab {

Json graph_to_json(const Multigraph& g)
{
    Json j;
    j["vertices"] = g.vertices();
    Json edges = Json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.id, e.u, e.v});
    j["edges"] = edges;
    return j;
}

Multigraph graph_from_json(const Json& j)
{
    try {
        std::vector<VertexId> vertices = j.at("vertices").get<std::vector<VertexId>>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw Error("each edge must be [id, u, v]");
            edges.push_back({e[0].get<EdgeId>(), e[1].get<VertexId>(), e[2].get<VertexId>()});
        }
        return Multigraph(std::move(vertices), std::move(edges));
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("malformed graph JSON: ") + ex.what());
    }
}

std::string graph_to_dot(const Multigraph& g)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (VertexId v : g.vertices())
        os << "  v" << v << ";\n";
    for (const Edge& e : g.edges())
        os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.id << "\"];\n";
    os << "}\n";
    return os.str();
}

Json poset_to_json(const FinitePoset& p)
{
    Json j;
    j["elements"] = p.labels();
    Json covers = Json::array();
    for (auto [a, b] : p.covers())
        covers.push_back({a, b});
    j["covers"] = covers;
    return j;
}

FinitePoset poset_from_json(const Json& j)
{
    try {
        auto labels = j.at("elements").get<std::vector<std::string>>();
        std::vector<std::pair<std::size_t, std::size_t>> covers;
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2)
                throw Error("each cover must be [i, j]");
            const auto a = c[0].get<std::size_t>(), b = c[1].get<std::size_t>();
            if (a >= labels.size() || b >= labels.size())
                throw Error("cover refers to an unknown element");
            covers.emplace_back(a, b);
        }
        return FinitePoset::from_covers(std::move(labels), covers);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("malformed poset JSON: ") + ex.what());
    }
}

std::string poset_to_dot(const FinitePoset& p)
{
    std::ostringstream os;
    os << "digraph P {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
    for (auto [a, b] : p.covers())
        os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

Json complex_to_json(const SimplicialComplex& k)
{
    Json j;
    j["vertices"] = k.vertex_ids();
    Json facets = Json::array();
    for (const auto& f : k.facets()) {
        Json row = Json::array();
        for (int v : f)
            row.push_back(k.vertex_ids()[v]);
        facets.push_back(row);
    }
    j["facets"] = facets;
    return j;
}

namespace {

Json bigint_json(const BigInt& x)
{
    if (x <= BigInt(std::numeric_limits<std::int64_t>::max()))
        return static_cast<std::int64_t>(x);
    return x.str();
}

}  // namespace

Json homology_to_json(const HomologyResult& h)
{
    Json out = Json::array();
    for (const DegreeHomology& d : h.degrees()) {
        Json torsion = Json::array();
        for (const BigInt& t : d.torsion)
            torsion.push_back(bigint_json(t));
        out.push_back({{"degree", d.degree}, {"betti", d.betti}, {"torsion", torsion}});
    }
    return out;
}

Json report_to_json(const std::string& graph_key, const CheckReport& r)
{
    Json j;
    j["graph"] = graph_key;
    j["check"] = r.check;
    j["status"] = to_string(r.status);
    std::vector<std::size_t> betti = r.homology.betti_numbers();
    while (betti.size() > 2 && betti.back() == 0)
        betti.pop_back();
    j["betti"] = betti;
    bool torsion = false;
    for (const DegreeHomology& d : r.homology.degrees())
        torsion = torsion || !d.torsion.empty();
    if (torsion)
        j["homology"] = homology_to_json(r.homology);
    j["pi1"] = r.pi1 ? Json(to_string(*r.pi1)) : Json(nullptr);
    j["detail"] = r.detail;
    return j;
}

Multigraph resolve_graph(const std::string& source)
{
    static const std::regex named(R"((rose|theta|cycle)(\d*)|dumbbell)");
    std::smatch m;
    if (std::regex_match(source, m, named)) {
        if (source == "dumbbell")
            return graphs::dumbbell();
        const int k = m[2].length() ? std::stoi(m[2].str()) : (m[1] == "rose" ? 2 : 3);
        if (k < 1 || k > 20)
            throw Error("named graph size out of range");
        if (m[1] == "rose")
            return graphs::rose(k);
        if (m[1] == "theta")
            return graphs::theta(k);
        return graphs::cycle(k);
    }
    if (source.find(':') != std::string::npos && !std::filesystem::exists(source))
        return graph_from_key(source);
    std::ifstream in(source);
    if (!in)
        throw Error("'" + source + "' is neither a graph key, a named graph nor a readable file");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw Error("cannot parse " + source + ": " + ex.what());
    }
    return graph_from_json(j);
}

}  // namespace posetlab
