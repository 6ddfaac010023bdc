#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "posetlab/enumerate.hpp"
#include "posetlab/io.hpp"
#include "posetlab/morse.hpp"
#include "posetlab/suite.hpp"

using namespace posetlab;

namespace {

struct Options {
    int rank = 0;
    std::string kind = "x";
    bool connected = false;
    bool deep = false;
    bool json = false;
    bool dot = false;
    std::string out;
    std::string graph;
    int vertex = -1;
    bool timing = false;
    std::string check;
    std::string suite;
    std::string poset_file;
    std::string values_file;
    int levels = 3;
    double budget = 600.0;
    int max_edges = 7;
};

struct UsageError : Error {
    using Error::Error;
};

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        throw Error("cannot write " + o.out);
    f << text;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw Error("cannot parse " + path + ": " + ex.what());
    }
}

Multigraph need_graph(const Options& o)
{
    if (o.graph.empty())
        throw UsageError("--graph is required");
    return resolve_graph(o.graph);
}

std::string graph_name(const Multigraph& g)
{
    try {
        return canonical_key(g);
    } catch (const Error&) {
        return "";
    }
}

int finish_report(const Options& o, const Multigraph& g, const CheckReport& r)
{
    emit(o, dump(report_to_json(graph_name(g), r)));
    return r.ok() ? 0 : 1;
}

int cmd_graphs(const Options& o)
{
    if (!o.graph.empty()) {
        const Multigraph g = resolve_graph(o.graph);
        emit(o, o.dot ? graph_to_dot(g) : dump(graph_to_json(g)));
        return 0;
    }
    if (o.rank < 2)
        throw UsageError("--rank N (2..4) or --graph is required");
    if (o.rank >= 4 && !o.deep)
        throw UsageError("rank 4 requires --deep");
    Json list = Json::array();
    std::string plain;
    for (const CanonicalGraph& cg : enumerate_spine_graphs(o.rank)) {
        list.push_back({{"key", cg.key},
                        {"vertices", cg.graph.num_vertices()},
                        {"edges", cg.graph.num_edges()},
                        {"graph", graph_to_json(cg.graph)}});
        plain += cg.key + "\n";
    }
    emit(o, o.json ? dump(list) : plain);
    return 0;
}

FinitePoset load_poset(const Options& o)
{
    if (!o.poset_file.empty())
        return poset_from_json(read_json(o.poset_file));
    return build_poset(need_graph(o), parse_kind(o.kind)).poset;
}

int cmd_poset(const Options& o)
{
    const FinitePoset p = load_poset(o);
    emit(o, o.dot ? poset_to_dot(p) : dump(poset_to_json(p)));
    return 0;
}

int cmd_homology(const Options& o)
{
    const FinitePoset p = load_poset(o);
    const SimplicialComplex k = core_order_complex(p);
    const HomologyResult h = reduced_homology(k);
    Json j;
    j["elements"] = p.size();
    j["homology"] = homology_to_json(h);
    j["cohomology"] = homology_to_json(cohomology_from_homology(h));
    j["pi1"] = k.num_vertices() && h.zero_in(0) ? Json(to_string(pi1_triviality(k, h))) : Json(nullptr);
    emit(o, dump(j));
    return 0;
}

int cmd_verify(const Options& o)
{
    const Multigraph g = need_graph(o);
    const std::string& c = o.check;
    if (c == "x")
        return finish_report(o, g, verify_X_sphericity(g));
    if (c == "cx")
        return finish_report(o, g, verify_cX_sphericity(g));
    if (c == "retraction")
        return finish_report(o, g, verify_core_retractions(g));
    if (c == "generators")
        return finish_report(o, g, forest_generator_count(g));
    if (c == "sub-sphere")
        return finish_report(o, g, verify_sub_sphere(g));
    if (c == "forest-poset")
        return finish_report(o, g, verify_forest_poset(g));
    if (c == "valence2") {
        if (o.vertex < 0)
            throw UsageError("verify valence2 needs --vertex");
        return finish_report(o, g, verify_valence_two(g, o.vertex));
    }
    throw UsageError("unknown check '" + c + "'");
}

int cmd_duality(const Options& o)
{
    const Multigraph g = need_graph(o);
    return finish_report(o, g, verify_duality(g));
}

int cmd_fiber(const Options& o)
{
    const Multigraph g = need_graph(o);
    const ZFiber z = z_fiber(g, o.connected);
    if (o.dot) {
        emit(o, poset_to_dot(z.poset));
        return 0;
    }
    const CheckReport r = verify_fiber(g, o.connected);
    Json j;
    j["poset"] = poset_to_json(z.poset);
    j["report"] = report_to_json(graph_name(g), r);
    emit(o, dump(j));
    return r.ok() ? 0 : 1;
}

MorseValue parse_value(const Json& v)
{
    if (v.is_number_integer())
        return MorseValue(v.get<long long>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return MorseValue(std::stoll(s));
            return MorseValue(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
        }
    }
    throw Error("Morse values must be integers or \"p/q\" strings");
}

std::string value_string(const MorseValue& v)
{
    if (v.denominator() == 1)
        return std::to_string(v.numerator());
    return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

Json morse_json(const MorseFunction& mf, const MorseReport& rep)
{
    Json j;
    j["certifies_contractible"] = rep.certifies_contractible();
    j["star_center"] = rep.star_center ? Json(mf.poset.label(*rep.star_center)) : Json(nullptr);
    j["levels_are_antichains"] = rep.levels_are_antichains;
    Json links = Json::array();
    for (const LinkReport& l : rep.links) {
        Json e;
        e["element"] = mf.poset.label(l.element);
        e["value"] = value_string(mf.value[l.element]);
        e["verdict"] = to_string(l.verdict);
        if (l.cone)
            e["cone"] = mf.poset.label(*l.cone);
        else
            e["betti"] = l.homology.betti_numbers();
        e["pi1"] = l.pi1 ? Json(to_string(*l.pi1)) : Json(nullptr);
        links.push_back(e);
    }
    j["links"] = links;
    return j;
}

int cmd_morse(const Options& o, const std::string& mode)
{
    if (mode == "verify") {
        if (o.values_file.empty())
            throw UsageError("morse verify needs --values");
        MorseFunction mf{load_poset(o), {}};
        for (const Json& v : read_json(o.values_file))
            mf.value.push_back(parse_value(v));
        const MorseReport rep = morse_verify(mf);
        emit(o, dump(morse_json(mf, rep)));
        return rep.certifies_contractible() ? 0 : 1;
    }
    const FinitePoset p = load_poset(o);
    const auto mf = morse_search(p, o.levels);
    Json j;
    j["found"] = mf.has_value();
    if (mf) {
        Json values = Json::object();
        for (std::size_t i = 0; i < p.size(); ++i)
            values[p.label(i)] = value_string(mf->value[i]);
        j["values"] = values;
        j["report"] = morse_json(*mf, morse_verify(*mf));
    }
    emit(o, dump(j));
    return 0;
}

int cmd_apartment(const Options& o)
{
    if (o.rank < 2)
        throw UsageError("--rank N (2..8) is required");
    const CheckReport r = verify_apartment(o.rank);
    if (o.dot) {
        emit(o, poset_to_dot(apartment(o.rank)));
        return 0;
    }
    emit(o, dump(report_to_json("apartment-" + std::to_string(o.rank), r)));
    return r.ok() ? 0 : 1;
}

int cmd_report(const Options& o)
{
    if (o.suite == "rank4-deep" && !o.deep)
        throw UsageError("suite rank4-deep requires --deep");
    SuiteOptions so;
    so.budget_seconds = o.budget;
    so.deep_max_edges = o.max_edges;
    const SuiteReport rep = run_suite(o.suite, so);
    emit(o, dump(rep.to_json()));
    std::cerr << rep.name << ": " << rep.count(Status::Pass) << " pass, " << rep.count(Status::HomologyOnly)
              << " homology-only, " << rep.count(Status::Fail) << " fail" << (rep.incomplete ? ", incomplete" : "")
              << "\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    if (const char* t = std::getenv("POSETLAB_THREADS")) {
        const int n = std::atoi(t);
        if (n < 1) {
            std::cerr << "POSETLAB_THREADS must be a positive integer\n";
            return 2;
        }
        omp_set_num_threads(n);
    }

    Options o;
    std::string morse_mode;
    CLI::App app{"Subgraph posets of multigraphs and their homology"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    app.add_option("--out", o.out, "Write output to PATH");
    app.add_flag("--timing", o.timing, "Print wall time to stderr");
    app.add_flag("--json", o.json, "JSON output");
    app.add_flag("--dot", o.dot, "DOT output");

    auto graph_opt = [&](CLI::App* s) {
        s->add_option("--graph", o.graph, "Canonical key, named graph or JSON file");
    };
    auto kind_opt = [&](CLI::App* s) {
        s->add_option("--kind", o.kind, "sub|for|x|c|cx|cc")
            ->check(CLI::IsMember({"sub", "for", "x", "c", "cx", "cc"}, CLI::ignore_case));
        s->add_option("--poset", o.poset_file, "Poset JSON file instead of a graph poset");
    };

    auto* graphs = app.add_subcommand("graphs", "Enumerate spine graphs of a rank");
    graphs->add_option("--rank", o.rank)->check(CLI::Range(2, 4));
    graphs->add_flag("--deep", o.deep);
    graph_opt(graphs);

    auto* poset = app.add_subcommand("poset", "Build a graph poset");
    graph_opt(poset);
    kind_opt(poset);

    auto* homology = app.add_subcommand("homology", "Reduced homology of a poset's order complex");
    graph_opt(homology);
    kind_opt(homology);

    auto* verify = app.add_subcommand("verify", "Run one verifier on a graph");
    verify->add_option("check", o.check, "x|cx|retraction|valence2|generators|sub-sphere|forest-poset")->required();
    graph_opt(verify);
    verify->add_option("--vertex", o.vertex, "Valence-2 vertex");

    auto* duality = app.add_subcommand("duality", "Duality between For(G) and X(G) inside Sub(G)");
    graph_opt(duality);

    auto* fiber = app.add_subcommand("fiber", "Local fiber of the thickened spine over a graph");
    graph_opt(fiber);
    fiber->add_flag("--connected", o.connected);

    auto* morse = app.add_subcommand("morse", "Morse certificates on posets");
    morse->add_option("mode", morse_mode, "verify|search")->required()->check(CLI::IsMember({"verify", "search"}));
    graph_opt(morse);
    kind_opt(morse);
    morse->add_option("--values", o.values_file, "JSON list of values, one per element");
    morse->add_option("--levels", o.levels)->check(CLI::Range(1, 3));

    auto* apartment_cmd = app.add_subcommand("apartment", "Boolean-lattice apartment sphere check");
    apartment_cmd->add_option("--rank", o.rank)->check(CLI::Range(2, 8));

    auto* report = app.add_subcommand("report", "Run a verification suite");
    report->add_option("suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
    report->add_flag("--deep", o.deep);
    report->add_option("--budget", o.budget, "Time budget in seconds for rank4-deep")->check(CLI::PositiveNumber);
    report->add_option("--max-edges", o.max_edges, "Edge bound for heavy rank-4 checks")->check(CLI::Range(4, 9));

    for (CLI::App* s : app.get_subcommands({}))
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    o.kind = CLI::detail::to_lower(o.kind);

    const auto start = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (*graphs)
            rc = cmd_graphs(o);
        else if (*poset)
            rc = cmd_poset(o);
        else if (*homology)
            rc = cmd_homology(o);
        else if (*verify)
            rc = cmd_verify(o);
        else if (*duality)
            rc = cmd_duality(o);
        else if (*fiber)
            rc = cmd_fiber(o);
        else if (*morse)
            rc = cmd_morse(o, morse_mode);
        else if (*apartment_cmd)
            rc = cmd_apartment(o);
        else if (*report)
            rc = cmd_report(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (o.timing)
        std::cerr << "wall time: "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    return rc;
}
