#include "posetlab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "posetlab/enumerate.hpp"
#include "posetlab/morse.hpp"

namespace posetlab {

namespace {

using Check = std::function<CheckReport(const Multigraph&)>;

CheckReport guarded(const std::string& name, const std::function<CheckReport()>& f)
{
    try {
        return f();
    } catch (const std::exception& ex) {
        CheckReport r;
        r.check = name;
        r.status = Status::Fail;
        r.detail = std::string("error: ") + ex.what();
        return r;
    }
}

bool has_separating_edge(const Multigraph& g)
{
    for (const Edge& e : g.edges())
        if (is_separating_edge(g, e.id))
            return true;
    return false;
}

std::vector<std::pair<std::string, Check>> cheap_checks(bool require_certificate = true)
{
    return {
        {"x", verify_X_sphericity},
        {"cx", verify_cX_sphericity},
        {"retraction", verify_core_retractions},
        {"forest-poset", verify_forest_poset},
        {"generators", forest_generator_count},
        {"morse", [require_certificate](const Multigraph& g) { return verify_morse(g, 3, require_certificate); }},
    };
}

std::vector<std::pair<std::string, Check>> heavy_checks()
{
    return {
        {"sub-sphere", verify_sub_sphere},
        {"duality", verify_duality},
        {"fiber", [](const Multigraph& g) { return verify_fiber(g, false); }},
        {"fiber-connected", [](const Multigraph& g) { return verify_fiber(g, true); }},
    };
}

std::vector<std::pair<std::string, Check>> select(const std::vector<std::string>& names,
                                                  bool require_certificate = true)
{
    std::vector<std::pair<std::string, Check>> all = cheap_checks(require_certificate);
    for (auto& c : heavy_checks())
        all.push_back(std::move(c));
    std::vector<std::pair<std::string, Check>> out;
    for (const std::string& n : names)
        for (const auto& c : all)
            if (c.first == n)
                out.push_back(c);
    return out;
}

std::vector<SuiteRecord> run_graph(const CanonicalGraph& cg, const std::vector<std::pair<std::string, Check>>& checks,
                                   bool valence2)
{
    std::vector<SuiteRecord> out;
    const bool separating = has_separating_edge(cg.graph);
    for (const auto& [name, f] : checks) {
        if (name == "generators" && separating)
            continue;
        out.push_back({cg.key, guarded(name, [&, &f = f] { return f(cg.graph); })});
    }
    if (valence2)
        for (const Edge& e : cg.graph.edges()) {
            const std::string name = "valence2:e" + std::to_string(e.id);
            CheckReport r = guarded(name, [&] {
                const Multigraph s = subdivide_edge(cg.graph, e.id);
                return verify_valence_two(s, s.vertices().back());
            });
            r.check = name;
            out.push_back({cg.key, std::move(r)});
        }
    return out;
}

std::vector<SuiteRecord> map_graphs(const std::vector<CanonicalGraph>& graphs,
                                    const std::function<std::vector<SuiteRecord>(const CanonicalGraph&)>& f)
{
    std::vector<std::vector<SuiteRecord>> parts(graphs.size());
    const auto n = static_cast<std::ptrdiff_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        parts[i] = f(graphs[i]);
    std::vector<SuiteRecord> out;
    for (auto& p : parts)
        for (auto& r : p)
            out.push_back(std::move(r));
    return out;
}

std::vector<CanonicalGraph> low_rank_graphs()
{
    std::vector<CanonicalGraph> g = enumerate_spine_graphs(2);
    for (auto& c : enumerate_spine_graphs(3))
        g.push_back(std::move(c));
    return g;
}

const std::vector<std::string> kFull = {"x",         "cx",      "retraction", "forest-poset",   "generators",
                                        "sub-sphere", "duality", "fiber",      "fiber-connected", "morse"};

}  // namespace

std::size_t SuiteReport::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [s](const SuiteRecord& r) { return r.report.status == s; }));
}

bool SuiteReport::ok() const
{
    return !incomplete && count(Status::Fail) == 0;
}

Json SuiteReport::to_json() const
{
    Json j;
    j["tool"] = "posetlab";
    j["version"] = kToolVersion;
    j["suite"] = name;
    j["assumptions"] = assumptions;
    j["summary"] = {{"checks", records.size()},
                    {"pass", count(Status::Pass)},
                    {"homology-only", count(Status::HomologyOnly)},
                    {"fail", count(Status::Fail)},
                    {"complete", !incomplete}};
    Json rs = Json::array();
    for (const SuiteRecord& r : records)
        rs.push_back(report_to_json(r.graph, r.report));
    j["records"] = rs;
    j["notes"] = notes;
    return j;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"rank2", "rank3", "rank4-deep", "duality",
                                                   "fibers", "morse", "apartments"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts)
{
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw Error("unknown suite '" + name + "'");
    SuiteReport rep;
    rep.name = name;
    rep.assumptions = {
        "distinct forests are distinct points of the spine down-set; equal marked collapses are not identified",
        "wedge-of-spheres statements are verified on integer homology; pi1 is trivial, nontrivial or unknown",
    };

    if (name == "apartments") {
        for (int r = 2; r <= 6; ++r)
            rep.records.push_back({"apartment-" + std::to_string(r),
                                   guarded("apartment", [r] { return verify_apartment(r); })});
        return rep;
    }
    if (name == "rank2" || name == "rank3") {
        const auto checks = select(kFull);
        rep.records = map_graphs(enumerate_spine_graphs(name == "rank2" ? 2 : 3),
                                 [&](const CanonicalGraph& cg) { return run_graph(cg, checks, true); });
        return rep;
    }
    if (name == "duality" || name == "fibers" || name == "morse") {
        const auto checks = select(name == "duality"  ? std::vector<std::string>{"duality"}
                                   : name == "fibers" ? std::vector<std::string>{"fiber", "fiber-connected"}
                                                      : std::vector<std::string>{"morse"});
        rep.records = map_graphs(low_rank_graphs(), [&](const CanonicalGraph& cg) { return run_graph(cg, checks, false); });
        return rep;
    }

    // rank4-deep
    const auto start = std::chrono::steady_clock::now();
    const auto cheap = cheap_checks(false);
    const auto all = select(kFull, false);
    const std::vector<CanonicalGraph> graphs = enumerate_spine_graphs(4);
    std::vector<char> started(graphs.size(), 0);
    rep.records = map_graphs(graphs, [&](const CanonicalGraph& cg) {
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > opts.budget_seconds)
            return std::vector<SuiteRecord>{};
        const std::size_t idx = static_cast<std::size_t>(&cg - graphs.data());
        started[idx] = 1;
        return run_graph(cg, cg.graph.num_edges() <= opts.deep_max_edges ? all : cheap,
                         false);
    });
    std::size_t light = 0;
    for (const auto& cg : graphs)
        light += cg.graph.num_edges() > opts.deep_max_edges;
    rep.notes.push_back("morse: certificates are searched with at most 3 levels and required only at rank 3; "
                        "found ones are checked against homology");
    rep.notes.push_back("sub-sphere, duality, fiber and fiber-connected run only on graphs with at most " +
                        std::to_string(opts.deep_max_edges) + " edges; skipped on " + std::to_string(light) +
                        " graphs");
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (!started[i]) {
            rep.incomplete = true;
            rep.notes.push_back("time budget exhausted before " + graphs[i].key);
        }
    return rep;
}

}  // namespace posetlab
