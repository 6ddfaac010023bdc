#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "posetlab/enumerate.hpp"
#include "posetlab/io.hpp"
#include "posetlab/suite.hpp"

using namespace posetlab;

namespace {

std::size_t occurrences(const std::string& s, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++n;
    return n;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("graph json round trip")
{
    for (int r : {2, 3})
        for (const auto& cg : enumerate_spine_graphs(r)) {
            const Json j = graph_to_json(cg.graph);
            CHECK(graph_from_json(Json::parse(j.dump())) == cg.graph);
        }
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[0]})")), Error);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[0],"edges":[[0,0]]})")), Error);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[0],"edges":[[0,0,5]]})")), Error);
}

TEST_CASE("poset json round trip")
{
    for (PosetKind k : {PosetKind::Sub, PosetKind::X, PosetKind::C}) {
        const FinitePoset p = build_poset(graphs::theta(), k).poset;
        const FinitePoset q = poset_from_json(Json::parse(poset_to_json(p).dump()));
        REQUIRE(q.size() == p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(q.label(i) == p.label(i));
            for (std::size_t j = 0; j < p.size(); ++j)
                CHECK(q.leq(i, j) == p.leq(i, j));
        }
    }
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements":["a"],"covers":[[0,3]]})")), Error);
}

TEST_CASE("dot export")
{
    const std::string t = graph_to_dot(graphs::theta());
    CHECK(occurrences(t, "[label=") == 3);
    CHECK(occurrences(t, ";\n") == 2 + 3);
    const std::string c = poset_to_dot(build_poset(graphs::dumbbell(), PosetKind::C).poset);
    CHECK(occurrences(c, " -> ") == 2);
    CHECK(occurrences(c, "[label=") == 3);
    CHECK(c.find("rankdir=BT") != std::string::npos);
}

TEST_CASE("homology json with torsion")
{
    const SimplicialComplex rp2 = SimplicialComplex::from_facets(
        {0, 1, 2, 3, 4, 5}, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                             {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
    const Json j = homology_to_json(reduced_homology(rp2));
    CHECK(j.dump() == R"([{"degree":-1,"betti":0,"torsion":[]},{"degree":0,"betti":0,"torsion":[]},)"
                      R"({"degree":1,"betti":0,"torsion":[2]},{"degree":2,"betti":0,"torsion":[]}])");
    const Json k = complex_to_json(SimplicialComplex::from_facets({4, 9}, {{0, 1}}));
    CHECK(k.dump() == R"({"vertices":[4,9],"facets":[[4,9]]})");
}

TEST_CASE("graph specs")
{
    CHECK(resolve_graph("theta") == graphs::theta());
    CHECK(resolve_graph("rose3") == graphs::rose(3));
    CHECK(resolve_graph("dumbbell") == graphs::dumbbell());
    CHECK(canonical_key(resolve_graph("2:1,1,1")) == "2:1,1,1");
    const std::string path = "test_io_graph.json";
    {
        std::ofstream(path) << graph_to_json(graphs::theta(4)).dump();
    }
    CHECK(resolve_graph(path) == graphs::theta(4));
    CHECK_THROWS_AS(resolve_graph("no-such-thing"), Error);
    CHECK_THROWS_AS(resolve_graph("rose0"), Error);
}

TEST_CASE("report json")
{
    const CheckReport r = verify_X_sphericity(graphs::theta());
    const Json j = report_to_json("2:0,3,0", r);
    CHECK(j["graph"] == "2:0,3,0");
    CHECK(j["status"] == "pass");
    CHECK(j["betti"] == Json::parse("[0,2]"));
    CHECK_FALSE(j.contains("homology"));
}

TEST_CASE("rank2 suite matches the golden fixture")
{
    const std::string golden = slurp(POSETLAB_GOLDEN_DIR "/rank2.json");
    REQUIRE_FALSE(golden.empty());
    const SuiteReport rep = run_suite("rank2");
    CHECK(rep.ok());
    CHECK(rep.to_json().dump(2) + "\n" == golden);
}

TEST_CASE("suite reports are identical across runs and thread counts")
{
    const int saved = omp_get_max_threads();
    for (const std::string name : {"rank3", "apartments"}) {
        omp_set_num_threads(1);
        const std::string a = run_suite(name).to_json().dump();
        omp_set_num_threads(3);
        const std::string b = run_suite(name).to_json().dump();
        const std::string c = run_suite(name).to_json().dump();
        CHECK(a == b);
        CHECK(b == c);
    }
    omp_set_num_threads(saved);
    CHECK_THROWS_AS(run_suite("rank5"), Error);
}

TEST_CASE("suite summary")
{
    const SuiteReport rep = run_suite("apartments");
    const Json j = rep.to_json();
    CHECK(j["suite"] == "apartments");
    CHECK(j["version"] == kToolVersion);
    CHECK(j["summary"]["checks"] == 5);
    CHECK(j["summary"]["pass"] == 5);
    CHECK_FALSE(j.contains("wall_time"));
}
