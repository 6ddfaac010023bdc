#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "posetlab/enumerate.hpp"
#include "posetlab/morse.hpp"
#include "posetlab/suite.hpp"

using namespace posetlab;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            note = what;
        }
    }
};

std::vector<CanonicalGraph> low_rank()
{
    auto g = enumerate_spine_graphs(2);
    for (auto& c : enumerate_spine_graphs(3))
        g.push_back(c);
    return g;
}

bool separating(const Multigraph& g)
{
    for (const Edge& e : g.edges())
        if (is_separating_edge(g, e.id))
            return true;
    return false;
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Outcome enumeration()
{
    Outcome o;
    const auto t = std::chrono::steady_clock::now();
    const auto r2 = enumerate_spine_graphs(2);
    const auto r3 = enumerate_spine_graphs(3);
    const double elapsed = seconds_since(t);
    std::set<std::string> keys2;
    for (const auto& cg : r2)
        keys2.insert(cg.key);
    o.require(keys2 == std::set<std::string>{canonical_key(graphs::rose(2)), canonical_key(graphs::theta()),
                                             canonical_key(graphs::dumbbell())},
              "rank 2 is not {rose2, theta, dumbbell}");
    const std::size_t oracle3 = oracle::spine_graphs(3).size();
    o.require(r3.size() == oracle3, "enumerator and oracle disagree");
    o.require(r3.size() == 16, "rank 3 yields " + std::to_string(r3.size()) + " graphs (oracle " +
                                   std::to_string(oracle3) + "), expected 16");
    o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    return o;
}

Outcome x_sphericity()
{
    Outcome o;
    const auto t = std::chrono::steady_clock::now();
    for (const auto& cg : low_rank()) {
        const int n = rank(cg.graph);
        const HomologyResult h = poset_homology(build_poset(cg.graph, PosetKind::X).poset);
        const bool sep = separating(cg.graph);
        o.require(h.trivial() == sep, cg.key + ": acyclic iff separating edge");
        if (!sep)
            o.require(h.is_wedge_of_spheres(n - 2), cg.key + ": not free in degree n-2");
        o.require(verify_X_sphericity(cg.graph).ok(), cg.key + ": verifier failed");
    }
    o.require(seconds_since(t) < 30.0, "runtime over 30 s");
    return o;
}

Outcome cx_sphericity()
{
    Outcome o;
    for (const auto& cg : low_rank()) {
        const int n = rank(cg.graph);
        const HomologyResult h = poset_homology(build_poset(cg.graph, PosetKind::cX).poset);
        o.require(h.torsion_free(), cg.key + ": torsion");
        for (const DegreeHomology& d : h.degrees())
            if (d.degree != n - 2)
                o.require(d.zero(), cg.key + ": homology outside degree n-2");
        o.require(verify_cX_sphericity(cg.graph).ok(), cg.key + ": verifier failed");
    }
    const auto b0 = [](const Multigraph& g) { return poset_homology(build_poset(g, PosetKind::cX).poset).betti(0); };
    o.require(b0(graphs::theta()) == 2, "theta b0 != 2");
    o.require(b0(graphs::rose(2)) == 1, "rose2 b0 != 1");
    o.require(b0(graphs::dumbbell()) == 1, "dumbbell b0 != 1");
    return o;
}

Outcome duality()
{
    Outcome o;
    for (const auto& cg : low_rank()) {
        const int e = cg.graph.num_edges();
        const HomologyResult f = poset_homology(build_poset(cg.graph, PosetKind::For).poset);
        const HomologyResult x =
            cohomology_from_homology(poset_homology(build_poset(cg.graph, PosetKind::X).poset));
        for (int i = -1; i <= e - 2; ++i) {
            o.require(f.betti(i) == x.betti(e - 3 - i), cg.key + ": rank mismatch in degree " + std::to_string(i));
            o.require(f.torsion(i) == x.torsion(e - 3 - i),
                      cg.key + ": torsion mismatch in degree " + std::to_string(i));
        }
        o.require(verify_duality(cg.graph).ok(), cg.key + ": verifier failed");
    }
    return o;
}

Outcome retractions()
{
    Outcome o;
    int subdivided = 0;
    for (const auto& cg : low_rank()) {
        o.require(verify_core_retractions(cg.graph).ok(), cg.key + ": core retraction");
        for (const Edge& e : cg.graph.edges()) {
            const Multigraph s = subdivide_edge(cg.graph, e.id);
            o.require(verify_valence_two(s, s.vertices().back()).ok(),
                      cg.key + ": valence-two maps on e" + std::to_string(e.id));
            ++subdivided;
        }
    }
    o.require(subdivided >= 5, "fewer than 5 subdivided graphs");
    return o;
}

Outcome fibers()
{
    Outcome o;
    for (const auto& cg : low_rank()) {
        o.require(verify_fiber(cg.graph, false).ok(), cg.key + ": fiber");
        o.require(verify_fiber(cg.graph, true).ok(), cg.key + ": connected fiber");
    }
    return o;
}

Outcome generators()
{
    Outcome o;
    int tested = 0;
    for (const auto& cg : low_rank())
        if (!separating(cg.graph)) {
            const CheckReport r = forest_generator_count(cg.graph);
            o.require(r.ok(), cg.key + ": " + r.detail);
            ++tested;
        }
    o.require(tested > 0, "no graphs tested");
    return o;
}

Outcome apartments()
{
    Outcome o;
    const auto t = std::chrono::steady_clock::now();
    for (int r = 2; r <= 6; ++r)
        o.require(poset_homology(apartment(r)).is_sphere(r - 2) && verify_apartment(r).ok(),
                  "rank " + std::to_string(r));
    o.require(seconds_since(t) < 5.0, "runtime over 5 s");
    return o;
}

Outcome morse()
{
    Outcome o;
    for (const auto& cg : enumerate_spine_graphs(3)) {
        const CheckReport r = verify_morse(cg.graph);
        o.require(r.ok(), cg.key + ": " + r.detail);
        if (separating(cg.graph)) {
            const auto mf = morse_search(build_poset(cg.graph, PosetKind::C).poset, 3);
            o.require(mf && morse_verify(*mf).certifies_contractible(), cg.key + ": no certificate");
            o.require(r.homology.trivial(), cg.key + ": certificate but nontrivial homology");
        }
    }
    const FinitePoset theta = build_poset(graphs::theta(), PosetKind::C).poset;
    o.require(!morse_search(theta, 3).has_value(), "certificate found for C(theta)");
    o.require(poset_homology(theta).betti(0) == 2, "C(theta) is not two points' worth of b0");
    return o;
}

Outcome sub_spheres()
{
    Outcome o;
    for (const auto& cg : low_rank())
        o.require(verify_sub_sphere(cg.graph).ok() &&
                      poset_homology(build_poset(cg.graph, PosetKind::Sub).poset).is_sphere(cg.graph.num_edges() - 2),
                  cg.key + ": Sub is not a homology sphere");
    std::string first, second;
    for (const char* s : {"rank2", "rank3", "duality", "fibers", "morse", "apartments"})
        first += run_suite(s).to_json().dump(2);
    for (const char* s : {"rank2", "rank3", "duality", "fibers", "morse", "apartments"})
        second += run_suite(s).to_json().dump(2);
    o.require(first == second, "suite reports differ between runs");
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"enumeration: 3 graphs of rank 2, 16 of rank 3", enumeration},
        {"X sphericity", x_sphericity},
        {"cX sphericity", cx_sphericity},
        {"duality between For and X", duality},
        {"retraction certificates", retractions},
        {"fiber homology and slices", fibers},
        {"forest generators", generators},
        {"apartment spheres", apartments},
        {"Morse certificates", morse},
        {"Sub spheres and determinism", sub_spheres},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i + 1) != only)
            continue;
        const auto t = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("error: ") + e.what();
        }
        all = all && o.pass;
        std::printf("%s %2zu %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    seconds_since(t), o.note.empty() ? "" : ": ", o.note.c_str());
    }
    return all ? 0 : 1;
}
