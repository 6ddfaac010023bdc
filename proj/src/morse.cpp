#include "posetlab/morse.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace posetlab {

std::string to_string(LinkVerdict v)
{
    switch (v) {
    case LinkVerdict::Empty:
        return "empty";
    case LinkVerdict::Contractible:
        return "contractible";
    case LinkVerdict::HomologyTrivial:
        return "homology-trivial";
    case LinkVerdict::Obstructed:
        return "obstructed";
    }
    return "obstructed";
}

namespace {

void check_function(const MorseFunction& mf)
{
    if (mf.value.size() != mf.poset.size())
        throw Error("Morse function must assign a value to every element");
}

std::vector<std::size_t> descending_set(const MorseFunction& mf, std::size_t x)
{
    std::vector<std::size_t> d;
    for (std::size_t y = 0; y < mf.poset.size(); ++y)
        if (y != x && mf.poset.comparable(x, y) && mf.value[y] < mf.value[x])
            d.push_back(y);
    return d;
}

SimplicialComplex complex_on(const FinitePoset& p, const std::vector<std::size_t>& elements)
{
    const SimplicialComplex local = order_complex(p.induced(elements));
    std::vector<VertexLabel> ids(elements.begin(), elements.end());
    std::vector<std::vector<int>> cells;
    for (int d = 0; d <= local.dimension(); ++d)
        cells.push_back(local.cells(d));
    return SimplicialComplex::from_cells(std::move(ids), std::move(cells));
}

LinkReport classify(const FinitePoset& p, std::size_t x, const std::vector<std::size_t>& d)
{
    LinkReport r;
    r.element = x;
    if (d.empty()) {
        r.verdict = LinkVerdict::Empty;
        r.homology = reduced_homology(SimplicialComplex());
        return r;
    }
    const FinitePoset sub = p.induced(d);
    if (auto c = cone_point(sub)) {
        r.cone = d[*c];
        r.verdict = LinkVerdict::Contractible;
        return r;
    }
    const SimplicialComplex k = core_order_complex(sub);
    r.homology = reduced_homology(k);
    if (!r.homology.trivial()) {
        r.verdict = LinkVerdict::Obstructed;
        return r;
    }
    r.pi1 = pi1_triviality(k, r.homology);
    r.verdict = r.pi1 == Pi1Status::Trivial ? LinkVerdict::Contractible : LinkVerdict::HomologyTrivial;
    return r;
}

std::vector<std::size_t> star(const FinitePoset& p, std::size_t c)
{
    std::vector<std::size_t> s;
    for (std::size_t y = 0; y < p.size(); ++y)
        if (p.comparable(c, y))
            s.push_back(y);
    return s;
}

bool contractible_link(const FinitePoset& p, std::size_t x, const std::vector<char>& below)
{
    std::vector<std::size_t> d;
    for (std::size_t y = 0; y < p.size(); ++y)
        if (below[y] && y != x && p.comparable(x, y))
            d.push_back(y);
    return classify(p, x, d).verdict == LinkVerdict::Contractible;
}

/// Levels per element for a certificate centred at c, if one exists with
/// the given number of levels.
std::optional<std::vector<int>> search_center(const FinitePoset& p, std::size_t c, int levels)
{
    const std::size_t n = p.size();
    std::vector<int> level(n, -1);
    std::vector<char> in0(n, 0);
    for (std::size_t y : star(p, c)) {
        level[y] = 0;
        in0[y] = 1;
    }
    std::vector<std::size_t> rest;
    for (std::size_t y = 0; y < n; ++y)
        if (!in0[y])
            rest.push_back(y);
    if (rest.empty())
        return levels == 1 ? std::optional(level) : std::nullopt;
    if (levels == 1)
        return std::nullopt;

    std::vector<char> ok0(n, 0);
    for (std::size_t x : rest)
        ok0[x] = contractible_link(p, x, in0);

    if (levels == 2) {
        for (std::size_t a : rest) {
            if (!ok0[a])
                return std::nullopt;
            for (std::size_t b : rest)
                if (a != b && p.comparable(a, b))
                    return std::nullopt;
        }
        for (std::size_t x : rest)
            level[x] = 1;
        return level;
    }

    // Three levels: both upper levels are antichains, so the comparability
    // graph on the rest is 2-coloured; components are flipped independently.
    std::vector<int> colour(n, -1), comp(n, -1);
    std::vector<std::vector<std::size_t>> components;
    for (std::size_t s : rest) {
        if (comp[s] >= 0)
            continue;
        components.emplace_back();
        std::queue<std::size_t> q;
        q.push(s);
        comp[s] = static_cast<int>(components.size() - 1);
        colour[s] = 0;
        while (!q.empty()) {
            const std::size_t a = q.front();
            q.pop();
            components.back().push_back(a);
            for (std::size_t b : rest) {
                if (a == b || !p.comparable(a, b))
                    continue;
                if (comp[b] < 0) {
                    comp[b] = comp[a];
                    colour[b] = 1 - colour[a];
                    q.push(b);
                } else if (colour[b] == colour[a]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<std::size_t> flexible;
    for (std::size_t k = 0; k < components.size(); ++k)
        if (components[k].size() > 1)
            flexible.push_back(k);
    if (flexible.size() > 20)
        return std::nullopt;
    for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << flexible.size()); ++flips) {
        std::vector<char> flip(components.size(), 0);
        for (std::size_t k = 0; k < flexible.size(); ++k)
            flip[flexible[k]] = (flips >> k) & 1U;
        std::vector<char> below2 = in0;
        bool good = true;
        for (std::size_t x : rest) {
            const bool one = components[comp[x]].size() == 1 || (colour[x] ^ flip[comp[x]]) == 0;
            level[x] = one ? 1 : 2;
            if (one) {
                below2[x] = 1;
                good = good && ok0[x];
            }
        }
        if (!good)
            continue;
        for (std::size_t x : rest)
            if (level[x] == 2 && !contractible_link(p, x, below2)) {
                good = false;
                break;
            }
        if (good)
            return level;
    }
    return std::nullopt;
}

}  // namespace

SimplicialComplex descending_link(const MorseFunction& mf, std::size_t x)
{
    check_function(mf);
    if (x >= mf.poset.size())
        throw Error("unknown poset element");
    return complex_on(mf.poset, descending_set(mf, x));
}

MorseReport morse_verify(const MorseFunction& mf)
{
    check_function(mf);
    MorseReport r;
    const FinitePoset& p = mf.poset;
    if (p.empty()) {
        r.vacuous = true;
        return r;
    }
    const MorseValue lowest = *std::min_element(mf.value.begin(), mf.value.end());
    for (std::size_t x = 0; x < p.size(); ++x)
        if (mf.value[x] == lowest)
            r.sublevel0.push_back(x);
    for (std::size_t c : r.sublevel0)
        if (star(p, c) == r.sublevel0) {
            r.star_center = c;
            break;
        }
    r.vacuous = r.sublevel0.size() == p.size();
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (mf.value[x] == lowest)
            continue;
        for (std::size_t y = x + 1; y < p.size(); ++y)
            if (mf.value[y] == mf.value[x] && p.comparable(x, y))
                r.levels_are_antichains = false;
        LinkReport link = classify(p, x, descending_set(mf, x));
        r.all_contractible = r.all_contractible && link.verdict == LinkVerdict::Contractible;
        r.links.push_back(std::move(link));
    }
    return r;
}

std::optional<MorseFunction> morse_search(const FinitePoset& p, int max_levels)
{
    if (max_levels < 1 || max_levels > 3)
        throw Error("Morse search supports 1 to 3 levels");
    if (p.size() > 64)
        throw Error("Morse search supports posets with at most 64 elements");
    const auto n = static_cast<std::ptrdiff_t>(p.size());
    for (int levels = 1; levels <= max_levels; ++levels) {
        std::vector<std::optional<std::vector<int>>> found(p.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t c = 0; c < n; ++c)
            found[c] = search_center(p, static_cast<std::size_t>(c), levels);
        for (const auto& f : found)
            if (f) {
                MorseFunction mf{p, {}};
                for (int v : *f)
                    mf.value.emplace_back(v);
                return mf;
            }
    }
    return std::nullopt;
}

CheckReport verify_morse(const Multigraph& g, int max_levels, bool require_certificate)
{
    CheckReport r;
    r.check = "morse";
    bool separating = false;
    for (const Edge& e : g.edges())
        separating = separating || is_separating_edge(g, e.id);
    const GraphPoset c = build_poset(g, PosetKind::C);
    r.homology = poset_homology(c.poset);
    const auto mf = morse_search(c.poset, max_levels);
    if (!mf) {
        const bool ok = separating ? !require_certificate && r.homology.trivial() : !r.homology.trivial();
        r.status = ok ? Status::Pass : Status::Fail;
        r.detail = std::string("no certificate within ") + std::to_string(max_levels) + " levels" +
                   (separating && !require_certificate ? " (not required)" : "") + "; " + r.homology.summary();
        return r;
    }
    const MorseReport rep = morse_verify(*mf);
    std::map<MorseValue, std::vector<std::string>> levels;
    for (std::size_t i = 0; i < c.poset.size(); ++i)
        if (mf->value[i] != MorseValue(0))
            levels[mf->value[i]].push_back(c.poset.label(i));
    std::string table = "st(" + (rep.star_center ? c.poset.label(*rep.star_center) : std::string("?")) + ")->0";
    for (const auto& [v, names] : levels) {
        table += "; ";
        for (std::size_t i = 0; i < names.size(); ++i)
            table += (i ? " " : "") + names[i];
        table += "->" + std::to_string(boost::rational_cast<long long>(v));
    }
    const bool consistent = rep.certifies_contractible() && r.homology.trivial();
    r.status = consistent && separating ? Status::Pass : Status::Fail;
    r.detail = table;
    if (!consistent)
        r.detail += "; certificate disagrees with homology " + r.homology.summary();
    return r;
}

}  // namespace posetlab
