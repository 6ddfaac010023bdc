#include "posetlab/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace posetlab {

HomologyResult::HomologyResult(std::vector<DegreeHomology> degrees) : degrees_(std::move(degrees))
{
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        if (degrees_[i].degree != static_cast<int>(i) - 1)
            throw Error("homology degrees must run consecutively from -1");
}

std::size_t HomologyResult::betti(int d) const
{
    const int i = d + 1;
    if (i < 0 || i >= static_cast<int>(degrees_.size()))
        return 0;
    return degrees_[i].betti;
}

std::vector<BigInt> HomologyResult::torsion(int d) const
{
    const int i = d + 1;
    if (i < 0 || i >= static_cast<int>(degrees_.size()))
        return {};
    return degrees_[i].torsion;
}

bool HomologyResult::trivial() const
{
    return std::all_of(degrees_.begin(), degrees_.end(), [](const DegreeHomology& h) { return h.zero(); });
}

bool HomologyResult::torsion_free() const
{
    return std::all_of(degrees_.begin(), degrees_.end(), [](const DegreeHomology& h) { return h.torsion.empty(); });
}

std::optional<int> HomologyResult::concentrated_degree() const
{
    std::optional<int> found;
    for (const DegreeHomology& h : degrees_) {
        if (h.zero())
            continue;
        if (found)
            return std::nullopt;
        found = h.degree;
    }
    return found;
}

bool HomologyResult::is_wedge_of_spheres(int d) const
{
    return torsion_free() && concentrated_degree() == d && betti(d) >= 1;
}

bool HomologyResult::is_sphere(int d) const
{
    return is_wedge_of_spheres(d) && betti(d) == 1;
}

std::vector<std::size_t> HomologyResult::betti_numbers() const
{
    std::vector<std::size_t> out;
    for (const DegreeHomology& h : degrees_)
        out.push_back(h.betti);
    return out;
}

bool operator==(const HomologyResult& a, const HomologyResult& b)
{
    const int top = std::max(a.top_degree(), b.top_degree());
    for (int d = -1; d <= top; ++d)
        if (a.betti(d) != b.betti(d) || a.torsion(d) != b.torsion(d))
            return false;
    return true;
}

std::string HomologyResult::summary() const
{
    std::ostringstream os;
    bool any = false;
    for (const DegreeHomology& h : degrees_) {
        if (h.zero())
            continue;
        if (any)
            os << ", ";
        any = true;
        os << "H~" << h.degree << "=";
        bool first = true;
        if (h.betti > 0) {
            os << "Z";
            if (h.betti > 1)
                os << "^" << h.betti;
            first = false;
        }
        for (const BigInt& t : h.torsion) {
            os << (first ? "" : "+") << "Z/" << t;
            first = false;
        }
    }
    if (!any)
        os << "acyclic";
    return os.str();
}

namespace {

/// Face rows and signs of every d-simplex, one column at a time.
void boundary_column(const SimplicialComplex& k, int d, std::size_t col, std::vector<Triplet>& out, std::size_t at)
{
    auto simp = k.simplex(d, col);
    int face[64];
    for (int drop = 0; drop <= d; ++drop) {
        int w = 0;
        for (int i = 0; i <= d; ++i)
            if (i != drop)
                face[w++] = simp[i];
        const auto row = k.find(std::span<const int>(face, static_cast<std::size_t>(d)));
        out[at + drop] = Triplet{*row, col, (drop % 2 == 0) ? 1 : -1};
    }
}

SparseIntMatrix augmentation(const SimplicialComplex& k)
{
    SparseIntMatrix m;
    m.rows = 1;
    m.cols = k.count(0);
    for (std::size_t v = 0; v < m.cols; ++v)
        m.entries.push_back({0, v, 1});
    return m;
}

void check_degree(const SimplicialComplex& k, int d)
{
    if (d < 0 || d > k.dimension())
        throw Error("boundary degree out of range");
    if (d > 63)
        throw Error("simplex dimension above 63 is not supported");
}

}  // namespace

SparseIntMatrix boundary_matrix_serial(const SimplicialComplex& k, int d)
{
    check_degree(k, d);
    if (d == 0)
        return augmentation(k);
    SparseIntMatrix m;
    m.rows = k.count(d - 1);
    m.cols = k.count(d);
    m.entries.resize(m.cols * static_cast<std::size_t>(d + 1));
    for (std::size_t c = 0; c < m.cols; ++c)
        boundary_column(k, d, c, m.entries, c * (d + 1));
    return m;
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int d)
{
    check_degree(k, d);
    if (d == 0)
        return augmentation(k);
    SparseIntMatrix m;
    m.rows = k.count(d - 1);
    m.cols = k.count(d);
    m.entries.resize(m.cols * static_cast<std::size_t>(d + 1));
    const auto cols = static_cast<std::ptrdiff_t>(m.cols);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < cols; ++c)
        boundary_column(k, d, static_cast<std::size_t>(c), m.entries, static_cast<std::size_t>(c) * (d + 1));
    return m;
}

HomologyResult reduced_homology(const SimplicialComplex& k)
{
    const int dim = k.dimension();
    // forms[d] = SNF of the boundary C_d -> C_{d-1}, d = 0 .. dim.
    std::vector<SmithForm> forms(static_cast<std::size_t>(dim + 1));
    if (dim >= 0) {
        forms[0].rank = k.count(0) > 0 ? 1 : 0;
        forms[0].invariant_factors.assign(forms[0].rank, BigInt(1));
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (int d = 1; d <= dim; ++d)
        forms[d] = smith_normal_form(boundary_matrix_serial(k, d));
    auto rank_of = [&](int d) -> std::size_t {
        return (d < 0 || d > dim) ? 0 : forms[d].rank;
    };
    std::vector<DegreeHomology> degrees;
    for (int d = -1; d <= dim; ++d) {
        DegreeHomology h;
        h.degree = d;
        h.betti = k.count(d) - rank_of(d) - rank_of(d + 1);
        if (d + 1 <= dim)
            h.torsion = forms[d + 1].torsion();
        degrees.push_back(std::move(h));
    }
    return HomologyResult(std::move(degrees));
}

SimplicialComplex core_order_complex(const FinitePoset& p)
{
    return order_complex(p.induced(beat_point_core(p)));
}

HomologyResult cohomology_from_homology(const HomologyResult& h)
{
    std::vector<DegreeHomology> degrees;
    for (int d = -1; d <= h.top_degree(); ++d)
        degrees.push_back({d, h.betti(d), h.torsion(d - 1)});
    // Torsion of the top homology degree would land one degree higher; a
    // simplicial complex never has torsion in its top degree.
    return HomologyResult(std::move(degrees));
}

HomologyResult reduced_cohomology(const SimplicialComplex& k)
{
    return cohomology_from_homology(reduced_homology(k));
}

DualityReport alexander_duality_check(const FinitePoset& p, const std::vector<std::size_t>& q, int sphere_dim)
{
    DualityReport r;
    r.sphere_dim = sphere_dim;
    r.ambient = reduced_homology(core_order_complex(p));
    r.hypothesis_ok = r.ambient.is_sphere(sphere_dim);
    Bitset in_q(p.size());
    for (std::size_t x : q) {
        if (x >= p.size())
            throw Error("subposet element outside the ambient poset");
        in_q.set(x);
    }
    r.subposet = reduced_homology(core_order_complex(p.induced(in_q)));
    r.complement = cohomology_from_homology(reduced_homology(core_order_complex(p.induced(~in_q))));
    if (!r.hypothesis_ok)
        return r;
    for (int i = -1; i <= sphere_dim; ++i) {
        const int j = sphere_dim - i - 1;
        if (r.subposet.betti(i) != r.complement.betti(j) || r.subposet.torsion(i) != r.complement.torsion(j))
            r.failing_degrees.push_back(i);
    }
    for (int i = sphere_dim + 1; i <= r.subposet.top_degree(); ++i)
        if (!r.subposet.zero_in(i))
            r.failing_degrees.push_back(i);
    r.duality_ok = r.failing_degrees.empty();
    return r;
}

NerveReport nerve(const std::vector<SimplicialComplex>& cover)
{
    NerveReport report;
    const int m = static_cast<int>(cover.size());
    std::vector<VertexLabel> nerve_ids(m);
    std::iota(nerve_ids.begin(), nerve_ids.end(), VertexLabel{0});
    std::vector<std::vector<int>> cells;

    // Depth-first over index sets with nonempty common intersection.
    struct Frame {
        std::vector<int> members;
        SimplicialComplex common;
    };
    std::vector<Frame> stack;
    for (int i = m - 1; i >= 0; --i)
        stack.push_back({{i}, cover[i]});
    std::vector<std::pair<std::vector<int>, bool>> found;
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.common.num_vertices() == 0)
            continue;
        const std::size_t d = f.members.size() - 1;
        if (cells.size() <= d)
            cells.resize(d + 1);
        cells[d].insert(cells[d].end(), f.members.begin(), f.members.end());
        found.emplace_back(f.members, reduced_homology(f.common).trivial());
        for (int j = m - 1; j > f.members.back(); --j) {
            Frame g{f.members, f.common.intersection(cover[j])};
            g.members.push_back(j);
            stack.push_back(std::move(g));
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
    });
    for (const auto& [members, acyclic] : found)
        report.all_acyclic = report.all_acyclic && acyclic;
    report.intersections = std::move(found);
    report.nerve = SimplicialComplex::from_cells(std::move(nerve_ids), std::move(cells));
    return report;
}

std::string to_string(Pi1Status s)
{
    switch (s) {
    case Pi1Status::Trivial:
        return "trivial";
    case Pi1Status::Nontrivial:
        return "nontrivial";
    case Pi1Status::Unknown:
        return "unknown";
    }
    return "unknown";
}

namespace {

using Word = std::vector<int>;  // letter = +/-(generator + 1)

void free_reduce(Word& w)
{
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    // Cyclic reduction.
    std::size_t a = 0, b = out.size();
    while (b - a >= 2 && out[a] == -out[b - 1]) {
        ++a;
        --b;
    }
    w.assign(out.begin() + static_cast<std::ptrdiff_t>(a), out.begin() + static_cast<std::ptrdiff_t>(b));
}

/// Generator classes under relations x = y^{+-1} and x = 1.
class EdgeClasses {
public:
    explicit EdgeClasses(std::size_t n) : parent_(n), flip_(n, 0), trivial_(n, 0)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    /// Root and exponent with x = root^exponent.
    std::pair<std::size_t, int> find(std::size_t x)
    {
        int sign = 1;
        std::size_t r = x;
        while (parent_[r] != r) {
            if (flip_[r])
                sign = -sign;
            r = parent_[r];
        }
        // Path compression with exponent bookkeeping.
        std::size_t cur = x;
        int cur_sign = sign;
        while (parent_[cur] != cur) {
            const std::size_t next = parent_[cur];
            const int next_sign = flip_[cur] ? -cur_sign : cur_sign;
            parent_[cur] = r;
            flip_[cur] = cur_sign == -1;
            cur = next;
            cur_sign = next_sign;
        }
        return {r, sign};
    }

    bool trivial_root(std::size_t r) const { return trivial_[r]; }
    bool mark_trivial(std::size_t r)
    {
        if (trivial_[r])
            return false;
        trivial_[r] = 1;
        return true;
    }
    /// a = b^exponent for roots a != b.
    bool unite(std::size_t a, std::size_t b, int exponent)
    {
        if (trivial_[a] || trivial_[b]) {
            const bool changed = !(trivial_[a] && trivial_[b]);
            trivial_[a] = trivial_[b] = 1;
            return changed;
        }
        parent_[a] = b;
        flip_[a] = exponent == -1;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<char> flip_;
    std::vector<char> trivial_;
};

}  // namespace

Pi1Status pi1_triviality(const SimplicialComplex& k, const Pi1Options& opts)
{
    return pi1_triviality(k, reduced_homology(k), opts);
}

Pi1Status pi1_triviality(const SimplicialComplex& k, const HomologyResult& h, const Pi1Options& opts)
{
    const std::size_t n = k.count(0);
    if (n == 0 || !h.zero_in(0))
        throw Error("pi1_triviality expects a nonempty connected complex");
    if (!h.zero_in(1))
        return Pi1Status::Nontrivial;
    const std::size_t ne = k.count(1);
    if (ne == 0)
        return Pi1Status::Trivial;

    // Spanning tree by BFS from vertex 0.
    std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
    for (std::size_t e = 0; e < ne; ++e) {
        auto s = k.simplex(1, e);
        adj[s[0]].emplace_back(s[1], e);
        adj[s[1]].emplace_back(s[0], e);
    }
    std::vector<char> seen(n, 0);
    EdgeClasses classes(ne);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    while (!bfs.empty()) {
        const int v = bfs.front();
        bfs.pop();
        for (auto [w, e] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                classes.mark_trivial(e);
                bfs.push(w);
            }
    }

    // Triangle relators: [ab][bc][ac]^-1.
    std::vector<std::array<std::size_t, 3>> triangles;
    for (std::size_t t = 0; t < k.count(2); ++t) {
        auto s = k.simplex(2, t);
        const int ab[2] = {s[0], s[1]}, bc[2] = {s[1], s[2]}, ac[2] = {s[0], s[2]};
        triangles.push_back({*k.find(ab), *k.find(bc), *k.find(ac)});
    }
    auto resolve = [&](const std::array<std::size_t, 3>& tri) {
        Word w;
        const int exps[3] = {1, 1, -1};
        for (int i = 0; i < 3; ++i) {
            auto [root, sign] = classes.find(tri[i]);
            if (!classes.trivial_root(root))
                w.push_back(static_cast<int>(root + 1) * sign * exps[i]);
        }
        free_reduce(w);
        return w;
    };

    // Length <= 2 relators identify or kill generators; iterate to a fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& tri : triangles) {
            Word w = resolve(tri);
            if (w.size() == 1) {
                changed |= classes.mark_trivial(static_cast<std::size_t>(std::abs(w[0]) - 1));
            } else if (w.size() == 2 && std::abs(w[0]) != std::abs(w[1])) {
                // a^s b^t = 1  =>  a = b^{-s t}
                const std::size_t a = std::abs(w[0]) - 1, b = std::abs(w[1]) - 1;
                const int s = w[0] > 0 ? 1 : -1, t = w[1] > 0 ? 1 : -1;
                changed |= classes.unite(a, b, -s * t);
            }
        }
    }

    std::vector<int> generators;
    for (std::size_t e = 0; e < ne; ++e) {
        auto [root, sign] = classes.find(e);
        if (root == e && !classes.trivial_root(root))
            generators.push_back(static_cast<int>(e + 1));
    }
    if (generators.empty())
        return Pi1Status::Trivial;

    std::vector<Word> relators;
    for (const auto& tri : triangles) {
        Word w = resolve(tri);
        if (!w.empty())
            relators.push_back(std::move(w));
    }

    // General Tietze elimination: a generator occurring once in some relator
    // is expressed through the others and substituted away.
    std::vector<char> alive(ne + 1, 0);
    for (int g : generators)
        alive[g] = 1;
    std::size_t live_count = generators.size();
    for (int pass = 0; pass < opts.max_passes && live_count > 0; ++pass) {
        std::size_t best_rel = SIZE_MAX;
        int best_gen = 0;
        for (std::size_t r = 0; r < relators.size(); ++r) {
            if (best_rel != SIZE_MAX && relators[r].size() >= relators[best_rel].size())
                continue;
            std::map<int, int> occurrences;
            for (int x : relators[r])
                ++occurrences[std::abs(x)];
            for (auto [g, c] : occurrences)
                if (c == 1) {
                    best_rel = r;
                    best_gen = g;
                    break;
                }
        }
        if (best_rel == SIZE_MAX)
            return Pi1Status::Unknown;
        // Rotate so the generator leads: x^s w = 1  =>  x = (w)^{-1} if s = 1, else x = w.
        Word rel = relators[best_rel];
        auto pos = std::find_if(rel.begin(), rel.end(), [&](int x) { return std::abs(x) == best_gen; });
        std::rotate(rel.begin(), pos, rel.end());
        const int s = rel[0] > 0 ? 1 : -1;
        Word rest(rel.begin() + 1, rel.end());
        Word value;  // x = value
        if (s == 1) {
            for (auto it = rest.rbegin(); it != rest.rend(); ++it)
                value.push_back(-*it);
        } else {
            value = rest;
        }
        Word inverse;
        for (auto it = value.rbegin(); it != value.rend(); ++it)
            inverse.push_back(-*it);
        relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(best_rel));
        std::size_t letters = 0;
        std::vector<Word> next;
        next.reserve(relators.size());
        for (Word& w : relators) {
            Word out;
            for (int x : w) {
                if (x == best_gen)
                    out.insert(out.end(), value.begin(), value.end());
                else if (x == -best_gen)
                    out.insert(out.end(), inverse.begin(), inverse.end());
                else
                    out.push_back(x);
            }
            free_reduce(out);
            letters += out.size();
            if (!out.empty())
                next.push_back(std::move(out));
        }
        if (letters > opts.max_word_letters)
            return Pi1Status::Unknown;
        relators = std::move(next);
        alive[best_gen] = 0;
        --live_count;
    }
    return live_count == 0 ? Pi1Status::Trivial : Pi1Status::Unknown;
}

}  // namespace posetlab
