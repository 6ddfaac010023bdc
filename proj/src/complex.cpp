#include "posetlab/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace posetlab {

namespace {

/// Sort the rows of a flat table of width w and drop duplicates.
void sort_rows(std::vector<int>& flat, int w)
{
    const std::size_t n = flat.size() / w;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto row = [&](std::size_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(i * w); };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(row(a), row(a) + w, row(b), row(b) + w);
    });
    std::vector<int> out;
    out.reserve(flat.size());
    for (std::size_t k = 0; k < n; ++k) {
        auto r = row(idx[k]);
        if (k > 0 && std::equal(r, r + w, row(idx[k - 1])))
            continue;
        out.insert(out.end(), r, r + w);
    }
    flat = std::move(out);
}

void collect_chains(const FinitePoset& p, std::size_t start, std::vector<int>& chain,
                    std::vector<std::vector<int>>& cells)
{
    const int d = static_cast<int>(chain.size()) - 1;
    if (static_cast<int>(cells.size()) <= d)
        cells.resize(d + 1);
    std::vector<int> sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    cells[d].insert(cells[d].end(), sorted.begin(), sorted.end());
    const Bitset& up = p.up(start);
    for (std::size_t next = up.find_first(); next != Bitset::npos; next = up.find_next(next)) {
        if (next == start)
            continue;
        chain.push_back(static_cast<int>(next));
        collect_chains(p, next, chain, cells);
        chain.pop_back();
    }
}

std::vector<std::vector<int>> chains_from(const FinitePoset& p, std::size_t start)
{
    std::vector<std::vector<int>> cells;
    std::vector<int> chain{static_cast<int>(start)};
    collect_chains(p, start, chain, cells);
    return cells;
}

std::vector<VertexLabel> identity_ids(std::size_t n)
{
    std::vector<VertexLabel> ids(n);
    std::iota(ids.begin(), ids.end(), VertexLabel{0});
    return ids;
}

SimplicialComplex assemble(std::size_t n, std::vector<std::vector<std::vector<int>>>& per_start)
{
    std::vector<std::vector<int>> cells;
    for (auto& part : per_start) {
        if (part.size() > cells.size())
            cells.resize(part.size());
        for (std::size_t d = 0; d < part.size(); ++d)
            cells[d].insert(cells[d].end(), part[d].begin(), part[d].end());
        part.clear();
    }
    return SimplicialComplex::from_cells(identity_ids(n), std::move(cells));
}

}  // namespace

SimplicialComplex SimplicialComplex::from_cells(std::vector<VertexLabel> vertex_ids, std::vector<std::vector<int>> cells)
{
    SimplicialComplex k;
    k.vertex_ids_ = std::move(vertex_ids);
    while (!cells.empty() && cells.back().empty())
        cells.pop_back();
    for (std::size_t d = 0; d < cells.size(); ++d) {
        const int w = static_cast<int>(d) + 1;
        if (cells[d].size() % w != 0)
            throw Error("cell table of dimension " + std::to_string(d) + " has a ragged row");
        sort_rows(cells[d], w);
    }
    k.cells_ = std::move(cells);
    if (k.vertex_ids_.empty() && !k.cells_.empty())
        throw Error("simplices without vertices");
    // Every listed vertex is a 0-simplex.
    if (!k.vertex_ids_.empty()) {
        if (k.cells_.empty())
            k.cells_.emplace_back();
        std::vector<int> zero(k.vertex_ids_.size());
        std::iota(zero.begin(), zero.end(), 0);
        if (k.cells_[0] != zero) {
            for (int v : k.cells_[0])
                if (v < 0 || v >= static_cast<int>(k.vertex_ids_.size()))
                    throw Error("simplex uses an undeclared vertex");
            k.cells_[0] = zero;
        }
    }
    // Closure: every facet of every d-simplex is present.
    std::vector<int> face;
    for (int d = 1; d <= k.dimension(); ++d) {
        for (std::size_t s = 0; s < k.count(d); ++s) {
            auto simp = k.simplex(d, s);
            for (int drop = 0; drop <= d; ++drop) {
                face.clear();
                for (int i = 0; i <= d; ++i)
                    if (i != drop)
                        face.push_back(simp[i]);
                if (!k.find(face))
                    throw Error("simplicial family is not closed under faces");
            }
        }
    }
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexLabel> vertex_ids,
                                                 const std::vector<std::vector<int>>& facets)
{
    std::vector<std::vector<int>> cells;
    for (std::vector<int> f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error("facet repeats a vertex");
        const int m = static_cast<int>(f.size());
        if (m > 24)
            throw Error("facet too large for face expansion");
        if (static_cast<int>(cells.size()) < m)
            cells.resize(m);
        for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << m); ++sub) {
            const int d = std::popcount(sub) - 1;
            for (int i = 0; i < m; ++i)
                if ((sub >> i) & 1U)
                    cells[d].push_back(f[i]);
        }
    }
    return from_cells(std::move(vertex_ids), std::move(cells));
}

std::size_t SimplicialComplex::count(int d) const
{
    if (d == -1)
        return 1;
    if (d < -1 || d > dimension())
        return 0;
    return cells_[d].size() / static_cast<std::size_t>(d + 1);
}

std::size_t SimplicialComplex::total_simplices() const
{
    std::size_t total = 0;
    for (int d = 0; d <= dimension(); ++d)
        total += count(d);
    return total;
}

std::optional<std::size_t> SimplicialComplex::find(std::span<const int> s) const
{
    const int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > dimension())
        return std::nullopt;
    std::size_t lo = 0, hi = count(d);
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        auto row = simplex(d, mid);
        if (std::lexicographical_compare(row.begin(), row.end(), s.begin(), s.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count(d)) {
        auto row = simplex(d, lo);
        if (std::equal(row.begin(), row.end(), s.begin()))
            return lo;
    }
    return std::nullopt;
}

std::optional<int> SimplicialComplex::local_index(VertexLabel id) const
{
    auto it = std::find(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end())
        return std::nullopt;
    return static_cast<int>(it - vertex_ids_.begin());
}

std::vector<std::vector<int>> SimplicialComplex::facets() const
{
    // A simplex is maximal iff it is not a face of any (d+1)-simplex.
    std::vector<std::vector<char>> covered(cells_.size());
    for (int d = 0; d <= dimension(); ++d)
        covered[d].assign(count(d), 0);
    std::vector<int> face;
    for (int d = 1; d <= dimension(); ++d)
        for (std::size_t s = 0; s < count(d); ++s) {
            auto simp = simplex(d, s);
            for (int drop = 0; drop <= d; ++drop) {
                face.clear();
                for (int i = 0; i <= d; ++i)
                    if (i != drop)
                        face.push_back(simp[i]);
                covered[d - 1][*find(face)] = 1;
            }
        }
    std::vector<std::vector<int>> out;
    for (int d = 0; d <= dimension(); ++d)
        for (std::size_t s = 0; s < count(d); ++s)
            if (!covered[d][s]) {
                auto simp = simplex(d, s);
                out.emplace_back(simp.begin(), simp.end());
            }
    return out;
}

long long SimplicialComplex::euler_characteristic() const
{
    long long chi = 0;
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count(d));
    return chi;
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<int>& local_vertices) const
{
    std::vector<int> keep = local_vertices;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> relabel(num_vertices(), -1);
    std::vector<VertexLabel> ids;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        relabel.at(keep[i]) = static_cast<int>(i);
        ids.push_back(vertex_ids_[keep[i]]);
    }
    std::vector<std::vector<int>> cells;
    for (int d = 0; d <= dimension(); ++d) {
        std::vector<int> rows;
        for (std::size_t s = 0; s < count(d); ++s) {
            auto simp = simplex(d, s);
            if (std::all_of(simp.begin(), simp.end(), [&](int v) { return relabel[v] >= 0; }))
                for (int v : simp)
                    rows.push_back(relabel[v]);
        }
        if (rows.empty())
            break;
        cells.push_back(std::move(rows));
    }
    return from_cells(std::move(ids), std::move(cells));
}

SimplicialComplex SimplicialComplex::intersection(const SimplicialComplex& other) const
{
    std::vector<int> to_other(num_vertices(), -1);
    std::vector<int> common;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        if (auto o = other.local_index(vertex_ids_[v])) {
            to_other[v] = *o;
            common.push_back(static_cast<int>(v));
        }
    std::vector<int> relabel(num_vertices(), -1);
    std::vector<VertexLabel> ids;
    for (std::size_t i = 0; i < common.size(); ++i) {
        relabel[common[i]] = static_cast<int>(i);
        ids.push_back(vertex_ids_[common[i]]);
    }
    std::vector<std::vector<int>> cells;
    std::vector<int> mapped;
    for (int d = 0; d <= dimension(); ++d) {
        std::vector<int> rows;
        for (std::size_t s = 0; s < count(d); ++s) {
            auto simp = simplex(d, s);
            if (!std::all_of(simp.begin(), simp.end(), [&](int v) { return to_other[v] >= 0; }))
                continue;
            mapped.clear();
            for (int v : simp)
                mapped.push_back(to_other[v]);
            std::sort(mapped.begin(), mapped.end());
            if (other.find(mapped))
                for (int v : simp)
                    rows.push_back(relabel[v]);
        }
        if (rows.empty())
            break;
        cells.push_back(std::move(rows));
    }
    return from_cells(std::move(ids), std::move(cells));
}

bool SimplicialComplex::same_as(const SimplicialComplex& other) const
{
    if (num_vertices() != other.num_vertices() || dimension() != other.dimension())
        return false;
    for (int d = 0; d <= dimension(); ++d)
        if (count(d) != other.count(d))
            return false;
    return intersection(other).total_simplices() == total_simplices();
}

SimplicialComplex order_complex_serial(const FinitePoset& p)
{
    std::vector<std::vector<std::vector<int>>> per_start(p.size());
    for (std::size_t s = 0; s < p.size(); ++s)
        per_start[s] = chains_from(p, s);
    return assemble(p.size(), per_start);
}

SimplicialComplex order_complex(const FinitePoset& p)
{
    const auto n = static_cast<std::ptrdiff_t>(p.size());
    std::vector<std::vector<std::vector<int>>> per_start(p.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t s = 0; s < n; ++s)
        per_start[s] = chains_from(p, static_cast<std::size_t>(s));
    return assemble(p.size(), per_start);
}

FinitePoset face_poset(const SimplicialComplex& k)
{
    struct Face {
        int d;
        std::size_t row;
    };
    std::vector<Face> faces;
    std::vector<std::string> labels;
    for (int d = 0; d <= k.dimension(); ++d)
        for (std::size_t s = 0; s < k.count(d); ++s) {
            faces.push_back({d, s});
            std::string lab = "[";
            auto simp = k.simplex(d, s);
            for (std::size_t i = 0; i < simp.size(); ++i)
                lab += (i ? "," : "") + std::to_string(k.vertex_ids()[simp[i]]);
            labels.push_back(lab + "]");
        }
    return FinitePoset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
        auto sa = k.simplex(faces[a].d, faces[a].row);
        auto sb = k.simplex(faces[b].d, faces[b].row);
        return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
    });
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k)
{
    return order_complex(face_poset(k));
}

SimplicialComplex full_simplex(int n)
{
    std::vector<int> facet(n + 1);
    std::iota(facet.begin(), facet.end(), 0);
    return SimplicialComplex::from_facets(identity_ids(n + 1), {facet});
}

SimplicialComplex simplex_skeleton(int n, int k)
{
    std::vector<std::vector<int>> facets;
    for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << (n + 1)); ++sub) {
        if (std::popcount(sub) != k + 1)
            continue;
        std::vector<int> f;
        for (int i = 0; i <= n; ++i)
            if ((sub >> i) & 1U)
                f.push_back(i);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(identity_ids(n + 1), facets);
}

SimplicialComplex simplex_boundary(int n)
{
    return simplex_skeleton(n, n - 1);
}

}  // namespace posetlab
