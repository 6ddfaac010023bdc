#include "posetlab/smith.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "posetlab/error.hpp"

namespace posetlab {

namespace {

struct Overflow {};

/// int64 whose arithmetic throws Overflow instead of wrapping.
struct Checked {
    std::int64_t v = 0;

    friend Checked operator+(Checked a, Checked b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r))
            throw Overflow{};
        return {r};
    }
    friend Checked operator-(Checked a, Checked b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r))
            throw Overflow{};
        return {r};
    }
    friend Checked operator*(Checked a, Checked b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r))
            throw Overflow{};
        return {r};
    }
    friend Checked operator/(Checked a, Checked b)
    {
        if (a.v == INT64_MIN && b.v == -1)
            throw Overflow{};
        return {a.v / b.v};
    }
    friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
};

Checked make_scalar(Checked*, std::int64_t v) { return {v}; }
BigInt make_scalar(BigInt*, std::int64_t v) { return BigInt(v); }

bool is_zero(Checked a) { return a.v == 0; }
bool is_zero(const BigInt& a) { return a.is_zero(); }
bool is_unit(Checked a) { return a.v == 1 || a.v == -1; }
bool is_unit(const BigInt& a) { return a == 1 || a == -1; }

BigInt magnitude(Checked a)
{
    BigInt b(a.v);
    return b < 0 ? BigInt(-b) : b;
}
BigInt magnitude(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

bool abs_less(Checked a, Checked b)
{
    // INT64_MIN never survives to here: negation would have overflowed in an
    // earlier product, so std::abs is safe only after this guard.
    if (a.v == INT64_MIN || b.v == INT64_MIN)
        throw Overflow{};
    return std::abs(a.v) < std::abs(b.v);
}
bool abs_less(const BigInt& a, const BigInt& b) { return magnitude(a) < magnitude(b); }

template <class T>
class Eliminator {
public:
    using Entry = std::pair<std::size_t, T>;

    explicit Eliminator(const SparseIntMatrix& m)
        : rows_(m.rows), col_rows_(m.cols), row_dead_(m.rows, 0), col_dead_(m.cols, 0)
    {
        std::vector<Triplet> sorted = m.entries;
        for (const Triplet& t : sorted)
            if (t.row >= m.rows || t.col >= m.cols)
                throw Error("matrix entry outside declared shape");
        std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        for (const Triplet& t : sorted) {
            auto& row = rows_[t.row];
            const T v = make_scalar(static_cast<T*>(nullptr), t.value);
            if (!row.empty() && row.back().first == t.col)
                row.back().second = row.back().second + v;
            else
                row.emplace_back(t.col, v);
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto& row = rows_[r];
            row.erase(std::remove_if(row.begin(), row.end(), [](const Entry& e) { return is_zero(e.second); }),
                      row.end());
            for (const Entry& e : row)
                col_rows_[e.first].push_back(r);
        }
    }

    SmithForm run()
    {
        unit_sweep();
        general_phase();
        SmithForm f;
        f.rank = units_ + diag_.size();
        f.invariant_factors.assign(units_, BigInt(1));
        normalize_chain(diag_);
        f.invariant_factors.insert(f.invariant_factors.end(), diag_.begin(), diag_.end());
        return f;
    }

private:
    const T* find(std::size_t r, std::size_t c) const
    {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::size_t col) { return e.first < col; });
        if (it == row.end() || it->first != c)
            return nullptr;
        return &it->second;
    }

    std::vector<std::size_t>& live_rows(std::size_t c)
    {
        auto& rs = col_rows_[c];
        std::sort(rs.begin(), rs.end());
        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
        rs.erase(std::remove_if(rs.begin(), rs.end(),
                                [&](std::size_t r) { return row_dead_[r] || find(r, c) == nullptr; }),
                 rs.end());
        return rs;
    }

    /// row_k -= f * row_i
    void axpy(std::size_t k, const T& f, std::size_t i)
    {
        const auto& src = rows_[i];
        auto& dst = rows_[k];
        std::vector<Entry> out;
        out.reserve(dst.size() + src.size());
        std::size_t a = 0, b = 0;
        while (a < dst.size() || b < src.size()) {
            if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
                out.push_back(dst[a++]);
            } else if (a == dst.size() || src[b].first < dst[a].first) {
                const T v = make_scalar(static_cast<T*>(nullptr), 0) - f * src[b].second;
                out.emplace_back(src[b].first, v);
                col_rows_[src[b].first].push_back(k);
                ++b;
            } else {
                T v = dst[a].second - f * src[b].second;
                if (!is_zero(v))
                    out.emplace_back(dst[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        dst = std::move(out);
    }

    void kill(std::size_t r, std::size_t c)
    {
        row_dead_[r] = 1;
        col_dead_[c] = 1;
        rows_[r].clear();
        rows_[r].shrink_to_fit();
    }

    void unit_sweep()
    {
        std::vector<std::size_t> pending(col_rows_.size());
        for (std::size_t c = 0; c < pending.size(); ++c)
            pending[c] = c;
        bool progress = true;
        while (progress && !pending.empty()) {
            progress = false;
            std::vector<std::size_t> deferred;
            for (std::size_t c : pending) {
                if (col_dead_[c])
                    continue;
                auto& live = live_rows(c);
                if (live.empty())
                    continue;
                std::size_t pivot = SIZE_MAX;
                for (std::size_t r : live)
                    if (is_unit(*find(r, c)) && (pivot == SIZE_MAX || rows_[r].size() < rows_[pivot].size()))
                        pivot = r;
                if (pivot == SIZE_MAX) {
                    deferred.push_back(c);
                    continue;
                }
                const T p = *find(pivot, c);
                const std::vector<std::size_t> others = live;
                for (std::size_t r : others) {
                    if (r == pivot)
                        continue;
                    const T f = *find(r, c) * p;
                    axpy(r, f, pivot);
                }
                kill(pivot, c);
                ++units_;
                progress = true;
            }
            pending = std::move(deferred);
        }
    }

    void general_phase()
    {
        for (;;) {
            // Global minimal |entry|; ties go to the shorter row, then lower indices.
            std::size_t pi = SIZE_MAX, pj = SIZE_MAX;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (row_dead_[r])
                    continue;
                for (const Entry& e : rows_[r]) {
                    if (pi == SIZE_MAX) {
                        pi = r;
                        pj = e.first;
                        continue;
                    }
                    const T& best = *find(pi, pj);
                    if (abs_less(e.second, best) ||
                        (!abs_less(best, e.second) && rows_[r].size() < rows_[pi].size())) {
                        pi = r;
                        pj = e.first;
                    }
                }
            }
            if (pi == SIZE_MAX)
                return;
            diag_.push_back(reduce_pivot(pi, pj));
        }
    }

    BigInt reduce_pivot(std::size_t i, std::size_t j)
    {
        for (;;) {
            bool moved = false;
            const T p = *find(i, j);
            const std::vector<std::size_t> others = live_rows(j);
            for (std::size_t k : others) {
                if (k == i)
                    continue;
                const T q = *find(k, j) / p;
                if (!is_zero(q))
                    axpy(k, q, i);
                if (const T* rem = find(k, j)) {
                    i = k;
                    moved = true;
                    (void)rem;
                    break;
                }
            }
            if (moved)
                continue;
            // Column j is now zero outside row i; column operations only touch row i.
            auto& row = rows_[i];
            std::vector<Entry> kept;
            for (Entry& e : row) {
                if (e.first == j) {
                    kept.push_back(e);
                    continue;
                }
                const T q = e.second / p;
                T rem = e.second - q * p;
                if (!is_zero(rem))
                    kept.emplace_back(e.first, std::move(rem));
            }
            row = std::move(kept);
            if (row.size() == 1) {
                BigInt d = magnitude(p);
                kill(i, j);
                return d;
            }
            // A remainder smaller than p sits in row i: pivot on the smallest one.
            std::size_t best = SIZE_MAX;
            for (const Entry& e : row)
                if (e.first != j && (best == SIZE_MAX || abs_less(e.second, *find(i, best))))
                    best = e.first;
            j = best;
        }
    }

    static void normalize_chain(std::vector<BigInt>& d)
    {
        for (std::size_t a = 0; a < d.size(); ++a)
            for (std::size_t b = a + 1; b < d.size(); ++b) {
                const BigInt g = boost::multiprecision::gcd(d[a], d[b]);
                const BigInt l = d[a] / g * d[b];
                d[a] = g;
                d[b] = l;
            }
    }

    std::vector<std::vector<Entry>> rows_;
    std::vector<std::vector<std::size_t>> col_rows_;
    std::vector<char> row_dead_;
    std::vector<char> col_dead_;
    std::size_t units_ = 0;
    std::vector<BigInt> diag_;
};

std::uint64_t mod_reduce(std::int64_t v, std::uint32_t p)
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1U)
            r = r * b % p;
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

}  // namespace

std::vector<BigInt> SmithForm::torsion() const
{
    std::vector<BigInt> out;
    for (const BigInt& d : invariant_factors)
        if (d > 1)
            out.push_back(d);
    return out;
}

SmithForm smith_normal_form(const SparseIntMatrix& m)
{
    try {
        return Eliminator<Checked>(m).run();
    } catch (const Overflow&) {
        SmithForm f = Eliminator<BigInt>(m).run();
        f.used_bigint = true;
        return f;
    }
}

SmithForm smith_normal_form_dense(const std::vector<std::vector<BigInt>>& input)
{
    auto a = input;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    SmithForm f;
    f.used_bigint = true;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block.
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (!a[i][j].is_zero() && (bi == rows || magnitude(a[i][j]) < magnitude(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) {
                for (BigInt& d : f.invariant_factors)
                    d = magnitude(d);
                return f;
            }
            std::swap(a[t], a[bi]);
            for (auto& row : a)
                std::swap(row[t], row[bj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                clean = clean && a[i][t].is_zero();
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                clean = clean && a[t][j].is_zero();
            }
            if (!clean)
                continue;
            // Divisibility of the trailing block; fold an offending row in.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (BigInt(a[i][j] % a[t][t]) != 0) {
                        bad = i;
                        break;
                    }
            if (bad != rows) {
                for (std::size_t j = t; j < cols; ++j)
                    a[t][j] += a[bad][j];
                continue;
            }
            f.invariant_factors.push_back(magnitude(a[t][t]));
            ++f.rank;
            break;
        }
    }
    return f;
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p)
{
    using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;
    std::vector<Row> rows(m.rows);
    {
        std::vector<Triplet> sorted = m.entries;
        std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        for (const Triplet& t : sorted) {
            auto& row = rows[t.row];
            const std::uint64_t v = mod_reduce(t.value, p);
            if (!row.empty() && row.back().first == t.col)
                row.back().second = (row.back().second + v) % p;
            else
                row.emplace_back(t.col, v);
        }
        for (auto& row : rows)
            row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second == 0; }),
                      row.end());
    }
    // Echelon by leading column: pivot rows indexed by their leading column.
    std::vector<Row> pivots(m.cols);
    std::size_t rank = 0;
    for (Row& row : rows) {
        while (!row.empty()) {
            const std::size_t lead = row.front().first;
            if (pivots[lead].empty()) {
                const std::uint64_t inv = mod_pow(row.front().second, p - 2, p);
                for (auto& e : row)
                    e.second = e.second * inv % p;
                pivots[lead] = std::move(row);
                ++rank;
                break;
            }
            const std::uint64_t f = row.front().second;
            const Row& piv = pivots[lead];
            Row out;
            std::size_t a = 0, b = 0;
            while (a < row.size() || b < piv.size()) {
                if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
                    out.push_back(row[a++]);
                } else if (a == row.size() || piv[b].first < row[a].first) {
                    out.emplace_back(piv[b].first, (p - piv[b].second * f % p) % p);
                    ++b;
                } else {
                    const std::uint64_t v = (row[a].second + p - piv[b].second * f % p) % p;
                    if (v)
                        out.emplace_back(row[a].first, v);
                    ++a;
                    ++b;
                }
            }
            row = std::move(out);
        }
    }
    return rank;
}

std::vector<std::vector<BigInt>> to_dense(const SparseIntMatrix& m)
{
    std::vector<std::vector<BigInt>> d(m.rows, std::vector<BigInt>(m.cols));
    for (const Triplet& t : m.entries)
        d.at(t.row).at(t.col) += t.value;
    return d;
}

SparseIntMatrix read_triplets(std::istream& in)
{
    SparseIntMatrix m;
    std::string line;
    bool header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        if (!header) {
            if (!(ls >> m.rows >> m.cols))
                throw Error("triplet header must be 'rows cols'");
            header = true;
            continue;
        }
        Triplet t{};
        if (!(ls >> t.row >> t.col >> t.value))
            throw Error("malformed triplet on line " + std::to_string(lineno));
        if (t.row >= m.rows || t.col >= m.cols)
            throw Error("triplet outside matrix shape on line " + std::to_string(lineno));
        m.entries.push_back(t);
    }
    if (!header)
        throw Error("empty triplet input");
    return m;
}

void write_triplets(std::ostream& out, const SparseIntMatrix& m)
{
    out << m.rows << ' ' << m.cols << '\n';
    for (const Triplet& t : m.entries)
        out << t.row << ' ' << t.col << ' ' << t.value << '\n';
}

}  // namespace posetlab
