#include "posetlab/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace posetlab {

void FinitePoset::check_size(std::size_t n)
{
    if (n > max_elements)
        throw Error("poset with " + std::to_string(n) + " elements exceeds the order-matrix limit of " +
                    std::to_string(max_elements));
}

void FinitePoset::validate() const
{
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!up_[i].test(i))
            throw Error("relation is not reflexive at " + labels_[i]);
        for (std::size_t j = up_[i].find_first(); j != Bitset::npos; j = up_[i].find_next(j)) {
            if (j != i && up_[j].test(i))
                throw Error("relation is not antisymmetric: " + labels_[i] + " / " + labels_[j]);
            if (!up_[j].is_subset_of(up_[i]))
                throw Error("relation is not transitive through " + labels_[i] + " <= " + labels_[j]);
        }
    }
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& covers)
{
    const std::size_t n = labels.size();
    check_size(n);
    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<std::size_t> indegree(n, 0);
    for (auto [a, b] : covers) {
        if (a >= n || b >= n)
            throw Error("cover refers to an unknown element");
        succ[a].push_back(b);
        ++indegree[b];
    }
    // Kahn order, then propagate up-sets in reverse.
    std::vector<std::size_t> order;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0)
            stack.push_back(i);
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (std::size_t w : succ[v])
            if (--indegree[w] == 0)
                stack.push_back(w);
    }
    if (order.size() != n)
        throw Error("cover relation contains a cycle");
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.up_.assign(n, Bitset(n));
    p.down_.assign(n, Bitset(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        p.up_[*it].set(*it);
        for (std::size_t w : succ[*it])
            p.up_[*it] |= p.up_[w];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = p.up_[i].find_first(); j != Bitset::npos; j = p.up_[i].find_next(j))
            p.down_[j].set(i);
    p.validate();
    return p;
}

std::size_t FinitePoset::index_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw Error("unknown element " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = up_[i].find_first(); j != Bitset::npos; j = up_[i].find_next(j)) {
            if (j == i)
                continue;
            // Nothing strictly between i and j.
            Bitset between = up_[i] & down_[j];
            if (between.count() == 2)
                out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<std::size_t> FinitePoset::linear_extension() const
{
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Down-set sizes strictly increase along strict relations.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return down_[a].count() < down_[b].count(); });
    return order;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (up_[i].count() == 1)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (down_[i].count() == 1)
            out.push_back(i);
    return out;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& elements) const
{
    const std::size_t m = elements.size();
    FinitePoset p;
    p.labels_.reserve(m);
    for (std::size_t e : elements)
        p.labels_.push_back(labels_.at(e));
    p.up_.assign(m, Bitset(m));
    p.down_.assign(m, Bitset(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (up_[elements[a]].test(elements[b])) {
                p.up_[a].set(b);
                p.down_[b].set(a);
            }
    return p;
}

FinitePoset FinitePoset::induced(const Bitset& elements) const
{
    return induced(members(elements));
}

Bitset make_bitset(std::size_t n, const std::vector<std::size_t>& ids)
{
    Bitset b(n);
    for (std::size_t i : ids)
        b.set(i);
    return b;
}

std::vector<std::size_t> members(const Bitset& b)
{
    std::vector<std::size_t> out;
    out.reserve(b.count());
    for (std::size_t i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
        out.push_back(i);
    return out;
}

namespace {

/// Some y in `set` with set contained in cone(y).
bool has_extreme(const Bitset& set, const std::function<const Bitset&(std::size_t)>& cone)
{
    if (set.none())
        return false;
    const std::vector<std::size_t> m = members(set);
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        if (set.is_subset_of(cone(*it)))
            return true;
    return false;
}

}  // namespace

std::vector<std::size_t> beat_point_core(const FinitePoset& p)
{
    const std::size_t n = p.size();
    Bitset alive(n);
    alive.set();
    const auto down = [&](std::size_t y) -> const Bitset& { return p.down(y); };
    const auto up = [&](std::size_t y) -> const Bitset& { return p.up(y); };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (!alive.test(x) || alive.count() == 1)
                continue;
            Bitset below = p.down(x) & alive;
            below.reset(x);
            Bitset above = p.up(x) & alive;
            above.reset(x);
            if (has_extreme(below, down) || has_extreme(above, up)) {
                alive.reset(x);
                changed = true;
            }
        }
    }
    return members(alive);
}

FinitePoset opposite(const FinitePoset& p)
{
    return FinitePoset::from_relation(p.labels(), [&](std::size_t i, std::size_t j) { return p.leq(j, i); });
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q)
{
    const std::size_t m = q.size();
    std::vector<std::string> labels;
    labels.reserve(p.size() * m);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
    return FinitePoset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
        return p.leq(a / m, b / m) && q.leq(a % m, b % m);
    });
}

FinitePoset down_set(const FinitePoset& p, std::size_t x)
{
    if (x >= p.size())
        throw Error("down_set: unknown element");
    return p.induced(p.down(x));
}

FinitePoset up_set(const FinitePoset& p, std::size_t x)
{
    if (x >= p.size())
        throw Error("up_set: unknown element");
    return p.induced(p.up(x));
}

FinitePoset chain_poset(std::size_t length)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i <= length; ++i)
        labels.push_back("x" + std::to_string(i));
    return FinitePoset::from_relation(std::move(labels), [](std::size_t i, std::size_t j) { return i <= j; });
}

FinitePoset antichain_poset(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("a" + std::to_string(i));
    return FinitePoset::from_relation(std::move(labels), [](std::size_t i, std::size_t j) { return i == j; });
}

namespace {

std::string subset_label(unsigned bits, int n)
{
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < n; ++i) {
        if ((bits >> i) & 1U) {
            if (!first)
                s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
    }
    return s + "}";
}

FinitePoset subset_lattice(int n, bool proper)
{
    if (n < 0 || n > 13)
        throw Error("boolean lattice rank out of range");
    std::vector<unsigned> sets;
    const unsigned full = (1U << n) - 1;
    for (unsigned b = 0; b <= full; ++b)
        if (!proper || (b != 0 && b != full))
            sets.push_back(b);
    std::stable_sort(sets.begin(), sets.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::string> labels;
    for (unsigned b : sets)
        labels.push_back(subset_label(b, n));
    return FinitePoset::from_relation(std::move(labels), [&](std::size_t i, std::size_t j) {
        return (sets[i] & ~sets[j]) == 0;
    });
}

}  // namespace

FinitePoset proper_boolean_lattice(int n)
{
    return subset_lattice(n, true);
}

FinitePoset boolean_lattice(int n)
{
    return subset_lattice(n, false);
}

PosetMap::PosetMap(const FinitePoset& source, const FinitePoset& target, std::vector<std::size_t> assignment)
    : source_(&source), target_(&target), assignment_(std::move(assignment))
{
    if (assignment_.size() != source.size())
        throw Error("poset map must assign every source element");
    for (std::size_t y : assignment_)
        if (y >= target.size())
            throw Error("poset map assigns an element outside the target");
    if (auto w = order_violation(source, target, assignment_))
        throw Error("map is not order-preserving: " + source.label(w->x) + " <= " + source.label(w->y) +
                    " but images are not comparable that way");
}

PosetMap PosetMap::identity(const FinitePoset& p)
{
    std::vector<std::size_t> id(p.size());
    std::iota(id.begin(), id.end(), std::size_t{0});
    return PosetMap(p, p, std::move(id));
}

std::optional<OrderWitness> PosetMap::order_violation(const FinitePoset& source, const FinitePoset& target,
                                                      const std::vector<std::size_t>& assignment)
{
    for (std::size_t x = 0; x < source.size(); ++x) {
        const Bitset& up = source.up(x);
        for (std::size_t y = up.find_first(); y != Bitset::npos; y = up.find_next(y))
            if (!target.leq(assignment[x], assignment[y]))
                return OrderWitness{x, y};
    }
    return std::nullopt;
}

FinitePoset fiber_down(const PosetMap& f, std::size_t x, std::vector<std::size_t>* elements)
{
    if (x >= f.target().size())
        throw Error("fiber_down: unknown target element");
    std::vector<std::size_t> keep;
    for (std::size_t s = 0; s < f.source().size(); ++s)
        if (f.target().leq(f(s), x))
            keep.push_back(s);
    if (elements)
        *elements = keep;
    return f.source().induced(keep);
}

FinitePoset fiber_up(const PosetMap& f, std::size_t x, std::vector<std::size_t>* elements)
{
    if (x >= f.target().size())
        throw Error("fiber_up: unknown target element");
    std::vector<std::size_t> keep;
    for (std::size_t s = 0; s < f.source().size(); ++s)
        if (f.target().leq(x, f(s)))
            keep.push_back(s);
    if (elements)
        *elements = keep;
    return f.source().induced(keep);
}

Monotonicity is_monotone(const PosetMap& f)
{
    if (!f.endomorphic() && !(f.source() == f.target()))
        throw Error("is_monotone expects an endomorphism");
    Monotonicity m{true, true};
    for (std::size_t x = 0; x < f.source().size(); ++x) {
        m.decreasing = m.decreasing && f.source().leq(f(x), x);
        m.increasing = m.increasing && f.source().leq(x, f(x));
    }
    return m;
}

ClosureRetraction closure_retraction(const FinitePoset& p, const PosetMap& c)
{
    if (!(c.source() == p) || !(c.target() == p))
        throw RetractionError(RetractionFailure::NotEndomorphic, 0, "retraction must be an endomorphism of p");
    for (std::size_t x = 0; x < p.size(); ++x)
        if (c(c(x)) != c(x))
            throw RetractionError(RetractionFailure::NotIdempotent, x,
                                  "map is not idempotent at " + p.label(x));
    const Monotonicity dir = is_monotone(c);
    if (dir.neither()) {
        std::size_t w = 0;
        // Report an element where the decreasing direction fails.
        for (std::size_t x = 0; x < p.size(); ++x)
            if (!p.leq(c(x), x)) {
                w = x;
                break;
            }
        throw RetractionError(RetractionFailure::NotMonotone, w,
                              "map is neither decreasing nor increasing (witness " + p.label(w) + ")");
    }
    ClosureRetraction r;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (c(x) == x)
            r.image_elements.push_back(x);
    r.image = p.induced(r.image_elements);
    r.direction = dir;
    return r;
}

std::optional<std::size_t> cone_point(const FinitePoset& p)
{
    for (std::size_t x = 0; x < p.size(); ++x)
        if ((p.up(x) | p.down(x)).count() == p.size())
            return x;
    return std::nullopt;
}

}  // namespace posetlab
