#pragma once

/**
 * Finite posets stored as a full order matrix (one bitset row per element
 * for the up-set and one for the down-set), poset maps, fibres and the
 * standard constructions (opposite, product, down/up sets, induced
 * subposets).
 */

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "posetlab/error.hpp"

namespace posetlab {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

class FinitePoset {
public:
    /// Largest poset whose order matrix we are willing to materialise.
    static constexpr std::size_t max_elements = std::size_t{1} << 14;

    FinitePoset() = default;

    /// `leq(i, j)` is queried for every ordered pair; the result must be a
    /// partial order (checked, Error with a witness otherwise).
    template <class Leq>
    static FinitePoset from_relation(std::vector<std::string> labels, Leq&& leq)
    {
        const std::size_t n = labels.size();
        check_size(n);
        FinitePoset p;
        p.labels_ = std::move(labels);
        p.up_.assign(n, Bitset(n));
        p.down_.assign(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (leq(i, j)) {
                    p.up_[i].set(j);
                    p.down_[j].set(i);
                }
        p.validate();
        return p;
    }

    /// Order generated by the reflexive-transitive closure of the covers.
    static FinitePoset from_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& covers);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Index of a label; Error if absent.
    std::size_t index_of(const std::string& label) const;

    bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
    bool less(std::size_t i, std::size_t j) const { return i != j && up_[i].test(j); }
    bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

    /// {j : i <= j}
    const Bitset& up(std::size_t i) const { return up_[i]; }
    /// {j : j <= i}
    const Bitset& down(std::size_t i) const { return down_[i]; }

    /// Cover pairs (i, j), i < j with nothing strictly between, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;
    /// Elements sorted so that i < j in the order implies i comes first.
    std::vector<std::size_t> linear_extension() const;
    std::vector<std::size_t> maximal_elements() const;
    std::vector<std::size_t> minimal_elements() const;

    /// Induced subposet on `elements` (kept in the given order).
    FinitePoset induced(const std::vector<std::size_t>& elements) const;
    FinitePoset induced(const Bitset& elements) const;

    friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

private:
    static void check_size(std::size_t n);
    void validate() const;

    std::vector<std::string> labels_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
};

FinitePoset opposite(const FinitePoset& p);
/// Product order; element (i, j) has index i * |q| + j and label "(a,b)".
FinitePoset product(const FinitePoset& p, const FinitePoset& q);
FinitePoset down_set(const FinitePoset& p, std::size_t x);
FinitePoset up_set(const FinitePoset& p, std::size_t x);
/// Chain x0 < x1 < ... < x_{length}.
FinitePoset chain_poset(std::size_t length);
FinitePoset antichain_poset(std::size_t n);
/// Proper nonempty subsets of an `n`-set ordered by inclusion.
FinitePoset proper_boolean_lattice(int n);
/// All subsets of an `n`-set ordered by inclusion.
FinitePoset boolean_lattice(int n);

/// Bitset of the given indices.
Bitset make_bitset(std::size_t n, const std::vector<std::size_t>& members);
std::vector<std::size_t> members(const Bitset& b);

/// Repeatedly deletes beat points (strictly-lower set with a maximum or
/// strictly-upper set with a minimum), scanning in index order. Delta of the
/// result is a deformation retract of Delta(p). Kept indices, increasing.
std::vector<std::size_t> beat_point_core(const FinitePoset& p);

struct OrderWitness {
    std::size_t x;
    std::size_t y;
};

class PosetMap {
public:
    /// Validates order preservation; throws Error naming the witness pair.
    PosetMap(const FinitePoset& source, const FinitePoset& target, std::vector<std::size_t> assignment);

    static PosetMap identity(const FinitePoset& p);

    const FinitePoset& source() const { return *source_; }
    const FinitePoset& target() const { return *target_; }
    std::size_t operator()(std::size_t x) const { return assignment_[x]; }
    const std::vector<std::size_t>& assignment() const { return assignment_; }
    bool endomorphic() const { return source_ == target_; }

    /// First pair x <= y with f(x) not <= f(y), if any.
    static std::optional<OrderWitness> order_violation(const FinitePoset& source, const FinitePoset& target,
                                                       const std::vector<std::size_t>& assignment);

private:
    const FinitePoset* source_;
    const FinitePoset* target_;
    std::vector<std::size_t> assignment_;
};

/// Induced subposet of the source on {s : f(s) <= x}; `elements` receives
/// the source indices in increasing order.
FinitePoset fiber_down(const PosetMap& f, std::size_t x, std::vector<std::size_t>* elements = nullptr);
/// Induced subposet of the source on {s : f(s) >= x}.
FinitePoset fiber_up(const PosetMap& f, std::size_t x, std::vector<std::size_t>* elements = nullptr);

struct Monotonicity {
    bool decreasing = false;  // f(x) <= x everywhere
    bool increasing = false;  // f(x) >= x everywhere
    bool neither() const { return !decreasing && !increasing; }
};

Monotonicity is_monotone(const PosetMap& f);

/// Certificate that |p| deformation retracts onto the image of c.
struct ClosureRetraction {
    FinitePoset image;
    /// Source indices of the image elements, increasing.
    std::vector<std::size_t> image_elements;
    Monotonicity direction;
};

enum class RetractionFailure { NotEndomorphic, NotIdempotent, NotMonotone };

class RetractionError : public Error {
public:
    RetractionError(RetractionFailure kind, std::size_t witness, const std::string& what)
        : Error(what), kind_(kind), witness_(witness) {}
    RetractionFailure kind() const { return kind_; }
    std::size_t witness() const { return witness_; }

private:
    RetractionFailure kind_;
    std::size_t witness_;
};

/// Checks that c is an idempotent, monotone endomorphism of p (order
/// preservation is already guaranteed by PosetMap) and returns its image.
ClosureRetraction closure_retraction(const FinitePoset& p, const PosetMap& c);

/// Element comparable to every other element, if one exists.
std::optional<std::size_t> cone_point(const FinitePoset& p);

}  // namespace posetlab
