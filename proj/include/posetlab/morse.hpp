#pragma once

/**
 * Level functions on finite posets and their descending links. A function
 * certifies contractibility of the order complex when its minimum level is
 * the star of one element, every higher level is an antichain, and every
 * descending link is contractible.
 */

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "posetlab/complex.hpp"
#include "posetlab/graph_posets.hpp"
#include "posetlab/homology.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

using MorseValue = boost::rational<long long>;

struct MorseFunction {
    FinitePoset poset;
    std::vector<MorseValue> value;
};

/// Full subcomplex of Delta(poset) on {y != x comparable to x, value(y) < value(x)};
/// vertex ids are element indices.
SimplicialComplex descending_link(const MorseFunction& mf, std::size_t x);

enum class LinkVerdict { Empty, Contractible, HomologyTrivial, Obstructed };
std::string to_string(LinkVerdict v);

struct LinkReport {
    std::size_t element = 0;
    LinkVerdict verdict = LinkVerdict::Obstructed;
    HomologyResult homology;
    std::optional<Pi1Status> pi1;
    std::optional<std::size_t> cone;
};

struct MorseReport {
    /// Elements above the minimum level, in index order.
    std::vector<LinkReport> links;
    std::vector<std::size_t> sublevel0;
    std::optional<std::size_t> star_center;
    bool levels_are_antichains = true;
    bool all_contractible = true;
    /// Constant function: no links at all.
    bool vacuous = false;

    bool certifies_contractible() const { return star_center.has_value() && levels_are_antichains && all_contractible; }
};

MorseReport morse_verify(const MorseFunction& mf);

/// Levels 0..max_levels-1 with level 0 the star of some element; fewer
/// levels and smaller element indices are tried first. max_levels <= 3,
/// at most 64 elements.
std::optional<MorseFunction> morse_search(const FinitePoset& p, int max_levels);

/// Certificate search on C(G). Any certificate found must agree with the
/// homology, and none may exist without a separating edge. With a separating
/// edge one must be found when `require_certificate` is set.
CheckReport verify_morse(const Multigraph& g, int max_levels = 3, bool require_certificate = true);

}  // namespace posetlab
