#pragma once

/**
 * JSON and DOT serialisation of graphs, posets, complexes, homology and
 * check reports. All output is deterministic for identical input.
 */

#include <string>

#include <json.hpp>

#include "posetlab/complex.hpp"
#include "posetlab/graph_posets.hpp"
#include "posetlab/homology.hpp"
#include "posetlab/multigraph.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

using Json = nlohmann::ordered_json;

/// {"vertices":[int], "edges":[[id,u,v]]}
Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);
std::string graph_to_dot(const Multigraph& g);

/// {"elements":[label], "covers":[[i,j]]}
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);
/// Hasse diagram, bottom to top.
std::string poset_to_dot(const FinitePoset& p);

/// {"vertices":[id], "facets":[[id]]}
Json complex_to_json(const SimplicialComplex& k);

/// [{"degree":d, "betti":b, "torsion":[...]}] for degrees -1 .. top.
Json homology_to_json(const HomologyResult& h);

/// {"graph":key, "check":name, "status":..., "betti":[...], ...}; betti runs
/// from degree -1 to the last nonzero degree (at least degree 0).
Json report_to_json(const std::string& graph_key, const CheckReport& r);

/// A canonical key, a named graph (rose<k>, theta<k>, dumbbell, cycle<k>;
/// without k: rose2, theta3, cycle3)
/// or a path to a JSON graph file.
Multigraph resolve_graph(const std::string& source);

}  // namespace posetlab
