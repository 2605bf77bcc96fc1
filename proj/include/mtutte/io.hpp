#pragma once

#include <json.hpp>

#include "mtutte/dm.hpp"
#include "mtutte/graph.hpp"
#include "mtutte/toric.hpp"
#include "mtutte/zonotope.hpp"

namespace mtutte {

using nlohmann::json;

// Integers travel as JSON numbers or decimal strings; everything is
// emitted as strings so values of any size survive a round trip.
Int json_to_int(const json& j);
json int_to_json(const Int& v);
Rat json_to_rat(const json& j);  // "p/q" or integer forms
json rat_to_json(const Rat& v);

// {"free_rank": n, "torsion": [q...], "vectors": [[...] ...]}. The
// torsion moduli may be any integers >= 2; the group is normalized to
// invariant-factor form and the coordinates are converted along.
CharacterList parse_character_list(const json& doc);

// {"vertices": k, "edges": [[u, v, label] ...]} with label optional.
LabeledGraph parse_graph(const json& doc);

json character_list_to_json(const CharacterList& x);

json bivar_to_json(const BivarPoly& p);
BivarPoly bivar_from_json(const json& j);

json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);

json series_to_json(const HilbertSeries& s);
HilbertSeries series_from_json(const json& j);

json stratification_to_json(const ZonotopeStratification& s);
ZonotopeStratification stratification_from_json(const json& j);

json points_to_json(const std::vector<std::vector<Int>>& pts);

// Layers (dim, direction basis, basepoint and component as exact
// fractions, mobius, support) plus the cover relations of the poset.
json poset_to_json(const LayerPoset& poset);

}  // namespace mtutte
