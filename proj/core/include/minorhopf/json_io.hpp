#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "minorhopf/coalgebra.hpp"
#include "minorhopf/hopf.hpp"
#include "minorhopf/matroid.hpp"
#include "minorhopf/poset.hpp"

namespace minorhopf {

using Json = nlohmann::json;

/// {"ground":["a","b"],"rank":1,"bases":[["a"],["b"]]}; basis label lists
/// follow ground order, the basis list is sorted lexicographically.
Json matroid_to_json(const Matroid& m);

/// Inverse of matroid_to_json; validates the basis axioms and, when a
/// "rank" field is present, that it matches. Throws Errc::ParseError on
/// malformed documents.
Matroid matroid_from_json(const Json& j);

/// [{"coef":"-1/1","matroid":{...}}, ...] in term order.
Json formal_sum_to_json(const FormalSum& x);
Json iso_sum_to_json(const IsoSum& x);

/// {"classes":[...],"phi":[["1/1",...],...],"phi_inv":[...]}.
Json phi_to_json(const PhiResult& result);

Json rational_matrix_to_json(const RationalMatrix& m);

/// Hasse-edge serialization of a weak-order filter with Möbius values
/// from its minimum.
Json filter_to_json(const WeakPoset& poset);

/// Compact one-line text form, e.g. "M(a,b,c,d; r=2; bases {a,c} {a,d})".
std::string matroid_to_text(const Matroid& m);

}  // namespace minorhopf
