// JSON forms of reports and algebraic objects.  Coefficients are strings in
// the RingElem::to_string grammar; exponent vectors are "a,b,c" keys.
#pragma once

#include <json.hpp>

#include "qfock/decomp.hpp"

namespace qfock {

using Json = nlohmann::ordered_json;

Json to_json(const RingElem& x);
RingElem ring_from_json(const Json& j);

Json to_json(const CharPoly& c);
CharPoly charpoly_from_json(const Json& j);
Json to_json(const GradedChar& g);
GradedChar graded_from_json(const Json& j);

Json to_json(const PolyVector& f);
PolyVector poly_from_json(const Json& j);

Json to_json(const WedgeVec& v);
WedgeVec wedge_from_json(const Json& j);

Json to_json(const RelationReport& r);
RelationReport relation_report_from_json(const Json& j);

Json to_json(const DecompReport& r);
DecompReport decomp_report_from_json(const Json& j);

bool operator==(const DecompEntry& a, const DecompEntry& b);
bool operator==(const DecompReport& a, const DecompReport& b);
bool operator==(const RelationReport& a, const RelationReport& b);

std::string exponent_key(const std::vector<int>& e);
std::vector<int> parse_exponent_key(const std::string& s);

}  // namespace qfock
