#include "qfock/serialize.hpp"

#include <sstream>

namespace qfock {

std::string exponent_key(const std::vector<int>& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  return os.str();
}

std::vector<int> parse_exponent_key(const std::string& s) {
  if (s.empty()) return {};
  return parse_int_list(s);
}

Json to_json(const RingElem& x) { return x.to_string(); }
RingElem ring_from_json(const Json& j) { return parse_ring_elem(j.get<std::string>()); }

Json to_json(const CharPoly& c) {
  Json j = Json::object();
  for (const auto& [e, m] : c) j[exponent_key(e)] = std::to_string(m);
  return j;
}

CharPoly charpoly_from_json(const Json& j) {
  CharPoly c;
  for (const auto& [k, v] : j.items()) c[parse_exponent_key(k)] = std::stol(v.get<std::string>());
  return c;
}

Json to_json(const GradedChar& g) {
  Json j = Json::object();
  for (const auto& [d, c] : g) j[std::to_string(d)] = to_json(c);
  return j;
}

GradedChar graded_from_json(const Json& j) {
  GradedChar g;
  for (const auto& [k, v] : j.items()) g[std::stoi(k)] = charpoly_from_json(v);
  return g;
}

Json to_json(const PolyVector& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"monomial", e}, {"coefficient", c.to_string()}});
  return {{"nvars", f.nvars()}, {"terms", terms}};
}

PolyVector poly_from_json(const Json& j) {
  PolyVector f(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms"))
    f.add_term(t.at("monomial").get<Exponent>(), ring_from_json(t.at("coefficient")));
  return f;
}

Json to_json(const WedgeVec& v) {
  Json a = Json::array();
  for (const auto& [w, c] : v) a.push_back({{"word", w}, {"coefficient", c.to_string()}});
  return a;
}

WedgeVec wedge_from_json(const Json& j) {
  WedgeVec v;
  for (const auto& t : j) add_to(v, t.at("word").get<Word>(), ring_from_json(t.at("coefficient")));
  return v;
}

Json to_json(const RelationReport& r) {
  Json fam = Json::array();
  for (const auto& f : r.families)
    fam.push_back({{"family", f.family}, {"status", f.pass ? "PASS" : "FAIL"}, {"detail", f.detail}});
  Json j{{"families", fam}, {"centralScalar", r.central_scalar}};
  j["central"] = r.central ? Json(r.central->to_string()) : Json(nullptr);
  j["status"] = r.pass() ? "PASS" : "FAIL";
  return j;
}

RelationReport relation_report_from_json(const Json& j) {
  RelationReport r;
  for (const auto& f : j.at("families"))
    r.families.push_back({f.at("family").get<std::string>(), f.at("status").get<std::string>() == "PASS",
                          f.at("detail").get<std::string>()});
  r.central_scalar = j.at("centralScalar").get<bool>();
  if (!j.at("central").is_null()) r.central = ring_from_json(j.at("central"));
  return r;
}

Json to_json(const DecompReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"strip", e.theta},
                       {"kernelStrip", e.kernel_strip},
                       {"lambda", e.lambda},
                       {"grade", e.grade},
                       {"dim", e.dim},
                       {"character", to_json(e.character)}});
  return {{"n", r.n},
          {"M", r.M},
          {"degree", r.k},
          {"entries", entries},
          {"quotientDim", r.quotient_dim},
          {"imageRank", r.image_rank},
          {"checks",
           {{"wellDefined", r.well_defined},
            {"surjective", r.surjective},
            {"dimensionMatch", r.dimension_match},
            {"intertwines", r.intertwines},
            {"stripsMatch", r.strips_match},
            {"gradesMatch", r.grades_match}}},
          {"details", r.details},
          {"status", r.match() ? "MATCH" : "MISMATCH"}};
}

DecompReport decomp_report_from_json(const Json& j) {
  DecompReport r;
  r.n = j.at("n").get<int>();
  r.M = j.at("M").get<int>();
  r.k = j.at("degree").get<int>();
  for (const auto& e : j.at("entries")) {
    DecompEntry x;
    x.theta = e.at("strip").get<BorderStrip>();
    x.kernel_strip = e.at("kernelStrip").get<BorderStrip>();
    x.lambda = e.at("lambda").get<std::vector<int>>();
    x.grade = e.at("grade").get<int>();
    x.dim = e.at("dim").get<int>();
    x.character = charpoly_from_json(e.at("character"));
    r.entries.push_back(std::move(x));
  }
  r.quotient_dim = j.at("quotientDim").get<int>();
  r.image_rank = j.at("imageRank").get<int>();
  const Json& c = j.at("checks");
  r.well_defined = c.at("wellDefined").get<bool>();
  r.surjective = c.at("surjective").get<bool>();
  r.dimension_match = c.at("dimensionMatch").get<bool>();
  r.intertwines = c.at("intertwines").get<bool>();
  r.strips_match = c.at("stripsMatch").get<bool>();
  r.grades_match = c.at("gradesMatch").get<bool>();
  r.details = j.at("details").get<std::vector<std::string>>();
  return r;
}

bool operator==(const DecompEntry& a, const DecompEntry& b) {
  return a.lambda == b.lambda && a.theta == b.theta && a.kernel_strip == b.kernel_strip && a.grade == b.grade &&
         a.dim == b.dim && a.character == b.character;
}

bool operator==(const DecompReport& a, const DecompReport& b) {
  return a.n == b.n && a.M == b.M && a.k == b.k && a.entries == b.entries && a.quotient_dim == b.quotient_dim &&
         a.image_rank == b.image_rank && a.well_defined == b.well_defined && a.surjective == b.surjective &&
         a.dimension_match == b.dimension_match && a.intertwines == b.intertwines &&
         a.strips_match == b.strips_match && a.grades_match == b.grades_match && a.details == b.details;
}

bool operator==(const RelationReport& a, const RelationReport& b) {
  if (a.families.size() != b.families.size() || a.central != b.central || a.central_scalar != b.central_scalar)
    return false;
  for (std::size_t i = 0; i < a.families.size(); ++i) {
    const auto &x = a.families[i], &y = b.families[i];
    if (x.family != y.family || x.pass != y.pass || x.detail != y.detail) return false;
  }
  return true;
}

}  // namespace qfock
