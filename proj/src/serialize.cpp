#include "ploi/serialize.hpp"

#include "ploi/error.hpp"

namespace ploi {

namespace {

template <typename T>
Json list(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json mpz_json(const mpz_class& z) { return z.get_str(); }

std::string end_name(End e) { return e == End::Left ? "left" : "right"; }

Rational coordinate(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("breakpoint coordinate must be a \"p/q\" string or an integer, got " + j.dump());
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Interval& a) { return Json::array({a.left().str(), a.right().str()}); }

Json to_json(const PLMap& f) {
  Json pts = Json::array();
  for (const auto& p : f.points()) pts.push_back(Json::array({p.x.str(), p.y.str()}));
  return Json{{"breakpoints", std::move(pts)}};
}

Json to_json(const SignedOrbital& s) { return Json{{"orbital", to_json(s.orbital)}, {"signature", to_json(s.signature)}}; }

Json to_json(const Tower& t) { return Json{{"height", t.height()}, {"entries", list(t.entries)}}; }

Json to_json(const DepthReport& r) {
  return Json{{"height", r.height},
              {"radius", r.radius},
              {"exemplary", r.exemplary},
              {"witness", to_json(r.witness)},
              {"summary", r.summary}};
}

Json to_json(const BalanceVerdict& v) {
  Json j{{"status", v.status == BalanceStatus::BalancedUpToRadius ? "BalancedUpToRadius" : "ImbalancedWitness"},
         {"radius", v.radius},
         {"max_subset", v.max_subset}};
  if (v.witness) {
    j["witness"] = Json{{"element_orbital", to_json(v.witness->element_orbital)},
                        {"group_orbital", to_json(v.witness->group_orbital)},
                        {"realized_end", end_name(v.witness->realized)},
                        {"subgroup", list(v.witness->subgroup)}};
  }
  j["note"] = v.note;
  return j;
}

Json to_json(const SlopePair& p) { return Json{{"left", p.left.str()}, {"right", p.right.str()}}; }

Json to_json(const LatticeVerdict& v) {
  Json j{{"kind", to_string(v.kind)}, {"rank", v.rank}};
  j["generator"] = v.generator ? to_json(*v.generator) : Json(nullptr);
  j["imbalanced"] = v.imbalanced;
  Json base = Json::array();
  for (const auto& b : v.base) base.push_back(mpz_json(b));
  j["base"] = std::move(base);
  Json rows = Json::array();
  for (const auto& row : v.basis) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(mpz_json(x));
    rows.push_back(std::move(r));
  }
  j["exponent_basis"] = std::move(rows);
  return j;
}

Json to_json(const CForm& c) { return Json{{"exponent", c.exponent}, {"residue", to_json(c.residue)}}; }

Json to_json(const DerivedReport& r) {
  Json j{{"radius", r.radius}, {"lower_bound", r.lower_bound}};
  j["vanishing_level"] = r.vanishing_level ? Json(*r.vanishing_level) : Json(nullptr);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["witness_expression"] = r.witness_expression;
  j["level_sizes"] = r.level_sizes;
  j["level_width"] = r.level_width;
  j["truncated"] = r.truncated;
  j["summary"] = r.summary;
  return j;
}

Json to_json(const WordBall& b) {
  Json els = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    Json e = to_json(b.elements[i]);
    e["word"] = word_string(b.words[i]);
    els.push_back(std::move(e));
  }
  return Json{{"radius", b.radius}, {"size", b.size()}, {"elements", std::move(els)}};
}

Json to_json(const GammaSet& s) {
  return Json{{"source_radius", s.source_radius}, {"size", s.pieces.size()}, {"pieces", list(s.pieces)}};
}

Json to_json(const DepthTaggedPiece& p) {
  return Json{{"orbital", to_json(p.orbital)}, {"g_depth", p.g_depth}, {"piece", to_json(p.piece)}};
}

Json to_json(const SplitTraceStep& s) {
  Json j{{"step", s.step}, {"length", s.length}};
  j["leading_orbital"] = s.leading ? to_json(*s.leading) : Json(nullptr);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json to_json(const SplitSearchResult& r) {
  return Json{{"element", to_json(r.element)},
              {"word", word_string(r.word)},
              {"leading_shrinks", r.leading_shrinks},
              {"trace", list(r.trace)}};
}

Json to_json(const StructureExpr& e) { return e.str(); }

Json to_json(const CertNode& n) {
  Json j{{"orbital", to_json(n.orbital)}, {"expr", n.expr.str()}, {"top", to_json(n.top)}};
  j["synthesized_top"] = n.synthesized_top;
  j["domain"] = n.domain ? to_json(*n.domain) : Json(nullptr);
  Json members = Json::array();
  for (std::size_t i = 0; i < n.members.size(); ++i)
    members.push_back(Json{{"piece", to_json(n.members[i])}, {"exponent", n.exponents[i]}});
  j["members"] = std::move(members);
  j["wreath_window"] = n.window;
  j["wreath_verified"] = n.wreath_verified;
  j["children"] = list(n.children);
  return j;
}

Json to_json(const DecompositionCert& c) {
  return Json{{"expr", c.expr.str()},
              {"derived_length", expr_derived_length(c.expr)},
              {"radius", c.radius},
              {"orbital_tree", list(c.roots)}};
}

Json to_json(const ClassificationReport& r) {
  Json j{{"status", r.status == ClassificationStatus::Classified ? "Classified" : "Obstructed"},
         {"radius", r.radius},
         {"summary", r.summary}};
  if (r.status == ClassificationStatus::Obstructed) {
    j["obstruction_kind"] = r.obstruction_kind;
    j["obstruction"] = r.obstruction;
    if (r.chain) j["transition_chain"] = Json::array({to_json(r.chain->first), to_json(r.chain->second)});
    if (r.imbalance) {
      BalanceVerdict v;
      v.status = BalanceStatus::ImbalancedWitness;
      v.witness = r.imbalance;
      j["imbalance_witness"] = to_json(v)["witness"];
    }
    if (!r.tower_growth.empty()) j["tower_growth"] = r.tower_growth;
    return j;
  }
  j["expr"] = r.cert ? r.cert->expr.str() : "1";
  j["derived_length"] = r.derived_length;
  j["embedding_target"] = r.embedding_target;
  j["gamma_pieces"] = r.gamma_pieces;
  if (r.towers) j["towers"] = to_json(*r.towers);
  if (r.derived) j["derived"] = to_json(*r.derived);
  j["cross_checks_agree"] = r.cross_checks_agree;
  if (r.cert) j["certificate"] = to_json(*r.cert);
  return j;
}

PLMap plmap_from_json(const Json& j) {
  const Json* pts = &j;
  if (j.is_object()) {
    if (!j.contains("breakpoints")) throw ParseError("map object needs a \"breakpoints\" list");
    pts = &j.at("breakpoints");
  }
  if (!pts->is_array()) throw ParseError("breakpoints must be a list of [x, y] pairs");
  std::vector<Breakpoint> out;
  for (const auto& p : *pts) {
    if (!p.is_array() || p.size() != 2) throw ParseError("breakpoint must be a pair [x, y], got " + p.dump());
    out.push_back({coordinate(p[0]), coordinate(p[1])});
  }
  try {
    return PLMap(std::move(out));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

PLMap parse_plmap_literal(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed map literal: ") + e.what());
  }
  return plmap_from_json(j);
}

}  // namespace ploi
