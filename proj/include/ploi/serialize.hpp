#pragma once

// JSON forms of maps and reports. Fractions are always strings "p/q".

#include <string_view>

#include <json.hpp>

#include "ploi/classify.hpp"
#include "ploi/construct.hpp"
#include "ploi/orbitals.hpp"
#include "ploi/slopes.hpp"
#include "ploi/split.hpp"
#include "ploi/towers.hpp"
#include "ploi/words.hpp"

namespace ploi {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Interval& a);
// {"breakpoints": [["x", "y"], ...]}
Json to_json(const PLMap& f);
Json to_json(const SignedOrbital& s);
Json to_json(const Tower& t);
Json to_json(const DepthReport& r);
Json to_json(const BalanceVerdict& v);
Json to_json(const SlopePair& p);
Json to_json(const LatticeVerdict& v);
Json to_json(const CForm& c);
Json to_json(const DerivedReport& r);
Json to_json(const WordBall& b);
Json to_json(const GammaSet& s);
Json to_json(const DepthTaggedPiece& p);
Json to_json(const SplitTraceStep& s);
Json to_json(const SplitSearchResult& r);
Json to_json(const StructureExpr& e);
Json to_json(const CertNode& n);
Json to_json(const DecompositionCert& c);
Json to_json(const ClassificationReport& r);

// Accepts {"breakpoints": [...]} or a bare list of [x, y] pairs; each
// coordinate is a "p/q" string or an integer. Throws ParseError.
PLMap plmap_from_json(const Json& j);
PLMap parse_plmap_literal(std::string_view text);

}  // namespace ploi
