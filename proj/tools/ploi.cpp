// ploi: command-line access to maps of [0,1], their orbitals, towers,
// slopes, split pieces and the classification of the groups they generate.

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ploi/classify.hpp"
#include "ploi/construct.hpp"
#include "ploi/error.hpp"
#include "ploi/graph.hpp"
#include "ploi/orbitals.hpp"
#include "ploi/serialize.hpp"
#include "ploi/slopes.hpp"
#include "ploi/split.hpp"
#include "ploi/towers.hpp"
#include "ploi/words.hpp"

namespace {

using namespace ploi;

constexpr int kOk = 0;
constexpr int kObstruction = 1;
constexpr int kError = 2;

struct Options {
  int radius = 2;
  std::size_t cap = kDefaultBallCap;
  std::string format;
  std::string out;
  std::string orbital;
  std::string product;
  std::size_t max_depth = 8;
  std::vector<std::string> args;
};

// Splits on commas that are not nested inside brackets or braces.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> fields(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string f;
  while (std::getline(ss, f, ':')) out.push_back(f);
  return out;
}

long parse_long(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got \"" + s + "\"");
  }
}

PLMap parse_map(const std::string& name) {
  if (name.empty()) throw ParseError("empty map name");
  if (name.front() == '[' || name.front() == '{') return parse_plmap_literal(name);
  if (name == "a1") return alpha1();
  if (name == "a2") return alpha2();
  if (name == "id") return identity();
  auto f = fields(name);
  if (f.size() == 2 && f[0] == "beta") return beta(parse_long(f[1]));
  if (f.size() == 3 && f[0] == "bump") return bump(Interval(Rational::parse(f[1]), Rational::parse(f[2])));
  throw ParseError("unknown map \"" + name + "\" (expected a1, a2, id, beta:k, bump:a:b or a JSON breakpoint list)");
}

GroupSpec parse_group(const std::vector<std::string>& args) {
  std::vector<PLMap> gens;
  std::string label;
  for (const auto& arg : args) {
    for (const auto& item : split_top_level(arg)) {
      auto f = fields(item);
      if (!item.empty() && item.front() != '[' && item.front() != '{' && f.size() == 2 && f[0] == "w") {
        auto g = w_generators(static_cast<int>(parse_long(f[1])));
        gens.insert(gens.end(), g.generators().begin(), g.generators().end());
      } else if (!item.empty() && item.front() != '[' && item.front() != '{' && f.size() == 3 && f[0] == "g") {
        auto g = gn_generators({static_cast<int>(parse_long(f[1])), static_cast<int>(parse_long(f[2]))});
        gens.insert(gens.end(), g.generators().begin(), g.generators().end());
      } else {
        gens.push_back(parse_map(item));
      }
      label += (label.empty() ? "" : ",") + item;
    }
  }
  return GroupSpec(std::move(gens), label);
}

std::vector<PLMap> parse_maps(const std::vector<std::string>& args) {
  std::vector<PLMap> out;
  for (const auto& arg : args)
    for (const auto& item : split_top_level(arg)) out.push_back(parse_map(item));
  return out;
}

std::vector<std::string> names(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& arg : args)
    for (const auto& item : split_top_level(arg)) out.push_back(item);
  return out;
}

std::string map_text(const PLMap& f) {
  std::string s;
  for (const auto& p : f.points()) s += (s.empty() ? "" : " ") + ("(" + p.x.str() + ", " + p.y.str() + ")");
  return s;
}

std::string intervals_text(const std::vector<Interval>& v) {
  std::string s;
  for (const auto& a : v) s += (s.empty() ? "" : " ") + a.str();
  return s.empty() ? "none" : s;
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  int run(const std::string& verb) {
    if (verb == "make") return make();
    if (verb == "eval") return eval_cmd();
    if (verb == "compose") return compose_cmd();
    if (verb == "orbitals") return orbitals();
    if (verb == "towers") return towers();
    if (verb == "depth") return depth();
    if (verb == "balance") return balance();
    if (verb == "phi") return phi_cmd();
    if (verb == "controller") return controller();
    if (verb == "split") return split();
    if (verb == "classify") return classify();
    if (verb == "graph") return graph();
    throw ParseError("unknown verb " + verb);
  }

  const std::string& output() const { return out_; }

 private:
  std::string format(const std::string& fallback) const { return o_.format.empty() ? fallback : o_.format; }

  void require_format(const std::string& f, std::initializer_list<const char*> allowed) const {
    for (const char* a : allowed)
      if (f == a) return;
    throw ParseError("format " + f + " is not available for this command");
  }

  void need_args(std::size_t n, const char* usage) const {
    if (o_.args.size() < n) throw ParseError(std::string("usage: ploi ") + usage);
  }

  Interval orbital_or(const GroupSpec& g) const {
    if (!o_.orbital.empty()) return Interval::parse(o_.orbital);
    auto orbs = group_orbitals(g);
    if (orbs.size() != 1) throw ParseError("the group has " + std::to_string(orbs.size()) + " orbitals; pass --orbital a:b");
    return orbs.front();
  }

  void emit(const Json& j) { out_ = j.dump(2) + "\n"; }
  void emit(std::string s) { out_ = std::move(s); }

  int make() {
    need_args(1, "make NAME...");
    auto maps = parse_maps(o_.args);
    auto ns = names(o_.args);
    std::string f = format("json");
    require_format(f, {"json", "text", "csv", "svg"});
    if (f == "csv" || f == "svg") return graph_of(ns, maps, f);
    if (f == "text") {
      std::string s;
      for (std::size_t i = 0; i < maps.size(); ++i) s += ns[i] + ": " + map_text(maps[i]) + "\n";
      emit(s);
    } else {
      Json j = Json::array();
      for (std::size_t i = 0; i < maps.size(); ++i) {
        Json m = to_json(maps[i]);
        m["name"] = ns[i];
        m["in_F"] = f_membership(maps[i]);
        j.push_back(std::move(m));
      }
      emit(j);
    }
    return kOk;
  }

  int eval_cmd() {
    need_args(2, "eval MAP X");
    PLMap f = parse_map(o_.args[0]);
    Rational x = Rational::parse(o_.args[1]);
    Rational y = eval(f, x);
    std::string fm = format("text");
    require_format(fm, {"text", "json"});
    if (fm == "json") emit(Json{{"x", x.str()}, {"value", y.str()}});
    else emit(y.str() + "\n");
    return kOk;
  }

  int compose_cmd() {
    need_args(1, "compose MAP...");
    auto maps = parse_maps(o_.args);
    PLMap h = compose(std::span<const PLMap>(maps));
    std::string f = format("json");
    require_format(f, {"json", "text", "csv", "svg"});
    if (f == "csv" || f == "svg") return graph_of({"composite"}, {h}, f);
    if (f == "text") emit(map_text(h) + "\n");
    else emit(to_json(h));
    return kOk;
  }

  int orbitals() {
    need_args(1, "orbitals GROUP");
    GroupSpec g = parse_group(o_.args);
    auto orbs = group_orbitals(g);
    WordBall b = ball(g, o_.radius, o_.cap);
    auto chains = find_transition_chains(b.elements);
    std::string f = format("json");
    require_format(f, {"json", "text", "csv"});
    if (f == "csv") {
      std::string s = "kind,owner,left,right\n";
      for (const auto& a : orbs) s += "group,," + a.left().str() + "," + a.right().str() + "\n";
      for (std::size_t i = 0; i < g.size(); ++i)
        for (const auto& a : support(g.generators()[i]))
          s += "generator," + GroupSpec::letter_name(static_cast<int>(i) + 1) + "," + a.left().str() + "," +
               a.right().str() + "\n";
      emit(s);
    } else if (f == "text") {
      std::string s = "group orbitals: " + intervals_text(orbs) + "\n";
      for (std::size_t i = 0; i < g.size(); ++i)
        s += GroupSpec::letter_name(static_cast<int>(i) + 1) + ": " + intervals_text(support(g.generators()[i])) + "\n";
      s += "transition chains at radius " + std::to_string(o_.radius) + ": " + std::to_string(chains.size()) + "\n";
      for (const auto& [p, q] : chains) s += "  " + p.orbital.str() + " / " + q.orbital.str() + "\n";
      emit(s);
    } else {
      Json gens = Json::array();
      for (std::size_t i = 0; i < g.size(); ++i) {
        Json orb = Json::array();
        for (const auto& a : support(g.generators()[i])) orb.push_back(to_json(a));
        gens.push_back(Json{{"letter", GroupSpec::letter_name(static_cast<int>(i) + 1)}, {"orbitals", orb}});
      }
      Json ch = Json::array();
      for (const auto& [p, q] : chains) ch.push_back(Json::array({to_json(p), to_json(q)}));
      Json go = Json::array();
      for (const auto& a : orbs) go.push_back(to_json(a));
      emit(Json{{"group_orbitals", go}, {"generators", gens}, {"radius", o_.radius}, {"transition_chains", ch}});
    }
    return kOk;
  }

  int towers() {
    need_args(1, "towers GROUP");
    GroupSpec g = parse_group(o_.args);
    WordBall b = ball(g, o_.radius, o_.cap);
    std::string f = format("json");
    require_format(f, {"json", "text"});
    if (!o_.orbital.empty()) {
      Interval a = Interval::parse(o_.orbital);
      std::size_t d = orbital_depth(a, b.elements), h = orbital_height(a, b.elements);
      if (f == "text") emit("orbital " + a.str() + ": depth >= " + std::to_string(d) + ", height >= " + std::to_string(h) + "\n");
      else emit(Json{{"orbital", to_json(a)}, {"radius", o_.radius}, {"depth", d}, {"height", h}});
      return kOk;
    }
    Tower t = max_tower(b.elements);
    bool ex = is_exemplary(t);
    if (f == "text") {
      std::string s = "height " + std::to_string(t.height()) + (ex ? " (exemplary)" : " (not exemplary)") + "\n";
      for (const auto& e : t.entries) s += "  " + e.orbital.str() + "\n";
      emit(s);
    } else {
      Json j = to_json(t);
      j["exemplary"] = ex;
      j["radius"] = o_.radius;
      emit(j);
    }
    return kOk;
  }

  int depth() {
    need_args(1, "depth GROUP");
    GroupSpec g = parse_group(o_.args);
    DepthReport r = depth_lower_bound(g, o_.radius, o_.cap);
    std::string f = format("json");
    require_format(f, {"json", "text"});
    if (f == "text") emit(r.summary + "\n");
    else emit(to_json(r));
    return r.exemplary ? kOk : kObstruction;
  }

  int balance() {
    need_args(1, "balance GROUP");
    GroupSpec g = parse_group(o_.args);
    BalanceVerdict v = balance_check(g, o_.radius, 2, o_.cap);
    std::string f = format("json");
    require_format(f, {"json", "text"});
    if (f == "text") emit(v.note + "\n");
    else emit(to_json(v));
    return v.status == BalanceStatus::BalancedUpToRadius ? kOk : kObstruction;
  }

  int phi_cmd() {
    need_args(1, "phi GROUP [--orbital a:b]");
    GroupSpec g = parse_group(o_.args);
    auto orbs = group_orbitals(g);
    std::vector<Interval> targets;
    if (!o_.orbital.empty()) targets.push_back(Interval::parse(o_.orbital));
    else targets = orbs;
    std::string f = format("json");
    require_format(f, {"json", "text"});
    Json j = Json::array();
    std::string s;
    for (const auto& a : targets) {
      Json pairs = Json::array();
      s += "orbital " + a.str() + "\n";
      for (std::size_t i = 0; i < g.size(); ++i) {
        SlopePair p = phi(g.generators()[i], a);
        pairs.push_back(Json{{"letter", GroupSpec::letter_name(static_cast<int>(i) + 1)}, {"slopes", to_json(p)}});
        s += "  " + GroupSpec::letter_name(static_cast<int>(i) + 1) + ": " + p.str() + "\n";
      }
      Json entry{{"orbital", to_json(a)}, {"generators", pairs}};
      if (std::find(orbs.begin(), orbs.end(), a) != orbs.end()) {
        LatticeVerdict v = image_lattice(g, a);
        entry["lattice"] = to_json(v);
        s += "  image: " + to_string(v.kind) + (v.generator ? " generated by " + v.generator->str() : "") +
             (v.imbalanced ? ", imbalanced" : "") + "\n";
      }
      j.push_back(std::move(entry));
    }
    if (f == "text") emit(s);
    else emit(j);
    return kOk;
  }

  int controller() {
    need_args(1, "controller GROUP [--orbital a:b]");
    GroupSpec g = parse_group(o_.args);
    Interval a = orbital_or(g);
    WordBall b = ball(g, o_.radius, o_.cap);
    PLMap c = find_controller(g, a, o_.radius, o_.cap);
    bool consistent = is_consistent_controller(c, a);
    bool realizes = controller_realizes(c, a);
    std::string word = word_string(b.word_of(c));
    std::string f = format("json");
    require_format(f, {"json", "text"});
    if (f == "text") {
      emit("controller on " + a.str() + ": " + (word.empty() ? "id" : word) + " slopes " + phi(c, a).str() +
           (consistent ? ", consistent" : ", inconsistent") + (realizes ? ", realizes the orbital" : "") + "\n");
    } else {
      emit(Json{{"orbital", to_json(a)},
                {"controller", to_json(c)},
                {"word", word},
                {"slopes", to_json(phi(c, a))},
                {"consistent", consistent},
                {"realizes", realizes}});
    }
    return kOk;
  }

  int split() {
    need_args(1, "split GROUP [--orbital a:b --product MAPS]");
    GroupSpec g = parse_group(o_.args);
    std::string f = format("json");
    require_format(f, {"json", "text"});
    if (!o_.product.empty()) {
      if (o_.orbital.empty()) throw ParseError("--product needs --orbital a:b");
      Interval a = Interval::parse(o_.orbital);
      auto product = parse_maps({o_.product});
      SplitSearchResult r = split_stable_search(a, product, g, o_.radius, o_.max_depth, 10000, o_.cap);
      if (f == "text") {
        std::string s;
        for (const auto& st : r.trace)
          s += st.step + " (length " + std::to_string(st.length) + ")" + (st.note.empty() ? "" : ": " + st.note) + "\n";
        s += "element with orbital " + a.str() + ": " + (r.word.empty() ? "id" : word_string(r.word)) + "\n";
        emit(s);
      } else {
        emit(to_json(r));
      }
      return kOk;
    }
    GammaSet s = gamma_g(g, o_.radius, o_.cap);
    auto tagged = tag_depths(s);
    if (f == "text") {
      std::string t = std::to_string(s.pieces.size()) + " one-orbital pieces from the radius-" +
                      std::to_string(o_.radius) + " ball\n";
      for (const auto& p : tagged) t += "  " + p.orbital.str() + " depth " + std::to_string(p.g_depth) + "\n";
      emit(t);
    } else {
      Json pieces = Json::array();
      for (const auto& p : tagged) pieces.push_back(to_json(p));
      emit(Json{{"source_radius", s.source_radius}, {"size", s.pieces.size()}, {"pieces", pieces}});
    }
    return kOk;
  }

  int classify() {
    need_args(1, "classify GROUP");
    GroupSpec g = parse_group(o_.args);
    ClassificationOptions opts;
    opts.cap = o_.cap;
    opts.derived_radius = o_.radius;
    ClassificationReport r = classification_report(g, o_.radius, opts);
    std::string f = format("text");
    require_format(f, {"json", "text"});
    if (f == "text") emit(r.summary + "\n");
    else emit(to_json(r));
    return r.status == ClassificationStatus::Classified ? kOk : kObstruction;
  }

  int graph() {
    need_args(1, "graph MAP...");
    std::string f = format("svg");
    require_format(f, {"svg", "csv"});
    return graph_of(names(o_.args), parse_maps(o_.args), f);
  }

  int graph_of(const std::vector<std::string>& ns, const std::vector<PLMap>& maps, const std::string& f) {
    std::vector<NamedMap> named;
    for (std::size_t i = 0; i < maps.size(); ++i) named.emplace_back(ns[i], maps[i]);
    emit(f == "csv" ? graph_csv(named) : graph_svg(named));
    return kOk;
  }

  const Options& o_;
  std::string out_;
};

}  // namespace

constexpr const char* kLiteralTag = "@literal:";

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with piecewise-linear homeomorphisms of the unit interval"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--radius", o.radius, "Word-ball radius")->check(CLI::NonNegativeNumber);
  app.add_option("--cap", o.cap, "Maximum number of ball elements");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg", "text"}));
  app.add_option("--out", o.out, "Write output to a file");
  app.add_option("--orbital", o.orbital, "Orbital a:b");
  app.add_option("--product", o.product, "Comma-separated one-orbital pieces (split)");
  app.add_option("--max-depth", o.max_depth, "Leading-orbital shrink budget (split)");

  const std::vector<std::pair<const char*, const char*>> verbs = {
      {"make", "Print named maps"},
      {"eval", "Evaluate a map at a point"},
      {"compose", "Compose maps left to right"},
      {"orbitals", "Group and generator orbitals, transition chains"},
      {"towers", "Longest tower in the word ball, or depth/height of --orbital"},
      {"depth", "Depth lower bound with witness tower"},
      {"balance", "Search for an imbalanced orbital"},
      {"phi", "End slopes and their image lattice"},
      {"controller", "Find a controller on an orbital"},
      {"split", "One-orbital pieces, or the orbital search for --product"},
      {"classify", "Structure of the split group and derived length"},
      {"graph", "SVG or CSV graphs of maps"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("args", o.args, "Maps, groups or values")->allow_extra_args();
    sub->fallthrough();
    subs.push_back(sub);
  }

  // CLI11 splits bracketed positionals into lists, which would break JSON
  // map literals; they are swapped for placeholders during parsing.
  std::vector<std::string> literals;
  std::vector<std::string> tokens;
  for (int i = argc - 1; i >= 1; --i) {
    std::string t = argv[i];
    if (!t.empty() && t.front() == '[') {
      tokens.push_back(kLiteralTag + std::to_string(literals.size()));
      literals.push_back(std::move(t));
    } else {
      tokens.push_back(std::move(t));
    }
  }
  try {
    app.parse(tokens);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  std::string verb;
  for (auto* s : subs)
    if (s->parsed()) verb = s->get_name();
  for (auto& a : o.args)
    if (a.rfind(kLiteralTag, 0) == 0) a = literals.at(std::stoul(a.substr(std::strlen(kLiteralTag))));

  int code = kOk;
  Runner runner(o);
  try {
    code = runner.run(verb);
  } catch (const Obstruction& e) {
    std::cerr << "obstruction: " << e.what() << "\n";
    return kObstruction;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }

  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return kError;
    }
    f << runner.output();
  } else {
    std::cout << runner.output();
  }
  return code;
}
