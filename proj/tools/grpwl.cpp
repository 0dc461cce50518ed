#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grpwl/acceptance.hpp"
#include "grpwl/descriptors.hpp"
#include "grpwl/error.hpp"
#include "grpwl/io.hpp"
#include "grpwl/iso.hpp"
#include "grpwl/mekler.hpp"
#include "grpwl/pebble.hpp"
#include "grpwl/wl.hpp"

using json = nlohmann::json;
using namespace grpwl;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kEngineVersion = "grpwl 0.3.0";
// Exit status for library errors; 0-2 are verdicts for iso.
constexpr int kErrorExit = 3;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Globals {
  unsigned threads = 0;
  std::string report;
  std::size_t cayley_cap = kDefaultCayleyCap;
};

struct Input {
  std::string arg;
  Structure structure;
  json meta;
};

// A path if it names an existing file, otherwise a descriptor.
Input load(const std::string& arg, const Globals& g) {
  Input in{arg, Group{}, json::object()};
  if (std::filesystem::is_regular_file(arg)) {
    std::string bytes = read_file_bytes(arg);
    std::istringstream is(bytes);
    in.structure = read_structure(is);
    in.meta = {{"path", arg}, {"fnv1a64", hex(fnv1a(bytes))}};
  } else {
    in.structure = build_structure(arg, g.cayley_cap);
    std::string text = std::visit([](const auto& s) { return to_text(s); }, in.structure);
    in.meta = {{"descriptor", arg}, {"fnv1a64", hex(fnv1a(text))}};
  }
  if (const auto* grp = std::get_if<Group>(&in.structure)) {
    in.meta["kind"] = "group";
    in.meta["order"] = grp->order();
  } else {
    const auto& gr = std::get<Graph>(in.structure);
    in.meta["kind"] = "graph";
    in.meta["vertices"] = gr.num_vertices();
    in.meta["edges"] = gr.num_edges();
  }
  return in;
}

const Group& need_group(const Input& in) {
  if (const auto* g = std::get_if<Group>(&in.structure)) return *g;
  throw Error(ErrorCode::kInvalidArgument, "'" + in.arg + "' is a graph, expected a group");
}

const Graph& need_graph(const Input& in) {
  if (const auto* g = std::get_if<Graph>(&in.structure)) return *g;
  throw Error(ErrorCode::kInvalidArgument, "'" + in.arg + "' is a group, expected a graph");
}

MarkedVersion parse_version(const std::string& v) {
  return v == "1" ? MarkedVersion::kI : MarkedVersion::kII;
}

// Shared WL flags.
struct WlFlags {
  std::size_t k = 2;
  std::string mode = "countfree";
  std::string criterion = "multiset";
  std::string version = "1";
  std::string rounds = "stable";
  std::uint64_t budget = kDefaultWlBudget;
  bool histograms = false;

  void add(CLI::App* sub, bool with_criterion) {
    sub->add_option("--k", k, "WL dimension")->check(CLI::Range(1, 3));
    sub->add_option("--mode", mode)->check(CLI::IsMember({"countfree", "counting"}));
    if (with_criterion)
      sub->add_option("--criterion", criterion)->check(CLI::IsMember({"set", "multiset"}));
    sub->add_option("--version", version, "initial colors: 1, 2 or graph")
        ->check(CLI::IsMember({"1", "2", "graph"}));
    sub->add_option("--rounds", rounds, "refinement rounds or 'stable'");
    sub->add_option("--wl-budget", budget, "cap on n^k tuples per structure");
  }

  WlOptions options(unsigned threads) const {
    WlOptions o;
    o.k = k;
    o.mode = mode == "counting" ? WlMode::kCounting : WlMode::kCountFree;
    o.criterion = criterion == "set" ? Criterion::kSet : Criterion::kMultiset;
    if (rounds != "stable") {
      try {
        o.rounds = std::stoul(rounds);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse, "--rounds expects a number or 'stable'");
      }
    }
    o.threads = threads;
    o.budget = budget;
    o.keep_histograms = histograms;
    return o;
  }

  RefinableStructure structure(const Input& in) const {
    if (const auto* g = std::get_if<Group>(&in.structure)) {
      if (version == "graph")
        throw Error(ErrorCode::kInvalidArgument, "--version graph needs graph inputs");
      return RefinableStructure::group(std::make_shared<const Group>(*g), parse_version(version));
    }
    return RefinableStructure::graph(std::make_shared<const Graph>(std::get<Graph>(in.structure)));
  }
};

json verdict_json(const Verdict& v) {
  json j = {{"distinguished", v.distinguished},
            {"criterion", to_string(v.criterion)},
            {"reason", v.reason},
            {"rounds_run", v.rounds_run},
            {"reached_stable", v.reached_stable}};
  j["round"] = v.round ? json(*v.round) : json(nullptr);
  j["witness_class"] = v.witness ? json(*v.witness) : json(nullptr);
  return j;
}

json history_json(const Coloring& c) {
  json rows = json::array();
  for (const auto& r : c.history) rows.push_back({{"classes", r.num_classes}, {"digest", hex(r.digest)}});
  return rows;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

// ---- subcommands; each fills `results` and returns an exit status.

int cmd_build(const Globals& g, const std::string& desc, std::string out, json& results) {
  Structure s = build_structure(desc, g.cayley_cap);
  bool is_group = std::holds_alternative<Group>(s);
  std::string text = std::visit([](const auto& x) { return to_text(x); }, s);
  if (out.empty()) {
    if (const char* dir = std::getenv("GRPWL_CACHE_DIR"); dir && *dir) {
      std::string name;
      for (char c : desc) name += std::isalnum(static_cast<unsigned char>(c)) || c == '^' ? c : '_';
      std::filesystem::create_directories(dir);
      out = (std::filesystem::path(dir) / (name + (is_group ? ".cay" : ".gr"))).string();
    }
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file_bytes(out, text);
    std::cout << "wrote " << out << "\n";
  }
  results = {{"descriptor", desc}, {"fnv1a64", hex(fnv1a(text))}, {"kind", is_group ? "group" : "graph"}};
  results["output"] = out.empty() ? json(nullptr) : json(out);
  if (is_group)
    results["order"] = std::get<Group>(s).order();
  else
    results["vertices"] = std::get<Graph>(s).num_vertices(), results["edges"] = std::get<Graph>(s).num_edges();
  return 0;
}

int cmd_wl(const Globals& g, const WlFlags& f, const std::vector<Input>& ins, json& results) {
  WlOptions o = f.options(g.threads);
  if (ins.size() == 1) {
    auto s = f.structure(ins[0]);
    Coloring c = run_single(s, o.k, o.mode, o.rounds, o.threads, o.budget);
    results = {{"classes", c.num_classes()}, {"discrete", c.is_discrete()},
               {"rounds", c.round}, {"history", history_json(c)}};
    std::cout << "classes " << c.num_classes() << " after " << c.round << " rounds"
              << (c.is_discrete() ? " (discrete)" : "") << "\n";
    return 0;
  }
  auto l = f.structure(ins[0]);
  auto r = f.structure(ins[1]);
  WlRun run_result = run(l, r, o);
  const Verdict& v = run_result.verdict;
  results = {{"verdict", verdict_json(v)},
             {"left_history", history_json(run_result.left)},
             {"right_history", history_json(run_result.right)}};
  if (f.histograms) {
    auto hist = [](const auto& per_round) {
      json rows = json::array();
      for (const auto& round : per_round) {
        json row = json::array();
        for (auto [c, m] : round) row.push_back({c, m});
        rows.push_back(row);
      }
      return rows;
    };
    results["class_histogram_per_round"] = {{"left", hist(run_result.left_histograms)},
                                            {"right", hist(run_result.right_histograms)}};
  }
  std::cout << (v.distinguished ? "distinguished" : "not distinguished") << " (" << v.reason;
  if (v.round) std::cout << ", round " << *v.round;
  std::cout << ", " << v.rounds_run << " rounds run)\n";
  return 0;
}

int cmd_iso(const Globals& g, const WlFlags& f, const std::string& method, std::size_t oracle_cap,
            const std::vector<Input>& ins, json& results) {
  const Group& a = need_group(ins[0]);
  const Group& b = need_group(ins[1]);
  IsoResult r;
  if (method == "oracle")
    r = oracle_isomorphic(a, b, oracle_cap);
  else if (method == "abelian")
    r = abelian_isomorphic(a, b);
  else {
    if (f.version == "graph") throw Error(ErrorCode::kInvalidArgument, "wl method needs --version 1|2");
    r = wl_pipeline(a, b, f.options(g.threads), parse_version(f.version));
  }
  results = {{"verdict", to_string(r.verdict)}, {"method", to_string(r.method)},
             {"tuples_tried", r.tuples_tried}};
  if (r.witness) results["witness"] = *r.witness;
  if (r.wl) results["wl"] = verdict_json(*r.wl);
  std::cout << to_string(r.verdict) << " (" << to_string(r.method) << ")\n";
  switch (r.verdict) {
    case IsoVerdict::kIsomorphic: return 0;
    case IsoVerdict::kNonIsomorphic: return 1;
    case IsoVerdict::kInconclusive: return 2;
  }
  return 2;
}

struct PebbleFlags {
  std::size_t budget = 2;
  std::size_t q = 1;
  std::size_t rounds = 10;
  std::string version = "2";
  std::string spoiler = "random";
  std::string duplicator = "brute";
  std::uint64_t seed = 1;
  std::uint64_t game_cap = kDefaultGameCap;
  std::size_t oracle_cap = kDefaultOracleCap;
};

// A side of a family game: an implicit Abelian group plus relabelling maps
// when the input labels differ from the model's.
struct FamilySide {
  std::shared_ptr<const AbelianGroup> model;
  std::optional<std::vector<Element>> to_model, from_model;
};

FamilySide family_side(const std::string& arg, const Globals& g) {
  if (arg.rfind("family:", 0) == 0 && !std::filesystem::exists(arg)) {
    // Same indexing as the explicit constructor, and no table needed.
    std::string rest = arg.substr(7);
    std::size_t c1 = rest.find(':'), c2 = rest.rfind(':');
    if (c1 == std::string::npos || c1 == c2) throw Error(ErrorCode::kParse, "bad family descriptor '" + arg + "'");
    std::uint32_t q = std::stoul(rest.substr(0, c1)), n = std::stoul(rest.substr(c1 + 1, c2 - c1 - 1));
    std::string which = rest.substr(c2 + 1);
    if (which != "left" && which != "right") throw Error(ErrorCode::kParse, "bad family descriptor '" + arg + "'");
    auto specs = theorem_family_spec(q, n);
    return {std::make_shared<const AbelianGroup>((which == "left" ? specs.first : specs.second).cyclic_orders),
            std::nullopt, std::nullopt};
  }
  AbelianModel m = abelian_model(need_group(load(arg, g)));
  return {std::make_shared<const AbelianGroup>(m.model), std::move(m.to_model), std::move(m.from_model)};
}

// Feeds script moves given in input labels to a game played on models.
class RelabelledSpoiler final : public Spoiler {
 public:
  RelabelledSpoiler(Spoiler& inner, const FamilySide& l, const FamilySide& r)
      : inner_(inner), l_(l), r_(r) {}
  std::optional<SpoilerMove> next(const GameState& state) override {
    auto m = inner_.next(state);
    if (!m) return m;
    const auto& map = m->side == Side::kLeft ? l_.to_model : r_.to_model;
    if (map)
      for (auto& p : m->placements) {
        if (p.element >= map->size()) throw Error(ErrorCode::kIllegalMove, "element out of range");
        p.element = (*map)[p.element];
      }
    return m;
  }

 private:
  Spoiler& inner_;
  const FamilySide& l_;
  const FamilySide& r_;
};

int cmd_pebble(const Globals& g, const PebbleFlags& f, const std::vector<std::string>& args,
               std::vector<Input>& ins, json& results) {
  MarkedVersion version = parse_version(f.version);
  if (f.spoiler == "exhaustive") {
    ins = {load(args[0], g), load(args[1], g)};
    bool wins = exhaustive_spoiler(need_group(ins[0]), need_group(ins[1]), f.budget, f.rounds,
                                   version, f.game_cap);
    results = {{"spoiler_wins", wins}, {"budget", f.budget}, {"rounds", f.rounds}};
    std::cout << "exhaustive search: spoiler " << (wins ? "wins" : "does not win") << " with budget "
              << f.budget << " in " << f.rounds << " rounds\n";
    return 0;
  }

  std::unique_ptr<Spoiler> spoiler;
  if (f.spoiler == "random") {
    spoiler = std::make_unique<RandomSpoiler>(f.seed);
  } else if (f.spoiler.rfind("script:", 0) == 0) {
    spoiler = std::make_unique<ScriptSpoiler>(read_file_bytes(f.spoiler.substr(7)));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown spoiler '" + f.spoiler + "'");
  }

  GameRecord rec;
  std::vector<std::string> lines;
  if (f.duplicator == "family") {
    FamilySide l = family_side(args[0], g), r = family_side(args[1], g);
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& side = i ? r : l;
      ins.push_back({args[i], Group{}, {{"kind", "abelian"}, {"model", side.model->describe()}}});
      if (std::filesystem::is_regular_file(args[i]))
        ins.back().meta["fnv1a64"] = hex(fnv1a(read_file_bytes(args[i]))), ins.back().meta["path"] = args[i];
      else
        ins.back().meta["descriptor"] = args[i];
    }
    GameState state(l.model, r.model, f.budget, f.q, version);
    FamilyDuplicator dup(l.model, r.model);
    RelabelledSpoiler relabelled(*spoiler, l, r);
    Spoiler& sp = f.spoiler == "random" ? *spoiler : relabelled;
    rec = play_game(state, sp, dup, f.rounds, l.model.get(), r.model.get());
    // Report elements in input labels.
    for (auto line : rec.trace) {
      const auto& mine = line.move.side == Side::kLeft ? l.from_model : r.from_model;
      const auto& other = line.move.side == Side::kLeft ? r.from_model : l.from_model;
      if (mine)
        for (auto& p : line.move.placements) p.element = (*mine)[p.element];
      if (other)
        for (auto& e : line.response) e = (*other)[e];
      lines.push_back(line.to_string());
    }
  } else if (f.duplicator == "brute") {
    ins = {load(args[0], g), load(args[1], g)};
    auto a = std::make_shared<const Group>(need_group(ins[0]));
    auto b = std::make_shared<const Group>(need_group(ins[1]));
    std::optional<std::vector<Element>> iso;
    if (a->order() == b->order() && a->order() <= f.oracle_cap) iso = oracle_isomorphic(*a, *b, f.oracle_cap).witness;
    GameState state(std::make_shared<CayleyView>(a), std::make_shared<CayleyView>(b), f.budget, f.q, version);
    BruteDuplicator dup(iso);
    rec = play_game(state, *spoiler, dup, f.rounds);
    for (const auto& line : rec.trace) lines.push_back(line.to_string());
    results["duplicator_has_isomorphism"] = iso.has_value();
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown duplicator '" + f.duplicator + "'");
  }
  for (const auto& s : lines) std::cout << s << "\n";
  std::cout << "outcome: " << to_string(rec.outcome) << " after " << rec.rounds_played << " rounds\n";
  results["trace"] = lines;
  results["outcome"] = to_string(rec.outcome);
  results["rounds_played"] = rec.rounds_played;
  results["invariant_broken"] = rec.invariant_broken;
  results["budget"] = f.budget;
  results["q"] = f.q;
  return 0;
}

int cmd_mekler(const Globals& g, const Input& in, std::uint32_t p, bool verify,
               const std::string& export_path, json& results) {
  MeklerGroup m(need_graph(in), p);
  std::size_t universal = 0;
  const Graph& gr = m.graph();
  for (Vertex v = 0; v < gr.num_vertices(); ++v)
    if (gr.degree(v) + 1 == gr.num_vertices()) ++universal;
  results = {{"prime", p},
             {"vertices", m.num_vertices()},
             {"non_edges", m.non_edges().size()},
             {"order_exponent", m.order_exponent()},
             {"center_exponent", m.non_edges().size() + universal}};
  std::cout << "order " << p << "^" << m.order_exponent() << ", center " << p << "^"
            << m.non_edges().size() + universal << "\n";
  if (verify) {
    verify_axioms_implicit(m);
    results["axioms_verified"] = true;
    std::cout << "group axioms verified on the implicit product\n";
  }
  if (!export_path.empty()) {
    Group t = m.to_cayley(g.cayley_cap);
    write_file_bytes(export_path, to_text(t));
    results["exported"] = export_path;
    std::cout << "wrote " << export_path << "\n";
  }
  return 0;
}

int cmd_cfi(const Input& base, const std::string& twist, const std::string& out, json& results) {
  std::vector<Edge> edges;
  std::stringstream ss(twist);
  std::string e;
  while (std::getline(ss, e, ',')) {
    auto dash = e.find('-');
    if (dash == std::string::npos) throw Error(ErrorCode::kParse, "twist edge must look like u-v");
    try {
      edges.emplace_back(std::stoul(e.substr(0, dash)), std::stoul(e.substr(dash + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "twist edge must look like u-v");
    }
  }
  CfiGraph c = cfi(need_graph(base), edges);
  std::string text = to_text(c.graph);
  results = {{"vertices", c.graph.num_vertices()}, {"edges", c.graph.num_edges()},
             {"twisted_edges", c.twist_set.size()}, {"twist_parity", c.twist_set.size() % 2},
             {"fnv1a64", hex(fnv1a(text))}};
  if (!out.empty()) {
    write_file_bytes(out, text);
    results["output"] = out;
  }
  std::cout << "cfi graph: " << c.graph.num_vertices() << " vertices, " << c.graph.num_edges()
            << " edges, twist parity " << c.twist_set.size() % 2 << "\n";
  return 0;
}

int cmd_canonize(const Globals& g, const Input& in, CanonizeOptions o, const std::string& out,
                 json& results) {
  o.threads = g.threads;
  Certificate c = canonize(need_group(in), o);
  results = {{"digest", hex(certificate_digest(c))}, {"order", c.order}, {"tuple", c.tuple},
             {"labelling", c.labelling}, {"candidates_tried", c.candidates_tried}};
  if (!out.empty()) {
    write_file_bytes(out, to_text(validate_cayley(c.order, c.table)));
    results["output"] = out;
  }
  std::cout << "certificate " << hex(certificate_digest(c)) << " via tuple (" << join(c.tuple)
            << ")\n";
  return 0;
}

int cmd_accept(const Globals& g, std::vector<std::string> tags, std::uint64_t seed, json& results,
               json& timings) {
  if (tags.empty()) tags = acceptance_tags();
  AcceptanceOptions o;
  o.threads = g.threads;
  o.seed = seed;
  o.log = &std::cerr;
  int failed = 0;
  results = json::array();
  for (const auto& tag : tags) {
    CriterionResult r = run_acceptance(tag, o);
    std::printf("criterion %zu [%s] %s: %s (%.1fs)\n", r.number, r.tag.c_str(),
                r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
    for (const auto& [k, v] : r.facts) std::printf("    %s = %s\n", k.c_str(), v.c_str());
    for (const auto& x : r.failures) std::printf("    failure: %s\n", x.c_str());
    std::fflush(stdout);
    json facts = json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    results.push_back({{"number", r.number}, {"tag", r.tag}, {"title", r.title},
                       {"passed", r.passed}, {"facts", facts}, {"failures", r.failures}});
    timings["criterion_" + r.tag] = r.seconds;
    failed += !r.passed;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weisfeiler-Leman and pebble-game experiments on finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_option("--report", g.report, "write a JSON report here");
  app.add_option("--cayley-cap", g.cayley_cap, "largest Cayley table to build");

  std::string build_desc, build_out;
  auto* build = app.add_subcommand("build", "write a group or graph described by DESC");
  build->add_option("desc", build_desc)->required();
  build->add_option("-o,--output", build_out, "output file (default: $GRPWL_CACHE_DIR or stdout)");

  WlFlags wl_flags;
  std::vector<std::string> wl_inputs;
  auto* wl = app.add_subcommand("wl", "run WL refinement on one input or compare two");
  wl_flags.add(wl, true);
  wl->add_flag("--histograms", wl_flags.histograms, "include per-round class histograms");
  wl->add_option("inputs", wl_inputs)->required()->expected(1, 2);

  WlFlags iso_flags;
  std::string iso_method = "oracle";
  std::size_t iso_cap = kDefaultOracleCap;
  std::vector<std::string> iso_inputs;
  auto* iso = app.add_subcommand("iso", "isomorphism test; exit 0 iso, 1 non-iso, 2 inconclusive");
  iso->add_option("--method", iso_method)->check(CLI::IsMember({"oracle", "abelian", "wl"}));
  iso->add_option("--oracle-cap", iso_cap, "largest order the oracle accepts");
  iso_flags.add(iso, false);
  iso->add_option("inputs", iso_inputs)->required()->expected(2);

  PebbleFlags pf;
  std::vector<std::string> pebble_inputs;
  auto* pebble = app.add_subcommand("pebble", "play the count-free pebble game");
  pebble->add_option("--budget", pf.budget, "pebble pairs")->check(CLI::PositiveNumber);
  pebble->add_option("--q", pf.q, "pebbles placed per round")->check(CLI::PositiveNumber);
  pebble->add_option("--rounds", pf.rounds);
  pebble->add_option("--version", pf.version)->check(CLI::IsMember({"1", "2"}));
  pebble->add_option("--spoiler", pf.spoiler, "random | exhaustive | script:FILE");
  pebble->add_option("--duplicator", pf.duplicator)->check(CLI::IsMember({"brute", "family"}));
  pebble->add_option("--seed", pf.seed);
  pebble->add_option("--game-cap", pf.game_cap, "table entries for the exhaustive solver");
  pebble->add_option("--oracle-cap", pf.oracle_cap, "largest order for the brute duplicator's isomorphism");
  pebble->add_option("inputs", pebble_inputs)->required()->expected(2);

  std::string mekler_in, mekler_export;
  std::uint32_t mekler_p = 3;
  bool mekler_verify = false;
  auto* mekler = app.add_subcommand("mekler", "Mekler group of a graph");
  mekler->add_option("graph", mekler_in)->required();
  mekler->add_option("-p", mekler_p, "odd prime");
  mekler->add_flag("--verify", mekler_verify, "check the group axioms without a table");
  mekler->add_option("--export-cayley", mekler_export, "write the Cayley table (subject to --cayley-cap)");

  std::string cfi_in, cfi_twist, cfi_out;
  auto* cfi_cmd = app.add_subcommand("cfi", "CFI graph over a base graph");
  cfi_cmd->add_option("base", cfi_in)->required();
  cfi_cmd->add_option("--twist", cfi_twist, "twisted base edges u-v,u-v");
  cfi_cmd->add_option("-o,--output", cfi_out);

  std::string canon_in, canon_out, canon_version = "2", canon_rounds = "stable";
  CanonizeOptions canon_opts;
  auto* canon = app.add_subcommand("canonize", "canonical form by individualize-and-refine");
  canon->add_option("input", canon_in)->required();
  canon->add_option("--d", canon_opts.d, "individualized tuple length")->check(CLI::Range(1, 8));
  canon->add_option("--version", canon_version)->check(CLI::IsMember({"1", "2"}));
  canon->add_option("--rounds", canon_rounds, "rounds per run or 'stable'");
  canon->add_option("-o,--output", canon_out, "write the canonical Cayley table");

  std::vector<std::string> accept_tags;
  std::uint64_t accept_seed = AcceptanceOptions{}.seed;
  auto* accept = app.add_subcommand("accept", "run the acceptance criteria");
  accept->add_option("--only", accept_tags, "criterion tag (repeatable)")
      ->check(CLI::IsMember(acceptance_tags()));
  accept->add_option("--seed", accept_seed);

  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> args(argv, argv + argc);
  json report = {{"schema_version", kSchemaVersion}, {"engine_version", kEngineVersion}};
  json command = json::array();
  for (std::size_t i = 1; i < args.size(); ++i) command.push_back(args[i]);
  report["command"] = command;
  json results = json::object();
  json timings = json::object();
  std::vector<Input> inputs;
  int status = 0;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto load_all = [&](const std::vector<std::string>& xs) {
      for (const auto& x : xs) inputs.push_back(load(x, g));
    };
    if (*build) {
      status = cmd_build(g, build_desc, build_out, results);
    } else if (*wl) {
      load_all(wl_inputs);
      status = cmd_wl(g, wl_flags, inputs, results);
    } else if (*iso) {
      load_all(iso_inputs);
      status = cmd_iso(g, iso_flags, iso_method, iso_cap, inputs, results);
    } else if (*pebble) {
      status = cmd_pebble(g, pf, pebble_inputs, inputs, results);
    } else if (*mekler) {
      load_all({mekler_in});
      status = cmd_mekler(g, inputs[0], mekler_p, mekler_verify, mekler_export, results);
    } else if (*cfi_cmd) {
      load_all({cfi_in});
      status = cmd_cfi(inputs[0], cfi_twist, cfi_out, results);
    } else if (*canon) {
      load_all({canon_in});
      canon_opts.version = parse_version(canon_version);
      if (canon_rounds != "stable") canon_opts.rounds = std::stoul(canon_rounds);
      status = cmd_canonize(g, inputs[0], canon_opts, canon_out, results);
    } else if (*accept) {
      status = cmd_accept(g, accept_tags, accept_seed, results, timings);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    results = {{"error", error_code_name(e.code())}, {"message", e.what()}};
    status = kErrorExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    results = {{"error", "Internal"}, {"message", e.what()}};
    status = kErrorExit;
  }
  timings["total_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json in_meta = json::array();
  for (const auto& in : inputs) in_meta.push_back(in.meta);
  report["inputs"] = in_meta;
  report["results"] = results;
  report["exit_status"] = status;
  report["timings"] = timings;
  if (!g.report.empty()) {
    std::ofstream out(g.report, std::ios::binary);
    out << report.dump(2) << "\n";
    if (!out) {
      std::cerr << "error: cannot write " << g.report << "\n";
      return kErrorExit;
    }
  }
  return status;
}
