#include "ribbonforge/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ribbonforge/acceptance.hpp"
#include "ribbonforge/arp_format.hpp"
#include "ribbonforge/canonical.hpp"
#include "ribbonforge/edit_ops.hpp"
#include "ribbonforge/enumeration.hpp"
#include "ribbonforge/errors.hpp"
#include "ribbonforge/link_bridge.hpp"
#include "ribbonforge/minors.hpp"
#include "ribbonforge/surface.hpp"

#ifndef RIBBONFORGE_DATA_DIR
#define RIBBONFORGE_DATA_DIR "data"
#endif

namespace ribbonforge::cli {

namespace {

using nlohmann::json;

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("IOError", message) {}
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

SearchLimits search_limits() {
  SearchLimits limits;
  if (const char* env = std::getenv("RIBBONFORGE_MAX_EDGES")) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used != std::string_view(env).size()) throw std::invalid_argument(env);
      limits.max_edges = v;
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("RIBBONFORGE_MAX_EDGES is not a number: '") + env + "'");
    }
  }
  return limits;
}

LabelSet split_labels(const std::string& list) {
  LabelSet out;
  std::istringstream in(list);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.insert(item);
  return out;
}

json script_json(const MinorScript& script) {
  json steps = json::array();
  for (const auto& step : script.steps) {
    json s{{"op", std::string(to_string(step.op))}};
    if (step.op == MinorOp::DeleteVertex)
      s["target"] = step.vertex;
    else
      s["target"] = step.label;
    steps.push_back(std::move(s));
  }
  return steps;
}

json summary_json(const ArrowPresentation& g) {
  const SurfaceSummary s = surface_summary(g);
  return {{"vertices", s.v},          {"edges", s.e},   {"boundary", s.f},          {"components", s.k},
          {"euler_genus", s.euler_genus}, {"genus", s.genus}, {"orientable", s.orientable}};
}

ArrowPresentation resolve_target(const std::string& target, std::istream& in) {
  if (target == "bbar1") return build_pattern(ExcludedPattern::Bbar1);
  if (target == "b3") return build_pattern(ExcludedPattern::B3);
  if (target == "theta-t") return build_pattern(ExcludedPattern::ThetaT);
  return parse_arp(read_input(target, in));
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool pretty = false;

  void emit(const json& j) const { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }
  ArrowPresentation graph(const std::string& path) const { return parse_arp(read_input(path, in)); }
};

int dispatch(CLI::App& app, Context& ctx, const std::map<std::string, std::string>& s,
             const std::map<std::string, std::vector<std::string>>& lists, const std::map<std::string, bool>& flags,
             std::size_t count) {
  const auto sub = app.get_subcommands().front()->get_name();
  const auto& file = s.at("file");

  if (sub == "info") {
    ctx.emit(summary_json(ctx.graph(file)));
    return kOk;
  }
  if (sub == "delete" || sub == "contract") {
    const auto g = ctx.graph(file);
    ctx.out << to_arp(sub == "delete" ? delete_edge(g, s.at("edge")) : contract_edge(g, s.at("edge")));
    return kOk;
  }
  if (sub == "dual") {
    const auto g = ctx.graph(file);
    if (flags.at("all") == !s.at("edges").empty())
      throw InvalidArgument("dual needs exactly one of -e LABELS or --all");
    ctx.out << to_arp(flags.at("all") ? geometric_dual(g) : partial_dual(g, split_labels(s.at("edges"))));
    return kOk;
  }
  if (sub == "canonical") {
    const auto limits = search_limits();
    const auto g = ctx.graph(file);
    const auto key = canonical_key(g, limits.max_edges);
    ctx.emit({{"key", key.hex()}, {"canonical", to_arp(decode_key(key))}});
    return kOk;
  }
  if (sub == "equivalent") {
    const auto limits = search_limits();
    const bool same = equivalent(ctx.graph(file), ctx.graph(s.at("other")), limits.max_edges);
    ctx.emit({{"equivalent", same}});
    return same ? kOk : kNegative;
  }
  if (sub == "has-minor") {
    const auto g = ctx.graph(file);
    const auto h = resolve_target(s.at("target"), ctx.in);
    const auto script = has_minor(g, h, search_limits());
    ctx.emit({{"found", script.has_value()}, {"script", script ? script_json(*script) : json(nullptr)}});
    return script ? kOk : kNegative;
  }
  if (sub == "scan") {
    const auto g = ctx.graph(file);
    json found = json::array();
    for (const auto& hit : excluded_minor_scan(g, search_limits()))
      found.push_back({{"pattern", std::string(to_string(hit.pattern))}, {"script", script_json(hit.script)}});
    ctx.emit({{"patterns", found}});
    return kOk;
  }
  if (sub == "interlacement") {
    const auto ig = intersection_graph(ctx.graph(file));
    json edges = json::array();
    for (const auto& [a, b] : ig.edges()) edges.push_back({a, b});
    const auto colour = two_colouring(ig);
    const auto cycle = colour ? std::nullopt : minimal_odd_cycle(ig);
    ctx.emit({{"vertices", ig.vertices},
              {"edges", edges},
              {"bipartite", colour.has_value()},
              {"odd_cycle", cycle ? json(*cycle) : json(nullptr)}});
    return kOk;
  }
  if (sub == "represents-link") {
    const auto g = ctx.graph(file);
    RepresentOptions options;
    options.limits = search_limits();
    options.extract_certificate = flags.at("certificate");
    const Verdict v = represents_link(g, options);
    json j{{"representable", v.representable},
           {"witness", flags.at("witness") && v.witness ? json(*v.witness) : json(nullptr)},
           {"certificate", v.certificate ? script_json(*v.certificate) : json(nullptr)},
           {"odd_cycle", v.odd_cycle ? json(*v.odd_cycle) : json(nullptr)}};
    if (v.certificate_pattern) j["pattern"] = std::string(to_string(*v.certificate_pattern));
    ctx.emit(j);
    return v.representable ? kOk : kNegative;
  }
  if (sub == "from-pd") {
    const auto smoothing = s.at("smoothing") == "B" ? Smoothing::B : Smoothing::A;
    ctx.out << to_arp(all_A_ribbon_graph(parse_pd(read_input(file, ctx.in)), smoothing));
    return kOk;
  }
  if (sub == "enumerate") {
    EnumerationFilter f;
    f.max_edges = count;
    f.min_edges = count;
    f.connected_only = flags.at("connected");
    f.orientable_only = flags.at("orientable");
    f.bouquets_only = flags.at("bouquets");
    std::size_t n = 0;
    enumerate_all(f, [&](const ArrowPresentation& g) {
      ctx.out << to_arp(g) << '\n';
      ++n;
    });
    ctx.out << "# count: " << n << '\n';
    return kOk;
  }
  if (sub == "verify") {
    acceptance::Options options;
    options.data_dir = s.at("data");
    for (const auto& id : lists.at("only")) options.only.insert(std::stoi(id));
    json results = json::array();
    bool all = true;
    for (const auto& r : acceptance::run(options, [&](const acceptance::CriterionResult& r) {
           ctx.err << acceptance::format_line(r) << std::endl;
         })) {
      all = all && r.passed;
      results.push_back({{"id", r.id},
                         {"title", r.title},
                         {"passed", r.passed},
                         {"detail", r.detail},
                         {"seconds", r.seconds},
                         {"budget_seconds", r.budget_seconds}});
    }
    ctx.emit({{"passed", all}, {"criteria", results}});
    return all ? kOk : kNegative;
  }
  throw InvalidArgument("unknown command '" + sub + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Ribbon graphs as arrow presentations: minors, partial duals, link-diagram representability",
               "ribbonforge"};
  app.require_subcommand(1);
  app.add_flag("--pretty", ctx.pretty, "Indent JSON output");

  std::map<std::string, std::string> s{{"file", "-"}, {"edge", ""},   {"edges", ""},
                                       {"other", ""}, {"target", ""}, {"smoothing", "A"},
                                       {"data", RIBBONFORGE_DATA_DIR}};
  std::map<std::string, std::vector<std::string>> lists{{"only", {}}};
  std::map<std::string, bool> flags{{"all", false},        {"witness", false},    {"certificate", false},
                                    {"connected", false},  {"orientable", false}, {"bouquets", false}};
  std::size_t count = 0;

  auto with_file = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", s["file"], ".arp file, or - for standard input")->required();
    return c;
  };
  with_file("info", "Surface summary as JSON");
  with_file("delete", "Delete an edge; prints .arp")->add_option("-e,--edge", s["edge"], "Edge label")->required();
  with_file("contract", "Contract an edge; prints .arp")
      ->add_option("-e,--edge", s["edge"], "Edge label")
      ->required();
  auto* dual = with_file("dual", "Partial dual; prints .arp");
  dual->add_option("-e,--edges", s["edges"], "Comma-separated edge labels");
  dual->add_flag("--all", flags["all"], "Geometric dual");
  with_file("canonical", "Canonical key and representative");
  with_file("equivalent", "Compare two presentations")->add_option("other", s["other"], "Second .arp file")->required();
  with_file("has-minor", "Search for a minor")
      ->add_option("--target", s["target"], "bbar1, b3, theta-t or an .arp file")
      ->required();
  with_file("scan", "Search for the three excluded minors");
  with_file("interlacement", "Intersection graph of a bouquet");
  auto* rl = with_file("represents-link", "Decide whether the graph comes from a link diagram");
  rl->add_flag("--witness", flags["witness"], "Include an edge set A with G^A plane");
  rl->add_flag("--certificate", flags["certificate"], "Include a minor script to an excluded pattern");
  auto* pd = app.add_subcommand("from-pd", "Ribbon graph of the all-A state of a PD code; prints .arp");
  pd->add_option("file", s["file"], "PD file, or - for standard input")->required();
  pd->add_option("--smoothing", s["smoothing"], "A or B")->check(CLI::IsMember({"A", "B"}));
  auto* en = app.add_subcommand("enumerate", "All classes with exactly N edges as .arp records");
  en->add_option("-n", count, "Edge count")->required();
  en->add_flag("--connected", flags["connected"]);
  en->add_flag("--orientable", flags["orientable"]);
  en->add_flag("--bouquets", flags["bouquets"]);
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--data", s["data"], "Fixture directory");
  verify->add_option("--only", lists["only"], "Criterion numbers")->delimiter(',');

  auto fail = [&](const std::string& kind, const std::string& message, int code) {
    ctx.emit({{"error", message}, {"kind", kind}});
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail("UsageError", e.what(), kInputError);
  }

  try {
    return dispatch(app, ctx, s, lists, flags, count);
  } catch (const Error& e) {
    return fail(e.kind(), e.what(), e.is_internal() ? kInternalError : kInputError);
  } catch (const std::exception& e) {
    return fail("InternalError", e.what(), kInternalError);
  }
}

}  // namespace ribbonforge::cli
