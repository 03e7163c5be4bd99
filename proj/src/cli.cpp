#include "invsg/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "invsg/analysis.hpp"
#include "invsg/green.hpp"
#include "invsg/io.hpp"
#include "json.hpp"

namespace invsg {

namespace {

using ojson = nlohmann::ordered_json;

bool is_budget_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::LimitExceeded:
    case ErrorCode::BoundExceeded:
    case ErrorCode::OracleBoundExceeded:
      return true;
    default:
      return false;
  }
}

const InvolutorySemigroup& require_table(const CatalogEntry& entry) {
  if (!entry.tabulated()) {
    throw Error(ErrorCode::LimitExceeded,
                entry.name + " has no Cayley table (" + std::to_string(entry.size) +
                    " elements exceeds the tabulation bound)");
  }
  return *entry.table;
}

ojson reduct_json(const ReductStatus& r) {
  return {{"status", to_string(r.status)}, {"provenance", r.provenance}};
}

ojson classes_json(const std::vector<std::uint32_t>& v) { return ojson(v); }

struct BuildArgs {
  std::string kind;
  std::string file;
  std::uint32_t n = 2;
  std::uint32_t q = 2;
  std::string inv = "t";
  std::string export_path;
};

void cmd_build(const BuildArgs& a, std::ostream& out) {
  std::string spec = a.kind;
  if (a.kind == "mn" || a.kind == "tn") {
    spec = a.kind + ":" + std::to_string(a.n) + ":" + std::to_string(a.q) + ":" + a.inv;
  } else if (a.kind == "cayley") {
    if (a.file.empty()) throw Error(ErrorCode::Io, "build cayley needs a file argument");
    spec = "cayley:" + a.file;
  }
  const CatalogEntry entry = load_semigroup(spec);
  ojson j;
  j["name"] = entry.name;
  j["spec"] = entry.spec;
  j["size"] = entry.size;
  j["tabulated"] = entry.tabulated();
  j["enumerated"] = entry.tabulated() || entry.oracle.has_value();
  j["reduct"] = reduct_json(entry.reduct);
  if (!a.export_path.empty()) {
    save_cayley_json(require_table(entry), a.export_path);
    j["exported"] = a.export_path;
  }
  out << j.dump(2) << '\n';
}

struct AnalyzeArgs {
  std::string sg;
  std::string reduct;
  std::uint64_t budget = kDefaultBudget;
  std::size_t max_iota = 8;
  bool no_timings = false;
};

void cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const CatalogEntry entry = load_semigroup(a.sg);
  const ReductStatus reduct = a.reduct.empty() ? entry.reduct : parse_reduct_override(a.reduct);
  AnalysisOptions options;
  options.budget = a.budget;
  options.max_iota_len = a.max_iota;
  out << to_json(decide_infb(entry, reduct, options), !a.no_timings).dump(2) << '\n';
}

struct GreensArgs {
  std::string sg;
  std::optional<ElementId> eggbox;
  bool star = false;
};

void cmd_greens(const GreensArgs& a, std::ostream& out) {
  const CatalogEntry entry = load_semigroup(a.sg);
  const GreensData g = entry.tabulated() ? greens(*entry.table)
                                         : greens(CayleyGraph::build(*entry.oracle));
  ojson j;
  j["name"] = entry.name;
  j["size"] = entry.size;
  j["generators"] = g.generators;
  j["counts"] = {{"R", g.r_count}, {"L", g.l_count}, {"H", g.h_count},
                 {"D", g.d_count}, {"J", g.j_count}};
  j["rClass"] = classes_json(g.r_class);
  j["lClass"] = classes_json(g.l_class);
  j["hClass"] = classes_json(g.h_class);
  j["dClass"] = classes_json(g.d_class);
  j["jClass"] = classes_json(g.j_class);
  auto order = ojson::array();
  for (const auto& [upper, lower] : g.j_order) order.push_back({upper, lower});
  j["jOrder"] = std::move(order);
  j["jOrderReduced"] = g.j_order_reduced;
  if (a.eggbox) {
    const InvolutorySemigroup& s = require_table(entry);
    if (*a.eggbox >= s.size()) {
      throw Error(ErrorCode::MalformedTable, "no element " + std::to_string(*a.eggbox));
    }
    j["eggbox"] = render_eggbox(s, eggbox(s, g, *a.eggbox), a.star);
  }
  out << j.dump(2) << '\n';
}

void cmd_classify(const std::string& sg, std::ostream& out) {
  const CatalogEntry entry = load_semigroup(sg);
  const TypeResult t = entry.tabulated() ? classify_type(*entry.table)
                                         : classify_type(*entry.oracle);
  ojson j;
  j["name"] = entry.name;
  if (t.kind == TypeResult::Kind::A) {
    j["result"] = "A";
    j["witness"] = t.witness;
    j["witnessLabel"] = entry.tabulated() ? entry.table->label(t.witness)
                                          : entry.oracle->label(t.witness);
  } else {
    j["result"] = "B";
    j["N"] = t.n;
  }
  j["productsEvaluated"] = t.products_evaluated;
  out << j.dump(2) << '\n';
}

void cmd_identity(const std::string& sg, const std::string& text, std::uint64_t budget,
                  std::ostream& out) {
  const Identity id = parse_identity(text);
  const CatalogEntry entry = load_semigroup(sg);
  const InvolutorySemigroup& s = require_table(entry);
  const SatisfactionResult r = satisfies(s, id, budget);
  ojson j;
  j["name"] = entry.name;
  j["identity"] = id.to_string();
  j["result"] = r.holds;
  if (r.counterexample) {
    ojson ids = ojson::object();
    ojson labels = ojson::object();
    for (const auto& letter : id.letters()) {
      const ElementId v = r.counterexample->at(letter);
      ids[letter] = v;
      labels[letter] = s.label(v);
    }
    j["counterexample"] = std::move(ids);
    j["counterexampleLabels"] = std::move(labels);
  }
  j["productsEvaluated"] = r.products_evaluated;
  out << j.dump(2) << '\n';
}

void cmd_isoterm(const std::string& sg, std::size_t n, std::size_t max_len,
                 std::uint64_t budget, std::ostream& out) {
  const CatalogEntry entry = load_semigroup(sg);
  const IsotermResult r = zimin_isoterm_bounded(require_table(entry), n, max_len, budget);
  ojson j;
  j["name"] = entry.name;
  j["zimin"] = zimin(n).to_string();
  j["maxLen"] = max_len;
  j["result"] = r.holds_up_to_bound ? "holds-up-to-bound" : "counterexample";
  if (r.counterexample) j["counterexample"] = r.counterexample->to_string();
  j["candidates"] = r.candidates;
  j["productsEvaluated"] = r.products_evaluated;
  out << j.dump(2) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Involutory semigroups: Green's relations, type A/B and INFB analysis"};
  app.name("invsg");
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Construct a semigroup and optionally export it");
  build->add_option("kind", build_args.kind, "tsl | b21-t | b21-skew | tb | mn | tn | cayley")
      ->required();
  build->add_option("file", build_args.file, "Cayley JSON file for kind cayley");
  build->add_option("--n", build_args.n, "Matrix dimension")->check(CLI::PositiveNumber);
  build->add_option("--q", build_args.q, "Field order (a prime power)");
  build->add_option("--inv", build_args.inv, "Involution")->check(CLI::IsMember({"t", "skew"}));
  build->add_option("--export", build_args.export_path, "Write the Cayley JSON here");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Run the INFB decision pipeline");
  analyze->add_option("--sg", analyze_args.sg, "Semigroup spec")->required();
  analyze->add_option("--reduct", analyze_args.reduct, "Override the reduct status")
      ->check(CLI::IsMember({"infb", "not-infb", "unknown"}));
  analyze->add_option("--budget", analyze_args.budget, "Substitution budget");
  analyze->add_option("--max-iota", analyze_args.max_iota, "Longest sandwich word tried")
      ->check(CLI::PositiveNumber);
  analyze->add_flag("--no-timings", analyze_args.no_timings, "Omit timingsMs");

  GreensArgs greens_args;
  auto* greens_cmd = app.add_subcommand("greens", "Green's relations as JSON");
  greens_cmd->add_option("--sg", greens_args.sg, "Semigroup spec")->required();
  greens_cmd->add_option("--eggbox", greens_args.eggbox, "Render the D-class of this element");
  greens_cmd->add_flag("--star", greens_args.star, "Annotate eggbox cells with star images");

  std::string classify_sg;
  auto* classify = app.add_subcommand("classify", "Type A or type B");
  classify->add_option("--sg", classify_sg, "Semigroup spec")->required();

  std::string identity_sg;
  std::string identity_text;
  std::uint64_t identity_budget = kDefaultBudget;
  auto* identity = app.add_subcommand("identity", "Check an identity u=v exhaustively");
  identity->add_option("--sg", identity_sg, "Semigroup spec")->required();
  identity->add_option("--check", identity_text, "Identity such as \"xx*x=x\"")->required();
  identity->add_option("--budget", identity_budget, "Substitution budget");

  std::string isoterm_sg;
  std::size_t zimin_n = 2;
  std::size_t max_len = 5;
  std::uint64_t isoterm_budget = kDefaultBudget;
  auto* isoterm = app.add_subcommand("isoterm", "Bounded search for Z_n = w'");
  isoterm->add_option("--sg", isoterm_sg, "Semigroup spec")->required();
  isoterm->add_option("--zimin", zimin_n, "Zimin word index")->check(CLI::PositiveNumber);
  isoterm->add_option("--maxlen", max_len, "Longest candidate word")->check(CLI::PositiveNumber);
  isoterm->add_option("--budget", isoterm_budget, "Substitution budget");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*build) cmd_build(build_args, out);
    if (*analyze) cmd_analyze(analyze_args, out);
    if (*greens_cmd) cmd_greens(greens_args, out);
    if (*classify) cmd_classify(classify_sg, out);
    if (*identity) cmd_identity(identity_sg, identity_text, identity_budget, out);
    if (*isoterm) cmd_isoterm(isoterm_sg, zimin_n, max_len, isoterm_budget, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_budget_error(e.code()) ? 2 : 1;
  }
  return 0;
}

}  // namespace invsg
