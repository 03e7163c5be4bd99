#include "invsg/analysis.hpp"

#include <charconv>
#include <chrono>
#include <stdexcept>

#include "invsg/green.hpp"
#include "invsg/io.hpp"
#include "invsg/scc.hpp"

namespace invsg {

namespace {

std::uint32_t parse_uint(std::string_view text, const std::string& spec) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::UnknownCatalogName, "malformed number in spec " + spec);
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

Involution parse_involution(std::string_view text, const std::string& spec) {
  if (text == "t") return Involution::Transpose;
  if (text == "skew") return Involution::Skew;
  throw Error(ErrorCode::UnknownCatalogName, "involution must be t or skew in " + spec);
}

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

// An element is regular iff its R-class holds an idempotent.
bool oracle_is_regular(const OracleSemigroup& s) {
  const auto& gens = s.generators();
  const std::size_t n = s.size();
  std::vector<ElementId> right(n * gens.size());
  for (ElementId a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < gens.size(); ++i) right[a * gens.size() + i] = s.product(a, gens[i]);
  }
  const SccResult r = strongly_connected_components(
      n, [&](std::size_t) { return gens.size(); },
      [&](std::size_t a, std::size_t i) { return right[a * gens.size() + i]; });
  std::vector<bool> has_idempotent(r.count, false);
  for (ElementId e : idempotents(s)) has_idempotent[r.component[e]] = true;
  for (bool b : has_idempotent) {
    if (!b) return false;
  }
  return true;
}

struct Locator {
  const CatalogEntry& entry;
  std::optional<CayleyGraph> graph;

  bool strictly_above(ElementId a, ElementId b) {
    if (!entry.tabulated()) return strictly_above_j(*entry.oracle, a, b);
    if (!graph) graph = CayleyGraph::build(*entry.table, default_generators(*entry.table));
    return strictly_above_j(*graph, a, b);
  }
  ElementId star(ElementId a) const {
    return entry.tabulated() ? entry.table->star(a) : entry.oracle->star(a);
  }
  ElementId product(ElementId a, ElementId b) const {
    return entry.tabulated() ? entry.table->product(a, b) : entry.oracle->product(a, b);
  }
};

nlohmann::ordered_json relation_json(const std::vector<Relation>& relations) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& r : relations) j[r.name] = r.holds;
  return j;
}

nlohmann::ordered_json matrices_json(const std::vector<Matrix>& ms) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& m : ms) j.push_back(m.to_string());
  return j;
}

// Evidence for type A tied to a concrete construction. Returns the id of
// the idempotent the construction exhibits, when it lies in the entry.
std::optional<ElementId> add_certificates(const CatalogEntry& entry, Locator& loc,
                                          nlohmann::ordered_json& out) {
  auto located = [&](const Matrix& e, nlohmann::ordered_json& cert) -> std::optional<ElementId> {
    auto id = entry.find(e);
    if (!id) return std::nullopt;
    const ElementId below = loc.product(loc.star(*id), *id);
    cert["witnessId"] = *id;
    cert["strictlyAboveStarProduct"] = loc.strictly_above(*id, below);
    return id;
  };

  if (entry.name == "tb") {
    const auto& f2 = gf::field(2, 1);
    const TriangularWitness w = triangular_tsl_witness(2, f2);
    nlohmann::ordered_json cert;
    cert["elements"] = matrices_json(w.elements);
    cert["isTsl"] = w.is_tsl;
    const ElementId e11 = 1;
    cert["witnessId"] = e11;
    cert["strictlyAboveStarProduct"] = loc.strictly_above(e11, loc.product(loc.star(e11), e11));
    out["tslSubsemigroup"] = std::move(cert);
    return e11;
  }
  if (!entry.family) return std::nullopt;
  const auto& fam = *entry.family;
  const gf::Field& field = *fam.field;

  if (fam.family == MatrixFamily::UpperTriangular && fam.involution == Involution::Skew &&
      fam.n >= 2) {
    const TriangularWitness w = triangular_tsl_witness(fam.n, field);
    nlohmann::ordered_json cert;
    cert["elements"] = matrices_json(w.elements);
    cert["isTsl"] = w.is_tsl;
    auto id = located(Matrix::unit(field, fam.n, 0, 0), cert);
    out["tslSubsemigroup"] = std::move(cert);
    return w.is_tsl ? id : std::nullopt;
  }
  if (fam.family != MatrixFamily::Full || fam.involution != Involution::Transpose ||
      fam.n < 2) {
    return std::nullopt;
  }
  nlohmann::ordered_json cert;
  std::optional<EfgWitness> w;
  if (fam.n == 2) {
    try {
      w = efg2_witness(field);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSqrtMinusOne) throw;
      cert["available"] = false;
      cert["reason"] = "-1 is not a square in " + field.name();
      out["efg"] = std::move(cert);
      return std::nullopt;
    }
  } else {
    w = efg_witness(fam.n, field);
  }
  cert["available"] = true;
  cert["x"] = w->x.to_string();
  if (fam.n >= 3) cert["y"] = w->y.to_string();
  if (fam.n == 2 && field.characteristic() == 2) cert["note"] = "characteristic 2: -1 = 1, so x = 1";
  cert["e"] = w->e.to_string();
  cert["f"] = w->f.to_string();
  cert["g"] = w->g.to_string();
  cert["relations"] = relation_json(w->relations);
  cert["relationsHold"] = w->relations_hold;
  cert["subsemigroupSize"] = w->subsemigroup.size();
  cert["quotientIsTsl"] = w->quotient_is_tsl;
  auto id = located(w->e, cert);
  out["efg"] = std::move(cert);
  return w->quotient_is_tsl ? id : std::nullopt;
}

void add_properties(const InvolutorySemigroup& s, AnalysisReport& r) {
  bool mp_all = true;
  for (ElementId a = 0; a < s.size() && mp_all; ++a) {
    if (is_regular_element(s, a) && !moore_penrose(s, a)) mp_all = false;
  }
  const OrderData od = order_data(s);
  auto& p = r.properties;
  p["globalN"] = od.global_n;
  p["subgroupExponent"] = od.subgroup_exponent;
  p["omegaIdentity"] = omega_identity_check(s);
  p["moorePenroseForRegular"] = mp_all;
  p["projectionInRegularClasses"] =
      has_projection_in_every_regular_l_class(s) && has_projection_in_every_regular_r_class(s);
  nlohmann::ordered_json reg;
  reg["n"] = od.subgroup_exponent;
  reg["holds"] = regular_identity_check(s, od.subgroup_exponent);
  p["regularIdentity"] = std::move(reg);
}

}  // namespace

CatalogEntry load_semigroup(const std::string& spec, const CatalogOptions& options) {
  if (spec == "tsl") return entry_from(tsl(), "tsl", catalog_reduct_status("tsl"));
  if (spec == "b21-t" || spec == "b21") {
    return entry_from(b21(), "b21-t", catalog_reduct_status("b21-t"));
  }
  if (spec == "tb" || spec == "b21-skew") {
    return entry_from(tb(), "tb", catalog_reduct_status("tb"));
  }
  if (spec.rfind("cayley:", 0) == 0) {
    return entry_from(load_cayley_json(spec.substr(7)), spec, ReductStatus{});
  }
  if (spec.rfind("mn:", 0) == 0 || spec.rfind("tn:", 0) == 0) {
    const auto parts = split(spec, ':');
    if (parts.size() != 4) {
      throw Error(ErrorCode::UnknownCatalogName, "expected <family>:<n>:<q>:<t|skew>, got " + spec);
    }
    const std::uint32_t n = parse_uint(parts[1], spec);
    const gf::Field& f = gf::field_of_order(parse_uint(parts[2], spec));
    const Involution inv = parse_involution(parts[3], spec);
    return parts[0] == "mn" ? mn(n, f, inv, options) : tn(n, f, inv, options);
  }
  throw Error(ErrorCode::UnknownCatalogName, "unknown semigroup spec " + spec);
}

ReductStatus parse_reduct_override(const std::string& text) {
  if (text == "infb") return {InfbStatus::Infb, "user-supplied"};
  if (text == "not-infb") return {InfbStatus::NotInfb, "user-supplied"};
  if (text == "unknown") return {InfbStatus::Unknown, "user-supplied"};
  throw Error(ErrorCode::SyntaxError, "reduct must be infb, not-infb or unknown");
}

std::string to_string(VerdictRule rule) {
  switch (rule) {
    case VerdictRule::LemmaEasy: return "Lemma-easy";
    case VerdictRule::TheoremTwisted: return "Theorem-twisted";
    case VerdictRule::CorollaryCharacterization: return "Corollary-characterization";
    case VerdictRule::PropositionNinfb: return "Proposition-NINFB";
    case VerdictRule::InsufficientInformation: return "insufficient-information";
  }
  return "?";
}

AnalysisReport decide_infb(const CatalogEntry& entry, const ReductStatus& reduct,
                           const AnalysisOptions& options) {
  if (!entry.tabulated() && !entry.oracle) {
    throw Error(ErrorCode::LimitExceeded,
                entry.name + " has " + std::to_string(entry.size) +
                    " elements, beyond the enumeration bound");
  }
  AnalysisReport r;
  r.name = entry.name;
  r.size = entry.size;
  r.reduct = reduct;
  Stopwatch clock;
  Locator loc{entry, std::nullopt};

  r.regular = entry.tabulated() ? is_regular(*entry.table) : oracle_is_regular(*entry.oracle);
  r.timings_ms.emplace_back("regularity", clock.lap());

  const std::optional<ElementId> hint = add_certificates(entry, loc, r.certificates);
  r.timings_ms.emplace_back("certificates", clock.lap());

  std::optional<SandwichResult> sandwich;
  if (entry.tabulated()) {
    const InvolutorySemigroup& s = *entry.table;
    r.type = classify_type(s);
    const MembershipResult m = tsl_membership(s);
    r.tsl_divides = m.member;
    r.properties["tslCertifiedBy"] = m.certified_by;
    r.properties["tslDivisionCrossChecked"] = m.cross_checked;
    r.timings_ms.emplace_back("type", clock.lap());
    add_properties(s, r);
    r.timings_ms.emplace_back("properties", clock.lap());
    sandwich = find_sandwich_identity(s, options.max_iota_len);
    r.products_evaluated += sandwich->products_evaluated;
    r.timings_ms.emplace_back("sandwich", clock.lap());
  } else {
    r.type = classify_type(*entry.oracle, hint);
    r.tsl_divides = r.type.kind == TypeResult::Kind::A;
    if (r.tsl_divides) {
      r.properties["tslCertifiedBy"] =
          hint && *hint == r.type.witness ? "construction witness, targeted ideal search"
                                          : "Green's J-classes";
    }
    r.timings_ms.emplace_back("type", clock.lap());
  }
  r.products_evaluated += r.type.products_evaluated;

  const bool type_a = r.type.kind == TypeResult::Kind::A;
  if (sandwich && sandwich->iota) r.iota = sandwich->iota;

  if (reduct.status == InfbStatus::NotInfb) {
    r.verdict = InfbStatus::NotInfb;
    r.rule = VerdictRule::LemmaEasy;
  } else if (type_a && reduct.status == InfbStatus::Infb) {
    r.verdict = InfbStatus::Infb;
    r.rule = VerdictRule::TheoremTwisted;
  } else if (!type_a && r.regular && reduct.status == InfbStatus::Infb) {
    if (entry.tabulated() && !r.properties["regularIdentity"]["holds"].get<bool>()) {
      throw std::logic_error("regular type-B semigroup fails x = (xx*)^n x");
    }
    r.verdict = InfbStatus::NotInfb;
    r.rule = VerdictRule::CorollaryCharacterization;
  } else if (!type_a && r.iota) {
    r.verdict = InfbStatus::NotInfb;
    r.rule = VerdictRule::PropositionNinfb;
  } else {
    r.verdict = InfbStatus::Unknown;
    r.rule = VerdictRule::InsufficientInformation;
  }
  if (r.verdict == InfbStatus::Infb && r.iota) {
    throw Error(ErrorCode::InconsistentReduct,
                "reduct marked INFB but " + r.name + " satisfies x = x" + r.iota->to_string() + "x");
  }
  return r;
}

nlohmann::ordered_json to_json(const AnalysisReport& r, bool include_timings) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["name"] = r.name;
  j["size"] = r.size;
  j["regular"] = r.regular;
  nlohmann::ordered_json type;
  if (r.type.kind == TypeResult::Kind::A) {
    type["kind"] = "A";
    type["witness"] = r.type.witness;
  } else {
    type["kind"] = "B";
    type["N"] = r.type.n;
  }
  j["type"] = std::move(type);
  j["tslDivides"] = r.tsl_divides;
  j["reduct"] = {{"status", to_string(r.reduct.status)}, {"provenance", r.reduct.provenance}};
  j["verdict"] = to_string(r.verdict);
  j["verdictRule"] = to_string(r.rule);
  if (r.iota) j["iota"] = r.iota->to_string();
  j["certificates"] = r.certificates;
  j["properties"] = r.properties;
  j["productsEvaluated"] = r.products_evaluated;
  if (include_timings) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    double total = 0;
    for (const auto& [stage, ms] : r.timings_ms) {
      t[stage] = ms;
      total += ms;
    }
    t["total"] = total;
    j["timingsMs"] = std::move(t);
  }
  return j;
}

}  // namespace invsg
