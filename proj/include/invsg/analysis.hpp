#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsg/catalog.hpp"
#include "invsg/words.hpp"
#include "json.hpp"

namespace invsg {

// Resolves a semigroup spec string: tsl | b21-t | b21 | tb | b21-skew |
// mn:<n>:<q>:<t|skew> | tn:<n>:<q>:<t|skew> | cayley:<path>. Catalog
// members carry their published reduct status; Cayley files get Unknown.
CatalogEntry load_semigroup(const std::string& spec, const CatalogOptions& options = {});

// "infb", "not-infb" or "unknown"; provenance "user-supplied".
ReductStatus parse_reduct_override(const std::string& text);

enum class VerdictRule {
  LemmaEasy,
  TheoremTwisted,
  CorollaryCharacterization,
  PropositionNinfb,
  InsufficientInformation,
};

std::string to_string(VerdictRule rule);

struct AnalysisOptions {
  std::uint64_t budget = kDefaultBudget;
  std::size_t max_iota_len = 8;
};

struct AnalysisReport {
  std::string name;
  std::size_t size = 0;
  bool regular = false;
  TypeResult type;
  bool tsl_divides = false;
  ReductStatus reduct;
  InfbStatus verdict = InfbStatus::Unknown;
  VerdictRule rule = VerdictRule::InsufficientInformation;
  std::optional<InvWord> iota;
  // Construction-specific evidence (witness matrices, relation checks).
  nlohmann::ordered_json certificates = nlohmann::ordered_json::object();
  // Characterizations of type B evaluated on the table.
  nlohmann::ordered_json properties = nlohmann::ordered_json::object();
  std::uint64_t products_evaluated = 0;
  std::vector<std::pair<std::string, double>> timings_ms;
};

// The decision pipeline. Rules in order: a non-INFB reduct settles the
// question; type A over an INFB reduct gives INFB; type B over a regular
// semigroup with INFB reduct gives NotINFB; a sandwich identity
// x = x iota(x) x gives NotINFB; everything else is Unknown.
AnalysisReport decide_infb(const CatalogEntry& entry, const ReductStatus& reduct,
                           const AnalysisOptions& options = {});

nlohmann::ordered_json to_json(const AnalysisReport& report, bool include_timings = true);

}  // namespace invsg
