// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "invsg/analysis.hpp"
#include "invsg/catalog.hpp"
#include "invsg/cli.hpp"
#include "invsg/green.hpp"
#include "invsg/words.hpp"

using namespace invsg;
using nlohmann::json;

namespace {

constexpr double kTbLimitS = 1.0;
constexpr double kB21LimitS = 1.0;
constexpr double kM2Gf5LimitS = 30.0;
constexpr double kM2Gf3LimitS = 10.0;
constexpr double kM3Gf2LimitS = 30.0;
constexpr double kT4Gf3LimitS = 120.0;
constexpr std::size_t kCatalogLimit = 700;
constexpr std::size_t kStabilityLimit = 100;
constexpr std::size_t kIdealLimit = 200;
constexpr int kStarredWords = 200;
constexpr int kTransportCases = 1000;
constexpr std::uint32_t kSeed = 20260101;

enum : ElementId { TslE = 0, TslF = 1, Tsl0 = 2 };

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed conditions; the first few are kept for the report line.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) failed_.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " [" + std::to_string(count_) + " checks]"};
    std::string d = std::to_string(failures_) + "/" + std::to_string(count_) + " failed:";
    for (const auto& f : failed_) d += " " + f + ";";
    return {false, d};
  }

 private:
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> failed_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

struct Analysis {
  json report;
  double seconds = 0;
};

Analysis analyze(const std::string& spec) {
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = run_cli({"analyze", "--sg", spec}, out, err);
  const double elapsed = seconds_since(start);
  if (code != 0) throw std::runtime_error("analyze " + spec + " exited " + std::to_string(code) + ": " + err.str());
  return {json::parse(out.str()), elapsed};
}

bool all_relations_hold(const json& efg) {
  if (!efg.contains("relations") || efg["relations"].size() != 8) return false;
  for (const auto& [name, value] : efg["relations"].items()) {
    if (value != true) return false;
  }
  return efg["relationsHold"] == true;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Every tabulated catalog semigroup with at most `limit` elements.
std::vector<InvolutorySemigroup> catalog(std::size_t limit) {
  std::vector<InvolutorySemigroup> out = {tsl(), b21(), tb(), testing::trivial_semigroup(),
                                          testing::null_semigroup(), testing::chain3(),
                                          testing::tsl_plain_star()};
  for (std::uint32_t m = 1; m <= 6; ++m) out.push_back(testing::cyclic_group(m));
  const std::vector<std::size_t> orders = {2, 3, 4, 5, 7, 8, 9};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const std::size_t q : orders) {
      if (ipow(q, n * n) <= limit) {
        for (const char* inv : {"t", "skew"}) {
          out.push_back(*load_semigroup("mn:" + std::to_string(n) + ":" + std::to_string(q) + ":" + inv).table);
        }
      }
      if (ipow(q, n * (n + 1) / 2) <= limit) {
        out.push_back(*load_semigroup("tn:" + std::to_string(n) + ":" + std::to_string(q) + ":skew").table);
      }
    }
  }
  std::erase_if(out, [&](const InvolutorySemigroup& s) { return s.size() > limit; });
  return out;
}

std::vector<ElementId> brute_ideal(const InvolutorySemigroup& s, ElementId a) {
  std::set<ElementId> ideal = {a};
  for (ElementId x = 0; x < s.size(); ++x) {
    ideal.insert(s.product(x, a));
    ideal.insert(s.product(a, x));
    for (ElementId y = 0; y < s.size(); ++y) ideal.insert(s.product(s.product(x, a), y));
  }
  return {ideal.begin(), ideal.end()};
}

InvWord random_word(std::mt19937& rng, std::size_t max_len) {
  static const std::vector<std::string> letters = {"x", "y", "z"};
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::bernoulli_distribution star(0.5);
  std::vector<Factor> f;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) f.push_back({letters[pick(rng)], star(rng)});
  return InvWord(std::move(f));
}

Outcome criterion1() {
  Checks c;
  const Analysis a = analyze("tb");
  const json& r = a.report;
  c.expect(r["verdict"] == "INFB", "verdict");
  c.expect(r["verdictRule"] == "Theorem-twisted", "rule");
  c.expect(r["type"]["kind"] == "A", "type A");
  const ElementId w = r["type"]["witness"].get<ElementId>();
  const InvolutorySemigroup s = tb();
  c.expect(w < s.size() && s.product(w, w) == w, "witness is idempotent");
  c.expect(r["tslDivides"] == true, "tslDivides");
  c.expect(divides(tsl(), s).divides, "brute-force divides");
  c.expect(a.seconds < kTbLimitS, "runtime " + fmt_seconds(a.seconds));
  return c.outcome("tb INFB via Theorem-twisted, witness " + std::to_string(w) + ", " + fmt_seconds(a.seconds));
}

Outcome criterion2() {
  Checks c;
  const Analysis a = analyze("b21-t");
  const json& r = a.report;
  const InvolutorySemigroup s = b21();
  c.expect(r["verdict"] == "NotINFB", "verdict");
  c.expect(r["type"]["kind"] == "B" && r["type"]["N"] == 2, "type B, N = 2");
  c.expect(satisfies(s, parse_identity("x = xx*x")).holds, "x = xx*x");
  c.expect(regular_identity_check(s, 1), "regular identity n = 1");
  for (ElementId e = 0; e < s.size(); ++e) {
    c.expect(moore_penrose(s, e).has_value(), "Moore-Penrose of " + s.label(e));
  }
  c.expect(omega_identity_check(s), "omega identity");
  c.expect(r["properties"]["omegaIdentity"] == true, "omegaIdentity in report");
  c.expect(a.seconds < kB21LimitS, "runtime " + fmt_seconds(a.seconds));
  return c.outcome("b21-t NotINFB, type B N=2, " + fmt_seconds(a.seconds));
}

Outcome criterion3() {
  Checks c;
  const Analysis a = analyze("mn:2:5:t");
  const json& r = a.report;
  c.expect(r["size"] == 625, "625 elements");
  c.expect(r["type"]["kind"] == "A", "type A");
  const json& efg = r["certificates"]["efg"];
  c.expect(efg["available"] == true && efg["x"] == "2", "x = 2");
  c.expect(all_relations_hold(efg), "eight relations");
  c.expect(efg["quotientIsTsl"] == true, "quotient is TSL in report");
  c.expect(efg["witnessId"] == r["type"]["witness"], "type witness is the efg witness");
  const EfgWitness w = efg2_witness(gf::field(5, 1));
  c.expect(w.subsemigroup.size() == 4, "{e,f,g,0} has 4 elements");
  c.expect(is_isomorphic(w.quotient.semigroup, tsl()).isomorphic, "Rees quotient by {g,0} is TSL");
  c.expect(r["verdict"] == "INFB", "verdict");
  c.expect(a.seconds < kM2Gf5LimitS, "runtime " + fmt_seconds(a.seconds));
  return c.outcome("M2(GF5) x=2, 8 relations, quotient TSL, INFB, " + fmt_seconds(a.seconds));
}

Outcome criterion4() {
  Checks c;
  const Analysis a = analyze("mn:2:3:t");
  const json& r = a.report;
  c.expect(r["size"] == 81, "81 elements");
  c.expect(r["type"]["kind"] == "B", "type B");
  c.expect(r["verdict"] == "NotINFB", "verdict");
  c.expect(a.seconds < kM2Gf3LimitS, "runtime " + fmt_seconds(a.seconds));
  return c.outcome("M2(GF3) type B N=" + r["type"].value("N", json()).dump() + ", NotINFB, " +
                   fmt_seconds(a.seconds));
}

Outcome criterion5() {
  Checks c;
  const Analysis a = analyze("mn:3:2:t");
  const json& r = a.report;
  const auto& f2 = gf::field(2, 1);
  const auto [x, y] = gf::chevalley_warning_witness(f2);
  c.expect(x == f2.from_int(1) && y == f2.from_int(0), "Chevalley-Warning (1,0)");
  c.expect(r["size"] == 512, "512 elements");
  const json& efg = r["certificates"]["efg"];
  c.expect(efg["x"] == "1" && efg["y"] == "0", "certificate (1,0)");
  c.expect(all_relations_hold(efg), "relations");
  c.expect(efg["quotientIsTsl"] == true, "quotient is TSL");
  c.expect(r["type"]["kind"] == "A", "type A");
  c.expect(r["verdict"] == "INFB", "verdict");
  c.expect(a.seconds < kM3Gf2LimitS, "runtime " + fmt_seconds(a.seconds));
  return c.outcome("M3(GF2) witness (1,0), type A, INFB, " + fmt_seconds(a.seconds));
}

Outcome criterion6() {
  Checks c;
  const Analysis a = analyze("tn:4:3:skew");
  const json& r = a.report;
  c.expect(r["size"] == 59049, "59049 elements");
  c.expect(r["type"]["kind"] == "A", "type A");
  c.expect(r["verdict"] == "INFB", "verdict");
  c.expect(r["certificates"]["tslSubsemigroup"]["isTsl"] == true, "{e11,e44,0} is TSL");
  c.expect(!r["properties"].contains("globalN"), "no full Green's data");

  const auto& f3 = gf::field(3, 1);
  const TriangularWitness tw = triangular_tsl_witness(4, f3);
  c.expect(is_isomorphic(tw.subsemigroup, tsl()).isomorphic, "witness subsemigroup isomorphic to TSL");
  const CatalogEntry entry = load_semigroup("tn:4:3:skew");
  c.expect(entry.oracle.has_value(), "oracle entry");
  const auto e11 = entry.find(Matrix::unit(f3, 4, 0, 0));
  c.expect(e11.has_value() && r["type"]["witness"] == *e11, "type witness is e11");
  if (e11 && entry.oracle) {
    const OracleSemigroup& o = *entry.oracle;
    const ElementId below = o.product(o.star(*e11), *e11);
    c.expect(entry.find(Matrix::zero(f3, 4)) == below, "e44 e11 = 0");
    c.expect(strictly_above_j(o, *e11, below), "targeted strictly_above_J(e11, 0)");
  }
  c.expect(a.seconds < kT4Gf3LimitS, "runtime " + fmt_seconds(a.seconds));

  const Analysis small = analyze("tn:3:3:skew");
  c.expect(small.report["verdict"] == "NotINFB", "T3(GF3) verdict");
  c.expect(small.report["verdictRule"] == "Lemma-easy", "T3(GF3) rule");
  return c.outcome("T4(GF3) 59049 elements, INFB, " + fmt_seconds(a.seconds) +
                   "; T3(GF3) NotINFB via Lemma-easy");
}

Outcome criterion7(const std::vector<InvolutorySemigroup>& cat) {
  Checks c;
  std::size_t type_a = 0;
  for (const auto& s : cat) {
    const bool a = classify_type(s).kind == TypeResult::Kind::A;
    type_a += a;
    c.expect(a == divides(tsl(), s).divides, s.name());
  }
  return c.outcome(std::to_string(cat.size()) + " semigroups, " + std::to_string(type_a) +
                   " of type A, zero mismatches");
}

Outcome criterion8(const std::vector<InvolutorySemigroup>& cat) {
  Checks c;
  for (const auto& s : cat) {
    const bool type_b = classify_type(s).kind == TypeResult::Kind::B;
    bool moore_penrose_all = true;
    for (ElementId a = 0; a < s.size() && moore_penrose_all; ++a) {
      if (is_regular_element(s, a)) moore_penrose_all = moore_penrose(s, a).has_value();
    }
    bool simple_all = true;
    for (const ElementId g : idempotents(s)) {
      const std::vector<ElementId> gen = {g};
      if (!is_completely_simple(involutory_subsemigroup(s, gen).semigroup)) {
        simple_all = false;
        break;
      }
    }
    c.expect(omega_identity_check(s) == type_b, s.name() + " omega");
    c.expect(moore_penrose_all == type_b, s.name() + " Moore-Penrose");
    c.expect(has_projection_in_every_regular_l_class(s) == type_b, s.name() + " L-projections");
    c.expect(has_projection_in_every_regular_r_class(s) == type_b, s.name() + " R-projections");
    c.expect(simple_all == type_b, s.name() + " <g> completely simple");
  }
  return c.outcome(std::to_string(cat.size()) + " semigroups, five conditions agree");
}

Outcome criterion9(const std::vector<InvolutorySemigroup>& cat) {
  Checks c;
  for (const auto& s : cat) {
    const GreensData g = greens(s);
    c.expect(g.d_class == g.j_class, s.name() + " D = J");
    if (s.size() <= kStabilityLimit) c.expect(stability_check_all(s, g).ok, s.name() + " stability");
    if (s.size() <= kIdealLimit) {
      const auto gens = default_generators(s);
      for (ElementId a = 0; a < s.size(); ++a) {
        c.expect(principal_ideal(s, gens, a) == brute_ideal(s, a),
                 s.name() + " ideal of " + std::to_string(a));
      }
    }
  }
  const InvolutorySemigroup b = b21();
  const GreensData g = greens(b);
  std::size_t pairs = 0;
  for (ElementId x = 0; x < b.size(); ++x) {
    for (ElementId y = 0; y < b.size(); ++y) {
      if (g.d_class[x] != g.d_class[y]) continue;
      ++pairs;
      c.expect(miller_clifford_check(b, g, x, y), "Miller-Clifford " + b.label(x) + "," + b.label(y));
    }
  }
  return c.outcome(std::to_string(cat.size()) + " semigroups, " + std::to_string(pairs) +
                   " same-D pairs of B21");
}

Outcome criterion10() {
  Checks c;
  const InvolutorySemigroup t = tsl();
  for (std::size_t n = 1; n <= 5; ++n) {
    Substitution sigma;
    for (const auto& l : zimin(n).letters()) sigma[l] = TslE;
    c.expect(evaluate(t, zimin(n), sigma) == TslE, "Z_" + std::to_string(n));
  }
  std::mt19937 rng(kSeed);
  for (int i = 0; i < kStarredWords; ++i) {
    InvWord w = random_word(rng, 8);
    while (!w.has_starred_letter()) w = random_word(rng, 8);
    const ElementId v = tsl_star_separation(w);
    c.expect(v == TslF || v == Tsl0, "separation of " + w.to_string());
  }
  c.expect(zimin_isoterm_bounded(tb(), 2, 5).holds_up_to_bound, "isoterm(TB, 2, 5)");

  const std::vector<InvolutorySemigroup> targets = {tsl(), b21(), tb()};
  for (int i = 0; i < kTransportCases; ++i) {
    const auto& s = targets[i % targets.size()];
    const InvWord u = random_word(rng, 6);
    const InvWord v = random_word(rng, 6);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(s.size() - 1));
    Substitution sigma;
    for (const char* l : {"x", "y", "z"}) sigma[l] = pick(rng);
    c.expect(star_word(star_word(u)) == u, "involution on " + u.to_string());
    c.expect(star_word(u * v) == star_word(v) * star_word(u), "anti-automorphism");
    c.expect(evaluate(s, star_word(u), sigma) == s.star(evaluate(s, u, sigma)),
             "transport on " + u.to_string());
  }
  return c.outcome("Zimin in TSL, " + std::to_string(kStarredWords) + " starred words, isoterm(TB,2,5), " +
                   std::to_string(kTransportCases) + " transport cases");
}

Outcome criterion11() {
  Checks c;
  const auto& f17 = gf::field(17, 1);
  const auto r = conjugator_r(2, f17);
  c.expect(r.has_value(), "R found");
  if (r) {
    c.expect(r->r * r->r == Matrix::anti_identity(f17, 2), "R^2 = J");
    c.expect(r->r * r->r_inverse == Matrix::identity(f17, 2), "R R^-1 = I");
    c.expect(r->samples > 0 && r->multiplicative, "psi multiplicative on samples");
    c.expect(r->intertwines_stars, "psi intertwines the involutions");
  }
  return c.outcome("R = " + (r ? r->r.to_string() : std::string("none")) + " over GF(17)");
}

Outcome criterion12() {
  Checks c;
  const std::vector<std::string> specs = {"tsl", "tb", "b21-t", "mn:2:3:t", "mn:2:5:t", "tn:2:3:skew",
                                          "tn:3:3:skew"};
  for (const auto& spec : specs) {
    json a = analyze(spec).report;
    json b = analyze(spec).report;
    a.erase("timingsMs");
    b.erase("timingsMs");
    c.expect(a.dump() == b.dump(), spec);
  }
  return c.outcome(std::to_string(specs.size()) + " specs byte-identical apart from timings");
}

}  // namespace

int main() {
  const std::vector<InvolutorySemigroup> cat = catalog(kCatalogLimit);
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1,
      criterion2,
      criterion3,
      criterion4,
      criterion5,
      criterion6,
      [&] { return criterion7(cat); },
      [&] { return criterion8(cat); },
      [&] { return criterion9(cat); },
      criterion10,
      criterion11,
      criterion12,
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
