#include "invsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "invsg/generate.hpp"

namespace invsg {

FiniteSemigroup::FiniteSemigroup(std::size_t size, std::vector<ElementId> table,
                                 std::string name)
    : size_(size),
      table_(std::make_shared<const std::vector<ElementId>>(std::move(table))),
      name_(std::move(name)) {}

std::optional<ElementId> FiniteSemigroup::find_identity() const {
  for (ElementId e = 0; e < size_; ++e) {
    bool ok = true;
    for (ElementId a = 0; a < size_ && ok; ++a) {
      ok = product(e, a) == a && product(a, e) == a;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<ElementId> FiniteSemigroup::find_zero() const {
  for (ElementId z = 0; z < size_; ++z) {
    bool ok = true;
    for (ElementId a = 0; a < size_ && ok; ++a) {
      ok = product(z, a) == z && product(a, z) == z;
    }
    if (ok) return z;
  }
  return std::nullopt;
}

std::string InvolutorySemigroup::label(ElementId a) const {
  if (a < labels_.size()) return labels_[a];
  return std::to_string(a);
}

ElementId InvolutorySemigroup::power(ElementId a, std::size_t exponent) const {
  if (exponent == 0) {
    throw Error(ErrorCode::InvalidConstruction, "exponent must be positive");
  }
  ElementId result = a;
  ElementId base = a;
  --exponent;
  while (exponent > 0) {
    if (exponent & 1U) result = product(result, base);
    base = product(base, base);
    exponent >>= 1U;
  }
  return result;
}

InvolutorySemigroup InvolutorySemigroup::with_name(std::string name) const {
  InvolutorySemigroup out = *this;
  out.base_.set_name(std::move(name));
  return out;
}

InvolutorySemigroup InvolutorySemigroup::with_labels(
    std::vector<std::string> labels) const {
  if (labels.size() != size()) {
    throw Error(ErrorCode::MalformedTable, "label count does not match size");
  }
  InvolutorySemigroup out = *this;
  out.labels_ = std::move(labels);
  return out;
}

InvolutorySemigroup InvolutorySemigroup::with_generators(
    std::vector<ElementId> gens) const {
  for (ElementId g : gens) {
    if (g >= size()) {
      throw Error(ErrorCode::MalformedTable, "generator id out of range", {g});
    }
  }
  InvolutorySemigroup out = *this;
  out.generators_ = std::move(gens);
  return out;
}

InvolutorySemigroup make_involutory(FiniteSemigroup base,
                                    std::vector<ElementId> star, bool trusted) {
  const std::size_t n = base.size();
  if (star.size() != n) {
    throw Error(ErrorCode::MalformedTable, "star must have one entry per element");
  }
  for (ElementId a = 0; a < n; ++a) {
    if (star[a] >= n) {
      throw Error(ErrorCode::MalformedTable, "star entry out of range", {a});
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    if (star[star[a]] != a) {
      throw Error(ErrorCode::StarNotInvolution,
                  "(a*)* != a for a = " + std::to_string(a), {a});
    }
  }
  if (!trusted || n <= 4096) {
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        if (star[base.product(a, b)] != base.product(star[b], star[a])) {
          throw Error(ErrorCode::StarNotAntiAutomorphism,
                      "(ab)* != b*a* for a = " + std::to_string(a) +
                          ", b = " + std::to_string(b),
                      {a, b});
        }
      }
    }
  }
  InvolutorySemigroup out;
  out.base_ = std::move(base);
  out.star_ = std::move(star);
  return out;
}

InvolutorySemigroup from_cayley(std::size_t size, std::vector<ElementId> table,
                                std::vector<ElementId> star, std::string name,
                                const CayleyOptions& options) {
  if (size == 0) throw Error(ErrorCode::MalformedTable, "size must be positive");
  if (table.size() != size * size) {
    throw Error(ErrorCode::MalformedTable, "table must be size x size");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= size) {
      throw Error(ErrorCode::MalformedTable, "table entry out of range",
                  {i / size, i % size});
    }
  }
  FiniteSemigroup base(size, std::move(table), std::move(name));
  if (!options.trusted) {
    for (ElementId a = 0; a < size; ++a) {
      for (ElementId b = 0; b < size; ++b) {
        const ElementId ab = base.product(a, b);
        for (ElementId c = 0; c < size; ++c) {
          if (base.product(ab, c) != base.product(a, base.product(b, c))) {
            throw Error(ErrorCode::NonAssociative,
                        "(ab)c != a(bc) for a = " + std::to_string(a) +
                            ", b = " + std::to_string(b) +
                            ", c = " + std::to_string(c),
                        {a, b, c});
          }
        }
      }
    }
  }
  if (options.identity) {
    ElementId e = *options.identity;
    bool ok = e < size;
    for (ElementId a = 0; ok && a < size; ++a) {
      ok = base.product(e, a) == a && base.product(a, e) == a;
    }
    if (!ok) throw Error(ErrorCode::InvalidIdentity, "not an identity", {e});
    base.set_identity(e);
  }
  if (options.zero) {
    ElementId z = *options.zero;
    bool ok = z < size;
    for (ElementId a = 0; ok && a < size; ++a) {
      ok = base.product(z, a) == z && base.product(a, z) == z;
    }
    if (!ok) throw Error(ErrorCode::InvalidZero, "not a zero", {z});
    base.set_zero(z);
  }
  return make_involutory(std::move(base), std::move(star), options.trusted);
}

OracleSemigroup::OracleSemigroup(std::string name, std::vector<ElementId> star,
                                 std::vector<ElementId> generators,
                                 Product product,
                                 std::vector<std::string> labels)
    : name_(std::move(name)),
      star_(std::move(star)),
      generators_(std::move(generators)),
      product_(std::move(product)),
      labels_(std::move(labels)) {}

std::string OracleSemigroup::label(ElementId a) const {
  if (a < labels_.size()) return labels_[a];
  return std::to_string(a);
}

OracleSemigroup as_oracle(const InvolutorySemigroup& s) {
  FiniteSemigroup base = s.base();
  std::vector<ElementId> gens = s.generators();
  if (gens.empty()) {
    gens.resize(s.size());
    std::iota(gens.begin(), gens.end(), ElementId{0});
  }
  return OracleSemigroup(
      s.name(), s.star_map(), std::move(gens),
      [base](ElementId a, ElementId b) { return base.product(a, b); },
      s.labels());
}

std::vector<ElementId> idempotents(const InvolutorySemigroup& s) {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < s.size(); ++a) {
    if (s.product(a, a) == a) out.push_back(a);
  }
  return out;
}

std::vector<ElementId> idempotents(const OracleSemigroup& s) {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < s.size(); ++a) {
    if (s.product(a, a) == a) out.push_back(a);
  }
  return out;
}

std::optional<ElementId> regularity_witness(const InvolutorySemigroup& s,
                                            ElementId a) {
  for (ElementId y = 0; y < s.size(); ++y) {
    if (s.product(s.product(a, y), a) == a) return y;
  }
  return std::nullopt;
}

bool is_regular_element(const InvolutorySemigroup& s, ElementId a) {
  return regularity_witness(s, a).has_value();
}

bool is_regular(const InvolutorySemigroup& s) {
  for (ElementId a = 0; a < s.size(); ++a) {
    if (!is_regular_element(s, a)) return false;
  }
  return true;
}

namespace {

using ElementEnumeration = Enumeration<ElementId>;

ElementEnumeration close(const InvolutorySemigroup& s,
                         std::span<const ElementId> gens) {
  BlackBoxGenerators<ElementId> bb;
  bb.generators.assign(gens.begin(), gens.end());
  bb.multiply = [&s](ElementId a, ElementId b) { return s.product(a, b); };
  bb.star = [&s](ElementId a) { return s.star(a); };
  return enumerate(bb, s.size());
}

}  // namespace

Subsemigroup involutory_subsemigroup(const InvolutorySemigroup& s,
                                     std::span<const ElementId> gens) {
  if (gens.empty()) {
    throw Error(ErrorCode::InvalidConstruction, "generator set must be nonempty");
  }
  for (ElementId g : gens) {
    if (g >= s.size()) {
      throw Error(ErrorCode::MalformedTable, "generator id out of range", {g});
    }
  }
  auto e = close(s, gens);
  std::vector<std::string> labels;
  for (ElementId a : e.elements) labels.push_back(s.label(a));
  auto sub = e.closure->tabulate("<" + s.name() + " sub>", std::move(labels));
  return {std::move(sub), std::move(e.elements)};
}

Quotient rees_quotient(const InvolutorySemigroup& s,
                       std::span<const ElementId> ideal) {
  const std::size_t n = s.size();
  if (ideal.empty()) throw Error(ErrorCode::NotAnIdeal, "ideal must be nonempty");
  std::vector<bool> in(n, false);
  for (ElementId a : ideal) {
    if (a >= n) throw Error(ErrorCode::NotAnIdeal, "element out of range", {a});
    in[a] = true;
  }
  for (ElementId i = 0; i < n; ++i) {
    if (!in[i]) continue;
    for (ElementId a = 0; a < n; ++a) {
      if (!in[s.product(a, i)] || !in[s.product(i, a)]) {
        throw Error(ErrorCode::NotAnIdeal,
                    "products of " + std::to_string(i) + " and " +
                        std::to_string(a) + " leave the set",
                    {i, a});
      }
    }
  }
  for (ElementId i = 0; i < n; ++i) {
    if (in[i] && !in[s.star(i)]) {
      throw Error(ErrorCode::NotStarClosed,
                  "star image of " + std::to_string(i) + " leaves the set", {i});
    }
  }

  Quotient q;
  q.projection.assign(n, 0);
  std::vector<ElementId> rep;
  std::optional<ElementId> zero;
  for (ElementId a = 0; a < n; ++a) {
    if (in[a]) {
      if (!zero) {
        zero = static_cast<ElementId>(rep.size());
        rep.push_back(a);
      }
      q.projection[a] = *zero;
    } else {
      q.projection[a] = static_cast<ElementId>(rep.size());
      rep.push_back(a);
    }
  }
  const std::size_t m = rep.size();
  std::vector<ElementId> table(m * m);
  std::vector<ElementId> star(m);
  std::vector<std::string> labels(m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      table[x * m + y] = q.projection[s.product(rep[x], rep[y])];
    }
    star[x] = q.projection[s.star(rep[x])];
    labels[x] = x == *zero ? "0" : s.label(rep[x]);
  }
  FiniteSemigroup base(m, std::move(table), s.name() + "/I");
  base.set_zero(*zero);
  q.semigroup = make_involutory(std::move(base), std::move(star), true)
                    .with_labels(std::move(labels));
  q.zero = *zero;
  return q;
}

namespace {

struct CycleShape {
  std::size_t index;
  std::size_t period;
};

CycleShape cycle_shape(const InvolutorySemigroup& s, ElementId a,
                       std::unordered_map<ElementId, std::size_t>& seen) {
  seen.clear();
  ElementId x = a;
  for (std::size_t k = 1;; ++k) {
    auto [it, inserted] = seen.try_emplace(x, k);
    if (!inserted) return {it->second, k - it->second};
    x = s.product(x, a);
  }
}

}  // namespace

OrderData order_data(const InvolutorySemigroup& s) {
  OrderData d;
  std::unordered_map<ElementId, std::size_t> seen;
  std::size_t max_index = 1;
  std::size_t lcm = 1;
  for (ElementId a = 0; a < s.size(); ++a) {
    auto shape = cycle_shape(s, a, seen);
    d.index.push_back(shape.index);
    d.period.push_back(shape.period);
    max_index = std::max(max_index, shape.index);
    lcm = std::lcm(lcm, shape.period);
  }
  d.subgroup_exponent = lcm;
  d.global_n = ((max_index + lcm - 1) / lcm) * lcm;
  return d;
}

ElementId omega_power(const InvolutorySemigroup& s, ElementId a) {
  std::unordered_map<ElementId, std::size_t> seen;
  auto shape = cycle_shape(s, a, seen);
  std::size_t k = ((shape.index + shape.period - 1) / shape.period) * shape.period;
  return s.power(a, k);
}

std::optional<ElementId> moore_penrose(const InvolutorySemigroup& s,
                                       ElementId a) {
  for (ElementId y = 0; y < s.size(); ++y) {
    const ElementId ay = s.product(a, y);
    const ElementId ya = s.product(y, a);
    if (s.product(ay, a) == a && s.product(ya, y) == y && s.star(ay) == ay &&
        s.star(ya) == ya) {
      return y;
    }
  }
  return std::nullopt;
}

namespace {

struct Profile {
  bool idempotent;
  bool star_fixed;
  std::size_t index;
  std::size_t period;
  auto operator<=>(const Profile&) const = default;
};

std::vector<Profile> profiles(const InvolutorySemigroup& s) {
  auto od = order_data(s);
  std::vector<Profile> out;
  for (ElementId a = 0; a < s.size(); ++a) {
    out.push_back({s.product(a, a) == a, s.star(a) == a, od.index[a], od.period[a]});
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const InvolutorySemigroup& a, const InvolutorySemigroup& b)
      : a_(a), b_(b), pa_(profiles(a)), pb_(profiles(b)),
        phi_(a.size(), kNoElement), used_(b.size(), false) {}

  bool invariants_match() const {
    auto sa = pa_;
    auto sb = pb_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  bool run(ElementId next) {
    if (next == a_.size()) return true;
    for (ElementId x = 0; x < b_.size(); ++x) {
      if (used_[x] || pa_[next] != pb_[x]) continue;
      phi_[next] = x;
      used_[x] = true;
      if (consistent() && run(next + 1)) return true;
      phi_[next] = kNoElement;
      used_[x] = false;
    }
    return false;
  }

  const std::vector<ElementId>& bijection() const { return phi_; }

 private:
  bool consistent() const {
    for (ElementId u = 0; u < a_.size(); ++u) {
      if (phi_[u] == kNoElement) continue;
      const ElementId su = a_.star(u);
      if (phi_[su] != kNoElement && phi_[su] != b_.star(phi_[u])) return false;
      for (ElementId v = 0; v < a_.size(); ++v) {
        if (phi_[v] == kNoElement) continue;
        const ElementId uv = a_.product(u, v);
        if (phi_[uv] != kNoElement && phi_[uv] != b_.product(phi_[u], phi_[v])) {
          return false;
        }
      }
    }
    return true;
  }

  const InvolutorySemigroup& a_;
  const InvolutorySemigroup& b_;
  std::vector<Profile> pa_;
  std::vector<Profile> pb_;
  std::vector<ElementId> phi_;
  std::vector<bool> used_;
};

// Calls f on each k-subset of {0..n-1} in lexicographic order until f
// returns true.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<ElementId> c(k);
  std::iota(c.begin(), c.end(), ElementId{0});
  while (true) {
    if (f(std::span<const ElementId>(c))) return true;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Calls f on each tuple in {0..base-1}^k, last coordinate fastest.
template <typename F>
bool for_each_tuple(std::size_t base, std::size_t k, F&& f) {
  std::vector<ElementId> t(k, 0);
  while (true) {
    if (f(std::span<const ElementId>(t))) return true;
    std::size_t i = k;
    while (i > 0 && t[i - 1] + 1 == base) {
      t[i - 1] = 0;
      --i;
    }
    if (i == 0) return false;
    ++t[i - 1];
  }
}

}  // namespace

IsomorphismResult is_isomorphic(const InvolutorySemigroup& a,
                                const InvolutorySemigroup& b,
                                std::size_t bound) {
  if (a.size() > bound || b.size() > bound) {
    throw Error(ErrorCode::BoundExceeded,
                "isomorphism search limited to " + std::to_string(bound) +
                    " elements");
  }
  IsomorphismResult r;
  if (a.size() != b.size()) return r;
  IsoSearch search(a, b);
  if (!search.invariants_match()) return r;
  if (search.run(0)) {
    r.isomorphic = true;
    r.bijection = search.bijection();
  }
  return r;
}

std::size_t involutory_rank(const InvolutorySemigroup& t) {
  for (std::size_t r = 1; r <= t.size(); ++r) {
    bool found = for_each_combination(
        t.size(), r, [&](std::span<const ElementId> gens) {
          return close(t, gens).elements.size() == t.size();
        });
    if (found) return r;
  }
  return t.size();
}

DivisionResult divides(const InvolutorySemigroup& t,
                       const InvolutorySemigroup& s, std::size_t bound) {
  if (t.size() > bound) {
    throw Error(ErrorCode::OracleBoundExceeded,
                "division oracle limited to |T| <= " + std::to_string(bound));
  }
  DivisionResult result;
  // An onto morphism U -> T restricts onto T from the subsemigroup generated
  // by preimages of any generating set of T, so r-subsets of S suffice.
  const std::size_t r = involutory_rank(t);
  for_each_combination(s.size(), r, [&](std::span<const ElementId> gens) {
    auto u = close(s, gens);
    const Closure& c = *u.closure;
    const std::size_t m = u.elements.size();
    if (m < t.size()) return false;
    return for_each_tuple(t.size(), r, [&](std::span<const ElementId> images) {
      std::vector<ElementId> phi(m, kNoElement);
      auto assign = [&](ElementId at, ElementId value) {
        if (phi[at] == kNoElement) {
          phi[at] = value;
          return true;
        }
        return phi[at] == value;
      };
      for (std::size_t i = 0; i < r; ++i) {
        const ElementId g = *u.find(gens[i]);
        if (!assign(g, images[i]) || !assign(c.star(g), t.star(images[i]))) {
          return false;
        }
      }
      for (ElementId a = 0; a < m; ++a) {
        for (std::size_t k = 0; k < c.seed_count(); ++k) {
          const ElementId target = c.right(a, k);
          if (!assign(target, t.product(phi[a], phi[c.seeds()[k]]))) {
            return false;
          }
        }
      }
      std::vector<bool> hit(t.size(), false);
      for (ElementId a = 0; a < m; ++a) {
        if (phi[c.star(a)] != t.star(phi[a])) return false;
        hit[phi[a]] = true;
      }
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
      result.divides = true;
      result.witness = DivisionWitness{
          std::vector<ElementId>(gens.begin(), gens.end()), u.elements, phi};
      return true;
    });
  });
  return result;
}

}  // namespace invsg
