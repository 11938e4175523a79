#include "ogpd/ordered_groupoid.hpp"

#include <algorithm>

namespace ogpd {

namespace {

constexpr std::size_t kMaxViolationsPerAxiom = 64;

class ReportBuilder {
 public:
  explicit ReportBuilder(const OrderedGroupoid& g) : g_(g) {}

  void add(const std::string& axiom, std::initializer_list<ArrowId> witness, std::string detail) {
    if (counts_[axiom]++ >= kMaxViolationsPerAxiom) return;
    Violation v{axiom, {}, std::move(detail)};
    for (ArrowId a : witness) v.witness.push_back(g_.name(a));
    report_.violations.push_back(std::move(v));
  }

  ValidationReport take() { return std::move(report_); }

 private:
  const OrderedGroupoid& g_;
  ValidationReport report_;
  std::map<std::string, std::size_t> counts_;
};

}  // namespace

bool ValidationReport::has(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

OrderedGroupoid OrderedGroupoid::build(const GroupoidSpec& spec) {
  OrderedGroupoid g;
  auto add_name = [&](const std::string& id, const std::string& pointer) {
    if (id.empty()) throw InputError("empty id", pointer);
    if (!g.index_.emplace(id, g.names_.size()).second)
      throw InputError("duplicate id '" + id + "'", pointer);
    g.names_.push_back(id);
  };
  for (std::size_t i = 0; i < spec.identities.size(); ++i)
    add_name(spec.identities[i], "/identities/" + std::to_string(i));
  for (std::size_t i = 0; i < spec.arrows.size(); ++i)
    add_name(spec.arrows[i].id, "/arrows/" + std::to_string(i) + "/id");

  const std::size_t n = g.names_.size();
  const std::size_t ni = spec.identities.size();
  g.is_identity_.assign(n, 0);
  g.d_.resize(n);
  g.r_.resize(n);
  g.inv_.resize(n);
  for (ArrowId e = 0; e < ni; ++e) {
    g.is_identity_[e] = 1;
    g.identities_.push_back(e);
    g.d_[e] = g.r_[e] = g.inv_[e] = e;
  }

  auto resolve = [&](const std::string& id, const std::string& pointer) -> ArrowId {
    auto it = g.index_.find(id);
    if (it == g.index_.end()) throw InputError("unknown id '" + id + "'", pointer);
    return it->second;
  };
  auto resolve_identity = [&](const std::string& id, const std::string& pointer) -> ArrowId {
    ArrowId a = resolve(id, pointer);
    if (!g.is_identity_[a]) throw InputError("'" + id + "' is not an identity", pointer);
    return a;
  };
  for (std::size_t i = 0; i < spec.arrows.size(); ++i) {
    const auto& a = spec.arrows[i];
    const std::string base = "/arrows/" + std::to_string(i);
    const ArrowId x = ni + i;
    g.d_[x] = resolve_identity(a.d, base + "/d");
    g.r_[x] = resolve_identity(a.r, base + "/r");
    g.inv_[x] = resolve(a.inv, base + "/inv");
  }

  g.comp_.assign(n * n, -1);
  for (std::size_t i = 0; i < spec.compose.size(); ++i) {
    const std::string base = "/compose/" + std::to_string(i);
    const auto& c = spec.compose[i];
    ArrowId a = resolve(c[0], base + "/0");
    ArrowId b = resolve(c[1], base + "/1");
    ArrowId ab = resolve(c[2], base + "/2");
    if (g.r_[a] != g.d_[b])
      throw InputError("'" + c[0] + "' and '" + c[1] + "' are not composable", base);
    long& slot = g.comp_[a * n + b];
    if (slot >= 0 && static_cast<ArrowId>(slot) != ab)
      throw InputError("conflicting composition for ('" + c[0] + "', '" + c[1] + "')", base);
    slot = static_cast<long>(ab);
  }
  // Identity compositions may be omitted.
  for (ArrowId x = 0; x < n; ++x) {
    long& left = g.comp_[g.d_[x] * n + x];
    if (left < 0) left = static_cast<long>(x);
    long& right = g.comp_[x * n + g.r_[x]];
    if (right < 0) right = static_cast<long>(x);
  }
  for (ArrowId a = 0; a < n; ++a)
    for (ArrowId b = 0; b < n; ++b)
      if (g.r_[a] == g.d_[b] && g.comp_[a * n + b] < 0)
        throw InputError("missing composition ('" + g.names_[a] + "', '" + g.names_[b] + "')",
                         "/compose");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < spec.order.size(); ++i) {
    const std::string base = "/order/" + std::to_string(i);
    pairs.emplace_back(resolve(spec.order[i].first, base + "/0"),
                       resolve(spec.order[i].second, base + "/1"));
  }
  try {
    g.order_ = Poset::from_generators(n, pairs);
  } catch (const Poset::AntisymmetryError& e) {
    throw InputError("order is not antisymmetric: '" + g.names_[e.a] + "' and '" +
                         g.names_[e.b] + "' are mutually below each other",
                     "/order");
  }

  for (ArrowId x = 0; x < n; ++x)
    for (ArrowId e : g.identities_) {
      if (!g.order_.leq(e, g.d_[x])) continue;
      auto& cands = g.restriction_candidates_[{e, x}];
      for (ArrowId y = 0; y < n; ++y)
        if (g.d_[y] == e && g.order_.leq(y, x)) cands.push_back(y);
    }
  return g;
}

std::optional<ArrowId> OrderedGroupoid::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArrowId OrderedGroupoid::at(const std::string& name) const {
  auto a = find(name);
  if (!a) throw InputError("unknown arrow '" + name + "'");
  return *a;
}

std::optional<ArrowId> OrderedGroupoid::compose(ArrowId g, ArrowId h) const {
  long c = comp_[g * size() + h];
  if (c < 0) return std::nullopt;
  return static_cast<ArrowId>(c);
}

ArrowId OrderedGroupoid::mul(ArrowId g, ArrowId h) const {
  auto c = compose(g, h);
  if (!c) throw NotComposable("'" + name(g) + "' and '" + name(h) + "' are not composable");
  return *c;
}

ValidationReport OrderedGroupoid::validate() const {
  ReportBuilder rep(*this);
  const std::size_t n = size();

  for (ArrowId x = 0; x < n; ++x) {
    if (mul(d(x), x) != x || mul(x, r(x)) != x)
      rep.add("identity", {x}, "identities do not compose neutrally with this arrow");
    const ArrowId y = inverse(x);
    if (d(y) != r(x) || r(y) != d(x)) {
      rep.add("inverse", {x}, "inverse has the wrong endpoints");
      continue;
    }
    if (mul(x, y) != d(x) || mul(y, x) != r(x))
      rep.add("inverse", {x}, "x x^-1 or x^-1 x is not the expected identity");
  }

  for (ArrowId a = 0; a < n; ++a)
    for (ArrowId b = 0; b < n; ++b) {
      auto ab = compose(a, b);
      if (!ab) continue;
      if (d(*ab) != d(a) || r(*ab) != r(b))
        rep.add("composition-endpoints", {a, b}, "composite '" + name(*ab) + "' has the wrong endpoints");
    }

  for (ArrowId a = 0; a < n; ++a)
    for (ArrowId b = 0; b < n; ++b) {
      auto ab = compose(a, b);
      if (!ab) continue;
      for (ArrowId c = 0; c < n; ++c) {
        auto bc = compose(b, c);
        if (!bc) continue;
        auto left = compose(*ab, c);
        auto right = compose(a, *bc);
        if (!left || !right || *left != *right)
          rep.add("associativity", {a, b, c}, "(ab)c != a(bc)");
      }
    }

  std::vector<std::pair<ArrowId, ArrowId>> below;  // strict pairs x < y
  for (ArrowId x = 0; x < n; ++x)
    for (ArrowId y = 0; y < n; ++y)
      if (x != y && leq(x, y)) below.emplace_back(x, y);

  for (auto [x, y] : below)
    if (!leq(inverse(x), inverse(y))) rep.add("OG1", {x, y}, "x <= y but not x^-1 <= y^-1");

  // OG2 with reflexive pairs included: x <= y, u <= v.
  auto og2_pairs = below;
  for (ArrowId x = 0; x < n; ++x) og2_pairs.emplace_back(x, x);
  for (auto [x, y] : og2_pairs)
    for (auto [u, v] : og2_pairs) {
      auto xu = compose(x, u);
      auto yv = compose(y, v);
      if (xu && yv && !leq(*xu, *yv))
        rep.add("OG2", {x, y, u, v}, "x <= y, u <= v but not xu <= yv");
    }

  for (ArrowId x = 0; x < n; ++x)
    for (ArrowId e : identities_) {
      auto it = restriction_candidates_.find({e, x});
      if (it == restriction_candidates_.end()) continue;
      if (it->second.size() != 1)
        rep.add("OG3", {x, e},
                std::to_string(it->second.size()) + " arrows below x have domain e (expected exactly one)");
    }

  for (auto [y, e] : below)
    if (is_identity(e) && !is_identity(y))
      rep.add("identity-order", {y, e}, "a non-identity lies below an identity");

  return rep.take();
}

ArrowId OrderedGroupoid::restriction(ArrowId e, ArrowId x) const {
  if (!is_identity(e) || !leq(e, d(x)))
    throw PreconditionError("restriction: '" + name(e) + "' is not an identity below d('" +
                            name(x) + "')");
  const auto& cands = restriction_candidates_.at({e, x});
  if (cands.size() != 1)
    throw StructuralDefect("restriction of '" + name(x) + "' to '" + name(e) + "' has " +
                           std::to_string(cands.size()) + " candidates");
  return cands.front();
}

ArrowId OrderedGroupoid::corestriction(ArrowId x, ArrowId e) const {
  if (!is_identity(e) || !leq(e, r(x)))
    throw PreconditionError("corestriction: '" + name(e) + "' is not an identity below r('" +
                            name(x) + "')");
  return inverse(restriction(e, inverse(x)));
}

std::optional<ArrowId> OrderedGroupoid::identity_meet(ArrowId e, ArrowId f) const {
  return order_.meet_within(e, f, identities_);
}

std::optional<ArrowId> OrderedGroupoid::pseudoproduct(ArrowId g, ArrowId h) const {
  auto l = identity_meet(r(g), d(h));
  if (!l) return std::nullopt;
  return mul(corestriction(g, *l), restriction(*l, h));
}

std::vector<ArrowId> OrderedGroupoid::identity_lower_bounds(ArrowId e, ArrowId f) const {
  std::vector<ArrowId> out;
  for (ArrowId k : identities_)
    if (leq(k, e) && leq(k, f)) out.push_back(k);
  return out;
}

GroupoidSpec OrderedGroupoid::to_spec() const {
  GroupoidSpec s;
  for (ArrowId e : identities_) s.identities.push_back(names_[e]);
  for (ArrowId x = 0; x < size(); ++x) {
    if (is_identity(x)) continue;
    s.arrows.push_back({names_[x], names_[d(x)], names_[r(x)], names_[inverse(x)]});
  }
  for (ArrowId a = 0; a < size(); ++a)
    for (ArrowId b = 0; b < size(); ++b) {
      if (is_identity(a) || is_identity(b)) continue;
      if (auto ab = compose(a, b)) s.compose.push_back({names_[a], names_[b], names_[*ab]});
    }
  for (auto [lo, hi] : order_.covers()) s.order.emplace_back(names_[lo], names_[hi]);
  return s;
}

}  // namespace ogpd
