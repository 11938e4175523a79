#include "ogpd/json_io.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

namespace ogpd {

namespace {

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~')
      escaped += "~0";
    else if (c == '/')
      escaped += "~1";
    else
      escaped += c;
  }
  return pointer + "/" + escaped;
}
std::string child(const std::string& pointer, std::size_t i) { return pointer + "/" + std::to_string(i); }

const Json& require(const Json& obj, const std::string& key, const std::string& pointer) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing required field '" + key + "'", child(pointer, key));
  return *it;
}

void expect_object(const Json& j, const std::string& pointer) {
  if (!j.is_object()) throw InputError("expected an object", pointer);
}
void expect_array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw InputError("expected an array", pointer);
}
std::string expect_string(const Json& j, const std::string& pointer) {
  if (!j.is_string()) throw InputError("expected a string", pointer);
  return j.get<std::string>();
}

void check_schema(const Json& j, const std::string& pointer) {
  auto it = j.find("schema");
  if (it == j.end()) return;
  if (!it->is_number_integer() || it->get<long long>() != 1)
    throw InputError("unsupported schema version", child(pointer, "schema"));
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw InputError("not an integer: \"" + s + "\"", pointer);
    return v;
  }
  throw InputError("expected an integer", pointer);
}

Json matrix_to_json(const ZMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ZMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& pointer) {
  expect_array(j, pointer);
  // Matrices with no columns may be written as [] whatever their row count.
  if (cols == 0 && j.empty()) return ZMatrix(rows, 0);
  if (j.size() != rows)
    throw InputError("expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()), pointer);
  ZMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = child(pointer, i);
    expect_array(j[i], rp);
    if (j[i].size() != cols)
      throw InputError("expected " + std::to_string(cols) + " columns, got " + std::to_string(j[i].size()), rp);
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(j[i][c], child(rp, c));
  }
  return m;
}

Json canonical_to_json(const CanonicalForm& c) {
  Json t = Json::array();
  for (const auto& d : c.torsion) t.push_back(integer_to_json(d));
  return {{"rank", c.rank}, {"torsion", t}};
}

FgAbGroup group_from_json(const Json& j, const std::string& pointer) {
  expect_object(j, pointer);
  if (j.contains("relations")) {
    const Json& rel = j["relations"];
    const std::string rp = child(pointer, "relations");
    expect_array(rel, rp);
    std::size_t gens = 0;
    if (j.contains("generators")) {
      if (!j["generators"].is_number_unsigned())
        throw InputError("expected a non-negative integer", child(pointer, "generators"));
      gens = j["generators"].get<std::size_t>();
    } else if (!rel.empty()) {
      expect_array(rel[0], child(rp, 0));
      gens = rel[0].size();
    }
    return {gens, matrix_from_json(rel, rel.size(), gens, rp)};
  }
  if (j.contains("rank") || j.contains("torsion")) {
    std::size_t rank = 0;
    if (j.contains("rank")) {
      if (!j["rank"].is_number_unsigned()) throw InputError("expected a non-negative integer", child(pointer, "rank"));
      rank = j["rank"].get<std::size_t>();
    }
    std::vector<Integer> torsion;
    if (j.contains("torsion")) {
      const std::string tp = child(pointer, "torsion");
      expect_array(j["torsion"], tp);
      for (std::size_t i = 0; i < j["torsion"].size(); ++i) {
        Integer d = integer_from_json(j["torsion"][i], child(tp, i));
        if (d < 0) throw InputError("torsion coefficients must be non-negative", child(tp, i));
        torsion.push_back(d);
      }
    }
    return FgAbGroup::from_invariants(rank, torsion);
  }
  throw InputError("group needs either 'relations' or 'rank'/'torsion'", pointer);
}

Json group_to_json(const FgAbGroup& g) {
  return {{"generators", g.generators()}, {"relations", matrix_to_json(g.relations())}};
}

GroupoidSpec groupoid_spec_from_json(const Json& j, const std::string& pointer) {
  expect_object(j, pointer);
  check_schema(j, pointer);
  GroupoidSpec s;

  const std::string ip = child(pointer, "identities");
  const Json& ids = require(j, "identities", pointer);
  expect_array(ids, ip);
  for (std::size_t i = 0; i < ids.size(); ++i) s.identities.push_back(expect_string(ids[i], child(ip, i)));

  if (j.contains("arrows")) {
    const std::string ap = child(pointer, "arrows");
    const Json& arrows = j["arrows"];
    expect_array(arrows, ap);
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const std::string p = child(ap, i);
      expect_object(arrows[i], p);
      GroupoidSpec::Arrow a;
      a.id = expect_string(require(arrows[i], "id", p), child(p, "id"));
      a.d = expect_string(require(arrows[i], "d", p), child(p, "d"));
      a.r = expect_string(require(arrows[i], "r", p), child(p, "r"));
      a.inv = expect_string(require(arrows[i], "inv", p), child(p, "inv"));
      s.arrows.push_back(std::move(a));
    }
  }

  if (j.contains("compose")) {
    const std::string cp = child(pointer, "compose");
    expect_array(j["compose"], cp);
    for (std::size_t i = 0; i < j["compose"].size(); ++i) {
      const Json& t = j["compose"][i];
      const std::string p = child(cp, i);
      expect_array(t, p);
      if (t.size() != 3) throw InputError("expected a triple [g, h, gh]", p);
      s.compose.push_back({expect_string(t[0], child(p, 0)), expect_string(t[1], child(p, 1)),
                           expect_string(t[2], child(p, 2))});
    }
  }

  if (j.contains("order")) {
    const std::string op = child(pointer, "order");
    expect_array(j["order"], op);
    for (std::size_t i = 0; i < j["order"].size(); ++i) {
      const Json& t = j["order"][i];
      const std::string p = child(op, i);
      expect_array(t, p);
      if (t.size() != 2) throw InputError("expected a pair [lower, upper]", p);
      s.order.emplace_back(expect_string(t[0], child(p, 0)), expect_string(t[1], child(p, 1)));
    }
  }
  return s;
}

Json groupoid_to_json(const GroupoidSpec& spec) {
  Json out;
  out["schema"] = 1;
  out["identities"] = spec.identities;
  Json arrows = Json::array();
  for (const auto& a : spec.arrows) arrows.push_back({{"id", a.id}, {"d", a.d}, {"r", a.r}, {"inv", a.inv}});
  out["arrows"] = arrows;
  auto compose = spec.compose;
  std::sort(compose.begin(), compose.end());
  Json c = Json::array();
  for (const auto& t : compose) c.push_back({t[0], t[1], t[2]});
  out["compose"] = c;
  auto order = spec.order;
  std::sort(order.begin(), order.end());
  Json o = Json::array();
  for (const auto& [lo, hi] : order) o.push_back({lo, hi});
  out["order"] = o;
  return out;
}

namespace {

// Covering pairs (upper, lower) of the identity order.
std::vector<std::pair<ArrowId, ArrowId>> identity_covers(const OrderedGroupoid& g) {
  std::vector<std::pair<ArrowId, ArrowId>> out;
  for (auto [lo, hi] : g.order().covers())
    if (g.is_identity(lo) && g.is_identity(hi)) out.emplace_back(hi, lo);
  return out;
}

std::string cover_key(const OrderedGroupoid& g, ArrowId upper, ArrowId lower) {
  return g.name(upper) + ">" + g.name(lower);
}

}  // namespace

GModule constant_module(const LCat& l, const FgAbGroup& group) {
  GModule m;
  m.base = l.category_ptr();
  m.groups.assign(m.base->object_count(), group);
  m.actions.assign(m.base->morphism_count(), ZMatrix::identity(group.generators()));
  return m;
}

GModule module_from_json(const Json& j, const OrderedGroupoid& g, const LCat& l, const std::string& pointer) {
  expect_object(j, pointer);
  check_schema(j, pointer);
  const FiniteCategory& c = l.category();
  GModule m;
  m.base = l.category_ptr();
  m.groups.resize(c.object_count());

  const std::string gp = child(pointer, "groups");
  const Json& groups = require(j, "groups", pointer);
  expect_object(groups, gp);
  for (auto it = groups.begin(); it != groups.end(); ++it) {
    auto a = g.find(it.key());
    if (!a || !g.is_identity(*a)) throw InputError("'" + it.key() + "' is not an identity", child(gp, it.key()));
  }
  for (ArrowId e : g.identities()) {
    const std::string p = child(gp, g.name(e));
    if (!groups.contains(g.name(e))) throw InputError("missing group for identity '" + g.name(e) + "'", p);
    m.groups[l.object_of(e)] = group_from_json(groups[g.name(e)], p);
  }
  auto gens = [&](ArrowId e) { return m.groups[l.object_of(e)].generators(); };

  // Maps between comparable identities, composed down covering chains.
  const std::size_t n = g.size();
  std::vector<std::optional<ZMatrix>> down(n * n);
  const auto covers = identity_covers(g);
  const Json empty = Json::object();
  const Json& pmaps = j.contains("poset_maps") ? j["poset_maps"] : empty;
  const std::string pp = child(pointer, "poset_maps");
  expect_object(pmaps, pp);
  std::map<std::string, bool> used;
  for (auto [hi, lo] : covers) {
    const std::string key = cover_key(g, hi, lo);
    if (!pmaps.contains(key)) throw InputError("missing map for covering pair '" + key + "'", child(pp, key));
    down[hi * n + lo] = matrix_from_json(pmaps[key], gens(hi), gens(lo), child(pp, key));
    used[key] = true;
  }
  for (auto it = pmaps.begin(); it != pmaps.end(); ++it)
    if (!used.count(it.key())) throw InputError("not a covering pair of identities", child(pp, it.key()));
  for (ArrowId e : g.identities()) {
    down[e * n + e] = ZMatrix::identity(gens(e));
    // Breadth-first along covers from e.
    std::deque<ArrowId> queue{e};
    while (!queue.empty()) {
      const ArrowId u = queue.front();
      queue.pop_front();
      for (auto [hi, lo] : covers) {
        if (hi != u || down[e * n + lo]) continue;
        down[e * n + lo] = *down[e * n + u] * *down[hi * n + lo];
        queue.push_back(lo);
      }
    }
  }

  const Json& amaps = j.contains("arrow_maps") ? j["arrow_maps"] : empty;
  const std::string ap = child(pointer, "arrow_maps");
  expect_object(amaps, ap);
  std::vector<ZMatrix> base(n);
  for (auto it = amaps.begin(); it != amaps.end(); ++it) {
    auto a = g.find(it.key());
    if (!a || g.is_identity(*a)) throw InputError("'" + it.key() + "' is not a non-identity arrow", child(ap, it.key()));
  }
  for (ArrowId x = 0; x < n; ++x) {
    if (g.is_identity(x)) {
      base[x] = ZMatrix::identity(gens(x));
      continue;
    }
    const std::string p = child(ap, g.name(x));
    if (!amaps.contains(g.name(x))) throw InputError("missing map for arrow '" + g.name(x) + "'", p);
    base[x] = matrix_from_json(amaps[g.name(x)], gens(g.d(x)), gens(g.r(x)), p);
  }

  for (const auto& lm : l.morphisms()) m.actions.push_back(*down[lm.e * n + g.d(lm.g)] * base[lm.g]);
  const std::string problem = m.check_functoriality();
  if (!problem.empty()) throw InputError("module is not a functor: " + problem, pointer);
  return m;
}

Json module_to_json(const GModule& m, const OrderedGroupoid& g, const LCat& l) {
  Json out;
  out["schema"] = 1;
  Json groups = Json::object();
  for (ArrowId e : g.identities()) groups[g.name(e)] = group_to_json(m.groups[l.object_of(e)]);
  out["groups"] = groups;
  Json pmaps = Json::object();
  for (auto [hi, lo] : identity_covers(g)) pmaps[cover_key(g, hi, lo)] = matrix_to_json(m.actions[l.at(hi, lo)]);
  out["poset_maps"] = pmaps;
  Json amaps = Json::object();
  for (ArrowId x = 0; x < g.size(); ++x)
    if (!g.is_identity(x)) amaps[g.name(x)] = matrix_to_json(m.actions[l.at(g.d(x), x)]);
  out["arrow_maps"] = amaps;
  return out;
}

WorkspaceDocument workspace_from_json(const Json& j) {
  expect_object(j, "");
  check_schema(j, "");
  WorkspaceDocument doc;
  if (!j.contains("groupoid")) {
    doc.groupoid = groupoid_spec_from_json(j, "");
    OrderedGroupoid::build(doc.groupoid);
    return doc;
  }
  doc.groupoid = groupoid_spec_from_json(j["groupoid"], "/groupoid");
  OrderedGroupoid g;
  try {
    g = OrderedGroupoid::build(doc.groupoid);
  } catch (const InputError& e) {
    // Rebase the pointer into the workspace.
    const std::string what = e.what();
    const std::string msg = e.pointer().empty() ? what : what.substr(e.pointer().size() + 2);
    throw InputError(msg, "/groupoid" + e.pointer());
  }
  if (j.contains("modules")) {
    expect_object(j["modules"], "/modules");
    std::optional<LCat> l;
    for (auto it = j["modules"].begin(); it != j["modules"].end(); ++it) {
      if (!l) {
        try {
          l = LCat::build(g);
        } catch (const std::exception& e) {
          throw InputError(std::string("modules need a valid ordered groupoid: ") + e.what(), "/groupoid");
        }
      }
      module_from_json(it.value(), g, *l, child("/modules", it.key()));
      doc.modules[it.key()] = it.value();
    }
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) throw InputError("expected an integer", "/seed");
    doc.seed = j["seed"].get<long long>();
  }
  return doc;
}

Json workspace_to_json(const WorkspaceDocument& doc) {
  Json out;
  out["schema"] = 1;
  out["groupoid"] = groupoid_to_json(OrderedGroupoid::build(doc.groupoid).to_spec());
  out["groupoid"].erase("schema");
  if (!doc.modules.empty()) {
    Json mods = Json::object();
    for (const auto& [name, m] : doc.modules) mods[name] = m;
    out["modules"] = mods;
  }
  if (doc.seed) out["seed"] = *doc.seed;
  return out;
}

WorkspaceDocument load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return workspace_from_json(j);
}

std::string canonical_text(const Json& j) { return j.dump(2) + "\n"; }

void save_workspace(const std::string& path, const WorkspaceDocument& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << canonical_text(workspace_to_json(doc));
}

Json validation_to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}, {"detail", x.detail}});
  return {{"schema", 1}, {"valid", r.ok()}, {"violations", v}};
}

Json theorem_to_json(const TheoremReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees)
    degrees.push_back({{"degree", d.degree},
                       {"left", canonical_to_json(d.left)},
                       {"right", canonical_to_json(d.right)},
                       {"equal", d.equal}});
  return {{"schema", 1}, {"degrees", degrees}, {"h0_matches_colim", r.h0_matches_colim}, {"ok", r.ok()}};
}

}  // namespace ogpd
