#include "ogpd/expansion.hpp"

#include <algorithm>

namespace ogpd {

BetaSetting BetaSetting::make(const OrderedGroupoid& g) {
  QuotientGroupoid q = ogpd::quotient(g);
  LCat lcat = LCat::build(g);
  LCat qcat = LCat::build(q.groupoid);
  BetaSetting s;
  s.g = g;
  s.lcat = std::move(lcat);
  s.quotient = std::move(q);
  s.qcat = std::move(qcat);
  s.class_identities_.resize(s.qcat.category().object_count());
  for (ArrowId e : g.identities()) s.class_identities_[s.class_object(e)].push_back(e);
  return s;
}

ObjectId BetaSetting::class_object(ArrowId identity) const {
  return qcat.object_of(quotient.project(identity));
}

MorphismId BetaSetting::class_morphism(ArrowId arrow) const {
  const ArrowId c = quotient.project(arrow);
  return qcat.at(quotient.groupoid.d(c), c);
}

GModule expand(const BetaSetting& s, const GModule& b) {
  GModule out;
  out.base = s.lcat.category_ptr();
  for (ObjectId o = 0; o < out.base->object_count(); ++o)
    out.groups.push_back(b.groups[s.class_object(s.lcat.identity_of(o))]);
  for (const auto& m : s.lcat.morphisms()) out.actions.push_back(b.actions[s.class_morphism(m.g)]);
  return out;
}

GMap expand_map(const BetaSetting& s, const GMap& xi) {
  GMap out;
  for (ObjectId o = 0; o < s.lcat.category().object_count(); ++o)
    out.components.push_back(xi.components[s.class_object(s.lcat.identity_of(o))]);
  return out;
}

namespace {

ZMatrix unit_row(std::size_t i, std::size_t n) {
  ZMatrix r(1, n);
  r(0, i) = 1;
  return r;
}

std::string arrow_list(const OrderedGroupoid& g, std::initializer_list<ArrowId> ids) {
  std::string out;
  for (ArrowId a : ids) out += (out.empty() ? "" : ", ") + g.name(a);
  return "(" + out + ")";
}

}  // namespace

EColimit colim_E(const BetaSetting& s, const GModule& a) {
  const OrderedGroupoid& g = s.g;
  const FiniteCategory& qc = s.qcat.category();
  const std::size_t nq = qc.object_count();
  const std::size_t nl = s.lcat.category().object_count();

  EColimit out;
  out.canonical.resize(nl);
  out.offset.resize(nl);

  // Presentations of the L_x.
  std::vector<FgAbGroup> groups;
  for (ObjectId x = 0; x < nq; ++x) {
    const auto& members = s.class_identities(x);
    std::size_t total = 0;
    for (ArrowId e : members) {
      out.offset[s.lcat.object_of(e)] = total;
      total += a.groups[s.lcat.object_of(e)].generators();
    }
    std::vector<ZVector> rows;
    for (ArrowId e : members) {
      const ObjectId oe = s.lcat.object_of(e);
      const ZMatrix& rel = a.groups[oe].relations();
      for (std::size_t r = 0; r < rel.rows(); ++r) {
        ZVector row(total);
        for (std::size_t j = 0; j < rel.cols(); ++j) row[out.offset[oe] + j] = rel(r, j);
        rows.push_back(std::move(row));
      }
    }
    for (ArrowId e : members)
      for (ArrowId f : members) {
        if (e == f || !g.leq(f, e)) continue;
        const ObjectId oe = s.lcat.object_of(e), of = s.lcat.object_of(f);
        const ZMatrix& act = a.actions[s.lcat.at(e, f)];
        for (std::size_t i = 0; i < act.rows(); ++i) {
          ZVector row(total);
          row[out.offset[oe] + i] += 1;
          for (std::size_t j = 0; j < act.cols(); ++j) row[out.offset[of] + j] -= act(i, j);
          rows.push_back(std::move(row));
        }
      }
    groups.emplace_back(total, ZMatrix::from_rows(rows, total));
    for (ArrowId e : members) {
      const ObjectId oe = s.lcat.object_of(e);
      ZMatrix inj(a.groups[oe].generators(), total);
      for (std::size_t i = 0; i < inj.rows(); ++i) inj(i, out.offset[oe] + i) = 1;
      out.canonical[oe] = std::move(inj);
    }
  }

  // Value of a generator of A_e under the class of rep, based at l.
  auto glam = [&](ArrowId e, std::size_t i, ArrowId rep, ArrowId l, ObjectId y) -> ZVector {
    const ObjectId oe = s.lcat.object_of(e);
    const ArrowId gl = g.restriction(l, rep);
    const ArrowId z = g.r(gl);
    const ObjectId oz = s.lcat.object_of(z);
    ZMatrix v = unit_row(i, a.groups[oe].generators()) * a.actions[s.lcat.at(e, l)] *
                a.actions[s.lcat.at(l, gl)] * out.canonical[oz];
    if (s.class_object(z) != y) throw std::logic_error("glamaction: value lands in the wrong class");
    return v.row(0);
  };
  auto least_name = [&](const std::vector<ArrowId>& v) {
    return *std::min_element(v.begin(), v.end(),
                             [&](ArrowId p, ArrowId q) { return g.name(p) < g.name(q); });
  };

  GlamactionReport& rep = out.report;
  std::vector<ZMatrix> actions(qc.morphism_count());
  for (MorphismId m = 0; m < qc.morphism_count(); ++m) {
    const ObjectId x = qc.dom(m), y = qc.cod(m);
    const auto& cls = s.quotient.classes[s.qcat.morphism(m).g];
    const ArrowId chosen = cls.front();
    ZMatrix act(groups[x].generators(), groups[y].generators());
    for (ArrowId e : s.class_identities(x)) {
      const ObjectId oe = s.lcat.object_of(e);
      for (std::size_t i = 0; i < a.groups[oe].generators(); ++i) {
        auto bounds = g.identity_lower_bounds(e, g.d(chosen));
        if (bounds.empty()) {
          rep.failures.push_back("no identity below " + arrow_list(g, {e, g.d(chosen)}));
          continue;
        }
        const ZVector value = glam(e, i, chosen, least_name(bounds), y);
        act.set_row(out.offset[oe] + i, value);
        for (ArrowId alt : cls) {
          for (ArrowId l : g.identity_lower_bounds(e, g.d(alt))) {
            (alt == chosen ? rep.lower_bound_checks : rep.representative_checks)++;
            if (!groups[y].equal(glam(e, i, alt, l, y), value))
              rep.failures.push_back("action of class " + qc.morphism(m).name + " on generator " +
                                     std::to_string(i) + " of A_" + g.name(e) +
                                     " depends on the choice " + arrow_list(g, {alt, l}));
          }
        }
      }
    }
    // Relators of L_x (including a - a |> (e,f)) must act as zero.
    const ZMatrix images = groups[x].relations() * act;
    for (std::size_t r = 0; r < images.rows(); ++r) {
      ++rep.preimage_checks;
      if (!groups[y].is_zero(images.row(r)))
        rep.failures.push_back("action of class " + qc.morphism(m).name + " is not well defined on relator " +
                               std::to_string(r) + " of L_" + qc.object_name(x));
    }
    actions[m] = std::move(act);
  }
  out.module = GModule{s.qcat.category_ptr(), std::move(groups), std::move(actions)};
  rep.functoriality = out.module.check_functoriality();
  return out;
}

GMap colim_E_map(const BetaSetting& s, const EColimit& la, const EColimit& lb, const GMap& phi) {
  GMap out;
  for (ObjectId x = 0; x < s.qcat.category().object_count(); ++x) {
    ZMatrix comp(la.module.groups[x].generators(), lb.module.groups[x].generators());
    for (ArrowId e : s.class_identities(x)) {
      const ObjectId oe = s.lcat.object_of(e);
      comp.paste(phi.components[oe] * lb.canonical[oe], la.offset[oe], 0);
    }
    if (!hom_welldefined(la.module.groups[x], lb.module.groups[x], comp))
      throw MathError("induced map on colimits is not well defined at " + s.qcat.category().object_name(x));
    out.components.push_back(std::move(comp));
  }
  return out;
}

GMap rho(const BetaSetting& s, const EColimit& la, const GModule& b, const GMap& phi) {
  GMap out;
  for (ObjectId x = 0; x < s.qcat.category().object_count(); ++x) {
    ZMatrix comp(la.module.groups[x].generators(), b.groups[x].generators());
    for (ArrowId e : s.class_identities(x)) {
      const ObjectId oe = s.lcat.object_of(e);
      comp.paste(phi.components[oe], la.offset[oe], 0);
    }
    if (!hom_welldefined(la.module.groups[x], b.groups[x], comp))
      throw MathError("not induced: the components do not factor through L_" +
                      s.qcat.category().object_name(x));
    out.components.push_back(std::move(comp));
  }
  return out;
}

GMap tau(const BetaSetting& s, const EColimit& la, const GMap& psi) {
  GMap out;
  for (ObjectId o = 0; o < s.lcat.category().object_count(); ++o)
    out.components.push_back(la.canonical[o] *
                             psi.components[s.class_object(s.lcat.identity_of(o))]);
  return out;
}

AdjunctionReport check_adjunction(const BetaSetting& s, const GModule& a, const GModule& b,
                                  std::size_t element_bound) {
  AdjunctionReport rep;
  const EColimit la = colim_E(s, a);
  const GModule bup = expand(s, b);
  const auto left = enumerate_gmaps(a, bup, element_bound);
  const auto right = enumerate_gmaps(la.module, b, element_bound);
  rep.left_homs = left.size();
  rep.right_homs = right.size();

  auto contains = [](const std::vector<GMap>& set, const GModule& target, const GMap& m) {
    return std::any_of(set.begin(), set.end(), [&](const GMap& x) { return gmap_equal(target, x, m); });
  };
  for (const auto& phi : left) {
    GMap psi;
    try {
      psi = rho(s, la, b, phi);
    } catch (const MathError&) {
      rep.rho_natural = false;
      continue;
    }
    if (!check_naturality(la.module, b, psi).empty() || !contains(right, b, psi)) rep.rho_natural = false;
    if (!gmap_equal(bup, tau(s, la, psi), phi)) rep.tau_after_rho = false;
  }
  for (const auto& psi : right) {
    const GMap phi = tau(s, la, psi);
    if (!check_naturality(a, bup, phi).empty() || !contains(left, bup, phi)) rep.tau_natural = false;
    try {
      if (!gmap_equal(b, rho(s, la, b, phi), psi)) rep.rho_after_tau = false;
    } catch (const MathError&) {
      rep.rho_after_tau = false;
    }
  }
  return rep;
}

ColimCompositionReport check_colim_composition(const BetaSetting& s, const GModule& a) {
  ColimCompositionReport rep;
  const EColimit la = colim_E(s, a);
  const Colimit iterated = colim_category(la.module);
  const Colimit direct = colim_category(a);
  rep.iterated = iterated.group.canonical();
  rep.direct = direct.group.canonical();
  rep.forms_equal = rep.iterated == rep.direct;

  // direct -> iterated from the cocone alpha_e psi_{e beta}; iterated ->
  // direct from the cocone the canonical maps of A induce on each L_x.
  const std::size_t nl = s.lcat.category().object_count();
  ZMatrix to_iterated(direct.group.generators(), iterated.group.generators());
  ZMatrix to_direct(iterated.group.generators(), direct.group.generators());
  for (ObjectId o = 0; o < nl; ++o) {
    const ObjectId x = s.class_object(s.lcat.identity_of(o));
    to_iterated.paste(la.canonical[o] * iterated.canonical[x], direct.offsets[o], 0);
    to_direct.paste(direct.canonical[o], iterated.offsets[x] + la.offset[o], 0);
  }
  rep.comparison_welldefined = hom_welldefined(direct.group, iterated.group, to_iterated);
  rep.inverse_welldefined = hom_welldefined(iterated.group, direct.group, to_direct);
  rep.mutually_inverse =
      hom_equal(direct.group, to_iterated * to_direct, ZMatrix::identity(direct.group.generators())) &&
      hom_equal(iterated.group, to_direct * to_iterated, ZMatrix::identity(iterated.group.generators()));
  return rep;
}

bool componentwise_surjective(const GModule& source, const GModule& target, const GMap& map) {
  for (std::size_t o = 0; o < source.groups.size(); ++o)
    if (!is_surjective({source.groups[o], target.groups[o], map.components[o]})) return false;
  return true;
}

}  // namespace ogpd
