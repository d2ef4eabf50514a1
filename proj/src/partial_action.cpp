#include "grpd/partial_action.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace grpd {

namespace {

Elem unit_of(const Groupoid& group) { return group.identities().front(); }

}  // namespace

std::vector<std::string> default_points(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::optional<std::string> partial_action_violation(const Groupoid& group,
                                                    const std::vector<PartialBijection>& maps) {
  const Elem one = unit_of(group);
  const std::size_t n = maps[one].universe();
  const auto& lab = group.labels();
  if (!(maps[one] == PartialBijection::identity_on(ElemSet::full(n))))
    return "unit: α_" + lab[one] + " is not the identity";
  for (Elem g = 0; g < group.size(); ++g)
    if (!(maps[group.inverse(g)] == maps[g].inverse()))
      return "inverse: α_" + lab[group.inverse(g)] + " is not the inverse of α_" + lab[g];
  for (Elem g = 0; g < group.size(); ++g)
    for (Elem h = 0; h < group.size(); ++h) {
      const Elem gh = group.mul(g, h);
      ElemSet source = maps[g].domain() & maps[h].range();
      ElemSet moved(n);
      for (Elem x : source.members()) moved.insert(static_cast<Elem>(maps[g].image[x]));
      if (moved != (maps[g].range() & maps[gh].range()))
        return "image: α_" + lab[g] + "(X_" + lab[group.inverse(g)] + " ∩ X_" + lab[h] +
               ") differs from X_" + lab[g] + " ∩ X_" + lab[gh];
      ElemSet overlap = maps[h].domain() & maps[gh].domain();
      for (Elem x : overlap.members()) {
        const int y = maps[h].image[x];
        if (maps[g].image[static_cast<Elem>(y)] != maps[gh].image[x])
          return "composition: α_" + lab[g] + "α_" + lab[h] + " differs from α_" + lab[gh];
      }
    }
  return std::nullopt;
}

PartialAction validate_partial_action(const Groupoid& group, std::vector<std::string> points,
                                      std::vector<PartialBijection> maps) {
  if (!is_group(group)) fail(ErrorKind::NotAGroup, "partial actions need a group");
  if (maps.size() != group.size())
    fail(ErrorKind::SchemaError, "one map per group element is required");
  for (const auto& f : maps)
    if (f.universe() != points.size())
      fail(ErrorKind::SchemaError, "map over the wrong point set");
  if (auto v = partial_action_violation(group, maps))
    fail(ErrorKind::AxiomViolation, *v, v->substr(0, v->find(':')));
  return {group, std::move(points), std::move(maps)};
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::string> semigroup_action_problem(const ExelSemigroup& e,
                                                    const SemigroupAction& a) {
  const auto& s = e.semigroup;
  const Elem one = e.generator(unit_of(e.group));
  const auto n = a.points.size();
  if (!(a.phi[one] == PartialBijection::identity_on(ElemSet::full(n))))
    return std::string("unital");
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y)
      if (!(a.phi[s.mul(x, y)] == a.phi[x] * a.phi[y]))
        return "hom:" + s.label(x) + "," + s.label(y);
  return std::nullopt;
}

}  // namespace

void check_semigroup_action(const ExelSemigroup& e, const SemigroupAction& a) {
  if (a.phi.size() != e.elements.size())
    fail(ErrorKind::SchemaError, "one map per element of E(G) is required");
  if (auto p = semigroup_action_problem(e, a)) {
    if (*p == "unital") fail(ErrorKind::NotUnital, "φ([1]) is not the identity");
    fail(ErrorKind::NotAHomomorphism, "φ is not multiplicative", p->substr(4));
  }
}

SemigroupAction partial_to_semigroup_action(const ExelSemigroup& e, const PartialAction& p) {
  const auto n = p.points.size();
  SemigroupAction a{p.points, {}};
  for (const auto& x : e.elements) {
    ElemSet common = ElemSet::full(n);
    for (Elem s : x.a.members()) common &= p.piece(s);
    a.phi.push_back(PartialBijection::identity_on(common) * p.maps[x.g]);
  }
  check_semigroup_action(e, a);
  return a;
}

PartialAction semigroup_action_to_partial(const ExelSemigroup& e, const SemigroupAction& a) {
  check_semigroup_action(e, a);
  std::vector<PartialBijection> maps;
  for (Elem g = 0; g < e.group.size(); ++g) maps.push_back(a.phi[e.generator(g)]);
  return validate_partial_action(e.group, a.points, std::move(maps));
}

// ---------------------------------------------------------------------------

std::optional<std::string> global_action_violation(const Groupoid& g, std::size_t points,
                                                   const std::vector<PartialBijection>& beta) {
  if (beta.size() != g.size()) return std::string("size: one map per element is required");
  for (const auto& b : beta)
    if (b.universe() != points) return std::string("size: map over the wrong point set");
  ElemSet cover(points);
  for (Elem e : g.identities()) {
    if (!(beta[e] == PartialBijection::identity_on(beta[e].domain())))
      return "identity: β_" + g.label(e) + " is not an identity map";
    cover |= beta[e].domain();
  }
  for (Elem a = 0; a < g.size(); ++a)
    if (beta[a].domain() != beta[g.source(a)].domain() ||
        beta[a].range() != beta[g.target(a)].domain())
      return "bijection: β_" + g.label(a) + " does not map X_d onto X_r";
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = 0; b < g.size(); ++b)
      if (auto ab = g.compose(a, b); ab && !(beta[*ab] == beta[a] * beta[b]))
        return "composition: β_" + g.label(a) + "β_" + g.label(b) + " differs from β_" +
               g.label(*ab);
  if (cover != ElemSet::full(points)) return std::string("cover: pieces do not cover X");
  return std::nullopt;
}

GlobalAction validate_global_action(const Groupoid& g, std::vector<std::string> points,
                                    std::vector<PartialBijection> beta) {
  if (auto v = global_action_violation(g, points.size(), beta))
    fail(ErrorKind::NotAnAction, *v, v->substr(0, v->find(':')));
  return {g, std::move(points), std::move(beta)};
}

std::optional<std::string> inductive_violation(const ExelSemigroup& e,
                                               const std::vector<PartialBijection>& beta) {
  const auto& s = e.semigroup;
  const Elem one = e.generator(unit_of(e.group));
  const auto n = beta[one].universe();
  if (beta[one].domain() != ElemSet::full(n)) return std::string("unital: X_[1] is not X");
  const auto idem = s.idempotents();
  for (Elem x : idem)
    for (Elem y : idem)
      if (beta[s.mul(x, y)].domain() != (beta[x].domain() & beta[y].domain()))
        return "meet: X_" + s.label(s.mul(x, y)) + " differs from X_" + s.label(x) +
               " ∩ X_" + s.label(y);
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y)
      if (s.leq(x, y) && !beta[x].restriction_of(beta[y]))
        return "order: β_" + s.label(x) + " is not a restriction of β_" + s.label(y);
  return std::nullopt;
}

Groupoid exel_groupoid(const ExelSemigroup& e) { return restricted_product_groupoid(e.semigroup); }

GlobalAction semigroup_action_to_groupoid_action(const ExelSemigroup& e,
                                                 const SemigroupAction& a) {
  GlobalAction g = validate_global_action(exel_groupoid(e), a.points, a.phi);
  if (auto v = inductive_violation(e, g.beta))
    fail(ErrorKind::NotAnAction, *v, v->substr(0, v->find(':')));
  return g;
}

SemigroupAction groupoid_action_to_semigroup_action(const ExelSemigroup& e,
                                                    const GlobalAction& g) {
  SemigroupAction a{g.points, g.beta};
  check_semigroup_action(e, a);
  return a;
}

Hom groupoid_action_to_hom(const GlobalAction& a, const PartialBijectionMonoid& m,
                           const Groupoid& target) {
  std::vector<Elem> map;
  for (const auto& b : a.beta) map.push_back(m.index_of(b));
  return check_hom(a.groupoid, target, std::move(map));
}

GlobalAction hom_to_groupoid_action(const Hom& h, const PartialBijectionMonoid& m) {
  std::vector<PartialBijection> beta;
  for (Elem x : h.map) beta.push_back(m.elements[x]);
  return validate_global_action(h.domain, m.points, std::move(beta));
}

// ---------------------------------------------------------------------------

std::vector<PartialAction> enumerate_partial_actions(const Groupoid& group, std::size_t points) {
  if (!is_group(group)) fail(ErrorKind::NotAGroup, "partial actions need a group");
  const auto all = all_partial_bijections(points);
  const Elem one = unit_of(group);
  // α_{g^-1} is forced by α_g, so choose one map per inverse pair.
  std::vector<Elem> reps;
  for (Elem g = 0; g < group.size(); ++g)
    if (g != one && g <= group.inverse(g)) reps.push_back(g);
  std::vector<PartialBijection> maps(group.size(), PartialBijection::empty(points));
  maps[one] = PartialBijection::identity_on(ElemSet::full(points));
  std::vector<PartialAction> out;
  const auto pts = default_points(points);
  std::function<void(std::size_t)> choose = [&](std::size_t k) {
    if (k == reps.size()) {
      if (!partial_action_violation(group, maps)) out.push_back({group, pts, maps});
      return;
    }
    const Elem g = reps[k], gi = group.inverse(g);
    for (const auto& f : all) {
      if (g == gi && !(f == f.inverse())) continue;
      maps[g] = f;
      maps[gi] = f.inverse();
      choose(k + 1);
    }
  };
  choose(0);
  return out;
}

std::vector<SemigroupAction> enumerate_semigroup_actions(const ExelSemigroup& e,
                                                         std::size_t points) {
  const Groupoid& group = e.group;
  const Elem one = unit_of(group);
  const auto all = all_partial_bijections(points);
  std::vector<Elem> reps;
  for (Elem g = 0; g < group.size(); ++g)
    if (g != one && g <= group.inverse(g)) reps.push_back(g);
  std::vector<PartialBijection> gen(group.size(), PartialBijection::empty(points));
  gen[one] = PartialBijection::identity_on(ElemSet::full(points));
  std::vector<SemigroupAction> out;
  const auto pts = default_points(points);
  std::function<void(std::size_t)> choose = [&](std::size_t k) {
    if (k == reps.size()) {
      // Extend along γ_{s1}...γ_{sn}[g] with γ_s = [s][s^-1].
      SemigroupAction a{pts, {}};
      for (const auto& x : e.elements) {
        PartialBijection f = PartialBijection::identity_on(ElemSet::full(points));
        for (Elem s : x.a.members())
          if (s != one && s != x.g) f = f * gen[s] * gen[group.inverse(s)];
        a.phi.push_back(f * gen[x.g]);
      }
      if (!semigroup_action_problem(e, a)) out.push_back(std::move(a));
      return;
    }
    const Elem g = reps[k], gi = group.inverse(g);
    for (const auto& f : all) {
      if (g == gi && !(f == f.inverse())) continue;
      gen[g] = f;
      gen[gi] = f.inverse();
      choose(k + 1);
    }
  };
  choose(0);
  return out;
}

std::vector<Hom> enumerate_action_homs(const ExelSemigroup& e, const PartialBijectionMonoid& m,
                                       const Groupoid& target, HomKind kind) {
  const Groupoid src = exel_groupoid(e);
  const auto& s = e.semigroup;
  const bool inductive = kind == HomKind::Inductive;
  const Elem one = e.generator(unit_of(e.group));
  const Elem id_x = m.index_of(PartialBijection::identity_on(ElemSet::full(m.points.size())));
  std::vector<Elem> order(src.identities());
  for (Elem x = 0; x < src.size(); ++x)
    if (!src.is_identity(x)) order.push_back(x);
  std::vector<std::int64_t> f(src.size(), -1);
  std::vector<Hom> out;

  auto consistent = [&](Elem x) {
    const Elem y = static_cast<Elem>(f[x]);
    for (Elem u = 0; u < src.size(); ++u) {
      if (f[u] < 0) continue;
      const Elem v = static_cast<Elem>(f[u]);
      for (auto [l, r, lv, rv] : {std::tuple{x, u, y, v}, std::tuple{u, x, v, y}}) {
        auto p = src.compose(l, r);
        if (!p) continue;
        auto q = target.compose(lv, rv);
        if (!q) return false;
        if (f[*p] >= 0 && static_cast<Elem>(f[*p]) != *q) return false;
      }
      if (!inductive) continue;
      if (s.leq(x, u) && !m.elements[y].restriction_of(m.elements[v])) return false;
      if (s.leq(u, x) && !m.elements[v].restriction_of(m.elements[y])) return false;
      if (src.is_identity(x) && src.is_identity(u)) {
        for (auto [p, q] : {std::pair{x, u}, std::pair{u, x}}) {
          const Elem meet = s.mul(p, q);
          if (f[meet] < 0) continue;
          const auto dom = m.elements[static_cast<Elem>(f[p])].domain() &
                           m.elements[static_cast<Elem>(f[q])].domain();
          if (m.elements[static_cast<Elem>(f[meet])].domain() != dom) return false;
        }
      }
    }
    return true;
  };

  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == order.size()) {
      std::vector<Elem> map;
      for (auto v : f) map.push_back(static_cast<Elem>(v));
      Hom h = check_hom(src, target, std::move(map));
      if (inductive) {
        std::vector<PartialBijection> beta;
        for (Elem v : h.map) beta.push_back(m.elements[v]);
        if (inductive_violation(e, beta)) return;
      }
      out.push_back(std::move(h));
      return;
    }
    const Elem x = order[k];
    for (Elem y = 0; y < target.size(); ++y) {
      if (src.is_identity(x) && !target.is_identity(y)) continue;
      if (x == one && y != id_x) continue;
      f[x] = y;
      if (consistent(x)) walk(k + 1);
      f[x] = -1;
    }
  };
  walk(0);
  return out;
}

std::vector<GlobalAction> enumerate_global_actions(const ExelSemigroup& e, std::size_t points,
                                                   bool inductive) {
  const Groupoid g = exel_groupoid(e);
  const auto& s = e.semigroup;
  const Elem one = e.generator(unit_of(e.group));
  const auto pts = default_points(points);
  const auto all = all_partial_bijections(points);
  const auto ids = g.identities();
  std::vector<ElemSet> subsets;
  for (const auto& f : all)
    if (f == PartialBijection::identity_on(f.domain())) subsets.push_back(f.domain());

  std::vector<PartialBijection> beta(g.size(), PartialBijection::empty(points));
  std::vector<bool> set(g.size(), false);
  std::vector<Elem> arrows;
  for (Elem x = 0; x < g.size(); ++x)
    if (!g.is_identity(x)) arrows.push_back(x);
  std::vector<GlobalAction> out;

  auto arrow_ok = [&](Elem x) {
    for (Elem u = 0; u < g.size(); ++u) {
      if (!set[u]) continue;
      for (auto [l, r] : {std::pair{x, u}, std::pair{u, x}}) {
        auto p = g.compose(l, r);
        if (p && set[*p] && !(beta[*p] == beta[l] * beta[r])) return false;
      }
      if (inductive) {
        if (s.leq(x, u) && !beta[x].restriction_of(beta[u])) return false;
        if (s.leq(u, x) && !beta[u].restriction_of(beta[x])) return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> place_arrows = [&](std::size_t k) {
    if (k == arrows.size()) {
      if (global_action_violation(g, points, beta)) return;
      if (inductive && inductive_violation(e, beta)) return;
      out.push_back({g, pts, beta});
      return;
    }
    const Elem x = arrows[k];
    const ElemSet from = beta[g.source(x)].domain(), to = beta[g.target(x)].domain();
    if (from.size() != to.size()) return;
    for (const auto& f : all) {
      if (f.domain() != from || f.range() != to) continue;
      beta[x] = f;
      set[x] = true;
      if (arrow_ok(x)) place_arrows(k + 1);
      set[x] = false;
    }
  };

  std::function<void(std::size_t)> place_pieces = [&](std::size_t k) {
    if (k == ids.size()) {
      ElemSet cover(points);
      for (Elem i : ids) cover |= beta[i].domain();
      if (cover != ElemSet::full(points)) return;
      // Pieces joined by an arrow must have equal size.
      for (Elem x : arrows)
        if (beta[g.source(x)].domain().size() != beta[g.target(x)].domain().size()) return;
      place_arrows(0);
      return;
    }
    const Elem i = ids[k];
    for (const auto& piece : subsets) {
      if (inductive && i == one && piece != ElemSet::full(points)) continue;
      beta[i] = PartialBijection::identity_on(piece);
      set[i] = true;
      bool ok = true;
      if (inductive) {
        for (Elem j : ids) {
          if (!set[j]) continue;
          const Elem meet = s.mul(i, j);
          if (set[meet] && beta[meet].domain() != (beta[i].domain() & beta[j].domain())) ok = false;
        }
      }
      if (ok) place_pieces(k + 1);
      set[i] = false;
    }
  };
  place_pieces(0);
  return out;
}

RoundtripReport correspondence_roundtrip(const Groupoid& group, std::size_t points,
                                         std::size_t group_bound, std::size_t point_bound) {
  if (!is_group(group)) fail(ErrorKind::NotAGroup, "partial actions need a group");
  if (group.size() > group_bound || points > point_bound)
    fail(ErrorKind::TooLarge,
         "round trip is bounded to |G| <= " + std::to_string(group_bound) +
             " and |X| <= " + std::to_string(point_bound),
         std::to_string(group_bound) + "," + std::to_string(point_bound));
  if (points == 0) fail(ErrorKind::EmptyStructure, "the point set is empty");
  const ExelSemigroup e = exel_semigroup(group);
  const PartialBijectionMonoid m = partial_bijection_monoid(default_points(points));
  const Groupoid target = restricted_product_groupoid(m.semigroup);

  const auto a = enumerate_partial_actions(group, points);
  const auto b = enumerate_semigroup_actions(e, points);
  const auto c = enumerate_action_homs(e, m, target, HomKind::Inductive);
  const auto d = enumerate_global_actions(e, points, true);

  RoundtripReport r;
  r.partial_actions = a.size();
  r.semigroup_actions = b.size();
  r.inductive_homs = c.size();
  r.global_actions = d.size();
  r.ordinary_homs = enumerate_action_homs(e, m, target, HomKind::Ordinary).size();
  r.plain_global_actions = enumerate_global_actions(e, points, false).size();
  r.counts_match = a.size() == b.size() && b.size() == c.size() && c.size() == d.size();

  auto contains = [](const auto& xs, const auto& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  };
  auto contains_hom = [&](const Hom& h) {
    return std::any_of(c.begin(), c.end(), [&](const Hom& o) { return o.map == h.map; });
  };
  auto note = [&](std::string what) { r.failures.push_back(std::move(what)); };
  try {
    for (const auto& p : a) {
      auto phi = partial_to_semigroup_action(e, p);
      if (!contains(b, phi)) note("partial action maps outside the semigroup actions");
      if (!(semigroup_action_to_partial(e, phi) == p)) note("partial -> semigroup -> partial");
    }
    for (const auto& phi : b) {
      auto p = semigroup_action_to_partial(e, phi);
      if (!contains(a, p)) note("semigroup action maps outside the partial actions");
      if (!(partial_to_semigroup_action(e, p) == phi)) note("semigroup -> partial -> semigroup");
      auto ga = semigroup_action_to_groupoid_action(e, phi);
      if (!contains(d, ga)) note("semigroup action maps outside the global actions");
      if (!(groupoid_action_to_semigroup_action(e, ga) == phi)) note("semigroup -> global -> semigroup");
    }
    for (const auto& ga : d) {
      auto phi = groupoid_action_to_semigroup_action(e, ga);
      if (!contains(b, phi)) note("global action maps outside the semigroup actions");
      Hom h = groupoid_action_to_hom(ga, m, target);
      if (!contains_hom(h)) note("global action maps outside the homomorphisms");
      if (!(hom_to_groupoid_action(h, m) == ga)) note("global -> hom -> global");
    }
    for (const auto& h : c) {
      auto ga = hom_to_groupoid_action(h, m);
      if (!contains(d, ga)) note("homomorphism maps outside the global actions");
      if (groupoid_action_to_hom(ga, m, target).map != h.map) note("hom -> global -> hom");
    }
  } catch (const Error& err) {
    note(std::string("conversion failed: ") + err.what());
  }
  r.maps_inverse = r.failures.empty();
  return r;
}

}  // namespace grpd
