// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "exel_oracle.hpp"
#include "grpd/constructions.hpp"
#include "grpd/corpus.hpp"
#include "grpd/partial_action.hpp"
#include "grpd/series.hpp"

using namespace grpd;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

std::vector<NamedGroupoid> corpus_up_to(std::size_t n) {
  std::vector<NamedGroupoid> out;
  for (auto& c : structured_corpus())
    if (c.groupoid.size() <= n) out.push_back(std::move(c));
  return out;
}

// ---------------------------------------------------------------------------
// Table-level oracles, computed from the product table alone.

std::optional<Elem> product(const PartialTable& t, Elem a, Elem b) { return t.product(a, b); }

bool is_idempotent(const PartialTable& t, Elem e) {
  auto p = product(t, e, e);
  return p && *p == e;
}

/// The unique h with gh, hg defined idempotents and (gh)g = g.
std::optional<Elem> table_inverse(const PartialTable& t, Elem g) {
  std::optional<Elem> found;
  for (Elem h = 0; h < t.size(); ++h) {
    auto gh = product(t, g, h), hg = product(t, h, g);
    if (!gh || !hg || !is_idempotent(t, *gh) || !is_idempotent(t, *hg)) continue;
    auto ghg = product(t, *gh, g);
    if (!ghg || *ghg != g) continue;
    if (found) return std::nullopt;
    found = h;
  }
  return found;
}

// ---------------------------------------------------------------------------
// Subgroupoids and normality, by brute force.

bool closed(const Groupoid& g, const std::vector<bool>& in) {
  for (Elem a = 0; a < g.size(); ++a) {
    if (!in[a]) continue;
    if (!in[g.inverse(a)]) return false;
    for (Elem b = 0; b < g.size(); ++b)
      if (in[b] && g.source(a) == g.target(b) && !in[g.mul(a, b)]) return false;
  }
  return true;
}

std::vector<std::vector<bool>> all_subgroupoids(const Groupoid& g) {
  std::vector<std::vector<bool>> out;
  const std::size_t n = g.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = (mask >> i) & 1;
    if (closed(g, in)) out.push_back(std::move(in));
  }
  return out;
}

bool wide(const Groupoid& g, const std::vector<bool>& in) {
  for (Elem e : g.identities())
    if (!in[e]) return false;
  return true;
}

/// Wide, and g^-1 x g stays inside for every loop x at r(g) inside.
bool normal_by_definition(const Groupoid& g, const std::vector<bool>& in) {
  if (!wide(g, in)) return false;
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem x = 0; x < g.size(); ++x) {
      if (!in[x] || g.source(x) != g.target(a) || g.target(x) != g.target(a)) continue;
      if (!in[g.mul(g.mul(g.inverse(a), x), a)]) return false;
    }
  return true;
}

/// Wide, and g^-1 H_{r(g)} g = H_{d(g)} as sets.
bool normal_by_characterization(const Groupoid& g, const std::vector<bool>& in) {
  if (!wide(g, in)) return false;
  for (Elem a = 0; a < g.size(); ++a) {
    std::set<Elem> conj, at_source;
    for (Elem x = 0; x < g.size(); ++x) {
      if (!in[x]) continue;
      if (g.source(x) == g.target(a) && g.target(x) == g.target(a))
        conj.insert(g.mul(g.mul(g.inverse(a), x), a));
      if (g.source(x) == g.source(a) && g.target(x) == g.source(a)) at_source.insert(x);
    }
    if (conj != at_source) return false;
  }
  return true;
}

ElemSet to_set(const std::vector<bool>& in) {
  ElemSet s(in.size());
  for (Elem i = 0; i < in.size(); ++i)
    if (in[i]) s.insert(i);
  return s;
}

/// Normal subgroupoids inside Iso(G): the ones with a groupoid quotient.
std::vector<ElemSet> admissible_normals(const Groupoid& g) {
  std::vector<ElemSet> out;
  for (const auto& s : subgroupoid_sets(g, iso_set(g))) {
    std::vector<bool> in(g.size());
    for (Elem e : s.members()) in[e] = true;
    if (normal_by_definition(g, in)) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factor multisets

bool same_factor_multiset(const std::vector<Groupoid>& a, const std::vector<Groupoid>& b) {
  std::vector<Groupoid> x, y;
  for (const auto& f : a)
    if (f.size() > f.identities().size()) x.push_back(f);
  for (const auto& f : b)
    if (f.size() > f.identities().size()) y.push_back(f);
  if (x.size() != y.size()) return false;
  std::vector<bool> used(y.size(), false);
  for (const auto& f : x) {
    bool matched = false;
    for (std::size_t j = 0; j < y.size() && !matched; ++j)
      if (!used[j] && find_isomorphism(f, y[j])) used[j] = matched = true;
    if (!matched) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criteria

Verdict criterion1() {
  Verdict v;
  std::size_t total = 0, agree = 0, valid = 0;
  auto run = [&](const PartialTable& t, const std::string& name) {
    const auto id = check_identity_axioms(t);
    const auto inv = check_inverse_map_axioms(t);
    const bool a = std::all_of(id.begin(), id.end(), [](const AxiomVerdict& x) { return x.holds; });
    const bool b = std::all_of(inv.begin(), inv.end(), [](const AxiomVerdict& x) { return x.holds; });
    ++total;
    if (a == b) ++agree;
    else v.require(false, "verdicts differ on " + name);
    if (a && b) ++valid;
  };
  for (const auto& c : structured_corpus()) run(c.groupoid.table(), c.name);
  for (const auto& m : mutated_tables(20261014, 1500, 16)) run(m.table, m.name);
  v.require(valid < total, "mutations never broke a table");
  v.detail = v.pass ? std::to_string(agree) + "/" + std::to_string(total) +
                          " tables agree (" + std::to_string(valid) + " groupoids)"
                    : v.detail;
  return v;
}

Verdict criterion2() {
  Verdict v;
  std::size_t groupoids = 0, checks = 0;
  std::vector<Groupoid> all;
  for (const auto& c : structured_corpus()) all.push_back(c.groupoid);
  for (const auto& m : mutated_tables(7, 1000, 16))
    if (check_axioms(m.table).overall()) all.push_back(Groupoid(m.table));
  for (const auto& g : all) {
    ++groupoids;
    const PartialTable& t = g.table();
    std::vector<Elem> inv(g.size()), d(g.size()), r(g.size());
    bool ok = true;
    for (Elem a = 0; a < g.size() && ok; ++a) {
      auto i = table_inverse(t, a);
      if (!i) {
        ok = false;
        break;
      }
      inv[a] = *i;
      d[a] = *product(t, *i, a);
      r[a] = *product(t, a, *i);
    }
    v.require(ok, "no unique inverse in a corpus groupoid");
    if (!ok) continue;
    std::set<Elem> idem;
    for (Elem a = 0; a < g.size(); ++a)
      if (is_idempotent(t, a)) idem.insert(a);
    const auto lib_ids = g.identities();
    v.require(std::set<Elem>(lib_ids.begin(), lib_ids.end()) == idem, "G_0 differs from the idempotents");
    for (Elem a = 0; a < g.size(); ++a) {
      v.require(g.inverse(a) == inv[a] && g.source(a) == d[a] && g.target(a) == r[a],
                "d, r or inverse disagree with the table");
      for (Elem b = 0; b < g.size(); ++b) {
        ++checks;
        auto ab = product(t, a, b);
        v.require(ab.has_value() == (d[a] == r[b]), "existence of gh differs from d(g) = r(h)");
        if (!ab) continue;
        v.require(d[*ab] == d[b], "d(gh) != d(h)");
        v.require(r[*ab] == r[a], "r(gh) != r(g)");
        auto hg = product(t, inv[b], inv[a]);
        v.require(hg && *hg == inv[*ab], "(gh)^-1 != h^-1 g^-1");
      }
    }
  }
  if (v.pass)
    v.detail = std::to_string(groupoids) + " groupoids, " + std::to_string(checks) +
               " pairs, no counterexample";
  return v;
}

Verdict criterion3() {
  Verdict v;
  std::size_t subs = 0, normal = 0;
  for (const auto& c : corpus_up_to(12)) {
    const Groupoid& g = c.groupoid;
    const auto brute = all_subgroupoids(g);
    const auto lib = enumerate_subgroupoids(g, SubFilter::All, 12);
    v.require(brute.size() == lib.size(), "subgroupoid count differs on " + c.name);
    for (const auto& in : brute) {
      ++subs;
      const bool a = normal_by_definition(g, in);
      const bool b = normal_by_characterization(g, in);
      const auto lib_report = is_normal(g, to_set(in));
      v.require(a == b, "definition and characterization differ on " + c.name);
      v.require(lib_report.normal == a && lib_report.via_definition == a &&
                    lib_report.via_characterization == b,
                "library normality differs on " + c.name);
      if (a) ++normal;
    }
  }
  if (v.pass)
    v.detail = std::to_string(subs) + " subgroupoids, " + std::to_string(normal) +
               " normal, both tests agree on all";
  return v;
}

Verdict criterion4() {
  Verdict v;
  std::size_t first = 0, second = 0, third = 0;
  auto check_first = [&](const Hom& phi, const std::string& name) {
    ++first;
    const FirstIso f = first_iso(phi);
    const Hom iso = check_hom(f.quotient.groupoid, phi.codomain, f.iso.map);
    v.require(iso.strong && iso.bijective(), "first_iso is not a strong bijection on " + name);
    for (Elem e = 0; e < phi.domain.size(); ++e)
      v.require(f.iso.map[coset_index(f.quotient, e)] == phi.map[e], "phi != phibar∘j on " + name);
  };
  for (const auto& c : structured_corpus()) {
    const Groupoid& g = c.groupoid;
    const auto normals = admissible_normals(g);
    for (const auto& n : normals) {
      const Quotient q = quotient(g, n);
      v.require(q.projection.strong && q.projection.surjective, "projection not strong surjective");
      check_first(q.projection, c.name);
      // Two-step projections G -> G/N -> (G/N)/(M/N).
      for (const auto& m : normals) {
        if (!n.subset_of(m) || n == m) continue;
        const ElemSet m_bar = image_of(q.projection, m).set;
        const Quotient q2 = quotient(q.groupoid, m_bar);
        check_first(compose(q2.projection, q.projection), c.name);
      }
    }
    // G/G_0 ≅ G and Iso/Iso ≅ G_0.
    const Quotient by_ids = quotient(g, g.identity_set());
    v.require(find_isomorphism(by_ids.groupoid, g).has_value(), "G/G_0 not isomorphic to G: " + c.name);
    const Groupoid iso = restrict_to(g, iso_set(g));
    const Quotient iso_by_iso = quotient(iso, iso.all());
    const Groupoid g0 = restrict_to(g, g.identity_set());
    v.require(find_isomorphism(iso_by_iso.groupoid, g0).has_value(), "Iso/Iso not isomorphic to G_0: " + c.name);

    if (g.size() > 12) continue;
    std::vector<ElemSet> wides;
    for (const auto& s : enumerate_subgroupoids(g, SubFilter::Wide, 12)) wides.push_back(s.members());
    for (const auto& m : wides)
      for (const auto& n : normals) {
        ++second;
        const SecondIso s = second_iso(g, m, n);
        const Hom iso2 = check_hom(s.lhs.groupoid, s.rhs.groupoid, s.iso.map);
        v.require(iso2.strong && iso2.bijective(), "second_iso not a strong bijection on " + c.name);
        for (Elem x : m.members())
          v.require(s.iso.map[coset_index(s.lhs, s.lhs.cosets.parent.find(g.label(x)).value())] ==
                        coset_index(s.rhs, s.rhs.cosets.parent.find(g.label(x)).value()),
                    "second_iso does not send [m] to [m] on " + c.name);
      }
    for (const auto& h : normals)
      for (const auto& k : normals) {
        if (!k.subset_of(h)) continue;
        ++third;
        const ThirdIso t = third_iso(g, h, k);
        const Hom iso3 = check_hom(t.outer.groupoid, t.g_by_h.groupoid, t.iso.map);
        v.require(iso3.strong && iso3.bijective(), "third_iso not a strong bijection on " + c.name);
        for (Elem x = 0; x < g.size(); ++x)
          v.require(t.iso.map[coset_index(t.outer, coset_index(t.g_by_k, x))] == coset_index(t.g_by_h, x),
                    "third_iso does not send [[g]] to [g] on " + c.name);
      }
  }
  v.require(first >= 200, "only " + std::to_string(first) + " projection instances");
  if (v.pass)
    v.detail = std::to_string(first) + " first, " + std::to_string(second) + " second, " +
               std::to_string(third) + " third isomorphism instances verified";
  return v;
}

Verdict criterion5() {
  Verdict v;
  std::size_t series = 0, pairs = 0;
  std::vector<NamedGroupoid> list = corpus_up_to(12);
  list.push_back({"Z12", cyclic_group(12)});
  for (const auto& c : list) {
    const Groupoid& g = c.groupoid;
    const auto all = all_composition_series(g, 12);
    series += all.size();
    v.require(!all.empty(), "no composition series for " + c.name);
    for (const auto& s : all) {
      v.require(s.ends_at_identities(), "composition series does not end at G_0");
      for (const auto& f : s.factors) v.require(is_simple(f), "non-simple factor in " + c.name);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        v.require(same_factor_multiset(all[i].factors, all[j].factors),
                  "two composition series of " + c.name + " differ");
    if (c.name == "Z12") {
      const std::vector<Groupoid> expect = {cyclic_group(2), cyclic_group(2), cyclic_group(3)};
      for (const auto& s : all)
        v.require(same_factor_multiset(s.factors, expect), "Z12 factors are not {Z2, Z2, Z3}");
    }
    // Schreier on composition series and the two-term series G ⊇ N ⊇ G_0.
    std::vector<SubnormalSeries> pool(all.begin(), all.begin() + static_cast<long>(std::min<std::size_t>(all.size(), 8)));
    for (const auto& n : admissible_normals(g)) {
      if (n == g.all() || n == g.identity_set()) continue;
      if (pool.size() >= 14) break;
      pool.push_back(validate_series(g, {g.all(), n, g.identity_set()}));
    }
    for (const auto& s : pool)
      for (const auto& t : pool) {
        ++pairs;
        const auto r = schreier_refine(s, t);
        v.require(series_equivalent(r.s_refined, r.t_refined).equivalent,
                  "schreier refinements not equivalent on " + c.name);
        v.require(same_factor_multiset(r.s_refined.factors, r.t_refined.factors),
                  "schreier factor multisets differ on " + c.name);
        for (const auto& term : s.chain)
          v.require(std::find(r.s_refined.chain.begin(), r.s_refined.chain.end(), term) !=
                        r.s_refined.chain.end(),
                    "refinement drops a term");
      }
  }
  if (v.pass)
    v.detail = std::to_string(series) + " composition series, " + std::to_string(pairs) +
               " Schreier pairs, Z12 factors {Z2, Z2, Z3}";
  return v;
}

Verdict criterion6() {
  Verdict v;
  const Groupoid z2 = cyclic_group(2), z3 = cyclic_group(3);
  for (const auto& [g, size] : {std::pair{z2, std::size_t{3}}, std::pair{z3, std::size_t{8}}}) {
    const ExelSemigroup e = exel_semigroup(g);
    const oracle::ExelCongruence cc(g, 6);
    v.require(e.elements.size() == size, "pair-form size is " + std::to_string(e.elements.size()));
    v.require(cc.classes() == size, "congruence closure has " + std::to_string(cc.classes()) + " classes");
    // Element for element: each class maps to one element and back.
    std::map<std::size_t, Elem> to_elem;
    std::map<Elem, std::size_t> to_class;
    for (const auto& w : cc.words()) {
      const Elem x = e.index_of(exel_fold(e, w));
      const std::size_t k = cc.class_of(w);
      auto [a, fa] = to_elem.emplace(k, x);
      auto [b, fb] = to_class.emplace(x, k);
      v.require(a->second == x && b->second == k, "classes and elements do not match");
      v.require(exel_normal_form(g, w) == exel_fold(e, w), "rewriting and folding disagree");
    }
    v.require(to_elem.size() == size && to_class.size() == size, "not a bijection");
    const Elem one = g.identities().front();
    for (Elem h = 0; h < g.size(); ++h)
      v.require(cc.class_of({one, h}) == cc.class_of({h}), "[1][g] != [g] in the closure");
  }
  for (const auto& n : small_groups()) {
    if (n.groupoid.size() > 6) continue;
    const auto& s = exel_semigroup(n.groupoid).semigroup;
    v.require(check_inverse_semigroup(s.size(), s.table(), s.star_map()).ok(),
              "E(" + n.name + ") is not an inverse semigroup");
  }
  if (v.pass)
    v.notes.push_back("|E(Z2)| = 3 and |E(Z3)| = 8 by pair form and by congruence closure, "
                      "classes match elements one to one, [1][g] = [g] holds, "
                      "E(G) is an inverse semigroup for every group of order <= 6");
  std::size_t pairs = 0, literal_bad = 0;
  std::string literal_where;
  for (const auto& [name, g] : {std::pair{"Z2", z2}, std::pair{"Z3", z3},
                                std::pair{"Z2xZ2", direct_product(z2, z2)}}) {
    const ExelSemigroup e = exel_semigroup(g);
    const auto& s = e.semigroup;
    const std::size_t bad_before = literal_bad, pairs_before = pairs;
    for (Elem a = 0; a < s.size(); ++a)
      for (Elem b = 0; b < s.size(); ++b) {
        ++pairs;
        const bool direct = s.mul(a, s.star(a)) == s.mul(s.star(b), b);
        const auto c = exel_composability(e, e.elements[a], e.elements[b]);
        v.require(c.by_products == direct && c.by_sets == direct,
                  std::string("corrected criterion disagrees in E(") + name + ")");
        if (exel_literal_criterion(e, e.elements[a], e.elements[b]) != direct) {
          if (literal_bad == 0)
            literal_where = std::string("E(") + name + "): " + s.label(a) + ", " + s.label(b);
          ++literal_bad;
        }
      }
    v.notes.push_back(std::string("E(") + name + "): criterion as printed wrong on " +
                      std::to_string(literal_bad - bad_before) + " of " +
                      std::to_string(pairs - pairs_before) + " pairs");
  }
  v.require(literal_bad == 0, "criterion as printed disagrees with products on " +
                                  std::to_string(literal_bad) + "/" + std::to_string(pairs) +
                                  " pairs, first at " + literal_where +
                                  "; the criterion A = l^-1 B agrees on all pairs");
  if (v.pass) v.detail = "|E(Z2)| = 3, |E(Z3)| = 8 both ways; " + std::to_string(pairs) + " pairs agree";
  return v;
}

// Partial actions by brute force over all families of partial bijections.
std::size_t brute_partial_actions(const Groupoid& g, std::size_t n) {
  const auto maps = all_partial_bijections(n);
  const Elem one = g.identities().front();
  std::size_t count = 0;
  std::vector<std::size_t> pick(g.size(), 0);
  std::function<void(Elem)> rec = [&](Elem k) {
    if (k == g.size()) {
      auto a = [&](Elem x) -> const PartialBijection& { return maps[pick[x]]; };
      auto piece = [&](Elem x) { return a(x).range(); };
      if (!(a(one) == PartialBijection::identity_on(ElemSet::full(n)))) return;
      for (Elem x = 0; x < g.size(); ++x) {
        if (a(x).domain() != piece(g.inverse(x))) return;
        if (!(a(g.inverse(x)) == a(x).inverse())) return;
        for (Elem y = 0; y < g.size(); ++y) {
          const Elem xy = g.mul(x, y);
          ElemSet img(n);
          for (Elem p : (piece(g.inverse(x)) & piece(y)).members())
            img.insert(static_cast<Elem>(a(x).image[p]));
          if (img != (piece(x) & piece(xy))) return;
          for (Elem p : (piece(g.inverse(y)) & piece(g.inverse(xy))).members()) {
            const int q = a(y).image[p];
            if (q < 0 || a(x).image[static_cast<Elem>(q)] != a(xy).image[p]) return;
          }
        }
      }
      ++count;
      return;
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
      pick[k] = i;
      rec(k + 1);
    }
  };
  rec(0);
  return count;
}

// Unital E(G)-actions from images of the generators, extended along words
// and checked on every pair.
std::size_t brute_semigroup_actions(const Groupoid& g, std::size_t n) {
  const ExelSemigroup e = exel_semigroup(g);
  const oracle::ExelCongruence cc(g, 4);
  std::map<Elem, oracle::Word> rep;
  for (const auto& w : cc.words()) rep.emplace(e.index_of(exel_fold(e, w)), w);
  const auto maps = all_partial_bijections(n);
  const Elem one = g.identities().front();
  std::size_t count = 0;
  std::vector<std::size_t> pick(g.size(), 0);
  std::function<void(Elem)> rec = [&](Elem k) {
    if (k == g.size()) {
      if (!(maps[pick[one]] == PartialBijection::identity_on(ElemSet::full(n)))) return;
      auto eval = [&](const oracle::Word& w) {
        PartialBijection f = PartialBijection::identity_on(ElemSet::full(n));
        for (Elem x : w) f = f * maps[pick[x]];
        return f;
      };
      // Well defined on every word of length <= 4.
      std::map<Elem, PartialBijection> phi;
      for (const auto& [x, w] : rep) phi.emplace(x, eval(w));
      for (const auto& w : cc.words())
        if (!(eval(w) == phi.at(e.index_of(exel_fold(e, w))))) return;
      for (const auto& [x, fx] : phi)
        for (const auto& [y, fy] : phi)
          if (!(phi.at(e.semigroup.mul(x, y)) == fx * fy)) return;
      ++count;
      return;
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
      pick[k] = i;
      rec(k + 1);
    }
  };
  rec(0);
  return count;
}

Verdict criterion7() {
  Verdict v;
  std::string counts;
  for (const auto& [name, g] : {std::pair{"1", cyclic_group(1)}, std::pair{"Z2", cyclic_group(2)},
                                std::pair{"Z3", cyclic_group(3)}})
    for (std::size_t n : {1, 2}) {
      const auto r = correspondence_roundtrip(g, n);
      const std::string where = std::string(name) + " on " + std::to_string(n);
      v.require(r.counts_match, "counts differ for " + where);
      v.require(r.maps_inverse, "conversions not inverse for " + where);
      v.require(r.partial_actions == brute_partial_actions(g, n), "partial-action count differs from brute force for " + where);
      v.require(r.semigroup_actions == brute_semigroup_actions(g, n), "E(G)-action count differs from brute force for " + where);
      counts += " " + where + ":" + std::to_string(r.partial_actions);
      v.notes.push_back(where + ": (a) " + std::to_string(r.partial_actions) + " (b) " +
                        std::to_string(r.semigroup_actions) + " (c) " + std::to_string(r.inductive_homs) +
                        " (d) " + std::to_string(r.global_actions) + "; unital homs ignoring order " +
                        std::to_string(r.ordinary_homs) + ", covering actions ignoring order " +
                        std::to_string(r.plain_global_actions));
    }
  if (v.pass) v.detail = "counts (a)=(b)=(c)=(d):" + counts + "; conversions mutually inverse";
  return v;
}

// ---------------------------------------------------------------------------
// CLI contract

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::string& args) {
  char err_path[] = "/tmp/grpd_acceptance_XXXXXX";
  const int fd = mkstemp(err_path);
  if (fd < 0) return {-1, {}, {}};
  close(fd);
  const std::string cmd = std::string("cd '") + GRPD_DATA_DIR + "' && '" + GRPD_CLI_PATH + "' " +
                          args + " 2>'" + err_path + "'";
  Run r{0, {}, {}};
  std::array<char, 4096> buf{};
  std::size_t k;
  if (FILE* p = popen(cmd.c_str(), "r")) {
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  } else {
    r.code = -1;
  }
  if (FILE* e = fopen(err_path, "r")) {
    while ((k = fread(buf.data(), 1, buf.size(), e)) > 0) r.err.append(buf.data(), k);
    fclose(e);
  }
  std::remove(err_path);
  return r;
}

Verdict criterion8() {
  Verdict v;
  struct Scenario {
    std::string args;
    int expect;
    std::string must_contain;
  };
  const std::vector<Scenario> scenarios = {
      {"validate pair2.gdf", 0, "\"size\":4"},
      {"validate minimal.gdf", 0, "\"size\":1"},
      {"info s3.gdf", 0, "\"group\":true"},
      {"sub enumerate --normal s3.gdf", 0, "\"count\":3"},
      {"sub check s3.gdf --members 'id,(12)'", 0, "\"subgroupoid\":true"},
      {"sub check s3.gdf --members 'id,(12),(13)'", 1, "\"witness\""},
      {"normal check s3.gdf --members 'id,(12)'", 1, "\"witness\""},
      {"normal check s3.gdf --members 'id,(123),(132)'", 0, "\"normal\":true"},
      {"quotient pair2.gdf --by identities.gdf", 0, "\"isomorphic_to_input\":true"},
      {"quotient pair2.gdf --by pair2_all.gdf", 1, "QuotientUndefined"},
      {"quotient s3.gdf --by s3_trivial.gdf", 0, "\"size\":6"},
      {"hom check z6.gdf z2.gdf z6_to_z2.gdf", 0, "\"strong\":true"},
      {"hom check z6.gdf z2.gdf z6_to_z2_bad.gdf", 1, "NotAHomomorphism"},
      {"iso z6.gdf z6.gdf", 0, "\"isomorphic\":true"},
      {"iso z6.gdf s3.gdf", 1, "\"isomorphic\":false"},
      {"iso-theorem first z6.gdf z3.gdf z6_to_z3.gdf", 0, "\"factorization\":true"},
      {"iso-theorem second z6.gdf z6_even.gdf z6_half.gdf", 0, "\"lhs_size\":3"},
      {"iso-theorem third z6.gdf z6_even.gdf z6_trivial.gdf", 0, "\"g_by_h_size\":2"},
      {"series validate z6.gdf z6_series_a.gdf", 0, "\"composition\":true"},
      {"series validate z6.gdf z6_series_bad.gdf", 1, "NotNested"},
      {"series composition s3.gdf", 0, "\"length\":2"},
      {"series jordan-holder z6.gdf", 0, "\"series_found\":2"},
      {"series equivalent z6.gdf z6_series_a.gdf z6_series_b.gdf", 0, "\"equivalent\":true"},
      {"series schreier z6.gdf z6_series_a.gdf z6_series_b.gdf", 0, "\"equivalent\":true"},
      {"series zassenhaus z6.gdf z6_trivial.gdf z6_even.gdf z6_trivial.gdf z6_half.gdf", 0, "\"lhs_size\":1"},
      {"series refine z6.gdf z6_series_b.gdf --at 5 --by z6_even.gdf", 2, ""},
      {"exel build z3.gdf", 0, "\"size\":8"},
      {"exel normal-form z3.gdf --word 1,2,1", 0, "\"fold_agrees\":true"},
      {"exel normal-form z3.gdf --word ''", 2, ""},
      {"exel groupoid z2.gdf", 0, "\"size\":3"},
      {"exel build z12.gdf", 3, ""},
      {"paction check z2_on_2.gdf", 0, "\"action\":true"},
      {"paction check bad_action.gdf", 1, "AxiomViolation"},
      {"paction to-exel z3_on_2.gdf", 0, "\"acting\":\"exel\""},
      {"paction from-exel z2_on_2_exel.gdf", 0, "\"kind\":\"partial_action\""},
      {"paction roundtrip z2.gdf --points 2", 0, "\"counts_match\":true"},
      {"paction roundtrip s3.gdf --points 1", 3, ""},
      {"corpus --seed 3 --count 200", 0, "\"tables\":200"},
      {"validate bad_axioms.gdf", 1, "AxiomViolation"},
      {"validate bad_syntax.gdf", 2, ""},
      {"validate bad_unknown_field.gdf", 2, ""},
      {"validate bad_conflict.gdf", 2, ""},
      {"validate no_such_file.gdf", 2, ""},
      {"sub check s3.gdf --members 'id,(99)'", 2, ""},
      {"--max-size 4 sub enumerate s3.gdf", 3, ""},
      {"frobnicate s3.gdf", 2, ""},
  };
  std::set<int> codes;
  std::size_t stable = 0;
  for (const auto& s : scenarios) {
    const Run a = run_cli("--json " + s.args);
    const Run b = run_cli("--json " + s.args);
    codes.insert(a.code);
    v.require(a.code == s.expect, "'" + s.args + "' exited " + std::to_string(a.code) +
                                      ", expected " + std::to_string(s.expect));
    v.require(a.out == b.out && a.code == b.code, "'" + s.args + "' is not byte-stable");
    if (a.out == b.out) ++stable;
    if (!s.must_contain.empty())
      v.require(a.out.find(s.must_contain) != std::string::npos,
                "'" + s.args + "' output lacks " + s.must_contain);
    if (s.expect >= 2) {
      v.require(a.out.empty(), "'" + s.args + "' wrote results on failure");
      v.require(!a.err.empty(), "'" + s.args + "' gave no diagnostic");
    }
  }
  // Specific diagnostics.
  v.require(run_cli("validate bad_syntax.gdf").err.find("SyntaxError") != std::string::npos,
            "syntax errors are not reported as such");
  v.require(run_cli("validate bad_unknown_field.gdf").err.find("/colour at 18:3") != std::string::npos,
            "unknown fields are not located");
  v.require(run_cli("validate bad_conflict.gdf").err.find("ConflictingProduct") != std::string::npos,
            "conflicting products are not reported");
  v.require(codes == std::set<int>{0, 1, 2, 3}, "not every exit code was exercised");
  if (v.pass)
    v.detail = std::to_string(scenarios.size()) + " scenarios, exit codes 0-3 as documented, " +
               std::to_string(stable) + " byte-stable";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Verdict()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
  };
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failures;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << " (" << secs
         << "s) " << v.detail;
    std::cout << line.str() << "\n";
    for (const auto& n : v.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  return failures;
}
