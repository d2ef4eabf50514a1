#include "grpd/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace grpd {

std::size_t SubnormalSeries::length() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i + 1] != chain[i]) ++n;
  return n;
}

bool SubnormalSeries::ends_at_identities() const {
  return !chain.empty() && chain.back() == groupoid.identity_set();
}

namespace {

bool all_loops(const Groupoid& g, const ElemSet& s) {
  for (Elem x : s.members())
    if (!g.is_loop(x)) return false;
  return true;
}

Quotient factor_of(const Groupoid& g, const ElemSet& m, const ElemSet& n) {
  Groupoid gm = restrict_to(g, m);
  return quotient(gm, g.translate_to(n, gm));
}

}  // namespace

bool admissible_step(const Groupoid& g, const ElemSet& m, const ElemSet& n) {
  return quotient_admissible_in(g, m, n);
}

SubnormalSeries validate_series(const Groupoid& g, const std::vector<ElemSet>& chain) {
  if (chain.empty() || chain.front() != g.all())
    fail(ErrorKind::NotNested, "a series must start at the whole groupoid", "0");
  SubnormalSeries s{g, chain, {}, true};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const ElemSet& m = chain[i];
    const ElemSet& n = chain[i + 1];
    const std::string at = std::to_string(i);
    if (n.empty() || !n.subset_of(m))
      fail(ErrorKind::NotNested,
           "term " + std::to_string(i + 1) + " is not contained in term " + at, at);
    if (!is_subgroupoid_set(g, n))
      fail(ErrorKind::NotASubgroupoid,
           "term " + std::to_string(i + 1) + " is not a subgroupoid", at);
    if (!normality_in(g, m, n).normal)
      fail(ErrorKind::NotNormalAtStep,
           "term " + std::to_string(i + 1) + " is not normal in term " + at, at);
    if (!all_loops(g, n))
      fail(ErrorKind::QuotientUndefined,
           "term " + std::to_string(i + 1) +
               " is not contained in Iso, so the factor is not a groupoid",
           at);
    s.factors.push_back(factor_of(g, m, n).groupoid);
  }
  for (const auto& term : chain)
    if (!normality_in(g, g.all(), term).normal) s.normal_series = false;
  return s;
}

SubnormalSeries one_step_refinement(const SubnormalSeries& s, std::size_t i,
                                    const ElemSet& n) {
  const Groupoid& g = s.groupoid;
  if (i >= s.chain.size())
    fail(ErrorKind::BadPosition, "position " + std::to_string(i) + " is past the end",
         std::to_string(i));
  const ElemSet& upper = s.chain[i];
  if (!n.subset_of(upper))
    fail(ErrorKind::BadPosition, "the new term is not inside the term at position " + std::to_string(i),
         std::to_string(i));
  if (i + 1 < s.chain.size() && !s.chain[i + 1].subset_of(n))
    fail(ErrorKind::BadPosition,
         "the new term does not contain the term at position " + std::to_string(i + 1),
         std::to_string(i));
  if (!admissible_step(g, upper, n))
    fail(ErrorKind::NotNormal, "term is not normal in position " + std::to_string(i),
         std::to_string(i));
  if (i + 1 < s.chain.size() && !admissible_step(g, n, s.chain[i + 1]))
    fail(ErrorKind::NotNormal,
         "position " + std::to_string(i + 1) + " is not normal in the term",
         std::to_string(i));
  std::vector<ElemSet> chain = s.chain;
  chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(i + 1), n);
  return validate_series(g, chain);
}

namespace {

/// Admissible normal subgroupoids of m (those in Iso, so a subset search).
std::vector<ElemSet> admissible_normals(const Groupoid& g, const ElemSet& m) {
  std::vector<ElemSet> out;
  ElemSet ids(g.size());
  for (Elem x : m.members())
    if (g.is_identity(x)) ids.insert(x);
  for (auto& s : subgroupoid_sets(g, m & iso_set(g)))
    if (ids.subset_of(s) && normality_in(g, m, s).normal) out.push_back(std::move(s));
  return out;
}

}  // namespace

bool is_simple(const Groupoid& g, std::size_t bound) {
  if (g.size() > bound)
    fail(ErrorKind::TooLarge, "groupoid exceeds enumeration bound", std::to_string(bound));
  for (const auto& n : admissible_normals(g, g.all()))
    if (n != g.identity_set() && n != g.all()) return false;
  return true;
}

std::vector<ElemSet> maximal_admissible_normals(const Groupoid& g, const ElemSet& m) {
  std::vector<ElemSet> proper;
  for (auto& n : admissible_normals(g, m))
    if (n != m) proper.push_back(std::move(n));
  std::vector<ElemSet> out;
  for (const auto& n : proper) {
    bool maximal = std::none_of(proper.begin(), proper.end(), [&](const ElemSet& o) {
      return o != n && n.subset_of(o);
    });
    if (maximal) out.push_back(n);
  }
  return out;
}

SubnormalSeries composition_series(const Groupoid& g, std::size_t bound) {
  if (g.size() > bound)
    fail(ErrorKind::TooLarge, "groupoid exceeds enumeration bound", std::to_string(bound));
  std::vector<ElemSet> chain{g.all()};
  while (chain.back() != g.identity_set())
    chain.push_back(maximal_admissible_normals(g, chain.back()).front());
  return validate_series(g, chain);
}

std::vector<SubnormalSeries> all_composition_series(const Groupoid& g, std::size_t bound) {
  if (g.size() > bound)
    fail(ErrorKind::TooLarge, "groupoid exceeds enumeration bound", std::to_string(bound));
  std::vector<std::vector<ElemSet>> chains;
  std::vector<ElemSet> current{g.all()};
  std::function<void()> walk = [&]() {
    if (current.back() == g.identity_set()) {
      chains.push_back(current);
      return;
    }
    for (auto& n : maximal_admissible_normals(g, current.back())) {
      current.push_back(n);
      walk();
      current.pop_back();
    }
  };
  walk();
  std::vector<SubnormalSeries> out;
  for (const auto& c : chains) out.push_back(validate_series(g, c));
  return out;
}

bool has_proper_refinement(const SubnormalSeries& s) {
  const Groupoid& g = s.groupoid;
  for (std::size_t i = 0; i < s.chain.size(); ++i) {
    const ElemSet& upper = s.chain[i];
    const bool last = i + 1 == s.chain.size();
    for (const auto& n : admissible_normals(g, upper)) {
      if (n == upper) continue;
      if (last) return true;
      const ElemSet& lower = s.chain[i + 1];
      if (n != lower && lower.subset_of(n) && admissible_step(g, n, lower)) return true;
    }
  }
  return false;
}

bool is_solvable_series(const SubnormalSeries& s, AbelianMode mode) {
  for (const auto& f : s.factors) {
    auto st = abelian_status(f);
    if (mode == AbelianMode::Isotropy ? !st.isotropy_abelian : !st.totally_abelian) return false;
  }
  return true;
}

bool is_nontrivial_factor(const Groupoid& factor) {
  return factor.identities().size() != factor.size();
}

SeriesEquivalence series_equivalent(const SubnormalSeries& s, const SubnormalSeries& t) {
  if (!(s.groupoid == t.groupoid))
    fail(ErrorKind::GroupoidMismatch, "series belong to different groupoids");
  std::vector<std::size_t> sf, tf;
  for (std::size_t i = 0; i < s.factors.size(); ++i)
    if (is_nontrivial_factor(s.factors[i])) sf.push_back(i);
  for (std::size_t j = 0; j < t.factors.size(); ++j)
    if (is_nontrivial_factor(t.factors[j])) tf.push_back(j);
  SeriesEquivalence eq{sf.size() == tf.size(), {}};
  if (!eq.equivalent) return eq;
  // Isomorphism is an equivalence relation, so greedy matching is complete.
  std::vector<bool> used(tf.size(), false);
  for (std::size_t i : sf) {
    bool found = false;
    for (std::size_t k = 0; k < tf.size() && !found; ++k) {
      if (used[k] || !find_isomorphism(s.factors[i], t.factors[tf[k]])) continue;
      used[k] = true;
      found = true;
      eq.matching.push_back({i, tf[k]});
    }
    if (!found) {
      eq.equivalent = false;
      eq.matching.clear();
      return eq;
    }
  }
  return eq;
}

namespace {

ElemSet prod(const Groupoid& g, const ElemSet& a, const ElemSet& b) {
  return set_product(g, a, b).hk;
}

void require_wide_subgroupoid(const Groupoid& g, const ElemSet& s, const char* name) {
  auto c = is_subgroupoid(g, s);
  if (!c.subgroupoid) fail(ErrorKind::NotASubgroupoid, std::string(name) + ": " + c.reason);
  if (!c.wide) fail(ErrorKind::NotWide, std::string(name) + " is not wide");
}

}  // namespace

Zassenhaus zassenhaus(const Groupoid& g, const ElemSet& a_star, const ElemSet& a,
                      const ElemSet& b_star, const ElemSet& b) {
  require_wide_subgroupoid(g, a_star, "A*");
  require_wide_subgroupoid(g, a, "A");
  require_wide_subgroupoid(g, b_star, "B*");
  require_wide_subgroupoid(g, b, "B");
  if (!a_star.subset_of(a) || !normality_in(g, a, a_star).normal)
    fail(ErrorKind::NotNormal, "A* is not normal in A");
  if (!b_star.subset_of(b) || !normality_in(g, b, b_star).normal)
    fail(ErrorKind::NotNormal, "B* is not normal in B");
  if (!all_loops(g, a_star) || !all_loops(g, b_star))
    fail(ErrorKind::QuotientUndefined, "A* and B* must lie in Iso");

  const ElemSet ab = a & b;
  const ElemSet upper_a = prod(g, a_star, ab);
  const ElemSet lower_a = prod(g, a_star, a & b_star);
  const ElemSet upper_b = prod(g, b_star, ab);
  const ElemSet lower_b = prod(g, b_star, a_star & b);
  const ElemSet middle = prod(g, a_star & b, a & b_star);
  Quotient lhs = factor_of(g, upper_a, lower_a);
  Quotient rhs = factor_of(g, upper_b, lower_b);
  Quotient common = factor_of(g, ab, middle);
  const Groupoid& ga = lhs.cosets.parent;
  const Groupoid& gb = rhs.cosets.parent;
  const Groupoid& gc = common.cosets.parent;

  // tau_a: (A∩B)/D -> lhs and tau_b: (A∩B)/D -> rhs, both [x] -> [x].
  auto through = [&](const Quotient& target, const Groupoid& tp) {
    std::vector<std::optional<Elem>> m(common.groupoid.size());
    for (Elem x = 0; x < gc.size(); ++x) {
      Elem c = common.cosets.class_of[x];
      Elem v = target.cosets.class_of[tp.at(gc.label(x))];
      if (m[c] && *m[c] != v) throw std::logic_error("tau not well defined");
      m[c] = v;
    }
    std::vector<Elem> out;
    for (auto& v : m) out.push_back(*v);
    Hom h = check_hom(common.groupoid, target.groupoid, std::move(out));
    if (!h.strong || !h.bijective()) throw std::logic_error("tau is not an isomorphism");
    return h;
  };
  Hom tau_a = through(lhs, ga);
  Hom tau_b = through(rhs, gb);
  std::vector<Elem> inv_a(lhs.groupoid.size());
  for (Elem c = 0; c < tau_a.map.size(); ++c) inv_a[tau_a.map[c]] = c;
  std::vector<Elem> m(lhs.groupoid.size());
  for (Elem c = 0; c < m.size(); ++c) m[c] = tau_b.map[inv_a[c]];
  Hom iso = check_hom(lhs.groupoid, rhs.groupoid, std::move(m));
  if (!iso.strong || !iso.bijective()) throw std::logic_error("Zassenhaus map fails");
  return {upper_a, lower_a, upper_b, lower_b, middle,
          std::move(lhs), std::move(rhs), std::move(common), std::move(iso)};
}

SchreierResult schreier_refine(const SubnormalSeries& s, const SubnormalSeries& t) {
  if (!(s.groupoid == t.groupoid))
    fail(ErrorKind::GroupoidMismatch, "series belong to different groupoids");
  const Groupoid& g = s.groupoid;
  auto extended = [&](std::vector<ElemSet> c) {
    if (c.back() != g.identity_set()) c.push_back(g.identity_set());
    return c;
  };
  const auto gs = extended(s.chain);
  const auto hs = extended(t.chain);
  const std::size_t n = gs.size() - 1, m = hs.size() - 1;

  std::vector<ElemSet> s_chain{gs[0]}, t_chain{hs[0]};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j <= m; ++j) s_chain.push_back(prod(g, gs[i + 1], gs[i] & hs[j]));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 1; i <= n; ++i) t_chain.push_back(prod(g, hs[j + 1], hs[j] & gs[i]));

  // Each factor pair is certified by the Zassenhaus isomorphism.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Zassenhaus z = zassenhaus(g, gs[i + 1], gs[i], hs[j + 1], hs[j]);
      if (z.upper_a != s_chain[i * m + j] || z.lower_a != s_chain[i * m + j + 1] ||
          z.upper_b != t_chain[j * n + i] || z.lower_b != t_chain[j * n + i + 1])
        throw std::logic_error("Schreier terms disagree with Zassenhaus terms");
    }

  SchreierResult r{validate_series(g, s_chain), validate_series(g, t_chain), {}};
  r.certificate = series_equivalent(r.s_refined, r.t_refined);
  return r;
}

JordanHolderReport jordan_holder_check(const Groupoid& g, std::size_t bound) {
  auto all = all_composition_series(g, bound);
  JordanHolderReport rep{true, all.size()};
  for (std::size_t i = 0; i < all.size() && rep.all_equivalent; ++i)
    for (std::size_t j = i + 1; j < all.size() && rep.all_equivalent; ++j)
      if (!series_equivalent(all[i], all[j]).equivalent) rep.all_equivalent = false;
  return rep;
}

}  // namespace grpd
