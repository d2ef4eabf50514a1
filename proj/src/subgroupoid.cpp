#include "grpd/subgroupoid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace grpd {

Subgroupoid::Subgroupoid(Groupoid parent, ElemSet members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  auto check = is_subgroupoid(parent_, members_);
  if (!check.subgroupoid) {
    std::string w;
    for (Elem e : check.witness) w += (w.empty() ? "" : ",") + parent_.label(e);
    fail(ErrorKind::NotASubgroupoid, check.reason, w);
  }
  wide_ = check.wide;
  normal_ = normality_in(parent_, parent_.all(), members_).normal;
}

std::vector<std::string> Subgroupoid::labels() const {
  std::vector<std::string> out;
  for (Elem e : members_.members()) out.push_back(parent_.label(e));
  return out;
}

ElemSet subset_of_labels(const Groupoid& g, const std::vector<std::string>& labels) {
  ElemSet s(g.size());
  for (const auto& l : labels) s.insert(g.at(l));
  return s;
}

// ---------------------------------------------------------------------------

Groupoid isotropy_group(const Groupoid& g, Elem e) {
  if (e >= g.size() || !g.is_identity(e))
    fail(ErrorKind::NotAnIdentity,
         "'" + (e < g.size() ? g.label(e) : std::string("?")) +
             "' is not an identity",
         e < g.size() ? g.label(e) : std::string());
  return restrict_to(g, ElemSet::of(g.size(), g.isotropy(e)));
}

ElemSet iso_set(const Groupoid& g) {
  ElemSet s(g.size());
  for (Elem a = 0; a < g.size(); ++a)
    if (g.is_loop(a)) s.insert(a);
  return s;
}

Subgroupoid iso_bundle(const Groupoid& g) { return Subgroupoid(g, iso_set(g)); }

namespace {

bool commutes_within(const Groupoid& g, const std::vector<Elem>& elems) {
  for (Elem a : elems)
    for (Elem b : elems)
      if (g.compose(a, b) != g.compose(b, a)) return false;
  return true;
}

}  // namespace

AbelianStatus abelian_status(const Groupoid& g) {
  bool iso_ab = true;
  for (Elem e : g.identities())
    if (!commutes_within(g, g.isotropy(e))) iso_ab = false;
  // Total sense, computed directly: gh = hg whenever either
  // side is defined, over the whole groupoid.
  bool total = true;
  for (Elem a = 0; a < g.size() && total; ++a)
    for (Elem b = 0; b < g.size() && total; ++b) {
      auto ab = g.compose(a, b), ba = g.compose(b, a);
      if ((ab || ba) && ab != ba) total = false;
    }
  for (Elem a = 0; a < g.size() && total; ++a)
    if (!g.is_loop(a)) total = false;
  return {total, iso_ab};
}

// ---------------------------------------------------------------------------

SubgroupoidCheck is_subgroupoid(const Groupoid& g, const ElemSet& s) {
  if (s.empty()) fail(ErrorKind::EmptySubset, "subset is empty");
  const auto elems = s.members();
  for (Elem a : elems)
    if (!s.contains(g.inverse(a)))
      return {false, false, {a},
              "missing inverse '" + g.label(g.inverse(a)) + "' of '" +
                  g.label(a) + "'"};
  for (Elem a : elems)
    for (Elem b : elems)
      if (auto ab = g.compose(a, b); ab && !s.contains(*ab))
        return {false, false, {a, b},
                "product of '" + g.label(a) + "' and '" + g.label(b) +
                    "' is '" + g.label(*ab) + "', outside the subset"};
  for (Elem e : g.identities())
    if (!s.contains(e)) return {true, false, {e}, "identity '" + g.label(e) + "' missing"};
  return {true, true, {}, {}};
}

bool is_subgroupoid_set(const Groupoid& g, const ElemSet& s) {
  return !s.empty() && is_subgroupoid(g, s).subgroupoid;
}

ElemSet closure(const Groupoid& g, const ElemSet& seed) {
  if (seed.empty()) fail(ErrorKind::EmptySubset, "seed is empty");
  ElemSet s(g.size());
  std::deque<Elem> work;
  auto add = [&](Elem e) {
    if (!s.contains(e)) {
      s.insert(e);
      work.push_back(e);
    }
  };
  for (Elem e : seed.members()) add(e);
  while (!work.empty()) {
    Elem x = work.front();
    work.pop_front();
    add(g.inverse(x));
    for (Elem y : s.members()) {
      if (auto xy = g.compose(x, y)) add(*xy);
      if (auto yx = g.compose(y, x)) add(*yx);
    }
  }
  return s;
}

Subgroupoid generated_subgroupoid(const Groupoid& g, const ElemSet& seed) {
  return Subgroupoid(g, closure(g, seed));
}

std::vector<ElemSet> subgroupoid_sets(const Groupoid& g, const ElemSet& within) {
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<ElemSet> found;
  std::deque<ElemSet> work;
  auto visit = [&](ElemSet s) {
    if (seen.insert(s).second) {
      found.push_back(s);
      work.push_back(std::move(s));
    }
  };
  const auto pool = within.members();
  for (Elem x : pool) visit(closure(g, ElemSet(g.size(), {x})));
  // Every subgroupoid is a join of cyclic closures, so joining found sets
  // with single elements reaches all of them.
  while (!work.empty()) {
    ElemSet s = work.front();
    work.pop_front();
    for (Elem x : pool) {
      if (s.contains(x)) continue;
      ElemSet t = s;
      t.insert(x);
      visit(closure(g, t));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Subgroupoid> enumerate_subgroupoids(const Groupoid& g,
                                                SubFilter filter,
                                                std::size_t bound) {
  if (g.size() > bound)
    fail(ErrorKind::TooLarge,
         "groupoid has " + std::to_string(g.size()) +
             " elements, enumeration bound is " + std::to_string(bound),
         std::to_string(bound));
  std::vector<Subgroupoid> out;
  for (auto& s : subgroupoid_sets(g, g.all())) {
    Subgroupoid h(g, std::move(s));
    if (filter == SubFilter::Wide && !h.wide()) continue;
    if (filter == SubFilter::Normal && !h.normal()) continue;
    out.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------------------

Elem loop_power(const Groupoid& g, Elem a, unsigned k) {
  if (!g.is_loop(a)) throw std::logic_error("power of a non-loop");
  if (k == 0) return g.source(a);
  Elem p = a;
  for (unsigned i = 1; i < k; ++i) p = g.mul(p, a);
  return p;
}

unsigned loop_order(const Groupoid& g, Elem a) {
  if (!g.is_loop(a)) return 0;
  Elem p = a;
  unsigned k = 1;
  while (!g.is_identity(p)) {
    p = g.mul(p, a);
    ++k;
  }
  return k;
}

Subgroupoid centralizer(const Groupoid& g, Elem a) {
  if (!g.is_loop(a))
    fail(ErrorKind::NotALoop, "'" + g.label(a) + "' is not a loop", g.label(a));
  ElemSet c(g.size());
  for (Elem x : g.isotropy(g.source(a)))
    if (g.mul(x, a) == g.mul(a, x)) c.insert(x);
  return Subgroupoid(g, c);
}

namespace {

void require_isotropy_abelian(const Groupoid& g) {
  if (!abelian_status(g).isotropy_abelian)
    fail(ErrorKind::NotAbelian, "some isotropy group is not abelian");
}

}  // namespace

Subgroupoid power_subgroupoid(const Groupoid& g, unsigned n) {
  if (n < 2) fail(ErrorKind::BadPosition, "exponent must be at least 2");
  require_isotropy_abelian(g);
  ElemSet s(g.size());
  for (Elem a = 0; a < g.size(); ++a)
    if (g.is_loop(a)) s.insert(loop_power(g, a, n));
  return Subgroupoid(g, s);
}

Subgroupoid torsion_subgroupoid(const Groupoid& g, std::optional<unsigned> n) {
  require_isotropy_abelian(g);
  ElemSet s(g.size());
  for (Elem a = 0; a < g.size(); ++a) {
    if (!g.is_loop(a)) continue;
    if (!n || (*n > 0 && g.is_identity(loop_power(g, a, *n)))) s.insert(a);
  }
  return Subgroupoid(g, s);
}

// ---------------------------------------------------------------------------

namespace {

ElemSet product_set(const Groupoid& g, const ElemSet& h, const ElemSet& k) {
  ElemSet out(g.size());
  const auto ks = k.members();
  for (Elem x : h.members())
    for (Elem y : ks)
      if (auto xy = g.compose(x, y)) out.insert(*xy);
  return out;
}

}  // namespace

SetProduct set_product(const Groupoid& g, const ElemSet& h, const ElemSet& k) {
  SetProduct p{product_set(g, h, k), product_set(g, k, h), false, false};
  p.commute = p.hk == p.kh;
  p.is_subgroupoid = is_subgroupoid_set(g, p.hk);
  return p;
}

ElemSet intersection(const ElemSet& a, const ElemSet& b) { return a & b; }

ElemSet conjugate_set(const Groupoid& g, Elem a, const ElemSet& h) {
  ElemSet out(g.size());
  const Elem r = g.target(a);
  const Elem ainv = g.inverse(a);
  for (Elem x : h.members())
    if (g.source(x) == r && g.target(x) == r)
      out.insert(g.mul(g.mul(ainv, x), a));
  return out;
}

NormalityReport normality_in(const Groupoid& g, const ElemSet& ambient,
                             const ElemSet& h) {
  NormalityReport rep{true, true, true, {}};
  const auto amb = ambient.members();

  for (Elem a : amb) {
    const Elem r = g.target(a);
    bool any = false;
    for (Elem x : h.members()) {
      if (g.source(x) != r || g.target(x) != r) continue;
      any = true;
      Elem y = g.mul(g.mul(g.inverse(a), x), a);
      if (!h.contains(y)) {
        rep.via_definition = false;
        rep.witness = {a, x};
        break;
      }
    }
    if (!rep.via_definition) break;
    if (!any) {
      rep.via_definition = false;
      rep.witness = {a};
      break;
    }
  }

  for (Elem e : amb)
    if (g.is_identity(e) && !h.contains(e)) rep.via_characterization = false;
  if (rep.via_characterization) {
    for (Elem a : amb) {
      ElemSet at_d(g.size());
      for (Elem x : h.members())
        if (g.source(x) == g.source(a) && g.target(x) == g.source(a))
          at_d.insert(x);
      if (conjugate_set(g, a, h) != at_d) {
        rep.via_characterization = false;
        break;
      }
    }
  }

  if (rep.via_definition != rep.via_characterization)
    throw std::logic_error("normality tests disagree");
  rep.normal = rep.via_definition;
  return rep;
}

NormalityReport is_normal(const Groupoid& g, const ElemSet& h) {
  auto check = is_subgroupoid(g, h);
  if (!check.subgroupoid) {
    std::string w;
    for (Elem e : check.witness) w += (w.empty() ? "" : ",") + g.label(e);
    fail(ErrorKind::NotASubgroupoid, check.reason, w);
  }
  return normality_in(g, g.all(), h);
}

bool quotient_admissible_in(const Groupoid& g, const ElemSet& ambient,
                            const ElemSet& n) {
  if (!n.subset_of(ambient) || !is_subgroupoid_set(g, n)) return false;
  for (Elem x : n.members())
    if (!g.is_loop(x)) return false;
  return normality_in(g, ambient, n).normal;
}

}  // namespace grpd
