#include "grpd/morphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "grpd/constructions.hpp"

namespace grpd {

namespace {

std::string join_labels(const Groupoid& g, const std::vector<Elem>& elems) {
  std::string out;
  for (Elem e : elems) out += (out.empty() ? "" : ",") + g.label(e);
  return out;
}

[[noreturn]] void fail_not_subgroupoid(const Groupoid& g, const SubgroupoidCheck& c) {
  fail(ErrorKind::NotASubgroupoid, c.reason, join_labels(g, c.witness));
}

void require_subgroupoid(const Groupoid& g, const ElemSet& s) {
  auto c = is_subgroupoid(g, s);
  if (!c.subgroupoid) fail_not_subgroupoid(g, c);
}

void require_normal(const Groupoid& g, const ElemSet& n) {
  auto rep = is_normal(g, n);
  if (!rep.normal)
    fail(ErrorKind::NotNormal, "subgroupoid is not normal",
         join_labels(g, rep.witness));
}

}  // namespace

Hom check_hom(const Groupoid& domain, const Groupoid& codomain,
              std::vector<Elem> map) {
  if (map.size() != domain.size())
    fail(ErrorKind::NotAHomomorphism, "map is not total on the domain");
  for (Elem x : map)
    if (x >= codomain.size())
      fail(ErrorKind::NotAHomomorphism, "map leaves the codomain");

  Hom h{domain, codomain, std::move(map)};
  h.strong = true;
  for (Elem x = 0; x < domain.size(); ++x)
    for (Elem y = 0; y < domain.size(); ++y) {
      auto xy = domain.compose(x, y);
      auto img = codomain.compose(h.map[x], h.map[y]);
      if (xy && (!img || *img != h.map[*xy]))
        fail(ErrorKind::NotAHomomorphism,
             "product of '" + domain.label(x) + "' and '" + domain.label(y) +
                 "' is not preserved",
             domain.label(x) + "," + domain.label(y));
      if (!xy && img) h.strong = false;
    }
  for (Elem a = 0; a < domain.size(); ++a) {
    const Elem fa = h.map[a];
    if (h.map[domain.source(a)] != codomain.source(fa) ||
        h.map[domain.target(a)] != codomain.target(fa) ||
        h.map[domain.inverse(a)] != codomain.inverse(fa))
      throw std::logic_error("hom does not commute with d, r or inverse");
  }
  std::vector<bool> hit(codomain.size(), false);
  h.injective = true;
  for (Elem x : h.map) {
    if (hit[x]) h.injective = false;
    hit[x] = true;
  }
  h.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return h;
}

Hom check_hom_labels(const Groupoid& domain, const Groupoid& codomain,
                     const std::vector<std::pair<std::string, std::string>>& map) {
  std::vector<std::optional<Elem>> m(domain.size());
  for (const auto& [from, to] : map) {
    Elem a = domain.at(from);
    Elem b = codomain.at(to);
    if (m[a] && *m[a] != b)
      fail(ErrorKind::SchemaError, "element '" + from + "' mapped twice", from);
    m[a] = b;
  }
  std::vector<Elem> out;
  for (Elem a = 0; a < domain.size(); ++a) {
    if (!m[a])
      fail(ErrorKind::SchemaError, "element '" + domain.label(a) + "' has no image",
           domain.label(a));
    out.push_back(*m[a]);
  }
  return check_hom(domain, codomain, std::move(out));
}

Hom identity_hom(const Groupoid& g) {
  std::vector<Elem> m(g.size());
  for (Elem a = 0; a < g.size(); ++a) m[a] = a;
  return check_hom(g, g, std::move(m));
}

Hom compose(const Hom& psi, const Hom& phi) {
  if (!(phi.codomain == psi.domain))
    fail(ErrorKind::GroupoidMismatch, "homomorphisms do not compose");
  std::vector<Elem> m(phi.domain.size());
  for (Elem a = 0; a < m.size(); ++a) m[a] = psi.map[phi.map[a]];
  return check_hom(phi.domain, psi.codomain, std::move(m));
}

Subgroupoid kernel(const Hom& phi) {
  ElemSet k(phi.domain.size());
  for (Elem a = 0; a < phi.domain.size(); ++a)
    if (phi.codomain.is_identity(phi.map[a])) k.insert(a);
  return Subgroupoid(phi.domain, k);
}

ImageResult image_of(const Hom& phi, const ElemSet& h) {
  ElemSet s(phi.codomain.size());
  for (Elem a : h.members()) s.insert(phi.map[a]);
  return {s, is_subgroupoid_set(phi.codomain, s)};
}

ImageResult image(const Hom& phi) { return image_of(phi, phi.domain.all()); }

Subgroupoid preimage(const Hom& phi, const ElemSet& h) {
  require_subgroupoid(phi.codomain, h);
  ElemSet s(phi.domain.size());
  for (Elem a = 0; a < phi.domain.size(); ++a)
    if (h.contains(phi.map[a])) s.insert(a);
  return Subgroupoid(phi.domain, s);
}

Hom anchor_map(const Groupoid& g) {
  std::vector<std::string> points;
  std::vector<Elem> point_of(g.size(), 0);
  for (Elem e : g.identities()) {
    point_of[e] = static_cast<Elem>(points.size());
    points.push_back(g.label(e));
  }
  Groupoid pairs = pair_groupoid(points);
  const auto n = static_cast<Elem>(points.size());
  std::vector<Elem> m(g.size());
  for (Elem a = 0; a < g.size(); ++a)
    m[a] = point_of[g.source(a)] * n + point_of[g.target(a)];
  return check_hom(g, pairs, std::move(m));
}

Hom theta_map(const Groupoid& g) {
  Groupoid iso = restrict_to(g, iso_set(g));
  std::vector<Elem> m(iso.size());
  for (Elem a = 0; a < iso.size(); ++a) m[a] = iso.source(a);
  return check_hom(iso, iso, std::move(m));
}

// ---------------------------------------------------------------------------

CosetTable cosets(const Groupoid& g, const ElemSet& h) {
  auto c = is_subgroupoid(g, h);
  if (!c.subgroupoid) fail_not_subgroupoid(g, c);
  if (!c.wide)
    fail(ErrorKind::NotWide, "cosets need a wide subgroupoid",
         join_labels(g, c.witness));
  CosetTable t{g, h, {}, {}, std::vector<Elem>(g.size(), 0)};
  std::vector<bool> done(g.size(), false);
  for (Elem a = 0; a < g.size(); ++a) {
    if (done[a]) continue;
    ElemSet cls(g.size());
    for (Elem x : h.members())
      if (auto ax = g.compose(a, x)) cls.insert(*ax);
    for (Elem b : cls.members()) {
      if (done[b]) throw std::logic_error("cosets overlap");
      done[b] = true;
      t.class_of[b] = static_cast<Elem>(t.classes.size());
    }
    t.representative.push_back(cls.first());
    t.classes.push_back(std::move(cls));
  }
  // Congruence check: g ≡ l iff l^-1 g exists and lies in H.
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = 0; b < g.size(); ++b) {
      auto ba = g.compose(g.inverse(b), a);
      bool related = ba && h.contains(*ba);
      if (related != (t.class_of[a] == t.class_of[b]))
        throw std::logic_error("cosets disagree with the congruence");
    }
  return t;
}

Quotient quotient(const Groupoid& g, const ElemSet& n) {
  require_subgroupoid(g, n);
  require_normal(g, n);
  CosetTable t = cosets(g, n);
  const auto k = static_cast<Elem>(t.classes.size());

  // For each class pair, every representative choice must agree on whether
  // the product exists and on its class.
  std::vector<std::optional<Elem>> cell(k * k);
  std::vector<bool> seen(k * k, false);
  std::vector<std::pair<Elem, Elem>> first_pair(k * k);
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = 0; b < g.size(); ++b) {
      const Elem ca = t.class_of[a], cb = t.class_of[b];
      const auto idx = ca * k + cb;
      auto ab = g.compose(a, b);
      std::optional<Elem> val;
      if (ab) val = t.class_of[*ab];
      if (!seen[idx]) {
        seen[idx] = true;
        cell[idx] = val;
        first_pair[idx] = {a, b};
      } else if (cell[idx] != val) {
        auto [a0, b0] = first_pair[idx];
        fail(ErrorKind::QuotientUndefined,
             "coset product depends on representatives: (" + g.label(a0) +
                 ", " + g.label(b0) + ") and (" + g.label(a) + ", " +
                 g.label(b) + ")",
             g.label(a0) + "," + g.label(b0) + ";" + g.label(a) + "," +
                 g.label(b));
      }
    }

  std::vector<std::string> labels;
  for (Elem c = 0; c < k; ++c) labels.push_back("[" + g.label(t.representative[c]) + "]");
  PartialTable table(std::move(labels));
  for (Elem c = 0; c < k; ++c)
    for (Elem d = 0; d < k; ++d) table.set(c, d, cell[c * k + d]);
  Groupoid q(table);
  Hom j = check_hom(g, q, t.class_of);
  if (!j.strong || !j.surjective) throw std::logic_error("projection not strong onto");
  if (kernel(j).members() != n) throw std::logic_error("projection kernel differs");
  return {q, std::move(t), std::move(j)};
}

FirstIso first_iso(const Hom& phi) {
  if (!phi.strong) fail(ErrorKind::NotStrong, "homomorphism is not strong");
  if (!phi.surjective) fail(ErrorKind::NotSurjective, "homomorphism is not surjective");
  Quotient q = quotient(phi.domain, kernel(phi).members());
  std::vector<Elem> m(q.groupoid.size());
  for (Elem c = 0; c < m.size(); ++c) m[c] = phi.map[q.cosets.representative[c]];
  for (Elem a = 0; a < phi.domain.size(); ++a)
    if (m[q.cosets.class_of[a]] != phi.map[a])
      throw std::logic_error("induced map not constant on cosets");
  Hom iso = check_hom(q.groupoid, phi.codomain, std::move(m));
  if (!iso.strong || !iso.bijective()) throw std::logic_error("induced map not an isomorphism");
  return {std::move(q), std::move(iso)};
}

namespace {

void require_admissible(const Groupoid& g, const ElemSet& n) {
  for (Elem x : n.members())
    if (!g.is_loop(x))
      fail(ErrorKind::QuotientUndefined,
           "'" + g.label(x) + "' is not a loop, so cosets do not form a groupoid",
           g.label(x));
}

/// Hom between two quotients induced by matching representatives by label.
/// `to_class` maps an element label of the first parent to a class of the
/// second quotient.
template <class F>
Hom induced(const Quotient& from, const Groupoid& to, F&& to_class) {
  const Groupoid& p = from.cosets.parent;
  std::vector<std::optional<Elem>> m(from.groupoid.size());
  for (Elem a = 0; a < p.size(); ++a) {
    Elem c = from.cosets.class_of[a];
    Elem v = to_class(a);
    if (m[c] && *m[c] != v) throw std::logic_error("induced map not well defined");
    m[c] = v;
  }
  std::vector<Elem> out;
  for (auto& v : m) out.push_back(*v);
  return check_hom(from.groupoid, to, std::move(out));
}

}  // namespace

SecondIso second_iso(const Groupoid& g, const ElemSet& m, const ElemSet& n) {
  auto cm = is_subgroupoid(g, m);
  if (!cm.subgroupoid) fail_not_subgroupoid(g, cm);
  if (!cm.wide) fail(ErrorKind::NotWide, "M is not wide", join_labels(g, cm.witness));
  require_subgroupoid(g, n);
  require_normal(g, n);
  require_admissible(g, n);

  SetProduct mn = set_product(g, m, n);
  if (!mn.is_subgroupoid) throw std::logic_error("MN is not a subgroupoid");
  Groupoid gm = restrict_to(g, m);
  Groupoid gmn = restrict_to(g, mn.hk);
  Quotient lhs = quotient(gm, g.translate_to(m & n, gm));
  Quotient rhs = quotient(gmn, g.translate_to(n, gmn));
  Hom iso = induced(lhs, rhs.groupoid, [&](Elem a) {
    return rhs.cosets.class_of[gmn.at(gm.label(a))];
  });
  if (!iso.strong || !iso.bijective()) throw std::logic_error("second isomorphism fails");
  return {mn.hk, std::move(lhs), std::move(rhs), std::move(iso)};
}

ThirdIso third_iso(const Groupoid& g, const ElemSet& h, const ElemSet& k) {
  require_subgroupoid(g, h);
  require_subgroupoid(g, k);
  require_normal(g, h);
  require_normal(g, k);
  if (!k.subset_of(h)) fail(ErrorKind::NotNested, "K is not contained in H");
  require_admissible(g, h);

  Quotient gk = quotient(g, k);
  ElemSet hk(gk.groupoid.size());
  for (Elem x : h.members()) hk.insert(gk.cosets.class_of[x]);
  Quotient outer = quotient(gk.groupoid, hk);
  Quotient gh = quotient(g, h);
  std::vector<std::optional<Elem>> m(outer.groupoid.size());
  for (Elem a = 0; a < g.size(); ++a) {
    Elem c = outer.cosets.class_of[gk.cosets.class_of[a]];
    Elem v = gh.cosets.class_of[a];
    if (m[c] && *m[c] != v) throw std::logic_error("third isomorphism map not well defined");
    m[c] = v;
  }
  std::vector<Elem> out;
  for (auto& v : m) out.push_back(*v);
  Hom iso = check_hom(outer.groupoid, gh.groupoid, std::move(out));
  if (!iso.strong || !iso.bijective()) throw std::logic_error("third isomorphism fails");
  return {std::move(gk), std::move(hk), std::move(outer), std::move(gh), std::move(iso)};
}

Correspondence correspondence(const Hom& phi, std::size_t bound) {
  if (!phi.strong) fail(ErrorKind::NotStrong, "homomorphism is not strong");
  if (phi.domain.size() > bound)
    fail(ErrorKind::TooLarge, "domain exceeds enumeration bound", std::to_string(bound));
  const ElemSet ker = kernel(phi).members();
  const ImageResult im = image(phi);
  if (!im.is_subgroupoid) throw std::logic_error("image of a strong hom is not a subgroupoid");

  Correspondence c;
  for (auto& s : subgroupoid_sets(phi.domain, phi.domain.all()))
    if (ker.subset_of(s)) c.domain_side.push_back(std::move(s));
  ElemSet im_ids(phi.codomain.size());
  for (Elem x : im.set.members())
    if (phi.codomain.is_identity(x)) im_ids.insert(x);
  for (auto& s : subgroupoid_sets(phi.codomain, im.set))
    if (im_ids.subset_of(s)) c.image_side.push_back(std::move(s));

  c.bijective = c.domain_side.size() == c.image_side.size();
  c.preserves_normality = true;
  std::vector<bool> hit(c.image_side.size(), false);
  for (const auto& h : c.domain_side) {
    ElemSet a = image_of(phi, h).set;
    auto it = std::find(c.image_side.begin(), c.image_side.end(), a);
    if (it == c.image_side.end()) {
      c.bijective = false;
      c.alpha.push_back(c.image_side.size());
      continue;
    }
    auto idx = static_cast<std::size_t>(it - c.image_side.begin());
    c.alpha.push_back(idx);
    if (hit[idx]) c.bijective = false;
    hit[idx] = true;
    if (preimage(phi, a).members() != h) c.bijective = false;
    bool n1 = normality_in(phi.domain, phi.domain.all(), h).normal;
    bool n2 = normality_in(phi.codomain, im.set, a).normal;
    if (n1 != n2) c.preserves_normality = false;
  }
  for (const auto& hp : c.image_side)
    if (image_of(phi, preimage(phi, hp).members()).set != hp) c.bijective = false;
  return c;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

struct Invariant {
  bool identity;
  bool loop;
  unsigned order;
  std::size_t isotropy_size;
  std::size_t out_degree;  // elements sharing the source
  std::size_t in_degree;   // elements sharing the target
  auto operator<=>(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const Groupoid& g) {
  std::vector<std::size_t> iso_size(g.size(), 0), out(g.size(), 0), in(g.size(), 0);
  for (Elem a = 0; a < g.size(); ++a) {
    if (g.is_loop(a)) ++iso_size[g.source(a)];
    ++out[g.source(a)];
    ++in[g.target(a)];
  }
  std::vector<Invariant> inv;
  for (Elem a = 0; a < g.size(); ++a)
    inv.push_back({g.is_identity(a), g.is_loop(a), loop_order(g, a),
                   iso_size[g.source(a)], out[g.source(a)], in[g.target(a)]});
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const Groupoid& a, const Groupoid& b)
      : a_(a), b_(b), ia_(invariants(a)), ib_(invariants(b)),
        fwd_(a.size(), -1), bwd_(b.size(), -1) {
    for (Elem e : a.identities()) order_.push_back(e);
    for (Elem x = 0; x < a.size(); ++x)
      if (!a.is_identity(x)) order_.push_back(x);
  }

  std::optional<std::vector<Elem>> run() {
    if (!search(0)) return std::nullopt;
    std::vector<Elem> m;
    for (auto v : fwd_) m.push_back(static_cast<Elem>(v));
    return m;
  }

 private:
  bool assign(Elem x, Elem y) {
    std::vector<std::pair<Elem, Elem>> queue{{x, y}};
    while (!queue.empty()) {
      auto [p, q] = queue.back();
      queue.pop_back();
      if (fwd_[p] == static_cast<std::int64_t>(q)) continue;
      if (fwd_[p] != -1 || bwd_[q] != -1 || ia_[p] != ib_[q]) return false;
      fwd_[p] = q;
      bwd_[q] = p;
      trail_.push_back(p);
      queue.push_back({a_.inverse(p), b_.inverse(q)});
      queue.push_back({a_.source(p), b_.source(q)});
      queue.push_back({a_.target(p), b_.target(q)});
      for (Elem u : trail_) {
        const Elem v = static_cast<Elem>(fwd_[u]);
        for (auto [l, r, lb, rb] : {std::tuple{p, u, q, v}, std::tuple{u, p, v, q}}) {
          auto ab = a_.compose(l, r);
          auto bb = b_.compose(lb, rb);
          if (ab.has_value() != bb.has_value()) return false;
          if (ab) queue.push_back({*ab, *bb});
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Elem p = trail_.back();
      trail_.pop_back();
      bwd_[static_cast<Elem>(fwd_[p])] = -1;
      fwd_[p] = -1;
    }
  }

  bool search(std::size_t pos) {
    while (pos < order_.size() && fwd_[order_[pos]] != -1) ++pos;
    if (pos == order_.size()) return true;
    const Elem x = order_[pos];
    for (Elem y = 0; y < b_.size(); ++y) {
      if (bwd_[y] != -1 || ia_[x] != ib_[y]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, y) && search(pos + 1)) return true;
      undo(mark);
    }
    return false;
  }

  const Groupoid& a_;
  const Groupoid& b_;
  std::vector<Invariant> ia_, ib_;
  std::vector<std::int64_t> fwd_, bwd_;
  std::vector<Elem> order_;
  std::vector<Elem> trail_;
};

}  // namespace

std::optional<Hom> find_isomorphism(const Groupoid& a, const Groupoid& b) {
  if (a.size() > kIsomorphismBound || b.size() > kIsomorphismBound)
    fail(ErrorKind::TooLarge, "isomorphism search bound exceeded",
         std::to_string(kIsomorphismBound));
  if (a.size() != b.size() || a.identities().size() != b.identities().size())
    return std::nullopt;
  auto ia = invariants(a), ib = invariants(b);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return std::nullopt;
  auto m = IsoSearch(a, b).run();
  if (!m) return std::nullopt;
  Hom h = check_hom(a, b, std::move(*m));
  if (!h.strong || !h.bijective()) throw std::logic_error("isomorphism search returned a non-isomorphism");
  return h;
}

}  // namespace grpd
