#include "grpd/inverse_semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace grpd {

InverseSemigroupReport check_inverse_semigroup(std::size_t n,
                                               const std::vector<Elem>& table,
                                               const std::vector<Elem>& star) {
  InverseSemigroupReport rep;
  auto mul = [&](Elem s, Elem t) { return table[s * n + t]; };
  for (Elem s = 0; s < n && rep.associative; ++s)
    for (Elem t = 0; t < n && rep.associative; ++t) {
      const Elem st = mul(s, t);
      for (Elem u = 0; u < n; ++u)
        if (mul(st, u) != mul(s, mul(t, u))) {
          rep.associative = false;
          rep.witness = {s, t, u};
          break;
        }
    }
  if (!rep.associative) return rep;

  for (Elem s = 0; s < n; ++s) {
    const Elem x = star[s];
    if (mul(mul(s, x), s) != s || mul(mul(x, s), x) != x) {
      rep.star_identities = false;
      rep.witness = {s};
      return rep;
    }
  }
  for (Elem s = 0; s < n; ++s)
    for (Elem x = 0; x < n; ++x)
      if (x != star[s] && mul(mul(s, x), s) == s && mul(mul(x, s), x) == x) {
        rep.star_unique = false;
        rep.witness = {s, x};
        return rep;
      }
  std::vector<Elem> idem;
  for (Elem s = 0; s < n; ++s)
    if (mul(s, s) == s) idem.push_back(s);
  for (Elem e : idem)
    for (Elem f : idem)
      if (mul(e, f) != mul(f, e)) {
        rep.idempotents_commute = false;
        rep.witness = {e, f};
        return rep;
      }
  return rep;
}

FiniteInverseSemigroup::FiniteInverseSemigroup(std::vector<std::string> labels,
                                               std::vector<Elem> table,
                                               std::vector<Elem> star)
    : labels_(std::move(labels)), table_(std::move(table)), star_(std::move(star)) {
  const auto n = labels_.size();
  if (n == 0) fail(ErrorKind::EmptyStructure, "inverse semigroup is empty");
  for (Elem i = 0; i < n; ++i)
    if (!index_.emplace(labels_[i], i).second)
      fail(ErrorKind::DuplicateLabel, "duplicate label '" + labels_[i] + "'", labels_[i]);
  if (table_.size() != n * n || star_.size() != n)
    fail(ErrorKind::SchemaError, "table must be total and star defined everywhere");
  for (Elem x : table_)
    if (x >= n) fail(ErrorKind::SchemaError, "table entry out of range");
  for (Elem x : star_)
    if (x >= n) fail(ErrorKind::SchemaError, "star entry out of range");
  auto rep = check_inverse_semigroup(n, table_, star_);
  std::string w;
  for (Elem e : rep.witness) w += (w.empty() ? "" : ",") + labels_[e];
  if (!rep.associative) fail(ErrorKind::NotAssociative, "product is not associative", w);
  if (!rep.star_identities || !rep.star_unique)
    fail(ErrorKind::StarViolation,
         rep.star_identities ? "star is not the unique inverse" : "s s* s = s fails", w);
  if (!rep.idempotents_commute)
    fail(ErrorKind::NonCommutingIdempotents, "idempotents do not commute", w);
}

std::optional<Elem> FiniteInverseSemigroup::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem FiniteInverseSemigroup::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  fail(ErrorKind::UnknownLabel, "unknown label '" + std::string(label) + "'",
       std::string(label));
}

std::vector<Elem> FiniteInverseSemigroup::idempotents() const {
  std::vector<Elem> out;
  for (Elem s = 0; s < size(); ++s)
    if (is_idempotent(s)) out.push_back(s);
  return out;
}

std::optional<Elem> FiniteInverseSemigroup::unit() const {
  for (Elem u = 0; u < size(); ++u) {
    bool ok = true;
    for (Elem s = 0; s < size() && ok; ++s) ok = mul(u, s) == s && mul(s, u) == s;
    if (ok) return u;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ElemSet PartialBijection::domain() const {
  ElemSet s(universe());
  for (Elem x = 0; x < universe(); ++x)
    if (defined(x)) s.insert(x);
  return s;
}

ElemSet PartialBijection::range() const {
  ElemSet s(universe());
  for (int y : image)
    if (y >= 0) s.insert(static_cast<Elem>(y));
  return s;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection f{std::vector<int>(universe(), -1)};
  for (Elem x = 0; x < universe(); ++x)
    if (defined(x)) f.image[image[x]] = static_cast<int>(x);
  return f;
}

PartialBijection operator*(const PartialBijection& f, const PartialBijection& g) {
  PartialBijection h{std::vector<int>(g.universe(), -1)};
  for (Elem x = 0; x < g.universe(); ++x)
    if (g.defined(x)) h.image[x] = f.image[g.image[x]];
  return h;
}

PartialBijection PartialBijection::restrict(const ElemSet& s) const {
  PartialBijection f = *this;
  for (Elem x = 0; x < universe(); ++x)
    if (!s.contains(x)) f.image[x] = -1;
  return f;
}

bool PartialBijection::restriction_of(const PartialBijection& g) const {
  for (Elem x = 0; x < universe(); ++x)
    if (defined(x) && image[x] != g.image[x]) return false;
  return true;
}

PartialBijection PartialBijection::identity_on(const ElemSet& s) {
  PartialBijection f{std::vector<int>(s.universe(), -1)};
  for (Elem x : s.members()) f.image[x] = static_cast<int>(x);
  return f;
}

PartialBijection PartialBijection::empty(std::size_t n) {
  return PartialBijection{std::vector<int>(n, -1)};
}

std::string PartialBijection::to_string(const std::vector<std::string>& points) const {
  std::string out = "{";
  bool first = true;
  for (Elem x = 0; x < universe(); ++x) {
    if (!defined(x)) continue;
    if (!first) out += ",";
    first = false;
    out += points[x] + "->" + points[image[x]];
  }
  return out + "}";
}

std::vector<PartialBijection> all_partial_bijections(std::size_t n) {
  std::vector<ElemSet> domains;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ElemSet s(n);
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1u) s.insert(x);
    domains.push_back(s);
  }
  std::sort(domains.begin(), domains.end());
  std::vector<PartialBijection> out;
  for (const auto& d : domains) {
    const auto dom = d.members();
    PartialBijection f = PartialBijection::empty(n);
    std::vector<bool> used(n, false);
    std::function<void(std::size_t)> place = [&](std::size_t k) {
      if (k == dom.size()) {
        out.push_back(f);
        return;
      }
      for (Elem y = 0; y < n; ++y) {
        if (used[y]) continue;
        used[y] = true;
        f.image[dom[k]] = static_cast<int>(y);
        place(k + 1);
        f.image[dom[k]] = -1;
        used[y] = false;
      }
    };
    place(0);
  }
  return out;
}

Elem PartialBijectionMonoid::index_of(const PartialBijection& f) const {
  auto it = std::lower_bound(
      elements.begin(), elements.end(), f, [](const PartialBijection& a, const PartialBijection& b) {
        auto da = a.domain(), db = b.domain();
        if (da != db) return da < db;
        return a.image < b.image;
      });
  if (it == elements.end() || !(*it == f)) throw std::logic_error("partial bijection not found");
  return static_cast<Elem>(it - elements.begin());
}

PartialBijectionMonoid partial_bijection_monoid(const std::vector<std::string>& points) {
  if (points.empty()) fail(ErrorKind::EmptyStructure, "the point set is empty");
  if (points.size() > 5) fail(ErrorKind::TooLarge, "at most 5 points", "5");
  PartialBijectionMonoid m{points, all_partial_bijections(points.size()), {}};
  const auto n = static_cast<Elem>(m.elements.size());
  std::vector<std::string> labels;
  for (const auto& f : m.elements) labels.push_back(f.to_string(points));
  std::vector<Elem> table(n * n), star(n);
  for (Elem s = 0; s < n; ++s) {
    star[s] = m.index_of(m.elements[s].inverse());
    for (Elem t = 0; t < n; ++t) table[s * n + t] = m.index_of(m.elements[s] * m.elements[t]);
  }
  m.semigroup = FiniteInverseSemigroup(std::move(labels), std::move(table), std::move(star));
  return m;
}

Groupoid restricted_product_groupoid(const FiniteInverseSemigroup& s) {
  PartialTable t(s.labels());
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b)
      if (s.mul(s.star(a), a) == s.mul(b, s.star(b))) t.set(a, b, s.mul(a, b));
  return Groupoid(t);
}

// ---------------------------------------------------------------------------

namespace {

Elem unit_of(const Groupoid& group) { return group.identities().front(); }

std::uint32_t mask_of(const ElemSet& s) {
  std::uint32_t m = 0;
  for (Elem x : s.members()) m |= 1u << x;
  return m;
}

ElemSet translate(const Groupoid& group, Elem g, const ElemSet& b) {
  ElemSet out(group.size());
  for (Elem x : b.members()) out.insert(group.mul(g, x));
  return out;
}

}  // namespace

Elem ExelSemigroup::index_of(const ExelElement& x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x,
                             [](const ExelElement& p, const ExelElement& q) {
                               if (p.a != q.a) return p.a < q.a;
                               return p.g < q.g;
                             });
  if (it == elements.end() || !(*it == x)) throw std::logic_error("not an element of E(G)");
  return static_cast<Elem>(it - elements.begin());
}

Elem ExelSemigroup::generator(Elem h) const {
  return index_of({ElemSet(group.size(), {unit_of(group), h}), h});
}

ExelElement ExelSemigroup::mul(const ExelElement& x, const ExelElement& y) const {
  return {x.a | translate(group, x.g, y.a), group.mul(x.g, y.g)};
}

ExelElement ExelSemigroup::star(const ExelElement& x) const {
  const Elem gi = group.inverse(x.g);
  return {translate(group, gi, x.a), gi};
}

std::string ExelSemigroup::label(const ExelElement& x) const {
  std::string out = "({";
  bool first = true;
  for (Elem s : x.a.members()) {
    if (!first) out += ",";
    first = false;
    out += group.label(s);
  }
  return out + "}," + group.label(x.g) + ")";
}

ExelSemigroup exel_semigroup(const Groupoid& group) {
  if (!is_group(group)) fail(ErrorKind::NotAGroup, "E(G) needs a group");
  if (group.size() > kExelOrderBound)
    fail(ErrorKind::TooLarge, "E(G) is materialized only for groups of order at most 8",
         std::to_string(kExelOrderBound));
  const auto n = static_cast<Elem>(group.size());
  const Elem one = unit_of(group);
  std::vector<ExelElement> elems;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> one & 1u)) continue;
    ElemSet a(n);
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1u) a.insert(x);
    for (Elem g : a.members()) elems.push_back({a, g});
  }
  std::sort(elems.begin(), elems.end(), [](const ExelElement& p, const ExelElement& q) {
    if (p.a != q.a) return p.a < q.a;
    return p.g < q.g;
  });
  ExelSemigroup e{group, std::move(elems), {}};
  const auto m = static_cast<Elem>(e.elements.size());
  std::map<std::pair<std::uint32_t, Elem>, Elem> index;
  for (Elem i = 0; i < m; ++i) index[{mask_of(e.elements[i].a), e.elements[i].g}] = i;
  auto idx = [&](const ExelElement& x) { return index.at({mask_of(x.a), x.g}); };
  std::vector<std::string> labels;
  std::vector<Elem> table(m * m), star(m);
  for (Elem i = 0; i < m; ++i) {
    labels.push_back(e.label(e.elements[i]));
    star[i] = idx(e.star(e.elements[i]));
    for (Elem j = 0; j < m; ++j) table[i * m + j] = idx(e.mul(e.elements[i], e.elements[j]));
  }
  e.semigroup = FiniteInverseSemigroup(std::move(labels), std::move(table), std::move(star));
  return e;
}

std::vector<ExelToken> exel_rewrite(const Groupoid& group, const std::vector<Elem>& word) {
  if (word.empty()) fail(ErrorKind::EmptyWord, "the word is empty");
  if (!is_group(group)) fail(ErrorKind::NotAGroup, "E(G) needs a group");
  const Elem one = unit_of(group);
  std::vector<ExelToken> w;
  for (Elem g : word) {
    if (g >= group.size()) fail(ErrorKind::UnknownLabel, "generator outside the group");
    w.push_back({ExelToken::Gen, g});
  }
  auto step = [&]() -> bool {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const ExelToken x = w[i];
      if (i + 1 < w.size()) {
        const ExelToken y = w[i + 1];
        // [t][h] = γ_t [th]
        if (x.kind == ExelToken::Gen && y.kind == ExelToken::Gen) {
          w[i] = {ExelToken::Gamma, x.g};
          w[i + 1] = {ExelToken::Gen, group.mul(x.g, y.g)};
          return true;
        }
        // [g] γ_h = γ_{gh} [g]
        if (x.kind == ExelToken::Gen && y.kind == ExelToken::Gamma) {
          w[i] = {ExelToken::Gamma, group.mul(x.g, y.g)};
          w[i + 1] = x;
          return true;
        }
      }
      if (x.kind != ExelToken::Gamma) continue;
      // γ_1 = [1], a left unit for what follows.
      if (x.g == one) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
      if (i + 1 < w.size() && w[i + 1].kind == ExelToken::Gamma) {
        const Elem b = w[i + 1].g;
        if (b == x.g) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i + 1));
          return true;
        }
        if (b < x.g) {
          std::swap(w[i], w[i + 1]);
          return true;
        }
      }
      // γ_g ... [g] = ... [g] once every token in between is idempotent.
      const ExelToken& last = w.back();
      if (last.kind == ExelToken::Gen && last.g == x.g &&
          std::all_of(w.begin() + static_cast<std::ptrdiff_t>(i + 1), w.end() - 1,
                      [](const ExelToken& t) { return t.kind == ExelToken::Gamma; })) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
    }
    return false;
  };
  while (step()) {
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].kind != ExelToken::Gamma || (i > 0 && !(w[i - 1].g < w[i].g)))
      throw std::logic_error("rewriting stopped outside normal form");
  if (w.back().kind != ExelToken::Gen) throw std::logic_error("normal form must end in a generator");
  return w;
}

ExelElement exel_normal_form(const Groupoid& group, const std::vector<Elem>& word) {
  auto w = exel_rewrite(group, word);
  ExelElement x{ElemSet(group.size(), {unit_of(group)}), w.back().g};
  for (const auto& t : w) x.a.insert(t.g);
  return x;
}

ExelElement exel_fold(const ExelSemigroup& e, const std::vector<Elem>& word) {
  if (word.empty()) fail(ErrorKind::EmptyWord, "the word is empty");
  ExelElement x = e.elements[e.generator(word[0])];
  for (std::size_t i = 1; i < word.size(); ++i) x = e.mul(x, e.elements[e.generator(word[i])]);
  return x;
}

namespace {

void require_same_group(const ExelSemigroup& e, const ExelElement& x) {
  if (x.a.universe() != e.group.size() || x.g >= e.group.size())
    fail(ErrorKind::GroupMismatch, "element belongs to a different group");
}

}  // namespace

Composability exel_composability(const ExelSemigroup& e, const ExelElement& alpha,
                                 const ExelElement& beta) {
  require_same_group(e, alpha);
  require_same_group(e, beta);
  const auto& s = e.semigroup;
  const Elem a = e.index_of(alpha), b = e.index_of(beta);
  Composability c;
  c.by_products = s.mul(a, s.star(a)) == s.mul(s.star(b), b);
  // αα* = (A, 1) and β*β = (h^-1 B, 1).
  c.by_sets = alpha.a == translate(e.group, e.group.inverse(beta.g), beta.a);
  if (c.by_products != c.by_sets) throw std::logic_error("composability routes disagree");
  return c;
}

bool exel_literal_criterion(const ExelSemigroup& e, const ExelElement& alpha,
                            const ExelElement& beta) {
  require_same_group(e, alpha);
  require_same_group(e, beta);
  const Elem one = unit_of(e.group);
  auto side = [&](const ExelElement& x, Elem extra) {
    ElemSet s = x.a;
    s.erase(one);
    s.erase(x.g);
    s.insert(extra);
    return s;
  };
  return side(alpha, alpha.g) == side(beta, e.group.inverse(beta.g));
}

}  // namespace grpd
