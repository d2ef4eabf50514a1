#include "grpd/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace grpd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::ConflictingProduct: return "ConflictingProduct";
    case ErrorKind::EmptyStructure: return "EmptyStructure";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAnIdentity: return "NotAnIdentity";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::NotASubgroupoid: return "NotASubgroupoid";
    case ErrorKind::NotWide: return "NotWide";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::QuotientUndefined: return "QuotientUndefined";
    case ErrorKind::NotALoop: return "NotALoop";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotStrong: return "NotStrong";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotNormalAtStep: return "NotNormalAtStep";
    case ErrorKind::BadPosition: return "BadPosition";
    case ErrorKind::GroupoidMismatch: return "GroupoidMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::StarViolation: return "StarViolation";
    case ErrorKind::NonCommutingIdempotents: return "NonCommutingIdempotents";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::Associativity: return "associativity";
    case Axiom::Composability: return "composability";
    case Axiom::UniqueIdentities: return "unique-identities";
    case Axiom::Inverses: return "inverses";
    case Axiom::Involution: return "involution";
    case Axiom::AssociativePairs: return "associative-pairs";
    case Axiom::LeftCancellation: return "left-cancellation";
    case Axiom::RightCancellation: return "right-cancellation";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// PartialTable

PartialTable::PartialTable(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      cells_(labels_.size() * labels_.size(), -1) {
  if (labels_.empty())
    fail(ErrorKind::EmptyStructure, "a structure needs at least one element");
  for (Elem i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty())
      fail(ErrorKind::SchemaError, "element labels must be non-empty");
    if (!index_.emplace(labels_[i], i).second)
      fail(ErrorKind::DuplicateLabel, "duplicate label '" + labels_[i] + "'",
           labels_[i]);
  }
}

PartialTable PartialTable::from_triples(std::vector<std::string> labels,
                                        const std::vector<Triple>& triples) {
  PartialTable t(std::move(labels));
  for (const auto& tr : triples) {
    Elem g = t.at(tr.left), h = t.at(tr.right), gh = t.at(tr.product);
    auto old = t.product(g, h);
    if (old && *old != gh)
      fail(ErrorKind::ConflictingProduct,
           "conflicting products for (" + tr.left + ", " + tr.right + "): '" +
               t.label(*old) + "' and '" + tr.product + "'",
           tr.left + "," + tr.right);
    t.set(g, h, gh);
  }
  return t;
}

std::optional<Elem> PartialTable::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem PartialTable::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  fail(ErrorKind::UnknownLabel, "unknown label '" + std::string(label) + "'",
       std::string(label));
}

// ---------------------------------------------------------------------------
// Axiom systems

namespace {

ElemSet intrinsic_identities(const PartialTable& t) {
  const auto n = static_cast<Elem>(t.size());
  ElemSet out(n);
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem g = 0; g < n && ok; ++g) {
      if (auto eg = t.product(e, g); eg && *eg != g) ok = false;
      if (auto ge = t.product(g, e); ge && *ge != g) ok = false;
    }
    if (ok) out.insert(e);
  }
  return out;
}

bool defined(std::optional<Elem> v) { return v.has_value(); }

AxiomVerdict verdict(Axiom a) {
  AxiomVerdict v;
  v.axiom = a;
  return v;
}

/// Triple-product definedness, left-nested and right-nested.
std::optional<Elem> left_nested(const PartialTable& t, Elem g, Elem h,
                                Elem l) {
  auto gh = t.product(g, h);
  return gh ? t.product(*gh, l) : std::nullopt;
}
std::optional<Elem> right_nested(const PartialTable& t, Elem g, Elem h,
                                 Elem l) {
  auto hl = t.product(h, l);
  return hl ? t.product(g, *hl) : std::nullopt;
}

}  // namespace

std::array<AxiomVerdict, 4> check_identity_axioms(const PartialTable& t) {
  const auto n = static_cast<Elem>(t.size());
  std::array<AxiomVerdict, 4> v{verdict(Axiom::Associativity),
                                verdict(Axiom::Composability),
                                verdict(Axiom::UniqueIdentities),
                                verdict(Axiom::Inverses)};
  auto record = [](AxiomVerdict& verdict, std::vector<Elem> witness) {
    if (verdict.holds) {
      verdict.holds = false;
      verdict.counterexample = std::move(witness);
    }
  };

  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      for (Elem l = 0; l < n; ++l) {
        auto right = right_nested(t, g, h, l);
        auto left = left_nested(t, g, h, l);
        if (defined(right) != defined(left) || (right && *right != *left))
          record(v[0], {g, h, l});
        bool pairs = defined(t.product(g, h)) && defined(t.product(h, l));
        if (defined(right) != pairs) record(v[1], {g, h, l});
      }

  const ElemSet ids = intrinsic_identities(t);
  std::vector<std::optional<Elem>> src(n), tgt(n);
  for (Elem g = 0; g < n; ++g) {
    std::vector<Elem> right_ids, left_ids;
    for (Elem e : ids.members()) {
      if (t.product(g, e)) right_ids.push_back(e);
      if (t.product(e, g)) left_ids.push_back(e);
    }
    if (right_ids.size() == 1) src[g] = right_ids[0];
    if (left_ids.size() == 1) tgt[g] = left_ids[0];
    if (right_ids.size() != 1) {
      std::vector<Elem> w{g};
      for (std::size_t k = 0; k < std::min<std::size_t>(2, right_ids.size()); ++k)
        w.push_back(right_ids[k]);
      record(v[2], std::move(w));
    } else if (left_ids.size() != 1) {
      std::vector<Elem> w{g};
      for (std::size_t k = 0; k < std::min<std::size_t>(2, left_ids.size()); ++k)
        w.push_back(left_ids[k]);
      record(v[2], std::move(w));
    }
  }

  for (Elem g = 0; g < n; ++g) {
    bool found = false;
    if (src[g] && tgt[g]) {
      for (Elem x = 0; x < n && !found; ++x) {
        auto xg = t.product(x, g), gx = t.product(g, x);
        found = xg && gx && *xg == *src[g] && *gx == *tgt[g];
      }
    }
    if (!found) record(v[3], {g});
  }
  return v;
}

namespace {

/// Candidates x for g^-1 under the left and right cancellation laws.
struct InverseCandidates {
  std::vector<std::vector<Elem>> left;   // x(gh) = h for all composable h
  std::vector<std::vector<Elem>> right;  // (lg)x = l for all composable l
};

InverseCandidates inverse_candidates(const PartialTable& t) {
  const auto n = static_cast<Elem>(t.size());
  InverseCandidates c{std::vector<std::vector<Elem>>(n),
                      std::vector<std::vector<Elem>>(n)};
  for (Elem g = 0; g < n; ++g) {
    for (Elem x = 0; x < n; ++x) {
      if (t.product(x, g)) {
        bool ok = true;
        for (Elem h = 0; h < n && ok; ++h) {
          auto gh = t.product(g, h);
          if (!gh) continue;
          auto back = t.product(x, *gh);
          ok = back && *back == h;
        }
        if (ok) c.left[g].push_back(x);
      }
      if (t.product(g, x)) {
        bool ok = true;
        for (Elem l = 0; l < n && ok; ++l) {
          auto lg = t.product(l, g);
          if (!lg) continue;
          auto back = t.product(*lg, x);
          ok = back && *back == l;
        }
        if (ok) c.right[g].push_back(x);
      }
    }
  }
  return c;
}

/// Finds an involution inv with inv(g) in allowed[g] for all g, where
/// allowed is symmetric. Backtracking; the tables here are tiny.
bool find_involution(const std::vector<std::vector<Elem>>& allowed,
                     std::vector<std::int64_t>& inv) {
  auto it = std::find(inv.begin(), inv.end(), -1);
  if (it == inv.end()) return true;
  const auto g = static_cast<Elem>(it - inv.begin());
  for (Elem x : allowed[g]) {
    if (inv[x] != -1) continue;
    inv[g] = x;
    inv[x] = g;
    if (find_involution(allowed, inv)) return true;
    inv[g] = -1;
    inv[x] = -1;
  }
  return false;
}

}  // namespace

std::array<AxiomVerdict, 4> check_inverse_map_axioms(const PartialTable& t) {
  const auto n = static_cast<Elem>(t.size());
  std::array<AxiomVerdict, 4> v{verdict(Axiom::Involution),
                                verdict(Axiom::AssociativePairs),
                                verdict(Axiom::LeftCancellation),
                                verdict(Axiom::RightCancellation)};
  for (Elem g = 0; g < n && v[1].holds; ++g)
    for (Elem h = 0; h < n && v[1].holds; ++h) {
      if (!t.product(g, h)) continue;
      for (Elem l = 0; l < n; ++l) {
        if (!t.product(h, l)) continue;
        auto left = left_nested(t, g, h, l);
        auto right = right_nested(t, g, h, l);
        if (!left || !right || *left != *right) {
          v[1].holds = false;
          v[1].counterexample = {g, h, l};
          break;
        }
      }
    }

  const auto cands = inverse_candidates(t);
  for (Elem g = 0; g < n; ++g) {
    if (cands.left[g].empty() && v[2].holds) {
      v[2].holds = false;
      v[2].counterexample = {g};
    }
    if (cands.right[g].empty() && v[3].holds) {
      v[3].holds = false;
      v[3].counterexample = {g};
    }
  }

  // An inverse map must pick, for every g, a candidate valid for both
  // cancellation laws, and be an involution.
  std::vector<std::vector<Elem>> both(n);
  for (Elem g = 0; g < n; ++g)
    for (Elem x : cands.left[g])
      if (std::find(cands.right[g].begin(), cands.right[g].end(), x) !=
          cands.right[g].end())
        both[g].push_back(x);
  std::vector<std::vector<Elem>> allowed(n);
  for (Elem g = 0; g < n; ++g)
    for (Elem x : both[g])
      if (std::find(both[x].begin(), both[x].end(), g) != both[x].end())
        allowed[g].push_back(x);
  std::vector<std::int64_t> inv(n, -1);
  if (!find_involution(allowed, inv)) {
    v[0].holds = false;
    auto bad = std::find_if(allowed.begin(), allowed.end(),
                            [](const auto& a) { return a.empty(); });
    v[0].counterexample = {
        static_cast<Elem>(bad == allowed.end() ? 0 : bad - allowed.begin())};
  }
  return v;
}

AxiomReport check_axioms(const PartialTable& table) {
  return AxiomReport{check_identity_axioms(table),
                     check_inverse_map_axioms(table)};
}

bool AxiomReport::identity_system_holds() const {
  return std::all_of(identity_system.begin(), identity_system.end(),
                     [](const AxiomVerdict& v) { return v.holds; });
}

bool AxiomReport::inverse_map_system_holds() const {
  return std::all_of(inverse_map_system.begin(), inverse_map_system.end(),
                     [](const AxiomVerdict& v) { return v.holds; });
}

const AxiomVerdict* AxiomReport::first_failure() const {
  for (const auto& v : identity_system)
    if (!v.holds) return &v;
  for (const auto& v : inverse_map_system)
    if (!v.holds) return &v;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Groupoid

namespace detail {
struct GroupoidData {
  PartialTable table;
  std::vector<Elem> source, target, inverse;
  std::vector<Elem> identities;
  ElemSet identity_set;
};
}  // namespace detail

namespace {

std::string witness_labels(const PartialTable& t, const std::vector<Elem>& w) {
  std::string out;
  for (Elem e : w) {
    if (!out.empty()) out += ",";
    out += t.label(e);
  }
  return out;
}

}  // namespace

Groupoid::Groupoid(const PartialTable& table) {
  // Both systems are run so that a disagreement surfaces immediately rather
  // than as a silently wrong structure.
  const AxiomReport report = check_axioms(table);
  if (report.identity_system_holds() != report.inverse_map_system_holds())
    throw std::logic_error("axiom systems disagree on a table");
  if (const auto* bad = report.first_failure())
    fail(ErrorKind::AxiomViolation,
         "axiom '" + std::string(to_string(bad->axiom)) + "' fails at (" +
             witness_labels(table, bad->counterexample) + ")",
         std::string(to_string(bad->axiom)) + ":" +
             witness_labels(table, bad->counterexample));

  auto d = std::make_shared<detail::GroupoidData>();
  d->table = table;
  const auto n = static_cast<Elem>(table.size());
  d->identity_set = intrinsic_identities(table);
  d->identities = d->identity_set.members();
  d->source.resize(n);
  d->target.resize(n);
  d->inverse.resize(n);
  for (Elem g = 0; g < n; ++g) {
    for (Elem e : d->identities) {
      if (table.product(g, e)) d->source[g] = e;
      if (table.product(e, g)) d->target[g] = e;
    }
  }
  for (Elem g = 0; g < n; ++g)
    for (Elem x = 0; x < n; ++x) {
      auto xg = table.product(x, g);
      if (xg && *xg == d->source[g] && table.product(g, x)) {
        d->inverse[g] = x;
        break;
      }
    }
  d_ = std::move(d);
}

std::size_t Groupoid::size() const { return d_->table.size(); }
const std::vector<std::string>& Groupoid::labels() const {
  return d_->table.labels();
}
const std::string& Groupoid::label(Elem e) const { return d_->table.label(e); }
std::optional<Elem> Groupoid::find(std::string_view l) const {
  return d_->table.find(l);
}
Elem Groupoid::at(std::string_view l) const { return d_->table.at(l); }
std::optional<Elem> Groupoid::compose(Elem g, Elem h) const {
  return d_->table.product(g, h);
}
Elem Groupoid::mul(Elem g, Elem h) const {
  auto v = d_->table.product(g, h);
  if (!v)
    throw std::logic_error("mul on a non-composable pair (" + label(g) + ", " +
                           label(h) + ")");
  return *v;
}
Elem Groupoid::source(Elem g) const { return d_->source[g]; }
Elem Groupoid::target(Elem g) const { return d_->target[g]; }
Elem Groupoid::inverse(Elem g) const { return d_->inverse[g]; }
const std::vector<Elem>& Groupoid::identities() const {
  return d_->identities;
}
const ElemSet& Groupoid::identity_set() const { return d_->identity_set; }
const PartialTable& Groupoid::table() const { return d_->table; }

std::vector<Elem> Groupoid::isotropy(Elem e) const {
  std::vector<Elem> out;
  for (Elem g = 0; g < size(); ++g)
    if (source(g) == e && target(g) == e) out.push_back(g);
  return out;
}

ElemSet Groupoid::translate_to(const ElemSet& s, const Groupoid& other) const {
  ElemSet out(other.size());
  for (Elem e : s.members()) out.insert(other.at(label(e)));
  return out;
}

bool operator==(const Groupoid& a, const Groupoid& b) {
  return a.d_ == b.d_ || a.d_->table == b.d_->table;
}

Groupoid build_from_table(std::vector<std::string> labels,
                          const std::vector<Triple>& triples) {
  return Groupoid(PartialTable::from_triples(std::move(labels), triples));
}

std::optional<Elem> try_compose(const Groupoid& g, Elem a, Elem b) {
  return g.compose(a, b);
}

Structure structure_of(const Groupoid& g, Elem a) {
  return {g.source(a), g.target(a), g.inverse(a)};
}

ElemSet identities_by_source(const Groupoid& g) {
  ElemSet out(g.size());
  for (Elem a = 0; a < g.size(); ++a) out.insert(g.source(a));
  return out;
}

ElemSet idempotents(const Groupoid& g) {
  ElemSet out(g.size());
  for (Elem a = 0; a < g.size(); ++a)
    if (auto aa = g.compose(a, a); aa && *aa == a) out.insert(a);
  return out;
}

ElemSet identities(const Groupoid& g) {
  ElemSet by_source = identities_by_source(g);
  if (by_source != idempotents(g))
    throw std::logic_error("identities differ from idempotents");
  return by_source;
}

Groupoid restrict_to(const Groupoid& g, const ElemSet& members) {
  if (members.empty())
    fail(ErrorKind::EmptySubset, "cannot restrict to an empty set");
  const auto elems = members.members();
  for (Elem a : elems) {
    if (!members.contains(g.inverse(a)))
      fail(ErrorKind::NotASubgroupoid,
           "not closed under inverses at '" + g.label(a) + "'", g.label(a));
    for (Elem b : elems)
      if (auto ab = g.compose(a, b); ab && !members.contains(*ab))
        fail(ErrorKind::NotASubgroupoid,
             "not closed under products at (" + g.label(a) + ", " +
                 g.label(b) + ")",
             g.label(a) + "," + g.label(b));
  }
  if (elems.size() == g.size()) return g;

  std::vector<std::string> labels;
  std::vector<Elem> position(g.size(), 0);
  for (Elem a : elems) {
    position[a] = static_cast<Elem>(labels.size());
    labels.push_back(g.label(a));
  }
  auto d = std::make_shared<detail::GroupoidData>();
  d->table = PartialTable(std::move(labels));
  for (Elem a : elems)
    for (Elem b : elems)
      if (auto ab = g.compose(a, b)) d->table.set(position[a], position[b], position[*ab]);
  const auto n = static_cast<Elem>(elems.size());
  d->source.resize(n);
  d->target.resize(n);
  d->inverse.resize(n);
  d->identity_set = ElemSet(n);
  for (Elem i = 0; i < n; ++i) {
    Elem a = elems[i];
    d->source[i] = position[g.source(a)];
    d->target[i] = position[g.target(a)];
    d->inverse[i] = position[g.inverse(a)];
    if (g.is_identity(a)) d->identity_set.insert(i);
  }
  d->identities = d->identity_set.members();
  return Groupoid(std::shared_ptr<const detail::GroupoidData>(std::move(d)));
}

bool is_group(const Groupoid& g) {
  return g.identities().size() == 1;
}

}  // namespace grpd
