#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

struct InverseSemigroupReport {
  bool associative = true;
  bool star_identities = true;  // s s* s = s and s* s s* = s*
  bool star_unique = true;      // s* is the only element with both identities
  bool idempotents_commute = true;
  std::vector<Elem> witness;    // first failure
  bool ok() const {
    return associative && star_identities && star_unique && idempotents_commute;
  }
};

/// Exhaustive check of a total table. `table[s * n + t]` is st.
InverseSemigroupReport check_inverse_semigroup(std::size_t n,
                                               const std::vector<Elem>& table,
                                               const std::vector<Elem>& star);

/// A validated finite inverse semigroup. Element order is the input order.
class FiniteInverseSemigroup {
 public:
  FiniteInverseSemigroup() = default;
  /// Throws NotAssociative, StarViolation or NonCommutingIdempotents.
  FiniteInverseSemigroup(std::vector<std::string> labels, std::vector<Elem> table,
                         std::vector<Elem> star);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem e) const { return labels_[e]; }
  Elem at(std::string_view label) const;
  std::optional<Elem> find(std::string_view label) const;

  Elem mul(Elem s, Elem t) const { return table_[s * size() + t]; }
  Elem star(Elem s) const { return star_[s]; }
  bool is_idempotent(Elem s) const { return mul(s, s) == s; }
  std::vector<Elem> idempotents() const;
  /// Two-sided identity, if any.
  std::optional<Elem> unit() const;
  /// Natural partial order: s <= t iff s = s s* t.
  bool leq(Elem s, Elem t) const { return mul(mul(s, star(s)), t) == s; }

  const std::vector<Elem>& table() const { return table_; }
  const std::vector<Elem>& star_map() const { return star_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<Elem> table_;
  std::vector<Elem> star_;
};

// ---------------------------------------------------------------------------
// Partial bijections

/// A partial injective map of {0..n-1}; image[x] = -1 when x is outside the
/// domain.
struct PartialBijection {
  std::vector<int> image;

  std::size_t universe() const { return image.size(); }
  bool defined(Elem x) const { return image[x] >= 0; }
  ElemSet domain() const;
  ElemSet range() const;
  PartialBijection inverse() const;
  /// (f ∘ g)(x) = f(g(x)): g is applied first.
  friend PartialBijection operator*(const PartialBijection& f, const PartialBijection& g);
  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;
  friend auto operator<=>(const PartialBijection& a, const PartialBijection& b) {
    return a.image <=> b.image;
  }
  /// f restricted to `s` (the part of f with domain in s).
  PartialBijection restrict(const ElemSet& s) const;
  /// f ⊆ g as graphs.
  bool restriction_of(const PartialBijection& g) const;

  static PartialBijection identity_on(const ElemSet& s);
  static PartialBijection empty(std::size_t n);
  /// "{x->y,...}" using the given point labels, in point order.
  std::string to_string(const std::vector<std::string>& points) const;
};

/// All partial bijections of the points, ordered by domain size, then domain
/// (canonical subset order), then images.
std::vector<PartialBijection> all_partial_bijections(std::size_t n);

struct PartialBijectionMonoid {
  std::vector<std::string> points;
  std::vector<PartialBijection> elements;
  FiniteInverseSemigroup semigroup;
  Elem index_of(const PartialBijection& f) const;
};

/// The symmetric inverse monoid on `points`. Throws EmptyStructure.
PartialBijectionMonoid partial_bijection_monoid(const std::vector<std::string>& points);

/// s·t defined iff s* s = t t*. Elements and labels are those of S.
Groupoid restricted_product_groupoid(const FiniteInverseSemigroup& s);

// ---------------------------------------------------------------------------
// The Exel semigroup

/// An element (A, g) of E(G): 1 ∈ A, g ∈ A.
struct ExelElement {
  ElemSet a;
  Elem g;
  friend bool operator==(const ExelElement&, const ExelElement&) = default;
};

inline constexpr std::size_t kExelOrderBound = 8;

struct ExelSemigroup {
  Groupoid group;
  std::vector<ExelElement> elements;  // ordered by (A, g)
  FiniteInverseSemigroup semigroup;

  Elem index_of(const ExelElement& x) const;
  /// Index of [h] = ({1, h}, h).
  Elem generator(Elem h) const;
  ExelElement mul(const ExelElement& x, const ExelElement& y) const;
  ExelElement star(const ExelElement& x) const;
  std::string label(const ExelElement& x) const;
};

/// Pair-form product (A ∪ gB, gh) and star (g^-1 A, g^-1). Throws NotAGroup
/// or TooLarge (order above kExelOrderBound).
ExelSemigroup exel_semigroup(const Groupoid& group);

/// Token of a word over E(G): a generator [g] or an idempotent γ_g.
struct ExelToken {
  enum Kind { Gen, Gamma } kind;
  Elem g;
  friend bool operator==(const ExelToken&, const ExelToken&) = default;
};

/// Rewrites a word of generators to γ_{s1}...γ_{sn}[g] using the defining
/// relations and idempotent commutation. Throws EmptyWord.
std::vector<ExelToken> exel_rewrite(const Groupoid& group, const std::vector<Elem>& word);

/// The rewritten normal form as (A, g): A = {1, s1, ..., sn, g}.
ExelElement exel_normal_form(const Groupoid& group, const std::vector<Elem>& word);

/// Left fold of pair-form products over the generators of `word`.
ExelElement exel_fold(const ExelSemigroup& e, const std::vector<Elem>& word);

struct Composability {
  bool by_products;   // αα* = β*β computed in the semigroup
  bool by_sets;       // A = h^-1 B in pair form
};
/// Both routes; a disagreement throws std::logic_error.
Composability exel_composability(const ExelSemigroup& e, const ExelElement& alpha,
                                 const ExelElement& beta);

/// The set criterion exactly as printed for the normal forms
/// γ_{s_i}[g] and γ_{t_j}[l]: {s_i} ∪ {g} = {t_j} ∪ {l^-1}.
bool exel_literal_criterion(const ExelSemigroup& e, const ExelElement& alpha,
                            const ExelElement& beta);

}  // namespace grpd
