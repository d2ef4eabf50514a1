#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

/// A subset of a parent groupoid closed under inverses and defined products.
/// The wide and normal flags are computed once at construction.
class Subgroupoid {
 public:
  /// Throws EmptySubset or NotASubgroupoid.
  Subgroupoid(Groupoid parent, ElemSet members);

  const Groupoid& parent() const { return parent_; }
  const ElemSet& members() const { return members_; }
  bool wide() const { return wide_; }
  bool normal() const { return normal_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem e) const { return members_.contains(e); }

  /// The members as a groupoid in their own right (labels preserved).
  Groupoid as_groupoid() const { return restrict_to(parent_, members_); }
  std::vector<std::string> labels() const;

  friend bool operator==(const Subgroupoid& a, const Subgroupoid& b) {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

 private:
  Groupoid parent_;
  ElemSet members_;
  bool wide_ = false;
  bool normal_ = false;
};

/// Resolves labels to a subset of `g`. Throws UnknownLabel.
ElemSet subset_of_labels(const Groupoid& g, const std::vector<std::string>& labels);

// ---------------------------------------------------------------------------
// Structure attached to every groupoid

/// G_e as a one-object groupoid. Throws NotAnIdentity.
Groupoid isotropy_group(const Groupoid& g, Elem e);

/// Iso(G), the disjoint union of the isotropy groups.
ElemSet iso_set(const Groupoid& g);
Subgroupoid iso_bundle(const Groupoid& g);

struct AbelianStatus {
  /// G = Iso(G) and every isotropy group is abelian.
  bool totally_abelian;
  /// Every isotropy group is abelian.
  bool isotropy_abelian;
};
AbelianStatus abelian_status(const Groupoid& g);

// ---------------------------------------------------------------------------
// Recognition and generation

struct SubgroupoidCheck {
  bool subgroupoid;
  bool wide;
  /// First violation: {g} for a missing inverse, {g,h} for a missing
  /// product, {e} for a missing identity when not wide. Empty if none.
  std::vector<Elem> witness;
  std::string reason;
};

/// Throws EmptySubset.
SubgroupoidCheck is_subgroupoid(const Groupoid& g, const ElemSet& s);

/// Closure of `seed` under inverses and defined products. Throws EmptySubset.
ElemSet closure(const Groupoid& g, const ElemSet& seed);
Subgroupoid generated_subgroupoid(const Groupoid& g, const ElemSet& seed);

enum class SubFilter { All, Wide, Normal };

inline constexpr std::size_t kDefaultEnumerationBound = 16;

/// Every subgroupoid of `g` passing `filter`, in canonical subset order.
/// Throws TooLarge when |g| exceeds `bound`.
std::vector<Subgroupoid> enumerate_subgroupoids(
    const Groupoid& g, SubFilter filter = SubFilter::All,
    std::size_t bound = kDefaultEnumerationBound);

/// Raw member sets of every subgroupoid of `g` contained in `within`
/// (itself a subgroupoid), canonical order. No size check.
std::vector<ElemSet> subgroupoid_sets(const Groupoid& g, const ElemSet& within);

// ---------------------------------------------------------------------------
// Example subgroupoids

/// C(a) = {g in G_d(a) | ga = ag}. Throws NotALoop.
Subgroupoid centralizer(const Groupoid& g, Elem a);

/// {a^n | a in Iso(G)}. Throws NotAbelian, or BadPosition when n < 2.
Subgroupoid power_subgroupoid(const Groupoid& g, unsigned n);

/// Without n: {g in Iso(G) | g^k in G_0 for some k}. With n:
/// {g in Iso(G) | g^n in G_0}. Throws NotAbelian.
Subgroupoid torsion_subgroupoid(const Groupoid& g,
                                std::optional<unsigned> n = std::nullopt);

/// g^k for a loop g (k >= 1).
Elem loop_power(const Groupoid& g, Elem a, unsigned k);
/// Least k >= 1 with a^k an identity; 0 if `a` is not a loop.
unsigned loop_order(const Groupoid& g, Elem a);

// ---------------------------------------------------------------------------
// Products, conjugation, normality

struct SetProduct {
  ElemSet hk;
  ElemSet kh;
  bool commute;         // HK = KH
  bool is_subgroupoid;  // HK nonempty and closed
};

/// HK = {hk | h in H, k in K, d(h) = r(k)}, and KH for comparison.
SetProduct set_product(const Groupoid& g, const ElemSet& h, const ElemSet& k);

ElemSet intersection(const ElemSet& a, const ElemSet& b);

/// {g^-1 x g | x in H, d(x) = r(x) = r(g)}.
ElemSet conjugate_set(const Groupoid& g, Elem a, const ElemSet& h);

struct NormalityReport {
  bool normal;
  bool via_definition;
  bool via_characterization;
  /// First failure of the definitional test: {g} when g^-1 H g is empty,
  /// {g, x} when g^-1 x g leaves H. Empty when normal.
  std::vector<Elem> witness;
};

/// Normality of H inside `ambient` (a subgroupoid of g containing H).
/// Both tests run independently; a disagreement throws std::logic_error.
NormalityReport normality_in(const Groupoid& g, const ElemSet& ambient,
                             const ElemSet& h);

/// Normality in the whole groupoid. Throws NotASubgroupoid.
NormalityReport is_normal(const Groupoid& g, const ElemSet& h);

/// Normal in `ambient` and contained in Iso: the condition under which the
/// coset quotient is a groupoid.
bool quotient_admissible_in(const Groupoid& g, const ElemSet& ambient,
                            const ElemSet& n);

/// Subgroupoid of `g` whose members lie in `ambient`.
bool is_subgroupoid_set(const Groupoid& g, const ElemSet& s);

}  // namespace grpd
