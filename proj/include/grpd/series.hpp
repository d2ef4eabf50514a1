#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grpd/morphism.hpp"

namespace grpd {

/// A descending chain G = chain[0] ⊇ chain[1] ⊇ ... where each term is
/// normal in its predecessor and lies in the predecessor's Iso, so every
/// factor chain[i]/chain[i+1] is a groupoid.
struct SubnormalSeries {
  Groupoid groupoid;
  std::vector<ElemSet> chain;
  std::vector<Groupoid> factors;
  bool normal_series = false;

  /// Number of strict inclusions.
  std::size_t length() const;
  bool ends_at_identities() const;
};

/// Throws NotNested, NotASubgroupoid, NotNormalAtStep (witness "i") or
/// QuotientUndefined (a normal step outside Iso).
SubnormalSeries validate_series(const Groupoid& g, const std::vector<ElemSet>& chain);

/// Inserts `n` after position i (between chain[i] and chain[i+1], or after the
/// last term). Throws BadPosition or NotNormal.
SubnormalSeries one_step_refinement(const SubnormalSeries& s, std::size_t i,
                                    const ElemSet& n);

/// Whether `n` is a normal subgroupoid of `m` (as a groupoid) lying in Iso,
/// `m` itself included; exactly the terms that may follow `m` in a series.
bool admissible_step(const Groupoid& g, const ElemSet& m, const ElemSet& n);

/// Simple: every normal subgroupoid contained in Iso(G) is G_0 or G.
bool is_simple(const Groupoid& g, std::size_t bound = 64);

/// Maximal admissible proper normal subgroupoids of `m`, canonical order.
std::vector<ElemSet> maximal_admissible_normals(const Groupoid& g, const ElemSet& m);

/// Picks the canonically first maximal term at every step.
SubnormalSeries composition_series(const Groupoid& g, std::size_t bound = 64);

/// Every composition series. Throws TooLarge.
std::vector<SubnormalSeries> all_composition_series(const Groupoid& g,
                                                    std::size_t bound = 16);

/// No proper one-step refinement exists (checked exhaustively).
bool has_proper_refinement(const SubnormalSeries& s);

enum class AbelianMode { Isotropy, Total };
bool is_solvable_series(const SubnormalSeries& s,
                        AbelianMode mode = AbelianMode::Isotropy);

/// A factor with at least one non-identity element.
bool is_nontrivial_factor(const Groupoid& factor);

struct SeriesEquivalence {
  bool equivalent;
  /// (index in S.factors, index in T.factors) for nontrivial factors.
  std::vector<std::pair<std::size_t, std::size_t>> matching;
};
/// Throws GroupoidMismatch when the series belong to different groupoids.
SeriesEquivalence series_equivalent(const SubnormalSeries& s, const SubnormalSeries& t);

struct Zassenhaus {
  ElemSet upper_a, lower_a;  // A*(A∩B), A*(A∩B*)
  ElemSet upper_b, lower_b;  // B*(A∩B), B*(A*∩B)
  ElemSet middle;            // D = (A*∩B)(A∩B*)
  Quotient lhs;              // upper_a / lower_a
  Quotient rhs;              // upper_b / lower_b
  Quotient common;           // (A∩B) / D
  Hom iso;                   // lhs -> rhs, through common
};
/// Throws NotWide, NotNormal or QuotientUndefined.
Zassenhaus zassenhaus(const Groupoid& g, const ElemSet& a_star, const ElemSet& a,
                      const ElemSet& b_star, const ElemSet& b);

struct SchreierResult {
  SubnormalSeries s_refined;
  SubnormalSeries t_refined;
  SeriesEquivalence certificate;
};
/// Throws GroupoidMismatch; Zassenhaus errors propagate.
SchreierResult schreier_refine(const SubnormalSeries& s, const SubnormalSeries& t);

struct JordanHolderReport {
  bool all_equivalent;
  std::size_t series_found;
};
JordanHolderReport jordan_holder_check(const Groupoid& g, std::size_t bound = 16);

}  // namespace grpd
