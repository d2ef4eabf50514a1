#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grpd/inverse_semigroup.hpp"
#include "grpd/morphism.hpp"

namespace grpd {

/// Partial bijections α_g : X_{g^-1} -> X_g, one per group element.
struct PartialAction {
  Groupoid group;
  std::vector<std::string> points;
  std::vector<PartialBijection> maps;

  /// X_g, the range of α_g.
  ElemSet piece(Elem g) const { return maps[g].range(); }
  friend bool operator==(const PartialAction& a, const PartialAction& b) {
    return a.maps == b.maps && a.points == b.points && a.group == b.group;
  }
};

/// First violated axiom as "axiom: detail", or nullopt:
///   unit         α_1 = id_X
///   inverse      α_{g^-1} = α_g^-1
///   image        α_g(X_{g^-1} ∩ X_h) = X_g ∩ X_{gh}
///   composition  α_g α_h = α_{gh} on X_{h^-1} ∩ X_{(gh)^-1}
std::optional<std::string> partial_action_violation(const Groupoid& group,
                                                    const std::vector<PartialBijection>& maps);

/// Throws AxiomViolation, NotAGroup or SchemaError (maps of the wrong size).
PartialAction validate_partial_action(const Groupoid& group, std::vector<std::string> points,
                                      std::vector<PartialBijection> maps);

/// A map E(G) -> partial bijections of X, indexed like E.elements.
struct SemigroupAction {
  std::vector<std::string> points;
  std::vector<PartialBijection> phi;
  friend bool operator==(const SemigroupAction&, const SemigroupAction&) = default;
};

/// Throws NotUnital or NotAHomomorphism.
void check_semigroup_action(const ExelSemigroup& e, const SemigroupAction& a);

/// φ(A, g) = id_{∩_{s∈A} X_s} ∘ α_g, the image of γ_{s1}...γ_{sn}[g].
SemigroupAction partial_to_semigroup_action(const ExelSemigroup& e, const PartialAction& p);
/// α_g = φ([g]). Throws NotUnital or NotAHomomorphism.
PartialAction semigroup_action_to_partial(const ExelSemigroup& e, const SemigroupAction& a);

/// β_g : X_{d(g)} -> X_{r(g)} for every element of a groupoid.
struct GlobalAction {
  Groupoid groupoid;
  std::vector<std::string> points;
  std::vector<PartialBijection> beta;

  ElemSet piece(Elem e) const { return beta[e].domain(); }
  friend bool operator==(const GlobalAction& a, const GlobalAction& b) {
    return a.beta == b.beta && a.points == b.points && a.groupoid == b.groupoid;
  }
};

/// Identities act as identities on their pieces, β_g is a bijection
/// X_{d(g)} -> X_{r(g)}, β_g β_h = β_{gh} on composable pairs, and the
/// pieces cover X. Returns the first violation.
std::optional<std::string> global_action_violation(const Groupoid& g, std::size_t points,
                                                   const std::vector<PartialBijection>& beta);
/// Throws NotAnAction.
GlobalAction validate_global_action(const Groupoid& g, std::vector<std::string> points,
                                    std::vector<PartialBijection> beta);

/// Conditions tying a global action of the restricted-product groupoid of
/// E(G) to the order of E(G): X_{[1]} = X, X_{ef} = X_e ∩ X_f on
/// idempotents, and α ≤ β implies β_α ⊆ β_β.
std::optional<std::string> inductive_violation(const ExelSemigroup& e,
                                               const std::vector<PartialBijection>& beta);

/// The restricted-product groupoid of E(G) with labels of E(G).
Groupoid exel_groupoid(const ExelSemigroup& e);

/// β_α = φ(α) on the restricted-product groupoid of E(G).
GlobalAction semigroup_action_to_groupoid_action(const ExelSemigroup& e,
                                                 const SemigroupAction& a);
/// φ(α) = β_α. Throws NotAHomomorphism or NotUnital.
SemigroupAction groupoid_action_to_semigroup_action(const ExelSemigroup& e,
                                                    const GlobalAction& g);

/// g -> β_g into the restricted-product groupoid of partial bijections.
Hom groupoid_action_to_hom(const GlobalAction& a, const PartialBijectionMonoid& m,
                           const Groupoid& target);
/// Throws NotAnAction.
GlobalAction hom_to_groupoid_action(const Hom& h, const PartialBijectionMonoid& m);

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::size_t kActionGroupBound = 4;
inline constexpr std::size_t kActionPointBound = 3;

std::vector<PartialAction> enumerate_partial_actions(const Groupoid& group,
                                                     std::size_t points);
std::vector<SemigroupAction> enumerate_semigroup_actions(const ExelSemigroup& e,
                                                         std::size_t points);

enum class HomKind { Inductive, Ordinary };
/// Unital homs from the groupoid of E(G) into the groupoid of partial
/// bijections; Inductive adds order and meet preservation.
std::vector<Hom> enumerate_action_homs(const ExelSemigroup& e, const PartialBijectionMonoid& m,
                                       const Groupoid& target, HomKind kind);

/// Global actions of the groupoid of E(G); `inductive` adds the conditions
/// of inductive_violation.
std::vector<GlobalAction> enumerate_global_actions(const ExelSemigroup& e, std::size_t points,
                                                   bool inductive);

struct RoundtripReport {
  std::size_t partial_actions = 0;     // (a)
  std::size_t semigroup_actions = 0;   // (b)
  std::size_t inductive_homs = 0;      // (c)
  std::size_t global_actions = 0;      // (d)
  std::size_t ordinary_homs = 0;       // unital homs, order ignored
  std::size_t plain_global_actions = 0;  // covering actions, order ignored
  bool counts_match = false;
  bool maps_inverse = false;
  std::vector<std::string> failures;
};

/// Throws TooLarge beyond |G| <= 4, |X| <= 3 unless the bounds are raised.
RoundtripReport correspondence_roundtrip(const Groupoid& group, std::size_t points,
                                         std::size_t group_bound = kActionGroupBound,
                                         std::size_t point_bound = kActionPointBound);

std::vector<std::string> default_points(std::size_t n);

}  // namespace grpd
