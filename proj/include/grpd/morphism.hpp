#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grpd/groupoid.hpp"
#include "grpd/subgroupoid.hpp"

namespace grpd {

/// A groupoid homomorphism with its classification.
struct Hom {
  Groupoid domain;
  Groupoid codomain;
  std::vector<Elem> map;
  bool strong = false;
  bool injective = false;
  bool surjective = false;

  Elem operator()(Elem e) const { return map[e]; }
  bool bijective() const { return injective && surjective; }
};

/// Classifies `map`. Throws NotAHomomorphism with the first offending pair
/// (or a wrong-sized map).
Hom check_hom(const Groupoid& domain, const Groupoid& codomain,
              std::vector<Elem> map);

/// Builds the map from label pairs; throws UnknownLabel or SchemaError when
/// a domain element has no image.
Hom check_hom_labels(const Groupoid& domain, const Groupoid& codomain,
                     const std::vector<std::pair<std::string, std::string>>& map);

Hom identity_hom(const Groupoid& g);
/// psi∘phi. Throws GroupoidMismatch when the ends do not meet.
Hom compose(const Hom& psi, const Hom& phi);

/// Ker = {g | phi(g) is an identity}; always normal.
Subgroupoid kernel(const Hom& phi);

struct ImageResult {
  ElemSet set;
  bool is_subgroupoid;
};
ImageResult image(const Hom& phi);
ImageResult image_of(const Hom& phi, const ElemSet& h);

/// phi^-1(H'). Throws NotASubgroupoid when h is not a subgroupoid.
Subgroupoid preimage(const Hom& phi, const ElemSet& h);

/// g -> (d(g), r(g)) into the pair groupoid on the identity labels.
Hom anchor_map(const Groupoid& g);
/// g -> d(g) on Iso(G).
Hom theta_map(const Groupoid& g);

// ---------------------------------------------------------------------------
// Cosets and quotients

struct CosetTable {
  Groupoid parent;
  ElemSet sub;
  /// Classes ordered by their least member.
  std::vector<ElemSet> classes;
  std::vector<Elem> representative;  // least member of each class
  std::vector<Elem> class_of;        // element -> class index
};

/// Left cosets gH = {gh | h in H, r(h) = d(g)}. Throws NotWide or
/// NotASubgroupoid.
CosetTable cosets(const Groupoid& g, const ElemSet& h);

struct Quotient {
  Groupoid groupoid;  // labels "[rep]"
  CosetTable cosets;
  Hom projection;
};

/// G/N for a normal N. The coset product is verified for every choice of
/// representatives; it is well defined exactly when N lies in Iso(G).
/// Throws NotNormal, or QuotientUndefined with the offending representatives.
Quotient quotient(const Groupoid& g, const ElemSet& n);

/// Class of `e` in the quotient (by index).
inline Elem coset_index(const Quotient& q, Elem e) { return q.cosets.class_of[e]; }

struct FirstIso {
  Quotient quotient;  // G / Ker(phi)
  Hom iso;            // G/Ker(phi) -> codomain
};
/// Throws NotStrong or NotSurjective.
FirstIso first_iso(const Hom& phi);

struct SecondIso {
  ElemSet mn;         // MN
  Quotient lhs;       // M / (M∩N)
  Quotient rhs;       // MN / N
  Hom iso;            // lhs -> rhs
};
/// Throws NotWide, NotNormal or QuotientUndefined.
SecondIso second_iso(const Groupoid& g, const ElemSet& m, const ElemSet& n);

struct ThirdIso {
  Quotient g_by_k;       // G/K
  ElemSet h_by_k;        // H/K inside G/K
  Quotient outer;        // (G/K)/(H/K)
  Quotient g_by_h;       // G/H
  Hom iso;               // outer -> G/H
};
/// Throws NotNormal, NotNested or QuotientUndefined.
ThirdIso third_iso(const Groupoid& g, const ElemSet& h, const ElemSet& k);

struct Correspondence {
  /// Subgroupoids of the domain containing Ker(phi).
  std::vector<ElemSet> domain_side;
  /// Wide subgroupoids of the image, as subsets of the codomain.
  std::vector<ElemSet> image_side;
  /// image_side index of alpha(domain_side[i]).
  std::vector<std::size_t> alpha;
  bool bijective;
  bool preserves_normality;
};
/// Throws NotStrong or TooLarge.
Correspondence correspondence(const Hom& phi,
                              std::size_t bound = kDefaultEnumerationBound);

inline constexpr std::size_t kIsomorphismBound = 512;

/// First strong bijective hom found by invariant-pruned backtracking, or
/// nullopt. Throws TooLarge.
std::optional<Hom> find_isomorphism(const Groupoid& a, const Groupoid& b);

}  // namespace grpd
