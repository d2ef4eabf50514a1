#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grpd/elem_set.hpp"
#include "grpd/error.hpp"

namespace grpd {

/// One row `(left, right, product)` of a partial product table, by label.
struct Triple {
  std::string left;
  std::string right;
  std::string product;
};

/// A labelled finite set with a partial binary operation, not yet known to
/// satisfy any axioms. This is what documents and mutation tests produce.
class PartialTable {
 public:
  PartialTable() = default;

  /// Throws DuplicateLabel, UnknownLabel, ConflictingProduct or
  /// EmptyStructure.
  static PartialTable from_triples(std::vector<std::string> labels,
                                   const std::vector<Triple>& triples);

  /// A table over `labels` with no products defined.
  explicit PartialTable(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem e) const { return labels_[e]; }
  std::optional<Elem> find(std::string_view label) const;
  Elem at(std::string_view label) const;

  std::optional<Elem> product(Elem g, Elem h) const {
    auto v = cells_[g * size() + h];
    if (v < 0) return std::nullopt;
    return static_cast<Elem>(v);
  }
  void set(Elem g, Elem h, std::optional<Elem> value) {
    cells_[g * size() + h] = value ? static_cast<std::int32_t>(*value) : -1;
  }

  friend bool operator==(const PartialTable&, const PartialTable&) = default;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<std::int32_t> cells_;
};

enum class Axiom {
  // Partial product with intrinsic identities.
  Associativity,
  Composability,
  UniqueIdentities,
  Inverses,
  // Composable pairs with an inverse map.
  Involution,
  AssociativePairs,
  LeftCancellation,
  RightCancellation,
};

std::string_view to_string(Axiom a);

struct AxiomVerdict {
  Axiom axiom;
  bool holds = true;
  /// First counterexample in canonical order, up to three elements.
  std::vector<Elem> counterexample;
};

struct AxiomReport {
  /// Associativity, Composability, UniqueIdentities, Inverses.
  std::array<AxiomVerdict, 4> identity_system;
  /// Involution, AssociativePairs, LeftCancellation, RightCancellation.
  std::array<AxiomVerdict, 4> inverse_map_system;

  bool identity_system_holds() const;
  bool inverse_map_system_holds() const;
  bool overall() const {
    return identity_system_holds() && inverse_map_system_holds();
  }
  /// First failing verdict, identity system first.
  const AxiomVerdict* first_failure() const;
};

/// Runs both axiom systems exhaustively over all element triples.
AxiomReport check_axioms(const PartialTable& table);

/// Identity-system verdicts only.
std::array<AxiomVerdict, 4> check_identity_axioms(const PartialTable& table);
/// Inverse-map verdicts only; the inverse map is searched for, not given.
std::array<AxiomVerdict, 4> check_inverse_map_axioms(const PartialTable& table);

/// d(g), r(g), g^-1.
struct Structure {
  Elem source;
  Elem target;
  Elem inverse;
};

namespace detail {
struct GroupoidData;
}

/// A validated finite groupoid. Immutable; copies share storage.
class Groupoid {
 public:
  /// Validates `table` and derives d, r, the inverse map and the identities.
  /// Throws AxiomViolation naming the first failing axiom.
  explicit Groupoid(const PartialTable& table);

  std::size_t size() const;
  const std::vector<std::string>& labels() const;
  const std::string& label(Elem e) const;
  std::optional<Elem> find(std::string_view label) const;
  /// Throws UnknownLabel.
  Elem at(std::string_view label) const;

  std::optional<Elem> compose(Elem g, Elem h) const;
  bool composable(Elem g, Elem h) const { return source(g) == target(h); }
  /// Product of a composable pair.
  Elem mul(Elem g, Elem h) const;

  Elem source(Elem g) const;
  Elem target(Elem g) const;
  Elem inverse(Elem g) const;

  const std::vector<Elem>& identities() const;
  const ElemSet& identity_set() const;
  bool is_identity(Elem e) const { return identity_set().contains(e); }
  bool is_loop(Elem g) const { return source(g) == target(g); }

  ElemSet all() const { return ElemSet::full(size()); }
  ElemSet empty_set() const { return ElemSet(size()); }

  const PartialTable& table() const;

  /// Elements of G_e in canonical order.
  std::vector<Elem> isotropy(Elem e) const;

  /// Translate a set of this groupoid into `other` by label.
  ElemSet translate_to(const ElemSet& s, const Groupoid& other) const;

  /// Structural equality: same labels in the same order, same products.
  friend bool operator==(const Groupoid& a, const Groupoid& b);

 private:
  explicit Groupoid(std::shared_ptr<const detail::GroupoidData> d)
      : d_(std::move(d)) {}
  std::shared_ptr<const detail::GroupoidData> d_;

  friend Groupoid restrict_to(const Groupoid&, const ElemSet&);
};

/// Parses labels and triples, then validates.
Groupoid build_from_table(std::vector<std::string> labels,
                          const std::vector<Triple>& triples);

std::optional<Elem> try_compose(const Groupoid& g, Elem a, Elem b);
Structure structure_of(const Groupoid& g, Elem a);

/// {d(g) | g in G}; computed from the source map.
ElemSet identities_by_source(const Groupoid& g);
/// {g | gg exists and gg = g}; computed from the product table.
ElemSet idempotents(const Groupoid& g);
/// Both characterisations, compared; returns the common set.
ElemSet identities(const Groupoid& g);

/// The subgroupoid on `members` as a groupoid in its own right, labels and
/// relative order preserved. `members` must be closed under inverses and
/// defined products (throws NotASubgroupoid otherwise).
Groupoid restrict_to(const Groupoid& g, const ElemSet& members);

/// One identity and every product defined.
bool is_group(const Groupoid& g);

}  // namespace grpd
