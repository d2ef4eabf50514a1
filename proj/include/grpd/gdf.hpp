#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "grpd/inverse_semigroup.hpp"
#include "grpd/partial_action.hpp"

namespace grpd {

inline constexpr std::string_view kGdfVersion = "gdf-1";

enum class DocKind { Groupoid, Group, Subset, Hom, Series, PartialAction, InverseSemigroup };
std::string_view to_string(DocKind k);

struct SubsetDoc {
  std::vector<std::string> members;
  friend bool operator==(const SubsetDoc&, const SubsetDoc&) = default;
};

struct HomDoc {
  std::map<std::string, std::string> map;
  friend bool operator==(const HomDoc&, const HomDoc&) = default;
};

struct SeriesDoc {
  std::vector<std::vector<std::string>> chain;
  friend bool operator==(const SeriesDoc&, const SeriesDoc&) = default;
};

/// Maps are kept by label. With `exel` set the keys are labels of E(G)
/// rather than of the group.
struct ActionDoc {
  Groupoid group;
  bool exel = false;
  std::vector<std::string> set;
  std::map<std::string, std::map<std::string, std::string>> maps;
  friend bool operator==(const ActionDoc& a, const ActionDoc& b) {
    return a.exel == b.exel && a.set == b.set && a.maps == b.maps && a.group == b.group;
  }
};

struct SemigroupDoc {
  FiniteInverseSemigroup semigroup;
  friend bool operator==(const SemigroupDoc& a, const SemigroupDoc& b) {
    const auto& s = a.semigroup;
    const auto& t = b.semigroup;
    return s.labels() == t.labels() && s.table() == t.table() && s.star_map() == t.star_map();
  }
};

struct Document {
  DocKind kind;
  std::variant<Groupoid, SubsetDoc, HomDoc, SeriesDoc, ActionDoc, SemigroupDoc> payload;

  const Groupoid& groupoid() const;  // Groupoid or Group
  const SubsetDoc& subset() const;
  const HomDoc& hom() const;
  const SeriesDoc& series() const;
  const ActionDoc& action() const;
  const SemigroupDoc& semigroup() const;
  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws SyntaxError (witness "line:column"), SchemaError (witness is the
/// JSON pointer of the offending field) or any error of the structure's own
/// validation.
Document parse_document(std::string_view text);
/// Reads and parses a file. Throws IoError as well.
Document load_document(const std::string& path);

nlohmann::json to_json(const Document& d);

enum class EmitMode { Human, Machine };
/// Machine mode is compact JSON with sorted keys and canonical element
/// order, newline terminated.
std::string emit_document(const Document& d, EmitMode mode);

// Constructors from in-memory values.
Document groupoid_document(const Groupoid& g);
/// Throws NotAGroup.
Document group_document(const Groupoid& g);
Document subset_document(const Groupoid& g, const ElemSet& s);
Document hom_document(const Hom& h);
Document series_document(const Groupoid& g, const std::vector<ElemSet>& chain);
Document action_document(const PartialAction& p);
Document action_document(const ExelSemigroup& e, const SemigroupAction& a);
Document semigroup_document(const FiniteInverseSemigroup& s);

/// Resolves label maps to partial bijections. Throws UnknownLabel, or
/// SchemaError for a map that is not injective or a missing element.
PartialAction to_partial_action(const ActionDoc& d);
SemigroupAction to_semigroup_action(const ActionDoc& d, const ExelSemigroup& e);

/// "line:column" (1-based) of a byte offset.
std::string line_column(std::string_view text, std::size_t offset);

/// Byte offset of the value at a JSON pointer, if present.
std::optional<std::size_t> locate_pointer(std::string_view text, std::string_view pointer);

/// Product table with "." for undefined products.
std::string render_table(const std::vector<std::string>& labels,
                         const std::function<std::optional<Elem>(Elem, Elem)>& product);

}  // namespace grpd
