#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grpd/constructions.hpp"

namespace grpd {

/// Small groups of order <= 8, pair groupoids on 1..4 points, and a fixed
/// selection of disjoint unions and direct products of those.
std::vector<NamedGroupoid> structured_corpus();

struct MutatedTable {
  std::string name;  // base name and the mutations applied
  PartialTable table;
};

/// `count` tables, each a corpus groupoid of at most `max_size` elements
/// with one to three random edits: a product redirected, removed, added, or
/// two rows swapped. Deterministic in `seed`.
std::vector<MutatedTable> mutated_tables(std::uint64_t seed, std::size_t count,
                                         std::size_t max_size = 12);

}  // namespace grpd
