#pragma once

#include <string>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

/// Pair groupoid X×X. Element (x,y) has source (x,x), target (y,y), inverse
/// (y,x); the product (y,z)(x,y) is (x,z). Labels are "(x,y)".
Groupoid pair_groupoid(const std::vector<std::string>& points);

/// One-object groupoid from a square Cayley table, `table[i][j]` being the
/// index of labels[i]·labels[j]. Throws NotAGroup.
Groupoid from_group(const std::vector<std::string>& labels,
                    const std::vector<std::vector<Elem>>& table);

/// Componentwise product; labels are "(g,h)", defined iff both are.
Groupoid direct_product(const Groupoid& a, const Groupoid& b);

/// Disjoint union; labels are prefixed with "1:" and "2:" so they never
/// collide.
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);

/// Small named groups as one-object groupoids.
Groupoid cyclic_group(unsigned n);   // labels "0".."n-1"
Groupoid dihedral_group(unsigned n); // order 2n; labels "r^i" and "sr^i"
Groupoid symmetric_group_3();        // labels "id","(12)","(13)","(23)","(123)","(132)"
Groupoid quaternion_group();         // labels "1","-1","i","-i","j","-j","k","-k"

struct NamedGroupoid {
  std::string name;
  Groupoid groupoid;
};

/// Every group of order 1..8 up to isomorphism (14 groups).
std::vector<NamedGroupoid> small_groups();

}  // namespace grpd
