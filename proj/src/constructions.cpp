#include "grpd/constructions.hpp"

#include <array>
#include <functional>

namespace grpd {

Groupoid pair_groupoid(const std::vector<std::string>& points) {
  if (points.empty())
    fail(ErrorKind::EmptyStructure, "pair groupoid needs at least one point");
  const auto n = static_cast<Elem>(points.size());
  std::vector<std::string> labels;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      labels.push_back("(" + points[x] + "," + points[y] + ")");
  PartialTable t(std::move(labels));
  // (y,z)(x,y) = (x,z)
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        t.set(y * n + z, x * n + y, x * n + z);
  return Groupoid(t);
}

Groupoid from_group(const std::vector<std::string>& labels,
                    const std::vector<std::vector<Elem>>& table) {
  const auto n = labels.size();
  if (table.size() != n)
    fail(ErrorKind::NotAGroup, "Cayley table must be square");
  PartialTable t(labels);
  for (Elem i = 0; i < n; ++i) {
    if (table[i].size() != n)
      fail(ErrorKind::NotAGroup, "Cayley table must be square");
    for (Elem j = 0; j < n; ++j) {
      if (table[i][j] >= n)
        fail(ErrorKind::NotAGroup, "Cayley table entry out of range");
      t.set(i, j, table[i][j]);
    }
  }
  try {
    Groupoid g(t);
    if (!is_group(g)) fail(ErrorKind::NotAGroup, "table has several identities");
    return g;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::AxiomViolation)
      fail(ErrorKind::NotAGroup, std::string("not a group: ") + e.what(),
           e.witness());
    throw;
  }
}

Groupoid direct_product(const Groupoid& a, const Groupoid& b) {
  const auto nb = static_cast<Elem>(b.size());
  std::vector<std::string> labels;
  for (Elem i = 0; i < a.size(); ++i)
    for (Elem j = 0; j < nb; ++j)
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  PartialTable t(std::move(labels));
  for (Elem i = 0; i < a.size(); ++i)
    for (Elem j = 0; j < nb; ++j)
      for (Elem k = 0; k < a.size(); ++k)
        for (Elem l = 0; l < nb; ++l) {
          auto ik = a.compose(i, k);
          auto jl = b.compose(j, l);
          if (ik && jl) t.set(i * nb + j, k * nb + l, *ik * nb + *jl);
        }
  return Groupoid(t);
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) {
  const auto na = static_cast<Elem>(a.size());
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("1:" + l);
  for (const auto& l : b.labels()) labels.push_back("2:" + l);
  PartialTable t(std::move(labels));
  for (Elem i = 0; i < na; ++i)
    for (Elem j = 0; j < na; ++j)
      if (auto ij = a.compose(i, j)) t.set(i, j, *ij);
  for (Elem i = 0; i < b.size(); ++i)
    for (Elem j = 0; j < b.size(); ++j)
      if (auto ij = b.compose(i, j)) t.set(na + i, na + j, na + *ij);
  return Groupoid(t);
}

namespace {

Groupoid group_from_rule(std::vector<std::string> labels,
                         const std::function<Elem(Elem, Elem)>& mul) {
  const auto n = static_cast<Elem>(labels.size());
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) table[i][j] = mul(i, j);
  return from_group(labels, table);
}

}  // namespace

Groupoid cyclic_group(unsigned n) {
  if (n == 0) fail(ErrorKind::EmptyStructure, "cyclic group of order 0");
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return group_from_rule(labels, [n](Elem a, Elem b) { return (a + b) % n; });
}

Groupoid dihedral_group(unsigned n) {
  if (n == 0) fail(ErrorKind::EmptyStructure, "dihedral group of order 0");
  // index i < n is r^i, index n + i is s r^i; s r^i s = r^-i.
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) labels.push_back("r^" + std::to_string(i));
  for (unsigned i = 0; i < n; ++i) labels.push_back("sr^" + std::to_string(i));
  return group_from_rule(labels, [n](Elem a, Elem b) -> Elem {
    bool sa = a >= n, sb = b >= n;
    unsigned i = a % n, j = b % n;
    // (s^sa r^i)(s^sb r^j) = s^(sa+sb) r^(±i + j)
    unsigned k = sb ? (n - i + j) % n : (i + j) % n;
    return (sa != sb ? n : 0) + k;
  });
}

Groupoid symmetric_group_3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> labels{"id", "(12)", "(13)", "(23)", "(123)", "(132)"};
  return group_from_rule(labels, [&perms](Elem a, Elem b) -> Elem {
    // (ab)(x) = a(b(x))
    Perm c{};
    for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
    for (Elem k = 0; k < perms.size(); ++k)
      if (perms[k] == c) return k;
    return 0;
  });
}

Groupoid quaternion_group() {
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit index u in {0:1, 1:i, 2:j, 3:k}, sign bit; table of unit products.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1},
                                 {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0},
                                 {0, 0, 1, 1}};
  return group_from_rule(labels, [](Elem a, Elem b) -> Elem {
    int ua = static_cast<int>(a / 2), ub = static_cast<int>(b / 2);
    int s = static_cast<int>(a % 2) ^ static_cast<int>(b % 2) ^ sign[ua][ub];
    return static_cast<Elem>(unit[ua][ub] * 2 + s);
  });
}

std::vector<NamedGroupoid> small_groups() {
  std::vector<NamedGroupoid> out;
  for (unsigned n : {1u, 2u, 3u, 4u}) out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
  out.push_back({"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))});
  out.push_back({"Z5", cyclic_group(5)});
  out.push_back({"Z6", cyclic_group(6)});
  out.push_back({"S3", symmetric_group_3()});
  out.push_back({"Z7", cyclic_group(7)});
  out.push_back({"Z8", cyclic_group(8)});
  out.push_back({"Z4xZ2", direct_product(cyclic_group(4), cyclic_group(2))});
  out.push_back({"Z2xZ2xZ2",
                 direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                cyclic_group(2))});
  out.push_back({"D4", dihedral_group(4)});
  out.push_back({"Q8", quaternion_group()});
  return out;
}

}  // namespace grpd
