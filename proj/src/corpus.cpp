#include "grpd/corpus.hpp"

#include <random>

namespace grpd {

std::vector<NamedGroupoid> structured_corpus() {
  std::vector<NamedGroupoid> out = small_groups();
  std::vector<NamedGroupoid> pairs;
  const std::vector<std::string> pts = {"x", "y", "z", "w"};
  for (std::size_t n = 1; n <= 4; ++n) {
    pairs.push_back({"Pair" + std::to_string(n),
                     pair_groupoid({pts.begin(), pts.begin() + static_cast<long>(n)})});
    out.push_back(pairs.back());
  }
  const Groupoid z2 = cyclic_group(2), z3 = cyclic_group(3), s3 = symmetric_group_3();
  const Groupoid& p2 = pairs[1].groupoid;
  const Groupoid& p3 = pairs[2].groupoid;
  out.push_back({"Z2+Z3", disjoint_union(z2, z3)});
  out.push_back({"Z2+Pair2", disjoint_union(z2, p2)});
  out.push_back({"Z3+Pair2", disjoint_union(z3, p2)});
  out.push_back({"Pair2+Pair3", disjoint_union(p2, p3)});
  out.push_back({"S3+Pair2", disjoint_union(s3, p2)});
  out.push_back({"Z2+Z2xZ2", disjoint_union(z2, direct_product(z2, z2))});
  out.push_back({"Z2xPair2", direct_product(z2, p2)});
  out.push_back({"Z3xPair2", direct_product(z3, p2)});
  out.push_back({"Z2xPair3", direct_product(z2, p3)});
  out.push_back({"Pair2xPair2", direct_product(p2, p2)});
  out.push_back({"S3xPair2", direct_product(s3, p2)});
  out.push_back({"Z2x(Z2+Pair2)", direct_product(z2, disjoint_union(z2, p2))});
  return out;
}

std::vector<MutatedTable> mutated_tables(std::uint64_t seed, std::size_t count,
                                         std::size_t max_size) {
  std::vector<NamedGroupoid> bases;
  for (auto& b : structured_corpus())
    if (b.groupoid.size() <= max_size) bases.push_back(std::move(b));
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<Elem>(rng() % n); };

  std::vector<MutatedTable> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& base = bases[pick(bases.size())];
    PartialTable t = base.groupoid.table();
    const std::size_t n = t.size();
    std::string name = base.name;
    const unsigned edits = 1 + pick(3);
    for (unsigned k = 0; k < edits; ++k) {
      const Elem a = pick(n), b = pick(n);
      switch (pick(4)) {
        case 0:
          t.set(a, b, pick(n));
          name += "/redirect";
          break;
        case 1:
          t.set(a, b, std::nullopt);
          name += "/remove";
          break;
        case 2: {
          // Add a product on some undefined pair if there is one.
          bool done = false;
          for (Elem x = 0; x < n && !done; ++x)
            for (Elem y = 0; y < n && !done; ++y) {
              const Elem u = (a + x) % n, v = (b + y) % n;
              if (!t.product(u, v)) {
                t.set(u, v, pick(n));
                done = true;
              }
            }
          name += "/add";
          break;
        }
        default:
          for (Elem y = 0; y < n; ++y) {
            auto pa = t.product(a, y), pb = t.product(b, y);
            t.set(a, y, pb);
            t.set(b, y, pa);
          }
          name += "/swap";
      }
    }
    out.push_back({std::move(name), std::move(t)});
  }
  return out;
}

}  // namespace grpd
