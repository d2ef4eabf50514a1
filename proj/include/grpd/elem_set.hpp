#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace grpd {

/// Position of an element in its structure's canonical (input) order.
using Elem = std::uint32_t;

/// A subset of the elements of one finite structure of known size.
///
/// Canonical order (used by every enumeration that returns subsets):
/// smaller sets first, ties broken lexicographically on the sorted member
/// indices.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe) : bits_(universe) {}
  ElemSet(std::size_t universe, std::initializer_list<Elem> members)
      : bits_(universe) {
    for (Elem e : members) bits_.set(e);
  }

  static ElemSet full(std::size_t universe) {
    ElemSet s(universe);
    s.bits_.set();
    return s;
  }

  template <class Range>
  static ElemSet of(std::size_t universe, const Range& members) {
    ElemSet s(universe);
    for (auto e : members) s.bits_.set(static_cast<std::size_t>(e));
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Elem e) const { return e < bits_.size() && bits_.test(e); }

  void insert(Elem e) { bits_.set(e); }
  void erase(Elem e) { bits_.reset(e); }

  bool subset_of(const ElemSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }

  ElemSet& operator|=(const ElemSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = bits_.find_next(i))
      out.push_back(static_cast<Elem>(i));
    return out;
  }

  /// Smallest member; the set must be nonempty.
  Elem first() const { return static_cast<Elem>(bits_.find_first()); }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.bits_ == b.bits_;
  }

  friend std::strong_ordering operator<=>(const ElemSet& a, const ElemSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    auto i = a.bits_.find_first();
    auto j = b.bits_.find_first();
    while (i != boost::dynamic_bitset<>::npos) {
      if (i != j) return i <=> j;
      i = a.bits_.find_next(i);
      j = b.bits_.find_next(j);
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = bits_.size();
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = bits_.find_next(i))
      h = h * 1000003u ^ i;
    return h;
  }

 private:
  boost::dynamic_bitset<> bits_;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace grpd
