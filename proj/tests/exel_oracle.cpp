#include "exel_oracle.hpp"

#include <numeric>
#include <set>

namespace oracle {

ExelCongruence::ExelCongruence(const grpd::Groupoid& group, std::size_t max_len,
                               std::size_t slack) {
  const auto n = static_cast<grpd::Elem>(group.size());
  const grpd::Elem one = group.identities().front();
  std::vector<Word> layer = {{}};
  for (std::size_t len = 1; len <= max_len + slack; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (grpd::Elem g = 0; g < n; ++g) {
        Word v = w;
        v.push_back(g);
        next.push_back(v);
      }
    for (const auto& w : next) {
      index_[w] = words_.size();
      words_.push_back(w);
    }
    layer = std::move(next);
  }
  parent_.resize(words_.size());
  std::iota(parent_.begin(), parent_.end(), 0);

  // Each relation instance inside a word joins it with the rewritten word.
  auto splice = [](const Word& w, std::size_t at, std::size_t len, const Word& by) {
    Word out(w.begin(), w.begin() + static_cast<long>(at));
    out.insert(out.end(), by.begin(), by.end());
    out.insert(out.end(), w.begin() + static_cast<long>(at + len), w.end());
    return out;
  };
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word w = words_[i];
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (p + 2 < w.size()) {
        const grpd::Elem a = w[p], b = w[p + 1], c = w[p + 2];
        if (a == group.inverse(b)) unite(i, index_of(splice(w, p, 3, {a, group.mul(b, c)})));
        if (c == group.inverse(b)) unite(i, index_of(splice(w, p, 3, {group.mul(a, b), c})));
      }
      if (p + 1 < w.size() && w[p + 1] == one) unite(i, index_of(splice(w, p, 2, {w[p]})));
    }
  }
  std::size_t reported = 0;
  while (reported < words_.size() && words_[reported].size() <= max_len) ++reported;
  dense_.assign(words_.size(), 0);
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto [it, fresh] = ids.emplace(find(i), ids.size());
    dense_[i] = it->second;
  }
  words_.resize(reported);
  std::set<std::size_t> seen(dense_.begin(), dense_.begin() + static_cast<long>(reported));
  classes_ = seen.size();
}

std::size_t ExelCongruence::find(std::size_t i) const {
  while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
  return i;
}

void ExelCongruence::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a != b) parent_[std::max(a, b)] = std::min(a, b);
}

std::size_t ExelCongruence::index_of(const Word& w) const { return index_.at(w); }

std::size_t ExelCongruence::class_of(const Word& w) const { return dense_[index_of(w)]; }

}  // namespace oracle
