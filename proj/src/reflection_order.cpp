#include "rpoly/reflection_order.hpp"

#include <algorithm>
#include <set>

#include "rpoly/errors.hpp"

namespace rpoly {

ReflectionOrder::ReflectionOrder(std::vector<int> sequence) : sequence_(std::move(sequence)) {
  position_.assign(sequence_.size(), -1);
  for (std::size_t p = 0; p < sequence_.size(); ++p) {
    const int r = sequence_[p];
    if (r < 0 || r >= static_cast<int>(sequence_.size()) || position_[r] != -1)
      throw PreconditionError("reflection order is not a permutation of the positive roots");
    position_[r] = static_cast<int>(p);
  }
}

ReflectionOrder ReflectionOrder::from_reduced_word(const WeylGroup& group,
                                                   std::span<const int> word) {
  const RootSystem& rs = group.roots();
  if (static_cast<int>(word.size()) != rs.num_positive())
    throw PreconditionError("word has length " + std::to_string(word.size()) +
                            " but the longest element has length " +
                            std::to_string(rs.num_positive()));
  if (group.from_word(word) != group.longest() || !group.is_reduced(word))
    throw PreconditionError("word is not a reduced word of the longest element");
  std::vector<int> sequence;
  WeylElem prefix = group.identity();
  for (int i : word) {
    const RootId beta = group.act(prefix, rs.simple_root(i));
    if (!rs.is_positive(beta)) throw ConsistencyError("reduced word produced a negative root");
    sequence.push_back(beta);
    prefix = group.right_mul_simple(prefix, i);
  }
  return ReflectionOrder(std::move(sequence));
}

bool is_convex(const RootSystem& rs, const ReflectionOrder& order) {
  const int n = rs.num_positive();
  const int l = rs.rank();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!order.precedes(a, b)) continue;
      const RootCoords& va = rs.positive_root(a).coeffs;
      const RootCoords& vb = rs.positive_root(b).coeffs;
      int pi = -1, pj = -1, det = 0;
      for (int i = 0; i < l && det == 0; ++i)
        for (int j = i + 1; j < l && det == 0; ++j) {
          det = va(i) * vb(j) - va(j) * vb(i);
          pi = i;
          pj = j;
        }
      if (det == 0) throw ConsistencyError("distinct positive roots are proportional");
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        const RootCoords& vc = rs.positive_root(c).coeffs;
        // Cramer on the chosen 2x2 minor, then verify the full combination.
        const int x = vc(pi) * vb(pj) - vc(pj) * vb(pi);
        const int y = va(pi) * vc(pj) - va(pj) * vc(pi);
        if (det * vc != x * va + y * vb) continue;
        const bool positive = det > 0 ? (x > 0 && y > 0) : (x < 0 && y < 0);
        if (positive && !(order.precedes(a, c) && order.precedes(c, b))) return false;
      }
    }
  }
  return true;
}

std::vector<ReflectionOrder> all_reflection_orders(const WeylGroup& group) {
  std::vector<ReflectionOrder> out;
  std::set<std::vector<int>> seen;
  for (const auto& word : reduced_words(group, group.longest())) {
    ReflectionOrder order = ReflectionOrder::from_reduced_word(group, word);
    if (seen.insert(order.sequence()).second) out.push_back(std::move(order));
  }
  return out;
}

std::vector<int> lex_min_reduced_word(const WeylGroup& group) {
  std::vector<int> word;
  WeylElem w = group.longest();
  while (group.length(w) > 0) {
    int i = 0;
    while (!group.has_left_descent(w, i)) ++i;
    word.push_back(i);
    w = group.left_mul_simple(i, w);
  }
  return word;
}

ReflectionOrder default_reflection_order(const WeylGroup& group) {
  const auto word = lex_min_reduced_word(group);
  return ReflectionOrder::from_reduced_word(group, word);
}

std::string root_name(const RootSystem& rs, int positive_index) {
  const RootCoords& c = rs.positive_root(positive_index).coeffs;
  std::string out;
  for (int i = 0; i < rs.rank(); ++i) {
    if (c(i) == 0) continue;
    if (!out.empty()) out += "+";
    if (c(i) != 1) out += std::to_string(c(i));
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

std::string describe(const RootSystem& rs, const ReflectionOrder& order) {
  std::string out;
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (p > 0) out += " < ";
    out += root_name(rs, order.at(p));
  }
  return out;
}

}  // namespace rpoly
