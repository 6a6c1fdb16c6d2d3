#pragma once

#include <span>
#include <string>
#include <vector>

#include "rpoly/weyl_group.hpp"

namespace rpoly {

/// Total order on the positive roots, stored as the sequence beta_1 < beta_2 < ... < beta_N of
/// positive-root indices.
class ReflectionOrder {
 public:
  ReflectionOrder() = default;
  /// Takes a permutation of 0..N-1. Convexity is not checked here; see is_convex.
  explicit ReflectionOrder(std::vector<int> sequence);

  /// beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}) for a reduced word (0-based) of w_0.
  /// Throws PreconditionError if the word is not a reduced word of the longest element.
  static ReflectionOrder from_reduced_word(const WeylGroup& group, std::span<const int> word);

  const std::vector<int>& sequence() const noexcept { return sequence_; }
  std::size_t size() const noexcept { return sequence_.size(); }
  /// Position of a positive root in the order.
  int position(int positive_index) const { return position_.at(positive_index); }
  int at(std::size_t pos) const { return sequence_.at(pos); }
  bool precedes(int a, int b) const { return position(a) < position(b); }

  friend bool operator==(const ReflectionOrder&, const ReflectionOrder&) = default;

 private:
  std::vector<int> sequence_;
  std::vector<int> position_;
};

/// Whenever a < b and c = x a + y b with x, y > 0, then a < c < b.
bool is_convex(const RootSystem& rs, const ReflectionOrder& order);

/// Orders coming from all reduced words of w_0, deduplicated, in lexicographic word order.
std::vector<ReflectionOrder> all_reflection_orders(const WeylGroup& group);

/// Lexicographically smallest reduced word of w_0 (0-based).
std::vector<int> lex_min_reduced_word(const WeylGroup& group);

ReflectionOrder default_reflection_order(const WeylGroup& group);

/// "a1 < a1+a2 < a2" style rendering.
std::string describe(const RootSystem& rs, const ReflectionOrder& order);
std::string root_name(const RootSystem& rs, int positive_index);

}  // namespace rpoly
