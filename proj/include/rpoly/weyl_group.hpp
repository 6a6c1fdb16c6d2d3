#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rpoly/root_system.hpp"

namespace rpoly {

/// Element of a finite Weyl group, identified by its position in the group's element table.
/// Elements are canonical: two handles are equal iff the elements act identically on roots.
struct WeylElem {
  std::uint32_t id = 0;
  friend auto operator<=>(WeylElem, WeylElem) = default;
};

/// Default size guard for explicit enumeration of a finite Weyl group.
inline constexpr std::size_t kDefaultGroupGuard = 1'000'000;

/// A finite Weyl group with every element materialized.
///
/// Each element is stored as the permutation it induces on the root set; ids are assigned in
/// breadth-first order from the identity (so id 0 is e and ids are sorted by length). Every
/// element carries the reduced word found by the search.
class WeylGroup {
 public:
  /// Throws SizeGuardError if the group has more than `guard` elements.
  explicit WeylGroup(RootSystem rs, std::size_t guard = kDefaultGroupGuard);

  const RootSystem& roots() const noexcept { return rs_; }
  int rank() const noexcept { return rs_.rank(); }
  std::size_t size() const noexcept { return length_.size(); }

  WeylElem identity() const noexcept { return {0}; }
  WeylElem simple(int i) const noexcept { return {right_[static_cast<std::size_t>(i)]}; }
  WeylElem longest() const noexcept { return longest_; }
  WeylElem element(std::size_t id) const noexcept { return {static_cast<std::uint32_t>(id)}; }
  std::vector<WeylElem> elements() const;

  int length(WeylElem w) const noexcept { return length_[w.id]; }
  /// l(u, v) = l(v) - l(u).
  int length_diff(WeylElem u, WeylElem v) const noexcept { return length(v) - length(u); }

  WeylElem multiply(WeylElem u, WeylElem v) const;
  WeylElem inverse(WeylElem w) const noexcept { return {inverse_[w.id]}; }
  WeylElem left_mul_simple(int i, WeylElem w) const noexcept {
    return {left_[static_cast<std::size_t>(w.id) * rank() + i]};
  }
  WeylElem right_mul_simple(WeylElem w, int i) const noexcept {
    return {right_[static_cast<std::size_t>(w.id) * rank() + i]};
  }
  /// s_beta for a positive root index.
  WeylElem reflection(int positive_index) const noexcept { return {reflection_[positive_index]}; }
  /// w * s_beta.
  WeylElem right_reflect(WeylElem w, int positive_index) const {
    return multiply(w, reflection(positive_index));
  }

  RootId act(WeylElem w, RootId r) const noexcept {
    return perm_[static_cast<std::size_t>(w.id) * rs_.num_roots() + r];
  }
  Coweight act(WeylElem w, const Coweight& mu) const { return coweight_action_[w.id] * mu; }
  const IntMatrix& coweight_matrix(WeylElem w) const noexcept { return coweight_action_[w.id]; }

  /// Images w(alpha_1), ..., w(alpha_l); the canonical key of w.
  std::vector<RootId> root_images(WeylElem w) const;
  const std::vector<int>& reduced_word(WeylElem w) const noexcept { return words_[w.id]; }
  /// Product s_{i_1} ... s_{i_k}; indices are 0-based.
  WeylElem from_word(std::span<const int> word) const;
  bool is_reduced(std::span<const int> word) const;

  bool has_left_descent(WeylElem w, int i) const noexcept {
    return !rs_.is_positive(act(inverse(w), rs_.simple_root(i)));
  }
  bool has_right_descent(WeylElem w, int i) const noexcept {
    return !rs_.is_positive(act(w, rs_.simple_root(i)));
  }

  /// Bruhat order.
  bool bruhat_leq(WeylElem u, WeylElem v) const;

 private:
  bool bruhat_leq_recursive(WeylElem u, WeylElem v) const;

  RootSystem rs_;
  std::vector<RootId> perm_;
  std::vector<int> length_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> reflection_;
  std::vector<std::uint32_t> mult_;    // dense table for small groups
  std::vector<std::uint64_t> bruhat_;  // dense bit table for small groups
  std::vector<IntMatrix> coweight_action_;
  std::vector<std::vector<int>> words_;
  WeylElem longest_;
};

std::vector<WeylElem> all_elements(const WeylGroup& group);

/// All reduced words of w (0-based indices), in lexicographic order.
std::vector<std::vector<int>> reduced_words(const WeylGroup& group, WeylElem w);

struct WeylElemHash {
  std::size_t operator()(WeylElem w) const noexcept { return std::hash<std::uint32_t>{}(w.id); }
};

}  // namespace rpoly
