#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "rpoly/cartan.hpp"
#include "rpoly/lattice.hpp"

namespace rpoly {

/// Signed reference to a root. Values 0..N-1 are the positive roots in the order of
/// RootSystem::positive_roots(); N..2N-1 are their negatives.
using RootId = int;

struct Root {
  RootCoords coeffs;  ///< simple-root basis
  Coweight coroot;    ///< simple-coroot basis
  int height = 0;
};

class RootSystem {
 public:
  /// Closure of the simple roots under simple reflections. Positive roots are sorted by
  /// height, then lexicographically, so alpha_i has id i-1.
  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const noexcept { return datum_; }
  int rank() const noexcept { return datum_.rank(); }
  int num_positive() const noexcept { return static_cast<int>(positive_.size()); }
  int num_roots() const noexcept { return 2 * num_positive(); }

  const std::vector<Root>& positive_roots() const noexcept { return positive_; }
  const Root& positive_root(int i) const { return positive_.at(i); }

  bool is_positive(RootId r) const noexcept { return r < num_positive(); }
  RootId negate(RootId r) const noexcept {
    return is_positive(r) ? r + num_positive() : r - num_positive();
  }
  /// Index of the positive root in {r, -r}.
  int positive_part(RootId r) const noexcept { return is_positive(r) ? r : r - num_positive(); }

  RootCoords coeffs(RootId r) const;
  Coweight coroot(RootId r) const;

  RootId simple_root(int i) const noexcept { return i; }
  RootId highest_root() const noexcept { return highest_; }

  /// <beta, gamma^vee>.
  int pairing(RootId beta, RootId gamma) const noexcept {
    return pairing_(positive_part(beta), positive_part(gamma)) * sign(beta) * sign(gamma);
  }
  /// <beta, mu> for mu in the coroot lattice.
  int pair_with_coweight(RootId beta, const Coweight& mu) const {
    return sign(beta) * mu.dot(functional_[positive_part(beta)]);
  }

  /// s_{beta_i}(root j), beta_i positive.
  RootId reflect(int positive_index, RootId r) const noexcept {
    return reflection_table_[static_cast<std::size_t>(positive_index) * num_roots() + r];
  }
  RootId simple_reflect(int i, RootId r) const noexcept { return reflect(i, r); }

  /// s_i applied to a coweight: mu - <alpha_i, mu> alpha_i^vee.
  Coweight simple_reflect_coweight(int i, const Coweight& mu) const;

  std::optional<RootId> find(const RootCoords& coeffs) const;

 private:
  int sign(RootId r) const noexcept { return is_positive(r) ? 1 : -1; }

  CartanDatum datum_;
  std::vector<Root> positive_;
  std::vector<IntVector> functional_;  // (<beta, alpha_i^vee>)_i per positive root
  Eigen::MatrixXi pairing_;            // <beta_i, beta_j^vee> over positive roots
  std::vector<RootId> reflection_table_;
  std::unordered_map<IntVector, RootId, LatticeHash, LatticeEqual> lookup_;
  RootId highest_ = 0;
};

/// <rho, gamma^vee>: sum of coordinates in the simple-coroot basis.
inline int rho_pairing(const RootSystem&, const Coweight& gamma_vee) { return height(gamma_vee); }

/// Number of positive roots of the irreducible type, from the classification.
int expected_positive_root_count(Family family, int rank);

}  // namespace rpoly
