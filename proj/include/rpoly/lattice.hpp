#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <functional>
#include <string>

namespace rpoly {

/// Largest rank handled by the fixed-capacity lattice types (E8).
inline constexpr int kMaxRank = 8;

/// Column vector over a lattice basis. Storage is inline (no heap), capacity kMaxRank.
template <typename Scalar>
using LatticeVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxRank, 1>;

template <typename Scalar>
using LatticeMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxRank, kMaxRank>;

using IntVector = LatticeVector<int>;
using IntMatrix = LatticeMatrix<int>;

/// Coordinates of a root in the simple-root basis.
using RootCoords = IntVector;
/// Coordinates of an element of the coroot lattice Q^vee in the simple-coroot basis.
using Coweight = IntVector;

inline IntVector zero_vector(int rank) { return IntVector::Zero(rank); }

inline IntVector unit_vector(int rank, int i) {
  IntVector v = IntVector::Zero(rank);
  v(i) = 1;
  return v;
}

template <typename Derived>
bool all_nonnegative(const Eigen::MatrixBase<Derived>& v) {
  return (v.array() >= 0).all();
}

/// Coordinate sum; this is the pairing with rho when `v` is in the simple-coroot basis.
template <typename Derived>
int height(const Eigen::MatrixBase<Derived>& v) {
  return v.sum();
}

inline bool lattice_equal(const IntVector& a, const IntVector& b) {
  return a.size() == b.size() && a == b;
}

std::string to_string(const IntVector& v);

struct LatticeHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
      h ^= std::hash<int>{}(v(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct LatticeEqual {
  bool operator()(const IntVector& a, const IntVector& b) const noexcept {
    return lattice_equal(a, b);
  }
};

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace rpoly
