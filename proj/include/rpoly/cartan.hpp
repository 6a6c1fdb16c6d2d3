#pragma once

#include <string>
#include <string_view>

#include "rpoly/lattice.hpp"

namespace rpoly {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// Cartan datum of a finite irreducible root system.
///
/// `matrix()(i, j)` is the pairing of the simple root alpha_j with the simple coroot
/// alpha_i^vee. Simple roots are numbered in the Bourbaki convention (B_n: alpha_n short,
/// C_n: alpha_n long, G_2: alpha_1 short, F_4: alpha_3 and alpha_4 short).
class CartanDatum {
 public:
  /// The standard matrix for the given type. Throws InvalidCartanError for a type that
  /// does not exist (A0, B1, D3, E9, ...).
  static CartanDatum standard(Family family, int rank);

  /// Validates `matrix` against the declared type.
  static CartanDatum from_matrix(Family family, int rank, const IntMatrix& matrix);

  /// Parses labels such as "A2", "b3", "G2".
  static CartanDatum parse(std::string_view label);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::string label() const;

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_ && a.matrix_ == b.matrix_;
  }

 private:
  CartanDatum(Family family, int rank, IntMatrix matrix)
      : family_(family), rank_(rank), matrix_(std::move(matrix)) {}

  Family family_;
  int rank_;
  IntMatrix matrix_;
};

/// Structural checks independent of the declared type: diagonal 2, off-diagonal entries in
/// {0,-1,-2,-3} with symmetric zero pattern, symmetrizable and positive definite.
/// Returns an empty string when valid, otherwise a diagnostic.
std::string cartan_matrix_diagnostic(const IntMatrix& matrix);

}  // namespace rpoly
