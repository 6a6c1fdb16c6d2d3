#include "rpoly/cartan.hpp"

#include <Eigen/Cholesky>
#include <cctype>
#include <charconv>
#include <sstream>

#include "rpoly/errors.hpp"

namespace rpoly {

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? "," : "") << v(i);
  out << ')';
  return out.str();
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

namespace {

bool type_exists(Family family, int rank) {
  switch (family) {
    case Family::A:
      return rank >= 1 && rank <= kMaxRank;
    case Family::B:
      return rank >= 2 && rank <= kMaxRank;
    case Family::C:
      return rank >= 2 && rank <= kMaxRank;
    case Family::D:
      return rank >= 4 && rank <= kMaxRank;
    case Family::E:
      return rank >= 6 && rank <= 8;
    case Family::F:
      return rank == 4;
    case Family::G:
      return rank == 2;
  }
  return false;
}

// Sets the symmetric pair of entries for an edge i -- j of the Dynkin diagram.
// `toward_j` is the pairing <alpha_j, alpha_i^vee>.
void link(IntMatrix& a, int i, int j, int toward_j = -1, int toward_i = -1) {
  a(i, j) = toward_j;
  a(j, i) = toward_i;
}

IntMatrix standard_matrix(Family family, int n) {
  IntMatrix a = IntMatrix::Zero(n, n);
  a.diagonal().setConstant(2);
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      // alpha_{n-1} long, alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      link(a, n - 2, n - 1, -1, -2);
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -2, -1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-...-n, with 2 attached to 4.
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::F:
      link(a, 0, 1);
      link(a, 1, 2, -1, -2);
      link(a, 2, 3);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long.
      link(a, 0, 1, -3, -1);
      break;
  }
  return a;
}

}  // namespace

std::string cartan_matrix_diagnostic(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  if (n == 0 || a.cols() != n) return "Cartan matrix must be square and nonempty";
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i, i) != 2) return "diagonal entry " + std::to_string(i + 1) + " is not 2";
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0 || a(i, j) < -3)
        return "off-diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") outside {0,-1,-2,-3}";
      if ((a(i, j) == 0) != (a(j, i) == 0))
        return "zero pattern not symmetric at (" + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + ")";
    }
  }
  // Symmetrize: find d > 0 with d_i a_ij = d_j a_ji by propagating along the diagram.
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  for (Eigen::Index start = 0; start < n; ++start) {
    if (d(start) != 0) continue;
    d(start) = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (d(i) == 0) continue;
        for (Eigen::Index j = 0; j < n; ++j) {
          if (i == j || a(i, j) == 0) continue;
          const double want = d(i) * a(i, j) / a(j, i);
          if (d(j) == 0) {
            d(j) = want;
            changed = true;
          } else if (std::abs(d(j) - want) > 1e-9) {
            return "matrix is not symmetrizable";
          }
        }
      }
    }
  }
  const Eigen::MatrixXd sym = d.asDiagonal() * a.cast<double>();
  Eigen::LLT<Eigen::MatrixXd> llt(sym);
  if (llt.info() != Eigen::Success) return "symmetrized matrix is not positive definite";
  return {};
}

CartanDatum CartanDatum::standard(Family family, int rank) {
  if (!type_exists(family, rank))
    throw InvalidCartanError(std::string("no root system of type ") + family_letter(family) +
                             std::to_string(rank));
  return CartanDatum(family, rank, standard_matrix(family, rank));
}

CartanDatum CartanDatum::from_matrix(Family family, int rank, const IntMatrix& matrix) {
  if (auto diag = cartan_matrix_diagnostic(matrix); !diag.empty())
    throw InvalidCartanError("invalid Cartan matrix: " + diag);
  if (matrix.rows() != rank)
    throw InvalidCartanError("Cartan matrix size " + std::to_string(matrix.rows()) +
                             " does not match rank " + std::to_string(rank));
  CartanDatum expected = standard(family, rank);
  if (expected.matrix() != matrix)
    throw InvalidCartanError("Cartan matrix is not the standard matrix of type " +
                             expected.label());
  return expected;
}

CartanDatum CartanDatum::parse(std::string_view label) {
  if (label.size() < 2) throw ParseError("expected a type label such as A2", 0);
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (letter < 'A' || letter > 'G') throw ParseError("unknown root system family", 0);
  int rank = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), rank);
  if (ec != std::errc() || ptr != label.data() + label.size())
    throw ParseError("malformed rank in type label", 1);
  return standard(static_cast<Family>(letter - 'A'), rank);
}

std::string CartanDatum::label() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

}  // namespace rpoly
