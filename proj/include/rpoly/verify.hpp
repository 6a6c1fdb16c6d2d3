#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rpoly/rpoly.hpp"

namespace rpoly {

struct CheckResult {
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t instances = 0;
  bool passed = true;
  std::string failure;  ///< first counterexample
  double seconds = 0;

  /// Records one instance; keeps only the first failure message.
  void record(bool ok, const std::function<std::string()>& describe_failure);
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  void append(const VerifyReport& other);
};

/// All cl(x) t_lambda with every coordinate of lambda in [-radius, radius], sorted.
std::vector<AffineElem> elements_in_radius(const AffineWeylGroup& aff, int radius);
/// All lambda with coordinates in [lo, hi].
std::vector<Coweight> coweight_box(int rank, int lo, int hi);

/// R(w,w) = 1, vanishing off the order, the left recursion, the alternating sum over
/// x t_lambda, translation invariance, the recursions for the restricted sums, and the degree
/// of every nonzero value, over all pairs of elements within `radius`.
VerifyReport check_identity_suite(const PeriodicEngine& engine, int radius);
/// Restricted decomposition over all pairs within radius (or `samples` evenly spread pairs
/// with nonnegative weight difference, when samples > 0).
VerifyReport check_decomposition_suite(const PeriodicEngine& engine, int radius,
                                       std::size_t samples = 0);
/// Path model = double Bruhat model on all pairs, and the run bijection on enumerated paths.
VerifyReport check_model_equivalence(const PeriodicEngine& engine, int radius);
/// Finite agreement of the recursion, the chain formula, and the path model, every order.
VerifyReport check_finite_suite(const Setup& setup);
/// Number of elements strictly between y and w for every comparable pair with gap 2.
VerifyReport check_interval_suite(const AffineWeylGroup& aff, int radius);
/// Identical values across every reflection order.
VerifyReport check_order_independence(const Setup& setup, int radius);
/// Shift-doubling invariance of si_leq and the left-multiplication criterion.
VerifyReport check_si_order(const AffineWeylGroup& aff, int radius, std::size_t random_samples,
                            unsigned seed);

/// Elements strictly between y and w when l(y, w) = 2, found among y s_beta for affine
/// reflections s_beta one step above y.
std::vector<AffineElem> interval_middle(const AffineWeylGroup& aff, const AffineElem& y,
                                        const AffineElem& w);

}  // namespace rpoly
