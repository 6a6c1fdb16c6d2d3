#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "rpoly/laurent.hpp"
#include "rpoly/reflection_order.hpp"

namespace rpoly {

/// y = y_0 < y_1 < ... < y_k = w with y_j = y_{j-1} s_{beta_j} and labels increasing.
struct BruhatChain {
  std::vector<WeylElem> elements;
  std::vector<int> labels;  ///< positive-root indices
  int length() const noexcept { return static_cast<int>(labels.size()); }
};

/// Ordinary R-polynomials of a finite Weyl group by the defining recursion, memoized over all
/// pairs. The pivot is the smallest simple s with sv < v.
class FiniteRTable {
 public:
  explicit FiniteRTable(const WeylGroup& group);

  const LaurentPoly& operator()(WeylElem u, WeylElem v) const;
  /// One unfolding of the recursion at a chosen left descent s of v, then the memoized values.
  LaurentPoly with_pivot(WeylElem u, WeylElem v, int s) const;

 private:
  const WeylGroup& group_;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<LaurentPoly>> memo_;
};

LaurentPoly r_recursive(const WeylGroup& group, WeylElem u, WeylElem v);

std::vector<BruhatChain> enumerate_bruhat_chains(const WeylGroup& group, WeylElem y, WeylElem w,
                                                 const ReflectionOrder& order);

/// Sum over chains of q^{(l(y,w) - l(chain))/2} (q - 1)^{l(chain)}.
LaurentPoly r_dyer(const WeylGroup& group, WeylElem y, WeylElem w, const ReflectionOrder& order);

}  // namespace rpoly
