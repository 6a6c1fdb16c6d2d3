#include "rpoly/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "rpoly/errors.hpp"

namespace rpoly {

PairKey pair_key(const AffineElem& y, const AffineElem& w) {
  return {y.cl.id, w.cl.id, w.wt - y.wt};
}

int affine_guard_from_env() {
  const char* raw = std::getenv("RPOLY_GUARD_LEN");
  if (raw == nullptr || *raw == '\0') return kDefaultAffineGuard;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value <= 0) return kDefaultAffineGuard;
  return static_cast<int>(value);
}

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const WeylGroup> finite)
    : finite_(std::move(finite)), guard_(affine_guard_from_env()) {
  const RootSystem& rs = roots();
  s_theta_ = finite_->reflection(rs.highest_root());
  theta_coroot_ = rs.coroot(rs.highest_root());
}

AffineElem AffineWeylGroup::identity() const { return {finite_->identity(), zero_vector(rank())}; }

AffineElem AffineWeylGroup::from_finite(WeylElem x) const { return {x, zero_vector(rank())}; }

AffineElem AffineWeylGroup::translation(const Coweight& lambda) const {
  return {finite_->identity(), lambda};
}

AffineElem AffineWeylGroup::simple(int s) const {
  if (s == 0) return {s_theta_, Coweight(-theta_coroot_)};
  return from_finite(finite_->simple(s - 1));
}

AffineElem AffineWeylGroup::multiply(const AffineElem& x, const AffineElem& y) const {
  // (x t_lambda)(y t_mu) = xy t_{y^{-1}(lambda) + mu}
  return {finite_->multiply(x.cl, y.cl), finite_->act(finite_->inverse(y.cl), x.wt) + y.wt};
}

AffineElem AffineWeylGroup::inverse(const AffineElem& x) const {
  return {finite_->inverse(x.cl), Coweight(-finite_->act(x.cl, x.wt))};
}

AffineRoot AffineWeylGroup::act(const AffineElem& w, const AffineRoot& r) const {
  return {finite_->act(w.cl, r.root), r.level - roots().pair_with_coweight(r.root, w.wt)};
}

bool AffineWeylGroup::is_positive(const AffineRoot& r) const {
  return roots().is_positive(r.root) ? r.level >= 0 : r.level > 0;
}

AffineRoot AffineWeylGroup::simple_root(int s) const {
  if (s == 0) return {roots().negate(roots().highest_root()), 1};
  return {roots().simple_root(s - 1), 0};
}

AffineElem AffineWeylGroup::reflection(const AffineRoot& r) const {
  const RootSystem& rs = roots();
  const int n = rs.is_positive(r.root) ? r.level : -r.level;
  const int alpha = rs.positive_part(r.root);
  return {finite_->reflection(alpha), Coweight(n * rs.coroot(alpha))};
}

int AffineWeylGroup::si_length(const AffineElem& w) const {
  return finite_->length(w.cl) + 2 * height(w.wt);
}

AffineElem AffineWeylGroup::left_mul_simple(int s, const AffineElem& w) const {
  if (s == 0) {
    // s_theta t_{-theta^vee} x t_lambda = s_theta x t_{x^{-1}(-theta^vee) + lambda}
    return {finite_->multiply(s_theta_, w.cl),
            finite_->act(finite_->inverse(w.cl), Coweight(-theta_coroot_)) + w.wt};
  }
  return {finite_->left_mul_simple(s - 1, w.cl), w.wt};
}

bool AffineWeylGroup::si_increases_left(const AffineRoot& beta, const AffineElem& w) const {
  if (!is_positive(beta)) throw PreconditionError("si_increases_left needs a positive real root");
  return roots().is_positive(finite_->act(finite_->inverse(w.cl), beta.root));
}

int AffineWeylGroup::aff_length(const AffineElem& w) const {
  // w(alpha + n delta) = cl(alpha) + (n - <alpha, wt>) delta; only levels up to <alpha, wt>
  // can turn negative.
  const RootSystem& rs = roots();
  int count = 0;
  for (RootId a = 0; a < rs.num_roots(); ++a) {
    const int shift = rs.pair_with_coweight(a, w.wt);
    const int bound = std::max(shift, 0) + 1;
    const bool image_positive_root = rs.is_positive(finite_->act(w.cl, a));
    for (int n = rs.is_positive(a) ? 0 : 1; n <= bound; ++n) {
      const int level = n - shift;
      const bool image_positive = image_positive_root ? level >= 0 : level > 0;
      if (!image_positive) ++count;
    }
  }
  return count;
}

bool AffineWeylGroup::has_left_descent(const AffineElem& w, int s) const {
  return !is_positive(act(inverse(w), simple_root(s)));
}

bool AffineWeylGroup::aff_bruhat_leq(const AffineElem& u_in, const AffineElem& v_in) const {
  int lv = aff_length(v_in);
  if (lv > guard_)
    throw SizeGuardError("affine Bruhat test refused: length " + std::to_string(lv) +
                         " exceeds the guard " + std::to_string(guard_) +
                         " (set RPOLY_GUARD_LEN to raise it)");
  AffineElem u = u_in;
  AffineElem v = v_in;
  int lu = aff_length(u);
  // Lifting property: for s with sv < v, u <= v iff min(u, su) <= sv.
  while (true) {
    if (lu > lv) return false;
    if (lu == lv) return u == v;
    int s = 0;
    while (!has_left_descent(v, s)) ++s;
    if (has_left_descent(u, s)) {
      u = left_mul_simple(s, u);
      --lu;
    }
    v = left_mul_simple(s, v);
    --lv;
  }
}

Coweight AffineWeylGroup::dominant_shift(const AffineElem& y, const AffineElem& w) const {
  const RootSystem& rs = roots();
  const int l = rank();
  IntVector need(l);
  for (int i = 0; i < l; ++i)
    need(i) = std::max({1, 1 - rs.pair_with_coweight(i, y.wt), 1 - rs.pair_with_coweight(i, w.wt)});
  // The Cartan matrix has nonpositive off-diagonal entries, so raising coordinates one at a time
  // to their least feasible value converges to the least solution.
  Coweight lambda = zero_vector(l);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < l; ++i) {
      const int have = rs.pair_with_coweight(i, lambda);
      if (have < need(i)) {
        lambda(i) += (need(i) - have + 1) / 2;
        changed = true;
      }
    }
  }
  return lambda;
}

bool AffineWeylGroup::si_leq_with_shift(const AffineElem& y, const AffineElem& w,
                                        const Coweight& lambda) const {
  return aff_bruhat_leq(translate(y, lambda), translate(w, lambda));
}

bool AffineWeylGroup::si_leq(const AffineElem& y, const AffineElem& w) const {
  if (y == w) return true;
  PairKey key = pair_key(y, w);
  {
    std::lock_guard lock(cache_mutex_);
    auto it = si_leq_cache_.find(key);
    if (it != si_leq_cache_.end()) return it->second;
  }
  // Right translation preserves the order, so work with wt(y) = 0.
  const AffineElem y0{y.cl, zero_vector(rank())};
  const AffineElem w0{w.cl, key.diff};
  const bool result = si_leq_with_shift(y0, w0, dominant_shift(y0, w0));
  std::lock_guard lock(cache_mutex_);
  si_leq_cache_.emplace(std::move(key), result);
  return result;
}

bool AffineWeylGroup::si_leq_uncached(const AffineElem& y, const AffineElem& w) const {
  if (y == w) return true;
  return si_leq_with_shift(y, w, dominant_shift(y, w));
}

}  // namespace rpoly
