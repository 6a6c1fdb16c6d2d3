#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "rpoly/weyl_group.hpp"

namespace rpoly {

/// w = cl * t_wt in W_af = W x| Q^vee.
struct AffineElem {
  WeylElem cl;
  Coweight wt;

  friend bool operator==(const AffineElem& a, const AffineElem& b) {
    return a.cl == b.cl && lattice_equal(a.wt, b.wt);
  }
};

struct AffineElemHash {
  std::size_t operator()(const AffineElem& w) const noexcept {
    std::size_t h = LatticeHash{}(w.wt);
    hash_combine(h, w.cl.id);
    return h;
  }
};

/// Real affine root alpha + level * delta.
struct AffineRoot {
  RootId root = 0;
  int level = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// Default refusal threshold for the affine Bruhat test, overridable via RPOLY_GUARD_LEN.
inline constexpr int kDefaultAffineGuard = 200;

/// Key of a pair (y, w) up to simultaneous right translation: (cl(y), cl(w), wt(w) - wt(y)).
struct PairKey {
  std::uint32_t y = 0;
  std::uint32_t w = 0;
  Coweight diff;
  friend bool operator==(const PairKey& a, const PairKey& b) {
    return a.y == b.y && a.w == b.w && lattice_equal(a.diff, b.diff);
  }
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    std::size_t h = LatticeHash{}(k.diff);
    hash_combine(h, k.y);
    hash_combine(h, k.w);
    return h;
  }
};

PairKey pair_key(const AffineElem& y, const AffineElem& w);

/// The affine Weyl group attached to a finite Weyl group. Affine simple reflections are indexed
/// 0..l, where 0 is s_theta t_{-theta^vee} and i >= 1 is the finite s_i.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const WeylGroup> finite);

  const WeylGroup& finite() const noexcept { return *finite_; }
  const std::shared_ptr<const WeylGroup>& finite_ptr() const noexcept { return finite_; }
  const RootSystem& roots() const noexcept { return finite_->roots(); }
  int rank() const noexcept { return finite_->rank(); }

  AffineElem identity() const;
  AffineElem make(WeylElem cl, const Coweight& wt) const { return {cl, wt}; }
  AffineElem from_finite(WeylElem x) const;
  AffineElem translation(const Coweight& lambda) const;
  /// Affine simple reflection s (0..l).
  AffineElem simple(int s) const;

  AffineElem multiply(const AffineElem& x, const AffineElem& y) const;
  AffineElem inverse(const AffineElem& x) const;
  /// x * t_mu.
  AffineElem translate(const AffineElem& x, const Coweight& mu) const { return {x.cl, x.wt + mu}; }

  AffineRoot act(const AffineElem& w, const AffineRoot& r) const;
  bool is_positive(const AffineRoot& r) const;
  /// The affine simple root alpha_s (alpha_0 = -theta + delta).
  AffineRoot simple_root(int s) const;
  /// s_{alpha + n delta} = s_alpha t_{n alpha^vee}.
  AffineElem reflection(const AffineRoot& r) const;
  AffineElem right_reflect(const AffineElem& w, const AffineRoot& r) const {
    return multiply(w, reflection(r));
  }

  /// l(cl(w)) + 2 <rho, wt(w)>.
  int si_length(const AffineElem& w) const;
  /// si_length(w) - si_length(y).
  int si_length_diff(const AffineElem& y, const AffineElem& w) const {
    return si_length(w) - si_length(y);
  }
  AffineElem left_mul_simple(int s, const AffineElem& w) const;
  AffineElem right_mul_simple(const AffineElem& w, int s) const { return multiply(w, simple(s)); }
  /// Whether l^{inf/2}(s_beta w) > l^{inf/2}(w) for positive real beta = alpha + m delta;
  /// decided by cl(w)^{-1}(alpha) > 0.
  bool si_increases_left(const AffineRoot& beta, const AffineElem& w) const;

  /// Coxeter length: number of positive real roots sent to negative ones.
  int aff_length(const AffineElem& w) const;
  bool has_left_descent(const AffineElem& w, int s) const;
  /// Ordinary Bruhat order on W_af. Throws SizeGuardError if aff_length(v) exceeds the guard.
  bool aff_bruhat_leq(const AffineElem& u, const AffineElem& v) const;

  /// Least lambda in Q^vee_+ with <alpha_i, wt(y)+lambda> >= 1 and <alpha_i, wt(w)+lambda> >= 1.
  Coweight dominant_shift(const AffineElem& y, const AffineElem& w) const;
  /// Semi-infinite Bruhat order. Results are cached per translation class of the pair.
  bool si_leq(const AffineElem& y, const AffineElem& w) const;
  /// si_leq evaluated with an explicit shift; lambda must make both translates regular dominant.
  bool si_leq_with_shift(const AffineElem& y, const AffineElem& w, const Coweight& lambda) const;
  /// si_leq without the cache and without moving wt(y) to the origin first.
  bool si_leq_uncached(const AffineElem& y, const AffineElem& w) const;
  bool si_less(const AffineElem& y, const AffineElem& w) const { return !(y == w) && si_leq(y, w); }

  int guard() const noexcept { return guard_; }
  void set_guard(int guard) noexcept { guard_ = guard; }

 private:
  std::shared_ptr<const WeylGroup> finite_;
  int guard_ = kDefaultAffineGuard;
  WeylElem s_theta_;
  Coweight theta_coroot_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<PairKey, bool, PairKeyHash> si_leq_cache_;
};

/// Guard from RPOLY_GUARD_LEN if set to a positive integer, else kDefaultAffineGuard.
int affine_guard_from_env();

}  // namespace rpoly
