#include "rpoly/finite_r.hpp"

#include <functional>
#include <map>

#include "rpoly/errors.hpp"

namespace rpoly {

FiniteRTable::FiniteRTable(const WeylGroup& group)
    : group_(group), memo_(group.size() * group.size()) {}

const LaurentPoly& FiniteRTable::operator()(WeylElem u, WeylElem v) const {
  const std::size_t key = static_cast<std::size_t>(u.id) * group_.size() + v.id;
  {
    std::lock_guard lock(mutex_);
    if (memo_[key]) return *memo_[key];
  }
  LaurentPoly value;
  if (!group_.bruhat_leq(u, v)) {
    value = LaurentPoly();
  } else if (u == v) {
    value = LaurentPoly(1);
  } else {
    int s = 0;
    while (!group_.has_left_descent(v, s)) ++s;
    value = with_pivot(u, v, s);
  }
  std::lock_guard lock(mutex_);
  if (!memo_[key]) memo_[key] = std::move(value);
  return *memo_[key];
}

LaurentPoly FiniteRTable::with_pivot(WeylElem u, WeylElem v, int s) const {
  if (!group_.has_left_descent(v, s)) throw PreconditionError("pivot is not a left descent");
  if (!group_.bruhat_leq(u, v)) return {};
  if (u == v) return LaurentPoly(1);
  const WeylElem su = group_.left_mul_simple(s, u);
  const WeylElem sv = group_.left_mul_simple(s, v);
  if (group_.has_left_descent(u, s)) return (*this)(su, sv);
  return LaurentPoly::q() * (*this)(su, sv) + LaurentPoly::q_minus_one_pow(1) * (*this)(u, sv);
}

LaurentPoly r_recursive(const WeylGroup& group, WeylElem u, WeylElem v) {
  return FiniteRTable(group)(u, v);
}

std::vector<BruhatChain> enumerate_bruhat_chains(const WeylGroup& group, WeylElem y, WeylElem w,
                                                 const ReflectionOrder& order) {
  std::vector<BruhatChain> out;
  if (!group.bruhat_leq(y, w)) return out;
  BruhatChain current;
  current.elements.push_back(y);
  std::function<void(WeylElem, std::size_t)> walk = [&](WeylElem x, std::size_t next) {
    if (x == w) {
      out.push_back(current);
      return;
    }
    for (std::size_t p = next; p < order.size(); ++p) {
      const int beta = order.at(p);
      const WeylElem z = group.right_reflect(x, beta);
      if (group.length(z) <= group.length(x) || !group.bruhat_leq(z, w)) continue;
      current.elements.push_back(z);
      current.labels.push_back(beta);
      walk(z, p + 1);
      current.elements.pop_back();
      current.labels.pop_back();
    }
  };
  walk(y, 0);
  return out;
}

LaurentPoly r_dyer(const WeylGroup& group, WeylElem y, WeylElem w, const ReflectionOrder& order) {
  std::map<int, long long> by_length;
  for (const auto& chain : enumerate_bruhat_chains(group, y, w, order)) ++by_length[chain.length()];
  const int gap = group.length_diff(y, w);
  LaurentPoly out;
  for (const auto& [len, count] : by_length) {
    if ((gap - len) % 2 != 0 || gap < len)
      throw ConsistencyError("chain length parity does not match l(y, w)");
    out += LaurentPoly(count) * LaurentPoly::monomial(1, (gap - len) / 2) *
           LaurentPoly::q_minus_one_pow(len);
  }
  return out;
}

}  // namespace rpoly
