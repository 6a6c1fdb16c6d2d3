#include "rpoly/root_system.hpp"

#include <algorithm>
#include <deque>

#include "rpoly/errors.hpp"

namespace rpoly {

int expected_positive_root_count(Family family, int n) {
  switch (family) {
    case Family::A:
      return n * (n + 1) / 2;
    case Family::B:
    case Family::C:
      return n * n;
    case Family::D:
      return n * (n - 1);
    case Family::E:
      return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F:
      return 24;
    case Family::G:
      return 6;
  }
  return 0;
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  const int l = datum_.rank();
  const IntMatrix& a = datum_.matrix();

  // <beta, alpha_i^vee> = (A beta)_i ; <alpha_i, mu> = (A^T mu)_i.
  struct Pending {
    RootCoords coeffs;
    Coweight coroot;
  };
  std::vector<Pending> found;
  std::unordered_map<IntVector, int, LatticeHash, LatticeEqual> seen;
  std::deque<int> queue;
  for (int i = 0; i < l; ++i) {
    found.push_back({unit_vector(l, i), unit_vector(l, i)});
    seen.emplace(found.back().coeffs, i);
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const int idx = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      const RootCoords beta = found[idx].coeffs;
      const int c = (a * beta)(i);
      if (c == 0) continue;
      RootCoords image = beta;
      image(i) -= c;
      if (!all_nonnegative(image) || seen.count(image)) continue;
      Coweight cor = found[idx].coroot;
      cor(i) -= (a.transpose() * cor)(i);
      seen.emplace(image, static_cast<int>(found.size()));
      found.push_back({image, cor});
      queue.push_back(static_cast<int>(found.size()) - 1);
    }
  }

  std::sort(found.begin(), found.end(), [](const Pending& x, const Pending& y) {
    const int hx = x.coeffs.sum(), hy = y.coeffs.sum();
    if (hx != hy) return hx < hy;
    return std::lexicographical_compare(x.coeffs.data(), x.coeffs.data() + x.coeffs.size(),
                                        y.coeffs.data(), y.coeffs.data() + y.coeffs.size(),
                                        std::greater<>());
  });

  const int n = static_cast<int>(found.size());
  if (n != expected_positive_root_count(datum_.family(), l))
    throw ConsistencyError("root closure produced " + std::to_string(n) + " positive roots for " +
                           datum_.label());

  positive_.reserve(n);
  for (const auto& p : found) positive_.push_back({p.coeffs, p.coroot, p.coeffs.sum()});
  for (int i = 0; i < n; ++i) {
    lookup_.emplace(positive_[i].coeffs, i);
    lookup_.emplace(RootCoords(-positive_[i].coeffs), i + n);
    functional_.push_back(a * positive_[i].coeffs);
  }

  pairing_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pairing_(i, j) = positive_[j].coroot.dot(functional_[i]);

  reflection_table_.resize(static_cast<std::size_t>(n) * 2 * n);
  for (int i = 0; i < n; ++i) {
    for (RootId r = 0; r < 2 * n; ++r) {
      const RootCoords image = coeffs(r) - pairing(r, i) * positive_[i].coeffs;
      reflection_table_[static_cast<std::size_t>(i) * 2 * n + r] = lookup_.at(image);
    }
  }

  highest_ = n - 1;
  for (int i = 0; i < l; ++i)
    if (functional_[highest_](i) < 0)
      throw ConsistencyError("highest root is not dominant for " + datum_.label());
}

RootCoords RootSystem::coeffs(RootId r) const {
  const Root& p = positive_[positive_part(r)];
  return is_positive(r) ? p.coeffs : RootCoords(-p.coeffs);
}

Coweight RootSystem::coroot(RootId r) const {
  const Root& p = positive_[positive_part(r)];
  return is_positive(r) ? p.coroot : Coweight(-p.coroot);
}

Coweight RootSystem::simple_reflect_coweight(int i, const Coweight& mu) const {
  Coweight out = mu;
  out(i) -= (datum_.matrix().transpose() * mu)(i);
  return out;
}

std::optional<RootId> RootSystem::find(const RootCoords& c) const {
  auto it = lookup_.find(c);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

}  // namespace rpoly
