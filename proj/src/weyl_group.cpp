#include "rpoly/weyl_group.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rpoly/errors.hpp"

namespace rpoly {

namespace {

constexpr std::size_t kDenseMultiplyLimit = 1500;
constexpr std::size_t kDenseBruhatLimit = 4096;

double group_order(Family family, int n) {
  auto factorial = [](int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (family) {
    case Family::A:
      return factorial(n + 1);
    case Family::B:
    case Family::C:
      return std::ldexp(factorial(n), n);
    case Family::D:
      return std::ldexp(factorial(n), n - 1);
    case Family::E:
      return n == 6 ? 51840.0 : n == 7 ? 2903040.0 : 696729600.0;
    case Family::F:
      return 1152;
    case Family::G:
      return 12;
  }
  return 0;
}

// Images of the simple roots packed one byte each (2N <= 240 < 256, rank <= 8).
std::uint64_t pack_key(const RootId* images, int rank) {
  std::uint64_t key = 0;
  for (int j = 0; j < rank; ++j) key |= static_cast<std::uint64_t>(images[j]) << (8 * j);
  return key;
}

}  // namespace

WeylGroup::WeylGroup(RootSystem rs, std::size_t guard) : rs_(std::move(rs)) {
  const int l = rs_.rank();
  const int nr = rs_.num_roots();
  const double order = group_order(rs_.datum().family(), l);
  if (order > static_cast<double>(guard))
    throw SizeGuardError("Weyl group of type " + rs_.datum().label() + " has " +
                         std::to_string(static_cast<long long>(order)) +
                         " elements, exceeding the guard of " + std::to_string(guard));
  const auto count = static_cast<std::size_t>(order);

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(count * 2);
  perm_.reserve(count * nr);
  words_.reserve(count);
  length_.reserve(count);

  for (RootId r = 0; r < nr; ++r) perm_.push_back(r);
  words_.emplace_back();
  length_.push_back(0);
  index.emplace(pack_key(perm_.data(), l), 0);

  right_.assign(count * l, 0);
  std::vector<RootId> scratch(nr);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (int i = 0; i < l; ++i) {
      const RootId* pw = &perm_[w * nr];
      for (RootId r = 0; r < nr; ++r) scratch[r] = pw[rs_.simple_reflect(i, r)];
      const std::uint64_t key = pack_key(scratch.data(), l);
      auto [it, inserted] = index.emplace(key, static_cast<std::uint32_t>(words_.size()));
      if (inserted) {
        if (words_.size() >= count)
          throw ConsistencyError("Weyl group closure exceeded the expected order");
        perm_.insert(perm_.end(), scratch.begin(), scratch.end());
        std::vector<int> word = words_[w];
        word.push_back(i);
        words_.push_back(std::move(word));
        length_.push_back(static_cast<int>(words_.back().size()));
      }
      right_[w * l + i] = it->second;
    }
  }
  if (words_.size() != count)
    throw ConsistencyError("Weyl group closure produced " + std::to_string(words_.size()) +
                           " elements, expected " + std::to_string(count));

  auto lookup = [&](const RootId* images) { return index.at(pack_key(images, l)); };

  left_.assign(count * l, 0);
  inverse_.assign(count, 0);
  coweight_action_.resize(count);
  std::vector<RootId> images(l);
  for (std::size_t w = 0; w < count; ++w) {
    const RootId* pw = &perm_[w * nr];
    int inversions = 0;
    for (int r = 0; r < rs_.num_positive(); ++r) inversions += rs_.is_positive(pw[r]) ? 0 : 1;
    if (inversions != length_[w])
      throw ConsistencyError("inversion count disagrees with BFS depth");

    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) images[j] = rs_.simple_reflect(i, pw[j]);
      left_[w * l + i] = lookup(images.data());
    }
    // w^{-1}(alpha_j) is the root r with w(r) = alpha_j.
    for (RootId r = 0; r < nr; ++r)
      if (pw[r] < l) images[pw[r]] = r;
    inverse_[w] = lookup(images.data());

    IntMatrix m(l, l);
    for (int j = 0; j < l; ++j) m.col(j) = rs_.coroot(pw[j]);
    coweight_action_[w] = m;
  }

  reflection_.resize(rs_.num_positive());
  for (int b = 0; b < rs_.num_positive(); ++b) {
    for (int j = 0; j < l; ++j) images[j] = rs_.reflect(b, rs_.simple_root(j));
    reflection_[b] = lookup(images.data());
  }

  longest_ = {static_cast<std::uint32_t>(count - 1)};
  if (length_.back() != rs_.num_positive()) throw ConsistencyError("last BFS element is not w_0");

  if (count <= kDenseMultiplyLimit) {
    mult_.assign(count * count, 0);
    for (std::size_t u = 0; u < count; ++u) mult_[u * count] = static_cast<std::uint32_t>(u);
    for (std::size_t v = 1; v < count; ++v) {
      const auto& word = words_[v];
      std::vector<int> prefix(word.begin(), word.end() - 1);
      const std::uint32_t parent = from_word(prefix).id;
      const int last = word.back();
      for (std::size_t u = 0; u < count; ++u)
        mult_[u * count + v] =
            right_[static_cast<std::size_t>(mult_[u * count + parent]) * l + last];
    }
  }

  if (count <= kDenseBruhatLimit) {
    std::vector<std::uint64_t> bits((count * count + 63) / 64, 0);
    auto get = [&](std::size_t u, std::size_t v) {
      const std::size_t k = u * count + v;
      return (bits[k / 64] >> (k % 64)) & 1U;
    };
    auto set = [&](std::size_t u, std::size_t v) {
      const std::size_t k = u * count + v;
      bits[k / 64] |= std::uint64_t{1} << (k % 64);
    };
    set(0, 0);
    for (std::size_t v = 1; v < count; ++v) {
      int s = 0;
      while (!has_left_descent(element(v), s)) ++s;
      const std::size_t sv = left_mul_simple(s, element(v)).id;
      for (std::size_t u = 0; u < count; ++u) {
        const bool descent = has_left_descent(element(u), s);
        const std::size_t base = descent ? left_mul_simple(s, element(u)).id : u;
        if (get(base, sv)) set(u, v);
      }
    }
    bruhat_ = std::move(bits);
  }
}

std::vector<WeylElem> WeylGroup::elements() const {
  std::vector<WeylElem> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = element(i);
  return out;
}

WeylElem WeylGroup::multiply(WeylElem u, WeylElem v) const {
  if (!mult_.empty()) return {mult_[static_cast<std::size_t>(u.id) * size() + v.id]};
  WeylElem out = u;
  for (int i : words_[v.id]) out = right_mul_simple(out, i);
  return out;
}

std::vector<RootId> WeylGroup::root_images(WeylElem w) const {
  const RootId* pw = &perm_[static_cast<std::size_t>(w.id) * rs_.num_roots()];
  return {pw, pw + rank()};
}

WeylElem WeylGroup::from_word(std::span<const int> word) const {
  WeylElem out = identity();
  for (int i : word) {
    if (i < 0 || i >= rank())
      throw PreconditionError("simple index " + std::to_string(i + 1) + " out of range");
    out = right_mul_simple(out, i);
  }
  return out;
}

bool WeylGroup::is_reduced(std::span<const int> word) const {
  return length(from_word(word)) == static_cast<int>(word.size());
}

bool WeylGroup::bruhat_leq(WeylElem u, WeylElem v) const {
  if (!bruhat_.empty()) {
    const std::size_t k = static_cast<std::size_t>(u.id) * size() + v.id;
    return (bruhat_[k / 64] >> (k % 64)) & 1U;
  }
  return bruhat_leq_recursive(u, v);
}

bool WeylGroup::bruhat_leq_recursive(WeylElem u, WeylElem v) const {
  // Lifting property: for s with sv < v, u <= v iff min(u, su) <= sv.
  while (true) {
    if (length(u) > length(v)) return false;
    if (length(u) == length(v)) return u == v;
    int s = 0;
    while (!has_left_descent(v, s)) ++s;
    if (has_left_descent(u, s)) u = left_mul_simple(s, u);
    v = left_mul_simple(s, v);
  }
}

std::vector<WeylElem> all_elements(const WeylGroup& group) { return group.elements(); }

std::vector<std::vector<int>> reduced_words(const WeylGroup& group, WeylElem w) {
  // Words of w are (word of s_i w) prefixed by i over left descents i; collect via DFS.
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  std::function<void(WeylElem)> walk = [&](WeylElem x) {
    if (group.length(x) == 0) {
      out.push_back(prefix);
      return;
    }
    for (int i = 0; i < group.rank(); ++i) {
      if (!group.has_left_descent(x, i)) continue;
      prefix.push_back(i);
      walk(group.left_mul_simple(i, x));
      prefix.pop_back();
    }
  };
  walk(w);
  return out;
}

}  // namespace rpoly
