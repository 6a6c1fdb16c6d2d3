#include <gtest/gtest.h>

#include "test_support.hpp"

namespace rpoly {
namespace {

using testing::setup_of;
using testing::word;

const LaurentPoly q = LaurentPoly::q();

// Hecke algebra elements as coefficient maps over the standard basis T_x.
using Hecke = std::map<std::uint32_t, LaurentPoly>;

// h * T_s^{-1}, where T_s^{-1} = q^{-1} T_s - (1 - q^{-1}).
Hecke times_inverse_simple(const WeylGroup& g, const Hecke& h, int s) {
  const LaurentPoly qinv = LaurentPoly::monomial(1, -1);
  Hecke out;
  for (const auto& [id, c] : h) {
    const WeylElem x = g.element(id);
    const WeylElem xs = g.right_mul_simple(x, s);
    if (g.length(xs) > g.length(x)) {
      out[xs.id] += c * qinv;
    } else {
      // T_x T_s = (q - 1) T_x + q T_xs.
      out[x.id] += c * qinv * (q - 1);
      out[xs.id] += c;
    }
    out[x.id] -= c * (1 - qinv);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// R_{x,w} from the expansion of (T_{w^{-1}})^{-1} in the standard basis.
std::map<std::uint32_t, LaurentPoly> hecke_r_column(const WeylGroup& g, WeylElem w) {
  Hecke h{{g.identity().id, LaurentPoly(1)}};
  for (int s : g.reduced_word(w)) h = times_inverse_simple(g, h, s);
  std::map<std::uint32_t, LaurentPoly> column;
  for (const auto& [id, c] : h) {
    const int sign = ((g.length(g.element(id)) + g.length(w)) % 2 == 0) ? 1 : -1;
    column[id] = (c * sign).shifted(g.length(w));
  }
  return column;
}

TEST(FiniteR, Examples) {
  const WeylGroup& g = *setup_of("A2").group;
  for (const WeylElem w : g.elements()) EXPECT_EQ(r_recursive(g, w, w), LaurentPoly(1));
  EXPECT_EQ(r_recursive(g, g.identity(), g.simple(0)), q - 1);
  EXPECT_EQ(r_recursive(g, g.identity(), g.longest()), (q - 1) * (q * q - q + 1));
  EXPECT_TRUE(r_recursive(g, g.simple(0), g.simple(1)).is_zero());
  EXPECT_TRUE(r_recursive(g, g.longest(), g.identity()).is_zero());
  for (const WeylElem u : g.elements())
    for (const WeylElem v : g.elements())
      if (!g.bruhat_leq(u, v)) EXPECT_TRUE(r_recursive(g, u, v).is_zero());
}

TEST(FiniteR, RecursionMatchesHeckeInverse) {
  for (const char* type : {"A2", "B2", "G2", "A3", "B3"}) {
    const WeylGroup& g = *setup_of(type).group;
    const FiniteRTable table(g);
    for (const WeylElem w : g.elements()) {
      const auto column = hecke_r_column(g, w);
      for (const WeylElem x : g.elements()) {
        const auto it = column.find(x.id);
        const LaurentPoly expected = it == column.end() ? LaurentPoly() : it->second;
        ASSERT_EQ(table(x, w), expected) << type;
      }
    }
  }
}

TEST(FiniteR, PivotIndependence) {
  for (const char* type : {"A3", "G2"}) {
    const WeylGroup& g = *setup_of(type).group;
    const FiniteRTable table(g);
    for (const WeylElem u : g.elements())
      for (const WeylElem v : g.elements())
        for (int s = 0; s < g.rank(); ++s)
          if (g.has_left_descent(v, s)) ASSERT_EQ(table.with_pivot(u, v, s), table(u, v));
  }
}

TEST(FiniteR, StructuralProperties) {
  for (const char* type : {"A3", "B3", "G2"}) {
    const WeylGroup& g = *setup_of(type).group;
    const FiniteRTable table(g);
    const WeylElem w0 = g.longest();
    for (const WeylElem u : g.elements())
      for (const WeylElem v : g.elements()) {
        const LaurentPoly& r = table(u, v);
        if (!g.bruhat_leq(u, v)) continue;
        const int gap = g.length(v) - g.length(u);
        EXPECT_EQ(r.degree(), gap);
        EXPECT_EQ(r.coeff(gap), 1);
        EXPECT_EQ(r.coeff(0), gap % 2 == 0 ? 1 : -1);
        EXPECT_EQ(bar(r), (gap % 2 == 0 ? r : -r).shifted(-gap));
        EXPECT_EQ(table(g.inverse(u), g.inverse(v)), r);
        EXPECT_EQ(table(g.multiply(w0, v), g.multiply(w0, u)), r);
        // Right-handed recursion.
        for (int s = 0; s < g.rank(); ++s) {
          const WeylElem vs = g.right_mul_simple(v, s);
          if (g.length(vs) > g.length(v)) continue;
          const WeylElem us = g.right_mul_simple(u, s);
          const LaurentPoly expected = g.length(us) < g.length(u)
                                           ? table(us, vs)
                                           : q * table(us, vs) + (q - 1) * table(u, vs);
          EXPECT_EQ(r, expected);
        }
      }
  }
}

TEST(FiniteR, ChainsExamples) {
  const WeylGroup& g = *setup_of("A2").group;
  const ReflectionOrder order = default_reflection_order(g);
  const auto same = enumerate_bruhat_chains(g, g.longest(), g.longest(), order);
  ASSERT_EQ(same.size(), 1U);
  EXPECT_EQ(same[0].length(), 0);
  const auto one = enumerate_bruhat_chains(g, g.identity(), g.simple(0), order);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].labels, std::vector<int>{0});
  EXPECT_TRUE(enumerate_bruhat_chains(g, g.simple(0), g.simple(1), order).empty());
}

TEST(FiniteR, ChainSumsMatchRecursionForEveryOrder) {
  for (const char* type : {"A2", "B2", "G2", "A3"}) {
    const WeylGroup& g = *setup_of(type).group;
    const FiniteRTable table(g);
    for (const ReflectionOrder& order : all_reflection_orders(g))
      for (const WeylElem y : g.elements())
        for (const WeylElem w : g.elements()) {
          LaurentPoly sum;
          for (const BruhatChain& c : enumerate_bruhat_chains(g, y, w, order)) {
            ASSERT_EQ(c.elements.front(), y);
            ASSERT_EQ(c.elements.back(), w);
            for (int k = 0; k < c.length(); ++k) {
              ASSERT_EQ(g.right_reflect(c.elements[k], c.labels[k]), c.elements[k + 1]);
              ASSERT_TRUE(g.bruhat_leq(c.elements[k], c.elements[k + 1]));
              if (k > 0) ASSERT_TRUE(order.precedes(c.labels[k - 1], c.labels[k]));
            }
            const int gap = g.length(w) - g.length(y);
            ASSERT_EQ((gap - c.length()) % 2, 0);
            sum += LaurentPoly::q_minus_one_pow(c.length()).shifted((gap - c.length()) / 2);
          }
          ASSERT_EQ(sum, table(y, w)) << type;
          ASSERT_EQ(r_dyer(g, y, w, order), sum) << type;
        }
  }
}

}  // namespace
}  // namespace rpoly
