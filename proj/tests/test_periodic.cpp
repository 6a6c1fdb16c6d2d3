#include <gtest/gtest.h>

#include <algorithm>

#include "rpoly/verify.hpp"
#include "test_support.hpp"

namespace rpoly {
namespace {

using testing::cw;
using testing::setup_of;
using testing::word;

const LaurentPoly q = LaurentPoly::q();

class GoldenA2 : public ::testing::Test {
 protected:
  const rpoly::Setup& s = setup_of("A2");
  const AffineWeylGroup& aff = *s.affine;
  const WeylGroup& g = *s.group;
  const RootSystem& rs = g.roots();
  // a1 < a1+a2 < a2
  PeriodicEngine engine{s.affine, ReflectionOrder::from_reduced_word(g, std::vector<int>{0, 1, 0})};
  int theta = rs.highest_root();
  AffineElem e = aff.identity();
  AffineElem w = aff.make(g.longest(), cw({1, 1}));

  LaurentPoly golden() const {
    const LaurentPoly qm1 = q - 1;
    return pow(q, 4) * qm1 + 2 * pow(q, 3) * pow(qm1, 3) + pow(q, 4) * pow(qm1, 3);
  }
  AffineElem elem(std::initializer_list<int> cl, std::initializer_list<int> wt) const {
    return aff.make(word(g, cl), cw(wt));
  }
};

std::multiset<std::pair<int, int>> deg_len(const AffineWeylGroup& aff,
                                           const std::vector<SIPath>& paths) {
  std::multiset<std::pair<int, int>> out;
  for (const SIPath& p : paths) out.emplace(path_deg(aff, p), path_len(p));
  return out;
}

TEST_F(GoldenA2, EdgeWeights) {
  const SIEdge refl{e, w, theta, 1, EdgeKind::reflection};
  EXPECT_EQ(edge_d(aff, refl), 5);
  const SIEdge trans{e, aff.translation(cw({1, 0})), 0, 1, EdgeKind::translation};
  EXPECT_EQ(edge_d(aff, trans), 2);
  const SIEdge step{e, aff.from_finite(g.simple(0)), 0, 0, EdgeKind::reflection};
  EXPECT_EQ(edge_d(aff, step), 1);
  const SIPath single{e, {refl}};
  EXPECT_EQ(path_deg(aff, single), 4);
  EXPECT_EQ(path_len(single), 1);
}

TEST_F(GoldenA2, EdgeCandidates) {
  for (int b = 0; b < rs.num_positive(); ++b)
    for (const SIEdge& edge : engine.si_edge_candidates(e, b, cw({0, 0}))) {
      EXPECT_EQ(edge.kind, EdgeKind::reflection);
      EXPECT_EQ(edge.m, 0);
    }
  const auto from_e = engine.si_edge_candidates(e, theta, cw({1, 1}));
  EXPECT_TRUE(std::any_of(from_e.begin(), from_e.end(), [&](const SIEdge& x) {
    return x.kind == EdgeKind::translation && x.m == 1 && x.target == aff.translation(cw({1, 1}));
  }));
  for (const SIEdge& x : from_e) {
    EXPECT_LE(x.m, 1);
    if (x.kind == EdgeKind::reflection) EXPECT_TRUE(aff.si_less(e, x.target));
  }
  const auto from_s1 = engine.si_edge_candidates(elem({1}, {0, 0}), theta, cw({1, 1}));
  EXPECT_TRUE(std::any_of(from_s1.begin(), from_s1.end(), [&](const SIEdge& x) {
    return x.kind == EdgeKind::reflection && x.target == elem({2, 1}, {1, 1});
  }));
}

TEST_F(GoldenA2, PathEnumeration) {
  const auto paths = engine.enumerate_si_paths(e, w);
  EXPECT_EQ(deg_len(aff, paths),
            (std::multiset<std::pair<int, int>>{{4, 1}, {3, 3}, {3, 3}, {4, 3}}));
  for (const SIPath& p : paths) EXPECT_NO_THROW(engine.validate_path(p));
  const auto same = engine.enumerate_si_paths(w, w);
  ASSERT_EQ(same.size(), 1U);
  EXPECT_EQ(same[0].length(), 0);
  const auto one = engine.enumerate_si_paths(e, aff.from_finite(g.simple(0)));
  ASSERT_EQ(one.size(), 1U);
  ASSERT_EQ(one[0].length(), 1);
  EXPECT_EQ(one[0].edges[0].kind, EdgeKind::reflection);
  EXPECT_EQ(one[0].edges[0].m, 0);
  EXPECT_EQ(one[0].edges[0].label, 0);
  EXPECT_TRUE(engine.enumerate_si_paths(w, e).empty());
}

TEST_F(GoldenA2, GoldenPolynomial) {
  EXPECT_EQ(engine.periodic_r_paths(e, w), golden());
  EXPECT_EQ(engine.periodic_r_enumerated(e, w), golden());
  EXPECT_EQ(engine.periodic_r_dbg(e, w), golden());
  EXPECT_EQ(census_poly(engine.si_census(e, w)), golden());
  EXPECT_EQ(census_size(engine.si_census(e, w)), 4);
  EXPECT_EQ(engine.periodic_r_paths(w, w), LaurentPoly(1));
  EXPECT_TRUE(engine.periodic_r_paths(w, e).is_zero());
}

TEST_F(GoldenA2, PathSets) {
  const SIPath empty{e, {}};
  EXPECT_EQ(path_deg(aff, empty), 0);
  EXPECT_EQ(path_len(empty), 0);
  const PathSets es = path_sets(engine.order(), empty);
  EXPECT_TRUE(es.e.empty() && es.r.empty() && es.t.empty());
  EXPECT_EQ(es.T, (std::vector<int>{0, 0, 0}));

  // translation a1, reflection a1+a2, translation a2
  SIPath mixed{e, {}};
  mixed.edges.push_back({e, elem({}, {1, 0}), 0, 1, EdgeKind::translation});
  mixed.edges.push_back(
      {elem({}, {1, 0}), elem({1, 2, 1}, {1, 0}), theta, 0, EdgeKind::reflection});
  mixed.edges.push_back({elem({1, 2, 1}, {1, 0}), w, 1, 1, EdgeKind::translation});
  EXPECT_NO_THROW(engine.validate_path(mixed));
  const PathSets ms = path_sets(engine.order(), mixed);
  EXPECT_EQ(ms.T, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(std::set<int>(ms.t.begin(), ms.t.end()), (std::set<int>{0, 1}));
  EXPECT_EQ(ms.r, std::vector<int>{theta});

  const SIPath all_refl =
      engine.reflection_path({e, elem({1}, {0, 0}), elem({2, 1}, {1, 1}), w}, {0, theta, 1});
  EXPECT_NO_THROW(engine.validate_path(all_refl));
  const PathSets rs2 = path_sets(engine.order(), all_refl);
  EXPECT_EQ(std::set<int>(rs2.r.begin(), rs2.r.end()), (std::set<int>{0, 1, theta}));
  EXPECT_TRUE(rs2.t.empty());
  EXPECT_EQ(path_deg(aff, all_refl), 3);
}

TEST_F(GoldenA2, ValidatePathRejectsBrokenPaths) {
  SIPath p = engine.reflection_path({e, elem({1}, {0, 0}), elem({2, 1}, {1, 1}), w}, {0, theta, 1});
  SIPath bad_order = p;
  std::swap(bad_order.edges[0].label, bad_order.edges[2].label);
  EXPECT_THROW(engine.validate_path(bad_order), ConsistencyError);
  SIPath disconnected = p;
  disconnected.edges.erase(disconnected.edges.begin() + 1);
  EXPECT_THROW(engine.validate_path(disconnected), ConsistencyError);
  SIPath wrong_m = p;
  wrong_m.edges[1].m = 0;
  EXPECT_THROW(engine.validate_path(wrong_m), ConsistencyError);
}

TEST_F(GoldenA2, DoubleBruhatGraphEdges) {
  const DBGEdge up = dbg_edge(g, g.identity(), theta);
  EXPECT_EQ(up.target, g.longest());
  EXPECT_FALSE(up.quantum);
  EXPECT_EQ(up.d, 2);
  const DBGEdge down = dbg_edge(g, g.longest(), theta);
  EXPECT_EQ(down.target, g.identity());
  EXPECT_TRUE(down.quantum);
  EXPECT_EQ(down.d, 1);
  const DBGEdge s1_e = dbg_edge(g, g.simple(0), 0);
  EXPECT_TRUE(s1_e.quantum);
  EXPECT_EQ(s1_e.d, 1);
  EXPECT_EQ(build_dbg(g).size(), g.size() * rs.num_positive());
}

TEST(DoubleBruhatGraph, EdgeInvariants) {
  for (const char* type : {"A3", "B3", "G2", "D4"}) {
    const WeylGroup& g = *setup_of(type).group;
    const RootSystem& rs = g.roots();
    for (const DBGEdge& edge : build_dbg(g)) {
      EXPECT_EQ(edge.target, g.right_reflect(edge.source, edge.label));
      const int gap = g.length(edge.target) - g.length(edge.source);
      if (edge.quantum) {
        EXPECT_LT(gap, 0);
        EXPECT_EQ(2 * edge.d, gap + 2 * rho_pairing(rs, rs.coroot(edge.label)) + 1);
      } else {
        EXPECT_GT(gap, 0);
        EXPECT_EQ(2 * edge.d, gap + 1);
      }
      EXPECT_GE(edge.d, 1);
    }
  }
}

TEST_F(GoldenA2, DoubleBruhatPaths) {
  const auto paths = engine.enumerate_dbp(e, w);
  ASSERT_EQ(paths.size(), 4U);
  std::multiset<std::pair<int, int>> census;
  for (const DBPath& p : paths) {
    census.emplace(dbp_deg(p), dbp_len_prime(p));
    EXPECT_EQ(p.quantum_sum, cw({1, 1}));
    EXPECT_EQ(p.vertices.front(), g.identity());
    EXPECT_EQ(p.vertices.back(), g.longest());
    for (std::size_t k = 1; k < p.edges.size(); ++k)
      EXPECT_LE(engine.order().position(p.edges[k - 1].label),
                engine.order().position(p.edges[k].label));
  }
  EXPECT_EQ(census, (std::multiset<std::pair<int, int>>{{4, 1}, {3, 3}, {3, 3}, {4, 3}}));

  const auto single_label =
      std::find_if(paths.begin(), paths.end(), [](const DBPath& p) { return p.length() == 3; });
  ASSERT_NE(single_label, paths.end());
  std::vector<int> ds;
  for (const DBGEdge& edge : single_label->edges) ds.push_back(edge.d);
  EXPECT_EQ(ds, (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(dbp_deg(*single_label), 4);
  EXPECT_EQ(dbp_len_prime(*single_label), 1);

  const auto seven =
      std::find_if(paths.begin(), paths.end(), [](const DBPath& p) { return p.length() == 7; });
  ASSERT_NE(seven, paths.end());
  EXPECT_EQ(dbp_deg(*seven), 4);
  EXPECT_EQ(dbp_len_prime(*seven), 3);
  EXPECT_EQ(census_poly(engine.dbp_census(e, w)), golden());
}

TEST_F(GoldenA2, Bijection) {
  const auto dbps = engine.enumerate_dbp(e, w);
  auto si = engine.enumerate_si_paths(e, w);
  std::vector<SIPath> images;
  for (const DBPath& p : dbps) {
    const SIPath image = engine.dbp_to_sipath(p, e);
    EXPECT_NO_THROW(engine.validate_path(image));
    EXPECT_EQ(path_deg(aff, image), dbp_deg(p));
    EXPECT_EQ(path_len(image), dbp_len_prime(p));
    const DBPath back = engine.sipath_to_dbp(image);
    EXPECT_EQ(back.edges, p.edges);
    EXPECT_EQ(back.vertices, p.vertices);
    images.push_back(image);
  }
  ASSERT_EQ(images.size(), si.size());
  for (const SIPath& p : si) EXPECT_EQ(std::count(images.begin(), images.end(), p), 1);

  // The single-label run of three edges is the lone reflection edge with m = 1.
  const auto run =
      std::find_if(dbps.begin(), dbps.end(), [](const DBPath& p) { return p.length() == 3; });
  const SIPath lone = engine.dbp_to_sipath(*run, e);
  ASSERT_EQ(lone.length(), 1);
  EXPECT_EQ(lone.edges[0].kind, EdgeKind::reflection);
  EXPECT_EQ(lone.edges[0].m, 1);
  EXPECT_EQ(lone.edges[0].label, theta);
}

TEST_F(GoldenA2, RestrictedSums) {
  // Reflection-only paths: the lone edge and the two length-3 reflection paths.
  const LaurentPoly expected = pow(q, 3) * (q - 1) + 2 * q * q * pow(q - 1, 3);
  EXPECT_EQ(engine.r_restricted(e, w), expected);
  EXPECT_EQ(engine.r_restricted(w, w), LaurentPoly(1));
  EXPECT_EQ(engine.t_restricted(w, w), LaurentPoly(1));
  EXPECT_TRUE(engine.t_restricted(e, w).is_zero());
  EXPECT_TRUE(engine.check_decomposition(e, w));
  EXPECT_TRUE(engine.check_decomposition(w, w));

  const AffineElem t = aff.translation(cw({1, 1}));
  LaurentPoly by_hand;
  for (const SIPath& p : engine.enumerate_si_paths(e, t, kTranslationEdges)) {
    for (const SIEdge& edge : p.edges) EXPECT_EQ(edge.kind, EdgeKind::translation);
    by_hand += pow(q, path_deg(aff, p)) * pow(q - 1, path_len(p));
  }
  EXPECT_FALSE(by_hand.is_zero());
  EXPECT_EQ(engine.t_restricted(e, t), by_hand);
}

TEST(Periodic, FiniteRestriction) {
  for (const char* type : {"A2", "B2", "G2"}) {
    const auto& s = setup_of(type);
    const WeylGroup& g = *s.group;
    const FiniteRTable table(g);
    for (const ReflectionOrder& order : all_reflection_orders(g)) {
      const PeriodicEngine engine(s.affine, order);
      for (const WeylElem y : g.elements())
        for (const WeylElem w : g.elements()) {
          const AffineElem ya = s.affine->from_finite(y);
          const AffineElem wa = s.affine->from_finite(w);
          ASSERT_EQ(engine.periodic_r_paths(ya, wa), table(y, w)) << type;
          ASSERT_EQ(engine.r_restricted(ya, wa), r_dyer(g, y, w, order)) << type;
          for (const SIPath& p : engine.enumerate_si_paths(ya, wa))
            ASSERT_EQ(2 * path_deg(*s.affine, p), g.length(w) - g.length(y) - path_len(p));
        }
    }
  }
}

// Independent enumeration of label-increasing paths straight from the edge rules, using only
// group operations and the uncached order test.
LaurentPoly brute_force_r(const PeriodicEngine& engine, const AffineElem& y, const AffineElem& w) {
  const AffineWeylGroup& aff = engine.affine();
  const RootSystem& rs = aff.roots();
  const ReflectionOrder& order = engine.order();
  LaurentPoly total;
  std::function<void(const AffineElem&, std::size_t, int, int)> walk =
      [&](const AffineElem& x, std::size_t pos, int twice_d, int len) {
        if (x == w) {
          ASSERT_EQ(twice_d % 2, 0);
          total += pow(q, twice_d / 2 - len) * pow(q - 1, len);
        }
        for (std::size_t p = pos; p < order.size(); ++p) {
          const int beta = order.at(p);
          const Coweight step = rs.coroot(beta);
          for (int m = 0;; ++m) {
            const Coweight wt = x.wt + m * step;
            if (!all_nonnegative(w.wt - wt)) break;
            if (m > 0) {
              const AffineElem t = aff.make(x.cl, wt);
              walk(t, p + 1, twice_d + aff.si_length_diff(x, t) + 2 * m, len + 1);
            }
            const AffineElem r = aff.make(aff.finite().right_reflect(x.cl, beta), wt);
            if (!(r == x) && aff.si_leq_uncached(x, r)) {
              const int sign = aff.finite().length(r.cl) > aff.finite().length(x.cl) ? 1 : -1;
              walk(r, p + 1, twice_d + aff.si_length_diff(x, r) + sign + 2 * m, len + 1);
            }
          }
        }
      };
  if (all_nonnegative(w.wt - y.wt)) walk(y, 0, 0, 0);
  return total;
}

TEST(Periodic, DynamicProgramMatchesBruteForce) {
  for (const char* type : {"A2", "B2"}) {
    const auto& s = setup_of(type);
    const PeriodicEngine engine(s.affine, default_reflection_order(*s.group));
    const auto elems = elements_in_radius(*s.affine, 1);
    for (const AffineElem& y : elems)
      for (const AffineElem& w : elems) {
        const LaurentPoly expected = brute_force_r(engine, y, w);
        ASSERT_EQ(engine.periodic_r_paths(y, w), expected) << type;
        ASSERT_EQ(engine.periodic_r_enumerated(y, w), expected) << type;
        ASSERT_EQ(engine.periodic_r_dbg(y, w), expected) << type;
      }
  }
}

TEST(Periodic, EnumeratedPathsAreSemiInfiniteChains) {
  for (const char* type : {"A2", "B2", "G2"}) {
    const auto& s = setup_of(type);
    const PeriodicEngine engine(s.affine, default_reflection_order(*s.group));
    const auto elems = elements_in_radius(*s.affine, 1);
    std::size_t paths = 0;
    for (const AffineElem& y : elems)
      for (const AffineElem& w : elems)
        for (const SIPath& p : engine.enumerate_si_paths(y, w)) {
          ASSERT_NO_THROW(engine.validate_path(p)) << describe(engine, p);
          const auto verts = p.vertices();
          for (std::size_t i = 0; i + 1 < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
              ASSERT_TRUE(s.affine->si_less(verts[i], verts[j]));
          ++paths;
        }
    EXPECT_GT(paths, 0U) << type;
  }
}

TEST(Periodic, DegreeEqualsSemiInfiniteGap) {
  const auto& s = setup_of("B2");
  const PeriodicEngine engine(s.affine, default_reflection_order(*s.group));
  const auto elems = elements_in_radius(*s.affine, 1);
  for (const AffineElem& y : elems)
    for (const AffineElem& w : elems) {
      const LaurentPoly r = engine.periodic_r_paths(y, w);
      if (!s.affine->si_leq(y, w)) {
        EXPECT_TRUE(r.is_zero());
        continue;
      }
      EXPECT_EQ(r.degree(), s.affine->si_length_diff(y, w));
      EXPECT_GE(r.low_degree(), 0);
    }
}

TEST(Periodic, DecompositionOnRandomPairs) {
  const auto& s = setup_of("B2");
  const PeriodicEngine engine(s.affine, default_reflection_order(*s.group));
  int tested = 0;
  while (tested < 50) {
    const AffineElem y = testing::random_element(*s.affine, 1);
    const AffineElem w = testing::random_element(*s.affine, 1);
    if (!all_nonnegative(w.wt - y.wt)) continue;
    EXPECT_TRUE(engine.check_decomposition(y, w));
    EXPECT_EQ(engine.decomposition_sum(y, w), engine.periodic_r_paths(y, w));
    ++tested;
  }
}

TEST_F(GoldenA2, PsiExamples) {
  const SIPath step = engine.reflection_path({e, elem({1}, {0, 0})}, {0});
  EXPECT_EQ(engine.descent_set(step, 1), std::vector<int>{1});
  EXPECT_TRUE(engine.descent_set(step, 2).empty());
  const SIPath left = engine.apply_psi_L(step, 1);
  EXPECT_EQ(left.length(), 0);
  EXPECT_EQ(left.start, elem({1}, {0, 0}));
  EXPECT_THROW(engine.apply_psi_L(step, 2), PreconditionError);
  EXPECT_THROW(engine.apply_psi_R(step, 2), PreconditionError);
}

TEST(Periodic, PsiMapsProduceValidPaths) {
  for (const char* type : {"A2", "B2"}) {
    const auto& s = setup_of(type);
    const AffineWeylGroup& aff = *s.affine;
    const PeriodicEngine engine(s.affine, default_reflection_order(*s.group));
    const auto elems = elements_in_radius(aff, 1);
    std::size_t applied = 0;
    for (const AffineElem& u : elems)
      for (const AffineElem& v : elems)
        for (const SIPath& path : engine.enumerate_si_paths(u, v, kReflectionEdges))
          for (int sidx = 0; sidx <= aff.rank(); ++sidx) {
            const auto descents = engine.descent_set(path, sidx);
            const auto verts = path.vertices();
            for (std::size_t i = 1; i < verts.size(); ++i) {
              const bool is_descent = aff.left_mul_simple(sidx, verts[i]) == verts[i - 1];
              EXPECT_EQ(is_descent, std::count(descents.begin(), descents.end(), int(i)) == 1);
            }
            if (descents.empty()) continue;
            const SIPath left = engine.apply_psi_L(path, sidx);
            const SIPath right = engine.apply_psi_R(path, sidx);
            ASSERT_NO_THROW(engine.validate_path(left));
            ASSERT_NO_THROW(engine.validate_path(right));
            EXPECT_EQ(left.start, aff.left_mul_simple(sidx, u));
            EXPECT_EQ(left.end(), v);
            EXPECT_EQ(right.start, u);
            EXPECT_EQ(right.end(), aff.left_mul_simple(sidx, v));
            EXPECT_EQ(left.length(), path.length() - 1);
            EXPECT_EQ(right.length(), path.length() - 1);
            ++applied;
          }
    EXPECT_GT(applied, 0U) << type;
  }
}

}  // namespace
}  // namespace rpoly
