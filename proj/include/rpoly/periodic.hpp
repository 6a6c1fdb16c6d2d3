#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rpoly/affine.hpp"
#include "rpoly/laurent.hpp"
#include "rpoly/reflection_order.hpp"

namespace rpoly {

enum class EdgeKind { translation, reflection };

/// source --(m, beta)--> target in the semi-infinite path model.
struct SIEdge {
  AffineElem source;
  AffineElem target;
  int label = 0;  ///< positive-root index
  int m = 0;
  EdgeKind kind = EdgeKind::reflection;
  friend bool operator==(const SIEdge&, const SIEdge&) = default;
};

struct SIPath {
  AffineElem start;
  std::vector<SIEdge> edges;

  const AffineElem& end() const { return edges.empty() ? start : edges.back().target; }
  int length() const noexcept { return static_cast<int>(edges.size()); }
  std::vector<AffineElem> vertices() const;
  friend bool operator==(const SIPath& a, const SIPath& b) {
    return a.start == b.start && a.edges == b.edges;
  }
};

/// Label sets of a path; T is indexed by position in the reflection order.
struct PathSets {
  std::vector<int> e;
  std::vector<int> r;
  std::vector<int> t;
  std::vector<int> T;
};

/// Double Bruhat graph edge source -> source * s_beta.
struct DBGEdge {
  WeylElem source;
  WeylElem target;
  int label = 0;
  int d = 0;
  bool quantum = false;
  friend bool operator==(const DBGEdge&, const DBGEdge&) = default;
};

struct DBPath {
  std::vector<WeylElem> vertices;
  std::vector<DBGEdge> edges;
  Coweight quantum_sum;
  int length() const noexcept { return static_cast<int>(edges.size()); }
};

/// Multiset of (deg, length) over a family of paths.
using Census = std::map<std::pair<int, int>, BigInt>;

/// Sum over the census of count * q^deg * (q - 1)^length.
LaurentPoly census_poly(const Census& census);
BigInt census_size(const Census& census);

/// Weight d of an edge; evaluated on doubled integers, throws ConsistencyError on odd results.
int edge_d(const AffineWeylGroup& aff, const SIEdge& e);
int path_deg(const AffineWeylGroup& aff, const SIPath& path);
int path_len(const SIPath& path);
PathSets path_sets(const ReflectionOrder& order, const SIPath& path);

/// All edges y -> y s_beta of the double Bruhat graph for every y and beta.
std::vector<DBGEdge> build_dbg(const WeylGroup& group);
DBGEdge dbg_edge(const WeylGroup& group, WeylElem source, int beta);

int dbp_deg(const DBPath& path);
int dbp_len_prime(const DBPath& path);

enum EdgeMask : unsigned {
  kTranslationEdges = 1U,
  kReflectionEdges = 2U,
  kAllEdges = kTranslationEdges | kReflectionEdges,
};

/// Path models for one affine Weyl group and one reflection order. Path sums are memoized per
/// translation class of (current vertex, target); explicit enumerations are not cached.
class PeriodicEngine {
 public:
  PeriodicEngine(std::shared_ptr<const AffineWeylGroup> aff, ReflectionOrder order);

  const AffineWeylGroup& affine() const noexcept { return *aff_; }
  const WeylGroup& finite() const noexcept { return aff_->finite(); }
  const RootSystem& roots() const noexcept { return aff_->roots(); }
  const ReflectionOrder& order() const noexcept { return order_; }

  /// Legal edges from y with label beta whose coroot step fits into `budget`. With
  /// `cached = false` the semi-infinite comparisons bypass every cache.
  std::vector<SIEdge> si_edge_candidates(const AffineElem& y, int beta, const Coweight& budget,
                                         unsigned mask = kAllEdges, bool cached = true) const;

  std::vector<SIPath> enumerate_si_paths(const AffineElem& y, const AffineElem& w,
                                         unsigned mask = kAllEdges, bool cached = true) const;
  Census si_census(const AffineElem& y, const AffineElem& w, unsigned mask = kAllEdges) const;

  /// Sum over label-increasing paths of q^deg (q - 1)^length.
  LaurentPoly periodic_r_paths(const AffineElem& y, const AffineElem& w) const;
  /// Same sum from an explicit, uncached enumeration.
  LaurentPoly periodic_r_enumerated(const AffineElem& y, const AffineElem& w) const;

  /// Reflection-only paths weighted by q^{(l(y,w) - length)/2} (q - 1)^length.
  LaurentPoly r_restricted(const AffineElem& y, const AffineElem& w) const;
  /// Translation-only paths weighted like periodic_r_paths.
  LaurentPoly t_restricted(const AffineElem& y, const AffineElem& w) const;
  /// Sum over mu >= 0 of r(y, w t_{-mu}) t(w t_{-mu}, w).
  LaurentPoly decomposition_sum(const AffineElem& y, const AffineElem& w) const;
  bool check_decomposition(const AffineElem& y, const AffineElem& w) const;

  std::vector<DBPath> enumerate_dbp(const AffineElem& y, const AffineElem& w) const;
  Census dbp_census(const AffineElem& y, const AffineElem& w) const;
  /// Sum over double Bruhat paths of q^deg (q - 1)^{l'}.
  LaurentPoly periodic_r_dbg(const AffineElem& y, const AffineElem& w) const;

  SIPath dbp_to_sipath(const DBPath& path, const AffineElem& y) const;
  DBPath sipath_to_dbp(const SIPath& path) const;

  /// Throws ConsistencyError naming the first violated edge or label condition.
  void validate_path(const SIPath& path) const;
  /// Path through the given vertices using reflection edges with the given labels.
  SIPath reflection_path(const std::vector<AffineElem>& vertices,
                         const std::vector<int>& labels) const;

  /// 1-based positions i with s u_i = u_{i-1}.
  std::vector<int> descent_set(const SIPath& path, int s) const;
  SIPath apply_psi_L(const SIPath& path, int s) const;
  SIPath apply_psi_R(const SIPath& path, int s) const;

 private:
  struct CensusKey {
    PairKey pair;
    int pos = 0;
    unsigned mask = 0;
    friend bool operator==(const CensusKey&, const CensusKey&) = default;
  };
  struct CensusKeyHash {
    std::size_t operator()(const CensusKey& k) const noexcept {
      std::size_t h = PairKeyHash{}(k.pair);
      hash_combine(h, static_cast<std::size_t>(k.pos));
      hash_combine(h, k.mask);
      return h;
    }
  };
  struct DbpKey {
    std::uint32_t u = 0;
    std::uint32_t target = 0;
    Coweight budget;
    int pos = 0;
    bool used = false;
    friend bool operator==(const DbpKey& a, const DbpKey& b) {
      return a.u == b.u && a.target == b.target && lattice_equal(a.budget, b.budget) &&
             a.pos == b.pos && a.used == b.used;
    }
  };
  struct DbpKeyHash {
    std::size_t operator()(const DbpKey& k) const noexcept {
      std::size_t h = LatticeHash{}(k.budget);
      hash_combine(h, k.u);
      hash_combine(h, k.target);
      hash_combine(h, static_cast<std::size_t>(k.pos));
      hash_combine(h, k.used ? 1U : 0U);
      return h;
    }
  };

  bool reachable(const AffineElem& x, const AffineElem& w) const;
  const Census& census_from(const AffineElem& x, const AffineElem& w, int pos, unsigned mask) const;
  const Census& dbp_from(WeylElem u, WeylElem target, const Coweight& budget, int pos,
                         bool used) const;

  std::shared_ptr<const AffineWeylGroup> aff_;
  ReflectionOrder order_;
  std::vector<DBGEdge> dbg_;  // indexed [u * N + beta]
  mutable std::recursive_mutex mutex_;
  mutable std::unordered_map<CensusKey, Census, CensusKeyHash> census_cache_;
  mutable std::unordered_map<DbpKey, Census, DbpKeyHash> dbp_cache_;
};

}  // namespace rpoly
