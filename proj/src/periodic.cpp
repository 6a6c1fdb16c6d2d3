#include "rpoly/periodic.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <string>

#include "rpoly/errors.hpp"

namespace rpoly {

namespace {

int halve_exact(int twice, const char* what) {
  if (twice % 2 != 0) throw ConsistencyError(std::string("odd doubled value in ") + what);
  return twice / 2;
}

// Largest m >= 0 with budget - m * step >= 0, or -1 if budget itself is not >= 0.
int max_multiple(const Coweight& budget, const Coweight& step) {
  if (!all_nonnegative(budget)) return -1;
  int best = std::numeric_limits<int>::max();
  for (Eigen::Index i = 0; i < step.size(); ++i)
    if (step(i) > 0) best = std::min(best, budget(i) / step(i));
  return best;
}

void add_shifted(Census& into, const Census& from, int ddeg, int dlen) {
  for (const auto& [key, count] : from) into[{key.first + ddeg, key.second + dlen}] += count;
}

}  // namespace

std::vector<AffineElem> SIPath::vertices() const {
  std::vector<AffineElem> out{start};
  for (const auto& e : edges) out.push_back(e.target);
  return out;
}

LaurentPoly census_poly(const Census& census) {
  std::map<int, LaurentPoly> by_length;
  for (const auto& [key, count] : census) by_length[key.second].add_term(count, key.first);
  LaurentPoly out;
  for (const auto& [len, poly] : by_length) out += poly * LaurentPoly::q_minus_one_pow(len);
  return out;
}

BigInt census_size(const Census& census) {
  BigInt n = 0;
  for (const auto& [key, count] : census) n += count;
  return n;
}

int edge_d(const AffineWeylGroup& aff, const SIEdge& e) {
  const int diff = aff.si_length_diff(e.source, e.target);
  if (e.kind == EdgeKind::translation) return halve_exact(diff + 2 * e.m, "translation edge d");
  const bool increases = aff.finite().length(e.target.cl) > aff.finite().length(e.source.cl);
  return halve_exact(diff + (increases ? 1 : -1) + 2 * e.m, "reflection edge d");
}

int path_deg(const AffineWeylGroup& aff, const SIPath& path) {
  int total = 0;
  for (const auto& e : path.edges) total += edge_d(aff, e);
  return total - path.length();
}

int path_len(const SIPath& path) { return path.length(); }

PathSets path_sets(const ReflectionOrder& order, const SIPath& path) {
  PathSets sets;
  sets.T.assign(order.size(), 0);
  for (const auto& e : path.edges) {
    sets.e.push_back(e.label);
    (e.kind == EdgeKind::reflection ? sets.r : sets.t).push_back(e.label);
    sets.T[order.position(e.label)] = e.m;
  }
  return sets;
}

DBGEdge dbg_edge(const WeylGroup& group, WeylElem source, int beta) {
  const WeylElem target = group.right_reflect(source, beta);
  const int gap = group.length_diff(source, target);
  DBGEdge e{source, target, beta, 0, gap < 0};
  const int twice = e.quantum ? gap + 2 * height(group.roots().coroot(beta)) + 1 : gap + 1;
  e.d = halve_exact(twice, "double Bruhat graph edge weight");
  if (e.d < 1) throw ConsistencyError("double Bruhat graph edge with weight below 1");
  return e;
}

std::vector<DBGEdge> build_dbg(const WeylGroup& group) {
  std::vector<DBGEdge> out;
  const int n = group.roots().num_positive();
  out.reserve(group.size() * n);
  for (const WeylElem u : group.elements())
    for (int beta = 0; beta < n; ++beta) out.push_back(dbg_edge(group, u, beta));
  return out;
}

int dbp_len_prime(const DBPath& path) {
  std::set<int> labels;
  for (const auto& e : path.edges) labels.insert(e.label);
  return static_cast<int>(labels.size());
}

int dbp_deg(const DBPath& path) {
  int total = 0;
  for (const auto& e : path.edges) total += e.d;
  return total - dbp_len_prime(path);
}

PeriodicEngine::PeriodicEngine(std::shared_ptr<const AffineWeylGroup> aff, ReflectionOrder order)
    : aff_(std::move(aff)), order_(std::move(order)) {
  if (static_cast<int>(order_.size()) != roots().num_positive())
    throw PreconditionError("reflection order does not match the root system");
  dbg_ = build_dbg(finite());
}

std::vector<SIEdge> PeriodicEngine::si_edge_candidates(const AffineElem& y, int beta,
                                                       const Coweight& budget, unsigned mask,
                                                       bool cached) const {
  std::vector<SIEdge> out;
  const Coweight step = roots().coroot(beta);
  const int bound = max_multiple(budget, step);
  if (bound < 0) return out;
  if (mask & kTranslationEdges) {
    for (int m = 1; m <= bound; ++m)
      out.push_back({y, aff_->translate(y, Coweight(m * step)), beta, m, EdgeKind::translation});
  }
  if (mask & kReflectionEdges) {
    const WeylElem cl = finite().right_reflect(y.cl, beta);
    for (int m = 0; m <= bound; ++m) {
      AffineElem target{cl, y.wt + m * step};
      const bool ok =
          cached ? aff_->si_less(y, target) : (!(y == target) && aff_->si_leq_uncached(y, target));
      if (ok) out.push_back({y, std::move(target), beta, m, EdgeKind::reflection});
    }
  }
  return out;
}

bool PeriodicEngine::reachable(const AffineElem& x, const AffineElem& w) const {
  return all_nonnegative(w.wt - x.wt) && aff_->si_length(x) < aff_->si_length(w);
}

std::vector<SIPath> PeriodicEngine::enumerate_si_paths(const AffineElem& y, const AffineElem& w,
                                                       unsigned mask, bool cached) const {
  std::vector<SIPath> out;
  if (!all_nonnegative(w.wt - y.wt)) return out;
  SIPath current{y, {}};
  // Vertices are passed by value: `current` reallocates as the search deepens.
  std::function<void(AffineElem, std::size_t)> walk = [&](AffineElem x, std::size_t next) {
    if (x == w) {
      out.push_back(current);
      return;
    }
    if (!reachable(x, w)) return;
    for (std::size_t p = next; p < order_.size(); ++p) {
      for (auto& e : si_edge_candidates(x, order_.at(p), w.wt - x.wt, mask, cached)) {
        if (!(e.target == w) && aff_->si_length(e.target) >= aff_->si_length(w)) continue;
        current.edges.push_back(e);
        walk(e.target, p + 1);
        current.edges.pop_back();
      }
    }
  };
  walk(y, 0);
  return out;
}

const Census& PeriodicEngine::census_from(const AffineElem& x, const AffineElem& w, int pos,
                                          unsigned mask) const {
  std::lock_guard lock(mutex_);
  CensusKey key{pair_key(x, w), pos, mask};
  if (auto it = census_cache_.find(key); it != census_cache_.end()) return it->second;

  Census result;
  if (x == w) {
    result[{0, 0}] = 1;
  } else if (pos < static_cast<int>(order_.size()) && reachable(x, w)) {
    result = census_from(x, w, pos + 1, mask);
    for (const auto& e : si_edge_candidates(x, order_.at(pos), w.wt - x.wt, mask)) {
      if (!(e.target == w) && aff_->si_length(e.target) >= aff_->si_length(w)) continue;
      add_shifted(result, census_from(e.target, w, pos + 1, mask), edge_d(*aff_, e) - 1, 1);
    }
  }
  return census_cache_.emplace(std::move(key), std::move(result)).first->second;
}

Census PeriodicEngine::si_census(const AffineElem& y, const AffineElem& w, unsigned mask) const {
  return census_from(y, w, 0, mask);
}

LaurentPoly PeriodicEngine::periodic_r_paths(const AffineElem& y, const AffineElem& w) const {
  return census_poly(si_census(y, w));
}

LaurentPoly PeriodicEngine::periodic_r_enumerated(const AffineElem& y, const AffineElem& w) const {
  Census census;
  for (const auto& path : enumerate_si_paths(y, w, kAllEdges, false))
    census[{path_deg(*aff_, path), path.length()}] += 1;
  return census_poly(census);
}

LaurentPoly PeriodicEngine::r_restricted(const AffineElem& y, const AffineElem& w) const {
  const int gap = aff_->si_length_diff(y, w);
  std::map<int, BigInt> by_length;
  for (const auto& [key, count] : si_census(y, w, kReflectionEdges)) by_length[key.second] += count;
  LaurentPoly out;
  for (const auto& [len, count] : by_length) {
    if (gap < len) throw ConsistencyError("reflection path longer than the length gap");
    const int e = halve_exact(gap - len, "restricted reflection sum exponent");
    out += LaurentPoly::monomial(count, e) * LaurentPoly::q_minus_one_pow(len);
  }
  return out;
}

LaurentPoly PeriodicEngine::t_restricted(const AffineElem& y, const AffineElem& w) const {
  return census_poly(si_census(y, w, kTranslationEdges));
}

LaurentPoly PeriodicEngine::decomposition_sum(const AffineElem& y, const AffineElem& w) const {
  const Coweight nu = w.wt - y.wt;
  LaurentPoly out;
  if (!all_nonnegative(nu)) return out;
  const int l = aff_->rank();
  Coweight mu = zero_vector(l);
  while (true) {
    const AffineElem z{w.cl, w.wt - mu};
    const LaurentPoly r = r_restricted(y, z);
    if (!r.is_zero()) out += r * t_restricted(z, w);
    int i = 0;
    while (i < l && mu(i) == nu(i)) mu(i++) = 0;
    if (i == l) break;
    ++mu(i);
  }
  return out;
}

bool PeriodicEngine::check_decomposition(const AffineElem& y, const AffineElem& w) const {
  return periodic_r_paths(y, w) == decomposition_sum(y, w);
}

std::vector<DBPath> PeriodicEngine::enumerate_dbp(const AffineElem& y, const AffineElem& w) const {
  std::vector<DBPath> out;
  const Coweight total = w.wt - y.wt;
  if (!all_nonnegative(total)) return out;
  const int n = roots().num_positive();
  DBPath current{{y.cl}, {}, zero_vector(aff_->rank())};
  std::function<void(WeylElem, std::size_t, const Coweight&)> walk =
      [&](WeylElem u, std::size_t next, const Coweight& budget) {
        if (u == w.cl && budget.isZero()) out.push_back(current);
        for (std::size_t p = next; p < order_.size(); ++p) {
          const int beta = order_.at(p);
          const DBGEdge& e = dbg_[static_cast<std::size_t>(u.id) * n + beta];
          Coweight rest = budget;
          if (e.quantum) {
            rest -= roots().coroot(beta);
            if (!all_nonnegative(rest)) continue;
          }
          current.vertices.push_back(e.target);
          current.edges.push_back(e);
          current.quantum_sum = total - rest;
          walk(e.target, p, rest);
          current.vertices.pop_back();
          current.edges.pop_back();
          current.quantum_sum = total - budget;
        }
      };
  walk(y.cl, 0, total);
  return out;
}

const Census& PeriodicEngine::dbp_from(WeylElem u, WeylElem target, const Coweight& budget, int pos,
                                       bool used) const {
  std::lock_guard lock(mutex_);
  DbpKey key{u.id, target.id, budget, pos, used};
  if (auto it = dbp_cache_.find(key); it != dbp_cache_.end()) return it->second;

  Census result;
  if (pos == static_cast<int>(order_.size())) {
    if (u == target && budget.isZero()) result[{0, 0}] = 1;
  } else {
    // Paths whose first label comes later, plus paths starting with the label at pos.
    result = dbp_from(u, target, budget, pos + 1, false);
    const int beta = order_.at(pos);
    const DBGEdge& e = dbg_[static_cast<std::size_t>(u.id) * roots().num_positive() + beta];
    Coweight rest = budget;
    if (e.quantum) rest -= roots().coroot(beta);
    if (all_nonnegative(rest)) {
      const int fresh = used ? 0 : 1;
      add_shifted(result, dbp_from(e.target, target, rest, pos, true), e.d - fresh, fresh);
    }
  }
  return dbp_cache_.emplace(std::move(key), std::move(result)).first->second;
}

Census PeriodicEngine::dbp_census(const AffineElem& y, const AffineElem& w) const {
  const Coweight total = w.wt - y.wt;
  if (!all_nonnegative(total)) return {};
  return dbp_from(y.cl, w.cl, total, 0, false);
}

LaurentPoly PeriodicEngine::periodic_r_dbg(const AffineElem& y, const AffineElem& w) const {
  return census_poly(dbp_census(y, w));
}

SIPath PeriodicEngine::dbp_to_sipath(const DBPath& path, const AffineElem& y) const {
  if (path.vertices.empty() || path.vertices.front() != y.cl)
    throw PreconditionError("double Bruhat path does not start at cl(y)");
  SIPath out{y, {}};
  AffineElem current = y;
  std::size_t i = 0;
  while (i < path.edges.size()) {
    const int beta = path.edges[i].label;
    const WeylElem base = path.edges[i].source;
    if (base != current.cl) throw PreconditionError("double Bruhat path is not connected");
    int a = 0, m = 0;
    WeylElem at = base;
    while (i < path.edges.size() && path.edges[i].label == beta) {
      const DBGEdge& e = path.edges[i];
      if (e.source != at || !(e == dbg_edge(finite(), at, beta)))
        throw PreconditionError("double Bruhat path contains an edge not in the graph");
      at = e.target;
      m += e.quantum ? 1 : 0;
      ++a;
      ++i;
    }
    const Coweight step = m * roots().coroot(beta);
    if (a == 2 * m) {
      out.edges.push_back(
          {current, aff_->translate(current, step), beta, m, EdgeKind::translation});
    } else if (a == 2 * m + 1 || a == 2 * m - 1) {
      out.edges.push_back(
          {current, AffineElem{at, current.wt + step}, beta, m, EdgeKind::reflection});
    } else {
      throw PreconditionError("run of " + std::to_string(a) + " edges with " + std::to_string(m) +
                              " quantum edges has no path counterpart");
    }
    current = out.edges.back().target;
  }
  return out;
}

DBPath PeriodicEngine::sipath_to_dbp(const SIPath& path) const {
  DBPath out{{path.start.cl}, {}, zero_vector(aff_->rank())};
  for (const auto& e : path.edges) {
    int a = 0;
    if (e.kind == EdgeKind::translation) {
      a = 2 * e.m;
    } else {
      const bool increases = finite().length(e.target.cl) > finite().length(e.source.cl);
      a = increases ? 2 * e.m + 1 : 2 * e.m - 1;
    }
    if (a <= 0) throw PreconditionError("edge has no double Bruhat counterpart");
    WeylElem at = e.source.cl;
    int quantum = 0;
    for (int j = 0; j < a; ++j) {
      const DBGEdge step = dbg_edge(finite(), at, e.label);
      quantum += step.quantum ? 1 : 0;
      out.edges.push_back(step);
      out.vertices.push_back(step.target);
      at = step.target;
    }
    if (quantum != e.m || at != e.target.cl)
      throw ConsistencyError("edge run does not reproduce the multiplicity of the path edge");
    out.quantum_sum += e.m * roots().coroot(e.label);
  }
  return out;
}

void PeriodicEngine::validate_path(const SIPath& path) const {
  AffineElem at = path.start;
  int last = -1;
  for (std::size_t j = 0; j < path.edges.size(); ++j) {
    const SIEdge& e = path.edges[j];
    const std::string where = "edge " + std::to_string(j + 1) + ": ";
    if (!(e.source == at)) throw ConsistencyError(where + "source is not the previous target");
    const int pos = order_.position(e.label);
    if (pos <= last) throw ConsistencyError(where + "labels are not strictly increasing");
    last = pos;
    const Coweight step = e.m * roots().coroot(e.label);
    if (e.kind == EdgeKind::translation) {
      if (e.m <= 0) throw ConsistencyError(where + "translation edge with m <= 0");
      if (!(e.target == aff_->translate(e.source, step)))
        throw ConsistencyError(where + "translation edge target mismatch");
    } else {
      if (e.m < 0) throw ConsistencyError(where + "reflection edge with m < 0");
      const AffineElem expect{finite().right_reflect(e.source.cl, e.label), e.source.wt + step};
      if (!(e.target == expect)) throw ConsistencyError(where + "reflection edge target mismatch");
    }
    // Filtered on for reflection edges, only asserted for translation edges.
    if (!aff_->si_less(e.source, e.target))
      throw ConsistencyError(where + "edge is not semi-infinite increasing");
    if (edge_d(*aff_, e) < 0) throw ConsistencyError(where + "negative edge weight");
    at = e.target;
  }
}

SIPath PeriodicEngine::reflection_path(const std::vector<AffineElem>& vertices,
                                       const std::vector<int>& labels) const {
  if (vertices.size() != labels.size() + 1)
    throw PreconditionError("vertex and label counts do not match");
  SIPath out{vertices.front(), {}};
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const AffineElem& a = vertices[j];
    const AffineElem& b = vertices[j + 1];
    const int beta = labels[j];
    if (finite().right_reflect(a.cl, beta) != b.cl)
      throw ConsistencyError("consecutive vertices are not related by the label reflection");
    const Coweight diff = b.wt - a.wt;
    const Coweight step = roots().coroot(beta);
    int m = 0;
    for (Eigen::Index i = 0; i < step.size(); ++i)
      if (step(i) != 0) {
        m = diff(i) / step(i);
        break;
      }
    if (!(diff == m * step) || m < 0)
      throw ConsistencyError("weight change is not a nonnegative multiple of the coroot");
    out.edges.push_back({a, b, beta, m, EdgeKind::reflection});
  }
  return out;
}

std::vector<int> PeriodicEngine::descent_set(const SIPath& path, int s) const {
  std::vector<int> out;
  const auto v = path.vertices();
  for (std::size_t i = 1; i < v.size(); ++i)
    if (aff_->left_mul_simple(s, v[i]) == v[i - 1]) out.push_back(static_cast<int>(i));
  return out;
}

SIPath PeriodicEngine::apply_psi_L(const SIPath& path, int s) const {
  const auto descents = descent_set(path, s);
  if (descents.empty()) throw PreconditionError("empty s-descent set");
  const int d = descents.front();
  const auto v = path.vertices();
  std::vector<AffineElem> vertices;
  std::vector<int> labels;
  for (int i = 0; i < d; ++i) vertices.push_back(aff_->left_mul_simple(s, v[i]));
  for (int i = d + 1; i < static_cast<int>(v.size()); ++i) vertices.push_back(v[i]);
  for (int i = 1; i <= path.length(); ++i)
    if (i != d) labels.push_back(path.edges[i - 1].label);
  return reflection_path(vertices, labels);
}

SIPath PeriodicEngine::apply_psi_R(const SIPath& path, int s) const {
  const auto descents = descent_set(path, s);
  if (descents.empty()) throw PreconditionError("empty s-descent set");
  const int d = descents.back();
  const auto v = path.vertices();
  std::vector<AffineElem> vertices;
  std::vector<int> labels;
  for (int i = 0; i < d; ++i) vertices.push_back(v[i]);
  for (int i = d + 1; i < static_cast<int>(v.size()); ++i)
    vertices.push_back(aff_->left_mul_simple(s, v[i]));
  for (int i = 1; i <= path.length(); ++i)
    if (i != d) labels.push_back(path.edges[i - 1].label);
  return reflection_path(vertices, labels);
}

}  // namespace rpoly
