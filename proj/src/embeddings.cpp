#include "ffdg/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ffdg {

namespace {

void validate_lengths(const FiniteField& field, const DistanceGraph& graph) {
  for (const auto& e : graph.edges()) {
    if (e.lambda >= field.q())
      throw std::invalid_argument("edge length encoding out of range for q");
    // lambda != 0 is a graph invariant; the field check is the q bound only.
  }
}

BigInt int_pow(BigInt base, unsigned exp) {
  BigInt out = 1;
  while (exp) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

BigRational rational_pow(const BigRational& base, int exp) {
  if (exp < 0) return 1 / rational_pow(base, -exp);
  BigRational out = 1, b = base;
  unsigned e = unsigned(exp);
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

BigRational q_pow(std::uint32_t q, int exp) {
  BigInt p = int_pow(BigInt(q), unsigned(exp < 0 ? -exp : exp));
  return exp < 0 ? BigRational(1, p) : BigRational(p, 1);
}

// Number of injective placements of `slots` labeled points into `avail`
// remaining values: avail (avail-1) ... (avail-slots+1), zero when short.
BigInt falling_factorial(std::uint64_t avail, int slots) {
  BigInt out = 1;
  for (int i = 0; i < slots; ++i) {
    if (std::uint64_t(i) >= avail) return 0;
    out *= BigInt(avail - std::uint64_t(i));
  }
  return out;
}

EmbeddingCount finalize(const VectorSpace& space, const DistanceGraph& graph,
                        BigInt c, BigInt c_star) {
  EmbeddingCount out;
  out.n = graph.n();
  out.m = graph.m();
  out.tuples = std::move(c);
  out.tuples_distinct = std::move(c_star);
  BigInt denom = int_pow(BigInt(space.field().q()),
                         unsigned(graph.n()) * unsigned(space.dim()));
  BigInt qm = int_pow(BigInt(space.field().q()), unsigned(graph.m()));
  out.normalized = BigRational(out.tuples * qm, denom);
  out.normalized_distinct = BigRational(out.tuples_distinct * qm, denom);
  out.normalized_f = out.normalized.convert_to<double>();
  out.normalized_distinct_f = out.normalized_distinct.convert_to<double>();
  return out;
}

}  // namespace

EmbeddingCount count_bruteforce(const PointSet& set, const DistanceGraph& graph,
                                std::uint64_t budget) {
  const VectorSpace& space = set.space();
  validate_lengths(space.field(), graph);
  const int n = graph.n();
  const std::uint64_t s = set.count();

  BigInt checks = int_pow(BigInt(s), unsigned(n)) *
                  BigInt(std::max(graph.m(), 1));
  if (checks > BigInt(budget))
    throw std::length_error("brute-force enumeration exceeds the budget");

  const auto& pts = set.members();
  BigInt c = 0, c_star = 0;
  if (s == 0) return finalize(space, graph, 0, 0);

  std::vector<std::size_t> idx(std::size_t(n), 0);
  std::vector<VecIndex> tuple(static_cast<std::size_t>(n));
  std::uint64_t c_local = 0, c_star_local = 0;
  while (true) {
    for (int v = 0; v < n; ++v) tuple[std::size_t(v)] = pts[idx[std::size_t(v)]];
    bool ok = true;
    for (const auto& e : graph.edges()) {
      if (space.distance(tuple[std::size_t(e.i)], tuple[std::size_t(e.j)]) !=
          e.lambda) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++c_local;
      bool distinct = true;
      for (int a = 0; a < n && distinct; ++a)
        for (int b = a + 1; b < n; ++b)
          if (tuple[std::size_t(a)] == tuple[std::size_t(b)]) {
            distinct = false;
            break;
          }
      if (distinct) ++c_star_local;
    }
    int v = 0;
    while (v < n && idx[std::size_t(v)] + 1 == s) {
      idx[std::size_t(v)] = 0;
      ++v;
    }
    if (v == n) break;
    ++idx[std::size_t(v)];
  }
  c = c_local;
  c_star = c_star_local;
  return finalize(space, graph, std::move(c), std::move(c_star));
}

EmbeddingCount count_backtracking(const PointSet& set,
                                  const DistanceGraph& graph,
                                  const SphereIndex& spheres) {
  const VectorSpace& space = set.space();
  if (space != spheres.space())
    throw std::invalid_argument("sphere index built over a different space");
  validate_lengths(space.field(), graph);

  const int n = graph.n();
  const std::uint64_t s = set.count();

  std::vector<std::vector<std::pair<int, Elem>>> adj(static_cast<std::size_t>(n));
  for (const auto& e : graph.edges()) {
    adj[std::size_t(e.i)].push_back({e.j, e.lambda});
    adj[std::size_t(e.j)].push_back({e.i, e.lambda});
  }

  // Static greedy order: vertices with an already-assigned neighbor first
  // (smallest sphere first), then fresh component starts, isolated vertices
  // last; ties break on vertex index.
  std::vector<int> order;
  order.reserve(std::size_t(n));
  std::vector<char> assigned(std::size_t(n), 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::uint64_t best_cat = 0, best_est = 0;
    for (int v = 0; v < n; ++v) {
      if (assigned[std::size_t(v)]) continue;
      std::uint64_t cat, est;
      if (adj[std::size_t(v)].empty()) {
        cat = 2;
        est = 0;
      } else {
        cat = 1;
        est = s;
        for (const auto& [u, lambda] : adj[std::size_t(v)]) {
          if (!assigned[std::size_t(u)]) continue;
          std::uint64_t sz = spheres.shell_size(lambda);
          if (cat == 1 || sz < est) est = sz;
          cat = 0;
        }
      }
      if (best == -1 || cat < best_cat ||
          (cat == best_cat && est < best_est)) {
        best = v;
        best_cat = cat;
        best_est = est;
      }
    }
    order.push_back(best);
    assigned[std::size_t(best)] = 1;
  }

  int tail_start = n;
  while (tail_start > 0 &&
         adj[std::size_t(order[std::size_t(tail_start) - 1])].empty())
    --tail_start;
  const int tail_len = n - tail_start;

  // constraints[pos]: edges from order[pos] to earlier positions, smallest
  // shell first so the cheapest translate drives enumeration.
  std::vector<std::vector<std::pair<int, Elem>>> constraints(static_cast<std::size_t>(n));
  std::vector<int> pos_of(std::size_t(n), 0);
  for (int pos = 0; pos < n; ++pos) pos_of[std::size_t(order[std::size_t(pos)])] = pos;
  for (int pos = 0; pos < n; ++pos) {
    for (const auto& [u, lambda] : adj[std::size_t(order[std::size_t(pos)])])
      if (pos_of[std::size_t(u)] < pos)
        constraints[std::size_t(pos)].push_back({pos_of[std::size_t(u)], lambda});
    std::sort(constraints[std::size_t(pos)].begin(),
              constraints[std::size_t(pos)].end(),
              [&](const auto& a, const auto& b) {
                auto sa = spheres.shell_size(a.second);
                auto sb = spheres.shell_size(b.second);
                if (sa != sb) return sa < sb;
                return a < b;
              });
  }

  BigInt c = 0, c_star = 0;
  if (n > 0 && s == 0) {
    // Empty set: zero everywhere (the tail power would also vanish).
    return finalize(space, graph, 0, 0);
  }

  std::vector<VecIndex> placed;
  placed.reserve(std::size_t(n));
  const BigInt tail_power = int_pow(BigInt(s), unsigned(tail_len));

  // Memoized candidate count for a single constraint: number of points of
  // the set on the lambda-sphere around a center.
  const bool memo_ok = space.size() < (std::uint64_t{1} << 44);
  std::unordered_map<std::uint64_t, std::uint64_t> single_count;
  auto count_single = [&](Elem lambda, VecIndex center) -> std::uint64_t {
    std::uint64_t key = (std::uint64_t(lambda) << 44) | center;
    if (memo_ok) {
      auto it = single_count.find(key);
      if (it != single_count.end()) return it->second;
    }
    std::uint64_t cnt = 0;
    for (std::uint32_t u : spheres.shell(lambda))
      if (set.contains(space.add(center, u))) ++cnt;
    if (memo_ok) single_count.emplace(key, cnt);
    return cnt;
  };

  // Does z satisfy every constraint of position pos?
  auto satisfies = [&](VecIndex z, int pos) {
    for (const auto& [cpos, lambda] : constraints[std::size_t(pos)])
      if (space.distance(z, placed[std::size_t(cpos)]) != lambda) return false;
    return true;
  };

  auto dfs = [&](auto&& self, int pos, bool distinct) -> void {
    if (pos == tail_start) {
      // Remaining vertices are isolated: s choices each for C; injective
      // choices among the unused points for C*.
      c += tail_power;
      if (distinct)
        c_star += falling_factorial(s - std::uint64_t(pos), tail_len);
      return;
    }
    const auto& cons = constraints[std::size_t(pos)];
    if (pos == tail_start - 1 && !cons.empty()) {
      // Last constrained vertex: count candidates instead of branching.
      // Nothing after this position depends on the candidate's value, only
      // on how many distinct points are in use.
      std::uint64_t c_all;
      if (cons.size() == 1) {
        c_all = count_single(cons[0].second, placed[std::size_t(cons[0].first)]);
      } else {
        c_all = 0;
        VecIndex center = placed[std::size_t(cons[0].first)];
        for (std::uint32_t u : spheres.shell(cons[0].second)) {
          VecIndex y = space.add(center, u);
          if (set.contains(y) && satisfies(y, pos)) ++c_all;
        }
      }
      c += BigInt(c_all) * tail_power;
      if (distinct) {
        std::uint64_t hit = 0;  // placed points that are also candidates
        for (VecIndex z : placed)
          if (satisfies(z, pos)) ++hit;
        if (c_all > hit)
          c_star += BigInt(c_all - hit) *
                    falling_factorial(s - std::uint64_t(pos) - 1, tail_len);
      }
      return;
    }
    auto descend = [&](VecIndex y) {
      bool still_distinct = distinct;
      if (still_distinct)
        for (VecIndex z : placed)
          if (z == y) {
            still_distinct = false;
            break;
          }
      placed.push_back(y);
      self(self, pos + 1, still_distinct);
      placed.pop_back();
    };
    if (cons.empty()) {
      for (VecIndex y : set.members()) descend(y);
    } else {
      VecIndex center = placed[std::size_t(cons[0].first)];
      for (std::uint32_t u : spheres.shell(cons[0].second)) {
        VecIndex y = space.add(center, u);
        if (set.contains(y) && satisfies(y, pos)) descend(y);
      }
    }
  };
  dfs(dfs, 0, true);

  return finalize(space, graph, std::move(c), std::move(c_star));
}

EmbeddingCount fullspace_triangle_count(const VectorSpace& space, Elem lambda,
                                        const SphereIndex& spheres) {
  if (space != spheres.space())
    throw std::invalid_argument("sphere index built over a different space");
  if (lambda >= space.field().q())
    throw std::invalid_argument("lambda out of range");
  if (lambda == 0) throw std::domain_error("triangle side must be nonzero");
  if (space.dim() < 2)
    throw std::invalid_argument("triangle counting needs d >= 2");

  auto shell = spheres.shell(lambda);
  BigInt pair_count = 0;
  if (!shell.empty()) {
    // I = |S_lambda(0) cap S_lambda(y0)| is the same for every y0 on the
    // sphere, so one representative suffices.
    VecIndex y0 = shell[0];
    std::uint64_t overlap = 0;
    for (std::uint32_t z : shell)
      if (space.distance(z, y0) == lambda) ++overlap;
    pair_count = BigInt(shell.size()) * BigInt(overlap);
  }
  BigInt c = BigInt(space.size()) * pair_count;
  // lambda != 0 makes adjacent vertices distinct, and K3 is all-adjacent.
  auto graph = DistanceGraph::generate(GraphKind::complete, 3, lambda);
  return finalize(space, graph, c, c);
}

namespace {

TheoremCheckRecord check_impl(const PointSet& set, const DistanceGraph& graph,
                              const EmbeddingCount& counts) {
  if (counts.n != graph.n() || counts.m != graph.m())
    throw std::invalid_argument("counts were computed for a different graph");
  const VectorSpace& space = set.space();
  const std::uint32_t q = space.field().q();
  const int d = space.dim();
  const int n = graph.n();
  const int m = graph.m();
  const int t = graph.t();

  TheoremCheckRecord rec;
  rec.n = n;
  rec.m = m;
  rec.t = t;
  rec.field_spec = space.field().spec_string();
  rec.d = d;
  rec.set_size = set.count();
  BigRational alpha(BigInt(set.count()), BigInt(space.size()));
  rec.alpha = alpha.convert_to<double>();
  rec.normalized = counts.normalized_f;
  rec.normalized_distinct = counts.normalized_distinct_f;

  // alpha >= 4 m q^{t-(d+1)/2}, compared exactly through squares.
  BigRational lhs_sq = alpha * alpha;
  BigRational hyp_sq =
      BigRational(BigInt(16) * m * m, 1) * q_pow(q, 2 * t - d - 1);
  rec.hypothesis_met = lhs_sq >= hyp_sq;

  BigRational alpha_pow_n = rational_pow(alpha, n);
  BigRational gap_rat = counts.normalized - alpha_pow_n;
  if (gap_rat < 0) gap_rat = -gap_rat;
  rec.gap = gap_rat.convert_to<double>();
  double alpha_nm1 = rational_pow(alpha, n - 1).convert_to<double>();
  rec.bound = 4.0 * double(m) * alpha_nm1 *
              std::pow(double(q), double(t) - 0.5 * double(d + 1));
  rec.holds = !rec.hypothesis_met || rec.gap <= rec.bound + 1e-9;

  // Coincidence defect N - N* against 2 n^2 alpha^{n-1} q^{t-d}; both sides
  // are exact rationals, so the comparison needs no tolerance.
  BigRational defect_rat = counts.normalized - counts.normalized_distinct;
  BigRational defect_bound_rat = BigRational(BigInt(2) * n * n, 1) *
                                 rational_pow(alpha, n - 1) * q_pow(q, t - d);
  rec.defect = defect_rat.convert_to<double>();
  rec.defect_bound = defect_bound_rat.convert_to<double>();
  rec.defect_holds = !rec.hypothesis_met || defect_rat <= defect_bound_rat;

  // alpha >= 12 n^2 q^{t-(d+1)/2}, again via squares.
  BigRational gen_sq = BigRational(BigInt(144) * n * n * n * n, 1) *
                       q_pow(q, 2 * t - d - 1);
  rec.genuine_threshold_met = lhs_sq >= gen_sq;
  rec.genuine_holds = !rec.genuine_threshold_met ||
                      counts.normalized_distinct >= alpha_pow_n / 2;
  return rec;
}

}  // namespace

TheoremCheckRecord asymptotic_check(const PointSet& set,
                                    const DistanceGraph& graph,
                                    const EmbeddingCount& counts) {
  return check_impl(set, graph, counts);
}

TheoremCheckRecord genuine_check(const PointSet& set,
                                 const DistanceGraph& graph,
                                 const EmbeddingCount& counts) {
  return check_impl(set, graph, counts);
}

}  // namespace ffdg
