#include "codmeans/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace codmeans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int argmin_row(const double* row, int k) {
  int best = 0;
  for (int j = 1; j < k; ++j) {
    if (row[j] < row[best]) best = j;
  }
  return best;
}

// Joint must-link argmin over all (i, j): point distortions plus the
// inter-centroid penalty when i != j. Row-major scan with strict improvement
// keeps the lexicographically smallest minimizer.
std::pair<int, int> ml_joint(const double* dx, const double* dy,
                             const double* cc, int k) {
  int bi = 0, bj = 0;
  double best = kInf;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double cost = dx[i] + dy[j] + (i == j ? 0.0 : cc[i * k + j]);
      if (cost < best) {
        best = cost;
        bi = i;
        bj = j;
      }
    }
  }
  return {bi, bj};
}

// One endpoint already fixed: optimize the free endpoint only. The penalty
// is symmetric, so the same scan serves either orientation.
int ml_free(int fixed, const double* dfree, const double* cc, int k) {
  int best = 0;
  double best_cost = kInf;
  for (int t = 0; t < k; ++t) {
    double cost = dfree[t] + (t == fixed ? 0.0 : cc[t * k + fixed]);
    if (cost < best_cost) {
      best_cost = cost;
      best = t;
    }
  }
  return best;
}

// Cannot-link penalty references the first endpoint's cluster i: sharing a
// cluster costs the distance from centroid i to its nearest other centroid.
std::pair<int, int> cl_joint(const double* dx, const double* dy,
                             const double* cc, const int* h, int k) {
  int bi = 0, bj = 0;
  double best = kInf;
  for (int i = 0; i < k; ++i) {
    double penalty = cc[i * k + h[i]];
    for (int j = 0; j < k; ++j) {
      double cost = dx[i] + dy[j] + (i == j ? penalty : 0.0);
      if (cost < best) {
        best = cost;
        bi = i;
        bj = j;
      }
    }
  }
  return {bi, bj};
}

int cl_free_second(int i_fixed, const double* dy, const double* cc,
                   const int* h, int k) {
  double penalty = cc[i_fixed * k + h[i_fixed]];
  int best = 0;
  double best_cost = kInf;
  for (int j = 0; j < k; ++j) {
    double cost = dy[j] + (j == i_fixed ? penalty : 0.0);
    if (cost < best_cost) {
      best_cost = cost;
      best = j;
    }
  }
  return best;
}

int cl_free_first(int j_fixed, const double* dx, const double* cc,
                  const int* h, int k) {
  int best = 0;
  double best_cost = kInf;
  for (int i = 0; i < k; ++i) {
    double cost = dx[i] + (i == j_fixed ? cc[i * k + h[i]] : 0.0);
    if (cost < best_cost) {
      best_cost = cost;
      best = i;
    }
  }
  return best;
}

std::vector<double> centroid_cross_distances(
    const std::vector<DenseVector>& centroids) {
  int k = static_cast<int>(centroids.size());
  std::vector<double> cc(static_cast<std::size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double d2 = squared_distance(centroids[i], centroids[j]);
      cc[i * k + j] = d2;
      cc[j * k + i] = d2;
    }
  }
  return cc;
}

std::vector<int> nearest_from_cross(const std::vector<double>& cc, int k) {
  std::vector<int> h(k);
  for (int i = 0; i < k; ++i) {
    int best = i == 0 ? 1 : 0;
    for (int j = 0; j < k; ++j) {
      if (j != i && cc[i * k + j] < cc[i * k + best]) best = j;
    }
    h[i] = best;
  }
  return h;
}

struct Link {
  int partner;
  bool must_link;
};

// Per-document constraint links, must-link first, partners ascending within
// each kind. Iteration order here fixes the summation order of the centroid
// update, so it must stay deterministic.
std::vector<std::vector<Link>> build_adjacency(const IndexedConstraints& cons,
                                               int n) {
  std::vector<std::vector<Link>> adj(n);
  for (const auto& [a, b] : cons.ml) {
    adj[a].push_back({b, true});
    adj[b].push_back({a, true});
  }
  for (const auto& [a, b] : cons.cl) {
    adj[a].push_back({b, false});
    adj[b].push_back({a, false});
  }
  for (auto& links : adj) {
    std::stable_sort(links.begin(), links.end(),
                     [](const Link& x, const Link& y) {
                       if (x.must_link != y.must_link) return x.must_link;
                       return x.partner < y.partner;
                     });
  }
  return adj;
}

void validate_pairs(const std::vector<std::pair<int, int>>& pairs, int n,
                    const char* kind) {
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw Error(std::string(kind) + " constraint pair out of range");
    }
  }
}

// Core of the violation-weighted centroid update, shared by the public
// operation and the solver loop.
DenseVector update_centroid_core(std::span<const int> kept_members,
                                 std::span<const SparseVector> points,
                                 const std::vector<std::vector<Link>>& adj,
                                 const std::vector<int>& assignment,
                                 const std::vector<DenseVector>& start_centroids,
                                 const std::vector<int>& nearest_other,
                                 int cluster, int dim) {
  DenseVector num(dim, 0.0);
  long denom = 0;
  for (int doc : kept_members) {
    add_to(points[doc], num);
    ++denom;
    for (const Link& link : adj[doc]) {
      int partner_cluster = assignment[link.partner];
      if (partner_cluster < 0) continue;  // outlier partners are skipped
      if (link.must_link) {
        if (partner_cluster != cluster) {
          const DenseVector& c = start_centroids[partner_cluster];
          for (std::size_t d = 0; d < c.size(); ++d) num[d] += c[d];
          ++denom;
        }
      } else {
        if (partner_cluster == cluster) {
          const DenseVector& c = start_centroids[nearest_other[cluster]];
          for (std::size_t d = 0; d < c.size(); ++d) num[d] += c[d];
          ++denom;
        }
      }
    }
  }
  if (denom == 0) {
    throw EmptyClusterError("centroid update over an empty cluster");
  }
  for (double& x : num) x /= static_cast<double>(denom);
  return num;
}

std::vector<double> point_rows(std::span<const SparseVector> points,
                               const std::vector<DenseVector>& centroids) {
  int k = static_cast<int>(centroids.size());
  std::vector<double> sqn(k);
  for (int j = 0; j < k; ++j) sqn[j] = squared_norm(centroids[j]);
  std::vector<double> rows(points.size() * static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int j = 0; j < k; ++j) {
      rows[i * k + j] = squared_distance(points[i], centroids[j], sqn[j]);
    }
  }
  return rows;
}

}  // namespace

std::vector<int> nearest_other_centroids(
    const std::vector<DenseVector>& centroids) {
  if (centroids.size() < 2) {
    throw SingleClusterError(
        "nearest-other-centroid map needs at least two centroids");
  }
  int k = static_cast<int>(centroids.size());
  return nearest_from_cross(centroid_cross_distances(centroids), k);
}

double cvqe_error(std::span<const SparseVector> points,
                  const std::vector<DenseVector>& centroids,
                  const std::vector<int>& assignment,
                  const IndexedConstraints& constraints) {
  if (centroids.empty()) throw Error("error objective needs centroids");
  if (assignment.size() != points.size()) {
    throw Error("assignment does not cover the data");
  }
  int k = static_cast<int>(centroids.size());
  for (int g : assignment) {
    if (g < -1 || g >= k) throw Error("document has an invalid assignment");
  }

  std::vector<double> sqn(k);
  for (int j = 0; j < k; ++j) sqn[j] = squared_norm(centroids[j]);

  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    int g = assignment[i];
    if (g < 0) continue;
    total += squared_distance(points[i], centroids[g], sqn[g]);
  }

  std::vector<double> cc;
  std::vector<int> h;
  auto ensure_maps = [&]() {
    if (cc.empty()) {
      cc = centroid_cross_distances(centroids);
      if (k >= 2) h = nearest_from_cross(cc, k);
    }
  };

  // One penalty per violated-pair endpoint, charged from its own cluster.
  for (const auto& [a, b] : constraints.ml) {
    int ga = assignment[a], gb = assignment[b];
    if (ga < 0 || gb < 0 || ga == gb) continue;
    ensure_maps();
    total += 2.0 * cc[ga * k + gb];
  }
  for (const auto& [a, b] : constraints.cl) {
    int ga = assignment[a], gb = assignment[b];
    if (ga < 0 || gb < 0 || ga != gb) continue;
    if (k < 2) {
      throw SingleClusterError(
          "violated cannot-link constraint with a single cluster");
    }
    ensure_maps();
    total += 2.0 * cc[ga * k + h[ga]];
  }
  return 0.5 * total;
}

int assign_unconstrained(const SparseVector& x,
                         const std::vector<DenseVector>& centroids) {
  if (centroids.empty()) throw Error("assignment needs centroids");
  int k = static_cast<int>(centroids.size());
  std::vector<double> row(k);
  for (int j = 0; j < k; ++j) {
    row[j] = squared_distance(x, centroids[j], squared_norm(centroids[j]));
  }
  return argmin_row(row.data(), k);
}

std::pair<int, int> assign_ml_pair(const SparseVector& x, const SparseVector& y,
                                   const std::vector<DenseVector>& centroids) {
  if (centroids.empty()) throw Error("assignment needs centroids");
  int k = static_cast<int>(centroids.size());
  std::vector<double> dx(k), dy(k);
  for (int j = 0; j < k; ++j) {
    double sqn = squared_norm(centroids[j]);
    dx[j] = squared_distance(x, centroids[j], sqn);
    dy[j] = squared_distance(y, centroids[j], sqn);
  }
  std::vector<double> cc = centroid_cross_distances(centroids);
  return ml_joint(dx.data(), dy.data(), cc.data(), k);
}

std::pair<int, int> assign_cl_pair(const SparseVector& x, const SparseVector& y,
                                   const std::vector<DenseVector>& centroids,
                                   const std::vector<int>& nearest_other) {
  if (centroids.size() < 2) {
    throw SingleClusterError(
        "cannot-link assignment needs at least two clusters");
  }
  int k = static_cast<int>(centroids.size());
  std::vector<double> dx(k), dy(k);
  for (int j = 0; j < k; ++j) {
    double sqn = squared_norm(centroids[j]);
    dx[j] = squared_distance(x, centroids[j], sqn);
    dy[j] = squared_distance(y, centroids[j], sqn);
  }
  std::vector<double> cc = centroid_cross_distances(centroids);
  return cl_joint(dx.data(), dy.data(), cc.data(), nearest_other.data(), k);
}

std::pair<std::vector<ClusterMember>, std::vector<ClusterMember>>
trim_outliers(std::vector<ClusterMember> members, int ell) {
  if (ell < 0) throw ConfigError("outlier count per cluster must be >= 0");
  std::sort(members.begin(), members.end(),
            [](const ClusterMember& a, const ClusterMember& b) {
              if (a.distance != b.distance) return a.distance > b.distance;
              return a.doc > b.doc;  // equal distance: higher id trimmed first
            });
  std::size_t cut = std::min<std::size_t>(ell, members.size());
  std::vector<ClusterMember> outliers(members.begin(), members.begin() + cut);
  std::vector<ClusterMember> kept(members.begin() + cut, members.end());
  std::sort(kept.begin(), kept.end(),
            [](const ClusterMember& a, const ClusterMember& b) {
              return a.doc < b.doc;
            });
  return {std::move(kept), std::move(outliers)};
}

DenseVector update_centroid(int cluster, std::span<const int> kept_members,
                            std::span<const SparseVector> points,
                            const IndexedConstraints& constraints,
                            const std::vector<int>& assignment,
                            const std::vector<DenseVector>& start_centroids,
                            const std::vector<int>& nearest_other) {
  int n = static_cast<int>(points.size());
  validate_pairs(constraints.ml, n, "must-link");
  validate_pairs(constraints.cl, n, "cannot-link");
  int dim = 0;
  for (const DenseVector& c : start_centroids) {
    dim = std::max(dim, static_cast<int>(c.size()));
  }
  for (const SparseVector& p : points) {
    if (!p.empty()) {
      dim = std::max(dim, static_cast<int>(p.entries().back().id) + 1);
    }
  }
  std::vector<std::vector<Link>> adj = build_adjacency(constraints, n);
  return update_centroid_core(kept_members, points, adj, assignment,
                              start_centroids, nearest_other, cluster, dim);
}

DenseVector densify(const SparseVector& v, int dim) {
  DenseVector out(dim, 0.0);
  for (const SparseEntry& e : v.entries()) {
    if (static_cast<int>(e.id) >= dim) out.resize(e.id + 1, 0.0);
    out[e.id] = e.weight;
  }
  return out;
}

DenseVector mean_vector(std::span<const SparseVector> points,
                        std::span<const int> members, int dim) {
  DenseVector acc(dim, 0.0);
  for (int i : members) add_to(points[i], acc);
  if (!members.empty()) {
    for (double& x : acc) x /= static_cast<double>(members.size());
  }
  return acc;
}

std::vector<DenseVector> kmeanspp_centroids(std::span<const SparseVector> points,
                                            int k, int dim, Rng& rng) {
  if (points.empty()) throw Error("cannot seed centroids from empty data");
  std::size_t n = points.size();
  std::vector<DenseVector> centroids;
  centroids.reserve(k);
  std::vector<char> used(n, 0);

  std::size_t first = rng.uniform_index(n);
  centroids.push_back(densify(points[first], dim));
  used[first] = 1;

  std::vector<double> best_d2(n, kInf);
  while (static_cast<int>(centroids.size()) < k) {
    const DenseVector& last = centroids.back();
    double last_sqn = squared_norm(last);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double d2 = squared_distance(points[i], last, last_sqn);
      if (d2 < best_d2[i]) best_d2[i] = d2;
      if (!used[i]) total += best_d2[i];
    }
    std::size_t pick = n;
    if (total > 0.0) {
      double r = rng.uniform_double() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        acc += best_d2[i];
        if (acc >= r) {
          pick = i;
          break;
        }
      }
    }
    if (pick == n) {
      // Every remaining point coincides with a centroid (or is used up):
      // fall back to the smallest unused index, repeating the last point
      // when nothing is left.
      for (std::size_t i = 0; i < n; ++i) {
        if (!used[i]) {
          pick = i;
          break;
        }
      }
      if (pick == n) pick = first;
    }
    centroids.push_back(densify(points[pick], dim));
    used[pick] = 1;
  }
  return centroids;
}

std::vector<DenseVector> category_seeded_centroids(
    std::span<const SparseVector> points, int k, int dim,
    const CategorySeedPlan& plan, Rng& rng) {
  if (points.empty()) throw Error("cannot seed centroids from empty data");
  std::vector<int> draws = plan.misc_pool;
  std::sort(draws.begin(), draws.end());
  rng.shuffle(draws);
  std::size_t next_draw = 0;

  int cats = static_cast<int>(plan.category_members.size());
  std::vector<DenseVector> centroids(k);
  std::vector<int> pending;
  std::vector<char> used(points.size(), 0);

  for (int j = 0; j < k; ++j) {
    if (j < cats && !plan.category_members[j].empty()) {
      centroids[j] = mean_vector(points, plan.category_members[j], dim);
    } else if (next_draw < draws.size()) {
      int doc = draws[next_draw++];
      centroids[j] = densify(points[doc], dim);
      used[doc] = 1;
    } else {
      pending.push_back(j);
    }
  }

  // Miscellaneous pool exhausted: spread the remaining centroids over the
  // whole data set, farthest point first.
  for (int j : pending) {
    std::size_t pick = points.size();
    double best = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (used[i]) continue;
      double nearest = kInf;
      for (int t = 0; t < k; ++t) {
        if (t == j || centroids[t].empty()) continue;
        double d2 = squared_distance(points[i], centroids[t],
                                     squared_norm(centroids[t]));
        if (d2 < nearest) nearest = d2;
      }
      if (nearest == kInf) nearest = 0.0;
      if (nearest > best) {
        best = nearest;
        pick = i;
      }
    }
    if (pick == points.size()) pick = 0;
    centroids[j] = densify(points[pick], dim);
    used[pick] = 1;
  }
  return centroids;
}

std::vector<std::vector<int>> members_by_cluster(
    const std::vector<int>& assignment, int k) {
  std::vector<std::vector<int>> members(k);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] >= 0) members[assignment[i]].push_back(static_cast<int>(i));
  }
  return members;
}

ClusterModel cod_means(std::span<const SparseVector> points,
                       const IndexedConstraints& constraints,
                       const SolverConfig& config, int dim,
                       std::optional<std::vector<DenseVector>> initial_centroids,
                       const CategorySeedPlan* seed_plan) {
  const int n = static_cast<int>(points.size());
  const int k = config.k;
  if (n == 0) throw Error("cannot cluster an empty data set");
  if (k < 1) throw ConfigError("cluster count must be >= 1");
  if (config.ell < 0) throw ConfigError("outlier count per cluster must be >= 0");
  if (static_cast<long>(config.ell) * k >= n) {
    throw ConfigError("ell * k must be smaller than the data size");
  }
  if (config.max_iters < 1) throw ConfigError("max_iters must be >= 1");
  if (!(config.tol >= 0.0)) throw ConfigError("tol must be >= 0");
  if (k == 1 && !constraints.cl.empty()) {
    throw SingleClusterError(
        "cannot-link constraints require at least two clusters");
  }
  validate_pairs(constraints.ml, n, "must-link");
  validate_pairs(constraints.cl, n, "cannot-link");

  std::vector<DenseVector> centroids;
  if (initial_centroids) {
    if (static_cast<int>(initial_centroids->size()) != k) {
      throw ConfigError("initial centroid count does not match k");
    }
    centroids = std::move(*initial_centroids);
    for (DenseVector& c : centroids) {
      if (static_cast<int>(c.size()) < dim) c.resize(dim, 0.0);
    }
  } else if (config.init == InitMode::kCategorySeeded) {
    if (seed_plan == nullptr) {
      throw ConfigError("category-seeded initialization needs a seed plan");
    }
    Rng rng = Rng::substream(config.seed, "init");
    centroids = category_seeded_centroids(points, k, dim, *seed_plan, rng);
  } else {
    Rng rng = Rng::substream(config.seed, "init");
    centroids = kmeanspp_centroids(points, k, dim, rng);
  }

  std::vector<std::vector<Link>> adj = build_adjacency(constraints, n);
  std::vector<char> constrained(n, 0);
  for (int i = 0; i < n; ++i) constrained[i] = !adj[i].empty();

  ClusterModel model;
  std::vector<int> assignment(n, -1);
  std::vector<int> outlier_cluster(n, -1);
  std::vector<std::vector<OutlierEntry>> outliers(k);
  std::vector<int> prev_state;
  double prev_error = 0.0;
  bool have_prev = false;

  int iter = 0;
  while (iter < config.max_iters) {
    ++iter;

    // Caches for this iteration's centroids.
    std::vector<double> rows = point_rows(points, centroids);
    std::vector<double> cc = centroid_cross_distances(centroids);
    std::vector<int> h;
    if (k >= 2) h = nearest_from_cross(cc, k);

    if (config.record_traces) model.centroid_trace.push_back(centroids);

    // Assignment phase. Outliers from the previous iteration re-enter the
    // pool here. The first rule application touching a document fixes it;
    // later pairs optimize only their free endpoint.
    std::fill(assignment.begin(), assignment.end(), -1);
    for (int i = 0; i < n; ++i) {
      if (!constrained[i]) assignment[i] = argmin_row(&rows[i * k], k);
    }
    for (const auto& [a, b] : constraints.ml) {
      int ga = assignment[a], gb = assignment[b];
      if (ga < 0 && gb < 0) {
        auto [i, j] = ml_joint(&rows[a * k], &rows[b * k], cc.data(), k);
        assignment[a] = i;
        assignment[b] = j;
      } else if (ga < 0) {
        assignment[a] = ml_free(gb, &rows[a * k], cc.data(), k);
      } else if (gb < 0) {
        assignment[b] = ml_free(ga, &rows[b * k], cc.data(), k);
      }
    }
    for (const auto& [a, b] : constraints.cl) {
      int ga = assignment[a], gb = assignment[b];
      if (ga < 0 && gb < 0) {
        auto [i, j] = cl_joint(&rows[a * k], &rows[b * k], cc.data(),
                               h.data(), k);
        assignment[a] = i;
        assignment[b] = j;
      } else if (gb < 0) {
        assignment[b] = cl_free_second(ga, &rows[b * k], cc.data(), h.data(), k);
      } else if (ga < 0) {
        assignment[a] = cl_free_first(gb, &rows[a * k], cc.data(), h.data(), k);
      }
    }

    if (config.record_traces) model.assignment_trace.push_back(assignment);

    // Outlier phase: per cluster, drop the ell farthest members.
    std::vector<std::vector<int>> kept(k);
    for (auto& list : outliers) list.clear();
    std::fill(outlier_cluster.begin(), outlier_cluster.end(), -1);
    {
      std::vector<std::vector<ClusterMember>> members(k);
      for (int i = 0; i < n; ++i) {
        int g = assignment[i];
        double d2 = rows[i * k + g];
        members[g].push_back({i, std::sqrt(d2 > 0.0 ? d2 : 0.0)});
      }
      for (int j = 0; j < k; ++j) {
        auto [kept_j, out_j] = trim_outliers(std::move(members[j]), config.ell);
        kept[j].reserve(kept_j.size());
        for (const ClusterMember& m : kept_j) kept[j].push_back(m.doc);
        outliers[j].reserve(out_j.size());
        for (const ClusterMember& m : out_j) {
          outliers[j].push_back({m.doc, m.distance});
          assignment[m.doc] = -1;
          outlier_cluster[m.doc] = j;
        }
      }
    }

    // Update phase, from the centroids the assignments were made against.
    std::vector<DenseVector> start_centroids = centroids;
    std::vector<int> empty_clusters;
    for (int j = 0; j < k; ++j) {
      if (kept[j].empty()) {
        empty_clusters.push_back(j);
        continue;
      }
      centroids[j] = update_centroid_core(kept[j], points, adj, assignment,
                                          start_centroids, h, j, dim);
    }
    // Empty-cluster repair: re-seed on the farthest kept point, distance
    // ties to the smallest index; each repair consumes its point.
    std::vector<char> taken(n, 0);
    for (int j : empty_clusters) {
      int pick = -1;
      double best = -1.0;
      for (int i = 0; i < n; ++i) {
        if (assignment[i] < 0 || taken[i]) continue;
        double d2 = rows[i * k + assignment[i]];
        if (d2 > best) {
          best = d2;
          pick = i;
        }
      }
      if (pick < 0) break;  // nothing assigned at all; keep the old centroid
      taken[pick] = 1;
      centroids[j] = densify(points[pick], dim);
    }

    double error = cvqe_error(points, centroids, assignment, constraints);
    model.error_trace.push_back(error);

    // Combined assignment/outlier state; outliers are tagged with their
    // source cluster so outlier-set changes are visible.
    std::vector<int> state(n);
    for (int i = 0; i < n; ++i) {
      state[i] = assignment[i] >= 0 ? assignment[i] : -2 - outlier_cluster[i];
    }
    bool stable = have_prev && state == prev_state;
    bool small_change =
        have_prev &&
        std::fabs(error - prev_error) / std::max(prev_error, 1e-12) < config.tol;
    prev_state = std::move(state);
    prev_error = error;
    have_prev = true;
    if (stable || small_change) {
      model.converged = true;
      break;
    }
  }

  model.centroids = std::move(centroids);
  model.assignment = assignment;
  model.outliers = std::move(outliers);
  model.error = model.error_trace.empty() ? 0.0 : model.error_trace.back();
  model.iterations_run = iter;
  return model;
}

std::string model_to_json(const ClusterModel& model,
                          const std::vector<std::string>& ids) {
  nlohmann::json out;
  out["k"] = model.k();
  out["converged"] = model.converged;
  out["iterations"] = model.iterations_run;
  out["error"] = model.error;
  out["error_trace"] = model.error_trace;
  out["centroids"] = model.centroids;
  nlohmann::json assignment = nlohmann::json::object();
  for (std::size_t i = 0; i < model.assignment.size(); ++i) {
    if (model.assignment[i] >= 0) assignment[ids[i]] = model.assignment[i];
  }
  out["assignment"] = std::move(assignment);
  nlohmann::json outliers = nlohmann::json::array();
  for (const auto& cluster_outliers : model.outliers) {
    nlohmann::json list = nlohmann::json::array();
    for (const OutlierEntry& o : cluster_outliers) {
      list.push_back({{"distance", o.distance}, {"id", ids[o.doc]}});
    }
    outliers.push_back(std::move(list));
  }
  out["outliers"] = std::move(outliers);
  return out.dump(2);
}

}  // namespace codmeans
