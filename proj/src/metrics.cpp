#include "codmeans/metrics.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "codmeans/error.hpp"

namespace codmeans {

double intra_distance(std::span<const int> members,
                      std::span<const SparseVector> points) {
  if (members.empty()) {
    throw MetricDomainError("intra-distance of an empty cluster");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      sum += 2.0 * distance(points[members[i]], points[members[j]]);
    }
  }
  double n = static_cast<double>(members.size());
  return sum / (n * n);
}

double inter_distance(std::span<const int> members, std::span<const int> pool,
                      std::span<const SparseVector> points) {
  if (members.empty()) {
    throw MetricDomainError("inter-distance of an empty cluster");
  }
  if (pool.empty()) {
    throw MetricDomainError("inter-distance against an empty topical pool");
  }
  double sum = 0.0;
  for (int a : members) {
    for (int b : pool) {
      sum += distance(points[a], points[b]);
    }
  }
  return sum / (static_cast<double>(members.size()) *
                static_cast<double>(pool.size()));
}

double cohesiveness(std::span<const int> members, std::span<const int> pool,
                    std::span<const SparseVector> points) {
  double intra = intra_distance(members, points);
  double inter = inter_distance(members, pool, points);
  if (inter == 0.0) {
    throw MetricDomainError("cohesiveness ratio with zero inter-distance");
  }
  return intra / inter;
}

double novelty(std::span<const int> members, std::span<const int> pool,
               std::span<const SparseVector> points) {
  if (members.empty() || pool.empty()) {
    throw MetricDomainError("novelty needs a non-empty cluster and pool");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int a : members) {
    for (int b : pool) {
      double d = distance(points[a], points[b]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  return hi - lo;
}

ClusterScores score_cluster(int cluster, std::span<const int> members,
                            std::span<const int> pool,
                            std::span<const SparseVector> points) {
  if (members.empty()) {
    throw MetricDomainError("cannot score an empty cluster");
  }
  if (pool.empty()) {
    throw MetricDomainError("cannot score against an empty topical pool");
  }
  ClusterScores s;
  s.cluster = cluster;
  s.size = static_cast<long>(members.size());
  s.intra = intra_distance(members, points);

  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int a : members) {
    for (int b : pool) {
      double d = distance(points[a], points[b]);
      sum += d;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  s.inter = sum / (static_cast<double>(members.size()) *
                   static_cast<double>(pool.size()));
  if (s.inter == 0.0) {
    throw MetricDomainError("cohesiveness ratio with zero inter-distance");
  }
  s.cohesiveness_ratio = s.intra / s.inter;
  s.min_dist = lo;
  s.max_dist = hi;
  s.novelty = hi - lo;
  return s;
}

std::vector<int> select_top(const std::vector<ClusterScores>& scored, int m,
                            SelectionCriterion criterion) {
  if (m < 1) throw ConfigError("top-m selection needs m >= 1");
  if (criterion == SelectionCriterion::kUnion) {
    std::vector<int> coh = select_top(scored, m, SelectionCriterion::kCohesiveness);
    std::vector<int> nov = select_top(scored, m, SelectionCriterion::kNovelty);
    std::set<int> merged(coh.begin(), coh.end());
    merged.insert(nov.begin(), nov.end());
    return {merged.begin(), merged.end()};
  }

  std::vector<ClusterScores> order(scored.begin(), scored.end());
  if (criterion == SelectionCriterion::kCohesiveness) {
    std::sort(order.begin(), order.end(),
              [](const ClusterScores& a, const ClusterScores& b) {
                if (a.cohesiveness_ratio != b.cohesiveness_ratio) {
                  return a.cohesiveness_ratio < b.cohesiveness_ratio;
                }
                return a.cluster < b.cluster;
              });
  } else {
    std::sort(order.begin(), order.end(),
              [](const ClusterScores& a, const ClusterScores& b) {
                if (a.novelty != b.novelty) return a.novelty > b.novelty;
                return a.cluster < b.cluster;
              });
  }
  std::size_t take = std::min<std::size_t>(m, order.size());
  std::vector<int> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(order[i].cluster);
  return out;
}

}  // namespace codmeans
