#include "sgr/semantic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace sgr {

namespace {

struct Ranked {
  Index index;
  double distance;
};

// Candidates sorted by (distance, index).
std::vector<Ranked> rank(const Vector& center, const Matrix& vectors, const std::vector<Index>& candidates,
                         DistanceMetric metric) {
  std::vector<Ranked> out(candidates.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Vector row = vectors.row(candidates[i]).transpose();
    out[i] = {candidates[i], entity_distance(center, row, metric)};
  }
  std::sort(out.begin(), out.end(), [](const Ranked& a, const Ranked& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.index < b.index;
  });
  return out;
}

std::vector<Index> all_rows(Index n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

void check_inputs(const Matrix& attr_vectors, const std::vector<std::string>& attr_ids,
                  const Clustering& communities, int q) {
  if (static_cast<Index>(attr_ids.size()) != attr_vectors.rows())
    throw Error(ErrorKind::kInvalidArgument, "attribute ids do not match attribute vectors");
  if (communities.centers.cols() != attr_vectors.cols())
    throw Error(ErrorKind::kInvalidArgument, "community centers and attribute vectors differ in dimension");
  if (q < 1) throw Error(ErrorKind::kInvalidArgument, "keywords per description must be >= 1");
}

}  // namespace

double entity_distance(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b,
                       DistanceMetric metric) {
  if (metric == DistanceMetric::kEuclidean) return (a - b).norm();
  const double denom = a.norm() * b.norm();
  return denom > 0.0 ? 1.0 - a.dot(b) / denom : 1.0;
}

std::vector<CommunityDescription> describe_direct(const Matrix& attr_vectors,
                                                  const std::vector<std::string>& attr_ids,
                                                  const Clustering& communities, int q,
                                                  DistanceMetric metric) {
  check_inputs(attr_vectors, attr_ids, communities, q);
  if (q > attr_vectors.rows())
    throw Error(ErrorKind::kInvalidArgument, "q = " + std::to_string(q) + " exceeds attribute count " +
                                                 std::to_string(attr_vectors.rows()));
  const auto candidates = all_rows(attr_vectors.rows());
  std::vector<CommunityDescription> out;
  for (int c = 0; c < communities.k(); ++c) {
    const auto ranked = rank(communities.centers.row(c).transpose(), attr_vectors, candidates, metric);
    CommunityDescription d;
    d.community = c;
    d.mode = CommunityDescription::Mode::kDirect;
    d.q = q;
    TopicKeywords list;
    for (int r = 0; r < q; ++r)
      list.keywords.push_back({ranked[r].index, attr_ids[ranked[r].index], ranked[r].distance});
    d.topics.push_back(std::move(list));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<CommunityDescription> describe_topics(const Matrix& attr_vectors,
                                                  const std::vector<std::string>& attr_ids,
                                                  const Clustering& communities,
                                                  const Clustering& topics, int q, int t,
                                                  DistanceMetric metric) {
  check_inputs(attr_vectors, attr_ids, communities, q);
  if (static_cast<Index>(topics.assignment.size()) != attr_vectors.rows())
    throw Error(ErrorKind::kInvalidArgument, "topic clustering does not cover the attribute vectors");
  if (topics.centers.cols() != attr_vectors.cols())
    throw Error(ErrorKind::kInvalidArgument, "topic centers and attribute vectors differ in dimension");
  if (t < 1 || t > topics.k())
    throw Error(ErrorKind::kInvalidArgument, "topics per community must lie in [1, " +
                                                 std::to_string(topics.k()) + "]");

  std::vector<std::vector<Index>> members(topics.k());
  for (Index a = 0; a < attr_vectors.rows(); ++a) members[topics.assignment[a]].push_back(a);

  // Keywords per topic do not depend on the community.
  std::vector<TopicKeywords> topic_lists(topics.k());
  for (int k = 0; k < topics.k(); ++k) {
    const auto ranked = rank(topics.centers.row(k).transpose(), attr_vectors, members[k], metric);
    TopicKeywords& list = topic_lists[k];
    list.topic = k;
    list.truncated = static_cast<int>(ranked.size()) < q;
    const int take = std::min<int>(q, static_cast<int>(ranked.size()));
    for (int r = 0; r < take; ++r)
      list.keywords.push_back({ranked[r].index, attr_ids[ranked[r].index], ranked[r].distance});
  }

  const auto topic_rows = all_rows(topics.k());
  std::vector<CommunityDescription> out;
  for (int c = 0; c < communities.k(); ++c) {
    const auto nearest = rank(communities.centers.row(c).transpose(), topics.centers, topic_rows, metric);
    CommunityDescription d;
    d.community = c;
    d.mode = CommunityDescription::Mode::kTopic;
    d.q = q;
    for (int i = 0; i < t; ++i) {
      TopicKeywords list = topic_lists[nearest[i].index];
      list.topic_distance = nearest[i].distance;
      d.topics.push_back(std::move(list));
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::string format_descriptions(const std::vector<CommunityDescription>& descriptions) {
  std::string out;
  char buf[64];
  for (const auto& d : descriptions) {
    out += "community " + std::to_string(d.community) + "\n";
    for (const auto& topic : d.topics) {
      if (topic.topic) {
        std::snprintf(buf, sizeof buf, "%.6g", topic.topic_distance);
        out += "topic " + std::to_string(*topic.topic) + " (dist " + buf + ")";
        if (topic.truncated)
          out += " [only " + std::to_string(topic.keywords.size()) + " attributes]";
        out += "\n";
      }
      for (std::size_t r = 0; r < topic.keywords.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%.6g", topic.keywords[r].distance);
        out += std::to_string(r + 1) + "\t" + topic.keywords[r].attr_id + "\t" + buf + "\n";
      }
    }
  }
  return out;
}

}  // namespace sgr
