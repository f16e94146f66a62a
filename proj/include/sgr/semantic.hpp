#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgr/eval.hpp"
#include "sgr/types.hpp"

namespace sgr {

enum class DistanceMetric { kEuclidean, kCosine };

struct Keyword {
  Index attr = 0;
  std::string attr_id;
  double distance = 0.0;
};

struct TopicKeywords {
  std::optional<int> topic;  // unset for direct descriptions
  double topic_distance = 0.0;
  bool truncated = false;  // the topic held fewer than q attributes
  std::vector<Keyword> keywords;
};

struct CommunityDescription {
  enum class Mode { kDirect, kTopic };

  int community = 0;
  Mode mode = Mode::kDirect;
  int q = 0;
  std::vector<TopicKeywords> topics;
};

// Top-q attributes nearest to each community center, ascending by distance
// with ties broken by attribute index.
std::vector<CommunityDescription> describe_direct(const Matrix& attr_vectors,
                                                  const std::vector<std::string>& attr_ids,
                                                  const Clustering& communities, int q,
                                                  DistanceMetric metric = DistanceMetric::kEuclidean);

// For each community, the t attribute clusters (topics) whose centers are
// nearest to the community center; each topic lists its q attributes nearest
// to the topic's own center.
std::vector<CommunityDescription> describe_topics(const Matrix& attr_vectors,
                                                  const std::vector<std::string>& attr_ids,
                                                  const Clustering& communities,
                                                  const Clustering& topics, int q, int t,
                                                  DistanceMetric metric = DistanceMetric::kEuclidean);

// "community <id>" blocks, "topic <id> (dist <d>)" headers in topic mode and
// "rank<TAB>attr_id<TAB>distance" keyword lines.
std::string format_descriptions(const std::vector<CommunityDescription>& descriptions);

double entity_distance(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b,
                       DistanceMetric metric);

}  // namespace sgr
