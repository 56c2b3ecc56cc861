#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "attrib/features.hpp"

namespace attrib {

// Every tie (equal distance, equal vote, equal score) breaks toward the
// lower author id so runs are reproducible.

enum class KnnMetric { euclidean, cosine };

KnnMetric parse_metric(std::string_view name);
std::string_view metric_name(KnnMetric metric);

struct KnnModel {
  std::size_t k = 1;
  KnnMetric metric = KnnMetric::euclidean;
  std::size_t dim = 0;
  std::int32_t n_classes = 0;
  std::vector<double> data;  // row-major training vectors
  std::vector<std::int32_t> labels;
};

KnnModel knn_fit(std::span<const FeatureVector> train, std::size_t k,
                 KnnMetric metric = KnnMetric::euclidean);
std::int32_t knn_predict(const KnnModel& model, std::span<const double> query);

struct CentroidModel {
  std::size_t dim = 0;
  std::int32_t n_classes = 0;
  std::vector<double> centroids;  // row-major, one row per class
};

CentroidModel centroid_fit(std::span<const FeatureVector> train);
std::int32_t centroid_predict(const CentroidModel& model,
                              std::span<const double> query);

// Multinomial naive Bayes over non-negative feature values with Lidstone
// smoothing alpha.
struct NbModel {
  std::size_t dim = 0;
  std::int32_t n_classes = 0;
  double alpha = 1.0;
  std::vector<double> log_prior;       // one per class
  std::vector<double> log_likelihood;  // row-major, class x feature
};

NbModel nb_fit(std::span<const FeatureVector> train, double alpha = 1.0);
std::int32_t nb_predict(const NbModel& model, std::span<const double> query);

}  // namespace attrib
