#include "attrib/classifiers.hpp"

#include <algorithm>
#include <cmath>

#include "attrib/error.hpp"

namespace attrib {

namespace {

std::int32_t max_label(std::span<const FeatureVector> train) {
  std::int32_t m = -1;
  for (const auto& fv : train) {
    if (fv.label < 0) fail_validation("negative class label in training data");
    m = std::max(m, fv.label);
  }
  return m;
}

std::size_t common_dim(std::span<const FeatureVector> train) {
  const std::size_t dim = train.front().values.size();
  for (const auto& fv : train) {
    if (fv.values.size() != dim) {
      fail_validation("training vectors have inconsistent dimensions");
    }
  }
  return dim;
}

void check_query_dim(std::size_t dim, std::span<const double> query) {
  if (query.size() != dim) {
    fail_validation("query dimension " + std::to_string(query.size()) +
                    " does not match model dimension " + std::to_string(dim));
  }
}

double squared_euclidean(std::span<const double> a, const double* b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// 1 - cosine similarity; a zero vector has similarity 0 by convention.
double cosine_distance(std::span<const double> a, const double* b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 1.0;
  return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

KnnMetric parse_metric(std::string_view name) {
  if (name == "euclidean") return KnnMetric::euclidean;
  if (name == "cosine") return KnnMetric::cosine;
  fail_validation("unknown metric: " + std::string(name));
}

std::string_view metric_name(KnnMetric metric) {
  return metric == KnnMetric::euclidean ? "euclidean" : "cosine";
}

KnnModel knn_fit(std::span<const FeatureVector> train, std::size_t k,
                 KnnMetric metric) {
  if (train.empty()) fail_validation("knn: empty training set");
  if (k < 1) fail_validation("knn: k must be >= 1");
  if (k > train.size()) {
    fail_validation("knn: k exceeds number of training vectors");
  }
  KnnModel model;
  model.k = k;
  model.metric = metric;
  model.dim = common_dim(train);
  model.n_classes = max_label(train) + 1;
  model.data.reserve(train.size() * model.dim);
  model.labels.reserve(train.size());
  for (const auto& fv : train) {
    model.data.insert(model.data.end(), fv.values.begin(), fv.values.end());
    model.labels.push_back(fv.label);
  }
  return model;
}

std::int32_t knn_predict(const KnnModel& model, std::span<const double> query) {
  check_query_dim(model.dim, query);

  const std::size_t n = model.labels.size();
  std::vector<std::pair<double, std::size_t>> ranked(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = model.data.data() + i * model.dim;
    const double d = model.metric == KnnMetric::euclidean
                         ? squared_euclidean(query, row)
                         : cosine_distance(query, row);
    ranked[i] = {d, i};
  }
  // Distance ties break toward the lower training index.
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(model.k),
                    ranked.end());

  std::vector<std::size_t> votes(static_cast<std::size_t>(model.n_classes), 0);
  for (std::size_t i = 0; i < model.k; ++i) {
    votes[static_cast<std::size_t>(model.labels[ranked[i].second])] += 1;
  }
  std::int32_t best = 0;
  for (std::int32_t c = 1; c < model.n_classes; ++c) {
    if (votes[static_cast<std::size_t>(c)] > votes[static_cast<std::size_t>(best)]) {
      best = c;
    }
  }
  return best;
}

CentroidModel centroid_fit(std::span<const FeatureVector> train) {
  if (train.empty()) fail_validation("centroid: empty training set");
  CentroidModel model;
  model.dim = common_dim(train);
  model.n_classes = max_label(train) + 1;
  model.centroids.assign(static_cast<std::size_t>(model.n_classes) * model.dim, 0.0);
  std::vector<std::size_t> counts(static_cast<std::size_t>(model.n_classes), 0);
  for (const auto& fv : train) {
    const auto c = static_cast<std::size_t>(fv.label);
    counts[c] += 1;
    double* row = model.centroids.data() + c * model.dim;
    for (std::size_t i = 0; i < model.dim; ++i) row[i] += fv.values[i];
  }
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] == 0) {
      fail_validation("centroid: class " + std::to_string(c) +
                      " has no training vectors");
    }
    double* row = model.centroids.data() + c * model.dim;
    for (std::size_t i = 0; i < model.dim; ++i) row[i] /= static_cast<double>(counts[c]);
  }
  return model;
}

std::int32_t centroid_predict(const CentroidModel& model,
                              std::span<const double> query) {
  check_query_dim(model.dim, query);
  std::int32_t best = 0;
  double best_dist = squared_euclidean(query, model.centroids.data());
  for (std::int32_t c = 1; c < model.n_classes; ++c) {
    const double d = squared_euclidean(
        query, model.centroids.data() + static_cast<std::size_t>(c) * model.dim);
    if (d < best_dist) {
      best_dist = d;
      best = c;
    }
  }
  return best;
}

NbModel nb_fit(std::span<const FeatureVector> train, double alpha) {
  if (train.empty()) fail_validation("nb: empty training set");
  if (alpha <= 0.0) fail_validation("nb: smoothing alpha must be positive");

  NbModel model;
  model.dim = common_dim(train);
  model.alpha = alpha;
  model.n_classes = max_label(train) + 1;

  const auto n_classes = static_cast<std::size_t>(model.n_classes);
  std::vector<double> feature_sums(n_classes * model.dim, 0.0);
  std::vector<std::size_t> class_counts(n_classes, 0);
  for (const auto& fv : train) {
    const auto c = static_cast<std::size_t>(fv.label);
    class_counts[c] += 1;
    double* row = feature_sums.data() + c * model.dim;
    for (std::size_t i = 0; i < model.dim; ++i) {
      if (fv.values[i] < 0.0) fail_validation("nb: negative feature value");
      row[i] += fv.values[i];
    }
  }

  model.log_prior.resize(n_classes);
  model.log_likelihood.resize(n_classes * model.dim);
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (class_counts[c] == 0) {
      fail_validation("nb: class " + std::to_string(c) + " has no training vectors");
    }
    model.log_prior[c] = std::log(static_cast<double>(class_counts[c]) /
                                  static_cast<double>(train.size()));
    const double* row = feature_sums.data() + c * model.dim;
    double total = 0.0;
    for (std::size_t i = 0; i < model.dim; ++i) total += row[i];
    const double denom = total + alpha * static_cast<double>(model.dim);
    for (std::size_t i = 0; i < model.dim; ++i) {
      model.log_likelihood[c * model.dim + i] = std::log((row[i] + alpha) / denom);
    }
  }
  return model;
}

std::int32_t nb_predict(const NbModel& model, std::span<const double> query) {
  check_query_dim(model.dim, query);
  for (const double v : query) {
    if (v < 0.0) fail_validation("nb: negative feature value in query");
  }
  std::int32_t best = 0;
  double best_score = 0.0;
  for (std::int32_t c = 0; c < model.n_classes; ++c) {
    const double* row =
        model.log_likelihood.data() + static_cast<std::size_t>(c) * model.dim;
    double score = model.log_prior[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < model.dim; ++i) score += query[i] * row[i];
    if (c == 0 || score > best_score) {
      best_score = score;
      best = c;
    }
  }
  return best;
}

}  // namespace attrib
