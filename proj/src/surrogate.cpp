#include "twin/surrogate.hpp"

#include <cmath>
#include <string>

#include "twin/errors.hpp"
#include "twin/features.hpp"

namespace twin {

SurrogateClassifier train_classifier(const TrainingDataset& ds, const StateSpace& space,
                                     int n_bands) {
  if (ds.items.empty()) throw ConfigError("train_classifier: empty dataset");
  const int nd = space.n_states();

  Matrix feats(static_cast<Index>(ds.items.size()), 0);
  for (std::size_t i = 0; i < ds.items.size(); ++i) {
    const Vector f = feature_vector(ds.items[i].recording, n_bands);
    if (feats.cols() == 0) feats.resize(feats.rows(), f.size());
    feats.row(static_cast<Index>(i)) = f.transpose();
  }

  SurrogateClassifier clf;
  clf.n_bands = n_bands;
  clf.feature_mean = feats.colwise().mean().transpose();
  Vector var = Vector::Zero(feats.cols());
  for (Index i = 0; i < feats.rows(); ++i) {
    const Vector d = feats.row(i).transpose() - clf.feature_mean;
    var += d.cwiseAbs2();
  }
  var /= static_cast<double>(feats.rows());
  clf.feature_std = var.cwiseSqrt().cwiseMax(1e-12);  // keep stds strictly positive

  clf.centroids = Matrix::Zero(nd, feats.cols());
  Vector counts = Vector::Zero(nd);
  for (std::size_t i = 0; i < ds.items.size(); ++i) {
    const int cell = ds.items[i].cell;
    if (cell < 0 || cell >= nd) throw ConfigError("train_classifier: label outside state space");
    const Vector z =
        (feats.row(static_cast<Index>(i)).transpose() - clf.feature_mean).cwiseQuotient(clf.feature_std);
    clf.centroids.row(cell) += z.transpose();
    counts(cell) += 1.0;
  }
  std::string empty;
  for (int cell = 0; cell < nd; ++cell) {
    if (counts(cell) == 0.0) {
      empty += (empty.empty() ? "" : ", ") + std::to_string(cell);
    } else {
      clf.centroids.row(cell) /= counts(cell);
    }
  }
  if (!empty.empty()) {
    throw ConfigError("train_classifier: no training items for cells " + empty);
  }
  return clf;
}

int classify(const SurrogateClassifier& clf, const Recording& rec) {
  const Vector f = feature_vector(rec, clf.n_bands);
  if (f.size() != clf.centroids.cols()) {
    throw ConfigError("classify: feature dimension mismatch");
  }
  const Vector z = (f - clf.feature_mean).cwiseQuotient(clf.feature_std);
  int best = 0;
  double best_dist = (clf.centroids.row(0).transpose() - z).squaredNorm();
  for (Index cell = 1; cell < clf.centroids.rows(); ++cell) {
    const double d = (clf.centroids.row(cell).transpose() - z).squaredNorm();
    if (d < best_dist) {
      best_dist = d;
      best = static_cast<int>(cell);
    }
  }
  return best;
}

Matrix compute_confusion(const SurrogateClassifier& clf,
                         const std::vector<std::pair<Recording, int>>& test_set, int n_states) {
  Matrix counts = Matrix::Zero(n_states, n_states);
  for (const auto& [rec, truth] : test_set) {
    if (truth < 0 || truth >= n_states) {
      throw ConfigError("compute_confusion: true index outside state space");
    }
    counts(truth, classify(clf, rec)) += 1.0;
  }
  for (int d = 0; d < n_states; ++d) {
    if (counts.row(d).sum() == 0.0) {
      throw ConfigError("compute_confusion: no test coverage for true cell " + std::to_string(d));
    }
  }
  return counts;
}

ObservationChannel confusion_to_cpt(const Matrix& counts, double lambda) {
  if (counts.rows() != counts.cols() || counts.minCoeff() < 0.0) {
    throw ConfigError("confusion_to_cpt: counts must be square and nonnegative");
  }
  const Index nd = counts.rows();
  ObservationChannel out;
  out.cpt.table.resize(nd, nd);
  out.channel.resize(nd, nd);
  for (Index e = 0; e < nd; ++e) {
    const double denom = counts.col(e).sum() + lambda * nd;
    out.cpt.table.row(e) = ((counts.col(e).array() + lambda) / denom).transpose();
  }
  for (Index d = 0; d < nd; ++d) {
    const double denom = counts.row(d).sum() + lambda * nd;
    out.channel.row(d) = (counts.row(d).array() + lambda) / denom;
  }
  return out;
}

int sample_estimate(const Matrix& channel, int true_state, Rng& rng) {
  if (true_state < 0 || true_state >= channel.rows()) {
    throw ConfigError("sample_estimate: true state out of range");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  double acc = 0.0;
  for (Index e = 0; e < channel.cols(); ++e) {
    acc += channel(true_state, e);
    if (u < acc) return static_cast<int>(e);
  }
  return static_cast<int>(channel.cols()) - 1;
}

}  // namespace twin
