#pragma once

#include <utility>
#include <vector>

#include "twin/dataset.hpp"
#include "twin/filter.hpp"
#include "twin/state_space.hpp"
#include "twin/types.hpp"

namespace twin {

/// Nearest-centroid classifier over standardized log band-energy features.
/// Deterministic, training-free hyperparameters; the graphical model consumes
/// only its confusion statistics.
struct SurrogateClassifier {
  Matrix centroids;     // n_states x n_features, in standardized space
  Vector feature_mean;  // n_features
  Vector feature_std;   // n_features, strictly positive
  int n_bands = 0;
};

// Train on a labeled dataset; every digital cell must be populated.
SurrogateClassifier train_classifier(const TrainingDataset& ds, const StateSpace& space,
                                     int n_bands);

// Nearest centroid in standardized feature space; ties toward the lower index.
int classify(const SurrogateClassifier& clf, const Recording& rec);

// Raw confusion counts[true][predicted]; the test set must cover every cell.
Matrix compute_confusion(const SurrogateClassifier& clf,
                         const std::vector<std::pair<Recording, int>>& test_set, int n_states);

/// Both orientations of the smoothed confusion statistics: the CPT maps an
/// estimate to a belief over the true state; the channel table is the
/// sampling distribution of estimates given the truth.
struct ObservationChannel {
  ConfusionCPT cpt;  // row e: p(true | estimate e)
  Matrix channel;    // row d: p(estimate | true d)
};

// Laplace-smoothed normalization of the raw counts (lambda > 0 gives both
// tables full support).
ObservationChannel confusion_to_cpt(const Matrix& counts, double lambda = 1.0);

// Categorical draw of a classifier estimate for a true state.
int sample_estimate(const Matrix& channel, int true_state, Rng& rng);

}  // namespace twin
