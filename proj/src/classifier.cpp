#include <algorithm>
#include <cmath>

#include "sgr/eval.hpp"

namespace sgr {

namespace {

// log(1 + exp(s)) without overflow.
double softplus(double s) { return s > 0.0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s)); }
double sigmoid(double s) {
  if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

}  // namespace

double logistic_loss(const Matrix& features, const Vector& targets, const Vector& w, double bias,
                     double l2, Vector* grad_w, double* grad_bias) {
  const Index n = features.rows();
  const Vector scores = (features * w).array() + bias;
  double loss = 0.0;
  Vector residual(n);
  for (Index i = 0; i < n; ++i) {
    loss += softplus(scores[i]) - targets[i] * scores[i];
    residual[i] = sigmoid(scores[i]) - targets[i];
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  loss = loss * inv_n + 0.5 * l2 * w.squaredNorm();
  if (grad_w) *grad_w = features.transpose() * residual * inv_n + l2 * w;
  if (grad_bias) *grad_bias = residual.sum() * inv_n;
  return loss;
}

LinearClassifier LinearClassifier::train(const Matrix& features, const std::vector<int>& labels,
                                         int num_classes, const ClassifierOptions& options) {
  const Index n = features.rows();
  const Index dim = features.cols();
  if (n == 0 || static_cast<Index>(labels.size()) != n)
    throw Error(ErrorKind::kInvalidArgument, "classifier: features and labels disagree");
  if (num_classes < 2) throw Error(ErrorKind::kInvalidArgument, "classifier: need >= 2 classes");
  if (!features.allFinite()) throw Error(ErrorKind::kNumerical, "classifier: non-finite features");
  if (options.l2 < 0.0) throw Error(ErrorKind::kInvalidArgument, "classifier: negative l2");
  std::vector<char> present(num_classes, 0);
  for (int l : labels) {
    if (l < 0 || l >= num_classes) throw Error(ErrorKind::kInvalidArgument, "classifier: bad label");
    present[l] = 1;
  }
  for (int c = 0; c < num_classes; ++c)
    if (!present[c])
      throw Error(ErrorKind::kInvalidArgument,
                  "classifier: class " + std::to_string(c) + " missing from training data");

  // Step 1/L with L bounding the Hessian of the mean logistic loss.
  Matrix augmented(n, dim + 1);
  augmented << features, Vector::Ones(n);
  const Matrix gram = augmented.transpose() * augmented / static_cast<double>(n);
  const double top_eig = Eigen::SelfAdjointEigenSolver<Matrix>(gram, Eigen::EigenvaluesOnly)
                             .eigenvalues()
                             .maxCoeff();
  const double step = 1.0 / (0.25 * top_eig + options.l2);

  LinearClassifier model;
  model.weights_ = Matrix::Zero(dim, num_classes);
  model.bias_ = Vector::Zero(num_classes);
  std::vector<int> steps(num_classes, 0);

#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < num_classes; ++c) {
    Vector targets(n);
    for (Index i = 0; i < n; ++i) targets[i] = labels[i] == c ? 1.0 : 0.0;
    Vector w = Vector::Zero(dim);
    double b = 0.0;
    Vector gw;
    double gb = 0.0;
    int s = 0;
    for (; s < options.max_steps; ++s) {
      logistic_loss(features, targets, w, b, options.l2, &gw, &gb);
      if (std::sqrt(gw.squaredNorm() + gb * gb) <= options.tolerance) break;
      w -= step * gw;
      b -= step * gb;
    }
    model.weights_.col(c) = w;
    model.bias_[c] = b;
    steps[c] = s;
  }
  for (int s : steps) model.steps_ = std::max(model.steps_, s);
  return model;
}

Matrix LinearClassifier::scores(const Matrix& features) const {
  if (features.cols() != weights_.rows())
    throw Error(ErrorKind::kInvalidArgument, "classifier: feature dimension mismatch");
  Matrix s = features * weights_;
  s.rowwise() += bias_.transpose();
  return s;
}

std::vector<int> LinearClassifier::classify(const Matrix& features) const {
  const Matrix s = scores(features);
  std::vector<int> out(s.rows());
  for (Index i = 0; i < s.rows(); ++i) {
    Index arg;
    s.row(i).maxCoeff(&arg);
    out[i] = static_cast<int>(arg);
  }
  return out;
}

}  // namespace sgr
