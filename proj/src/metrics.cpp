#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "sgr/eval.hpp"

namespace sgr {

namespace {

void check_pair(const std::vector<int>& a, const std::vector<int>& b, const char* what) {
  if (a.size() != b.size())
    throw Error(ErrorKind::kInvalidArgument, std::string(what) + ": length mismatch");
  if (a.empty()) throw Error(ErrorKind::kInvalidArgument, std::string(what) + ": empty input");
}

int check_labels(const std::vector<int>& v, const char* what) {
  int hi = -1;
  for (int x : v) {
    if (x < 0) throw Error(ErrorKind::kInvalidArgument, std::string(what) + ": negative label");
    hi = std::max(hi, x);
  }
  return hi + 1;
}

Matrix contingency(const std::vector<int>& pred, const std::vector<int>& truth) {
  const int rows = check_labels(pred, "contingency");
  const int cols = check_labels(truth, "contingency");
  Matrix table = Matrix::Zero(rows, cols);
  for (std::size_t i = 0; i < pred.size(); ++i) table(pred[i], truth[i]) += 1.0;
  return table;
}

double entropy(const std::map<int, double>& counts, double total) {
  double h = 0.0;
  for (const auto& [label, c] : counts) {
    const double p = c / total;
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

}  // namespace

double nmi(const std::vector<int>& a, const std::vector<int>& b) {
  check_pair(a, b, "nmi");
  const double total = static_cast<double>(a.size());
  std::map<int, double> ca, cb;
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca[a[i]] += 1.0;
    cb[b[i]] += 1.0;
    joint[{a[i], b[i]}] += 1.0;
  }
  const double ha = entropy(ca, total);
  const double hb = entropy(cb, total);
  if (ca.size() == 1 && cb.size() == 1) return 1.0;
  if (ha == 0.0 || hb == 0.0) return 0.0;

  // Terms are summed in sorted order so that nmi(a, b) == nmi(b, a) exactly.
  std::vector<double> terms;
  terms.reserve(joint.size());
  for (const auto& [key, c] : joint) {
    const double pij = c / total;
    terms.push_back(pij * std::log(pij * total * total / (ca[key.first] * cb[key.second])));
  }
  std::sort(terms.begin(), terms.end());
  double mi = 0.0;
  for (double t : terms) mi += t;
  return std::clamp(2.0 * mi / (ha + hb), 0.0, 1.0);
}

std::vector<int> max_weight_assignment(const Matrix& weights) {
  const Index rows = weights.rows();
  const Index cols = weights.cols();
  const Index size = std::max(rows, cols);
  if (size == 0) return {};
  const double top = weights.size() ? weights.maxCoeff() : 0.0;

  // Square min-cost problem; padding cells cost `top` (weight 0).
  Matrix cost = Matrix::Constant(size, size, top);
  cost.topLeftCorner(rows, cols) = top - weights.array();

  // Shortest augmenting path Hungarian algorithm, 1-based potentials.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(size + 1, 0.0), v(size + 1, 0.0);
  std::vector<Index> match(size + 1, 0), way(size + 1, 0);
  for (Index i = 1; i <= size; ++i) {
    match[0] = i;
    Index j0 = 0;
    std::vector<double> minv(size + 1, inf);
    std::vector<char> used(size + 1, 0);
    do {
      used[j0] = 1;
      const Index i0 = match[j0];
      double delta = inf;
      Index j1 = 0;
      for (Index j = 1; j <= size; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (Index j = 0; j <= size; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const Index j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> result(rows, -1);
  for (Index j = 1; j <= size; ++j) {
    const Index r = match[j] - 1;
    if (r < rows && j - 1 < cols) result[r] = static_cast<int>(j - 1);
  }
  return result;
}

std::vector<int> match_clusters(const std::vector<int>& pred, const std::vector<int>& truth) {
  check_pair(pred, truth, "match_clusters");
  return max_weight_assignment(contingency(pred, truth));
}

double clustering_accuracy(const std::vector<int>& pred, const std::vector<int>& truth) {
  check_pair(pred, truth, "clustering_accuracy");
  const Matrix table = contingency(pred, truth);
  const std::vector<int> match = max_weight_assignment(table);
  double correct = 0.0;
  for (Index r = 0; r < table.rows(); ++r)
    if (match[r] >= 0) correct += table(r, match[r]);
  return correct / static_cast<double>(pred.size());
}

double accuracy(const std::vector<int>& pred, const std::vector<int>& truth) {
  check_pair(pred, truth, "accuracy");
  std::size_t hit = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) hit += pred[i] == truth[i] ? 1 : 0;
  return static_cast<double>(hit) / static_cast<double>(pred.size());
}

double macro_f1(const std::vector<int>& pred, const std::vector<int>& truth, int num_classes) {
  check_pair(pred, truth, "macro_f1");
  if (num_classes < 1) throw Error(ErrorKind::kInvalidArgument, "macro_f1: no classes");
  std::vector<double> tp(num_classes, 0.0), fp(num_classes, 0.0), fn(num_classes, 0.0);
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const int p = pred[i];
    const int t = truth[i];
    if (p < 0 || p >= num_classes || t < 0 || t >= num_classes)
      throw Error(ErrorKind::kInvalidArgument, "macro_f1: label out of range");
    if (p == t) {
      tp[p] += 1.0;
    } else {
      fp[p] += 1.0;
      fn[t] += 1.0;
    }
  }
  double sum = 0.0;
  for (int c = 0; c < num_classes; ++c) {
    const double precision = tp[c] + fp[c] > 0.0 ? tp[c] / (tp[c] + fp[c]) : 0.0;
    const double recall = tp[c] + fn[c] > 0.0 ? tp[c] / (tp[c] + fn[c]) : 0.0;
    if (precision + recall > 0.0) sum += 2.0 * precision * recall / (precision + recall);
  }
  return sum / num_classes;
}

}  // namespace sgr
