#include "sgr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace sgr::oracle {

Dense zeros(std::size_t rows, std::size_t cols) { return Dense(rows, std::vector<double>(cols, 0.0)); }

Dense identity(std::size_t n) {
  Dense out = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1.0;
  return out;
}

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Dense out = zeros(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

Dense transpose(const Dense& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  Dense out = zeros(cols, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
  return out;
}

Dense add(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

Dense scale(const Dense& a, double s) {
  Dense out = a;
  for (auto& row : out)
    for (double& v : row) v *= s;
  return out;
}

double frobenius(const Dense& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

double frobenius_distance(const Dense& a, const Dense& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      const double d = a[i][j] - b[i][j];
      s += d * d;
    }
  return std::sqrt(s);
}

Dense inverse(const Dense& a) {
  const std::size_t n = a.size();
  Dense work = a;
  Dense inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work[r][col]) > std::abs(work[pivot][col])) pivot = r;
    if (work[pivot][col] == 0.0) throw std::runtime_error("oracle::inverse: singular matrix");
    std::swap(work[col], work[pivot]);
    std::swap(inv[col], inv[pivot]);
    const double d = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = work[r][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Dense walk_proximity(const Dense& b, int order, int negatives) {
  const std::size_t n = b.size();
  std::vector<double> degree(n, 0.0);
  double volume = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (double v : b[i]) degree[i] += v;
    volume += degree[i];
  }
  Dense transition = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) transition[i][j] = b[i][j] / degree[i];

  Dense total = zeros(n, n);
  for (int r = 1; r <= order; ++r) {
    Dense power = transition;
    for (int step = 1; step < r; ++step) power = multiply(power, transition);
    total = add(total, power);
  }
  Dense m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = volume * (total[i][j] / order) / degree[j] / negatives;
  return m;
}

Dense truncated_log(const Dense& m) {
  Dense out = m;
  for (auto& row : out)
    for (double& v : row) v = v > 1.0 ? std::log(v) : 0.0;
  return out;
}

std::pair<Dense, Dense> enumerate_motifs(const Dense& r0) {
  const std::size_t n = r0.size();
  const std::size_t m = n ? r0[0].size() : 0;
  Dense shared_attr = zeros(n, m);
  Dense shared_node = zeros(n, m);
  // two nodes, one attribute
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (r0[i][w] > 0.0 && r0[j][w] > 0.0) {
          shared_attr[i][w] += 1.0;
          shared_attr[j][w] += 1.0;
        }
  // one node, two attributes
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t w = 0; w < m; ++w)
      for (std::size_t s = w + 1; s < m; ++s)
        if (r0[i][w] > 0.0 && r0[i][s] > 0.0) {
          shared_node[i][w] += 1.0;
          shared_node[i][s] += 1.0;
        }
  return {shared_attr, shared_node};
}

std::vector<double> singular_values(const Dense& a_in) {
  Dense a = a_in;
  if (!a.empty() && a.size() < a[0].size()) a = transpose(a);
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  // Work on columns: cols x rows storage.
  Dense c = transpose(a);
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p)
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
          alpha += c[p][r] * c[p][r];
          beta += c[q][r] * c[q][r];
          gamma += c[p][r] * c[q][r];
        }
        if (gamma == 0.0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t r = 0; r < rows; ++r) {
          const double x = c[p][r];
          const double y = c[q][r];
          c[p][r] = cs * x - sn * y;
          c[q][r] = sn * x + cs * y;
        }
      }
    if (!rotated) break;
  }
  std::vector<double> s(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double sum = 0.0;
    for (double v : c[j]) sum += v * v;
    s[j] = std::sqrt(sum);
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

double best_matching_overlap(const std::vector<int>& pred, const std::vector<int>& truth) {
  std::map<int, int> pi, ti;
  for (int p : pred) pi.try_emplace(p, static_cast<int>(pi.size()));
  for (int t : truth) ti.try_emplace(t, static_cast<int>(ti.size()));
  Dense table = zeros(pi.size(), ti.size());
  for (std::size_t i = 0; i < pred.size(); ++i) table[pi[pred[i]]][ti[truth[i]]] += 1.0;
  if (table.size() > table[0].size()) table = transpose(table);

  const std::size_t rows = table.size();
  const std::size_t cols = table[0].size();
  std::vector<char> used(cols, 0);
  std::function<double(std::size_t)> best = [&](std::size_t r) -> double {
    if (r == rows) return 0.0;
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < cols; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      top = std::max(top, table[r][c] + best(r + 1));
      used[c] = 0;
    }
    return top;
  };
  return best(0);
}

std::vector<std::size_t> nearest_q(const Dense& vectors, const std::vector<double>& center, std::size_t q) {
  std::vector<char> taken(vectors.size(), 0);
  std::vector<std::size_t> out;
  for (std::size_t round = 0; round < q && round < vectors.size(); ++round) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (taken[i]) continue;
      double s = 0.0;
      for (std::size_t c = 0; c < center.size(); ++c) s += (vectors[i][c] - center[c]) * (vectors[i][c] - center[c]);
      const double d = std::sqrt(s);
      if (d < best) {
        best = d;
        arg = i;
      }
    }
    taken[arg] = 1;
    out.push_back(arg);
  }
  return out;
}

Dense modularity(const Dense& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<double> d(n, 0.0);
  double twice_edges = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (double v : adjacency[i]) d[i] += v;
    twice_edges += d[i];
  }
  Dense q = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = adjacency[i][j] - d[i] * d[j] / twice_edges;
  return q;
}

double laplacian_trace(const Dense& x, const Dense& t) {
  const std::size_t n = t.size();
  Dense l = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row += t[i][j];
      l[i][j] = -t[i][j];
    }
    l[i][i] += row;
  }
  const Dense lx = multiply(l, x);
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < x[i].size(); ++c) trace += x[i][c] * lx[i][c];
  return trace;
}

}  // namespace sgr::oracle
