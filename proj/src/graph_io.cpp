#include "sgr/graph_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace sgr {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kInvalidInput: return "invalid_input";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kNumerical: return "numerical";
    case ErrorKind::kSizeCap: return "size_cap";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

Vector AttributedGraph::node_degrees() const {
  Vector d = Vector::Zero(num_nodes());
  for (Index col = 0; col < adjacency.outerSize(); ++col)
    for (SparseMatrix::InnerIterator it(adjacency, col); it; ++it) d[it.row()] += it.value();
  return d;
}

namespace {

class IdMap {
 public:
  int intern(const std::string& id) {
    auto [it, inserted] = index_.try_emplace(id, static_cast<int>(ids_.size()));
    if (inserted) ids_.push_back(id);
    return it->second;
  }
  int find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
  }
  const std::vector<std::string>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }

 private:
  std::unordered_map<std::string, int> index_;
  std::vector<std::string> ids_;
};

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return fields;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return in;
}

[[noreturn]] void malformed(const std::filesystem::path& path, std::size_t line_no,
                            const std::string& why) {
  throw Error(ErrorKind::kParse,
              path.filename().string() + ":" + std::to_string(line_no) + ": " + why);
}

// Calls fn(fields, line_no) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(const std::filesystem::path& path, Fn&& fn) {
  auto in = open_input(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    fn(split_tabs(line), line_no);
  }
}

}  // namespace

AttributedGraph build_graph(const std::vector<EdgeRecord>& edges,
                            const std::vector<AttrRecord>& attrs,
                            const std::vector<LabelRecord>& labels) {
  IdMap nodes;
  IdMap attributes;

  std::set<std::pair<int, int>> edge_set;
  for (const auto& e : edges) {
    if (e.u.empty() || e.v.empty()) throw Error(ErrorKind::kInvalidInput, "empty node id in edge");
    int u = nodes.intern(e.u);
    int v = nodes.intern(e.v);
    if (u == v) continue;
    edge_set.emplace(std::min(u, v), std::max(u, v));
  }

  std::map<std::pair<int, int>, double> weights;
  for (const auto& a : attrs) {
    if (a.node.empty() || a.attr.empty())
      throw Error(ErrorKind::kInvalidInput, "empty id in attribute record");
    if (!std::isfinite(a.weight))
      throw Error(ErrorKind::kInvalidInput, "non-finite weight for " + a.node + "/" + a.attr);
    if (a.weight < 0.0)
      throw Error(ErrorKind::kInvalidInput, "negative weight for " + a.node + "/" + a.attr);
    int i = nodes.intern(a.node);
    int w = attributes.intern(a.attr);
    weights[{i, w}] += a.weight;
  }

  const int n = nodes.size();

  // Drop attribute columns without a positive entry.
  std::vector<char> attr_used(attributes.size(), 0);
  for (const auto& [key, value] : weights)
    if (value > 0.0) attr_used[key.second] = 1;
  std::vector<int> attr_remap(attributes.size(), -1);
  AttributedGraph g;
  for (int w = 0; w < attributes.size(); ++w) {
    if (!attr_used[w]) continue;
    attr_remap[w] = static_cast<int>(g.attr_ids.size());
    g.attr_ids.push_back(attributes.ids()[w]);
  }
  g.node_ids = nodes.ids();
  const auto m = static_cast<Index>(g.attr_ids.size());

  std::vector<Eigen::Triplet<double>> adj_triplets;
  adj_triplets.reserve(edge_set.size() * 2);
  for (auto [u, v] : edge_set) {
    adj_triplets.emplace_back(u, v, 1.0);
    adj_triplets.emplace_back(v, u, 1.0);
  }
  g.adjacency.resize(n, n);
  g.adjacency.setFromTriplets(adj_triplets.begin(), adj_triplets.end());

  std::vector<Eigen::Triplet<double>> attr_triplets;
  for (const auto& [key, value] : weights) {
    if (value <= 0.0) continue;
    attr_triplets.emplace_back(key.first, attr_remap[key.second], value);
  }
  g.attr_weights.resize(n, m);
  g.attr_weights.setFromTriplets(attr_triplets.begin(), attr_triplets.end());

  // Every node needs an edge or a positive attribute.
  std::vector<char> touched(n, 0);
  for (auto [u, v] : edge_set) touched[u] = touched[v] = 1;
  for (const auto& t : attr_triplets) touched[t.row()] = 1;
  for (int i = 0; i < n; ++i)
    if (!touched[i])
      throw Error(ErrorKind::kInvalidInput,
                  "node " + g.node_ids[i] + " has no edges and no attributes");

  if (!labels.empty()) {
    IdMap classes;
    std::vector<int> assigned(n, -1);
    for (const auto& l : labels) {
      int i = nodes.find(l.node);
      if (i < 0) throw Error(ErrorKind::kInvalidInput, "label references unknown node " + l.node);
      int c = classes.intern(l.label);
      if (assigned[i] >= 0 && assigned[i] != c)
        throw Error(ErrorKind::kInvalidInput, "conflicting labels for node " + l.node);
      assigned[i] = c;
    }
    for (int i = 0; i < n; ++i)
      if (assigned[i] < 0)
        throw Error(ErrorKind::kInvalidInput, "node " + g.node_ids[i] + " has no label");
    g.labels = std::move(assigned);
    g.class_ids = classes.ids();
  }

  validate(g);
  return g;
}

AttributedGraph load_graph(const std::filesystem::path& edges_path,
                           const std::filesystem::path& attrs_path,
                           const std::optional<std::filesystem::path>& labels_path) {
  std::vector<EdgeRecord> edges;
  for_each_record(edges_path, [&](const std::vector<std::string>& f, std::size_t line_no) {
    if (f.size() != 2 || f[0].empty() || f[1].empty())
      malformed(edges_path, line_no, "expected 'u<TAB>v'");
    edges.push_back({f[0], f[1]});
  });

  std::vector<AttrRecord> attrs;
  for_each_record(attrs_path, [&](const std::vector<std::string>& f, std::size_t line_no) {
    if (f.size() < 2 || f.size() > 3 || f[0].empty() || f[1].empty())
      malformed(attrs_path, line_no, "expected 'node<TAB>attr[<TAB>weight]'");
    double weight = 1.0;
    if (f.size() == 3 && !parse_double(f[2], weight))
      malformed(attrs_path, line_no, "bad weight '" + f[2] + "'");
    if (weight < 0.0) malformed(attrs_path, line_no, "negative weight");
    attrs.push_back({f[0], f[1], weight});
  });

  std::vector<LabelRecord> labels;
  if (labels_path) {
    for_each_record(*labels_path, [&](const std::vector<std::string>& f, std::size_t line_no) {
      if (f.size() != 2 || f[0].empty() || f[1].empty())
        malformed(*labels_path, line_no, "expected 'node<TAB>class'");
      labels.push_back({f[0], f[1]});
    });
    if (labels.empty()) throw Error(ErrorKind::kInvalidInput, "labels file is empty");
  }

  return build_graph(edges, attrs, labels);
}

void write_graph(const AttributedGraph& g, const std::filesystem::path& edges_path,
                 const std::filesystem::path& attrs_path,
                 const std::optional<std::filesystem::path>& labels_path) {
  auto open = [](const std::filesystem::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error(ErrorKind::kIo, "cannot open " + p.string() + " for writing");
    return out;
  };
  {
    auto out = open(edges_path);
    for (Index col = 0; col < g.adjacency.outerSize(); ++col)
      for (SparseMatrix::InnerIterator it(g.adjacency, col); it; ++it)
        if (it.row() < col) out << g.node_ids[it.row()] << '\t' << g.node_ids[col] << '\n';
  }
  {
    auto out = open(attrs_path);
    char buf[32];
    for (Index col = 0; col < g.attr_weights.outerSize(); ++col)
      for (SparseMatrix::InnerIterator it(g.attr_weights, col); it; ++it) {
        std::snprintf(buf, sizeof buf, "%.17g", it.value());
        out << g.node_ids[it.row()] << '\t' << g.attr_ids[col] << '\t' << buf << '\n';
      }
  }
  if (labels_path && g.has_labels()) {
    auto out = open(*labels_path);
    for (Index i = 0; i < g.num_nodes(); ++i)
      out << g.node_ids[i] << '\t' << g.class_ids[g.labels[i]] << '\n';
  }
}

void validate(const AttributedGraph& g) {
  const Index n = g.num_nodes();
  const Index m = g.num_attrs();
  if (g.adjacency.rows() != n || g.adjacency.cols() != n)
    throw Error(ErrorKind::kInvalidInput, "adjacency shape does not match node count");
  if (g.attr_weights.rows() != n || g.attr_weights.cols() != m)
    throw Error(ErrorKind::kInvalidInput, "attribute matrix shape does not match n x m");

  SparseMatrix diff = SparseMatrix(g.adjacency.transpose()) - g.adjacency;
  diff.prune(0.0);
  if (diff.nonZeros() != 0) throw Error(ErrorKind::kInvalidInput, "adjacency is not symmetric");

  std::vector<char> touched(n, 0);
  for (Index col = 0; col < n; ++col)
    for (SparseMatrix::InnerIterator it(g.adjacency, col); it; ++it) {
      if (it.row() == col && it.value() != 0.0)
        throw Error(ErrorKind::kInvalidInput, "self-loop on node " + g.node_ids[col]);
      if (it.value() != 0.0) touched[it.row()] = 1;
    }

  for (Index w = 0; w < m; ++w) {
    bool positive = false;
    for (SparseMatrix::InnerIterator it(g.attr_weights, w); it; ++it) {
      if (!(it.value() >= 0.0) || !std::isfinite(it.value()))
        throw Error(ErrorKind::kInvalidInput, "invalid weight on attribute " + g.attr_ids[w]);
      if (it.value() > 0.0) {
        positive = true;
        touched[it.row()] = 1;
      }
    }
    if (!positive) throw Error(ErrorKind::kInvalidInput, "attribute " + g.attr_ids[w] + " is empty");
  }
  for (Index i = 0; i < n; ++i)
    if (!touched[i])
      throw Error(ErrorKind::kInvalidInput,
                  "node " + g.node_ids[i] + " has no edges and no attributes");

  if (!g.labels.empty()) {
    if (static_cast<Index>(g.labels.size()) != n)
      throw Error(ErrorKind::kInvalidInput, "label count does not match node count");
    for (int l : g.labels)
      if (l < 0 || l >= g.num_classes())
        throw Error(ErrorKind::kInvalidInput, "label out of range");
  }
}

std::string format_embeddings(const Matrix& vectors, Index num_nodes,
                              const std::vector<std::string>& node_ids,
                              const std::vector<std::string>& attr_ids) {
  const Index rows = vectors.rows();
  if (num_nodes > rows || static_cast<Index>(node_ids.size()) != num_nodes ||
      static_cast<Index>(attr_ids.size()) != rows - num_nodes)
    throw Error(ErrorKind::kInvalidArgument, "entity ids do not match embedding rows");

  std::string out = std::to_string(rows) + " " + std::to_string(vectors.cols()) + "\n";
  char buf[32];
  for (Index r = 0; r < rows; ++r) {
    out += r < num_nodes ? "n:" + node_ids[r] : "a:" + attr_ids[r - num_nodes];
    for (Index c = 0; c < vectors.cols(); ++c) {
      double v = vectors(r, c);
      if (!std::isfinite(v)) throw Error(ErrorKind::kNumerical, "non-finite embedding value");
      if (v == 0.0) v = 0.0;  // no "-0"
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void write_embeddings(const Matrix& vectors, Index num_nodes,
                      const std::vector<std::string>& node_ids,
                      const std::vector<std::string>& attr_ids,
                      const std::filesystem::path& path) {
  const std::string text = format_embeddings(vectors, num_nodes, node_ids, attr_ids);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

EmbeddingFile parse_embeddings(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::kParse, "embedding file is empty");

  long long count = -1, dim = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> count >> dim) || (header >> extra) || count < 0 || dim < 0)
      throw Error(ErrorKind::kParse, "bad embedding header '" + line + "'");
  }

  EmbeddingFile file;
  file.dim = dim;
  std::unordered_set<std::string> tags;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    EmbeddingRow r;
    row >> r.tag;
    if (r.tag.size() < 3 || (r.tag.rfind("n:", 0) != 0 && r.tag.rfind("a:", 0) != 0))
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": bad tag");
    if (!tags.insert(r.tag).second)
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": duplicate tag " + r.tag);
    std::string tok;
    while (row >> tok) {
      double v;
      if (!parse_double(tok, v))
        throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": bad value " + tok);
      r.values.push_back(v);
    }
    if (static_cast<long long>(r.values.size()) != dim)
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(dim) + " values");
    file.rows.push_back(std::move(r));
  }
  if (static_cast<long long>(file.rows.size()) != count)
    throw Error(ErrorKind::kParse, "header declares " + std::to_string(count) + " rows, found " +
                                       std::to_string(file.rows.size()));
  return file;
}

EmbeddingFile read_embeddings(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_embeddings(ss.str());
}

SplitEmbeddings split_embeddings(const EmbeddingFile& file) {
  SplitEmbeddings out;
  std::vector<const EmbeddingRow*> nodes, attrs;
  for (const auto& r : file.rows) {
    if (r.tag[0] == 'n') {
      nodes.push_back(&r);
      out.node_ids.push_back(r.tag.substr(2));
    } else {
      attrs.push_back(&r);
      out.attr_ids.push_back(r.tag.substr(2));
    }
  }
  auto fill = [&](const std::vector<const EmbeddingRow*>& rows, Matrix& target) {
    target.resize(static_cast<Index>(rows.size()), file.dim);
    for (Index i = 0; i < target.rows(); ++i)
      for (Index c = 0; c < file.dim; ++c) target(i, c) = rows[i]->values[c];
  };
  fill(nodes, out.node_vectors);
  fill(attrs, out.attr_vectors);
  return out;
}

}  // namespace sgr
