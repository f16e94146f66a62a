#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sgr/types.hpp"

namespace sgr {

// Undirected graph with nonnegative node-attribute weights.
//
// Nodes and attributes are addressed by dense indices; the external string
// ids are kept for output. `adjacency` is symmetric 0/1 with zero diagonal,
// `attr_weights` is the n x m matrix R0 with no all-zero column.
struct AttributedGraph {
  SparseMatrix adjacency;     // n x n
  SparseMatrix attr_weights;  // n x m
  std::vector<std::string> node_ids;
  std::vector<std::string> attr_ids;
  std::vector<int> labels;  // empty, or one class index per node
  std::vector<std::string> class_ids;

  Index num_nodes() const { return static_cast<Index>(node_ids.size()); }
  Index num_attrs() const { return static_cast<Index>(attr_ids.size()); }
  Index num_edges() const { return adjacency.nonZeros() / 2; }
  int num_classes() const { return static_cast<int>(class_ids.size()); }
  bool has_labels() const { return !labels.empty(); }

  Vector node_degrees() const;
};

struct EdgeRecord {
  std::string u;
  std::string v;
};

struct AttrRecord {
  std::string node;
  std::string attr;
  double weight = 1.0;
};

struct LabelRecord {
  std::string node;
  std::string label;
};

// Assembles a validated graph from already-parsed records. Node ids are
// indexed in first-appearance order over edges, then attributes; attribute
// ids likewise. Repeated (node, attr) records accumulate their weights.
AttributedGraph build_graph(const std::vector<EdgeRecord>& edges,
                            const std::vector<AttrRecord>& attrs,
                            const std::vector<LabelRecord>& labels = {});

// Reads the TSV inputs: "u<TAB>v", "node<TAB>attr[<TAB>weight]" and
// "node<TAB>class". Blank lines and lines starting with '#' are skipped.
AttributedGraph load_graph(const std::filesystem::path& edges_path,
                           const std::filesystem::path& attrs_path,
                           const std::optional<std::filesystem::path>& labels_path = std::nullopt);

// Writes the graph back out in the load_graph formats; labels only when present.
void write_graph(const AttributedGraph& g, const std::filesystem::path& edges_path,
                 const std::filesystem::path& attrs_path,
                 const std::optional<std::filesystem::path>& labels_path = std::nullopt);

// Throws if any AttributedGraph invariant is violated.
void validate(const AttributedGraph& g);

struct EmbeddingRow {
  std::string tag;  // "n:<node_id>" or "a:<attr_id>"
  std::vector<double> values;
};

struct EmbeddingFile {
  Index dim = 0;
  std::vector<EmbeddingRow> rows;

  Index entity_count() const { return static_cast<Index>(rows.size()); }
};

// Rows are written as "tag v1 ... vk" with 17 significant digits, preceded by
// the header "entity_count dim". Node rows come first, then attribute rows.
void write_embeddings(const Matrix& vectors, Index num_nodes,
                      const std::vector<std::string>& node_ids,
                      const std::vector<std::string>& attr_ids,
                      const std::filesystem::path& path);
std::string format_embeddings(const Matrix& vectors, Index num_nodes,
                              const std::vector<std::string>& node_ids,
                              const std::vector<std::string>& attr_ids);

EmbeddingFile read_embeddings(const std::filesystem::path& path);
EmbeddingFile parse_embeddings(const std::string& text);

// Splits an embedding file back into (node matrix, attr matrix, node ids,
// attr ids), keeping file order.
struct SplitEmbeddings {
  Matrix node_vectors;
  Matrix attr_vectors;
  std::vector<std::string> node_ids;
  std::vector<std::string> attr_ids;
};
SplitEmbeddings split_embeddings(const EmbeddingFile& file);

}  // namespace sgr
