#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lagra {

/// Error raised for malformed input data. Messages carry file and line
/// context where available.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// One input instance: labeled nodes with continuous attribute vectors,
/// simple undirected edges, and a binary class label in {-1,+1}.
struct AttributedGraph {
    std::vector<int> node_labels;
    std::vector<std::vector<double>> node_attrs;  // one vector of dim d per node
    std::vector<std::pair<int, int>> edges;       // u < v, sorted, no duplicates
    std::vector<std::vector<int>> adjacency;      // built by finalize()
    int class_label = 0;                          // -1 or +1

    int node_count() const { return static_cast<int>(node_labels.size()); }

    bool has_edge(int u, int v) const;

    /// Sorts/dedupes edges and rebuilds adjacency. Throws DataError on
    /// self-loops or out-of-range endpoints.
    void finalize();
};

struct Dataset {
    std::vector<AttributedGraph> graphs;
    int attribute_dim = -1;
    std::vector<int> label_alphabet;  // sorted distinct node labels
    // raw graph-label values and their {-1,+1} images, sorted by raw value
    std::vector<std::pair<int, int>> label_mapping;

    std::size_t size() const { return graphs.size(); }
    bool empty() const { return graphs.empty(); }

    /// Recomputes attribute_dim and label_alphabet from the graphs.
    void refresh_metadata();
};

struct SplitSpec {
    double train_fraction = 0.6;
    double val_fraction = 0.2;
    double test_fraction = 0.2;
    std::uint64_t seed = 0;

    void validate() const;
};

struct DatasetSplit {
    Dataset train;
    Dataset val;
    Dataset test;
};

/// Maps raw graph labels to {-1,+1}. Accepts label sets contained in
/// {-1,+1} (identity), {0,1} or {1,2} (smaller value -> -1); anything else
/// is a DataError.
std::vector<std::pair<int, int>> make_label_mapping(const std::vector<int>& raw_labels);

/// Seed-deterministic partition into train/val/test. Sizes are
/// floor(n * fraction) with the remainder assigned train-first.
DatasetSplit split_dataset(const Dataset& dataset, const SplitSpec& spec);

/// Arithmetic mean of the attribute vectors of all nodes carrying each
/// label, taken across every graph in the dataset.
std::map<int, std::vector<double>> mean_attributes_by_label(const Dataset& dataset);

}  // namespace lagra
