#ifndef TURAN_TOOLKIT_TYPES_HPP
#define TURAN_TOOLKIT_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace turan {

// Bipartite graph with parts indexed separately: left 0..left_size-1,
// right 0..right_size-1. Edges run between the parts only.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int left_size, int right_size, std::vector<std::pair<int, int>> edges)
        : left_(left_size), right_(right_size) {
        if (left_size < 0 || right_size < 0)
            throw std::invalid_argument("BipartiteGraph: negative part size");
        adj_left_.assign(left_, {});
        adj_right_.assign(right_, {});
        matrix_.assign(static_cast<std::size_t>(left_) * right_, 0);
        for (auto [u, w] : edges) {
            if (u < 0 || u >= left_ || w < 0 || w >= right_)
                throw std::invalid_argument("BipartiteGraph: edge endpoint out of range");
            auto& cell = matrix_[static_cast<std::size_t>(u) * right_ + w];
            if (cell) throw std::invalid_argument("BipartiteGraph: duplicate edge");
            cell = 1;
            adj_left_[u].push_back(w);
            adj_right_[w].push_back(u);
        }
        edge_count_ = 0;
        for (char c : matrix_) edge_count_ += c;
    }

    int left_size() const { return left_; }
    int right_size() const { return right_; }
    int edge_count() const { return edge_count_; }
    bool has_edge(int u, int w) const { return matrix_[static_cast<std::size_t>(u) * right_ + w]; }
    const std::vector<int>& left_neighbors(int u) const { return adj_left_[u]; }
    const std::vector<int>& right_neighbors(int w) const { return adj_right_[w]; }
    int left_degree(int u) const { return static_cast<int>(adj_left_[u].size()); }
    int right_degree(int w) const { return static_cast<int>(adj_right_[w].size()); }

private:
    int left_ = 0;
    int right_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_left_;
    std::vector<std::vector<int>> adj_right_;
    std::vector<char> matrix_;
};

// Set of k-tuples over an integer universe; every tuple has k pairwise
// distinct entries.
struct SequenceSystem {
    int k = 1;
    std::vector<std::vector<std::int64_t>> sequences;

    void validate() const {
        if (k < 1) throw std::invalid_argument("SequenceSystem: k >= 1 required");
        for (const auto& seq : sequences) {
            if (static_cast<int>(seq.size()) != k)
                throw std::invalid_argument("SequenceSystem: sequence length != k");
            for (std::size_t i = 0; i < seq.size(); ++i)
                for (std::size_t j = i + 1; j < seq.size(); ++j)
                    if (seq[i] == seq[j])
                        throw std::invalid_argument("SequenceSystem: repeated element in sequence");
        }
    }
};

} // namespace turan

#endif
