#ifndef MOTGRP_GRAPH_PATHS_HPP_
#define MOTGRP_GRAPH_PATHS_HPP_

// Edge paths in a finite directed multigraph, read as paths in the
// underlying 1-complex. Free reduction is the homotopy normal form, so the
// quotient of paths by "same reduced word" is the fundamental groupoid.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "motgrp/groupoid.hpp"

namespace motgrp {

struct Graph {
  std::size_t vertex_count = 0;
  // edges[e] = (source, target)
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Traversal of an edge, forwards or against its direction.
struct EdgeLetter {
  std::size_t edge = 0;
  bool inverse = false;

  EdgeLetter inverted() const { return {edge, !inverse}; }
  bool operator==(const EdgeLetter&) const = default;
};

class GraphEdgePath {
 public:
  // Throws Error(InvalidValue) unless consecutive letters are endpoint
  // compatible and the word runs source -> target.
  GraphEdgePath(std::shared_ptr<const Graph> graph, std::size_t source, std::size_t target,
                std::vector<EdgeLetter> word);

  static GraphEdgePath constant(std::shared_ptr<const Graph> graph, std::size_t vertex);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  std::size_t source() const { return source_; }
  std::size_t target() const { return target_; }
  const std::vector<EdgeLetter>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }

  // Same graph pointer, endpoints and letters.
  bool operator==(const GraphEdgePath& other) const;

  std::string to_string() const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::size_t source_;
  std::size_t target_;
  std::vector<EdgeLetter> word_;
};

std::size_t letter_source(const Graph& g, EdgeLetter l);
std::size_t letter_target(const Graph& g, EdgeLetter l);

GraphEdgePath reduce_path(const GraphEdgePath& p);
// p then q; throws Error(InvalidValue) if p.target() != q.source().
GraphEdgePath concatenate(const GraphEdgePath& p, const GraphEdgePath& q);
GraphEdgePath reverse_path(const GraphEdgePath& p);

// Every path of length <= max_length from u to v (not necessarily reduced).
std::vector<GraphEdgePath> enumerate_paths(const std::shared_ptr<const Graph>& g, std::size_t u,
                                           std::size_t v, std::size_t max_length);

// Path magmoid of g over all vertices, hom-sets sampled as every path up to
// max_length, with concatenation, constant paths and reversal.
groupoid::Groupoid<std::size_t, GraphEdgePath> path_groupoid(
    const std::shared_ptr<const Graph>& g, std::size_t max_length);

// Homotopy of edge paths: equal free reductions.
groupoid::Congruence<GraphEdgePath> homotopy_congruence();

}  // namespace motgrp

#endif  // MOTGRP_GRAPH_PATHS_HPP_
