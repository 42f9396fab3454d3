#include "motgrp/graph_paths.hpp"

#include <sstream>

#include "motgrp/error.hpp"

namespace motgrp {

std::size_t letter_source(const Graph& g, EdgeLetter l) {
  const auto& [s, t] = g.edges.at(l.edge);
  return l.inverse ? t : s;
}

std::size_t letter_target(const Graph& g, EdgeLetter l) {
  const auto& [s, t] = g.edges.at(l.edge);
  return l.inverse ? s : t;
}

GraphEdgePath::GraphEdgePath(std::shared_ptr<const Graph> graph, std::size_t source,
                             std::size_t target, std::vector<EdgeLetter> word)
    : graph_(std::move(graph)), source_(source), target_(target), word_(std::move(word)) {
  if (!graph_) fail(ErrorKind::InvalidValue, "path without a graph");
  if (source_ >= graph_->vertex_count || target_ >= graph_->vertex_count) {
    fail(ErrorKind::InvalidValue, "path endpoint is not a vertex");
  }
  std::size_t at = source_;
  for (const EdgeLetter& l : word_) {
    if (l.edge >= graph_->edges.size()) fail(ErrorKind::InvalidValue, "unknown edge");
    if (letter_source(*graph_, l) != at) {
      fail(ErrorKind::InvalidValue, "consecutive edges are not endpoint compatible");
    }
    at = letter_target(*graph_, l);
  }
  if (at != target_) fail(ErrorKind::InvalidValue, "word does not end at the target");
}

GraphEdgePath GraphEdgePath::constant(std::shared_ptr<const Graph> graph, std::size_t vertex) {
  return GraphEdgePath(std::move(graph), vertex, vertex, {});
}

bool GraphEdgePath::operator==(const GraphEdgePath& other) const {
  return graph_ == other.graph_ && source_ == other.source_ && target_ == other.target_ &&
         word_ == other.word_;
}

std::string GraphEdgePath::to_string() const {
  if (word_.empty()) return "1_" + std::to_string(source_);
  std::ostringstream os;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) os << '.';
    os << 'e' << word_[i].edge;
    if (word_[i].inverse) os << "^-1";
  }
  return os.str();
}

GraphEdgePath reduce_path(const GraphEdgePath& p) {
  std::vector<EdgeLetter> stack;
  stack.reserve(p.length());
  for (const EdgeLetter& l : p.word()) {
    if (!stack.empty() && stack.back() == l.inverted()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return GraphEdgePath(p.graph_ptr(), p.source(), p.target(), std::move(stack));
}

GraphEdgePath concatenate(const GraphEdgePath& p, const GraphEdgePath& q) {
  if (p.graph_ptr() != q.graph_ptr() || p.target() != q.source()) {
    fail(ErrorKind::InvalidValue, "paths are not composable");
  }
  std::vector<EdgeLetter> word = p.word();
  word.insert(word.end(), q.word().begin(), q.word().end());
  return GraphEdgePath(p.graph_ptr(), p.source(), q.target(), std::move(word));
}

GraphEdgePath reverse_path(const GraphEdgePath& p) {
  std::vector<EdgeLetter> word;
  word.reserve(p.length());
  for (auto it = p.word().rbegin(); it != p.word().rend(); ++it) word.push_back(it->inverted());
  return GraphEdgePath(p.graph_ptr(), p.target(), p.source(), std::move(word));
}

std::vector<GraphEdgePath> enumerate_paths(const std::shared_ptr<const Graph>& g, std::size_t u,
                                           std::size_t v, std::size_t max_length) {
  std::vector<GraphEdgePath> out;
  std::vector<EdgeLetter> word;
  auto extend = [&](auto&& self, std::size_t at) -> void {
    if (at == v) out.emplace_back(g, u, v, word);
    if (word.size() == max_length) return;
    for (std::size_t e = 0; e < g->edges.size(); ++e) {
      for (bool inv : {false, true}) {
        const EdgeLetter l{e, inv};
        if (letter_source(*g, l) != at) continue;
        word.push_back(l);
        self(self, letter_target(*g, l));
        word.pop_back();
      }
    }
  };
  extend(extend, u);
  return out;
}

groupoid::Groupoid<std::size_t, GraphEdgePath> path_groupoid(
    const std::shared_ptr<const Graph>& g, std::size_t max_length) {
  groupoid::Groupoid<std::size_t, GraphEdgePath> out;
  for (std::size_t v = 0; v < g->vertex_count; ++v) out.magmoid.objects.push_back(v);
  out.magmoid.hom = [g, max_length](std::size_t i, std::size_t j) {
    return enumerate_paths(g, i, j, max_length);
  };
  out.magmoid.compose = [](const GraphEdgePath& p, const GraphEdgePath& q) {
    return concatenate(p, q);
  };
  out.ops.identity = [g](std::size_t i) { return GraphEdgePath::constant(g, i); };
  out.ops.inverse = [](std::size_t, std::size_t, const GraphEdgePath& p) {
    return reverse_path(p);
  };
  return out;
}

groupoid::Congruence<GraphEdgePath> homotopy_congruence() {
  return {[](std::size_t, std::size_t, const GraphEdgePath& p, const GraphEdgePath& q) {
    return reduce_path(p).word() == reduce_path(q).word();
  }};
}

}  // namespace motgrp
