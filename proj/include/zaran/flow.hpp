#pragma once

#include <cstddef>
#include <vector>

namespace zaran::flow {

/// Dinic max-flow over integer capacities. Unit-capacity networks (the
/// vertex-split path systems used here) finish in O(E sqrt V).
class Dinic {
 public:
  explicit Dinic(std::size_t vertices);

  void add_edge(std::size_t from, std::size_t to, int capacity);
  /// Stops early once `limit` units have been pushed.
  int max_flow(std::size_t source, std::size_t sink, int limit = -1);

 private:
  struct Edge {
    std::size_t to;
    int cap;
  };

  bool bfs(std::size_t source, std::size_t sink);
  int dfs(std::size_t v, std::size_t sink, int pushed);

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace zaran::flow
