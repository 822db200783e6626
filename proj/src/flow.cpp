#include "zaran/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace zaran::flow {

Dinic::Dinic(std::size_t vertices) : adj_(vertices), level_(vertices), next_(vertices) {}

void Dinic::add_edge(std::size_t from, std::size_t to, int capacity) {
  if (from >= adj_.size() || to >= adj_.size()) throw std::out_of_range("Dinic::add_edge");
  adj_[from].push_back(edges_.size());
  edges_.push_back({to, capacity});
  adj_[to].push_back(edges_.size());
  edges_.push_back({from, 0});
}

bool Dinic::bfs(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t id : adj_[v]) {
      const Edge& e = edges_[id];
      if (e.cap > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        q.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

int Dinic::dfs(std::size_t v, std::size_t sink, int pushed) {
  if (v == sink || pushed == 0) return pushed;
  for (std::size_t& i = next_[v]; i < adj_[v].size(); ++i) {
    const std::size_t id = adj_[v][i];
    Edge& e = edges_[id];
    if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
    const int got = dfs(e.to, sink, std::min(pushed, e.cap));
    if (got > 0) {
      e.cap -= got;
      edges_[id ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

int Dinic::max_flow(std::size_t source, std::size_t sink, int limit) {
  if (limit < 0) limit = std::numeric_limits<int>::max();
  int flow = 0;
  while (flow < limit && bfs(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (flow < limit) {
      const int pushed = dfs(source, sink, limit - flow);
      if (pushed == 0) break;
      flow += pushed;
    }
  }
  return flow;
}

}  // namespace zaran::flow
