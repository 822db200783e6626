#include "zaran/core.hpp"

#include <stdexcept>
#include <string>

namespace zaran {

const char* to_string(Side side) {
  switch (side) {
    case Side::Left:
      return "left";
    case Side::Right:
      return "right";
    case Side::Middle:
      return "middle";
  }
  return "?";
}

VertexSet::VertexSet(Side side, std::size_t ground_size, std::initializer_list<std::size_t> members)
    : side_(side), bits_(ground_size) {
  for (std::size_t v : members) insert(v);
}

VertexSet VertexSet::from_indices(Side side, std::size_t ground_size,
                                  const std::vector<std::size_t>& members) {
  VertexSet s(side, ground_size);
  for (std::size_t v : members) s.insert(v);
  return s;
}

void VertexSet::insert(std::size_t v) {
  if (v >= bits_.size())
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(bits_.size()) + ")");
  bits_.set(v);
}

void VertexSet::erase(std::size_t v) {
  if (v < bits_.size()) bits_.reset(v);
}

BicliqueFamily::BicliqueFamily(std::size_t n, std::size_t k, std::vector<Biclique> bicliques)
    : n_(n), k_(k), bicliques_(std::move(bicliques)) {
  if (k_ < 1 || k_ > n_)
    throw std::invalid_argument("k must satisfy 1 <= k <= n (k=" + std::to_string(k_) +
                                ", n=" + std::to_string(n_) + ")");
  for (std::size_t i = 0; i < bicliques_.size(); ++i) {
    const auto& b = bicliques_[i];
    if (b.left.ground_size() != n_ || b.right.ground_size() != n_)
      throw std::invalid_argument("biclique " + std::to_string(i) +
                                  " has a ground set of the wrong size");
  }
}

BicliqueFamily BicliqueFamily::with(Biclique extra) const {
  auto copy = bicliques_;
  copy.push_back(std::move(extra));
  return BicliqueFamily(n_, k_, std::move(copy));
}

std::vector<std::pair<std::size_t, std::size_t>> BicliqueFamily::sizes() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(bicliques_.size());
  for (const auto& b : bicliques_) out.emplace_back(b.left.cardinality(), b.right.cardinality());
  return out;
}

std::vector<std::size_t> lint_empty_bicliques(const BicliqueFamily& family) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (family[i].is_empty()) out.push_back(i);
  return out;
}

BipartiteGraph::BipartiteGraph(std::size_t n_left, std::size_t n_right)
    : n_left_(n_left), n_right_(n_right), rows_(n_left, Bitset(n_right)) {}

void BipartiteGraph::add_edge(std::size_t v, std::size_t w) {
  if (v >= n_left_ || w >= n_right_)
    throw std::out_of_range("edge (" + std::to_string(v) + "," + std::to_string(w) +
                            ") outside graph");
  rows_[v].set(w);
}

void BipartiteGraph::add_biclique(const Bitset& left, const Bitset& right) {
  if (left.size() != n_left_ || right.size() != n_right_)
    throw std::invalid_argument("biclique does not fit graph");
  if (right.none()) return;
  for (std::size_t v = left.first(); v < n_left_; v = left.next(v + 1)) rows_[v] |= right;
}

std::size_t BipartiteGraph::edge_count() const noexcept {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> BipartiteGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count());
  for (std::size_t v = 0; v < n_left_; ++v)
    for (std::size_t w : rows_[v].indices()) out.emplace_back(v, w);
  return out;
}

BipartiteGraph BipartiteGraph::induced(const std::vector<std::size_t>& keep_left,
                                       const std::vector<std::size_t>& keep_right) const {
  BipartiteGraph g(keep_left.size(), keep_right.size());
  for (std::size_t i = 0; i < keep_left.size(); ++i) {
    const Bitset& r = rows_.at(keep_left[i]);
    for (std::size_t j = 0; j < keep_right.size(); ++j)
      if (r.test(keep_right[j])) g.rows_[i].set(j);
  }
  return g;
}

BipartiteGraph union_of(const BicliqueFamily& family) {
  BipartiteGraph g(family.n(), family.n());
  for (const auto& b : family.bicliques()) g.add_biclique(b.left.bits(), b.right.bits());
  return g;
}

BipartiteGraph union_of(const BicliqueFamily& family, const std::vector<std::size_t>& indices) {
  BipartiteGraph g(family.n(), family.n());
  for (std::size_t i : indices) g.add_biclique(family[i].left.bits(), family[i].right.bits());
  return g;
}

BipartiteGraph transpose(const BipartiteGraph& g) {
  BipartiteGraph t(g.n_right(), g.n_left());
  for (std::size_t v = 0; v < g.n_left(); ++v)
    for (std::size_t w : g.row(v).indices()) t.add_edge(w, v);
  return t;
}

LayeredGraph::LayeredGraph(std::size_t n, std::size_t m)
    : n_(n), m_(m), in_(m, Bitset(n)), out_(m, Bitset(n)) {}

void LayeredGraph::add_vm(std::size_t v, std::size_t mid) {
  if (v >= n_ || mid >= m_)
    throw std::out_of_range("V-M edge (" + std::to_string(v) + "," + std::to_string(mid) +
                            ") outside graph");
  in_[mid].set(v);
}

void LayeredGraph::add_mw(std::size_t mid, std::size_t w) {
  if (mid >= m_ || w >= n_)
    throw std::out_of_range("M-W edge (" + std::to_string(mid) + "," + std::to_string(w) +
                            ") outside graph");
  out_[mid].set(w);
}

std::size_t LayeredGraph::edge_count_vm() const noexcept {
  std::size_t c = 0;
  for (const auto& b : in_) c += b.count();
  return c;
}

std::size_t LayeredGraph::edge_count_mw() const noexcept {
  std::size_t c = 0;
  for (const auto& b : out_) c += b.count();
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> LayeredGraph::edges_vm() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < n_; ++v)
    for (std::size_t mid = 0; mid < m_; ++mid)
      if (in_[mid].test(v)) out.emplace_back(v, mid);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> LayeredGraph::edges_mw() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t mid = 0; mid < m_; ++mid)
    for (std::size_t w : out_[mid].indices()) out.emplace_back(mid, w);
  return out;
}

LayeredGraph LayeredGraph::mirrored() const {
  LayeredGraph r(n_, m_);
  r.in_ = out_;
  r.out_ = in_;
  return r;
}

}  // namespace zaran
