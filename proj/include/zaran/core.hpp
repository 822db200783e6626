#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "zaran/bitset.hpp"

namespace zaran {

enum class Side { Left, Right, Middle };

const char* to_string(Side side);

/// A set of vertices on one side of a bipartite or layered graph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(Side side, std::size_t ground_size) : side_(side), bits_(ground_size) {}
  VertexSet(Side side, Bitset bits) : side_(side), bits_(std::move(bits)) {}
  /// Throws std::out_of_range if any member is >= ground_size.
  VertexSet(Side side, std::size_t ground_size, std::initializer_list<std::size_t> members);
  static VertexSet from_indices(Side side, std::size_t ground_size,
                                const std::vector<std::size_t>& members);

  Side side() const noexcept { return side_; }
  std::size_t ground_size() const noexcept { return bits_.size(); }
  std::size_t cardinality() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(std::size_t v) const noexcept { return v < bits_.size() && bits_.test(v); }
  const Bitset& bits() const noexcept { return bits_; }
  std::vector<std::size_t> members() const { return bits_.indices(); }

  void insert(std::size_t v);
  void erase(std::size_t v);

  bool operator==(const VertexSet&) const = default;

 private:
  Side side_ = Side::Left;
  Bitset bits_;
};

/// Complete bipartite graph left x right. The edge set is never materialized.
struct Biclique {
  VertexSet left;
  VertexSet right;

  bool is_empty() const noexcept { return left.empty() || right.empty(); }
  std::size_t edge_count() const noexcept { return left.cardinality() * right.cardinality(); }
  bool operator==(const Biclique&) const = default;
};

/// An ordered list of bicliques over two n-vertex sides, with the target
/// independent-set side length k.
class BicliqueFamily {
 public:
  /// Throws std::invalid_argument unless 1 <= k <= n and every biclique
  /// lives on ground sets of size n.
  BicliqueFamily(std::size_t n, std::size_t k, std::vector<Biclique> bicliques = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return bicliques_.size(); }
  const std::vector<Biclique>& bicliques() const noexcept { return bicliques_; }
  const Biclique& operator[](std::size_t i) const { return bicliques_.at(i); }

  BicliqueFamily with(Biclique extra) const;
  BicliqueFamily with_k(std::size_t k) const { return BicliqueFamily(n_, k, bicliques_); }

  /// (|V_i|, |W_i|) per biclique.
  std::vector<std::pair<std::size_t, std::size_t>> sizes() const;

  bool operator==(const BicliqueFamily&) const = default;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Biclique> bicliques_;
};

/// Indices of bicliques with an empty side. They are legal but contribute no edges.
std::vector<std::size_t> lint_empty_bicliques(const BicliqueFamily& family);

/// Dense bipartite graph stored as one right-neighbour bitset per left vertex.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t n_left, std::size_t n_right);

  std::size_t n_left() const noexcept { return n_left_; }
  std::size_t n_right() const noexcept { return n_right_; }

  bool has_edge(std::size_t v, std::size_t w) const { return rows_.at(v).test(w); }
  void add_edge(std::size_t v, std::size_t w);
  void add_biclique(const Bitset& left, const Bitset& right);

  const Bitset& row(std::size_t v) const { return rows_.at(v); }
  const std::vector<Bitset>& rows() const noexcept { return rows_; }

  std::size_t degree(std::size_t v) const { return rows_.at(v).count(); }
  std::size_t edge_count() const noexcept;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Graph induced on left vertices `keep_left` and right vertices
  /// `keep_right`, relabelled densely in ascending index order.
  BipartiteGraph induced(const std::vector<std::size_t>& keep_left,
                         const std::vector<std::size_t>& keep_right) const;

  bool operator==(const BipartiteGraph&) const = default;

 private:
  std::size_t n_left_ = 0;
  std::size_t n_right_ = 0;
  std::vector<Bitset> rows_;
};

BipartiteGraph union_of(const BicliqueFamily& family);
BipartiteGraph union_of(const BicliqueFamily& family, const std::vector<std::size_t>& indices);
BipartiteGraph transpose(const BipartiteGraph& g);

/// Three-layer graph V -> M -> W with |V| = |W| = n and |M| = m. Adjacency
/// is stored per middle vertex: in-neighbours over V, out-neighbours over W.
class LayeredGraph {
 public:
  LayeredGraph() = default;
  LayeredGraph(std::size_t n, std::size_t m);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }

  void add_vm(std::size_t v, std::size_t mid);
  void add_mw(std::size_t mid, std::size_t w);
  bool has_vm(std::size_t v, std::size_t mid) const { return in_.at(mid).test(v); }
  bool has_mw(std::size_t mid, std::size_t w) const { return out_.at(mid).test(w); }

  const Bitset& in_neighbors(std::size_t mid) const { return in_.at(mid); }
  const Bitset& out_neighbors(std::size_t mid) const { return out_.at(mid); }
  std::size_t deg_v(std::size_t mid) const { return in_.at(mid).count(); }
  std::size_t deg_w(std::size_t mid) const { return out_.at(mid).count(); }

  std::size_t edge_count_vm() const noexcept;
  std::size_t edge_count_mw() const noexcept;
  std::size_t edge_count() const noexcept { return edge_count_vm() + edge_count_mw(); }

  /// Sorted (v, mid) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> edges_vm() const;
  /// Sorted (mid, w) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> edges_mw() const;

  /// Swaps the roles of V and W (edges reversed).
  LayeredGraph mirrored() const;

  bool operator==(const LayeredGraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Bitset> in_;
  std::vector<Bitset> out_;
};

}  // namespace zaran
