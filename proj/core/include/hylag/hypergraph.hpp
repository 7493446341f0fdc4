#pragma once

#include <string>
#include <vector>

#include "hylag/errors.hpp"

namespace hylag {

// An edge is a strictly ascending list of 1-based vertex ids.
using Edge = std::vector<int>;

// Immutable r-uniform hypergraph on vertices {1..n}. Edges are stored sorted
// ascending within each edge and lexicographically across edges, so equal edge
// sets always compare equal and file round-trips are bit-exact.
class Hypergraph {
 public:
  Hypergraph() : rank_(2), vertex_count_(0) {}
  Hypergraph(int rank, int vertex_count, std::vector<Edge> edges);

  int rank() const { return rank_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(const Edge& sorted_edge) const;
  int degree(int v) const;
  std::vector<int> degrees() const;  // index v-1
  bool is_isolated(int v) const { return degree(v) == 0; }
  std::vector<int> isolated_vertices() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int rank_;
  int vertex_count_;
  std::vector<Edge> edges_;
};

// Link of a vertex: the (r-1)-sets that complete base_vertex to an edge.
struct LinkGraph {
  int base_vertex = 0;
  std::vector<Edge> pairs;
};

// Named construction request; family is one of the tokens accepted by
// construct(): complete, complete-minus-edge, star, f5, s2n, p1, p2, p3, p4,
// linear-path, matching, single-edge, remark14.
struct FamilySpec {
  std::string family;
  std::vector<long long> params;
};

Hypergraph construct(const FamilySpec& spec);

namespace families {

Hypergraph complete(int r, int t);
Hypergraph complete_minus_edge(int r, int t);
// 3-uniform star S_{2,t}: centers {1,2}, leaves 3..t+2.
Hypergraph star(int t);
Hypergraph f5();
// All triples of [n] meeting {1,2}: edges {12i} plus {ijk} with i in {1,2}.
Hypergraph s2n(int n);
Hypergraph p1();
Hypergraph p2();
Hypergraph p3();
Hypergraph p4();
Hypergraph linear_path(int r, int length);
Hypergraph matching(int r, int size);
Hypergraph single_edge(int r);
// On [t]: all triples of [t-1], plus {ijt} for i<j<=t-2, plus {1,t-1,t}.
Hypergraph remark14(int t);
Hypergraph empty(int r, int n);

}  // namespace families

LinkGraph link_graph(const Hypergraph& g, int v);
// Same link as a rank-(r-1) hypergraph on the parent's vertex set.
Hypergraph link_as_hypergraph(const Hypergraph& g, int v);

Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h);

// Induced deletion: incident edges go, remaining vertices are relabeled
// order-preservingly.
Hypergraph remove_vertices(const Hypergraph& g, const std::vector<int>& vertices);
// Edge deletion keeps the vertex set.
Hypergraph remove_edges(const Hypergraph& g, const std::vector<Edge>& edges);
// Edge targets are resolved against the original labels, then vertices go.
Hypergraph remove(const Hypergraph& g, const std::vector<int>& vertices,
                  const std::vector<Edge>& edges);

bool covers_pairs(const Hypergraph& g);

// Isomorphism-invariant relabeling: equal canonical forms iff isomorphic.
// Exhaustive permutation search refined by degree/link partitions; guarded by
// max_vertices (desk scale).
Hypergraph canonical_form(const Hypergraph& g, int max_vertices = 12);

bool isomorphic(const Hypergraph& a, const Hypergraph& b, int max_vertices = 12);

std::string edge_to_string(const Edge& e);

}  // namespace hylag
