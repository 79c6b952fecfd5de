// The semistable-model oracle: dual graph of the pullback fiber under a
// degree-d cyclic base change, contraction of (-1)-vertices to the relative
// minimal model, and the resulting c_{-1}(F) with independent verification
// paths.
#pragma once

#include <string>
#include <vector>

#include "pencil/fiber.hpp"

namespace pencil {

struct DGVertex {
  std::string name;
  Int genus;
  bool rational;  // genus == 0
};

struct DGEdge {
  int v1, v2;
};

/// Vertex-labelled multigraph (parallel edges and self-edges allowed).
struct DualGraph {
  std::vector<DGVertex> vertices;
  std::vector<DGEdge> edges;

  std::vector<Int> degrees() const;  // self-edges count twice
  bool connected() const;
};

/// Cover graph with provenance: which base edge each chain vertex / edge
/// came from (-1 for none), and which base vertex each component vertex
/// covers (-1 for chain vertices).
struct CoverGraph {
  DualGraph graph;
  Int d;
  std::vector<int> vertex_origin;  // base edge index per vertex (-1: component)
  std::vector<int> vertex_base;    // base vertex index per vertex (-1: chain)
  std::vector<int> edge_origin;    // base edge index per edge
};

class AmbiguousCoverError : public std::runtime_error {
 public:
  explicit AmbiguousCoverError(const std::string& what) : std::runtime_error(what) {}
};

/// Builds the dual graph of the pullback fiber at degree d (d must be a
/// multiple of every multiplicity in rf; use d = M_F). Component counts
/// over a vertex use the subgroup of Z/n generated by the partner
/// multiplicities; unforced positive-genus counts raise
/// AmbiguousCoverError("ambiguous monodromy"), unforced chain matchings
/// raise AmbiguousCoverError("ambiguous attachment").
CoverGraph cyclic_cover_graph(const ResolvedFiber& rf, const Int& d);

struct SemistableModel {
  DualGraph graph;  // after contraction
  Int d;
  Int contractions;
  Rational c_minus1;  // contractions / d
  Int pre_edges;      // edge count before contraction
  Int e_count;        // edge count after contraction
  std::vector<bool> base_edge_contracted;  // all cover material removed
  std::vector<bool> vertex_alive, edge_alive;
};

/// Repeatedly removes rational vertices of degree <= 1 (degree 1 means
/// self-intersection -1 in a reduced fiber); deterministic by vertex id.
SemistableModel contract_minus_ones(const CoverGraph& cg);
SemistableModel contract_minus_ones(const DualGraph& g, const Int& d);

/// Independent c2 recomputation: e_F - (1/d) * (pre-contraction edges)
/// + c_{-1}.
Rational verify_c2(const SemistableModel& m, const Int& e_F, const Int& d);

/// Sum of [a, b] over the nodes of F' whose cover material was entirely
/// contracted; equals c_{-1} when defined.
Rational verify_remark_beta(const ResolvedFiber& rf, const SemistableModel& m);

/// Adjacency text format, parseable by parse_graph:
///   graph <name>
///   vertex <id> genus <g>
///   edge <id1> <id2>
std::string render_graph(const DualGraph& g, const std::string& name);
DualGraph parse_graph(const std::string& text);

}  // namespace pencil
