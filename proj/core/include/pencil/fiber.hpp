// Fiber configurations: weighted components plus local germ data, the
// normal-crossing resolution of a fiber, and the invariant engine
// c1^2(F), c2(F), chi_F, lambda_F (with the elliptic Kodaira table for
// genus-1 fibers).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pencil/resolution.hpp"

namespace pencil {

struct FiberComponent {
  std::string id;
  Int mult;       // multiplicity in the fiber
  Int genus;      // geometric genus of the normalization
};

/// An ordinary double point between two (not necessarily distinct)
/// components, with local intersection 1.
struct DeclaredNode {
  std::string c1, c2;
};

/// A singular point given by a local equation; branch_map sends each factor
/// index of the parsed germ to the component owning that branch.
struct GermPoint {
  std::string equation;
  CurveGerm germ;
  std::map<int, std::string> branch_map;
};

struct FiberConfig {
  std::string name;
  std::vector<FiberComponent> components;
  std::vector<DeclaredNode> nodes;
  std::vector<GermPoint> germs;
  std::optional<Int> declared_genus;
  std::optional<std::string> kodaira_type;  // for genus-1 fibers
  std::optional<Int> kodaira_b;

  int component_index(const std::string& id) const;  // -1 if absent
};

struct RFVertex {
  std::string name;
  Int mult;
  Int genus;
  bool exceptional;
};

struct RFEdge {
  int v1, v2;
  Int a, b;    // branch multiplicities (= endpoint multiplicities)
  int count;   // conjugate copies of this node
  int origin;  // germ index, or -1 for a declared node
};

/// Dual graph of the normal-crossing model F' with the germ resolutions
/// grafted in; M is the lcm of all multiplicities in F'.
struct ResolvedFiber {
  std::vector<RFVertex> vertices;
  std::vector<RFEdge> edges;
  Int M;
  std::vector<ResolutionReport> germ_reports;  // parallel to cfg.germs
};

struct NumericBasics {
  Int N;        // g - p_a(F_red)
  Int e;        // 2N + mu
  Int mu;       // total Milnor number
  Int Fred2;    // F_red^2
  Int pa_red;   // p_a(F_red)
  Int g;        // fiber genus from adjunction
  std::map<std::string, Int> self_int;  // per component, from the Zariski relation
  std::map<std::string, Int> pa_comp;   // arithmetic genus per component
};

struct FiberInvariants {
  Rational c1sq, c2, chi, c_minus1;
  Int N, e, mu, Fred2, pa_red, g;
  std::optional<Rational> lambda;  // c1^2 / chi; absent when semistable
  bool semistable = false;
  Rational alpha_sum, beta_sum;
  // structural flags consumed by the certificate suite
  bool n_fred_with_nodes_only = false;   // F = n F_red, at worst nodes
  bool mult_comps_all_minus_two = true;  // every multiple component is a (-2)-curve
};

/// Validates the configuration, resolves every germ and grafts the
/// exceptional trees into one connected dual graph.
ResolvedFiber resolve_fiber(const FiberConfig& cfg);

/// N_F, e_F, mu_F, F_red^2, p_a(F_red) and the genus from adjunction.
/// Rejects configurations violating the Zariski integrality relation,
/// a declared genus, relative minimality, or g <= 0.
NumericBasics numeric_basics(const FiberConfig& cfg, const ResolvedFiber& rf);

/// True iff all multiplicities are 1 and every singular point is an
/// ordinary double point.
bool is_semistable(const FiberConfig& cfg);

/// Full pipeline. Semistable fibers get zero invariants; genus-1 fibers are
/// routed through the Kodaira table (declared type required); genus >= 2
/// fibers run the semistable-model oracle at degree M_F.
FiberInvariants fiber_invariants(const FiberConfig& cfg);

struct KodairaValues {
  Rational c1sq, c2, chi;
};

/// The elliptic table: type tags "mI_b", "I*_b", "II", "III", "IV",
/// "II*", "III*", "IV*". c1^2 = 0 always; c2 = 0 for mI_b, 6 for I*_b,
/// and e_F for the remaining (additive) types.
KodairaValues kodaira_elliptic(const std::string& type, const Int& b = 0);

}  // namespace pencil
