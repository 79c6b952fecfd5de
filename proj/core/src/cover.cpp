#include "pencil/cover.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pencil/cyclic.hpp"

namespace pencil {

std::vector<Int> DualGraph::degrees() const {
  std::vector<Int> deg(vertices.size(), 0);
  for (const auto& e : edges) {
    deg[e.v1] += 1;
    deg[e.v2] += 1;  // self-edges count twice
  }
  return deg;
}

bool DualGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.v1].push_back(e.v2);
    adj[e.v2].push_back(e.v1);
  }
  std::vector<bool> seen(vertices.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  size_t visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == vertices.size();
}

CoverGraph cyclic_cover_graph(const ResolvedFiber& rf, const Int& d) {
  if (d < 1) throw std::domain_error("cyclic_cover_graph: need d >= 1");
  for (const auto& v : rf.vertices)
    if (d % v.mult != 0)
      throw std::domain_error("cyclic_cover_graph: degree " + str(d) +
                              " is not divisible by the multiplicity of '" + v.name + "'");

  const int nv = static_cast<int>(rf.vertices.size());

  // Component count over each vertex: the subgroup of Z/n generated by the
  // partner multiplicities. Exact for rational vertices; for positive genus
  // it is forced when it is 1, when n = 1, or when connectivity forces a
  // single component (isolated multiple fiber nC).
  std::vector<Int> comps(nv);
  for (int v = 0; v < nv; ++v) {
    const Int n = rf.vertices[v].mult;
    Int g = n;
    for (const auto& e : rf.edges) {
      if (e.v1 == v) g = gcd(g, rf.vertices[e.v2].mult);
      if (e.v2 == v) g = gcd(g, rf.vertices[e.v1].mult);
    }
    if (g > 1 && rf.vertices[v].genus > 0 && n > 1) {
      if (nv == 1 && rf.edges.empty()) {
        g = 1;  // connected pullback fiber forces one component
      } else {
        throw AmbiguousCoverError(
            "ambiguous monodromy: component count over positive-genus vertex '" +
            rf.vertices[v].name + "' is not determined by local data");
      }
    }
    comps[v] = g;
  }

  CoverGraph cg;
  cg.d = d;
  std::vector<int> first_vertex(nv);  // cover vertices of base v: first_vertex[v] + k
  for (int v = 0; v < nv; ++v) {
    const Int n = rf.vertices[v].mult;
    const Int c = comps[v];
    // Riemann-Hurwitz per component: the cover of the base component has
    // degree n, split into c components; over a node with partner
    // multiplicity b there are gcd(n, b) points of index n/gcd(n, b).
    Int rh = (n / c) * (2 * rf.vertices[v].genus - 2);
    for (const auto& e : rf.edges) {
      for (int side = 0; side < 2; ++side) {
        int at = side == 0 ? e.v1 : e.v2;
        int other = side == 0 ? e.v2 : e.v1;
        if (at != v) continue;
        Int points = gcd(n, rf.vertices[other].mult);
        Int ram = n / points;
        rh += Int(e.count) * (points / c) * (ram - 1);
      }
    }
    if ((rh + 2) % 2 != 0 || rh + 2 < 0)
      throw std::domain_error("cyclic_cover_graph: Riemann-Hurwitz gives invalid genus over '" +
                              rf.vertices[v].name + "'");
    Int genus = (rh + 2) / 2;
    first_vertex[v] = static_cast<int>(cg.graph.vertices.size());
    for (Int k = 0; k < c; ++k) {
      std::string name = rf.vertices[v].name;
      if (c > 1) name += "#" + k.get_str();
      cg.graph.vertices.push_back({name, genus, genus == 0});
      cg.vertex_origin.push_back(-1);
      cg.vertex_base.push_back(v);
    }
  }

  // Chains over each node: gcd(a, b) chains of [a,b]d/gcd(a,b) - 1 rational
  // (-2)-vertices, matched cyclically to the components on both sides.
  for (size_t ei = 0; ei < rf.edges.size(); ++ei) {
    const RFEdge& e = rf.edges[ei];
    const Int cu = comps[e.v1], cw = comps[e.v2];
    NodeChains nc = node_chains(d, e.a, e.b);
    const Int P = nc.count;
    if (e.v1 == e.v2) {
      if (cu != 1)
        throw AmbiguousCoverError(
            "ambiguous attachment: self-gluing node on '" + rf.vertices[e.v1].name +
            "' with several cover components");
    } else if (!(cu == 1 || cw == 1 || (P == cu && P == cw))) {
      throw AmbiguousCoverError("ambiguous attachment: node between '" +
                                rf.vertices[e.v1].name + "' and '" +
                                rf.vertices[e.v2].name + "' is not forced");
    }
    for (int inst = 0; inst < e.count; ++inst) {
      for (Int k = 0; k < P; ++k) {
        int left = first_vertex[e.v1] + static_cast<int>(Int(k % cu).get_ui());
        int right = first_vertex[e.v2] + static_cast<int>(Int(k % cw).get_ui());
        int prev = left;
        for (Int t = 0; t < nc.length; ++t) {
          int cv = static_cast<int>(cg.graph.vertices.size());
          cg.graph.vertices.push_back(
              {"n" + std::to_string(ei) + "." + k.get_str() + "." + t.get_str(),
               0, true});
          cg.vertex_origin.push_back(static_cast<int>(ei));
          cg.vertex_base.push_back(-1);
          cg.graph.edges.push_back({prev, cv});
          cg.edge_origin.push_back(static_cast<int>(ei));
          prev = cv;
        }
        cg.graph.edges.push_back({prev, right});
        cg.edge_origin.push_back(static_cast<int>(ei));
      }
    }
  }

  if (!cg.graph.connected())
    throw AmbiguousCoverError(
        "ambiguous monodromy: local data yields a disconnected cover graph");
  return cg;
}

namespace {

SemistableModel contract_impl(const DualGraph& g, const Int& d,
                              const std::vector<int>& edge_origin,
                              const std::vector<int>& vertex_origin,
                              size_t base_edge_count) {
  SemistableModel m;
  m.d = d;
  m.pre_edges = Int(g.edges.size());
  m.vertex_alive.assign(g.vertices.size(), true);
  m.edge_alive.assign(g.edges.size(), true);

  std::vector<std::vector<int>> incident(g.vertices.size());
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    incident[g.edges[ei].v1].push_back(static_cast<int>(ei));
    incident[g.edges[ei].v2].push_back(static_cast<int>(ei));  // self-edges twice
  }
  std::vector<Int> deg(g.vertices.size());
  for (size_t v = 0; v < g.vertices.size(); ++v) deg[v] = Int(incident[v].size());

  size_t alive = g.vertices.size();
  Int removed = 0;
  std::set<int> work;  // candidate vertices, processed in id order
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (g.vertices[v].rational && deg[v] <= 1) work.insert(static_cast<int>(v));

  while (!work.empty()) {
    int v = *work.begin();
    work.erase(work.begin());
    if (!m.vertex_alive[v] || !g.vertices[v].rational || deg[v] > 1) continue;
    if (alive == 1) break;  // never empty the graph
    m.vertex_alive[v] = false;
    --alive;
    ++removed;
    for (int ei : incident[v]) {
      if (!m.edge_alive[ei]) continue;
      const DGEdge& e = g.edges[ei];
      m.edge_alive[ei] = false;
      int w = e.v1 == v ? e.v2 : e.v1;
      deg[v] -= 1;
      deg[w] -= 1;
      if (m.vertex_alive[w] && g.vertices[w].rational && deg[w] <= 1)
        work.insert(w);
    }
  }

  m.contractions = removed;
  m.c_minus1 = Rational(removed, d);

  // final graph, reindexed
  std::vector<int> new_id(g.vertices.size(), -1);
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (!m.vertex_alive[v]) continue;
    new_id[v] = static_cast<int>(m.graph.vertices.size());
    m.graph.vertices.push_back(g.vertices[v]);
  }
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    if (!m.edge_alive[ei]) continue;
    m.graph.edges.push_back({new_id[g.edges[ei].v1], new_id[g.edges[ei].v2]});
  }
  m.e_count = Int(m.graph.edges.size());

  m.base_edge_contracted.assign(base_edge_count, true);
  for (size_t ei = 0; ei < g.edges.size(); ++ei)
    if (m.edge_alive[ei] && ei < edge_origin.size() && edge_origin[ei] >= 0)
      m.base_edge_contracted[edge_origin[ei]] = false;
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (m.vertex_alive[v] && v < vertex_origin.size() && vertex_origin[v] >= 0)
      m.base_edge_contracted[vertex_origin[v]] = false;
  return m;
}

}  // namespace

SemistableModel contract_minus_ones(const CoverGraph& cg) {
  size_t base_edges = 0;
  for (int o : cg.edge_origin) base_edges = std::max(base_edges, static_cast<size_t>(o + 1));
  return contract_impl(cg.graph, cg.d, cg.edge_origin, cg.vertex_origin, base_edges);
}

SemistableModel contract_minus_ones(const DualGraph& g, const Int& d) {
  return contract_impl(g, d, {}, {}, 0);
}

Rational verify_c2(const SemistableModel& m, const Int& e_F, const Int& d) {
  return Rational(e_F) - Rational(m.pre_edges, d) + m.c_minus1;
}

Rational verify_remark_beta(const ResolvedFiber& rf, const SemistableModel& m) {
  if (m.base_edge_contracted.size() < rf.edges.size())
    throw std::domain_error("verify_remark_beta: contraction provenance unavailable");
  Rational sum(0);
  for (size_t ei = 0; ei < rf.edges.size(); ++ei)
    if (m.base_edge_contracted[ei])
      sum += Rational(Int(rf.edges[ei].count)) * bracket(rf.edges[ei].a, rf.edges[ei].b);
  return sum;
}

std::string render_graph(const DualGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << "\n";
  for (const auto& v : g.vertices)
    os << "vertex " << v.name << " genus " << v.genus.get_str() << "\n";
  for (const auto& e : g.edges)
    os << "edge " << g.vertices[e.v1].name << " " << g.vertices[e.v2].name << "\n";
  return os.str();
}

DualGraph parse_graph(const std::string& text) {
  DualGraph g;
  std::map<std::string, int> index;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw.empty() || kw[0] == '#' || kw == "graph") continue;
    if (kw == "vertex") {
      std::string name, genus_kw, genus;
      if (!(ls >> name >> genus_kw >> genus) || genus_kw != "genus")
        throw std::domain_error("graph: malformed vertex at line " + std::to_string(lineno));
      if (index.count(name))
        throw std::domain_error("graph: duplicate vertex '" + name + "'");
      Int gv(genus);
      index[name] = static_cast<int>(g.vertices.size());
      g.vertices.push_back({name, gv, gv == 0});
    } else if (kw == "edge") {
      std::string a, b;
      if (!(ls >> a >> b))
        throw std::domain_error("graph: malformed edge at line " + std::to_string(lineno));
      if (!index.count(a) || !index.count(b))
        throw std::domain_error("graph: edge references unknown vertex at line " +
                                std::to_string(lineno));
      g.edges.push_back({index[a], index[b]});
    } else {
      throw std::domain_error("graph: unknown directive '" + kw + "' at line " +
                              std::to_string(lineno));
    }
  }
  return g;
}

}  // namespace pencil
