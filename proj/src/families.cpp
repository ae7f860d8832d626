#include "turan/families.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace turan {

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument("invalid family parameters: " + what);
}

void need(bool ok, const std::string& bound) {
  if (!ok) reject(bound);
}

Graph path(int n) {
  need(n >= 1, "Path requires n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  need(n >= 3, "Cycle requires n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  need(n >= 0, "Complete requires n >= 0");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  need(a >= 0 && b >= 0, "CompleteBipartite requires a, b >= 0");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

// Clique labels 0..k-1, independent part k..n-1.
Graph snk(int n, int k) {
  need(k >= 1, "Snk requires k >= 1");
  need(n > k, "Snk requires n > k");
  Graph g = complete(k);
  for (int v = k; v < n; ++v) g.add_vertex();
  for (int u = 0; u < k; ++u) {
    for (int v = k; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// S_{n-t,k} with labels as in snk, then t pendants n-t..n-1 on vertex 0.
Graph snk_t(int n, int k, int t) {
  need(t >= 0, "SnkT requires t >= 0");
  need(n - t > k, "SnkT requires n - t > k");
  Graph g = snk(n - t, k);
  for (int i = 0; i < t; ++i) {
    int p = g.add_vertex();
    g.add_edge(0, p);
  }
  return g;
}

// Star center 0, leaves 1..n-1; k disjoint leaf edges (1,2), (3,4), ...
Graph sn_k(int n, int k) {
  need(n >= 2, "SnK requires n >= 2");
  need(k >= 0, "SnK requires k >= 0");
  need(2 * k <= n - 1, "SnK requires 2k <= n - 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i + 1, 2 * i + 2);
  return g;
}

Graph fan(int n) {
  need(n >= 2, "Fan requires n >= 2");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  for (int v = 1; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// K_{2,t} with the edge 0-2 subdivided through the last vertex.
Graph subdivided_k2t(int t) {
  need(t >= 1, "SubdividedK2t requires t >= 1");
  Graph g = complete_bipartite(2, t);
  int s = g.add_vertex();
  g.remove_edge(0, 2);
  g.add_edge(0, s);
  g.add_edge(s, 2);
  return g;
}

}  // namespace

const char* family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return "path";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Star: return "star";
    case FamilyKind::CompleteBipartite: return "kab";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Snk: return "snk";
    case FamilyKind::SnkT: return "snkt";
    case FamilyKind::SnK: return "snplusk";
    case FamilyKind::Fan: return "fan";
    case FamilyKind::SubdividedK2t: return "sk2t";
    case FamilyKind::JoinCliqueEmpty: return "kjoin";
  }
  return "?";
}

Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k, const char* sig) {
    if (p.size() != k) reject(std::string(sig));
  };
  switch (spec.kind) {
    case FamilyKind::Path: arity(1, "Path(n)"); return path(p[0]);
    case FamilyKind::Cycle: arity(1, "Cycle(n)"); return cycle(p[0]);
    case FamilyKind::Star:
      arity(1, "Star(n)");
      need(p[0] >= 1, "Star requires n >= 1");
      return p[0] == 1 ? Graph(1) : snk(p[0], 1);
    case FamilyKind::CompleteBipartite: arity(2, "CompleteBipartite(a,b)"); return complete_bipartite(p[0], p[1]);
    case FamilyKind::Complete: arity(1, "Complete(n)"); return complete(p[0]);
    case FamilyKind::Snk: arity(2, "Snk(n,k)"); return snk(p[0], p[1]);
    case FamilyKind::SnkT: arity(3, "SnkT(n,k,t)"); return snk_t(p[0], p[1], p[2]);
    case FamilyKind::SnK: arity(2, "SnK(n,k)"); return sn_k(p[0], p[1]);
    case FamilyKind::Fan: arity(1, "Fan(n)"); return fan(p[0]);
    case FamilyKind::SubdividedK2t: arity(1, "SubdividedK2t(t)"); return subdivided_k2t(p[0]);
    case FamilyKind::JoinCliqueEmpty:
      arity(2, "JoinCliqueEmpty(k,q)");
      need(p[1] >= 1, "JoinCliqueEmpty requires q >= 1");
      return snk(p[0] + p[1], p[0]);
  }
  reject("unknown kind");
}

FamilySpec parse_family(const std::string& text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw std::invalid_argument("family syntax is kind(p1,p2,...): " + text);
  }
  std::string name = text.substr(0, open);
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  FamilySpec spec;
  if (name == "path" || name == "p") spec.kind = FamilyKind::Path;
  else if (name == "cycle" || name == "c") spec.kind = FamilyKind::Cycle;
  else if (name == "star") spec.kind = FamilyKind::Star;
  else if (name == "kab") spec.kind = FamilyKind::CompleteBipartite;
  else if (name == "complete" || name == "k") spec.kind = FamilyKind::Complete;
  else if (name == "snk") spec.kind = FamilyKind::Snk;
  else if (name == "snkt") spec.kind = FamilyKind::SnkT;
  else if (name == "snplusk") spec.kind = FamilyKind::SnK;
  else if (name == "fan" || name == "h") spec.kind = FamilyKind::Fan;
  else if (name == "sk2t") spec.kind = FamilyKind::SubdividedK2t;
  else if (name == "kjoin") spec.kind = FamilyKind::JoinCliqueEmpty;
  else throw std::invalid_argument("unknown family kind: " + name);

  std::stringstream args(text.substr(open + 1, close - open - 1));
  std::string tok;
  while (std::getline(args, tok, ',')) {
    spec.params.push_back(std::stoi(tok));
  }
  return spec;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > Graph::kMaxOrder) {
    throw std::invalid_argument("disjoint_union: combined order exceeds 128");
  }
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

}  // namespace turan
