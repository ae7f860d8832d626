#include "turan/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "turan/forbidden.hpp"
#include "turan/structure.hpp"

namespace turan {

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

namespace {

constexpr int kIterationCap = 1'000'000;

// Power iteration on A + I restricted to one component. The shift makes
// the top eigenvalue strictly dominant even on bipartite components.
PerronData perron_component(const Eigen::MatrixXd& a, double tol) {
  const int n = static_cast<int>(a.rows());
  PerronData out;
  if (n == 0) return out;
  Eigen::VectorXd x = a.rowwise().sum();  // degree vector
  if (x.lpNorm<Eigen::Infinity>() == 0.0) {
    out.x = Eigen::VectorXd::Zero(n);
    out.x(0) = 1.0;
    out.converged = true;
    return out;
  }
  x.normalize();
  double rho = 0.0;
  for (int it = 1; it <= kIterationCap; ++it) {
    Eigen::VectorXd ax = a * x;
    rho = x.dot(ax);  // Rayleigh quotient
    const double res = (ax - rho * x).lpNorm<Eigen::Infinity>();
    out.iterations = it;
    if (res <= tol) {
      out.converged = true;
      out.residual = res;
      break;
    }
    out.residual = res;
    x = (ax + x).normalized();  // one step of (A + I)
  }
  out.rho = rho;
  out.x = x.cwiseAbs();
  return out;
}

}  // namespace

PerronData perron(const Graph& g, double tol) {
  const int n = g.order();
  if (n == 0) {
    PerronData empty;
    empty.x = Eigen::VectorXd::Zero(0);
    empty.converged = true;
    return empty;
  }
  PerronData best;
  best.rho = -1.0;
  for (const VertexSet& comp : components(g)) {
    const std::vector<int> verts = comp.to_vector();
    const Graph sub = g.induced(comp);
    PerronData pd = perron_component(adjacency_matrix(sub), tol);
    if (pd.rho > best.rho) {
      best = pd;
      Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
      for (std::size_t i = 0; i < verts.size(); ++i) full(verts[i]) = pd.x(static_cast<int>(i));
      best.x = full;
    }
  }
  return best;
}

int extremal_vertex(const PerronData& p) {
  int arg = 0;
  for (int v = 1; v < p.x.size(); ++v) {
    if (p.x(v) > p.x(arg)) arg = v;
  }
  return arg;
}

QuotientMatrix QuotientMatrix::from_partition(const Graph& g, std::vector<VertexSet> parts) {
  const int k = static_cast<int>(parts.size());
  QuotientMatrix q;
  q.b = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    bool first = true;
    for (int v = parts[static_cast<std::size_t>(i)].first(); v >= 0;
         v = parts[static_cast<std::size_t>(i)].next(v)) {
      for (int j = 0; j < k; ++j) {
        const int c = (g.neighbors(v) & parts[static_cast<std::size_t>(j)]).count();
        if (first) {
          q.b(i, j) = c;
        } else if (q.b(i, j) != c) {
          throw std::invalid_argument("partition is not equitable");
        }
      }
      first = false;
    }
    if (first) throw std::invalid_argument("empty part in partition");
  }
  q.parts = std::move(parts);
  return q;
}

double QuotientMatrix::spectral_radius(double tol) const {
  const int k = static_cast<int>(b.rows());
  if (k == 1) return b(0, 0);
  auto charpoly = [&](double lambda) {
    return (lambda * Eigen::MatrixXd::Identity(k, k) - b).partialPivLu().determinant();
  };
  // Loose Perron estimate by shifted power iteration, then a sign-change
  // bracket around it, then bisection.
  Eigen::VectorXd x = Eigen::VectorXd::Ones(k);
  double est = 0.0;
  for (int it = 0; it < 20000; ++it) {
    Eigen::VectorXd bx = b * x + x;
    const double nrm = bx.norm();
    if (nrm == 0.0) break;
    x = bx / nrm;
    const double next = x.dot(b * x) / x.squaredNorm();
    if (it > 2 && std::abs(next - est) < 1e-11) {
      est = next;
      break;
    }
    est = next;
  }
  double delta = std::max(1e-6, 1e-9 * std::abs(est));
  double lo = est - delta, hi = est + delta;
  while (charpoly(hi) <= 0.0) hi += (delta *= 2);
  while (charpoly(lo) > 0.0) lo -= (delta *= 2);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (charpoly(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

// Quotient matrix written down from the construction's parameters rather
// than read off a built graph, so sizes beyond the 128-vertex cap stay
// exact. rows[i][j] = neighbors a part-i vertex has inside part j;
// empty parts are dropped.
double quotient_rho(const std::vector<int>& sizes,
                    const std::vector<std::vector<int>>& rows) {
  std::vector<int> live;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0) throw std::invalid_argument("negative part size in family parameters");
    if (sizes[i] > 0) live.push_back(static_cast<int>(i));
  }
  const int k = static_cast<int>(live.size());
  if (k == 0) return 0.0;
  QuotientMatrix q;
  q.b = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      q.b(i, j) = rows[static_cast<std::size_t>(live[static_cast<std::size_t>(i)])]
                      [static_cast<std::size_t>(live[static_cast<std::size_t>(j)])];
    }
  }
  return q.spectral_radius();
}

}  // namespace

double rho_exact_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Snk: {  // K_k v (n-k)K_1
      const int n = p[0], k = p[1];
      if (k < 1 || n <= k) throw std::invalid_argument("snk requires n > k >= 1");
      return quotient_rho({k, n - k}, {{k - 1, n - k}, {k, 0}});
    }
    case FamilyKind::JoinCliqueEmpty: {  // K_k v qK_1
      const int k = p[0], q = p[1];
      if (k < 1 || q < 0) throw std::invalid_argument("kjoin requires k >= 1, q >= 0");
      return quotient_rho({k, q}, {{k - 1, q}, {k, 0}});
    }
    case FamilyKind::SnkT: {  // hub | rest of clique | joint part | pendants
      const int n = p[0], k = p[1], t = p[2];
      if (k < 1 || t < 0 || n - k - t < 1) {
        throw std::invalid_argument("snkt requires k >= 1, t >= 0, n - k - t >= 1");
      }
      return quotient_rho({1, k - 1, n - k - t, t}, {{0, k - 1, n - k - t, t},
                                                     {1, k - 2, n - k - t, 0},
                                                     {1, k - 1, 0, 0},
                                                     {1, 0, 0, 0}});
    }
    case FamilyKind::Star: {  // K_{1,n-1}
      const int n = p[0];
      if (n < 1) throw std::invalid_argument("star requires n >= 1");
      return quotient_rho({1, n - 1}, {{0, n - 1}, {1, 0}});
    }
    case FamilyKind::CompleteBipartite: {
      const int a = p[0], b = p[1];
      if (a < 0 || b < 0) throw std::invalid_argument("kab requires a, b >= 0");
      if (a == 0 || b == 0) return 0.0;
      return quotient_rho({a, b}, {{0, b}, {a, 0}});
    }
    case FamilyKind::Complete: {
      const int n = p[0];
      if (n < 1) throw std::invalid_argument("complete requires n >= 1");
      return n - 1.0;
    }
    case FamilyKind::Cycle:
      if (p[0] < 3) throw std::invalid_argument("cycle requires n >= 3");
      return 2.0;
    default:
      throw std::invalid_argument(std::string("no registered equitable partition for family ") +
                                  family_kind_name(spec.kind));
  }
}

CompareVerdict compare_rho(double lhs, double rhs, double margin) {
  if (lhs - rhs > margin) return CompareVerdict::Greater;
  if (rhs - lhs > margin) return CompareVerdict::Less;
  return CompareVerdict::Indistinguishable;
}

Lemma22Check check_lemma22(int m, const std::vector<int>& t_list, double min_margin) {
  if (m % 2 == 0) {
    throw std::invalid_argument("check_lemma22: m must be odd ((m+5)/2 is non-integral otherwise)");
  }
  if (m < 23) throw std::invalid_argument("check_lemma22: m must be >= 23");
  Lemma22Check out;
  out.m = m;
  out.rho_runner_up = rho_exact_family({FamilyKind::SnkT, {(m + 5) / 2, 2, 2}});
  out.closed_form_bound = 0.5 * (1.0 + std::sqrt(4.0 * m - 7.0));
  out.margin_bound = out.rho_runner_up - out.closed_form_bound;
  out.all_hold = out.margin_bound > min_margin;
  for (int t : t_list) {
    if (t % 2 != 0 || t < 4) {
      throw std::invalid_argument("check_lemma22: t must be even and >= 4");
    }
    if (m < t + 1) throw std::invalid_argument("check_lemma22: requires m >= t + 1");
    Lemma22Check::Dominance d;
    d.t = t;
    d.rho_t = rho_exact_family({FamilyKind::SnkT, {(m + t + 3) / 2, 2, t}});
    d.margin = out.rho_runner_up - d.rho_t;
    d.holds = d.margin > min_margin;
    out.all_hold = out.all_hold && d.holds;
    out.dominances.push_back(d);
  }
  return out;
}

double walk_identity_residual(const Graph& g, int u, const PerronData& p) {
  const NeighborhoodDecomposition d = classify_neighborhood(g, u);
  const VertexSet nu = g.neighbors(u);
  double rhs = g.degree(u) * p.x(u);
  for (int v = d.n_plus.first(); v >= 0; v = d.n_plus.next(v)) {
    rhs += (g.neighbors(v) & nu).count() * p.x(v);
  }
  const VertexSet n2 = second_neighborhood(g, u);
  for (int w = n2.first(); w >= 0; w = n2.next(w)) {
    rhs += (g.neighbors(w) & nu).count() * p.x(w);
  }
  return std::abs(p.rho * p.rho * p.x(u) - rhs) / p.x(u);
}

double walk_identity_residual(const Graph& g, int u, double tol) {
  return walk_identity_residual(g, u, perron(g, tol));
}

}  // namespace turan
