#ifndef TURAN_SPECTRAL_HPP
#define TURAN_SPECTRAL_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "turan/families.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Top eigenpair of the adjacency matrix.
struct PerronData {
  double rho = 0.0;
  Eigen::VectorXd x;      // unit 2-norm, entrywise >= 0
  double residual = 0.0;  // ||A x - rho x||_inf
  int iterations = 0;
  bool converged = false;
};

inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kDefaultMargin = 1e-9;

Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Spectral radius and Perron vector by shifted power iteration (start
/// vector = degree vector). Disconnected input is solved per component;
/// the returned vector is zero off the winning component.
PerronData perron(const Graph& g, double tol = kDefaultTol);

/// Vertex with the largest Perron entry (lowest label on ties).
int extremal_vertex(const PerronData& p);

/// Equitable partition with its quotient matrix b, where b(i,j) counts
/// edges from one part-i vertex into part j. Equitability is verified on
/// construction.
struct QuotientMatrix {
  std::vector<VertexSet> parts;
  Eigen::MatrixXd b;

  static QuotientMatrix from_partition(const Graph& g, std::vector<VertexSet> parts);
  /// Largest eigenvalue, by bisection on det(lambda I - b).
  double spectral_radius(double tol = 1e-12) const;
};

/// Exact-by-quadrature spectral radius for families with a registered
/// equitable partition (Snk, SnkT, Star, CompleteBipartite, Complete,
/// Cycle, JoinCliqueEmpty). Throws for other kinds.
double rho_exact_family(const FamilySpec& spec);

/// Result of a strict rho comparison under an explicit margin.
enum class CompareVerdict { Greater, Less, Indistinguishable };
CompareVerdict compare_rho(double lhs, double rhs, double margin = kDefaultMargin);

struct Lemma22Check {
  int m = 0;
  double rho_runner_up = 0.0;   // rho(S_{(m+5)/2,2}^2)
  double closed_form_bound = 0.0;  // (1+sqrt(4m-7))/2
  double margin_bound = 0.0;
  struct Dominance {
    int t;
    double rho_t;  // rho(S_{(m+t+3)/2,2}^t)
    double margin;
    bool holds;
  };
  std::vector<Dominance> dominances;
  bool all_hold = false;
};

/// Checks, for odd m >= 23, that rho(S_{(m+5)/2,2}^2) exceeds both the
/// closed-form bound (1+sqrt(4m-7))/2 and rho(S_{(m+t+3)/2,2}^t) for each
/// even t in t_list, each with margin > min_margin. A margin below the
/// threshold is flagged, never silently passed. Even m is rejected with a
/// parity message: (m+5)/2 is non-integral, so the family is undefined.
Lemma22Check check_lemma22(int m, const std::vector<int>& t_list,
                           double min_margin = kDefaultMargin);

/// Relative residual of the two-step walk identity at u:
/// rho^2 x_u = d(u) x_u + sum_{v in N+(u)} d_{N(u)}(v) x_v
///           + sum_{w in N^2(u)} d_{N(u)}(w) x_w.
double walk_identity_residual(const Graph& g, int u, const PerronData& p);
double walk_identity_residual(const Graph& g, int u, double tol = 1e-10);

}  // namespace turan

#endif
