#ifndef TURAN_GRAPH_HPP
#define TURAN_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

/// Fixed-width vertex set over at most 128 vertices (two 64-bit words).
struct VertexSet {
  std::array<std::uint64_t, 2> w{0, 0};

  static VertexSet single(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  void set(int v) { w[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
  void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  bool empty() const { return (w[0] | w[1]) == 0; }
  void clear() { w[0] = w[1] = 0; }

  VertexSet operator&(const VertexSet& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  VertexSet operator|(const VertexSet& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  VertexSet operator^(const VertexSet& o) const { return {{w[0] ^ o.w[0], w[1] ^ o.w[1]}}; }
  VertexSet minus(const VertexSet& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }
  VertexSet& operator&=(const VertexSet& o) { w[0] &= o.w[0]; w[1] &= o.w[1]; return *this; }
  VertexSet& operator|=(const VertexSet& o) { w[0] |= o.w[0]; w[1] |= o.w[1]; return *this; }
  bool operator==(const VertexSet& o) const = default;

  bool subset_of(const VertexSet& o) const {
    return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
  }

  /// Index of the lowest set bit, or -1 when empty.
  int first() const {
    if (w[0]) return std::countr_zero(w[0]);
    if (w[1]) return 64 + std::countr_zero(w[1]);
    return -1;
  }

  /// Lowest set bit strictly above v, or -1.
  int next(int v) const {
    for (int i = v + 1; i < 128; ++i) {
      if (test(i)) return i;
    }
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }
};

/// Compact undirected simple graph on dense labels 0..n-1, n <= 128.
/// Adjacency is one VertexSet per vertex; symmetry and looplessness are
/// maintained by the mutators.
class Graph {
 public:
  static constexpr int kMaxOrder = 128;

  Graph() = default;
  explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n)) {}

  int order() const { return n_; }

  int edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  bool has_edge(int u, int v) const { return adj_[u].test(v); }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }

  void remove_edge(int u, int v) {
    adj_[u].reset(v);
    adj_[v].reset(u);
  }

  const VertexSet& neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return adj_[u].count(); }

  int max_degree() const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d = std::max(d, degree(u));
    return d;
  }

  VertexSet closed_neighborhood(int u) const {
    VertexSet s = adj_[u];
    s.set(u);
    return s;
  }

  VertexSet vertex_set() const {
    VertexSet s;
    for (int v = 0; v < n_; ++v) s.set(v);
    return s;
  }

  /// Appends an isolated vertex and returns its label.
  int add_vertex() {
    check_order(n_ + 1);
    adj_.emplace_back();
    return n_++;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
      for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    }
    return out;
  }

  /// Subgraph induced by `keep`, relabeled densely in ascending label order.
  Graph induced(const VertexSet& keep) const {
    std::vector<int> map(static_cast<std::size_t>(n_), -1);
    int k = 0;
    for (int v = 0; v < n_; ++v) {
      if (keep.test(v)) map[static_cast<std::size_t>(v)] = k++;
    }
    Graph h(k);
    for (int u = 0; u < n_; ++u) {
      if (!keep.test(u)) continue;
      VertexSet nb = adj_[u] & keep;
      for (int v = nb.next(u); v >= 0; v = nb.next(v)) {
        h.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
      }
    }
    return h;
  }

  /// Drops isolated vertices, relabeling the rest densely. The family
  /// G(m,F) excludes isolated vertices, so this is an explicit step.
  Graph without_isolated() const {
    VertexSet keep;
    for (int v = 0; v < n_; ++v) {
      if (!adj_[v].empty()) keep.set(v);
    }
    return induced(keep);
  }

  bool has_isolated() const {
    for (int v = 0; v < n_; ++v) {
      if (adj_[v].empty()) return true;
    }
    return false;
  }

  bool operator==(const Graph& o) const = default;

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxOrder) {
      throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 128]");
    }
    return n;
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

}  // namespace turan

#endif
