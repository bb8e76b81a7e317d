#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace svet {

/// Directed communication pattern on m parties. An edge (i, j) means party
/// j's output may depend on party i's setting. Self-dependence is implicit
/// and never stored as an edge.
class CommGraph {
 public:
  explicit CommGraph(int m);
  CommGraph(int m, const std::vector<std::pair<int, int>>& edge_list);

  int m() const { return m_; }
  void add_edge(int from, int to);
  bool has_edge(int from, int to) const;
  /// Edges sorted by (from, to).
  std::vector<std::pair<int, int>> edges() const;
  /// Bit j-1 set iff edge (j, party) present.
  std::uint16_t incoming_mask(int party) const { return incoming_[party - 1]; }

  bool operator==(const CommGraph&) const = default;

 private:
  int m_ = 0;
  std::vector<std::uint16_t> incoming_;
};

/// Dep(i) = {i} plus every j with an edge (j, i); stored as bit masks with
/// party i at bit i-1.
struct DependencyProfile {
  int m = 0;
  std::vector<std::uint16_t> dep;

  std::uint16_t mask(int party) const { return dep[party - 1]; }
  std::vector<int> parties(int party) const;
};

DependencyProfile dependency_sets(const CommGraph& g);

enum class GraphClass { PP, TP };

struct PairCover {
  int i = 0, j = 0;  // the unordered pair, i < j
  int k = 0;         // lowest party with {i, j} inside Dep(k)

  bool operator==(const PairCover&) const = default;
};

/// PP comes with the lexicographically smallest uncovered pair as witness;
/// TP comes with the full covering map (lowest covering party per pair).
struct Classification {
  GraphClass kind = GraphClass::PP;
  std::pair<int, int> witness{0, 0};
  std::vector<PairCover> covering;

  bool is_pp() const { return kind == GraphClass::PP; }
  bool is_tp() const { return kind == GraphClass::TP; }
};

Classification classify(const CommGraph& g);

/// True iff the parties split into two nonempty blocks with no undirected
/// support edge across them, i.e. the undirected support graph is
/// disconnected. Output-dependence needs no separate treatment because
/// extreme points are already functions of inputs alone.
bool is_separable(const CommGraph& g);

CommGraph empty_graph(int m);
CommGraph complete_graph(int m);
/// Two fully connected circles {2..k} and {k+1..m-1} bridging parties 1 and
/// m, with no arrows between 1 and m; requires 2 <= k <= m-2. Partially
/// paired with witness pair (1, m) for every legal (m, k).
CommGraph fig2_graph(int m, int k);

/// Named example patterns: fig1_i, fig1_iia, fig1_iib, fig1_iii, fig1_iva,
/// fig1_ivb, fig1_v, plus parameterized forms "empty:m", "complete:m" and
/// "fig2:m:k". Unknown names throw std::invalid_argument.
CommGraph catalog(std::string_view name);

}  // namespace svet
