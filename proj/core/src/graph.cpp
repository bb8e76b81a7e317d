#include "svet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace svet {

namespace {

constexpr int kMaxGraphParties = 12;

void check_party(int m, int p) {
  if (p < 1 || p > m) throw std::invalid_argument("party index out of range");
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer in catalog name");
  return v;
}

}  // namespace

CommGraph::CommGraph(int m) : m_(m) {
  if (m < 1 || m > kMaxGraphParties)
    throw std::invalid_argument("party count must be in [1, 12]");
  incoming_.assign(static_cast<std::size_t>(m), 0);
}

CommGraph::CommGraph(int m, const std::vector<std::pair<int, int>>& edge_list)
    : CommGraph(m) {
  for (const auto& [from, to] : edge_list) add_edge(from, to);
}

void CommGraph::add_edge(int from, int to) {
  check_party(m_, from);
  check_party(m_, to);
  if (from == to) throw std::invalid_argument("self-loops are implicit and never stored");
  incoming_[to - 1] |= std::uint16_t(1) << (from - 1);
}

bool CommGraph::has_edge(int from, int to) const {
  check_party(m_, from);
  check_party(m_, to);
  return (incoming_[to - 1] >> (from - 1)) & 1u;
}

std::vector<std::pair<int, int>> CommGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int from = 1; from <= m_; ++from)
    for (int to = 1; to <= m_; ++to)
      if (from != to && ((incoming_[to - 1] >> (from - 1)) & 1u))
        out.emplace_back(from, to);
  return out;
}

std::vector<int> DependencyProfile::parties(int party) const {
  std::vector<int> out;
  const std::uint16_t d = mask(party);
  for (int j = 1; j <= m; ++j)
    if ((d >> (j - 1)) & 1u) out.push_back(j);
  return out;
}

DependencyProfile dependency_sets(const CommGraph& g) {
  DependencyProfile prof;
  prof.m = g.m();
  prof.dep.resize(static_cast<std::size_t>(g.m()));
  for (int i = 1; i <= g.m(); ++i)
    prof.dep[i - 1] = g.incoming_mask(i) | std::uint16_t(std::uint16_t(1) << (i - 1));
  return prof;
}

Classification classify(const CommGraph& g) {
  const int m = g.m();
  if (m < 2)
    throw std::invalid_argument("classification is defined over pairs; need m >= 2");
  const DependencyProfile prof = dependency_sets(g);
  Classification out;
  out.kind = GraphClass::TP;
  out.covering.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const std::uint16_t pair_mask =
          std::uint16_t((std::uint16_t(1) << (i - 1)) | (std::uint16_t(1) << (j - 1)));
      int cover = 0;
      for (int k = 1; k <= m; ++k) {
        if ((prof.dep[k - 1] & pair_mask) == pair_mask) {
          cover = k;
          break;
        }
      }
      if (cover == 0) {
        out.kind = GraphClass::PP;
        out.witness = {i, j};
        out.covering.clear();
        return out;
      }
      out.covering.push_back({i, j, cover});
    }
  }
  return out;
}

bool is_separable(const CommGraph& g) {
  const int m = g.m();
  // connected components of the undirected support
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  int ncomp = 0;
  for (int start = 0; start < m; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = ncomp;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < m; ++v) {
        if (comp[v] >= 0 || u == v) continue;
        if (g.has_edge(u + 1, v + 1) || g.has_edge(v + 1, u + 1)) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  return ncomp > 1;
}

CommGraph empty_graph(int m) { return CommGraph(m); }

CommGraph complete_graph(int m) {
  CommGraph g(m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j) g.add_edge(i, j);
  return g;
}

CommGraph fig2_graph(int m, int k) {
  if (m < 4 || m > kMaxGraphParties)
    throw std::invalid_argument("fig2 needs 4 <= m <= 12");
  if (k < 2 || k > m - 2) throw std::invalid_argument("fig2 needs 2 <= k <= m-2");
  CommGraph g(m);
  const auto in_a = [&](int p) { return p >= 2 && p <= k; };
  const auto in_b = [&](int p) { return p >= k + 1 && p <= m - 1; };
  for (int i = 2; i <= m - 1; ++i) {
    for (int j = 2; j <= m - 1; ++j) {
      if (i == j) continue;
      // both circles are internally complete and fully joined to each other
      if ((in_a(i) || in_b(i)) && (in_a(j) || in_b(j))) g.add_edge(i, j);
    }
  }
  for (int a = 2; a <= k; ++a) {
    g.add_edge(1, a);
    g.add_edge(a, 1);
    g.add_edge(a, m);  // party m only receives from circle A
  }
  for (int b = k + 1; b <= m - 1; ++b) {
    g.add_edge(m, b);
    g.add_edge(b, m);
    g.add_edge(b, 1);  // party 1 only receives from circle B
  }
  return g;
}

CommGraph catalog(std::string_view name) {
  if (name == "fig1_i") return empty_graph(4);
  if (name == "fig1_iia")
    return CommGraph(4, {{1, 3}, {3, 1}, {2, 4}, {4, 2}});
  if (name == "fig1_iib")
    return CommGraph(4, {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}});
  if (name == "fig1_iii")
    return CommGraph(4, {{2, 1}, {3, 1}, {1, 3}, {2, 3}, {1, 2}, {4, 2}, {1, 4}, {2, 4}});
  if (name == "fig1_iva")
    return CommGraph(4, {{2, 1}, {3, 1}, {4, 1}});
  if (name == "fig1_ivb")
    return CommGraph(4, {{3, 1}, {1, 2}, {2, 3}, {4, 3}, {1, 4}, {2, 4}});
  if (name == "fig1_v") return complete_graph(4);

  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view head = name.substr(0, colon);
    const std::string_view rest = name.substr(colon + 1);
    if (head == "empty") return empty_graph(parse_int(rest));
    if (head == "complete") return complete_graph(parse_int(rest));
    if (head == "fig2") {
      const auto colon2 = rest.find(':');
      if (colon2 == std::string_view::npos)
        throw std::invalid_argument("fig2 needs two parameters: fig2:m:k");
      return fig2_graph(parse_int(rest.substr(0, colon2)),
                        parse_int(rest.substr(colon2 + 1)));
    }
  }
  throw std::invalid_argument("unknown catalog graph: " + std::string(name));
}

}  // namespace svet
