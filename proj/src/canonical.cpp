#include "pcover/canonical.hpp"

#include <algorithm>
#include <map>

namespace pcover {

namespace {

struct Refiner {
  const LabeledGraph& g;
  std::vector<std::vector<int>> nbrs;

  explicit Refiner(const LabeledGraph& graph) : g(graph), nbrs(graph.num_vertices())
  {
    for (int v = 0; v < g.num_vertices(); ++v) nbrs[v] = g.neighbors(v);
  }

  // Colours are cell start positions in the ordered partition.
  static std::vector<int> rank(const std::vector<std::vector<int>>& keys)
  {
    int n = static_cast<int>(keys.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<int> col(n);
    for (int i = 0; i < n; ++i) {
      int v = order[i];
      col[v] = (i > 0 && keys[order[i - 1]] == keys[v]) ? col[order[i - 1]] : i;
    }
    return col;
  }

  static int cells(const std::vector<int>& col)
  {
    std::vector<int> c = col;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void refine(std::vector<int>& col) const
  {
    int n = g.num_vertices();
    int k = cells(col);
    for (;;) {
      std::vector<std::vector<int>> keys(n);
      for (int v = 0; v < n; ++v) {
        keys[v].push_back(col[v]);
        std::vector<int> nc;
        for (int w : nbrs[v]) nc.push_back(col[w]);
        std::sort(nc.begin(), nc.end());
        keys[v].insert(keys[v].end(), nc.begin(), nc.end());
      }
      col = rank(keys);
      int k2 = cells(col);
      if (k2 == k) return;
      k = k2;
    }
  }

  std::string certificate(const std::vector<int>& pos) const
  {
    int n = g.num_vertices();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[pos[v]] = v;
    std::vector<int> mult(static_cast<size_t>(n) * n, 0);
    for (const Edge& e : g.edges()) {
      int a = pos[e.u], b = pos[e.v];
      ++mult[static_cast<size_t>(a) * n + b];
      ++mult[static_cast<size_t>(b) * n + a];
    }
    std::string s = "n" + std::to_string(n) + ":";
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('3' + g.label(inv[i])));
    s.push_back(':');
    static const char* hex = "0123456789abcdef";
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int m = mult[static_cast<size_t>(i) * n + j];
        if (m > 15) throw PreconditionError("edge multiplicity above 15 not supported");
        s.push_back(hex[m]);
      }
    return s;
  }

  void search(std::vector<int> col, std::string& best, std::vector<int>& best_pos) const
  {
    refine(col);
    int n = g.num_vertices();
    // First non-singleton cell: smallest colour value shared by two vertices.
    std::vector<int> count(n, 0);
    for (int c : col) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target == -1) {
      std::string cert = certificate(col);
      if (best.empty() || cert < best) {
        best = std::move(cert);
        best_pos = col;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      std::vector<int> c2 = col;
      for (int w = 0; w < n; ++w)
        if (c2[w] == target && w != v) c2[w] = target + 1;
      search(std::move(c2), best, best_pos);
    }
  }

  std::pair<std::string, std::vector<int>> run() const
  {
    int n = g.num_vertices();
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) keys[v] = {g.label(v), g.degree(v)};
    std::string best;
    std::vector<int> pos;
    if (n == 0) return {"n0::", {}};
    search(rank(keys), best, pos);
    return {best, pos};
  }
};

} // namespace

std::string canonical_form(const LabeledGraph& g) { return Refiner(g).run().first; }

std::vector<int> canonical_labeling(const LabeledGraph& g) { return Refiner(g).run().second; }

LabeledGraph permute_vertices(const LabeledGraph& g, const std::vector<int>& perm)
{
  int n = g.num_vertices();
  std::vector<Label> labels(n);
  for (int v = 0; v < n; ++v) labels.at(perm.at(v)) = g.label(v);
  LabeledGraph h(labels, g.simple());
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

} // namespace pcover
