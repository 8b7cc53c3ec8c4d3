#include "kcn/matching.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "kcn/geometry.hpp"

namespace kcn {

void ProximityGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  auto& au = adjacency[u];
  if (std::find(au.begin(), au.end(), v) != au.end()) return;
  au.push_back(v);
  adjacency[v].push_back(u);
}

std::vector<Edge> ProximityGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v : adjacency[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class Blossom {
 public:
  explicit Blossom(const ProximityGraph& g)
      : g_(g), n_(g.size()), mate_(n_, kUnmatched), parent_(n_), base_(n_),
        used_(n_), in_blossom_(n_) {}

  std::vector<std::size_t> run() {
    // Greedy warm start; augmenting paths fix the rest.
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != kUnmatched) continue;
      for (std::size_t w : sorted_neighbours(v)) {
        if (mate_[w] == kUnmatched) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (std::size_t root = 0; root < n_; ++root) {
      if (mate_[root] != kUnmatched) continue;
      const std::size_t end = find_path(root);
      std::size_t v = end;
      while (v != kUnmatched) {
        const std::size_t pv = parent_[v];
        const std::size_t ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = ppv;
      }
    }
    return mate_;
  }

 private:
  std::vector<std::size_t> sorted_neighbours(std::size_t v) const {
    auto nb = g_.adjacency[v];
    std::sort(nb.begin(), nb.end());
    return nb;
  }

  std::size_t lca(std::size_t a, std::size_t b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == kUnmatched) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Returns the free vertex ending an augmenting path from root, or kUnmatched.
  std::size_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kUnmatched);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t to : g_.adjacency[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kUnmatched && parent_[mate_[to]] != kUnmatched)) {
          const std::size_t cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == kUnmatched) {
          parent_[to] = v;
          if (mate_[to] == kUnmatched) return to;
          used_[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return kUnmatched;
  }

  const ProximityGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

std::vector<std::size_t> maximum_matching(const ProximityGraph& g) {
  return Blossom(g).run();
}

std::vector<Edge> min_edge_cover(const ProximityGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.adjacency[v].empty())
      throw InputError("min_edge_cover: vertex " + std::to_string(v) + " is isolated");
  }
  const auto mate = maximum_matching(g);
  std::vector<Edge> cover;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (mate[v] != kUnmatched) {
      if (v < mate[v]) cover.emplace_back(v, mate[v]);
    } else {
      const std::size_t w = *std::min_element(g.adjacency[v].begin(), g.adjacency[v].end());
      cover.emplace_back(std::min(v, w), std::max(v, w));
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace kcn
