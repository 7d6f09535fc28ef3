#pragma once

// Successive shortest augmenting paths with vertex potentials.
//
// Cost is any ordered additive group (Rational, or the lexicographic tuple the
// matching code uses); Cost{} must be its zero. Forward arcs must have
// non-negative cost so that the initial all-zero potentials are feasible.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace structctl::detail {

template <class Cost>
class ResidualNetwork {
 public:
  struct Arc {
    std::size_t to;
    std::int64_t residual;
    Cost cost;
  };

  explicit ResidualNetwork(std::size_t vertex_count)
      : out_(vertex_count), potential_(vertex_count, Cost{}) {}

  std::size_t vertex_count() const { return out_.size(); }

  /// Returns an id; the forward arc is 2*id and its reverse 2*id+1.
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity, Cost cost) {
    if (cost < Cost{}) throw std::invalid_argument("negative arc cost");
    std::size_t id = arcs_.size() / 2;
    arcs_.push_back({to, capacity, cost});
    arcs_.push_back({from, 0, Cost{} - cost});
    tail_.push_back(from);
    tail_.push_back(to);
    out_[from].push_back(2 * id);
    out_[to].push_back(2 * id + 1);
    capacity_.push_back(capacity);
    return id;
  }

  std::int64_t flow(std::size_t id) const { return capacity_[id] - arcs_[2 * id].residual; }
  const Arc& arc(std::size_t residual_index) const { return arcs_[residual_index]; }
  Arc& arc(std::size_t residual_index) { return arcs_[residual_index]; }
  std::size_t tail(std::size_t residual_index) const { return tail_[residual_index]; }
  const std::vector<std::size_t>& out(std::size_t v) const { return out_[v]; }
  std::size_t arc_count() const { return capacity_.size(); }

  /// Pushes up to `limit` units from s to t along successive cheapest paths.
  /// Returns the amount actually sent.
  std::int64_t augment(std::size_t s, std::size_t t, std::int64_t limit) {
    std::int64_t sent = 0;
    const std::size_t n = out_.size();
    std::vector<std::optional<Cost>> dist(n);
    std::vector<std::size_t> via(n);
    while (sent < limit) {
      std::fill(dist.begin(), dist.end(), std::nullopt);
      using Item = std::pair<Cost, std::size_t>;
      auto greater = [](const Item& a, const Item& b) {
        if (b.first < a.first) return true;
        if (a.first < b.first) return false;
        return a.second > b.second;
      };
      std::priority_queue<Item, std::vector<Item>, decltype(greater)> heap(greater);
      dist[s] = Cost{};
      heap.push({Cost{}, s});
      while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (*dist[v] < d) continue;
        for (std::size_t a : out_[v]) {
          const Arc& arc = arcs_[a];
          if (arc.residual <= 0) continue;
          Cost nd = d + arc.cost + potential_[v] - potential_[arc.to];
          if (!dist[arc.to] || nd < *dist[arc.to]) {
            dist[arc.to] = nd;
            via[arc.to] = a;
            heap.push({nd, arc.to});
          }
        }
      }
      if (!dist[t]) break;
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v]) potential_[v] = potential_[v] + *dist[v];
      }
      std::int64_t push = limit - sent;
      for (std::size_t v = t; v != s; v = tail_[via[v]]) push = std::min(push, arcs_[via[v]].residual);
      for (std::size_t v = t; v != s; v = tail_[via[v]]) {
        arcs_[via[v]].residual -= push;
        arcs_[via[v] ^ 1].residual += push;
      }
      sent += push;
    }
    return sent;
  }

  /// Shortest-path potentials over the whole residual graph (Bellman-Ford
  /// from a virtual root), valid for every vertex, reachable or not.
  /// Requires the residual graph to be free of negative cycles, which holds
  /// after augment() by optimality.
  std::vector<Cost> exact_potentials() const {
    const std::size_t n = out_.size();
    std::vector<Cost> d(n, Cost{});
    for (std::size_t round = 0; round <= n; ++round) {
      bool changed = false;
      for (std::size_t a = 0; a < arcs_.size(); ++a) {
        if (arcs_[a].residual <= 0) continue;
        Cost nd = d[tail_[a]] + arcs_[a].cost;
        if (nd < d[arcs_[a].to]) {
          d[arcs_[a].to] = nd;
          changed = true;
        }
      }
      if (!changed) return d;
    }
    throw std::logic_error("negative residual cycle");
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::size_t> tail_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::int64_t> capacity_;
  std::vector<Cost> potential_;
};

}  // namespace structctl::detail
