// Copyright 2026 The degreal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "degreal/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "degreal/errors.hpp"

namespace degreal {

std::string to_string(NodeRole role) {
  switch (role) {
    case NodeRole::Source: return "s";
    case NodeRole::Sink: return "t";
    case NodeRole::XD: return "X_D";
    case NodeRole::YD: return "Y_D";
    case NodeRole::XS: return "X_S";
    case NodeRole::YS: return "Y_S";
    case NodeRole::XSPrime: return "X'_S";
    case NodeRole::YSPrime: return "Y'_S";
    case NodeRole::XM: return "X_M";
    case NodeRole::YM: return "Y_M";
    case NodeRole::XR: return "X_R";
    case NodeRole::YR: return "Y_R";
  }
  return "?";
}

FlowNetwork::FlowNetwork() {
  labels_.push_back({NodeRole::Source, 0});
  labels_.push_back({NodeRole::Sink, 0});
}

int FlowNetwork::add_node(NodeRole role, int index) {
  if (role == NodeRole::Source || role == NodeRole::Sink) {
    throw NetworkError("network already has a source and a sink");
  }
  labels_.push_back({role, index});
  return node_count() - 1;
}

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  if (from < 0 || to < 0 || from >= node_count() || to >= node_count()) {
    throw NetworkError("arc endpoint out of range");
  }
  if (from == to) throw NetworkError("loop arc");
  if (capacity < 0) throw NetworkError("negative capacity");
  if (to == kSource) throw NetworkError("arc into source");
  if (from == kSink) throw NetworkError("arc out of sink");
  arcs_.push_back({from, to, capacity});
  return static_cast<int>(arcs_.size()) - 1;
}

void FlowNetwork::validate() const {
  std::vector<std::pair<int, int>> ends;
  ends.reserve(arcs_.size());
  for (const Arc& a : arcs_) ends.emplace_back(a.from, a.to);
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    throw NetworkError("parallel arcs");
  }
}

namespace {

// Residual graph in CSR form. Edge 2a is arc a, edge 2a+1 its reverse.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : n_(net.node_count()), cap_(2 * net.arcs().size()), to_(2 * net.arcs().size()) {
    std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
    for (const Arc& a : net.arcs()) {
      ++deg[static_cast<std::size_t>(a.from) + 1];
      ++deg[static_cast<std::size_t>(a.to) + 1];
    }
    for (int v = 0; v < n_; ++v) deg[static_cast<std::size_t>(v) + 1] += deg[static_cast<std::size_t>(v)];
    start_ = deg;
    adj_.resize(cap_.size());
    std::vector<int> fill(start_.begin(), start_.end() - 1);
    std::size_t e = 0;
    for (const Arc& a : net.arcs()) {
      cap_[e] = a.capacity;
      to_[e] = a.to;
      cap_[e + 1] = 0;
      to_[e + 1] = a.from;
      adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(a.from)]++)] = static_cast<int>(e);
      adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(a.to)]++)] = static_cast<int>(e + 1);
      e += 2;
    }
    level_.resize(static_cast<std::size_t>(n_));
    it_.resize(static_cast<std::size_t>(n_));
  }

  std::int64_t run(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      for (int v = 0; v < n_; ++v) it_[static_cast<std::size_t>(v)] = start_[static_cast<std::size_t>(v)];
      total += blocking(s, t);
    }
    return total;
  }

  // Flow on arc a equals the residual capacity of its reverse edge.
  std::int64_t flow(std::size_t arc) const { return cap_[2 * arc + 1]; }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int k = start_[static_cast<std::size_t>(v)]; k < start_[static_cast<std::size_t>(v) + 1]; ++k) {
        int e = adj_[static_cast<std::size_t>(k)];
        int w = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && level_[static_cast<std::size_t>(w)] < 0) {
          level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  // Iterative DFS along the level graph with current-arc pointers.
  std::int64_t blocking(int s, int t) {
    std::int64_t total = 0;
    std::vector<int> path;  // edge ids from s
    int v = s;
    for (;;) {
      if (v == t) {
        std::int64_t push = std::numeric_limits<std::int64_t>::max();
        for (int e : path) push = std::min(push, cap_[static_cast<std::size_t>(e)]);
        std::size_t cut = path.size();
        for (std::size_t k = 0; k < path.size(); ++k) {
          auto e = static_cast<std::size_t>(path[k]);
          cap_[e] -= push;
          cap_[e ^ 1] += push;
          if (cap_[e] == 0 && cut == path.size()) cut = k;
        }
        total += push;
        path.resize(cut);
        v = path.empty() ? s : to_[static_cast<std::size_t>(path.back())];
        continue;
      }
      bool advanced = false;
      auto vi = static_cast<std::size_t>(v);
      for (int& k = it_[vi]; k < start_[vi + 1]; ++k) {
        int e = adj_[static_cast<std::size_t>(k)];
        int w = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && level_[static_cast<std::size_t>(w)] == level_[vi] + 1) {
          path.push_back(e);
          v = w;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      if (v == s) break;
      level_[vi] = -1;  // dead end
      path.pop_back();
      v = path.empty() ? s : to_[static_cast<std::size_t>(path.back())];
      ++it_[static_cast<std::size_t>(v)];
    }
    return total;
  }

  int n_;
  std::vector<std::int64_t> cap_;
  std::vector<int> to_;
  std::vector<int> start_;
  std::vector<int> adj_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace

FlowAssignment max_flow(const FlowNetwork& net) {
  net.validate();
  Dinic dinic(net);
  FlowAssignment out;
  out.value = dinic.run(net.source(), net.sink());
  out.flow.resize(net.arcs().size());
  for (std::size_t a = 0; a < out.flow.size(); ++a) out.flow[a] = dinic.flow(a);
  return out;
}

bool is_feasible_flow(const FlowNetwork& net, const FlowAssignment& f) {
  if (f.flow.size() != net.arcs().size()) return false;
  std::vector<std::int64_t> excess(static_cast<std::size_t>(net.node_count()), 0);
  for (std::size_t a = 0; a < f.flow.size(); ++a) {
    const Arc& arc = net.arcs()[a];
    if (f.flow[a] < 0 || f.flow[a] > arc.capacity) return false;
    excess[static_cast<std::size_t>(arc.from)] -= f.flow[a];
    excess[static_cast<std::size_t>(arc.to)] += f.flow[a];
  }
  for (int v = 0; v < net.node_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (excess[static_cast<std::size_t>(v)] != 0) return false;
  }
  return -excess[static_cast<std::size_t>(net.source())] == f.value &&
         excess[static_cast<std::size_t>(net.sink())] == f.value;
}

}  // namespace degreal
