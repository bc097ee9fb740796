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

#ifndef DEGREAL_FLOW_HPP_
#define DEGREAL_FLOW_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace degreal {

enum class NodeRole {
  Source,
  Sink,
  XD,       // x_i, i in the dominating prefix
  YD,
  XS,       // x_i, i outside the prefix
  YS,
  XSPrime,  // x'_i
  YSPrime,
  XM,       // x_i, i in the matched prefix
  YM,
  XR,       // x_i, i past the matched prefix
  YR,
};

std::string to_string(NodeRole role);

struct NodeLabel {
  NodeRole role;
  int index;  // 1-based sequence position, 0 for source and sink
};

struct Arc {
  int from;
  int to;
  std::int64_t capacity;
};

// Directed capacitated network. Node 0 is the source and node 1 the sink.
class FlowNetwork {
 public:
  FlowNetwork();

  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  int add_node(NodeRole role, int index);
  // Throws NetworkError for unknown endpoints, a negative capacity, an arc into
  // the source or out of the sink, or a loop. Returns the arc id.
  int add_arc(int from, int to, std::int64_t capacity);

  int node_count() const { return static_cast<int>(labels_.size()); }
  int source() const { return kSource; }
  int sink() const { return kSink; }
  std::span<const Arc> arcs() const { return arcs_; }
  const NodeLabel& label(int node) const { return labels_[static_cast<std::size_t>(node)]; }

  // Throws NetworkError if two arcs share (from, to).
  void validate() const;

 private:
  std::vector<NodeLabel> labels_;
  std::vector<Arc> arcs_;
};

struct FlowAssignment {
  std::vector<std::int64_t> flow;  // indexed by arc id
  std::int64_t value = 0;
};

// Dinic's algorithm. Arcs are scanned in insertion order, so the result is a
// function of the network alone.
FlowAssignment max_flow(const FlowNetwork& net);

// Capacity bounds, conservation and value consistency.
bool is_feasible_flow(const FlowNetwork& net, const FlowAssignment& f);

}  // namespace degreal

#endif  // DEGREAL_FLOW_HPP_
