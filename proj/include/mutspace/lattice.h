// Copyright 2026 The Mutspace Authors
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

#ifndef MUTSPACE_LATTICE_H_
#define MUTSPACE_LATTICE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mutspace/diffcore.h"
#include "mutspace/progspace.h"

namespace mutspace {

// Largest dimension for which BuildPdl materializes the hypercube.
inline constexpr std::size_t kDefaultPdlLimit = 16;

// Lattice nodes are n-bit positions packed into an integer with the first
// test in the most significant bit, so "100" (t1 only) is 4 for n = 3.
using Node = std::uint32_t;

Node NodeFromBits(const BitVector& bits);
BitVector BitsFromNode(Node node, std::size_t n);
std::string NodeString(Node node, std::size_t n);

// Dimensions on which `to` deviates from `from`: the positions agree
// everywhere else, `from` is 0 there and `to` is 1. Empty optional when `to`
// is not strictly deviant from `from` (including equal positions).
std::optional<std::vector<std::size_t>> DeviantDimensions(const BitVector& from,
                                                          const BitVector& to);

struct DevianceWitness {
  Position from;
  Position to;
  std::vector<std::string> deviating_tests;
};

std::optional<DevianceWitness> Deviant(const ProgramSpace& space,
                                       const std::string& px,
                                       const std::string& py);

// Position deviance lattice: the n-dimensional hypercube with an edge u -> v
// for every pair that differs in exactly one dimension, u having 0 there.
class Pdl {
 public:
  struct Edge {
    Node from;
    Node to;
    std::size_t dimension;

    bool operator==(const Edge&) const = default;
  };

  std::size_t dimension() const { return dimension_; }
  std::size_t node_count() const { return std::size_t{1} << dimension_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted by source node, then dimension.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::map<Node, std::vector<std::string>>& annotations() const {
    return annotations_;
  }

  const std::vector<Node>& Successors(Node node) const { return out_[node]; }
  std::size_t InDegree(Node node) const { return in_degree_[node]; }
  std::size_t OutDegree(Node node) const { return out_[node].size(); }
  std::vector<std::string> ProgramsAt(Node node) const;

 private:
  friend Pdl BuildPdl(std::size_t, std::vector<std::string>, std::size_t);
  friend Pdl AnnotatePositions(
      const Pdl&, const std::vector<std::pair<std::string, BitVector>>&);
  friend Pdl Project(const Pdl&, std::size_t);

  std::size_t dimension_ = 0;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> out_;
  std::vector<std::size_t> in_degree_;
  std::map<Node, std::vector<std::string>> annotations_;
};

// Throws CapacityError above `limit`; larger spaces only support the
// implicit queries (DeviantDimensions, Deviant). `labels` names the
// dimensions and defaults to t1..tn.
Pdl BuildPdl(std::size_t n, std::vector<std::string> labels = {},
             std::size_t limit = kDefaultPdlLimit);

// Attaches each program to the node equal to its position. Throws
// ArgumentError on a dimension mismatch.
Pdl Annotate(const Pdl& pdl, const ProgramSpace& space,
             const std::vector<std::string>& programs);
Pdl AnnotatePositions(
    const Pdl& pdl,
    const std::vector<std::pair<std::string, BitVector>>& positions);

// Restriction to the first k dimensions. Positions sharing a k-prefix
// coalesce; annotations are merged in node order.
BitVector Project(const BitVector& position, std::size_t k);
Pdl Project(const Pdl& pdl, std::size_t k);

// Every node reachable from `from` along deviance edges (excluding `from`).
// Throws ArgumentError if `from` is not a node.
std::set<Node> ReachableByDeviance(const Pdl& pdl, Node from);

// Graphviz rendering; nodes in ascending binary value.
std::string PdlToDot(const Pdl& pdl);

}  // namespace mutspace

#endif  // MUTSPACE_LATTICE_H_
