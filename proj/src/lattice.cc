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

#include "mutspace/lattice.h"

#include <deque>
#include <sstream>

#include "dot_util.h"
#include "mutspace/errors.h"

namespace mutspace {

namespace {

void CheckNode(const Pdl& pdl, Node node) {
  if (node >= pdl.node_count()) {
    throw ArgumentError("node " + std::to_string(node) +
                        " is outside a lattice of dimension " +
                        std::to_string(pdl.dimension()));
  }
}

}  // namespace

Node NodeFromBits(const BitVector& bits) {
  if (bits.size() > 32) {
    throw CapacityError("positions wider than 32 dimensions have no node id");
  }
  Node node = 0;
  for (auto bit : bits) node = (node << 1) | (bit ? 1u : 0u);
  return node;
}

BitVector BitsFromNode(Node node, std::size_t n) {
  BitVector bits(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bits[i] = (node >> (n - 1 - i)) & 1u;
  }
  return bits;
}

std::string NodeString(Node node, std::size_t n) {
  return BitString(BitsFromNode(node, n));
}

std::optional<std::vector<std::size_t>> DeviantDimensions(const BitVector& from,
                                                          const BitVector& to) {
  if (from.size() != to.size()) {
    throw ArgumentError("positions have different dimensions");
  }
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i] == to[i]) continue;
    // Outside the deviating set both agree; inside it `from` sits at the
    // origin and `to` opposes it.
    if (from[i] != 0) return std::nullopt;
    dims.push_back(i);
  }
  if (dims.empty()) return std::nullopt;
  return dims;
}

std::optional<DevianceWitness> Deviant(const ProgramSpace& space,
                                       const std::string& px,
                                       const std::string& py) {
  Position from = PositionOf(space, px);
  Position to = PositionOf(space, py);
  auto dims = DeviantDimensions(from.bits, to.bits);
  if (!dims) return std::nullopt;
  DevianceWitness witness{std::move(from), std::move(to), {}};
  for (std::size_t i : *dims) {
    witness.deviating_tests.push_back(space.tests()[i]);
  }
  return witness;
}

std::vector<std::string> Pdl::ProgramsAt(Node node) const {
  auto it = annotations_.find(node);
  if (it == annotations_.end()) return {};
  return it->second;
}

Pdl BuildPdl(std::size_t n, std::vector<std::string> labels,
             std::size_t limit) {
  if (n > limit || n > 31) {
    throw CapacityError("a " + std::to_string(n) +
                        "-dimensional lattice exceeds the explicit limit of " +
                        std::to_string(limit) +
                        "; use the implicit deviance queries instead");
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back("t" + std::to_string(i + 1));
    }
  }
  if (labels.size() != n) {
    throw ArgumentError("expected " + std::to_string(n) + " dimension labels");
  }
  Pdl pdl;
  pdl.dimension_ = n;
  pdl.labels_ = std::move(labels);
  const std::size_t count = std::size_t{1} << n;
  pdl.out_.resize(count);
  pdl.in_degree_.assign(count, 0);
  if (n > 0) pdl.edges_.reserve(n * (count / 2));
  for (Node u = 0; u < count; ++u) {
    for (std::size_t dim = 0; dim < n; ++dim) {
      const Node mask = Node{1} << (n - 1 - dim);
      if (u & mask) continue;
      const Node v = u | mask;
      pdl.edges_.push_back({u, v, dim});
      pdl.out_[u].push_back(v);
      ++pdl.in_degree_[v];
    }
  }
  return pdl;
}

Pdl AnnotatePositions(
    const Pdl& pdl,
    const std::vector<std::pair<std::string, BitVector>>& positions) {
  Pdl out = pdl;
  for (const auto& [program, bits] : positions) {
    if (bits.size() != pdl.dimension()) {
      throw ArgumentError("position of '" + program + "' has " +
                          std::to_string(bits.size()) +
                          " dimensions, lattice has " +
                          std::to_string(pdl.dimension()));
    }
    out.annotations_[NodeFromBits(bits)].push_back(program);
  }
  return out;
}

Pdl Annotate(const Pdl& pdl, const ProgramSpace& space,
             const std::vector<std::string>& programs) {
  if (space.dimension() != pdl.dimension()) {
    throw ArgumentError("program space has " +
                        std::to_string(space.dimension()) +
                        " dimensions, lattice has " +
                        std::to_string(pdl.dimension()));
  }
  std::vector<std::pair<std::string, BitVector>> positions;
  for (const auto& program : programs) {
    positions.emplace_back(program, PositionOf(space, program).bits);
  }
  return AnnotatePositions(pdl, positions);
}

BitVector Project(const BitVector& position, std::size_t k) {
  if (k > position.size()) {
    throw ArgumentError("cannot project onto more dimensions than exist");
  }
  return BitVector(position.begin(), position.begin() + k);
}

Pdl Project(const Pdl& pdl, std::size_t k) {
  if (k > pdl.dimension()) {
    throw ArgumentError("cannot project onto more dimensions than exist");
  }
  std::vector<std::string> labels(pdl.labels().begin(),
                                  pdl.labels().begin() + k);
  Pdl out = BuildPdl(k, std::move(labels), pdl.dimension());
  const std::size_t shift = pdl.dimension() - k;
  for (const auto& [node, programs] : pdl.annotations()) {
    auto& target = out.annotations_[node >> shift];
    target.insert(target.end(), programs.begin(), programs.end());
  }
  return out;
}

std::set<Node> ReachableByDeviance(const Pdl& pdl, Node from) {
  CheckNode(pdl, from);
  std::set<Node> seen;
  std::deque<Node> frontier{from};
  while (!frontier.empty()) {
    const Node u = frontier.front();
    frontier.pop_front();
    for (Node v : pdl.Successors(u)) {
      if (seen.insert(v).second) frontier.push_back(v);
    }
  }
  return seen;
}

std::string PdlToDot(const Pdl& pdl) {
  std::ostringstream out;
  const std::size_t n = pdl.dimension();
  out << "digraph pdl {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (Node u = 0; u < pdl.node_count(); ++u) {
    std::vector<std::string> lines{NodeString(u, n)};
    const auto programs = pdl.ProgramsAt(u);
    lines.insert(lines.end(), programs.begin(), programs.end());
    out << "  n" << u << " [label=" << DotLabel(lines);
    if (!programs.empty()) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  for (const auto& edge : pdl.edges()) {
    out << "  n" << edge.from << " -> n" << edge.to
        << " [label=" << DotLabel({pdl.labels()[edge.dimension]}) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mutspace
