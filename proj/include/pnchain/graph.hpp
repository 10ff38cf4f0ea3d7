#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pnchain/chain.hpp"
#include "pnchain/enumeration.hpp"
#include "pnchain/word.hpp"

// Graph over PN(n): one node per prefix normal word, one edge w -> w' when w'
// is w with a single 1 turned into a 0 and both are prefix normal.  Chains of
// prefix normal generators are exactly the 1^n -> 0^n paths.

namespace pnchain {

struct PnGraph {
  int n = 0;
  std::vector<BinaryWord> nodes;           // ascending word order
  std::vector<std::pair<int, int>> edges;  // (from, to) node indices, from has one more 1

  int node_index(const BinaryWord& w) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
    if (it == nodes.end() || !(*it == w)) return -1;
    return static_cast<int>(it - nodes.begin());
  }
};

// Edge order follows node order: parents ascending, and flipping an earlier 1
// gives a smaller child, so the ascending position scan emits each parent's
// children in ascending order too.
inline PnGraph build_pn_graph(int n, int cap = kDefaultWordCap, int workers = 1) {
  PnGraph g;
  g.n = n;
  g.nodes = enumerate_pn_words(n, cap, workers).words;
  std::vector<Bit> buf;
  for (std::size_t pi = 0; pi < g.nodes.size(); ++pi) {
    const auto bits = g.nodes[pi].bits();
    buf.assign(bits.begin(), bits.end());
    for (std::size_t pos = 0; pos < buf.size(); ++pos) {
      if (buf[pos] == 1) {
        buf[pos] = 0;
        const int ci = g.node_index(BinaryWord(buf));
        if (ci >= 0) g.edges.emplace_back(static_cast<int>(pi), ci);
        buf[pos] = 1;
      }
    }
  }
  return g;
}

struct ChainOverlay {
  Generator generator;
  std::vector<int> node_indices;               // chain words, 1^n first
  std::vector<std::pair<int, int>> path_edges; // consecutive chain words as node index pairs
};

inline ChainOverlay chain_overlay(const PnGraph& graph, const Generator& g) {
  if (g.size() != graph.n)
    throw std::invalid_argument("chain_overlay: generator length " + std::to_string(g.size()) +
                                " does not match graph n=" + std::to_string(graph.n));
  if (!is_pn_generator(g))
    throw std::invalid_argument("chain_overlay: generator " + g.str() + " is not prefix normal");
  ChainOverlay overlay{g, {}, {}};
  const WordChain c = chain(g);
  overlay.node_indices.reserve(c.words.size());
  for (const BinaryWord& w : c.words) {
    const int idx = graph.node_index(w);
    if (idx < 0)  // cannot happen for a prefix normal generator
      throw std::logic_error("chain_overlay: chain word " + w.str() + " missing from graph");
    overlay.node_indices.push_back(idx);
  }
  for (std::size_t i = 0; i + 1 < overlay.node_indices.size(); ++i)
    overlay.path_edges.emplace_back(overlay.node_indices[i], overlay.node_indices[i + 1]);
  return overlay;
}

// Deterministic DOT: rank groups by ones count (1^n on top), then node
// styling for an optional overlay path, then all edges in index order.
inline void emit_dot(std::ostream& out, const PnGraph& graph,
                     const ChainOverlay* overlay = nullptr) {
  const auto quoted = [](const BinaryWord& w) { return "\"" + w.str() + "\""; };
  out << "digraph pn_words {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int ones = graph.n; ones >= 0; --ones) {
    std::vector<int> level;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
      if (graph.nodes[i].ones_count() == ones) level.push_back(static_cast<int>(i));
    if (level.empty()) continue;
    out << "  { rank=same;";
    for (int i : level) out << " " << quoted(graph.nodes[static_cast<std::size_t>(i)]) << ";";
    out << " }\n";
  }
  if (overlay != nullptr) {
    for (int i : overlay->node_indices)
      out << "  " << quoted(graph.nodes[static_cast<std::size_t>(i)])
          << " [style=filled, fillcolor=lightblue];\n";
  }
  for (const auto& [from, to] : graph.edges) {
    out << "  " << quoted(graph.nodes[static_cast<std::size_t>(from)]) << " -> "
        << quoted(graph.nodes[static_cast<std::size_t>(to)]);
    if (overlay != nullptr &&
        std::find(overlay->path_edges.begin(), overlay->path_edges.end(),
                  std::make_pair(from, to)) != overlay->path_edges.end())
      out << " [color=red, penwidth=2.0]";
    out << ";\n";
  }
  out << "}\n";
}

inline std::string dot_string(const PnGraph& graph, const ChainOverlay* overlay = nullptr) {
  std::ostringstream ss;
  emit_dot(ss, graph, overlay);
  return ss.str();
}

}  // namespace pnchain
