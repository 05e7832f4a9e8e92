#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "backbone/tree.hpp"

namespace backbone {

enum class Color : std::uint8_t { Brown, Green, Red };

std::string_view to_string(Color color);
std::optional<Color> parse_color(std::string_view text);

// A tricoloring (B, R, G): brown and green vertex sets plus a set of red edges
// whose endpoints are the red vertices.
struct Tricoloring {
  std::vector<Color> colors;  // colors[v - 1] is the color of vertex v
  std::vector<Edge> red_edges;  // sorted

  std::size_t size() const noexcept { return colors.size(); }
  Color color(Vertex v) const { return colors.at(v - 1); }
  std::size_t count(Color c) const;
  std::vector<Vertex> vertices(Color c) const;

  friend bool operator==(const Tricoloring&, const Tricoloring&) = default;
};

// The b-coloring. Green vertices are those left exposed by some maximum
// matching, red edges are those contained in every maximum matching, and every
// other vertex is brown. Linear time: one bottom-up pass computes maximum
// matching sizes of rooted subtrees, one top-down pass computes the same for the
// complementary side of every edge.
Tricoloring bcolor(const LabeledTree& tree);

// Same coloring, computed from scratch per vertex and per edge by deleting it
// and re-solving the maximum matching on the pieces. O(n^2); kept as an
// independent route for differential testing.
Tricoloring bcolor_quadratic(const LabeledTree& tree);

enum class ViolationKind {
  SizeMismatch,            // coloring does not have one entry per vertex
  RedEdgeNotInTree,        // a listed red edge is not an edge of the tree
  RedEdgeEndpointNotRed,   // a red edge touches a brown or green vertex
  RedVertexWithoutEdge,    // a red vertex is the endpoint of no red edge
  AdjacentRedEdges,        // two red edges share the witnessing vertex
  GreenNeighborNotBrown,   // an edge with a green end has a non-brown other end
  BrownTooFewGreenNeighbors,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Vertex vertex = kNoVertex;  // witness vertex, when the clause is about a vertex
  Edge edge{};                // witness edge, when the clause is about an edge

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Checks the local characterization: red edges pairwise non-adjacent, every
// edge touching a green vertex has a brown other end, every brown vertex has
// at least two green neighbors, and B, G, V(R) partition the vertex set.
// Returns one record per witness; empty iff the coloring passes.
std::vector<Violation> verify_condition_iii(const LabeledTree& tree, const Tricoloring& coloring);

struct BackboneReport {
  // Minimum vertex covers.
  std::vector<Vertex> vc_positive;   // in every minimum cover
  std::vector<Vertex> vc_negative;   // in no minimum cover
  std::vector<Edge> exclusive_edges; // degenerate pairs never covered together
  // Maximum matchings.
  std::vector<Edge> mm_positive_edges;  // in every maximum matching
  std::vector<Vertex> optional_vertices;
  std::vector<Vertex> unavoidable_vertices;

  friend bool operator==(const BackboneReport&, const BackboneReport&) = default;
};

BackboneReport backbone_from_coloring(const Tricoloring& coloring);

}  // namespace backbone
