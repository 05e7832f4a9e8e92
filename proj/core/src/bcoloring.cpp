#include "backbone/bcoloring.hpp"

#include <algorithm>

#include "tree_dp.hpp"

namespace backbone {

std::string_view to_string(Color color) {
  switch (color) {
    case Color::Brown: return "brown";
    case Color::Green: return "green";
    case Color::Red: return "red";
  }
  return "?";
}

std::optional<Color> parse_color(std::string_view text) {
  if (text == "brown") return Color::Brown;
  if (text == "green") return Color::Green;
  if (text == "red") return Color::Red;
  return std::nullopt;
}

std::size_t Tricoloring::count(Color c) const {
  return static_cast<std::size_t>(std::count(colors.begin(), colors.end(), c));
}

std::vector<Vertex> Tricoloring::vertices(Color c) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] == c) out.push_back(static_cast<Vertex>(i + 1));
  }
  return out;
}

namespace detail {

void bcolor_rooted(const RootedView& view, RerootScratch& s, std::vector<Color>& colors) {
  const std::size_t n = view.size();
  s.down.assign(n + 1, 0);
  s.child_sum.assign(n + 1, 0);
  s.gain_count.assign(n + 1, 0);
  s.up.assign(n + 1, 0);
  s.up_free.assign(n + 1, 0);
  s.red_to_parent.assign(n + 1, 0);
  colors.assign(n + 1, Color::Brown);

  // Matching the root to a child gains one edge iff that child's own optimum
  // leaves it free (down == child_sum).
  for (const Vertex v : view.order) {
    s.down[v] = s.child_sum[v] + (s.gain_count[v] > 0 ? 1 : 0);
    const Vertex p = view.parent[v];
    if (p != kNoVertex) {
      s.child_sum[p] += s.down[v];
      s.gain_count[p] += (s.down[v] == s.child_sum[v]) ? 1 : 0;
    }
  }

  // Components around p after deleting p: its children plus, unless p is the
  // root, the part above p. For child v, the side of edge {v, p} holding p is
  // those components minus v's subtree, with p attached.
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    const Vertex v = *it;
    const Vertex p = view.parent[v];
    if (p == kNoVertex) continue;
    const bool p_has_up = view.parent[p] != kNoVertex;
    const std::uint32_t around_p = s.child_sum[p] + s.up[p];
    const std::uint32_t gains_p =
        s.gain_count[p] + ((p_has_up && s.up[p] == s.up_free[p]) ? 1 : 0);
    const std::uint32_t gain_v = (s.down[v] == s.child_sum[v]) ? 1 : 0;
    s.up_free[v] = around_p - s.down[v];
    s.up[v] = s.up_free[v] + (gains_p > gain_v ? 1 : 0);
  }

  const std::uint32_t nu = s.down[view.root];
  for (const Vertex v : view.order) {
    // nu(T - v) == nu(T) iff some maximum matching leaves v exposed.
    if (s.child_sum[v] + s.up[v] == nu) colors[v] = Color::Green;
  }
  for (const Vertex v : view.order) {
    const Vertex p = view.parent[v];
    if (p == kNoVertex) continue;
    // Deleting edge {v, p} loses a matching edge iff the edge is in every
    // maximum matching.
    if (s.down[v] + s.up[v] < nu) {
      s.red_to_parent[v] = 1;
      colors[v] = Color::Red;
      colors[p] = Color::Red;
    }
  }
}

}  // namespace detail

Tricoloring bcolor(const LabeledTree& tree) {
  const RootedView view = root_and_order(tree, 1);
  detail::RerootScratch scratch;
  std::vector<Color> colors;
  detail::bcolor_rooted(view, scratch, colors);

  Tricoloring out;
  out.colors.assign(colors.begin() + 1, colors.end());
  for (Vertex v = 1; v <= tree.size(); ++v) {
    if (scratch.red_to_parent[v]) out.red_edges.push_back(make_edge(v, view.parent[v]));
  }
  std::sort(out.red_edges.begin(), out.red_edges.end());
  return out;
}

namespace {

// Maximum matching size of the component of `start` once the edge to
// `blocked` is removed (blocked may be kNoVertex). Iterative DFS.
std::uint32_t component_matching(const LabeledTree& tree, Vertex start, Vertex blocked) {
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    std::uint32_t free_sum;  // sum of child optima
    bool gain;               // some child optimum leaves the child free
  };
  std::vector<Frame> stack{{start, blocked, 0, 0, false}};
  std::uint32_t result = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto nbrs = tree.neighbors(f.v);
    if (f.next < nbrs.size()) {
      const Vertex w = nbrs[f.next++];
      if (w != f.parent) stack.push_back({w, f.v, 0, 0, false});
      continue;
    }
    const std::uint32_t best = f.free_sum + (f.gain ? 1 : 0);
    const bool child_free = best == f.free_sum;
    stack.pop_back();
    if (stack.empty()) {
      result = best;
    } else {
      stack.back().free_sum += best;
      stack.back().gain = stack.back().gain || child_free;
    }
  }
  return result;
}

}  // namespace

Tricoloring bcolor_quadratic(const LabeledTree& tree) {
  const std::size_t n = tree.size();
  const std::uint32_t nu = component_matching(tree, 1, kNoVertex);
  Tricoloring out;
  out.colors.assign(n, Color::Brown);
  for (Vertex v = 1; v <= n; ++v) {
    std::uint32_t without_v = 0;
    for (const Vertex w : tree.neighbors(v)) without_v += component_matching(tree, w, v);
    if (without_v == nu) out.colors[v - 1] = Color::Green;
  }
  for (const Edge& e : tree.edges()) {
    const std::uint32_t split = component_matching(tree, e.u, e.v) + component_matching(tree, e.v, e.u);
    if (split < nu) {
      out.red_edges.push_back(e);
      out.colors[e.u - 1] = Color::Red;
      out.colors[e.v - 1] = Color::Red;
    }
  }
  return out;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::SizeMismatch: return "size mismatch";
    case ViolationKind::RedEdgeNotInTree: return "red edge not in tree";
    case ViolationKind::RedEdgeEndpointNotRed: return "red edge endpoint not red";
    case ViolationKind::RedVertexWithoutEdge: return "red vertex without red edge";
    case ViolationKind::AdjacentRedEdges: return "adjacent red edges";
    case ViolationKind::GreenNeighborNotBrown: return "green vertex with non-brown neighbor";
    case ViolationKind::BrownTooFewGreenNeighbors: return "brown vertex with fewer than two green neighbors";
  }
  return "?";
}

std::vector<Violation> verify_condition_iii(const LabeledTree& tree, const Tricoloring& coloring) {
  std::vector<Violation> out;
  const std::size_t n = tree.size();
  if (coloring.size() != n) {
    out.push_back({ViolationKind::SizeMismatch, kNoVertex, {}});
    return out;
  }

  std::vector<std::uint32_t> red_degree(n + 1, 0);
  for (const Edge& e : coloring.red_edges) {
    if (!tree.has_edge(e.u, e.v)) {
      out.push_back({ViolationKind::RedEdgeNotInTree, kNoVertex, e});
      continue;
    }
    if (coloring.color(e.u) != Color::Red || coloring.color(e.v) != Color::Red) {
      out.push_back({ViolationKind::RedEdgeEndpointNotRed, kNoVertex, e});
    }
    ++red_degree[e.u];
    ++red_degree[e.v];
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (coloring.color(v) == Color::Red && red_degree[v] == 0) {
      out.push_back({ViolationKind::RedVertexWithoutEdge, v, {}});
    }
    if (red_degree[v] > 1) out.push_back({ViolationKind::AdjacentRedEdges, v, {}});
  }
  for (const Edge& e : tree.edges()) {
    const Color cu = coloring.color(e.u);
    const Color cv = coloring.color(e.v);
    const bool bad = (cu == Color::Green && cv != Color::Brown) ||
                     (cv == Color::Green && cu != Color::Brown);
    if (bad) out.push_back({ViolationKind::GreenNeighborNotBrown, kNoVertex, e});
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (coloring.color(v) != Color::Brown) continue;
    std::size_t green = 0;
    for (const Vertex w : tree.neighbors(v)) green += coloring.color(w) == Color::Green ? 1 : 0;
    if (green < 2) out.push_back({ViolationKind::BrownTooFewGreenNeighbors, v, {}});
  }
  return out;
}

BackboneReport backbone_from_coloring(const Tricoloring& coloring) {
  BackboneReport report;
  report.vc_positive = coloring.vertices(Color::Brown);
  report.vc_negative = coloring.vertices(Color::Green);
  report.exclusive_edges = coloring.red_edges;
  report.mm_positive_edges = coloring.red_edges;
  report.optional_vertices = report.vc_negative;
  report.unavoidable_vertices = report.vc_positive;
  return report;
}

}  // namespace backbone
