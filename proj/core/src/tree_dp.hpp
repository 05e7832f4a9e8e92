#pragma once

// Bottom-up / top-down sweeps over a RootedView shared by the coloring,
// counting and enumeration code. Internal header.

#include <cstdint>
#include <vector>

#include "backbone/bcoloring.hpp"
#include "backbone/tree.hpp"

namespace backbone::detail {

// Scratch for the rerooted maximum-matching sizes. All arrays are indexed by
// vertex id.
struct RerootScratch {
  std::vector<std::uint32_t> down;        // nu(subtree of v)
  std::vector<std::uint32_t> child_sum;   // sum of down[] over children = nu(subtree of v, v free)
  std::vector<std::uint32_t> gain_count;  // children c with down[c] == child_sum[c]
  std::vector<std::uint32_t> up;          // nu(side of parent edge not containing v)
  std::vector<std::uint32_t> up_free;     // same, with parent(v) forced unmatched
  std::vector<char> red_to_parent;
};

// Writes the b-coloring into colors (indexed by vertex id, slot 0 unused) and
// marks red_to_parent[v] for every red edge {v, parent(v)}.
void bcolor_rooted(const RootedView& view, RerootScratch& scratch, std::vector<Color>& colors);

// An optimum value together with the number of solutions attaining it.
// count == 0 encodes "no solution in this state".
template <class Count>
struct Optimum {
  std::uint32_t size = 0;
  Count count{};
};

template <class Count>
Optimum<Count> combine(const Optimum<Count>& a, const Optimum<Count>& b) {
  return {a.size + b.size, a.count * b.count};
}

template <class Count>
Optimum<Count> keep_larger(const Optimum<Count>& a, const Optimum<Count>& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  if (a.size != b.size) return a.size > b.size ? a : b;
  return {a.size, a.count + b.count};
}

template <class Count>
Optimum<Count> keep_smaller(const Optimum<Count>& a, const Optimum<Count>& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  if (a.size != b.size) return a.size < b.size ? a : b;
  return {a.size, a.count + b.count};
}

template <class Count>
struct CountScratch {
  std::vector<Optimum<Count>> first;   // cover: root in cover / matching: root free
  std::vector<Optimum<Count>> second;  // cover: root out of cover / matching: root matched
};

// Minimum vertex cover size and count. Per vertex: (root in cover) and (root
// not in cover, which forces every child in).
template <class Count>
Optimum<Count> vertex_cover_rooted(const RootedView& view, CountScratch<Count>& s) {
  const std::size_t n = view.size();
  s.first.assign(n + 1, Optimum<Count>{1, Count(1)});
  s.second.assign(n + 1, Optimum<Count>{0, Count(1)});
  for (const Vertex v : view.order) {
    const Vertex p = view.parent[v];
    if (p == kNoVertex) continue;
    const auto best = keep_smaller(s.first[v], s.second[v]);
    s.first[p] = combine(s.first[p], best);
    s.second[p] = combine(s.second[p], s.first[v]);
  }
  return keep_smaller(s.first[view.root], s.second[view.root]);
}

// Maximum matching size and count. Per vertex: (root free) and (root matched
// to one of its children); children are folded in one at a time.
template <class Count>
Optimum<Count> matching_rooted(const RootedView& view, CountScratch<Count>& s) {
  const std::size_t n = view.size();
  s.first.assign(n + 1, Optimum<Count>{0, Count(1)});
  s.second.assign(n + 1, Optimum<Count>{0, Count(0)});
  for (const Vertex v : view.order) {
    const Vertex p = view.parent[v];
    if (p == kNoVertex) continue;
    const auto best = keep_larger(s.first[v], s.second[v]);
    const Optimum<Count> take_edge{s.first[v].size + 1, s.first[v].count};
    s.second[p] = keep_larger(combine(s.second[p], best), combine(s.first[p], take_edge));
    s.first[p] = combine(s.first[p], best);
  }
  return keep_larger(s.first[view.root], s.second[view.root]);
}

}  // namespace backbone::detail
