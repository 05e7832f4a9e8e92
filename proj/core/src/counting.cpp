#include "backbone/counting.hpp"

#include <string>

#include "backbone/bcoloring.hpp"
#include "tree_dp.hpp"

namespace backbone {

namespace {

OptimumStats to_stats(const detail::Optimum<BigInt>& opt) { return {opt.size, opt.count}; }

}  // namespace

OptimumStats min_vertex_cover_stats(const LabeledTree& tree) {
  detail::CountScratch<BigInt> scratch;
  return to_stats(detail::vertex_cover_rooted(root_and_order(tree, 1), scratch));
}

OptimumStats max_matching_stats(const LabeledTree& tree) {
  detail::CountScratch<BigInt> scratch;
  return to_stats(detail::matching_rooted(root_and_order(tree, 1), scratch));
}

CountSummary summarize(const LabeledTree& tree) {
  const RootedView view = root_and_order(tree, 1);
  detail::CountScratch<BigInt> scratch;
  const auto cover = detail::vertex_cover_rooted(view, scratch);
  const auto matching = detail::matching_rooted(view, scratch);
  const Tricoloring coloring = bcolor(tree);

  CountSummary out;
  out.vc_size = cover.size;
  out.vc_count = cover.count;
  out.mm_size = matching.size;
  out.mm_count = matching.count;
  out.n_brown = coloring.count(Color::Brown);
  out.n_red = coloring.count(Color::Red);
  out.n_green = coloring.count(Color::Green);

  if (out.vc_size != out.mm_size || out.n_red % 2 != 0 ||
      out.vc_size != out.n_brown + out.n_red / 2) {
    throw InternalInconsistency("optimum sizes disagree: vc " + std::to_string(out.vc_size) +
                                ", mm " + std::to_string(out.mm_size) + ", brown " +
                                std::to_string(out.n_brown) + ", red " + std::to_string(out.n_red));
  }
  return out;
}

}  // namespace backbone
