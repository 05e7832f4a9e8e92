#include "backbone/enumeration.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "backbone/bcoloring.hpp"
#include "tree_dp.hpp"

namespace backbone {

namespace {

struct CountOverflow {};

// 64-bit count that refuses to wrap. Solution counts of small trees fit
// comfortably; on overflow the caller redoes the tree with BigInt.
struct CheckedCount {
  std::uint64_t value = 0;

  CheckedCount() = default;
  CheckedCount(std::uint64_t v) : value(v) {}  // NOLINT(google-explicit-constructor)

  friend CheckedCount operator+(CheckedCount a, CheckedCount b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a.value, b.value, &out)) throw CountOverflow{};
    return out;
  }
  friend CheckedCount operator*(CheckedCount a, CheckedCount b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a.value, b.value, &out)) throw CountOverflow{};
    return out;
  }
  friend bool operator==(const CheckedCount&, const CheckedCount&) = default;
};

class ShardWorker {
 public:
  explicit ShardWorker(std::size_t n) : n_(n) { totals_.n = n; }

  void visit(std::span<const Vertex> seq) {
    rooted_from_prufer(n_, seq, view_);
    detail::bcolor_rooted(view_, reroot_, colors_);
    std::uint32_t brown = 0, red = 0, green = 0;
    for (std::size_t v = 1; v <= n_; ++v) {
      switch (colors_[v]) {
        case Color::Brown: ++brown; break;
        case Color::Red: ++red; break;
        case Color::Green: ++green; break;
      }
    }

    std::uint32_t vc_size = 0, mm_size = 0;
    try {
      const auto vc = detail::vertex_cover_rooted(view_, small_);
      const auto mm = detail::matching_rooted(view_, small_);
      vc_size = vc.size;
      mm_size = mm.size;
      totals_.total_vc_count += static_cast<unsigned long>(vc.count.value);
      totals_.total_mm_count += static_cast<unsigned long>(mm.count.value);
    } catch (const CountOverflow&) {
      const auto vc = detail::vertex_cover_rooted(view_, big_);
      const auto mm = detail::matching_rooted(view_, big_);
      vc_size = vc.size;
      mm_size = mm.size;
      totals_.total_vc_count += vc.count;
      totals_.total_mm_count += mm.count;
    }
    if (vc_size != mm_size || red % 2 != 0 || vc_size != brown + red / 2) {
      throw InternalInconsistency("optimum-size identity fails on a tree with n = " +
                                  std::to_string(n_));
    }

    totals_.trees += 1U;
    totals_.total_brown += brown;
    totals_.total_red += red;
    totals_.total_green += green;
  }

  const EnumerationTotals& totals() const { return totals_; }

 private:
  std::size_t n_;
  EnumerationTotals totals_;
  RootedView view_;
  detail::RerootScratch reroot_;
  std::vector<Color> colors_;
  detail::CountScratch<CheckedCount> small_;
  detail::CountScratch<BigInt> big_;
};

// Odometer over digits [from, seq.size()), each in 1..n.
template <class Visit>
void odometer(std::size_t n, std::vector<Vertex>& seq, std::size_t from, Visit&& visit) {
  for (std::size_t i = from; i < seq.size(); ++i) seq[i] = 1;
  while (true) {
    visit(std::span<const Vertex>(seq));
    std::size_t i = seq.size();
    while (i > from && seq[i - 1] == n) {
      seq[i - 1] = 1;
      --i;
    }
    if (i == from) return;
    ++seq[i - 1];
  }
}

}  // namespace

EnumerationTotals& EnumerationTotals::merge(const EnumerationTotals& other) {
  if (trees == 0) n = other.n;
  trees += other.trees;
  total_brown += other.total_brown;
  total_red += other.total_red;
  total_green += other.total_green;
  total_vc_count += other.total_vc_count;
  total_mm_count += other.total_mm_count;
  return *this;
}

std::size_t shard_count(std::size_t n) { return n >= 3 ? n : 1; }

EnumerationTotals enumerate_shard(std::size_t n, std::size_t shard) {
  if (n == 0) throw InvalidInput("enumeration needs n >= 1");
  if (shard >= shard_count(n)) {
    throw InvalidInput("shard " + std::to_string(shard) + " out of range for n = " + std::to_string(n));
  }
  ShardWorker worker(n);
  if (n <= 2) {
    worker.visit({});
    return worker.totals();
  }
  std::vector<Vertex> seq(n - 2, 1);
  seq[0] = static_cast<Vertex>(shard + 1);
  odometer(n, seq, 1, [&](std::span<const Vertex> s) { worker.visit(s); });
  return worker.totals();
}

EnumerationTotals enumerate_totals(std::size_t n, const EnumerationConfig& config) {
  if (n == 0) throw InvalidInput("enumeration needs n >= 1");
  if (n > config.max_n) {
    throw CapExceeded("enumeration cap is n = " + std::to_string(config.max_n) + ", requested " +
                      std::to_string(n));
  }
  const std::size_t shards = shard_count(n);
  std::vector<EnumerationTotals> partial(shards);
  std::atomic<std::size_t> next{0};
  std::size_t finished = 0;
  std::mutex progress_mutex;
  std::exception_ptr failure;

  const auto work = [&] {
    for (std::size_t s = next++; s < shards; s = next++) {
      try {
        partial[s] = enumerate_shard(n, s);
      } catch (...) {
        std::lock_guard lock(progress_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      std::lock_guard lock(progress_mutex);
      ++finished;
      if (config.progress) config.progress(finished, shards);
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(shards)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  EnumerationTotals out;
  out.n = n;
  for (const auto& p : partial) out.merge(p);
  return out;
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const LabeledTree&)>& visit) {
  if (n == 0) throw InvalidInput("trees need n >= 1");
  if (n == 1) {
    visit(tree_from_edges(1, {}));
    return;
  }
  PruferSequence code{n, std::vector<Vertex>(n - 2, 1)};
  odometer(n, code.seq, 0, [&](std::span<const Vertex>) { visit(tree_from_prufer(code)); });
}

std::uint64_t uniform_below(RandomEngine& engine, std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("uniform_below needs a positive bound");
  // Reject the 2^64 mod bound lowest outputs so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine();
    if (r >= threshold) return r % bound;
  }
}

namespace {

void sample_prufer_digits(std::size_t n, RandomEngine& engine, std::vector<Vertex>& seq) {
  seq.resize(n - 2);
  for (auto& x : seq) x = static_cast<Vertex>(uniform_below(engine, n) + 1);
}

}  // namespace

LabeledTree sample_random_tree(std::size_t n, RandomEngine& engine) {
  if (n < 2) throw InvalidInput("random trees need n >= 2");
  PruferSequence code{n, {}};
  sample_prufer_digits(n, engine, code.seq);
  return tree_from_prufer(code);
}

LabeledTree sample_random_tree(std::size_t n, std::uint64_t seed) {
  RandomEngine engine(seed);
  return sample_random_tree(n, engine);
}

ColorFractions monte_carlo_fractions(std::size_t n, std::size_t samples, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("Monte-Carlo sampling needs n >= 2");
  if (samples == 0) throw InvalidInput("Monte-Carlo sampling needs at least one sample");

  RandomEngine engine(seed);
  std::vector<Vertex> seq;
  RootedView view;
  detail::RerootScratch scratch;
  std::vector<Color> colors;

  ColorFractions out;
  out.n = n;
  out.samples = samples;
  double sq_brown = 0, sq_red = 0, sq_green = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    sample_prufer_digits(n, engine, seq);
    rooted_from_prufer(n, seq, view);
    detail::bcolor_rooted(view, scratch, colors);
    std::uint64_t b = 0, r = 0, g = 0;
    for (std::size_t v = 1; v <= n; ++v) {
      b += colors[v] == Color::Brown;
      r += colors[v] == Color::Red;
      g += colors[v] == Color::Green;
    }
    out.brown_total += b;
    out.red_total += r;
    out.green_total += g;
    const double nd = static_cast<double>(n);
    sq_brown += (b / nd) * (b / nd);
    sq_red += (r / nd) * (r / nd);
    sq_green += (g / nd) * (g / nd);
  }

  const double total = static_cast<double>(n) * static_cast<double>(samples);
  out.brown = static_cast<double>(out.brown_total) / total;
  out.red = static_cast<double>(out.red_total) / total;
  out.green = static_cast<double>(out.green_total) / total;
  const auto standard_error = [samples](double mean, double sum_sq) {
    if (samples < 2) return 0.0;
    const double m = static_cast<double>(samples);
    const double var = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1));
    return std::sqrt(var / m);
  };
  out.brown_se = standard_error(out.brown, sq_brown);
  out.red_se = standard_error(out.red, sq_red);
  out.green_se = standard_error(out.green, sq_green);
  return out;
}

}  // namespace backbone
