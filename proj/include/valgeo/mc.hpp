#pragma once

#include <cmath>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "valgeo/rng.hpp"

namespace valgeo {

struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;

  double z_score(double prediction) const {
    if (stderr_ <= 0) return value == prediction ? 0.0 : 1e300;
    return std::abs(value - prediction) / stderr_;
  }
};

// Deterministic chunked Monte Carlo: the sample stream is split across a
// fixed number of substreams and merged in chunk order, so the result does
// not depend on the number of worker threads.
template <typename PerSample>
Estimate mc_estimate(long samples, const RngStream& base, PerSample fn,
                     int threads = 0) {
  constexpr int kChunks = 64;
  if (samples <= 0) throw std::invalid_argument("samples must be positive");
  int chunks = samples < kChunks ? static_cast<int>(samples) : kChunks;
  long per = samples / chunks;
  long extra = samples % chunks;

  struct Acc {
    double sum = 0.0, sumsq = 0.0;
    long n = 0;
  };
  std::vector<Acc> accs(chunks);
  auto run_chunk = [&](int c) {
    RngStream rng = base.substream(static_cast<std::uint64_t>(c));
    long cn = per + (c < extra ? 1 : 0);
    Acc a;
    for (long i = 0; i < cn; ++i) {
      double v = fn(rng);
      a.sum += v;
      a.sumsq += v * v;
      a.n += 1;
    }
    accs[c] = a;
  };

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1) {
    for (int c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::future<void>> futs;
    for (int t = 0; t < threads; ++t)
      futs.push_back(std::async(std::launch::async, [&, t] {
        for (int c = t; c < chunks; c += threads) run_chunk(c);
      }));
    for (auto& f : futs) f.get();
  }

  double sum = 0.0, sumsq = 0.0;
  long n = 0;
  for (const auto& a : accs) {
    sum += a.sum;
    sumsq += a.sumsq;
    n += a.n;
  }
  Estimate e;
  e.samples = n;
  e.seed = base.seed();
  e.value = sum / static_cast<double>(n);
  if (n > 1) {
    double var = (sumsq - sum * sum / static_cast<double>(n)) / static_cast<double>(n - 1);
    e.stderr_ = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
  }
  return e;
}

}  // namespace valgeo
