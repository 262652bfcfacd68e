#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "sanovcat/parallel.hpp"
#include "sanovcat/report.hpp"
#include "sanovcat/theta.hpp"

namespace sanovcat::theta {

// Runs pred(a, b, c) over all kOrder^3 triples, or over `sample` random ones.
// pred returns true when the identity holds.
template <class Pred>
void scan_triples(Check& c, std::size_t sample, std::uint64_t seed, const std::string& label,
                  Pred pred) {
  const bool exhaustive = sample == 0;
  const std::size_t rows = exhaustive ? kOrder : sample;
  std::vector<std::array<Index, 3>> drawn;
  if (!exhaustive) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, kOrder - 1);
    drawn.resize(sample);
    for (auto& t : drawn)
      t = {static_cast<Index>(d(rng)), static_cast<Index>(d(rng)), static_cast<Index>(d(rng))};
  }
  struct Part {
    std::uint64_t failures = 0;
    std::vector<std::string> witnesses;
  };
  auto parts = parallel_chunks<Part>(rows, [&](std::size_t lo, std::size_t hi) {
    Part p;
    auto record = [&](Index a, Index b, Index cc) {
      ++p.failures;
      if (p.witnesses.size() < Check::kMaxWitnesses)
        p.witnesses.push_back(label + " fails at a=" + name(a) + " b=" + name(b) + " c=" + name(cc));
    };
    for (std::size_t r = lo; r < hi; ++r) {
      if (exhaustive) {
        auto a = static_cast<Index>(r);
        for (int b = 0; b < kOrder; ++b)
          for (int cc = 0; cc < kOrder; ++cc)
            if (!pred(a, static_cast<Index>(b), static_cast<Index>(cc)))
              record(a, static_cast<Index>(b), static_cast<Index>(cc));
      } else {
        const auto& t = drawn[r];
        if (!pred(t[0], t[1], t[2])) record(t[0], t[1], t[2]);
      }
    }
    return p;
  });
  std::uint64_t failures = 0;
  for (auto& p : parts) {
    failures += p.failures;
    for (auto& w : p.witnesses) c.fail(std::move(w));
  }
  c.counts["triples"] = exhaustive ? std::uint64_t{kOrder} * kOrder * kOrder : sample;
  c.counts["mode"] = exhaustive ? "exhaustive" : "sampled";
  c.counts["failures"] = failures;
}

}  // namespace sanovcat::theta
