#include "qadsim/decision/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "qadsim/error.hpp"

namespace qadsim {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MeasurementRun sample_measurements(const StateVector& state, std::uint64_t shots,
                                   std::uint64_t seed) {
  if (shots == 0) throw ConfigError("shot count must be at least 1");
  if (std::abs(state.norm() - 1.0) > 1e-8) throw ConfigError("state is not normalized");

  MeasurementRun run;
  run.seed = seed;
  run.shots = shots;
  run.exact = state.probabilities();
  const std::size_t d = run.exact.size();

  std::vector<double> cdf(d);
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    acc += run.exact[i];
    cdf[i] = acc;
  }
  // Rescale so the last bucket closes exactly at the total mass.
  for (double& c : cdf) c /= acc;

  run.counts.assign(d, 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t k = 0; k < shots; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++run.counts[static_cast<std::size_t>(it - cdf.begin())];
  }

  run.frequencies.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    run.frequencies[i] = static_cast<double>(run.counts[i]) / static_cast<double>(shots);
  }
  return run;
}

void write_csv(const MeasurementRun& run, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "index,count,frequency,exact_probability\n";
  for (std::size_t i = 0; i < run.counts.size(); ++i) {
    out << i << ',' << run.counts[i] << ',' << run.frequencies[i] << ',' << run.exact[i] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace qadsim
