#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hawkesnn/process.hpp"

namespace hawkesnn {

// Observation times t_0 = 0 < t_1 < ... < t_K.
struct ObservationGrid {
  std::vector<double> times;

  int bins() const { return static_cast<int>(times.size()) - 1; }
  double horizon() const { return times.back(); }
  double width(int k) const { return times[k + 1] - times[k]; }
  void validate() const;
};

// Counts n_k = N(t_{k-1}, t_k].
struct CountSeries {
  ObservationGrid grid;
  std::vector<long> counts;

  long total() const;
  void validate() const;
};

// Equal-width grid; delta must divide horizon (tolerance 1e-9).
ObservationGrid make_grid(double horizon, double delta);
// Explicit widths; they define the horizon.
ObservationGrid make_grid(const std::vector<double>& widths);
// Widths repeating `pattern` until `horizon` is reached exactly.
ObservationGrid make_grid_pattern(double horizon,
                                  const std::vector<double>& pattern);

struct SimulateOptions {
  // Re-derive the thinning intensity by direct summation at every accepted
  // event and fail on disagreement > 1e-9 (slow; test use).
  bool check_recursion = false;
};

// Exact simulation of a Hawkes sample path on (0, horizon], starting from the
// empty history.  Deterministic given the seed.  Exponential kernels use
// Ogata thinning with a recursively maintained intensity; Gamma kernels use
// the exact cluster (superposition) construction, which stays valid when the
// density is unbounded at zero (shape < 1).
EventPath simulate_path(const HawkesParams& params, double horizon,
                        std::uint64_t seed, const SimulateOptions& opts = {});

// Interval censoring: n_k = #{tau_i in (t_{k-1}, t_k]}.
CountSeries censor(const EventPath& path, const ObservationGrid& grid);

// Two-column text formats: paths as "time cumulative-count", count series as
// "interval-end-time count".
void write_path(std::ostream& os, const EventPath& path);
void write_counts(std::ostream& os, const CountSeries& counts);
CountSeries read_counts(std::istream& is);

}  // namespace hawkesnn
