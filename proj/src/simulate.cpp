#include "hawkesnn/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hawkesnn/rng.hpp"

namespace hawkesnn {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Upper bound for nu over any interval (exact for constant/trig, convex-hull
// bound for splines).
double background_sup(const Background& bg) {
  if (const auto* c = std::get_if<ConstantBackground>(&bg)) return c->nu;
  if (const auto* tr = std::get_if<TrigBackground>(&bg))
    return tr->nu1 + std::hypot(tr->nu2, tr->nu3.value_or(0.0));
  const auto& sp = std::get<SplineBackground>(bg);
  return *std::max_element(sp.coeffs.begin(), sp.coeffs.end());
}

// Ogata thinning for the Markovian (exponential-kernel) case.  The excitation
// state A = sum_i exp(-beta (t - tau_i)) is maintained recursively; between
// events it only decays, so eta*beta*A at the window start dominates the
// excitation over the whole lookahead window.
EventPath thin_exponential(const HawkesParams& params, double horizon,
                           Rng& rng, const SimulateOptions& opts) {
  const double beta = std::get<ExponentialKernel>(params.kernel).beta;
  const double eta = params.eta;
  const double nu_sup = background_sup(params.background);
  const double period = background_period(params.background);
  // For time-varying backgrounds the dominating rate is refreshed at least
  // every tenth of a period; with a global nu bound this only limits how
  // stale the (decaying) excitation bound can get.
  const double lookahead =
      period > 0.0 ? period / 10.0 : std::numeric_limits<double>::infinity();

  EventPath path;
  path.horizon = horizon;

  double s = 0.0;        // current time
  double a_last = 0.0;   // A immediately after the last accepted event
  double t_last = 0.0;   // time of the last accepted event
  while (s < horizon) {
    const double window_end = std::min(horizon, s + lookahead);
    const double exc_bound = eta * beta * a_last * std::exp(-beta * (s - t_last));
    const double rate_bound = nu_sup + exc_bound;
    if (rate_bound <= 0.0) break;
    const double u = s + draw_exponential(rng, rate_bound);
    if (u > window_end) {
      s = window_end;
      continue;
    }
    const double exc = eta * beta * a_last * std::exp(-beta * (u - t_last));
    const double lambda = background_rate(params.background, u) + exc;
    if (lambda > rate_bound * (1.0 + 1e-12))
      throw std::logic_error("thinning bound violated");
    s = u;
    if (draw_uniform(rng) * rate_bound <= lambda) {
      if (opts.check_recursion) {
        double direct = background_rate(params.background, u);
        for (double tau : path.times)
          direct += eta * kernel_density(params.kernel, u - tau);
        if (std::abs(direct - lambda) > 1e-9 * (1.0 + std::abs(direct)))
          throw std::logic_error("recursive intensity disagrees with direct sum");
      }
      a_last = a_last * std::exp(-beta * (u - t_last)) + 1.0;
      t_last = u;
      path.times.push_back(u);
    }
  }
  return path;
}

// Exact cluster construction: immigrants arrive as an inhomogeneous Poisson
// process with rate nu (simulated by thinning against its sup), and every
// event independently spawns Poisson(eta) offspring at kernel-distributed
// waiting times.  Descendants of events beyond the horizon never fall inside
// it, so those subtrees are pruned.
EventPath cluster_simulate(const HawkesParams& params, double horizon,
                           Rng& rng) {
  const double nu_sup = background_sup(params.background);
  std::vector<double> events;

  double s = 0.0;
  while (true) {
    s += draw_exponential(rng, nu_sup);
    if (s > horizon) break;
    if (draw_uniform(rng) * nu_sup <= background_rate(params.background, s))
      events.push_back(s);
  }

  if (params.eta > 0.0) {
    const auto& kernel = std::get<GammaKernel>(params.kernel);
    std::size_t next = 0;
    while (next < events.size()) {
      const double parent = events[next++];
      const long n_children = draw_poisson(rng, params.eta);
      for (long c = 0; c < n_children; ++c) {
        double dt = draw_gamma(rng, kernel.alpha, kernel.beta);
        if (dt <= 0.0) dt = std::numeric_limits<double>::min();
        const double child = parent + dt;
        if (child <= horizon) events.push_back(child);
      }
    }
  }

  std::sort(events.begin(), events.end());
  // Break measure-zero ties so the path stays strictly increasing.
  for (std::size_t i = 1; i < events.size(); ++i)
    if (events[i] <= events[i - 1])
      events[i] = std::nextafter(events[i - 1],
                                 std::numeric_limits<double>::infinity());
  while (!events.empty() && events.back() > horizon) events.pop_back();

  EventPath path;
  path.times = std::move(events);
  path.horizon = horizon;
  return path;
}

}  // namespace

void ObservationGrid::validate() const {
  require(times.size() >= 2, "observation grid needs at least one interval");
  require(times.front() == 0.0, "observation grid must start at 0");
  for (std::size_t i = 1; i < times.size(); ++i)
    require(std::isfinite(times[i]) && times[i] > times[i - 1],
            "observation times must be strictly increasing");
}

long CountSeries::total() const {
  long acc = 0;
  for (long n : counts) acc += n;
  return acc;
}

void CountSeries::validate() const {
  grid.validate();
  require(static_cast<int>(counts.size()) == grid.bins(),
          "count series length must match the grid");
  for (long n : counts) require(n >= 0, "counts must be nonnegative");
}

ObservationGrid make_grid(double horizon, double delta) {
  require(horizon > 0.0 && delta > 0.0, "horizon and width must be positive");
  const double k = horizon / delta;
  const long bins = std::lround(k);
  require(bins >= 1 && std::abs(k - static_cast<double>(bins)) < 1e-9,
          "interval width must divide the horizon");
  ObservationGrid grid;
  grid.times.resize(static_cast<std::size_t>(bins) + 1);
  for (long i = 0; i <= bins; ++i)
    grid.times[static_cast<std::size_t>(i)] = static_cast<double>(i) * delta;
  grid.times.back() = horizon;
  grid.validate();
  return grid;
}

ObservationGrid make_grid(const std::vector<double>& widths) {
  require(!widths.empty(), "grid needs at least one interval");
  ObservationGrid grid;
  grid.times.reserve(widths.size() + 1);
  grid.times.push_back(0.0);
  for (double w : widths) {
    require(w > 0.0, "interval widths must be positive");
    grid.times.push_back(grid.times.back() + w);
  }
  grid.validate();
  return grid;
}

ObservationGrid make_grid_pattern(double horizon,
                                  const std::vector<double>& pattern) {
  require(!pattern.empty(), "width pattern must be nonempty");
  std::vector<double> widths;
  double acc = 0.0;
  std::size_t i = 0;
  while (acc < horizon - 1e-9) {
    const double w = pattern[i % pattern.size()];
    require(w > 0.0, "interval widths must be positive");
    widths.push_back(w);
    acc += w;
    ++i;
  }
  require(std::abs(acc - horizon) < 1e-9,
          "width pattern must tile the horizon exactly");
  auto grid = make_grid(widths);
  grid.times.back() = horizon;
  return grid;
}

EventPath simulate_path(const HawkesParams& params, double horizon,
                        std::uint64_t seed, const SimulateOptions& opts) {
  params.validate();
  require(horizon > 0.0, "horizon must be positive");
  require(params.eta < 1.0, "simulation requires eta < 1");
  Rng rng = make_rng(seed, "path");
  if (params.eta == 0.0 ||
      std::holds_alternative<ExponentialKernel>(params.kernel)) {
    if (std::holds_alternative<GammaKernel>(params.kernel)) {
      // eta = 0: the kernel never fires; thin against the background only.
      HawkesParams p = params;
      p.kernel = ExponentialKernel{1.0};
      return thin_exponential(p, horizon, rng, opts);
    }
    return thin_exponential(params, horizon, rng, opts);
  }
  return cluster_simulate(params, horizon, rng);
}

CountSeries censor(const EventPath& path, const ObservationGrid& grid) {
  path.validate();
  grid.validate();
  require(std::abs(grid.horizon() - path.horizon) < 1e-9,
          "grid horizon must match the path horizon");
  CountSeries out;
  out.grid = grid;
  out.counts.assign(static_cast<std::size_t>(grid.bins()), 0);
  std::size_t k = 0;
  for (double t : path.times) {
    while (t > grid.times[k + 1]) ++k;
    ++out.counts[k];
  }
  return out;
}

void write_path(std::ostream& os, const EventPath& path) {
  os.precision(17);
  os << "# time count  (horizon " << path.horizon << ")\n";
  for (std::size_t i = 0; i < path.times.size(); ++i)
    os << path.times[i] << ' ' << i + 1 << '\n';
}

void write_counts(std::ostream& os, const CountSeries& counts) {
  os.precision(17);
  os << "# time count\n";
  for (int k = 0; k < counts.grid.bins(); ++k)
    os << counts.grid.times[static_cast<std::size_t>(k) + 1] << ' '
       << counts.counts[static_cast<std::size_t>(k)] << '\n';
}

CountSeries read_counts(std::istream& is) {
  CountSeries out;
  out.grid.times.push_back(0.0);
  std::string line;
  long lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double t;
    double n;
    if (!(ls >> t >> n))
      throw std::runtime_error("malformed count row at line " +
                               std::to_string(lineno));
    if (n < 0.0 || n != std::floor(n))
      throw std::runtime_error("count must be a nonnegative integer at line " +
                               std::to_string(lineno));
    if (t <= out.grid.times.back())
      throw std::runtime_error("times must be strictly increasing at line " +
                               std::to_string(lineno));
    out.grid.times.push_back(t);
    out.counts.push_back(static_cast<long>(n));
  }
  if (out.counts.empty()) throw std::runtime_error("empty count series");
  out.validate();
  return out;
}

}  // namespace hawkesnn
