#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hawkesnn {

// ---------------------------------------------------------------------------
// Excitation kernels: probability densities on (0, inf), rate parameterised.
// ---------------------------------------------------------------------------

struct ExponentialKernel {
  double beta = 1.0;  // rate > 0
};

struct GammaKernel {
  double alpha = 1.0;  // shape > 0
  double beta = 1.0;   // rate > 0
};

using Kernel = std::variant<ExponentialKernel, GammaKernel>;

double kernel_density(const Kernel& k, double t);
double kernel_cdf(const Kernel& k, double t);
double kernel_mean(const Kernel& k);
// sup of the density over (0, inf); infinite for Gamma with shape < 1.
double kernel_density_sup(const Kernel& k);
int kernel_dim(const Kernel& k);
void validate(const Kernel& k);

// ---------------------------------------------------------------------------
// Background rate functions nu(t) > 0.
// ---------------------------------------------------------------------------

struct ConstantBackground {
  double nu = 1.0;
};

// nu1 + nu2 sin(2 pi t / period) [+ nu3 cos(2 pi t / period)]
struct TrigBackground {
  double nu1 = 1.0;
  double nu2 = 0.0;
  std::optional<double> nu3;  // absent: two-coefficient form
  double period = 1.0;
};

// Order-4 periodic B-spline on cyclically wrapped knots.  `knots` lists the
// distinct knot positions within [0, period); a trailing knot equal to
// `period` is accepted and treated as the wrap of the first one.
struct SplineBackground {
  std::vector<double> knots;
  std::vector<double> coeffs;  // one per effective knot
  double period = 1.0;
};

using Background =
    std::variant<ConstantBackground, TrigBackground, SplineBackground>;

double background_rate(const Background& bg, double t);
// 0 for constant backgrounds, else the period.
double background_period(const Background& bg);
int background_dim(const Background& bg);
// Mean of nu over one period (1024-panel composite Simpson; exact value for
// constants).
double background_average_rate(const Background& bg);
// nu(t) > 0 on a dense grid over one period (step <= period/1000).
bool background_positive(const Background& bg);
// Integrals of the background basis functions over [t0, t1]; the integral of
// nu is the dot product with the coefficient vector.  Exact for all families
// (Gauss-Legendre on knot spans for splines, closed form otherwise).
std::vector<double> background_basis_integrals(const Background& bg, double t0,
                                               double t1);
double background_integral(const Background& bg, double t0, double t1);
// Basis function values at t: {1} / {1, sin, cos} / spline basis weights.
void background_features(const Background& bg, double t, std::span<double> out);
std::vector<double> background_coeffs(const Background& bg);
Background background_with_coeffs(const Background& bg,
                                  std::span<const double> coeffs);
void validate(const Background& bg);

// ---------------------------------------------------------------------------
// Periodic B-spline basis (cyclic knot wrapping).
// ---------------------------------------------------------------------------

class PeriodicSplineBasis {
 public:
  static constexpr int kOrder = 4;

  PeriodicSplineBasis(std::vector<double> knots, double period);

  int size() const { return static_cast<int>(knots_.size()); }
  double period() const { return period_; }

  // All basis weights at t (nonnegative, sum to 1).
  void evaluate(double t, std::span<double> out) const;
  double combine(double t, std::span<const double> coeffs) const;
  // Integral of each basis function over one period.
  std::vector<double> period_integrals() const;
  // Integral of each basis function over [t0, t1].
  std::vector<double> integrals(double t0, double t1) const;

 private:
  double knot(long i) const;  // cyclically extended knot sequence

  std::vector<double> knots_;  // distinct, ascending, within [0, period)
  double period_;
};

// ---------------------------------------------------------------------------
// Hawkes process parameter and sample path.
// ---------------------------------------------------------------------------

struct HawkesParams {
  Background background;
  double eta = 0.0;  // branching ratio, in [0, 1)
  Kernel kernel;

  int dim() const;
  void validate() const;
};

struct EventPath {
  std::vector<double> times;  // strictly increasing, in (0, horizon]
  double horizon = 0.0;

  std::size_t size() const { return times.size(); }
  void validate() const;
};

// Conditional intensity nu(t) + eta * sum_{tau < t} g(t - tau); the sum uses
// the left limit, so an event exactly at t does not contribute.
double intensity(const HawkesParams& params, const EventPath& path, double t);

// Midpoint-rule bin volume nu((t0+t1)/2) * (t1-t0).
double background_volume(const Background& bg, double t0, double t1);

// Long-run event rate: (average of nu over one period) / (1 - eta).
double stationary_rate(const HawkesParams& params);

// ---------------------------------------------------------------------------
// Model family descriptor: which background / kernel shape is being fitted,
// without the parameter values.  Defines the flat parameter layout
// [theta_nu..., eta, theta_g...].
// ---------------------------------------------------------------------------

enum class BackgroundKind { Constant, Trig, Spline };
enum class KernelKind { Exponential, Gamma };

struct ModelSpec {
  BackgroundKind background = BackgroundKind::Constant;
  KernelKind kernel = KernelKind::Exponential;
  int trig_terms = 2;          // 2: nu1 + nu2 sin, 3: + nu3 cos
  double period = 0.0;         // trig / spline
  std::vector<double> knots;   // spline

  int background_dim() const;
  int kernel_dim() const { return kernel == KernelKind::Gamma ? 2 : 1; }
  int dim() const { return background_dim() + 1 + kernel_dim(); }
  std::vector<std::string> param_names() const;

  HawkesParams make_params(std::span<const double> theta) const;
  std::vector<double> flatten(const HawkesParams& params) const;
  ModelSpec with_kernel(KernelKind k) const;
};

ModelSpec model_spec_of(const HawkesParams& params);

// ---------------------------------------------------------------------------
// Config (de)serialisation.  Keys: background.kind, background.params, eta,
// kernel.kind, kernel.params, period, knots.
// ---------------------------------------------------------------------------

std::string params_to_json(const HawkesParams& params);
HawkesParams params_from_json(const std::string& text);
std::string model_spec_to_json(const ModelSpec& spec);
ModelSpec model_spec_from_json(const std::string& text);

}  // namespace hawkesnn
