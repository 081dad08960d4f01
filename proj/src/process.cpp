#include "hawkesnn/process.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>
#include <nlohmann/json.hpp>

namespace hawkesnn {

using json = nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// 3-point Gauss-Legendre on [a, b]; exact for polynomials up to degree 5.
template <typename F>
double gauss3(F&& f, double a, double b) {
  static const double x = std::sqrt(0.6);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  return h * ((5.0 * f(c - h * x) + 8.0 * f(c) + 5.0 * f(c + h * x)) / 9.0);
}

}  // namespace

// --------------------------------------------------------------------------
// Kernels
// --------------------------------------------------------------------------

double kernel_density(const Kernel& k, double t) {
  if (t <= 0.0) return 0.0;
  return std::visit(
      [t](const auto& kk) -> double {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, ExponentialKernel>) {
          return kk.beta * std::exp(-kk.beta * t);
        } else {
          return std::exp(kk.alpha * std::log(kk.beta) +
                          (kk.alpha - 1.0) * std::log(t) - kk.beta * t -
                          std::lgamma(kk.alpha));
        }
      },
      k);
}

double kernel_cdf(const Kernel& k, double t) {
  if (t <= 0.0) return 0.0;
  return std::visit(
      [t](const auto& kk) -> double {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, ExponentialKernel>) {
          return -std::expm1(-kk.beta * t);
        } else {
          return boost::math::gamma_p(kk.alpha, kk.beta * t);
        }
      },
      k);
}

double kernel_mean(const Kernel& k) {
  return std::visit(
      [](const auto& kk) -> double {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, ExponentialKernel>)
          return 1.0 / kk.beta;
        else
          return kk.alpha / kk.beta;
      },
      k);
}

double kernel_density_sup(const Kernel& k) {
  return std::visit(
      [&](const auto& kk) -> double {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, ExponentialKernel>) {
          return kk.beta;
        } else {
          if (kk.alpha < 1.0)
            return std::numeric_limits<double>::infinity();
          if (kk.alpha == 1.0) return kk.beta;
          return kernel_density(k, (kk.alpha - 1.0) / kk.beta);
        }
      },
      k);
}

int kernel_dim(const Kernel& k) {
  return std::holds_alternative<GammaKernel>(k) ? 2 : 1;
}

void validate(const Kernel& k) {
  std::visit(
      [](const auto& kk) {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, ExponentialKernel>) {
          require(std::isfinite(kk.beta) && kk.beta > 0.0,
                  "exponential kernel requires beta > 0");
        } else {
          require(std::isfinite(kk.alpha) && kk.alpha > 0.0 &&
                      std::isfinite(kk.beta) && kk.beta > 0.0,
                  "gamma kernel requires alpha, beta > 0");
        }
      },
      k);
}

// --------------------------------------------------------------------------
// Periodic B-spline basis
// --------------------------------------------------------------------------

PeriodicSplineBasis::PeriodicSplineBasis(std::vector<double> knots,
                                         double period)
    : knots_(std::move(knots)), period_(period) {
  require(period_ > 0.0, "spline period must be positive");
  require(std::is_sorted(knots_.begin(), knots_.end()) &&
              std::adjacent_find(knots_.begin(), knots_.end()) == knots_.end(),
          "spline knots must be strictly ascending");
  require(static_cast<int>(knots_.size()) >= kOrder + 1,
          "periodic spline needs at least order+1 knots");
  // A trailing knot at `period` is the wrap of the first knot.
  if (std::abs(knots_.back() - (knots_.front() + period_)) < 1e-12)
    knots_.pop_back();
  require(knots_.front() >= 0.0 && knots_.back() < period_,
          "spline knots must lie within one period");
  require(static_cast<int>(knots_.size()) >= kOrder,
          "periodic spline needs at least `order` distinct knots per period");
}

double PeriodicSplineBasis::knot(long i) const {
  const long n = static_cast<long>(knots_.size());
  long q = i / n, r = i % n;
  if (r < 0) {
    r += n;
    --q;
  }
  return knots_[static_cast<std::size_t>(r)] + static_cast<double>(q) * period_;
}

void PeriodicSplineBasis::evaluate(double t, std::span<double> out) const {
  const int n = size();
  require(static_cast<int>(out.size()) == n, "basis output size mismatch");
  std::fill(out.begin(), out.end(), 0.0);

  double u = std::fmod(t, period_);
  if (u < 0.0) u += period_;

  // Index mu with knot(mu) <= u < knot(mu+1).
  long mu = static_cast<long>(std::upper_bound(knots_.begin(), knots_.end(), u) -
                              knots_.begin()) -
            1;  // -1 means u < knots_[0], i.e. span [knot(-1), knot(0))

  // Cox-de Boor triangular scheme: N[r] = B_{mu-p+r}(u), r = 0..p.
  constexpr int p = kOrder - 1;
  double N[kOrder], left[kOrder], right[kOrder];
  N[0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = u - knot(mu + 1 - j);
    right[j] = knot(mu + j) - u;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double tmp = N[r] / (right[r + 1] + left[j - r]);
      N[r] = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    N[j] = saved;
  }
  for (int r = 0; r <= p; ++r) {
    long idx = (mu - p + r) % n;
    if (idx < 0) idx += n;
    out[static_cast<std::size_t>(idx)] += N[r];
  }
}

double PeriodicSplineBasis::combine(double t,
                                    std::span<const double> coeffs) const {
  const int n = size();
  require(static_cast<int>(coeffs.size()) == n, "coefficient size mismatch");
  double w[64];
  require(n <= 64, "spline basis too large");
  evaluate(t, std::span<double>(w, static_cast<std::size_t>(n)));
  double acc = 0.0;
  for (int j = 0; j < n; ++j) acc += coeffs[static_cast<std::size_t>(j)] * w[j];
  return acc;
}

std::vector<double> PeriodicSplineBasis::period_integrals() const {
  // int_R B_j = (knot(j+order) - knot(j)) / order, and the periodic basis
  // function integrates over one period to the same value.
  const int n = size();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    out[static_cast<std::size_t>(j)] = (knot(j + kOrder) - knot(j)) / kOrder;
  return out;
}

std::vector<double> PeriodicSplineBasis::integrals(double t0, double t1) const {
  require(t1 >= t0, "integral bounds out of order");
  const int n = size();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);

  const double whole = std::floor((t1 - t0) / period_);
  if (whole >= 1.0) {
    auto per = period_integrals();
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] += whole * per[static_cast<std::size_t>(j)];
  }
  double a = t0 + whole * period_;
  if (t1 - a < 1e-14) return out;

  // Remaining partial period: Gauss-Legendre per knot span (pieces are
  // cubics, so 3-point rules are exact).
  std::vector<double> w(static_cast<std::size_t>(n));
  // Span boundaries between a and t1.
  long lo = static_cast<long>(std::floor(a / period_)) * n;
  while (knot(lo + 1) <= a) ++lo;
  double left = a;
  while (left < t1 - 1e-14) {
    const double right = std::min(t1, knot(lo + 1));
    for (int j = 0; j < n; ++j) {
      const int jj = j;
      out[static_cast<std::size_t>(j)] += gauss3(
          [&](double u) {
            evaluate(u, std::span<double>(w));
            return w[static_cast<std::size_t>(jj)];
          },
          left, right);
    }
    left = right;
    ++lo;
  }
  return out;
}

// --------------------------------------------------------------------------
// Backgrounds
// --------------------------------------------------------------------------

namespace {

const PeriodicSplineBasis& basis_of(const SplineBackground& sp) {
  thread_local std::vector<double> cached_knots;
  thread_local double cached_period = -1.0;
  thread_local std::optional<PeriodicSplineBasis> basis;
  if (!basis || cached_period != sp.period || cached_knots != sp.knots) {
    basis.emplace(sp.knots, sp.period);
    cached_knots = sp.knots;
    cached_period = sp.period;
  }
  return *basis;
}

}  // namespace

double background_rate(const Background& bg, double t) {
  return std::visit(
      [t](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ConstantBackground>) {
          return b.nu;
        } else if constexpr (std::is_same_v<T, TrigBackground>) {
          const double w = kTwoPi / b.period;
          double v = b.nu1 + b.nu2 * std::sin(w * t);
          if (b.nu3) v += *b.nu3 * std::cos(w * t);
          return v;
        } else {
          return basis_of(b).combine(t, b.coeffs);
        }
      },
      bg);
}

double background_period(const Background& bg) {
  return std::visit(
      [](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ConstantBackground>)
          return 0.0;
        else
          return b.period;
      },
      bg);
}

int background_dim(const Background& bg) {
  return std::visit(
      [](const auto& b) -> int {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ConstantBackground>)
          return 1;
        else if constexpr (std::is_same_v<T, TrigBackground>)
          return b.nu3 ? 3 : 2;
        else
          return static_cast<int>(b.coeffs.size());
      },
      bg);
}

double background_average_rate(const Background& bg) {
  if (const auto* c = std::get_if<ConstantBackground>(&bg)) return c->nu;
  const double period = background_period(bg);
  // 1024-panel composite Simpson over one period.
  const int n = 1024;
  const double h = period / n;
  double acc = background_rate(bg, 0.0) + background_rate(bg, period);
  for (int i = 1; i < n; ++i)
    acc += background_rate(bg, i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * h / 3.0 / period;
}

bool background_positive(const Background& bg) {
  if (const auto* c = std::get_if<ConstantBackground>(&bg)) return c->nu > 0.0;
  if (const auto* tr = std::get_if<TrigBackground>(&bg)) {
    // Exact: min of nu1 + A sin(wt + phi) is nu1 - |A|.
    const double a = std::hypot(tr->nu2, tr->nu3.value_or(0.0));
    return tr->nu1 - a > 0.0;
  }
  const auto& sp = std::get<SplineBackground>(bg);
  // Nonnegative coefficients are sufficient (convex combination).
  if (std::all_of(sp.coeffs.begin(), sp.coeffs.end(),
                  [](double c) { return c > 0.0; }))
    return true;
  const double period = sp.period;
  const int n = 1000;
  for (int i = 0; i <= n; ++i)
    if (background_rate(bg, i * period / n) <= 0.0) return false;
  return true;
}

std::vector<double> background_basis_integrals(const Background& bg, double t0,
                                               double t1) {
  require(t1 >= t0, "integral bounds out of order");
  return std::visit(
      [&](const auto& b) -> std::vector<double> {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ConstantBackground>) {
          return {t1 - t0};
        } else if constexpr (std::is_same_v<T, TrigBackground>) {
          const double w = kTwoPi / b.period;
          std::vector<double> out{t1 - t0,
                                  (std::cos(w * t0) - std::cos(w * t1)) / w};
          if (b.nu3) out.push_back((std::sin(w * t1) - std::sin(w * t0)) / w);
          return out;
        } else {
          return basis_of(b).integrals(t0, t1);
        }
      },
      bg);
}

double background_integral(const Background& bg, double t0, double t1) {
  const auto basis = background_basis_integrals(bg, t0, t1);
  const auto coeffs = background_coeffs(bg);
  double acc = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) acc += basis[i] * coeffs[i];
  return acc;
}

void background_features(const Background& bg, double t,
                         std::span<double> out) {
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ConstantBackground>) {
          out[0] = 1.0;
        } else if constexpr (std::is_same_v<T, TrigBackground>) {
          const double w = kTwoPi / b.period;
          out[0] = 1.0;
          out[1] = std::sin(w * t);
          if (b.nu3) out[2] = std::cos(w * t);
        } else {
          basis_of(b).evaluate(t, out);
        }
      },
      bg);
}

std::vector<double> background_coeffs(const Background& bg) {
  return std::visit(
      [](const auto& b) -> std::vector<double> {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ConstantBackground>) {
          return {b.nu};
        } else if constexpr (std::is_same_v<T, TrigBackground>) {
          std::vector<double> out{b.nu1, b.nu2};
          if (b.nu3) out.push_back(*b.nu3);
          return out;
        } else {
          return b.coeffs;
        }
      },
      bg);
}

Background background_with_coeffs(const Background& bg,
                                  std::span<const double> coeffs) {
  Background out = bg;
  std::visit(
      [&](auto& b) {
        using T = std::decay_t<decltype(b)>;
        require(static_cast<int>(coeffs.size()) == background_dim(bg),
                "background coefficient size mismatch");
        if constexpr (std::is_same_v<T, ConstantBackground>) {
          b.nu = coeffs[0];
        } else if constexpr (std::is_same_v<T, TrigBackground>) {
          b.nu1 = coeffs[0];
          b.nu2 = coeffs[1];
          if (b.nu3) b.nu3 = coeffs[2];
        } else {
          b.coeffs.assign(coeffs.begin(), coeffs.end());
        }
      },
      out);
  return out;
}

void validate(const Background& bg) {
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ConstantBackground>) {
          require(std::isfinite(b.nu) && b.nu > 0.0,
                  "constant background requires nu > 0");
        } else if constexpr (std::is_same_v<T, TrigBackground>) {
          require(b.period > 0.0, "trig background requires period > 0");
          require(std::isfinite(b.nu1) && std::isfinite(b.nu2) &&
                      (!b.nu3 || std::isfinite(*b.nu3)),
                  "trig background coefficients must be finite");
        } else {
          require(b.coeffs.size() > 0, "spline background needs coefficients");
          basis_of(b);  // validates knots/period
          require(static_cast<int>(b.coeffs.size()) ==
                      basis_of(b).size(),
                  "spline background needs one coefficient per knot");
        }
        require(background_positive(bg),
                "background rate must be positive over one period");
      },
      bg);
}

// --------------------------------------------------------------------------
// HawkesParams / EventPath
// --------------------------------------------------------------------------

int HawkesParams::dim() const {
  return background_dim(background) + 1 + kernel_dim(kernel);
}

void HawkesParams::validate() const {
  hawkesnn::validate(background);
  hawkesnn::validate(kernel);
  require(std::isfinite(eta) && eta >= 0.0 && eta < 1.0,
          "branching ratio must lie in [0, 1)");
}

void EventPath::validate() const {
  require(horizon > 0.0, "event path horizon must be positive");
  double prev = 0.0;
  for (double t : times) {
    require(std::isfinite(t) && t > prev && t <= horizon,
            "event times must be strictly increasing in (0, horizon]");
    prev = t;
  }
}

double intensity(const HawkesParams& params, const EventPath& path, double t) {
  double acc = background_rate(params.background, t);
  if (params.eta > 0.0) {
    for (double tau : path.times) {
      if (tau >= t) break;
      acc += params.eta * kernel_density(params.kernel, t - tau);
    }
  }
  return acc;
}

double background_volume(const Background& bg, double t0, double t1) {
  require(t1 > t0, "background volume requires t1 > t0");
  return background_rate(bg, 0.5 * (t0 + t1)) * (t1 - t0);
}

double stationary_rate(const HawkesParams& params) {
  require(params.eta < 1.0, "stationary rate requires eta < 1");
  return background_average_rate(params.background) / (1.0 - params.eta);
}

// --------------------------------------------------------------------------
// ModelSpec
// --------------------------------------------------------------------------

int ModelSpec::background_dim() const {
  switch (background) {
    case BackgroundKind::Constant:
      return 1;
    case BackgroundKind::Trig:
      return trig_terms;
    case BackgroundKind::Spline: {
      int n = static_cast<int>(knots.size());
      if (n >= 2 && std::abs(knots.back() - (knots.front() + period)) < 1e-12)
        --n;
      return n;
    }
  }
  return 0;
}

std::vector<std::string> ModelSpec::param_names() const {
  std::vector<std::string> names;
  const int bd = background_dim();
  if (background == BackgroundKind::Constant) {
    names.push_back("nu");
  } else {
    for (int i = 1; i <= bd; ++i) names.push_back("nu" + std::to_string(i));
  }
  names.push_back("eta");
  if (kernel == KernelKind::Gamma) names.push_back("alpha");
  names.push_back("beta");
  return names;
}

HawkesParams ModelSpec::make_params(std::span<const double> theta) const {
  require(static_cast<int>(theta.size()) == dim(),
          "parameter vector has wrong dimension");
  const int bd = background_dim();
  HawkesParams p;
  switch (background) {
    case BackgroundKind::Constant:
      p.background = ConstantBackground{theta[0]};
      break;
    case BackgroundKind::Trig: {
      TrigBackground tr;
      tr.nu1 = theta[0];
      tr.nu2 = theta[1];
      if (trig_terms == 3) tr.nu3 = theta[2];
      tr.period = period;
      p.background = tr;
      break;
    }
    case BackgroundKind::Spline: {
      SplineBackground sp;
      sp.knots = knots;
      sp.period = period;
      sp.coeffs.assign(theta.begin(), theta.begin() + bd);
      p.background = sp;
      break;
    }
  }
  p.eta = theta[static_cast<std::size_t>(bd)];
  if (kernel == KernelKind::Gamma)
    p.kernel = GammaKernel{theta[static_cast<std::size_t>(bd) + 1],
                           theta[static_cast<std::size_t>(bd) + 2]};
  else
    p.kernel = ExponentialKernel{theta[static_cast<std::size_t>(bd) + 1]};
  return p;
}

std::vector<double> ModelSpec::flatten(const HawkesParams& params) const {
  std::vector<double> theta = hawkesnn::background_coeffs(params.background);
  theta.push_back(params.eta);
  if (const auto* g = std::get_if<GammaKernel>(&params.kernel)) {
    theta.push_back(g->alpha);
    theta.push_back(g->beta);
  } else {
    theta.push_back(std::get<ExponentialKernel>(params.kernel).beta);
  }
  require(static_cast<int>(theta.size()) == dim(),
          "parameters do not match model spec");
  return theta;
}

ModelSpec ModelSpec::with_kernel(KernelKind k) const {
  ModelSpec out = *this;
  out.kernel = k;
  return out;
}

ModelSpec model_spec_of(const HawkesParams& params) {
  ModelSpec spec;
  if (std::holds_alternative<ConstantBackground>(params.background)) {
    spec.background = BackgroundKind::Constant;
  } else if (const auto* tr = std::get_if<TrigBackground>(&params.background)) {
    spec.background = BackgroundKind::Trig;
    spec.trig_terms = tr->nu3 ? 3 : 2;
    spec.period = tr->period;
  } else {
    const auto& sp = std::get<SplineBackground>(params.background);
    spec.background = BackgroundKind::Spline;
    spec.period = sp.period;
    spec.knots = sp.knots;
  }
  spec.kernel = std::holds_alternative<GammaKernel>(params.kernel)
                    ? KernelKind::Gamma
                    : KernelKind::Exponential;
  return spec;
}

// --------------------------------------------------------------------------
// JSON
// --------------------------------------------------------------------------

namespace {

std::string background_kind_name(const Background& bg) {
  if (std::holds_alternative<ConstantBackground>(bg)) return "constant";
  if (std::holds_alternative<TrigBackground>(bg)) return "trig";
  return "spline";
}

}  // namespace

std::string params_to_json(const HawkesParams& params) {
  json j;
  j["background"]["kind"] = background_kind_name(params.background);
  j["background"]["params"] = background_coeffs(params.background);
  if (double p = background_period(params.background); p > 0.0)
    j["background"]["period"] = p;
  if (const auto* sp = std::get_if<SplineBackground>(&params.background))
    j["background"]["knots"] = sp->knots;
  j["eta"] = params.eta;
  if (const auto* g = std::get_if<GammaKernel>(&params.kernel)) {
    j["kernel"]["kind"] = "gamma";
    j["kernel"]["params"] = {g->alpha, g->beta};
  } else {
    j["kernel"]["kind"] = "exponential";
    j["kernel"]["params"] = {std::get<ExponentialKernel>(params.kernel).beta};
  }
  return j.dump(2);
}

HawkesParams params_from_json(const std::string& text) {
  json j = json::parse(text);
  HawkesParams p;
  const auto& jb = j.at("background");
  const std::string kind = jb.at("kind").get<std::string>();
  const auto coeffs = jb.at("params").get<std::vector<double>>();
  // `period` and `knots` are accepted both nested and at the top level.
  auto lookup = [&](const char* key) -> json {
    if (jb.contains(key)) return jb.at(key);
    if (j.contains(key)) return j.at(key);
    return json();
  };
  if (kind == "constant") {
    require(coeffs.size() == 1, "constant background takes one parameter");
    p.background = ConstantBackground{coeffs[0]};
  } else if (kind == "trig") {
    require(coeffs.size() == 2 || coeffs.size() == 3,
            "trig background takes two or three parameters");
    TrigBackground tr;
    tr.nu1 = coeffs[0];
    tr.nu2 = coeffs[1];
    if (coeffs.size() == 3) tr.nu3 = coeffs[2];
    tr.period = lookup("period").get<double>();
    p.background = tr;
  } else if (kind == "spline") {
    SplineBackground sp;
    sp.coeffs = coeffs;
    sp.period = lookup("period").get<double>();
    sp.knots = lookup("knots").get<std::vector<double>>();
    p.background = sp;
  } else {
    throw std::invalid_argument("unknown background kind: " + kind);
  }
  p.eta = j.at("eta").get<double>();
  const auto& jk = j.at("kernel");
  const std::string kkind = jk.at("kind").get<std::string>();
  const auto kp = jk.at("params").get<std::vector<double>>();
  if (kkind == "exponential") {
    require(kp.size() == 1, "exponential kernel takes one parameter");
    p.kernel = ExponentialKernel{kp[0]};
  } else if (kkind == "gamma") {
    require(kp.size() == 2, "gamma kernel takes two parameters");
    p.kernel = GammaKernel{kp[0], kp[1]};
  } else {
    throw std::invalid_argument("unknown kernel kind: " + kkind);
  }
  p.validate();
  return p;
}

std::string model_spec_to_json(const ModelSpec& spec) {
  json j;
  switch (spec.background) {
    case BackgroundKind::Constant:
      j["background"]["kind"] = "constant";
      break;
    case BackgroundKind::Trig:
      j["background"]["kind"] = "trig";
      j["background"]["terms"] = spec.trig_terms;
      j["background"]["period"] = spec.period;
      break;
    case BackgroundKind::Spline:
      j["background"]["kind"] = "spline";
      j["background"]["period"] = spec.period;
      j["background"]["knots"] = spec.knots;
      break;
  }
  j["kernel"]["kind"] =
      spec.kernel == KernelKind::Gamma ? "gamma" : "exponential";
  return j.dump(2);
}

ModelSpec model_spec_from_json(const std::string& text) {
  json j = json::parse(text);
  ModelSpec spec;
  const auto& jb = j.at("background");
  const std::string kind = jb.at("kind").get<std::string>();
  if (kind == "constant") {
    spec.background = BackgroundKind::Constant;
  } else if (kind == "trig") {
    spec.background = BackgroundKind::Trig;
    spec.trig_terms = jb.value("terms", 2);
    require(spec.trig_terms == 2 || spec.trig_terms == 3,
            "trig background has two or three terms");
    spec.period = jb.at("period").get<double>();
  } else if (kind == "spline") {
    spec.background = BackgroundKind::Spline;
    spec.period = jb.at("period").get<double>();
    spec.knots = jb.at("knots").get<std::vector<double>>();
  } else {
    throw std::invalid_argument("unknown background kind: " + kind);
  }
  const std::string kkind = j.at("kernel").at("kind").get<std::string>();
  if (kkind == "exponential")
    spec.kernel = KernelKind::Exponential;
  else if (kkind == "gamma")
    spec.kernel = KernelKind::Gamma;
  else
    throw std::invalid_argument("unknown kernel kind: " + kkind);
  return spec;
}

}  // namespace hawkesnn
