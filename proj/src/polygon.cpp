#include "nonarch/polygon.hpp"

#include <algorithm>

namespace nonarch {

namespace {

std::vector<PolygonPoint> support_points(const LaurentApprox& f, const Prime& p) {
  std::vector<PolygonPoint> pts;
  for (const auto& [n, c] : f.coefficients()) pts.push_back({n, -vp(c, p).value()});
  return pts;
}

// Cross product sign of (b - a) x (c - a); > 0 means c lies above the line ab.
Rational turn(const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
  return Rational(b.n - a.n) * (c.height - a.height) - (b.height - a.height) * Rational(c.n - a.n);
}

void require_in_window(const LaurentApprox& f, const LogValue& rho, const Prime& p) {
  if (f.exact()) return;
  LogInterval w = reliable_window(f, p);
  bool ok = rho.is_neg_inf() ? (!w.empty() && w.lo.is_neg_inf()) : w.contains(rho);
  if (!ok) {
    throw Error(ErrorCode::OutsideReliableWindow, "rho = " + to_string(rho) + " outside " + w.to_string());
  }
}

void require_in_window(const LaurentApprox& f, const LogInterval& window, const Prime& p) {
  if (f.exact()) return;
  LogInterval w = reliable_window(f, p);
  if (!w.contains(window)) {
    throw Error(ErrorCode::OutsideReliableWindow, "window " + window.to_string() + " outside " + w.to_string());
  }
}

std::vector<CriticalRadius> hull_radii(const NewtonPolygon& np) {
  std::vector<CriticalRadius> out;
  for (std::size_t i = 1; i < np.hull.size(); ++i) {
    const auto& a = np.hull[i - 1];
    const auto& b = np.hull[i];
    long delta = b.n - a.n;
    out.push_back({Rational((a.height - b.height) / delta), delta});
  }
  return out;
}

// A rational point of a non-empty interval.
Rational interior_point(const LogInterval& w) {
  if (w.lo.is_finite() && w.hi.is_finite()) return (w.lo.value() + w.hi.value()) / 2;
  if (w.lo.is_finite()) return w.lo.value() + 1;
  if (w.hi.is_finite()) return w.hi.value() - 1;
  return 0;
}

}  // namespace

NewtonPolygon newton_polygon(const LaurentApprox& f, const Prime& p) {
  NewtonPolygon np;
  np.valid_window = reliable_window(f, p);
  auto pts = support_points(f, p);
  for (const auto& q : pts) {
    while (np.hull.size() >= 2 && turn(np.hull[np.hull.size() - 2], np.hull.back(), q) >= 0) np.hull.pop_back();
    np.hull.push_back(q);
  }
  std::size_t j = 0;
  for (const auto& q : pts) {
    while (j < np.hull.size() && np.hull[j].n < q.n) ++j;
    if (j < np.hull.size() && np.hull[j].n == q.n) continue;
    if (j > 0 && j < np.hull.size() && turn(np.hull[j - 1], np.hull[j], q) == 0) np.collinear.push_back(q);
  }
  return np;
}

LogInterval reliable_window(const LaurentApprox& f, const Prime& p) {
  if (f.exact()) return LogInterval::everything();
  if (!f.tail_bound() || f.coefficients().empty()) return LogInterval::empty_interval();
  const TailBound& t = *f.tail_bound();
  long m = f.n_hi() + 1;
  // Tail line T(rho) = -alpha + m(rho - beta); stored line n beats it iff rho < rho_n.
  Rational hi;
  bool first = true;
  for (const auto& q : support_points(f, p)) {
    Rational rho_n = (q.height + t.alpha + m * t.beta) / (m - q.n);
    hi = first ? rho_n : std::max(hi, rho_n);
    first = false;
  }
  hi = std::min(hi, t.beta);
  return {ExtendedRational::neg_inf(), ExtendedRational(hi), false, false};
}

LogValue tail_log_norm(const LaurentApprox& f, const LogValue& rho) {
  if (f.exact()) return LogValue::neg_inf();
  if (!f.tail_bound() || rho >= LogValue(f.tail_bound()->beta)) return LogValue::pos_inf();
  if (rho.is_neg_inf()) return LogValue::neg_inf();
  const TailBound& t = *f.tail_bound();
  return LogValue(Rational(-t.alpha + (f.n_hi() + 1) * (rho.value() - t.beta)));
}

LogValue sup_log(const LaurentApprox& f, const LogValue& rho, const Prime& p) {
  if (f.is_zero()) return LogValue::neg_inf();
  require_in_window(f, rho, p);
  if (f.coefficients().empty()) return LogValue::neg_inf();
  if (!rho.is_finite()) {
    const auto& c = f.coefficients();
    long n = rho.is_neg_inf() ? c.begin()->first : c.rbegin()->first;
    const Rational& a = rho.is_neg_inf() ? c.begin()->second : c.rbegin()->second;
    if (n == 0) return abs_log(a, p);
    return (n > 0) == rho.is_pos_inf() ? LogValue::pos_inf() : LogValue::neg_inf();
  }
  LogValue best = LogValue::neg_inf();
  for (const auto& q : support_points(f, p)) best = max(best, LogValue(Rational(q.height + q.n * rho.value())));
  return best;
}

Indices indices(const LaurentApprox& f, const LogValue& rho, const Prime& p) {
  if (f.is_zero() || f.coefficients().empty()) throw Error(ErrorCode::ZeroSeries, "indices of the zero series");
  require_in_window(f, rho, p);
  if (rho.is_neg_inf()) {
    long order = f.min_exponent();
    return {std::min(0L, order), order};
  }
  if (rho.is_pos_inf()) {
    long d = f.max_exponent();
    return {d, d};
  }
  LogValue best = sup_log(f, rho, p);
  Indices out{0, 0};
  bool first = true;
  for (const auto& q : support_points(f, p)) {
    if (LogValue(Rational(q.height + q.n * rho.value())) != best) continue;
    if (first) out.k = q.n;
    out.K = q.n;
    first = false;
  }
  return out;
}

std::vector<CriticalRadius> critical_radii(const LaurentApprox& f, const LogInterval& window, const Prime& p) {
  require_in_window(f, window, p);
  std::vector<CriticalRadius> out;
  for (auto& r : hull_radii(newton_polygon(f, p))) {
    if (window.lo <= ExtendedRational(r.rho) && ExtendedRational(r.rho) <= window.hi) out.push_back(std::move(r));
  }
  return out;
}

long count_zeros(const LaurentApprox& f, const LogValue& rho1, const LogValue& rho2, const Prime& p) {
  if (rho2 < rho1) throw Error(ErrorCode::ValidationError, "empty annulus");
  if (f.is_zero()) throw Error(ErrorCode::ZeroSeries, "the zero series vanishes everywhere");
  return indices(f, rho2, p).K - indices(f, rho1, p).k;
}

PiecewiseLinear counting_N(const LaurentApprox& f, const LogValue& rho_min, const Prime& p) {
  if (f.is_zero() || f.coefficients().empty()) throw Error(ErrorCode::ZeroSeries, "counting function of zero");
  if (rho_min.is_pos_inf()) throw Error(ErrorCode::ValidationError, "rho_min = +inf");
  require_in_window(f, rho_min, p);
  LogInterval w = reliable_window(f, p);
  auto radii = hull_radii(newton_polygon(f, p));

  if (rho_min.is_neg_inf()) {
    long slope = f.min_exponent();
    std::vector<Knot> pts;
    Rational value = 0, x = 0;
    for (const auto& r : radii) {
      if (!w.contains(ExtendedRational(r.rho))) break;
      value = pts.empty() ? Rational(slope * r.rho) : Rational(value + slope * (r.rho - x));
      x = r.rho;
      pts.push_back({x, value});
      slope += r.delta;
    }
    if (pts.empty()) return PiecewiseLinear::linear(Rational(f.min_exponent()), Rational(0), w);
    return PiecewiseLinear::from_points(w, std::move(pts), Rational(f.min_exponent()), Rational(slope));
  }

  const Rational& lo = rho_min.value();
  LogInterval domain{rho_min, w.hi, true, w.hi_closed};
  long slope = 0;
  std::vector<Knot> pts{{lo, Rational(0)}};
  for (const auto& r : radii) {
    if (r.rho < lo) continue;
    if (!w.contains(ExtendedRational(r.rho))) break;
    if (r.rho == lo) {
      slope += r.delta;
      continue;
    }
    const Knot& last = pts.back();
    pts.push_back({r.rho, Rational(last.y + slope * (r.rho - last.x))});
    slope += r.delta;
  }
  return PiecewiseLinear::from_points(domain, std::move(pts), Rational(0), Rational(slope));
}

PiecewiseLinear sup_log_function(const LaurentApprox& f, const Prime& p) {
  if (f.is_zero() || f.coefficients().empty()) throw Error(ErrorCode::ZeroSeries, "log-norm of zero is -inf");
  LogInterval w = reliable_window(f, p);
  if (w.empty()) throw Error(ErrorCode::OutsideReliableWindow, "series has an empty reliable window");
  std::vector<Knot> pts;
  for (const auto& r : hull_radii(newton_polygon(f, p))) {
    if (!w.contains(ExtendedRational(r.rho))) continue;
    pts.push_back({r.rho, sup_log(f, r.rho, p).value()});
  }
  if (pts.empty()) {
    Rational x = interior_point(w);
    Rational s(indices(f, x, p).K);
    return PiecewiseLinear::from_points(w, {{x, sup_log(f, x, p).value()}}, s, s);
  }
  Rational left(indices(f, pts.front().x, p).k);
  Rational right(indices(f, pts.back().x, p).K);
  return PiecewiseLinear::from_points(w, std::move(pts), left, right);
}

LogValue injectivity_log_radius(const LaurentApprox& f, const Prime& p) {
  if (!f.is_power_series() || (!f.exact() && f.n_lo() < 0)) {
    throw Error(ErrorCode::ValidationError, "injectivity radius needs a power series");
  }
  LaurentApprox g = sub(f, LaurentApprox::constant(f.coeff(0)));
  if (g.coefficients().empty()) throw Error(ErrorCode::ConstantSeries, "series is constant");
  if (g.min_exponent() >= 2) return LogValue::neg_inf();
  LogInterval w = reliable_window(g, p);
  auto radii = hull_radii(newton_polygon(g, p));
  LogValue r = radii.empty() ? LogValue::pos_inf() : LogValue(radii.front().rho);
  return min(r, w.hi);
}

bool covers_disc(const LaurentApprox& f, const Rational& b, const LogValue& rho, const Prime& p) {
  Rational a0 = f.coeff(0);
  if (b == a0) return true;
  LaurentApprox g = sub(f, LaurentApprox::constant(a0));
  return abs_log(b - a0, p) <= sup_log(g, rho, p);
}

}  // namespace nonarch
