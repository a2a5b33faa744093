#include "nonarch/piecewise_linear.hpp"

#include <algorithm>

namespace nonarch {

namespace {

bool in_closure(const LogInterval& d, const Rational& x) {
  ExtendedRational e(x);
  return d.lo <= e && e <= d.hi;
}

Rational anchor_point(const LogInterval& d) {
  if (d.lo.is_finite() && ExtendedRational(0) < d.lo) return d.lo.value();
  if (d.hi.is_finite() && d.hi < ExtendedRational(0)) return d.hi.value();
  return 0;
}

// Candidate x positions of a binary operation: both knot sets plus finite domain ends.
std::vector<Rational> merged_positions(const LogInterval& d, const PiecewiseLinear& a, const PiecewiseLinear& b) {
  std::vector<Rational> xs;
  for (const auto* f : {&a, &b}) {
    for (const auto& k : f->knots()) {
      if (in_closure(d, k.x)) xs.push_back(k.x);
    }
  }
  if (d.lo.is_finite()) xs.push_back(d.lo.value());
  if (d.hi.is_finite()) xs.push_back(d.hi.value());
  if (xs.empty()) xs.push_back(anchor_point(d));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

Rational slope_left_of(const PiecewiseLinear& f, const Rational& x) {
  const auto& k = f.knots();
  if (x <= k.front().x) return f.left_slope();
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (x <= k[i].x) return (k[i].y - k[i - 1].y) / (k[i].x - k[i - 1].x);
  }
  return f.right_slope();
}

template <typename Op>
PiecewiseLinear pointwise(const PiecewiseLinear& a, const PiecewiseLinear& b, Op op) {
  LogInterval d = a.domain().intersect(b.domain());
  if (d.empty()) throw Error(ErrorCode::ValidationError, "piecewise-linear domains do not overlap");
  auto xs = merged_positions(d, a, b);
  std::vector<Knot> pts;
  for (const auto& x : xs) pts.push_back({x, op(a(x), b(x))});
  Rational left = op(slope_left_of(a, xs.front()), slope_left_of(b, xs.front()));
  Rational right = op(a.slope_right_of(xs.back()), b.slope_right_of(xs.back()));
  // Slopes combine like values for the linear operations used here.
  return PiecewiseLinear::from_points(d, std::move(pts), left, right);
}

}  // namespace

PiecewiseLinear PiecewiseLinear::linear(const Rational& slope, const Rational& intercept, const LogInterval& domain) {
  Rational x = anchor_point(domain);
  return from_points(domain, {{x, Rational(slope * x + intercept)}}, slope, slope);
}

PiecewiseLinear PiecewiseLinear::from_points(const LogInterval& domain, std::vector<Knot> points,
                                             const Rational& left_slope, const Rational& right_slope) {
  if (points.empty()) throw std::invalid_argument("piecewise-linear function needs at least one point");
  // s[0] left of points[0], s[i] between points[i-1] and points[i], s[n] right of the last point.
  std::size_t n = points.size();
  std::vector<Rational> s(n + 1);
  s[0] = left_slope;
  s[n] = right_slope;
  for (std::size_t i = 1; i < n; ++i) s[i] = (points[i].y - points[i - 1].y) / (points[i].x - points[i - 1].x);

  // Points at or beyond a finite domain end carry no slope change inside the domain.
  std::size_t first = 0;
  while (first < n && ExtendedRational(points[first].x) <= domain.lo) ++first;
  std::size_t last = first;
  while (last < n && ExtendedRational(points[last].x) < domain.hi) ++last;

  PiecewiseLinear out;
  out.domain_ = domain;
  out.left_slope_ = s[first];
  out.right_slope_ = s[last];
  for (std::size_t i = first; i < last; ++i) {
    if (s[i] != s[i + 1]) out.knots_.push_back(points[i]);
  }
  if (out.knots_.empty()) {
    const Knot& ref = first < n ? points[first] : points[n - 1];
    Rational x = anchor_point(domain);
    out.knots_.push_back({x, Rational(ref.y + s[first] * (x - ref.x))});
  }
  return out;
}

Rational PiecewiseLinear::operator()(const Rational& rho) const {
  if (!in_closure(domain_, rho)) {
    throw Error(ErrorCode::OutsideReliableWindow, "rho = " + to_string(rho) + " outside " + domain_.to_string());
  }
  const auto& k = knots_;
  if (rho <= k.front().x) return k.front().y + left_slope_ * (rho - k.front().x);
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (rho <= k[i].x) {
      return k[i - 1].y + (k[i].y - k[i - 1].y) * (rho - k[i - 1].x) / (k[i].x - k[i - 1].x);
    }
  }
  return k.back().y + right_slope_ * (rho - k.back().x);
}

Rational PiecewiseLinear::slope_right_of(const Rational& rho) const {
  const auto& k = knots_;
  if (rho < k.front().x) return left_slope_;
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (rho < k[i].x) return (k[i].y - k[i - 1].y) / (k[i].x - k[i - 1].x);
  }
  return right_slope_;
}

Rational PiecewiseLinear::asymptotic_slope() const {
  if (!domain_.hi.is_pos_inf()) throw Error(ErrorCode::ValidationError, "domain is bounded above");
  return right_slope_;
}

ExtendedRational PiecewiseLinear::sup() const {
  if (domain_.hi.is_pos_inf() && right_slope_ > 0) return ExtendedRational::pos_inf();
  if (domain_.lo.is_neg_inf() && left_slope_ < 0) return ExtendedRational::pos_inf();
  ExtendedRational best = ExtendedRational::neg_inf();
  for (const auto& k : knots_) best = max(best, ExtendedRational(k.y));
  if (domain_.lo.is_finite()) best = max(best, ExtendedRational((*this)(domain_.lo.value())));
  if (domain_.hi.is_finite()) best = max(best, ExtendedRational((*this)(domain_.hi.value())));
  return best;
}

ExtendedRational PiecewiseLinear::inf() const { return -((-*this).sup()); }

std::vector<Rational> PiecewiseLinear::breakpoints() const {
  std::vector<Rational> out;
  if (knots_.size() == 1 && left_slope_ == right_slope_) return out;
  for (const auto& k : knots_) out.push_back(k.x);
  return out;
}

PiecewiseLinear PiecewiseLinear::restrict(const LogInterval& domain) const {
  LogInterval d = domain_.intersect(domain);
  if (d.empty()) throw Error(ErrorCode::ValidationError, "restriction to an empty domain");
  std::vector<Knot> pts;
  for (const auto& k : knots_) pts.push_back(k);
  return from_points(d, std::move(pts), left_slope_, right_slope_);
}

PiecewiseLinear operator+(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

PiecewiseLinear operator-(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

PiecewiseLinear operator*(const Rational& s, const PiecewiseLinear& a) {
  std::vector<Knot> pts;
  for (const auto& k : a.knots_) pts.push_back({k.x, Rational(s * k.y)});
  return PiecewiseLinear::from_points(a.domain_, std::move(pts), Rational(s * a.left_slope_),
                                      Rational(s * a.right_slope_));
}

PiecewiseLinear max(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  LogInterval d = a.domain().intersect(b.domain());
  if (d.empty()) throw Error(ErrorCode::ValidationError, "piecewise-linear domains do not overlap");
  auto xs = merged_positions(d, a, b);
  auto diff = [&](const Rational& x) { return Rational(a(x) - b(x)); };

  // Insert crossings between consecutive positions and on the two rays.
  std::vector<Rational> all = xs;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    Rational d0 = diff(xs[i - 1]), d1 = diff(xs[i]);
    if (sgn(d0) * sgn(d1) < 0) all.push_back(xs[i - 1] + d0 / (d0 - d1) * (xs[i] - xs[i - 1]));
  }
  if (d.lo.is_neg_inf()) {
    Rational s = slope_left_of(a, xs.front()) - slope_left_of(b, xs.front());
    Rational d0 = diff(xs.front());
    if (s != 0 && sgn(d0) * sgn(s) > 0) all.push_back(xs.front() - d0 / s);
  }
  if (d.hi.is_pos_inf()) {
    Rational s = a.slope_right_of(xs.back()) - b.slope_right_of(xs.back());
    Rational d0 = diff(xs.back());
    if (s != 0 && sgn(d0) * sgn(s) < 0) all.push_back(xs.back() - d0 / s);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<Knot> pts;
  for (const auto& x : all) pts.push_back({x, std::max(a(x), b(x))});
  const Rational& x0 = all.front();
  const Rational& xn = all.back();
  Rational dl = diff(x0), dr = diff(xn);
  Rational la = slope_left_of(a, x0), lb = slope_left_of(b, x0);
  Rational ra = a.slope_right_of(xn), rb = b.slope_right_of(xn);
  Rational left = dl > 0 ? la : (dl < 0 ? lb : std::min(la, lb));
  Rational right = dr > 0 ? ra : (dr < 0 ? rb : std::max(ra, rb));
  return PiecewiseLinear::from_points(d, std::move(pts), left, right);
}

PiecewiseLinear PiecewiseLinear::positive_part() const { return max(*this, constant(Rational(0), domain_)); }

}  // namespace nonarch
