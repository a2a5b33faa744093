#include "nonarch/document.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "nonarch/nevanlinna.hpp"
#include "nonarch/polygon.hpp"
#include "nonarch/schnirelman.hpp"
#include "nonarch/weierstrass.hpp"

namespace nonarch {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& message) {
  throw DocumentError(ErrorCode::ValidationError, path, message);
}

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string child(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (!j.is_string()) invalid(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    throw DocumentError(ErrorCode::ParseError, path, "malformed rational '" + j.get<std::string>() + "'");
  }
}

ExtendedRational read_extended(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return ExtendedRational::pos_inf();
    if (s == "-inf") return ExtendedRational::neg_inf();
  }
  return read_rational(j, path);
}

Target read_target(const json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return std::nullopt;
  return read_rational(j, path);
}

long read_long(const json& j, const std::string& path) {
  if (!j.is_number_integer()) invalid(path, "expected an integer");
  return j.get<long>();
}

long read_positive(const json& j, const std::string& path) {
  long v = read_long(j, path);
  if (v <= 0) invalid(path, "expected a positive integer");
  return v;
}

bool read_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) invalid(path, "expected true or false");
  return j.get<bool>();
}

Polynomial read_polynomial(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected a coefficient list");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(read_rational(j[i], child(path, i)));
  return Polynomial(c);
}

LaurentApprox read_series(const json& j, const std::string& path, const Prime& p) {
  if (j.is_array()) return LaurentApprox::from_polynomial(read_polynomial(j, path));
  if (!j.is_object() || !j.contains("coeffs")) invalid(path, "expected a series literal");
  const json& cj = j["coeffs"];
  std::string cpath = child(path, "coeffs");
  if (!cj.is_array()) invalid(cpath, "expected a list of [exponent, rational] pairs");
  LaurentApprox::Coefficients coeffs;
  for (std::size_t i = 0; i < cj.size(); ++i) {
    std::string ip = child(cpath, i);
    if (!cj[i].is_array() || cj[i].size() != 2) invalid(ip, "expected [exponent, rational]");
    long n = read_long(cj[i][0], child(ip, 0));
    if (coeffs.count(n) > 0) invalid(ip, "repeated exponent " + std::to_string(n));
    Rational c = read_rational(cj[i][1], child(ip, 1));
    if (c != 0) coeffs[n] = c;
  }
  bool has_tail = j.contains("tail_bound");
  bool exact = j.contains("exact") ? read_bool(j["exact"], child(path, "exact")) : !has_tail;
  if (exact) {
    if (has_tail) invalid(child(path, "tail_bound"), "an exact series has no tail");
    return LaurentApprox::exact_from(std::move(coeffs));
  }
  if (!j.contains("n_lo") || !j.contains("n_hi")) invalid(path, "a truncated series needs n_lo and n_hi");
  long lo = read_long(j["n_lo"], child(path, "n_lo"));
  long hi = read_long(j["n_hi"], child(path, "n_hi"));
  std::optional<TailBound> tail;
  if (has_tail) {
    const json& t = j["tail_bound"];
    std::string tp = child(path, "tail_bound");
    if (!t.is_array() || t.size() != 2) invalid(tp, "expected [alpha, beta]");
    tail = TailBound{read_rational(t[0], child(tp, 0)), read_rational(t[1], child(tp, 1))};
  }
  try {
    return LaurentApprox::truncated(std::move(coeffs), lo, hi, tail, p);
  } catch (const Error& e) {
    throw DocumentError(e.code(), path, e.what());
  }
}

ojson extended_json(const ExtendedRational& x) { return to_string(x); }
ojson target_json(const Target& a) { return to_string(a); }

ojson polynomial_json(const Polynomial& P) {
  ojson out = ojson::array();
  for (const auto& c : P.coefficients()) out.push_back(to_string(c));
  return out;
}

ojson series_json(const LaurentApprox& f) {
  ojson coeffs = ojson::array();
  for (const auto& [n, c] : f.coefficients()) coeffs.push_back({n, to_string(c)});
  ojson out;
  out["coeffs"] = coeffs;
  out["exact"] = f.exact();
  if (!f.exact()) {
    out["n_lo"] = f.n_lo();
    out["n_hi"] = f.n_hi();
    if (f.tail_bound()) out["tail_bound"] = {to_string(f.tail_bound()->alpha), to_string(f.tail_bound()->beta)};
  }
  return out;
}

ojson pl_json(const PiecewiseLinear& f) {
  ojson knots = ojson::array();
  for (const auto& k : f.knots()) knots.push_back({to_string(k.x), to_string(k.y)});
  ojson out;
  out["domain"] = f.domain().to_string();
  out["knots"] = knots;
  out["left_slope"] = to_string(f.left_slope());
  out["right_slope"] = to_string(f.right_slope());
  return out;
}

std::string decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

class Csv {
 public:
  void add(std::size_t request, const std::string& name, const PiecewiseLinear& f) {
    std::vector<Rational> xs;
    const auto& knots = f.knots();
    const LogInterval& d = f.domain();
    Rational first = knots.front().x - 1, last = knots.back().x + 1;
    if (d.lo.is_finite()) first = d.lo.value();
    if (d.hi.is_finite()) last = d.hi.value();
    if (first < knots.front().x) xs.push_back(first);
    for (const auto& k : knots) xs.push_back(k.x);
    if (last > knots.back().x) xs.push_back(last);
    for (const auto& x : xs) {
      out_ << request << ',' << name << ',' << decimal(x) << ',' << decimal(f(x)) << '\n';
    }
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_{"# lossy: decimal rendering of exact rationals\nrequest,function,rho,value\n",
                          std::ios::ate};
};

// Evaluation context of one document.
class Runner {
 public:
  Runner(const json& doc, long precision) : p_(read_prime(doc)), precision_(precision) {
    if (doc.contains("objects")) {
      if (!doc["objects"].is_object()) invalid("objects", "expected an object of named definitions");
      objects_ = &doc["objects"];
    }
  }

  const Prime& prime() const { return p_; }

  ojson run(const json& req, const std::string& path, const std::string& op, std::size_t index, Csv& csv) {
    static const std::map<std::string, ojson (Runner::*)(const json&, const std::string&, std::size_t, Csv&)> ops{
        {"polygon", &Runner::polygon},         {"zeros", &Runner::zeros},   {"factor", &Runner::factor},
        {"divide", &Runner::divide},           {"invert", &Runner::invert}, {"nevanlinna", &Runner::nevanlinna},
        {"smt", &Runner::smt},                 {"abc", &Runner::abc},       {"residue", &Runner::residue},
        {"schnirelman", &Runner::schnirelman}, {"build", &Runner::build}};
    auto it = ops.find(op);
    if (it == ops.end()) invalid(child(path, "op"), "unknown op '" + op + "'");
    return (this->*(it->second))(req, path, index, csv);
  }

 private:
  Prime p_;
  long precision_;
  const json* objects_ = nullptr;

  static Prime read_prime(const json& doc) {
    if (!doc.is_object()) invalid("", "document must be an object");
    if (!doc.contains("p")) invalid("p", "missing prime");
    Rational q = read_rational(doc["p"], "p");
    if (q.get_den() != 1 || q < 2 || !q.get_num().fits_ulong_p()) {
      throw DocumentError(ErrorCode::NotPrime, "p", to_string(q) + " is not prime");
    }
    try {
      return Prime(q.get_num().get_ui());
    } catch (const Error& e) {
      throw DocumentError(e.code(), "p", e.what());
    }
  }

  // A field that is either a declared name or an inline literal.
  std::pair<const json*, std::string> resolve(const json& req, const std::string& path, const std::string& key) const {
    std::string fp = child(path, key);
    if (!req.contains(key)) invalid(fp, "missing field");
    const json& v = req[key];
    if (!v.is_string()) return {&v, fp};
    const std::string& name = v.get_ref<const std::string&>();
    if (objects_ == nullptr || !objects_->contains(name)) invalid(fp, "undeclared object '" + name + "'");
    return {&(*objects_)[name], "objects." + name};
  }

  const json& field(const json& req, const std::string& path, const std::string& key) const {
    if (!req.contains(key)) invalid(child(path, key), "missing field");
    return req[key];
  }

  LaurentApprox series(const json& req, const std::string& path, const std::string& key) const {
    auto [j, jp] = resolve(req, path, key);
    return read_series(*j, jp, p_);
  }

  Polynomial polynomial(const json& req, const std::string& path, const std::string& key) const {
    auto [j, jp] = resolve(req, path, key);
    return read_polynomial(*j, jp);
  }

  MeromorphicPair pair(const json& req, const std::string& path, const std::string& key) const {
    auto [j, jp] = resolve(req, path, key);
    if (j->is_object() && j->contains("num")) {
      if (!j->contains("den")) invalid(jp, "pair needs num and den");
      LaurentApprox num = read_series((*j)["num"], child(jp, "num"), p_);
      LaurentApprox den = read_series((*j)["den"], child(jp, "den"), p_);
      if (den.is_zero()) invalid(child(jp, "den"), "zero denominator");
      return MeromorphicPair::series(std::move(num), std::move(den));
    }
    return MeromorphicPair::series(read_series(*j, jp, p_), LaurentApprox::constant(1));
  }

  Rational rational(const json& req, const std::string& path, const std::string& key) const {
    return read_rational(field(req, path, key), child(path, key));
  }

  Rational rational_or(const json& req, const std::string& path, const std::string& key, const Rational& d) const {
    return req.contains(key) ? rational(req, path, key) : d;
  }

  long precision(const json& req, const std::string& path, const std::string& key) const {
    return req.contains(key) ? read_positive(req[key], child(path, key)) : precision_;
  }

  std::vector<Target> targets(const json& req, const std::string& path) const {
    if (!req.contains("targets")) return {Rational(0), Rational(1), std::nullopt};
    const json& t = req["targets"];
    std::string tp = child(path, "targets");
    if (!t.is_array()) invalid(tp, "expected a list of targets");
    std::vector<Target> out;
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(read_target(t[i], child(tp, i)));
    return out;
  }

  static LogInterval window(const MeromorphicPair& f, const Prime& p) {
    return reliable_window(f.num, p).intersect(reliable_window(f.den, p));
  }

  ojson polygon(const json& req, const std::string& path, std::size_t index, Csv& csv) {
    LaurentApprox f = series(req, path, "f");
    NewtonPolygon np = newton_polygon(f, p_);
    ojson out;
    out["window"] = np.valid_window.to_string();
    ojson hull = ojson::array();
    for (const auto& v : np.hull) hull.push_back({v.n, to_string(v.height)});
    out["hull"] = hull;
    ojson radii = ojson::array();
    for (const auto& r : critical_radii(f, np.valid_window, p_)) {
      radii.push_back({{"rho", to_string(r.rho)}, {"delta", r.delta}});
    }
    out["critical_radii"] = radii;
    PiecewiseLinear s = sup_log_function(f, p_);
    out["sup_log"] = pl_json(s);
    csv.add(index, "sup_log", s);
    if (req.contains("rho")) {
      const json& rs = req["rho"];
      std::string rp = child(path, "rho");
      if (!rs.is_array()) invalid(rp, "expected a list of log-radii");
      ojson at = ojson::array();
      for (std::size_t i = 0; i < rs.size(); ++i) {
        LogValue rho = read_extended(rs[i], child(rp, i));
        Indices ix = indices(f, rho, p_);
        at.push_back({{"rho", to_string(rho)}, {"sup_log", to_string(sup_log(f, rho, p_))}, {"k", ix.k}, {"K", ix.K}});
      }
      out["at"] = at;
    }
    return out;
  }

  ojson zeros(const json& req, const std::string& path, std::size_t, Csv&) {
    LaurentApprox f = series(req, path, "f");
    LogValue r1 = read_extended(field(req, path, "rho1"), child(path, "rho1"));
    LogValue r2 = read_extended(field(req, path, "rho2"), child(path, "rho2"));
    ojson out;
    out["window"] = reliable_window(f, p_).to_string();
    out["count"] = count_zeros(f, r1, r2, p_);
    return out;
  }

  ojson factor(const json& req, const std::string& path, std::size_t, Csv&) {
    LaurentApprox f = series(req, path, "f");
    Rational rho = rational(req, path, "rho");
    Valuation target = req.contains("target") ? read_extended(req["target"], child(path, "target"))
                                              : Valuation(precision_);
    PreparationResult res = prepare(f, rho, target, p_);
    ojson trace = ojson::array();
    for (const auto& t : res.trace) trace.push_back(to_string(t));
    ojson out;
    out["window"] = reliable_window(f, p_).to_string();
    out["d"] = res.d;
    out["P"] = polynomial_json(res.P);
    out["u"] = series_json(res.u);
    out["floor"] = extended_json(res.floor);
    out["delta"] = extended_json(res.delta);
    out["trace"] = trace;
    out["iteration_bound"] = res.iteration_bound;
    return out;
  }

  ojson divide(const json& req, const std::string& path, std::size_t, Csv&) {
    LaurentApprox f = series(req, path, "f");
    Rational rho = rational(req, path, "rho");
    DominantPolynomial P = DominantPolynomial::certify(polynomial(req, path, "P"), rho, p_);
    DivisionResult res = nonarch::divide(f, P, p_);
    ojson out;
    out["window"] = reliable_window(f, p_).to_string();
    out["extremal"] = P.extremal;
    out["q"] = series_json(res.q);
    out["R"] = polynomial_json(res.R);
    out["error"] = extended_json(res.error);
    return out;
  }

  ojson invert(const json& req, const std::string& path, std::size_t, Csv&) {
    LaurentApprox u = series(req, path, "f");
    Rational rho = rational(req, path, "rho");
    ApproxSeries v = invert_unit(u, rho, precision(req, path, "order"), p_);
    ojson out;
    out["window"] = reliable_window(u, p_).to_string();
    out["value"] = series_json(v.value);
    out["error"] = extended_json(v.error);
    return out;
  }

  ojson nevanlinna(const json& req, const std::string& path, std::size_t index, Csv& csv) {
    MeromorphicPair f = pair(req, path, "f");
    std::vector<Target> ts = targets(req, path);
    ojson out;
    out["window"] = window(f, p_).to_string();
    PiecewiseLinear Tinf = charT(f, std::nullopt, p_);
    out["T"] = pl_json(Tinf);
    csv.add(index, "T", Tinf);
    ojson per = ojson::array();
    for (const auto& a : ts) {
      std::string tag = to_string(a);
      PiecewiseLinear m = prox_m(f, a, p_), N = count_N(f, a, p_), N1 = count_N1(f, a, p_);
      FmtCheck fmt = fmt_check(f, a, p_);
      csv.add(index, "m(" + tag + ")", m);
      csv.add(index, "N(" + tag + ")", N);
      ojson e;
      e["a"] = target_json(a);
      e["m"] = pl_json(m);
      e["N"] = pl_json(N);
      e["N1"] = pl_json(N1);
      e["fmt"] = {{"bounded", fmt.bounded}, {"bound", extended_json(fmt.bound)}};
      per.push_back(e);
    }
    out["targets"] = per;
    ojson ds = ojson::array();
    for (const auto& d : defects(f, ts, p_)) {
      ds.push_back({{"a", target_json(d.a)}, {"delta", to_string(d.delta)}, {"theta", to_string(d.theta)}});
    }
    out["defects"] = ds;
    if (f.is_rational()) {
      ojson tr = ojson::array();
      for (const auto& a : totally_ramified_values(f)) tr.push_back(target_json(a));
      out["totally_ramified"] = tr;
    }
    return out;
  }

  ojson smt(const json& req, const std::string& path, std::size_t index, Csv& csv) {
    MeromorphicPair f = pair(req, path, "f");
    SmtReport r = smt_report(f, targets(req, path), p_);
    csv.add(index, "S", r.S);
    ojson out;
    out["window"] = window(f, p_).to_string();
    out["S"] = pl_json(r.S);
    out["sup"] = extended_json(r.sup_S);
    out["holds"] = r.holds;
    out["S_unramified"] = pl_json(r.S_unramified);
    out["holds_unramified"] = r.holds_unramified;
    out["S_truncated"] = pl_json(r.S_truncated);
    out["holds_truncated"] = r.holds_truncated;
    return out;
  }

  ojson abc(const json& req, const std::string& path, std::size_t index, Csv& csv) {
    AbcReport r = abc_check(polynomial(req, path, "f"), polynomial(req, path, "g"), polynomial(req, path, "h"), p_);
    csv.add(index, "lhs", r.lhs);
    csv.add(index, "rhs", r.rhs);
    ojson out;
    out["window"] = LogInterval::everything().to_string();
    out["lhs"] = pl_json(r.lhs);
    out["rhs"] = pl_json(r.rhs);
    out["holds"] = r.holds;
    return out;
  }

  Polynomial denominator(const json& req, const std::string& path) const {
    auto [j, jp] = resolve(req, path, "den");
    if (!j->is_object()) return read_polynomial(*j, jp);
    if (!j->contains("factored")) invalid(jp, "expected a coefficient list or {\"factored\": [[root, multiplicity]]}");
    const json& fs = (*j)["factored"];
    std::string fp = child(jp, "factored");
    if (!fs.is_array()) invalid(fp, "expected a list of [root, multiplicity]");
    std::vector<std::pair<Rational, long>> roots;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      std::string ip = child(fp, i);
      if (!fs[i].is_array() || fs[i].size() != 2) invalid(ip, "expected [root, multiplicity]");
      roots.emplace_back(read_rational(fs[i][0], child(ip, 0)), read_positive(fs[i][1], child(ip, 1)));
    }
    Rational c = j->contains("c") ? read_rational((*j)["c"], child(jp, "c")) : Rational(1);
    return Polynomial::from_roots(c, roots);
  }

  ojson residue(const json& req, const std::string& path, std::size_t, Csv&) {
    Polynomial num = polynomial(req, path, "num");
    Polynomial den = denominator(req, path);
    Rational a = rational_or(req, path, "a", Rational(0));
    Rational rho = rational(req, path, "rho");
    RationalFunctionSplit split = partial_fractions(num, den);
    ojson poles = ojson::array();
    for (const auto& pole : split.poles) {
      ojson principal = ojson::array();
      for (const auto& c : pole.principal) principal.push_back(to_string(c));
      poles.push_back({{"b", to_string(pole.b)}, {"order", pole.order}, {"principal", principal}});
    }
    CertifiedValue circ = circle_residue(num, den, a, rho, precision(req, path, "order"), p_);
    ojson out;
    out["window"] = LogInterval::everything().to_string();
    out["analytic_part"] = polynomial_json(split.analytic_part);
    out["poles"] = poles;
    out["residue_sum"] = to_string(residue_sum(num, den, a, rho, p_));
    out["circle_expansion"] = {{"value", to_string(circ.value)}, {"floor", to_string(circ.floor)}};
    return out;
  }

  ojson schnirelman(const json& req, const std::string& path, std::size_t, Csv&) {
    LaurentApprox f = series(req, path, "f");
    Rational a = rational_or(req, path, "a", Rational(0));
    Rational r = rational_or(req, path, "r", Rational(1));
    long n = read_positive(field(req, path, "n"), child(path, "n"));
    long k = precision(req, path, "k");
    SchnirelmanSum s = schnirelman_sum(f, a, r, static_cast<unsigned long>(n), static_cast<unsigned long>(k), p_);
    ojson out;
    out["window"] = LogInterval::everything().to_string();
    out["value"] = s.value.residue().get_str();
    out["modulus"] = s.value.modulus().get_str();
    out["shift"] = s.shift;
    out["n_too_small"] = s.n_too_small;
    out["integral"] = to_string(integral_series(f, a, abs_log(r, p_).value(), p_));
    return out;
  }

  ojson build(const json& req, const std::string& path, std::size_t, Csv&) {
    auto [j, jp] = resolve(req, path, "zeros");
    if (!j->is_object() || !j->contains("zeros")) invalid(jp, "expected a zero prescription");
    const json& zs = (*j)["zeros"];
    std::string zp = child(jp, "zeros");
    if (!zs.is_array()) invalid(zp, "expected a list of [point, multiplicity]");
    std::vector<ZeroPrescription> zeros;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      std::string ip = child(zp, i);
      if (!zs[i].is_array() || zs[i].size() != 2) invalid(ip, "expected [point, multiplicity]");
      zeros.push_back({read_rational(zs[i][0], child(ip, 0)), read_positive(zs[i][1], child(ip, 1))});
    }
    long m0 = j->contains("m0") ? read_long((*j)["m0"], child(jp, "m0")) : 0;
    if (m0 < 0) invalid(child(jp, "m0"), "expected a nonnegative integer");
    long order = j->contains("order") ? read_positive((*j)["order"], child(jp, "order")) : precision(req, path, "order");
    LaurentApprox f = product_from_zeros(zeros, m0, order, p_);
    ojson out;
    out["window"] = reliable_window(f, p_).to_string();
    out["series"] = series_json(f);
    return out;
  }
};

}  // namespace

json parse_document(const std::string& text) {
  std::vector<std::set<std::string>> keys;
  std::string duplicate;
  auto callback = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        keys.emplace_back();
        break;
      case json::parse_event_t::object_end:
        keys.pop_back();
        break;
      case json::parse_event_t::key:
        if (!keys.back().insert(parsed.get<std::string>()).second && duplicate.empty()) {
          duplicate = parsed.get<std::string>();
        }
        break;
      default:
        break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text, callback);
  } catch (const json::parse_error& e) {
    throw DocumentError(ErrorCode::ParseError, "", e.what());
  }
  if (!duplicate.empty()) throw DocumentError(ErrorCode::ValidationError, duplicate, "duplicate name");
  return doc;
}

RunOutput run_document(const json& doc, const std::optional<std::string>& default_op, std::optional<long> precision) {
  long k = 10;
  if (doc.is_object() && doc.contains("precision")) k = read_positive(doc["precision"], "precision");
  if (precision) {
    if (*precision <= 0) invalid("precision", "expected a positive integer");
    k = *precision;
  }
  Runner runner(doc, k);
  if (!doc.contains("requests") || !doc["requests"].is_array()) invalid("requests", "expected a list of requests");
  const json& reqs = doc["requests"];

  Csv csv;
  ojson results = ojson::array();
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    std::string path = child("requests", i);
    const json& req = reqs[i];
    if (!req.is_object()) invalid(path, "expected an object");
    std::string op;
    if (req.contains("op")) {
      if (!req["op"].is_string()) invalid(child(path, "op"), "expected a string");
      op = req["op"].get<std::string>();
    } else if (default_op) {
      op = *default_op;
    } else {
      invalid(child(path, "op"), "missing field");
    }
    ojson entry;
    entry["index"] = i;
    entry["op"] = op;
    if (req.contains("name")) entry["name"] = req["name"];
    try {
      ojson body = runner.run(req, path, op, i, csv);
      entry["status"] = "ok";
      for (auto& [key, value] : body.items()) entry[key] = value;
    } catch (const DocumentError&) {
      throw;
    } catch (const Error& e) {
      entry["status"] = "error";
      entry["error"] = std::string(e.name());
      entry["message"] = e.what();
    }
    results.push_back(std::move(entry));
  }

  RunOutput out;
  out.report["schema"] = "1";
  out.report["p"] = std::to_string(runner.prime().value());
  out.report["precision"] = k;
  out.report["results"] = std::move(results);
  out.csv = csv.str();
  return out;
}

}  // namespace nonarch
