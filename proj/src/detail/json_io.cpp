#include "detail/json_io.hpp"

#include "pw/errors.hpp"

namespace pw::detail {

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_object()) throw DomainError("expected a number or {\"re\", \"im\"} object");
  return {j.value("re", 0.0), j.value("im", 0.0)};
}

Json pulse_to_json(const TemporalPulse& p) {
  if (p.is_analytic()) {
    Json terms = Json::array();
    for (const ExpTerm& t : p.terms()) {
      terms.push_back({{"amplitude", complex_to_json(t.amplitude)}, {"rate", complex_to_json(t.rate)}, {"power", t.power}});
    }
    return Json{{"terms", terms}};
  }
  const SampledSignal& s = *p.samples();
  Json re = Json::array(), im = Json::array();
  for (const Complex& v : s.values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return Json{{"samples", {{"start", s.start}, {"step", s.step}, {"re", re}, {"im", im}}}};
}

TemporalPulse pulse_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("pulse must be a JSON object");
  if (j.contains("type")) {
    if (j.at("type") != "exp") throw DomainError("unknown pulse type " + j.at("type").dump());
    return make_exp_pulse(j.at("rate").get<double>());
  }
  if (j.contains("terms")) {
    std::vector<ExpTerm> terms;
    for (const Json& t : j.at("terms")) {
      terms.push_back({complex_from_json(t.at("amplitude")), complex_from_json(t.at("rate")), t.value("power", 0)});
    }
    return TemporalPulse(std::move(terms));
  }
  if (j.contains("samples")) {
    const Json& s = j.at("samples");
    SampledSignal out;
    out.start = s.at("start").get<double>();
    out.step = s.at("step").get<double>();
    const auto re = s.at("re").get<std::vector<double>>();
    const auto im = s.at("im").get<std::vector<double>>();
    if (re.size() != im.size()) throw DomainError("sample re/im arrays differ in length");
    for (std::size_t i = 0; i < re.size(); ++i) out.values.emplace_back(re[i], im[i]);
    return TemporalPulse::from_samples(std::move(out));
  }
  throw DomainError("pulse needs \"type\", \"terms\" or \"samples\"");
}

Json covariance_to_json(const TwoTimeCovariance& cov) {
  Json delta = Json::array();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) delta.push_back(complex_to_json(cov.delta_coeff()(r, c)));
  }
  Json sep = Json::array();
  for (const SeparableTerm& s : cov.separable()) {
    sep.push_back({{"row", s.row}, {"col", s.col}, {"f", pulse_to_json(s.f)}, {"h", pulse_to_json(s.h)}});
  }
  Json stat = Json::array();
  for (const StationaryExpTerm& s : cov.stationary()) {
    stat.push_back({{"row", s.row},
                    {"col", s.col},
                    {"c_plus", complex_to_json(s.c_plus)},
                    {"c_minus", complex_to_json(s.c_minus)},
                    {"rate", complex_to_json(s.rate)}});
  }
  return Json{{"delta", delta}, {"separable", sep}, {"stationary", stat}};
}

TwoTimeCovariance covariance_from_json(const Json& j) {
  Matrix2c delta = Matrix2c::Zero();
  if (j.contains("delta")) {
    const Json& d = j.at("delta");
    if (!d.is_array() || d.size() != 4) throw DomainError("covariance delta must list 4 entries row-major");
    for (int k = 0; k < 4; ++k) delta(k / 2, k % 2) = complex_from_json(d[static_cast<std::size_t>(k)]);
  }
  std::vector<SeparableTerm> sep;
  for (const Json& s : j.value("separable", Json::array())) {
    sep.push_back({s.at("row").get<int>(), s.at("col").get<int>(), pulse_from_json(s.at("f")), pulse_from_json(s.at("h"))});
  }
  std::vector<StationaryExpTerm> stat;
  for (const Json& s : j.value("stationary", Json::array())) {
    stat.push_back({s.at("row").get<int>(), s.at("col").get<int>(), complex_from_json(s.at("c_plus")),
                    complex_from_json(s.at("c_minus")), complex_from_json(s.at("rate"))});
  }
  return {delta, std::move(sep), std::move(stat)};
}

}  // namespace pw::detail
