#include "pw/states.hpp"

#include <cmath>

#include "detail/json_io.hpp"
#include "pw/errors.hpp"

namespace pw {

FockState1::FockState1(TemporalPulse shape) : shape_(std::move(shape)) {
  const double n = norm(shape_);
  if (std::abs(n - 1.0) > 1e-9) throw DomainError("single-photon shape must have unit norm");
}

FockState1 FockState1::normalized(const TemporalPulse& shape) {
  const double n = norm(shape);
  if (!(n > 0.0)) throw DomainError("cannot normalize the zero pulse");
  return FockState1(shape.scaled(1.0 / n), Unchecked{});
}

FockState1 FockState1::unchecked(TemporalPulse shape) { return FockState1(std::move(shape), Unchecked{}); }

CoherentContState::CoherentContState(Complex alpha, TemporalPulse shape)
    : alpha_(alpha), shape_(std::move(shape)) {
  if (std::abs(std::abs(alpha_) - 1.0) > 1e-12) throw DomainError("coherent amplitude must satisfy |alpha| = 1");
  if (std::abs(norm(shape_) - 1.0) > 1e-9) throw DomainError("coherent shape must have unit norm");
}

CoherentContState CoherentContState::from_phase(double theta, TemporalPulse shape) {
  return {std::polar(1.0, theta), std::move(shape)};
}

PhotonGaussianState::PhotonGaussianState(TemporalPulse minus, TemporalPulse plus, TwoTimeCovariance gaussian_part)
    : minus_(std::move(minus)), plus_(std::move(plus)), gaussian_(std::move(gaussian_part)) {}

Complex mean_amplitude(const FockState1&) { return {0.0, 0.0}; }

Complex mean_amplitude(const CoherentContState& s) {
  return s.alpha() * inner_product(s.shape(), s.shape());
}

double photon_number(const FockState1& s) { return inner_product(s.shape(), s.shape()).real(); }

double photon_number(const CoherentContState& s) {
  return std::norm(s.alpha()) * inner_product(s.shape(), s.shape()).real();
}

Complex normal_ordered_moment(const FockState1& s, const TemporalPulse& zeta, const TemporalPulse& chi) {
  return inner_product(zeta, s.shape()) * inner_product(s.shape(), chi);
}

Complex coherent_characteristic(const CoherentContState& s, const TemporalPulse& mu) {
  const TemporalPulse eta = s.amplitude_pulse();
  const Complex cross = inner_product(eta, mu);
  const double mu_sq = inner_product(mu, mu).real();
  return std::exp(-0.5 * mu_sq + kI * (cross + std::conj(cross)));
}

Complex coherent_characteristic(const CoherentContState& s, const SpectralPulse& mu) {
  const SpectralPulse eta = to_frequency(s.amplitude_pulse());
  const Complex cross = spectral_inner_product(eta, mu);
  const double mu_sq = spectral_inner_product(mu, mu).real();
  return std::exp(-0.5 * mu_sq + kI * (cross + std::conj(cross)));
}

std::string state_to_json(const AnyState& state) {
  using detail::Json;
  Json j;
  if (const auto* f = std::get_if<FockState1>(&state)) {
    j = {{"kind", "fock1"}, {"shape", detail::pulse_to_json(f->shape())}};
  } else if (const auto* c = std::get_if<CoherentContState>(&state)) {
    j = {{"kind", "coherent"}, {"shape", detail::pulse_to_json(c->shape())}, {"alpha", detail::complex_to_json(c->alpha())}};
  } else {
    const auto& g = std::get<PhotonGaussianState>(state);
    j = {{"kind", "photon_gaussian"},
         {"shape", {{"minus", detail::pulse_to_json(g.minus())}, {"plus", detail::pulse_to_json(g.plus())}}},
         {"gaussian", detail::covariance_to_json(g.gaussian_part())}};
  }
  return j.dump(2);
}

AnyState state_from_json(const std::string& text) {
  using detail::Json;
  Json j;
  try {
    j = Json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "fock1") return FockState1(detail::pulse_from_json(j.at("shape")));
    if (kind == "coherent") {
      return CoherentContState(detail::complex_from_json(j.at("alpha")), detail::pulse_from_json(j.at("shape")));
    }
    if (kind == "photon_gaussian") {
      const Json& shape = j.at("shape");
      return PhotonGaussianState(detail::pulse_from_json(shape.at("minus")), detail::pulse_from_json(shape.at("plus")),
                                 detail::covariance_from_json(j.at("gaussian")));
    }
    throw DomainError("unknown state kind '" + kind + "'");
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed state document: ") + e.what());
  }
}

}  // namespace pw
