#include "kerrspin/closed_forms.hpp"

#include <cmath>

#include "kerrspin/errors.hpp"

namespace kerrspin::closed_form {

RadialFallGenerators radial_fall(const GravitationalSource& source, double r) {
  const GeometryScalars s = metric_scalars(source, r, kEquator);
  if (!(s.f > 0.0 && s.delta > 0.0)) throw DomainError("closed forms require r > rs");
  const double rs = source.rs();
  const double a = source.a();
  const double r4 = r * r * r * r;
  const double sqrt_f = std::sqrt(s.f);
  const double a_oo = s.a_over_omega;
  const double infall_speed = std::sqrt(rs / r * (1.0 + a * a / (r * r)));

  RadialFallGenerators g{};
  // a (a − 1/ω) = a² − a/ω
  g.lambda01 = rs * rs / (2.0 * s.delta * r4) * (a * a - a_oo) * std::sqrt(s.delta / s.f);
  g.lambda03 = a * rs / (2.0 * r * r * s.f * std::sqrt(s.delta)) * infall_speed;
  // a² (1/ω − a) = a (a/ω) − a³
  g.lambda13 = rs * rs / (2.0 * s.delta * r4 * sqrt_f) * (a * a_oo - a * a * a) +
               a * rs * sqrt_f / (s.delta * r);
  // a rs/(ω r) = rs a_oo / r
  g.theta13 = g.lambda13 + a * rs * rs / (2.0 * s.delta * r4 * (s.f + sqrt_f)) *
                               (a * a * s.f + r * r + rs * a_oo / r);
  return g;
}

CircularGenerators circular(const GravitationalSource& source, double r, OrbitSense sense) {
  const CircularConstants c = circular_constants(source, r, sense);
  const GeometryScalars s = metric_scalars(source, r, kEquator);
  const double rs = source.rs();
  const double a = source.a();
  const double K = c.K;
  const double J = c.J;
  const double r3 = r * r * r;
  const double r4 = r3 * r;
  const double sqrt_f = std::sqrt(s.f);
  const double a_oo = s.a_over_omega;

  // a (J − K/ω + aK + fJr/rs)
  const double boost_bracket = a * J - K * a_oo + a * a * K + a * s.f * J * r / rs;
  // a² (K/ω − J)
  const double drag_bracket = a * K * a_oo - a * a * J;
  // (a rs/(Δ r)) (K + fJr/(a rs)) = (a rs K + f J r)/(Δ r)
  const double orbital = (a * rs * K + s.f * J * r) / (s.delta * r);

  CircularGenerators g{};
  g.lambda01 = rs * rs / (2.0 * r4 * std::sqrt(s.delta * s.f)) * boost_bracket;
  g.lambda13 = rs * rs / (2.0 * s.delta * r4 * sqrt_f) * drag_bracket -
               orbital * (a * a * rs / (2.0 * r3 * sqrt_f) - sqrt_f);
  g.theta13 = rs * rs * sqrt_f / (2.0 * r4 * s.delta * (K + sqrt_f)) * boost_bracket *
                  (-a * K / s.f + a * K + J) +
              g.lambda13;
  return g;
}

}  // namespace kerrspin::closed_form
