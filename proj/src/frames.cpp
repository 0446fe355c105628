#include "kerrspin/frames.hpp"

#include <cmath>
#include <functional>

#include <Eigen/LU>

#include "kerrspin/errors.hpp"

namespace kerrspin {

namespace {

// Central differences at h, h/2, h/4 combined by two Richardson steps (error O(h⁶)).
Matrix4 richardson_derivative(const std::function<Matrix4(double)>& fn, double x, double h) {
  const auto central = [&](double step) -> Matrix4 {
    return (fn(x + step) - fn(x - step)) / (2.0 * step);
  };
  const Matrix4 d1 = central(h);
  const Matrix4 d2 = central(0.5 * h);
  const Matrix4 d4 = central(0.25 * h);
  const Matrix4 r12 = (4.0 * d2 - d1) / 3.0;
  const Matrix4 r24 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r24 - r12) / 15.0;
}

}  // namespace

Tetrad tetrad(const GravitationalSource& source, double r, double theta) {
  const GeometryScalars s = metric_scalars(source, r, theta);
  if (!(s.w_squared > 0.0)) {
    throw DomainError("hovering tetrad undefined on or inside the stationary limit surface");
  }
  if (!(s.delta > 0.0)) throw DomainError("hovering tetrad undefined where Delta <= 0");
  const double sin_t = std::sin(theta);
  if (sin_t == 0.0) throw DomainError("hovering tetrad undefined on the axis");

  const double rho = std::sqrt(s.rho2);
  const double sqrt_delta = std::sqrt(s.delta);

  Tetrad frame;
  frame.e_inv = Matrix4::Zero();
  frame.e_inv(0, kT) = 1.0 / s.w;
  frame.e_inv(1, kR) = sqrt_delta / rho;
  frame.e_inv(2, kTheta) = 1.0 / rho;
  frame.e_inv(3, kPhi) = s.w / (sqrt_delta * sin_t);
  frame.e_inv(3, kT) = source.a() * sin_t / sqrt_delta * (s.w - 1.0 / s.w);
  frame.e = frame.e_inv.transpose().inverse();
  return frame;
}

double orthonormality_residual(const Tetrad& frame, const Matrix4& metric) {
  const Matrix4 gram = frame.e_inv * metric * frame.e_inv.transpose();
  return (gram - kEta).cwiseAbs().maxCoeff();
}

ConnectionForms::ConnectionForms() {
  for (auto& m : forms_) m.setZero();
}

std::array<double, 6> ConnectionForms::independent() const {
  return {t01(), phi01(), r03(), theta12(), t13(), phi13()};
}

ConnectionForms connection_forms(const GravitationalSource& source, double r) {
  const GeometryScalars s = metric_scalars(source, r, kEquator);
  if (!(s.f > 0.0)) throw DomainError("connection forms require r > rs");
  if (!(s.delta > 0.0)) throw DomainError("connection forms require Delta > 0");

  const double rs = source.rs();
  const double a = source.a();
  const double r3 = r * r * r;
  const double sqrt_f = std::sqrt(s.f);
  const double sqrt_delta = std::sqrt(s.delta);
  const double lapse_ratio = std::sqrt(s.delta / s.f);

  ConnectionForms w;
  // Boosts: symmetric in the local indices.
  const double t01 = rs / (2.0 * r3) * lapse_ratio;
  const double phi01 = -a * rs / (2.0 * r3) * lapse_ratio;
  const double r03 = a * rs / (2.0 * r * r * s.f * sqrt_delta);
  w(kT, 0, 1) = w(kT, 1, 0) = t01;
  w(kPhi, 0, 1) = w(kPhi, 1, 0) = phi01;
  w(kR, 0, 3) = w(kR, 3, 0) = r03;
  // Rotations: antisymmetric.
  const double theta12 = -sqrt_delta / r;
  const double t13 = -a * rs / (2.0 * r3 * sqrt_f);
  const double phi13 = a * a * rs / (2.0 * r3 * sqrt_f) - sqrt_f;
  w(kTheta, 1, 2) = theta12;
  w(kTheta, 2, 1) = -theta12;
  w(kT, 1, 3) = t13;
  w(kT, 3, 1) = -t13;
  w(kPhi, 1, 3) = phi13;
  w(kPhi, 3, 1) = -phi13;
  return w;
}

std::array<Matrix4, 4> christoffel_numeric(const GravitationalSource& source, double r,
                                           double theta, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const Matrix4 g = metric_tensor(source, r, theta);
  const Matrix4 g_inv = g.inverse();

  // dg[σ](μ, ν) = ∂_σ g_μν; only r and θ derivatives are nonzero.
  std::array<Matrix4, 4> dg;
  for (auto& m : dg) m.setZero();
  dg[kR] = richardson_derivative([&](double rr) { return metric_tensor(source, rr, theta); }, r,
                                 step * r);
  dg[kTheta] = richardson_derivative(
      [&](double th) { return metric_tensor(source, r, th); }, theta, step);

  std::array<Matrix4, 4> gamma;
  for (int lam = 0; lam < 4; ++lam) {
    gamma[lam].setZero();
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        double sum = 0.0;
        for (int sig = 0; sig < 4; ++sig) {
          sum += g_inv(lam, sig) * (dg[mu](sig, nu) + dg[nu](sig, mu) - dg[sig](mu, nu));
        }
        gamma[lam](mu, nu) = 0.5 * sum;
      }
    }
  }
  return gamma;
}

ConnectionForms connection_forms_numeric(const GravitationalSource& source, double r,
                                         double step, double theta) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const Tetrad frame = tetrad(source, r, theta);
  const auto gamma = christoffel_numeric(source, r, theta, step);

  // de[μ](b, ν) = ∂_μ e_b^ν
  std::array<Matrix4, 4> de;
  for (auto& m : de) m.setZero();
  de[kR] = richardson_derivative([&](double rr) { return tetrad(source, rr, theta).e_inv; }, r,
                                 step * r);
  de[kTheta] = richardson_derivative(
      [&](double th) { return tetrad(source, r, th).e_inv; }, theta, step);

  ConnectionForms w;
  for (int mu = 0; mu < 4; ++mu) {
    // cov(b, ν) = ∇_μ e_b^ν = ∂_μ e_b^ν + Γ^ν_{μλ} e_b^λ
    Matrix4 cov = de[mu];
    for (int b = 0; b < 4; ++b) {
      for (int nu = 0; nu < 4; ++nu) {
        double sum = 0.0;
        for (int lam = 0; lam < 4; ++lam) sum += gamma[nu](mu, lam) * frame.e_inv(b, lam);
        cov(b, nu) += sum;
      }
    }
    const Matrix4 forms = frame.e * cov.transpose();  // (a, b) = e^a_ν ∇_μ e_b^ν
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) w(mu, a, b) = forms(a, b);
    }
  }
  return w;
}

}  // namespace kerrspin
