#include <cmath>
#include <random>

#include "doctest.h"
#include "polariton/two_mode.hpp"

using namespace polariton;
using two_mode::TwoModeParams;

TEST_CASE("trk_D") {
  CHECK(two_mode::trk_D(0.2, 1.0) == doctest::Approx(0.04));
  CHECK(two_mode::trk_D(0.3, 1.5) == doctest::Approx(0.06));
  CHECK_THROWS_AS(two_mode::trk_D(0.1, 0.0), UnstableHamiltonian);
}

TEST_CASE("validate flags unstable parameter sets") {
  TwoModeParams p;
  p.lambda = 0.6;  // D = 0, 4 lambda^2 > w_a w_b
  CHECK_THROWS_AS(p.validate(), UnstableHamiltonian);
  p.lambda = 0.0;
  p.u = -0.3;
  CHECK_THROWS_AS(p.validate(), UnstableHamiltonian);
  p.u = 0.0;
  p.eta = 0.3;
  CHECK_THROWS_AS(p.validate(), UnstableHamiltonian);
}

TEST_CASE("polariton frequencies and populations under the sum rule") {
  TwoModeParams p;
  p.lambda = 0.2;
  p.D = two_mode::trk_D(p.lambda, p.omega_b);
  const auto [wu, wl] = two_mode::polariton_frequencies(p);
  CHECK(wu == doctest::Approx(1.21980).epsilon(1e-5));
  CHECK(wl == doctest::Approx(0.81980).epsilon(1e-5));
  const auto [nu, nl] = two_mode::populations(p);
  CHECK(nu == doctest::Approx(0.00990).epsilon(2e-3));
  CHECK(nl == doctest::Approx(nu).epsilon(1e-12));

  p.lambda = 0.1;
  p.D = two_mode::trk_D(p.lambda, p.omega_b);
  const auto [wu2, wl2] = two_mode::polariton_frequencies(p);
  CHECK(wu2 == doctest::Approx(1.10499).epsilon(1e-5));
  CHECK(wl2 == doctest::Approx(0.90499).epsilon(1e-5));
  const auto [nu2, nl2] = two_mode::populations(p);
  CHECK(nu2 == doctest::Approx(0.0024945).epsilon(1e-4));
  CHECK(std::abs(nu2 - nl2) < 1e-14);
}

TEST_CASE("populations without the diamagnetic term") {
  TwoModeParams p;
  p.lambda = 0.2;  // D = 0
  const auto [nu, nl] = two_mode::populations(p);
  CHECK(nu == doctest::Approx(0.00709).epsilon(2e-3));
  CHECK(nl == doctest::Approx(0.01640).epsilon(2e-3));
  CHECK(nl > nu);
}

TEST_CASE("mixing angle conventions") {
  TwoModeParams p;
  p.lambda = 0.2;
  p.D = 0.04;
  const double theta = two_mode::mixing_angle(p);
  CHECK(theta < 0.0);
  CHECK(theta > -M_PI / 2.0);
  CHECK(std::cos(2.0 * theta) == doctest::Approx(0.19612).epsilon(1e-4));

  TwoModeParams q;  // degenerate: lambda = 0, resonant
  CHECK_THROWS_AS(two_mode::mixing_angle(q), DegenerateSpectrum);
}

TEST_CASE("sum rule gives equal populations on a grid") {
  for (int i = 1; i <= 15; ++i)
    for (int j = 0; j <= 10; ++j) {
      TwoModeParams p;
      p.lambda = 0.45 * i / 15.0;
      p.omega_a = 0.5 + 1.5 * j / 10.0;
      p.D = two_mode::trk_D(p.lambda, p.omega_b);
      const auto [nu, nl] = two_mode::populations(p);
      REQUIRE(std::abs(nu - nl) <= 1e-12);
    }
}

TEST_CASE("sign classification: resonance is case (i)") {
  TwoModeParams p;
  p.lambda = 0.2;
  p.D = 0.1;  // above lambda^2 / w_b = 0.04
  auto c = two_mode::classify_sign(p);
  CHECK(c.sign_case == two_mode::SignCase::CaseI);
  CHECK(c.predicted_sign == 1);
  const auto [nu, nl] = two_mode::populations(p);
  CHECK(nu > nl);

  p.D = 0.01;  // below the sum-rule value
  c = two_mode::classify_sign(p);
  CHECK(c.predicted_sign == -1);
  const auto [nu2, nl2] = two_mode::populations(p);
  CHECK(nu2 < nl2);
}

TEST_CASE("sign classification: strong coupling above threshold is case (ii)") {
  TwoModeParams p;
  p.omega_a = 0.5;
  p.omega_b = 1.0;
  // lambda_max^2 = w_b (w_b - w_a)^2 / (16 w_a) = 0.03125
  const double lambda_max = std::sqrt(1.0 * 0.25 / 8.0);
  p.lambda = 1.2 * lambda_max;
  p.D = 0.1;
  const auto c = two_mode::classify_sign(p);
  CHECK(c.lambda_max == doctest::Approx(lambda_max));
  CHECK(c.sign_case == two_mode::SignCase::CaseII);
  CHECK(std::isnan(c.D_max));
}

TEST_CASE("sign classification: weak coupling below D_max is case (iii)") {
  TwoModeParams p;
  p.omega_a = 0.5;
  p.omega_b = 1.0;
  p.lambda = 0.1;
  const auto bound = two_mode::d_max_lower_bound(p.omega_a, p.omega_b, p.lambda);
  p.D = 0.5 * two_mode::trk_D(p.lambda, p.omega_b);
  const auto c = two_mode::classify_sign(p);
  CHECK(c.sign_case == two_mode::SignCase::CaseIII);
  CHECK(c.D_max >= bound);
  CHECK(c.D_minus == doctest::Approx(c.D_max));
  CHECK(c.D_plus >= c.D_minus);
  CHECK(c.predicted_sign == -1);
  const auto [nu, nl] = two_mode::populations(p);
  CHECK(nu < nl);
}

TEST_CASE("classify_sign requires eta = u = 0") {
  TwoModeParams p;
  p.lambda = 0.1;
  p.D = 0.02;
  p.eta = 0.01;
  CHECK_THROWS_AS(two_mode::classify_sign(p), InvalidModel);
}

TEST_CASE("predicted sign matches the computed populations at random points") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  while (checked < 500) {
    TwoModeParams p;
    p.omega_a = 0.4 + 1.6 * unit(rng);
    p.lambda = 0.4 * unit(rng);
    p.D = 0.3 * unit(rng);
    if (std::abs(p.D - p.lambda * p.lambda / p.omega_b) < 1e-6) continue;
    try {
      p.validate();
    } catch (const UnstableHamiltonian&) {
      continue;
    }
    const auto c = two_mode::classify_sign(p);
    if (c.sign_case == two_mode::SignCase::Outside) continue;
    const auto [nu, nl] = two_mode::populations(p);
    const int actual = nu > nl ? 1 : (nu < nl ? -1 : 0);
    REQUIRE(actual == c.predicted_sign);
    ++checked;
  }
}

TEST_CASE("equal_population_u balances the populations off resonance") {
  const double wa = 0.8, wb = 1.0, lambda = 0.15, D = 0.05, eta = 0.01;
  const double u = two_mode::equal_population_u(wa, wb, lambda, D, eta);
  TwoModeParams p{wa, wb, lambda, D, eta, u};
  const auto [nu, nl] = two_mode::populations(p);
  CHECK(std::abs(nu - nl) < 1e-12);

  // sum rule with eta = 0 needs no correction
  CHECK(two_mode::equal_population_u(1.0, 1.0, 0.2, 0.04, 0.0) ==
        doctest::Approx(0.0));
}
