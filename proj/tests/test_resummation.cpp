#include "doctest.h"

#include <cmath>

#include "sea/errors.hpp"
#include "sea/resummation.hpp"

using namespace sea;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

std::vector<BigRational> geometric(int len) { return std::vector<BigRational>(len, BigRational(1)); }

std::vector<BigRational> exponential(int len) {
  std::vector<BigRational> c;
  for (int k = 0; k < len; ++k) c.emplace_back(mpz_class(1), factorial(k));
  return c;
}

using V = std::vector<BigRational>;

}  // namespace

TEST_CASE("Pade order parsing") {
  CHECK(parse_pade_order("15/14") == PadeOrder{15, 14});
  CHECK(to_string(PadeOrder{21, 20}) == "21/20");
  CHECK(code_of([] { parse_pade_order("15"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pade_order("a/b"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_pade_order("-1/2"); }) == ErrorCode::ParseError);
}

TEST_CASE("geometric series") {
  const auto p = pade(geometric(4), 0, 1);
  CHECK(p.numerator == V{1});
  CHECK(p.denominator == V{1, -1});
  CHECK(pade_eval(p, 0.5) == doctest::Approx(2.0));
  CHECK(pade_eval(p, 0.0) == 1.0);
  CHECK(code_of([&] { pade_eval(p, 1.0); }) == ErrorCode::PoleProximity);
  CHECK(pade_signs(p, BigRational(2)) == std::pair{1, -1});
}

TEST_CASE("constant series") {
  const V c{BigRational(7, 3), 0, 0, 0, 0};
  CHECK(pade(c, 2, 0).numerator == V{BigRational(7, 3), 0, 0});
  CHECK(code_of([&] { pade(c, 2, 2); }) == ErrorCode::SingularPadeSystem);
  const auto p = pade_reducing(c, 2, 2);
  CHECK(p.n == 0);
  CHECK(pade_eval(p, 0.9) == doctest::Approx(7.0 / 3.0));
}

TEST_CASE("exponential [2/2]") {
  const auto p = pade(exponential(5), 2, 2);
  CHECK(p.numerator == V{1, BigRational(1, 2), BigRational(1, 12)});
  CHECK(p.denominator == V{1, BigRational(-1, 2), BigRational(1, 12)});
  CHECK(taylor_coefficients(p, 4) == exponential(5));
  CHECK(taylor_coefficients(p, 5)[5] != exponential(6)[5]);

  std::vector<double> d;
  for (const auto& c : exponential(5)) d.push_back(c.to_double());
  CHECK(pade_value_numeric(d, 2, 2, 1.0) == doctest::Approx(pade_eval(p, 1.0)).epsilon(1e-13));
  CHECK(pade_eval(p, 1.0) == doctest::Approx(19.0 / 7.0));
  CHECK(code_of([&] { pade(exponential(4), 2, 2); }) == ErrorCode::OrderExceeded);
}

TEST_CASE("numeric Pade rank deficiency") {
  const std::vector<double> d{2.0, 0.0, 0.0, 0.0, 0.0};
  CHECK(code_of([&] { pade_value_numeric(d, 2, 2, 0.5); }) == ErrorCode::SingularPadeSystem);
}

TEST_CASE("approximants of Hulthen levels") {
  const auto s = hulthen_energy_series(2, 1, 30);
  const auto p = pade(s.coeffs.coeffs(), 15, 14);
  CHECK(std::abs(pade_eval(p, 0.3767388)) < 1e-7);
  CHECK(pade_eval(p, 0.0) == doctest::Approx(-0.25));
  CHECK(taylor_coefficients(p, 29) == std::vector<BigRational>(s.coeffs.coeffs().begin(),
                                                               s.coeffs.coeffs().begin() + 30));
}

TEST_CASE("critical screening") {
  const auto c10 = critical_lambda(1, 0, 30, {15, 14}, {14, 14});
  CHECK(c10.lambda_c == 2.0);
  CHECK(c10.uncertainty == 0.0);
  CHECK(c10.pade_used == "closed-form");

  const auto c21 = critical_lambda(2, 1, 30, {15, 14}, {14, 14});
  CHECK(std::abs(c21.lambda_c - 0.3767388) <= 5e-7);
  CHECK(c21.uncertainty < 1e-6);
  CHECK(c21.pade_used == "[15/14],[14/14]");
  CHECK(c21.approximants.size() == 2);

  const auto c32 = critical_lambda(3, 2, 30, {15, 14}, {14, 14});
  CHECK(std::abs(c32.lambda_c - 0.1576540) <= 5e-7);

  // pair stability through n = 5
  for (int n = 2; n <= 5; ++n)
    for (int l = 1; l < n; ++l) {
      const auto c = critical_lambda(n, l, 30, {15, 14}, {14, 14});
      CHECK(std::abs(c.root_first - c.root_second) < 1e-5);
    }
}

TEST_CASE("critical screening errors") {
  EnergySeries never;
  never.family = "hulthen";
  never.n = 2;
  never.l = 1;
  never.coeffs = ScalarSeries(std::vector<BigRational>(4, BigRational(-1)));
  CHECK(code_of([&] { critical_lambda(never, {1, 1}, {2, 1}); }) == ErrorCode::NoSignChange);
  CHECK(code_of([&] { critical_lambda(never, {3, 1}, {2, 1}); }) == ErrorCode::OrderExceeded);
  CHECK(code_of([] { critical_lambda(anharmonic_energy_series(0, 4), {2, 2}, {2, 1}); }) ==
        ErrorCode::InvalidFamily);
}

TEST_CASE("energy reconstruction") {
  const auto a = anharmonic_energy_series(0, 41);
  const auto at0 = reconstruct_energy(a, 0.0, {21, 20}, {20, 20});
  CHECK(at0.value == 1.0);
  CHECK(at0.uncertainty == 0.0);

  const auto sm = reconstruct_energy(a, 0.125, {21, 20}, {20, 20});
  CHECK(sm.uncertainty / sm.value < 1e-3);

  const auto h = reconstruct_energy(hulthen_energy_series(1, 0, 30), 1.0, {15, 14}, {14, 14});
  CHECK(h.value == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(h.uncertainty < 1e-14);
  CHECK(code_of([&] { reconstruct_energy(a, 0.1, {30, 30}, {20, 20}); }) == ErrorCode::OrderExceeded);
}
