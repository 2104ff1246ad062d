#include "doctest.h"

#include "recurrence_oracles.hpp"
#include "sea/engine.hpp"
#include "sea/errors.hpp"

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

const LaurentPoly X = LaurentPoly::monomial(1, 1);

LeadingSuperpotential hydrogen_leading() { return {BigRational(-1), BigRational(1), {}, BigRational(-1)}; }
LeadingSuperpotential oscillator_leading() { return {{}, {}, BigRational(1), BigRational(1)}; }

std::map<int, mpq_class> terms_of(const LaurentPoly& p) {
  std::map<int, mpq_class> out;
  for (const auto& [e, c] : p.terms()) out[e] = c.raw();
  return out;
}

}  // namespace

TEST_CASE("potential coefficients") {
  for (int l = 0; l <= 3; ++l) {
    const auto chain = solve_chain(Hulthen{l}, 1, 1);
    CHECK(potential_coefficient(chain, 0, 0) == LaurentPoly{{-2, l * (l + 1)}, {-1, -2}});
    CHECK(potential_coefficient(chain, 1, 0) == LaurentPoly{{-2, (l + 1) * (l + 2)}, {-1, -2}});
  }
  const auto chain = solve_chain(Anharmonic{}, 0, 3);
  CHECK(potential_coefficient(chain, 0, 2).is_zero());
  CHECK(potential_coefficient(chain, 0, 1) == LaurentPoly::monomial(4, 1));

  const ChainSolution empty(Hulthen{0}, 2, 2);
  CHECK(code_of([&] { potential_coefficient(empty, 1, 0); }) == ErrorCode::ChainIncomplete);
}

TEST_CASE("Hulthen potential expansion uses Bernoulli numbers") {
  const ProblemFamily f = Hulthen{2};
  CHECK(base_potential_coefficient(f, 1) == LaurentPoly(BigRational(1)));
  CHECK(base_potential_coefficient(f, 2) == LaurentPoly::monomial(1, BigRational(-1, 6)));
  CHECK(base_potential_coefficient(f, 3).is_zero());
  CHECK(base_potential_coefficient(f, 4) == LaurentPoly::monomial(3, BigRational(1, 360)));
}

TEST_CASE("leading superpotentials") {
  auto h = solve_leading(Hulthen{0}, 0);
  CHECK(h.polynomial() == LaurentPoly{{0, 1}, {-1, -1}});
  CHECK(h.energy == BigRational(-1));

  auto a = solve_leading(Anharmonic{}, 3);
  CHECK(a.polynomial() == X);
  CHECK(a.energy == BigRational(7));

  auto h3 = solve_leading(Hulthen{1}, 3);
  CHECK(h3.polynomial() == LaurentPoly{{0, BigRational(1, 5)}, {-1, -5}});
  CHECK(h3.energy == BigRational(-1, 25));

  CHECK(code_of([] { solve_leading(Hulthen{-1}, 0); }) == ErrorCode::InvalidFamily);
  CHECK(code_of([] { solve_leading(Anharmonic{}, -1); }) == ErrorCode::InvalidLeading);
}

TEST_CASE("invalid generic families") {
  LeadingSuperpotential both{BigRational(-1), BigRational(1), BigRational(1), BigRational(0)};
  CHECK(code_of([&] { validate_family(GenericPerturbed{both, X, {}}); }) == ErrorCode::InvalidLeading);
  CHECK(code_of([&] {
          validate_family(GenericPerturbed{oscillator_leading(), LaurentPoly::monomial(-1, 1), {}});
        }) == ErrorCode::InvalidFamily);
  CHECK(code_of([&] {
          validate_family(GenericPerturbed{oscillator_leading(), X, LaurentPoly::monomial(2, 2)});
        }) == ErrorCode::InvalidLeading);
  CHECK_NOTHROW(validate_family(GenericPerturbed{oscillator_leading(), X, LaurentPoly::monomial(2, 1)}));
}

TEST_CASE("convolution B") {
  const auto h = solve_chain(Hulthen{2}, 0, 4);
  const BigRational b(3);
  CHECK(convolution_B(h.rung(0), 1).is_zero());
  CHECK(convolution_B(h.rung(0), 4, 2) == b * b / 144);

  const auto a = solve_chain(Anharmonic{}, 0, 2);
  CHECK(convolution_B(a.rung(0), 2, 4) == BigRational(3, 4));
  CHECK(code_of([&] { convolution_B(a.rung(0), 5); }) == ErrorCode::ChainIncomplete);
}

TEST_CASE("single orders") {
  for (int l = 0; l <= 4; ++l) {
    const BigRational b(l + 1);
    const auto chain = solve_chain(Hulthen{l}, 0, 3);
    auto [w2, e2] = solve_order(chain, 0, 2);
    CHECK(w2 == LaurentPoly::monomial(1, -b / 12));
    CHECK(e2 == -b * (BigRational(2) * b + BigRational(1)) / 12);
    auto [w3, e3] = solve_order(chain, 0, 3);
    CHECK(w3.is_zero());
    CHECK(e3.is_zero());
  }
  const auto a = solve_chain(Anharmonic{}, 0, 5);
  auto [w2, e2] = solve_order(a, 0, 2);
  CHECK(w2 == LaurentPoly{{1, BigRational(-21, 16)}, {3, BigRational(-11, 16)}, {5, BigRational(-1, 8)}});
  CHECK(e2 == BigRational(-21, 16));
  CHECK(solve_order(a, 0, 5).second == BigRational(916731, 4096));

  CHECK(code_of([&] { solve_order(a, 0, 0); }) == ErrorCode::OrderExceeded);
  ChainSolution partial(Anharmonic{}, 0, 4);
  Rung leading_only;
  leading_only.leading = a.rung(0).leading;
  leading_only.superpotential.push_back(X);
  leading_only.energy.push_back(BigRational(1));
  leading_only.potential.push_back(LaurentPoly::monomial(2, 1));
  partial.start_rung(leading_only);
  CHECK(code_of([&] { solve_order(partial, 0, 3); }) == ErrorCode::ChainIncomplete);
}

TEST_CASE("whole chains") {
  const auto h = solve_chain(Hulthen{0}, 0, 2);
  CHECK(h.rung(0).energy == ScalarSeries({BigRational(-1), BigRational(1), BigRational(-1, 4)}));
  const auto a = solve_chain(Anharmonic{}, 0, 1);
  CHECK(a.rung(0).energy == ScalarSeries({BigRational(1), BigRational(3, 4)}));
  CHECK(solve_chain(Hulthen{1}, 0, 0).rung(0).energy[0] == BigRational(-1, 4));
  CHECK(code_of([] { solve_chain(Anharmonic{}, -1, 2); }) == ErrorCode::OrderExceeded);
}

TEST_CASE("chains agree with hand-written recurrences") {
  constexpr int K = 12;
  for (int l = 0; l <= 3; ++l) {
    const auto chain = solve_chain(Hulthen{l}, 3, K);
    const auto rec = ref::hulthen(l, 3, K);
    for (int r = 0; r <= 3; ++r)
      for (int k = 1; k <= K; ++k) {
        CHECK(terms_of(chain.rung(r).superpotential[k]) == rec.w[r][k]);
        CHECK(chain.rung(r).energy[k].raw() == rec.eps[r][k]);
      }
  }
  const auto chain = solve_chain(Anharmonic{}, 3, K);
  const auto rec = ref::anharmonic(3, K);
  for (int r = 0; r <= 3; ++r)
    for (int k = 1; k <= K; ++k) {
      CHECK(terms_of(chain.rung(r).superpotential[k]) == rec.w[r][k]);
      CHECK(chain.rung(r).energy[k].raw() == rec.eps[r][k]);
    }
}

TEST_CASE("generic perturbations") {
  // linear shift of the oscillator: exact energy 1 - lambda^2/4
  const auto shifted = solve_chain(GenericPerturbed{oscillator_leading(), X, {}}, 1, 6);
  CHECK(shifted.rung(0).energy ==
        ScalarSeries({BigRational(1), {}, BigRational(-1, 4), {}, {}, {}, {}}));
  CHECK(shifted.rung(1).energy[2] == BigRational(-1, 4));

  // quartic perturbation reproduces the anharmonic family
  const auto quartic =
      solve_chain(GenericPerturbed{oscillator_leading(), LaurentPoly::monomial(4, 1), {}}, 2, 8);
  const auto anh = solve_chain(Anharmonic{}, 2, 8);
  for (int r = 0; r <= 2; ++r) CHECK(quartic.rung(r).energy == anh.rung(r).energy);

  // first-order shift of the hydrogen ground state by lambda x is <x> = 3/2
  const auto stark = solve_chain(GenericPerturbed{hydrogen_leading(), X, {}}, 0, 3);
  CHECK(stark.rung(0).energy[1] == BigRational(3, 2));
  CHECK(stark.rung(0).energy[0] == BigRational(-1));
}

TEST_CASE("Riccati residual") {
  const auto h = solve_chain(Hulthen{1}, 2, 6);
  for (const auto& rung : h.rungs())
    for (const auto& p : riccati_residual(rung.superpotential, rung.potential, rung.energy, 6))
      CHECK(p.is_zero());

  const PolySeries w({X});
  const PolySeries v({LaurentPoly::monomial(2, 1)});
  const ScalarSeries e({BigRational(1)});
  CHECK(riccati_residual(w, v, e, 0)[0].is_zero());

  auto corrupted = h.rung(0).superpotential;
  corrupted[2].add_to(1, BigRational(1, 1000));
  const auto res = riccati_residual(corrupted, h.rung(0).potential, h.rung(0).energy, 6);
  CHECK(res[0].is_zero());
  CHECK(res[1].is_zero());
  CHECK_FALSE(res[2].is_zero());
  CHECK(code_of([&] { riccati_residual(w, v, e, 3); }) == ErrorCode::OrderExceeded);
}

TEST_CASE("chain bookkeeping") {
  const auto chain = solve_chain(Hulthen{0}, 2, 4);
  CHECK(chain.b() == 1);
  CHECK(chain.r_max() == 2);
  CHECK(chain.order() == 4);
  CHECK(chain.rungs_started() == 3);
  CHECK(chain.rung(2).order() == 4);
  CHECK(code_of([&] { chain.rung(3); }) == ErrorCode::ChainIncomplete);
  CHECK(family_name(chain.family()) == "hulthen");
  CHECK(family_b(Anharmonic{}) == 0);
}
