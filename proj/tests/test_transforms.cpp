#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "ptp/discretize.hpp"
#include "ptp/transforms.hpp"

using namespace ptp;

namespace {

PotentialExpr expr_of(std::initializer_list<PotentialTerm> ts) {
  PotentialExpr e;
  for (const auto& t : ts) e.add(t);
  return e;
}

bool close(Complex a, Complex b, double tol = 1e-14) {
  return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("rotate: (x-i)^2 maps to -(y+1)^2") {
  auto t = rotate_term(ShiftedPower{{1, 0}, {0, 1}, 2}, RotationSign::Minus);
  auto& p = std::get<ShiftedPower>(t);
  CHECK(close(p.coef, {-1, 0}));
  CHECK(close(p.shift, {-1, 0}));
  CHECK(p.exponent == 2);
}

TEST_CASE("rotate: -(ix)^3 maps to -y^3 under the minus rotation") {
  auto t = rotate_term(IXPower{1.0, 3.0}, RotationSign::Minus);
  auto& p = std::get<ShiftedPower>(t);
  CHECK(close(p.coef, {-1, 0}));
  CHECK(close(p.shift, {0, 0}));
  CHECK(p.exponent == 3);
}

TEST_CASE("rotate: sech^2 with imaginary shift maps to shifted sec^2") {
  auto t = rotate_term(SechSquared{{-3, 0}, {0, 1}}, RotationSign::Minus);
  auto& p = std::get<SecSquared>(t);
  CHECK(close(p.coef, {-3, 0}));
  CHECK(close(p.shift, {-1, 0}));
}

TEST_CASE("rotate: empty expression stays empty") {
  CHECK(rotate_potential(PotentialExpr{}, RotationSign::Minus).empty());
}

TEST_CASE("rotate: non-integer nu has no branch in the term algebra") {
  CHECK_THROWS_AS(rotate_term(IXPower{1.0, 2.5}, RotationSign::Plus),
                  BranchAmbiguityError);
  CHECK_THROWS_AS(rotate_term(IXPower{1.0, 2.5}, RotationSign::Minus),
                  BranchAmbiguityError);
}

TEST_CASE("rotate round trip reproduces term sets") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  std::uniform_int_distribution<int> expo(-3, 6);
  for (int trial = 0; trial < 100; ++trial) {
    PotentialExpr e;
    for (int j = 0; j < 4; ++j) {
      switch (trial % 3) {
        case 0:
          e.add(ShiftedPower{{uni(rng), uni(rng)}, {uni(rng), uni(rng)},
                             expo(rng)});
          break;
        case 1:
          e.add(SechSquared{{uni(rng), uni(rng)}, {uni(rng), uni(rng)}});
          break;
        default:
          e.add(SecSquared{{uni(rng), uni(rng)}, {uni(rng), uni(rng)}});
      }
    }
    auto back = rotate_potential(rotate_potential(e, RotationSign::Minus),
                                 RotationSign::Plus);
    REQUIRE(back.size() == e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      std::visit(
          [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            const auto& b = std::get<T>(back.terms()[k]);
            CHECK(close(a.coef, b.coef));
            if constexpr (!std::is_same_v<T, IXPower>)
              CHECK(close(a.shift, b.shift));
          },
          e.terms()[k]);
    }
  }
}

TEST_CASE("rotate round trip preserves ix-power evaluation") {
  // The minus rotation rewrites -g(ix)^nu as a plain power, so the round
  // trip restores the function, not the variant.
  PotentialExpr e = expr_of({IXPower{0.7, 3.0}});
  auto back = rotate_potential(rotate_potential(e, RotationSign::Minus),
                               RotationSign::Plus);
  for (double x : {-1.7, -0.4, 0.9, 2.3})
    CHECK(close(back.eval({x, 0}), e.eval({x, 0}), 1e-13));
}

TEST_CASE("eta_series examples") {
  const Complex a[] = {{0, 0}, {0, 0}, {1, 0}};
  auto r = eta_series(a, M_PI / 2);
  CHECK(close(r[2], {-1, 0}, 1e-15));

  const Complex b[] = {{0, 0}, {1, 0}};
  auto s = eta_series(b, M_PI / 2);
  CHECK(close(s[1], {0, -1}, 1e-15));

  const Complex c[] = {{1, 2}, {3, -4}, {0.5, 0}};
  auto t = eta_series(c, 0.0);
  for (int i = 0; i < 3; ++i) CHECK(t[i] == c[i]);
}

TEST_CASE("eta_series agrees with argument rescaling at evaluation level") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uni(-1.5, 1.5);
  for (double beta : {M_PI / 2, -M_PI / 2, 0.3}) {
    std::vector<Complex> coeffs;
    PotentialExpr e;
    for (int n = 0; n < 5; ++n) {
      coeffs.push_back({uni(rng), uni(rng)});
      e.add(ShiftedPower{coeffs.back(), {0, 0}, n});
    }
    auto scaled = eta_series(coeffs, beta);
    PotentialExpr g;
    for (int n = 0; n < 5; ++n) g.add(ShiftedPower{scaled[n], {0, 0}, n});

    for (int k = 0; k < 50; ++k) {
      const double x = uni(rng);
      const Complex lhs = g.eval({x, 0});
      const Complex rhs = e.eval(std::exp(Complex{0, -beta}) * x);
      CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("rotated PT potentials are real on the axis") {
  // Even powers with real coefficients plus odd powers with imaginary
  // coefficients exhaust the PT-symmetric polynomials of the algebra.
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  std::uniform_int_distribution<int> expo(0, 3);
  const auto grid = default_pt_grid();
  for (int trial = 0; trial < 200; ++trial) {
    PotentialExpr e;
    for (int j = 0; j < 3; ++j) {
      const int even = 2 * expo(rng);
      e.add(ShiftedPower{{uni(rng), 0}, {0, 0}, even});
      const int odd = 2 * expo(rng) + 1;
      e.add(ShiftedPower{{0, uni(rng)}, {0, 0}, odd});
    }
    REQUIRE(check_pt_symmetry(e, grid, 1e-9).ok);
    for (auto sign : {RotationSign::Plus, RotationSign::Minus}) {
      auto rot = rotate_potential(e, sign);
      CHECK(check_real_on_axis(rot, grid, 1e-9).ok);
    }
  }
}

TEST_CASE("mass_flip: declared mass-proportional HO coefficient") {
  // V = (m w^2/2) x^2 with m=1, w=2: coefficient 2 declared proportional.
  Hamiltonian h;
  h.mass = 1.0;
  h.potential.add(ShiftedPower{{2, 0}, {0, 0}, 2, MassDependence::Mass});
  auto f = mass_flip(h);
  CHECK(f.mass == -1.0);
  CHECK(close(std::get<ShiftedPower>(f.potential.terms()[0]).coef, {-2, 0}));
}

TEST_CASE("mass_flip is an involution") {
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(ShiftedPower{{1, 0}, {0, 1}, 2, MassDependence::Mass});
  h.potential.add(
      ShiftedPower{{0.3125, 0}, {0, 1}, -2, MassDependence::InverseMass});
  h.potential.add(SechSquared{{-1, 0}, {0, 0}});
  auto hh = mass_flip(mass_flip(h));
  CHECK(hh.mass == h.mass);
  for (std::size_t k = 0; k < h.potential.size(); ++k) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          const auto& b = std::get<T>(hh.potential.terms()[k]);
          CHECK(a.coef == b.coef);
        },
        h.potential.terms()[k]);
  }
}

TEST_CASE("mass_flip: zero potential just flips the mass") {
  Hamiltonian h;
  h.mass = 0.5;
  auto f = mass_flip(h);
  CHECK(f.mass == -0.5);
  CHECK(f.potential.empty());
}

TEST_CASE("mass_flip negates the discretized operator entrywise") {
  // Fully mass-proportional family: both the quadratic and the
  // inverse-square coefficient flip with the mass.
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(ShiftedPower{{1, 0}, {0, 1}, 2, MassDependence::Mass});
  h.potential.add(
      ShiftedPower{{0.3125, 0}, {0, 1}, -2, MassDependence::InverseMass});
  auto c = Contour::shifted_line(-12, 12, -1, 400);
  auto a = discretize(h, c);
  auto b = discretize(mass_flip(h), c);
  REQUIRE(a.dim() == b.dim());
  CHECK(std::abs(a.off + b.off) <= 1e-14);
  for (std::size_t k = 0; k < a.dim(); ++k)
    CHECK(std::abs(a.diag[k] + b.diag[k]) <= 1e-14);
}

TEST_CASE("coupling_flip") {
  auto e = expr_of({SecSquared{{-2, 0}, {0, 0}}});
  auto f = coupling_flip(e, 0);
  CHECK(close(std::get<SecSquared>(f.terms()[0]).coef, {2, 0}));

  auto ff = coupling_flip(f, 0);
  CHECK(close(std::get<SecSquared>(ff.terms()[0]).coef, {-2, 0}));

  CHECK_THROWS_AS(coupling_flip(PotentialExpr{}, 0), IndexOutOfRangeError);
}

TEST_CASE("hermitian_partner: shifted oscillator becomes real") {
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(ShiftedPower{{1, 0}, {0, 1}, 2, MassDependence::Mass});
  h.potential.add(
      ShiftedPower{{0.3125, 0}, {0, 1}, -2, MassDependence::InverseMass});
  auto [partner, diag] = hermitian_partner(h, RotationSign::Minus);
  CHECK(partner.mass == -0.5);
  CHECK(diag.rotated_reality.ok);
  REQUIRE(diag.real_axis_poles.size() == 1);
  CHECK(diag.real_axis_poles[0] == doctest::Approx(-1.0));
  const auto grid = default_pt_grid();
  std::vector<double> away;
  for (double x : grid)
    if (std::abs(x + 1.0) > 0.05) away.push_back(x);
  CHECK(check_real_on_axis(partner.potential, away, 1e-9).ok);
}

TEST_CASE("hermitian_partner: cubic ix term") {
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(IXPower{1.0, 3.0, MassDependence::Mass});
  auto [partner, diag] = hermitian_partner(h, RotationSign::Minus);
  CHECK(partner.mass == -0.5);
  auto& p = std::get<ShiftedPower>(partner.potential.terms()[0]);
  CHECK(close(p.coef, {-1, 0}));  // -g y^3: the rotated coefficient survives
  CHECK(p.exponent == 3);
}

TEST_CASE("hermitian_partner: zero potential") {
  Hamiltonian h;
  h.mass = 1.0;
  auto [partner, diag] = hermitian_partner(h, RotationSign::Minus);
  CHECK(partner.mass == -1.0);
  CHECK(partner.potential.empty());
  CHECK(diag.rotated_reality.ok);
}

TEST_CASE("hermitian_partner rejects non-PT input") {
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(ShiftedPower{{1, 0}, {0, 0}, 3});
  CHECK_THROWS_AS(hermitian_partner(h, RotationSign::Minus),
                  NotPTSymmetricError);
}
