#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ptp/discretize.hpp"
#include "ptp/eig.hpp"
#include "ptp/shooting.hpp"

using namespace ptp;

namespace {

Hamiltonian ho() {
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(ShiftedPower{{1, 0}, {0, 0}, 2});
  return h;
}

}  // namespace

TEST_CASE("shoot_residual: small at eigenvalues, large between") {
  auto c = Contour::real_line(-10, 10, 4001);
  CHECK(std::abs(shoot_residual(ho(), c, {1, 0})) <= 1e-6);
  CHECK(std::abs(shoot_residual(ho(), c, {2, 0})) >= 1e-2);
}

TEST_CASE("shoot_residual: box level") {
  Hamiltonian free;
  free.mass = 0.5;
  auto c = Contour::real_line(0, M_PI, 2001);
  CHECK(std::abs(shoot_residual(free, c, {1, 0})) <= 1e-6);
  CHECK(std::abs(shoot_residual(free, c, {4, 0})) <= 1e-6);
}

TEST_CASE("shoot_find refines FD seeds for the HO") {
  auto c = Contour::real_line(-10, 10, 3000);
  auto op = discretize(ho(), c);
  auto seeds = eig_complex_tridiag(op, 3);
  auto s = shoot_find(ho(), c, seeds, 3);
  REQUIRE(s.eigenvalues.size() == 3);
  const double exact[] = {1, 3, 5};
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(s.eigenvalues[k] - Complex{exact[k], 0}) <= 1e-8);
  CHECK(s.method == "shoot");
}

TEST_CASE("shoot_find on the shifted-line oscillator hits 2n+1") {
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(ShiftedPower{{1, 0}, {0, 1}, 2});
  auto c = Contour::shifted_line(-12, 12, -1, 4000);
  auto op = discretize(h, c);
  auto seeds = eig_complex_tridiag(op, 4);
  auto s = shoot_find(h, c, seeds, 4);
  REQUIRE(s.eigenvalues.size() == 4);
  const double exact[] = {1, 3, 5, 7};
  for (int k = 0; k < 4; ++k)
    CHECK(std::abs(s.eigenvalues[k] - Complex{exact[k], 0}) <= 1e-6);
}

TEST_CASE("shoot_find never fabricates a low level from a bad seed") {
  auto c = Contour::real_line(-10, 10, 3000);
  const Complex seeds[] = {{100, 0}};
  try {
    auto s = shoot_find(ho(), c, seeds, 1);
    // If something converged it must be a high level near the seed
    // (possibly truncation-shifted), never an invented low one.
    REQUIRE(s.eigenvalues.size() == 1);
    CHECK(s.eigenvalues[0].real() >= 20.0);
    CHECK(std::abs(shoot_residual(ho(), c, s.eigenvalues[0])) <= 1e-6);
  } catch (const SpectrumIncompleteError&) {
    // Acceptable: the seed simply found no root.
  }
}

TEST_CASE("shoot_find reports incomplete spectra") {
  auto c = Contour::real_line(-10, 10, 3000);
  const Complex seeds[] = {{1.0, 0}};
  CHECK_THROWS_AS(shoot_find(ho(), c, seeds, 3), SpectrumIncompleteError);
}
