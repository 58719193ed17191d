#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "ptp/json_io.hpp"
#include "ptp/spectrum.hpp"
#include "ptp/svg.hpp"

using namespace ptp;

TEST_CASE("hamiltonian json round trip is byte-stable") {
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(ShiftedPower{{1, 0}, {0, 1}, 2, MassDependence::Mass});
  h.potential.add(
      ShiftedPower{{0.3125, 0}, {0, 1}, -2, MassDependence::InverseMass});
  h.potential.add(IXPower{1.0, 3.0});
  h.potential.add(SechSquared{{-2, 0}, {0, 0.5}});
  h.potential.add(SecSquared{{2, 0}, {0, 0}});

  const std::string once = hamiltonian_to_json(h);
  const Hamiltonian back = hamiltonian_from_json(once);
  const std::string twice = hamiltonian_to_json(back);
  CHECK(once == twice);
  CHECK(back.mass == h.mass);
  REQUIRE(back.potential.size() == h.potential.size());
}

TEST_CASE("hamiltonian json preserves negative zero as plain zero") {
  Hamiltonian h;
  h.mass = 0.5;
  h.potential.add(ShiftedPower{{-1.0, -0.0}, {0, 0}, 2});
  const std::string text = hamiltonian_to_json(h);
  CHECK(text.find("-0.0") == std::string::npos);
  const std::string again = hamiltonian_to_json(hamiltonian_from_json(text));
  CHECK(text == again);
}

TEST_CASE("hamiltonian json rejects malformed input") {
  CHECK_THROWS_AS(hamiltonian_from_json("not json"), SchemaError);
  CHECK_THROWS_AS(hamiltonian_from_json("{}"), SchemaError);
  CHECK_THROWS_AS(hamiltonian_from_json(R"({"mass": 0.5})"), SchemaError);
  CHECK_THROWS_AS(hamiltonian_from_json(R"({"mass": 0, "terms": []})"),
                  SchemaError);
  CHECK_THROWS_AS(
      hamiltonian_from_json(
          R"({"mass": 0.5, "terms": [{"kind": "mystery"}]})"),
      SchemaError);
  CHECK_THROWS_AS(
      hamiltonian_from_json(
          R"({"mass": 0.5, "terms": [{"kind": "shifted_power",
              "coef": [1], "shift": [0, 0], "exp": 2}]})"),
      SchemaError);
  CHECK_THROWS_AS(
      hamiltonian_from_json(
          R"({"mass": 0.5, "terms": [{"kind": "ix_power",
              "coef": 1.0, "nu": 1.0}]})"),
      SchemaError);
}

TEST_CASE("pairing report json carries the fixed field names") {
  Spectrum a, b;
  a.eigenvalues = {{1, 0}, {3, 0}};
  b.eigenvalues = {{1, 0}, {3, 0}};
  a.contour = b.contour = Contour::real_line(-1, 1, 16);
  auto rep = pair_spectra(a, b, 1e-6, PairingMode::Direct);
  const std::string j = pairing_report_to_json(rep);
  for (const char* field :
       {"\"mode\"", "\"pairs\"", "\"unmatched_a\"", "\"unmatched_b\"",
        "\"max_deviation\"", "\"fitted_shift\"", "\"verdict\""})
    CHECK(j.find(field) != std::string::npos);
  CHECK(j.find("\"direct\"") != std::string::npos);
  CHECK(j.find("\"isospectral\"") != std::string::npos);
}

TEST_CASE("spectrum csv has the documented header and 17-digit numbers") {
  Spectrum s;
  s.eigenvalues = {{1.0 / 3.0, 0}};
  s.residuals = {1e-9};
  s.method = "fd";
  s.contour = Contour::shifted_line(-12, 12, -1, 4000);
  const std::string csv = spectrum_to_csv(s);
  CHECK(csv.rfind("index,re,im,residual,method,n_points,contour_kind,"
                  "imag_offset\n", 0) == 0);
  CHECK(csv.find("0.33333333333333331") != std::string::npos);
  CHECK(csv.find(",shifted,") != std::string::npos);
  CHECK(csv.find(",4000,") != std::string::npos);
}

TEST_CASE("svg emission is deterministic and annotates the slope") {
  ConvergenceResult r;
  r.order = 2.03;
  r.table = {{500, 4e-2, 1.0, 1e-4},
             {1000, 2e-2, 1.0, 2.5e-5},
             {2000, 1e-2, 1.0, 6e-6}};
  const std::string one = emit_svg_convergence(r);
  const std::string two = emit_svg_convergence(r);
  CHECK(one == two);
  CHECK(one.find("<polyline") != std::string::npos);
  CHECK(one.find("slope 2.03") != std::string::npos);
}

TEST_CASE("svg emission rejects degenerate tables") {
  ConvergenceResult r;
  CHECK_THROWS_AS(emit_svg_convergence(r), TooFewPointsError);
  r.table = {{500, 4e-2, 1.0, 1e-4}};
  CHECK_THROWS_AS(emit_svg_convergence(r), TooFewPointsError);
}
