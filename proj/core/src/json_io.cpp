#include "ptp/json_io.hpp"

#include <cmath>

#include "json.hpp"

namespace ptp {

namespace {

using Json = nlohmann::ordered_json;

// -0.0 is canonicalized to 0.0 so algebraically identical round trips
// serialize byte-equal.
double canon(double v) { return v == 0.0 ? 0.0 : v; }

Json complex_json(Complex v) {
  return Json::array({canon(v.real()), canon(v.imag())});
}

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("expected [re, im] pair");
  const Complex v{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw SchemaError("non-finite complex value");
  return v;
}

const char* dep_name(MassDependence d) {
  switch (d) {
    case MassDependence::Mass: return "m";
    case MassDependence::InverseMass: return "inv_m";
    default: return nullptr;
  }
}

MassDependence dep_from(const Json& t) {
  if (!t.contains("mass_dep")) return MassDependence::Independent;
  const std::string s = t.at("mass_dep").get<std::string>();
  if (s == "m") return MassDependence::Mass;
  if (s == "inv_m") return MassDependence::InverseMass;
  throw SchemaError("unknown mass_dep: " + s);
}

Json term_json(const PotentialTerm& term) {
  Json t;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ShiftedPower>) {
          t["kind"] = "shifted_power";
          t["coef"] = complex_json(x.coef);
          t["shift"] = complex_json(x.shift);
          t["exp"] = x.exponent;
        } else if constexpr (std::is_same_v<T, IXPower>) {
          t["kind"] = "ix_power";
          t["coef"] = x.coef;
          t["nu"] = x.nu;
        } else if constexpr (std::is_same_v<T, SechSquared>) {
          t["kind"] = "sech2";
          t["coef"] = complex_json(x.coef);
          t["shift"] = complex_json(x.shift);
        } else {
          t["kind"] = "sec2";
          t["coef"] = complex_json(x.coef);
          t["shift"] = complex_json(x.shift);
        }
        if (const char* d = dep_name(x.mass_dep)) t["mass_dep"] = d;
      },
      term);
  return t;
}

PotentialTerm term_from(const Json& t) {
  if (!t.contains("kind")) throw SchemaError("term without kind");
  const std::string kind = t.at("kind").get<std::string>();
  const MassDependence dep = dep_from(t);
  if (kind == "shifted_power") {
    if (!t.contains("exp") || !t.at("exp").is_number_integer())
      throw SchemaError("shifted_power requires integer exp");
    return ShiftedPower{complex_from(t.at("coef")), complex_from(t.at("shift")),
                        t.at("exp").get<int>(), dep};
  }
  if (kind == "ix_power") {
    if (!t.at("coef").is_number() || !t.at("nu").is_number())
      throw SchemaError("ix_power requires numeric coef and nu");
    const double g = t.at("coef").get<double>();
    const double nu = t.at("nu").get<double>();
    if (!std::isfinite(g) || !std::isfinite(nu) || nu < 2.0)
      throw SchemaError("ix_power requires finite coef and nu >= 2");
    return IXPower{g, nu, dep};
  }
  if (kind == "sech2")
    return SechSquared{complex_from(t.at("coef")), complex_from(t.at("shift")),
                       dep};
  if (kind == "sec2")
    return SecSquared{complex_from(t.at("coef")), complex_from(t.at("shift")),
                      dep};
  throw SchemaError("unknown term kind: " + kind);
}

}  // namespace

std::string hamiltonian_to_json(const Hamiltonian& h) {
  Json j;
  j["mass"] = h.mass;
  j["terms"] = Json::array();
  for (const auto& t : h.potential.terms()) j["terms"].push_back(term_json(t));
  return j.dump(2) + "\n";
}

Hamiltonian hamiltonian_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.contains("mass") || !j.at("mass").is_number())
      throw SchemaError("missing numeric mass");
    Hamiltonian h;
    h.mass = j.at("mass").get<double>();
    if (h.mass == 0.0 || !std::isfinite(h.mass))
      throw SchemaError("mass must be nonzero and finite");
    if (!j.contains("terms") || !j.at("terms").is_array())
      throw SchemaError("missing terms array");
    for (const auto& t : j.at("terms")) h.potential.add(term_from(t));
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed Hamiltonian: ") + e.what());
  }
}

namespace {

Json pairing_json(const PairingReport& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["pairs"] = Json::array();
  for (const auto& p : r.pairs)
    j["pairs"].push_back(Json::array({p.index_a, p.index_b, p.deviation}));
  j["unmatched_a"] = r.unmatched_a;
  j["unmatched_b"] = r.unmatched_b;
  j["max_deviation"] = r.max_deviation;
  j["fitted_shift"] = complex_json(r.fitted_shift);
  j["verdict"] = to_string(r.verdict);
  return j;
}

Json spectrum_json(const Spectrum& s) {
  Json j;
  j["method"] = s.method;
  j["eigenvalues"] = Json::array();
  for (Complex v : s.eigenvalues) j["eigenvalues"].push_back(complex_json(v));
  j["residuals"] = s.residuals;
  return j;
}

}  // namespace

std::string pairing_report_to_json(const PairingReport& r) {
  return pairing_json(r).dump(2) + "\n";
}

std::string verification_report_to_json(const VerificationReport& r) {
  Json j;
  j["pt_check"] = {{"ok", r.pt_check.ok},
                   {"max_deviation", r.pt_check.max_deviation}};
  j["partner_reality"] = {{"ok", r.partner_reality.ok},
                          {"max_deviation", r.partner_reality.max_deviation}};
  j["pt_spectrum"] = spectrum_json(r.pt_spectrum);
  j["partner_spectrum"] = spectrum_json(r.partner_spectrum);
  j["half_line_restricted"] = r.half_line_restricted;
  if (r.half_line_restricted) j["half_line_start"] = r.half_line_start;
  j["pairings"] = Json::array();
  for (const auto& p : r.pairings) j["pairings"].push_back(pairing_json(p));
  j["failure_stage"] = r.failure_stage;
  j["verdict"] = to_string(r.verdict);
  return j.dump(2) + "\n";
}

std::string ortho_report_to_json(const OrthoReport& r) {
  Json j;
  auto gram = [](const std::vector<std::vector<Complex>>& g) {
    Json rows = Json::array();
    for (const auto& row : g) {
      Json jr = Json::array();
      for (Complex v : row) jr.push_back(complex_json(v));
      rows.push_back(jr);
    }
    return rows;
  };
  j["gram_hermitian"] = gram(r.gram_hermitian);
  j["gram_pt"] = gram(r.gram_pt);
  j["dev_hermitian"] = r.dev_hermitian;
  j["dev_pt_plus"] = r.dev_pt_plus;
  j["dev_pt_minus"] = r.dev_pt_minus;
  return j.dump(2) + "\n";
}

std::string znojil_report_to_json(const ZnojilReport& r) {
  Json j;
  j["plus_spectrum"] = spectrum_json(r.plus_spectrum);
  j["minus_spectrum"] = spectrum_json(r.minus_spectrum);
  j["plus_unreliable"] = r.plus_unreliable;
  j["minus_unreliable"] = r.minus_unreliable;
  j["plus_cross_method_dev"] = r.plus_cross_method_dev;
  j["pairing"] = pairing_json(r.pairing);
  return j.dump(2) + "\n";
}

}  // namespace ptp
