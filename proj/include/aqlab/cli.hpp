#pragma once

/**
 * @file cli.hpp
 * @brief Command runners behind the aqlab executable.
 *
 * Each command maps an "inputs" object to a result document
 *   { command, inputs, outputs, verdict, tolerances, warnings }.
 * inputs carry everything needed to recompute, so a document can be replayed
 * by verify() and its verdict compared.
 */

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "aqlab/fourdim.hpp"
#include "aqlab/gxg.hpp"
#include "aqlab/io.hpp"
#include "aqlab/piaq.hpp"
#include "aqlab/spinor.hpp"

namespace aqlab::cli {

using io::json;

inline json scalar_json(const ScalarKA& z) { return json::array({z.re(), z.im()}); }

inline json spin_matrix_json(const SpinMatrix& m) {
  return json::array({json::array({scalar_json(m(0, 0)), scalar_json(m(0, 1))}),
                      json::array({scalar_json(m(1, 0)), scalar_json(m(1, 1))})});
}

inline json form_json(const TwoForm4& f) {
  return {{"components", json(std::vector<double>(f.w.begin(), f.w.end()))}, {"matrix", io::matrix_to_json(f.matrix())}};
}

inline double input_tol(const json& in, double fallback) { return in.value("tolerance", fallback); }

inline Alpha input_alpha(const json& in) {
  if (!in.contains("alpha") || !in["alpha"].is_number_integer()) throw error(errc::bad_input, "alpha must be -1 or 1");
  return alpha_from_int(in["alpha"].get<int>());
}

inline LieAlgebraModel resolve_algebra(const json& a) {
  if (a.is_string()) return catalog::by_name(a.get<std::string>());
  if (a.is_object()) return io::parse_algebra(a);
  throw error(errc::bad_input, "algebra must be a catalog name or an algebra object");
}

// ---- commands -------------------------------------------------------------

inline json cmd_pauli(const json& in) {
  const Alpha al = input_alpha(in);
  const auto s = pauli(al);
  json out = {{"sigma1", spin_matrix_json(s[0])}, {"sigma2", spin_matrix_json(s[1])}, {"sigma3", spin_matrix_json(s[2])}};
  return {{"outputs", out}, {"verdict", out}, {"tolerances", json::object()}};
}

inline QuaternionA triple(const json& j, Alpha al, const char* name) {
  if (!j.is_array() || j.size() != 3) throw error(errc::bad_input, std::string(name) + " needs 3 coefficients (i, j, k)");
  return QuaternionA::imaginary(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), al);
}

inline json cmd_spinbasis(const json& in) {
  const Alpha al = input_alpha(in);
  const double tol = input_tol(in, 1e-9);
  const IQBasis B{triple(in.at("j1"), al, "j1"), triple(in.at("j2"), al, "j2"), triple(in.at("j3"), al, "j3")};
  const SpinbasisResult r = spinbasis(B, tol);
  const SpinMatrix Pi = inverse(r.change);
  const auto s = pauli(al);
  const SpinMatrix c1 = Pi * spin_matrix(B.j1) * r.change, c2 = Pi * spin_matrix(B.j2) * r.change,
                   c3 = Pi * spin_matrix(B.j3) * r.change;
  const double resid = std::max({distance(c1, s[0]), distance(c2, s[1]), distance(c3, static_cast<double>(r.sign) * s[2])});
  json out = {{"change_matrix", spin_matrix_json(r.change)},
              {"sign", r.sign},
              {"conjugated", json::array({spin_matrix_json(c1), spin_matrix_json(c2), spin_matrix_json(c3)})},
              {"max_residual", resid}};
  return {{"outputs", out},
          {"verdict", {{"sign", r.sign}, {"change_matrix", out["change_matrix"]}}},
          {"tolerances", {{"orthonormality", tol}}}};
}

inline json cmd_selfdual(const json& in) {
  const Metric4 g{input_alpha(in)};
  const int orientation = in.value("orientation", 1);
  if (orientation != 1 && orientation != -1) throw error(errc::bad_input, "orientation must be 1 or -1");
  const json& w = in.at("omega");
  if (!w.is_array() || w.size() != 6) throw error(errc::bad_input, "omega needs 6 components (12,13,14,23,24,34)");
  TwoForm4 f;
  for (int p = 0; p < 6; ++p) f.w[p] = w[p].get<double>();
  const auto [wp, wm] = sd_decompose(g, f, orientation);
  const Endo4 Jp = form_to_endo(g, wp), Jm = form_to_endo(g, wm);
  json out = {{"omega_plus", form_json(wp)},
              {"omega_minus", form_json(wm)},
              {"J_plus", io::matrix_to_json(Jp)},
              {"J_minus", io::matrix_to_json(Jm)},
              {"lambda_sq_plus", io::exact_number(lambda_sq(Jp))},
              {"lambda_sq_minus", io::exact_number(lambda_sq(Jm))},
              {"norm_sq_plus", norm_sq(g, wp)},
              {"norm_sq_minus", norm_sq(g, wm)}};
  return {{"outputs", out},
          {"verdict", {{"omega_plus", out["omega_plus"]["components"]}, {"lambda_sq_plus", lambda_sq(Jp)}}},
          {"tolerances", json::object()}};
}

inline json einstein_row(const EinsteinPoint& p) {
  return {{"lambda", io::exact_number(p.lambda)}, {"mu", io::exact_number(p.mu)}, {"epsilon", io::exact_number(p.eps)}};
}

inline json cmd_einstein(const json& in) {
  const LieAlgebraModel A = resolve_algebra(in.at("algebra"));
  const DoubledModel D = DoubledModel::killing(A);
  const std::string mode = in.value("mode", "point");
  const double tol = input_tol(in, einstein_rel_tol);
  json tols = {{"einstein_relative", tol}, {"ricci_path_agreement", 1e-9}};

  if (mode == "point") {
    const MetricFamily F(D, in.at("lambda").get<double>(), in.at("mu").get<double>());
    const auto [Ac, Bc, Cc, Dc] = F.coefficients();
    const Mat Rc = F.ricci_matrix(true), Rt = F.ricci_matrix(false);
    const double agree = (Rc - Rt).cwiseAbs().maxCoeff();
    const auto eps = einstein_check(F, true, tol);
    json out = {{"coefficients",
                 {{"A", io::exact_number(Ac)}, {"B", io::exact_number(Bc)}, {"C", io::exact_number(Cc)}, {"D", io::exact_number(Dc)}}},
                {"d", io::exact_number(F.d())},
                {"ricci_path_difference", agree},
                {"einstein", eps.has_value()},
                {"epsilon", eps ? io::exact_number(*eps) : json(nullptr)}};
    json verdict = {{"einstein", eps.has_value()}, {"epsilon", eps ? json(*eps) : json(nullptr)}};
    return {{"outputs", out}, {"verdict", verdict}, {"tolerances", tols}};
  }
  if (mode == "classify") {
    json rows = json::array(), vrows = json::array();
    for (const EinsteinPoint& p : classify_einstein(D)) {
      rows.push_back(einstein_row(p));
      vrows.push_back(json::array({p.lambda, p.mu, p.eps}));
    }
    return {{"outputs", {{"solutions", rows}}}, {"verdict", vrows}, {"tolerances", tols}};
  }
  if (mode == "sweep") {
    const SweepResult s = einstein_sweep(in.at("resolution").get<double>());
    json rows = json::array(), vrows = json::array();
    for (const EinsteinPoint& p : s.einstein) {
      rows.push_back(einstein_row(p));
      vrows.push_back(json::array({p.lambda, p.mu, p.eps}));
    }
    json out = {{"grid_points", s.points},
                {"einstein_points", rows},
                {"min_relative_offdiagonal_elsewhere", s.min_offgrid_measure}};
    return {{"outputs", out}, {"verdict", vrows}, {"tolerances", tols}};
  }
  throw error(errc::bad_input, "einstein mode must be point, classify or sweep");
}

inline PiAQModel resolve_model(const json& in) {
  if (in.contains("doubled")) return PiAQModel::from_doubled(DoubledModel::killing(resolve_algebra(in["doubled"])));
  if (in.contains("model")) return io::parse_model(in["model"]);
  throw error(errc::bad_input, "piaq needs a model or a doubled algebra");
}

inline Twistor parse_twistor(const std::string& s) {
  if (s == "I") return Twistor::I;
  if (s == "J") return Twistor::J;
  if (s == "K") return Twistor::K;
  throw error(errc::bad_input, "twistor must be I, J or K");
}

inline Verdict nijenhuis_sweep(const PiAQModel& M, double tol) {
  // N_F against its torsion expression for F = I, J, K
  const Mat E = Mat::Identity(M.dim(), M.dim());
  Verdict v;
  for (Twistor t : {Twistor::I, Twistor::J, Twistor::K}) {
    Verdict w = detail::sweep_pairs(
        M.dim(),
        [&](int i, int j) {
          const Vec a = nijenhuis(M, M.twistor(t), E.col(i), E.col(j));
          const Vec b = nijenhuis_from_torsion(M, M.twistor(t), E.col(i), E.col(j));
          return std::pair{detail::inf(a - b), std::max(detail::inf(a), detail::inf(b))};
        },
        tol);
    if (w.defect > v.defect) v = std::move(w);
  }
  v.holds = v.defect <= tol;
  return v;
}

inline json cmd_piaq(const json& in, std::vector<std::string>& warnings) {
  const PiAQModel M = resolve_model(in);
  const std::string pred = in.at("predicate").get<std::string>();
  const double tol = input_tol(in, piaq_tol);
  json extra = json::object();
  const Verdict v = [&] {
    if (pred == "integrable") {
      if (!M.is_lie()) warnings.push_back("NonLieBracket: curvature of a non-Lie bracket is not a tensor of a group model");
      return integrability(M, tol);
    }
    if (pred == "semiholonomic") return semiholonomy(M, tol);
    if (pred == "three-web") return three_web(M, tol);
    if (pred == "involutive") {
      const Twistor t = parse_twistor(in.value("twistor", "I"));
      const json lam = in.value("eigenvalue", json::array({1.0, 0.0}));
      const ScalarKA l{lam.at(0).get<double>(), lam.at(1).get<double>(), M.alpha()};
      extra = {{"twistor", to_string(t)}, {"eigenvalue", scalar_json(l)}};
      return fundamental_involutive(M, t, l, tol);
    }
    if (pred == "isoclinic") {
      if (!in.contains("mu")) throw error(errc::bad_input, "isoclinic needs mu");
      return isoclinic_geodesic_const_mu(M, in["mu"].get<double>(), std::nullopt, tol);
    }
    if (pred == "nijenhuis") return nijenhuis_sweep(M, tol);
    throw error(errc::bad_input, "unknown predicate '" + pred + "'");
  }();
  json out = {{"predicate", pred}, {"holds", v.holds}, {"defect", v.defect}, {"model_is_lie", M.is_lie()}};
  if (v.witness) out["witness"] = json::array({v.witness->first + 1, v.witness->second + 1});
  out.update(extra);
  return {{"outputs", out}, {"verdict", {{"holds", v.holds}}}, {"tolerances", {{"predicate", tol}}}};
}

// ---- dispatch and replay --------------------------------------------------

inline json run(const std::string& command, const json& inputs) {
  std::vector<std::string> warnings;
  json body;
  if (command == "pauli") body = cmd_pauli(inputs);
  else if (command == "spinbasis") body = cmd_spinbasis(inputs);
  else if (command == "selfdual") body = cmd_selfdual(inputs);
  else if (command == "einstein") body = cmd_einstein(inputs);
  else if (command == "piaq") body = cmd_piaq(inputs, warnings);
  else throw error(errc::bad_input, "unknown command '" + command + "'");
  json doc = {{"command", command}, {"inputs", inputs}};
  doc.update(body);
  doc["warnings"] = warnings;
  return doc;
}

/// Structural comparison; numbers agree to a relative 1e-9.
inline bool same_verdict(const json& a, const json& b) {
  if (a.is_number() && b.is_number()) {
    const double x = a.get<double>(), y = b.get<double>();
    return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
  }
  if (a.type() != b.type()) return false;
  if (a.is_array()) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!same_verdict(a[i], b[i])) return false;
    return true;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) return false;
    for (auto it = a.begin(); it != a.end(); ++it)
      if (!b.contains(it.key()) || !same_verdict(it.value(), b[it.key()])) return false;
    return true;
  }
  return a == b;
}

/// Recomputes a result document from its inputs and compares verdicts.
inline json verify(const json& doc) {
  if (!doc.is_object() || !doc.contains("command") || !doc.contains("inputs") || !doc.contains("verdict"))
    throw error(errc::bad_input, "not a result document (needs command, inputs, verdict)");
  const json again = run(doc["command"].get<std::string>(), doc["inputs"]);
  const bool ok = same_verdict(doc["verdict"], again["verdict"]);
  json out = {{"reproduced", ok}, {"original_verdict", doc["verdict"]}, {"recomputed_verdict", again["verdict"]}};
  return {{"command", "verify"},
          {"inputs", {{"command", doc["command"]}}},
          {"outputs", out},
          {"verdict", {{"reproduced", ok}}},
          {"tolerances", {{"verdict_relative", 1e-9}}},
          {"warnings", again["warnings"]}};
}

}  // namespace aqlab::cli
