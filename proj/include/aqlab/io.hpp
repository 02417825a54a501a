#pragma once

/**
 * @file io.hpp
 * @brief JSON ingestion of algebras and models, and deterministic JSON emission.
 *
 * Algebra file:
 *   { "dim": 3, "name": "su2",
 *     "brackets": [[1,2,3,1.0], {"i":2,"j":3,"k":1,"value":1.0}, ...] }
 * Indices are 1-based; [e_j, e_i] is filled in by antisymmetry.
 *
 * Model file: an algebra file plus "alpha" (+-1) and row-major "I", "J".
 */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "aqlab/liealg.hpp"
#include "aqlab/piaq.hpp"

namespace aqlab::io {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::bad_input, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::bad_input, path + ": " + e.what());
  }
}

inline StructureConstants parse_brackets(const json& j) {
  try {
    const int n = j.at("dim").get<int>();
    if (n <= 0) throw error(errc::invalid_algebra, "dim must be positive");
    StructureConstants c(n);
    std::vector<char> seen(static_cast<std::size_t>(n) * n * n, 0);
    auto slot = [&](int a, int b, int k) -> char& { return seen[(static_cast<std::size_t>(a) * n + b) * n + k]; };
    for (const json& r : j.value("brackets", json::array())) {
      int a, b, k;
      double v;
      if (r.is_array()) {
        if (r.size() != 4) throw error(errc::invalid_algebra, "bracket record must have 4 entries: " + r.dump());
        a = r[0].get<int>(), b = r[1].get<int>(), k = r[2].get<int>(), v = r[3].get<double>();
      } else {
        a = r.at("i").get<int>(), b = r.at("j").get<int>(), k = r.at("k").get<int>(), v = r.at("value").get<double>();
      }
      if (a < 1 || a > n || b < 1 || b > n || k < 1 || k > n)
        throw error(errc::invalid_algebra, "index out of range [1, dim] in " + r.dump());
      --a, --b, --k;
      if (a == b) {
        if (v != 0) throw error(errc::invalid_algebra, "[e_i, e_i] must vanish: " + r.dump());
        continue;
      }
      if (slot(a, b, k) && c(a, b, k) != v) throw error(errc::invalid_algebra, "conflicting record " + r.dump());
      c.set(a, b, k, v);
      slot(a, b, k) = slot(b, a, k) = 1;
    }
    return c;
  } catch (const json::exception& e) {
    throw error(errc::invalid_algebra, e.what());
  }
}

inline LieAlgebraModel parse_algebra(const json& j) {
  return {parse_brackets(j), j.value("name", std::string("algebra"))};
}

inline json brackets_to_json(const StructureConstants& c) {
  json br = json::array();
  for (int i = 0; i < c.dim(); ++i)
    for (int j = i + 1; j < c.dim(); ++j)
      for (int k = 0; k < c.dim(); ++k)
        if (c(i, j, k) != 0) br.push_back({i + 1, j + 1, k + 1, c(i, j, k)});
  return br;
}

inline json algebra_to_json(const LieAlgebraModel& A) {
  return {{"dim", A.dim()}, {"name", A.name()}, {"brackets", brackets_to_json(A.constants())}};
}

inline json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

inline json vector_to_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

inline Mat matrix_from_json(const json& j, int n, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw error(errc::invalid_model, what + " must have " + std::to_string(n) + " rows");
  Mat m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n)
      throw error(errc::invalid_model, what + " row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

inline PiAQModel parse_model(const json& j) {
  try {
    const StructureConstants c = parse_brackets(j);
    const Alpha al = alpha_from_int(j.at("alpha").get<int>());
    return {c, matrix_from_json(j.at("I"), c.dim(), "I"), matrix_from_json(j.at("J"), c.dim(), "J"), al,
            j.value("name", std::string("model"))};
  } catch (const json::exception& e) {
    throw error(errc::invalid_model, e.what());
  }
}

inline json model_to_json(const PiAQModel& M) {
  return {{"dim", M.dim()},
          {"name", M.name()},
          {"alpha", static_cast<int>(M.alpha())},
          {"brackets", brackets_to_json(M.constants())},
          {"I", matrix_to_json(M.I())},
          {"J", matrix_to_json(M.J())}};
}

// ---- numbers --------------------------------------------------------------

struct Rational {
  long num, den;
};

/// p/q with q <= max_den and |x - p/q| <= tol, smallest q first.
inline std::optional<Rational> recognize_rational(double x, long max_den = 1000, double tol = 1e-12) {
  if (!std::isfinite(x)) return std::nullopt;
  for (long q = 1; q <= max_den; ++q) {
    const double p = std::round(x * q);
    if (std::abs(p) > 1e15) return std::nullopt;
    if (std::abs(x - p / q) <= tol) {
      const long pi = static_cast<long>(p);
      const long g = std::gcd(std::abs(pi), q);
      return Rational{pi / (g ? g : 1), q / (g ? g : 1)};
    }
  }
  return std::nullopt;
}

/// {"value": x} plus "exact": "p/q" when x is recognizably rational.
inline json exact_number(double x) {
  json j = {{"value", x}};
  if (auto r = recognize_rational(x)) {
    j["exact"] = r->den == 1 ? std::to_string(r->num) : std::to_string(r->num) + "/" + std::to_string(r->den);
    j["num"] = r->num;
    j["den"] = r->den;
  }
  return j;
}

inline std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace detail {
inline void emit(std::ostream& os, const json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' '), close(static_cast<std::size_t>(indent) * depth, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  // arrays of scalars stay on one line
  auto flat = [](const json& a) {
    for (const json& e : a)
      if (e.is_structured()) return false;
    return true;
  };
  switch (j.type()) {
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      break;
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        break;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << json(it.key()).dump() << (indent ? ": " : ":");
        emit(os, it.value(), indent, depth + 1);
      }
      os << nl << close << '}';
      break;
    }
    case json::value_t::array: {
      if (j.empty() || flat(j) || indent == 0) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << (indent ? ", " : ",");
          emit(os, j[i], 0, 0);
        }
        os << ']';
        break;
      }
      os << '[' << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',' << nl;
        os << pad;
        emit(os, j[i], indent, depth + 1);
      }
      os << nl << close << ']';
      break;
    }
    default:
      os << j.dump();
  }
}
}  // namespace detail

/// JSON text with every float printed to 17 significant digits.
inline std::string dump(const json& j, int indent = 2) {
  std::ostringstream os;
  detail::emit(os, j, indent, 0);
  return os.str();
}

}  // namespace aqlab::io
