#pragma once

// Text file formats (JSON, UTF-8). Rationals are always written as "p/q" or
// "p" strings. Components equal to zero are omitted on output and default
// to zero on input. Output key order follows rank order, so identical
// values serialize to identical bytes.
//
//   tensor   {"n", "degree", "variance": "co"|"contra", "storage": "dense"|"symmetric",
//             "convention": "plain"|"arrow" (symmetric only),
//             "components": {"1,2,2": "3/2", ...}}            keys are axis lists
//   form     {"n", "coeffs": ["1", "0", "-2/3"]}
//   field    {"n", "m", "components": [{"I1,...,In": "c", ...}, ...]}  keys are counts
//   jet      {"n", "m", "k", "x": [...], "blocks": {"0": {"alpha|I1,...,In": "v"}, ...}}
//   stress   {"n", "m", "k", "kind": "variational"|"traction",
//             "blocks": {"alpha|I-axis-list": poly, "alpha|J-axis-list|j": poly}}

#include "hyperjet/altforms.hpp"
#include "hyperjet/hyperstress.hpp"
#include "hyperjet/jet.hpp"
#include "hyperjet/multiindex.hpp"
#include "hyperjet/polyfield.hpp"
#include "hyperjet/rational.hpp"
#include "hyperjet/symtensor.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hyperjet {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int require_int(const Json& j, const char* key, int min) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  const auto value = v.get<long long>();
  if (value < min) throw FormatError(std::string("field \"") + key + "\" must be >= " + std::to_string(min));
  return static_cast<int>(value);
}

inline std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw FormatError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

inline Rational rational_value(const Json& v) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw FormatError("rational values must be strings like \"3/2\"");
}

inline const Json& require_object(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_object()) throw FormatError(std::string("field \"") + key + "\" must be an object");
  return v;
}

template <class F>
auto rethrow_as_format(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
}

// "a|b|c" -> {"a", "b", "c"}
inline std::vector<std::string> split_bar(const std::string& key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto bar = key.find('|', start);
    parts.push_back(key.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return parts;
}

inline int parse_positive(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw FormatError(std::string("malformed ") + what + " \"" + text + "\"");
  }
  return std::stoi(text);
}

}  // namespace detail

// ---- files ---------------------------------------------------------------

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open \"" + path.string() + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("\"" + path.string() + "\": " + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write \"" + path.string() + "\"");
  out << dump(j);
}

// ---- tensors -------------------------------------------------------------

using TensorValue = std::variant<DenseTensor, SymTensor>;

inline Json to_json(const DenseTensor& t) {
  Json components = Json::object();
  for (std::size_t off = 0; off < t.size(); ++off) {
    if (t.at(off) != 0) components[t.index_at(off).to_string()] = to_string(t.at(off));
  }
  return Json{{"n", t.dim()}, {"degree", t.degree()}, {"variance", to_string(t.variance())},
              {"storage", "dense"}, {"components", std::move(components)}};
}

inline Json to_json(const SymTensor& t) {
  Json components = Json::object();
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t.at(r) != 0) components[unrank(t.dim(), t.degree(), r).canonical().to_string()] = to_string(t.at(r));
  }
  return Json{{"n", t.dim()},
              {"degree", t.degree()},
              {"variance", to_string(t.variance())},
              {"storage", "symmetric"},
              {"convention", to_string(t.convention())},
              {"components", std::move(components)}};
}

inline TensorValue tensor_from_json(const Json& j) {
  const int n = detail::require_int(j, "n", 1);
  const auto degree = static_cast<std::size_t>(detail::require_int(j, "degree", 0));
  const std::string variance_text = detail::require_string(j, "variance");
  if (variance_text != "co" && variance_text != "contra") throw FormatError("variance must be \"co\" or \"contra\"");
  const Variance variance = variance_text == "co" ? Variance::Covariant : Variance::Contravariant;
  const std::string storage = detail::require_string(j, "storage");
  const Json& components = detail::require_object(j, "components");

  auto parse_index = [&](const std::string& key) {
    const MultiIndex index = detail::rethrow_as_format([&] { return MultiIndex::parse(n, key); });
    if (index.size() != degree) throw FormatError("index \"" + key + "\" does not have degree " + std::to_string(degree));
    return index;
  };

  if (storage == "dense") {
    DenseTensor t(n, degree, variance);
    for (const auto& [key, value] : components.items()) t[parse_index(key)] = detail::rational_value(value);
    return t;
  }
  if (storage == "symmetric") {
    const std::string conv = detail::require_string(j, "convention");
    if (conv != "plain" && conv != "arrow") throw FormatError("convention must be \"plain\" or \"arrow\"");
    SymTensor t(n, degree, variance, conv == "plain" ? Convention::Plain : Convention::Arrow);
    for (const auto& [key, value] : components.items()) {
      const MultiIndex index = parse_index(key);
      if (!index.is_nondecreasing()) {
        throw FormatError("symmetric storage requires non-decreasing indices, got \"" + key + "\"");
      }
      t[cardinality(index)] = detail::rational_value(value);
    }
    return t;
  }
  throw FormatError("storage must be \"dense\" or \"symmetric\"");
}

// ---- forms ---------------------------------------------------------------

inline Json to_json(const CoDimOneForm& form) {
  Json coeffs = Json::array();
  for (const auto& c : form.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"n", form.dim()}, {"coeffs", std::move(coeffs)}};
}

inline CoDimOneForm form_from_json(const Json& j) {
  const int n = detail::require_int(j, "n", 1);
  const Json& coeffs = detail::require(j, "coeffs");
  if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(n)) {
    throw FormatError("\"coeffs\" must be an array of n rationals");
  }
  CoDimOneForm form(n);
  for (int i = 1; i <= n; ++i) form[i] = detail::rational_value(coeffs[static_cast<std::size_t>(i - 1)]);
  return form;
}

// ---- polynomials and fields ---------------------------------------------

inline Json to_json(const Polynomial& p) {
  Json terms = Json::object();
  for (std::size_t l = 0; l <= p.degree(); ++l) {
    for (const auto& [exponents, coeff] : p.terms()) {
      if (exponents.degree() == l) terms[exponents.to_string()] = to_string(coeff);
    }
  }
  return terms;
}

inline Polynomial polynomial_from_json(int n, const Json& j) {
  if (!j.is_object()) throw FormatError("polynomial must be an object of \"I1,...,In\": coefficient");
  Polynomial p(n);
  for (const auto& [key, value] : j.items()) {
    const CardinalityIndex exponents = detail::rethrow_as_format([&] { return CardinalityIndex::parse(n, key); });
    p.add_term(exponents, detail::rational_value(value));
  }
  return p;
}

inline Json to_json(const PolyField& field) {
  Json components = Json::array();
  for (const auto& c : field.components()) components.push_back(to_json(c));
  return Json{{"n", field.dim()}, {"m", field.fiber_dim()}, {"components", std::move(components)}};
}

inline PolyField field_from_json(const Json& j) {
  const int n = detail::require_int(j, "n", 1);
  const int m = detail::require_int(j, "m", 1);
  const Json& components = detail::require(j, "components");
  if (!components.is_array() || components.size() != static_cast<std::size_t>(m)) {
    throw FormatError("\"components\" must be an array of m polynomials");
  }
  std::vector<Polynomial> polys;
  for (const auto& c : components) polys.push_back(polynomial_from_json(n, c));
  return PolyField(std::move(polys));
}

// ---- jets ----------------------------------------------------------------

inline Json to_json(const JetElement& jet) {
  Json x = Json::array();
  for (const auto& c : jet.point()) x.push_back(to_string(c));
  Json blocks = Json::object();
  for (std::size_t l = 0; l <= jet.order(); ++l) {
    Json block = Json::object();
    for (int alpha = 1; alpha <= jet.fiber_dim(); ++alpha) {
      const SymTensor& t = jet.block(l, alpha);
      for (std::size_t r = 0; r < t.size(); ++r) {
        if (t.at(r) != 0) block[std::to_string(alpha) + "|" + unrank(jet.dim(), l, r).to_string()] = to_string(t.at(r));
      }
    }
    blocks[std::to_string(l)] = std::move(block);
  }
  return Json{{"n", jet.dim()}, {"m", jet.fiber_dim()}, {"k", jet.order()}, {"x", std::move(x)}, {"blocks", std::move(blocks)}};
}

inline JetElement jet_from_json(const Json& j) {
  const int n = detail::require_int(j, "n", 1);
  const int m = detail::require_int(j, "m", 1);
  const auto k = static_cast<std::size_t>(detail::require_int(j, "k", 0));
  const Json& xs = detail::require(j, "x");
  if (!xs.is_array() || xs.size() != static_cast<std::size_t>(n)) throw FormatError("\"x\" must be an array of n rationals");
  Point x;
  for (const auto& c : xs) x.push_back(detail::rational_value(c));
  JetElement jet(n, m, k, std::move(x));
  for (const auto& [order_key, block] : detail::require_object(j, "blocks").items()) {
    const auto l = static_cast<std::size_t>(detail::parse_positive(order_key, "block order"));
    if (l > k) throw FormatError("block order " + order_key + " exceeds k");
    if (!block.is_object()) throw FormatError("jet block must be an object");
    for (const auto& [key, value] : block.items()) {
      const auto parts = detail::split_bar(key);
      if (parts.size() != 2) throw FormatError("jet slot key must be \"alpha|I1,...,In\", got \"" + key + "\"");
      const int alpha = detail::parse_positive(parts[0], "fiber index");
      if (alpha < 1 || alpha > m) throw FormatError("fiber index out of range in \"" + key + "\"");
      const CardinalityIndex index = detail::rethrow_as_format([&] { return CardinalityIndex::parse(n, parts[1]); });
      if (index.degree() != l) throw FormatError("slot \"" + key + "\" is not of order " + order_key);
      jet(alpha, index) = detail::rational_value(value);
    }
  }
  return jet;
}

// ---- stresses ------------------------------------------------------------

using StressValue = std::variant<VariationalStressField, TractionStressField>;

inline Json to_json(const VariationalStressField& s) {
  Json blocks = Json::object();
  for (std::size_t l = 0; l <= s.order(); ++l) {
    for (const auto& index : enumerate_nondecreasing(s.dim(), l)) {
      for (int alpha = 1; alpha <= s.fiber_dim(); ++alpha) {
        const Polynomial& p = s(alpha, index);
        if (!p.is_zero()) blocks[std::to_string(alpha) + "|" + index.canonical().to_string()] = to_json(p);
      }
    }
  }
  return Json{{"n", s.dim()}, {"m", s.fiber_dim()}, {"k", s.order()}, {"kind", "variational"}, {"blocks", std::move(blocks)}};
}

inline Json to_json(const TractionStressField& s) {
  Json blocks = Json::object();
  for (std::size_t l = 0; l < s.order(); ++l) {
    for (const auto& index : enumerate_nondecreasing(s.dim(), l)) {
      for (int alpha = 1; alpha <= s.fiber_dim(); ++alpha) {
        for (int jj = 1; jj <= s.dim(); ++jj) {
          const Polynomial& p = s(alpha, index, jj);
          if (!p.is_zero()) {
            blocks[std::to_string(alpha) + "|" + index.canonical().to_string() + "|" + std::to_string(jj)] = to_json(p);
          }
        }
      }
    }
  }
  return Json{{"n", s.dim()}, {"m", s.fiber_dim()}, {"k", s.order()}, {"kind", "traction"}, {"blocks", std::move(blocks)}};
}

inline StressValue stress_from_json(const Json& j) {
  const int n = detail::require_int(j, "n", 1);
  const int m = detail::require_int(j, "m", 1);
  const auto kind = detail::require_string(j, "kind");
  const Json& blocks = detail::require_object(j, "blocks");

  auto parse_slot_index = [&](const std::string& text, const std::string& key) {
    const MultiIndex index = detail::rethrow_as_format([&] { return MultiIndex::parse(n, text); });
    if (!index.is_nondecreasing()) throw FormatError("stress slot \"" + key + "\" must use a non-decreasing axis list");
    return cardinality(index);
  };
  auto parse_alpha = [&](const std::string& text, const std::string& key) {
    const int alpha = detail::parse_positive(text, "fiber index");
    if (alpha < 1 || alpha > m) throw FormatError("fiber index out of range in \"" + key + "\"");
    return alpha;
  };

  if (kind == "variational") {
    const auto k = static_cast<std::size_t>(detail::require_int(j, "k", 0));
    VariationalStressField s(n, m, k);
    for (const auto& [key, value] : blocks.items()) {
      const auto parts = detail::split_bar(key);
      if (parts.size() != 2) throw FormatError("variational slot key must be \"alpha|I\", got \"" + key + "\"");
      const int alpha = parse_alpha(parts[0], key);
      const CardinalityIndex index = parse_slot_index(parts[1], key);
      if (index.degree() > k) throw FormatError("slot \"" + key + "\" exceeds order k");
      s(alpha, index) = polynomial_from_json(n, value);
    }
    return s;
  }
  if (kind == "traction") {
    const auto k = static_cast<std::size_t>(detail::require_int(j, "k", 1));
    TractionStressField s(n, m, k);
    for (const auto& [key, value] : blocks.items()) {
      const auto parts = detail::split_bar(key);
      if (parts.size() != 3) throw FormatError("traction slot key must be \"alpha|J|j\", got \"" + key + "\"");
      const int alpha = parse_alpha(parts[0], key);
      const CardinalityIndex index = parse_slot_index(parts[1], key);
      if (index.degree() >= k) throw FormatError("slot \"" + key + "\" exceeds order k-1");
      const int jj = detail::parse_positive(parts[2], "contraction axis");
      if (jj < 1 || jj > n) throw FormatError("contraction axis out of range in \"" + key + "\"");
      s(alpha, index, jj) = polynomial_from_json(n, value);
    }
    return s;
  }
  throw FormatError("kind must be \"variational\" or \"traction\"");
}

}  // namespace hyperjet
