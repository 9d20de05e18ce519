#include "xsep/json_io.hpp"

#include <cctype>
#include <stdexcept>

namespace xsep {

namespace {

using nlohmann::json;

json complex_pair(const cplx& z) { return json::array({z.real(), z.imag()}); }

std::array<double, 4> quad_from_json(const json& j, const char* key) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument(std::string(key) + ": expected an array of 4 reals");
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    const auto& v = j[static_cast<size_t>(i)];
    if (!v.is_number())
      throw std::invalid_argument(std::string(key) + ": entries must be numbers");
    out[static_cast<size_t>(i)] = v.get<double>();
  }
  return out;
}

CVec4 cvec_from_json(const json& j, const char* key) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument(std::string(key) + ": expected an array of 4 [re,im] pairs");
  CVec4 out;
  for (int i = 0; i < 4; ++i) {
    const auto& v = j[static_cast<size_t>(i)];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw std::invalid_argument(std::string(key) + ": entries must be [re,im] pairs");
    out[i] = cplx(v[0].get<double>(), v[1].get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const XState& rho) {
  json j;
  j["a"] = rho.a;
  j["b"] = rho.b;
  j["c"] = json::array({complex_pair(rho.c[0]), complex_pair(rho.c[1]),
                        complex_pair(rho.c[2]), complex_pair(rho.c[3])});
  return j;
}

nlohmann::json to_json(const Witness& w) {
  json j;
  j["s"] = w.s;
  j["t"] = w.t;
  j["u"] = json::array({complex_pair(w.u[0]), complex_pair(w.u[1]),
                        complex_pair(w.u[2]), complex_pair(w.u[3])});
  return j;
}

nlohmann::json to_json(const Dense8& m) {
  json rows = json::array();
  for (int i = 0; i < 8; ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < 8; ++j2)
      row.push_back(complex_pair(m[static_cast<size_t>(i)][static_cast<size_t>(j2)]));
    rows.push_back(row);
  }
  return json{{"m", rows}};
}

XState xstate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("c"))
    throw std::invalid_argument("state: expected keys a, b, c");
  XState rho;
  rho.a = quad_from_json(j.at("a"), "a");
  rho.b = quad_from_json(j.at("b"), "b");
  rho.c = cvec_from_json(j.at("c"), "c");
  return rho;
}

Witness witness_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("s") || !j.contains("t") || !j.contains("u"))
    throw std::invalid_argument("witness: expected keys s, t, u");
  Witness w;
  w.s = quad_from_json(j.at("s"), "s");
  w.t = quad_from_json(j.at("t"), "t");
  w.u = cvec_from_json(j.at("u"), "u");
  return w;
}

Dense8 dense8_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m"))
    throw std::invalid_argument("dense: expected key m");
  const auto& rows = j.at("m");
  if (!rows.is_array() || rows.size() != 8)
    throw std::invalid_argument("dense: m must be an 8x8 array");
  Dense8 m{};
  for (int i = 0; i < 8; ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || row.size() != 8)
      throw std::invalid_argument("dense: m must be an 8x8 array");
    for (int k = 0; k < 8; ++k) {
      const auto& v = row[static_cast<size_t>(k)];
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw std::invalid_argument("dense: entries must be [re,im] pairs");
      m[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          cplx(v[0].get<double>(), v[1].get<double>());
    }
  }
  return m;
}

namespace {

// one entry: `re`, `imj`, or `re+imj` / `re-imj` (j suffix marks the
// imaginary part; `i` is accepted as well)
cplx parse_complex_entry(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty vector entry");

  auto is_imag_suffix = [](char ch) { return ch == 'j' || ch == 'i' || ch == 'J' || ch == 'I'; };

  size_t split = std::string::npos;
  for (size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E')
      split = i;  // last top-level sign starts the imaginary part
  }

  try {
    if (is_imag_suffix(t.back())) {
      std::string head = t.substr(0, t.size() - 1);
      if (split == std::string::npos) {
        if (head.empty() || head == "+" || head == "-") head += "1";
        return cplx(0.0, std::stod(head));
      }
      std::string re = t.substr(0, split);
      std::string im = t.substr(split, t.size() - 1 - split);
      if (im == "+" || im == "-") im += "1";
      return cplx(std::stod(re), std::stod(im));
    }
    size_t used = 0;
    double re = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("trailing characters");
    return cplx(re, 0.0);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse vector entry '" + s + "'");
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

CVec4 parse_cvec(const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 4)
    throw std::invalid_argument("expected 4 comma-separated entries");
  CVec4 out;
  for (int i = 0; i < 4; ++i) out[i] = parse_complex_entry(parts[static_cast<size_t>(i)]);
  return out;
}

std::array<double, 4> parse_quad(const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 4)
    throw std::invalid_argument("expected 4 comma-separated reals");
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    cplx z = parse_complex_entry(parts[static_cast<size_t>(i)]);
    if (z.imag() != 0.0) throw std::invalid_argument("expected a real entry");
    out[static_cast<size_t>(i)] = z.real();
  }
  return out;
}

}  // namespace xsep
