#pragma once

#include <string>

#include <json.hpp>

#include "xsep/witness.hpp"
#include "xsep/xstate.hpp"

namespace xsep {

// JSON schemas:
//   state:   {"a":[4 reals], "b":[4 reals], "c":[[re,im] x4]}
//   witness: {"s":[4 reals], "t":[4 reals], "u":[[re,im] x4]}
//   dense:   {"m":[[[re,im] x8] x8]}
// Loaders throw std::invalid_argument with a message on schema violations.

nlohmann::json to_json(const XState& rho);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const Dense8& m);

XState xstate_from_json(const nlohmann::json& j);
Witness witness_from_json(const nlohmann::json& j);
Dense8 dense8_from_json(const nlohmann::json& j);

/// Inline vector syntax: comma separated entries, each `re` or `re+imj`
/// (e.g. "1,0.5-2j,3j,-1"). Throws std::invalid_argument on parse failure.
CVec4 parse_cvec(const std::string& text);

/// Comma separated quadruple of reals.
std::array<double, 4> parse_quad(const std::string& text);

}  // namespace xsep
