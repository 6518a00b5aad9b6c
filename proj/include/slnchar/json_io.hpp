#pragma once

// JSON encodings of labels. Decoding validates shape and canonical form and
// throws MalformedInput on anything else.

#include <json.hpp>

#include "slnchar/sl_labels.hpp"

namespace slnchar::json_io {

using Json = nlohmann::json;

Json encode(const TorsionPoint& t);
Json encode(const Partition& p);
Json encode(const FrobeniusOrbit& o);
Json encode(const GLCharLabel& chi);
Json encode(const SLCharLabel& chi);
Json encode(const OuterAut& sigma);
Json encode(const CyclicElt& x);
/// Fits in int64 -> number, otherwise decimal string.
Json encode(const Integer& x);

TorsionPoint decode_point(const Json& j);
Partition decode_partition(const Json& j);
FrobeniusOrbit decode_orbit(const Json& j, const GroupParams& params);
GLCharLabel decode_gl_label(const Json& j, const GroupParams& params);
/// Accepts any translate of (s, lambda); the result is canonical and xi is checked against a_lambda.
SLCharLabel decode_sl_label(const Json& j, const GroupParams& params);
OuterAut decode_outer_aut(const Json& j, const GroupParams& params);

/// Wraps a JSON document parse so syntax errors surface as MalformedInput.
Json parse(std::string_view text);

}  // namespace slnchar::json_io
