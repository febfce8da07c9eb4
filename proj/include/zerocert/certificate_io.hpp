#pragma once

#include <string>

#include "zerocert/criteria.hpp"

namespace zerocert {

/// Pretty-printed JSON (two-space indent) with a fixed key order. Floats are
/// written in shortest round-trip form; the extension witness itself is not
/// serialized, only its presence.
std::string certificate_to_json(const Certificate& cert);

/// Inverse of certificate_to_json. Throws InvalidInput on malformed input.
Certificate certificate_from_json(const std::string& text);

}  // namespace zerocert
