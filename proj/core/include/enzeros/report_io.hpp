#pragma once

/*
 * Canonical JSON rendering of a certification report.  Field order is
 * fixed, every rational appears as a ["numerator", "denominator"] pair
 * of decimal strings (never floating point), indentation is two spaces
 * and the text ends in one newline -- so parsing the output and
 * re-rendering it reproduces the bytes exactly.
 */

#include "enzeros/certify.hpp"

#include <string>

namespace enz {

std::string render_report(const Report& report);

}  // namespace enz
