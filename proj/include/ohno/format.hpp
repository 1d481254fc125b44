#pragma once

// Text forms of real and complex numbers shared by reports and the CLI.
// Complex grammar: `a`, `a+bi`, `a-bi` with decimal reals.

#include <string>
#include <string_view>

#include "ohno/series.hpp"

namespace ohno {

/// Shortest decimal text that reads back to the same double.
std::string format_real(double x);

std::string format_complex(cplx z);

/// Raises ParseError on anything outside the grammar.
cplx parse_complex(std::string_view text);

}  // namespace ohno
