#pragma once

#include <string>
#include <string_view>

#include "cosc/specfun.hpp"

namespace cosc {

inline constexpr std::string_view kVersion = "0.3.1";

/// Parses "RE+IMi" style scalars: "2+1i", "-0.5i", "3", "i", "1e-3-2.5e1i".
/// The Unicode minus sign is accepted in place of '-', 'j' in place of 'i'.
cplx parse_complex(std::string_view text);

/// Inverse of parse_complex with 17 significant digits, so that
/// parse_complex(format_complex(z)) == z bit for bit.
std::string format_complex(const cplx& z);

std::string format_real(double v);

/// A real number, or a multiple of pi written as "pi", "pi/6", "2pi/7",
/// "0.5*pi".
double parse_angle(std::string_view text);

}  // namespace cosc
