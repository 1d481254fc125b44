#include "ohno/format.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <system_error>

#include "ohno/errors.hpp"

namespace ohno {

std::string format_real(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string format_complex(cplx z) {
  if (z.imag() == 0.0) return format_real(z.real());
  std::string out = format_real(z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  out += format_real(std::abs(z.imag()));
  out += 'i';
  return out;
}

namespace {

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorCode::ParseError, "malformed complex literal '" + std::string(text) + "'");
}

bool starts_unsigned_real(std::string_view s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '.');
}

// Parses an unsigned decimal real at the front of s and advances past it.
double take_real(std::string_view& s, std::string_view text) {
  if (!starts_unsigned_real(s)) bad_literal(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, std::chars_format::general);
  if (ec != std::errc() || !std::isfinite(value)) bad_literal(text);
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  std::string_view s = text;
  double sign = 1.0;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    sign = s.front() == '-' ? -1.0 : 1.0;
    s.remove_prefix(1);
  }
  const double re = sign * take_real(s, text);
  if (s.empty()) return {re, 0.0};
  if (s.front() != '+' && s.front() != '-') bad_literal(text);
  const double im_sign = s.front() == '-' ? -1.0 : 1.0;
  s.remove_prefix(1);
  const double im = im_sign * take_real(s, text);
  if (s != "i") bad_literal(text);
  return {re, im};
}

}  // namespace ohno
