#include "cosc/format.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <numbers>

namespace cosc {

namespace {

std::string normalize(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN in UTF-8
    if (i + 2 < text.size() + 0 && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(text[i]))) out.push_back(text[i]);
  }
  return out;
}

double parse_real(const std::string& s, std::string_view original) {
  if (s.empty()) {
    throw Error(ErrorKind::InvalidArgument, "cannot parse '" + std::string(original) + "'");
  }
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) {
    throw Error(ErrorKind::InvalidArgument, "cannot parse '" + std::string(original) + "'");
  }
  return v;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  std::string s = normalize(text);
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty complex literal");
  const char last = s.back();
  if (last != 'i' && last != 'j') return {parse_real(s, text), 0.0};
  s.pop_back();

  // Split before the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? std::string() : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, text), parse_real(im, text)};
}

std::string format_complex(const cplx& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string format_real(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_angle(std::string_view text) {
  const std::string s = normalize(text);
  const std::size_t p = s.find("pi");
  if (p == std::string::npos) return parse_real(s, text);
  std::string head = s.substr(0, p);
  std::string tail = s.substr(p + 2);
  if (!head.empty() && head.back() == '*') head.pop_back();
  double factor = 1.0;
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty()) {
    factor = parse_real(head, text);
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') {
      throw Error(ErrorKind::InvalidArgument, "cannot parse angle '" + std::string(text) + "'");
    }
    divisor = parse_real(tail.substr(1), text);
  }
  return factor * std::numbers::pi / divisor;
}

}  // namespace cosc
