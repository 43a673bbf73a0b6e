#include "cuspg2/binform.hpp"

#include <cctype>
#include <string>

namespace cuspg2::binform {

std::optional<Rational> calibration_constant(int n, int m, int p) {
  // Printed ⟨V,V⟩₆ expands to 1440·I₂(V).
  if (n == 6 && m == 6 && p == 6) return Rational(1, 1440);
  // Chosen so that the composed trilinear pairing equals the bracket of the G₂ three-form.
  if (n == 6 && m == 6 && p == 3) return Rational(-1, 1200);
  return std::nullopt;
}

BinaryForm<Rational> parse_rational_form(std::string_view text) {
  std::vector<Rational> v;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip();
    if (pos >= text.size()) break;
    const std::size_t item_start = pos;
    // Optional "vK=" label; K must match the running index.
    if (text[pos] == 'v') {
      ++pos;
      const std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (digits == pos || std::stoul(std::string(text.substr(digits, pos - digits))) != v.size())
        throw ParseError("coefficient labels must be v0, v1, ... in order", item_start);
      skip();
      if (pos >= text.size() || text[pos] != '=') throw ParseError("expected '='", pos);
      ++pos;
      skip();
    }
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    std::string literal(text.substr(start, pos - start));
    while (!literal.empty() && std::isspace(static_cast<unsigned char>(literal.back()))) literal.pop_back();
    try {
      v.push_back(parse_rational(literal));
    } catch (const DomainError&) {
      throw ParseError("malformed rational coefficient", start);
    }
    if (pos < text.size()) ++pos;  // comma
  }
  if (v.empty()) throw ParseError("empty binary form", 0);
  return BinaryForm<Rational>(std::move(v));
}

}  // namespace cuspg2::binform
