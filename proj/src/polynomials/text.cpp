#include "sidef/polynomials/text.hpp"

namespace sidef {

RPoly parse_poly(std::string_view text) {
  if (text.find_first_not_of(" \t") == std::string_view::npos) {
    throw ArgumentError("empty polynomial literal");
  }
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coeffs.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RPoly(std::move(coeffs));
}

std::string format_poly(const RPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ',';
    out += c.str();
  }
  return out;
}

}  // namespace sidef
