#include "proxyrep/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace proxyrep {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> try_parse_rational(const std::string& text) {
  std::size_t start = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    start = 1;
  }
  const std::size_t slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string::npos) {
    if (!all_digits(text, start, text.size())) return std::nullopt;
    num = BigInt(text.substr(start));
  } else {
    if (!all_digits(text, start, slash)) return std::nullopt;
    if (!all_digits(text, slash + 1, text.size())) return std::nullopt;
    num = BigInt(text.substr(start, slash - start));
    den = BigInt(text.substr(slash + 1));
    if (den == 0) return std::nullopt;
  }
  if (negative) num = -num;
  return Rat(num, den);
}

std::string to_string(const Rat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

BigInt denominator_lcm(const std::vector<Rat>& values) {
  BigInt acc = 1;
  for (const Rat& v : values) acc = boost::multiprecision::lcm(acc, denominator(v));
  return acc;
}

}  // namespace proxyrep
