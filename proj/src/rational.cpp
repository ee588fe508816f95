#include "wordmap/rational.hpp"

#include <cctype>

#include "wordmap/error.hpp"

namespace wordmap {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::TrivialWord: return "TrivialWord";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::Cancelled: return "Cancelled";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::Syntax, "invalid rational literal '" + std::string(text) + "'");
  }
  BigInt d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorCode::Syntax, "zero denominator in '" + std::string(text) + "'");
  }
  BigInt n{std::string(num)};
  if (text.front() == '-') n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& value) { return value.get_str(); }

Rat pow(const Rat& value, std::int64_t e) {
  Rat base = value;
  if (e < 0) {
    base = 1 / value;
    e = -e;
  }
  Rat result = 1;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace wordmap
