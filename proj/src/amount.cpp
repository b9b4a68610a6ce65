#include "sftlock/amount.hpp"

#include <algorithm>

#include "sftlock/errors.hpp"

namespace sftlock {

namespace {

constexpr Amount kMax = ~Amount{0};
constexpr int kDecimals = 18;

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Amount checked_mul_add(Amount acc, unsigned mul, unsigned add,
                       std::string_view text) {
  if (acc > (kMax - add) / mul) {
    fail(ErrorCode::parse, "amount overflows 128 bits: '" + std::string(text) + "'");
  }
  return acc * mul + add;
}

}  // namespace

std::string to_decimal(Amount value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Amount parse_decimal(std::string_view text) {
  if (!all_digits(text)) {
    fail(ErrorCode::parse, "expected a decimal integer: '" + std::string(text) + "'");
  }
  Amount acc = 0;
  for (char c : text) {
    acc = checked_mul_add(acc, 10, static_cast<unsigned>(c - '0'), text);
  }
  return acc;
}

Amount parse_shares(std::string_view text) {
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) {
    fail(ErrorCode::parse, "empty share amount");
  }
  if ((!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac)) ||
      (dot != std::string_view::npos && frac.empty())) {
    fail(ErrorCode::parse, "malformed share amount: '" + std::string(text) + "'");
  }
  if (frac.size() > kDecimals) {
    fail(ErrorCode::parse,
         "more than 18 fractional digits: '" + std::string(text) + "'");
  }
  Amount acc = whole.empty() ? 0 : parse_decimal(whole);
  for (int i = 0; i < kDecimals; ++i) {
    unsigned digit = i < static_cast<int>(frac.size())
                         ? static_cast<unsigned>(frac[i] - '0')
                         : 0U;
    acc = checked_mul_add(acc, 10, digit, text);
  }
  return acc;
}

Amount parse_amount(std::string_view text) {
  if (text.find('.') != std::string_view::npos) return parse_shares(text);
  return parse_decimal(text);
}

std::string to_shares(Amount value) {
  std::string out = to_decimal(value / kUnit);
  Amount frac = value % kUnit;
  if (frac == 0) return out;
  std::string digits = to_decimal(frac);
  digits.insert(0, kDecimals - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return out + "." + digits;
}

}  // namespace sftlock
