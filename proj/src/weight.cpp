#include "vrsp/weight.hpp"

#include <cctype>

#include "vrsp/errors.hpp"

namespace vrsp {

Weight Weight::parse(std::string_view text) {
  std::string_view s = text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(ErrorKind::ValidationError, "empty weight");

  std::string int_part, frac_part;
  std::size_t dot = s.find('.');
  if (dot == std::string_view::npos) {
    int_part = std::string(s);
  } else {
    int_part = std::string(s.substr(0, dot));
    frac_part = std::string(s.substr(dot + 1));
    if (frac_part.find('.') != std::string::npos)
      throw Error(ErrorKind::ValidationError, "malformed weight '" + std::string(text) + "'");
  }
  if (int_part.empty() && frac_part.empty())
    throw Error(ErrorKind::ValidationError, "malformed weight '" + std::string(text) + "'");
  for (char c : int_part + frac_part)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::ValidationError, "malformed weight '" + std::string(text) + "'");
  if (int_part.size() + frac_part.size() > 17)
    throw Error(ErrorKind::ValidationError, "weight too long '" + std::string(text) + "'");

  std::int64_t digits = 0;
  for (char c : int_part) digits = digits * 10 + (c - '0');
  int exp = 0;
  for (char c : frac_part) {
    digits = digits * 10 + (c - '0');
    ++exp;
  }
  while (exp > 0 && digits % 10 == 0) {
    digits /= 10;
    --exp;
  }
  if (digits == 0 || negative)
    throw Error(ErrorKind::NonPositiveWeight, "weight '" + std::string(text) + "' must be > 0");
  return Weight(digits, exp);
}

Weight Weight::from_int(std::int64_t n) {
  if (n <= 0) throw Error(ErrorKind::NonPositiveWeight, "weight must be > 0");
  return Weight(n, 0);
}

std::string Weight::str() const {
  std::string d = std::to_string(digits_);
  if (exp_ == 0) return d;
  if (static_cast<int>(d.size()) <= exp_) d.insert(0, exp_ + 1 - d.size(), '0');
  d.insert(d.size() - exp_, ".");
  return d;
}

std::strong_ordering Weight::operator<=>(const Weight& o) const {
  __int128 lhs = static_cast<__int128>(digits_);
  __int128 rhs = static_cast<__int128>(o.digits_);
  for (int i = 0; i < o.exp_; ++i) lhs *= 10;
  for (int i = 0; i < exp_; ++i) rhs *= 10;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace vrsp
