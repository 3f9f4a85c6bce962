#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace vrsp {

// Exact positive decimal number: digits_ / 10^exp_, normalized so that
// exp_ == 0 or digits_ % 10 != 0. Arc weights never pass through floating
// point; equality on them drives synchronisation.
class Weight {
 public:
  Weight() : digits_(1), exp_(0) {}

  // Accepts "1", "2.5", "0.25", ".5", "01.50". Throws NonPositiveWeight for
  // zero or negative values, ValidationError for anything malformed.
  static Weight parse(std::string_view text);

  static Weight from_int(std::int64_t n);

  std::string str() const;

  std::int64_t digits() const { return digits_; }
  int exponent() const { return exp_; }

  bool operator==(const Weight& o) const = default;
  std::strong_ordering operator<=>(const Weight& o) const;

 private:
  Weight(std::int64_t digits, int exp) : digits_(digits), exp_(exp) {}
  std::int64_t digits_;
  int exp_;
};

}  // namespace vrsp
