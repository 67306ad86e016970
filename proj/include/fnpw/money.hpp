//------------------------------------------------------------------------------
//
//   Copyright 2026 The fnpw Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fnpw {

/// Exact rational amount of auction currency.
///
/// Every comparison a mechanism or checker makes goes through this type, so
/// argmax ties and axiom inequalities are decided without rounding. Doubles
/// only appear through `to_double()`, which exists for report formatting.
class Money
{
public:
  Money() = default;
  Money(long value)  // NOLINT(google-explicit-constructor)
    : q_(value)
  {}
  Money(long num, long den);
  explicit Money(mpq_class q);

  /// Parses a finite decimal such as "2.2", "-0.5" or "7". Throws ParseError.
  static Money from_decimal(std::string_view text);
  /// Accepts everything `from_decimal` does plus "p/q" fractions.
  static Money parse(std::string_view text);
  /// k / 2^bits, the exact value of a dyadic uniform draw.
  static Money dyadic(std::uint64_t k, unsigned bits);

  /// Canonical text: a terminating decimal when one exists, else "p/q".
  std::string to_string() const;
  /// Always "p/q" (or "p" for integers).
  std::string to_fraction() const;
  double      to_double() const;

  bool is_zero() const
  {
    return sgn(q_) == 0;
  }
  int sign() const
  {
    return sgn(q_);
  }
  const mpq_class &raw() const
  {
    return q_;
  }

  Money &operator+=(Money const &o);
  Money &operator-=(Money const &o);
  Money &operator*=(Money const &o);
  Money &operator/=(Money const &o);

  friend Money operator+(Money a, Money const &b)
  {
    return a += b;
  }
  friend Money operator-(Money a, Money const &b)
  {
    return a -= b;
  }
  friend Money operator*(Money a, Money const &b)
  {
    return a *= b;
  }
  friend Money operator/(Money a, Money const &b)
  {
    return a /= b;
  }
  friend Money operator-(Money const &a)
  {
    return Money(mpq_class(-a.q_));
  }

  friend bool operator==(Money const &a, Money const &b)
  {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(Money const &a, Money const &b)
  {
    int const c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_{0};
};

std::ostream &operator<<(std::ostream &os, Money const &m);

Money max(Money const &a, Money const &b);
Money min(Money const &a, Money const &b);

}  // namespace fnpw
