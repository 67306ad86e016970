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

#include "fnpw/money.hpp"
#include "fnpw/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

namespace fnpw {

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty())
  {
    return false;
  }
  for (char c : s)
  {
    if (!std::isdigit(static_cast<unsigned char>(c)))
    {
      return false;
    }
  }
  return true;
}

std::string_view strip_sign(std::string_view text, bool &negative)
{
  negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+'))
  {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  return text;
}

}  // namespace

InfeasibleAllocation::InfeasibleAllocation(int item, std::vector<std::string> agents)
  : std::runtime_error("infeasible allocation: item " + std::to_string(item) +
                       " demanded by more than one agent")
  , item_(item)
  , agents_(std::move(agents))
{}

Money::Money(long num, long den)
  : q_(num, den)
{
  if (den == 0)
  {
    throw std::invalid_argument("zero denominator");
  }
  q_.canonicalize();
}

Money::Money(mpq_class q)
  : q_(std::move(q))
{
  q_.canonicalize();
}

Money Money::from_decimal(std::string_view text)
{
  bool             negative = false;
  std::string_view body     = strip_sign(text, negative);

  auto const       dot      = body.find('.');
  std::string_view whole    = body.substr(0, dot);
  std::string_view frac     = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);

  if (!all_digits(whole) || (dot != std::string_view::npos && !all_digits(frac)))
  {
    throw ParseError("malformed decimal: '" + std::string(text) + "'");
  }

  mpz_class num(std::string(whole) + std::string(frac), 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  mpq_class q(num, den);
  q.canonicalize();
  if (negative)
  {
    q = -q;
  }
  return Money(std::move(q));
}

Money Money::parse(std::string_view text)
{
  auto const slash = text.find('/');
  if (slash == std::string_view::npos)
  {
    return from_decimal(text);
  }
  bool             negative = false;
  std::string_view num      = strip_sign(text.substr(0, slash), negative);
  std::string_view den      = text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
  {
    throw ParseError("malformed fraction: '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0)
  {
    throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  mpq_class q(mpz_class(std::string(num), 10), d);
  q.canonicalize();
  if (negative)
  {
    q = -q;
  }
  return Money(std::move(q));
}

Money Money::dyadic(std::uint64_t k, unsigned bits)
{
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(k), 0, 0, &k);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  return Money(mpq_class(num, den));
}

std::string Money::to_string() const
{
  // Terminating iff the reduced denominator is 2^a 5^b.
  mpz_class den = q_.get_den();
  unsigned  twos = 0;
  unsigned  fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2))
  {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5))
  {
    den /= 5;
    ++fives;
  }
  if (den != 1)
  {
    return to_fraction();
  }

  unsigned const digits = std::max(twos, fives);
  mpz_class      scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = q_.get_num() * scale / q_.get_den();

  bool const negative = scaled < 0;
  if (negative)
  {
    scaled = -scaled;
  }
  std::string s = scaled.get_str();
  if (digits > 0)
  {
    if (s.size() <= digits)
    {
      s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, 1, '.');
  }
  return negative ? "-" + s : s;
}

std::string Money::to_fraction() const
{
  return q_.get_str();
}

double Money::to_double() const
{
  return q_.get_d();
}

Money &Money::operator+=(Money const &o)
{
  q_ += o.q_;
  return *this;
}

Money &Money::operator-=(Money const &o)
{
  q_ -= o.q_;
  return *this;
}

Money &Money::operator*=(Money const &o)
{
  q_ *= o.q_;
  return *this;
}

Money &Money::operator/=(Money const &o)
{
  if (o.is_zero())
  {
    throw std::domain_error("division by zero");
  }
  q_ /= o.q_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, Money const &m)
{
  return os << m.to_string();
}

Money max(Money const &a, Money const &b)
{
  return a < b ? b : a;
}

Money min(Money const &a, Money const &b)
{
  return b < a ? b : a;
}

}  // namespace fnpw
