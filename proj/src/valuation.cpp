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

#include "fnpw/valuation.hpp"
#include "fnpw/errors.hpp"
#include "fnpw/limits.hpp"

#include <sstream>
#include <stdexcept>

namespace fnpw {

struct ValuationSpec::Data
{
  Kind               kind{Kind::Explicit};
  int                m{0};
  std::vector<Money> table;
  std::vector<Money> per_item;
  Bundle             target;
  Money              target_value;
  std::string        key;
};

namespace {

std::string table_key(std::string_view tag, std::vector<Money> const &values)
{
  std::string k(tag);
  for (auto const &v : values)
  {
    k += ':';
    k += v.to_fraction();
  }
  return k;
}

}  // namespace

ValuationSpec::ValuationSpec(std::shared_ptr<Data const> d)
  : d_(std::move(d))
{}

ValuationSpec ValuationSpec::explicit_table(int m, std::vector<Money> by_mask)
{
  if (m < 0 || m > Bundle::kMaxItems)
  {
    throw std::invalid_argument("item count out of range");
  }
  if (by_mask.size() != (std::size_t{1} << m))
  {
    throw std::invalid_argument("explicit valuation needs 2^m = " + std::to_string(1u << m) +
                                " entries, got " + std::to_string(by_mask.size()));
  }
  auto d   = std::make_shared<Data>();
  d->kind  = Kind::Explicit;
  d->m     = m;
  d->table = std::move(by_mask);
  d->key   = "X" + std::to_string(m) + table_key("", d->table);
  return ValuationSpec(std::move(d));
}

ValuationSpec ValuationSpec::additive(std::vector<Money> per_item)
{
  int const m = static_cast<int>(per_item.size());
  if (m > Bundle::kMaxItems)
  {
    throw std::invalid_argument("item count out of range");
  }
  auto d      = std::make_shared<Data>();
  d->kind     = Kind::Additive;
  d->m        = m;
  d->per_item = std::move(per_item);
  d->table.resize(std::size_t{1} << m);
  for (std::uint32_t mask = 1; mask < d->table.size(); ++mask)
  {
    // Extend from the mask without its lowest item.
    int const low  = std::countr_zero(mask);
    d->table[mask] = d->table[mask & (mask - 1)] + d->per_item[static_cast<std::size_t>(low)];
  }
  d->key = "A" + std::to_string(m) + table_key("", d->per_item);
  return ValuationSpec(std::move(d));
}

ValuationSpec ValuationSpec::single_minded(Bundle target, Money value)
{
  int const m       = target.items();
  auto      d       = std::make_shared<Data>();
  d->kind           = Kind::SingleMinded;
  d->m              = m;
  d->target         = target;
  d->target_value   = value;
  d->table.assign(std::size_t{1} << m, Money{});
  for (std::uint32_t mask = 0; mask < d->table.size(); ++mask)
  {
    if ((target.mask() & ~mask) == 0)
    {
      d->table[mask] = value;
    }
  }
  d->key = "S" + std::to_string(m) + ":" + std::to_string(target.mask()) + ":" + value.to_fraction();
  return ValuationSpec(std::move(d));
}

ValuationSpec::Kind ValuationSpec::kind() const
{
  return d_->kind;
}

int ValuationSpec::items() const
{
  return d_->m;
}

Money const &ValuationSpec::value(Bundle const &s) const
{
  if (s.items() != d_->m)
  {
    throw std::invalid_argument("bundle over " + std::to_string(s.items()) +
                                " items evaluated by a valuation over " + std::to_string(d_->m));
  }
  return d_->table[s.mask()];
}

Money const &ValuationSpec::value_of_mask(std::uint32_t mask) const
{
  return d_->table[mask];
}

std::vector<Money> const &ValuationSpec::table() const
{
  return d_->table;
}

std::vector<Money> const &ValuationSpec::per_item() const
{
  if (d_->kind != Kind::Additive)
  {
    throw std::logic_error("per_item() on a non-additive valuation");
  }
  return d_->per_item;
}

Bundle const &ValuationSpec::target() const
{
  if (d_->kind != Kind::SingleMinded)
  {
    throw std::logic_error("target() on a non-single-minded valuation");
  }
  return d_->target;
}

Money const &ValuationSpec::target_value() const
{
  if (d_->kind != Kind::SingleMinded)
  {
    throw std::logic_error("target_value() on a non-single-minded valuation");
  }
  return d_->target_value;
}

std::string const &ValuationSpec::key() const
{
  return d_->key;
}

std::string ValuationSpec::describe() const
{
  std::ostringstream os;
  switch (d_->kind)
  {
  case Kind::SingleMinded:
    os << "SM(" << d_->target.to_string() << "," << d_->target_value << ")";
    break;
  case Kind::Additive:
    os << "Additive(";
    for (std::size_t i = 0; i < d_->per_item.size(); ++i)
    {
      os << (i ? "," : "") << d_->per_item[i];
    }
    os << ")";
    break;
  case Kind::Explicit:
    os << "Explicit{";
    for (std::uint32_t mask = 0; mask < d_->table.size(); ++mask)
    {
      os << (mask ? ", " : "") << Bundle(d_->m, mask).to_string() << ":" << d_->table[mask];
    }
    os << "}";
    break;
  }
  return os.str();
}

CheckReport validate(ValuationSpec const &v)
{
  int const      m     = v.items();
  auto const    &table = v.table();
  std::uint64_t  cases = 0;

  if (!table[0].is_zero())
  {
    return CheckReport::fail({{"reason", "nonzero empty bundle"}, {"value", table[0].to_string()}}, 1);
  }
  for (std::uint32_t mask = 0; mask < table.size(); ++mask)
  {
    ++cases;
    if (table[mask].sign() < 0)
    {
      return CheckReport::fail({{"reason", "negative value"},
                                {"bundle", Bundle(m, mask).letters()},
                                {"value", table[mask].to_string()}},
                               cases);
    }
  }
  // Checking each single-item extension is enough for monotonicity over all
  // pairs, but the witness is the first violating (B1, B2) with B1 ⊆ B2 in
  // mask order so it reads naturally.
  for (std::uint32_t big = 0; big < table.size(); ++big)
  {
    for (std::uint32_t small = big;; small = (small - 1) & big)
    {
      ++cases;
      if (table[small] > table[big])
      {
        return CheckReport::fail({{"reason", "not monotone"},
                                  {"b1", Bundle(m, small).letters()},
                                  {"b2", Bundle(m, big).letters()},
                                  {"v_b1", table[small].to_string()},
                                  {"v_b2", table[big].to_string()}},
                                 cases);
      }
      if (small == 0)
      {
        break;
      }
    }
  }
  return CheckReport::ok(cases);
}

Money marginal_value(ValuationSpec const &v, Bundle const &s, int item)
{
  if (s.contains(item))
  {
    throw std::invalid_argument("marginal_value: item " + std::to_string(item) + " already in " +
                                s.to_string());
  }
  return v.value(s.with(item)) - v.value(s);
}

std::vector<Bundle> minimal_bundles(ValuationSpec const &v)
{
  int const           m     = v.items();
  auto const         &table = v.table();
  std::vector<Bundle> out;
  for (std::uint32_t mask = 1; mask < table.size(); ++mask)
  {
    // By monotonicity, beating every maximal proper subset suffices; we
    // still compare against all of them so non-monotone input is handled.
    bool minimal = true;
    for (std::uint32_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask)
    {
      if (!(table[mask] > table[sub]))
      {
        minimal = false;
        break;
      }
      if (sub == 0)
      {
        break;
      }
    }
    if (minimal)
    {
      out.emplace_back(m, mask);
    }
  }
  return out;
}

Money Rng::uniform()
{
  return Money::dyadic(engine_() >> 11, 53);
}

std::uint64_t Rng::below(std::uint64_t n)
{
  if (n == 0)
  {
    throw std::invalid_argument("Rng::below(0)");
  }
  // Rejection sampling keeps the draw unbiased and portable.
  std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t       x     = engine_();
  while (x >= limit)
  {
    x = engine_();
  }
  return x % n;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
  // splitmix64 finalizer over a combination of the two inputs.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

GenMode gen_mode_from_string(std::string const &s)
{
  if (s == "substitutable")
  {
    return GenMode::Substitutable;
  }
  if (s == "complementary")
  {
    return GenMode::Complementary;
  }
  if (s == "additive")
  {
    return GenMode::Additive;
  }
  if (s == "single-minded" || s == "single_minded")
  {
    return GenMode::SingleMinded;
  }
  throw ParseError("unknown generation mode '" + s + "'");
}

std::string to_string(GenMode mode)
{
  switch (mode)
  {
  case GenMode::Substitutable:
    return "substitutable";
  case GenMode::Complementary:
    return "complementary";
  case GenMode::Additive:
    return "additive";
  case GenMode::SingleMinded:
    return "single-minded";
  }
  return "?";
}

ValuationSpec generate(GenMode mode, int m, Rng &rng)
{
  require_items(m);
  switch (mode)
  {
  case GenMode::Substitutable:
  case GenMode::Complementary: {
    if (m != 2)
    {
      throw std::invalid_argument(to_string(mode) + " generation requires m = 2");
    }
    Money const a = rng.uniform();
    Money const b = rng.uniform();
    Money       ab;
    if (mode == GenMode::Substitutable)
    {
      Money const lo = max(a, b);
      Money const hi = a + b;
      ab             = lo + rng.uniform() * (hi - lo);
    }
    else
    {
      ab = (a + b) * (Money(1) + rng.uniform());
    }
    return ValuationSpec::explicit_table(2, {Money{}, a, b, ab});
  }
  case GenMode::Additive: {
    std::vector<Money> per_item;
    per_item.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
    {
      per_item.push_back(rng.uniform());
    }
    return ValuationSpec::additive(std::move(per_item));
  }
  case GenMode::SingleMinded: {
    if (m < 1)
    {
      throw std::invalid_argument("single-minded generation requires m >= 1");
    }
    std::uint32_t const mask = 1 + static_cast<std::uint32_t>(rng.below((std::uint64_t{1} << m) - 1));
    return ValuationSpec::single_minded(Bundle(m, mask), rng.uniform());
  }
  }
  throw std::invalid_argument("unsupported generation mode");
}

}  // namespace fnpw
