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

#include "fnpw/mechanisms.hpp"
#include "fnpw/errors.hpp"
#include "fnpw/welfare.hpp"

#include <algorithm>

namespace fnpw {

Money price_vcg(Bundle const &s, std::span<ValuationSpec const> others)
{
  if (s.is_empty() || others.empty())
  {
    return Money{};
  }
  auto const u = efficient_values(s.items(), others);
  return u[Bundle::grand(s.items()).mask()] - u[s.complement().mask()];
}

Money price_set(Bundle const &s, std::span<ValuationSpec const> others)
{
  Money best;
  if (s.is_empty())
  {
    return best;
  }
  Bundle const g = Bundle::grand(s.items());
  for (auto const &o : others)
  {
    best = max(best, o.value(g));
  }
  return best;
}

Money price_mb(Bundle const &s, std::span<ValuationSpec const> others)
{
  Money best;
  if (s.is_empty())
  {
    return best;
  }
  for (auto const &o : others)
  {
    for (auto const &b : minimal_bundles(o))
    {
      if (b.intersects(s))
      {
        best = max(best, o.value(b));
      }
    }
  }
  return best;
}

std::vector<Money> mmvip_item_prices(int m, std::span<ValuationSpec const> others)
{
  std::vector<Money> prices(static_cast<std::size_t>(m));
  std::uint32_t const full = (std::uint32_t{1} << m) - 1;
  for (int item = 0; item < m; ++item)
  {
    std::uint32_t const bit  = std::uint32_t{1} << item;
    std::uint32_t const rest = full & ~bit;
    Money               best;
    for (auto const &o : others)
    {
      for (std::uint32_t s = rest;; s = (s - 1) & rest)
      {
        Money marginal = o.value_of_mask(s | bit) - o.value_of_mask(s);
        if (marginal > best)
        {
          best = std::move(marginal);
        }
        if (s == 0)
        {
          break;
        }
      }
    }
    prices[static_cast<std::size_t>(item)] = std::move(best);
  }
  return prices;
}

Money price_mmvip(Bundle const &s, std::span<ValuationSpec const> others)
{
  Money total;
  if (s.is_empty())
  {
    return total;
  }
  auto const items = mmvip_item_prices(s.items(), others);
  for (int i : s.item_list())
  {
    total += items[static_cast<std::size_t>(i)];
  }
  return total;
}

std::string VcgPricing::name() const
{
  return "vcg";
}

Money VcgPricing::price(Bundle const &s, std::span<ValuationSpec const> others) const
{
  return price_vcg(s, others);
}

std::vector<Money> VcgPricing::price_row(int m, std::span<ValuationSpec const> others) const
{
  std::vector<Money> row(std::size_t{1} << m);
  if (others.empty())
  {
    return row;
  }
  auto const          u    = efficient_values(m, others);
  std::uint32_t const full = static_cast<std::uint32_t>(row.size() - 1);
  for (std::uint32_t s = 1; s <= full; ++s)
  {
    row[s] = u[full] - u[full & ~s];
  }
  return row;
}

std::string SetPricing::name() const
{
  return "set";
}

Money SetPricing::price(Bundle const &s, std::span<ValuationSpec const> others) const
{
  return price_set(s, others);
}

std::string MinimalBundlePricing::name() const
{
  return "mb";
}

Money MinimalBundlePricing::price(Bundle const &s, std::span<ValuationSpec const> others) const
{
  return price_mb(s, others);
}

std::string MmvipPricing::name() const
{
  return "mmvip";
}

Money MmvipPricing::price(Bundle const &s, std::span<ValuationSpec const> others) const
{
  return price_mmvip(s, others);
}

std::vector<Money> MmvipPricing::price_row(int m, std::span<ValuationSpec const> others) const
{
  auto const         items = mmvip_item_prices(m, others);
  std::vector<Money> row(std::size_t{1} << m);
  for (std::uint32_t s = 1; s < row.size(); ++s)
  {
    int const low = std::countr_zero(s);
    row[s]        = row[s & (s - 1)] + items[static_cast<std::size_t>(low)];
  }
  return row;
}

std::string multiset_key(std::span<ValuationSpec const> types)
{
  std::vector<std::string const *> keys;
  keys.reserve(types.size());
  for (auto const &t : types)
  {
    keys.push_back(&t.key());
  }
  std::sort(keys.begin(), keys.end(), [](auto const *a, auto const *b) { return *a < *b; });
  std::string out;
  for (auto const *k : keys)
  {
    out += *k;
    out += '|';
  }
  return out;
}

std::shared_ptr<PriceFunction const> make_price_function(std::string_view id)
{
  if (id == "vcg")
  {
    return std::make_shared<VcgPricing>();
  }
  if (id == "set")
  {
    return std::make_shared<SetPricing>();
  }
  if (id == "mb")
  {
    return std::make_shared<MinimalBundlePricing>();
  }
  if (id == "mmvip")
  {
    return std::make_shared<MmvipPricing>();
  }
  if (id.starts_with("amd:"))
  {
    return std::make_shared<AmdPricing>(make_price_function(id.substr(4)));
  }
  throw ParseError("unknown price function '" + std::string(id) + "'");
}

std::shared_ptr<Mechanism const> make_mechanism(std::string_view id)
{
  if (id == "lds3")
  {
    return std::make_shared<Lds3Mechanism>();
  }
  return std::make_shared<PorfMechanism>(make_price_function(id));
}

}  // namespace fnpw
