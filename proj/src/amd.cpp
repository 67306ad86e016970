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
#include "fnpw/limits.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace fnpw {

namespace {

using Lookup = std::function<std::optional<Money>(std::string const &)>;
using Store  = std::function<void(std::string const &, Money const &)>;

// Largest χ(S1 ∪ S2) - χ(S1) - χ(S2) over disjoint S1, S2; 0 at S1 = S2 = ∅.
Money discount_gap(std::vector<Money> const &row)
{
  Money best;
  for (std::uint32_t u = 1; u < row.size(); ++u)
  {
    for (std::uint32_t s1 = u;; s1 = (s1 - 1) & u)
    {
      Money gap = row[u] - row[s1] - row[u & ~s1];
      if (gap > best)
      {
        best = std::move(gap);
      }
      if (s1 == 0)
      {
        break;
      }
    }
  }
  return best;
}

Money compute_h(PriceFunction const &base, int m, std::span<ValuationSpec const> others, Lookup const &lookup,
                Store const &store)
{
  require_items(m);
  require_agents(others.size());

  std::size_t const             n     = others.size();
  std::size_t const             count = std::size_t{1} << n;
  std::vector<Money>            h(count);
  std::vector<std::vector<Money>> rows(count);
  std::string const             prefix = "m" + std::to_string(m) + "#";

  auto subset_types = [&](std::size_t mask) {
    std::vector<ValuationSpec> t;
    for (std::size_t j = 0; j < n; ++j)
    {
      if ((mask >> j) & 1u)
      {
        t.push_back(others[j]);
      }
    }
    return t;
  };
  auto row_of = [&](std::size_t mask) -> std::vector<Money> const & {
    if (rows[mask].empty())
    {
      rows[mask] = base.price_row(m, subset_types(mask));
    }
    return rows[mask];
  };

  // T \ {j} < T as masks, so increasing mask order is bottom-up.
  for (std::size_t t = 0; t < count; ++t)
  {
    auto const        types = subset_types(t);
    std::string const key   = prefix + multiset_key(types);
    if (auto cached = lookup(key))
    {
      h[t] = *cached;
      continue;
    }

    auto const &row = row_of(t);
    Money       best = discount_gap(row);
    for (std::size_t j = 0; j < n; ++j)
    {
      if (!((t >> j) & 1u))
      {
        continue;
      }
      std::size_t const without = t & ~(std::size_t{1} << j);
      auto const       &smaller = row_of(without);
      for (std::uint32_t s = 1; s < row.size(); ++s)
      {
        Money drop = h[without] + smaller[s] - row[s];
        if (drop > best)
        {
          best = std::move(drop);
        }
      }
    }
    h[t] = best;
    store(key, best);
  }
  return h[count - 1];
}

}  // namespace

AmdPricing::AmdPricing(std::shared_ptr<PriceFunction const> base)
  : base_(std::move(base))
{
  if (!base_)
  {
    throw std::invalid_argument("AmdPricing needs a base price function");
  }
}

std::string AmdPricing::name() const
{
  return "amd:" + base_->name();
}

Money AmdPricing::h(int m, std::span<ValuationSpec const> others) const
{
  Lookup lookup = [this](std::string const &key) -> std::optional<Money> {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end())
    {
      return std::nullopt;
    }
    return it->second;
  };
  Store store = [this](std::string const &key, Money const &value) {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key, value);
  };
  return compute_h(*base_, m, others, lookup, store);
}

std::size_t AmdPricing::memo_size() const
{
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

Money AmdPricing::price(Bundle const &s, std::span<ValuationSpec const> others) const
{
  if (s.is_empty())
  {
    return Money{};
  }
  return base_->price(s, others) + h(s.items(), others);
}

std::vector<Money> AmdPricing::price_row(int m, std::span<ValuationSpec const> others) const
{
  auto        row = base_->price_row(m, others);
  Money const add = h(m, others);
  for (std::size_t s = 1; s < row.size(); ++s)
  {
    row[s] += add;
  }
  return row;
}

Money amd_h(PriceFunction const &base, int m, std::span<ValuationSpec const> others)
{
  std::map<std::string, Money> memo;
  return compute_h(
    base, m, others,
    [&memo](std::string const &key) -> std::optional<Money> {
      auto it = memo.find(key);
      return it == memo.end() ? std::nullopt : std::optional<Money>(it->second);
    },
    [&memo](std::string const &key, Money const &value) { memo.emplace(key, value); });
}

Money amd_price(PriceFunction const &base, Bundle const &s, std::span<ValuationSpec const> others)
{
  if (s.is_empty())
  {
    return Money{};
  }
  return base.price(s, others) + amd_h(base, s.items(), others);
}

}  // namespace fnpw
