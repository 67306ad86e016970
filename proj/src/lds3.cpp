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

#include <optional>
#include <stdexcept>

namespace fnpw {

namespace {

constexpr std::uint32_t kA   = 1u;
constexpr std::uint32_t kB   = 2u;
constexpr std::uint32_t kC   = 4u;
constexpr std::uint32_t kAll = kA | kB | kC;

// An allocation from the restricted range. Agent index n stands for the
// dummy, which values every item at 1.
struct RangeAllocation
{
  std::vector<std::pair<std::size_t, std::uint32_t>> parts;  // sorted by agent index
};

std::vector<RangeAllocation> allowed_allocations(std::size_t n)
{
  std::size_t const            dummy = n;
  std::vector<RangeAllocation> out;
  out.push_back({{{dummy, kAll}}});

  std::pair<std::uint32_t, std::uint32_t> const divisions[] = {{kA | kB, kC}, {kA, kB | kC}};
  for (auto const &[left, right] : divisions)
  {
    for (std::size_t i = 0; i < n; ++i)
    {
      out.push_back({{{i, left}, {dummy, right}}});
      out.push_back({{{i, right}, {dummy, left}}});
    }
    for (std::size_t i = 0; i < n; ++i)
    {
      for (std::size_t j = i + 1; j < n; ++j)
      {
        out.push_back({{{i, left}, {j, right}}});
        out.push_back({{{i, right}, {j, left}}});
      }
    }
  }
  return out;
}

Money value_of(Profile const &p, std::size_t agent, std::uint32_t mask)
{
  if (agent == p.size())
  {
    return Money(std::popcount(mask));
  }
  return p[agent].valuation.value_of_mask(mask);
}

// Welfare of an allocation, optionally leaving one agent's value out.
Money welfare(Profile const &p, RangeAllocation const &a, std::optional<std::size_t> skip = std::nullopt)
{
  Money total;
  for (auto const &[agent, mask] : a.parts)
  {
    if (skip && *skip == agent)
    {
      continue;
    }
    total += value_of(p, agent, mask);
  }
  return total;
}

bool involves(RangeAllocation const &a, std::size_t agent)
{
  for (auto const &part : a.parts)
  {
    if (part.first == agent)
    {
      return true;
    }
  }
  return false;
}

struct RangeResult
{
  std::vector<Bundle> bundles;
  std::vector<Money>  payments;
};

// VCG over the allowed allocations with the dummy present. Welfare ties go
// to the lexicographically smallest (agent, bundle) list, the dummy counting
// as the last agent.
RangeResult maximal_in_range(Profile const &p)
{
  std::size_t const n     = p.size();
  auto const        range = allowed_allocations(n);

  std::size_t best = 0;
  Money       best_welfare = welfare(p, range[0]);
  for (std::size_t k = 1; k < range.size(); ++k)
  {
    Money w = welfare(p, range[k]);
    if (w > best_welfare || (w == best_welfare && range[k].parts < range[best].parts))
    {
      best         = k;
      best_welfare = std::move(w);
    }
  }

  RangeResult out;
  out.bundles.assign(n, Bundle::empty(3));
  out.payments.assign(n, Money{});
  for (auto const &[agent, mask] : range[best].parts)
  {
    if (agent == n)
    {
      continue;
    }
    out.bundles[agent] = Bundle(3, mask);

    Money without;
    bool  first = true;
    for (auto const &a : range)
    {
      if (involves(a, agent))
      {
        continue;
      }
      Money w = welfare(p, a);
      if (first || w > without)
      {
        without = std::move(w);
        first   = false;
      }
    }
    out.payments[agent] = without - welfare(p, range[best], agent);
  }
  return out;
}

}  // namespace

Outcome run_lds3(Profile const &profile)
{
  if (profile.items() != 3)
  {
    throw std::invalid_argument("lds3 is defined for exactly 3 items, got " + std::to_string(profile.items()));
  }
  std::size_t const   n = profile.size();
  Money const         reserve_all(3);
  std::vector<std::string> ids;
  for (auto const &a : profile.agents())
  {
    ids.push_back(a.id);
  }
  std::vector<Bundle> bundles(n, Bundle::empty(3));
  std::vector<Money>  payments(n);

  std::vector<std::size_t> high;
  for (std::size_t i = 0; i < n; ++i)
  {
    if (profile[i].valuation.value_of_mask(kAll) >= reserve_all)
    {
      high.push_back(i);
    }
  }

  if (high.size() >= 2)
  {
    // Vickrey auction of the grand bundle; earlier agents win ties.
    std::size_t winner = 0;
    for (std::size_t i = 1; i < n; ++i)
    {
      if (profile[i].valuation.value_of_mask(kAll) > profile[winner].valuation.value_of_mask(kAll))
      {
        winner = i;
      }
    }
    Money second;
    for (std::size_t i = 0; i < n; ++i)
    {
      if (i != winner)
      {
        second = max(second, profile[i].valuation.value_of_mask(kAll));
      }
    }
    bundles[winner]  = Bundle(3, kAll);
    payments[winner] = second;
    return Outcome(3, std::move(ids), std::move(bundles), std::move(payments));
  }

  RangeResult const mir = maximal_in_range(profile);
  if (high.empty())
  {
    return Outcome(3, std::move(ids), mir.bundles, mir.payments);
  }

  // Exactly one high bidder: she alone may win, choosing between the grand
  // bundle at 3 and her own result from the restricted auction.
  std::size_t const h           = high.front();
  auto const       &v           = profile[h].valuation;
  Money const       buy_all     = v.value_of_mask(kAll) - reserve_all;
  Money const       via_range   = v.value(mir.bundles[h]) - mir.payments[h];
  if (buy_all >= via_range)
  {
    bundles[h]  = Bundle(3, kAll);
    payments[h] = reserve_all;
  }
  else
  {
    bundles[h]  = mir.bundles[h];
    payments[h] = mir.payments[h];
  }
  return Outcome(3, std::move(ids), std::move(bundles), std::move(payments));
}

}  // namespace fnpw
