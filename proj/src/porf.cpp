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

#include "fnpw/porf.hpp"
#include "fnpw/errors.hpp"
#include "fnpw/limits.hpp"

#include <stdexcept>

namespace fnpw {

std::vector<Money> PriceFunction::price_row(int m, std::span<ValuationSpec const> others) const
{
  std::vector<Money> row;
  row.reserve(std::size_t{1} << m);
  for (auto const &s : all_subsets(m))
  {
    row.push_back(price(s, others));
  }
  return row;
}

Bundle demand(ValuationSpec const &v, std::span<Money const> prices)
{
  int const m = v.items();
  if (prices.size() != (std::size_t{1} << m))
  {
    throw std::invalid_argument("price row has " + std::to_string(prices.size()) + " entries, expected 2^" +
                                std::to_string(m));
  }
  Bundle best = Bundle::empty(m);
  Money  best_utility;  // the empty bundle always yields 0
  for (std::uint32_t mask = 1; mask < prices.size(); ++mask)
  {
    Bundle const cand(m, mask);
    Money        u = v.value_of_mask(mask) - prices[mask];
    if (u > best_utility || (u == best_utility && precedes(cand, best)))
    {
      best         = cand;
      best_utility = std::move(u);
    }
  }
  return best;
}

MechanismRun run_auction(PriceFunction const &mech, Profile const &profile)
{
  int const m = profile.items();
  require_items(m);
  require_agents(profile.size());

  std::vector<std::vector<Money>> rows;
  std::vector<Bundle>             bundles;
  std::vector<Money>              payments;
  std::vector<std::string>        ids;
  rows.reserve(profile.size());

  for (std::size_t i = 0; i < profile.size(); ++i)
  {
    auto const others = profile.types_except(i);
    rows.push_back(mech.price_row(m, others));
    if (!rows.back()[0].is_zero())
    {
      throw std::logic_error(mech.name() + ": nonzero price for the empty bundle");
    }
    Bundle const b = demand(profile[i].valuation, rows.back());
    bundles.push_back(mech.award(b));
    payments.push_back(rows.back()[b.mask()]);
    ids.push_back(profile[i].id);
  }

  for (int item = 0; item < m; ++item)
  {
    std::vector<std::string> claimants;
    for (std::size_t i = 0; i < bundles.size(); ++i)
    {
      if (bundles[i].contains(item))
      {
        claimants.push_back(ids[i]);
      }
    }
    if (claimants.size() > 1)
    {
      throw InfeasibleAllocation(item, std::move(claimants));
    }
  }

  Outcome outcome(m, std::move(ids), std::move(bundles), std::move(payments));
  return MechanismRun{profile, std::move(outcome), std::move(rows)};
}

PorfMechanism::PorfMechanism(std::shared_ptr<PriceFunction const> pricing)
  : pricing_(std::move(pricing))
{
  if (!pricing_)
  {
    throw std::invalid_argument("PorfMechanism needs a price function");
  }
}

std::string PorfMechanism::name() const
{
  return pricing_->name();
}

Outcome PorfMechanism::run(Profile const &profile) const
{
  return run_auction(*pricing_, profile).outcome;
}

}  // namespace fnpw
