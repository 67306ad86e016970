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

#include "fnpw/manipulation.hpp"
#include "fnpw/io.hpp"
#include "fnpw/multiset.hpp"
#include "fnpw/simulate.hpp"

#include <algorithm>
#include <stdexcept>

namespace fnpw {

Money truthful_utility(Mechanism const &mech, ValuationSpec const &truth, std::span<ValuationSpec const> others)
{
  std::vector<ValuationSpec> all(others.begin(), others.end());
  all.push_back(truth);
  Outcome const out = mech.run(Profile::from_types(truth.items(), all));
  return truth.value(out.bundle(others.size())) - out.payment(others.size());
}

PlanOutcome evaluate_plan(Mechanism const &mech, ValuationSpec const &truth, std::span<ValuationSpec const> others,
                          std::span<ValuationSpec const> kept, std::span<ValuationSpec const> withdrawn)
{
  std::vector<ValuationSpec> all(others.begin(), others.end());
  all.insert(all.end(), kept.begin(), kept.end());
  all.insert(all.end(), withdrawn.begin(), withdrawn.end());
  Outcome const out = mech.run(Profile::from_types(truth.items(), all));

  Bundle got = Bundle::empty(truth.items());
  Money  paid;
  for (std::size_t i = others.size(); i < others.size() + kept.size(); ++i)
  {
    got = got | out.bundle(i);
    paid += out.payment(i);
  }
  return {got, paid, truth.value(got) - paid};
}

std::optional<ManipulationPlan> find_fnpw_manipulation(Mechanism const &mech, ValuationSpec const &truth,
                                                       std::span<ValuationSpec const> others,
                                                       std::span<ValuationSpec const> pool,
                                                       SearchOptions const           &opts)
{
  if (opts.k_max < 1 || opts.q_max < 0)
  {
    throw std::invalid_argument("k_max must be >= 1 and q_max >= 0");
  }
  int const m = truth.items();

  std::vector<ValuationSpec> candidates(pool.begin(), pool.end());
  if (opts.include_truth && std::find(candidates.begin(), candidates.end(), truth) == candidates.end())
  {
    candidates.push_back(truth);
  }

  Simulator   sim(mech, m);
  auto const  base_result = sim.single(others, truth);
  Money const base        = truth.value(base_result.bundle) - base_result.payment;

  std::size_t const q_max = opts.allow_withdrawal ? static_cast<std::size_t>(opts.q_max) : 0;
  std::size_t       budget = SIZE_MAX;
  if (opts.max_identities > 0)
  {
    if (static_cast<std::size_t>(opts.max_identities) <= others.size())
    {
      return std::nullopt;
    }
    budget = static_cast<std::size_t>(opts.max_identities) - others.size();
  }

  std::optional<ManipulationPlan> best;
  std::vector<ValuationSpec>      reported;
  for_each_multiset(candidates.size(), 1, std::min<std::size_t>(opts.k_max, budget), [&](auto const &kept_idx) {
    auto const  kept       = pick(candidates, kept_idx);
    std::size_t const room = std::min(q_max, budget - kept.size());
    for_each_multiset(candidates.size(), 0, room, [&](auto const &wd_idx) {
      auto const withdrawn = pick(candidates, wd_idx);
      reported             = kept;
      reported.insert(reported.end(), withdrawn.begin(), withdrawn.end());
      auto const results = sim.run(others, reported);

      Bundle got = Bundle::empty(m);
      Money  paid;
      for (std::size_t i = 0; i < kept.size(); ++i)
      {
        got = got | results[i].bundle;
        paid += results[i].payment;
      }
      Money const gain = truth.value(got) - paid - base;
      if (gain.sign() <= 0)
      {
        return true;
      }
      std::size_t const count = kept.size() + withdrawn.size();
      if (!best || gain > best->gain || (gain == best->gain && count < best->identities()))
      {
        best = ManipulationPlan{kept, withdrawn, got, paid, gain, base};
      }
      return true;
    });
    return true;
  });
  return best;
}

nlohmann::json plan_to_json(ManipulationPlan const &p)
{
  return {{"kept", types_to_json(p.kept)},
          {"withdrawn", types_to_json(p.withdrawn)},
          {"bundle", p.bundle.letters()},
          {"payment", money_to_json(p.payment)},
          {"gain", money_to_json(p.gain)},
          {"truthful_utility", money_to_json(p.truthful_utility)},
          {"pure_fnp", p.pure_fnp()}};
}

}  // namespace fnpw
