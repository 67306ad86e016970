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

#include "fnpw/welfare.hpp"
#include "fnpw/limits.hpp"

#include <stdexcept>
#include <utility>

namespace fnpw {

namespace {

void require_common_m(int m, std::span<ValuationSpec const> agents)
{
  for (auto const &a : agents)
  {
    if (a.items() != m)
    {
      throw std::invalid_argument("valuation over " + std::to_string(a.items()) +
                                  " items in an auction over " + std::to_string(m));
    }
  }
}

// Pass k of the agent DP: next[S] = max over T ⊆ S of v_k(T) + prev[S \ T].
std::vector<Money> fold_agent(ValuationSpec const &v, std::vector<Money> const &prev)
{
  std::vector<Money> next(prev.size());
  for (std::uint32_t s = 0; s < prev.size(); ++s)
  {
    Money best = prev[s];
    for (std::uint32_t t = s; t != 0; t = (t - 1) & s)
    {
      Money cand = v.value_of_mask(t) + prev[s & ~t];
      if (cand > best)
      {
        best = std::move(cand);
      }
    }
    next[s] = std::move(best);
  }
  return next;
}

struct Best
{
  Money                                          value;
  int                                            items{0};
  std::vector<std::pair<std::size_t, std::uint32_t>> seq;
};

bool better(Best const &a, Best const &b)
{
  if (a.value != b.value)
  {
    return a.value > b.value;
  }
  if (a.items != b.items)
  {
    return a.items < b.items;
  }
  return a.seq < b.seq;
}

}  // namespace

std::vector<Money> efficient_values(int m, std::span<ValuationSpec const> agents)
{
  require_items(m);
  require_agents(agents.size());
  require_common_m(m, agents);

  std::vector<Money> f(std::size_t{1} << m);
  for (auto it = agents.rbegin(); it != agents.rend(); ++it)
  {
    f = fold_agent(*it, f);
  }
  return f;
}

Money efficient_value(Bundle const &s, std::span<ValuationSpec const> agents)
{
  if (s.is_empty() || agents.empty())
  {
    require_common_m(s.items(), agents);
    return Money{};
  }
  return efficient_values(s.items(), agents)[s.mask()];
}

AllocationResult efficient_allocation(Bundle const &s, std::span<Agent const> agents)
{
  int const m = s.items();
  require_items(m);
  require_agents(agents.size());
  for (auto const &a : agents)
  {
    if (a.valuation.items() != m)
    {
      throw std::invalid_argument("agent '" + a.id + "' valuation has wrong item count");
    }
  }

  std::size_t const n    = agents.size();
  std::size_t const full = std::size_t{1} << m;

  // best[S] for the suffix of agents k..n-1, built from the last agent back.
  std::vector<Best> best(full);
  for (std::size_t k = n; k-- > 0;)
  {
    auto const       &v = agents[k].valuation;
    std::vector<Best> next(full);
    for (std::uint32_t rem = 0; rem < full; ++rem)
    {
      if ((rem & ~s.mask()) != 0)
      {
        continue;
      }
      Best chosen = best[rem];
      for (std::uint32_t t = rem; t != 0; t = (t - 1) & rem)
      {
        Best const &rest = best[rem & ~t];
        Best        cand;
        cand.value = v.value_of_mask(t) + rest.value;
        cand.items = std::popcount(t) + rest.items;
        cand.seq.reserve(rest.seq.size() + 1);
        cand.seq.emplace_back(k, t);
        cand.seq.insert(cand.seq.end(), rest.seq.begin(), rest.seq.end());
        if (better(cand, chosen))
        {
          chosen = std::move(cand);
        }
      }
      next[rem] = std::move(chosen);
    }
    best = std::move(next);
  }

  AllocationResult out;
  out.total = best[s.mask()].value;
  out.bundles.assign(n, Bundle::empty(m));
  for (auto const &[k, mask] : best[s.mask()].seq)
  {
    out.bundles[k] = Bundle(m, mask);
  }
  return out;
}

}  // namespace fnpw
