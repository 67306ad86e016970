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

#include "fnpw/simulate.hpp"
#include "fnpw/mechanisms.hpp"

#include <algorithm>

namespace fnpw {

Simulator::Simulator(Mechanism const &mech, int m)
  : mech_(mech)
  , m_(m)
{}

std::vector<IdentityResult> Simulator::run(std::span<ValuationSpec const> others,
                                           std::span<ValuationSpec const> identities)
{
  if (mech_.anonymous())
  {
    std::vector<ValuationSpec> all(others.begin(), others.end());
    all.insert(all.end(), identities.begin(), identities.end());
    std::string const key = multiset_key(all);

    auto it = anon_cache_.find(key);
    if (it == anon_cache_.end())
    {
      std::sort(all.begin(), all.end(), [](auto const &a, auto const &b) { return a.key() < b.key(); });
      Outcome const out = mech_.run(Profile::from_types(m_, all));
      ++runs_;
      std::map<std::string, IdentityResult> by_type;
      for (std::size_t i = 0; i < all.size(); ++i)
      {
        by_type.emplace(all[i].key(), IdentityResult{out.bundle(i), out.payment(i)});
      }
      it = anon_cache_.emplace(key, std::move(by_type)).first;
    }

    std::vector<IdentityResult> res;
    res.reserve(identities.size());
    for (auto const &t : identities)
    {
      res.push_back(it->second.at(t.key()));
    }
    return res;
  }

  std::string key;
  for (auto const &t : others)
  {
    key += t.key() + '|';
  }
  key += '#';
  for (auto const &t : identities)
  {
    key += t.key() + '|';
  }
  auto it = ordered_cache_.find(key);
  if (it == ordered_cache_.end())
  {
    std::vector<Agent> agents;
    for (std::size_t i = 0; i < others.size(); ++i)
    {
      agents.push_back({"o" + std::to_string(i), others[i]});
    }
    for (std::size_t i = 0; i < identities.size(); ++i)
    {
      agents.push_back({"i" + std::to_string(i), identities[i]});
    }
    Outcome const out = mech_.run(Profile(m_, std::move(agents)));
    ++runs_;
    std::vector<IdentityResult> res;
    for (std::size_t i = 0; i < identities.size(); ++i)
    {
      res.push_back({out.bundle(others.size() + i), out.payment(others.size() + i)});
    }
    it = ordered_cache_.emplace(std::move(key), std::move(res)).first;
  }
  return it->second;
}

IdentityResult Simulator::single(std::span<ValuationSpec const> others, ValuationSpec const &t)
{
  return run(others, std::span<ValuationSpec const>(&t, 1)).front();
}

Bundle Simulator::allocation(std::span<ValuationSpec const> others, ValuationSpec const &t)
{
  return single(others, t).bundle;
}

}  // namespace fnpw
