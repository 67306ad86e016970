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

#include "fnpw/profile.hpp"

#include <set>
#include <stdexcept>

namespace fnpw {

Profile::Profile(int m, std::vector<Agent> agents)
  : m_(m)
  , agents_(std::move(agents))
{
  std::set<std::string> seen;
  for (auto const &a : agents_)
  {
    if (!seen.insert(a.id).second)
    {
      throw std::invalid_argument("duplicate agent id '" + a.id + "'");
    }
    if (a.valuation.items() != m_)
    {
      throw std::invalid_argument("agent '" + a.id + "' has a valuation over " +
                                  std::to_string(a.valuation.items()) + " items, profile has " +
                                  std::to_string(m_));
    }
  }
}

Profile Profile::from_types(int m, std::span<ValuationSpec const> types, std::string const &prefix)
{
  std::vector<Agent> agents;
  agents.reserve(types.size());
  for (std::size_t i = 0; i < types.size(); ++i)
  {
    agents.push_back({prefix + std::to_string(i), types[i]});
  }
  return Profile(m, std::move(agents));
}

std::optional<std::size_t> Profile::index_of(std::string const &id) const
{
  for (std::size_t i = 0; i < agents_.size(); ++i)
  {
    if (agents_[i].id == id)
    {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<ValuationSpec> Profile::types() const
{
  std::vector<ValuationSpec> out;
  out.reserve(agents_.size());
  for (auto const &a : agents_)
  {
    out.push_back(a.valuation);
  }
  return out;
}

std::vector<ValuationSpec> Profile::types_except(std::size_t skip) const
{
  std::vector<ValuationSpec> out;
  out.reserve(agents_.size());
  for (std::size_t i = 0; i < agents_.size(); ++i)
  {
    if (i != skip)
    {
      out.push_back(agents_[i].valuation);
    }
  }
  return out;
}

Outcome::Outcome(int m, std::vector<std::string> ids, std::vector<Bundle> bundles, std::vector<Money> payments)
  : m_(m)
  , ids_(std::move(ids))
  , bundles_(std::move(bundles))
  , payments_(std::move(payments))
{
  if (ids_.size() != bundles_.size() || ids_.size() != payments_.size())
  {
    throw std::invalid_argument("outcome: ids, bundles and payments differ in length");
  }
  std::uint32_t taken = 0;
  for (std::size_t i = 0; i < ids_.size(); ++i)
  {
    if (bundles_[i].items() != m_)
    {
      throw std::invalid_argument("outcome: bundle for '" + ids_[i] + "' has wrong item count");
    }
    if ((taken & bundles_[i].mask()) != 0)
    {
      throw std::invalid_argument("outcome: bundle for '" + ids_[i] + "' overlaps another allocation");
    }
    taken |= bundles_[i].mask();
    if (payments_[i].sign() < 0)
    {
      throw std::invalid_argument("outcome: negative payment for '" + ids_[i] + "'");
    }
    if (bundles_[i].is_empty() && !payments_[i].is_zero())
    {
      throw std::invalid_argument("outcome: '" + ids_[i] + "' pays for nothing");
    }
  }
}

std::size_t Outcome::require(std::string const &id) const
{
  for (std::size_t i = 0; i < ids_.size(); ++i)
  {
    if (ids_[i] == id)
    {
      return i;
    }
  }
  throw std::out_of_range("no agent '" + id + "' in outcome");
}

Bundle const &Outcome::bundle_of(std::string const &id) const
{
  return bundles_[require(id)];
}

Money const &Outcome::payment_of(std::string const &id) const
{
  return payments_[require(id)];
}

Money Outcome::revenue() const
{
  Money total;
  for (auto const &p : payments_)
  {
    total += p;
  }
  return total;
}

Money Outcome::efficiency(Profile const &truth) const
{
  Money total;
  for (std::size_t i = 0; i < ids_.size(); ++i)
  {
    auto const idx = truth.index_of(ids_[i]);
    if (!idx)
    {
      throw std::invalid_argument("efficiency: outcome agent '" + ids_[i] + "' not in profile");
    }
    total += truth[*idx].valuation.value(bundles_[i]);
  }
  return total;
}

}  // namespace fnpw
