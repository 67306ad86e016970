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

#pragma once

#include "fnpw/bundle.hpp"
#include "fnpw/money.hpp"
#include "fnpw/valuation.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fnpw {

struct Agent
{
  std::string   id;
  ValuationSpec valuation;
};

/// Ordered reported types. Order matters only for tie-breaks that name
/// agents (earlier agents win ties).
class Profile
{
public:
  Profile(int m, std::vector<Agent> agents);

  /// Ids "<prefix>0", "<prefix>1", ... for each type in order.
  static Profile from_types(int m, std::span<ValuationSpec const> types, std::string const &prefix = "a");

  int items() const
  {
    return m_;
  }
  std::size_t size() const
  {
    return agents_.size();
  }
  std::vector<Agent> const &agents() const
  {
    return agents_;
  }
  Agent const &operator[](std::size_t i) const
  {
    return agents_[i];
  }
  std::optional<std::size_t> index_of(std::string const &id) const;

  std::vector<ValuationSpec> types() const;
  /// Every type except the one at `skip`.
  std::vector<ValuationSpec> types_except(std::size_t skip) const;

private:
  int                m_;
  std::vector<Agent> agents_;
};

/// Bundles and payments per agent, in profile order.
class Outcome
{
public:
  /// Validates disjointness, nonnegative payments and zero payment for
  /// empty bundles. Throws std::invalid_argument otherwise.
  Outcome(int m, std::vector<std::string> ids, std::vector<Bundle> bundles, std::vector<Money> payments);

  int items() const
  {
    return m_;
  }
  std::size_t size() const
  {
    return ids_.size();
  }
  std::vector<std::string> const &ids() const
  {
    return ids_;
  }
  std::vector<Bundle> const &bundles() const
  {
    return bundles_;
  }
  std::vector<Money> const &payments() const
  {
    return payments_;
  }

  Bundle const &bundle(std::size_t i) const
  {
    return bundles_[i];
  }
  Money const &payment(std::size_t i) const
  {
    return payments_[i];
  }
  Bundle const &bundle_of(std::string const &id) const;
  Money const  &payment_of(std::string const &id) const;

  Money revenue() const;
  /// Sum of each agent's value for its own bundle, payments excluded.
  Money efficiency(Profile const &truth) const;

  friend bool operator==(Outcome const &, Outcome const &) = default;

private:
  std::size_t require(std::string const &id) const;

  int                      m_;
  std::vector<std::string> ids_;
  std::vector<Bundle>      bundles_;
  std::vector<Money>       payments_;
};

}  // namespace fnpw
