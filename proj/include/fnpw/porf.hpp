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
#include "fnpw/profile.hpp"
#include "fnpw/valuation.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fnpw {

/// Price function of a price-oriented, rationing-free mechanism: the price
/// an agent faces for bundle `s` given the multiset of the other agents'
/// reported types.
///
/// Implementations must be pure and must not depend on the order of
/// `others`. Expected contract: price(empty) = 0, monotone in the bundle,
/// nonnegative.
class PriceFunction
{
public:
  virtual ~PriceFunction() = default;

  virtual std::string name() const = 0;
  virtual Money       price(Bundle const &s, std::span<ValuationSpec const> others) const = 0;

  /// Prices of all 2^m bundles, indexed by mask. Override when a row can be
  /// produced faster than 2^m independent `price` calls.
  virtual std::vector<Money> price_row(int m, std::span<ValuationSpec const> others) const;

  /// The bundle actually handed over when an agent demands `demanded` at the
  /// same payment. Identity by default.
  virtual Bundle award(Bundle const &demanded) const
  {
    return demanded;
  }
};

/// A bundle in argmax v(S) - prices[S]. Ties go to fewer items, then to the
/// lexicographically smaller item set, so the empty bundle wins any tie at
/// zero utility.
Bundle demand(ValuationSpec const &v, std::span<Money const> prices);

struct MechanismRun
{
  Profile                         profile;
  Outcome                         outcome;
  std::vector<std::vector<Money>> price_rows;  ///< per agent, indexed by mask
};

/// Runs the auction: every agent faces the row computed from all other
/// reports and receives its demand. Throws InfeasibleAllocation when two
/// agents demand a common item.
MechanismRun run_auction(PriceFunction const &mech, Profile const &profile);

/// An allocation/payment rule over profiles. Price functions are adapted
/// through `PorfMechanism`; direct procedures (LDS3) implement it directly.
class Mechanism
{
public:
  virtual ~Mechanism() = default;

  virtual std::string name() const = 0;
  virtual Outcome     run(Profile const &profile) const = 0;

  /// Non-null for price-function mechanisms.
  virtual PriceFunction const *pricing() const
  {
    return nullptr;
  }
  /// True when the outcome of an agent depends only on its own type and the
  /// multiset of others (so results may be cached by multiset).
  virtual bool anonymous() const
  {
    return false;
  }
};

class PorfMechanism final : public Mechanism
{
public:
  explicit PorfMechanism(std::shared_ptr<PriceFunction const> pricing);

  std::string          name() const override;
  Outcome              run(Profile const &profile) const override;
  PriceFunction const *pricing() const override
  {
    return pricing_.get();
  }
  bool anonymous() const override
  {
    return true;
  }

private:
  std::shared_ptr<PriceFunction const> pricing_;
};

}  // namespace fnpw
