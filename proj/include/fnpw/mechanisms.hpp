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

#include "fnpw/porf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>

namespace fnpw {

// Price functions of the mechanism zoo. `others` is a multiset; an empty
// bundle always costs 0.

/// VCG: U(G, others) - U(G \ s, others).
Money price_vcg(Bundle const &s, std::span<ValuationSpec const> others);
/// Set: the grand bundle sold by Vickrey; any nonempty s costs the best
/// rival value for G.
Money price_set(Bundle const &s, std::span<ValuationSpec const> others);
/// Minimal bundle: the highest rival value of a minimal bundle meeting s.
Money price_mb(Bundle const &s, std::span<ValuationSpec const> others);
/// Maximum marginal value item pricing: each item costs the largest
/// marginal value any rival has for it over all bundles of other items.
Money price_mmvip(Bundle const &s, std::span<ValuationSpec const> others);
/// Per-item MMVIP prices, indexed by item.
std::vector<Money> mmvip_item_prices(int m, std::span<ValuationSpec const> others);

class VcgPricing final : public PriceFunction
{
public:
  std::string        name() const override;
  Money              price(Bundle const &s, std::span<ValuationSpec const> others) const override;
  std::vector<Money> price_row(int m, std::span<ValuationSpec const> others) const override;
};

class SetPricing final : public PriceFunction
{
public:
  std::string name() const override;
  Money       price(Bundle const &s, std::span<ValuationSpec const> others) const override;
  /// The winner always receives the grand bundle.
  Bundle award(Bundle const &demanded) const override
  {
    return demanded.is_empty() ? demanded : Bundle::grand(demanded.items());
  }
};

class MinimalBundlePricing final : public PriceFunction
{
public:
  std::string name() const override;
  Money       price(Bundle const &s, std::span<ValuationSpec const> others) const override;
};

class MmvipPricing final : public PriceFunction
{
public:
  std::string        name() const override;
  Money              price(Bundle const &s, std::span<ValuationSpec const> others) const override;
  std::vector<Money> price_row(int m, std::span<ValuationSpec const> others) const override;
};

/// The AMD transform of a base price function: every nonempty bundle's
/// price is raised by H(others), where H is the largest of
///  - the worst bundle-discount gap  max χ(S1∪S2) - χ(S1) - χ(S2), and
///  - the worst price drop from removing one rival  H(T\j) + χ(S,T\j) - χ(S,T),
/// computed bottom-up over sub-multisets of others. H is memoized by the
/// canonical multiset; the memo is guarded so one instance may be shared
/// across threads.
class AmdPricing final : public PriceFunction
{
public:
  explicit AmdPricing(std::shared_ptr<PriceFunction const> base);

  std::string        name() const override;
  Money              price(Bundle const &s, std::span<ValuationSpec const> others) const override;
  std::vector<Money> price_row(int m, std::span<ValuationSpec const> others) const override;
  Bundle             award(Bundle const &demanded) const override
  {
    return base_->award(demanded);
  }

  PriceFunction const &base() const
  {
    return *base_;
  }
  Money       h(int m, std::span<ValuationSpec const> others) const;
  std::size_t memo_size() const;

private:
  std::shared_ptr<PriceFunction const> base_;
  mutable std::mutex                   mutex_;
  mutable std::map<std::string, Money> memo_;
};

Money amd_h(PriceFunction const &base, int m, std::span<ValuationSpec const> others);
Money amd_price(PriceFunction const &base, Bundle const &s, std::span<ValuationSpec const> others);

/// Canonical key of a multiset of types (sorted member keys).
std::string multiset_key(std::span<ValuationSpec const> types);

/// The concrete three-item leveled division set mechanism: reserve price 1,
/// level one {ABC}, level two the divisions {AB|C} and {A|BC}.
///  (a) two or more agents value ABC at >= 3: Vickrey auction of ABC;
///  (b) nobody does: a dummy agent valuing each item at 1 joins and VCG runs
///      over the five allowed allocation classes;
///  (c) exactly one does: that agent alone may win, taking the better of
///      ABC at price 3 and its own result from (b) run with everyone.
/// Items won by the dummy stay unsold. Throws std::invalid_argument if m != 3.
Outcome run_lds3(Profile const &profile);

class Lds3Mechanism final : public Mechanism
{
public:
  std::string name() const override
  {
    return "lds3";
  }
  Outcome run(Profile const &profile) const override
  {
    return run_lds3(profile);
  }
};

/// "vcg", "set", "mb", "mmvip", "amd:<base>".
std::shared_ptr<PriceFunction const> make_price_function(std::string_view id);
/// Any price-function id, or "lds3".
std::shared_ptr<Mechanism const> make_mechanism(std::string_view id);

}  // namespace fnpw
