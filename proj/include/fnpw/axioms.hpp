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
#include "fnpw/report.hpp"

#include <span>
#include <vector>

namespace fnpw {

/// Finite stand-in for the type space: every quantifier over types in the
/// checkers below ranges over a pool.
class TypePool
{
public:
  /// Throws std::invalid_argument if a type is over the wrong m or fails
  /// `validate`.
  TypePool(int m, std::vector<ValuationSpec> types);

  int items() const
  {
    return m_;
  }
  std::vector<ValuationSpec> const &types() const
  {
    return types_;
  }
  std::size_t size() const
  {
    return types_.size();
  }

private:
  int                        m_;
  std::vector<ValuationSpec> types_;
};

// --- price-function conditions ------------------------------------------------

/// Discounts for larger bundles: χ(S1) + χ(S2) >= χ(S1 ∪ S2) for disjoint S1, S2.
CheckReport check_dlb(PriceFunction const &mech, int m, std::span<ValuationSpec const> others);

/// Prices increase with agents: χ(S, O + extra) >= χ(S, O) for every S.
CheckReport check_pia(PriceFunction const &mech, int m, std::span<ValuationSpec const> others,
                      ValuationSpec const &extra);

/// DLB and PIA over every multiset O of pool types with |O| <= max_n and
/// every extra from the pool.
CheckReport check_snsaw(PriceFunction const &mech, TypePool const &pool, int max_n);

/// Runs the auction on `agents` and checks, for disjoint Y (nonempty) and Z,
///   Σ_{i∈Y} χ(B_i, O - i) >= χ(∪_{i∈Y} B_i, O - Y - Z).
/// Propagates InfeasibleAllocation.
CheckReport check_nsaw(PriceFunction const &mech, int m, std::span<ValuationSpec const> agents);
/// The Z = ∅ restriction of `check_nsaw`.
CheckReport check_nsa(PriceFunction const &mech, int m, std::span<ValuationSpec const> agents);

/// `check_nsaw` over every multiset of pool types of size 1..max_n.
CheckReport check_nsaw_sweep(PriceFunction const &mech, TypePool const &pool, int max_n);
CheckReport check_nsa_sweep(PriceFunction const &mech, TypePool const &pool, int max_n);

// --- allocation-rule conditions -----------------------------------------------
// X(t) is the bundle an agent reporting t receives against `others`.

CheckReport check_weak_monotonicity(Mechanism const &mech, TypePool const &pool,
                                    std::span<ValuationSpec const> others);

/// Sub-additivity with k false-name identities, 1 <= k <= k_max. All k
/// replacement premises must hold jointly for the implication to apply.
CheckReport check_subadditivity(Mechanism const &mech, TypePool const &pool, std::span<ValuationSpec const> others,
                                int k_max);

/// For θ, θa, θL, θU from the pool: if θL wins nothing of value against
/// others, and θU facing others + θa wins exactly X(θ), then
/// v(θL, X(θ)) <= v(θU, X(θ)).
CheckReport check_withdrawal_monotonicity(Mechanism const &mech, TypePool const &pool,
                                          std::span<ValuationSpec const> others);

// --- engine properties -----------------------------------------------------------

/// Individual rationality (truthful utility >= 0), pay-only (payments >= 0,
/// zero for an empty bundle) and strategy-proofness against every report in
/// `misreports` for every agent of `profile`.
CheckReport check_engine(Mechanism const &mech, Profile const &profile, std::span<ValuationSpec const> misreports);

// --- type-space condition ------------------------------------------------------

/// U(S1,Y) + U(S2,Y) >= U(S1∪S2,Y) + U(S1∩S2,Y) for every multiset Y of pool
/// types with 1 <= |Y| <= max_n.
CheckReport check_submodularity(TypePool const &pool, int max_n);

}  // namespace fnpw
