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

#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

namespace fnpw {

/// A false-name strategy: report `kept` and `withdrawn` identities, then
/// abandon the withdrawn ones (their bundles and payments are discarded).
struct ManipulationPlan
{
  std::vector<ValuationSpec> kept;
  std::vector<ValuationSpec> withdrawn;
  Bundle                     bundle;
  Money                      payment;
  Money                      gain;
  Money                      truthful_utility;

  bool pure_fnp() const
  {
    return withdrawn.empty();
  }
  std::size_t identities() const
  {
    return kept.size() + withdrawn.size();
  }
};

struct SearchOptions
{
  int  k_max{2};
  int  q_max{2};
  bool allow_withdrawal{true};
  /// Adds the truthful type to the candidate identities.
  bool include_truth{true};
  /// When positive, caps |others| + kept + withdrawn.
  int max_identities{0};
};

/// v(truth, X) - P for a single truthful report facing `others`.
Money truthful_utility(Mechanism const &mech, ValuationSpec const &truth, std::span<ValuationSpec const> others);

struct PlanOutcome
{
  Bundle bundle;
  Money  payment;
  Money  utility;
};

/// Replays a strategy with a fresh mechanism run (no caching).
PlanOutcome evaluate_plan(Mechanism const &mech, ValuationSpec const &truth, std::span<ValuationSpec const> others,
                          std::span<ValuationSpec const> kept, std::span<ValuationSpec const> withdrawn);

/// Exhaustive search over kept multisets (size 1..k_max) and withdrawn
/// multisets (size 0..q_max) drawn from `pool`. Returns the plan with the
/// largest strictly positive gain; ties go to fewer identities, then to
/// enumeration order. A pool-bounded search certifies violations only.
std::optional<ManipulationPlan> find_fnpw_manipulation(Mechanism const &mech, ValuationSpec const &truth,
                                                       std::span<ValuationSpec const> others,
                                                       std::span<ValuationSpec const> pool,
                                                       SearchOptions const           &opts = {});

nlohmann::json plan_to_json(ManipulationPlan const &p);

}  // namespace fnpw
