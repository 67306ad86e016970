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

#include <span>
#include <vector>

namespace fnpw {

/// U(s, agents): the best total value from giving each item of `s` to at
/// most one agent. U(s, {}) = U({}, agents) = 0.
Money efficient_value(Bundle const &s, std::span<ValuationSpec const> agents);

/// U(S, agents) for every S ⊆ G at once, indexed by mask.
std::vector<Money> efficient_values(int m, std::span<ValuationSpec const> agents);

struct AllocationResult
{
  Money               total;
  std::vector<Bundle> bundles;  ///< aligned with the input agents
};

/// An assignment achieving `efficient_value`. Ties go to the assignment with
/// the fewest items handed out, then to the lexicographically smallest list
/// of (agent position, bundle) pairs over the agents that receive something.
AllocationResult efficient_allocation(Bundle const &s, std::span<Agent const> agents);

}  // namespace fnpw
