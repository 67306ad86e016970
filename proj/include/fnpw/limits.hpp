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

#include <string_view>

namespace fnpw {

/// Size caps. Every algorithm here is exponential, so inputs are bounded.
struct Limits
{
  int m_max{6};  ///< items
  int n_max{8};  ///< agents in one auction
  int k_max{2};  ///< kept false-name identities
  int q_max{2};  ///< withdrawn false-name identities
};

/// Process-wide caps; default-constructed unless `set_limits` was called.
Limits const &limits();
void          set_limits(Limits const &l);

/// Parses "m_max=4,n_max=10" style overrides on top of `base`.
/// Throws ParseError on unknown keys or caps below 1.
Limits parse_limits(std::string_view text, Limits base = {});

/// Applies FNPW_CAPS from the environment, if set.
Limits limits_from_env();

void require_items(int m);
void require_agents(std::size_t n);

}  // namespace fnpw
