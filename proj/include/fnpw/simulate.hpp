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
#include <span>
#include <string>
#include <vector>

namespace fnpw {

struct IdentityResult
{
  Bundle bundle;
  Money  payment;
};

/// Runs a mechanism on "others + identities" profiles and memoizes results.
///
/// Profiles are laid out as others first (ids o0, o1, ...) then identities
/// (i0, i1, ...). For anonymous mechanisms the profile is run in canonical
/// type order so any permutation of the same multiset hits one cache entry.
/// Not thread-safe; use one per worker.
class Simulator
{
public:
  Simulator(Mechanism const &mech, int m);

  std::vector<IdentityResult> run(std::span<ValuationSpec const> others, std::span<ValuationSpec const> identities);
  /// X(t, others): the bundle a single identity with type t receives.
  Bundle allocation(std::span<ValuationSpec const> others, ValuationSpec const &t);
  IdentityResult single(std::span<ValuationSpec const> others, ValuationSpec const &t);

  Mechanism const &mechanism() const
  {
    return mech_;
  }
  int items() const
  {
    return m_;
  }
  std::uint64_t runs() const
  {
    return runs_;
  }

private:
  Mechanism const                                                &mech_;
  int                                                             m_;
  std::uint64_t                                                   runs_{0};
  std::map<std::string, std::map<std::string, IdentityResult>>    anon_cache_;
  std::map<std::string, std::vector<IdentityResult>>              ordered_cache_;
};

}  // namespace fnpw
