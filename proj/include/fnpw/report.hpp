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

#include <cstdint>
#include <string>

#include "json.hpp"

namespace fnpw {

/// Verdict of a brute-force checker.
///
/// `pass` means no violation in the enumerated universe; `cases` records how
/// large that universe was. A failure always carries a witness naming the
/// quantified variables, with money as exact decimal strings.
struct CheckReport
{
  bool           pass{true};
  nlohmann::json witness;
  std::uint64_t  cases{0};
  std::string    note;

  static CheckReport ok(std::uint64_t cases = 0, std::string note = {})
  {
    return CheckReport{true, nullptr, cases, std::move(note)};
  }
  static CheckReport fail(nlohmann::json witness, std::uint64_t cases = 0, std::string note = {})
  {
    return CheckReport{false, std::move(witness), cases, std::move(note)};
  }

  friend bool operator==(CheckReport const &, CheckReport const &) = default;
};

void to_json(nlohmann::json &j, CheckReport const &r);
void from_json(nlohmann::json const &j, CheckReport &r);

}  // namespace fnpw
