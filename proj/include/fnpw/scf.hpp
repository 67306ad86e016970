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

#include "fnpw/money.hpp"
#include "fnpw/report.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace fnpw {

/// A social choice function over a finite type set Θ and outcome set Ω,
/// tabulated on every ordered profile of 1..bound agents. Types and outcomes
/// are referred to by index.
class TabulatedScf
{
public:
  using Rule = std::function<std::size_t(std::span<std::size_t const>)>;

  TabulatedScf(std::string name, std::vector<std::string> types, std::vector<std::string> outcomes,
               std::vector<std::vector<Money>> utilities, std::size_t bound);

  /// Fills the table by evaluating `rule` on every profile up to `bound`.
  static TabulatedScf tabulate(std::string name, std::vector<std::string> types, std::vector<std::string> outcomes,
                               std::vector<std::vector<Money>> utilities, std::size_t bound, Rule const &rule);

  void set(std::vector<std::size_t> const &profile, std::size_t outcome);
  /// Throws std::out_of_range for a profile missing from the table.
  std::size_t outcome(std::vector<std::size_t> const &profile) const;

  std::string const &name() const
  {
    return name_;
  }
  std::vector<std::string> const &types() const
  {
    return types_;
  }
  std::vector<std::string> const &outcomes() const
  {
    return outcomes_;
  }
  /// utility(t, o): value of outcome o to an agent of type t.
  Money const &utility(std::size_t t, std::size_t o) const
  {
    return utilities_[t][o];
  }
  std::size_t bound() const
  {
    return bound_;
  }
  std::size_t table_size() const
  {
    return table_.size();
  }

  /// Every outcome is the unique favourite of some type.
  bool each_outcome_uniquely_top() const;

private:
  std::string                                     name_;
  std::vector<std::string>                        types_;
  std::vector<std::string>                        outcomes_;
  std::vector<std::vector<Money>>                 utilities_;
  std::size_t                                     bound_;
  std::map<std::vector<std::size_t>, std::size_t> table_;
};

/// Two-type, two-outcome SCFs: types "px"/"py" value their favourite at 1 and
/// the other outcome at 0. Names: majority (ties to x), minority, dictator
/// (first agent decides), at-least-two (x iff two or more report px),
/// constant (always x).
TabulatedScf builtin_scf(std::string const &name, std::size_t bound);
std::vector<std::string> builtin_scf_names();

/// No agent gains by misreporting its type in any tabulated profile.
CheckReport check_scf_strategyproof(TabulatedScf const &f);

/// The outcomes an agent can reach by choice of its own type never grow when
/// another identity joins: for every θ_{-i}, θ_0 and position of i,
///   {f(θ_i, θ_{-i})} ⊇ {f(θ_i, θ_{-i} + θ_0)}.
CheckReport check_scf_fnpw(TabulatedScf const &f);

}  // namespace fnpw
