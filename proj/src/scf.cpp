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

#include "fnpw/scf.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace fnpw {

namespace {

// Calls f on every ordered tuple over [0, k) of length len.
template <typename F>
void for_each_tuple(std::size_t k, std::size_t len, F &&f)
{
  std::vector<std::size_t> t(len, 0);
  while (true)
  {
    f(static_cast<std::vector<std::size_t> const &>(t));
    std::size_t pos = len;
    while (pos > 0 && t[pos - 1] == k - 1)
    {
      t[--pos] = 0;
    }
    if (pos == 0)
    {
      return;
    }
    ++t[pos - 1];
  }
}

nlohmann::json names(TabulatedScf const &f, std::vector<std::size_t> const &profile)
{
  nlohmann::json out = nlohmann::json::array();
  for (auto t : profile)
  {
    out.push_back(f.types()[t]);
  }
  return out;
}

std::size_t count_of(std::span<std::size_t const> p, std::size_t t)
{
  return static_cast<std::size_t>(std::count(p.begin(), p.end(), t));
}

}  // namespace

TabulatedScf::TabulatedScf(std::string name, std::vector<std::string> types, std::vector<std::string> outcomes,
                           std::vector<std::vector<Money>> utilities, std::size_t bound)
  : name_(std::move(name))
  , types_(std::move(types))
  , outcomes_(std::move(outcomes))
  , utilities_(std::move(utilities))
  , bound_(bound)
{
  if (types_.empty() || outcomes_.empty())
  {
    throw std::invalid_argument("social choice function needs at least one type and one outcome");
  }
  if (utilities_.size() != types_.size())
  {
    throw std::invalid_argument("utilities need one row per type");
  }
  for (auto const &row : utilities_)
  {
    if (row.size() != outcomes_.size())
    {
      throw std::invalid_argument("utilities need one entry per outcome");
    }
  }
}

TabulatedScf TabulatedScf::tabulate(std::string name, std::vector<std::string> types,
                                    std::vector<std::string> outcomes, std::vector<std::vector<Money>> utilities,
                                    std::size_t bound, Rule const &rule)
{
  TabulatedScf f(std::move(name), std::move(types), std::move(outcomes), std::move(utilities), bound);
  for (std::size_t len = 1; len <= bound; ++len)
  {
    for_each_tuple(f.types_.size(), len, [&](auto const &p) { f.set(p, rule(p)); });
  }
  return f;
}

void TabulatedScf::set(std::vector<std::size_t> const &profile, std::size_t outcome)
{
  if (profile.empty() || profile.size() > bound_)
  {
    throw std::invalid_argument("profile size outside 1..bound");
  }
  for (auto t : profile)
  {
    if (t >= types_.size())
    {
      throw std::invalid_argument("unknown type index");
    }
  }
  if (outcome >= outcomes_.size())
  {
    throw std::invalid_argument("unknown outcome index");
  }
  table_[profile] = outcome;
}

std::size_t TabulatedScf::outcome(std::vector<std::size_t> const &profile) const
{
  auto it = table_.find(profile);
  if (it == table_.end())
  {
    throw std::out_of_range("incomplete table: profile of size " + std::to_string(profile.size()) + " missing");
  }
  return it->second;
}

bool TabulatedScf::each_outcome_uniquely_top() const
{
  for (std::size_t o = 0; o < outcomes_.size(); ++o)
  {
    bool found = false;
    for (std::size_t t = 0; t < types_.size() && !found; ++t)
    {
      bool top = true;
      for (std::size_t o2 = 0; o2 < outcomes_.size(); ++o2)
      {
        if (o2 != o && utilities_[t][o2] >= utilities_[t][o])
        {
          top = false;
        }
      }
      found = top;
    }
    if (!found)
    {
      return false;
    }
  }
  return true;
}

TabulatedScf builtin_scf(std::string const &name, std::size_t bound)
{
  constexpr std::size_t px = 0;
  constexpr std::size_t py = 1;
  constexpr std::size_t x  = 0;
  constexpr std::size_t y  = 1;

  TabulatedScf::Rule rule;
  if (name == "majority")
  {
    rule = [](auto p) { return count_of(p, px) >= count_of(p, py) ? x : y; };
  }
  else if (name == "minority")
  {
    rule = [](auto p) { return count_of(p, px) < count_of(p, py) ? x : y; };
  }
  else if (name == "dictator")
  {
    rule = [](auto p) { return p[0] == px ? x : y; };
  }
  else if (name == "at-least-two")
  {
    rule = [](auto p) { return count_of(p, px) >= 2 ? x : y; };
  }
  else if (name == "constant")
  {
    rule = [](auto) { return x; };
  }
  else
  {
    throw std::invalid_argument("unknown social choice function '" + name + "'");
  }
  return TabulatedScf::tabulate(name, {"px", "py"}, {"x", "y"}, {{Money(1), Money(0)}, {Money(0), Money(1)}}, bound,
                                rule);
}

std::vector<std::string> builtin_scf_names()
{
  return {"majority", "minority", "dictator", "at-least-two", "constant"};
}

CheckReport check_scf_strategyproof(TabulatedScf const &f)
{
  std::size_t const k     = f.types().size();
  std::uint64_t     cases = 0;
  std::optional<CheckReport> failed;
  for (std::size_t len = 1; len <= f.bound() && !failed; ++len)
  {
    for_each_tuple(k, len, [&](auto const &profile) {
      if (failed)
      {
        return;
      }
      std::size_t const truthful = f.outcome(profile);
      for (std::size_t i = 0; i < len && !failed; ++i)
      {
        auto lie = profile;
        for (std::size_t t = 0; t < k; ++t)
        {
          if (t == profile[i])
          {
            continue;
          }
          ++cases;
          lie[i]                 = t;
          std::size_t const alt  = f.outcome(lie);
          Money const      &u    = f.utility(profile[i], truthful);
          Money const      &u2   = f.utility(profile[i], alt);
          if (u2 > u)
          {
            failed = CheckReport::fail({{"condition", "scf-strategyproof"},
                                        {"scf", f.name()},
                                        {"profile", names(f, profile)},
                                        {"agent", i},
                                        {"misreport", f.types()[t]},
                                        {"truthful_outcome", f.outcomes()[truthful]},
                                        {"misreport_outcome", f.outcomes()[alt]},
                                        {"truthful_utility", u.to_string()},
                                        {"misreport_utility", u2.to_string()}});
            break;
          }
        }
      }
    });
  }
  if (failed)
  {
    failed->cases = cases;
    return *failed;
  }
  return CheckReport::ok(cases);
}

CheckReport check_scf_fnpw(TabulatedScf const &f)
{
  std::size_t const k     = f.types().size();
  std::uint64_t     cases = 0;
  std::string const note  = f.each_outcome_uniquely_top() ? "" : "premise not met: some outcome is nobody's unique favourite";

  auto attainable = [&](std::vector<std::size_t> const &rest, std::size_t pos) {
    std::set<std::size_t> out;
    for (std::size_t t = 0; t < k; ++t)
    {
      auto p = rest;
      p.insert(p.begin() + static_cast<std::ptrdiff_t>(pos), t);
      out.insert(f.outcome(p));
    }
    return out;
  };
  auto outcome_names = [&](std::set<std::size_t> const &s) {
    nlohmann::json out = nlohmann::json::array();
    for (auto o : s)
    {
      out.push_back(f.outcomes()[o]);
    }
    return out;
  };

  // i plus θ_{-i} plus θ_0 must fit in the table.
  for (std::size_t len = 0; len + 2 <= f.bound(); ++len)
  {
    std::optional<CheckReport> failed;
    for_each_tuple(k, len, [&](auto const &rest) {
      for (std::size_t pos = 0; pos <= len && !failed; ++pos)
      {
        auto const before = attainable(rest, pos);
        for (std::size_t t0 = 0; t0 < k && !failed; ++t0)
        {
          ++cases;
          auto grown = rest;
          grown.push_back(t0);
          auto const after = attainable(grown, pos);
          if (!std::includes(before.begin(), before.end(), after.begin(), after.end()))
          {
            failed = CheckReport::fail({{"condition", "scf-fnpw"},
                                        {"scf", f.name()},
                                        {"others", names(f, rest)},
                                        {"position", pos},
                                        {"extra_identity", f.types()[t0]},
                                        {"attainable_before", outcome_names(before)},
                                        {"attainable_after", outcome_names(after)}},
                                       0, note);
          }
        }
      }
    });
    if (failed)
    {
      failed->cases = cases;
      return *failed;
    }
  }
  return CheckReport::ok(cases, note);
}

}  // namespace fnpw
