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

#include "fnpw/axioms.hpp"
#include "fnpw/io.hpp"
#include "fnpw/multiset.hpp"
#include "fnpw/simulate.hpp"
#include "fnpw/welfare.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace fnpw {

namespace {

json index_list(std::uint32_t mask, std::size_t n)
{
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i)
  {
    if ((mask >> i) & 1u)
    {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<ValuationSpec> select(std::span<ValuationSpec const> types, std::uint32_t mask)
{
  std::vector<ValuationSpec> out;
  for (std::size_t i = 0; i < types.size(); ++i)
  {
    if ((mask >> i) & 1u)
    {
      out.push_back(types[i]);
    }
  }
  return out;
}

// Shared body of NSA / NSAW.
CheckReport check_price_superadditivity(PriceFunction const &mech, int m, std::span<ValuationSpec const> agents,
                                        bool allow_withdrawal)
{
  Profile const      profile = Profile::from_types(m, agents);
  MechanismRun const run     = run_auction(mech, profile);
  std::size_t const  n       = agents.size();
  std::uint32_t const all    = static_cast<std::uint32_t>((std::size_t{1} << n) - 1);

  // Price rows faced by a buyer when only the agents in `mask` remain.
  std::vector<std::vector<Money>> rows(std::size_t{1} << n);
  auto row_for = [&](std::uint32_t mask) -> std::vector<Money> const & {
    if (rows[mask].empty())
    {
      rows[mask] = mech.price_row(m, select(agents, mask));
    }
    return rows[mask];
  };

  std::uint64_t cases = 0;
  for (std::uint32_t y = 1; y <= all; ++y)
  {
    Money         paid;
    std::uint32_t won = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
      if ((y >> i) & 1u)
      {
        paid += run.outcome.payment(i);
        won |= run.outcome.bundle(i).mask();
      }
    }
    std::uint32_t const rest = all & ~y;
    // Z ranges over subsets of O - Y; only Z = ∅ without withdrawal.
    for (std::uint32_t z = 0;; z = ((z | ~rest) + 1) & rest)
    {
      ++cases;
      Money const &single = row_for(rest & ~z)[won];
      if (paid < single)
      {
        json bundles = json::object();
        for (std::size_t i = 0; i < n; ++i)
        {
          if ((y >> i) & 1u)
          {
            bundles[std::to_string(i)] = run.outcome.bundle(i).letters();
          }
        }
        return CheckReport::fail({{"condition", allow_withdrawal ? "nsaw" : "nsa"},
                                  {"agents", types_to_json(agents)},
                                  {"Y", index_list(y, n)},
                                  {"Z", index_list(z, n)},
                                  {"bundles", bundles},
                                  {"union", Bundle(m, won).letters()},
                                  {"lhs", money_to_json(paid)},
                                  {"rhs", money_to_json(single)}},
                                 cases);
      }
      if (!allow_withdrawal || z == rest)
      {
        break;
      }
    }
  }
  return CheckReport::ok(cases);
}

CheckReport sweep(TypePool const &pool, int max_n,
                  std::function<CheckReport(std::vector<ValuationSpec> const &)> const &check)
{
  std::uint64_t cases  = 0;
  CheckReport   failed = CheckReport::ok();
  bool          found  = false;
  for_each_multiset(pool.size(), 1, static_cast<std::size_t>(max_n), [&](std::vector<std::size_t> const &idx) {
    CheckReport r = check(pick(pool.types(), idx));
    cases += r.cases;
    if (!r.pass)
    {
      failed = std::move(r);
      found  = true;
      return false;
    }
    return true;
  });
  if (found)
  {
    failed.cases = cases;
    return failed;
  }
  return CheckReport::ok(cases);
}

}  // namespace

TypePool::TypePool(int m, std::vector<ValuationSpec> types)
  : m_(m)
  , types_(std::move(types))
{
  for (std::size_t i = 0; i < types_.size(); ++i)
  {
    if (types_[i].items() != m_)
    {
      throw std::invalid_argument("pool type " + std::to_string(i) + " is over the wrong item count");
    }
    if (!validate(types_[i]).pass)
    {
      throw std::invalid_argument("pool type " + std::to_string(i) + " (" + types_[i].describe() +
                                  ") is not a valid valuation");
    }
  }
}

CheckReport check_dlb(PriceFunction const &mech, int m, std::span<ValuationSpec const> others)
{
  auto const    row   = mech.price_row(m, others);
  std::uint64_t cases = 0;
  for (std::uint32_t u = 1; u < row.size(); ++u)
  {
    for (std::uint32_t s1 = 0; s1 <= u; ++s1)
    {
      std::uint32_t const s2 = u & ~s1;
      if ((s1 & ~u) != 0 || s1 > s2)
      {
        continue;
      }
      ++cases;
      if (row[s1] + row[s2] < row[u])
      {
        return CheckReport::fail({{"condition", "dlb"},
                                  {"others", types_to_json(others)},
                                  {"s1", Bundle(m, s1).letters()},
                                  {"s2", Bundle(m, s2).letters()},
                                  {"price_s1", money_to_json(row[s1])},
                                  {"price_s2", money_to_json(row[s2])},
                                  {"price_union", money_to_json(row[u])}},
                                 cases);
      }
    }
  }
  return CheckReport::ok(cases);
}

CheckReport check_pia(PriceFunction const &mech, int m, std::span<ValuationSpec const> others,
                      ValuationSpec const &extra)
{
  std::vector<ValuationSpec> grown(others.begin(), others.end());
  grown.push_back(extra);
  auto const    before = mech.price_row(m, others);
  auto const    after  = mech.price_row(m, grown);
  std::uint64_t cases  = 0;
  for (std::uint32_t s = 0; s < before.size(); ++s)
  {
    ++cases;
    if (after[s] < before[s])
    {
      return CheckReport::fail({{"condition", "pia"},
                                {"others", types_to_json(others)},
                                {"extra", valuation_to_json(extra)},
                                {"bundle", Bundle(m, s).letters()},
                                {"before", money_to_json(before[s])},
                                {"after", money_to_json(after[s])}},
                               cases);
    }
  }
  return CheckReport::ok(cases);
}

CheckReport check_snsaw(PriceFunction const &mech, TypePool const &pool, int max_n)
{
  std::uint64_t cases = 0;
  CheckReport   failed;
  bool          found = false;
  for_each_multiset(pool.size(), 0, static_cast<std::size_t>(max_n), [&](std::vector<std::size_t> const &idx) {
    auto const  others = pick(pool.types(), idx);
    CheckReport r      = check_dlb(mech, pool.items(), others);
    cases += r.cases;
    if (!r.pass)
    {
      failed = std::move(r);
      found  = true;
      return false;
    }
    for (auto const &extra : pool.types())
    {
      r = check_pia(mech, pool.items(), others, extra);
      cases += r.cases;
      if (!r.pass)
      {
        failed = std::move(r);
        found  = true;
        return false;
      }
    }
    return true;
  });
  if (found)
  {
    failed.cases = cases;
    return failed;
  }
  return CheckReport::ok(cases);
}

CheckReport check_nsaw(PriceFunction const &mech, int m, std::span<ValuationSpec const> agents)
{
  return check_price_superadditivity(mech, m, agents, true);
}

CheckReport check_nsa(PriceFunction const &mech, int m, std::span<ValuationSpec const> agents)
{
  return check_price_superadditivity(mech, m, agents, false);
}

CheckReport check_nsaw_sweep(PriceFunction const &mech, TypePool const &pool, int max_n)
{
  return sweep(pool, max_n, [&](auto const &o) { return check_nsaw(mech, pool.items(), o); });
}

CheckReport check_nsa_sweep(PriceFunction const &mech, TypePool const &pool, int max_n)
{
  return sweep(pool, max_n, [&](auto const &o) { return check_nsa(mech, pool.items(), o); });
}

CheckReport check_weak_monotonicity(Mechanism const &mech, TypePool const &pool,
                                    std::span<ValuationSpec const> others)
{
  Simulator     sim(mech, pool.items());
  std::uint64_t cases = 0;
  auto const   &types = pool.types();
  for (auto const &t : types)
  {
    Bundle const x = sim.allocation(others, t);
    for (auto const &t2 : types)
    {
      ++cases;
      Bundle const x2  = sim.allocation(others, t2);
      Money const  lhs = t.value(x) - t.value(x2);
      Money const  rhs = t2.value(x) - t2.value(x2);
      if (lhs < rhs)
      {
        return CheckReport::fail({{"condition", "weak-monotonicity"},
                                  {"others", types_to_json(others)},
                                  {"theta", valuation_to_json(t)},
                                  {"theta_prime", valuation_to_json(t2)},
                                  {"x_theta", x.letters()},
                                  {"x_theta_prime", x2.letters()},
                                  {"lhs", money_to_json(lhs)},
                                  {"rhs", money_to_json(rhs)}},
                                 cases);
      }
    }
  }
  return CheckReport::ok(cases);
}

CheckReport check_subadditivity(Mechanism const &mech, TypePool const &pool, std::span<ValuationSpec const> others,
                                int k_max)
{
  Simulator     sim(mech, pool.items());
  auto const   &types = pool.types();
  std::uint64_t cases = 0;
  std::uint64_t premises_met = 0;

  for (auto const &ti : types)
  {
    Bundle const x_truth = sim.allocation(others, ti);
    for (auto const &ti_prime : types)
    {
      if (!ti_prime.value(sim.allocation(others, ti_prime)).is_zero())
      {
        continue;
      }
      Money const target = ti_prime.value(x_truth);

      CheckReport failed;
      bool        found = false;
      for_each_multiset(types.size(), 1, static_cast<std::size_t>(k_max), [&](std::vector<std::size_t> const &idx) {
        auto const ids     = pick(types, idx);
        auto const results = sim.run(others, ids);
        std::uint32_t won  = 0;
        for (auto const &r : results)
        {
          won |= r.bundle.mask();
        }
        if (won != x_truth.mask())
        {
          return true;
        }

        // Per identity, the cheapest replacement type meeting its premise.
        // Premises are independent across identities, so the minimal sum
        // over all joint choices is the sum of per-identity minima.
        Money                     rhs;
        std::vector<std::size_t>  choice;
        std::uint64_t             joint = 1;
        for (std::size_t l = 0; l < ids.size(); ++l)
        {
          Bundle const              mine = results[l].bundle;
          std::optional<std::size_t> best;
          std::uint64_t             ok = 0;
          for (std::size_t c = 0; c < types.size(); ++c)
          {
            auto replaced = ids;
            replaced[l]   = types[c];
            Bundle const alt = sim.run(others, replaced)[l].bundle;
            if (!mine.subset_of(alt) || types[c].value(alt) != types[c].value(mine))
            {
              continue;
            }
            ++ok;
            if (!best || types[c].value(mine) < types[*best].value(mine))
            {
              best = c;
            }
          }
          joint *= ok;
          if (!best)
          {
            return true;
          }
          choice.push_back(*best);
          rhs += types[*best].value(mine);
        }
        cases += joint;
        ++premises_met;
        if (target > rhs)
        {
          json replacement = json::array();
          json bundles     = json::array();
          for (std::size_t l = 0; l < ids.size(); ++l)
          {
            replacement.push_back(valuation_to_json(types[choice[l]]));
            bundles.push_back(results[l].bundle.letters());
          }
          failed = CheckReport::fail({{"condition", "sub-additivity"},
                                      {"others", types_to_json(others)},
                                      {"theta", valuation_to_json(ti)},
                                      {"theta_prime", valuation_to_json(ti_prime)},
                                      {"identities", types_to_json(ids)},
                                      {"identity_bundles", bundles},
                                      {"replacements", replacement},
                                      {"x_theta", x_truth.letters()},
                                      {"lhs", money_to_json(target)},
                                      {"rhs", money_to_json(rhs)}});
          found = true;
          return false;
        }
        return true;
      });
      if (found)
      {
        failed.cases = cases;
        return failed;
      }
    }
  }
  return CheckReport::ok(cases, premises_met == 0 ? "premise never satisfied" : "");
}

CheckReport check_withdrawal_monotonicity(Mechanism const &mech, TypePool const &pool,
                                          std::span<ValuationSpec const> others)
{
  Simulator                  sim(mech, pool.items());
  auto const                &types = pool.types();
  std::uint64_t              cases = 0;
  std::vector<ValuationSpec> grown(others.begin(), others.end());

  for (auto const &ti : types)
  {
    Bundle const x = sim.allocation(others, ti);
    for (auto const &ta : types)
    {
      grown.push_back(ta);
      for (auto const &tl : types)
      {
        if (!tl.value(sim.allocation(others, tl)).is_zero())
        {
          continue;
        }
        for (auto const &tu : types)
        {
          ++cases;
          if (sim.allocation(grown, tu) != x)
          {
            continue;
          }
          if (tl.value(x) > tu.value(x))
          {
            return CheckReport::fail({{"condition", "withdrawal-monotonicity"},
                                      {"others", types_to_json(others)},
                                      {"theta", valuation_to_json(ti)},
                                      {"theta_a", valuation_to_json(ta)},
                                      {"theta_l", valuation_to_json(tl)},
                                      {"theta_u", valuation_to_json(tu)},
                                      {"x_theta", x.letters()},
                                      {"v_low", money_to_json(tl.value(x))},
                                      {"v_up", money_to_json(tu.value(x))}},
                                     cases);
          }
        }
      }
      grown.pop_back();
    }
  }
  return CheckReport::ok(cases);
}

CheckReport check_engine(Mechanism const &mech, Profile const &profile, std::span<ValuationSpec const> misreports)
{
  int const     m     = profile.items();
  Outcome const truth = mech.run(profile);
  std::uint64_t cases = 0;
  for (std::size_t i = 0; i < profile.size(); ++i)
  {
    ValuationSpec const &v       = profile[i].valuation;
    Money const          utility = v.value(truth.bundle(i)) - truth.payment(i);
    ++cases;
    if (truth.payment(i).sign() < 0 || (truth.bundle(i).is_empty() && !truth.payment(i).is_zero()))
    {
      return CheckReport::fail({{"condition", "pay-only"},
                                {"profile", profile_to_json(profile)},
                                {"agent", profile[i].id},
                                {"bundle", truth.bundle(i).letters()},
                                {"payment", money_to_json(truth.payment(i))}},
                               cases);
    }
    if (utility.sign() < 0)
    {
      return CheckReport::fail({{"condition", "individual-rationality"},
                                {"profile", profile_to_json(profile)},
                                {"agent", profile[i].id},
                                {"bundle", truth.bundle(i).letters()},
                                {"payment", money_to_json(truth.payment(i))},
                                {"utility", money_to_json(utility)}},
                               cases);
    }
    for (auto const &lie : misreports)
    {
      ++cases;
      std::vector<Agent> agents = profile.agents();
      agents[i].valuation       = lie;
      Outcome const out         = mech.run(Profile(m, std::move(agents)));
      Money const   lied        = v.value(out.bundle(i)) - out.payment(i);
      if (lied > utility)
      {
        return CheckReport::fail({{"condition", "strategy-proofness"},
                                  {"profile", profile_to_json(profile)},
                                  {"agent", profile[i].id},
                                  {"misreport", valuation_to_json(lie)},
                                  {"truthful_utility", money_to_json(utility)},
                                  {"misreport_utility", money_to_json(lied)},
                                  {"misreport_bundle", out.bundle(i).letters()},
                                  {"misreport_payment", money_to_json(out.payment(i))}},
                                 cases);
      }
    }
  }
  return CheckReport::ok(cases);
}

CheckReport check_submodularity(TypePool const &pool, int max_n)
{
  int const     m     = pool.items();
  std::uint64_t cases = 0;
  CheckReport   failed;
  bool          found = false;
  for_each_multiset(pool.size(), 1, static_cast<std::size_t>(max_n), [&](std::vector<std::size_t> const &idx) {
    auto const y = pick(pool.types(), idx);
    auto const u = efficient_values(m, y);
    for (std::uint32_t s1 = 0; s1 < u.size(); ++s1)
    {
      for (std::uint32_t s2 = s1; s2 < u.size(); ++s2)
      {
        ++cases;
        if (u[s1] + u[s2] < u[s1 | s2] + u[s1 & s2])
        {
          failed = CheckReport::fail({{"condition", "submodularity"},
                                      {"Y", types_to_json(y)},
                                      {"s1", Bundle(m, s1).letters()},
                                      {"s2", Bundle(m, s2).letters()},
                                      {"u_s1", money_to_json(u[s1])},
                                      {"u_s2", money_to_json(u[s2])},
                                      {"u_union", money_to_json(u[s1 | s2])},
                                      {"u_intersection", money_to_json(u[s1 & s2])}},
                                     cases);
          found = true;
          return false;
        }
      }
    }
    return true;
  });
  return found ? failed : CheckReport::ok(cases);
}

}  // namespace fnpw
