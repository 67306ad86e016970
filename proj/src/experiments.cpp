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

#include "fnpw/experiments.hpp"
#include "fnpw/errors.hpp"
#include "fnpw/io.hpp"
#include "fnpw/manipulation.hpp"
#include "fnpw/mechanisms.hpp"
#include "fnpw/multiset.hpp"
#include "fnpw/simulate.hpp"
#include "fnpw/welfare.hpp"

#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

namespace fnpw {

namespace {

constexpr std::size_t kTableAgents = 5;

ValuationSpec sm(int m, std::string const &items, char const *value)
{
  return ValuationSpec::single_minded(Bundle::parse(items, m), Money::from_decimal(value));
}

std::string fixed6(Money const &x)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x.to_double());
  return buf;
}

}  // namespace

std::vector<std::string> default_table_mechanisms()
{
  return {"vcg", "set", "amd:vcg", "mmvip"};
}

std::vector<ValuationSpec> table_instance(GenMode scenario, std::uint64_t seed, std::size_t index)
{
  Rng rng(derive_seed(seed, index));
  std::vector<ValuationSpec> agents;
  for (std::size_t i = 0; i < kTableAgents; ++i)
  {
    agents.push_back(generate(scenario, 2, rng));
  }
  return agents;
}

TableResult run_table_experiment(GenMode scenario, std::vector<std::string> const &mechanisms,
                                 std::size_t n_instances, std::uint64_t seed, unsigned threads)
{
  if (scenario != GenMode::Substitutable && scenario != GenMode::Complementary)
  {
    throw std::invalid_argument("table scenario must be substitutable or complementary");
  }
  for (auto const &id : mechanisms)
  {
    make_mechanism(id);
  }

  TableResult r;
  r.scenario    = scenario;
  r.seed        = seed;
  r.n_instances = n_instances;
  r.mechanisms  = mechanisms;
  r.revenue.assign(mechanisms.size(), std::vector<Money>(n_instances));
  r.efficiency.assign(mechanisms.size(), std::vector<Money>(n_instances));

  threads = std::max(1u, threads);
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned w) {
    try
    {
      for (std::size_t idx = w; idx < n_instances; idx += threads)
      {
        auto const    types   = table_instance(scenario, seed, idx);
        Profile const profile = Profile::from_types(2, types);
        for (std::size_t k = 0; k < mechanisms.size(); ++k)
        {
          auto const mech = make_mechanism(mechanisms[k]);
          try
          {
            Outcome const out = mech->run(profile);
            r.revenue[k][idx]    = out.revenue();
            r.efficiency[k][idx] = out.efficiency(profile);
          }
          catch (InfeasibleAllocation const &e)
          {
            throw ExperimentAborted(mechanisms[k] + " on instance " + std::to_string(idx) + ": " + e.what(),
                                    profile_to_json(profile));
          }
        }
      }
    }
    catch (...)
    {
      errors[w] = std::current_exception();
    }
  };

  if (threads == 1)
  {
    worker(0);
  }
  else
  {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
    {
      pool.emplace_back(worker, w);
    }
    for (auto &t : pool)
    {
      t.join();
    }
  }
  for (auto const &e : errors)
  {
    if (e)
    {
      std::rethrow_exception(e);
    }
  }

  Money const count(static_cast<long>(std::max<std::size_t>(n_instances, 1)));
  for (std::size_t k = 0; k < mechanisms.size(); ++k)
  {
    Money rev;
    Money eff;
    for (std::size_t i = 0; i < n_instances; ++i)
    {
      rev += r.revenue[k][i];
      eff += r.efficiency[k][i];
    }
    r.mean_revenue.push_back(rev / count);
    r.mean_efficiency.push_back(eff / count);
  }
  return r;
}

nlohmann::json table_to_json(TableResult const &r, bool include_instances)
{
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < r.mechanisms.size(); ++k)
  {
    nlohmann::json row = {{"mechanism", r.mechanisms[k]},
                          {"mean_revenue", money_to_json(r.mean_revenue[k])},
                          {"mean_efficiency", money_to_json(r.mean_efficiency[k])}};
    if (include_instances)
    {
      nlohmann::json rev = nlohmann::json::array();
      nlohmann::json eff = nlohmann::json::array();
      for (std::size_t i = 0; i < r.n_instances; ++i)
      {
        rev.push_back(money_to_json(r.revenue[k][i]));
        eff.push_back(money_to_json(r.efficiency[k][i]));
      }
      row["revenue"]    = std::move(rev);
      row["efficiency"] = std::move(eff);
    }
    rows.push_back(std::move(row));
  }
  return {{"scenario", to_string(r.scenario)}, {"seed", r.seed}, {"instances", r.n_instances}, {"rows", rows}};
}

TableResult table_from_json(nlohmann::json const &j)
{
  try
  {
    TableResult r;
    r.scenario    = gen_mode_from_string(j.at("scenario").get<std::string>());
    r.seed        = j.at("seed").get<std::uint64_t>();
    r.n_instances = j.at("instances").get<std::size_t>();
    for (auto const &row : j.at("rows"))
    {
      r.mechanisms.push_back(row.at("mechanism").get<std::string>());
      r.mean_revenue.push_back(money_from_json(row.at("mean_revenue"), "table.mean_revenue"));
      r.mean_efficiency.push_back(money_from_json(row.at("mean_efficiency"), "table.mean_efficiency"));
      std::vector<Money> rev;
      std::vector<Money> eff;
      if (row.contains("revenue"))
      {
        for (auto const &x : row.at("revenue"))
        {
          rev.push_back(money_from_json(x, "table.revenue"));
        }
        for (auto const &x : row.at("efficiency"))
        {
          eff.push_back(money_from_json(x, "table.efficiency"));
        }
      }
      else
      {
        rev.resize(r.n_instances);
        eff.resize(r.n_instances);
      }
      r.revenue.push_back(std::move(rev));
      r.efficiency.push_back(std::move(eff));
    }
    return r;
  }
  catch (nlohmann::json::exception const &e)
  {
    throw ParseError(std::string("table: ") + e.what());
  }
}

std::string table_to_csv(TableResult const &r)
{
  std::ostringstream out;
  out << "mechanism,mean_revenue,mean_efficiency,instances,seed\n";
  for (std::size_t k = 0; k < r.mechanisms.size(); ++k)
  {
    out << r.mechanisms[k] << ',' << fixed6(r.mean_revenue[k]) << ',' << fixed6(r.mean_efficiency[k]) << ','
        << r.n_instances << ',' << r.seed << '\n';
  }
  return out.str();
}

RatioResult run_ratio_scenarios(Mechanism const &mech, int m, Money const &epsilon)
{
  if (m < 1)
  {
    throw std::invalid_argument("ratio scenarios need m >= 1");
  }
  if (epsilon.sign() <= 0 || epsilon >= Money(1))
  {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  auto const theta_a = ValuationSpec::single_minded(Bundle::grand(m), Money(1));
  auto       theta   = [&](int item) { return ValuationSpec::single_minded(Bundle::of(m, {item}), Money(1) - epsilon); };

  auto play = [&](std::vector<Agent> agents) {
    Profile const profile(m, std::move(agents));
    Outcome const out = mech.run(profile);
    ScenarioOutcome s;
    s.ids      = out.ids();
    s.bundles  = out.bundles();
    s.achieved = out.efficiency(profile);
    s.optimal  = efficient_value(Bundle::grand(m), profile.types());
    return s;
  };

  RatioResult r;
  r.mechanism = mech.name();
  r.m         = m;
  r.epsilon   = epsilon;
  r.scenarios.push_back(play({{"a", theta_a}, {"1", theta(0)}}));
  r.scenarios.push_back(play({{"1", theta(0)}, {"1'", theta(0)}}));
  std::vector<Agent> third{{"a", theta_a}};
  for (int i = 0; i < m; ++i)
  {
    third.push_back({std::to_string(i + 1), theta(i)});
  }
  r.scenarios.push_back(play(std::move(third)));
  r.ratio = r.scenarios[2].achieved / r.scenarios[2].optimal;
  return r;
}

nlohmann::json ratio_to_json(RatioResult const &r)
{
  nlohmann::json scenarios = nlohmann::json::array();
  for (std::size_t k = 0; k < r.scenarios.size(); ++k)
  {
    auto const    &s     = r.scenarios[k];
    nlohmann::json alloc = nlohmann::json::object();
    for (std::size_t i = 0; i < s.ids.size(); ++i)
    {
      alloc[s.ids[i]] = s.bundles[i].letters();
    }
    scenarios.push_back({{"scenario", k + 1},
                         {"allocation", alloc},
                         {"achieved", money_to_json(s.achieved)},
                         {"optimal", money_to_json(s.optimal)}});
  }
  return {{"mechanism", r.mechanism},
          {"m", r.m},
          {"epsilon", money_to_json(r.epsilon)},
          {"scenarios", scenarios},
          {"ratio", r.ratio.to_fraction()},
          {"ratio_decimal", fixed6(r.ratio)}};
}

// --- fixtures -------------------------------------------------------------------

namespace {

CheckReport fixture_example1()
{
  int const  m   = 2;
  auto const vcg = make_mechanism("vcg");
  std::vector<ValuationSpec> const others{sm(m, "AB", "4"), sm(m, "B", "2")};
  auto const                       truth = sm(m, "A", "1");
  std::vector<ValuationSpec> const pool{sm(m, "A", "1"), sm(m, "B", "4")};

  Money const base = truthful_utility(*vcg, truth, others);
  if (!base.is_zero())
  {
    return CheckReport::fail({{"step", "truthful utility"}, {"expected", "0"}, {"got", money_to_json(base)}});
  }
  SearchOptions opts;
  auto const    plan = find_fnpw_manipulation(*vcg, truth, others, pool, opts);
  if (!plan || plan->gain != Money(1) || plan->withdrawn.size() != 1 || plan->withdrawn[0] != sm(m, "B", "4"))
  {
    return CheckReport::fail({{"step", "withdrawal manipulation"},
                              {"expected", "gain 1 withdrawing SM({B},4)"},
                              {"got", plan ? plan_to_json(*plan) : nlohmann::json(nullptr)}});
  }
  opts.allow_withdrawal = false;
  auto const honest     = find_fnpw_manipulation(*vcg, truth, others, pool, opts);
  if (honest)
  {
    return CheckReport::fail(
      {{"step", "manipulation without withdrawal"}, {"expected", "none"}, {"got", plan_to_json(*honest)}});
  }
  return CheckReport::ok(3, "truthful utility 0; withdrawal gain 1; no gain without withdrawal");
}

CheckReport fixture_lds()
{
  int const  m    = 3;
  auto const lds3 = make_mechanism("lds3");
  Simulator  sim(*lds3, m);

  std::vector<ValuationSpec> const others{sm(m, "AB", "2.2")};
  std::vector<ValuationSpec> const grown{sm(m, "AB", "2.2"), sm(m, "BC", "2.9")};
  struct Expect
  {
    std::vector<ValuationSpec> const &others;
    char const                       *value;
    char const                       *bundle;
  };
  for (auto const &e : {Expect{others, "1.3", "A"}, Expect{others, "1.1", ""}, Expect{grown, "1.05", "A"}})
  {
    Bundle const got = sim.allocation(e.others, sm(m, "A", e.value));
    if (got != Bundle::parse(e.bundle, m))
    {
      return CheckReport::fail({{"step", "allocation"},
                                {"bidder", std::string("SM({A},") + e.value + ")"},
                                {"others", types_to_json(e.others)},
                                {"expected", e.bundle},
                                {"got", got.letters()}});
    }
  }

  TypePool const pool(m, {sm(m, "A", "1.3"), sm(m, "A", "1.1"), sm(m, "A", "1.05"), sm(m, "BC", "2.9")});
  CheckReport const r = check_withdrawal_monotonicity(*lds3, pool, others);
  if (r.pass || r.witness.value("v_low", "") != "1.1" || r.witness.value("v_up", "") != "1.05")
  {
    return CheckReport::fail({{"step", "withdrawal-monotonicity"},
                              {"expected", "violation with 1.1 > 1.05"},
                              {"got", nlohmann::json(r)}});
  }
  return CheckReport::ok(r.cases + 3, "allocations {A}, {}, {A} reproduced; certificate 1.1 > 1.05");
}

CheckReport compare_mechanisms(std::vector<std::string> const &ids, GenMode mode, std::vector<int> const &ms,
                               std::uint64_t seed, std::size_t per_size)
{
  std::uint64_t cases  = 0;
  std::uint64_t stream = 0;
  for (int m : ms)
  {
    for (std::size_t n = 1; n <= 4; ++n)
    {
      for (std::size_t k = 0; k < per_size; ++k)
      {
        Rng rng(derive_seed(seed, stream++));
        std::vector<ValuationSpec> types;
        for (std::size_t i = 0; i < n; ++i)
        {
          types.push_back(generate(mode, m, rng));
        }
        Profile const profile = Profile::from_types(m, types);
        Outcome const first   = make_mechanism(ids[0])->run(profile);
        for (std::size_t j = 1; j < ids.size(); ++j)
        {
          Outcome const other = make_mechanism(ids[j])->run(profile);
          if (!(other == first))
          {
            return CheckReport::fail({{"profile", profile_to_json(profile)},
                                      {ids[0], outcome_to_json(first)},
                                      {ids[j], outcome_to_json(other)}},
                                     cases);
          }
        }
        ++cases;
      }
    }
  }
  return CheckReport::ok(cases);
}

}  // namespace

std::vector<std::string> fixture_names()
{
  return {"example1", "prop5_lds", "prop11_amd_eq_mmvip", "prop12_additive_coincide"};
}

CheckReport replay_fixture(std::string const &name)
{
  if (name == "example1")
  {
    return fixture_example1();
  }
  if (name == "prop5_lds")
  {
    return fixture_lds();
  }
  if (name == "prop11_amd_eq_mmvip")
  {
    return compare_mechanisms({"amd:vcg", "mmvip"}, GenMode::Substitutable, {2}, 11, 50);
  }
  if (name == "prop12_additive_coincide")
  {
    return compare_mechanisms({"vcg", "mmvip", "amd:vcg"}, GenMode::Additive, {1, 2, 3}, 12, 25);
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

// --- sweeps -------------------------------------------------------------------------

ValuationSpec random_type(int m, Rng &rng)
{
  std::uint64_t const modes = m == 2 ? 4 : 2;
  switch (rng.below(modes))
  {
  case 0:
    return generate(GenMode::Additive, m, rng);
  case 1:
    return generate(GenMode::SingleMinded, m, rng);
  case 2:
    return generate(GenMode::Complementary, m, rng);
  default:
    return generate(GenMode::Substitutable, m, rng);
  }
}

std::vector<ValuationSpec> random_types(int m, std::size_t count, Rng &rng)
{
  std::vector<ValuationSpec> out;
  for (std::size_t i = 0; i < count; ++i)
  {
    out.push_back(random_type(m, rng));
  }
  return out;
}

CrossCheck cross_check_nsaw(PriceFunction const &pricing, TypePool const &pool, int n_max)
{
  CrossCheck   res;
  int const    m = pool.items();
  auto const  &types = pool.types();

  CheckReport const nsaw = check_nsaw_sweep(pricing, pool, n_max);
  res.nsaw_violated      = !nsaw.pass;
  res.nsaw_witness       = nsaw.witness;

  PorfMechanism const mech(std::shared_ptr<PriceFunction const>(&pricing, [](PriceFunction const *) {}));
  SearchOptions       opts;
  opts.include_truth  = false;
  opts.max_identities = n_max;

  for_each_multiset(types.size(), 0, static_cast<std::size_t>(n_max - 1), [&](auto const &idx) {
    auto const rest = pick(types, idx);
    auto const row  = pricing.price_row(m, rest);
    int const  room = n_max - static_cast<int>(rest.size());
    opts.k_max      = room;
    opts.q_max      = room - 1;
    for (std::uint32_t s = 1; s < row.size(); ++s)
    {
      auto const probe = ValuationSpec::single_minded(Bundle(m, s), row[s]);
      auto const plan  = find_fnpw_manipulation(mech, probe, rest, types, opts);
      if (plan)
      {
        res.manipulation_found = true;
        res.plan               = plan_to_json(*plan);
        res.plan["truth"]      = valuation_to_json(probe);
        res.plan["others"]     = types_to_json(rest);
        return false;
      }
    }
    return true;
  });
  return res;
}

// --- files ---------------------------------------------------------------------------

std::string config_hash(std::string const &text)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text)
  {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_results(std::string const &dir, std::string const &stem, nlohmann::json const &config,
                   nlohmann::json const &result, std::string const &csv)
{
  write_text_file(dir + "/" + stem + ".json", result.dump(2) + "\n");
  nlohmann::json files = nlohmann::json::array({stem + ".json"});
  if (!csv.empty())
  {
    write_text_file(dir + "/" + stem + ".csv", csv);
    files.push_back(stem + ".csv");
  }
  nlohmann::json const manifest = {{"config", config}, {"config_hash", config_hash(config.dump())}, {"files", files}};
  write_text_file(dir + "/manifest.json", manifest.dump(2) + "\n");
}

}  // namespace fnpw
