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
#include "fnpw/errors.hpp"
#include "fnpw/experiments.hpp"
#include "fnpw/io.hpp"
#include "fnpw/limits.hpp"
#include "fnpw/manipulation.hpp"
#include "fnpw/mechanisms.hpp"
#include "fnpw/scf.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

using namespace fnpw;

namespace {

enum Exit : int
{
  kOk         = 0,
  kUsage      = 1,
  kInfeasible = 2,
  kViolation  = 3,
};

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

unsigned worker_count(int flag)
{
  if (flag > 0)
  {
    return static_cast<unsigned>(flag);
  }
  if (char const *env = std::getenv("FNPW_THREADS"))
  {
    try
    {
      int const n = std::stoi(env);
      if (n > 0)
      {
        return static_cast<unsigned>(n);
      }
    }
    catch (std::exception const &)
    {
    }
    throw UsageError("FNPW_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void print(json const &j)
{
  std::cout << j.dump(2) << "\n";
}

int report_exit(CheckReport const &r)
{
  print(json(r));
  return r.pass ? kOk : kViolation;
}

std::shared_ptr<PriceFunction const> pricing_of(std::string const &id)
{
  if (id == "lds3")
  {
    throw UsageError("axiom needs a price-function mechanism; lds3 has no price function");
  }
  return make_price_function(id);
}

// --- run -------------------------------------------------------------------------

struct RunArgs
{
  std::string instance;
  std::string mech;
};

int cmd_run(RunArgs const &a)
{
  Profile const profile = profile_from_json(read_json_file(a.instance));
  auto const    mech    = make_mechanism(a.mech);
  print(outcome_to_json(mech->run(profile)));
  return kOk;
}

// --- check -----------------------------------------------------------------------

struct CheckArgs
{
  std::string mech;
  std::string axiom;
  std::string pool;
  std::string instance;
  std::string scf{"majority"};
  int         bound{3};
  int         max_n{0};
  int         k_max{0};
};

int cmd_check(CheckArgs const &a)
{
  if (a.axiom == "scf-sp" || a.axiom == "scf-fnpw")
  {
    if (a.bound < 1)
    {
      throw UsageError("--bound must be >= 1");
    }
    auto const f = builtin_scf(a.scf, static_cast<std::size_t>(a.bound));
    return report_exit(a.axiom == "scf-sp" ? check_scf_strategyproof(f) : check_scf_fnpw(f));
  }

  static std::vector<std::string> const known{"dlb",       "pia",     "snsaw",           "nsa",
                                              "nsaw",      "weak-mono", "sub-add",       "withdrawal-mono",
                                              "submodularity"};
  if (std::find(known.begin(), known.end(), a.axiom) == known.end())
  {
    throw UsageError("unknown axiom '" + a.axiom + "'");
  }
  if (a.axiom != "submodularity" && a.mech.empty())
  {
    throw UsageError("--mech is required for " + a.axiom);
  }

  if ((a.axiom == "nsa" || a.axiom == "nsaw") && !a.instance.empty())
  {
    Profile const profile = profile_from_json(read_json_file(a.instance));
    auto const    pricing = pricing_of(a.mech);
    auto const    types   = profile.types();
    return report_exit(a.axiom == "nsaw" ? check_nsaw(*pricing, profile.items(), types)
                                         : check_nsa(*pricing, profile.items(), types));
  }
  if (a.pool.empty())
  {
    throw UsageError("--pool is required for " + a.axiom);
  }

  PoolFile const file = pool_from_json(read_json_file(a.pool));
  TypePool const pool(file.m, file.types);
  int const      max_n = a.max_n > 0 ? a.max_n : file.max_n.value_or(3);
  int const      k_max = a.k_max > 0 ? a.k_max : limits().k_max;

  if (a.axiom == "dlb")
  {
    return report_exit(check_dlb(*pricing_of(a.mech), file.m, file.others));
  }
  if (a.axiom == "pia")
  {
    auto const    pricing = pricing_of(a.mech);
    std::uint64_t cases   = 0;
    for (auto const &extra : file.types)
    {
      CheckReport r = check_pia(*pricing, file.m, file.others, extra);
      cases += r.cases;
      if (!r.pass)
      {
        r.cases = cases;
        return report_exit(r);
      }
    }
    return report_exit(CheckReport::ok(cases));
  }
  if (a.axiom == "snsaw")
  {
    return report_exit(check_snsaw(*pricing_of(a.mech), pool, max_n));
  }
  if (a.axiom == "nsaw")
  {
    return report_exit(check_nsaw_sweep(*pricing_of(a.mech), pool, max_n));
  }
  if (a.axiom == "nsa")
  {
    return report_exit(check_nsa_sweep(*pricing_of(a.mech), pool, max_n));
  }
  if (a.axiom == "submodularity")
  {
    return report_exit(check_submodularity(pool, max_n));
  }

  auto const mech = make_mechanism(a.mech);
  if (a.axiom == "weak-mono")
  {
    return report_exit(check_weak_monotonicity(*mech, pool, file.others));
  }
  if (a.axiom == "sub-add")
  {
    return report_exit(check_subadditivity(*mech, pool, file.others, k_max));
  }
  return report_exit(check_withdrawal_monotonicity(*mech, pool, file.others));
}

// --- manipulate ------------------------------------------------------------------

struct ManipulateArgs
{
  std::string mech;
  std::string pool;
  int         k_max{0};
  int         q_max{-1};
  bool        no_withdrawal{false};
};

int cmd_manipulate(ManipulateArgs const &a)
{
  json const     doc  = read_json_file(a.pool);
  PoolFile const file = pool_from_json(doc);
  if (!doc.contains("truth"))
  {
    throw ParseError("pool: missing field 'truth'");
  }
  ValuationSpec const truth = valuation_from_json(doc.at("truth"), file.m, "pool.truth");
  TypePool const      pool(file.m, file.types);

  SearchOptions opts;
  opts.k_max            = a.k_max > 0 ? a.k_max : limits().k_max;
  opts.q_max            = a.q_max >= 0 ? a.q_max : limits().q_max;
  opts.allow_withdrawal = !a.no_withdrawal;
  opts.max_identities   = limits().n_max;

  auto const mech = make_mechanism(a.mech);
  auto const plan = find_fnpw_manipulation(*mech, truth, file.others, pool.types(), opts);
  json       out  = {{"truthful_utility", money_to_json(truthful_utility(*mech, truth, file.others))},
                     {"plan", plan ? plan_to_json(*plan) : json(nullptr)},
                     {"note", "search bounded by the pool; no plan is not a proof of false-name-proofness"}};
  print(out);
  return plan ? kViolation : kOk;
}

// --- experiment ------------------------------------------------------------------

struct TableArgs
{
  std::string              scenario{"substitutable"};
  std::size_t              n{1000};
  std::uint64_t            seed{1};
  std::vector<std::string> mechs;
  bool                     with_mb{false};
  bool                     instances{false};
  std::string              out{"results"};
  int                      threads{0};
};

int cmd_table(TableArgs const &a)
{
  GenMode const mode  = gen_mode_from_string(a.scenario);
  auto          mechs = a.mechs.empty() ? default_table_mechanisms() : a.mechs;
  if (a.with_mb && std::find(mechs.begin(), mechs.end(), "mb") == mechs.end())
  {
    mechs.push_back("mb");
  }
  TableResult const r = run_table_experiment(mode, mechs, a.n, a.seed, worker_count(a.threads));

  json const config = {{"kind", "table"}, {"scenario", a.scenario}, {"instances", a.n},
                       {"seed", a.seed},  {"mechanisms", mechs}};
  std::string const dir = a.out + "/table/" + std::to_string(a.seed);
  std::string const csv = table_to_csv(r);
  write_results(dir, "table-" + a.scenario, config, table_to_json(r, a.instances), csv);
  std::cout << csv << "written to " << dir << "\n";
  return kOk;
}

struct RatioArgs
{
  std::string mech{"set"};
  int         m{3};
  std::string eps{"0.01"};
  std::string out{"results"};
};

int cmd_ratio(RatioArgs const &a)
{
  Money const epsilon = Money::parse(a.eps);
  auto const  mech    = make_mechanism(a.mech);
  RatioResult r;
  try
  {
    r = run_ratio_scenarios(*mech, a.m, epsilon);
  }
  catch (std::invalid_argument const &e)
  {
    throw UsageError(e.what());
  }
  json const result = ratio_to_json(r);
  json const config = {{"kind", "ratio"}, {"mechanism", a.mech}, {"m", a.m}, {"epsilon", epsilon.to_string()}};
  std::string const dir = a.out + "/ratio/" + a.mech + "-m" + std::to_string(a.m) + "-eps" + epsilon.to_string();
  write_results(dir, "ratio", config, result);
  print(result);
  std::cout << "scenario-3 ratio: " << r.ratio.to_fraction() << "\n";
  return kOk;
}

int cmd_fixture(std::string const &name)
{
  auto const names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
  {
    throw UsageError("unknown fixture '" + name + "'");
  }
  return report_exit(replay_fixture(name));
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"fnpw: false-name-proofness laboratory for combinatorial auctions"};
  app.require_subcommand(1);
  std::string caps;
  app.add_option("--caps", caps, "size caps, e.g. m_max=4,n_max=6 (overrides FNPW_CAPS)");

  RunArgs run_args;
  auto   *run = app.add_subcommand("run", "run a mechanism on an instance file");
  run->add_option("instance", run_args.instance, "instance JSON")->required();
  run->add_option("--mech", run_args.mech, "vcg | set | mb | mmvip | lds3 | amd:<base>")->required();

  CheckArgs check_args;
  auto     *check = app.add_subcommand("check", "check an axiom by exhaustive enumeration");
  check->add_option("--mech", check_args.mech, "mechanism id");
  check->add_option("--axiom", check_args.axiom,
                    "dlb | pia | snsaw | nsa | nsaw | weak-mono | sub-add | withdrawal-mono | submodularity | "
                    "scf-sp | scf-fnpw")
    ->required();
  check->add_option("--pool", check_args.pool, "pool JSON ({m, types, others, max_n})");
  check->add_option("--instance", check_args.instance, "instance JSON (nsa/nsaw on one profile)");
  check->add_option("--max-n", check_args.max_n, "largest multiset size in sweeps");
  check->add_option("--k-max", check_args.k_max, "identities for sub-add");
  check->add_option("--scf", check_args.scf, "majority | minority | dictator | at-least-two | constant");
  check->add_option("--bound", check_args.bound, "largest tabulated profile for scf checks");

  ManipulateArgs man_args;
  auto          *manipulate = app.add_subcommand("manipulate", "search for a profitable false-name strategy");
  manipulate->add_option("--mech", man_args.mech, "mechanism id")->required();
  manipulate->add_option("--pool", man_args.pool, "pool JSON with a 'truth' valuation")->required();
  manipulate->add_option("--k-max", man_args.k_max, "kept identities");
  manipulate->add_option("--q-max", man_args.q_max, "withdrawn identities");
  manipulate->add_flag("--no-withdrawal", man_args.no_withdrawal, "keep every identity");

  auto *experiment = app.add_subcommand("experiment", "run an experiment");
  experiment->require_subcommand(1);

  TableArgs table_args;
  auto     *table = experiment->add_subcommand("table", "revenue / efficiency table");
  table->add_option("--scenario", table_args.scenario, "substitutable | complementary");
  table->add_option("--n", table_args.n, "instances");
  table->add_option("--seed", table_args.seed, "master seed");
  table->add_option("--mechs", table_args.mechs, "mechanism ids")->delimiter(',');
  table->add_flag("--with-mb", table_args.with_mb, "add the mb column");
  table->add_flag("--instances", table_args.instances, "store per-instance values in the JSON");
  table->add_option("--out", table_args.out, "results root");
  table->add_option("--threads", table_args.threads, "workers (default FNPW_THREADS or all cores)");

  RatioArgs ratio_args;
  auto     *ratio = experiment->add_subcommand("ratio", "worst-case efficiency scenarios");
  ratio->add_option("--mech", ratio_args.mech, "mechanism id");
  ratio->add_option("--m", ratio_args.m, "items");
  ratio->add_option("--eps", ratio_args.eps, "epsilon in (0,1)");
  ratio->add_option("--out", ratio_args.out, "results root");

  std::string fixture_name;
  auto       *fixture = experiment->add_subcommand("fixture", "replay a named construction");
  fixture->add_option("name", fixture_name, "example1 | prop5_lds | prop11_amd_eq_mmvip | prop12_additive_coincide")
    ->required();

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try
  {
    Limits l = limits_from_env();
    if (!caps.empty())
    {
      l = parse_limits(caps, l);
    }
    set_limits(l);

    if (*run)
    {
      return cmd_run(run_args);
    }
    if (*check)
    {
      return cmd_check(check_args);
    }
    if (*manipulate)
    {
      return cmd_manipulate(man_args);
    }
    if (*table)
    {
      return cmd_table(table_args);
    }
    if (*ratio)
    {
      return cmd_ratio(ratio_args);
    }
    return cmd_fixture(fixture_name);
  }
  catch (InfeasibleAllocation const &e)
  {
    print({{"error", "infeasible allocation"},
           {"item", std::string(1, static_cast<char>('A' + e.item()))},
           {"agents", e.agents()},
           {"message", e.what()}});
    return kInfeasible;
  }
  catch (ExperimentAborted const &e)
  {
    print({{"error", "infeasible allocation"}, {"message", e.what()}, {"instance", e.instance()}});
    return kInfeasible;
  }
  catch (ParseError const &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  catch (CapExceeded const &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  catch (UsageError const &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  catch (std::invalid_argument const &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
