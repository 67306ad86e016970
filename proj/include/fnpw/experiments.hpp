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

#include "fnpw/axioms.hpp"
#include "fnpw/porf.hpp"
#include "fnpw/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace fnpw {

// --- revenue / efficiency tables ------------------------------------------------

struct TableResult
{
  GenMode                         scenario{GenMode::Substitutable};
  std::uint64_t                   seed{0};
  std::size_t                     n_instances{0};
  std::vector<std::string>        mechanisms;
  std::vector<Money>              mean_revenue;     ///< per mechanism
  std::vector<Money>              mean_efficiency;  ///< per mechanism
  std::vector<std::vector<Money>> revenue;          ///< [mechanism][instance]
  std::vector<std::vector<Money>> efficiency;       ///< [mechanism][instance]

  friend bool operator==(TableResult const &, TableResult const &) = default;
};

/// Raised when a mechanism produces an infeasible allocation mid-experiment.
class ExperimentAborted : public std::runtime_error
{
public:
  ExperimentAborted(std::string const &what, nlohmann::json instance)
    : std::runtime_error(what)
    , instance_(std::move(instance))
  {}
  nlohmann::json const &instance() const
  {
    return instance_;
  }

private:
  nlohmann::json instance_;
};

std::vector<std::string> default_table_mechanisms();

/// Draws five two-item agents per instance from the scenario distribution
/// (stream `derive_seed(seed, instance)`) and runs every mechanism on it.
/// Revenue is the sum of payments; efficiency the winners' total value.
/// Results do not depend on `threads`.
TableResult run_table_experiment(GenMode scenario, std::vector<std::string> const &mechanisms,
                                 std::size_t n_instances, std::uint64_t seed, unsigned threads = 1);

/// The five agents of one table instance.
std::vector<ValuationSpec> table_instance(GenMode scenario, std::uint64_t seed, std::size_t index);

nlohmann::json table_to_json(TableResult const &r, bool include_instances);
TableResult    table_from_json(nlohmann::json const &j);
std::string    table_to_csv(TableResult const &r);

// --- worst-case efficiency scenarios -------------------------------------------

struct ScenarioOutcome
{
  std::vector<std::string> ids;
  std::vector<Bundle>      bundles;
  Money                    achieved;
  Money                    optimal;
};

struct RatioResult
{
  std::string                    mechanism;
  int                            m{0};
  Money                          epsilon;
  std::vector<ScenarioOutcome>   scenarios;  ///< scenarios 1, 2, 3
  Money                          ratio;      ///< achieved / optimal in scenario 3
};

/// Types: a is single-minded on all items with value 1; agent i is
/// single-minded on item i with value 1 - eps.
///   1: a and agent 1;  2: two agents of type 1;  3: a and agents 1..m.
RatioResult run_ratio_scenarios(Mechanism const &mech, int m, Money const &epsilon);
nlohmann::json ratio_to_json(RatioResult const &r);

// --- named replays ----------------------------------------------------------------

std::vector<std::string> fixture_names();
/// Throws std::invalid_argument for an unknown name.
CheckReport replay_fixture(std::string const &name);

// --- random sweeps -----------------------------------------------------------------

/// A random type over m items: additive or single-minded, and for m == 2
/// also substitutable or complementary.
ValuationSpec random_type(int m, Rng &rng);
std::vector<ValuationSpec> random_types(int m, std::size_t count, Rng &rng);

struct CrossCheck
{
  bool           nsaw_violated{false};
  bool           manipulation_found{false};
  nlohmann::json nsaw_witness;
  nlohmann::json plan;

  bool agree() const
  {
    return nsaw_violated == manipulation_found;
  }
};

/// Compares the NSAW checker over every multiset O of pool types with
/// |O| <= n_max against the manipulation finder: for every multiset R with
/// |R| < n_max and nonempty S, a manipulator of type SM(S, χ(S, R)) facing R
/// searches identities from the pool with |R| + kept + withdrawn <= n_max.
CrossCheck cross_check_nsaw(PriceFunction const &pricing, TypePool const &pool, int n_max);

// --- result files --------------------------------------------------------------------

/// Stable 64-bit FNV-1a hash of `text`, as 16 hex digits.
std::string config_hash(std::string const &text);

/// Writes <dir>/<stem>.json, the optional <dir>/<stem>.csv and
/// <dir>/manifest.json recording `config` and its hash.
void write_results(std::string const &dir, std::string const &stem, nlohmann::json const &config,
                   nlohmann::json const &result, std::string const &csv = {});

}  // namespace fnpw
