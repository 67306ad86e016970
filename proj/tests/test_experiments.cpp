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

#include "doctest.h"
#include "oracles.hpp"

#include "fnpw/experiments.hpp"
#include "fnpw/io.hpp"
#include "fnpw/mechanisms.hpp"
#include "fnpw/welfare.hpp"

#include <filesystem>

using namespace fnpw;

TEST_SUITE("tables")
{
  TEST_CASE("results are deterministic and independent of worker count")
  {
    auto const        mechs = default_table_mechanisms();
    TableResult const a     = run_table_experiment(GenMode::Substitutable, mechs, 40, 7, 1);
    TableResult const b     = run_table_experiment(GenMode::Substitutable, mechs, 40, 7, 3);
    CHECK(a == b);
    TableResult const c = run_table_experiment(GenMode::Substitutable, mechs, 40, 8, 1);
    CHECK_FALSE(a.mean_revenue == c.mean_revenue);
  }

  TEST_CASE("per-instance sanity")
  {
    std::vector<std::string> const mechs{"vcg", "set", "mb", "amd:vcg", "mmvip"};
    for (GenMode mode : {GenMode::Substitutable, GenMode::Complementary})
    {
      TableResult const r = run_table_experiment(mode, mechs, 60, 3, 2);
      for (std::size_t i = 0; i < r.n_instances; ++i)
      {
        auto const  types = table_instance(mode, 3, i);
        Money const best  = oracle::welfare(Bundle::grand(2), types);
        for (std::size_t k = 0; k < mechs.size(); ++k)
        {
          CHECK(r.efficiency[k][i] <= best);
          CHECK(r.revenue[k][i].sign() >= 0);
        }
        CHECK(r.revenue[0][i] <= r.efficiency[0][i]);
        CHECK(r.efficiency[0][i] == best);
        // Set and MB coincide on these distributions.
        CHECK(r.revenue[1][i] == r.revenue[2][i]);
        CHECK(r.efficiency[1][i] == r.efficiency[2][i]);
        if (mode == GenMode::Substitutable)
        {
          CHECK(r.revenue[3][i] == r.revenue[4][i]);
          CHECK(r.efficiency[3][i] == r.efficiency[4][i]);
        }
      }
    }
  }

  TEST_CASE("json round-trip and csv shape")
  {
    TableResult const r    = run_table_experiment(GenMode::Complementary, default_table_mechanisms(), 10, 5, 1);
    TableResult const back = table_from_json(nlohmann::json::parse(table_to_json(r, true).dump()));
    CHECK(back == r);

    std::string const csv = table_to_csv(r);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK(csv.rfind("mechanism,mean_revenue", 0) == 0);
  }

  TEST_CASE("only the two scenarios are tables")
  {
    CHECK_THROWS_AS(run_table_experiment(GenMode::Additive, {"vcg"}, 1, 1), std::invalid_argument);
  }
}

TEST_SUITE("ratio scenarios")
{
  TEST_CASE("set at three items")
  {
    auto const        set = make_mechanism("set");
    RatioResult const r   = run_ratio_scenarios(*set, 3, Money::from_decimal("0.01"));
    CHECK(r.ratio == Money(100, 297));
    CHECK(r.scenarios[2].optimal == Money::from_decimal("2.97"));
    CHECK(r.scenarios[2].bundles[0] == Bundle::grand(3));
  }

  TEST_CASE("one item")
  {
    auto const        set = make_mechanism("set");
    Money const       eps = Money::from_decimal("0.1");
    RatioResult const r   = run_ratio_scenarios(*set, 1, eps);
    CHECK(r.ratio >= Money(1) - eps);
  }

  TEST_CASE("parameter checks")
  {
    auto const set = make_mechanism("set");
    CHECK_THROWS(run_ratio_scenarios(*set, 0, Money(1, 10)));
    CHECK_THROWS(run_ratio_scenarios(*set, 2, Money(0)));
    CHECK_THROWS(run_ratio_scenarios(*set, 2, Money(1)));
  }
}

TEST_SUITE("fixtures")
{
  TEST_CASE("every named replay passes")
  {
    for (auto const &name : fixture_names())
    {
      CheckReport const r = replay_fixture(name);
      CHECK_MESSAGE(r.pass, name << " " << nlohmann::json(r).dump());
    }
    CHECK_THROWS(replay_fixture("nope"));
  }
}

TEST_SUITE("cross-check")
{
  TEST_CASE("checker and finder agree on the split profile pool")
  {
    using oracle::sm;
    TypePool const pool(2, {sm(2, "AB", "4"), sm(2, "B", "2"), sm(2, "A", "1"), sm(2, "B", "4")});

    CrossCheck const vcg = cross_check_nsaw(VcgPricing(), pool, 4);
    CHECK(vcg.nsaw_violated);
    CHECK(vcg.manipulation_found);

    for (char const *id : {"set", "mb", "mmvip"})
    {
      CrossCheck const c = cross_check_nsaw(*make_price_function(id), pool, 4);
      CHECK_FALSE(c.nsaw_violated);
      CHECK_FALSE(c.manipulation_found);
    }
  }
}

TEST_SUITE("result files")
{
  TEST_CASE("manifest records the config hash")
  {
    auto const           dir    = std::filesystem::temp_directory_path() / "fnpw-test-results";
    nlohmann::json const config = {{"kind", "demo"}, {"seed", 1}};
    write_results(dir.string(), "demo", config, {{"x", "1"}}, "a,b\n");
    auto const manifest = read_json_file((dir / "manifest.json").string());
    CHECK(manifest["config_hash"] == config_hash(config.dump()));
    CHECK(std::filesystem::exists(dir / "demo.csv"));
    CHECK(config_hash("a") != config_hash("b"));
    CHECK(config_hash("").size() == 16);
    std::filesystem::remove_all(dir);
  }
}
