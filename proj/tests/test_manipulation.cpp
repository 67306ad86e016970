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

#include "fnpw/errors.hpp"
#include "fnpw/experiments.hpp"
#include "fnpw/manipulation.hpp"
#include "fnpw/mechanisms.hpp"

using namespace fnpw;
using oracle::add;
using oracle::sm;

namespace {

std::vector<ValuationSpec> const &ex1_others()
{
  static std::vector<ValuationSpec> const o{sm(2, "AB", "4"), sm(2, "B", "2")};
  return o;
}

}  // namespace

TEST_SUITE("manipulation")
{
  TEST_CASE("truthful utility")
  {
    auto const vcg = make_mechanism("vcg");
    CHECK(truthful_utility(*vcg, sm(2, "A", "1"), ex1_others()).is_zero());
    CHECK(truthful_utility(*vcg, ValuationSpec::additive({Money(0), Money(0)}), ex1_others()).is_zero());
    CHECK(truthful_utility(*make_mechanism("mmvip"), add({"3", "2"}), {}) == Money(5));
  }

  TEST_CASE("withdrawal makes the split profitable under VCG")
  {
    auto const                       vcg  = make_mechanism("vcg");
    std::vector<ValuationSpec> const pool{sm(2, "A", "1"), sm(2, "B", "4")};
    auto const                       plan = find_fnpw_manipulation(*vcg, sm(2, "A", "1"), ex1_others(), pool);
    REQUIRE(plan.has_value());
    CHECK(plan->gain == Money(1));
    CHECK(plan->kept == std::vector<ValuationSpec>{sm(2, "A", "1")});
    CHECK(plan->withdrawn == std::vector<ValuationSpec>{sm(2, "B", "4")});
    CHECK_FALSE(plan->pure_fnp());
    CHECK(plan->bundle == Bundle::of(2, {0}));
    CHECK(plan->payment.is_zero());

    // Replayed without any caching.
    PlanOutcome const replay = evaluate_plan(*vcg, sm(2, "A", "1"), ex1_others(), plan->kept, plan->withdrawn);
    CHECK(replay.utility - plan->truthful_utility == plan->gain);

    // The withdrawn identity would have won {B} at price 3.
    std::vector<ValuationSpec> const all{sm(2, "AB", "4"), sm(2, "B", "2"), sm(2, "A", "1"), sm(2, "B", "4")};
    Outcome const out = vcg->run(Profile::from_types(2, all));
    CHECK(out.bundle(3) == Bundle::of(2, {1}));
    CHECK(out.payment(3) == Money(3));
  }

  TEST_CASE("without withdrawal nothing helps")
  {
    auto const                       vcg = make_mechanism("vcg");
    std::vector<ValuationSpec> const pool{sm(2, "A", "1"), sm(2, "B", "4")};
    SearchOptions                    opts;
    opts.allow_withdrawal = false;
    CHECK_FALSE(find_fnpw_manipulation(*vcg, sm(2, "A", "1"), ex1_others(), pool, opts).has_value());
  }

  TEST_CASE("complementary bidder exploits VCG by withdrawing")
  {
    auto const                       vcg = make_mechanism("vcg");
    std::vector<ValuationSpec> const others{sm(2, "AB", "1")};
    std::vector<ValuationSpec> const pool{add({"2", "0"}), add({"0", "2"})};
    auto const plan = find_fnpw_manipulation(*vcg, add({"0", "2"}), others, pool);
    REQUIRE(plan.has_value());
    CHECK(plan->gain == Money(1));
    CHECK(plan->withdrawn == std::vector<ValuationSpec>{add({"2", "0"})});
  }

  TEST_CASE("lds3 falls to the withdrawn rival")
  {
    auto const                       lds = make_mechanism("lds3");
    std::vector<ValuationSpec> const others{sm(3, "AB", "2.2")};
    std::vector<ValuationSpec> const pool{sm(3, "A", "1.3"), sm(3, "A", "1.05"), sm(3, "BC", "2.9")};
    auto const                       plan = find_fnpw_manipulation(*lds, sm(3, "A", "1.1"), others, pool);
    REQUIRE(plan.has_value());
    CHECK(plan->gain.sign() > 0);
    CHECK(std::find(plan->withdrawn.begin(), plan->withdrawn.end(), sm(3, "BC", "2.9")) != plan->withdrawn.end());
    PlanOutcome const replay = evaluate_plan(*lds, sm(3, "A", "1.1"), others, plan->kept, plan->withdrawn);
    CHECK(replay.utility - plan->truthful_utility == plan->gain);
  }

  TEST_CASE("an unopposed bidder has nothing to gain")
  {
    auto const                       set = make_mechanism("set");
    std::vector<ValuationSpec> const pool{sm(2, "AB", "2"), sm(2, "AB", "3")};
    CHECK_FALSE(find_fnpw_manipulation(*set, sm(2, "AB", "2"), {}, pool).has_value());
  }

  TEST_CASE("strong-condition mechanisms resist random sweeps")
  {
    Rng rng(61);
    for (char const *id : {"set", "mb", "mmvip", "amd:vcg"})
    {
      auto const mech = make_mechanism(id);
      for (int trial = 0; trial < 12; ++trial)
      {
        int const  m      = 1 + static_cast<int>(rng.below(3));
        auto const pool   = random_types(m, 3, rng);
        auto const others = random_types(m, rng.below(3), rng);
        auto const truth  = random_type(m, rng);
        try
        {
          auto const plan = find_fnpw_manipulation(*mech, truth, others, pool);
          CHECK_MESSAGE(!plan.has_value(), id << " " << (plan ? plan_to_json(*plan).dump() : ""));
        }
        catch (InfeasibleAllocation const &)
        {
        }
      }
    }
  }

  TEST_CASE("withdrawal only adds options")
  {
    Rng        rng(62);
    auto const vcg = make_mechanism("vcg");
    for (int trial = 0; trial < 20; ++trial)
    {
      auto const    pool   = random_types(2, 3, rng);
      auto const    others = random_types(2, 1 + rng.below(2), rng);
      auto const    truth  = random_type(2, rng);
      SearchOptions fnp;
      fnp.allow_withdrawal = false;
      try
      {
        auto const with    = find_fnpw_manipulation(*vcg, truth, others, pool);
        auto const without = find_fnpw_manipulation(*vcg, truth, others, pool, fnp);
        if (!with)
        {
          CHECK_FALSE(without.has_value());
        }
        if (with && without)
        {
          CHECK(with->gain >= without->gain);
        }
      }
      catch (InfeasibleAllocation const &)
      {
      }
    }
  }

  TEST_CASE("bad options are rejected")
  {
    SearchOptions opts;
    opts.k_max = 0;
    CHECK_THROWS_AS(find_fnpw_manipulation(*make_mechanism("vcg"), sm(2, "A", "1"), {}, {}, opts),
                    std::invalid_argument);
  }
}
