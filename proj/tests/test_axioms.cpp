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

#include "fnpw/axioms.hpp"
#include "fnpw/errors.hpp"
#include "fnpw/experiments.hpp"
#include "fnpw/mechanisms.hpp"
#include "fnpw/scf.hpp"
#include "fnpw/welfare.hpp"

using namespace fnpw;
using oracle::add;
using oracle::sm;
using oracle::two;

namespace {

Money money(nlohmann::json const &j)
{
  return Money::parse(j.get<std::string>());
}

TypePool sweep_pool(int m)
{
  if (m == 2)
  {
    return TypePool(2, {sm(2, "A", "1"), sm(2, "B", "2"), sm(2, "AB", "3"), sm(2, "AB", "1.5"), add({"1", "0.5"}),
                        add({"0.25", "2"})});
  }
  return TypePool(3, {sm(3, "A", "1"), sm(3, "BC", "2"), sm(3, "ABC", "3"), sm(3, "AB", "1.5"),
                      add({"1", "0.5", "0.75"}), add({"0.25", "2", "1"})});
}

}  // namespace

TEST_SUITE("price conditions")
{
  TEST_CASE("discounts for larger bundles")
  {
    std::vector<ValuationSpec> const triple{two("3", "2", "4")};
    CheckReport const r = check_dlb(VcgPricing(), 2, triple);
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness["s1"] == "A");
    CHECK(r.witness["s2"] == "B");
    // Certificate re-evaluated independently.
    CHECK(oracle::vcg(Bundle::of(2, {0}), triple) + oracle::vcg(Bundle::of(2, {1}), triple) <
          oracle::vcg(Bundle::grand(2), triple));
    CHECK(money(r.witness["price_union"]) == Money(4));

    CHECK(check_dlb(MmvipPricing(), 2, triple).pass);
  }

  TEST_CASE("prices increase with agents")
  {
    std::vector<ValuationSpec> const others{sm(2, "AB", "4"), sm(2, "B", "2")};
    CheckReport const r = check_pia(VcgPricing(), 2, others, sm(2, "B", "4"));
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness["bundle"] == "A");
    CHECK(money(r.witness["before"]) == Money(2));
    CHECK(money(r.witness["after"]) == Money(0));
    CHECK(check_pia(MmvipPricing(), 2, others, sm(2, "B", "4")).pass);
  }

  TEST_CASE("strong condition over sweeps")
  {
    for (int m : {2, 3})
    {
      TypePool const pool = sweep_pool(m);
      for (char const *id : {"set", "mb", "mmvip"})
      {
        CheckReport const r = check_snsaw(*make_price_function(id), pool, 2);
        CHECK_MESSAGE(r.pass, id << " m=" << m << " " << nlohmann::json(r).dump());
        CHECK(r.cases > 0);
      }
    }
    TypePool const with_triple(2, {two("3", "2", "4"), sm(2, "A", "1")});
    CHECK_FALSE(check_snsaw(VcgPricing(), with_triple, 2).pass);
  }

  TEST_CASE("superadditivity with withdrawal on the split profile")
  {
    std::vector<ValuationSpec> const o{sm(2, "AB", "4"), sm(2, "B", "2"), sm(2, "A", "1"), sm(2, "B", "4")};
    CheckReport const r = check_nsaw(VcgPricing(), 2, o);
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness["Y"] == nlohmann::json::array({2}));
    CHECK(r.witness["Z"] == nlohmann::json::array({3}));
    CHECK(money(r.witness["lhs"]) == Money(0));
    CHECK(money(r.witness["rhs"]) == Money(2));
    std::vector<ValuationSpec> const rest{sm(2, "AB", "4"), sm(2, "B", "2")};
    CHECK(oracle::vcg(Bundle::of(2, {0}), rest) == Money(2));

    // The two split identities pay 0 + 3 for AB; a single bidder pays 4.
    CheckReport const nsa = check_nsa(VcgPricing(), 2, o);
    REQUIRE_FALSE(nsa.pass);
    CHECK(nsa.witness["Y"] == nlohmann::json::array({2, 3}));
    CHECK(money(nsa.witness["lhs"]) == Money(3));
    CHECK(money(nsa.witness["rhs"]) == Money(4));
  }

  TEST_CASE("single agent never violates")
  {
    std::vector<ValuationSpec> const one{add({"3", "2"})};
    CHECK(check_nsaw(VcgPricing(), 2, one).pass);
  }

  TEST_CASE("strong condition implies the weaker one on the same sweep")
  {
    TypePool const pool = sweep_pool(2);
    for (char const *id : {"vcg", "set", "mb", "mmvip"})
    {
      auto const pf = make_price_function(id);
      if (check_snsaw(*pf, pool, 3).pass)
      {
        CHECK(check_nsaw_sweep(*pf, pool, 3).pass);
      }
    }
    CHECK(check_nsaw_sweep(MmvipPricing(), sweep_pool(3), 3).pass);
  }
}

TEST_SUITE("allocation conditions")
{
  TEST_CASE("weak monotonicity")
  {
    TypePool const                   pool = sweep_pool(2);
    std::vector<ValuationSpec> const others{sm(2, "AB", "2"), add({"0.5", "1"})};
    for (char const *id : {"vcg", "set", "mmvip"})
    {
      CHECK(check_weak_monotonicity(*make_mechanism(id), pool, others).pass);
    }
  }

  TEST_CASE("sub-additivity")
  {
    TypePool const                   pool(2, {sm(2, "A", "1"), sm(2, "B", "1"), sm(2, "AB", "1.5"), sm(2, "AB", "3")});
    std::vector<ValuationSpec> const others{sm(2, "AB", "2")};
    CHECK(check_subadditivity(*make_mechanism("set"), pool, others, 2).pass);
    CHECK(check_subadditivity(*make_mechanism("mmvip"), pool, others, 2).pass);

    TypePool const    lonely(2, {sm(2, "A", "1")});
    CheckReport const r = check_subadditivity(*make_mechanism("set"), lonely, std::vector<ValuationSpec>{sm(2, "AB", "5")}, 2);
    CHECK(r.pass);
  }

  TEST_CASE("withdrawal monotonicity")
  {
    TypePool const pool(3, {sm(3, "A", "1.3"), sm(3, "A", "1.1"), sm(3, "A", "1.05"), sm(3, "BC", "2.9")});
    std::vector<ValuationSpec> const others{sm(3, "AB", "2.2")};

    CheckReport const r = check_withdrawal_monotonicity(*make_mechanism("lds3"), pool, others);
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness["theta"]["value"] == "1.3");
    CHECK(r.witness["theta_a"]["value"] == "2.9");
    CHECK(r.witness["theta_l"]["value"] == "1.1");
    CHECK(r.witness["theta_u"]["value"] == "1.05");
    CHECK(money(r.witness["v_low"]) > money(r.witness["v_up"]));

    CHECK(check_withdrawal_monotonicity(*make_mechanism("mmvip"), pool, others).pass);
  }
}

TEST_SUITE("submodularity")
{
  TEST_CASE("additive pools are modular")
  {
    TypePool const pool(2, {add({"1", "2"}), add({"3", "0.5"}), add({"0", "1"})});
    CHECK(check_submodularity(pool, 3).pass);
  }

  TEST_CASE("a complementary single-minded type breaks it")
  {
    TypePool const    pool(2, {add({"1", "2"}), sm(2, "AB", "1")});
    CheckReport const r = check_submodularity(pool, 2);
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness["Y"].size() == 1);
    CHECK(r.witness["Y"][0]["bundle"] == "AB");
    CHECK(r.witness["s1"] == "A");
    CHECK(r.witness["s2"] == "B");
    std::vector<ValuationSpec> const y{sm(2, "AB", "1")};
    CHECK(oracle::welfare(Bundle::of(2, {0}), y) + oracle::welfare(Bundle::of(2, {1}), y) <
          oracle::welfare(Bundle::grand(2), y));
  }
}

TEST_SUITE("engine properties")
{
  TEST_CASE("every zoo mechanism is truthful, rational and pay-only on random profiles")
  {
    Rng rng(51);
    for (char const *id : {"vcg", "set", "mb", "mmvip", "amd:vcg", "lds3"})
    {
      auto const mech = make_mechanism(id);
      for (int trial = 0; trial < 15; ++trial)
      {
        int const     m     = std::string(id) == "lds3" ? 3 : 1 + static_cast<int>(rng.below(3));
        auto const    types = random_types(m, 1 + rng.below(4), rng);
        auto const    lies  = random_types(m, 4, rng);
        Profile const p     = Profile::from_types(m, types);
        try
        {
          CheckReport const r = check_engine(*mech, p, lies);
          CHECK_MESSAGE(r.pass, id << " " << nlohmann::json(r).dump());
        }
        catch (InfeasibleAllocation const &)
        {
        }
      }
    }
  }

  TEST_CASE("the Vickrey stage of lds3 is truthful")
  {
    auto const    lds = make_mechanism("lds3");
    Profile const p   = Profile::from_types(3, std::vector<ValuationSpec>{sm(3, "ABC", "5"), sm(3, "ABC", "4")});
    std::vector<ValuationSpec> const lies{sm(3, "ABC", "4.5"), sm(3, "ABC", "6"), sm(3, "A", "1")};
    CHECK(check_engine(*lds, p, lies).pass);
  }

  TEST_CASE("a first-price rule is caught misbehaving")
  {
    struct FirstPrice final : Mechanism
    {
      std::string name() const override
      {
        return "first-price";
      }
      Outcome run(Profile const &p) const override
      {
        int const           m = p.items();
        std::size_t         best = 0;
        std::vector<Bundle> bundles(p.size(), Bundle::empty(m));
        std::vector<Money>  pay(p.size());
        for (std::size_t i = 1; i < p.size(); ++i)
        {
          if (p[i].valuation.value(Bundle::grand(m)) > p[best].valuation.value(Bundle::grand(m)))
          {
            best = i;
          }
        }
        bundles[best] = Bundle::grand(m);
        pay[best]     = p[best].valuation.value(Bundle::grand(m));
        std::vector<std::string> ids;
        for (auto const &a : p.agents())
        {
          ids.push_back(a.id);
        }
        return Outcome(m, ids, bundles, pay);
      }
    } const first_price;

    Profile const p = Profile::from_types(2, std::vector<ValuationSpec>{sm(2, "AB", "5"), sm(2, "AB", "3")});
    std::vector<ValuationSpec> const lies{sm(2, "AB", "4")};
    CheckReport const r = check_engine(first_price, p, lies);
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness["condition"] == "strategy-proofness");
    CHECK(money(r.witness["misreport_utility"]) == Money(1));
  }
}

TEST_SUITE("social choice")
{
  TEST_CASE("strategy-proofness")
  {
    CHECK(check_scf_strategyproof(builtin_scf("majority", 4)).pass);
    CHECK(check_scf_strategyproof(builtin_scf("dictator", 4)).pass);
    CHECK(check_scf_strategyproof(builtin_scf("constant", 3)).pass);

    CheckReport const r = check_scf_strategyproof(builtin_scf("minority", 3));
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness["profile"] == nlohmann::json::array({"px"}));
    CHECK(r.witness["misreport"] == "py");
  }

  TEST_CASE("reachable outcomes under extra identities")
  {
    CHECK(check_scf_fnpw(builtin_scf("constant", 4)).pass);
    CHECK(check_scf_fnpw(builtin_scf("dictator", 4)).pass);

    CheckReport const r = check_scf_fnpw(builtin_scf("at-least-two", 3));
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness["others"] == nlohmann::json::array());
    CHECK(r.witness["extra_identity"] == "px");
    CHECK(r.witness["attainable_before"] == nlohmann::json::array({"y"}));
    CHECK(r.witness["attainable_after"] == nlohmann::json::array({"x", "y"}));
  }

  TEST_CASE("majority with ties to x")
  {
    // Vacuous when only two agents fit in the table.
    CHECK(check_scf_fnpw(builtin_scf("majority", 2)).pass);
    // With a third seat, a py agent facing one px voter adds a py identity.
    CheckReport const r = check_scf_fnpw(builtin_scf("majority", 3));
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness["others"] == nlohmann::json::array({"px"}));
    CHECK(r.witness["extra_identity"] == "py");
  }

  TEST_CASE("incomplete tables are reported")
  {
    TabulatedScf f("partial", {"px", "py"}, {"x", "y"}, {{Money(1), Money(0)}, {Money(0), Money(1)}}, 2);
    f.set({0}, 0);
    CHECK_THROWS_AS(check_scf_strategyproof(f), std::out_of_range);
    CHECK_THROWS(builtin_scf("nope", 2));
  }
}
