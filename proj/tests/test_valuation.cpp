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

#include "fnpw/valuation.hpp"
#include "fnpw/welfare.hpp"

using namespace fnpw;
using oracle::add;
using oracle::sm;

TEST_SUITE("valuation")
{
  TEST_CASE("evaluation by kind")
  {
    CHECK(sm(2, "A", "1").value(Bundle::grand(2)) == Money(1));
    CHECK(sm(2, "A", "1").value(Bundle::of(2, {1})) == Money(0));
    CHECK(add({"3", "2"}).value(Bundle::grand(2)) == Money(5));
    CHECK(add({"3", "2"}).value(Bundle::empty(2)).is_zero());
    CHECK(oracle::two("3", "2", "4").value(Bundle::of(2, {1})) == Money(2));
    CHECK_THROWS(sm(2, "A", "1").value(Bundle::grand(3)));
  }

  TEST_CASE("validation")
  {
    CHECK(validate(add({"3", "2"})).pass);
    CHECK(validate(sm(2, "AB", "4")).pass);

    CheckReport const r = validate(oracle::two("2", "0", "1"));
    CHECK_FALSE(r.pass);
    CHECK(r.witness["reason"] == "not monotone");
    CHECK(r.witness["b1"] == "A");
    CHECK(r.witness["b2"] == "AB");

    CHECK_FALSE(validate(ValuationSpec::explicit_table(1, {Money(1), Money(2)})).pass);
    CHECK_FALSE(validate(add({"-1", "2"})).pass);
  }

  TEST_CASE("marginal values")
  {
    CHECK(marginal_value(sm(2, "AB", "4"), Bundle::of(2, {1}), 0) == Money(4));
    CHECK(marginal_value(add({"3", "2"}), Bundle::of(2, {1}), 0) == Money(3));
    CHECK(marginal_value(sm(2, "AB", "4"), Bundle::empty(2), 0).is_zero());
    CHECK_THROWS(marginal_value(add({"3", "2"}), Bundle::of(2, {0}), 0));
  }

  TEST_CASE("minimal bundles agree with the brute-force definition")
  {
    CHECK(minimal_bundles(sm(2, "AB", "4")) == std::vector<Bundle>{Bundle::grand(2)});
    CHECK(minimal_bundles(add({"3", "2"})).size() == 3);
    CHECK(minimal_bundles(sm(2, "A", "1")) == std::vector<Bundle>{Bundle::of(2, {0})});

    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial)
    {
      int const  m = 1 + static_cast<int>(rng.below(3));
      auto const v = generate(trial % 2 ? GenMode::Additive : GenMode::SingleMinded, m, rng);
      std::vector<Bundle> expected;
      for (auto const &b : all_subsets(m))
      {
        if (oracle::is_minimal(v, b))
        {
          expected.push_back(b);
        }
      }
      CHECK(minimal_bundles(v) == expected);
    }
  }

  TEST_CASE("keys identify kind and parameters")
  {
    CHECK(sm(2, "A", "1") == sm(2, "A", "1.0"));
    CHECK_FALSE(sm(2, "A", "1") == sm(2, "B", "1"));
    CHECK_FALSE(add({"1", "0"}) == oracle::two("1", "0", "1"));
    CHECK(sm(2, "A", "1").describe() == "SM({A},1)");
  }
}

TEST_SUITE("generation")
{
  TEST_CASE("draws are reproducible from the seed")
  {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 10; ++i)
    {
      CHECK(a.uniform() == b.uniform());
    }
    CHECK(derive_seed(7, 0) != derive_seed(7, 1));
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
  }

  TEST_CASE("uniform draws are 53-bit dyadics in [0,1)")
  {
    Rng rng(1);
    for (int i = 0; i < 100; ++i)
    {
      Money const u = rng.uniform();
      CHECK(u.sign() >= 0);
      CHECK(u < Money(1));
      CHECK((u * Money(1L << 53)).raw().get_den() == 1);
    }
  }

  TEST_CASE("scenario shapes")
  {
    Rng rng(3);
    for (int i = 0; i < 200; ++i)
    {
      auto const s  = generate(GenMode::Substitutable, 2, rng);
      Money const a = s.value(Bundle::of(2, {0}));
      Money const b = s.value(Bundle::of(2, {1}));
      Money const ab = s.value(Bundle::grand(2));
      CHECK(max(a, b) <= ab);
      CHECK(ab <= a + b);
      CHECK(validate(s).pass);

      auto const c = generate(GenMode::Complementary, 2, rng);
      CHECK(c.value(Bundle::grand(2)) >= c.value(Bundle::of(2, {0})) + c.value(Bundle::of(2, {1})));
      CHECK(validate(c).pass);
    }
    auto const additive = generate(GenMode::Additive, 3, rng);
    CHECK(additive.kind() == ValuationSpec::Kind::Additive);
    CHECK(additive.per_item().size() == 3);
    CHECK_THROWS(generate(GenMode::Substitutable, 3, rng));
  }
}

TEST_SUITE("welfare")
{
  TEST_CASE("fixtures")
  {
    std::vector<ValuationSpec> const ex1{sm(2, "AB", "4"), sm(2, "B", "2"), sm(2, "A", "1")};
    CHECK(efficient_value(Bundle::grand(2), ex1) == Money(4));
    CHECK(efficient_value(Bundle::empty(2), ex1).is_zero());
    std::vector<ValuationSpec> const split{sm(2, "A", "1"), sm(2, "B", "4")};
    CHECK(efficient_value(Bundle::grand(2), split) == Money(5));
  }

  TEST_CASE("dynamic program matches exhaustive assignment")
  {
    Rng rng(11);
    for (int trial = 0; trial < 150; ++trial)
    {
      int const   m = 1 + static_cast<int>(rng.below(3));
      std::size_t n = rng.below(5);
      std::vector<ValuationSpec> agents;
      for (std::size_t i = 0; i < n; ++i)
      {
        auto mode = static_cast<GenMode>(rng.below(4));
        if (m != 2 && (mode == GenMode::Substitutable || mode == GenMode::Complementary))
        {
          mode = GenMode::SingleMinded;
        }
        agents.push_back(generate(mode, m, rng));
      }
      auto const all = efficient_values(m, agents);
      for (auto const &s : all_subsets(m))
      {
        CHECK(all[s.mask()] == oracle::welfare(s, agents));
        CHECK(efficient_value(s, agents) == all[s.mask()]);
      }
    }
  }

  TEST_CASE("efficient allocation")
  {
    std::vector<Agent> const agents{{"1", sm(2, "AB", "4")},
                                    {"2", sm(2, "B", "2")},
                                    {"3a", sm(2, "A", "1")},
                                    {"3b", sm(2, "B", "4")}};
    auto const r = efficient_allocation(Bundle::grand(2), agents);
    CHECK(r.total == Money(5));
    CHECK(r.bundles[2] == Bundle::of(2, {0}));
    CHECK(r.bundles[3] == Bundle::of(2, {1}));
    CHECK(r.bundles[0].is_empty());

    std::vector<Agent> const one{{"x", add({"3", "2"})}};
    CHECK(efficient_allocation(Bundle::grand(2), one).bundles[0] == Bundle::grand(2));

    std::vector<Agent> const twins{{"1", sm(2, "A", "1")}, {"2", sm(2, "A", "1")}};
    auto const t = efficient_allocation(Bundle::of(2, {0}), twins);
    CHECK(t.bundles[0] == Bundle::of(2, {0}));
    CHECK(t.bundles[1].is_empty());
  }
}
