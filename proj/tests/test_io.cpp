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
#include "fnpw/io.hpp"
#include "fnpw/mechanisms.hpp"

using namespace fnpw;
using oracle::add;
using oracle::sm;

TEST_SUITE("io")
{
  TEST_CASE("instances round-trip losslessly")
  {
    std::vector<Agent> agents{{"1", sm(2, "AB", "4")},
                              {"2", add({"2.2", "1.05"})},
                              {"3", oracle::two("1", "0.5", "1.25")},
                              {"4", ValuationSpec::single_minded(Bundle::of(2, {0}), Money(1, 3))}};
    Profile const p(2, agents);
    json const    j    = profile_to_json(p);
    Profile const back = profile_from_json(json::parse(j.dump()));
    REQUIRE(back.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
    {
      CHECK(back[i].id == p[i].id);
      CHECK(back[i].valuation == p[i].valuation);
    }
    CHECK(profile_to_json(back) == j);
  }

  TEST_CASE("money must be a string")
  {
    json const bad = json::parse(R"({"kind":"single_minded","bundle":"A","value":1.5})");
    CHECK_THROWS_AS(valuation_from_json(bad, 2), ParseError);
    json const ok = json::parse(R"({"kind":"single_minded","bundle":"A","value":"1.5"})");
    CHECK(valuation_from_json(ok, 2) == sm(2, "A", "1.5"));
  }

  TEST_CASE("diagnostics name the field")
  {
    json const missing = json::parse(R"({"m":2,"agents":[{"id":"1","valuation":{"kind":"explicit","values":{"":"0","A":"1"}}}]})");
    try
    {
      profile_from_json(missing);
      FAIL("expected ParseError");
    }
    catch (ParseError const &e)
    {
      CHECK(std::string(e.what()).find("instance.agents[0].valuation.values") != std::string::npos);
    }
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"m":2})")), ParseError);
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"m":2,"agents":[{"id":"1","valuation":{"kind":"weird"}}]})")),
                    ParseError);
    CHECK_THROWS_AS(
      profile_from_json(json::parse(
        R"({"m":2,"agents":[{"id":"1","valuation":{"kind":"additive","values":["1","1"]}},{"id":"1","valuation":{"kind":"additive","values":["1","1"]}}]})")),
      ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
  }

  TEST_CASE("reports round-trip")
  {
    CheckReport const pass = CheckReport::ok(12, "fine");
    CheckReport const fail = CheckReport::fail({{"s1", "A"}, {"lhs", "2"}}, 5);
    CHECK(json(pass).get<CheckReport>() == pass);
    CHECK(json(fail).get<CheckReport>() == fail);
    CHECK(json(fail)["verdict"] == "fail");
  }

  TEST_CASE("outcomes serialize allocation and payments")
  {
    auto const    vcg = make_mechanism("vcg");
    Profile const p =
      Profile::from_types(2, std::vector<ValuationSpec>{sm(2, "AB", "4"), sm(2, "B", "2"), sm(2, "A", "1")});
    json const j = outcome_to_json(vcg->run(p));
    CHECK(j["allocation"]["a0"] == "AB");
    CHECK(j["payments"]["a0"] == "3");
    CHECK(j["revenue"] == "3");
  }

  TEST_CASE("pools")
  {
    PoolFile f;
    f.m      = 2;
    f.types  = {sm(2, "A", "1"), add({"1", "2"})};
    f.others = {sm(2, "AB", "4")};
    f.max_n  = 3;
    PoolFile const back = pool_from_json(json::parse(pool_to_json(f).dump()));
    CHECK(back.types == f.types);
    CHECK(back.others == f.others);
    CHECK(back.max_n == f.max_n);
  }
}
