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
#include "fnpw/profile.hpp"
#include "fnpw/valuation.hpp"

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace fnpw {

// JSON file formats. Money is always a decimal string ("2.2"), or "p/q" when
// no terminating decimal exists; binary floats are rejected.
//
//   valuation: {"kind": "explicit", "values": {"": "0", "A": "2", "AB": "3", ...}}
//              {"kind": "additive", "values": ["3", "2"]}
//              {"kind": "single_minded", "bundle": "AB", "value": "4"}
//   instance:  {"m": 2, "agents": [{"id": "1", "valuation": {...}}, ...]}
//   pool:      {"m": 2, "types": [valuation, ...], "others": [valuation, ...]}

using json = nlohmann::json;

json  money_to_json(Money const &m);
Money money_from_json(json const &j, std::string const &where);

json          valuation_to_json(ValuationSpec const &v);
ValuationSpec valuation_from_json(json const &j, int m, std::string const &where = "valuation");

json    profile_to_json(Profile const &p);
Profile profile_from_json(json const &j);

json outcome_to_json(Outcome const &o);

json types_to_json(std::span<ValuationSpec const> types);

struct PoolFile
{
  int                        m{0};
  std::vector<ValuationSpec> types;
  std::vector<ValuationSpec> others;
  std::optional<int>         max_n;
};

PoolFile pool_from_json(json const &j);
json     pool_to_json(PoolFile const &p);

/// Reads and parses a JSON file; ParseError carries the path and position.
json read_json_file(std::string const &path);
void write_text_file(std::string const &path, std::string const &text);

}  // namespace fnpw
