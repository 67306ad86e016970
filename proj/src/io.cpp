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

#include "fnpw/io.hpp"
#include "fnpw/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fnpw {

namespace {

json const &field(json const &j, char const *name, std::string const &where)
{
  if (!j.is_object() || !j.contains(name))
  {
    throw ParseError(where + ": missing field '" + name + "'");
  }
  return j.at(name);
}

int int_field(json const &j, char const *name, std::string const &where)
{
  auto const &v = field(j, name, where);
  if (!v.is_number_integer())
  {
    throw ParseError(where + "." + name + ": expected an integer");
  }
  return v.get<int>();
}

std::vector<ValuationSpec> types_from_json(json const &j, int m, std::string const &where)
{
  if (!j.is_array())
  {
    throw ParseError(where + ": expected an array");
  }
  std::vector<ValuationSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i)
  {
    out.push_back(valuation_from_json(j[i], m, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

json money_to_json(Money const &m)
{
  return m.to_string();
}

Money money_from_json(json const &j, std::string const &where)
{
  if (!j.is_string())
  {
    throw ParseError(where + ": money must be a decimal string, e.g. \"2.2\"");
  }
  try
  {
    return Money::parse(j.get<std::string>());
  }
  catch (ParseError const &e)
  {
    throw ParseError(where + ": " + e.what());
  }
}

json valuation_to_json(ValuationSpec const &v)
{
  switch (v.kind())
  {
  case ValuationSpec::Kind::SingleMinded:
    return {{"kind", "single_minded"}, {"bundle", v.target().letters()}, {"value", money_to_json(v.target_value())}};
  case ValuationSpec::Kind::Additive: {
    json values = json::array();
    for (auto const &x : v.per_item())
    {
      values.push_back(money_to_json(x));
    }
    return {{"kind", "additive"}, {"values", values}};
  }
  case ValuationSpec::Kind::Explicit: {
    json values = json::object();
    for (auto const &b : all_subsets(v.items()))
    {
      values[b.letters()] = money_to_json(v.value(b));
    }
    return {{"kind", "explicit"}, {"values", values}};
  }
  }
  return nullptr;
}

ValuationSpec valuation_from_json(json const &j, int m, std::string const &where)
{
  auto const &kind_j = field(j, "kind", where);
  if (!kind_j.is_string())
  {
    throw ParseError(where + ".kind: expected a string");
  }
  std::string const kind = kind_j.get<std::string>();

  if (kind == "single_minded")
  {
    auto const &b = field(j, "bundle", where);
    if (!b.is_string())
    {
      throw ParseError(where + ".bundle: expected item letters such as \"AB\"");
    }
    return ValuationSpec::single_minded(Bundle::parse(b.get<std::string>(), m),
                                        money_from_json(field(j, "value", where), where + ".value"));
  }
  if (kind == "additive")
  {
    auto const &vals = field(j, "values", where);
    if (!vals.is_array() || vals.size() != static_cast<std::size_t>(m))
    {
      throw ParseError(where + ".values: expected " + std::to_string(m) + " per-item values");
    }
    std::vector<Money> per_item;
    for (std::size_t i = 0; i < vals.size(); ++i)
    {
      per_item.push_back(money_from_json(vals[i], where + ".values[" + std::to_string(i) + "]"));
    }
    return ValuationSpec::additive(std::move(per_item));
  }
  if (kind == "explicit")
  {
    auto const &vals = field(j, "values", where);
    if (!vals.is_object())
    {
      throw ParseError(where + ".values: expected an object keyed by bundle letters");
    }
    std::vector<Money> table(std::size_t{1} << m);
    std::vector<bool>  seen(table.size(), false);
    for (auto const &[k, v] : vals.items())
    {
      Bundle const b = Bundle::parse(k, m);
      if (seen[b.mask()])
      {
        throw ParseError(where + ".values: bundle '" + k + "' listed twice");
      }
      seen[b.mask()]  = true;
      table[b.mask()] = money_from_json(v, where + ".values." + (k.empty() ? "\"\"" : k));
    }
    for (std::uint32_t mask = 1; mask < table.size(); ++mask)
    {
      if (!seen[mask])
      {
        throw ParseError(where + ".values: missing bundle '" + Bundle(m, mask).letters() + "'");
      }
    }
    return ValuationSpec::explicit_table(m, std::move(table));
  }
  throw ParseError(where + ".kind: unknown valuation kind '" + kind + "'");
}

json profile_to_json(Profile const &p)
{
  json agents = json::array();
  for (auto const &a : p.agents())
  {
    agents.push_back({{"id", a.id}, {"valuation", valuation_to_json(a.valuation)}});
  }
  return {{"m", p.items()}, {"agents", agents}};
}

Profile profile_from_json(json const &j)
{
  int const m = int_field(j, "m", "instance");
  if (m < 0 || m > Bundle::kMaxItems)
  {
    throw ParseError("instance.m: out of range");
  }
  auto const &agents_j = field(j, "agents", "instance");
  if (!agents_j.is_array())
  {
    throw ParseError("instance.agents: expected an array");
  }
  std::vector<Agent> agents;
  for (std::size_t i = 0; i < agents_j.size(); ++i)
  {
    std::string const where = "instance.agents[" + std::to_string(i) + "]";
    auto const       &id    = field(agents_j[i], "id", where);
    if (!id.is_string())
    {
      throw ParseError(where + ".id: expected a string");
    }
    agents.push_back({id.get<std::string>(), valuation_from_json(field(agents_j[i], "valuation", where), m,
                                                                 where + ".valuation")});
  }
  try
  {
    return Profile(m, std::move(agents));
  }
  catch (std::invalid_argument const &e)
  {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

json outcome_to_json(Outcome const &o)
{
  json allocation = json::object();
  json payments   = json::object();
  for (std::size_t i = 0; i < o.size(); ++i)
  {
    allocation[o.ids()[i]] = o.bundle(i).letters();
    payments[o.ids()[i]]   = money_to_json(o.payment(i));
  }
  return {{"allocation", allocation}, {"payments", payments}, {"revenue", money_to_json(o.revenue())}};
}

json types_to_json(std::span<ValuationSpec const> types)
{
  json out = json::array();
  for (auto const &t : types)
  {
    out.push_back(valuation_to_json(t));
  }
  return out;
}

PoolFile pool_from_json(json const &j)
{
  PoolFile p;
  p.m = int_field(j, "m", "pool");
  if (p.m < 0 || p.m > Bundle::kMaxItems)
  {
    throw ParseError("pool.m: out of range");
  }
  if (j.contains("types"))
  {
    p.types = types_from_json(j.at("types"), p.m, "pool.types");
  }
  if (j.contains("others"))
  {
    p.others = types_from_json(j.at("others"), p.m, "pool.others");
  }
  if (j.contains("max_n"))
  {
    p.max_n = int_field(j, "max_n", "pool");
  }
  return p;
}

json pool_to_json(PoolFile const &p)
{
  json j = {{"m", p.m}, {"types", types_to_json(p.types)}, {"others", types_to_json(p.others)}};
  if (p.max_n)
  {
    j["max_n"] = *p.max_n;
  }
  return j;
}

json read_json_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ParseError(path + ": cannot open");
  }
  try
  {
    return json::parse(in);
  }
  catch (json::parse_error const &e)
  {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(std::string const &path, std::string const &text)
{
  std::filesystem::path const p(path);
  if (p.has_parent_path())
  {
    std::filesystem::create_directories(p.parent_path());
  }
  std::ofstream out(path);
  if (!out)
  {
    throw std::runtime_error(path + ": cannot write");
  }
  out << text;
}

void to_json(nlohmann::json &j, CheckReport const &r)
{
  j = {{"verdict", r.pass ? "pass" : "fail"}, {"witness", r.witness}, {"cases", r.cases}};
  if (!r.note.empty())
  {
    j["note"] = r.note;
  }
}

void from_json(nlohmann::json const &j, CheckReport &r)
{
  auto const &verdict = field(j, "verdict", "report");
  if (verdict != "pass" && verdict != "fail")
  {
    throw ParseError("report.verdict: expected \"pass\" or \"fail\"");
  }
  r.pass    = verdict == "pass";
  r.witness = j.value("witness", json());
  r.cases   = j.value("cases", std::uint64_t{0});
  r.note    = j.value("note", std::string());
}

}  // namespace fnpw
