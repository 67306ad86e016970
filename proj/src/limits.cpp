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

#include "fnpw/limits.hpp"
#include "fnpw/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <mutex>
#include <string>

namespace fnpw {

namespace {

Limits     g_limits;
std::mutex g_limits_mutex;

}  // namespace

Limits const &limits()
{
  return g_limits;
}

// Set once at startup before any worker threads exist.
void set_limits(Limits const &l)
{
  std::lock_guard<std::mutex> lock(g_limits_mutex);
  g_limits = l;
}

Limits parse_limits(std::string_view text, Limits base)
{
  while (!text.empty())
  {
    auto const       comma = text.find(',');
    std::string_view entry = text.substr(0, comma);
    text.remove_prefix(comma == std::string_view::npos ? text.size() : comma + 1);
    if (entry.empty())
    {
      continue;
    }

    auto const eq = entry.find('=');
    if (eq == std::string_view::npos)
    {
      throw ParseError("cap override needs key=value: '" + std::string(entry) + "'");
    }
    std::string_view key   = entry.substr(0, eq);
    std::string_view value = entry.substr(eq + 1);
    int              v     = 0;
    auto [ptr, ec]         = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size() || v < 1)
    {
      throw ParseError("cap must be an integer >= 1: '" + std::string(entry) + "'");
    }

    if (key == "m_max")
    {
      base.m_max = v;
    }
    else if (key == "n_max")
    {
      base.n_max = v;
    }
    else if (key == "k_max")
    {
      base.k_max = v;
    }
    else if (key == "q_max")
    {
      base.q_max = v;
    }
    else
    {
      throw ParseError("unknown cap '" + std::string(key) + "'");
    }
  }
  if (base.m_max > 26)
  {
    throw ParseError("m_max above 26 is not supported");
  }
  return base;
}

Limits limits_from_env()
{
  char const *env = std::getenv("FNPW_CAPS");
  return env == nullptr ? Limits{} : parse_limits(env);
}

void require_items(int m)
{
  if (m > limits().m_max)
  {
    throw CapExceeded("item count " + std::to_string(m) + " exceeds m_max=" +
                      std::to_string(limits().m_max));
  }
}

void require_agents(std::size_t n)
{
  if (n > static_cast<std::size_t>(limits().n_max))
  {
    throw CapExceeded("agent count " + std::to_string(n) + " exceeds n_max=" +
                      std::to_string(limits().n_max));
  }
}

}  // namespace fnpw
