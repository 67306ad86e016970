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

#include "fnpw/valuation.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fnpw {

/// Calls f(indices) for every nondecreasing index sequence over [0, pool)
/// with length in [min_size, max_size], shorter sequences first. Returning
/// false from f stops the enumeration; the function then returns false.
template <typename F>
bool for_each_multiset(std::size_t pool, std::size_t min_size, std::size_t max_size, F &&f)
{
  for (std::size_t len = min_size; len <= max_size; ++len)
  {
    if (len > 0 && pool == 0)
    {
      break;
    }
    std::vector<std::size_t> idx(len, 0);
    while (true)
    {
      if (!f(static_cast<std::vector<std::size_t> const &>(idx)))
      {
        return false;
      }
      // Advance to the next nondecreasing sequence.
      std::size_t pos = len;
      while (pos > 0 && idx[pos - 1] == pool - 1)
      {
        --pos;
      }
      if (pos == 0)
      {
        break;
      }
      ++idx[pos - 1];
      for (std::size_t k = pos; k < len; ++k)
      {
        idx[k] = idx[pos - 1];
      }
    }
  }
  return true;
}

inline std::vector<ValuationSpec> pick(std::span<ValuationSpec const> pool, std::vector<std::size_t> const &idx)
{
  std::vector<ValuationSpec> out;
  out.reserve(idx.size());
  for (auto i : idx)
  {
    out.push_back(pool[i]);
  }
  return out;
}

}  // namespace fnpw
