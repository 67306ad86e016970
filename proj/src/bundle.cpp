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

#include "fnpw/bundle.hpp"
#include "fnpw/errors.hpp"

#include <stdexcept>

namespace fnpw {

namespace {

void require_same_m(Bundle const &a, Bundle const &b)
{
  if (a.items() != b.items())
  {
    throw std::invalid_argument("bundles over different item counts (" + std::to_string(a.items()) +
                                " vs " + std::to_string(b.items()) + ")");
  }
}

std::uint32_t full_mask(int m)
{
  return m == 0 ? 0u : ((1u << m) - 1u);
}

}  // namespace

Bundle::Bundle(int m, std::uint32_t mask)
  : m_(m)
  , mask_(mask)
{
  if (m < 0 || m > kMaxItems)
  {
    throw std::invalid_argument("item count out of range: " + std::to_string(m));
  }
  if ((mask & ~full_mask(m)) != 0)
  {
    throw std::invalid_argument("bundle mask has items outside 0.." + std::to_string(m - 1));
  }
}

Bundle Bundle::of(int m, std::initializer_list<int> items)
{
  std::uint32_t mask = 0;
  for (int i : items)
  {
    if (i < 0 || i >= m)
    {
      throw std::invalid_argument("item index out of range: " + std::to_string(i));
    }
    mask |= 1u << i;
  }
  return Bundle(m, mask);
}

Bundle Bundle::parse(std::string_view text, int m)
{
  std::uint32_t mask = 0;
  for (char c : text)
  {
    if (c == '{' || c == '}' || c == ',' || c == ' ')
    {
      continue;
    }
    int const item = c - 'A';
    if (item < 0 || item >= m)
    {
      throw ParseError("bad item '" + std::string(1, c) + "' in bundle '" + std::string(text) +
                       "' (m=" + std::to_string(m) + ")");
    }
    if (mask & (1u << item))
    {
      throw ParseError("repeated item '" + std::string(1, c) + "' in bundle '" + std::string(text) + "'");
    }
    mask |= 1u << item;
  }
  return Bundle(m, mask);
}

bool Bundle::subset_of(Bundle const &o) const
{
  require_same_m(*this, o);
  return (mask_ & ~o.mask_) == 0;
}

bool Bundle::intersects(Bundle const &o) const
{
  require_same_m(*this, o);
  return (mask_ & o.mask_) != 0;
}

std::vector<int> Bundle::item_list() const
{
  std::vector<int> out;
  for (int i = 0; i < m_; ++i)
  {
    if (contains(i))
    {
      out.push_back(i);
    }
  }
  return out;
}

Bundle Bundle::with(int item) const
{
  if (item < 0 || item >= m_)
  {
    throw std::invalid_argument("item index out of range: " + std::to_string(item));
  }
  return Bundle(m_, mask_ | (1u << item));
}

Bundle Bundle::complement() const
{
  return Bundle(m_, full_mask(m_) & ~mask_);
}

std::string Bundle::letters() const
{
  std::string s;
  for (int i : item_list())
  {
    s.push_back(static_cast<char>('A' + i));
  }
  return s;
}

std::string Bundle::to_string() const
{
  std::string s = "{";
  bool        first = true;
  for (int i : item_list())
  {
    if (!first)
    {
      s.push_back(',');
    }
    s.push_back(static_cast<char>('A' + i));
    first = false;
  }
  return s + "}";
}

Bundle operator|(Bundle const &a, Bundle const &b)
{
  require_same_m(a, b);
  return Bundle(a.items(), a.mask() | b.mask());
}

Bundle operator&(Bundle const &a, Bundle const &b)
{
  require_same_m(a, b);
  return Bundle(a.items(), a.mask() & b.mask());
}

Bundle operator-(Bundle const &a, Bundle const &b)
{
  require_same_m(a, b);
  return Bundle(a.items(), a.mask() & ~b.mask());
}

std::vector<Bundle> all_subsets(int m)
{
  std::vector<Bundle> out;
  if (m < 0 || m > Bundle::kMaxItems)
  {
    throw std::invalid_argument("item count out of range: " + std::to_string(m));
  }
  std::uint32_t const n = full_mask(m) + 1;
  out.reserve(n);
  for (std::uint32_t mask = 0; mask < n; ++mask)
  {
    out.emplace_back(m, mask);
  }
  return out;
}

bool precedes(Bundle const &a, Bundle const &b)
{
  if (a.size() != b.size())
  {
    return a.size() < b.size();
  }
  std::uint32_t const diff = a.mask() ^ b.mask();
  if (diff == 0)
  {
    return false;
  }
  // Equal sizes: the first differing item decides, and the set holding it
  // is lexicographically smaller.
  return (a.mask() & (diff & (~diff + 1))) != 0;
}

}  // namespace fnpw
