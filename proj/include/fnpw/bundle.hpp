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

#include <bit>
#include <initializer_list>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fnpw {

/// A subset of the items {0..m-1}. Items print as letters: 0 -> A, 1 -> B, ...
class Bundle
{
public:
  static constexpr int kMaxItems = 26;

  Bundle() = default;
  Bundle(int m, std::uint32_t mask);

  static Bundle empty(int m)
  {
    return Bundle(m, 0);
  }
  static Bundle grand(int m)
  {
    return Bundle(m, (m <= 0 || m > kMaxItems) ? 0u : ((1u << m) - 1u));
  }
  static Bundle of(int m, std::initializer_list<int> items);
  /// "AB", "{A,B}", "" and "{}" are all accepted.
  static Bundle parse(std::string_view text, int m);

  int items() const noexcept
  {
    return m_;
  }
  std::uint32_t mask() const noexcept
  {
    return mask_;
  }
  int size() const noexcept
  {
    return std::popcount(mask_);
  }
  bool is_empty() const noexcept
  {
    return mask_ == 0;
  }
  bool contains(int item) const noexcept
  {
    return (mask_ >> item) & 1u;
  }
  bool subset_of(Bundle const &o) const;
  bool intersects(Bundle const &o) const;
  std::vector<int> item_list() const;

  Bundle with(int item) const;
  Bundle complement() const;

  /// Letters only, e.g. "AB"; the empty bundle is "".
  std::string letters() const;
  /// Set notation, e.g. "{A,B}".
  std::string to_string() const;

  friend bool operator==(Bundle const &, Bundle const &) = default;

private:
  int           m_{0};
  std::uint32_t mask_{0};
};

Bundle operator|(Bundle const &a, Bundle const &b);  // union
Bundle operator&(Bundle const &a, Bundle const &b);  // intersection
Bundle operator-(Bundle const &a, Bundle const &b);  // difference

/// All 2^m subsets in mask order: {}, {A}, {B}, {A,B}, {C}, ...
std::vector<Bundle> all_subsets(int m);

/// The fixed tie-break order: fewer items first, then the lexicographically
/// smaller sorted item list.
bool precedes(Bundle const &a, Bundle const &b);

}  // namespace fnpw
