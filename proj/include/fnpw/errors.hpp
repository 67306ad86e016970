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

#include <stdexcept>
#include <string>
#include <vector>

namespace fnpw {

class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (items, agents, identities) would be exceeded.
class CapExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Two agents demanded the same item. Raised by the auction engine; for a
/// candidate price function this is evidence that it is not feasible.
class InfeasibleAllocation : public std::runtime_error
{
public:
  InfeasibleAllocation(int item, std::vector<std::string> agents);

  int item() const noexcept
  {
    return item_;
  }
  std::vector<std::string> const &agents() const noexcept
  {
    return agents_;
  }

private:
  int                      item_;
  std::vector<std::string> agents_;
};

}  // namespace fnpw
