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

#include "fnpw/bundle.hpp"
#include "fnpw/money.hpp"
#include "fnpw/report.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace fnpw {

/// An agent type: a valuation over bundles of m items.
///
/// Immutable and cheap to copy. Whatever the representation, the full table
/// of 2^m values is materialized at construction so `value` is a lookup.
class ValuationSpec
{
public:
  enum class Kind
  {
    Explicit,
    Additive,
    SingleMinded
  };

  /// `by_mask[b]` is the value of the bundle with mask b; size must be 2^m.
  static ValuationSpec explicit_table(int m, std::vector<Money> by_mask);
  static ValuationSpec additive(std::vector<Money> per_item);
  static ValuationSpec single_minded(Bundle target, Money value);

  Kind kind() const;
  int  items() const;

  Money const &value(Bundle const &s) const;
  Money const &value_of_mask(std::uint32_t mask) const;
  std::vector<Money> const &table() const;

  std::vector<Money> const &per_item() const;  ///< Additive only.
  Bundle const             &target() const;    ///< SingleMinded only.
  Money const              &target_value() const;

  /// Canonical serialization; equal keys iff equal kind and parameters.
  std::string const &key() const;
  std::string        describe() const;

  friend bool operator==(ValuationSpec const &a, ValuationSpec const &b)
  {
    return a.key() == b.key();
  }

private:
  struct Data;
  explicit ValuationSpec(std::shared_ptr<Data const> d);
  std::shared_ptr<Data const> d_;
};

/// Free disposal, v(empty)=0 and nonnegativity over every bundle. A failure
/// carries the violating pair (or bundle) as witness.
CheckReport validate(ValuationSpec const &v);

Money marginal_value(ValuationSpec const &v, Bundle const &s, int item);

/// Nonempty bundles worth strictly more than each of their proper subsets.
std::vector<Bundle> minimal_bundles(ValuationSpec const &v);

/// Deterministic generator of 53-bit dyadic uniform draws.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
    : engine_(seed)
  {}

  /// k / 2^53 with k uniform on [0, 2^53).
  Money uniform();
  /// Uniform on [0, n).
  std::uint64_t below(std::uint64_t n);

private:
  std::mt19937_64 engine_;
};

/// Seed for stream `index` derived from a master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

enum class GenMode
{
  Substitutable,
  Complementary,
  Additive,
  SingleMinded
};

GenMode     gen_mode_from_string(std::string const &s);
std::string to_string(GenMode mode);

/// Random type in the style of the two-item revenue experiments.
/// Substitutable and complementary modes require m == 2.
ValuationSpec generate(GenMode mode, int m, Rng &rng);

}  // namespace fnpw
