// Copyright 2026 The phitsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHITSP_RATIONAL_H_
#define PHITSP_RATIONAL_H_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace phitsp {

// Exact arbitrary precision rational. All lengths, dual values and
// approximation factors are carried in this type.
using Rational = mpq_class;

// Parses "12", "2.75" or "7/3". Returns nullopt on malformed text or a zero
// denominator. A leading '-' is accepted; callers enforce sign constraints.
std::optional<Rational> ParseRational(std::string_view text);

// Canonical text: integers as "5", values with a terminating decimal
// expansion as "2.75", everything else as "7/3".
std::string FormatRational(const Rational& value);

// Largest integer <= value / smallest integer >= value.
mpz_class Floor(const Rational& value);
mpz_class Ceil(const Rational& value);

// Converts for reporting only (never used in comparisons).
double ToDouble(const Rational& value);

}  // namespace phitsp

#endif  // PHITSP_RATIONAL_H_
