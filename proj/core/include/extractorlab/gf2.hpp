// Copyright 2026 The extractorlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXTRACTORLAB_GF2_HPP
#define EXTRACTORLAB_GF2_HPP

#include <cstdint>

namespace extractorlab {

inline constexpr int kGf2MaxBits = 12;

/// Modulus of GF(2^n) as a bitmask including the leading term
/// (e.g. n = 4 -> 0x13 = x^4 + x + 1). Fixed published low-weight
/// irreducibles so the field (and every family built on it) is identical
/// across runs and implementations. 1 <= n <= 12.
std::uint32_t gf2_modulus(int n);

/// Product in GF(2^n): carry-less multiply reduced by the field modulus.
std::uint32_t gf2_mul(int n, std::uint32_t a, std::uint32_t b);

/// True when `poly` (bitmask with leading term) is irreducible over GF(2).
/// Trial division; intended for tests and table validation.
bool gf2_poly_irreducible(std::uint32_t poly);

}  // namespace extractorlab

#endif  // EXTRACTORLAB_GF2_HPP
