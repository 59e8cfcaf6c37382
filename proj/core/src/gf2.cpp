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

#include "extractorlab/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace extractorlab {

namespace {

// Low-weight irreducible polynomial per degree, 1..12.
constexpr std::uint32_t kModuli[kGf2MaxBits + 1] = {
    0,      // unused
    0x3,    // x + 1
    0x7,    // x^2 + x + 1
    0xB,    // x^3 + x + 1
    0x13,   // x^4 + x + 1
    0x25,   // x^5 + x^2 + 1
    0x43,   // x^6 + x + 1
    0x83,   // x^7 + x + 1
    0x11B,  // x^8 + x^4 + x^3 + x + 1
    0x211,  // x^9 + x^4 + 1
    0x409,  // x^10 + x^3 + 1
    0x805,  // x^11 + x^2 + 1
    0x1053  // x^12 + x^6 + x^4 + x + 1
};

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t acc = 0;
  while (b != 0) {
    acc ^= a * (b & 1);
    a <<= 1;
    b >>= 1;
  }
  return acc;
}

// Remainder of `value` modulo `poly` in GF(2)[x].
std::uint64_t poly_mod(std::uint64_t value, std::uint64_t poly) {
  const int deg = std::bit_width(poly) - 1;
  while (std::bit_width(value) - 1 >= deg && value != 0) {
    value ^= poly << (std::bit_width(value) - 1 - deg);
  }
  return value;
}

}  // namespace

std::uint32_t gf2_modulus(int n) {
  if (n < 1 || n > kGf2MaxBits) {
    throw std::invalid_argument("GF(2^n) supported for 1 <= n <= 12");
  }
  return kModuli[n];
}

std::uint32_t gf2_mul(int n, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t mod = gf2_modulus(n);
  return static_cast<std::uint32_t>(poly_mod(clmul(a, b), mod));
}

bool gf2_poly_irreducible(std::uint32_t poly) {
  const int deg = std::bit_width(poly) - 1;
  if (deg < 1) return false;
  for (std::uint32_t div = 2; div < (1u << (deg / 2 + 1)); ++div) {
    if (std::bit_width(div) - 1 < 1) continue;
    if (poly_mod(poly, div) == 0) return false;
  }
  return true;
}

}  // namespace extractorlab
