/*
 * Copyright 2026 The phekit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PHEKIT_NUMTHEORY_H_
#define PHEKIT_NUMTHEORY_H_

#include <cstdint>
#include <optional>
#include <span>

#include "phekit/natural.h"
#include "phekit/random.h"

namespace phekit::nt {

inline constexpr int kMillerRabinRounds = 40;

// base^exponent mod modulus. Throws DomainError when modulus is zero.
Natural ModPow(const Natural& base, const Natural& exponent,
               const Natural& modulus);

struct EgcdResult {
  Natural gcd;
  Integer x;
  Integer y;
};

// gcd(a, b) together with Bezout coefficients: a*x + b*y = gcd.
EgcdResult Egcd(const Natural& a, const Natural& b);

// t with a*t = 1 (mod modulus), reduced into [0, modulus).
// Throws NotInvertibleError when gcd(a, modulus) != 1.
Natural ModInverse(const Natural& a, const Natural& modulus);

Natural Gcd(const Natural& a, const Natural& b);
Natural Lcm(const Natural& a, const Natural& b);

// Trial division by the small primes, then Miller-Rabin with 'rounds' random
// bases drawn from rng.
bool IsProbablePrime(const Natural& n, int rounds, RandomSource& rng);
bool IsProbablePrime(const Natural& n, int rounds = kMillerRabinRounds);

// Quick compositeness filter: true when n has a factor among the small primes
// and is not itself one of them.
bool HasSmallFactor(const Natural& n);

// Probable prime of exactly 'bits' bits with the top two bits set.
Natural GeneratePrime(unsigned bits, RandomSource& rng);

// Jacobi symbol (a/n) for odd n >= 3.
int Jacobi(const Natural& a, const Natural& n);

// Euler's criterion for an odd prime p not dividing a.
bool IsQuadraticResidueModPrime(const Natural& a, const Natural& p);

// Smallest m in [0, bound] with base^m = target (mod modulus), by baby-step
// giant-step in O(sqrt(bound)) time and memory.
std::optional<std::uint64_t> DiscreteLogBounded(const Natural& base,
                                                const Natural& target,
                                                const Natural& modulus,
                                                std::uint64_t bound);

// Unique x mod prod(moduli) with x = residues[i] (mod moduli[i]).
Natural Crt(std::span<const Natural> residues, std::span<const Natural> moduli);

// Uniform r in [2, n-1] with gcd(r, n) = 1.
Natural RandomCoprimeBelow(const Natural& n, RandomSource& rng);

}  // namespace phekit::nt

#endif  // PHEKIT_NUMTHEORY_H_
