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

#include "phekit/numtheory.h"

#include <string>
#include <unordered_map>
#include <vector>

#include "phekit/errors.h"

namespace phekit::nt {

namespace {

constexpr unsigned kSievePrimeLimit = 2000;

const std::vector<unsigned long>& SmallPrimes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kSievePrimeLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned i = 2; i <= kSievePrimeLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned j = i * i; j <= kSievePrimeLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::string TableKey(const Natural& value) { return value.get_str(32); }

}  // namespace

Natural ModPow(const Natural& base, const Natural& exponent,
               const Natural& modulus) {
  if (modulus == 0) throw DomainError("mod_pow: modulus must be positive");
  if (modulus < 0 || exponent < 0) {
    throw DomainError("mod_pow: negative modulus or exponent");
  }
  Natural out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
           modulus.get_mpz_t());
  return out;
}

EgcdResult Egcd(const Natural& a, const Natural& b) {
  if (a == 0 && b == 0) throw DomainError("egcd: both arguments are zero");
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer next = old_r - q * r;
    old_r = r;
    r = next;
    next = old_s - q * s;
    old_s = s;
    s = next;
    next = old_t - q * t;
    old_t = t;
    t = next;
  }
  return {old_r, old_s, old_t};
}

Natural ModInverse(const Natural& a, const Natural& modulus) {
  if (modulus < 2) throw DomainError("mod_inv: modulus must be at least 2");
  Natural reduced = a % modulus;
  if (reduced < 0) reduced += modulus;
  if (reduced == 0) {
    throw NotInvertibleError("mod_inv: " + ToDecimal(a) +
                             " is not invertible modulo " + ToDecimal(modulus));
  }
  Natural t;
  if (mpz_invert(t.get_mpz_t(), reduced.get_mpz_t(), modulus.get_mpz_t()) ==
      0) {
    throw NotInvertibleError("mod_inv: " + ToDecimal(a) +
                             " is not invertible modulo " + ToDecimal(modulus));
  }
  return t;
}

Natural Gcd(const Natural& a, const Natural& b) {
  Natural out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Natural Lcm(const Natural& a, const Natural& b) {
  if (a <= 0 || b <= 0) throw DomainError("lcm: arguments must be positive");
  return a / Gcd(a, b) * b;
}

bool HasSmallFactor(const Natural& n) {
  for (unsigned long p : SmallPrimes()) {
    if (n == p) return false;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return true;
  }
  return false;
}

bool IsProbablePrime(const Natural& n, int rounds, RandomSource& rng) {
  if (rounds < 1) throw DomainError("is_probable_prime: rounds must be >= 1");
  if (n < 2) return false;
  for (unsigned long p : SmallPrimes()) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const Natural n_minus_1 = n - 1;
  Natural d = n_minus_1;
  unsigned long twos = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), twos);

  for (int round = 0; round < rounds; ++round) {
    Natural witness = rng.Between(2, n - 2);
    Natural x = ModPow(witness, d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long i = 1; i < twos; ++i) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool IsProbablePrime(const Natural& n, int rounds) {
  RandomSource rng;
  return IsProbablePrime(n, rounds, rng);
}

Natural GeneratePrime(unsigned bits, RandomSource& rng) {
  if (bits < 8) throw DomainError("gen_prime: at least 8 bits required");
  Natural top;
  mpz_setbit(top.get_mpz_t(), bits - 1);
  mpz_setbit(top.get_mpz_t(), bits - 2);
  while (true) {
    Natural candidate = rng.Bits(bits) | top | 1;
    if (HasSmallFactor(candidate)) continue;
    if (IsProbablePrime(candidate, kMillerRabinRounds, rng)) return candidate;
  }
}

int Jacobi(const Natural& a, const Natural& n) {
  if (n < 3 || mpz_even_p(n.get_mpz_t())) {
    throw DomainError("jacobi: modulus must be odd and at least 3");
  }
  Natural top = a % n;
  if (top < 0) top += n;
  Natural bottom = n;
  int sign = 1;
  while (top != 0) {
    while (mpz_even_p(top.get_mpz_t())) {
      top /= 2;
      unsigned long r = mpz_fdiv_ui(bottom.get_mpz_t(), 8);
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(top, bottom);
    if (mpz_fdiv_ui(top.get_mpz_t(), 4) == 3 &&
        mpz_fdiv_ui(bottom.get_mpz_t(), 4) == 3) {
      sign = -sign;
    }
    top %= bottom;
  }
  return bottom == 1 ? sign : 0;
}

bool IsQuadraticResidueModPrime(const Natural& a, const Natural& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) {
    throw DomainError("is_qr_mod_prime: modulus must be an odd prime");
  }
  Natural reduced = a % p;
  if (reduced < 0) reduced += p;
  if (reduced == 0) throw DomainError("is_qr_mod_prime: p divides a");
  return ModPow(reduced, (p - 1) / 2, p) == 1;
}

std::optional<std::uint64_t> DiscreteLogBounded(const Natural& base,
                                                const Natural& target,
                                                const Natural& modulus,
                                                std::uint64_t bound) {
  if (modulus < 1) throw DomainError("discrete_log: modulus must be positive");
  if (modulus == 1) return 0;
  if (Gcd(base, modulus) != 1) {
    throw DomainError("discrete_log: base must be coprime to the modulus");
  }
  Natural goal = target % modulus;
  if (goal < 0) goal += modulus;

  // Baby steps cover [0, step); giant steps multiply by base^-step.
  std::uint64_t step = 1;
  while (step * step <= bound) ++step;

  std::unordered_map<std::string, std::uint64_t> baby;
  baby.reserve(step * 2);
  Natural power = 1;
  for (std::uint64_t j = 0; j < step; ++j) {
    baby.emplace(TableKey(power), j);  // keeps the smallest j
    power = power * base % modulus;
  }
  const Natural giant = ModInverse(power, modulus);

  Natural gamma = goal;
  for (std::uint64_t i = 0; i <= bound / step; ++i) {
    auto hit = baby.find(TableKey(gamma));
    if (hit != baby.end()) {
      std::uint64_t m = i * step + hit->second;
      if (m <= bound) return m;
      return std::nullopt;
    }
    gamma = gamma * giant % modulus;
  }
  return std::nullopt;
}

Natural Crt(std::span<const Natural> residues, std::span<const Natural> moduli) {
  if (residues.size() != moduli.size() || residues.empty()) {
    throw DomainError("crt: residues and moduli must be equal, non-empty lists");
  }
  Natural x = 0;
  Natural product = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const Natural& m = moduli[i];
    if (m < 1) throw DomainError("crt: moduli must be positive");
    if (Gcd(product, m) != 1) {
      throw DomainError("crt: moduli are not pairwise coprime");
    }
    Natural r = residues[i] % m;
    if (r < 0) r += m;
    if (m == 1) continue;
    Natural delta = (r - x) % m;
    if (delta < 0) delta += m;
    Natural lift = delta * ModInverse(product % m, m) % m;
    x += product * lift;
    product *= m;
  }
  return x;
}

Natural RandomCoprimeBelow(const Natural& n, RandomSource& rng) {
  if (n < 3) throw DomainError("random_coprime_below: n must be at least 3");
  while (true) {
    Natural r = rng.Between(2, n - 1);
    if (Gcd(r, n) == 1) return r;
  }
}

}  // namespace phekit::nt
