#include "lpair/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpair/error.hpp"

namespace lpair {

ArithmeticTables::ArithmeticTables(std::uint32_t limit) : limit_(limit) {
  if (limit < 2) throw ConfigError("arithmetic table limit must be at least 2, got " + std::to_string(limit));

  spf_.assign(std::size_t{limit} + 1, 0);
  mangoldt_.assign(std::size_t{limit} + 1, 0.0);
  moebius_.assign(std::size_t{limit} + 1, 0);
  totient_.assign(std::size_t{limit} + 1, 0);

  // Linear sieve: every composite is struck exactly once by its smallest prime.
  for (std::uint32_t n = 2; n <= limit; ++n) {
    if (spf_[n] == 0) {
      spf_[n] = n;
      primes_.push_back(n);
    }
    for (const std::uint32_t p : primes_) {
      const std::uint64_t m = std::uint64_t{p} * n;
      if (p > spf_[n] || m > limit) break;
      spf_[m] = p;
    }
  }

  moebius_[1] = 1;
  totient_[1] = 1;
  for (std::uint32_t n = 2; n <= limit; ++n) {
    const std::uint32_t p = spf_[n];
    const std::uint32_t m = n / p;
    if (spf_[m] == p) {  // p² | n
      moebius_[n] = 0;
      totient_[n] = totient_[m] * p;
    } else {
      moebius_[n] = static_cast<std::int8_t>(-moebius_[m]);
      totient_[n] = totient_[m] * (p - 1);
    }
  }

  for (const std::uint32_t p : primes_) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t pk = p; pk <= limit; pk *= p) mangoldt_[pk] = lp;
  }
}

void ArithmeticTables::require(std::uint32_t n) const {
  if (n < 1 || n > limit_)
    throw ConfigError("argument " + std::to_string(n) + " outside arithmetic table range 1.." + std::to_string(limit_));
}

std::vector<PrimePower> ArithmeticTables::factorize(std::uint32_t n) const {
  require(n);
  std::vector<PrimePower> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint32_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.push_back({p, k});
  }
  return out;
}

std::vector<std::uint32_t> ArithmeticTables::divisors(std::uint32_t n) const {
  std::vector<std::uint32_t> out{1};
  for (const auto [p, k] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint32_t pk = 1;
    for (std::uint32_t e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t ArithmeticTables::primitive_count(std::uint32_t q) const {
  require(q);
  std::int64_t sum = 0;
  for (const std::uint32_t d : divisors(q)) sum += std::int64_t{totient_[d]} * moebius_[q / d];
  return static_cast<std::uint64_t>(sum);
}

}  // namespace lpair
