#pragma once

// Sieve-backed tables of elementary arithmetic functions on 1..N.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lpair {

struct PrimePower {
  std::uint32_t p;
  std::uint32_t k;
};

class ArithmeticTables {
 public:
  // Throws ConfigError for limit < 2.
  explicit ArithmeticTables(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }

  std::uint32_t smallest_prime_factor(std::uint32_t n) const { return spf_.at(n); }
  // Λ(n) in natural-log units; Λ(1) = 0.
  double mangoldt(std::uint32_t n) const { return mangoldt_.at(n); }
  int moebius(std::uint32_t n) const { return moebius_.at(n); }
  std::uint32_t totient(std::uint32_t n) const { return totient_.at(n); }
  bool is_prime(std::uint32_t n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }

  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  std::span<const double> mangoldt_table() const noexcept { return mangoldt_; }

  std::vector<PrimePower> factorize(std::uint32_t n) const;
  std::vector<std::uint32_t> divisors(std::uint32_t n) const;

  // φ*(q) = Σ_{cd=q} φ(d)μ(c), the number of primitive characters mod q.
  std::uint64_t primitive_count(std::uint32_t q) const;

 private:
  void require(std::uint32_t n) const;

  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<double> mangoldt_;
  std::vector<std::int8_t> moebius_;
  std::vector<std::uint32_t> totient_;
  std::vector<std::uint32_t> primes_;
};

}  // namespace lpair
