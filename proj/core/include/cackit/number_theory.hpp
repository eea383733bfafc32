#pragma once

// Integer and finite-field helpers for the constructions and bounds.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cackit {

[[nodiscard]] std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
[[nodiscard]] std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Reduces a signed value into [0, m).
[[nodiscard]] std::uint64_t reduce_mod(std::int64_t value, std::uint64_t m) noexcept;

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
[[nodiscard]] std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// The unique x in [0, m*n) with x = a mod m and x = b mod n, gcd(m, n) = 1.
[[nodiscard]] std::uint64_t crt_pair(std::uint64_t a, std::uint64_t m, std::uint64_t b, std::uint64_t n);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

struct Factorization {
  std::uint64_t n = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;  // sorted by prime

  [[nodiscard]] std::uint64_t product() const noexcept;
  /// Exponent of `prime` in n (0 when absent).
  [[nodiscard]] unsigned exponent_of(std::uint64_t prime) const noexcept;
};

/// Trial division for small factors, Pollard rho (Brent) for the rest.
[[nodiscard]] Factorization factorize(std::uint64_t n);

/// All positive divisors of n in increasing order.
[[nodiscard]] std::vector<std::uint64_t> divisors(std::uint64_t n);

[[nodiscard]] std::uint64_t euler_phi(std::uint64_t x);

/// Number of primes in [2, x]; x >= 2.
[[nodiscard]] std::uint64_t prime_count(std::uint64_t x);

/// Primes in [2, x] in increasing order.
[[nodiscard]] std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

/// Smallest primitive root modulo the prime p. Throws std::invalid_argument
/// when p is not prime.
[[nodiscard]] std::uint64_t primitive_root(std::uint64_t p);

/// Legendre symbol (a / p) by Euler's criterion, p an odd prime.
[[nodiscard]] int legendre(std::int64_t a, std::uint64_t p);

/// The cosets H_j^f(p), j = 0..f-1, of the index-f multiplicative subgroup
/// of Z_p^*. Coset j holds root^(k*f + j) for every k.
class CosetPartition {
 public:
  [[nodiscard]] std::uint64_t prime() const noexcept { return p_; }
  [[nodiscard]] std::uint64_t index() const noexcept { return f_; }
  [[nodiscard]] std::uint64_t root() const noexcept { return root_; }
  [[nodiscard]] const std::vector<std::vector<std::uint64_t>>& cosets() const noexcept { return cosets_; }
  [[nodiscard]] const std::vector<std::uint64_t>& coset(std::size_t j) const { return cosets_.at(j); }

  /// Index j of the coset containing x mod p. x must be nonzero mod p.
  [[nodiscard]] std::size_t coset_of(std::int64_t x) const;

 private:
  friend CosetPartition coset_partition(std::uint64_t p, std::uint64_t f);

  std::uint64_t p_ = 0;
  std::uint64_t f_ = 0;
  std::uint64_t root_ = 0;
  std::vector<std::vector<std::uint64_t>> cosets_;
  std::vector<std::uint64_t> unity_roots_;  // zeta^j, zeta = root^((p-1)/f)
};

/// Throws std::invalid_argument unless p is an odd prime and f | p - 1.
[[nodiscard]] CosetPartition coset_partition(std::uint64_t p, std::uint64_t f);

/// Describes why `values` fail to be a system of distinct representatives
/// of the partition's cosets, or nullopt when they are one.
[[nodiscard]] std::optional<std::string> sdr_defect(std::span<const std::int64_t> values,
                                                    const CosetPartition& partition);

/// True iff |values| = f and each coset holds exactly one value mod p.
/// Throws std::invalid_argument if a value is 0 mod p.
[[nodiscard]] bool is_sdr(std::span<const std::int64_t> values, const CosetPartition& partition);

}  // namespace cackit
