#pragma once

// Direct and recursive CAC constructions. Every builder checks its
// arithmetic preconditions, builds the code, and re-verifies it before
// returning; any failed condition raises ConstructionError.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cackit/cac.hpp"

namespace cackit {

/// A construction rejected its parameters or failed a post-condition.
/// condition() names the specific requirement.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::string construction, std::string condition);

  [[nodiscard]] const std::string& construction() const noexcept { return construction_; }
  [[nodiscard]] const std::string& condition() const noexcept { return condition_; }

 private:
  std::string construction_;
  std::string condition_;
};

/// Prime-length equi-difference code. Requires p prime, 2(w-1) | p-1 and
/// {1, ..., w-1} a system of distinct representatives of the cosets of the
/// index-(w-1) subgroup of Z_p^*. With g = root^(w-1) for the smallest
/// primitive root, the m = (p-1)/(2w-2) codewords are generated by
/// 1, g, ..., g^(m-1).
[[nodiscard]] Cac construct_c1(std::uint64_t p, std::size_t w);

/// Length s*p, weight s*f + 1, with p = 2fm + 1 prime. Requires the sets
/// {+-s, ..., +-fs} and {i + js : j = -f..f-1} (i = 1..s-1) to be systems of
/// distinct representatives of the index-2f cosets.
///
/// Generators: for each h in the index-2f subgroup H_0, the residue x in
/// Z_{sp} with x = h (mod p) and x = 1 (mod s). The differences of the
/// codeword from x are k*x, 0 < |k| <= sf; reduced mod s they fall into the
/// classes of the SDR families above and reduced mod p into h times one
/// representative per coset, so across all h they tile Z_{sp} \ pZ_{sp}.
/// The tiling is checked after construction.
[[nodiscard]] Cac construct_c2(std::uint64_t p, std::uint64_t f, std::uint64_t s);

/// Recursive product: inner1 is an equi-difference (L1, w) code of
/// non-exceptional codewords leaving (L1/s)Z_{L1} uncovered, inner2 an
/// equi-difference (s*L2, w) code, gcd(l, L2) = 1 for l = 2..w-1. Output has
/// length L1*L2 and |inner1|*L2 + |inner2| codewords generated by
/// i + j*L1 (i in Gamma(inner1), j < L2) and (L1/s)*k (k in Gamma(inner2)).
[[nodiscard]] Cac construct_c3(const Cac& inner1, std::uint64_t s, const Cac& inner2);

/// (6p, 7) code with (p-1)/2 codewords for primes p = 31, 39 (mod 40).
[[nodiscard]] Cac corollary7_family(std::uint64_t p);

/// (6 p_1 ... p_n, 7) code with (p_1 ... p_n - 1)/2 codewords, by nesting
/// construct_c3 over the corollary-7 codes of the listed primes.
[[nodiscard]] Cac corollary8_family(std::span<const std::uint64_t> primes);

/// (p(2w-1), w) code with p + m codewords from an equi-difference (p, w)
/// code with m = (p-1)/(2w-2) codewords; requires p > 2w - 1.
[[nodiscard]] Cac theorem8_family(std::uint64_t p, std::size_t w, const Cac& inner);

/// (p(2w-1), w) code with p + 1 codewords; requires w >= 3, p prime and
/// w <= p <= w + phi(2w-1)/2.
[[nodiscard]] Cac theorem9_family(std::uint64_t p, std::size_t w);

/// Single equi-difference codeword generated by 1 in Z_L.
[[nodiscard]] Cac single_codeword_code(std::uint64_t length, std::size_t w);

/// Nonzero residues of Z_L that are not a difference of any codeword.
[[nodiscard]] ResidueSet uncovered_differences(const Cac& code);

namespace params {

struct C1 {
  std::uint64_t p = 0;
  std::size_t w = 0;
};
struct C2 {
  std::uint64_t p = 0, f = 0, s = 0;
};
struct C3 {
  Cac inner1;
  std::uint64_t s = 1;
  Cac inner2;
};
struct Cor7 {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> more_primes;  // non-empty selects the nested family
};
struct Thm8 {
  std::uint64_t p = 0;
  std::size_t w = 0;
  std::optional<Cac> inner;  // defaults to construct_c1(p, w)
};
struct Thm9 {
  std::uint64_t p = 0;
  std::size_t w = 0;
};

}  // namespace params

using ConstructionSpec = std::variant<params::C1, params::C2, params::C3, params::Cor7, params::Thm8, params::Thm9>;

[[nodiscard]] Cac build(const ConstructionSpec& spec);

}  // namespace cackit
