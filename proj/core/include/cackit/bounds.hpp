#pragma once

// Upper bounds on M(L, w), the largest size of an (L, w) conflict-avoiding
// code.
//
// Every exceptional codeword I of a code has a periodic difference set whose
// stabilizer order x = |H(d(I))| divides L, lies in [2, 2w-2], and satisfies
// 2x*ceil(w/x) - x <= 2w - 2; the orders of distinct exceptional codewords
// are pairwise coprime. S(L, w) collects the eligible orders and F(L, w) is
// the best total of the per-order credits
//
//   c_x = x - 1 - 2x*ceil(w/x) + 2w
//
// over pairwise-coprime subsets of S(L, w). The size of any code is then at
// most floor((L - 1 + F) / (2w - 2)).

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cackit {

enum class BoundMethod { theorem4, theorem5, corollary_w3, corollary_w6 };

[[nodiscard]] std::string_view to_string(BoundMethod method) noexcept;
/// Accepts "theorem4", "theorem5", "w3"/"corollary_w3", "w6"/"corollary_w6".
[[nodiscard]] BoundMethod parse_bound_method(std::string_view name);

/// c_x for stabilizer order x and weight w.
[[nodiscard]] std::int64_t order_credit(std::uint64_t x, std::uint64_t w);

/// S(L, w) in increasing order. Throws std::invalid_argument unless L >= w >= 2.
[[nodiscard]] std::vector<std::uint64_t> compute_s(std::uint64_t length, std::uint64_t weight);

struct FResult {
  std::int64_t value = 0;
  std::vector<std::uint64_t> witness;  // maximizing pairwise-coprime subset
};

/// Branch-and-bound over pairwise-coprime subsets of S(L, w). Among
/// maximizers the lexicographically smallest witness is returned.
[[nodiscard]] FResult compute_f(std::uint64_t length, std::uint64_t weight);

/// F(L, w) as the 0/1 program: maximize sum c_i z_i subject to, for every
/// prime q <= 2w - 2, sum_{q | i} z_i <= 1. Solved exactly by assigning
/// each prime to at most one selected order.
[[nodiscard]] FResult compute_f_lp(std::uint64_t length, std::uint64_t weight);

/// floor((L - 1 + F(L, w)) / (2w - 2)).
[[nodiscard]] std::uint64_t theorem4_bound(std::uint64_t length, std::uint64_t weight);

/// floor((L - 1)/(2w - 2) + pi(2w - 2)/2).
[[nodiscard]] std::uint64_t theorem5_bound(std::uint64_t length, std::uint64_t weight);

/// floor((L + 1)/4); requires L >= 3.
[[nodiscard]] std::uint64_t corollary_w3_bound(std::uint64_t length);

/// Piecewise closed form of theorem4_bound(L, 6) in terms of the exponents
/// of 2, 3 and 7 in L; requires L >= 6.
[[nodiscard]] std::uint64_t corollary_w6_bound(std::uint64_t length);

struct BoundReport {
  std::uint64_t length = 0;
  std::uint64_t weight = 0;
  BoundMethod method = BoundMethod::theorem4;
  std::vector<std::uint64_t> eligible;  // S(L, w)
  std::vector<std::int64_t> credits;    // c_x, parallel to eligible
  std::vector<std::uint64_t> witness;   // maximizing subset
  std::int64_t f = 0;
  std::uint64_t bound = 0;  // value of the selected method
};

/// S, F and witness always come from the theorem-4 computation; `bound`
/// is the selected method's value.
[[nodiscard]] BoundReport bound_report(std::uint64_t length, std::uint64_t weight,
                                       BoundMethod method = BoundMethod::theorem4);

}  // namespace cackit
