#pragma once

// Exhaustive search for maximum conflict-avoiding codes at small lengths.
//
// Codewords are restricted to weight-w subsets containing 0 (any codeword
// can be translated so). Two candidates with the same difference set are
// interchangeable, so only the lexicographically first is kept. The search
// branches on the smallest difference not yet decided: either some codeword
// covers it, or it stays uncovered for good.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "cackit/cac.hpp"

namespace cackit {

/// Parameters outside the practical enumeration range.
class EnvelopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest candidate pool the search will enumerate: C(L-1, w-1).
inline constexpr std::uint64_t kMaxCandidates = 150'000;
/// Differences are tracked in a single 64-bit word.
inline constexpr std::uint64_t kMaxSearchLength = 128;

enum class SearchTarget { maximize, prove_no_code_of_size };
enum class ProofStatus { exhaustive, budget_exhausted };

[[nodiscard]] std::string_view to_string(ProofStatus status) noexcept;

struct SearchConfig {
  std::uint64_t length = 0;
  std::size_t weight = 0;
  SearchTarget target = SearchTarget::maximize;
  std::size_t target_size = 0;  // used with prove_no_code_of_size
  std::optional<std::uint64_t> node_budget;
  // Fix the first codeword up to multiplication by units. Unset means on
  // for L > 35.
  std::optional<bool> symmetry;
  std::optional<Cac> incumbent;  // known code, used as the starting lower bound
};

struct SearchResult {
  std::size_t best = 0;
  Cac witness;  // |witness| == best
  ProofStatus status = ProofStatus::exhaustive;
  std::uint64_t nodes = 0;
};

/// Throws std::invalid_argument unless L >= w >= 2, EnvelopeError when the
/// candidate pool is too large to enumerate.
void check_envelope(std::uint64_t length, std::size_t weight);

/// With target maximize and status exhaustive, best == M(L, w). With
/// prove_no_code_of_size k the search stops at the first code of size k;
/// best < k with status exhaustive means no such code exists.
[[nodiscard]] SearchResult max_cac(const SearchConfig& config);

enum class Optimality { optimal, not_optimal, undetermined };

[[nodiscard]] std::string_view to_string(Optimality verdict) noexcept;

struct OptimalityResult {
  Optimality verdict = Optimality::undetermined;
  bool by_bound = false;     // settled by |code| == theorem4_bound
  std::optional<Cac> larger;  // set when verdict is not_optimal
  std::uint64_t nodes = 0;
};

/// Decides whether a code of size |code| + 1 exists. Throws
/// std::invalid_argument if `code` does not verify.
[[nodiscard]] OptimalityResult prove_optimal(const Cac& code,
                                             std::optional<std::uint64_t> node_budget = std::nullopt);

}  // namespace cackit
