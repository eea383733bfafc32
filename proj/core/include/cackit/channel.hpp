#pragma once

// Slot-synchronous collision channel without feedback. User r transmits in
// slot t iff (t - offset_r) mod L lies in its codeword; a slot carrying two
// or more packets is lost. A set of active users is non-blocking when every
// one of them owns at least one slot in which it transmits alone.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cackit/cac.hpp"

namespace cackit {

/// Exhaustive check would exceed its budget; count() is the number of
/// (subset, offset) combinations that were requested.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t count, std::uint64_t budget);
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_;
};

struct SimOutcome {
  // Smallest slot in which user r transmits alone, per active user.
  std::vector<std::optional<Residue>> witness;
  // Some k columns of the k x L schedule form a permutation matrix. Found
  // from per-slot occupancy masks, independently of `witness`.
  bool permutation_found = false;

  [[nodiscard]] bool non_blocking() const noexcept;
  /// First active position (index into the active list) without a witness.
  [[nodiscard]] std::optional<std::size_t> blocked_user() const noexcept;
  /// The two criteria agree; a false value would be a simulator bug.
  [[nodiscard]] bool consistent() const noexcept { return permutation_found == non_blocking(); }
};

/// Throws std::out_of_range for a bad codeword index and
/// std::invalid_argument for mismatched sizes or offsets >= L.
[[nodiscard]] SimOutcome check_offsets(const Cac& code, std::span<const std::size_t> active,
                                       std::span<const std::uint64_t> offsets);

/// Same check for an arbitrary family of sequences of common length L
/// (weights may differ, which a Cac cannot hold).
[[nodiscard]] SimOutcome check_offsets(std::uint64_t length, std::span<const Codeword> words,
                                       std::span<const std::size_t> active, std::span<const std::uint64_t> offsets);

struct Violation {
  std::vector<std::size_t> subset;     // codeword indices
  std::vector<std::uint64_t> offsets;  // parallel to subset
  std::size_t user = 0;                // codeword index that never transmits alone
};

struct ExhaustiveOutcome {
  bool non_blocking = true;
  std::optional<Violation> violation;  // first one in enumeration order
  std::uint64_t checks = 0;
};

inline constexpr std::uint64_t kDefaultExhaustiveBudget = 50'000'000;

/// Every k-subset of the codewords and every offset vector with the first
/// offset fixed to 0. Stops at the first violation. Throws BudgetError when
/// C(N, k) * L^(k-1) exceeds `budget`.
[[nodiscard]] ExhaustiveOutcome exhaustive_check(const Cac& code, std::size_t k,
                                                 std::uint64_t budget = kDefaultExhaustiveBudget);
[[nodiscard]] ExhaustiveOutcome exhaustive_check(std::uint64_t length, std::span<const Codeword> words, std::size_t k,
                                                 std::uint64_t budget = kDefaultExhaustiveBudget);

struct TrialSummary {
  std::size_t k = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // lowest trial indices first, at most kMaxReportedViolations

  [[nodiscard]] bool non_blocking() const noexcept { return violation_count == 0; }
};

inline constexpr std::size_t kMaxReportedViolations = 20;

/// Uniform k-subsets and uniform offsets. Trial i draws from a generator
/// seeded by (seed, i), so the result does not depend on `threads`
/// (0 = hardware concurrency).
[[nodiscard]] TrialSummary random_trials(const Cac& code, std::size_t k, std::uint64_t trials, std::uint64_t seed,
                                         unsigned threads = 0);
[[nodiscard]] TrialSummary random_trials(std::uint64_t length, std::span<const Codeword> words, std::size_t k,
                                         std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

/// {"seed", "trials", "verdict", "violations": [{"offsets", "subset", "user"}]}
/// with sorted keys.
[[nodiscard]] std::string report_json(const TrialSummary& summary, int indent = -1);

}  // namespace cackit
