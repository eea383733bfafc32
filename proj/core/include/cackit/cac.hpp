#pragma once

// Codewords, conflict-avoiding codes, verification and classification.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cackit/residue.hpp"

namespace cackit {

/// A weight-w subset of Z_L that contains 0. An optional generator tag
/// marks an equi-difference codeword {0, g, 2g, ..., (w-1)g}; the tag is
/// checked against the elements on construction.
class Codeword {
 public:
  explicit Codeword(ResidueSet elements, std::optional<Residue> generator = std::nullopt);

  /// {0, g, ..., (w-1)g mod L}. Throws std::invalid_argument when the
  /// multiples are not w distinct residues.
  static Codeword equi_difference(std::uint64_t length, std::size_t weight, Residue generator);

  [[nodiscard]] std::uint64_t modulus() const noexcept { return elements_.modulus(); }
  [[nodiscard]] std::size_t weight() const noexcept { return elements_.size(); }
  [[nodiscard]] const ResidueSet& elements() const noexcept { return elements_; }
  [[nodiscard]] std::optional<Residue> generator() const noexcept { return generator_; }

  [[nodiscard]] ResidueSet differences() const { return diff_set(elements_); }
  [[nodiscard]] ResidueSet nonzero_differences() const { return nonzero_diff_set(elements_); }

  /// The lexicographically smallest translate of this codeword that
  /// contains 0. Two codewords are translates iff their keys match.
  [[nodiscard]] std::vector<Residue> translation_key() const;

  friend bool operator==(const Codeword& a, const Codeword& b) { return a.elements_ == b.elements_; }
  friend auto operator<=>(const Codeword& a, const Codeword& b) { return a.elements_ <=> b.elements_; }

 private:
  ResidueSet elements_;
  std::optional<Residue> generator_;
};

/// The smallest g with {0, g, ..., (w-1)g} equal to `elements`, if any.
[[nodiscard]] std::optional<Residue> find_generator(const ResidueSet& elements);

/// Equi-difference codeword builder (free-function form).
[[nodiscard]] Codeword equi_difference_codeword(std::uint64_t length, std::size_t weight, Residue generator);

/// An (L, w) code: codewords of one length and weight, kept in
/// lexicographic order. Holding a Cac does not imply it verifies.
class Cac {
 public:
  /// Throws std::invalid_argument when a codeword's modulus or weight
  /// disagrees with (length, weight).
  Cac(std::uint64_t length, std::size_t weight, std::vector<Codeword> codewords);

  [[nodiscard]] std::uint64_t length() const noexcept { return length_; }
  [[nodiscard]] std::size_t weight() const noexcept { return weight_; }
  [[nodiscard]] std::size_t size() const noexcept { return codewords_.size(); }
  [[nodiscard]] std::span<const Codeword> codewords() const noexcept { return codewords_; }
  [[nodiscard]] const Codeword& operator[](std::size_t i) const { return codewords_.at(i); }

  /// Generator tags in codeword order (nullopt where untagged).
  [[nodiscard]] std::vector<std::optional<Residue>> generators() const;
  /// Sorted generator tags; throws std::logic_error if any codeword is untagged.
  [[nodiscard]] std::vector<Residue> generator_set() const;
  [[nodiscard]] bool is_equi_difference() const;

  friend bool operator==(const Cac&, const Cac&) = default;

 private:
  std::uint64_t length_;
  std::size_t weight_;
  std::vector<Codeword> codewords_;
};

struct Conflict {
  std::size_t first = 0;   // codeword index j
  std::size_t second = 0;  // codeword index k > j
  Residue difference = 0;  // smallest shared nonzero difference
};

struct Verdict {
  std::optional<Conflict> conflict;
  [[nodiscard]] bool ok() const noexcept { return !conflict.has_value(); }
};

/// Pairwise disjointness of the nonzero difference sets. On failure the
/// lexicographically smallest conflicting pair (j, k) is reported.
[[nodiscard]] Verdict verify_cac(const Cac& code);

/// |d*(I)| < 2w - 2.
[[nodiscard]] bool is_exceptional(const Codeword& word);

/// |d(I)| == 2|I + H| - |H| with H the stabilizer of d(I).
[[nodiscard]] bool kneser_identity_holds(const Codeword& word);

struct CodewordClass {
  std::size_t index = 0;
  bool exceptional = false;
  Subgroup stabilizer;              // of d(I)
  std::size_t diff_size = 0;        // |d(I)|
  std::size_t completion_size = 0;  // |I + H|
  std::size_t delta = 0;            // |I + H| - w
};

struct ExceptionalReport {
  std::vector<CodewordClass> codewords;

  [[nodiscard]] std::size_t exceptional_count() const noexcept;
};

/// Per-codeword stabilizer data. Every exceptional codeword is checked to
/// have a nontrivial stabilizer and to satisfy the Kneser identity; a
/// failure throws std::logic_error (an arithmetic bug, not bad input).
[[nodiscard]] ExceptionalReport classify(const Cac& code);

/// Nonnegative fraction kept in lowest terms.
struct Rational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  [[nodiscard]] std::int64_t floor() const noexcept;
  [[nodiscard]] double value() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// (L - 1 + sum_j (|H_j| - 1 - 2 Delta_j)) / (2w - 2) over the exceptional
/// codewords; an upper bound on the size of any verified code. Needs w >= 2.
[[nodiscard]] Rational theorem2_rhs(const Cac& code);
[[nodiscard]] Rational theorem2_rhs(const Cac& code, const ExceptionalReport& report);

/// Sum over codewords of |d*(I)|; at most L - 1 for a verified code.
[[nodiscard]] std::size_t total_nonzero_differences(const Cac& code);

}  // namespace cackit
