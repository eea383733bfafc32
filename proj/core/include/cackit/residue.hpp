#pragma once

// Exact set arithmetic in the cyclic group Z_L.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cackit {

using Residue = std::uint64_t;

/// Largest modulus accepted anywhere in the library.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

/// Element sets larger than this are never materialized (expand_subgroup,
/// sumset). Arithmetic on residues is unaffected by the limit.
inline constexpr std::size_t kMaxMaterializedSize = std::size_t{1} << 24;

struct Subgroup;

/// A subset of Z_L, stored as a strictly increasing list of residues.
class ResidueSet {
 public:
  /// Elements are sorted and deduplicated; any element >= modulus throws
  /// std::out_of_range. The modulus must lie in [1, kMaxModulus].
  ResidueSet(std::uint64_t modulus, std::vector<Residue> elements);
  ResidueSet(std::uint64_t modulus, std::initializer_list<Residue> elements)
      : ResidueSet(modulus, std::vector<Residue>(elements)) {}

  /// Builds from arbitrary integers, reducing each into [0, modulus).
  static ResidueSet reduced(std::uint64_t modulus, std::span<const std::int64_t> values);

  [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::span<const Residue> elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
  [[nodiscard]] bool contains(Residue x) const noexcept;

  [[nodiscard]] auto begin() const noexcept { return elements_.begin(); }
  [[nodiscard]] auto end() const noexcept { return elements_.end(); }

  /// {-x mod L : x in this}.
  [[nodiscard]] ResidueSet negated() const;
  /// {x + c mod L : x in this}.
  [[nodiscard]] ResidueSet translated(Residue c) const;
  /// True when every element of this set lies in `other` (same modulus).
  [[nodiscard]] bool is_subset_of(const ResidueSet& other) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
  friend auto operator<=>(const ResidueSet& a, const ResidueSet& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

 private:
  struct Trusted {};
  ResidueSet(Trusted, std::uint64_t modulus, std::vector<Residue> sorted_unique);

  std::uint64_t modulus_;
  std::vector<Residue> elements_;

  friend ResidueSet diff_set(const ResidueSet&);
  friend ResidueSet sumset(const ResidueSet&, const ResidueSet&);
  friend ResidueSet expand_subgroup(const Subgroup&);
};

/// The subgroup <generator> of Z_L, where generator divides L. The trivial
/// subgroup {0} is represented by generator == modulus.
struct Subgroup {
  std::uint64_t modulus = 1;
  std::uint64_t generator = 1;

  /// Throws std::invalid_argument unless `generator` divides `modulus`.
  static Subgroup generated_by(std::uint64_t modulus, std::uint64_t generator);

  [[nodiscard]] std::uint64_t order() const noexcept { return modulus / generator; }
  [[nodiscard]] bool trivial() const noexcept { return generator == modulus; }
  [[nodiscard]] bool contains(Residue x) const noexcept { return x % generator == 0; }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// d(I) = {a - b mod L : a, b in I}. Throws std::invalid_argument on empty I.
ResidueSet diff_set(const ResidueSet& set);

/// d*(I) = d(I) \ {0}.
ResidueSet nonzero_diff_set(const ResidueSet& set);

/// A + B. Both sets must be non-empty and share a modulus.
ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);

/// Largest subgroup H with H + S = S.
Subgroup stabilizer(const ResidueSet& set);

/// The explicit element set {0, a, 2a, ..., L - a}.
ResidueSet expand_subgroup(const Subgroup& group);

}  // namespace cackit
