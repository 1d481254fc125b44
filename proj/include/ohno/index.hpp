#pragma once

// Exact combinatorics of admissible indices: validation, block form, duality,
// and the composition / insertion / block-distribution families that index the
// Ohno sums and their generating functions.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ohno {

/// A composition (k_1, ..., k_n) of positive integers with k_n >= 2.
class AdmissibleIndex {
 public:
  /// Throws Error{EmptyIndex | NonPositivePart | LastPartTooSmall}.
  static AdmissibleIndex validate(std::span<const int> parts);
  static AdmissibleIndex validate(std::initializer_list<int> parts) {
    return validate(std::span<const int>(parts.begin(), parts.size()));
  }
  /// Parses the compact text form "1,2,3"; malformed text raises ParseError.
  static AdmissibleIndex parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int depth() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Compact text form, e.g. "1,2,3".
  std::string to_string() const;

  friend auto operator<=>(const AdmissibleIndex&, const AdmissibleIndex&) = default;
  friend bool operator==(const AdmissibleIndex&, const AdmissibleIndex&) = default;

 private:
  explicit AdmissibleIndex(std::vector<int> parts) : parts_(std::move(parts)) {}
  std::vector<int> parts_;
};

/// k = (1^{a_1}, b_1+2, ..., 1^{a_s}, b_s+2).
struct BlockForm {
  std::vector<int> a;
  std::vector<int> b;

  AdmissibleIndex reconstruct() const;
  friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

BlockForm to_block_form(const AdmissibleIndex& k);

/// Dual index (1^{b_s}, a_s+2, ..., 1^{b_1}, a_1+2).
AdmissibleIndex dual(const AdmissibleIndex& k);

struct Composition {
  std::vector<int> parts;
  int total = 0;

  int length() const noexcept { return static_cast<int>(parts.size()); }
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Calls `visit` for every composition of `total` into `length` non-negative
/// parts, in lexicographic order of the parts. `length` must be >= 0; for
/// length 0 only total 0 yields (the empty composition).
void for_each_composition(int total, int length,
                          const std::function<void(std::span<const int>)>& visit);

std::vector<Composition> enumerate_compositions(int total, int length);

/// C(n, k) in exact 64-bit arithmetic; raises BinomialOverflow when the value
/// does not fit. Returns 0 for k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// Number of compositions of `total` into `length` non-negative parts.
std::uint64_t composition_count(int total, int length);

/// Ones inserted between consecutive parts of a base index: (i_1, ..., i_{n-1}).
struct InsertionPattern {
  std::vector<int> ones_counts;

  int total() const noexcept;
};

/// (k_1, 1^{i_1}, k_2, ..., k_{n-1}, 1^{i_{n-1}}, k_n). Raises PatternLengthMismatch
/// unless the pattern has depth(k) - 1 entries.
AdmissibleIndex insert_ones(const AdmissibleIndex& k, const InsertionPattern& p);

/// dual(insert_ones(k, p)). Also checks that the result has the depth of
/// dual(k) and exceeds it entrywise by non-negative increments totalling
/// p.total(); a violation throws std::logic_error.
AdmissibleIndex dual_of_inserted(const AdmissibleIndex& k, const InsertionPattern& p);

struct BlockDistribution {
  std::vector<int> block_sums;
  std::vector<int> slot_counts;
  std::uint64_t multiplicity = 1;
};

/// Block-sum vectors summing to `total` with their stars-and-bars multiplicity.
/// A group with 0 slots only takes block sum 0. Raises InfeasibleTotal when
/// total > 0 and every group is empty.
std::vector<BlockDistribution> enumerate_block_distributions(std::span<const int> slot_counts,
                                                             int total);

/// Debug path: enumerates every per-slot assignment and aggregates by block
/// sums. Same result as enumerate_block_distributions at exponential cost.
std::vector<BlockDistribution> enumerate_block_distributions_raw(std::span<const int> slot_counts,
                                                                 int total);

/// All admissible indices of the given weight and depth, lexicographic.
std::vector<AdmissibleIndex> admissible_indices(int weight, int depth);

/// All admissible indices of the given weight (any depth), ordered by depth
/// then lexicographically.
std::vector<AdmissibleIndex> admissible_indices(int weight);

/// All admissible indices of weight 2..max_weight.
std::vector<AdmissibleIndex> admissible_indices_up_to(int max_weight);

}  // namespace ohno
