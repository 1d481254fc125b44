#include "ohno/index.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ohno/errors.hpp"

namespace ohno {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyIndex: return "EmptyIndex";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::LastPartTooSmall: return "LastPartTooSmall";
    case ErrorCode::PatternLengthMismatch: return "PatternLengthMismatch";
    case ErrorCode::InfeasibleTotal: return "InfeasibleTotal";
    case ErrorCode::BinomialOverflow: return "BinomialOverflow";
    case ErrorCode::ParameterDomain: return "ParameterDomain";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::RadiusDomain: return "RadiusDomain";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::WeightTooLarge: return "WeightTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

AdmissibleIndex AdmissibleIndex::validate(std::span<const int> parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::EmptyIndex, "an admissible index needs at least one part");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) {
      throw Error(ErrorCode::NonPositivePart,
                  "part " + std::to_string(i + 1) + " is " + std::to_string(parts[i]) +
                      ", every part must be >= 1");
    }
  }
  if (parts.back() < 2) {
    throw Error(ErrorCode::LastPartTooSmall,
                "last part is " + std::to_string(parts.back()) + ", it must be >= 2");
  }
  return AdmissibleIndex(std::vector<int>(parts.begin(), parts.end()));
}

AdmissibleIndex AdmissibleIndex::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    int value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) {
      throw Error(ErrorCode::ParseError, "malformed index literal '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw Error(ErrorCode::ParseError, "malformed index literal '" + std::string(text) + "'");
    }
    ++pos;
  }
  return validate(parts);
}

int AdmissibleIndex::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string AdmissibleIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

AdmissibleIndex BlockForm::reconstruct() const {
  std::vector<int> parts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    parts.insert(parts.end(), static_cast<std::size_t>(a[i]), 1);
    parts.push_back(b[i] + 2);
  }
  return AdmissibleIndex::validate(parts);
}

BlockForm to_block_form(const AdmissibleIndex& k) {
  BlockForm form;
  int run = 0;
  for (int part : k.parts()) {
    if (part == 1) {
      ++run;
    } else {
      form.a.push_back(run);
      form.b.push_back(part - 2);
      run = 0;
    }
  }
  return form;
}

AdmissibleIndex dual(const AdmissibleIndex& k) {
  const BlockForm form = to_block_form(k);
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(k.weight()));
  for (std::size_t i = form.a.size(); i-- > 0;) {
    parts.insert(parts.end(), static_cast<std::size_t>(form.b[i]), 1);
    parts.push_back(form.a[i] + 2);
  }
  return AdmissibleIndex::validate(parts);
}

namespace {

void compositions_rec(int remaining, std::size_t slot, std::vector<int>& parts,
                      const std::function<void(std::span<const int>)>& visit) {
  if (slot + 1 == parts.size()) {
    parts[slot] = remaining;
    visit(parts);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    parts[slot] = v;
    compositions_rec(remaining - v, slot + 1, parts, visit);
  }
}

}  // namespace

void for_each_composition(int total, int length,
                          const std::function<void(std::span<const int>)>& visit) {
  if (total < 0 || length < 0) return;
  if (length == 0) {
    if (total == 0) visit(std::span<const int>());
    return;
  }
  std::vector<int> parts(static_cast<std::size_t>(length), 0);
  compositions_rec(total, 0, parts, visit);
}

std::vector<Composition> enumerate_compositions(int total, int length) {
  std::vector<Composition> out;
  for_each_composition(total, length, [&](std::span<const int> parts) {
    out.push_back(Composition{std::vector<int>(parts.begin(), parts.end()), total});
  });
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    unsigned __int128 wide = static_cast<unsigned __int128>(result) *
                             static_cast<unsigned __int128>(n - k + i);
    wide /= static_cast<unsigned __int128>(i);
    if (wide > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorCode::BinomialOverflow,
                  "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
    }
    result = static_cast<std::uint64_t>(wide);
  }
  return result;
}

std::uint64_t composition_count(int total, int length) {
  if (length == 0) return total == 0 ? 1 : 0;
  return binomial(total + length - 1, length - 1);
}

int InsertionPattern::total() const noexcept {
  return std::accumulate(ones_counts.begin(), ones_counts.end(), 0);
}

AdmissibleIndex insert_ones(const AdmissibleIndex& k, const InsertionPattern& p) {
  const auto n = static_cast<std::size_t>(k.depth());
  if (p.ones_counts.size() + 1 != n) {
    throw Error(ErrorCode::PatternLengthMismatch,
                "pattern has " + std::to_string(p.ones_counts.size()) + " entries, index depth " +
                    std::to_string(n) + " needs " + std::to_string(n - 1));
  }
  std::vector<int> parts;
  parts.reserve(n + static_cast<std::size_t>(p.total()));
  for (std::size_t i = 0; i < n; ++i) {
    parts.push_back(k[i]);
    if (i + 1 < n) {
      if (p.ones_counts[i] < 0) {
        throw Error(ErrorCode::NonPositivePart, "insertion counts must be non-negative");
      }
      parts.insert(parts.end(), static_cast<std::size_t>(p.ones_counts[i]), 1);
    }
  }
  return AdmissibleIndex::validate(parts);
}

AdmissibleIndex dual_of_inserted(const AdmissibleIndex& k, const InsertionPattern& p) {
  AdmissibleIndex inserted_dual = dual(insert_ones(k, p));
  const AdmissibleIndex base_dual = dual(k);
  if (inserted_dual.depth() != base_dual.depth()) {
    throw std::logic_error("dual of inserted index changed depth: " + inserted_dual.to_string() +
                           " vs " + base_dual.to_string());
  }
  int increment_total = 0;
  for (int i = 0; i < base_dual.depth(); ++i) {
    const int inc = inserted_dual[static_cast<std::size_t>(i)] - base_dual[static_cast<std::size_t>(i)];
    if (inc < 0) {
      throw std::logic_error("dual of inserted index decreased an entry: " +
                             inserted_dual.to_string() + " vs " + base_dual.to_string());
    }
    increment_total += inc;
  }
  if (increment_total != p.total()) {
    throw std::logic_error("increments of dual of inserted index total " +
                           std::to_string(increment_total) + ", expected " +
                           std::to_string(p.total()));
  }
  return inserted_dual;
}

std::vector<BlockDistribution> enumerate_block_distributions(std::span<const int> slot_counts,
                                                             int total) {
  std::vector<std::size_t> open_groups;
  for (std::size_t g = 0; g < slot_counts.size(); ++g) {
    if (slot_counts[g] > 0) open_groups.push_back(g);
  }
  const std::vector<int> slots(slot_counts.begin(), slot_counts.end());
  std::vector<BlockDistribution> out;
  if (open_groups.empty()) {
    if (total > 0) {
      throw Error(ErrorCode::InfeasibleTotal,
                  "total " + std::to_string(total) + " cannot be placed in zero slots");
    }
    out.push_back(BlockDistribution{std::vector<int>(slots.size(), 0), slots, 1});
    return out;
  }
  for_each_composition(total, static_cast<int>(open_groups.size()), [&](std::span<const int> c) {
    BlockDistribution dist{std::vector<int>(slots.size(), 0), slots, 1};
    for (std::size_t i = 0; i < open_groups.size(); ++i) {
      const std::size_t g = open_groups[i];
      dist.block_sums[g] = c[i];
      dist.multiplicity *= composition_count(c[i], slots[g]);
    }
    out.push_back(std::move(dist));
  });
  return out;
}

std::vector<BlockDistribution> enumerate_block_distributions_raw(std::span<const int> slot_counts,
                                                                 int total) {
  const std::vector<int> slots(slot_counts.begin(), slot_counts.end());
  const int slot_total = std::accumulate(slots.begin(), slots.end(), 0);
  if (slot_total == 0 && total > 0) {
    throw Error(ErrorCode::InfeasibleTotal,
                "total " + std::to_string(total) + " cannot be placed in zero slots");
  }
  std::map<std::vector<int>, std::uint64_t> tally;
  for_each_composition(total, slot_total, [&](std::span<const int> per_slot) {
    std::vector<int> sums(slots.size(), 0);
    std::size_t pos = 0;
    for (std::size_t g = 0; g < slots.size(); ++g) {
      for (int s = 0; s < slots[g]; ++s) sums[g] += per_slot[pos++];
    }
    ++tally[sums];
  });
  std::vector<BlockDistribution> out;
  for (auto& [sums, count] : tally) out.push_back(BlockDistribution{sums, slots, count});
  return out;
}

std::vector<AdmissibleIndex> admissible_indices(int weight, int depth) {
  std::vector<AdmissibleIndex> out;
  if (depth < 1 || weight < depth + 1) return out;
  for_each_composition(weight - depth - 1, depth, [&](std::span<const int> c) {
    std::vector<int> parts(c.begin(), c.end());
    for (int& p : parts) p += 1;
    parts.back() += 1;
    out.push_back(AdmissibleIndex::validate(parts));
  });
  return out;
}

std::vector<AdmissibleIndex> admissible_indices(int weight) {
  std::vector<AdmissibleIndex> out;
  for (int depth = 1; depth < weight; ++depth) {
    auto family = admissible_indices(weight, depth);
    out.insert(out.end(), family.begin(), family.end());
  }
  return out;
}

std::vector<AdmissibleIndex> admissible_indices_up_to(int max_weight) {
  std::vector<AdmissibleIndex> out;
  for (int w = 2; w <= max_weight; ++w) {
    auto family = admissible_indices(w);
    out.insert(out.end(), family.begin(), family.end());
  }
  return out;
}

}  // namespace ohno
