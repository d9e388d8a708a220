#pragma once

// Symmetric subsets of Q_4m stored structurally.
//
// A symmetric subset S not containing 1 splits as S1 (inside <x>) and S2
// (inside <x>y), and each half is a disjoint union of inverse-closed blocks:
//
//   S1 = U { x^k1, x^(2m-k1) : 1 <= k1 <= m-1 }  u  {x^m}^delta
//   S2 = U { x^k2 y, x^(m+k2) y : 0 <= k2 <= m-1 }
//
// so a subset is fully described by two bitsets and a flag.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rq/group.hpp"

namespace rq {

struct CovalencyProfile {
  int l = 0;
  int l1 = 0;
  int l2 = 0;
  int delta = 0;

  friend bool operator==(const CovalencyProfile&, const CovalencyProfile&) = default;
};

struct SigmaCounts {
  int even1 = 0;  // k1 even, pairs in <x>
  int odd1 = 0;
  int even2 = 0;  // k2 even, pairs in <x>y
  int odd2 = 0;

  friend bool operator==(const SigmaCounts&, const SigmaCounts&) = default;
};

enum class Family {
  kS,       // all symmetric generating subsets without 1
  kSPrime,  // those that additionally miss part of <x>y (l2 != 0)
};

class CayleySubset {
 public:
  // Empty subset (no pairs, delta = 0).
  explicit CayleySubset(OrderParam m);

  // Bit (k1 - 1) of pair_mask selects {x^k1, x^-k1}; bit k2 of ypair_mask
  // selects {x^k2 y, x^(m+k2) y}. Requires m <= 64.
  static CayleySubset from_masks(OrderParam m, std::uint64_t pair_mask, int delta,
                                 std::uint64_t ypair_mask);

  // S = G \ {1}.
  static CayleySubset complete(OrderParam m);

  // Parses "m=<int>;pairs=<k1,...>;delta=<0|1>;ypairs=<k2,...>".
  static CayleySubset parse(std::string_view literal);
  std::string to_literal() const;

  OrderParam order_param() const { return m_; }
  int m() const { return m_.value(); }

  bool has_pair(int k1) const;
  bool has_ypair(int k2) const;
  int delta() const { return delta_; }

  void set_pair(int k1, bool on);
  void set_ypair(int k2, bool on);
  void set_delta(int delta);

  int pair_count() const;
  int ypair_count() const;
  int size() const { return 2 * pair_count() + delta_ + 2 * ypair_count(); }

  std::vector<Element> elements() const;
  CovalencyProfile profile() const;
  SigmaCounts sigma_counts() const;
  bool generates() const;
  bool in_family(Family family) const;

  friend bool operator==(const CayleySubset&, const CayleySubset&) = default;

 private:
  OrderParam m_;
  std::vector<bool> pairs_;   // index k1 in [1, m-1]; slot 0 unused
  std::vector<bool> ypairs_;  // index k2 in [0, m-1]
  int delta_ = 0;
};

// Lazily yields every subset of `family` with covalency l, ordered by
// (pair_mask, delta, ypair_mask) ascending. Requires m <= 32.
class FamilyStream {
 public:
  FamilyStream(OrderParam m, int l, Family family);

  std::optional<CayleySubset> next();

 private:
  bool advance_outer();

  OrderParam m_;
  int l_;
  Family family_;
  std::uint64_t pair_limit_;
  std::uint64_t ypair_limit_;
  std::uint64_t pair_mask_ = 0;
  int delta_ = -1;
  std::uint64_t ypair_mask_ = 0;
  bool inner_active_ = false;
  bool done_ = false;
};

std::vector<CayleySubset> enumerate_family(OrderParam m, int l, Family family);

// True when (l1, l2) is a legal split for the family: 0 < l1 <= 2m,
// 0 <= l2 < 2m (0 < l2 for S'), l2 even.
bool admissible_split(OrderParam m, int l1, int l2, Family family);

// S^(l1,l2): removes the window {1, x^+-1, .., x^+-(l1-2+delta)/2} from <x>
// (plus x^m when l1 is even) and {x^k y, x^(m+k) y : 0 <= k < l2/2} from <x>y.
// delta is the parity of l1 + l2.
CayleySubset extremal_subset(OrderParam m, int l1, int l2);

// Next integer above `mask` with the same popcount.
std::uint64_t next_same_popcount(std::uint64_t mask);

}  // namespace rq
