#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "radon/errors.hpp"

namespace radon {

// A set of simple-root indices (1-based, as in all public interfaces).
// Stored as a bitmask; bit k-1 set means index k is a member.  Validation
// against a concrete rank happens where the subset meets a root system.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;

  static ParabolicSubset of(std::initializer_list<int> indices) {
    return from_indices(std::vector<int>(indices));
  }

  static ParabolicSubset from_indices(const std::vector<int>& indices) {
    ParabolicSubset s;
    for (int i : indices) {
      if (i < 1 || i > kMaxRank)
        fail(Errc::IndexOutOfRange,
             "simple-root index " + std::to_string(i) + " out of range");
      s.bits_ |= uint32_t(1) << (i - 1);
    }
    return s;
  }

  static ParabolicSubset full(int rank) {
    ParabolicSubset s;
    s.bits_ = (rank >= kMaxRank) ? ~uint32_t(0) : ((uint32_t(1) << rank) - 1);
    return s;
  }

  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  bool contains(int i) const {
    return i >= 1 && i <= kMaxRank && (bits_ >> (i - 1)) & 1;
  }

  ParabolicSubset with(int i) const {
    ParabolicSubset s = *this;
    if (i < 1 || i > kMaxRank)
      fail(Errc::IndexOutOfRange,
           "simple-root index " + std::to_string(i) + " out of range");
    s.bits_ |= uint32_t(1) << (i - 1);
    return s;
  }

  bool is_subset_of(const ParabolicSubset& o) const {
    return (bits_ & ~o.bits_) == 0;
  }

  int max_index() const {
    return bits_ == 0 ? 0 : 32 - __builtin_clz(bits_);
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= kMaxRank; ++i)
      if ((bits_ >> (i - 1)) & 1) out.push_back(i);
    return out;
  }

  uint32_t bits() const { return bits_; }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(ParabolicSubset a, ParabolicSubset b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(ParabolicSubset a, ParabolicSubset b) {
    return a.bits_ != b.bits_;
  }
  friend bool operator<(ParabolicSubset a, ParabolicSubset b) {
    return a.bits_ < b.bits_;
  }

  static constexpr int kMaxRank = 32;

 private:
  uint32_t bits_ = 0;
};

}  // namespace radon
