#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radon/errors.hpp"
#include "radon/rational.hpp"
#include "radon/subset.hpp"

namespace radon {

// A weight in the fundamental-weight basis: coordinate i is the pairing with
// the i-th simple coroot.  Coordinates are exact rationals.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : c_(std::move(coords)) {}

  static Weight zero(int rank) {
    return Weight(std::vector<Rational>(rank, Rational(0)));
  }

  // rho has every fundamental-weight coordinate equal to 1.
  static Weight rho(int rank) {
    return Weight(std::vector<Rational>(rank, Rational(1)));
  }

  int rank() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_integral() const {
    for (const auto& x : c_)
      if (!x.is_integer()) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  // True when every coordinate indexed by the subset vanishes.
  bool vanishes_on(const ParabolicSubset& s) const {
    for (int i : s.indices()) {
      if (i > rank()) fail(Errc::IndexOutOfRange, "subset exceeds rank");
      if (!c_[i - 1].is_zero()) return false;
    }
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_rank(o);
    for (int i = 0; i < rank(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_rank(o);
    for (int i = 0; i < rank(); ++i) c_[i] -= o.c_[i];
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

  Weight operator-() const {
    Weight w = *this;
    for (auto& x : w.c_) x = -x;
    return w;
  }

  friend Weight operator*(const Rational& s, Weight w) {
    for (auto& x : w.c_) x *= s;
    return w;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Weight& a, const Weight& b) {
    return !(a == b);
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += c_[i].str();
    }
    return s + ")";
  }

 private:
  void check_rank(const Weight& o) const {
    if (o.rank() != rank())
      fail(Errc::RankMismatch, "weights of rank " + std::to_string(rank()) +
                                   " and " + std::to_string(o.rank()));
  }

  std::vector<Rational> c_;
};

}  // namespace radon
