#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "cdi/error.hpp"

namespace cdi {

inline constexpr int kMaxRank = 8;

/// Fixed-capacity integer vector tagged with the basis it is expressed in.
/// Unused slots beyond rank() are always zero, so defaulted comparison and
/// hashing see only the meaningful coordinates.
template <class Basis>
class Coords {
 public:
  using value_type = std::int32_t;

  Coords() = default;

  explicit Coords(int rank) : rank_(rank) {
    if (rank < 0 || rank > kMaxRank) {
      throw Error(Errc::invalid_rank, "rank " + std::to_string(rank) + " outside [0," +
                                          std::to_string(kMaxRank) + "]");
    }
  }

  Coords(std::initializer_list<int> values) : Coords(static_cast<int>(values.size())) {
    std::copy(values.begin(), values.end(), c_.begin());
  }

  static Coords from(std::span<const int> values) {
    Coords out(static_cast<int>(values.size()));
    std::copy(values.begin(), values.end(), out.c_.begin());
    return out;
  }

  int rank() const noexcept { return rank_; }
  value_type operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
  value_type& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }

  const value_type* begin() const noexcept { return c_.data(); }
  const value_type* end() const noexcept { return c_.data() + rank_; }

  bool is_zero() const noexcept {
    return std::all_of(begin(), end(), [](value_type v) { return v == 0; });
  }

  Coords& operator+=(const Coords& o) {
    check_rank(o);
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    check_rank(o);
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Coords& operator*=(value_type k) {
    for (int i = 0; i < rank_; ++i) c_[i] *= k;
    return *this;
  }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(value_type k, Coords a) { return a *= k; }
  Coords operator-() const { return Coords(rank_) - *this; }

  friend bool operator==(const Coords&, const Coords&) = default;
  friend auto operator<=>(const Coords&, const Coords&) = default;

  template <class H>
  friend H AbslHashValue(H h, const Coords& v) {
    return H::combine(std::move(h), v.c_, v.rank_);
  }

 private:
  void check_rank(const Coords& o) const {
    if (o.rank_ != rank_) {
      throw Error(Errc::rank_mismatch,
                  std::to_string(rank_) + " vs " + std::to_string(o.rank_));
    }
  }

  std::array<value_type, kMaxRank> c_{};
  int rank_ = 0;
};

struct SimpleRootBasis;
struct FundamentalWeightBasis;

/// Coordinates in the simple-root basis; positive roots have all m_i >= 0.
using Root = Coords<SimpleRootBasis>;
/// Coordinates in the fundamental-weight basis; dominant iff all >= 0.
using Weight = Coords<FundamentalWeightBasis>;

inline bool is_dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int v) { return v >= 0; });
}

inline int height(const Root& r) {
  int h = 0;
  for (int v : r) h += v;
  return h;
}

}  // namespace cdi
