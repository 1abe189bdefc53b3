#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gitq {

inline constexpr int kMaxPoints = 32;

/// A subset of {0, ..., n-1}, stored as a bitmask.
///
/// Internally every index is 0-based. Conversion to and from the 1-based
/// indices used in files, flags and reports goes through `index_from_io` /
/// `one_based()` only.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  explicit constexpr IndexSet(std::uint32_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> zero_based);

  static IndexSet from_indices(std::span<const int> zero_based);
  /// Every element must lie in 1..n; throws InputError otherwise.
  static IndexSet from_one_based(std::span<const int> one_based, int n);
  static constexpr IndexSet full(int n) {
    return IndexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  IndexSet with(int i) const { return IndexSet(bits_ | (std::uint32_t{1} << i)); }
  IndexSet complement(int n) const { return IndexSet(full(n).bits_ & ~bits_); }
  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }

  std::vector<int> indices() const;
  std::vector<int> one_based() const;
  int min_index() const;

  /// "45" style label with 1-based indices; comma separated once any index exceeds 9.
  std::string label() const;

  friend constexpr bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  /// Lexicographic on the ascending index lists (so {1,2} < {1,2,3} < {1,3}).
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);

 private:
  std::uint32_t bits_ = 0;
};

/// The single boundary conversion from a 1-based I/O index to the internal
/// 0-based one; throws InputError when outside 1..n.
int index_from_io(int one_based, int n);

/// All subsets of {0..n-1} of the given size, in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int size);

}  // namespace gitq
