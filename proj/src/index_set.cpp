#include "gitq/index_set.hpp"

#include <algorithm>
#include <bit>

#include "gitq/rational.hpp"

namespace gitq {

IndexSet::IndexSet(std::initializer_list<int> zero_based) {
  for (int i : zero_based) {
    if (i < 0 || i >= kMaxPoints) throw InputError("index out of range: " + std::to_string(i));
    bits_ |= std::uint32_t{1} << i;
  }
}

IndexSet IndexSet::from_indices(std::span<const int> zero_based) {
  IndexSet s;
  for (int i : zero_based) {
    if (i < 0 || i >= kMaxPoints) throw InputError("index out of range: " + std::to_string(i));
    s = s.with(i);
  }
  return s;
}

IndexSet IndexSet::from_one_based(std::span<const int> one_based, int n) {
  IndexSet s;
  for (int i : one_based) s = s.with(index_from_io(i, n));
  return s;
}

int IndexSet::size() const { return std::popcount(bits_); }

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::vector<int> IndexSet::one_based() const {
  auto out = indices();
  for (int& i : out) ++i;
  return out;
}

int IndexSet::min_index() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

std::string IndexSet::label() const {
  const auto idx = one_based();
  const bool wide = std::any_of(idx.begin(), idx.end(), [](int i) { return i > 9; });
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k > 0) out += ',';
    out += std::to_string(idx[k]);
  }
  return out;
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
}

int index_from_io(int one_based, int n) {
  if (one_based < 1 || one_based > n) {
    throw InputError("index " + std::to_string(one_based) + " out of range 1.." + std::to_string(n));
  }
  return one_based - 1;
}

std::vector<IndexSet> subsets_of_size(int n, int size) {
  std::vector<IndexSet> out;
  if (size < 0 || size > n) return out;
  const std::uint32_t limit = n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n);
  // Gosper's hack walks same-popcount masks in increasing numeric order.
  if (size == 0) return {IndexSet{}};
  std::uint32_t mask = (std::uint32_t{1} << size) - 1;
  while (mask < limit && mask != 0) {
    out.emplace_back(mask);
    const std::uint32_t c = mask & -mask;
    const std::uint32_t r = mask + c;
    if (r == 0) break;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gitq
