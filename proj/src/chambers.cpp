#include "gitq/chambers.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>

namespace gitq {
namespace {

struct Pattern {
  std::vector<IndexSet> pairs;
  std::vector<IndexSet> triples;
  auto operator<=>(const Pattern&) const = default;
};

// Per-subset sums indexed by bitmask.
std::vector<std::int64_t> subset_sums(const std::vector<std::int64_t>& w) {
  const std::size_t n = w.size();
  std::vector<std::int64_t> sums(std::size_t{1} << n, 0);
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    sums[mask] = sums[mask & (mask - 1)] + w[low];
  }
  return sums;
}

// True when every weight is below |m|/3 and no proper coincidence set sits on a wall.
bool in_open_chamber(const std::vector<std::int64_t>& w, std::int64_t total, const std::vector<std::int64_t>& sums) {
  if (3 * *std::max_element(w.begin(), w.end()) >= total) return false;
  const std::size_t full = sums.size() - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (3 * sums[mask] == total) return false;
  }
  return true;
}

Pattern pattern_of(int n, std::int64_t total, const std::vector<std::int64_t>& sums) {
  Pattern p;
  for (IndexSet k : subsets_of_size(n, 2)) {
    if (3 * sums[k.bits()] < total) p.pairs.push_back(k);
  }
  for (IndexSet k : subsets_of_size(n, 3)) {
    if (3 * sums[k.bits()] < total) p.triples.push_back(k);
  }
  return p;
}

// Preferred sample: smallest total, then lexicographically largest weights.
bool better_sample(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const auto ta = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  const auto tb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (ta != tb) return ta < tb;
  return a > b;
}

using PatternMap = std::map<Pattern, std::vector<std::int64_t>>;

// Visits weakly decreasing vectors of length n, entries >= 1, summing to `total`,
// lexicographically largest first.
template <typename Visit>
void for_each_decreasing(int n, std::int64_t total, Visit&& visit) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int pos, std::int64_t cap, std::int64_t left) -> void {
    const int remaining = n - pos;
    if (remaining == 0) {
      if (left == 0) visit(w);
      return;
    }
    const std::int64_t hi = std::min(cap, left - (remaining - 1));
    // The rest cannot absorb more than remaining * value.
    for (std::int64_t v = hi; v >= 1 && v * remaining >= left; --v) {
      w[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v, left - v);
    }
  };
  rec(rec, 0, total, total);
}

void scan_total(int n, std::int64_t total, PatternMap& out) {
  for_each_decreasing(n, total, [&](const std::vector<std::int64_t>& w) {
    const auto sums = subset_sums(w);
    if (!in_open_chamber(w, total, sums)) return;
    auto [it, inserted] = out.try_emplace(pattern_of(n, total, sums), w);
    if (!inserted && better_sample(w, it->second)) it->second = w;
  });
}

unsigned resolve_threads(unsigned requested) {
  unsigned cap = 0;
  if (const char* env = std::getenv("GITQ_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) cap = static_cast<unsigned>(v);
  }
  unsigned threads = requested == 0 ? (cap == 0 ? 1U : cap) : requested;
  if (cap != 0) threads = std::min(threads, cap);
  return std::max(threads, 1U);
}

PatternMap scan(int n, std::int64_t bound, unsigned threads) {
  std::vector<PatternMap> partial(threads);
  auto work = [&](unsigned id) {
    for (std::int64_t t = n + static_cast<std::int64_t>(id); t <= bound; t += threads) scan_total(n, t, partial[id]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
  }
  PatternMap merged;
  for (auto& part : partial) {
    for (auto& [pattern, sample] : part) {
      auto [it, inserted] = merged.try_emplace(pattern, sample);
      if (!inserted && better_sample(sample, it->second)) it->second = sample;
    }
  }
  return merged;
}

struct VariableSets {
  std::vector<IndexSet> pairs;
  std::vector<IndexSet> triples;
};

VariableSets compute_variable_sets(int n) {
  VariableSets v;
  if (n == 5 || n == 6) {
    for (const auto& [pattern, sample] : scan(n, minimum_bound(n), 1)) {
      v.pairs.insert(v.pairs.end(), pattern.pairs.begin(), pattern.pairs.end());
      v.triples.insert(v.triples.end(), pattern.triples.begin(), pattern.triples.end());
    }
  } else {
    v.pairs = subsets_of_size(n, 2);
    v.triples = subsets_of_size(n, 3);
  }
  for (auto* list : {&v.pairs, &v.triples}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  return v;
}

// Pairs and triples whose coincidence is stable in at least one chamber; for
// the others the complementary collinearity is always stable and is omitted
// from the U-set listing.
const VariableSets& variable_sets(int n) {
  if (n == 5) {
    static const VariableSets five = compute_variable_sets(5);
    return five;
  }
  if (n == 6) {
    static const VariableSets six = compute_variable_sets(6);
    return six;
  }
  thread_local std::map<int, VariableSets> others;
  auto it = others.find(n);
  if (it == others.end()) it = others.emplace(n, compute_variable_sets(n)).first;
  return it->second;
}

std::vector<std::string> describe_u_sets(int n, const Pattern& p) {
  const auto& variable = variable_sets(n);
  std::vector<IndexSet> collinear;
  for (const auto* pool : {&variable.pairs, &variable.triples}) {
    const auto& stable = pool == &variable.pairs ? p.pairs : p.triples;
    for (IndexSet k : *pool) {
      if (std::find(stable.begin(), stable.end(), k) == stable.end()) collinear.push_back(k.complement(n));
    }
  }
  std::sort(collinear.begin(), collinear.end());
  std::vector<std::string> out;
  for (IndexSet j : collinear) out.push_back("U^L_{" + j.label() + "}");
  for (IndexSet k : p.pairs) out.push_back("U^C_{" + k.label() + "}");
  for (IndexSet k : p.triples) out.push_back("U^C_{" + k.label() + "}");
  return out;
}

Chamber make_chamber(int n, const Pattern& p, std::vector<std::int64_t> sample) {
  return Chamber{n, p.pairs, p.triples, Polarization(std::move(sample)), describe_u_sets(n, p)};
}

}  // namespace

std::int64_t minimum_bound(int n) {
  if (n == 5) return 36;
  if (n == 6) return 31;
  return n;
}

ChamberLookup stable_sets_of(const Polarization& m) {
  const int n = m.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return m.weight(a) > m.weight(b); });

  std::vector<std::int64_t> w;
  for (int i : order) w.push_back(m.weight(i));
  const Polarization sorted(w);
  const std::int64_t total = sorted.total();
  const auto sums = subset_sums(w);

  WallReport wall{sorted, {}, {}};
  for (int i = 0; i < n; ++i) {
    if (3 * w[static_cast<std::size_t>(i)] >= total) wall.heavy_points.push_back(i);
  }
  for (int size = 1; size < n; ++size) {
    for (IndexSet k : subsets_of_size(n, size)) {
      if (3 * sums[k.bits()] == total) wall.zero_sets.push_back(k);
    }
  }
  if (!wall.heavy_points.empty() || !wall.zero_sets.empty()) return ChamberLookup{std::move(order), std::move(wall)};
  return ChamberLookup{std::move(order), make_chamber(n, pattern_of(n, total, sums), w)};
}

ChamberAtlas enumerate_chambers(int n, std::int64_t bound, unsigned threads) {
  if (n < 3 || n > 12) throw InputError("chamber enumeration supports 3 <= n <= 12, got n=" + std::to_string(n));
  if (bound < minimum_bound(n)) {
    throw InputError("bound " + std::to_string(bound) + " is below the minimum " + std::to_string(minimum_bound(n)) +
                     " for n=" + std::to_string(n));
  }
  const auto patterns = scan(n, bound, resolve_threads(threads));

  ChamberAtlas atlas;
  atlas.n = n;
  atlas.bound = bound;
  for (const auto& [pattern, sample] : patterns) {
    const auto total = std::accumulate(sample.begin(), sample.end(), std::int64_t{0});
    if (total <= bound - kStabilizationWindow) ++atlas.count_at_reduced_bound;
    atlas.chambers.push_back(make_chamber(n, pattern, sample));
  }
  atlas.stabilized = atlas.count_at_reduced_bound == atlas.chambers.size();
  return atlas;
}

std::string_view to_string(N5Surface s) {
  switch (s) {
    case N5Surface::P2: return "P^2";
    case N5Surface::P2Blown1: return "P^2_1";
    case N5Surface::P2Blown2: return "P^2_2";
    case N5Surface::P2Blown3: return "P^2_3";
    case N5Surface::P2Blown4: return "P^2_4";
    case N5Surface::P1xP1: return "P^1xP^1";
  }
  return "?";
}

N5Surface n5_quotient_label(const Chamber& c) {
  if (c.n != 5 || !c.stable_triples.empty()) throw InputError("n5_quotient_label needs an n=5 chamber");
  auto pairs = [](std::initializer_list<std::pair<int, int>> one_based) {
    std::vector<IndexSet> out;
    for (auto [a, b] : one_based) out.push_back(IndexSet{a - 1, b - 1});
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::pair<std::vector<IndexSet>, N5Surface> table[] = {
      {{}, N5Surface::P2Blown4},
      {pairs({{4, 5}}), N5Surface::P2Blown3},
      {pairs({{4, 5}, {3, 5}}), N5Surface::P2Blown2},
      {pairs({{4, 5}, {3, 5}, {2, 5}}), N5Surface::P2Blown1},
      {pairs({{4, 5}, {3, 5}, {3, 4}}), N5Surface::P1xP1},
      {pairs({{4, 5}, {3, 5}, {2, 5}, {1, 5}}), N5Surface::P2},
  };
  auto have = c.stable_pairs;
  std::sort(have.begin(), have.end());
  for (const auto& [key, surface] : table) {
    if (key == have) return surface;
  }
  throw InputError("chamber is not one of the six n=5 chambers");
}

}  // namespace gitq
