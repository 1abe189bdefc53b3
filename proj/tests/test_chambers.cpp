#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "gitq/chambers.hpp"
#include "gitq/sampling.hpp"

using namespace gitq;

namespace {

std::vector<IndexSet> parse_sets(const std::string& text) {
  std::vector<IndexSet> out;
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    IndexSet s;
    for (char ch : word) s = s.with(ch - '1');
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> digits(const std::string& text) {
  std::vector<std::int64_t> w;
  for (char ch : text) w.push_back(ch - '0');
  return w;
}

// "L234 C45" -> {"U^L_{234}", "U^C_{45}"}
std::set<std::string> u_labels(const std::string& text) {
  std::set<std::string> out;
  std::istringstream in(text);
  std::string word;
  while (in >> word) out.insert("U^" + word.substr(0, 1) + "_{" + word.substr(1) + "}");
  return out;
}

const Chamber& chamber_of(const ChamberLookup& lookup) {
  REQUIRE(std::holds_alternative<Chamber>(lookup.result));
  return std::get<Chamber>(lookup.result);
}

struct Key {
  std::vector<IndexSet> pairs, triples;
  friend auto operator<=>(const Key&, const Key&) = default;
};

// Direct scan: every weakly decreasing vector off the walls, keyed by its
// stable pairs and triples computed from the weights alone.
std::set<Key> oracle_chambers(int n, std::int64_t bound) {
  std::set<Key> keys;
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), 1);
  auto rec = [&](auto&& self, int pos, std::int64_t cap, std::int64_t used) -> void {
    if (pos == n) {
      const std::int64_t total = used;
      for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1U) s += w[static_cast<std::size_t>(i)];
        if (3 * s == total) return;
      }
      if (3 * w[0] >= total) return;
      Key key;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (3 * (w[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(j)]) < total) key.pairs.push_back(IndexSet{i, j});
          for (int k = j + 1; k < n; ++k)
            if (3 * (w[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(j)] + w[static_cast<std::size_t>(k)]) < total)
              key.triples.push_back(IndexSet{i, j, k});
        }
      std::sort(key.pairs.begin(), key.pairs.end());
      std::sort(key.triples.begin(), key.triples.end());
      keys.insert(key);
      return;
    }
    const int rest = n - pos - 1;
    for (std::int64_t v = 1; v <= cap && used + v + rest <= bound; ++v) {
      w[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v, used + v);
    }
  };
  rec(rec, 0, bound, 0);
  return keys;
}

}  // namespace

TEST_CASE("five points: six chambers with their stable sets") {
  const auto atlas = enumerate_chambers(5, 40);
  REQUIRE(atlas.chambers.size() == 6);
  CHECK(atlas.stabilized);

  const std::map<std::string, std::string> cases{
      {"11111", "L234 L134 L124 L123 L125"}, {"22211", "L234 L134 L124 L125 C45"},
      {"33221", "L234 L134 L125 C35 C45"},   {"32221", "L234 L125 C25 C35 C45"},
      {"22111", "L234 L134 C34 C35 C45"},    {"33331", "L125 C15 C25 C35 C45"}};
  std::set<std::set<std::string>> seen;
  for (const auto& c : atlas.chambers) seen.insert(std::set<std::string>(c.u_sets.begin(), c.u_sets.end()));
  for (const auto& [example, sets] : cases) {
    CAPTURE(example);
    const auto c = chamber_of(stable_sets_of(Polarization(digits(example))));
    CHECK(std::set<std::string>(c.u_sets.begin(), c.u_sets.end()) == u_labels(sets));
    CHECK(seen.count(u_labels(sets)) == 1);
  }
}

TEST_CASE("five points: quotient labels") {
  const std::map<std::string, std::string> labels{{"22211", "P^2_3"}, {"33221", "P^2_2"}, {"32221", "P^2_1"},
                                                  {"22111", "P^1xP^1"}, {"11111", "P^2_4"}};
  for (const auto& [example, label] : labels) {
    CAPTURE(example);
    CHECK(to_string(n5_quotient_label(chamber_of(stable_sets_of(Polarization(digits(example)))))) == label);
  }
  CHECK(to_string(n5_quotient_label(chamber_of(stable_sets_of(Polarization({9, 9, 9, 8, 1}))))) == "P^2");
  std::set<std::string> all;
  for (const auto& c : enumerate_chambers(5, 36).chambers) all.insert(std::string(to_string(n5_quotient_label(c))));
  CHECK(all.size() == 6);
  const auto six = enumerate_chambers(6, 31);
  CHECK_THROWS_AS(n5_quotient_label(six.chambers.front()), InputError);
}

TEST_CASE("six points: 38 chambers and the table examples") {
  const auto atlas = enumerate_chambers(6, 40);
  CHECK(atlas.chambers.size() == 38);
  CHECK(atlas.count_at_reduced_bound == 38);
  CHECK(atlas.stabilized);

  const std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> table{
      {"16 26 36 46 56", {{"", "222221"}}},
      {"16 26 36 45 46 56", {{"", "333221"}, {"456", "444221"}}},
      {"34 35 36 45 46 56",
       {{"", "221111"}, {"456", "332111"}, {"456 356", "442211"}, {"456 356 346", "552221"}, {"456 356 346 345", "331111"}}},
      {"25 26 35 36 45 46 56", {{"", "322211"}, {"456", "433211"}, {"456 356", "543311"}, {"456 356 256", "644311"}}},
      {"26 34 35 36 45 46 56", {{"", "432221"}, {"456", "543221"}, {"456 356", "875321"}, {"456 356 346", "542221"}}},
      {"16 26 35 36 45 46 56", {{"", "443321"}, {"456", "554321"}, {"456 356", "775421"}}},
      {"16 26 34 35 36 45 46 56", {{"", "332221"}, {"456", "443221"}, {"456 356", "553321"}, {"456 356 346", "774331"}}},
      {"16 25 26 35 36 45 46 56", {{"", "433321"}, {"456", "766421"}, {"456 356", "765521"}, {"456 356 256", "755521"}}},
      {"25 26 34 35 36 45 46 56", {{"", "965542"}, {"456", "865322"}, {"456 356", "432211"}}},
      {"15 16 25 26 35 36 45 46 56",
       {{"", "222211"}, {"456", "333211"}, {"456 356", "443311"}, {"456 356 256", "766411"}, {"456 356 256 156", "555511"}}},
      {"24 25 26 34 35 36 45 46 56", {{"", "533222"}, {"456", "322111"}}},
      {"23 24 25 26 34 35 36 45 46 56", {{"", "211111"}}}};

  std::set<Key> cells;
  std::size_t examples = 0;
  for (const auto& [pairs, row] : table) {
    for (const auto& [triples, example] : row) {
      CAPTURE(example);
      const auto c = chamber_of(stable_sets_of(Polarization(digits(example))));
      CHECK(c.stable_pairs == parse_sets(pairs));
      CHECK(c.stable_triples == parse_sets(triples));
      cells.insert({c.stable_pairs, c.stable_triples});
      ++examples;
    }
  }
  CHECK(examples == 38);
  CHECK(cells.size() == 38);
  std::set<Key> atlas_keys;
  for (const auto& c : atlas.chambers) atlas_keys.insert({c.stable_pairs, c.stable_triples});
  CHECK(atlas_keys == cells);
}

TEST_CASE("atlas agrees with a direct scan") {
  for (auto [n, bound] : {std::pair{5, 36}, std::pair{6, 31}}) {
    CAPTURE(n);
    const auto atlas = enumerate_chambers(n, bound);
    std::set<Key> keys;
    for (const auto& c : atlas.chambers) keys.insert({c.stable_pairs, c.stable_triples});
    CHECK(keys.size() == atlas.chambers.size());
    CHECK(keys == oracle_chambers(n, bound));
  }
}

TEST_CASE("atlas samples round trip") {
  const auto atlas = enumerate_chambers(6, 31);
  for (const auto& c : atlas.chambers) {
    const auto& w = c.sample.weights();
    CHECK(std::is_sorted(w.rbegin(), w.rend()));
    const auto lookup = stable_sets_of(c.sample);
    const auto& back = chamber_of(lookup);
    CHECK(back.stable_pairs == c.stable_pairs);
    CHECK(back.stable_triples == c.stable_triples);
    CHECK(back.u_sets == c.u_sets);
    // A stable triple forces its sub-pairs to be stable.
    for (const auto& t : c.stable_triples)
      for (int i : t.indices()) {
        auto pair = IndexSet(t.bits() & ~(1U << i));
        CHECK(std::find(c.stable_pairs.begin(), c.stable_pairs.end(), pair) != c.stable_pairs.end());
      }
  }
}

TEST_CASE("lookup is invariant under scaling and permutation") {
  Sampler rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto m = rng.polarization(6, 9);
    const auto base = stable_sets_of(m);
    std::vector<std::int64_t> scaled = m.weights();
    const auto f = rng.integer(2, 5);
    for (auto& x : scaled) x *= f;
    const auto again = stable_sets_of(Polarization(scaled));
    CHECK(base.order == again.order);
    CHECK(base.result.index() == again.result.index());
    if (const auto* c = std::get_if<Chamber>(&base.result)) {
      const auto& d = std::get<Chamber>(again.result);
      CHECK(c->stable_pairs == d.stable_pairs);
      CHECK(c->stable_triples == d.stable_triples);
      // Stable pairs from the sorted weights match the original ones.
      for (const auto& p : c->stable_pairs) {
        const auto idx = p.indices();
        const auto a = base.order[static_cast<std::size_t>(idx[0])], b = base.order[static_cast<std::size_t>(idx[1])];
        CHECK(3 * (m.weight(a) + m.weight(b)) < m.total());
      }
    }
    std::vector<std::int64_t> rotated(m.weights().begin() + 1, m.weights().end());
    rotated.push_back(m.weight(0));
    const auto rot = stable_sets_of(Polarization(rotated));
    CHECK(rot.result.index() == base.result.index());
    if (const auto* c = std::get_if<Chamber>(&base.result)) CHECK(std::get<Chamber>(rot.result).stable_pairs == c->stable_pairs);
  }
}

TEST_CASE("walls are reported") {
  const auto lookup = stable_sets_of(Polarization({2, 2, 2, 1, 1, 1}));
  REQUIRE(std::holds_alternative<WallReport>(lookup.result));
  const auto& wall = std::get<WallReport>(lookup.result);
  CHECK(wall.heavy_points.empty());
  // Nine pairs {i, j} with i <= 3 < j, and the triple 456.
  CHECK(wall.zero_sets.size() == 10);
  CHECK(std::find(wall.zero_sets.begin(), wall.zero_sets.end(), IndexSet{0, 3}) != wall.zero_sets.end());
  CHECK(std::find(wall.zero_sets.begin(), wall.zero_sets.end(), IndexSet{3, 4, 5}) != wall.zero_sets.end());

  const auto heavy = stable_sets_of(Polarization({1, 5, 1, 1, 1, 1}));
  REQUIRE(std::holds_alternative<WallReport>(heavy.result));
  CHECK(std::get<WallReport>(heavy.result).heavy_points == std::vector<int>{0});
  CHECK(heavy.order.front() == 1);
}

TEST_CASE("enumeration is deterministic across thread counts") {
  const auto a = enumerate_chambers(6, 34, 1);
  const auto b = enumerate_chambers(6, 34, 4);
  REQUIRE(a.chambers.size() == b.chambers.size());
  for (std::size_t i = 0; i < a.chambers.size(); ++i) {
    CHECK(a.chambers[i].sample == b.chambers[i].sample);
    CHECK(a.chambers[i].u_sets == b.chambers[i].u_sets);
  }
}

TEST_CASE("bound validation") {
  CHECK(minimum_bound(5) == 36);
  CHECK(minimum_bound(6) == 31);
  CHECK_THROWS_AS(enumerate_chambers(6, 30), InputError);
  CHECK_THROWS_AS(enumerate_chambers(2, 40), InputError);
  CHECK_THROWS_AS(enumerate_chambers(13, 40), InputError);
  CHECK(enumerate_chambers(4, 20).chambers.size() >= 1);
}
