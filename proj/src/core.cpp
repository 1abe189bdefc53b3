#include "gitq/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gitq {
namespace {

// Keeps 3 * |m| comfortably inside int64 for any n <= 31.
constexpr std::int64_t kMaxWeight = std::int64_t{1} << 40;

}  // namespace

Polarization::Polarization(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty() || weights_.size() >= static_cast<std::size_t>(kMaxPoints)) {
    throw InputError("polarization must have between 1 and " + std::to_string(kMaxPoints - 1) +
                     " weights, got " + std::to_string(weights_.size()));
  }
  for (std::int64_t w : weights_) {
    if (w < 1) throw InputError("polarization weights must be positive integers, got " + std::to_string(w));
    if (w > kMaxWeight) throw InputError("polarization weight too large: " + std::to_string(w));
    total_ += w;
  }
}

Polarization Polarization::from_rationals(std::span<const Rational> weights) {
  Integer lcm = 1;
  for (const auto& w : weights) {
    if (sgn(w) <= 0) throw InputError("rational polarization weights must be positive");
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den_mpz_t());
  }
  std::vector<Integer> scaled;
  Integer g = 0;
  for (const auto& w : weights) {
    Integer v = w.get_num() * (lcm / w.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(v);
  }
  std::vector<std::int64_t> out;
  for (auto& v : scaled) {
    v /= g;
    if (!v.fits_slong_p()) throw InputError("polarization weight too large after clearing denominators");
    out.push_back(v.get_si());
  }
  return Polarization(std::move(out));
}

std::int64_t Polarization::weight_of(IndexSet s) const {
  if (!s.subset_of(IndexSet::full(size()))) {
    throw InputError("index set {" + s.label() + "} out of range for n=" + std::to_string(size()));
  }
  std::int64_t sum = 0;
  for (int i : s.indices()) sum += weights_[static_cast<std::size_t>(i)];
  return sum;
}

RationalVector Polarization::normalized() const {
  RationalVector out;
  out.reserve(weights_.size());
  for (std::int64_t w : weights_) {
    Rational r(Integer(static_cast<long>(w)), Integer(static_cast<long>(total_)));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

bool Polarization::ray_equivalent(const Polarization& other) const {
  return size() == other.size() && normalized() == other.normalized();
}

Polarization Polarization::shifted(int i, std::int64_t delta) const {
  if (i < 0 || i >= size()) throw InputError("index out of range in polarization shift");
  auto w = weights_;
  w[static_cast<std::size_t>(i)] += delta;
  return Polarization(std::move(w));
}

Polarization Polarization::without(IndexSet dropped) const {
  std::vector<std::int64_t> w;
  for (int i = 0; i < size(); ++i) {
    if (!dropped.contains(i)) w.push_back(weights_[static_cast<std::size_t>(i)]);
  }
  return Polarization(std::move(w));
}

std::int64_t gamma_point(const Polarization& m, IndexSet coincident) {
  if (coincident.empty()) throw InputError("gamma_point needs a nonempty index set");
  return m.total() - 3 * m.weight_of(coincident);
}

std::int64_t gamma_line(const Polarization& m, IndexSet collinear) {
  if (collinear.empty()) throw InputError("gamma_line needs a nonempty index set");
  return 2 * m.total() - 3 * m.weight_of(collinear);
}

ProjectivePoint::ProjectivePoint(Rational x, Rational y, Rational z)
    : ProjectivePoint(std::array<Rational, 3>{std::move(x), std::move(y), std::move(z)}) {}

ProjectivePoint::ProjectivePoint(std::array<Rational, 3> coords) : coords_(std::move(coords)) {
  if (sgn(coords_[0]) == 0 && sgn(coords_[1]) == 0 && sgn(coords_[2]) == 0) {
    throw InputError("projective point with all coordinates zero");
  }
}

ProjectivePoint ProjectivePoint::scaled(const Rational& factor) const {
  if (sgn(factor) == 0) throw InputError("cannot rescale a projective point by zero");
  return ProjectivePoint(coords_[0] * factor, coords_[1] * factor, coords_[2] * factor);
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  // Proportional iff the cross product vanishes.
  const auto& p = a.coords_;
  const auto& q = b.coords_;
  return p[1] * q[2] == p[2] * q[1] && p[2] * q[0] == p[0] * q[2] && p[0] * q[1] == p[1] * q[0];
}

Rational determinant(const Matrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

ProjectivePoint apply(const Matrix3& g, const ProjectivePoint& p) {
  std::array<Rational, 3> out;
  for (std::size_t r = 0; r < 3; ++r) out[r] = g[r][0] * p[0] + g[r][1] * p[1] + g[r][2] * p[2];
  return ProjectivePoint(std::move(out));
}

PointConfiguration apply(const Matrix3& g, const PointConfiguration& cfg) {
  PointConfiguration out;
  out.reserve(cfg.size());
  for (const auto& p : cfg) out.push_back(apply(g, p));
  return out;
}

Rational bracket(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) + c[0] * (a[1] * b[2] - a[2] * b[1]);
}

// ---------------------------------------------------------------------------
// IncidenceProfile

IncidenceProfile::IncidenceProfile(int n, std::vector<IndexSet> blocks, std::vector<IndexSet> lines)
    : n_(n), blocks_(std::move(blocks)), lines_(std::move(lines)) {
  std::sort(blocks_.begin(), blocks_.end(), [](IndexSet a, IndexSet b) { return a.min_index() < b.min_index(); });
  std::sort(lines_.begin(), lines_.end());

  IndexSet covered;
  for (IndexSet b : blocks_) {
    if (b.empty() || b.intersects(covered)) throw InvariantError("incidence blocks must be disjoint and nonempty");
    covered = covered | b;
  }
  if (covered != IndexSet::full(n_)) throw InvariantError("incidence blocks must cover every point");

  const int nb = static_cast<int>(blocks_.size());
  for (int a = 0; a < nb; ++a) {
    for (int b = a + 1; b < nb; ++b) {
      const IndexSet pair{a, b};
      const auto hits = std::count_if(lines_.begin(), lines_.end(), [&](IndexSet l) { return pair.subset_of(l); });
      if (hits != 1) throw InvariantError("each pair of blocks must lie on exactly one line");
    }
  }
  for (IndexSet l : lines_) {
    if (l.size() < 2 || !l.subset_of(IndexSet::full(nb))) throw InvariantError("malformed line in incidence profile");
  }
}

IncidenceProfile IncidenceProfile::from_incidences(int n, std::span<const IndexSet> coincident,
                                                   std::span<const IndexSet> collinear) {
  if (n < 1 || n >= kMaxPoints) throw InputError("profile size out of range");
  const IndexSet all = IndexSet::full(n);

  // Union-find over points; n is tiny so no rank heuristics.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent.at(static_cast<std::size_t>(x)) != x) x = parent.at(static_cast<std::size_t>(x));
    return x;
  };
  for (IndexSet s : coincident) {
    if (!s.subset_of(all)) throw InputError("coincidence set out of range");
    const auto idx = s.indices();
    for (std::size_t k = 1; k < idx.size(); ++k) {
      const int a = find(idx[k]);
      const int b = find(idx[0]);
      if (a != b) parent.at(static_cast<std::size_t>(std::max(a, b))) = std::min(a, b);
    }
  }
  std::vector<IndexSet> blocks;
  for (int i = 0; i < n; ++i) {
    if (find(i) != i) continue;
    IndexSet b;
    for (int j = 0; j < n; ++j) {
      if (find(j) == i) b = b.with(j);
    }
    blocks.push_back(b);
  }
  std::sort(blocks.begin(), blocks.end(), [](IndexSet a, IndexSet b) { return a.min_index() < b.min_index(); });
  auto block_of = [&](int point) {
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (blocks[k].contains(point)) return static_cast<int>(k);
    }
    return -1;
  };

  std::vector<IndexSet> lines;
  for (IndexSet s : collinear) {
    if (!s.subset_of(all)) throw InputError("collinear set out of range");
    IndexSet on_line;
    for (int i : s.indices()) on_line = on_line.with(block_of(i));
    if (on_line.size() >= 2) lines.push_back(on_line);
  }
  // Two blocks span a unique line, so lines sharing two blocks coincide.
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t a = 0; a < lines.size() && !merged; ++a) {
      for (std::size_t b = a + 1; b < lines.size() && !merged; ++b) {
        if ((lines[a] & lines[b]).size() >= 2) {
          lines[a] = lines[a] | lines[b];
          lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(b));
          merged = true;
        }
      }
    }
  }
  const int nb = static_cast<int>(blocks.size());
  for (int a = 0; a < nb; ++a) {
    for (int b = a + 1; b < nb; ++b) {
      const IndexSet pair{a, b};
      if (std::none_of(lines.begin(), lines.end(), [&](IndexSet l) { return pair.subset_of(l); })) {
        lines.push_back(pair);
      }
    }
  }
  return IncidenceProfile(n, std::move(blocks), std::move(lines));
}

IncidenceProfile IncidenceProfile::generic(int n) { return from_incidences(n, {}, {}); }

IndexSet IncidenceProfile::expand(IndexSet block_positions) const {
  IndexSet raw;
  for (int b : block_positions.indices()) raw = raw | blocks_.at(static_cast<std::size_t>(b));
  return raw;
}

std::vector<IndexSet> IncidenceProfile::expanded_lines() const {
  std::vector<IndexSet> out;
  out.reserve(lines_.size());
  for (IndexSet l : lines_) out.push_back(expand(l));
  return out;
}

int IncidenceProfile::block_of(int point) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].contains(point)) return static_cast<int>(k);
  }
  throw InputError("point index out of range");
}

IncidenceProfile incidence_profile(const PointConfiguration& cfg) {
  const int n = static_cast<int>(cfg.size());
  if (n < 1 || n >= kMaxPoints) throw InputError("configuration size out of range");

  std::vector<IndexSet> blocks;
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](int r) { return cfg[static_cast<std::size_t>(r)] == cfg[static_cast<std::size_t>(i)]; });
    if (it == reps.end()) {
      reps.push_back(i);
      blocks.push_back(IndexSet{i});
    } else {
      auto& b = blocks[static_cast<std::size_t>(it - reps.begin())];
      b = b.with(i);
    }
  }

  const int nb = static_cast<int>(reps.size());
  std::vector<IndexSet> lines;
  for (int a = 0; a < nb; ++a) {
    for (int b = a + 1; b < nb; ++b) {
      const IndexSet pair{a, b};
      if (std::any_of(lines.begin(), lines.end(), [&](IndexSet l) { return pair.subset_of(l); })) continue;
      const auto& pa = cfg[static_cast<std::size_t>(reps[static_cast<std::size_t>(a)])];
      const auto& pb = cfg[static_cast<std::size_t>(reps[static_cast<std::size_t>(b)])];
      IndexSet line = pair;
      for (int c = 0; c < nb; ++c) {
        if (c == a || c == b) continue;
        if (sgn(bracket(pa, pb, cfg[static_cast<std::size_t>(reps[static_cast<std::size_t>(c)])])) == 0) line = line.with(c);
      }
      lines.push_back(line);
    }
  }
  return IncidenceProfile(n, std::move(blocks), std::move(lines));
}

}  // namespace gitq
