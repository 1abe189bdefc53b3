#include "gitq/sampling.hpp"

namespace gitq {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Sampler::rational(std::int64_t max_den) {
  Rational q(static_cast<long>(integer(-1000, 1000)), static_cast<unsigned long>(integer(1, max_den)));
  q.canonicalize();
  return q;
}

Rational Sampler::nonzero_rational(std::int64_t max_den) {
  for (;;) {
    Rational q = rational(max_den);
    if (q != 0) return q;
  }
}

ProjectivePoint Sampler::point() {
  for (;;) {
    Rational x = rational(), y = rational(), z = rational();
    if (x != 0 || y != 0 || z != 0) return ProjectivePoint(x, y, z);
  }
}

PointConfiguration Sampler::configuration(int n) {
  PointConfiguration cfg;
  for (int i = 0; i < n; ++i) cfg.push_back(point());
  return cfg;
}

PointConfiguration Sampler::degenerate_configuration(int n) {
  PointConfiguration cfg;
  for (int i = 0; i < n; ++i) {
    const auto choice = integer(0, 5);
    if (i >= 1 && choice == 0) {
      // Coincide with an earlier point, with a rescaled representative.
      const auto j = static_cast<std::size_t>(integer(0, i - 1));
      cfg.push_back(cfg[j].scaled(nonzero_rational()));
    } else if (i >= 2 && choice <= 2) {
      // On the line through two earlier points.
      const auto a = static_cast<std::size_t>(integer(0, i - 1));
      const auto b = static_cast<std::size_t>(integer(0, i - 1));
      const Rational s = nonzero_rational(), t = rational();
      std::array<Rational, 3> c;
      for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] = s * cfg[a][k] + t * cfg[b][k];
      if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
        cfg.push_back(cfg[a]);
      } else {
        cfg.push_back(ProjectivePoint(c));
      }
    } else {
      cfg.push_back(point());
    }
  }
  return cfg;
}

Matrix3 Sampler::unimodular() {
  Matrix3 g{};
  for (int i = 0; i < 3; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int step = 0; step < 6; ++step) {
    const auto r = static_cast<std::size_t>(integer(0, 2));
    auto c = static_cast<std::size_t>(integer(0, 1));
    if (c >= r) ++c;
    const Rational f = rational(20);
    // Row operation row_r += f * row_c keeps the determinant.
    for (std::size_t k = 0; k < 3; ++k) g[r][k] += f * g[c][k];
  }
  return g;
}

Matrix3 Sampler::invertible() {
  Matrix3 g = unimodular();
  const Rational f = nonzero_rational(20);
  for (auto& v : g[0]) v *= f;
  return g;
}

Polarization Sampler::polarization(int n, std::int64_t max_weight) {
  std::vector<std::int64_t> w;
  for (int i = 0; i < n; ++i) w.push_back(integer(1, max_weight));
  return Polarization(std::move(w));
}

}  // namespace gitq
