#include <doctest.h>

#include <cmath>
#include <set>

#include "locallip/certificate.hpp"
#include "locallip/errors.hpp"
#include "locallip/family_io.hpp"
#include "locallip/metrics.hpp"
#include "locallip/random.hpp"
#include "locallip/witness.hpp"
#include "locallip_oracle/oracles.hpp"
#include "test_support.hpp"

using namespace locallip;
using locallip::test::rel_err;

TEST_CASE("atoll constructors") {
  const auto unit = atoll_unit(8, 2);
  CHECK(unit.plus == Signal{1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0});
  CHECK(unit.minus == Signal{1.0, 1.0, 0.0, 0.0, -1.0, -1.0, 0.0, 0.0});
  CHECK(unit.eta == 2);
  CHECK(rel_err(metric_D2(unit.plus, unit.minus), std::sqrt(8.0)) < 1e-15);
  CHECK(oracle::d2_theta_grid(unit.plus, unit.minus, 1000000) ==
        doctest::Approx(std::sqrt(8.0)).epsilon(1e-9));

  const auto pq = atoll_pq(8, 2, 1.0, 2.0);
  CHECK(pq.plus == Signal{2.0, 2.0, 1.0, 1.0, 2.0, 2.0, 1.0, 1.0});
  CHECK(pq.minus == Signal{2.0, 2.0, 1.0, 1.0, -2.0, -2.0, 1.0, 1.0});
  CHECK(rel_err(metric_d1(pq.plus, pq.minus), 39.19183588453085) < 1e-12);
  CHECK(rel_err(atoll_d1(8, 2, 1.0, 2.0), 8.0 * std::sqrt(24.0)) < 1e-15);
  CHECK(metric_D2(pq.plus, pq.minus) >= 2.0 * std::sqrt(8.0) * (1 - 1e-15));

  CHECK_THROWS_AS(atoll_unit(9, 2), GeometryError);
  CHECK_THROWS_AS(atoll_unit(8, 3), GeometryError);
  CHECK_THROWS_AS(atoll_pq(8, 2, 0.0, 1.0), ParameterError);
  CHECK_THROWS_AS(atoll_pq(8, 2, 2.0, 1.0), ParameterError);
}

TEST_CASE("atoll closed forms match the oracles") {
  for (std::size_t d : {8u, 16u, 32u}) {
    for (auto [p, q] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {0.5, 3.0}}) {
      for (std::size_t delta = 1; 4 * delta <= d; ++delta) {
        const auto pair = atoll_pq(d, delta, p, q);
        const auto sv = oracle::outer_difference_singular_values(pair.plus, pair.minus);
        double trace = 0.0;
        for (double s : sv) trace += s;
        CHECK(rel_err(metric_d1(pair.plus, pair.minus), trace) <= 1e-10);
        CHECK(rel_err(atoll_d1(d, delta, p, q), trace) <= 1e-10);
        CHECK(sv[2] <= 1e-9 * sv[0]);
        const double sigma = std::sqrt(double(pair.eta * pair.eta) * q * q + 2.0 * pair.eta * delta * p * p);
        CHECK(rel_err(sv[0], 2.0 * q * sigma) <= 1e-10);
        CHECK(rel_err(sv[1], 2.0 * q * sigma) <= 1e-10);
        CHECK(rel_err(metric_D2(pair.plus, pair.minus), atoll_d2(d, delta, q)) <= 1e-12);
        CHECK(metric_D2(pair.plus, pair.minus) >= q * std::sqrt(double(d)) * (1 - 1e-12));
      }
    }
  }
}

TEST_CASE("crossing indices") {
  const auto geom = validate_geometry(8, 8, 2);
  const auto c = crossing_indices(geom, 2);
  REQUIRE(c.center.size() == 1);
  REQUIRE(c.tail.size() == 1);
  CHECK(c.center[0] == Crossing{3, 1, Boundary::Center});
  CHECK(c.tail[0] == Crossing{5, 1, Boundary::Tail});
  CHECK(c.find(3).has_value());
  CHECK_FALSE(c.find(4).has_value());
  CHECK_THROWS_AS(crossing_indices(geom, 3), ParameterError);

  // delta = a + 1: exactly one crossing per boundary
  for (std::size_t a = 1; a <= 5; ++a) {
    const std::size_t delta = a + 1;
    const std::size_t d = 8 * a * delta;
    const auto g = validate_geometry(d, d / a, delta);
    const auto cs = crossing_indices(g, delta);
    CHECK(cs.center.size() <= 2);
    CHECK(cs.tail.size() <= 2);
  }
}

TEST_CASE("crossing counts per two-shot offset") {
  // For mask e_1 + e_{j+1} the window has width j + 1.
  for (std::size_t d : {16u, 24u, 48u, 64u}) {
    for (std::size_t delta = 2; 4 * delta <= d; ++delta) {
      for (std::size_t a = 1; a < delta; ++a) {
        if (d % a != 0) continue;
        const auto geom = validate_geometry(d, d / a, delta);
        for (std::size_t j = 1; j < delta; ++j) {
          const auto cs = crossing_indices(geom, j + 1);
          const std::size_t ceil_ja = (j + a - 1) / a;
          CHECK(cs.center.size() <= ceil_ja);
          CHECK(cs.tail.size() <= ceil_ja);
          if (a == 1) {
            CHECK(cs.center.size() == j);
            CHECK(cs.tail.size() == j);
          }
        }
      }
    }
  }
  // The floor form j / a is not an upper bound once a > 1.
  const auto geom = validate_geometry(16, 8, 3);
  const auto cs = crossing_indices(geom, 2);
  CHECK(cs.tail.size() == 1);
  CHECK(cs.tail[0].shift == 6);
}

TEST_CASE("certify: two-shot worked example") {
  const auto geom = validate_geometry(8, 8, 2);
  const auto fam = two_shot_family(8, 2);
  const auto pair = atoll_pq(8, 2, 1.0, 2.0);

  const auto z = certify(fam, geom, pair, MapKind::Z);
  CHECK(rel_err(z.measurement_distance, 2.0 * std::sqrt(2.0)) < 1e-14);
  CHECK(rel_err(z.ratio, 2.0) < 1e-12);
  CHECK_FALSE(z.infinite);
  CHECK(z.bound == BoundId::CorTwoShotZ);
  REQUIRE(z.rhs_no_const);
  CHECK(rel_err(*z.rhs_no_const, 2.0 * std::sqrt(2.0)) < 1e-14);
  CHECK(rel_err(*z.empirical_const, 2.0 / (2.0 * std::sqrt(2.0))) < 1e-12);

  const auto y = certify(fam, geom, pair, MapKind::Y);
  CHECK(rel_err(y.measurement_distance, 8.0 * std::sqrt(2.0)) < 1e-14);
  CHECK(rel_err(y.ratio, 3.464101615137755) < 1e-12);
}

TEST_CASE("certify: collision pair") {
  Rng rng(7);
  const auto geom = validate_geometry(16, 16, 3);
  const auto pair = atoll_unit(16, 3);
  const auto cert = certify(random_family(16, 3, 4, rng), geom, pair, MapKind::Z);
  CHECK(cert.measurement_distance == 0.0);
  CHECK(cert.infinite);
  CHECK(std::isinf(cert.ratio));
  CHECK(cert.collision_class);
  CHECK_FALSE(cert.rhs_no_const);
  CHECK_FALSE(cert.empirical_const);
  CHECK(certificate_to_json(cert).find("\"ratio\":null") != std::string::npos);
}

TEST_CASE("two-shot differences are exactly 2p at crossings") {
  for (std::size_t d : {8u, 16u, 64u}) {
    for (std::size_t delta : {2u, 4u}) {
      if (4 * delta > d) continue;
      for (double p : {0.5, 1.0}) {
        const double q = 2.5;
        const auto geom = validate_geometry(d, d, delta);
        const auto fam = two_shot_family(d, delta);
        const auto pair = atoll_pq(d, delta, p, q);
        const auto zp = measure(fam, geom, pair.plus, MapKind::Z);
        const auto zm = measure(fam, geom, pair.minus, MapKind::Z);
        double sum_sq = 0.0;
        for (std::size_t k = 0; k < fam.size(); ++k) {
          const std::size_t j = (k + 1) / 2;  // zero-based mask 2j - 1 is e_1 + e_{j+1}
          const bool real_pair = k % 2 == 1;
          const auto cs = real_pair ? crossing_indices(geom, j + 1) : CrossingSet{};
          for (std::size_t l = 1; l <= d; ++l) {
            const double diff = std::abs(zp(k, l - 1) - zm(k, l - 1));
            sum_sq += diff * diff;
            if (real_pair && cs.find(l))
              CHECK(std::abs(diff - 2.0 * p) <= 1e-12);
            else
              CHECK(diff == 0.0);
          }
        }
        CHECK(std::abs(sum_sq - 4.0 * p * p * delta * (delta - 1)) <= 1e-12 * sum_sq);
      }
    }
  }
}

TEST_CASE("entrywise bound") {
  const auto geom = validate_geometry(8, 8, 2);
  const auto report = entrywise_bound_check(two_shot_family(8, 2), geom, atoll_pq(8, 2, 1.0, 2.0));
  CHECK(report.violations == 0);
  CHECK(report.max_excess == doctest::Approx(0.0).epsilon(1e-12));  // tight at j = 1
  CHECK(report.max_noncrossing == 0.0);

  Rng rng(9);
  for (std::size_t d : {32u, 64u}) {
    for (std::size_t delta : {2u, 3u, 8u}) {
      for (double b : {4.5, 8.0, 16.0}) {
        const auto g = validate_geometry(d, d, delta);
        const auto r = entrywise_bound_check(windowed_fourier_family(d, delta, b), g,
                                             atoll_pq(d, delta, 0.7, 1.3));
        CHECK(r.violations == 0);
        CHECK(r.max_noncrossing == 0.0);
      }
      if (4 * (delta + 2) <= d) {
        const auto g = validate_geometry(d, d / 2, delta + 2);
        const auto r = entrywise_bound_check(random_family(d, delta + 2, 3, rng), g,
                                             atoll_pq(d, delta + 2, 0.4, 1.0));
        CHECK(r.violations == 0);
      }
    }
  }
}

TEST_CASE("improve_witness") {
  const auto geom = validate_geometry(8, 8, 2);
  const auto fam = two_shot_family(8, 2);
  const auto start = atoll_pq(8, 2, 1.0, 2.0);

  const auto same = improve_witness(fam, geom, start, MapKind::Z, 0, 1);
  CHECK(same.plus == start.plus);
  CHECK(same.minus == start.minus);

  const auto a = improve_witness(fam, geom, start, MapKind::Z, 300, 42);
  const auto b = improve_witness(fam, geom, start, MapKind::Z, 300, 42);
  CHECK(a.plus == b.plus);
  CHECK(a.minus == b.minus);
  const double final_ratio = certify(fam, geom, a, MapKind::Z).ratio;
  CHECK(final_ratio >= 2.0 * (1 - 1e-12));

  // every entry stays in C_{p,q}
  for (const auto* s : {&a.plus, &a.minus})
    for (const auto& v : *s) {
      CHECK(std::abs(v) >= 1.0 - 1e-12);
      CHECK(std::abs(v) <= 2.0 + 1e-12);
    }

  // a collision pair cannot be improved
  const auto unit = atoll_unit(8, 2);
  const auto u = improve_witness(fam, geom, unit, MapKind::Z, 50, 3);
  CHECK(u.plus == unit.plus);
}

TEST_CASE("improve_witness never lowers the ratio") {
  Rng rng(77);
  for (int t = 0; t < 30; ++t) {
    const std::size_t delta = rng.index(2, 4);
    const std::size_t d = 16 * rng.index(1, 2);
    const auto geom = validate_geometry(d, d, delta);
    const auto fam = rng.index(0, 1) ? two_shot_family(d, delta) : random_family(d, delta, 3, rng);
    const auto pair = atoll_pq(d, delta, rng.uniform(0.2, 1.0), rng.uniform(1.0, 3.0));
    const auto kind = rng.index(0, 1) ? MapKind::Y : MapKind::Z;
    const double before = certify(fam, geom, pair, kind).ratio;
    const auto improved = improve_witness(fam, geom, pair, kind, 100, t);
    CHECK(certify(fam, geom, improved, kind).ratio >= before);
  }
}
