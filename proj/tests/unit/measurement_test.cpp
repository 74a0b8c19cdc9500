#include <doctest.h>

#include <cmath>
#include <numbers>

#include "locallip/errors.hpp"
#include "locallip/geometry.hpp"
#include "locallip/mask_family.hpp"
#include "locallip/measure.hpp"
#include "locallip/random.hpp"
#include "locallip/witness.hpp"
#include "test_support.hpp"

using namespace locallip;

TEST_CASE("validate_geometry") {
  const auto g = validate_geometry(8, 8, 2);
  CHECK(g.stride == 1);
  CHECK(g.even());
  CHECK(validate_geometry(12, 6, 3).stride == 2);

  using R = GeometryError::Reason;
  auto reason_of = [](auto fn) {
    try {
      fn();
    } catch (const GeometryError& e) {
      return e.reason();
    }
    FAIL("expected GeometryError");
    return R::NonPositive;
  };
  CHECK(reason_of([] { validate_geometry(8, 4, 2); }) == R::StrideNotBelowSupport);
  CHECK(reason_of([] { validate_geometry(8, 3, 2); }) == R::ShiftCountDoesNotDivide);
  CHECK(reason_of([] { validate_geometry(8, 8, 3); }) == R::SupportTooLarge);
  CHECK(reason_of([] { validate_geometry(0, 8, 3); }) == R::NonPositive);
  CHECK_FALSE(validate_geometry(9, 9, 2).even());
}

TEST_CASE("two-shot family") {
  const auto fam = two_shot_family(8, 2);
  REQUIRE(fam.size() == 3);
  const Complex I{0.0, 1.0};
  CHECK(fam.mask(0) == Signal::unit(8, 1));
  CHECK(fam.mask(1) == Signal({1.0, 1.0, 0, 0, 0, 0, 0, 0}));
  CHECK(fam.mask(2) == Signal({1.0, I, 0, 0, 0, 0, 0, 0}));
  CHECK(mask_sup_norm(fam) == 1.0);
  const auto wide = two_shot_family(64, 5);
  CHECK(wide.size() == 9);
  for (const auto& m : wide.masks()) {
    std::size_t nonzero = 0;
    for (const auto& v : m) nonzero += v != Complex{} ? 1 : 0;
    CHECK(nonzero <= 2);
    CHECK(support_end(m) <= 5);
  }
  CHECK_THROWS_AS(two_shot_family(8, 1), ParameterError);
}

TEST_CASE("windowed-Fourier family") {
  const auto fam = windowed_fourier_family(8, 2, 8.0);
  REQUIRE(fam.size() == 3);
  CHECK(fam.notes().empty());
  CHECK(mask_sup_norm(fam) == doctest::Approx(0.6705526390607727).epsilon(1e-14));
  for (std::size_t k = 0; k < fam.size(); ++k) {
    CHECK(support_end(fam.mask(k)) == 2);
    for (std::size_t n = 0; n < 8; ++n)
      CHECK(std::abs(fam.mask(k)[n]) == doctest::Approx(std::abs(fam.mask(0)[n])).epsilon(1e-15));
  }
  CHECK(windowed_fourier_family(64, 16, 3.0).notes().size() == 1);
  CHECK_THROWS_AS(windowed_fourier_family(8, 2, 0.0), ParameterError);
  CHECK_THROWS_AS(windowed_fourier_family(8, 2, -1.0), ParameterError);
  CHECK_THROWS_AS(windowed_fourier_family(8, 1, 8.0), ParameterError);
}

TEST_CASE("mask family validates support") {
  Signal bad = Signal::zeros(8);
  bad[2] = 1.0;
  CHECK_THROWS_AS(MaskFamily({bad}, 2, FamilyTag::Custom), SupportError);
  CHECK_THROWS_AS(MaskFamily({}, 2, FamilyTag::Custom), ParameterError);
  CHECK(mask_sup_norm(MaskFamily({Signal::unit(8, 1).scaled(3.0)}, 1, FamilyTag::Custom)) == 3.0);
}

TEST_CASE("single point mask samples the signal") {
  const auto geom = validate_geometry(12, 6, 3);
  const MaskFamily fam({Signal::unit(12, 1)}, 1, FamilyTag::Custom);
  Rng rng(4);
  const Signal x = random_signal(12, rng);
  const auto z = measure(fam, geom, x, MapKind::Z);
  REQUIRE(z.rows() == 1);
  REQUIRE(z.cols() == 6);
  for (std::size_t l = 1; l <= 6; ++l)
    CHECK(z(0, l - 1) == std::abs(x[(l * geom.stride) % 12]));
}

TEST_CASE("measure: Y is Z squared and both are phase invariant") {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto geom = validate_geometry(32, 16, 4);
    const auto fam = random_family(32, 4, 3, rng);
    const Signal x = random_signal(32, rng);
    const auto y = measure(fam, geom, x, MapKind::Y);
    const auto z = measure(fam, geom, x, MapKind::Z);
    const auto zr = measure(fam, geom, x.scaled(std::polar(1.0, std::numbers::pi / 3)), MapKind::Z);
    for (std::size_t i = 0; i < y.values().size(); ++i) {
      const double zi = z.values()[i];
      CHECK(std::abs(y.values()[i] - zi * zi) <= 1e-12 * std::max(1.0, zi * zi));
      CHECK(std::abs(zr.values()[i] - zi) <= 1e-12 * std::max(1.0, zi));
      CHECK(zi >= 0.0);
    }
  }
}

TEST_CASE("measure checks dimensions") {
  const auto geom = validate_geometry(16, 16, 2);
  const auto fam = two_shot_family(16, 2);
  CHECK_THROWS_AS(measure(fam, geom, Signal::zeros(8), MapKind::Z), ParameterError);
  CHECK_THROWS_AS(measure(two_shot_family(8, 2), geom, Signal::zeros(16), MapKind::Z),
                  ParameterError);
  CHECK_THROWS_AS(measure(two_shot_family(16, 3), geom, Signal::zeros(16), MapKind::Z),
                  ParameterError);
}

TEST_CASE("unit atoll pair collides for every delta-supported family") {
  Rng rng(99);
  const auto pair = atoll_unit(8, 2);
  const auto geom = validate_geometry(8, 8, 2);
  for (int t = 0; t < 20; ++t) {
    const auto fam = random_family(8, 2, rng.index(1, 4), rng);
    for (auto kind : {MapKind::Y, MapKind::Z}) {
      const auto a = measure(fam, geom, pair.plus, kind);
      const auto b = measure(fam, geom, pair.minus, kind);
      CHECK(a.values() == b.values());
    }
  }
}

TEST_CASE("two-shot first row samples the signal") {
  Rng rng(12);
  const auto geom = validate_geometry(16, 8, 3);
  const auto fam = two_shot_family(16, 3);
  const Signal x = random_in_class(16, 0.5, 2.0, rng);
  const auto z = measure(fam, geom, x, MapKind::Z);
  for (std::size_t l = 1; l <= geom.shifts; ++l)
    CHECK(z(0, l - 1) == std::abs(x[(l * geom.stride) % 16]));
}

TEST_CASE("windowed-Fourier magnitudes stay below the geometric-sum bound") {
  Rng rng(31);
  for (double b : {4.5, 8.0, 16.0}) {
    for (std::size_t delta : {2u, 5u, 16u}) {
      const auto geom = validate_geometry(64, 64, delta);
      const auto fam = windowed_fourier_family(64, delta, b);
      const double s = std::exp(-1.0 / b);
      const double q = 1.7;
      const double bound = q * std::pow(2.0 * delta - 1.0, -0.25) * s / (1.0 - s);
      for (int t = 0; t < 5; ++t) {
        const auto z = measure(fam, geom, random_in_class(64, 0.3, q, rng), MapKind::Z);
        for (double v : z.values()) CHECK(v <= bound * (1.0 + 1e-12));
      }
    }
  }
}
