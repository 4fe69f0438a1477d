#include <cmath>

#include "doctest.h"
#include "weilzeta/weil.hpp"

using namespace weilzeta;
using namespace weilzeta::weil;
using variety::CountSequence;

TEST_CASE("hasse_alpha") {
  const auto a = hasse_alpha(2, 4);
  CHECK(a.trace == -2);
  CHECK(a.alpha.real() == doctest::Approx(-1.0));
  CHECK(a.alpha.imag() == doctest::Approx(1.0));

  const auto b = hasse_alpha(2, 2);
  CHECK(b.trace == 0);
  CHECK(b.alpha.real() == 0.0);
  CHECK(b.alpha.imag() == doctest::Approx(std::sqrt(2.0)));

  // y^2 = x^3 + x + 1 over F_5 has 8 affine points (counting oracle)
  const auto c = hasse_alpha(5, 8);
  CHECK(std::norm(c.alpha) == doctest::Approx(5.0).epsilon(1e-12));

  CHECK_THROWS_WITH_AS(hasse_alpha(2, 10), doctest::Contains("not an elliptic-curve count"), Error);
  CHECK_THROWS_AS(hasse_alpha(5, 11), Error);  // a = -6, a^2 = 36 > 20
}

TEST_CASE("predict_affine_count and correction_term for alpha = -1 + i") {
  const auto a = hasse_alpha(2, 4);
  CHECK(predict_affine_count(a, 1) == 4);
  CHECK(predict_affine_count(a, 2) == 4);
  CHECK(predict_affine_count(a, 4) == 24);
  CHECK(correction_term(a, 3) == -4);
  CHECK(correction_term(a, 6) == 0);
  CHECK(correction_term(a, 8) == -32);
}

TEST_CASE("integer power sums agree with floating 2 Re(alpha^n)") {
  for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
    const auto bound = static_cast<std::int64_t>(std::floor(2 * std::sqrt(p)));
    for (std::int64_t a = -bound; a <= bound; ++a) {
      const auto alpha = alpha_from_trace(p, a);
      for (unsigned n = 1; n <= 30; ++n) {
        const double exact = static_cast<double>(power_sum(alpha, n));
        const double approx = 2 * std::pow(alpha.alpha, static_cast<double>(n)).real();
        const double scale = std::pow(std::sqrt(static_cast<double>(p)), n);
        CHECK(std::abs(exact - approx) <= 1e-6 * std::max(1.0, scale));
      }
    }
  }
}

TEST_CASE("weil_numbers_from_counts, genus 1") {
  const auto w = weil_numbers_from_counts(2, 1, CountSequence{2, {5}, true});
  REQUIRE(w.roots.size() == 2);
  CHECK(w.numerator == std::vector<std::int64_t>{1, 2, 2});
  CHECK(w.roots[0].real() == doctest::Approx(-1.0));
  CHECK(w.roots[0].imag() == doctest::Approx(1.0));
  CHECK(w.roots[1] == std::conj(w.roots[0]));

  for (std::uint32_t p : {3u, 7u, 101u}) {
    const auto z = weil_numbers_from_counts(p, 1, CountSequence{p, {p + 1}, true});
    REQUIRE(z.roots.size() == 2);
    CHECK(z.roots[0].real() == doctest::Approx(0.0));
    CHECK(z.roots[0].imag() == doctest::Approx(std::sqrt(p)));
  }
}

TEST_CASE("weil_numbers_from_counts, genus 2 curve y^2 + y = x^5") {
  // projective counts: brute-force affine (2, 4, 8, 32) plus one point at infinity
  const auto w = weil_numbers_from_counts(2, 2, CountSequence{2, {3, 5}, true});
  CHECK(w.numerator == std::vector<std::int64_t>{1, 0, 0, 0, 4});
  REQUIRE(w.roots.size() == 4);
  for (const auto& r : w.roots) CHECK(std::abs(std::abs(r) - std::sqrt(2.0)) < 1e-9);
  CHECK(predict_curve_count(w, 1) == 3);
  CHECK(predict_curve_count(w, 2) == 5);
  CHECK(predict_curve_count(w, 3) == 9);
  CHECK(predict_curve_count(w, 4) == 33);
}

TEST_CASE("weil_numbers_from_counts round trip on genus-2 numerators") {
  // every symmetric numerator whose roots lie on |z| = sqrt(p) reproduces its counts
  for (std::int64_t b1 = -3; b1 <= 3; ++b1) {
    for (std::int64_t b2 = -4; b2 <= 6; ++b2) {
      const std::vector<std::int64_t> b{1, b1, b2, 2 * b1, 4};
      const auto s = power_sums_from_numerator(b, 2);
      if (3 - s[0] < 0 || 5 - s[1] < 0) continue;  // not a point count
      CountSequence counts{2, {static_cast<std::uint64_t>(3 - s[0]), static_cast<std::uint64_t>(5 - s[1])}, true};
      try {
        const auto w = weil_numbers_from_counts(2, 2, counts);
        CHECK(w.numerator == b);
        CHECK(predict_curve_count(w, 1) == static_cast<std::int64_t>(counts.counts[0]));
        CHECK(predict_curve_count(w, 2) == static_cast<std::int64_t>(counts.counts[1]));
      } catch (const Error& e) {
        // numerators off the critical circle are rejected, never mis-reported
        CHECK(std::string(e.what()).find("Weil bound violated") != std::string::npos);
      }
    }
  }
}

TEST_CASE("weil_numbers_from_counts errors") {
  CHECK_THROWS_WITH_AS(weil_numbers_from_counts(2, 1, CountSequence{2, {12}, true}), "Weil bound violated", Error);
  CHECK_THROWS_AS(weil_numbers_from_counts(2, 2, CountSequence{2, {3}, true}), Error);
  CHECK_THROWS_AS(weil_numbers_from_counts(2, 1, CountSequence{2, {4}, false}), Error);
  // s_1 = 0, s_2 = 1 gives 2 b_2 = -1
  CHECK_THROWS_WITH_AS(weil_numbers_from_counts(2, 2, CountSequence{2, {3, 4}, true}),
                       doctest::Contains("inconsistent counts"), Error);
}

TEST_CASE("verify_weil_rh") {
  const Complex pair[] = {{-1, 1}, {-1, -1}};
  auto r = verify_weil_rh(pair, 2, 1);
  CHECK(r.holds);
  CHECK(r.max_deviation < 1e-15);
  const Complex unit[] = {{1, 0}};
  CHECK(verify_weil_rh(unit, 7, 0).holds);
  const Complex lef[] = {{3, 0}};
  CHECK(verify_weil_rh(lef, 3, 2).holds);
  const Complex off[] = {{1.5, 0}};
  r = verify_weil_rh(off, 2, 1);
  CHECK_FALSE(r.holds);
  CHECK(r.max_deviation == doctest::Approx(1.5 / std::sqrt(2.0) - 1.0));
}

TEST_CASE("alpha_power") {
  const auto a = hasse_alpha(2, 4);
  CHECK(alpha_power(a, 0) == Complex(1, 0));
  CHECK(alpha_power(a, 1) == Complex(-1, 1));
  CHECK(alpha_power(a, 2) == Complex(0, -2));
  CHECK(alpha_power(a, 4) == Complex(-4, 0));
  CHECK(alpha_power(a, 8) == Complex(16, 0));
  for (std::uint32_t p : {3u, 5u, 13u}) {
    const auto b = alpha_from_trace(p, 1);
    for (unsigned n = 1; n <= 12; ++n) {
      const Complex direct = std::pow(b.alpha, static_cast<double>(n));
      CHECK(std::abs(alpha_power(b, n) - direct) < 1e-9 * std::pow(std::sqrt(p), n));
      CHECK(2 * alpha_power(b, n).real() == doctest::Approx(static_cast<double>(power_sum(b, n))));
    }
  }
}
