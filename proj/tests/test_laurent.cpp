#include "doctest.h"

#include <random>

#include "cellkit/laurent.hpp"
#include "cellkit/textio.hpp"

using namespace cellkit;

namespace {
Laurent mono(int e, long long c = 1) { return Laurent::monomial(e, c); }
}

TEST_CASE("basic arithmetic") {
  Laurent z;
  CHECK(z.is_zero());
  CHECK((mono(1) + mono(-1)) == Laurent::gauss());
  CHECK((mono(2) - mono(2)).is_zero());
  CHECK((mono(1) * mono(-1)) == mono(0));
  CHECK((mono(3, 2) * mono(-1, 3)) == mono(2, 6));
  Laurent g = Laurent::gauss();
  CHECK(g * g == mono(2) + mono(0, 2) + mono(-2));
  CHECK((g * 0).is_zero());
  CHECK(-g == mono(1, -1) + mono(-1, -1));
}

TEST_CASE("bar and evaluation") {
  Laurent p = mono(3) + mono(1, 3) + mono(-2, -5);
  CHECK(p.bar() == mono(-3) + mono(-1, 3) + mono(2, -5));
  CHECK(p.bar().bar() == p);
  CHECK(p.eval_one() == -1);
  CHECK(Laurent::gauss().bar() == Laurent::gauss());
}

TEST_CASE("coefficient access and positivity window") {
  Laurent p = mono(4) + mono(1, 7);
  CHECK(p.coeff(4) == 1);
  CHECK(p.coeff(1) == 7);
  CHECK(p.coeff(0) == 0);
  CHECK(p.lo() == 1);
  CHECK(p.hi() == 4);
  CHECK(p.strictly_positive_exponents());
  CHECK_FALSE((p + mono(0)).strictly_positive_exponents());
}

TEST_CASE("randomized ring laws") {
  std::mt19937 rng(11);
  auto rand_poly = [&] {
    Laurent p;
    int terms = static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t)
      p.add_scaled(mono(static_cast<int>(rng() % 9) - 4, static_cast<long long>(rng() % 7) - 3));
    return p;
  };
  for (int rep = 0; rep < 300; ++rep) {
    Laurent a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("printing") {
  CHECK(laurent_str(Laurent{}) == "0");
  CHECK(laurent_str(mono(0)) == "1");
  CHECK(laurent_str(mono(1)) == "v");
  CHECK(laurent_str(mono(3) + mono(1, 3) + mono(-1, 3) + mono(-3)) ==
        "v^3 + 3v + 3v^-1 + v^-3");
  CHECK(laurent_str(mono(2) - mono(0, 2)) == "v^2 - 2");
  CHECK(laurent_str(mono(0, -1) + mono(1)) == "v - 1");
  Laurent q = mono(0) + mono(1, 2) + mono(2);
  CHECK(laurent_str(q, "q") == "q^2 + 2q + 1");
  CHECK(laurent_from_json(laurent_json(q)) == q);
}
