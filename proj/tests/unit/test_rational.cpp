#include <doctest.h>

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>

#include "primegb/rational.hpp"

using namespace primegb;

namespace {

template <class R>
void check_canonical(const R& r) {
  const mpq_class q = r.to_mpq();
  CHECK(sgn(q.get_den()) > 0);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  CHECK(g == 1);
}

bool fits64(const mpq_class& q) { return q.get_num().fits_slong_p() && q.get_den().fits_slong_p(); }

}  // namespace

TEST_SUITE("coeff") {
  TEST_CASE_TEMPLATE("small fraction arithmetic", R, Rational64, RationalBig) {
    CHECK(R(1, 2) + R(1, 3) == R(5, 6));
    CHECK(R(2, 3) * R(3, 4) == R(1, 2));
    CHECK(R(1, 2) / R(1, 2) == R(1));
    CHECK(R(5, 6) / R(1, 3) == R(5, 2));
    CHECK(-R(1, 2) == R(-1, 2));
    CHECK(R(0, 7).is_zero());
    CHECK(R(0, 7) == R(0, 1));
    CHECK(R(3, 7) + R(0) == R(3, 7));
    CHECK(R(3, 7) * R(1) == R(3, 7));
    CHECK(-(-R(3, 7)) == R(3, 7));
    CHECK_THROWS_AS(R(3, 7) / R(0), DivisionByZero);
    CHECK_THROWS_AS(R(1, 0), DivisionByZero);
    CHECK_THROWS_AS(R(0).inverse(), DivisionByZero);
  }

  TEST_CASE_TEMPLATE("sign lives in the numerator", R, Rational64, RationalBig) {
    const R r(3, -6);
    CHECK(r == R(-1, 2));
    CHECK(r.sign() == -1);
    const R q = R(1, 3) / R(-2, 5);
    CHECK(q == R(-5, 6));
    check_canonical(q);
  }

  TEST_CASE_TEMPLATE("text", R, Rational64, RationalBig) {
    CHECK(R(-10, 7).to_string() == "-10/7");
    CHECK(R(4, 2).to_string() == "2");
    CHECK(R::parse("-2/7") == R(-2, 7));
    CHECK(R::parse("+6/4") == R(3, 2));
    CHECK(R::parse("15") == R(15));
  }

  TEST_CASE("Fixed64 overflow is signalled") {
    const std::int64_t p62 = std::int64_t{1} << 62;
    CHECK_THROWS_AS(Rational64(p62) + Rational64(p62), CoefficientOverflow);
    CHECK_THROWS_AS(Rational64(3037000500) * Rational64(3037000500), CoefficientOverflow);
    // 3037000499^2 < 2^63 <= 3037000500^2
    CHECK_NOTHROW(Rational64(3037000499) * Rational64(3037000499));
    CHECK_THROWS_AS(-Rational64(std::numeric_limits<std::int64_t>::min()), CoefficientOverflow);
    CHECK_THROWS_AS(Rational64::from_mpq(mpq_class(mpz_class(1) << 70)), CoefficientOverflow);
  }

  TEST_CASE("arbitrary precision does not overflow") {
    const RationalBig p62(std::int64_t{1} << 62);
    CHECK((p62 + p62).to_mpq() == mpq_class(mpz_class(1) << 63));
  }

  TEST_CASE_TEMPLATE("field laws on random small rationals", R, Rational64, RationalBig) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    auto gen = [&] { return R(num(rng), den(rng)); };
    for (int k = 0; k < 500; ++k) {
      const R a = gen(), b = gen(), c = gen();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      check_canonical(a * b + c);
    }
  }

  TEST_CASE("backends agree and Fixed64 overflow is never silent") {
    std::mt19937_64 rng(11);
    int completed = 0;
    int overflowed = 0;
    for (int k = 0; k < 20000; ++k) {
      const int bits = 1 + static_cast<int>(rng() % 62);
      auto gen = [&] {
        const auto n = static_cast<std::int64_t>(rng() >> (64 - bits)) * ((rng() & 1) ? 1 : -1);
        const auto d = static_cast<std::int64_t>(rng() >> (64 - bits)) + 1;
        return std::pair{Rational64(n, d), mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)))};
      };
      auto [a, qa] = gen();
      auto [b, qb] = gen();
      qa.canonicalize();
      qb.canonicalize();
      mpq_class expect;
      try {
        Rational64 r;
        switch (k % 4) {
          case 0: r = a + b; expect = qa + qb; break;
          case 1: r = a - b; expect = qa - qb; break;
          case 2: r = a * b; expect = qa * qb; break;
          default:
            if (b.is_zero()) continue;
            r = a / b;
            expect = qa / qb;
        }
        ++completed;
        REQUIRE(r.to_mpq() == expect);
        CHECK(RationalBig(expect).to_mpq() == r.to_mpq());
      } catch (const CoefficientOverflow&) {
        ++overflowed;
      }
    }
    CHECK(completed > 0);
    CHECK(overflowed > 0);
  }

  TEST_CASE("results that do not fit always overflow") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20000; ++k) {
      const Rational64 a(static_cast<std::int64_t>(rng() >> 2), static_cast<std::int64_t>(rng() >> 40) + 1);
      const Rational64 b(static_cast<std::int64_t>(rng() >> 2), static_cast<std::int64_t>(rng() >> 40) + 1);
      const mpq_class exact = a.to_mpq() * b.to_mpq();
      if (fits64(exact)) continue;
      CHECK_THROWS_AS(a * b, CoefficientOverflow);
    }
  }
}
