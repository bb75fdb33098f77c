#include <doctest.h>

#include "oracles.hpp"
#include "z2q/algint.hpp"
#include "z2q/ball.hpp"
#include "z2q/numtheory.hpp"
#include "z2q/quad.hpp"

using namespace z2q;

TEST_SUITE("scalar") {

TEST_CASE("cyclotomic field axioms on random elements") {
  std::mt19937_64 rng(20240611);
  int cases = 0;
  for (int it = 0; it < 1200; ++it) {
    CycloElem a = oracle::random_cyclo(rng), b = oracle::random_cyclo(rng), c = oracle::random_cyclo(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).galois(7) == a.galois(7) + b.galois(7));
    CHECK((a * b).galois(7) == a.galois(7) * b.galois(7));
    if (!b.is_zero()) {
      CHECK(b * b.inverse() == CycloElem(1));
      CHECK((a / b) * b == a);
    }
    CHECK(oracle::close(oracle::embed(a * b), oracle::embed(a) * oracle::embed(b), 1e-10L));
    CHECK(oracle::close(oracle::embed(a + b), oracle::embed(a) + oracle::embed(b), 1e-10L));
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("named constants") {
  CHECK(cyc::i() * cyc::i() == CycloElem(-1));
  CHECK(cyc::sqrt2() * cyc::sqrt2() == CycloElem(2));
  CHECK(cyc::sqrt3() * cyc::sqrt3() == CycloElem(3));
  CHECK(cyc::sqrt5() * cyc::sqrt5() == CycloElem(5));
  CHECK(cyc::omega().pow(3) == CycloElem(1));
  CHECK(cyc::omega() != CycloElem(1));
  CHECK(cyc::nu().pow(4) == CycloElem(-1));
  CHECK(cyc::golden() * cyc::golden() == cyc::golden() + CycloElem(1));
  CHECK(oracle::close(oracle::embed(cyc::nu()), oracle::root_of_unity(1, 8)));
  CHECK(oracle::close(oracle::embed(cyc::sqrt5()), std::sqrt(5.0L)));
  CHECK(CycloElem::zeta(120) == CycloElem(1));
  CHECK(CycloElem::zeta(-1) == CycloElem::zeta(119));
}

TEST_CASE("frac canonicalises") {
  CHECK(frac(4, 6) == frac(2, 3));
  CHECK(frac(4, 6).get_num() == 2);
  CHECK(frac(3, -9).get_den() == 3);
  CHECK(CycloElem(frac(6, 4)) == CycloElem(frac(3, 2)));
}

TEST_CASE("balls enclose the exact value") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    CycloElem a = oracle::random_cyclo(rng);
    ComplexBall b = a.embed();
    auto z = oracle::embed(a);
    auto approx = b.approx();
    CHECK(std::abs(std::complex<long double>(approx.real(), approx.imag()) - z) < 1e-12L);
    CHECK(b.radius() < 1e-60);
    CHECK((b - b).contains_zero());
  }
  ComplexBall one = ComplexBall::from_rational(1);
  CHECK(one.real_sign() == 1);
  CHECK((-one).real_sign() == -1);
  CHECK(ComplexBall::from_rational(0).certified_zero());
}

TEST_CASE("quadratic elements") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-20, 20), d(1, 9);
  const std::int64_t rads[] = {2, 3, 5, -1, -3};
  for (int it = 0; it < 300; ++it) {
    std::int64_t t = rads[it % 5];
    QuadElem x(frac(c(rng), d(rng)), frac(c(rng), d(rng)), t), y(frac(c(rng), d(rng)), frac(c(rng), d(rng)), t);
    CHECK((x * y).to_cyclo() == x.to_cyclo() * y.to_cyclo());
    CHECK((x + y).to_cyclo() == x.to_cyclo() + y.to_cyclo());
    if (!y.is_zero()) CHECK((x / y) * y == x);
    auto back = to_quadratic(x.to_cyclo());
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
  CHECK(QuadElem(20, 8, 5).str() == "20 + 8√5");
  CHECK(QuadElem(frac(-1, 8), frac(1, 8), 5).str() == "-1/8 + 1/8√5");
  CHECK(QuadElem::sqrt_of(12) == QuadElem(0, 2, 3));
  CHECK(QuadElem(2, -1, 5).sign() == -1);
}

TEST_CASE("square roots adjoined to the field") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    CycloElem r = oracle::random_cyclo(rng);
    CycloElem x = r.abs2() + CycloElem(frac(1, 3));
    ExtElem s = sqrt_adjoin(x);
    CHECK(s * s == ExtElem(x));
    auto z = oracle::embed(s);
    CHECK(z.real() > 0);
    CHECK(std::abs(z * z - oracle::embed(x)) < 1e-9L);
  }
  // sqrt2 lives in the field; 2^(1/4) does not
  CHECK(sqrt_adjoin(CycloElem(2)).in_base_field());
  ExtElem q = sqrt_adjoin(cyc::sqrt2());
  CHECK_FALSE(q.in_base_field());
  CHECK(q.pow(4) == ExtElem(2));
  // incompatible radicands refuse to mix
  CHECK_THROWS_AS(sqrt_adjoin(cyc::sqrt2()) + sqrt_adjoin(cyc::sqrt3()), std::domain_error);
}

TEST_CASE("algebraic integers") {
  CHECK(is_algebraic_integer(cyc::golden()));
  CHECK(is_algebraic_integer(CycloElem::zeta(7) + CycloElem::zeta(31) * CycloElem(3)));
  CHECK(is_algebraic_integer(cyc::sqrt5()));
  CHECK_FALSE(is_algebraic_integer(cyc::half()));
  CHECK_FALSE(is_algebraic_integer(cyc::golden() * cyc::half()));
  // (1 + i)/sqrt2 is a root of unity
  CHECK(is_algebraic_integer((CycloElem(1) + cyc::i()) / cyc::sqrt2()));
  auto mp = minimal_polynomial(cyc::golden());
  REQUIRE(mp.size() == 3);
  CHECK(mp[0] == -1);
  CHECK(mp[1] == -1);
  CHECK(mp[2] == 1);
}

TEST_CASE("number theory helpers against a sieve") {
  auto phi = oracle::totient_table(10000);
  for (std::int64_t n = 1; n <= 10000; ++n) CHECK(euler_totient(n) == phi[static_cast<size_t>(n)]);
  for (std::int64_t n = 1; n <= 3000; ++n) {
    auto s = squarefree_part(n);
    CHECK(s.v * s.v * s.t == n);
    CHECK(oracle::squarefree(s.t));
    CHECK(is_squarefree(n) == oracle::squarefree(n));
  }
}

}  // TEST_SUITE
