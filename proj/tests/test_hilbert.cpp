#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fockfit/hilbert.hpp"
#include "test_util.hpp"

using namespace fockfit;
using testutil::max_entry_diff;

TEST_CASE("inner product on the standard basis") {
  const ComplexVector e1 = ComplexVector::basis(2, 0);
  const ComplexVector e2 = ComplexVector::basis(2, 1);
  CHECK(std::abs(inner_product(e1, e1) - Complex{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(inner_product(e1, e2)) < 1e-15);
}

TEST_CASE("inner product of conjugate circular states vanishes") {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexVector u({Complex{s, 0.0}, Complex{0.0, s}});
  const ComplexVector v({Complex{s, 0.0}, Complex{0.0, -s}});
  // <(1,i)/sqrt2 | (1,-i)/sqrt2> = 1/2 + conj(i)(-i)/2 = 0
  CHECK(std::abs(inner_product(u, v)) < 1e-15);
}

TEST_CASE("inner product is sesquilinear and conjugate-symmetric") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 100; ++rep) {
    const auto u = testutil::random_vector(rng, 5);
    const auto v = testutil::random_vector(rng, 5);
    const auto w = testutil::random_vector(rng, 5);
    CHECK(std::abs(inner_product(u, v) - std::conj(inner_product(v, u))) < 1e-12);
    const Complex scalar{0.3, -1.2};
    // Conjugate-linear in the first slot, linear in the second.
    CHECK(std::abs(inner_product(u.scaled(scalar), v) -
                   std::conj(scalar) * inner_product(u, v)) < 1e-12);
    CHECK(std::abs(inner_product(u, v.scaled(scalar)) -
                   scalar * inner_product(u, v)) < 1e-12);
    CHECK(std::abs(inner_product(u + w, v) -
                   (inner_product(u, v) + inner_product(w, v))) < 1e-12);
  }
}

TEST_CASE("dimension mismatches are rejected") {
  const ComplexVector u = ComplexVector::basis(2, 0);
  const ComplexVector v = ComplexVector::basis(3, 0);
  CHECK_THROWS_AS(inner_product(u, v), std::invalid_argument);
  CHECK_THROWS_AS(LinearOperator::identity(2).apply(v), std::invalid_argument);
  CHECK_THROWS_AS(ComplexVector(std::vector<Complex>{}), std::invalid_argument);
}

TEST_CASE("tensor product of basis vectors and identities") {
  const ComplexVector e1 = ComplexVector::basis(2, 0);
  const ComplexVector t = tensor_product(e1, e1);
  REQUIRE(t.dim() == 4);
  CHECK(std::abs(t[0] - Complex{1.0, 0.0}) < 1e-15);
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(t[i]) < 1e-15);

  const LinearOperator id4 =
      tensor_product(LinearOperator::identity(2), LinearOperator::identity(2));
  CHECK(max_entry_diff(id4, LinearOperator::identity(4)) < 1e-15);
  CHECK(id4.projector_flagged());
}

TEST_CASE("tensor of rank-1 projectors is a rank-1 projector") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const LinearOperator p = testutil::random_projector(rng, 2, 1);
    const LinearOperator q = testutil::random_projector(rng, 2, 1);
    const LinearOperator pq = tensor_product(p, q);
    CHECK(pq.is_projector(1e-10));
    // Projector rank equals its trace (the count of unit eigenvalues).
    CHECK(std::abs(pq.trace() - Complex{1.0, 0.0}) < 1e-10);
  }
}

TEST_CASE("tensor index convention: first factor varies slowest") {
  const ComplexVector u({Complex{1.0, 0.0}, Complex{2.0, 0.0}});
  const ComplexVector v({Complex{3.0, 0.0}, Complex{5.0, 0.0}, Complex{7.0, 0.0}});
  const ComplexVector t = tensor_product(u, v);
  REQUIRE(t.dim() == 6);
  CHECK(t[0] == Complex{3.0, 0.0});   // u[0] v[0]
  CHECK(t[2] == Complex{7.0, 0.0});   // u[0] v[2]
  CHECK(t[3] == Complex{6.0, 0.0});   // u[1] v[0]
  CHECK(t[5] == Complex{14.0, 0.0});  // u[1] v[2]
}

TEST_CASE("tensor product respects the mixed-product identity") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 50; ++rep) {
    const LinearOperator a = testutil::random_matrix(rng, 3);
    const LinearOperator b = testutil::random_matrix(rng, 2);
    const ComplexVector u = testutil::random_vector(rng, 3);
    const ComplexVector v = testutil::random_vector(rng, 2);
    const ComplexVector lhs = tensor_product(a, b).apply(tensor_product(u, v));
    const ComplexVector rhs = tensor_product(a.apply(u), b.apply(v));
    CHECK(max_entry_diff(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("tensor product is associative") {
  std::mt19937_64 rng(17);
  const ComplexVector u = testutil::random_vector(rng, 2);
  const ComplexVector v = testutil::random_vector(rng, 3);
  const ComplexVector w = testutil::random_vector(rng, 2);
  CHECK(max_entry_diff(tensor_product(tensor_product(u, v), w),
                       tensor_product(u, tensor_product(v, w))) < 1e-12);
  const LinearOperator a = testutil::random_matrix(rng, 2);
  const LinearOperator b = testutil::random_matrix(rng, 2);
  const LinearOperator c = testutil::random_matrix(rng, 2);
  CHECK(max_entry_diff(tensor_product(tensor_product(a, b), c),
                       tensor_product(a, tensor_product(b, c))) < 1e-12);
}

TEST_CASE("born weight on eigenstates and superpositions") {
  const ComplexVector e1 = ComplexVector::basis(2, 0);
  const ComplexVector e2 = ComplexVector::basis(2, 1);
  const LinearOperator m = LinearOperator::outer(e1, e1);
  CHECK(born_weight(e1, m) == doctest::Approx(1.0).epsilon(1e-12));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(born_weight((e1 + e2).scaled(Complex{s, 0.0}), m) ==
        doctest::Approx(0.5).epsilon(1e-12));
  const ComplexVector pets(
      {Complex{std::sqrt(0.93), 0.0}, Complex{std::sqrt(0.07), 0.0}});
  CHECK(born_weight(pets, m) == doctest::Approx(0.93).epsilon(1e-12));
}

TEST_CASE("born weight rejects bad inputs") {
  const ComplexVector e1 = ComplexVector::basis(2, 0);
  const ComplexVector not_unit({Complex{1.0, 0.0}, Complex{1.0, 0.0}});
  const LinearOperator m = LinearOperator::outer(e1, e1);
  CHECK_THROWS_AS(born_weight(not_unit, m), std::invalid_argument);
  const LinearOperator not_projector =
      LinearOperator::from_rows({{Complex{0.0, 0.0}, Complex{1.0, 0.0}},
                                 {Complex{0.0, 0.0}, Complex{0.0, 0.0}}});
  CHECK_THROWS_AS(born_weight(e1, not_projector), std::invalid_argument);
  CHECK_THROWS_AS(LinearOperator::projector(not_projector), std::invalid_argument);
}

TEST_CASE("born weight stays in [0,1], is 1 on the identity, and is additive "
          "over complements") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t dim = 2 + rep % 4;
    const ComplexVector state = testutil::random_unit(rng, dim);
    const LinearOperator proj =
        testutil::random_projector(rng, dim, rng() % (dim + 1));
    const double w = born_weight(state, proj);
    CHECK(w >= 0.0);
    CHECK(w <= 1.0);
    CHECK(born_weight(state, LinearOperator::identity(dim)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(w + born_weight(state, proj.complement()) - 1.0) < 1e-10);
  }
}

TEST_CASE("de Morgan operator identity") {
  std::mt19937_64 rng(23);
  for (std::size_t dim = 2; dim <= 8; ++dim) {
    for (int rep = 0; rep < 5; ++rep) {
      const LinearOperator m =
          testutil::random_projector(rng, dim, 1 + rng() % dim);
      const LinearOperator one = LinearOperator::identity(dim);
      const LinearOperator lhs = tensor_product(m, one) +
                                 tensor_product(one, m) -
                                 tensor_product(m, m);
      const LinearOperator rhs =
          LinearOperator::identity(dim * dim) -
          tensor_product(m.complement(), m.complement());
      CHECK(max_entry_diff(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("unit-vector validation") {
  const ComplexVector v({Complex{0.6, 0.0}, Complex{0.8, 0.0}});
  CHECK(v.is_unit());
  const ComplexVector w({Complex{0.6, 0.0}, Complex{0.9, 0.0}});
  CHECK_FALSE(w.is_unit());
  CHECK_THROWS_AS(w.require_unit(), std::invalid_argument);
}
