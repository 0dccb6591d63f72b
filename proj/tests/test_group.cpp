#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "qgzeta/group.hpp"

using namespace qgz;

namespace {

// S3 as permutations of {0,1,2} under composition, identity first.
GroupPtr symmetric_group_3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                           {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  auto find = [&](const std::array<int, 3>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      table[a][b] = find(comp);
    }
  return std::make_shared<FiniteGroup>(
      FiniteGroup::from_table({"e", "r", "r2", "s", "rs", "sr"}, table));
}

}  // namespace

TEST_CASE("cyclic groups") {
  GroupPtr z1 = cyclic_group(1);
  CHECK(z1->size() == 1);
  CHECK(z1->op(0, 0) == 0);

  GroupPtr z2 = cyclic_group(2);
  CHECK(z2->size() == 2);
  CHECK(z2->op(1, 1) == 0);
  CHECK(z2->inverse(1) == 1);
  CHECK(z2->order_of(1) == 2);
  CHECK(z2->name(1) == "1");
  CHECK(z2->abelian());

  GroupPtr z6 = cyclic_group(6);
  CHECK(z6->power(1, 4) == 4);
  CHECK(z6->power(5, 0) == 0);
  CHECK(z6->order_of(2) == 3);
  CHECK(z6->order_of(5) == 6);
  CHECK_THROWS_AS(cyclic_group(0), InputError);
}

TEST_CASE("product groups") {
  GroupPtr klein = product_group({2, 2});
  CHECK(klein->size() == 4);
  CHECK(klein->abelian());
  for (int g = 0; g < 4; ++g) {
    CHECK(klein->inverse(g) == g);
    CHECK(klein->op(g, g) == 0);
  }
  CHECK(klein->name(0) == "0,0");

  GroupPtr z6 = product_group({2, 3});
  CHECK(z6->size() == 6);
  bool found6 = false;
  for (int g = 0; g < 6; ++g) found6 = found6 || z6->order_of(g) == 6;
  CHECK(found6);  // Z2 x Z3 is cyclic of order 6
}

TEST_CASE("from_table validation") {
  // Identity must sit at index 0.
  CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {{1, 0}, {0, 1}}), InputError);
  // Rows must be permutations.
  CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {{0, 1}, {1, 1}}), InputError);
  // Shape mismatch.
  CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {{0, 1}}), InputError);

  // The smallest loop with identity that is a latin square but not
  // associative: (1*1)*2 = 2 while 1*(1*2) = 4.
  std::vector<std::vector<int>> loop5 = {{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table({"0", "1", "2", "3", "4"}, loop5), InputError);
}

TEST_CASE("symmetric group on three letters") {
  GroupPtr s3 = symmetric_group_3();
  CHECK(s3->size() == 6);
  CHECK_FALSE(s3->abelian());
  CHECK(s3->order_of(1) == 3);
  CHECK(s3->order_of(3) == 2);
  CHECK(s3->op(1, 1) == 2);
  CHECK(s3->inverse(1) == 2);
  CHECK_THROWS_AS(characters_abelian(s3), InputError);
}

TEST_CASE("abelian character tables") {
  for (int n : {2, 3, 4, 5}) {
    GroupPtr g = cyclic_group(n);
    IrrepSet chars = characters_abelian(g);
    REQUIRE(static_cast<int>(chars.reps.size()) == n);
    validate_irrep_set(chars, *g);
    for (int h = 0; h < n; ++h)
      CHECK(std::abs(chars.reps[0].matrices[h](0, 0) - cplx(1.0, 0.0)) < 1e-14);

    // A generator's image under some character must be a primitive n-th root.
    cplx omega = std::exp(cplx(0.0, 2.0 * pi / n));
    bool primitive = false;
    for (const auto& rep : chars.reps)
      primitive = primitive || std::abs(rep.matrices[1](0, 0) - omega) < 1e-12;
    CHECK(primitive);

    // Orthonormality of rows.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cplx acc = 0.0;
        for (int h = 0; h < n; ++h)
          acc += chars.reps[i].character(h) * std::conj(chars.reps[j].character(h));
        acc /= static_cast<double>(n);
        CHECK(std::abs(acc - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
  }

  IrrepSet klein = characters_abelian(product_group({2, 2}));
  REQUIRE(klein.reps.size() == 4);
  for (const auto& rep : klein.reps)
    for (const auto& m : rep.matrices)
      CHECK(std::abs(std::abs(m(0, 0).real()) - 1.0) < 1e-14);
  validate_irrep_set(klein, *product_group({2, 2}));
}

TEST_CASE("representation validation") {
  GroupPtr z2 = cyclic_group(2);
  Representation good = trivial_representation(z2);
  CHECK(good.degree == 1);
  CHECK(validate_representation(good).pass);

  Representation sign;
  sign.group = z2;
  sign.name = "sign";
  sign.degree = 1;
  sign.matrices = {ComplexMatrix::identity(1), ComplexMatrix::identity(1)};
  sign.matrices[1](0, 0) = -1.0;
  CHECK(validate_representation(sign).pass);

  Representation not_unitary = sign;
  not_unitary.matrices[1](0, 0) = cplx(0.5, 0.0);
  CHECK_FALSE(validate_representation(not_unitary).pass);

  Representation not_homomorphic;
  not_homomorphic.group = cyclic_group(3);
  not_homomorphic.name = "broken";
  not_homomorphic.degree = 1;
  not_homomorphic.matrices = {ComplexMatrix::identity(1), ComplexMatrix::identity(1),
                              ComplexMatrix::identity(1)};
  not_homomorphic.matrices[1](0, 0) = -1.0;  // -1 is not a cube root of unity
  CHECK_FALSE(validate_representation(not_homomorphic).pass);

  IrrepSet incomplete = characters_abelian(z2);
  incomplete.reps.pop_back();
  CHECK_THROWS_AS(validate_irrep_set(incomplete, *z2), InputError);
}
