#include <catch2/catch_amalgamated.hpp>

#include "gfrob/matrix.hpp"
#include "gfrob/rational.hpp"

using gfrob::Rat;
using gfrob::RatMat;

namespace {

RatMat from_ints(int rows, int cols, std::initializer_list<long long> vals) {
  RatMat m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(*it++);
  return m;
}

}  // namespace

TEST_CASE("product, transpose, identity") {
  RatMat a = from_ints(2, 3, {1, 2, 3, 4, 5, 6});
  RatMat b = from_ints(3, 2, {7, 8, 9, 10, 11, 12});
  RatMat ab = from_ints(2, 2, {58, 64, 139, 154});
  CHECK(a * b == ab);
  CHECK((RatMat::identity(2) * a) == a);
  CHECK(a.transposed().transposed() == a);
  CHECK(a.apply({Rat(1), Rat(0), Rat(-1)}) == std::vector<Rat>{Rat(-2), Rat(-2)});
}

TEST_CASE("rank, kernel, and solve on an exact rational system") {
  // rows 2 and 3 are dependent: r3 = r1 + r2
  RatMat m = from_ints(3, 3, {1, 2, 3, 4, 5, 6, 5, 7, 9});
  CHECK(m.rank() == 2);
  auto ker = m.kernel_basis();
  REQUIRE(ker.size() == 1);
  // kernel of [[1,2,3],[4,5,6]] is spanned by (1, -2, 1)
  std::vector<Rat> k = ker[0];
  Rat scale = k[0];
  REQUIRE(!scale.is_zero());
  CHECK(k[1] / scale == Rat(-2));
  CHECK(k[2] / scale == Rat(1));

  auto sol = m.solve({Rat(6), Rat(15), Rat(21)});
  REQUIRE(sol.has_value());
  // residual check
  auto r = m.apply(*sol);
  CHECK(r == std::vector<Rat>{Rat(6), Rat(15), Rat(21)});
  CHECK_FALSE(m.solve({Rat(1), Rat(0), Rat(0)}).has_value());
}

TEST_CASE("inverse") {
  RatMat m = from_ints(2, 2, {2, 1, 7, 4});
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK((m * *inv) == RatMat::identity(2));
  CHECK((*inv * m) == RatMat::identity(2));
  CHECK(inv->at(0, 0) == Rat(4));
  CHECK(inv->at(0, 1) == Rat(-1));
  RatMat sing = from_ints(2, 2, {1, 2, 2, 4});
  CHECK_FALSE(sing.inverse().has_value());
}

TEST_CASE("kronecker product layout is row-major in the first factor") {
  RatMat a = from_ints(1, 2, {1, 2});
  RatMat b = from_ints(2, 1, {3, 4});
  RatMat k = a.kron(b);
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 2);
  CHECK(k.at(0, 0) == Rat(3));
  CHECK(k.at(0, 1) == Rat(6));
  CHECK(k.at(1, 0) == Rat(4));
  CHECK(k.at(1, 1) == Rat(8));
  // mixed products: (A kron B)(C kron D) = AC kron BD
  RatMat c = from_ints(2, 2, {1, 1, 0, 1});
  RatMat d = from_ints(1, 2, {5, 6});
  CHECK(a.kron(b) * c.kron(d) == (a * c).kron(b * d));
}

TEST_CASE("trace and scaling") {
  RatMat m = from_ints(2, 2, {1, 2, 3, 4});
  CHECK(m.trace() == Rat(5));
  CHECK(m.scaled(Rat(1, 2)).at(1, 1) == Rat(2));
  CHECK((m - m).is_zero());
  CHECK((m + m) == m.scaled(Rat(2)));
}

TEST_CASE("zero-dimensional matrices behave") {
  RatMat z(0, 3);
  CHECK(z.rank() == 0);
  CHECK(z.kernel_basis().size() == 3);
  RatMat z2(0, 0);
  CHECK((z2 * z) == z);
  CHECK(z2.inverse().has_value());
}
