#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "laguerre/errors.hpp"
#include "laguerre/finite_field.hpp"
#include "laguerre/models.hpp"

using namespace laguerre;

namespace {

// Product of two residue polynomials (digits base p of the indexes) modulo
// a monic polynomial given low to high.
unsigned poly_mul(unsigned p, const std::vector<unsigned>& modulus, unsigned a, unsigned b) {
  const std::size_t k = modulus.size() - 1;
  std::vector<unsigned> x(k), y(k), prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    unsigned lead = prod[d];
    if (!lead) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - lead) * modulus[i]) % p;
  }
  unsigned out = 0;
  for (std::size_t i = k; i-- > 0;) out = out * p + prod[i];
  return out;
}

struct Documented {
  unsigned p, k;
  std::vector<unsigned> modulus;
};

const std::vector<Documented> kDocumented = {
    {2, 2, {1, 1, 1}},    {2, 3, {1, 1, 0, 1}},    {2, 4, {1, 1, 0, 0, 1}}, {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}}, {3, 2, {1, 0, 1}}, {3, 3, {1, 2, 0, 1}}, {5, 2, {2, 1, 1}},
    {7, 2, {3, 1, 1}},
};

}  // namespace

TEST(Field, PrimeArithmetic) {
  FiniteField f = make_field(5, 1);
  EXPECT_EQ(f.add(f.element(2), f.element(4)), f.element(1));
  EXPECT_EQ(f.mul(f.element(3), f.element(4)), f.element(2));
  EXPECT_EQ(f.neg(f.element(2)), f.element(3));
  EXPECT_EQ(f.inv(f.element(2)), f.element(3));
  EXPECT_THROW(f.inv(f.zero()), std::domain_error);
}

TEST(Field, GF4SquareOfGenerator) {
  FiniteField f = make_field(2, 2);
  FieldElement t = f.element(2);
  EXPECT_EQ(f.mul(t, t), f.add(t, f.one()));
}

TEST(Field, MultiplicationMatchesPolynomialDivision) {
  for (const Documented& d : kDocumented) {
    FiniteField f = make_field(d.p, d.k);
    ASSERT_EQ(std::vector<unsigned>(f.modulus().begin(), f.modulus().end()), d.modulus) << d.p << "^" << d.k;
    for (unsigned a = 0; a < f.order(); ++a)
      for (unsigned b = 0; b < f.order(); ++b)
        ASSERT_EQ(f.mul(f.element(a), f.element(b)).index, poly_mul(d.p, d.modulus, a, b))
            << d.p << "^" << d.k << ": " << a << "*" << b;
  }
}

TEST(Field, MinusOneIsSquareInGF9) {
  FiniteField f = make_field(3, 2);
  std::set<unsigned> squares;
  for (unsigned x = 0; x < 9; ++x) squares.insert(f.mul(f.element(x), f.element(x)).index);
  EXPECT_TRUE(squares.count(f.neg(f.one()).index));
  EXPECT_EQ(f.square_roots(f.neg(f.one())).size(), 2u);
}

TEST(Field, SquareRootExamples) {
  FiniteField f5 = make_field(5, 1), f7 = make_field(7, 1);
  EXPECT_EQ(f5.square_roots(f5.element(4)), (std::vector<FieldElement>{f5.element(2), f5.element(3)}));
  EXPECT_TRUE(f5.square_roots(f5.element(3)).empty());
  EXPECT_EQ(f7.square_roots(f7.element(2)), (std::vector<FieldElement>{f7.element(3), f7.element(4)}));
}

TEST(Field, SquareRootsMatchBruteForce) {
  for (unsigned q : kSupportedOrders) {
    FiniteField f = make_field_of_order(q);
    for (unsigned e = 0; e < q; ++e) {
      std::vector<FieldElement> expected;
      for (unsigned x = 0; x < q; ++x)
        if (f.mul(f.element(x), f.element(x)) == f.element(e)) expected.push_back(f.element(x));
      std::vector<FieldElement> got = f.square_roots(f.element(e));
      EXPECT_EQ(std::set<FieldElement>(got.begin(), got.end()), std::set<FieldElement>(expected.begin(), expected.end()))
          << "q=" << q << " e=" << e;
      if (f.characteristic() == 2) EXPECT_EQ(got.size(), 1u);
      else EXPECT_EQ(got.size(), e == 0 ? 1u : expected.size());
    }
  }
}

TEST(Field, AxiomsHoldOnEverySupportedOrder) {
  for (unsigned q : kSupportedOrders) {
    FiniteField f = make_field_of_order(q);
    for (unsigned a = 0; a < q; ++a) {
      FieldElement x = f.element(a);
      EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
      EXPECT_EQ(f.mul(x, f.one()), x);
      if (a) EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
      for (unsigned b = 0; b < q; ++b) {
        FieldElement y = f.element(b);
        ASSERT_EQ(f.add(x, y), f.add(y, x));
        ASSERT_EQ(f.mul(x, y), f.mul(y, x));
        for (unsigned c = 0; c < q; ++c) {
          FieldElement z = f.element(c);
          ASSERT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z))) << q;
          ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z))) << q;
          ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z))) << q;
        }
      }
    }
  }
}

TEST(Field, RejectsUnsupported) {
  EXPECT_THROW(make_field(4, 1), UnsupportedField);
  EXPECT_THROW(make_field(2, 7), UnsupportedField);
  EXPECT_THROW(make_field_of_order(6), UnsupportedField);
  EXPECT_THROW(make_field_of_order(1), UnsupportedField);
}
