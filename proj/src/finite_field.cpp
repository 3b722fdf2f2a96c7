#include "laguerre/finite_field.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "laguerre/errors.hpp"

namespace laguerre {

namespace {

// Monic irreducible polynomials, coefficients low to high.
const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>& irreducibles() {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table{
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 1, 1}},
      {{7, 2}, {3, 1, 1}},
  };
  return table;
}

std::vector<unsigned> digits(unsigned index, unsigned p, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned j = 0; j < k; ++j) {
    d[j] = index % p;
    index /= p;
  }
  return d;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned p) {
  unsigned index = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) index = index * p + *it;
  return index;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldElement FiniteField::element(unsigned index) const {
  if (index >= q_) throw std::out_of_range("field element index out of range");
  return {index};
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.index == 0) throw std::domain_error("inverse of zero");
  return {inv_[a.index]};
}

std::vector<FieldElement> FiniteField::square_roots(FieldElement e) const {
  std::vector<FieldElement> roots;
  for (std::uint32_t x = 0; x < q_; ++x)
    if (mul_[x * q_ + x] == e.index) roots.push_back({x});
  return roots;
}

std::string FiniteField::modulus_string() const {
  if (k_ == 1) return "t";
  std::ostringstream out;
  bool first = true;
  for (unsigned j = k_ + 1; j-- > 0;) {
    unsigned c = modulus_[j];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (c != 1 || j == 0) out << c;
    if (j >= 1) out << 't';
    if (j >= 2) out << '^' << j;
  }
  return out.str();
}

FiniteField make_field(unsigned p, unsigned k) {
  if (!is_prime(p)) throw UnsupportedField("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw UnsupportedField("extension degree must be at least 1");
  unsigned q = 1;
  for (unsigned j = 0; j < k; ++j) {
    q *= p;
    if (q > FiniteField::kMaxOrder)
      throw UnsupportedField("field order exceeds " + std::to_string(FiniteField::kMaxOrder));
  }

  FiniteField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;
  if (k == 1) {
    f.modulus_ = {0, 1};
  } else {
    auto it = irreducibles().find({p, k});
    if (it == irreducibles().end())
      throw UnsupportedField("no reduction polynomial for GF(" + std::to_string(q) + ")");
    f.modulus_ = it->second;
  }

  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);

  for (unsigned i = 0; i < q; ++i) {
    auto a = digits(i, p, k);
    std::vector<unsigned> n(k);
    for (unsigned j = 0; j < k; ++j) n[j] = (p - a[j]) % p;
    f.neg_[i] = from_digits(n, p);
    for (unsigned l = 0; l < q; ++l) {
      auto b = digits(l, p, k);
      std::vector<unsigned> s(k);
      for (unsigned j = 0; j < k; ++j) s[j] = (a[j] + b[j]) % p;
      f.add_[i * q + l] = from_digits(s, p);

      // Schoolbook product, then reduce from the top degree down.
      std::vector<unsigned> prod(2 * k - 1, 0);
      for (unsigned x = 0; x < k; ++x)
        for (unsigned y = 0; y < k; ++y) prod[x + y] = (prod[x + y] + a[x] * b[y]) % p;
      if (k > 1) {
        for (unsigned deg = 2 * k - 2; deg >= k; --deg) {
          unsigned c = prod[deg];
          if (c == 0) continue;
          for (unsigned j = 0; j <= k; ++j)
            prod[deg - k + j] = (prod[deg - k + j] + (p - c) * f.modulus_[j]) % p;
        }
      }
      prod.resize(k);
      f.mul_[i * q + l] = from_digits(prod, p);
    }
  }

  for (unsigned i = 1; i < q; ++i) {
    for (unsigned l = 1; l < q; ++l) {
      if (f.mul_[i * q + l] == 1) {
        f.inv_[i] = l;
        break;
      }
    }
    if (f.inv_[i] == 0) throw std::logic_error("reduction polynomial is not irreducible");
  }
  return f;
}

FiniteField make_field_of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    unsigned k = 0;
    unsigned r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) break;
    return make_field(p, k);
  }
  throw UnsupportedField(std::to_string(q) + " is not a prime power");
}

}  // namespace laguerre
