#pragma once

// Brute-force matrix counts over tiny finite fields. Independent of the order formulas.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fq {

// GF(q) for q = p or p^2, elements 0..q-1. Addition and multiplication come from tables;
// GF(p^2) elements are a + b x with x^2 = c1 x + c0 for a fixed irreducible polynomial.
class Field {
 public:
  explicit Field(int q) : q_(q) {
    if (q == 2 || q == 3 || q == 5 || q == 7) {
      p_ = q;
      e_ = 1;
    } else if (q == 4 || q == 9) {
      p_ = q == 4 ? 2 : 3;
      e_ = 2;
    } else {
      throw std::invalid_argument("unsupported field size");
    }
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = raw_add(a, b);
        mul_[a * q + b] = raw_mul(a, b);
      }
    neg_.assign(q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        if (add(a, b) == 0) neg_[a] = b;
  }

  int size() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

 private:
  // x^2 + x + 1 over F_2, x^2 + 1 over F_3: x^2 = -x - 1, resp. x^2 = -1.
  int c1() const { return p_ == 2 ? 1 : 0; }
  int c0() const { return p_ == 2 ? 1 : 2; }

  int raw_add(int a, int b) const {
    if (e_ == 1) return (a + b) % p_;
    return ((a % p_ + b % p_) % p_) + p_ * ((a / p_ + b / p_) % p_);
  }
  int raw_mul(int a, int b) const {
    if (e_ == 1) return (a * b) % p_;
    const int a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    // (a0 + a1 x)(b0 + b1 x) = a0 b0 + (a0 b1 + a1 b0) x + a1 b1 x^2
    const int hi = a1 * b1;
    const int r0 = (a0 * b0 + hi * c0()) % p_;
    const int r1 = (a0 * b1 + a1 * b0 + hi * c1()) % p_;
    return r0 + p_ * r1;
  }

  int q_, p_ = 0, e_ = 0;
  std::vector<int> add_, mul_, neg_;
};

inline int det(const Field& F, const std::vector<int>& m, int n) {
  if (n == 1) return m[0];
  if (n == 2) return F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]));
  // n == 3, cofactor expansion along the first row
  auto at = [&](int i, int j) { return m[i * 3 + j]; };
  int r = F.mul(at(0, 0), F.sub(F.mul(at(1, 1), at(2, 2)), F.mul(at(1, 2), at(2, 1))));
  r = F.sub(r, F.mul(at(0, 1), F.sub(F.mul(at(1, 0), at(2, 2)), F.mul(at(1, 2), at(2, 0)))));
  r = F.add(r, F.mul(at(0, 2), F.sub(F.mul(at(1, 0), at(2, 1)), F.mul(at(1, 1), at(2, 0)))));
  return r;
}

inline void for_each_matrix(const Field& F, int n, const std::function<void(const std::vector<int>&)>& f) {
  const int cells = n * n;
  std::vector<int> m(cells, 0);
  while (true) {
    f(m);
    int i = 0;
    while (i < cells && ++m[i] == F.size()) m[i++] = 0;
    if (i == cells) return;
  }
}

inline std::uint64_t count_gl(int n, int q) {
  const Field F(q);
  std::uint64_t c = 0;
  for_each_matrix(F, n, [&](const std::vector<int>& m) { c += det(F, m, n) != 0; });
  return c;
}

inline std::uint64_t count_sl(int n, int q) {
  const Field F(q);
  std::uint64_t c = 0;
  for_each_matrix(F, n, [&](const std::vector<int>& m) { c += det(F, m, n) == 1; });
  return c;
}

// 2x2 matrices A with A^T J A = J, J = [[0,1],[-1,0]].
inline std::uint64_t count_sp2(int q) {
  const Field F(q);
  std::uint64_t c = 0;
  for_each_matrix(F, 2, [&](const std::vector<int>& a) {
    // (A^T J A)_{01} = a00 a11 - a10 a01; the diagonal entries vanish identically.
    const int b01 = F.sub(F.mul(a[0], a[3]), F.mul(a[2], a[1]));
    const int b10 = F.sub(F.mul(a[1], a[2]), F.mul(a[3], a[0]));
    c += b01 == 1 && b10 == F.neg(1);
  });
  return c;
}

}  // namespace fq
