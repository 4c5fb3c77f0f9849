#include "qgiso/linalg.hpp"

#include <mutex>

#include "qgiso/error.hpp"

namespace qg {

Integer det_bareiss(SquareMatrix<Integer> m) {
  const std::size_t n = m.n;
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = m(i, j);
        x *= m(k, k);
        mpz_submul(x.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Integer(-m(n - 1, n - 1));
}

Rational det_rational(SquareMatrix<Rational> m) {
  const std::size_t n = m.n;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m(r, k) == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  det.canonicalize();
  return det;
}

IntPoly interpolate_integer(std::span<const Integer> xs, std::span<const Integer> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw InvalidArgument("interpolation needs one value per point");
  // Newton divided differences over Q, then expansion to the monomial basis.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  std::vector<Rational> coeffs(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    // coeffs = coeffs * (z - xs[k]) + dd[k]
    for (std::size_t j = n - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - coeffs[j] * Rational(xs[k]);
    coeffs[0] = -coeffs[0] * Rational(xs[k]);
    coeffs[0] += dd[k];
  }
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    coeffs[i].canonicalize();
    if (coeffs[i].get_den() != 1) throw InternalError("interpolated polynomial is not integral");
    out[i] = coeffs[i].get_num();
  }
  return IntPoly(std::move(out));
}

namespace modp {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d : {2U, 3U, 5U, 7U, 11U, 13U})
    if (n % d == 0) return n == d;
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint32_t a : {2U, 7U, 61U}) {  // deterministic below 2^32
    std::uint32_t x = pow(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw InternalError("modular inverse of zero");
  return pow(a, p - 2, p);
}

std::uint32_t reduce(const Integer& x, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), p));
}

std::uint32_t reduce(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t prime(std::size_t index) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  std::uint32_t candidate = primes.empty() ? (1U << 31) - 1 : primes.back() - 2;
  while (primes.size() <= index) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[index];
}

std::uint32_t det(std::vector<std::uint32_t>& a, std::size_t n, std::uint32_t p) {
  std::uint32_t result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a[r * n + k] == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      result = p - result == p ? 0 : p - result;
    }
    const std::uint32_t pivot = a[k * n + k];
    result = mul(result, pivot, p);
    const std::uint32_t pinv = inv(pivot, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint32_t f = a[i * n + k];
      if (f == 0) continue;
      f = mul(f, pinv, p);
      const std::uint32_t* rowk = &a[k * n];
      std::uint32_t* rowi = &a[i * n];
      for (std::size_t j = k + 1; j < n; ++j) rowi[j] = sub(rowi[j], mul(f, rowk[j], p), p);
    }
  }
  return result;
}

std::vector<std::uint32_t> interpolate(std::span<const std::uint32_t> xs, std::span<const std::uint32_t> ys,
                                       std::uint32_t p) {
  const std::size_t n = xs.size();
  std::vector<std::uint32_t> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = mul(sub(dd[i], dd[i - 1], p), inv(sub(xs[i], xs[i - level], p), p), p);
      if (i == level) break;
    }
  std::vector<std::uint32_t> c(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    const std::uint32_t x = xs[k];
    for (std::size_t j = n - 1; j > 0; --j) c[j] = sub(c[j - 1], mul(c[j], x, p), p);
    c[0] = add(sub(0, mul(c[0], x, p), p), dd[k], p);
  }
  return c;
}

}  // namespace modp

void CrtVector::add(std::span<const std::uint32_t> residues, std::uint32_t p) {
  if (residues.size() != values_.size()) throw InvalidArgument("CRT residue count mismatch");
  // x' = x + M * ((r - x) * M^-1 mod p)
  const std::uint32_t minv = modp::inv(modp::reduce(modulus_, p), p);
  Integer t;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const std::uint32_t cur = modp::reduce(values_[i], p);
    const std::uint32_t k = modp::mul(modp::sub(residues[i], cur, p), minv, p);
    if (k == 0) continue;
    mpz_mul_ui(t.get_mpz_t(), modulus_.get_mpz_t(), k);
    values_[i] += t;
  }
  modulus_ *= p;
}

std::vector<Integer> CrtVector::symmetric() const {
  std::vector<Integer> out = values_;
  Integer half = modulus_ / 2;
  for (auto& v : out)
    if (v > half) v -= modulus_;
  return out;
}

}  // namespace qg
