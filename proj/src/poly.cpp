#include "qgiso/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qgiso/error.hpp"

namespace qg {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::power_minus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::power_plus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[0] = 1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t IntPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  Integer c = content();
  if (leading() < 0) c = -c;
  return divexact(c);
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::inflate(std::size_t k) const {
  if (k == 1 || is_zero()) return *this;
  if (k == 0) throw InvalidArgument("inflate by zero");
  std::vector<Integer> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPoly(std::move(v));
}

std::size_t IntPoly::exponent_gcd() const {
  std::size_t g = 0;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) g = std::gcd(g, i);
  if (g == 0 && !is_zero()) return 1;  // constant polynomial
  return g;
}

IntPoly IntPoly::deflate(std::size_t d) const {
  if (d <= 1 || is_zero()) return *this;
  std::vector<Integer> v((coeffs_.size() - 1) / d + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (i % d != 0) throw InvalidArgument("deflate: exponent not divisible");
    v[i / d] = coeffs_[i];
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::without_monomial_factor() const {
  std::size_t k = valuation();
  if (k == 0) return *this;
  return IntPoly(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  acc.canonicalize();
  return acc;
}

long double IntPoly::eval_approx(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::divexact(const Integer& c) const {
  if (c == 0) throw InvalidArgument("division by zero");
  IntPoly r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw InternalError("inexact integer division of polynomial coefficients");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || k == 0) os << a;
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly b = base;
  while (exponent) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent) b = b * b;
  }
  return result;
}

IntPoly divide_if_exact(const IntPoly& a, const IntPoly& b, bool& ok) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  ok = true;
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) {
    ok = false;
    return {};
  }
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const Integer& lb = b.leading();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> q(rem.size() - db);
  Integer t;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lb.get_mpz_t())) {
      ok = false;
      return {};
    }
    mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), lb.get_mpz_t());
    const std::size_t shift = k - db;
    q[shift] = t;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
  }
  for (std::size_t k = 0; k < db; ++k)
    if (rem[k] != 0) {
      ok = false;
      return {};
    }
  return IntPoly(std::move(q));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  bool ok = false;
  IntPoly q = divide_if_exact(a, b, ok);
  if (!ok) throw InternalError("polynomial division is not exact");
  return q;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidArgument("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const Integer& lb = b.leading();
  const std::size_t db = bc.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    Integer t = rem[k];
    for (auto& r : rem) r *= lb;
    if (t != 0) {
      const std::size_t shift = k - db;
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
    rem.pop_back();
  }
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive() * b.content();
  if (b.is_zero()) return a.primitive() * a.content();
  Integer c;
  Integer ca = a.content();
  Integer cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly x = a.primitive();
  IntPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? IntPoly{} : r.primitive();
  }
  return x.primitive() * c;
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  // A_0 = p, A_i = gcd(A_{i-1}, A_{i-1}'), B_i = A_{i-1} / A_i, f_i = B_i / B_{i+1}.
  // All quotients are of primitive polynomials, hence exact in Z[z].
  if (p.degree() <= 0) return {};
  IntPoly a = p.primitive();
  std::vector<IntPoly> b;
  while (a.degree() > 0) {
    IntPoly next = gcd(a, a.derivative()).primitive();
    b.push_back(divexact(a, next).primitive());
    a = std::move(next);
  }
  std::vector<IntPoly> out;
  out.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    IntPoly f = (i + 1 < b.size()) ? divexact(b[i], b[i + 1]).primitive() : b[i];
    out.push_back(f.degree() <= 0 ? IntPoly::constant(1) : f);
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

std::vector<std::size_t> totients(std::size_t n) {
  std::vector<std::size_t> phi(n + 1);
  std::iota(phi.begin(), phi.end(), std::size_t{0});
  for (std::size_t p = 2; p <= n; ++p) {
    if (phi[p] != p) continue;
    for (std::size_t m = p; m <= n; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

std::vector<std::size_t> orders_with_totient_at_most(std::size_t bound) {
  // phi(n) >= sqrt(n/2), so n <= 2*bound^2 suffices.
  const std::size_t limit = std::max<std::size_t>(2, 2 * bound * bound);
  auto phi = totients(limit);
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= limit; ++n)
    if (phi[n] <= bound) out.push_back(n);
  return out;
}

namespace {

const IntPoly& cyclotomic_locked(std::map<std::size_t, IntPoly>& cache, std::size_t n) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IntPoly p = IntPoly::power_minus_one(n);
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0) p = divexact(p, cyclotomic_locked(cache, d));
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace

const IntPoly& cyclotomic(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, IntPoly> cache;
  if (n == 0) throw InvalidArgument("cyclotomic polynomial of order 0");
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(cache, n);
}

unsigned multiplicity(IntPoly p, const IntPoly& factor) {
  if (p.is_zero()) throw InvalidArgument("multiplicity in the zero polynomial");
  if (factor.degree() <= 0) throw InvalidArgument("multiplicity of a constant factor");
  unsigned m = 0;
  for (;;) {
    bool ok = false;
    IntPoly q = divide_if_exact(p, factor, ok);
    if (!ok) return m;
    p = std::move(q);
    ++m;
  }
}

bool proportional(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.primitive() == b.primitive();
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(std::vector<IntPoly> w_coeffs) : terms_(std::move(w_coeffs)) { trim(); }

void BiPoly::trim() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

IntPoly BiPoly::w_coeff(std::size_t j) const { return j < terms_.size() ? terms_[j] : IntPoly{}; }

Integer BiPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    Integer c = t.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

IntPoly BiPoly::z_content() const {
  IntPoly g;
  for (const auto& t : terms_) g = gcd(g, t);
  return g;
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return {};
  Integer c = content();
  if (terms_.back().leading() < 0) c = -c;
  std::vector<IntPoly> t;
  t.reserve(terms_.size());
  for (const auto& p : terms_) t.push_back(p.divexact(c));
  return BiPoly(std::move(t));
}

BiPoly BiPoly::divexact(const IntPoly& f) const {
  std::vector<IntPoly> t;
  t.reserve(terms_.size());
  for (const auto& p : terms_) t.push_back(qg::divexact(p, f));
  return BiPoly(std::move(t));
}

IntPoly BiPoly::specialize_w_power(std::size_t m) const {
  IntPoly r;
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    std::vector<Integer> shifted(j * m, Integer(0));
    const auto& c = terms_[j].coeffs();
    shifted.insert(shifted.end(), c.begin(), c.end());
    r += IntPoly(std::move(shifted));
  }
  return r;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = terms_.size(); j-- > 0;) {
    if (terms_[j].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << terms_[j].to_string() << ")";
    if (j > 0) os << "*w" << (j > 1 ? "^" + std::to_string(j) : "");
    first = false;
  }
  return os.str();
}

}  // namespace qg
