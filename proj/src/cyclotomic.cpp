#include "alpharep/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "alpharep/errors.hpp"
#include "alpharep/linalg.hpp"

namespace alpharep {

unsigned euler_phi(unsigned n)
{
  unsigned r = n;
  for (auto p : prime_divisors(n))
    r = r / static_cast<unsigned>(p) * static_cast<unsigned>(p - 1);
  return r;
}

namespace {

struct Field {
  unsigned n = 1;
  unsigned phi = 1;
  // red[e] = coordinates of zeta^e in the power basis.
  std::vector<std::vector<long>> red;
};

std::vector<long> cyclotomic_poly(unsigned n)
{
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d)
      continue;
    auto q = cyclotomic_poly(d);
    // exact division by a monic polynomial
    std::vector<long> quot(p.size() - q.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
      long c = p[i + q.size() - 1];
      quot[i] = c;
      for (std::size_t j = 0; j < q.size(); ++j)
        p[i + j] -= c * q[j];
    }
    p = quot;
  }
  return p;
}

std::mutex cache_mutex;
std::map<unsigned, std::shared_ptr<const Field>> field_cache;

const Field &field(unsigned n)
{
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = field_cache.find(n);
  if (it != field_cache.end())
    return *it->second;
  auto f = std::make_shared<Field>();
  f->n = n;
  f->phi = euler_phi(n);
  auto poly = cyclotomic_poly(n);
  f->red.assign(n, std::vector<long>(f->phi, 0));
  for (unsigned e = 0; e < n; ++e) {
    if (e < f->phi) {
      f->red[e][e] = 1;
      continue;
    }
    const auto &prev = f->red[e - 1];
    auto &cur = f->red[e];
    long top = prev[f->phi - 1];
    for (unsigned i = f->phi; i-- > 1;)
      cur[i] = prev[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < f->phi; ++i)
      cur[i] -= top * poly[i];
  }
  const Field &ref = *f;
  field_cache.emplace(n, std::move(f));
  return ref;
}

// Generator of Gal(Q(zeta_n)/Q(zeta_t)), a cyclic group in every case used.
std::map<std::pair<unsigned, unsigned>, long> kernel_gen_cache;

long kernel_generator(unsigned n, unsigned t)
{
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = kernel_gen_cache.find({n, t});
    if (it != kernel_gen_cache.end())
      return it->second;
  }
  unsigned want = euler_phi(n) / euler_phi(t);
  long found = 1;
  for (unsigned k = 2; k < n && want > 1; ++k) {
    if (k % t != 1 % t || gcd_u64(k, n) != 1)
      continue;
    unsigned ord = 1;
    unsigned long x = k;
    while (x != 1) {
      x = x * k % n;
      ++ord;
    }
    if (ord == want) {
      found = k;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  kernel_gen_cache[{n, t}] = found;
  return found;
}

struct Descent {
  std::vector<unsigned> rows; // rows of the embedding used for solving
  MatQ inv;
};
std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Descent>> descent_cache;

const Descent &descent(unsigned n, unsigned t)
{
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = descent_cache.find({n, t});
    if (it != descent_cache.end())
      return *it->second;
  }
  const Field &fn = field(n);
  unsigned pt = euler_phi(t);
  // column i = zeta_t^i written in Q(zeta_n)
  MatQ emb(fn.phi, pt);
  for (unsigned i = 0; i < pt; ++i)
    for (unsigned r = 0; r < fn.phi; ++r)
      emb(r, i) = fn.red[(i * (n / t)) % n][r];
  auto e = rref<Rational>(MatQ(emb.transpose()));
  auto d = std::make_shared<Descent>();
  for (auto p : e.pivots)
    d->rows.push_back(static_cast<unsigned>(p));
  MatQ sq(pt, pt);
  for (unsigned i = 0; i < pt; ++i)
    sq.row(i) = emb.row(d->rows[i]);
  d->inv = *inverse<Rational>(sq);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, _] = descent_cache.emplace(std::make_pair(n, t), std::move(d));
  return *it->second;
}

} // namespace

Cyclotomic::Cyclotomic(const Rational &q)
{
  if (q != 0)
    c_.push_back(q);
}

Rational Cyclotomic::rational() const
{
  if (n_ != 1)
    throw DataError("value " + str() + " is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::zeta(unsigned n, long k)
{
  if (n == 0)
    throw InvalidArgument("E(0): zero conductor");
  long e = k % static_cast<long>(n);
  if (e < 0)
    e += n;
  std::vector<Rational> full(n, 0);
  full[e] = 1;
  return from_exponents(n, full);
}

Cyclotomic Cyclotomic::from_exponents(unsigned n, const std::vector<Rational> &full)
{
  if (n % 4 == 2) {
    // zeta_{2m} = -zeta_m^{(m+1)/2}
    unsigned m = n / 2;
    std::vector<Rational> half(m, 0);
    for (unsigned e = 0; e < n; ++e) {
      if (full[e] == 0)
        continue;
      unsigned ee = static_cast<unsigned>((static_cast<unsigned long>(e) * ((m + 1) / 2)) % m);
      if (e % 2)
        half[ee] -= full[e];
      else
        half[ee] += full[e];
    }
    return from_exponents(m, half);
  }
  const Field &f = field(n);
  std::vector<Rational> c(f.phi, 0);
  for (unsigned e = 0; e < n; ++e) {
    if (full[e] == 0)
      continue;
    const auto &r = f.red[e];
    for (unsigned i = 0; i < f.phi; ++i)
      if (r[i])
        c[i] += full[e] * r[i];
  }
  Cyclotomic out;
  bool nz = false;
  for (auto &x : c)
    if (x != 0) {
      nz = true;
      break;
    }
  if (!nz)
    return out;
  out.n_ = n;
  out.c_ = std::move(c);
  out.minimise();
  return out;
}

std::vector<Rational> Cyclotomic::exponents_in(unsigned m) const
{
  std::vector<Rational> full(m, 0);
  unsigned step = m / n_;
  for (std::size_t j = 0; j < c_.size(); ++j)
    full[j * step] = c_[j];
  return full;
}

void Cyclotomic::minimise()
{
  if (c_.empty()) {
    n_ = 1;
    return;
  }
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    for (auto p : prime_divisors(n_)) {
      unsigned t = n_ / static_cast<unsigned>(p);
      if (t % 4 == 2)
        t /= 2;
      long k = kernel_generator(n_, t);
      // apply sigma_k in place without minimising
      const Field &f = field(n_);
      std::vector<Rational> img(f.phi, 0);
      for (unsigned j = 0; j < f.phi; ++j) {
        if (c_[j] == 0)
          continue;
        const auto &r = f.red[(static_cast<unsigned long>(j) * k) % n_];
        for (unsigned i = 0; i < f.phi; ++i)
          if (r[i])
            img[i] += c_[j] * r[i];
      }
      if (img != c_)
        continue;
      const Descent &d = descent(n_, t);
      unsigned pt = euler_phi(t);
      std::vector<Rational> y(pt, 0);
      for (unsigned i = 0; i < pt; ++i)
        for (unsigned j = 0; j < pt; ++j)
          if (d.inv(i, j) != 0)
            y[i] += d.inv(i, j) * c_[d.rows[j]];
      n_ = t;
      c_ = std::move(y);
      changed = true;
      break;
    }
  }
  if (n_ == 1 && c_.size() == 1 && c_[0] == 0)
    c_.clear();
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic r = *this;
  for (auto &x : r.c_)
    x = -x;
  return r;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o)
{
  if (o.c_.empty())
    return *this;
  if (c_.empty())
    return *this = o;
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] += o.c_[i];
    if (n_ == 1) {
      if (c_[0] == 0)
        c_.clear();
      return *this;
    }
    // the sum may live in a smaller field
    std::vector<Rational> full = exponents_in(n_);
    return *this = from_exponents(n_, full);
  }
  unsigned l = static_cast<unsigned>(lcm_u64(n_, o.n_));
  auto a = exponents_in(l);
  auto b = o.exponents_in(l);
  for (unsigned i = 0; i < l; ++i)
    a[i] += b[i];
  return *this = from_exponents(l, a);
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o)
{
  return *this += -o;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &o)
{
  if (c_.empty() || o.c_.empty())
    return *this = Cyclotomic();
  if (n_ == 1 && o.n_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.n_ == 1) {
    for (auto &x : c_)
      x *= o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto &x : c_)
      x *= s;
    return *this;
  }
  unsigned l = static_cast<unsigned>(lcm_u64(n_, o.n_));
  unsigned sa = l / n_, sb = l / o.n_;
  std::vector<Rational> full(l, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0)
        continue;
      full[(i * sa + j * sb) % l] += c_[i] * o.c_[j];
    }
  }
  return *this = from_exponents(l, full);
}

Cyclotomic &Cyclotomic::operator/=(const Cyclotomic &o)
{
  if (o.c_.empty())
    throw InvalidArgument("division by zero");
  if (o.n_ == 1) {
    for (auto &x : c_)
      x /= o.c_[0];
    return *this;
  }
  // Solve o * y = 1 in Q(zeta_m) via the multiplication matrix of o.
  unsigned m = o.n_;
  const Field &f = field(m);
  MatQ mul(f.phi, f.phi);
  for (unsigned j = 0; j < f.phi; ++j) {
    Cyclotomic prod = o * zeta(m, j);
    auto full = prod.exponents_in(m);
    std::vector<Rational> col(f.phi, 0);
    for (unsigned e = 0; e < m; ++e) {
      if (full[e] == 0)
        continue;
      for (unsigned i = 0; i < f.phi; ++i)
        if (f.red[e][i])
          col[i] += full[e] * f.red[e][i];
    }
    for (unsigned i = 0; i < f.phi; ++i)
      mul(i, j) = col[i];
  }
  VecQ rhs = VecQ::Zero(f.phi);
  rhs(0) = 1;
  auto y = solve<Rational>(mul, rhs);
  std::vector<Rational> full(m, 0);
  for (unsigned i = 0; i < f.phi; ++i)
    full[i] = (*y)(i);
  return *this *= from_exponents(m, full);
}

std::strong_ordering operator<=>(const Cyclotomic &a, const Cyclotomic &b)
{
  if (a.n_ != b.n_)
    return a.n_ <=> b.n_;
  if (a.c_.size() != b.c_.size())
    return a.c_.size() <=> b.c_.size();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] < b.c_[i])
      return std::strong_ordering::less;
    if (b.c_[i] < a.c_[i])
      return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::str() const
{
  if (c_.empty())
    return "0";
  if (n_ == 1)
    return to_string(c_[0]);
  std::string out;
  std::string z = "E(" + std::to_string(n_) + ")";
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const Rational &c = c_[j];
    if (c == 0)
      continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string term;
    if (j == 0) {
      term = to_string(a);
    } else {
      std::string atom = j == 1 ? z : z + "^" + std::to_string(j);
      term = a == 1 ? atom : to_string(a) + "*" + atom;
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? "-" : "+") + term;
  }
  return out;
}

std::complex<double> Cyclotomic::approx() const
{
  std::complex<double> s = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / n_;
    s += c_[j].convert_to<double>() * std::polar(1.0, ang);
  }
  return s;
}

Cyclotomic conj(const Cyclotomic &a)
{
  return galois_apply(a, -1);
}

Cyclotomic galois_apply(const Cyclotomic &a, long k)
{
  unsigned n = a.n_;
  long kk = k % static_cast<long>(n);
  if (kk < 0)
    kk += n;
  if (gcd_u64(static_cast<std::uint64_t>(kk), n) != 1 && n != 1)
    throw InvalidArgument("galois_apply: exponent " + std::to_string(k) +
                          " not coprime to conductor " + std::to_string(n));
  if (n == 1)
    return a;
  std::vector<Rational> full(n, 0);
  for (std::size_t j = 0; j < a.c_.size(); ++j)
    full[(j * kk) % n] += a.c_[j];
  return Cyclotomic::from_exponents(n, full);
}

std::int64_t to_rational_integer(const Cyclotomic &a)
{
  if (!a.is_rational())
    throw DataError("value " + a.str() + " is not rational");
  return to_int64(a.rational());
}

// ---- parser ----

namespace {

class Parser {
public:
  explicit Parser(const std::string &s) : s_(s) {}

  Cyclotomic parse()
  {
    skip();
    if (i_ >= s_.size())
      throw ParseError("empty expression", i_);
    Cyclotomic v = expr();
    skip();
    if (i_ != s_.size())
      throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return v;
  }

private:
  void skip()
  {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }
  bool eat(char c)
  {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Integer number()
  {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      ++i_;
    if (b == i_)
      throw ParseError("expected a number", b);
    return Integer(s_.substr(b, i_ - b));
  }
  Cyclotomic expr()
  {
    Cyclotomic v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Cyclotomic term()
  {
    Cyclotomic v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        std::size_t at = i_;
        Cyclotomic d = unary();
        if (d.is_zero())
          throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }
  Cyclotomic unary()
  {
    if (eat('-'))
      return -unary();
    if (eat('+'))
      return unary();
    return power();
  }
  Cyclotomic power()
  {
    Cyclotomic base = atom();
    if (!eat('^'))
      return base;
    bool neg = eat('-');
    std::size_t at = i_;
    Integer e = number();
    if (e > 100000)
      throw ParseError("exponent too large", at);
    long k = e.convert_to<long>();
    if (neg) {
      if (base.is_zero())
        throw ParseError("division by zero", at);
      base = Cyclotomic(1) / base;
    }
    Cyclotomic r(1);
    for (long j = 0; j < k; ++j)
      r *= base;
    return r;
  }
  Cyclotomic atom()
  {
    skip();
    if (i_ >= s_.size())
      throw ParseError("unexpected end of input", i_);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Cyclotomic v = expr();
      if (!eat(')'))
        throw ParseError("expected ')'", i_);
      return v;
    }
    if (c == 'E') {
      ++i_;
      if (!eat('('))
        throw ParseError("expected '(' after E", i_);
      std::size_t at = i_;
      Integer n = number();
      if (n == 0)
        throw ParseError("zero conductor", at);
      if (n > 100000)
        throw ParseError("conductor too large", at);
      if (!eat(')'))
        throw ParseError("expected ')'", i_);
      return Cyclotomic::zeta(n.convert_to<unsigned>(), 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Cyclotomic(Rational(number()));
    throw ParseError("unexpected '" + std::string(1, c) + "'", i_);
  }

  const std::string &s_;
  std::size_t i_ = 0;
};

} // namespace

Cyclotomic parse_cyclotomic(const std::string &text)
{
  return Parser(text).parse();
}

} // namespace alpharep
