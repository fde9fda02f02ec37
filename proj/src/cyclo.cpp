#include "quadlin/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "quadlin/error.hpp"

namespace quadlin {

namespace {

struct PrimePart {
  long p;
  int k;
  long pk;      // p^k
  long top;     // p^(k-1)
  long m_inv;   // (n / p^k)^-1 mod p^k
};

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long inverse_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    long q = g / a1;
    long t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  return mod(x, m);
}

std::vector<std::pair<long, int>> factor(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<PrimePart> prime_parts(long n) {
  std::vector<PrimePart> parts;
  for (auto [p, k] : factor(n)) {
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    long m = n / pk;
    parts.push_back({p, k, pk, pk / p, pk == 1 ? 0 : inverse_mod(m, pk)});
  }
  return parts;
}

long digit(const PrimePart& part, long j) {
  return mod(j * part.m_inv, part.pk) / part.top;
}

// Rewrite a dense coefficient vector into the Zumbroich basis of order n.
std::vector<Cyclo::Term> canonicalize(long n, std::vector<mpq_class>& c) {
  for (const PrimePart& part : prime_parts(n)) {
    long step = n / part.p;
    for (long j = 0; j < n; ++j) {
      if (sgn(c[j]) == 0) continue;
      long d = digit(part, j);
      bool bad = part.p == 2 ? d == 1 : d == 0;
      if (!bad) continue;
      if (part.p == 2) {
        c[mod(j + step, n)] -= c[j];
      } else {
        for (long b = 1; b < part.p; ++b) c[mod(j + b * step, n)] -= c[j];
      }
      c[j] = 0;
    }
  }
  std::vector<Cyclo::Term> terms;
  for (long j = 0; j < n; ++j) {
    if (sgn(c[j]) != 0) terms.push_back({static_cast<int>(j), c[j]});
  }
  return terms;
}

std::vector<Cyclo::Term> merge(const std::vector<Cyclo::Term>& a,
                               const std::vector<Cyclo::Term>& b, int sign) {
  std::vector<Cyclo::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent, sign > 0 ? b[j].coeff : mpq_class(-b[j].coeff)});
      ++j;
    } else {
      mpq_class s = sign > 0 ? mpq_class(a[i].coeff + b[j].coeff)
                             : mpq_class(a[i].coeff - b[j].coeff);
      if (sgn(s) != 0) out.push_back({a[i].exponent, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

long lcm_checked(long a, long b) {
  long l = a / std::gcd(a, b) * b;
  if (l > kMaxCycloOrder) {
    throw Error(Error::Kind::OrderOverflow,
                "root-of-unity order " + std::to_string(l) + " exceeds bound " +
                    std::to_string(kMaxCycloOrder));
  }
  return l;
}

Cyclo::Cyclo(long value) {
  if (value != 0) terms_.push_back({0, mpq_class(value)});
}

Cyclo::Cyclo(const mpq_class& value) {
  if (sgn(value) == 0) return;
  terms_.push_back({0, value});
  terms_.back().coeff.canonicalize();
}

Cyclo Cyclo::root(long order, long exponent) {
  return from_terms(order, {{exponent, mpq_class(1)}});
}

Cyclo Cyclo::from_terms(long order,
                        const std::vector<std::pair<long, mpq_class>>& terms) {
  if (order <= 0) throw Error(Error::Kind::Parse, "root-of-unity order must be positive");
  if (order > kMaxCycloOrder) lcm_checked(order, 1);
  std::vector<mpq_class> dense(order);
  for (const auto& [e, c] : terms) dense[mod(e, order)] += c;
  return Cyclo(static_cast<int>(order), canonicalize(order, dense));
}

Cyclo Cyclo::lifted(int target) const {
  if (target == order_) return *this;
  long scale = target / order_;
  std::vector<mpq_class> dense(target);
  for (const Term& t : terms_) dense[t.exponent * scale] += t.coeff;
  return Cyclo(target, canonicalize(target, dense));
}

bool Cyclo::is_one() const {
  auto q = rational();
  return q && *q == 1;
}

std::optional<mpq_class> Cyclo::rational() const {
  if (terms_.empty()) return mpq_class(0);
  if (order_ == 1) return terms_.front().coeff;
  Cyclo r = reduced();
  if (r.order_ != 1) return std::nullopt;
  return r.terms_.empty() ? mpq_class(0) : r.terms_.front().coeff;
}

std::optional<long> Cyclo::integer() const {
  auto q = rational();
  if (!q || q->get_den() != 1 || !q->get_num().fits_slong_p()) return std::nullopt;
  return q->get_num().get_si();
}

Cyclo Cyclo::reduced() const {
  if (terms_.empty()) return Cyclo();
  Cyclo cur = *this;
  bool changed = true;
  while (changed && cur.order_ > 1) {
    changed = false;
    long n = cur.order_;
    for (const PrimePart& part : prime_parts(n)) {
      long p = part.p;
      std::vector<std::pair<long, mpq_class>> next;
      if (n % (p * p) == 0 || p == 2) {
        bool all = std::all_of(cur.terms_.begin(), cur.terms_.end(),
                               [p](const Term& t) { return t.exponent % p == 0; });
        if (!all) continue;
        for (const Term& t : cur.terms_) next.emplace_back(t.exponent / p, t.coeff);
      } else {
        // p || n, p odd: each orbit {j0 + b n/p : b = 1..p-1} must carry
        // one common coefficient c, which then equals -c * zeta^j0.
        long step = n / p;
        std::vector<std::pair<long, mpq_class>> groups;  // (j0, coeff)
        std::vector<std::pair<long, int>> counts;
        bool ok = true;
        for (const Term& t : cur.terms_) {
          long j0 = mod(t.exponent - digit(part, t.exponent) * step, n);
          auto it = std::find_if(groups.begin(), groups.end(),
                                 [j0](const auto& g) { return g.first == j0; });
          if (it == groups.end()) {
            groups.emplace_back(j0, t.coeff);
            counts.emplace_back(j0, 1);
          } else {
            if (it->second != t.coeff) {
              ok = false;
              break;
            }
            ++counts[it - groups.begin()].second;
          }
        }
        if (!ok) continue;
        if (!std::all_of(counts.begin(), counts.end(),
                         [p](const auto& c) { return c.second == p - 1; }))
          continue;
        for (const auto& [j0, c] : groups) next.emplace_back(j0 / p, mpq_class(-c));
      }
      cur = from_terms(n / p, next);
      changed = true;
      break;
    }
  }
  return cur;
}

std::string Cyclo::key() const { return to_string(*this); }

std::complex<double> Cyclo::float_view() const {
  std::complex<double> sum = 0.0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (const Term& t : terms_) {
    sum += t.coeff.get_d() * std::polar(1.0, two_pi * t.exponent / order_);
  }
  return sum;
}

Cyclo Cyclo::conjugate() const { return galois(-1); }

Cyclo Cyclo::galois(long k) const {
  if (order_ <= 2) return *this;
  if (std::gcd(mod(k, order_), static_cast<long>(order_)) != 1) {
    throw Error(Error::Kind::Internal, "galois exponent not coprime to order");
  }
  std::vector<std::pair<long, mpq_class>> t;
  t.reserve(terms_.size());
  for (const Term& term : terms_) t.emplace_back(term.exponent * k, term.coeff);
  return from_terms(order_, t);
}

Cyclo Cyclo::inverse() const {
  if (terms_.empty()) throw Error(Error::Kind::DivisionByZero, "inverse of zero");
  Cyclo x = order_ == 1 ? *this : reduced();
  if (x.order_ == 1) return Cyclo(mpq_class(1 / x.terms_.front().coeff));
  if (x.terms_.size() == 1) {
    // c * zeta^j
    const Term& t = x.terms_.front();
    return from_terms(x.order_, {{-t.exponent, mpq_class(1 / t.coeff)}});
  }
  Cyclo others(1L);
  for (long k = 2; k < x.order_; ++k) {
    if (std::gcd(k, static_cast<long>(x.order_)) == 1) others *= x.galois(k);
  }
  auto norm = (x * others).rational();
  if (!norm) throw Error(Error::Kind::Internal, "norm is not rational");
  return others * Cyclo(mpq_class(1 / *norm));
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  if (order_ == rhs.order_) {
    terms_ = merge(terms_, rhs.terms_, 1);
    if (terms_.empty()) order_ = 1;
    return *this;
  }
  int n = static_cast<int>(lcm_checked(order_, rhs.order_));
  *this = lifted(n);
  terms_ = merge(terms_, rhs.lifted(n).terms_, 1);
  if (terms_.empty()) order_ = 1;
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (order_ == rhs.order_) {
    terms_ = merge(terms_, rhs.terms_, -1);
    if (terms_.empty()) order_ = 1;
    return *this;
  }
  if (terms_.empty()) return *this = -rhs;
  int n = static_cast<int>(lcm_checked(order_, rhs.order_));
  *this = lifted(n);
  terms_ = merge(terms_, rhs.lifted(n).terms_, -1);
  return *this;
}

Cyclo operator*(const Cyclo& lhs, const Cyclo& rhs) {
  if (lhs.terms_.empty() || rhs.terms_.empty()) return Cyclo();
  if (lhs.order_ == 1 && lhs.terms_.size() == 1) {
    Cyclo out = rhs;
    for (auto& t : out.terms_) t.coeff *= lhs.terms_.front().coeff;
    return out;
  }
  if (rhs.order_ == 1 && rhs.terms_.size() == 1) {
    Cyclo out = lhs;
    for (auto& t : out.terms_) t.coeff *= rhs.terms_.front().coeff;
    return out;
  }
  long n = lcm_checked(lhs.order_, rhs.order_);
  long sa = n / lhs.order_, sb = n / rhs.order_;
  std::vector<mpq_class> dense(n);
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      dense[(a.exponent * sa + b.exponent * sb) % n] += a.coeff * b.coeff;
    }
  }
  return Cyclo(static_cast<int>(n), canonicalize(n, dense));
}

Cyclo& Cyclo::operator*=(const Cyclo& rhs) { return *this = *this * rhs; }

Cyclo& Cyclo::operator/=(const Cyclo& rhs) { return *this = *this / rhs; }

bool operator==(const Cyclo& lhs, const Cyclo& rhs) {
  if (lhs.order_ == rhs.order_) {
    if (lhs.terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
      if (lhs.terms_[i].exponent != rhs.terms_[i].exponent ||
          lhs.terms_[i].coeff != rhs.terms_[i].coeff)
        return false;
    }
    return true;
  }
  return (lhs - rhs).is_zero();
}

// ---------------------------------------------------------------- text

std::string to_string(const Cyclo& value) {
  Cyclo r = value.reduced();
  if (r.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : r.terms()) {
    mpq_class c = t.coeff;
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    mpq_class a = abs(c);
    if (t.exponent == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "E(" + std::to_string(r.order()) + ")^" + std::to_string(t.exponent);
  }
  return out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : s_(text) {}

  Cyclo parse() {
    skip();
    if (pos_ == s_.size()) fail("empty scalar");
    Cyclo total;
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip();
    }
    Cyclo t = term();
    total = sign > 0 ? t : -t;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip();
      Cyclo next = term();
      if (c == '+') total += next; else total -= next;
    }
    return total;
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Error::Kind::Parse, "scalar \"" + std::string(s_) + "\" at offset " +
                                        std::to_string(pos_) + ": " + what);
  }
  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  long small_integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && peek() == '-') {
      neg = true;
      ++pos_;
    }
    mpz_class v = integer();
    if (!v.fits_slong_p() || abs(v) > 1'000'000'000L) fail("integer too large");
    return neg ? -v.get_si() : v.get_si();
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  Cyclo atom() {
    expect('E');
    expect('(');
    long n = small_integer(false);
    if (n <= 0) fail("root-of-unity order must be positive");
    expect(')');
    long e = 1;
    skip();
    if (pos_ < s_.size() && peek() == '^') {
      ++pos_;
      e = small_integer(true);
    }
    if (n > kMaxCycloOrder) lcm_checked(n, 1);
    return Cyclo::root(n, e);
  }
  Cyclo term() {
    skip();
    if (pos_ < s_.size() && peek() == 'E') return atom();
    mpz_class num = integer();
    mpz_class den = 1;
    skip();
    if (pos_ < s_.size() && peek() == '/') {
      ++pos_;
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    skip();
    if (pos_ < s_.size() && peek() == '*') {
      ++pos_;
      return Cyclo(q) * atom();
    }
    return Cyclo(q);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

long legendre(long a, long p) {
  long r = 1, b = mod(a, p), e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// Positive square root of a prime, as a cyclotomic number.
Cyclo sqrt_prime(long p) {
  if (p == 2) return Cyclo::root(8, 1) - Cyclo::root(8, 3);
  std::vector<std::pair<long, mpq_class>> t;
  for (long a = 1; a < p; ++a) t.emplace_back(a, mpq_class(legendre(a, p)));
  Cyclo gauss = Cyclo::from_terms(p, t);
  if (p % 4 == 1) return gauss;
  return -Cyclo::root(4, 1) * gauss;
}

// Positive square root of q inside Q(zeta_field): q * d must be a square
// for some squarefree d dividing field (2 only when 8 divides field).
std::optional<Cyclo> sqrt_positive_rational(const mpq_class& q, long field) {
  const mpz_class n = q.get_num() * q.get_den();
  std::vector<long> primes;
  long rest = field;
  for (long p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    if (p != 2 || field % 8 == 0) primes.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
    long d = 1;
    Cyclo root_d(1L);
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) {
        d *= primes[i];
        root_d *= sqrt_prime(primes[i]);
      }
    const mpz_class nd = n * d;
    if (!mpz_perfect_square_p(nd.get_mpz_t())) continue;
    // sqrt(n) / den = sqrt(n d) sqrt(d) / (d den)
    return Cyclo(mpq_class(sqrt(nd), mpz_class(d) * q.get_den())) * root_d;
  }
  return std::nullopt;
}

std::optional<Cyclo> sqrt_rational(const mpq_class& q, long field) {
  if (sgn(q) == 0) return Cyclo();
  if (sgn(q) > 0) return sqrt_positive_rational(q, field);
  auto s = sqrt_positive_rational(-q, field);
  if (!s) return std::nullopt;
  return Cyclo::root(4, 1) * *s;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  return mpq_class(sqrt(q.get_num()), sqrt(q.get_den()));
}

std::optional<Cyclo> try_sqrt_impl(const Cyclo& value, long field) {
  Cyclo x = value.reduced();
  if (auto q = x.rational()) return sqrt_rational(*q, field);
  // x = s * u with s rational and u a root of unity
  if (auto norm = (x * x.conjugate()).rational()) {
    if (auto s = rational_sqrt(*norm)) {
      Cyclo u = x * Cyclo(mpq_class(1 / *s));
      long m = u.reduced().order();
      long big = lcm_checked(2, m);
      if (u.pow(big).is_one()) {
        for (long t = 0; t < big; ++t) {
          if (u == Cyclo::root(big, t)) {
            auto rs = sqrt_positive_rational(*s, field);
            if (!rs) return std::nullopt;
            return *rs * Cyclo::root(2 * big, t);
          }
        }
      }
      // x = a + b i: (c + d i)^2 = x with c^2 = (a + |x|) / 2
      if (x.order() == 4) {
        mpq_class a, b;
        for (const auto& t : x.terms()) (t.exponent == 0 ? a : b) = t.coeff;
        for (int sign : {1, -1}) {
          mpq_class c2 = (a + sign * *s) / 2;
          if (sgn(c2) <= 0) continue;
          auto c = sqrt_positive_rational(c2, field);
          if (!c) continue;
          Cyclo d = Cyclo(mpq_class(b / 2)) / *c;
          return *c + d * Cyclo::root(4, 1);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Cyclo parse_cyclo(std::string_view text) { return ScalarParser(text).parse(); }

std::optional<Cyclo> try_sqrt(const Cyclo& value) {
  try {
    // Gauss sums would otherwise drag in Q(zeta_p) for every prime p
    const long field = lcm_checked(value.reduced().order(), 8);
    auto r = try_sqrt_impl(value, field);
    if (r && (field % r->reduced().order() != 0 || *r * *r != value)) return std::nullopt;
    return r;
  } catch (const Error& e) {
    if (e.kind() == Error::Kind::OrderOverflow) return std::nullopt;
    throw;
  }
}

bool key_less(const Cyclo& lhs, const Cyclo& rhs) { return lhs.key() < rhs.key(); }

// ---------------------------------------------------------------- errors

const char* to_string(Error::Kind kind) noexcept {
  switch (kind) {
    case Error::Kind::DivisionByZero: return "DivisionByZero";
    case Error::Kind::OrderOverflow: return "OrderOverflow";
    case Error::Kind::Parse: return "Parse";
    case Error::Kind::CapExceeded: return "CapExceeded";
    case Error::Kind::NotInvertible: return "NotInvertible";
    case Error::Kind::BudgetExceeded: return "BudgetExceeded";
    case Error::Kind::InconsistentRep: return "InconsistentRep";
    case Error::Kind::NotACharacter: return "NotACharacter";
    case Error::Kind::NotIrreducible: return "NotIrreducible";
    case Error::Kind::NotASubgroup: return "NotASubgroup";
    case Error::Kind::NoInvariantForm: return "NoInvariantForm";
    case Error::Kind::Degenerate: return "Degenerate";
    case Error::Kind::NotGenericallyFree: return "NotGenericallyFree";
    case Error::Kind::DegenerateForm: return "DegenerateForm";
    case Error::Kind::FormNotInvariant: return "FormNotInvariant";
    case Error::Kind::DimensionTooSmall: return "DimensionTooSmall";
    case Error::Kind::UnknownEntry: return "UnknownEntry";
    case Error::Kind::BadParams: return "BadParams";
    case Error::Kind::Schema: return "Schema";
    case Error::Kind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_validation_error(Error::Kind kind) noexcept {
  switch (kind) {
    case Error::Kind::NotGenericallyFree:
    case Error::Kind::DegenerateForm:
    case Error::Kind::FormNotInvariant:
    case Error::Kind::DimensionTooSmall:
    case Error::Kind::NotInvertible:
    case Error::Kind::InconsistentRep:
    case Error::Kind::NoInvariantForm:
    case Error::Kind::Degenerate:
    case Error::Kind::NotASubgroup:
    case Error::Kind::UnknownEntry:
    case Error::Kind::BadParams:
    case Error::Kind::Schema:
    case Error::Kind::CapExceeded:
    case Error::Kind::OrderOverflow:
    case Error::Kind::DivisionByZero:
      return true;
    default:
      return false;
  }
}

}  // namespace quadlin
