#include "mctool/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

namespace mctool {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OrderOverflow: return "OrderOverflow";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::EigenvalueOutsideCandidates: return "EigenvalueOutsideCandidates";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::PunctureMismatch: return "PunctureMismatch";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LambdaIsOne: return "LambdaIsOne";
    case ErrorKind::PropertyTFailed: return "PropertyTFailed";
    case ErrorKind::HasGlobalSections: return "HasGlobalSections";
    case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownOp: return "UnknownOp";
    case ErrorKind::UndefinedName: return "UndefinedName";
    case ErrorKind::CyclotomicOrderMismatch: return "CyclotomicOrderMismatch";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ProductRelationViolated: return "ProductRelationViolated";
    case ErrorKind::StepFailed: return "StepFailed";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Integer helpers

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Exact division of p by a monic polynomial m; the remainder must vanish.
IntPoly divide_exact(const IntPoly& p, const IntPoly& m) {
  IntPoly rem = p;
  const std::size_t dm = m.size() - 1;
  IntPoly quot(rem.size() - dm, 0);
  for (std::size_t k = rem.size(); k-- > dm;) {
    Integer c = rem[k];
    if (c == 0) continue;
    quot[k - dm] = c;
    for (std::size_t j = 0; j <= dm; ++j) rem[k - dm + j] -= c * m[j];
  }
  for (std::size_t k = 0; k < dm; ++k) {
    if (rem[k] != 0) throw Error(ErrorKind::InternalCheckFailed, "inexact polynomial division");
  }
  return quot;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::BadParameters, "cyclotomic order must be positive");
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint64_t d : divisors(n)) {
    if (d == n) break;
    p = divide_exact(p, CyclotomicField::get(d).modulus());
  }
  return p;
}

std::uint64_t max_cyclotomic_order() {
  static const std::uint64_t bound = [] {
    if (const char* env = std::getenv("MCTOOL_MAX_ORDER")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(1000000);
  }();
  return bound;
}

std::uint64_t checked_order_lcm(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t l = a / g * b;
  if (l > max_cyclotomic_order()) {
    throw Error(ErrorKind::OrderOverflow, "lcm(" + std::to_string(a) + ", " + std::to_string(b) +
                                              ") exceeds bound " + std::to_string(max_cyclotomic_order()));
  }
  return l;
}

// ---------------------------------------------------------------------------
// CyclotomicField

const CyclotomicField& CyclotomicField::get(std::uint64_t order) {
  static std::recursive_mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<CyclotomicField>> registry;
  if (order == 0) throw Error(ErrorKind::BadParameters, "cyclotomic order must be positive");
  if (order > max_cyclotomic_order()) {
    throw Error(ErrorKind::OrderOverflow, "order " + std::to_string(order) + " exceeds bound");
  }
  std::lock_guard lock(mutex);
  auto it = registry.find(order);
  if (it != registry.end()) return *it->second;
  // Construction recurses into get() for proper divisors, hence the recursive mutex.
  std::unique_ptr<CyclotomicField> field(new CyclotomicField(order));
  auto& slot = registry[order];
  slot = std::move(field);
  return *slot;
}

CyclotomicField::CyclotomicField(std::uint64_t order)
    : order_(order), degree_(static_cast<std::size_t>(euler_phi(order))) {
  if (order == 1) {
    modulus_ = {Integer(-1), Integer(1)};
  } else {
    modulus_ = cyclotomic_polynomial(order);
  }
  for (std::size_t j = 0; j < degree_; ++j) {
    if (modulus_[j] != 0) tail_.emplace_back(j, modulus_[j]);
  }
}

void CyclotomicField::reduce(std::vector<Integer>& v) const {
  for (std::size_t k = v.size(); k-- > degree_;) {
    if (v[k] == 0) continue;
    const Integer c = v[k];
    for (const auto& [j, t] : tail_) v[k - degree_ + j] -= c * t;
  }
  v.resize(degree_);
}

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum() : CycNum(&CyclotomicField::get(1), {Integer(0)}, Integer(1)) {}

CycNum::CycNum(long value) : CycNum(&CyclotomicField::get(1), {Integer(value)}, Integer(1)) {}

CycNum::CycNum(const Rational& value, std::uint64_t order)
    : field_(&CyclotomicField::get(order)), num_(field_->degree(), 0), den_(value.get_den()) {
  num_[0] = value.get_num();
}

CycNum::CycNum(const CyclotomicField* field, std::vector<Integer> num, Integer den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycNum CycNum::zero(std::uint64_t order) { return CycNum(Rational(0), order); }
CycNum CycNum::one(std::uint64_t order) { return CycNum(Rational(1), order); }

CycNum CycNum::from_coeffs(std::uint64_t order, const std::vector<Rational>& coeffs) {
  const CyclotomicField& f = CyclotomicField::get(order);
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> num(std::max(coeffs.size(), f.degree()), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  f.reduce(num);
  return CycNum(&f, std::move(num), std::move(den));
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  Integer g = den_;
  bool all_zero = true;
  for (const auto& c : num_) {
    if (c != 0) {
      all_zero = false;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  den_ /= g;
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Rational CycNum::coeff(std::size_t i) const {
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycNum::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycNum::is_one() const { return den_ == 1 && num_[0] == 1 && is_rational(); }

void CycNum::align(CycNum& a, CycNum& b) {
  if (a.field_ == b.field_) return;
  std::uint64_t l = checked_order_lcm(a.order(), b.order());
  if (a.order() != l) a = a.embed(l);
  if (b.order() != l) b = b.embed(l);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  if (field_ != other.field_) {
    CycNum b = other;
    align(*this, b);
    return *this += b;
  }
  if (other.is_zero()) return *this;
  if (den_ == other.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= other.den_;
      num_[i] += other.num_[i] * den_;
    }
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) { return *this += -other; }

void CycNum::scale_rational(const Integer& num, const Integer& den) {
  for (auto& c : num_) c *= num;
  den_ *= den;
  normalize();
}

CycNum& CycNum::operator*=(const CycNum& other) {
  if (field_ != other.field_) {
    CycNum b = other;
    align(*this, b);
    return *this *= b;
  }
  if (other.is_rational()) {
    scale_rational(other.num_[0], other.den_);
    return *this;
  }
  if (is_rational()) {
    Integer n = num_[0], d = den_;
    *this = other;
    scale_rational(n, d);
    return *this;
  }
  const std::size_t deg = num_.size();
  std::vector<Integer> prod(2 * deg - 1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (other.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), other.num_[j].get_mpz_t());
    }
  }
  field_->reduce(prod);
  num_ = std::move(prod);
  den_ *= other.den_;
  normalize();
  return *this;
}

namespace {

// Solves M x = b over Q by Gauss-Jordan elimination; M is square and
// nonsingular (checked).
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::DivisionByZero, "singular system");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

CycNum CycNum::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    Rational r(den_, num_[0]);
    r.canonicalize();
    return CycNum(r, order());
  }
  // Solve (num-poly) * b = 1 through the multiplication matrix over Q, then
  // rescale by the denominator.
  const std::size_t deg = num_.size();
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg));
  std::vector<Integer> col(num_);
  for (std::size_t j = 0; j < deg; ++j) {
    for (std::size_t i = 0; i < deg; ++i) m[i][j] = col[i];
    col.insert(col.begin(), Integer(0));
    field_->reduce(col);
  }
  std::vector<Rational> rhs(deg, 0);
  rhs[0] = 1;
  std::vector<Rational> x = solve_rational(std::move(m), std::move(rhs));
  for (auto& c : x) c *= den_;
  return from_coeffs(order(), x);
}

CycNum& CycNum::operator/=(const CycNum& other) { return *this *= other.inv(); }

CycNum CycNum::pow(long long e) const {
  CycNum base = e < 0 ? inv() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  CycNum result = one(order());
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

CycNum CycNum::embed(std::uint64_t target) const {
  if (target == order()) return *this;
  if (target % order() != 0) {
    throw Error(ErrorKind::NotADivisor,
                std::to_string(order()) + " does not divide " + std::to_string(target));
  }
  const CyclotomicField& f = CyclotomicField::get(target);
  const std::uint64_t step = target / order();
  std::vector<Integer> v(std::max<std::size_t>(f.degree(), (num_.size() - 1) * step + 1), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) v[i * step] = num_[i];
  f.reduce(v);
  return CycNum(&f, std::move(v), den_);
}

CycNum CycNum::project(std::uint64_t target) const {
  if (target == order()) return *this;
  if (order() % target != 0) {
    throw Error(ErrorKind::NotADivisor,
                std::to_string(target) + " does not divide " + std::to_string(order()));
  }
  // Find b in Q(zeta_M) with embed(b) == *this: solve against the images of
  // the subfield power basis using the first independent coordinates.
  const CyclotomicField& sub = CyclotomicField::get(target);
  const std::size_t k = sub.degree();
  const std::size_t n = num_.size();
  std::vector<std::vector<Rational>> cols;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> basis(k, 0);
    basis[j] = 1;
    cols.push_back(from_coeffs(target, basis).embed(order()).coeffs());
  }
  // Augmented system n x (k + 1), reduced to echelon form.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = cols[j][i];
    aug[i][k] = coeff(i);
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t piv = row;
    while (piv < n && aug[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(aug[piv], aug[row]);
    Rational inv = 1 / aug[row][c];
    for (auto& x : aug[row]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (std::size_t j = 0; j <= k; ++j) aug[r][j] -= f * aug[row][j];
    }
    ++row;
  }
  for (std::size_t r = row; r < n; ++r) {
    if (aug[r][k] != 0) {
      throw Error(ErrorKind::InternalCheckFailed, to_string() + " is not in Q(zeta_" + std::to_string(target) + ")");
    }
  }
  std::vector<Rational> x(k, 0);
  for (std::size_t r = 0; r < row; ++r) x[r] = aug[r][k];
  return from_coeffs(target, x);
}

CycNum CycNum::galois(long long k) const {
  const auto n = static_cast<long long>(order());
  long long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1 && n > 1) {
    throw Error(ErrorKind::BadParameters, "Galois exponent must be a unit modulo the order");
  }
  std::vector<Integer> v(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    v[static_cast<std::size_t>((static_cast<long long>(i) * kk) % n)] += num_[i];
  }
  // x^n = 1 was used to fold exponents; reduce the remaining range mod Phi_N.
  field_->reduce(v);
  return CycNum(field_, std::move(v), den_);
}

std::uint64_t CycNum::root_of_unity_order() const {
  const std::uint64_t n = order() % 2 == 0 ? order() : 2 * order();
  for (std::uint64_t d : divisors(n)) {
    if (pow(static_cast<long long>(d)).is_one()) return d;
  }
  return 0;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.field_ != b.field_) {
    CycNum x = a, y = b;
    CycNum::align(x, y);
    return x == y;
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string CycNum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational c = coeff(i);
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else {
      std::string mono = i == 1 ? "z" : "z^" + std::to_string(i);
      if (c == 1) {
        term = mono;
      } else if (c == -1) {
        term = "-" + mono;
      } else {
        term = c.get_str() + "*" + mono;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

CycNum root_of_unity(std::uint64_t n, long long k) {
  const CyclotomicField& f = CyclotomicField::get(n);
  const auto nn = static_cast<long long>(n);
  auto e = static_cast<std::size_t>(((k % nn) + nn) % nn);
  std::vector<Rational> c(e + 1, 0);
  c[e] = 1;
  return CycNum::from_coeffs(f.order(), c);
}

CycNum embed(const CycNum& a, std::uint64_t target_order) { return a.embed(target_order); }

std::vector<CycNum> roots_of_unity_in_field(std::uint64_t order) {
  std::vector<CycNum> out;
  if (order % 2 == 0) {
    for (std::uint64_t k = 0; k < order; ++k) out.push_back(root_of_unity(order, static_cast<long long>(k)));
  } else {
    // -zeta_N generates the 2N-th roots of unity.
    CycNum gen = -root_of_unity(order, 1);
    CycNum x = CycNum::one(order);
    for (std::uint64_t k = 0; k < 2 * order; ++k) {
      out.push_back(x);
      x *= gen;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser for the scalar syntax.

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, std::uint64_t order) : text_(text), order_(order) {}

  CycNum parse() {
    CycNum v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" +
                                          std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  CycNum expr() {
    CycNum acc = CycNum::zero(order_);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      CycNum t = term();
      if (sign < 0) acc -= t; else acc += t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  CycNum term() {
    CycNum acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        CycNum d = factor();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else if (c == 'z' || c == '(') {
        acc *= factor();  // implicit multiplication, e.g. "2z"
      } else {
        break;
      }
    }
    return acc;
  }

  long long integer_literal() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long long v = std::stoll(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  CycNum factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      CycNum v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'z') {
      ++pos_;
      long long e = 1;
      if (peek() == '^') {
        ++pos_;
        if (peek() == '(') {
          ++pos_;
          e = integer_literal();
          if (peek() != ')') fail("expected ')'");
          ++pos_;
        } else {
          e = integer_literal();
        }
      }
      return root_of_unity(order_, e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return CycNum(Rational(Integer(std::string(text_.substr(start, pos_ - start)))), order_);
    }
    fail("expected number, 'z' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint64_t order_;
};

}  // namespace

CycNum parse_cycnum(std::string_view text, std::uint64_t order) { return ScalarParser(text, order).parse(); }

}  // namespace mctool
