#include "gsurf/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "gsurf/errors.hpp"

namespace gsurf {

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }
long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<Integer>;  // lowest degree first

// Exact division of integer polynomials by a monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {Integer(0)};
  Poly quot(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) require(num[i] == 0, "cyclotomic polynomial division not exact");
  return quot;
}

Poly phi_polynomial(int n) {
  Poly num(static_cast<std::size_t>(n) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_monic(num, phi_polynomial(d));
  }
  return num;
}

}  // namespace

CyclotomicField::CyclotomicField(int conductor) : conductor_(conductor), degree_(euler_phi(conductor)) {
  if (conductor < 1) throw ValidationError("cyclotomic conductor must be positive");
  phi_ = phi_polynomial(conductor);
  require(static_cast<int>(phi_.size()) == degree_ + 1, "Phi_e has wrong degree");
  const auto d = static_cast<std::size_t>(degree_);
  powers_.reserve(static_cast<std::size_t>(conductor));
  std::vector<Integer> cur(d, Integer(0));
  cur[0] = 1;
  for (int k = 0; k < conductor; ++k) {
    powers_.push_back(cur);
    // multiply by x, then fold the x^d term back using the monic Phi_e
    Integer top = cur[d - 1];
    for (std::size_t j = d - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t j = 0; j < d; ++j) cur[j] -= top * phi_[j];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int conductor) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const CyclotomicField>(conductor);
  cache.emplace(conductor, field);
  return field;
}

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& value, int conductor) : field_(CyclotomicField::get(conductor)) {
  coeffs_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  require(static_cast<int>(coeffs_.size()) == field_->degree(), "cyclotomic coefficient vector has wrong length");
  for (auto& c : coeffs_) c.canonicalize();
}

Cyclotomic Cyclotomic::zeta(int conductor, long k) {
  auto field = CyclotomicField::get(conductor);
  const auto& p = field->power(static_cast<int>(mod_floor(k, conductor)));
  std::vector<Rational> c(p.begin(), p.end());
  return Cyclotomic(field, std::move(c));
}

Cyclotomic Cyclotomic::embed(int f) const {
  const int e = conductor();
  if (f == e) return *this;
  if (f % e != 0) throw ValidationError("cannot embed Q(zeta_" + std::to_string(e) + ") into Q(zeta_" +
                                        std::to_string(f) + ")");
  auto target = CyclotomicField::get(f);
  std::vector<Rational> out(static_cast<std::size_t>(target->degree()), Rational(0));
  const int step = f / e;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& p = target->power(static_cast<int>(j) * step);
    for (std::size_t t = 0; t < out.size(); ++t)
      if (p[t] != 0) out[t] += coeffs_[j] * Rational(p[t]);
  }
  return Cyclotomic(target, std::move(out));
}

Cyclotomic Cyclotomic::galois(long k) const {
  const int e = conductor();
  if (gcd_l(mod_floor(k, e), e) != 1 && e != 1)
    throw ValidationError("Galois exponent " + std::to_string(k) + " is not coprime to conductor " +
                          std::to_string(e));
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& p = field_->power(static_cast<int>(mod_floor(static_cast<long>(j) * k, e)));
    for (std::size_t t = 0; t < out.size(); ++t)
      if (p[t] != 0) out[t] += coeffs_[j] * Rational(p[t]);
  }
  return Cyclotomic(field_, std::move(out));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return std::nullopt;
  return coeffs_[0];
}

std::optional<Integer> Cyclotomic::as_integer() const {
  auto r = as_rational();
  if (!r || r->get_den() != 1) return std::nullopt;
  return Integer(r->get_num());
}

std::complex<double> Cyclotomic::to_complex(long k) const {
  std::complex<double> z(0.0, 0.0);
  const double e = conductor();
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) * static_cast<double>(j) / e;
    z += coeffs_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.conductor() != conductor()) {
    const int f = static_cast<int>(lcm_l(conductor(), other.conductor()));
    *this = embed(f);
    return *this += other.embed(f);
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.conductor() != conductor()) {
    const int f = static_cast<int>(lcm_l(conductor(), other.conductor()));
    *this = embed(f);
    return *this *= other.embed(f);
  }
  const int e = conductor();
  std::vector<Rational> acc(static_cast<std::size_t>(e), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      acc[(i + j) % static_cast<std::size_t>(e)] += coeffs_[i] * other.coeffs_[j];
    }
  }
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] == 0) continue;
    const auto& p = field_->power(static_cast<int>(k));
    for (std::size_t t = 0; t < out.size(); ++t)
      if (p[t] != 0) out[t] += acc[k] * Rational(p[t]);
  }
  coeffs_ = std::move(out);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  Rational q = r;
  q.canonicalize();
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& r) {
  Rational q = r;
  q.canonicalize();
  if (q == 0) throw InvariantViolation("cyclotomic division by zero");
  for (auto& c : coeffs_) c /= q;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
  const int f = static_cast<int>(lcm_l(a.conductor(), b.conductor()));
  return a.embed(f).coeffs_ == b.embed(f).coeffs_;
}

int compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    const int f = static_cast<int>(lcm_l(a.conductor(), b.conductor()));
    return compare(a.embed(f), b.embed(f));
  }
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) {
    const int c = cmp(a.coeffs_[j], b.coeffs_[j]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  const int e = conductor();
  std::string out;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    std::string term;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (j == 0) {
      term = gsurf::to_string(mag);
    } else {
      std::string mono = "z" + std::to_string(e);
      if (j > 1) mono += "^" + std::to_string(j);
      term = mag == 1 ? mono : gsurf::to_string(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_space();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("cannot parse cyclotomic '" + std::string(text) + "': " + what);
  }
  long read_int() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected an integer at offset " + std::to_string(start));
    return std::stol(std::string(text.substr(start, pos - start)));
  }
  std::string read_rational_text() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  // term := rational | [rational '*'] 'z' e ['^' k]
  Cyclotomic read_term() {
    skip_space();
    Rational coeff(1);
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = parse_rational(read_rational_text());
      have_coeff = true;
      skip_space();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        return Cyclotomic(coeff);
      }
    }
    skip_space();
    if (pos >= text.size() || text[pos] != 'z') fail(have_coeff ? "expected z<e> after '*'" : "expected a term");
    ++pos;
    const long e = read_int();
    long k = 1;
    skip_space();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      k = read_int();
    }
    if (e < 1) fail("conductor must be positive");
    return Cyclotomic::zeta(static_cast<int>(e), k) * coeff;
  }
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) {
  TermParser p{text};
  Cyclotomic total;
  bool first = true;
  while (!p.at_end()) {
    int sign = 1;
    if (text[p.pos] == '+' || text[p.pos] == '-') {
      sign = text[p.pos] == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      p.fail("expected '+' or '-' at offset " + std::to_string(p.pos));
    }
    Cyclotomic term = p.read_term();
    total += sign < 0 ? -term : term;
    first = false;
  }
  if (first) p.fail("empty input");
  return total;
}

}  // namespace gsurf
