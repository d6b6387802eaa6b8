#include "qhopf/field.hpp"

namespace qhopf {
namespace {

bool is_odd_prime(uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

// Reduce an arbitrary signed integer to a residue in [0, p).
uint64_t mod_of_mpz(const mpz_class& z, uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

Field Field::prime(uint64_t p) {
  if (p == 2) throw input_error("field: p = 2 is not supported (odd primes only)");
  if (p >= (uint64_t(1) << 31) || !is_odd_prime(p))
    throw input_error("field: modulus must be an odd prime < 2^31, got " + std::to_string(p));
  return Field{FieldKind::Prime, p};
}

std::string Field::to_string() const {
  return kind == FieldKind::Rational ? "QQ" : "F" + std::to_string(p);
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.f_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long n) {
  Scalar s;
  s.f_ = f;
  if (f.kind == FieldKind::Rational)
    s.q_ = n;
  else
    s.r_ = mod_of_mpz(mpz_class(n), f.p);
  return s;
}

Scalar Scalar::of_ratio(const Field& f, long num, long den) {
  if (den == 0) throw input_error("scalar: zero denominator");
  return of_int(f, num) * of_int(f, den).inverse();
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw input_error("scalar: empty literal");
  std::string num = t, den = "1";
  if (auto pos = t.find('/'); pos != std::string::npos) {
    num = t.substr(0, pos);
    den = t.substr(pos + 1);
  }
  mpz_class n, d;
  if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw input_error("scalar: cannot parse '" + s + "'");
  if (d == 0) throw input_error("scalar: zero denominator in '" + s + "'");
  Scalar sc;
  sc.f_ = f;
  if (f.kind == FieldKind::Rational) {
    sc.q_ = mpq_class(n) / mpq_class(d);  // mpq_class division canonicalizes
  } else {
    uint64_t dn = mod_of_mpz(d, f.p);
    if (dn == 0) throw input_error("scalar: denominator divisible by p in '" + s + "'");
    sc.r_ = mod_mul(mod_of_mpz(n, f.p), mod_pow(dn, f.p - 2, f.p), f.p);
  }
  return sc;
}

bool Scalar::is_zero() const {
  return f_.kind == FieldKind::Rational ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return f_.kind == FieldKind::Rational ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(f_ == o.f_))
    throw input_error("scalar: field mismatch (" + f_.to_string() + " vs " + o.f_.to_string() + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s = *this;
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s = *this;
  s -= o;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (f_.kind == FieldKind::Rational)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : f_.p - r_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s = *this;
  s *= o;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (f_.kind == FieldKind::Rational)
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % f_.p;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (f_.kind == FieldKind::Rational)
    q_ -= o.q_;
  else
    r_ = (r_ + f_.p - o.r_) % f_.p;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (f_.kind == FieldKind::Rational)
    q_ *= o.q_;
  else
    r_ = mod_mul(r_, o.r_, f_.p);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw input_error("scalar: inverse of zero");
  Scalar s = *this;
  if (f_.kind == FieldKind::Rational)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_pow(r_, f_.p - 2, f_.p);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(f_ == o.f_)) return false;
  return f_.kind == FieldKind::Rational ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  return f_.kind == FieldKind::Rational ? q_.get_str() : std::to_string(r_);
}

std::string Scalar::to_json_string() const {
  if (f_.kind == FieldKind::Prime) return std::to_string(r_);
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

uint64_t Scalar::residue() const {
  if (f_.kind != FieldKind::Prime) throw input_error("scalar: residue() on a rational");
  return r_;
}

const mpq_class& Scalar::rational() const {
  if (f_.kind != FieldKind::Rational) throw input_error("scalar: rational() on a residue");
  return q_;
}

}  // namespace qhopf
