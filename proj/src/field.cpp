#include "field.hpp"

namespace enlab {

Field Field::rationals() { return Field(Kind::Rational, 0); }

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31))
    throw ValidationError("field characteristic must satisfy 2 <= p < 2^31");
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "Q" || spec == "q") return rationals();
  if (spec.size() > 2 && (spec[0] == 'F' || spec[0] == 'f') && spec[1] == ':') {
    try {
      return prime(std::stoull(spec.substr(2)));
    } catch (const std::invalid_argument&) {
      throw ValidationError("bad field spec '" + spec + "'");
    } catch (const std::out_of_range&) {
      throw ValidationError("bad field spec '" + spec + "'");
    }
  }
  throw ValidationError("bad field spec '" + spec + "' (expected Q or F:p)");
}

Scalar Field::reduce(const Scalar& a) const {
  if (kind_ == Kind::Rational) return a;
  // Residue num * den^{-1} mod p.
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = a.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = a.get_den() % p;  // positive by mpq canonical form
  if (den == 1) return Scalar(num);
  if (den == 0) throw ValidationError("denominator divisible by p in F:" + std::to_string(p_));
  mpz_class deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw ValidationError("denominator not invertible mod " + std::to_string(p_));
  return Scalar((num * deninv) % p);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw ValidationError("division by zero");
  if (kind_ == Kind::Rational) return Scalar(1) / a;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class v = a.get_num();
  mpz_class vinv;
  if (mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
    throw ValidationError("value not invertible mod " + std::to_string(p_));
  return Scalar(vinv);
}

Scalar Field::from_string(const std::string& s) const {
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den))
    throw ValidationError("bad coefficient '" + s + "' (expected integer or num/den)");
  mpz_class n(num), d(den);
  if (d == 0) throw ValidationError("bad coefficient '" + s + "': zero denominator");
  Scalar q(n, d);
  q.canonicalize();
  return reduce(q);
}

std::string Field::str(const Scalar& a) const { return a.get_str(); }

std::string Field::name() const {
  return kind_ == Kind::Rational ? "Q" : "F:" + std::to_string(p_);
}

}  // namespace enlab
