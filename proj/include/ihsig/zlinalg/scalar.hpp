#pragma once

#include <gmpxx.h>

#include <string>

namespace ihsig {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Field { Z, Q };

inline const char* field_name(Field f) { return f == Field::Z ? "Z" : "Q"; }

struct GcdTriple {
  Integer g, s, t;  // g = s*a + t*b, g >= 0
};

inline GcdTriple extended_gcd(const Integer& a, const Integer& b) {
  GcdTriple r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline bool is_unit(const Integer& x) { return x == 1 || x == -1; }

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace ihsig
