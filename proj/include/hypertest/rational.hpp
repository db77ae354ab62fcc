#pragma once

#include <gmpxx.h>

#include <string>

#include "hypertest/common.hpp"

namespace hypertest {

// Canonicalized fraction; mpq comparisons assume canonical form, so all
// numerator/denominator constructions go through here.
inline mpq_class frac(u64 num, u64 den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline mpq_class frac_z(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// "p/q" with an explicit denominator even for integers ("3/1").
inline std::string rational_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
mpq_class rational_from_string(const std::string& s);

// floor(q) for nonnegative q, as u64.
inline u64 floor_to_u64(const mpq_class& q) {
  mpz_class z = q.get_num() / q.get_den();
  return mpz_get_ui(z.get_mpz_t());
}

// ceil(q) for nonnegative q, as u64.
inline u64 ceil_to_u64(const mpq_class& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return mpz_get_ui(z.get_mpz_t());
}

// Exact conversion of a double (which is dyadic) to a rational.
inline mpq_class rational_from_double(double d) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), d);
  return q;
}

}  // namespace hypertest
