#pragma once

#include <gmpxx.h>

#include <string>

namespace latt {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational from numerator/denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Floor division for mpz (mpz '/' truncates toward zero).
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// a mod b with result in [0, b), b > 0.
inline Int fmod_pos(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// q reduced into [0, m) for positive rational modulus m.
inline Rat rat_mod(const Rat& q, const Rat& m) {
  Rat d = q / m;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), d.get_num_mpz_t(), d.get_den_mpz_t());
  return q - Rat(fl) * m;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace latt
