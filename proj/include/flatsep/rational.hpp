#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace flatsep {

/// Exact rational scalar. GMP keeps results of arithmetic on canonical
/// operands canonical (lowest terms, positive denominator), so only
/// construction from raw strings or num/den pairs needs the explicit
/// canonicalization below. Use parse_rational / make_rational instead of
/// the raw boost constructors.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;
using Point = std::vector<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r;
  mpq_set_num(r.backend().data(), num.backend().data());
  mpq_set_den(r.backend().data(), den.backend().data());
  mpq_canonicalize(r.backend().data());
  return r;
}

/// Accepts "p", "-p", "p/q" with optional sign on either part.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (text.empty()) throw std::domain_error("empty rational");
      return Rational(Integer(text));
    }
    std::string ns = text.substr(0, slash);
    std::string ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty()) throw std::domain_error("empty part");
    return make_rational(Integer(ns), Integer(ds));
  } catch (const std::runtime_error&) {
    throw std::domain_error("malformed rational: " + text);
  }
}

inline std::string to_string(const Rational& r) { return r.str(); }

// --- small exact vector helpers used across modules ---------------------

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec scale(const Vec& a, const Rational& c) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

inline bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

/// Lexicographic compare; vectors must have equal length.
inline int lex_compare(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

}  // namespace flatsep
