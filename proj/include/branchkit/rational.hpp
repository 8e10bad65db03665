#ifndef BRANCHKIT_RATIONAL_HPP
#define BRANCHKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace branchkit
{

  /// Exact rational scalar. Always stored reduced with positive denominator
  /// (mpq_class canonicalizes on construction from integers and on arithmetic).
  using Rat = mpq_class;

  inline Rat rat(long num, long den = 1)
  {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  /// Parse "num/den" or "num".
  inline Rat rat_parse(const std::string & s)
  {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad literal '" + s + "'");
    q.canonicalize();
    return q;
  }

  /// Serialize as "num/den", denominator always present ("3/1", "-1/2").
  inline std::string rat_str(const Rat & q)
  {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  inline bool is_integer(const Rat & q) { return q.get_den() == 1; }

  /// Exact conversion to long; throws when the value is not an integer or overflows.
  inline long rat_to_long(const Rat & q)
  {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
      throw std::domain_error("rat_to_long: not a machine integer");
    return q.get_num().get_si();
  }

  inline Rat rat_factorial(long n)
  {
    if (n < 0) throw std::domain_error("rat_factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
  }

  inline Rat rat_pow(const Rat & q, long e)
  {
    if (e < 0) {
      if (q == 0) throw std::domain_error("rat_pow: zero to negative power");
      return 1 / rat_pow(q, -e);
    }
    Rat num, den;
    mpz_pow_ui(num.get_num().get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_set_ui(num.get_den().get_mpz_t(), 1);
    mpz_pow_ui(den.get_num().get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_set_ui(den.get_den().get_mpz_t(), 1);
    return num / den;
  }

} // namespace branchkit

#endif
