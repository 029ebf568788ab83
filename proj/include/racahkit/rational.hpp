#pragma once

#include "racahkit/error.hpp"
#include <gmpxx.h>
#include <string>

namespace racahkit {

// Coefficient field: exact rationals backed by GMP, always canonicalized
// (gcd(|num|, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1)
{
	if (den == 0)
		throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
	Rational r(num, den);
	r.canonicalize();
	return r;
}

inline Rational parse_rational(const std::string &text)
{
	try
	{
		Rational r(text);
		if (r.get_den() == 0)
			throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
		r.canonicalize();
		return r;
	}
	catch (const std::invalid_argument &)
	{
		throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
	}
}

inline std::string to_string(const Rational &r) { return r.get_str(); }

inline Integer factorial(unsigned n)
{
	Integer f;
	mpz_fac_ui(f.get_mpz_t(), n);
	return f;
}

inline Integer binomial(unsigned n, unsigned k)
{
	if (k > n)
		return 0;
	Integer b;
	mpz_bin_uiui(b.get_mpz_t(), n, k);
	return b;
}

// c (c-1) ... (c-k+1); c may be negative (Laurent exponents).
inline Integer falling(long c, unsigned k)
{
	Integer f = 1;
	for (unsigned i = 0; i < k; ++i)
		f *= Integer(c - static_cast<long>(i));
	return f;
}

inline Rational pow_rational(const Rational &base, long e)
{
	if (e == 0)
		return Rational(1);
	if (e < 0 && base == 0)
		throw Error(ErrorCode::DivisionByZero, "0 to negative power");
	Rational b = e < 0 ? Rational(base.get_den(), base.get_num()) : base;
	b.canonicalize();
	unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
	Rational acc(1);
	while (m)
	{
		if (m & 1)
			acc *= b;
		b *= b;
		m >>= 1;
	}
	return acc;
}

} // namespace racahkit
