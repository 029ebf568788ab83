#pragma once

#include "racahkit/rational.hpp"
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace racahkit {

// Symbols the coefficient ring knows about: index 0 is the degree symbol k,
// index i >= 1 is nu_i.
inline std::string param_name(unsigned idx)
{
	return idx == 0 ? "k" : "nu" + std::to_string(idx);
}

// Returns the parameter index for a reserved name, or nullopt.
inline std::optional<unsigned> param_index(const std::string &name)
{
	if (name == "k")
		return 0u;
	if (name.size() > 2 && name.compare(0, 2, "nu") == 0)
	{
		unsigned idx = 0;
		for (size_t i = 2; i < name.size(); ++i)
		{
			if (!isdigit(static_cast<unsigned char>(name[i])))
				return std::nullopt;
			idx = idx * 10 + static_cast<unsigned>(name[i] - '0');
		}
		return idx >= 1 ? std::optional<unsigned>(idx) : std::nullopt;
	}
	return std::nullopt;
}

// Exponent vector with trailing zeros trimmed, ordered graded-lexicographically
// (total degree first, then earlier parameters weigh more).
struct ParamMonomial
{
	std::vector<unsigned> e;

	void trim()
	{
		while (!e.empty() && e.back() == 0)
			e.pop_back();
	}

	unsigned degree() const
	{
		unsigned d = 0;
		for (unsigned x : e)
			d += x;
		return d;
	}

	unsigned exp(unsigned idx) const { return idx < e.size() ? e[idx] : 0; }

	bool operator==(const ParamMonomial &o) const { return e == o.e; }
};

struct ParamMonomialLess
{
	bool operator()(const ParamMonomial &a, const ParamMonomial &b) const
	{
		unsigned da = a.degree(), db = b.degree();
		if (da != db)
			return da < db;
		size_t m = std::max(a.e.size(), b.e.size());
		for (size_t i = 0; i < m; ++i)
		{
			unsigned x = a.exp(i), y = b.exp(i);
			if (x != y)
				return x < y;
		}
		return false;
	}
};

// Polynomial in the parameters (k, nu_1, nu_2, ...) over the rationals.
class ParamPoly
{
  public:
	using TermMap = std::map<ParamMonomial, Rational, ParamMonomialLess>;

	ParamPoly() = default;
	ParamPoly(const Rational &c) { add_term({}, c); }
	ParamPoly(long c) : ParamPoly(Rational(c)) {}
	ParamPoly(int c) : ParamPoly(Rational(c)) {}

	static ParamPoly parameter(unsigned idx, unsigned power = 1)
	{
		ParamPoly p;
		ParamMonomial m;
		m.e.assign(idx + 1, 0);
		m.e[idx] = power;
		m.trim();
		p.add_term(m, Rational(1));
		return p;
	}

	static ParamPoly nu(unsigned i) { return parameter(i); }
	static ParamPoly degree_symbol() { return parameter(0); }

	const TermMap &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const
	{
		return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.e.empty());
	}

	Rational constant_value() const
	{
		if (terms_.empty())
			return Rational(0);
		if (!is_constant())
			throw Error(ErrorCode::InvalidArgument, "ParamPoly not constant");
		return terms_.begin()->second;
	}

	unsigned total_degree() const
	{
		unsigned d = 0;
		for (auto &[m, c] : terms_)
			d = std::max(d, m.degree());
		return d;
	}

	unsigned max_param_index() const
	{
		unsigned m = 0;
		for (auto &[mon, c] : terms_)
			if (!mon.e.empty())
				m = std::max<unsigned>(m, static_cast<unsigned>(mon.e.size()));
		return m == 0 ? 0 : m - 1;
	}

	void add_term(const ParamMonomial &m, const Rational &c)
	{
		if (c == 0)
			return;
		ParamMonomial key = m;
		key.trim();
		auto it = terms_.find(key);
		if (it == terms_.end())
			terms_.emplace(key, c);
		else
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	ParamPoly operator-() const
	{
		ParamPoly r = *this;
		for (auto &[m, c] : r.terms_)
			c = -c;
		return r;
	}

	ParamPoly &operator+=(const ParamPoly &o)
	{
		for (auto &[m, c] : o.terms_)
			add_term(m, c);
		return *this;
	}

	ParamPoly &operator-=(const ParamPoly &o)
	{
		for (auto &[m, c] : o.terms_)
			add_term(m, -c);
		return *this;
	}

	friend ParamPoly operator+(ParamPoly a, const ParamPoly &b) { return a += b; }
	friend ParamPoly operator-(ParamPoly a, const ParamPoly &b) { return a -= b; }

	friend ParamPoly operator*(const ParamPoly &a, const ParamPoly &b)
	{
		ParamPoly r;
		for (auto &[ma, ca] : a.terms_)
			for (auto &[mb, cb] : b.terms_)
			{
				ParamMonomial m;
				m.e.assign(std::max(ma.e.size(), mb.e.size()), 0);
				for (size_t i = 0; i < m.e.size(); ++i)
					m.e[i] = ma.exp(i) + mb.exp(i);
				r.add_term(m, ca * cb);
			}
		return r;
	}

	ParamPoly &operator*=(const ParamPoly &o) { return *this = *this * o; }

	ParamPoly &operator*=(const Rational &c)
	{
		if (c == 0)
			terms_.clear();
		else
			for (auto &[m, x] : terms_)
				x *= c;
		return *this;
	}

	bool operator==(const ParamPoly &o) const { return terms_ == o.terms_; }
	bool operator!=(const ParamPoly &o) const { return !(*this == o); }

	ParamPoly pow(unsigned e) const
	{
		ParamPoly r(Rational(1));
		for (unsigned i = 0; i < e; ++i)
			r *= *this;
		return r;
	}

	// Leading term under the graded-lex order.
	const std::pair<const ParamMonomial, Rational> &leading() const
	{
		if (terms_.empty())
			throw Error(ErrorCode::InvalidArgument, "leading term of zero");
		return *terms_.rbegin();
	}

	// Rational content carrying the sign of the leading coefficient;
	// dividing by it yields a primitive integer polynomial with positive
	// leading coefficient.
	Rational content() const
	{
		if (terms_.empty())
			return Rational(1);
		Integer num_gcd = 0, den_lcm = 1;
		for (auto &[m, c] : terms_)
		{
			mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
			mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
		}
		Rational c(num_gcd, den_lcm);
		c.canonicalize();
		if (leading().second < 0)
			c = -c;
		return c;
	}

	// Exact division: returns the quotient iff divisor divides *this exactly.
	std::optional<ParamPoly> divide_exact(const ParamPoly &divisor) const
	{
		if (divisor.is_zero())
			return std::nullopt;
		if (divisor.is_constant())
		{
			ParamPoly q = *this;
			Rational inv = 1 / divisor.constant_value();
			q *= inv;
			return q;
		}
		ParamPoly rem = *this, quot;
		const auto &[dm, dc] = divisor.leading();
		while (!rem.is_zero())
		{
			const auto &[rm, rc] = rem.leading();
			ParamMonomial qm;
			qm.e.assign(std::max(rm.e.size(), dm.e.size()), 0);
			for (size_t i = 0; i < qm.e.size(); ++i)
			{
				unsigned re = rm.exp(i), de = dm.exp(i);
				if (re < de)
					return std::nullopt;
				qm.e[i] = re - de;
			}
			qm.trim();
			Rational qc = rc / dc;
			ParamPoly t;
			t.add_term(qm, qc);
			quot += t;
			rem -= t * divisor; // leading term cancels, strictly decreasing
		}
		return quot;
	}

	Rational evaluate(const std::map<unsigned, Rational> &values) const
	{
		Rational r(0);
		for (auto &[m, c] : terms_)
		{
			Rational t = c;
			for (size_t i = 0; i < m.e.size(); ++i)
			{
				if (m.e[i] == 0)
					continue;
				auto it = values.find(static_cast<unsigned>(i));
				if (it == values.end())
					throw Error(ErrorCode::MissingParameter, "no value for " + param_name(static_cast<unsigned>(i)));
				t *= pow_rational(it->second, m.e[i]);
			}
			r += t;
		}
		return r;
	}

	// Substitute one parameter by a rational, leaving the others symbolic.
	ParamPoly substitute(unsigned idx, const Rational &value) const
	{
		ParamPoly r;
		for (auto &[m, c] : terms_)
		{
			Rational t = c;
			ParamMonomial nm = m;
			if (idx < nm.e.size() && nm.e[idx] > 0)
			{
				t *= pow_rational(value, nm.e[idx]);
				nm.e[idx] = 0;
				nm.trim();
			}
			r.add_term(nm, t);
		}
		return r;
	}

	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::ostringstream os;
		bool first = true;
		for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
		{
			Rational c = it->second;
			if (first)
			{
				if (c < 0)
				{
					os << "-";
					c = -c;
				}
			}
			else
			{
				os << (c < 0 ? " - " : " + ");
				if (c < 0)
					c = -c;
			}
			first = false;
			bool has_vars = !it->first.e.empty();
			if (c != 1 || !has_vars)
				os << c.get_str();
			bool need_space = c != 1 || !has_vars;
			for (size_t i = 0; i < it->first.e.size(); ++i)
			{
				if (it->first.e[i] == 0)
					continue;
				if (need_space)
					os << " ";
				os << param_name(static_cast<unsigned>(i));
				if (it->first.e[i] > 1)
					os << "^" << it->first.e[i];
				need_space = true;
			}
		}
		return os.str();
	}

	// Pochhammer symbol (base)_m = base (base+1) ... (base+m-1).
	static ParamPoly pochhammer(const ParamPoly &base, unsigned m)
	{
		ParamPoly r(Rational(1));
		for (unsigned t = 0; t < m; ++t)
			r *= base + ParamPoly(Rational(t));
		return r;
	}

  private:
	TermMap terms_;
};

// Rational function in the parameters. Normal form: denominator is a
// primitive integer polynomial with positive leading coefficient; common
// monomial factors and exact num/den divisibility are reduced, full
// multivariate gcd is not attempted. Equality always goes through
// cross-multiplication, so it is independent of reduction completeness.
class ParamScalar
{
  public:
	ParamScalar() : num_(), den_(Rational(1)) {}
	ParamScalar(const Rational &c) : num_(c), den_(Rational(1)) {}
	ParamScalar(long c) : ParamScalar(Rational(c)) {}
	ParamScalar(int c) : ParamScalar(Rational(c)) {}
	ParamScalar(const ParamPoly &p) : num_(p), den_(Rational(1)) {}

	ParamScalar(const ParamPoly &num, const ParamPoly &den) : num_(num), den_(den)
	{
		if (den_.is_zero())
			throw Error(ErrorCode::DivisionByZero, "zero denominator");
		normalize();
	}

	static ParamScalar nu(unsigned i) { return ParamScalar(ParamPoly::nu(i)); }
	static ParamScalar degree_symbol() { return ParamScalar(ParamPoly::degree_symbol()); }

	const ParamPoly &num() const { return num_; }
	const ParamPoly &den() const { return den_; }

	bool is_zero() const { return num_.is_zero(); }
	bool is_one() const { return num_ == den_; }
	bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

	Rational as_rational() const
	{
		if (!is_rational())
			throw Error(ErrorCode::InvalidArgument, "ParamScalar not rational: " + str());
		return num_.constant_value() / den_.constant_value();
	}

	unsigned max_param_index() const
	{
		return std::max(num_.max_param_index(), den_.max_param_index());
	}

	ParamScalar operator-() const
	{
		ParamScalar r = *this;
		r.num_ = -r.num_;
		return r;
	}

	friend ParamScalar operator+(const ParamScalar &a, const ParamScalar &b)
	{
		if (a.is_zero())
			return b;
		if (b.is_zero())
			return a;
		if (a.den_ == b.den_)
			return ParamScalar(a.num_ + b.num_, a.den_);
		return ParamScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
	}

	friend ParamScalar operator-(const ParamScalar &a, const ParamScalar &b) { return a + (-b); }

	friend ParamScalar operator*(const ParamScalar &a, const ParamScalar &b)
	{
		if (a.is_zero() || b.is_zero())
			return ParamScalar();
		// cross reductions keep Pochhammer quotients small
		ParamPoly an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
		if (!bd.is_constant())
			if (auto q = an.divide_exact(bd))
			{
				an = *q;
				bd = ParamPoly(Rational(1));
			}
		if (!ad.is_constant())
			if (auto q = bn.divide_exact(ad))
			{
				bn = *q;
				ad = ParamPoly(Rational(1));
			}
		return ParamScalar(an * bn, ad * bd);
	}

	ParamScalar reciprocal() const
	{
		if (is_zero())
			throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
		return ParamScalar(den_, num_);
	}

	friend ParamScalar operator/(const ParamScalar &a, const ParamScalar &b)
	{
		return a * b.reciprocal();
	}

	ParamScalar &operator+=(const ParamScalar &o) { return *this = *this + o; }
	ParamScalar &operator-=(const ParamScalar &o) { return *this = *this - o; }
	ParamScalar &operator*=(const ParamScalar &o) { return *this = *this * o; }
	ParamScalar &operator/=(const ParamScalar &o) { return *this = *this / o; }

	ParamScalar pow(long e) const
	{
		ParamScalar b = e < 0 ? reciprocal() : *this;
		unsigned m = static_cast<unsigned>(e < 0 ? -e : e);
		ParamScalar r(1);
		for (unsigned i = 0; i < m; ++i)
			r *= b;
		return r;
	}

	bool operator==(const ParamScalar &o) const
	{
		return num_ * o.den_ == o.num_ * den_;
	}
	bool operator!=(const ParamScalar &o) const { return !(*this == o); }

	Rational evaluate(const std::map<unsigned, Rational> &values) const
	{
		Rational d = den_.evaluate(values);
		if (d == 0)
			throw Error(ErrorCode::VanishingDenominator, "denominator vanishes: " + den_.str());
		return num_.evaluate(values) / d;
	}

	ParamScalar substitute(unsigned idx, const Rational &value) const
	{
		ParamPoly d = den_.substitute(idx, value);
		if (d.is_zero())
			throw Error(ErrorCode::VanishingDenominator, "denominator vanishes: " + den_.str());
		return ParamScalar(num_.substitute(idx, value), d);
	}

	std::string str() const
	{
		if (den_ == ParamPoly(Rational(1)))
			return num_.str();
		return "(" + num_.str() + ")/(" + den_.str() + ")";
	}

	// (base)_m as a scalar, base a parameter polynomial.
	static ParamScalar pochhammer(const ParamPoly &base, unsigned m)
	{
		return ParamScalar(ParamPoly::pochhammer(base, m));
	}

  private:
	ParamPoly num_, den_;

	void normalize()
	{
		if (num_.is_zero())
		{
			den_ = ParamPoly(Rational(1));
			return;
		}
		// common parameter-monomial factor
		ParamMonomial shift = common_monomial(num_, den_);
		if (!shift.e.empty())
		{
			num_ = shift_down(num_, shift);
			den_ = shift_down(den_, shift);
		}
		// exact divisibility in either direction
		if (!den_.is_constant())
		{
			if (auto q = num_.divide_exact(den_))
			{
				num_ = *q;
				den_ = ParamPoly(Rational(1));
			}
			else if (!num_.is_constant())
			{
				if (auto qd = den_.divide_exact(num_))
				{
					den_ = *qd;
					num_ = ParamPoly(Rational(1));
				}
			}
		}
		// scale so the denominator is integer-primitive with positive lead
		Rational c = den_.content();
		Rational inv = 1 / c;
		num_ *= inv;
		den_ *= inv;
	}

	static ParamMonomial common_monomial(const ParamPoly &a, const ParamPoly &b)
	{
		ParamMonomial m;
		bool first = true;
		auto fold = [&](const ParamPoly &p) {
			for (auto &[mon, c] : p.terms())
			{
				if (first)
				{
					m = mon;
					first = false;
					continue;
				}
				size_t n = std::min(m.e.size(), mon.e.size());
				m.e.resize(n);
				for (size_t i = 0; i < n; ++i)
					m.e[i] = std::min(m.e[i], mon.exp(i));
				m.trim();
				if (m.e.empty())
					return;
			}
		};
		fold(a);
		if (!m.e.empty())
			fold(b);
		return m;
	}

	static ParamPoly shift_down(const ParamPoly &p, const ParamMonomial &s)
	{
		ParamPoly r;
		for (auto &[mon, c] : p.terms())
		{
			ParamMonomial nm = mon;
			for (size_t i = 0; i < s.e.size(); ++i)
				nm.e[i] -= s.e[i];
			nm.trim();
			r.add_term(nm, c);
		}
		return r;
	}
};

} // namespace racahkit
