#pragma once

#include "racahkit/laurent.hpp"

namespace racahkit {

// One normal-ordered key: x^xexp d^dexp (all multiplications left of all
// derivatives). x-exponents may be negative, derivative orders may not.
struct WeylKey
{
	ExpVec xexp;
	std::vector<unsigned> dexp;

	bool operator==(const WeylKey &o) const { return xexp == o.xexp && dexp == o.dexp; }
};

struct WeylKeyLess
{
	bool operator()(const WeylKey &a, const WeylKey &b) const
	{
		ExpVecGradedLess lt;
		if (a.dexp != b.dexp)
			return a.dexp < b.dexp;
		return lt(a.xexp, b.xexp);
	}
};

// Differential operator with LaurentPoly coefficients in normal order.
// Normal form is unique, so operator equality is term-map equality.
class WeylOp
{
  public:
	using TermMap = std::map<WeylKey, ParamScalar, WeylKeyLess>;

	WeylOp() = default;
	explicit WeylOp(std::vector<std::string> vars) : vars_(std::move(vars)) {}

	static WeylOp zero(std::vector<std::string> vars) { return WeylOp(std::move(vars)); }

	static WeylOp constant(std::vector<std::string> vars, const ParamScalar &c)
	{
		WeylOp op(std::move(vars));
		op.add_term(WeylKey{ExpVec(op.vars_.size(), 0), std::vector<unsigned>(op.vars_.size(), 0)}, c);
		return op;
	}

	static WeylOp identity(std::vector<std::string> vars)
	{
		return constant(std::move(vars), ParamScalar(1));
	}

	static WeylOp coordinate(std::vector<std::string> vars, size_t i, int power = 1)
	{
		WeylOp op(std::move(vars));
		WeylKey key{ExpVec(op.vars_.size(), 0), std::vector<unsigned>(op.vars_.size(), 0)};
		key.xexp.at(i) = power;
		op.add_term(std::move(key), ParamScalar(1));
		return op;
	}

	static WeylOp derivative(std::vector<std::string> vars, size_t i, unsigned order = 1)
	{
		WeylOp op(std::move(vars));
		WeylKey key{ExpVec(op.vars_.size(), 0), std::vector<unsigned>(op.vars_.size(), 0)};
		key.dexp.at(i) = order;
		op.add_term(std::move(key), ParamScalar(1));
		return op;
	}

	// Multiplication operator by a polynomial.
	static WeylOp from_poly(const LaurentPoly &p)
	{
		WeylOp op(p.vars());
		for (auto &[e, c] : p.terms())
			op.add_term(WeylKey{e, std::vector<unsigned>(e.size(), 0)}, c);
		return op;
	}

	const std::vector<std::string> &vars() const { return vars_; }
	const TermMap &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(WeylKey key, const ParamScalar &c)
	{
		if (c.is_zero())
			return;
		if (key.xexp.size() != vars_.size() || key.dexp.size() != vars_.size())
			throw Error(ErrorCode::InvalidArgument, "weyl key length mismatch");
		auto it = terms_.find(key);
		if (it == terms_.end())
			terms_.emplace(std::move(key), c);
		else
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	WeylOp operator-() const
	{
		WeylOp r(vars_);
		for (auto &[k, c] : terms_)
			r.terms_.emplace(k, -c);
		return r;
	}

	WeylOp &operator+=(const WeylOp &o)
	{
		check_vars(o);
		for (auto &[k, c] : o.terms_)
			add_term(k, c);
		return *this;
	}

	WeylOp &operator-=(const WeylOp &o)
	{
		check_vars(o);
		for (auto &[k, c] : o.terms_)
			add_term(k, -c);
		return *this;
	}

	friend WeylOp operator+(WeylOp a, const WeylOp &b) { return a += b; }
	friend WeylOp operator-(WeylOp a, const WeylOp &b) { return a -= b; }

	WeylOp &operator*=(const ParamScalar &c)
	{
		if (c.is_zero())
			terms_.clear();
		else
			for (auto &[k, x] : terms_)
				x *= c;
		return *this;
	}

	friend WeylOp operator*(WeylOp a, const ParamScalar &c) { return a *= c; }
	friend WeylOp operator*(const ParamScalar &c, WeylOp a) { return a *= c; }

	bool operator==(const WeylOp &o) const
	{
		if (vars_ != o.vars_ || terms_.size() != o.terms_.size())
			return false;
		auto it = o.terms_.begin();
		for (auto &[k, c] : terms_)
		{
			if (!(k == it->first) || !(c == it->second))
				return false;
			++it;
		}
		return true;
	}
	bool operator!=(const WeylOp &o) const { return !(*this == o); }

	WeylOp evaluate_params(const std::map<unsigned, Rational> &values) const
	{
		WeylOp r(vars_);
		for (auto &[k, c] : terms_)
			r.add_term(k, ParamScalar(c.evaluate(values)));
		return r;
	}

	WeylOp substitute_param(unsigned idx, const Rational &value) const
	{
		WeylOp r(vars_);
		for (auto &[k, c] : terms_)
			r.add_term(k, c.substitute(idx, value));
		return r;
	}

	// x <-> d transposition, the Weyl-algebra anti-automorphism.
	WeylOp transpose() const
	{
		WeylOp r(vars_);
		for (auto &[k, c] : terms_)
		{
			WeylKey nk;
			nk.xexp.resize(vars_.size());
			nk.dexp.resize(vars_.size());
			for (size_t i = 0; i < vars_.size(); ++i)
			{
				if (k.xexp[i] < 0)
					throw Error(ErrorCode::InvalidArgument,
					            "transpose needs nonnegative coordinate exponents");
				nk.xexp[i] = static_cast<int>(k.dexp[i]);
				nk.dexp[i] = static_cast<unsigned>(k.xexp[i]);
			}
			r.add_term(std::move(nk), c);
		}
		return r;
	}

	std::string str() const;

  private:
	std::vector<std::string> vars_;
	TermMap terms_;

	void check_vars(const WeylOp &o) const
	{
		if (vars_ != o.vars_)
			throw Error(ErrorCode::VariableMismatch, "variable lists differ");
	}

	friend WeylOp weyl_compose(const WeylOp &, const WeylOp &);
};

// Normal-ordered product a o b via the closed Leibniz form
//   d^b x^c = sum_k binom(b,k) c(c-1)...(c-k+1) x^{c-k} d^{b-k}
// taken per variable.
inline WeylOp weyl_compose(const WeylOp &a, const WeylOp &b)
{
	if (a.vars() != b.vars())
		throw Error(ErrorCode::VariableMismatch, "variable lists differ");
	size_t nv = a.vars().size();
	WeylOp r(a.vars());
	std::vector<unsigned> kvec(nv);
	for (auto &[ka, ca] : a.terms())
		for (auto &[kb, cb] : b.terms())
		{
			ParamScalar base = ca * cb;
			// odometer over contraction orders k_i in [0, a.dexp[i]]
			std::fill(kvec.begin(), kvec.end(), 0);
			for (;;)
			{
				Integer w = 1;
				for (size_t i = 0; i < nv && w != 0; ++i)
					if (kvec[i] > 0)
						w *= binomial(ka.dexp[i], kvec[i]) * falling(kb.xexp[i], kvec[i]);
				if (w != 0)
				{
					WeylKey key;
					key.xexp.resize(nv);
					key.dexp.resize(nv);
					for (size_t i = 0; i < nv; ++i)
					{
						key.xexp[i] = ka.xexp[i] + kb.xexp[i] - static_cast<int>(kvec[i]);
						key.dexp[i] = ka.dexp[i] + kb.dexp[i] - kvec[i];
					}
					r.add_term(std::move(key), base * ParamScalar(Rational(w)));
				}
				size_t pos = 0;
				while (pos < nv)
				{
					if (kvec[pos] < ka.dexp[pos])
					{
						++kvec[pos];
						break;
					}
					kvec[pos] = 0;
					++pos;
				}
				if (pos == nv)
					break;
			}
		}
	return r;
}

inline WeylOp operator*(const WeylOp &a, const WeylOp &b) { return weyl_compose(a, b); }

inline WeylOp weyl_commutator(const WeylOp &a, const WeylOp &b)
{
	return weyl_compose(a, b) - weyl_compose(b, a);
}

// Exact action of the operator on a Laurent polynomial.
inline LaurentPoly weyl_apply(const WeylOp &op, const LaurentPoly &p)
{
	if (op.vars() != p.vars())
		throw Error(ErrorCode::VariableMismatch, "variable lists differ");
	size_t nv = op.vars().size();
	LaurentPoly r(op.vars());
	for (auto &[k, c] : op.terms())
		for (auto &[m, cp] : p.terms())
		{
			Integer w = 1;
			for (size_t i = 0; i < nv && w != 0; ++i)
				if (k.dexp[i] > 0)
					w *= falling(m[i], k.dexp[i]);
			if (w == 0)
				continue;
			ExpVec e(nv);
			for (size_t i = 0; i < nv; ++i)
				e[i] = m[i] - static_cast<int>(k.dexp[i]) + k.xexp[i];
			r.add_term(std::move(e), c * cp * ParamScalar(Rational(w)));
		}
	return r;
}

// Formal monomial gauge weight prod_i x_i^{s_i} with ParamScalar exponents.
struct GaugeExponent
{
	std::vector<ParamScalar> s; // one entry per variable

	static GaugeExponent trivial(size_t nvars)
	{
		return GaugeExponent{std::vector<ParamScalar>(nvars, ParamScalar())};
	}

	GaugeExponent negated() const
	{
		GaugeExponent g = *this;
		for (auto &x : g.s)
			x = -x;
		return g;
	}
};

// g op g^{-1} for g = prod x_i^{s_i}: the algebra homomorphism fixing the
// coordinates and sending d_i -> d_i - s_i / x_i. The weight itself is never
// materialized; results may contain negative exponents.
inline WeylOp weyl_gauge_conjugate(const WeylOp &op, const GaugeExponent &g)
{
	size_t nv = op.vars().size();
	if (g.s.size() != nv)
		throw Error(ErrorCode::InvalidArgument, "gauge exponent length mismatch");
	std::vector<WeylOp> gen(nv, WeylOp(op.vars()));
	for (size_t i = 0; i < nv; ++i)
	{
		WeylOp d = WeylOp::derivative(op.vars(), i);
		if (!g.s[i].is_zero())
			d -= WeylOp::coordinate(op.vars(), i, -1) * g.s[i];
		gen[i] = d;
	}
	WeylOp r(op.vars());
	for (auto &[k, c] : op.terms())
	{
		WeylOp t(op.vars());
		t.add_term(WeylKey{k.xexp, std::vector<unsigned>(nv, 0)}, c);
		for (size_t i = 0; i < nv; ++i)
			for (unsigned j = 0; j < k.dexp[i]; ++j)
				t = weyl_compose(t, gen[i]);
		r += t;
	}
	return r;
}

// Change of variables x_i = z_i^2: x_i -> z_i^2, d_{x_i} -> (1/2) z_i^{-1} d_{z_i}.
inline WeylOp weyl_square_change_of_vars(
    const WeylOp &op,
    const std::function<std::string(const std::string &)> &rename =
        [](const std::string &v) { return v.size() > 1 && v[0] == 'x' ? "z" + v.substr(1) : "z_" + v; })
{
	size_t nv = op.vars().size();
	std::vector<std::string> zvars;
	zvars.reserve(nv);
	for (auto &v : op.vars())
		zvars.push_back(rename(v));
	std::vector<WeylOp> dz(nv, WeylOp(zvars));
	ParamScalar half(rational(1, 2));
	for (size_t i = 0; i < nv; ++i)
		dz[i] = WeylOp::coordinate(zvars, i, -1) * WeylOp::derivative(zvars, i) * half;
	WeylOp r(zvars);
	for (auto &[k, c] : op.terms())
	{
		WeylKey key;
		key.xexp.resize(nv);
		key.dexp.assign(nv, 0);
		for (size_t i = 0; i < nv; ++i)
			key.xexp[i] = 2 * k.xexp[i];
		WeylOp t(zvars);
		t.add_term(std::move(key), c);
		for (size_t i = 0; i < nv; ++i)
			for (unsigned j = 0; j < k.dexp[i]; ++j)
				t = weyl_compose(t, dz[i]);
		r += t;
	}
	return r;
}

} // namespace racahkit
