#pragma once

#include "racahkit/param.hpp"
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace racahkit {

using ExpVec = std::vector<int>;

struct ExpVecGradedLess
{
	bool operator()(const ExpVec &a, const ExpVec &b) const
	{
		long da = 0, db = 0;
		for (int x : a)
			da += x;
		for (int x : b)
			db += x;
		if (da != db)
			return da < db;
		return a < b;
	}
};

// Multivariate polynomial in named variables with integer (possibly negative)
// exponents and ParamScalar coefficients. Terms are kept sorted graded-lex.
class LaurentPoly
{
  public:
	using TermMap = std::map<ExpVec, ParamScalar, ExpVecGradedLess>;

	LaurentPoly() = default;
	explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

	static LaurentPoly zero(std::vector<std::string> vars) { return LaurentPoly(std::move(vars)); }

	static LaurentPoly constant(std::vector<std::string> vars, const ParamScalar &c)
	{
		LaurentPoly p(std::move(vars));
		p.add_term(ExpVec(p.vars_.size(), 0), c);
		return p;
	}

	static LaurentPoly one(std::vector<std::string> vars)
	{
		return constant(std::move(vars), ParamScalar(1));
	}

	static LaurentPoly monomial(std::vector<std::string> vars, ExpVec e, const ParamScalar &c)
	{
		LaurentPoly p(std::move(vars));
		if (e.size() != p.vars_.size())
			throw Error(ErrorCode::InvalidArgument, "exponent vector length mismatch");
		p.add_term(std::move(e), c);
		return p;
	}

	static LaurentPoly variable(std::vector<std::string> vars, size_t i, int power = 1)
	{
		if (i >= vars.size())
			throw Error(ErrorCode::InvalidArgument, "variable index out of range");
		ExpVec e(vars.size(), 0);
		e[i] = power;
		return monomial(std::move(vars), std::move(e), ParamScalar(1));
	}

	const std::vector<std::string> &vars() const { return vars_; }
	const TermMap &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	size_t var_index(const std::string &name) const
	{
		for (size_t i = 0; i < vars_.size(); ++i)
			if (vars_[i] == name)
				return i;
		throw Error(ErrorCode::VariableMismatch, "unknown variable " + name);
	}

	bool has_variable(const std::string &name) const
	{
		for (auto &v : vars_)
			if (v == name)
				return true;
		return false;
	}

	void add_term(ExpVec e, const ParamScalar &c)
	{
		if (c.is_zero())
			return;
		if (e.size() != vars_.size())
			throw Error(ErrorCode::InvalidArgument, "exponent vector length mismatch");
		auto it = terms_.find(e);
		if (it == terms_.end())
			terms_.emplace(std::move(e), c);
		else
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	ParamScalar coefficient(const ExpVec &e) const
	{
		auto it = terms_.find(e);
		return it == terms_.end() ? ParamScalar() : it->second;
	}

	bool has_negative_exponents() const
	{
		for (auto &[e, c] : terms_)
			for (int x : e)
				if (x < 0)
					return true;
		return false;
	}

	long total_degree() const
	{
		long d = 0;
		bool first = true;
		for (auto &[e, c] : terms_)
		{
			long s = 0;
			for (int x : e)
				s += x;
			d = first ? s : std::max(d, s);
			first = false;
		}
		return d;
	}

	bool is_homogeneous() const
	{
		long d = 0;
		bool first = true;
		for (auto &[e, c] : terms_)
		{
			long s = 0;
			for (int x : e)
				s += x;
			if (first)
				d = s;
			else if (s != d)
				return false;
			first = false;
		}
		return true;
	}

	LaurentPoly homogeneous_component(long d) const
	{
		LaurentPoly r(vars_);
		for (auto &[e, c] : terms_)
		{
			long s = 0;
			for (int x : e)
				s += x;
			if (s == d)
				r.add_term(e, c);
		}
		return r;
	}

	LaurentPoly operator-() const
	{
		LaurentPoly r(vars_);
		for (auto &[e, c] : terms_)
			r.terms_.emplace(e, -c);
		return r;
	}

	LaurentPoly &operator+=(const LaurentPoly &o)
	{
		check_vars(o);
		for (auto &[e, c] : o.terms_)
			add_term(e, c);
		return *this;
	}

	LaurentPoly &operator-=(const LaurentPoly &o)
	{
		check_vars(o);
		for (auto &[e, c] : o.terms_)
			add_term(e, -c);
		return *this;
	}

	friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
	friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }

	friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
	{
		a.check_vars(b);
		LaurentPoly r(a.vars_);
		for (auto &[ea, ca] : a.terms_)
			for (auto &[eb, cb] : b.terms_)
			{
				ExpVec e(ea.size());
				for (size_t i = 0; i < e.size(); ++i)
					e[i] = ea[i] + eb[i];
				r.add_term(std::move(e), ca * cb);
			}
		return r;
	}

	LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }

	LaurentPoly &operator*=(const ParamScalar &c)
	{
		if (c.is_zero())
		{
			terms_.clear();
			return *this;
		}
		for (auto &[e, x] : terms_)
			x *= c;
		return *this;
	}

	friend LaurentPoly operator*(LaurentPoly a, const ParamScalar &c) { return a *= c; }
	friend LaurentPoly operator*(const ParamScalar &c, LaurentPoly a) { return a *= c; }

	LaurentPoly &operator/=(const ParamScalar &c) { return *this *= c.reciprocal(); }

	LaurentPoly pow(unsigned e) const
	{
		LaurentPoly r = one(vars_);
		for (unsigned i = 0; i < e; ++i)
			r *= *this;
		return r;
	}

	bool operator==(const LaurentPoly &o) const
	{
		if (vars_ != o.vars_ || terms_.size() != o.terms_.size())
			return false;
		auto it = o.terms_.begin();
		for (auto &[e, c] : terms_)
		{
			if (e != it->first || !(c == it->second))
				return false;
			++it;
		}
		return true;
	}
	bool operator!=(const LaurentPoly &o) const { return !(*this == o); }

	// Re-expresses the polynomial over a superset of variables (by name).
	LaurentPoly with_vars(const std::vector<std::string> &new_vars) const
	{
		std::vector<size_t> pos(vars_.size());
		for (size_t i = 0; i < vars_.size(); ++i)
		{
			bool found = false;
			for (size_t j = 0; j < new_vars.size(); ++j)
				if (new_vars[j] == vars_[i])
				{
					pos[i] = j;
					found = true;
					break;
				}
			if (!found)
				throw Error(ErrorCode::VariableMismatch, "missing variable " + vars_[i]);
		}
		LaurentPoly r(new_vars);
		for (auto &[e, c] : terms_)
		{
			ExpVec ne(new_vars.size(), 0);
			for (size_t i = 0; i < e.size(); ++i)
				ne[pos[i]] = e[i];
			r.add_term(std::move(ne), c);
		}
		return r;
	}

	// Drops variables that appear in no term.
	LaurentPoly restricted_to(const std::vector<std::string> &new_vars) const
	{
		std::vector<long> pos(vars_.size(), -1);
		for (size_t i = 0; i < vars_.size(); ++i)
			for (size_t j = 0; j < new_vars.size(); ++j)
				if (new_vars[j] == vars_[i])
					pos[i] = static_cast<long>(j);
		LaurentPoly r(new_vars);
		for (auto &[e, c] : terms_)
		{
			ExpVec ne(new_vars.size(), 0);
			for (size_t i = 0; i < e.size(); ++i)
			{
				if (e[i] == 0)
					continue;
				if (pos[i] < 0)
					throw Error(ErrorCode::VariableMismatch,
					            "variable " + vars_[i] + " still occurs");
				ne[static_cast<size_t>(pos[i])] = e[i];
			}
			r.add_term(std::move(ne), c);
		}
		return r;
	}

	LaurentPoly rename_vars(const std::function<std::string(const std::string &)> &f) const
	{
		std::vector<std::string> nv;
		nv.reserve(vars_.size());
		for (auto &v : vars_)
			nv.push_back(f(v));
		LaurentPoly r(nv);
		r.terms_ = terms_;
		return r;
	}

	LaurentPoly evaluate_params(const std::map<unsigned, Rational> &values) const
	{
		LaurentPoly r(vars_);
		for (auto &[e, c] : terms_)
			r.add_term(e, ParamScalar(c.evaluate(values)));
		return r;
	}

	LaurentPoly substitute_param(unsigned idx, const Rational &value) const
	{
		LaurentPoly r(vars_);
		for (auto &[e, c] : terms_)
			r.add_term(e, c.substitute(idx, value));
		return r;
	}

	std::string str() const;

  private:
	std::vector<std::string> vars_;
	TermMap terms_;

	void check_vars(const LaurentPoly &o) const
	{
		if (vars_ != o.vars_)
			throw Error(ErrorCode::VariableMismatch, "variable lists differ");
	}
};

// Replaces selected variables of p by affine images, fully expanding the
// result. Every image must share one variable list, which becomes the
// result's variable list; unsubstituted variables of p must appear there.
inline LaurentPoly poly_affine_substitute(const LaurentPoly &p,
                                          const std::map<std::string, LaurentPoly> &subst)
{
	if (p.has_negative_exponents())
		throw Error(ErrorCode::InvalidArgument, "Laurent input not allowed in substitution");
	std::vector<std::string> target;
	for (auto &[name, image] : subst)
	{
		if (!p.has_variable(name))
			throw Error(ErrorCode::VariableMismatch, "substituted variable " + name + " absent");
		if (image.has_negative_exponents())
			throw Error(ErrorCode::InvalidArgument, "substitution image not polynomial");
		if (image.total_degree() > 1 && !image.is_zero())
			throw Error(ErrorCode::InvalidArgument, "substitution image not affine");
		if (target.empty())
			target = image.vars();
		else if (target != image.vars())
			throw Error(ErrorCode::VariableMismatch, "substitution images disagree on variables");
	}
	if (target.empty())
		target = p.vars();

	std::vector<LaurentPoly> images;
	images.reserve(p.vars().size());
	for (auto &v : p.vars())
	{
		auto it = subst.find(v);
		if (it != subst.end())
			images.push_back(it->second);
		else
		{
			// identity image; requires v in the target list
			bool found = false;
			for (size_t j = 0; j < target.size(); ++j)
				if (target[j] == v)
				{
					images.push_back(LaurentPoly::variable(target, j));
					found = true;
					break;
				}
			if (!found)
				throw Error(ErrorCode::VariableMismatch, "variable " + v + " missing from target");
		}
	}

	LaurentPoly r = LaurentPoly::zero(target);
	for (auto &[e, c] : p.terms())
	{
		LaurentPoly t = LaurentPoly::constant(target, c);
		for (size_t i = 0; i < e.size(); ++i)
		{
			if (e[i] == 0)
				continue;
			t *= images[i].pow(static_cast<unsigned>(e[i]));
		}
		r += t;
	}
	return r;
}

// x_i -> x_i^2 with optional renaming (used by the x = z^2 change of variables).
inline LaurentPoly square_vars(const LaurentPoly &p,
                               const std::function<std::string(const std::string &)> &rename)
{
	std::vector<std::string> nv;
	for (auto &v : p.vars())
		nv.push_back(rename(v));
	LaurentPoly r(nv);
	for (auto &[e, c] : p.terms())
	{
		ExpVec ne(e.size());
		for (size_t i = 0; i < e.size(); ++i)
			ne[i] = 2 * e[i];
		r.add_term(std::move(ne), c);
	}
	return r;
}

inline std::vector<std::string> indexed_vars(const std::string &prefix, int n, int start = 1)
{
	std::vector<std::string> v;
	v.reserve(static_cast<size_t>(n));
	for (int i = 0; i < n; ++i)
		v.push_back(prefix + std::to_string(start + i));
	return v;
}

} // namespace racahkit
