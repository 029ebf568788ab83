#pragma once

#include "racahkit/weyl.hpp"
#include <cctype>
#include <memory>
#include <sstream>

namespace racahkit {

// ---------------------------------------------------------------------------
// Printing. Terms are emitted in descending graded-lex order; coefficients
// print as `3/2`, `3/2 nu1^2`, or `(p)/(q)` for general rational functions.
// The grammar round-trips exactly through the parser below.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string monomial_str(const std::vector<std::string> &vars, const ExpVec &xexp,
                                const std::vector<unsigned> *dexp = nullptr)
{
	std::ostringstream os;
	bool first = true;
	for (size_t i = 0; i < vars.size(); ++i)
	{
		if (xexp[i] == 0)
			continue;
		if (!first)
			os << " ";
		os << vars[i];
		if (xexp[i] != 1)
			os << "^" << xexp[i];
		first = false;
	}
	if (dexp)
		for (size_t i = 0; i < vars.size(); ++i)
		{
			if ((*dexp)[i] == 0)
				continue;
			if (!first)
				os << " ";
			os << "d" << (i + 1);
			if ((*dexp)[i] != 1)
				os << "^" << (*dexp)[i];
			first = false;
		}
	return os.str();
}

// Renders one term and reports whether a leading '-' was factored out.
inline std::pair<std::string, bool> term_str(const ParamScalar &c, const std::string &mono)
{
	bool neg = false;
	std::string cs;
	if (c.is_rational())
	{
		Rational r = c.as_rational();
		if (r < 0)
		{
			neg = true;
			r = -r;
		}
		if (r != 1 || mono.empty())
			cs = r.get_str();
	}
	else if (c.den() == ParamPoly(Rational(1)) && c.num().terms().size() == 1)
	{
		// single parameter monomial: print flat, e.g. 3/2 nu1^2
		ParamPoly p = c.num();
		Rational r = p.leading().second;
		if (r < 0)
		{
			neg = true;
			p *= Rational(-1);
		}
		cs = p.str();
	}
	else
	{
		cs = c.den() == ParamPoly(Rational(1)) ? "(" + c.num().str() + ")" : c.str();
	}
	std::string s;
	if (cs.empty())
		s = mono;
	else if (mono.empty())
		s = cs;
	else
		s = cs + " * " + mono;
	return {s, neg};
}

} // namespace detail

inline std::string LaurentPoly::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		auto [s, neg] = detail::term_str(it->second, detail::monomial_str(vars_, it->first));
		if (first)
			os << (neg ? "-" : "") << s;
		else
			os << (neg ? " - " : " + ") << s;
		first = false;
	}
	return os.str();
}

inline std::string WeylOp::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		auto &[k, c] = *it;
		auto [s, neg] = detail::term_str(c, detail::monomial_str(vars_, k.xexp, &k.dexp));
		if (first)
			os << (neg ? "-" : "") << s;
		else
			os << (neg ? " - " : " + ") << s;
		first = false;
	}
	return os.str();
}

// ---------------------------------------------------------------------------
// Parsing. Expression grammar with + - * / ^, parentheses, juxtaposition as
// multiplication, integer/rational literals, reserved parameter symbols
// (k, nu1, nu2, ...), named variables, and d1, d2, ... derivative symbols
// when parsing operators.
// ---------------------------------------------------------------------------

namespace detail {

struct Ast
{
	enum Kind { Num, Sym, Add, Sub, Mul, Div, Neg, Pow } kind;
	Rational value;     // Num
	std::string name;   // Sym
	long exponent = 0;  // Pow
	std::unique_ptr<Ast> lhs, rhs;
};

class Parser
{
  public:
	explicit Parser(const std::string &text) : s_(text) {}

	std::unique_ptr<Ast> parse()
	{
		auto e = expr();
		skip_ws();
		if (pos_ != s_.size())
			throw Error(ErrorCode::ParseError, "trailing input at offset " + std::to_string(pos_));
		return e;
	}

  private:
	const std::string &s_;
	size_t pos_ = 0;

	void skip_ws()
	{
		while (pos_ < s_.size() && isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	char peek()
	{
		skip_ws();
		return pos_ < s_.size() ? s_[pos_] : '\0';
	}

	std::unique_ptr<Ast> expr()
	{
		auto lhs = term();
		for (;;)
		{
			char c = peek();
			if (c != '+' && c != '-')
				return lhs;
			++pos_;
			auto rhs = term();
			auto node = std::make_unique<Ast>();
			node->kind = c == '+' ? Ast::Add : Ast::Sub;
			node->lhs = std::move(lhs);
			node->rhs = std::move(rhs);
			lhs = std::move(node);
		}
	}

	std::unique_ptr<Ast> term()
	{
		auto lhs = unary();
		for (;;)
		{
			char c = peek();
			bool mul = c == '*', div = c == '/';
			bool juxta = isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
			if (!mul && !div && !juxta)
				return lhs;
			if (mul || div)
				++pos_;
			auto rhs = unary();
			auto node = std::make_unique<Ast>();
			node->kind = div ? Ast::Div : Ast::Mul;
			node->lhs = std::move(lhs);
			node->rhs = std::move(rhs);
			lhs = std::move(node);
		}
	}

	std::unique_ptr<Ast> unary()
	{
		if (peek() == '-')
		{
			++pos_;
			auto node = std::make_unique<Ast>();
			node->kind = Ast::Neg;
			node->lhs = unary();
			return node;
		}
		return power();
	}

	std::unique_ptr<Ast> power()
	{
		auto base = atom();
		if (peek() == '^')
		{
			++pos_;
			long sign = 1;
			if (peek() == '-')
			{
				sign = -1;
				++pos_;
			}
			skip_ws();
			if (pos_ >= s_.size() || !isdigit(static_cast<unsigned char>(s_[pos_])))
				throw Error(ErrorCode::ParseError, "integer exponent expected");
			long e = 0;
			while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_])))
				e = e * 10 + (s_[pos_++] - '0');
			auto node = std::make_unique<Ast>();
			node->kind = Ast::Pow;
			node->exponent = sign * e;
			node->lhs = std::move(base);
			return node;
		}
		return base;
	}

	std::unique_ptr<Ast> atom()
	{
		char c = peek();
		if (c == '(')
		{
			++pos_;
			auto e = expr();
			if (peek() != ')')
				throw Error(ErrorCode::ParseError, "expected ')'");
			++pos_;
			return e;
		}
		if (isdigit(static_cast<unsigned char>(c)))
		{
			std::string digits;
			while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_])))
				digits += s_[pos_++];
			auto node = std::make_unique<Ast>();
			node->kind = Ast::Num;
			node->value = parse_rational(digits);
			return node;
		}
		if (isalpha(static_cast<unsigned char>(c)) || c == '_')
		{
			std::string name;
			while (pos_ < s_.size() &&
			       (isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
				name += s_[pos_++];
			auto node = std::make_unique<Ast>();
			node->kind = Ast::Sym;
			node->name = name;
			return node;
		}
		throw Error(ErrorCode::ParseError,
		            std::string("unexpected character '") + c + "' at offset " + std::to_string(pos_));
	}
};

// Evaluation into LaurentPoly over a fixed variable list.
inline LaurentPoly eval_poly(const Ast &a, const std::vector<std::string> &vars)
{
	switch (a.kind)
	{
	case Ast::Num:
		return LaurentPoly::constant(vars, ParamScalar(a.value));
	case Ast::Sym:
	{
		for (size_t i = 0; i < vars.size(); ++i)
			if (vars[i] == a.name)
				return LaurentPoly::variable(vars, i);
		if (auto idx = param_index(a.name))
			return LaurentPoly::constant(vars, ParamScalar(ParamPoly::parameter(*idx)));
		throw Error(ErrorCode::ParseError, "unknown symbol " + a.name);
	}
	case Ast::Add:
		return eval_poly(*a.lhs, vars) + eval_poly(*a.rhs, vars);
	case Ast::Sub:
		return eval_poly(*a.lhs, vars) - eval_poly(*a.rhs, vars);
	case Ast::Mul:
		return eval_poly(*a.lhs, vars) * eval_poly(*a.rhs, vars);
	case Ast::Neg:
		return -eval_poly(*a.lhs, vars);
	case Ast::Div:
	{
		LaurentPoly num = eval_poly(*a.lhs, vars);
		LaurentPoly den = eval_poly(*a.rhs, vars);
		if (den.is_zero())
			throw Error(ErrorCode::DivisionByZero, "division by zero polynomial");
		if (den.terms().size() != 1)
			throw Error(ErrorCode::ParseError, "division by a polynomial sum");
		auto &[e, c] = *den.terms().begin();
		LaurentPoly r(num.vars());
		for (auto &[en, cn] : num.terms())
		{
			ExpVec ne(en.size());
			for (size_t i = 0; i < ne.size(); ++i)
				ne[i] = en[i] - e[i];
			r.add_term(std::move(ne), cn / c);
		}
		return r;
	}
	case Ast::Pow:
	{
		LaurentPoly base = eval_poly(*a.lhs, vars);
		long e = a.exponent;
		if (e >= 0)
			return base.pow(static_cast<unsigned>(e));
		if (base.terms().size() != 1)
			throw Error(ErrorCode::ParseError, "negative power of a polynomial sum");
		auto &[be, bc] = *base.terms().begin();
		LaurentPoly inv(vars);
		ExpVec ne(be.size());
		for (size_t i = 0; i < ne.size(); ++i)
			ne[i] = -be[i];
		inv.add_term(std::move(ne), bc.reciprocal());
		return inv.pow(static_cast<unsigned>(-e));
	}
	}
	throw Error(ErrorCode::ParseError, "bad expression");
}

// Evaluation into WeylOp; multiplication is composition, so order matters.
inline WeylOp eval_weyl(const Ast &a, const std::vector<std::string> &vars)
{
	switch (a.kind)
	{
	case Ast::Num:
		return WeylOp::constant(vars, ParamScalar(a.value));
	case Ast::Sym:
	{
		for (size_t i = 0; i < vars.size(); ++i)
			if (vars[i] == a.name)
				return WeylOp::coordinate(vars, i);
		if (a.name.size() > 1 && a.name[0] == 'd')
		{
			bool digits = true;
			for (size_t i = 1; i < a.name.size(); ++i)
				digits = digits && isdigit(static_cast<unsigned char>(a.name[i]));
			if (digits)
			{
				size_t idx = static_cast<size_t>(std::stoul(a.name.substr(1)));
				if (idx < 1 || idx > vars.size())
					throw Error(ErrorCode::ParseError, "derivative index out of range: " + a.name);
				return WeylOp::derivative(vars, idx - 1);
			}
		}
		if (auto idx = param_index(a.name))
			return WeylOp::constant(vars, ParamScalar(ParamPoly::parameter(*idx)));
		throw Error(ErrorCode::ParseError, "unknown symbol " + a.name);
	}
	case Ast::Add:
		return eval_weyl(*a.lhs, vars) + eval_weyl(*a.rhs, vars);
	case Ast::Sub:
		return eval_weyl(*a.lhs, vars) - eval_weyl(*a.rhs, vars);
	case Ast::Mul:
		return weyl_compose(eval_weyl(*a.lhs, vars), eval_weyl(*a.rhs, vars));
	case Ast::Neg:
		return -eval_weyl(*a.lhs, vars);
	case Ast::Div:
	{
		WeylOp num = eval_weyl(*a.lhs, vars);
		WeylOp den = eval_weyl(*a.rhs, vars);
		if (den.terms().size() != 1)
			throw Error(ErrorCode::ParseError, "operator division needs a monomial divisor");
		auto &[k, c] = *den.terms().begin();
		for (unsigned d : k.dexp)
			if (d != 0)
				throw Error(ErrorCode::ParseError, "cannot divide by a derivative");
		WeylOp inv(vars);
		WeylKey ik;
		ik.xexp.resize(vars.size());
		ik.dexp.assign(vars.size(), 0);
		for (size_t i = 0; i < vars.size(); ++i)
			ik.xexp[i] = -k.xexp[i];
		inv.add_term(std::move(ik), c.reciprocal());
		return weyl_compose(num, inv);
	}
	case Ast::Pow:
	{
		WeylOp base = eval_weyl(*a.lhs, vars);
		long e = a.exponent;
		if (e >= 0)
		{
			WeylOp r = WeylOp::identity(vars);
			for (long i = 0; i < e; ++i)
				r = weyl_compose(r, base);
			return r;
		}
		if (base.terms().size() != 1)
			throw Error(ErrorCode::ParseError, "negative power of an operator sum");
		auto &[k, c] = *base.terms().begin();
		for (unsigned d : k.dexp)
			if (d != 0)
				throw Error(ErrorCode::ParseError, "negative power of a derivative");
		WeylOp inv(vars);
		WeylKey ik;
		ik.xexp.resize(vars.size());
		ik.dexp.assign(vars.size(), 0);
		for (size_t i = 0; i < vars.size(); ++i)
			ik.xexp[i] = -k.xexp[i];
		inv.add_term(std::move(ik), c.reciprocal());
		WeylOp r = WeylOp::identity(vars);
		for (long i = 0; i < -e; ++i)
			r = weyl_compose(r, inv);
		return r;
	}
	}
	throw Error(ErrorCode::ParseError, "bad expression");
}

} // namespace detail

inline LaurentPoly parse_poly(const std::string &text, const std::vector<std::string> &vars)
{
	detail::Parser p(text);
	auto ast = p.parse();
	return detail::eval_poly(*ast, vars);
}

inline WeylOp parse_weyl(const std::string &text, const std::vector<std::string> &vars)
{
	detail::Parser p(text);
	auto ast = p.parse();
	return detail::eval_weyl(*ast, vars);
}

// Terms of a polynomial / operator as individual printed strings, in
// descending graded-lex order (used by JSON reports).
inline std::vector<std::string> printed_terms(const LaurentPoly &p)
{
	std::vector<std::string> out;
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
	{
		auto [s, neg] = detail::term_str(it->second, detail::monomial_str(p.vars(), it->first));
		out.push_back(neg ? "-" + s : s);
	}
	return out;
}

inline std::vector<std::string> printed_terms(const WeylOp &op)
{
	std::vector<std::string> out;
	for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it)
	{
		auto [s, neg] =
		    detail::term_str(it->second, detail::monomial_str(op.vars(), it->first.xexp, &it->first.dexp));
		out.push_back(neg ? "-" + s : s);
	}
	return out;
}

} // namespace racahkit
