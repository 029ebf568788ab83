#pragma once

#include "racahkit/linalg.hpp"
#include "racahkit/racah.hpp"

namespace racahkit {

// Composition (j_1, ..., j_{n-1}) of k labelling one basis element.
struct BasisLabel
{
	std::vector<int> j;
	int n = 0;
	int k = 0;

	BasisLabel(std::vector<int> j_, int n_) : j(std::move(j_)), n(n_)
	{
		if (n < 2 || j.size() != static_cast<size_t>(n - 1))
			throw Error(ErrorCode::InvalidArgument, "label length must be n-1");
		k = 0;
		for (int x : j)
		{
			if (x < 0)
				throw Error(ErrorCode::InvalidArgument, "negative label entry");
			k += x;
		}
	}

	std::string str() const
	{
		std::string s = "(";
		for (size_t i = 0; i < j.size(); ++i)
			s += (i ? "," : "") + std::to_string(j[i]);
		return s + ")";
	}
};

enum class BasisOrder { Standard, Permuted };

// All compositions of k into `parts` parts, first entry descending.
inline std::vector<std::vector<int>> compositions(int k, int parts)
{
	std::vector<std::vector<int>> out;
	if (parts == 0)
	{
		if (k == 0)
			out.push_back({});
		return out;
	}
	for (int j = k; j >= 0; --j)
		for (auto &tail : compositions(k - j, parts - 1))
		{
			std::vector<int> c;
			c.reserve(static_cast<size_t>(parts));
			c.push_back(j);
			c.insert(c.end(), tail.begin(), tail.end());
			out.push_back(std::move(c));
		}
	return out;
}

// Monomial exponent vectors of P_k(R^m), graded-lex ascending.
inline std::vector<ExpVec> monomials_of_degree(int k, int m)
{
	std::vector<ExpVec> out;
	for (auto &c : compositions(k, m))
		out.emplace_back(c.begin(), c.end());
	std::sort(out.begin(), out.end(), ExpVecGradedLess{});
	return out;
}

inline WeylOp lowering_op(int n, ModelKind kind)
{
	return make_realization(n, full_set(n), kind).minus;
}

inline WeylOp raising_op(int n, ModelKind kind)
{
	return make_realization(n, full_set(n), kind).plus;
}

inline void require_polynomial(const LaurentPoly &p, const char *what)
{
	if (p.has_negative_exponents())
		throw Error(ErrorCode::InvalidArgument, std::string(what) + " must have nonnegative exponents");
}

inline void require_homogeneous(const LaurentPoly &p, const char *what)
{
	if (!p.is_homogeneous())
		throw Error(ErrorCode::NonHomogeneous, std::string(what) + " must be homogeneous");
}

// CK extension adding coordinate x_m over the base set S (all within the
// fixed n-variable space):  sum_j (-x_m)^j Lambda_S^j p / (j! w_j)
// with w_j = 1 in the Bargmann model and (2 nu_m)_j in the BG model.
inline LaurentPoly ck_extend_over(const LaurentPoly &p, int m, const std::vector<int> &S,
                                  int n, ModelKind kind)
{
	require_polynomial(p, "CK input");
	WeylOp lower = make_realization(n, S, kind).minus;
	size_t mv = static_cast<size_t>(m - 1);
	for (auto &[e, c] : p.terms())
		if (e[mv] != 0)
			throw Error(ErrorCode::InvalidArgument, "CK input already involves the new variable");
	LaurentPoly xm = LaurentPoly::variable(p.vars(), mv);
	LaurentPoly result = p, cur = p, xpow = LaurentPoly::one(p.vars());
	ParamScalar denom(1);
	ParamPoly two_nu_m = ParamPoly::nu(static_cast<unsigned>(m)) * Rational(2);
	for (unsigned j = 1;; ++j)
	{
		cur = weyl_apply(lower, cur);
		if (cur.is_zero())
			break;
		xpow *= xm;
		denom *= ParamScalar(Rational(j));
		if (kind == ModelKind::BarutGirardello)
			denom *= ParamScalar(two_nu_m + ParamPoly(Rational(j) - 1));
		ParamScalar c = ParamScalar(Rational(j % 2 == 0 ? 1 : -1)) / denom;
		result += xpow * cur * c;
	}
	return result;
}

// Module-level CK: P_k(R^{n-1}) -> H_k(R^n), appending the variable x_n.
inline LaurentPoly ck_extend(const LaurentPoly &p, ModelKind kind)
{
	require_polynomial(p, "CK input");
	require_homogeneous(p, "CK input");
	int n = static_cast<int>(p.vars().size()) + 1;
	LaurentPoly q = p.with_vars(indexed_vars("x", n));
	return ck_extend_over(q, n, full_set(n - 1), n, kind);
}

// Closed translation form of the Bargmann CK: p(x_1 - x_n, ..., x_{n-1} - x_n).
inline LaurentPoly ck_extend_bargmann_translation(const LaurentPoly &p)
{
	require_polynomial(p, "CK input");
	require_homogeneous(p, "CK input");
	int n = static_cast<int>(p.vars().size()) + 1;
	auto vars = indexed_vars("x", n);
	LaurentPoly xn = LaurentPoly::variable(vars, static_cast<size_t>(n - 1));
	std::map<std::string, LaurentPoly> subst;
	for (int i = 1; i < n; ++i)
		subst.emplace("x" + std::to_string(i),
		              LaurentPoly::variable(vars, static_cast<size_t>(i - 1)) - xn);
	return poly_affine_substitute(p, subst);
}

// Inverse CK: restriction x_n = 0, defined on model harmonics only.
inline LaurentPoly ck_inverse(const LaurentPoly &q, ModelKind kind)
{
	require_polynomial(q, "CK inverse input");
	int n = static_cast<int>(q.vars().size());
	if (n < 2)
		throw Error(ErrorCode::InvalidArgument, "need at least two variables");
	if (!weyl_apply(lowering_op(n, kind), q).is_zero())
		throw Error(ErrorCode::NotHarmonic, "input not annihilated by the lowering operator");
	LaurentPoly r(indexed_vars("x", n - 1));
	for (auto &[e, c] : q.terms())
	{
		if (e.back() != 0)
			continue;
		r.add_term(ExpVec(e.begin(), e.end() - 1), c);
	}
	return r;
}

// Ladder coefficient of (L_-)^l (L_+)^j on degree-k harmonics over the
// first p coordinates: j!/(j-l)! (2|nu|_p + 2k + j - l)_l.
inline ParamScalar suind_coeff(int j, int k, int l, int p)
{
	if (l > j || l < 0 || j < 0 || k < 0 || p < 1)
		throw Error(ErrorCode::InvalidArgument, "bad suind parameters");
	ParamPoly base;
	for (int i = 1; i <= p; ++i)
		base += ParamPoly::nu(static_cast<unsigned>(i)) * Rational(2);
	base += ParamPoly(Rational(2 * k + j - l));
	Rational pre(factorial(static_cast<unsigned>(j)));
	pre /= Rational(factorial(static_cast<unsigned>(j - l)));
	return ParamScalar(pre) * ParamScalar::pochhammer(base, static_cast<unsigned>(l));
}

// Direct-sum splitting p = sum_j (raising)^j h_{k-j}, h harmonic.
struct FischerDecomposition
{
	int k = 0;
	ModelKind kind = ModelKind::Bargmann;
	std::vector<LaurentPoly> h; // h[j] is raised j times in the reconstruction

	LaurentPoly reconstruct(int n) const
	{
		WeylOp raise = raising_op(n, kind);
		LaurentPoly r = LaurentPoly::zero(indexed_vars("x", n));
		for (size_t j = 0; j < h.size(); ++j)
		{
			LaurentPoly t = h[j];
			for (size_t i = 0; i < j; ++i)
				t = weyl_apply(raise, t);
			r += t;
		}
		return r;
	}
};

// Downward induction through repeated lowering: the most-raised component is
// isolated first via Lambda^j, using the generically invertible ladder
// coefficients.
inline FischerDecomposition fischer_decompose(const LaurentPoly &p, ModelKind kind)
{
	require_polynomial(p, "Fischer input");
	require_homogeneous(p, "Fischer input");
	int n = static_cast<int>(p.vars().size());
	int k = static_cast<int>(p.total_degree());
	WeylOp lower = lowering_op(n, kind), raise = raising_op(n, kind);
	FischerDecomposition out;
	out.k = k;
	out.kind = kind;
	out.h.assign(static_cast<size_t>(k) + 1, LaurentPoly::zero(p.vars()));
	LaurentPoly rem = p;
	for (int j = k; j >= 1; --j)
	{
		LaurentPoly g = rem;
		for (int i = 0; i < j; ++i)
			g = weyl_apply(lower, g);
		if (g.is_zero())
			continue;
		LaurentPoly hj = g * suind_coeff(j, k - j, j, n).reciprocal();
		out.h[static_cast<size_t>(j)] = hj;
		LaurentPoly t = hj;
		for (int i = 0; i < j; ++i)
			t = weyl_apply(raise, t);
		rem -= t;
	}
	if (!weyl_apply(lower, rem).is_zero())
		throw Error(ErrorCode::SolveFailure, "Fischer remainder not harmonic");
	out.h[0] = rem;
	return out;
}

// Independent oracle: dense exact linear solve on the monomial basis, with
// the harmonicity constraints rowed in explicitly.
inline FischerDecomposition fischer_decompose_solve(const LaurentPoly &p, ModelKind kind)
{
	require_polynomial(p, "Fischer input");
	require_homogeneous(p, "Fischer input");
	int n = static_cast<int>(p.vars().size());
	int k = static_cast<int>(p.total_degree());
	WeylOp lower = lowering_op(n, kind), raise = raising_op(n, kind);

	std::vector<std::vector<ExpVec>> mono(static_cast<size_t>(k) + 1);
	std::vector<size_t> offset(static_cast<size_t>(k) + 1, 0);
	size_t ncols = 0;
	for (int j = 0; j <= k; ++j)
	{
		mono[static_cast<size_t>(j)] = monomials_of_degree(k - j, n);
		offset[static_cast<size_t>(j)] = ncols;
		ncols += mono[static_cast<size_t>(j)].size();
	}
	std::map<ExpVec, size_t> row_of_deg_k;
	auto top = monomials_of_degree(k, n);
	for (size_t i = 0; i < top.size(); ++i)
		row_of_deg_k[top[i]] = i;
	size_t nrows = top.size();
	std::vector<std::map<ExpVec, size_t>> harm_rows(static_cast<size_t>(k) + 1);
	for (int j = 0; j <= k; ++j)
	{
		if (k - j == 0)
			continue;
		auto rows = monomials_of_degree(k - j - 1, n);
		for (auto &m : rows)
			harm_rows[static_cast<size_t>(j)][m] = nrows++;
	}

	Matrix<ParamScalar> A(nrows, ncols), B(nrows, 1);
	for (int j = 0; j <= k; ++j)
	{
		auto &ms = mono[static_cast<size_t>(j)];
		for (size_t c = 0; c < ms.size(); ++c)
		{
			size_t col = offset[static_cast<size_t>(j)] + c;
			LaurentPoly q = LaurentPoly::monomial(p.vars(), ms[c], ParamScalar(1));
			LaurentPoly raised = q;
			for (int i = 0; i < j; ++i)
				raised = weyl_apply(raise, raised);
			for (auto &[e, cc] : raised.terms())
				A.at(row_of_deg_k.at(e), col) += cc;
			if (k - j > 0)
			{
				LaurentPoly low = weyl_apply(lower, q);
				for (auto &[e, cc] : low.terms())
					A.at(harm_rows[static_cast<size_t>(j)].at(e), col) += cc;
			}
		}
	}
	for (auto &[e, c] : p.terms())
		B.at(row_of_deg_k.at(e), 0) = c;

	auto X = linalg::solve(std::move(A), std::move(B));
	if (!X)
		throw Error(ErrorCode::SolveFailure, "Fischer system inconsistent");
	FischerDecomposition out;
	out.k = k;
	out.kind = kind;
	out.h.assign(static_cast<size_t>(k) + 1, LaurentPoly::zero(p.vars()));
	for (int j = 0; j <= k; ++j)
	{
		auto &ms = mono[static_cast<size_t>(j)];
		LaurentPoly hj(p.vars());
		for (size_t c = 0; c < ms.size(); ++c)
			hj.add_term(ms[c], X->at(offset[static_cast<size_t>(j)] + c, 0));
		out.h[static_cast<size_t>(j)] = hj;
	}
	return out;
}

// Basis of H_k(R^n) built by alternating raising powers and CK extensions:
//   Standard: psi = CK_n (R_{[n-1]}^{j_{n-1}} CK_{n-1} ( ... R_{[2]}^{j_2} CK_2 (x_1^{j_1}) ))
//   Permuted: the chain runs in the reversed coordinate order (used for the
//   Miller identification).
inline LaurentPoly build_basis_element(const BasisLabel &label, ModelKind kind, BasisOrder order)
{
	int n = label.n;
	auto vars = indexed_vars("x", n);
	if (order == BasisOrder::Standard)
	{
		LaurentPoly q = LaurentPoly::variable(vars, 0).pow(static_cast<unsigned>(label.j[0]));
		for (int l = 2; l <= n; ++l)
		{
			std::vector<int> base(static_cast<size_t>(l - 1));
			for (int i = 0; i < l - 1; ++i)
				base[static_cast<size_t>(i)] = i + 1;
			q = ck_extend_over(q, l, base, n, kind);
			if (l < n)
			{
				WeylOp raise = make_realization(n, full_set(l), kind).plus;
				for (int i = 0; i < label.j[static_cast<size_t>(l - 1)]; ++i)
					q = weyl_apply(raise, q);
			}
		}
		return q;
	}
	LaurentPoly q = LaurentPoly::variable(vars, static_cast<size_t>(n - 1))
	                    .pow(static_cast<unsigned>(label.j[static_cast<size_t>(n - 2)]));
	for (int l = n - 1; l >= 1; --l)
	{
		std::vector<int> base;
		for (int i = l + 1; i <= n; ++i)
			base.push_back(i);
		q = ck_extend_over(q, l, base, n, kind);
		if (l >= 2)
		{
			std::vector<int> sub;
			for (int i = l; i <= n; ++i)
				sub.push_back(i);
			WeylOp raise = make_realization(n, sub, kind).plus;
			for (int i = 0; i < label.j[static_cast<size_t>(l - 2)]; ++i)
				q = weyl_apply(raise, q);
		}
	}
	return q;
}

inline std::vector<std::pair<BasisLabel, LaurentPoly>>
build_basis(int n, int k, ModelKind kind, BasisOrder order = BasisOrder::Standard)
{
	if (n < 2 || k < 0)
		throw Error(ErrorCode::InvalidArgument, "need n >= 2, k >= 0");
	std::vector<std::pair<BasisLabel, LaurentPoly>> out;
	for (auto &c : compositions(k, n - 1))
	{
		BasisLabel label(c, n);
		out.emplace_back(label, build_basis_element(label, kind, order));
	}
	return out;
}

struct Eigenvalue
{
	int ell = 0;
	ParamScalar value;
};

// lambda^{[l]} = (sum_{i<l} j_i + sum_{i<=l} nu_i)(same - 1).
inline Eigenvalue eigenvalue_lambda(const BasisLabel &label, int ell)
{
	if (ell < 2 || ell > label.n)
		throw Error(ErrorCode::InvalidArgument, "ell out of range");
	ParamPoly s;
	for (int i = 1; i < ell; ++i)
		s += ParamPoly(Rational(label.j[static_cast<size_t>(i - 1)]));
	for (int i = 1; i <= ell; ++i)
		s += ParamPoly::nu(static_cast<unsigned>(i));
	return Eigenvalue{ell, ParamScalar(s * (s - ParamPoly(Rational(1))))};
}

// Homogeneous Jacobi form (u+v)^j P_j^{(alpha,beta)}((v-u)/(u+v)), expanded
// with Pochhammer coefficients; alpha, beta may involve the parameters.
inline LaurentPoly jacobi_weighted(int j, const ParamPoly &alpha, const ParamPoly &beta,
                                   const LaurentPoly &v, const LaurentPoly &u)
{
	LaurentPoly r = LaurentPoly::zero(v.vars());
	Rational inv_fact(1, factorial(static_cast<unsigned>(j)));
	inv_fact.canonicalize();
	for (int s = 0; s <= j; ++s)
	{
		ParamScalar c(Rational(binomial(static_cast<unsigned>(j), static_cast<unsigned>(s))));
		c *= ParamScalar::pochhammer(alpha + ParamPoly(Rational(j - s + 1)), static_cast<unsigned>(s));
		c *= ParamScalar::pochhammer(beta + ParamPoly(Rational(s + 1)), static_cast<unsigned>(j - s));
		if ((j - s) % 2 != 0)
			c = -c;
		r += v.pow(static_cast<unsigned>(s)) * u.pow(static_cast<unsigned>(j - s)) * c;
	}
	return r * ParamScalar(inv_fact);
}

// One factor of the explicit BG basis:
//   phi_{j}(x_{m+1}, L_+^{[m]}) = (-1)^j j! / (2 nu_{m+1})_j
//        (L_+^{[m+1]})^j P_j^{(alpha,beta)}((x_{m+1} - L_+^{[m]}) / L_+^{[m+1]}).
inline LaurentPoly bg_jacobi_factor(const BasisLabel &label, int m)
{
	auto vars = indexed_vars("x", label.n);
	int j = label.j[static_cast<size_t>(m - 1)];
	ParamPoly alpha, beta;
	for (int i = 1; i <= m; ++i)
		alpha += ParamPoly::nu(static_cast<unsigned>(i)) * Rational(2);
	for (int l = 1; l < m; ++l)
		alpha += ParamPoly(Rational(2 * label.j[static_cast<size_t>(l - 1)]));
	alpha -= ParamPoly(Rational(1));
	beta = ParamPoly::nu(static_cast<unsigned>(m + 1)) * Rational(2) - ParamPoly(Rational(1));
	LaurentPoly v = LaurentPoly::variable(vars, static_cast<size_t>(m));
	LaurentPoly u = LaurentPoly::zero(vars);
	for (int i = 1; i <= m; ++i)
		u += LaurentPoly::variable(vars, static_cast<size_t>(i - 1));
	ParamScalar pre(Rational(factorial(static_cast<unsigned>(j))));
	if (j % 2 != 0)
		pre = -pre;
	pre /= ParamScalar::pochhammer(ParamPoly::nu(static_cast<unsigned>(m + 1)) * Rational(2),
	                               static_cast<unsigned>(j));
	return jacobi_weighted(j, alpha, beta, v, u) * pre;
}

// The factorized BG basis element, expanded as a polynomial. Matches the
// CK-chain construction exactly.
inline LaurentPoly bg_jacobi_explicit(const BasisLabel &label)
{
	auto vars = indexed_vars("x", label.n);
	LaurentPoly r = LaurentPoly::one(vars);
	for (int m = 1; m <= label.n - 1; ++m)
		r *= bg_jacobi_factor(label, m);
	return r;
}

// First-order recursion operator adding one unit to index j_l of the
// u-variable representation:
//   L = 2 nu_1 + |j|_l + sum_i (u_i - 1 + 2 sum_{p<i} u_p) u_i d_{u_i}
//       - sum_i (2 |j|_l + 2 sum_{p<=i+1} nu_p) u_i.
inline WeylOp recursion_operator(int ell, int jsum, const std::vector<std::string> &uvars)
{
	if (ell < 2 || static_cast<size_t>(ell - 1) > uvars.size())
		throw Error(ErrorCode::InvalidArgument, "ell out of range for variable list");
	ParamPoly head = ParamPoly::nu(1) * Rational(2) + ParamPoly(Rational(jsum));
	WeylOp op = WeylOp::constant(uvars, ParamScalar(head));
	for (int i = 1; i <= ell - 1; ++i)
	{
		size_t ui = static_cast<size_t>(i - 1);
		WeylOp u = WeylOp::coordinate(uvars, ui);
		WeylOp ud = u * WeylOp::derivative(uvars, ui);
		WeylOp coeff = u - WeylOp::identity(uvars);
		for (int p = 1; p < i; ++p)
			coeff += WeylOp::coordinate(uvars, static_cast<size_t>(p - 1)) * ParamScalar(2);
		op += coeff * ud;
		ParamPoly lin(Rational(2 * jsum));
		for (int p = 1; p <= i + 1; ++p)
			lin += ParamPoly::nu(static_cast<unsigned>(p)) * Rational(2);
		op -= u * ParamScalar(lin);
	}
	return op;
}

inline LaurentPoly recursion_apply(int ell, int jsum, const LaurentPoly &phi)
{
	return weyl_apply(recursion_operator(ell, jsum, phi.vars()), phi);
}

// phi_{k-j}^k as a terminating 2F1(j-k, 1-k-j-2nu1-2nu2; 1-k-2nu1; u),
// normalized to constant term 1.
inline LaurentPoly hyp2f1_phi(int k, int j, const std::vector<std::string> &uvars = {"u1"})
{
	if (j < 0 || j > k)
		throw Error(ErrorCode::InvalidArgument, "need 0 <= j <= k");
	ParamPoly a(Rational(j - k));
	ParamPoly b = ParamPoly(Rational(1 - k - j)) - ParamPoly::nu(1) * Rational(2) -
	              ParamPoly::nu(2) * Rational(2);
	ParamPoly c = ParamPoly(Rational(1 - k)) - ParamPoly::nu(1) * Rational(2);
	LaurentPoly r = LaurentPoly::zero(uvars);
	LaurentPoly u = LaurentPoly::variable(uvars, 0);
	for (int m = 0; m <= k - j; ++m)
	{
		ParamScalar num = ParamScalar::pochhammer(a, static_cast<unsigned>(m)) *
		                  ParamScalar::pochhammer(b, static_cast<unsigned>(m));
		ParamScalar den = ParamScalar::pochhammer(c, static_cast<unsigned>(m)) *
		                  ParamScalar(Rational(factorial(static_cast<unsigned>(m))));
		r += u.pow(static_cast<unsigned>(m)) * (num / den);
	}
	return r;
}

// Realization of a u-polynomial of degree <= k back in the x-coordinates:
//   u^a -> (x_1-x_2)^{k-|a|} (x_3-x_2)^{a_1} (x_4-x_3)^{a_2} ...
inline LaurentPoly u_realization_in_x(const LaurentPoly &phi, int k, int n)
{
	require_polynomial(phi, "u-polynomial");
	if (phi.vars().size() != static_cast<size_t>(n - 2))
		throw Error(ErrorCode::InvalidArgument, "expected n-2 u-variables");
	auto vars = indexed_vars("x", n);
	std::vector<LaurentPoly> diff;
	LaurentPoly x12 = LaurentPoly::variable(vars, 0) - LaurentPoly::variable(vars, 1);
	for (int i = 1; i <= n - 2; ++i)
		diff.push_back(LaurentPoly::variable(vars, static_cast<size_t>(i + 1)) -
		               LaurentPoly::variable(vars, static_cast<size_t>(i)));
	LaurentPoly r = LaurentPoly::zero(vars);
	for (auto &[e, c] : phi.terms())
	{
		long total = 0;
		for (int x : e)
			total += x;
		if (total > k)
			throw Error(ErrorCode::InvalidArgument, "u-degree exceeds k");
		LaurentPoly t = x12.pow(static_cast<unsigned>(k - total)) * c;
		for (size_t i = 0; i < e.size(); ++i)
			t *= diff[i].pow(static_cast<unsigned>(e[i]));
		r += t;
	}
	return r;
}

} // namespace racahkit
