#pragma once

#include "racahkit/harmonics.hpp"

namespace racahkit {

// Operator on the u-variables u_1..u_{n-2}; coefficients may involve the
// symbolic degree k (parameter index 0) besides the nu's.
using UOperator = WeylOp;

inline std::vector<std::string> u_vars(int n)
{
	return indexed_vars("u", n - 2);
}

// Exponent vectors a with |a| <= k over the u-variables, degree-ascending.
inline std::vector<ExpVec> u_basis_exponents(int n, int k)
{
	std::vector<ExpVec> out;
	for (int d = 0; d <= k; ++d)
		for (auto &e : monomials_of_degree(d, n - 2))
			out.push_back(e);
	return out;
}

// x-realization of the u-monomial basis element:
//   (x_1-x_2)^{k-|a|} (x_3-x_2)^{a_1} (x_4-x_3)^{a_2} ... (x_n-x_{n-1})^{a_{n-2}}.
inline LaurentPoly u_basis_realization(const ExpVec &a, int n, int k)
{
	LaurentPoly mono = LaurentPoly::monomial(u_vars(n), a, ParamScalar(1));
	return u_realization_in_x(mono, k, n);
}

// The explicit gauged Casimirs of the n-variable realization, symbolic in k
// and nu; with u_{n-1} = 0 (so d_{u_{n-1}} acts as zero) whenever it appears.
inline UOperator printed_tilde(int n, const std::vector<int> &B_in)
{
	auto B = checked_subset(n, B_in);
	auto uv = u_vars(n);
	if (B.size() == 1)
	{
		ParamPoly nu_i = ParamPoly::nu(static_cast<unsigned>(B[0]));
		return WeylOp::constant(uv, ParamScalar(nu_i * (nu_i - ParamPoly(Rational(1)))));
	}
	if (B.size() != 2)
		throw Error(ErrorCode::InvalidArgument,
		            "printed form covers |B| in {1,2}; expand larger sets linearly");
	int j = B[0], i = B[1]; // i > j
	ParamScalar k_sym = ParamScalar::degree_symbol();
	ParamPoly nu_ip = ParamPoly::nu(static_cast<unsigned>(i));
	ParamPoly nu_jp = ParamPoly::nu(static_cast<unsigned>(j));
	ParamScalar central((nu_ip + nu_jp) * (nu_ip + nu_jp - ParamPoly(Rational(1))));

	WeylOp euler = WeylOp::zero(uv); // sum u_l d_{u_l}
	for (size_t l = 0; l < uv.size(); ++l)
		euler += WeylOp::coordinate(uv, l) * WeylOp::derivative(uv, l);
	WeylOp one = WeylOp::identity(uv);
	auto k_op = [&](long shift) { return one * k_sym + one * ParamScalar(Rational(shift)); };

	// d_{u_{m-2}} - d_{u_{m-1}}, with the second term dropped at m = n
	auto diff_d = [&](int m) {
		WeylOp d = WeylOp::derivative(uv, static_cast<size_t>(m - 3));
		if (m < n)
			d -= WeylOp::derivative(uv, static_cast<size_t>(m - 2));
		return d;
	};

	if (j == 1 && i == 2)
	{
		WeylOp a = k_op(-1) - euler;                                    // k - 1 - E
		WeylOp b = -k_op(0) - WeylOp::derivative(uv, 0) + euler;        // -k - d_{u1} + E
		ParamScalar two_nu1(ParamPoly::nu(1) * Rational(2));
		ParamScalar two_nu2(ParamPoly::nu(2) * Rational(2));
		return -(a * b) + (k_op(0) - euler) * two_nu2 - b * two_nu1 +
		       WeylOp::constant(uv, central);
	}
	if (j == 1)
	{
		WeylOp w = one; // 1 - sum_{l<=i-2} u_l
		for (int l = 1; l <= i - 2; ++l)
			w -= WeylOp::coordinate(uv, static_cast<size_t>(l - 1));
		WeylOp d = diff_d(i);
		ParamScalar two_nui(nu_ip * Rational(2));
		ParamScalar two_nu1(ParamPoly::nu(1) * Rational(2));
		return -(w * w * (k_op(-1) - euler) * d) + w * (k_op(0) - euler) * two_nui -
		       w * d * two_nu1 + WeylOp::constant(uv, central);
	}
	if (j == 2)
	{
		WeylOp w = WeylOp::zero(uv); // sum_{l<=i-2} u_l
		for (int l = 1; l <= i - 2; ++l)
			w += WeylOp::coordinate(uv, static_cast<size_t>(l - 1));
		WeylOp d = diff_d(i);
		WeylOp du1 = WeylOp::derivative(uv, 0);
		ParamScalar two_nui(nu_ip * Rational(2));
		ParamScalar two_nu2(ParamPoly::nu(2) * Rational(2));
		return -(w * w * (one - k_op(0) - du1 + euler) * d) +
		       w * (k_op(0) + du1 - euler) * two_nui + w * d * two_nu2 +
		       WeylOp::constant(uv, central);
	}
	// i > j >= 3
	WeylOp w = WeylOp::zero(uv); // sum_{l=j-1}^{i-2} u_l
	for (int l = j - 1; l <= i - 2; ++l)
		w += WeylOp::coordinate(uv, static_cast<size_t>(l - 1));
	WeylOp di = diff_d(i), dj = diff_d(j);
	ParamScalar two_nui(nu_ip * Rational(2));
	ParamScalar two_nuj(nu_jp * Rational(2));
	return -(w * w * di * dj) + w * di * two_nuj - w * dj * two_nui +
	       WeylOp::constant(uv, central);
}

// Matrix of C_B (Bargmann) on H_k(R^n) in the u-monomial basis, obtained by
// applying C_B to each x-realization and solving back; equivalently the
// matrix of the gauged operator on Pi_k^{n-2}.
inline Matrix<ParamScalar> gauged_action_matrix(int n, int k, const std::vector<int> &B)
{
	auto exps = u_basis_exponents(n, k);
	size_t dim = exps.size();
	auto top = monomials_of_degree(k, n);
	std::map<ExpVec, size_t> row_of;
	for (size_t i = 0; i < top.size(); ++i)
		row_of[top[i]] = i;

	Matrix<ParamScalar> A(top.size(), dim), V(top.size(), dim);
	for (size_t c = 0; c < dim; ++c)
	{
		LaurentPoly phi = u_basis_realization(exps[c], n, k);
		for (auto &[e, cc] : phi.terms())
			A.at(row_of.at(e), c) += cc;
	}
	WeylOp cb = casimir(n, B, ModelKind::Bargmann);
	for (size_t c = 0; c < dim; ++c)
	{
		LaurentPoly img = weyl_apply(cb, u_basis_realization(exps[c], n, k));
		for (auto &[e, cc] : img.terms())
			V.at(row_of.at(e), c) += cc;
	}
	auto X = linalg::solve(std::move(A), std::move(V));
	if (!X)
		throw Error(ErrorCode::SolveFailure, "image not in the u-basis span");
	return *X;
}

// Matrix of the printed gauged Casimir acting on u-monomials, k specialized.
inline Matrix<ParamScalar> tilde_action_matrix(int n, int k, const std::vector<int> &B)
{
	auto exps = u_basis_exponents(n, k);
	size_t dim = exps.size();
	std::map<ExpVec, size_t> index_of;
	for (size_t i = 0; i < dim; ++i)
		index_of[exps[i]] = i;
	UOperator op = printed_tilde(n, B).substitute_param(0, Rational(k));
	auto uv = u_vars(n);
	Matrix<ParamScalar> T(dim, dim);
	for (size_t c = 0; c < dim; ++c)
	{
		LaurentPoly img = weyl_apply(op, LaurentPoly::monomial(uv, exps[c], ParamScalar(1)));
		for (auto &[e, cc] : img.terms())
		{
			auto it = index_of.find(e);
			if (it == index_of.end())
				throw Error(ErrorCode::SolveFailure, "printed operator leaves Pi_k");
			T.at(it->second, c) += cc;
		}
	}
	return T;
}

// Entrywise comparison of the printed realization against the gauged matrix.
inline VerificationReport verify_reduced(int n, int k, const std::vector<int> &B_in)
{
	auto B = checked_subset(n, B_in);
	std::string id = "reduced C~_" + subset_str(B) + " on Pi_" + std::to_string(k) + "^" +
	                 std::to_string(n - 2);
	VerificationReport r;
	r.identity = id;
	r.n = n;
	r.model = ModelKind::Bargmann;
	r.subsets = {B};
	Matrix<ParamScalar> G = gauged_action_matrix(n, k, B);
	Matrix<ParamScalar> T = tilde_action_matrix(n, k, B);
	r.pass = G == T;
	if (!r.pass)
	{
		auto exps = u_basis_exponents(n, k);
		for (size_t b = 0; b < exps.size(); ++b)
			for (size_t a = 0; a < exps.size(); ++a)
				if (!(G.at(b, a) == T.at(b, a)))
					r.residual_terms.push_back(
					    "entry (" + std::to_string(b) + "," + std::to_string(a) + "): gauged " +
					    G.at(b, a).str() + " vs printed " + T.at(b, a).str());
	}
	return r;
}

} // namespace racahkit
