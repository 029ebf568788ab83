#include "test_util.hpp"
#include <catch2/catch_amalgamated.hpp>

using namespace racahkit;

TEST_CASE("printed singleton constants", "[reduced]")
{
	auto op = printed_tilde(4, {3});
	ParamPoly nu3 = ParamPoly::nu(3);
	CHECK(op == WeylOp::constant(u_vars(4), ParamScalar(nu3 * (nu3 - ParamPoly(Rational(1))))));
	CHECK_THROWS_AS(printed_tilde(4, {1, 2, 3}), Error);
}

TEST_CASE("printed C~_12 on the constant gives the top eigenvalue", "[reduced]")
{
	// n=3: applying to 1 with symbolic k yields (k + nu1 + nu2)(k + nu1 + nu2 - 1)
	auto op = printed_tilde(3, {1, 2});
	auto img = weyl_apply(op, LaurentPoly::one(u_vars(3)));
	ParamPoly s = ParamPoly::degree_symbol() + ParamPoly::nu(1) + ParamPoly::nu(2);
	CHECK(img == LaurentPoly::constant(u_vars(3), ParamScalar(s * (s - ParamPoly(Rational(1))))));
}

TEST_CASE("printed C~_ij display for n=4, B={3,4}", "[reduced]")
{
	// single u-window sum_{l=2}^{2} u_l, with d_{u_3} dropped
	auto uv = u_vars(4);
	auto expected = parse_weyl("-(u2^2) d2 (d1 - d2) + 2 nu3 u2 d2 - 2 nu4 u2 (d1 - d2)"
	                           " + (nu3 + nu4)(nu3 + nu4 - 1)",
	                           uv);
	CHECK(printed_tilde(4, {3, 4}) == expected);
}

TEST_CASE("gauged action matrices", "[reduced]")
{
	// singleton: nu_i (nu_i - 1) times the identity
	auto M = gauged_action_matrix(3, 2, {2});
	ParamPoly nu2 = ParamPoly::nu(2);
	ParamScalar c(nu2 * (nu2 - ParamPoly(Rational(1))));
	for (size_t i = 0; i < M.rows; ++i)
		for (size_t j = 0; j < M.cols; ++j)
			CHECK(M.at(i, j) == (i == j ? c : ParamScalar(0)));

	// n=3, k=1, B={1,2}: trace = lambda(0) + lambda(1)
	auto T = gauged_action_matrix(3, 1, {1, 2});
	REQUIRE(T.rows == 2);
	ParamScalar trace = T.at(0, 0) + T.at(1, 1);
	ParamPoly s = ParamPoly::nu(1) + ParamPoly::nu(2);
	ParamScalar expected(s * (s - ParamPoly(Rational(1))) +
	                     (s + ParamPoly(Rational(1))) * s);
	CHECK(trace == expected);

	// B = [n]: scalar matrix (k + |nu|)(k - 1 + |nu|)
	auto F = gauged_action_matrix(3, 2, {1, 2, 3});
	ParamPoly t = ParamPoly(Rational(2)) + ParamPoly::nu(1) + ParamPoly::nu(2) + ParamPoly::nu(3);
	ParamScalar lam(t * (t - ParamPoly(Rational(1))));
	for (size_t i = 0; i < F.rows; ++i)
		for (size_t j = 0; j < F.cols; ++j)
			CHECK(F.at(i, j) == (i == j ? lam : ParamScalar(0)));
}

TEST_CASE("printed realization matches the gauged matrices", "[reduced]")
{
	for (int k = 0; k <= 3; ++k)
	{
		INFO("n=3 k=" << k);
		CHECK(verify_reduced(3, k, {1, 2}).pass);
	}
	// n=3 edge of the displays: the 1j and 2j families at j = 3
	CHECK(verify_reduced(3, 2, {1, 3}).pass);
	CHECK(verify_reduced(3, 2, {2, 3}).pass);

	for (auto &B : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}})
	{
		INFO("n=4 B=" << subset_str(B));
		CHECK(verify_reduced(4, 2, B).pass);
	}
}

TEST_CASE("degree preservation of the printed operators", "[reduced]")
{
	int n = 4, k = 3;
	auto exps = u_basis_exponents(n, k);
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
		{
			auto op = printed_tilde(n, {i, j}).substitute_param(0, Rational(k));
			for (auto &e : exps)
			{
				auto img = weyl_apply(op, LaurentPoly::monomial(u_vars(n), e, ParamScalar(1)));
				CHECK(img.total_degree() <= k);
				CHECK(!img.has_negative_exponents());
			}
		}
}

namespace {

// matrix of C~_B on Pi_k from the printed pair/singleton formulas, larger
// sets expanded linearly
Matrix<ParamScalar> printed_matrix(int n, int k, const std::vector<int> &B)
{
	if (B.size() <= 2)
		return tilde_action_matrix(n, k, B);
	size_t dim = u_basis_exponents(n, k).size();
	Matrix<ParamScalar> M(dim, dim);
	for (size_t i = 0; i < B.size(); ++i)
		for (size_t j = i + 1; j < B.size(); ++j)
			M = M + tilde_action_matrix(n, k, {B[i], B[j]});
	ParamScalar f(Rational(static_cast<long>(B.size()) - 2));
	for (int i : B)
	{
		auto S = tilde_action_matrix(n, k, {i});
		for (auto &x : S.a)
			x *= f;
		M = M - S;
	}
	return M;
}

} // namespace

TEST_CASE("printed operators satisfy the Racah relations as matrices", "[reduced]")
{
	int n = 4, k = 2;
	// commutation lemma on Pi_k
	auto c12 = printed_matrix(n, k, {1, 2});
	auto c34 = printed_matrix(n, k, {3, 4});
	auto c123 = printed_matrix(n, k, {1, 2, 3});
	CHECK((c12 * c34 - c34 * c12).is_zero());
	CHECK((c12 * c123 - c123 * c12).is_zero());

	// rank-1 relations for K={1}, L={2}, M={3,4}
	auto ckl = printed_matrix(n, k, {1, 2});
	auto clm = printed_matrix(n, k, {2, 3, 4});
	auto ckm = printed_matrix(n, k, {1, 3, 4});
	auto cklm = printed_matrix(n, k, {1, 2, 3, 4});
	auto ck = printed_matrix(n, k, {1});
	auto cl = printed_matrix(n, k, {2});
	auto cm = printed_matrix(n, k, {3, 4});
	auto comm = [](const Matrix<ParamScalar> &a, const Matrix<ParamScalar> &b) {
		return a * b - b * a;
	};
	auto f2 = comm(ckl, clm); // 2F
	CHECK(f2 == comm(ckm, ckl));
	CHECK(f2 == comm(clm, ckm));
	auto scale_half = [](Matrix<ParamScalar> m) {
		for (auto &x : m.a)
			x *= ParamScalar(rational(1, 2));
		return m;
	};
	auto f = scale_half(f2);
	CHECK(comm(ckl, f) == clm * ckl - ckl * ckm + (cl - ck) * (cm - cklm));
	CHECK(comm(clm, f) == ckm * clm - clm * ckl + (cm - cl) * (ck - cklm));
	CHECK(comm(ckm, f) == ckl * ckm - ckm * clm + (ck - cm) * (cl - cklm));

	// C~_[n] is the expected scalar
	ParamPoly t = ParamPoly(Rational(k));
	for (int i = 1; i <= n; ++i)
		t += ParamPoly::nu(static_cast<unsigned>(i));
	ParamScalar lam(t * (t - ParamPoly(Rational(1))));
	for (size_t i = 0; i < cklm.rows; ++i)
		for (size_t j = 0; j < cklm.cols; ++j)
			CHECK(cklm.at(i, j) == (i == j ? lam : ParamScalar(0)));
}
