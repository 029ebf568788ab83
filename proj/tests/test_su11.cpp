#include "test_util.hpp"
#include <catch2/catch_amalgamated.hpp>

using namespace racahkit;

TEST_CASE("realization operators match the model definitions", "[su11]")
{
	auto v1 = indexed_vars("x", 1);
	auto t = make_realization(1, {1}, ModelKind::Bargmann);
	CHECK(t.plus == parse_weyl("x1^2 d1 + 2 nu1 x1", v1));
	CHECK(t.minus == parse_weyl("d1", v1));
	CHECK(t.zero == parse_weyl("x1 d1 + nu1", v1));

	auto v2 = indexed_vars("x", 2);
	auto bg = make_realization(2, {1, 2}, ModelKind::BarutGirardello);
	CHECK(bg.plus == parse_weyl("x1 + x2", v2));
	CHECK(bg.minus == parse_weyl("x1 d1^2 + 2 nu1 d1 + x2 d2^2 + 2 nu2 d2", v2));

	auto v3 = indexed_vars("x", 3);
	auto mid = make_realization(3, {2}, ModelKind::Bargmann);
	CHECK(mid.zero == parse_weyl("x2 d2 + nu2", v3));
}

TEST_CASE("realization argument checks", "[su11]")
{
	CHECK_THROWS_AS(make_realization(3, {}, ModelKind::Bargmann), Error);
	CHECK_THROWS_AS(make_realization(3, {4}, ModelKind::Bargmann), Error);
	CHECK_THROWS_AS(make_realization(0, {1}, ModelKind::Bargmann), Error);
}

TEST_CASE("su(1,1) relations hold for every subset", "[su11]")
{
	for (auto kind : {ModelKind::Bargmann, ModelKind::BarutGirardello})
		for (int n = 1; n <= 4; ++n)
			for (auto &A : all_nonempty_subsets(n))
				for (auto &r : verify_su11(make_realization(n, A, kind)))
				{
					INFO(r.identity);
					CHECK(r.pass);
				}
}

TEST_CASE("swapped ladder operators fail with residual -4 zero", "[su11]")
{
	auto t = make_realization(2, {1, 2}, ModelKind::Bargmann);
	std::swap(t.plus, t.minus);
	auto rs = verify_su11(t);
	CHECK(rs[0].pass == false);
	CHECK(rs[1].pass == false);
	CHECK(rs[2].pass == false);
	// [minus', plus'] - 2 zero = -4 zero
	REQUIRE(rs[2].residual);
	CHECK(*rs[2].residual == make_realization(2, {1, 2}, ModelKind::Bargmann).zero * ParamScalar(-4));
}

TEST_CASE("casimir closed forms", "[su11]")
{
	// singleton: the constant nu_i (nu_i - 1), either model
	auto v2 = indexed_vars("x", 2);
	auto expect = WeylOp::constant(
	    v2, ParamScalar(ParamPoly::nu(2) * (ParamPoly::nu(2) - ParamPoly(Rational(1)))));
	CHECK(casimir(2, {2}, ModelKind::Bargmann) == expect);
	CHECK(casimir(2, {2}, ModelKind::BarutGirardello) == expect);

	// Bargmann pair
	auto v3 = indexed_vars("x", 3);
	CHECK(casimir(3, {2, 3}, ModelKind::Bargmann) ==
	      parse_weyl("-(x2 - x3)^2 d2 d3 + 2 nu3 (x2 - x3) d2 - 2 nu2 (x2 - x3) d3"
	                 " + (nu2 + nu3)(nu2 + nu3 - 1)",
	                 v3));
}

TEST_CASE("casimir is central in its own realization", "[su11]")
{
	for (auto kind : {ModelKind::Bargmann, ModelKind::BarutGirardello})
	{
		auto t = make_realization(3, {1, 3}, kind);
		auto c = casimir(t);
		CHECK(weyl_commutator(c, t.plus).is_zero());
		CHECK(weyl_commutator(c, t.minus).is_zero());
		CHECK(weyl_commutator(c, t.zero).is_zero());
	}
}

TEST_CASE("disjoint subsets commute and add up", "[su11]")
{
	for (auto kind : {ModelKind::Bargmann, ModelKind::BarutGirardello})
	{
		auto a = make_realization(4, {1, 2}, kind);
		auto b = make_realization(4, {3, 4}, kind);
		for (const WeylOp *x : {&a.plus, &a.minus, &a.zero})
			for (const WeylOp *y : {&b.plus, &b.minus, &b.zero})
				CHECK(weyl_commutator(*x, *y).is_zero());

		auto u = make_realization(4, {1, 2, 3, 4}, kind);
		CHECK(u.plus == a.plus + b.plus);
		CHECK(u.minus == a.minus + b.minus);
		CHECK(u.zero == a.zero + b.zero);
	}
}

TEST_CASE("x <-> d transposition swaps the models", "[su11]")
{
	for (int n = 1; n <= 3; ++n)
		for (auto &A : all_nonempty_subsets(n))
		{
			auto barg = make_realization(n, A, ModelKind::Bargmann);
			auto bg = make_realization(n, A, ModelKind::BarutGirardello);
			auto mapped = transpose_swap(barg);
			CHECK(mapped.plus == bg.plus);
			CHECK(mapped.minus == bg.minus);
			CHECK(mapped.zero == bg.zero);
		}
}
