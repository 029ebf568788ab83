#pragma once

#include "racahkit/report.hpp"
#include "racahkit/text.hpp"
#include <set>

namespace racahkit {

// Validated subset of [n], kept sorted.
inline std::vector<int> checked_subset(int n, std::vector<int> subset)
{
	if (n < 1)
		throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
	if (subset.empty())
		throw Error(ErrorCode::InvalidArgument, "empty subset");
	std::sort(subset.begin(), subset.end());
	subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
	if (subset.front() < 1 || subset.back() > n)
		throw Error(ErrorCode::InvalidArgument, "subset index out of range");
	return subset;
}

inline std::vector<int> full_set(int n)
{
	std::vector<int> s(static_cast<size_t>(n));
	for (int i = 0; i < n; ++i)
		s[static_cast<size_t>(i)] = i + 1;
	return s;
}

// The su(1,1) ladder triple realized over a subset A of the n coordinates.
struct RealizationTriple
{
	WeylOp plus, minus, zero;
	std::vector<int> subset;
	ModelKind kind = ModelKind::Bargmann;
	int n = 0;
};

// Bargmann: K+ = sum x_j^2 d_j + 2 nu_j x_j, K- = sum d_j, K0 = sum x_j d_j + nu_j.
// Barut-Girardello: L+ = sum x_j, L- = sum x_j d_j^2 + 2 nu_j d_j, same L0.
inline RealizationTriple make_realization(int n, const std::vector<int> &A, ModelKind kind)
{
	auto subset = checked_subset(n, A);
	auto vars = indexed_vars("x", n);
	WeylOp plus(vars), minus(vars), zero(vars);
	for (int i : subset)
	{
		size_t v = static_cast<size_t>(i - 1);
		ParamScalar two_nu(ParamPoly::nu(static_cast<unsigned>(i)) * Rational(2));
		WeylOp x = WeylOp::coordinate(vars, v);
		WeylOp d = WeylOp::derivative(vars, v);
		zero += x * d + WeylOp::constant(vars, ParamScalar(ParamPoly::nu(static_cast<unsigned>(i))));
		if (kind == ModelKind::Bargmann)
		{
			plus += WeylOp::coordinate(vars, v, 2) * d + x * two_nu;
			minus += d;
		}
		else
		{
			plus += x;
			minus += x * WeylOp::derivative(vars, v, 2) + d * two_nu;
		}
	}
	return RealizationTriple{std::move(plus), std::move(minus), std::move(zero), subset, kind, n};
}

// Intermediate Casimir C_A = zero^2 - zero - plus o minus, normal ordered.
inline WeylOp casimir(int n, const std::vector<int> &A, ModelKind kind)
{
	auto t = make_realization(n, A, kind);
	return t.zero * t.zero - t.zero - t.plus * t.minus;
}

inline WeylOp casimir(const RealizationTriple &t)
{
	return t.zero * t.zero - t.zero - t.plus * t.minus;
}

// Checks the three defining brackets exactly; failures become report
// outcomes, never exceptions.
inline std::vector<VerificationReport> verify_su11(const RealizationTriple &t)
{
	std::vector<VerificationReport> out;
	auto subset_str = [&] {
		std::string s = "{";
		for (size_t i = 0; i < t.subset.size(); ++i)
			s += (i ? "," : "") + std::to_string(t.subset[i]);
		return s + "}";
	}();
	out.push_back(make_report("su11 [zero,plus] = plus over " + subset_str,
	                          weyl_commutator(t.zero, t.plus), t.plus, t.n, t.kind,
	                          {t.subset}));
	out.push_back(make_report("su11 [zero,minus] = -minus over " + subset_str,
	                          weyl_commutator(t.zero, t.minus), -t.minus, t.n, t.kind,
	                          {t.subset}));
	out.push_back(make_report("su11 [minus,plus] = 2 zero over " + subset_str,
	                          weyl_commutator(t.minus, t.plus), t.zero * ParamScalar(2), t.n,
	                          t.kind, {t.subset}));
	return out;
}

// x <-> d transposition composed with the plus/minus swap: carries the
// Bargmann triple onto the Barut-Girardello one.
inline RealizationTriple transpose_swap(const RealizationTriple &t)
{
	RealizationTriple r;
	r.plus = t.minus.transpose();
	r.minus = t.plus.transpose();
	r.zero = t.zero.transpose();
	r.subset = t.subset;
	r.n = t.n;
	r.kind = t.kind == ModelKind::Bargmann ? ModelKind::BarutGirardello : ModelKind::Bargmann;
	return r;
}

} // namespace racahkit
