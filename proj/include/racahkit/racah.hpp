#pragma once

#include "racahkit/su11.hpp"

namespace racahkit {

inline std::string subset_str(const std::vector<int> &s)
{
	std::string r = "{";
	for (size_t i = 0; i < s.size(); ++i)
		r += (i ? "," : "") + std::to_string(s[i]);
	return r + "}";
}

inline bool subsets_disjoint(const std::vector<int> &a, const std::vector<int> &b)
{
	for (int x : a)
		for (int y : b)
			if (x == y)
				return false;
	return true;
}

inline bool subset_contains(const std::vector<int> &big, const std::vector<int> &small)
{
	for (int x : small)
		if (std::find(big.begin(), big.end(), x) == big.end())
			return false;
	return true;
}

inline std::vector<int> subset_union(std::vector<int> a, const std::vector<int> &b)
{
	a.insert(a.end(), b.begin(), b.end());
	std::sort(a.begin(), a.end());
	a.erase(std::unique(a.begin(), a.end()), a.end());
	return a;
}

// Three pairwise disjoint nonempty subsets of [n].
struct SubsetTriple
{
	std::vector<int> K, L, M;

	SubsetTriple(int n, std::vector<int> k, std::vector<int> l, std::vector<int> m)
	    : K(checked_subset(n, std::move(k))), L(checked_subset(n, std::move(l))),
	      M(checked_subset(n, std::move(m)))
	{
		if (!subsets_disjoint(K, L) || !subsets_disjoint(K, M) || !subsets_disjoint(L, M))
			throw Error(ErrorCode::InvalidArgument, "subsets not pairwise disjoint");
	}
};

// [C_A, C_B] = 0 whenever A and B are nested or disjoint. Other pairs are
// outside the lemma and rejected.
inline VerificationReport check_commute(int n, const std::vector<int> &A_in,
                                        const std::vector<int> &B_in, ModelKind kind)
{
	auto A = checked_subset(n, A_in), B = checked_subset(n, B_in);
	if (!subset_contains(A, B) && !subset_contains(B, A) && !subsets_disjoint(A, B))
		throw Error(ErrorCode::UnsupportedPair,
		            "subsets " + subset_str(A) + ", " + subset_str(B) + " neither nested nor disjoint");
	WeylOp ca = casimir(n, A, kind), cb = casimir(n, B, kind);
	return make_report("[C_" + subset_str(A) + ", C_" + subset_str(B) + "] = 0",
	                   weyl_commutator(ca, cb), WeylOp::zero(ca.vars()), n, kind, {A, B});
}

struct FResult
{
	WeylOp F;
	std::vector<VerificationReport> agreement; // the three 2F expressions coincide
};

// 2F := [C_{KL}, C_{LM}] = [C_{KM}, C_{KL}] = [C_{LM}, C_{KM}].
inline FResult compute_F(int n, const SubsetTriple &t, ModelKind kind)
{
	WeylOp ckl = casimir(n, subset_union(t.K, t.L), kind);
	WeylOp clm = casimir(n, subset_union(t.L, t.M), kind);
	WeylOp ckm = casimir(n, subset_union(t.K, t.M), kind);
	WeylOp f1 = weyl_commutator(ckl, clm);
	WeylOp f2 = weyl_commutator(ckm, ckl);
	WeylOp f3 = weyl_commutator(clm, ckm);
	FResult r;
	r.F = f1 * ParamScalar(rational(1, 2));
	std::string tag = subset_str(t.K) + subset_str(t.L) + subset_str(t.M);
	r.agreement.push_back(
	    make_report("2F " + tag + ": [C_KL,C_LM] = [C_KM,C_KL]", f1, f2, n, kind, {t.K, t.L, t.M}));
	r.agreement.push_back(
	    make_report("2F " + tag + ": [C_KL,C_LM] = [C_LM,C_KM]", f1, f3, n, kind, {t.K, t.L, t.M}));
	return r;
}

// The rank-1 relations
//   [C_KL, F] = C_LM C_KL - C_KL C_KM + (C_L - C_K)(C_M - C_KLM)
// and their two cyclic companions, as exact operator identities.
inline std::vector<VerificationReport> verify_rank1(int n, const SubsetTriple &t, ModelKind kind)
{
	WeylOp ck = casimir(n, t.K, kind), cl = casimir(n, t.L, kind), cm = casimir(n, t.M, kind);
	WeylOp ckl = casimir(n, subset_union(t.K, t.L), kind);
	WeylOp clm = casimir(n, subset_union(t.L, t.M), kind);
	WeylOp ckm = casimir(n, subset_union(t.K, t.M), kind);
	WeylOp cklm = casimir(n, subset_union(subset_union(t.K, t.L), t.M), kind);
	WeylOp f = weyl_commutator(ckl, clm) * ParamScalar(rational(1, 2));
	std::string tag = subset_str(t.K) + subset_str(t.L) + subset_str(t.M);
	std::vector<VerificationReport> out;
	out.push_back(make_report("rank1 " + tag + ": [C_KL,F]", weyl_commutator(ckl, f),
	                          clm * ckl - ckl * ckm + (cl - ck) * (cm - cklm), n, kind,
	                          {t.K, t.L, t.M}));
	out.push_back(make_report("rank1 " + tag + ": [C_LM,F]", weyl_commutator(clm, f),
	                          ckm * clm - clm * ckl + (cm - cl) * (ck - cklm), n, kind,
	                          {t.K, t.L, t.M}));
	out.push_back(make_report("rank1 " + tag + ": [C_KM,F]", weyl_commutator(ckm, f),
	                          ckl * ckm - ckm * clm + (ck - cm) * (cl - cklm), n, kind,
	                          {t.K, t.L, t.M}));
	return out;
}

// C_A = sum_{{i,j} in A} C_ij - (|A|-2) sum_{i in A} C_i.
inline VerificationReport casimir_linear_expansion(int n, const std::vector<int> &A_in,
                                                   ModelKind kind)
{
	auto A = checked_subset(n, A_in);
	if (A.size() < 2)
		throw Error(ErrorCode::InvalidArgument, "|A| must be >= 2");
	WeylOp lhs = casimir(n, A, kind);
	WeylOp rhs = WeylOp::zero(lhs.vars());
	for (size_t i = 0; i < A.size(); ++i)
		for (size_t j = i + 1; j < A.size(); ++j)
			rhs += casimir(n, {A[i], A[j]}, kind);
	ParamScalar factor(Rational(static_cast<long>(A.size()) - 2));
	for (int i : A)
		rhs -= casimir(n, {i}, kind) * factor;
	return make_report("C_" + subset_str(A) + " linear expansion", lhs, rhs, n, kind, {A});
}

// All pairwise commutators along the maximal chain [2] c [3] c ... c [n].
inline std::vector<VerificationReport> labelling_chain_commutes(int n, ModelKind kind)
{
	std::vector<WeylOp> chain;
	std::vector<std::vector<int>> sets;
	for (int l = 2; l <= n; ++l)
	{
		sets.push_back(full_set(l));
		chain.push_back(casimir(n, sets.back(), kind));
	}
	std::vector<VerificationReport> out;
	for (size_t i = 0; i < chain.size(); ++i)
		for (size_t j = i + 1; j < chain.size(); ++j)
			out.push_back(make_report("labelling [C_" + subset_str(sets[i]) + ", C_" +
			                              subset_str(sets[j]) + "] = 0",
			                          weyl_commutator(chain[i], chain[j]),
			                          WeylOp::zero(chain[i].vars()), n, kind,
			                          {sets[i], sets[j]}));
	return out;
}

inline std::vector<std::vector<int>> all_nonempty_subsets(int n)
{
	std::vector<std::vector<int>> out;
	for (unsigned mask = 1; mask < (1u << n); ++mask)
	{
		std::vector<int> s;
		for (int i = 0; i < n; ++i)
			if (mask & (1u << i))
				s.push_back(i + 1);
		out.push_back(std::move(s));
	}
	return out;
}

} // namespace racahkit
