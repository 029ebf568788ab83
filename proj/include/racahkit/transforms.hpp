#pragma once

#include "racahkit/harmonics.hpp"

namespace racahkit {

// Weighted Laplace transform, defined by its action on monomials:
//   prod x_i^{m_i}  ->  prod (2 nu_i)_{m_i} rho_i^{m_i},
// the target coordinates reuse the x-names. The i-th variable carries nu_i.
struct LaplaceMap
{
	int n = 0;
};

inline LaurentPoly laplace_poly(const LaurentPoly &p, const LaplaceMap & = {})
{
	require_polynomial(p, "Laplace input");
	LaurentPoly r(p.vars());
	for (auto &[e, c] : p.terms())
	{
		ParamScalar w = c;
		for (size_t i = 0; i < e.size(); ++i)
			if (e[i] > 0)
				w *= ParamScalar::pochhammer(ParamPoly::nu(static_cast<unsigned>(i + 1)) * Rational(2),
				                             static_cast<unsigned>(e[i]));
		r.add_term(e, w);
	}
	return r;
}

// Unique c with f = c * g, if it exists.
inline std::optional<ParamScalar> proportionality_constant(const LaurentPoly &f,
                                                           const LaurentPoly &g)
{
	if (g.is_zero())
		return f.is_zero() ? std::optional<ParamScalar>(ParamScalar(0)) : std::nullopt;
	auto &[lead_e, lead_c] = *g.terms().rbegin();
	ParamScalar c = f.coefficient(lead_e) / lead_c;
	if (f == g * c)
		return c;
	return std::nullopt;
}

// L(L_pm f) = K_pm L(f) and L(L_0 f) = K_0 L(f) for every monomial f of
// degree <= D in n variables.
inline VerificationReport verify_intertwine(int degree_bound, int n)
{
	auto barg = make_realization(n, full_set(n), ModelKind::Bargmann);
	auto bg = make_realization(n, full_set(n), ModelKind::BarutGirardello);
	auto vars = indexed_vars("x", n);
	VerificationReport r;
	r.identity = "laplace intertwines BG with Bargmann up to degree " +
	             std::to_string(degree_bound);
	r.n = n;
	r.pass = true;
	for (int d = 0; d <= degree_bound; ++d)
		for (auto &e : monomials_of_degree(d, n))
		{
			LaurentPoly f = LaurentPoly::monomial(vars, e, ParamScalar(1));
			LaurentPoly lf = laplace_poly(f);
			const std::pair<const WeylOp *, const WeylOp *> pairs[] = {
			    {&bg.plus, &barg.plus}, {&bg.minus, &barg.minus}, {&bg.zero, &barg.zero}};
			for (auto &[lop, kop] : pairs)
			{
				LaurentPoly lhs = laplace_poly(weyl_apply(*lop, f));
				LaurentPoly rhs = weyl_apply(*kop, lf);
				if (lhs != rhs)
				{
					r.pass = false;
					r.residual_terms.push_back("monomial " + f.str() + ": " + (lhs - rhs).str());
				}
			}
		}
	return r;
}

// L(CK^BG(p)) = CK(L(p)) for all monomials p of degree <= D in n-1 variables.
inline VerificationReport verify_ck_commutation(int degree_bound, int n)
{
	auto vars = indexed_vars("x", n - 1);
	VerificationReport r;
	r.identity = "laplace commutes with CK extension up to degree " + std::to_string(degree_bound);
	r.n = n;
	r.pass = true;
	for (int d = 0; d <= degree_bound; ++d)
		for (auto &e : monomials_of_degree(d, n - 1))
		{
			LaurentPoly p = LaurentPoly::monomial(vars, e, ParamScalar(1));
			LaurentPoly lhs = laplace_poly(ck_extend(p, ModelKind::BarutGirardello));
			LaurentPoly rhs = ck_extend(laplace_poly(p), ModelKind::Bargmann);
			if (lhs != rhs)
			{
				r.pass = false;
				r.residual_terms.push_back("monomial " + p.str() + ": " + (lhs - rhs).str());
			}
		}
	return r;
}

struct BasisMapEntry
{
	BasisLabel label;
	ParamScalar constant; // L(psi^BG) = constant * psi
};

struct BasisMapResult
{
	std::vector<BasisMapEntry> entries;
	VerificationReport report;
};

// Maps the BG basis through the Laplace transform onto the Bargmann basis,
// recording the proportionality constant per label.
inline BasisMapResult map_basis_laplace(int n, int k)
{
	BasisMapResult out;
	out.report.identity = "laplace maps BG basis onto Bargmann basis, n=" + std::to_string(n) +
	                      " k=" + std::to_string(k);
	out.report.n = n;
	out.report.pass = true;
	WeylOp k_minus = lowering_op(n, ModelKind::Bargmann);
	for (auto &[label, psi_bg] : build_basis(n, k, ModelKind::BarutGirardello))
	{
		LaurentPoly image = laplace_poly(psi_bg);
		LaurentPoly psi = build_basis_element(label, ModelKind::Bargmann, BasisOrder::Standard);
		if (!weyl_apply(k_minus, image).is_zero())
		{
			out.report.pass = false;
			out.report.residual_terms.push_back("label " + label.str() + ": image not harmonic");
			continue;
		}
		auto c = proportionality_constant(image, psi);
		if (!c)
			throw Error(ErrorCode::NotProportional,
			            "label " + label.str() + ": image is no scalar multiple of psi");
		out.entries.push_back(BasisMapEntry{label, *c});
	}
	return out;
}

// The Miller-model data: potential coefficients and the angular operator.
struct MillerForm
{
	int n = 0;
	std::vector<ParamScalar> b; // (2 nu_i - 1)^2 - 1/4
	WeylOp angular;             // sum_{i<j} (z_j d_i - z_i d_j)^2

	static MillerForm make(int n)
	{
		MillerForm m;
		m.n = n;
		auto zv = indexed_vars("z", n);
		m.angular = WeylOp::zero(zv);
		for (int i = 1; i <= n; ++i)
		{
			ParamPoly t = ParamPoly::nu(static_cast<unsigned>(i)) * Rational(2) - ParamPoly(Rational(1));
			m.b.push_back(ParamScalar(t * t - ParamPoly(rational(1, 4))));
		}
		for (size_t i = 0; i < static_cast<size_t>(n); ++i)
			for (size_t j = i + 1; j < static_cast<size_t>(n); ++j)
			{
				WeylOp l = WeylOp::coordinate(zv, j) * WeylOp::derivative(zv, i) -
				           WeylOp::coordinate(zv, i) * WeylOp::derivative(zv, j);
				m.angular += l * l;
			}
		return m;
	}
};

struct MillerReduction
{
	WeylOp H;      // sum d_{z_j}^2 + (4 nu_j - 1)/z_j d_{z_j}
	WeylOp Htilde; // gauged form Delta_z - sum b_j / z_j^2
	std::vector<ParamScalar> b;
	std::vector<VerificationReport> reports;
};

// BG lowering -> x = z^2 change of variables -> gauge by z_j^{2 nu_j - 1/2}.
inline MillerReduction miller_reduce(int n)
{
	MillerReduction out;
	WeylOp lower = lowering_op(n, ModelKind::BarutGirardello);
	WeylOp changed = weyl_square_change_of_vars(lower);
	auto zv = changed.vars();

	// H as printed: 4x the transformed operator
	out.H = changed * ParamScalar(4);
	WeylOp h_printed(zv);
	for (size_t j = 0; j < static_cast<size_t>(n); ++j)
	{
		ParamPoly c = ParamPoly::nu(static_cast<unsigned>(j + 1)) * Rational(4) - ParamPoly(Rational(1));
		h_printed += WeylOp::derivative(zv, j, 2) +
		             WeylOp::coordinate(zv, j, -1) * WeylOp::derivative(zv, j) * ParamScalar(c);
	}
	out.reports.push_back(make_report(
	    "square change of variables yields (1/4) sum (d_j^2 + (4 nu_j - 1)/z_j d_j)",
	    changed * ParamScalar(4), h_printed, n, ModelKind::BarutGirardello));

	GaugeExponent g{std::vector<ParamScalar>()};
	for (int j = 1; j <= n; ++j)
		g.s.push_back(ParamScalar(ParamPoly::nu(static_cast<unsigned>(j)) * Rational(2) -
		                          ParamPoly(rational(1, 2))));
	out.Htilde = weyl_gauge_conjugate(out.H, g);

	MillerForm mf = MillerForm::make(n);
	out.b = mf.b;
	WeylOp target(zv);
	for (size_t j = 0; j < static_cast<size_t>(n); ++j)
		target += WeylOp::derivative(zv, j, 2) -
		          WeylOp::coordinate(zv, j, -2) * mf.b[j];
	out.reports.push_back(make_report("gauged operator is Delta_z - sum ((2 nu_j - 1)^2 - 1/4)/z_j^2",
	                                  out.Htilde, target, n, ModelKind::BarutGirardello));
	return out;
}

// Euler decomposition r^2 Delta = E(E + n - 2) + sum_{i<j}(z_j d_i - z_i d_j)^2,
// the exact-operator stand-in for restricting to the unit sphere.
inline VerificationReport sphere_identity_check(int n)
{
	if (n < 2)
		throw Error(ErrorCode::InvalidArgument, "need n >= 2");
	auto zv = indexed_vars("z", n);
	WeylOp laplace(zv), euler(zv), r2(zv);
	for (size_t j = 0; j < static_cast<size_t>(n); ++j)
	{
		laplace += WeylOp::derivative(zv, j, 2);
		euler += WeylOp::coordinate(zv, j) * WeylOp::derivative(zv, j);
		r2 += WeylOp::coordinate(zv, j, 2);
	}
	WeylOp lhs = r2 * laplace;
	WeylOp rhs = euler * euler + euler * ParamScalar(Rational(n - 2)) + MillerForm::make(n).angular;
	return make_report("r^2 Delta = E(E + n - 2) + angular, n=" + std::to_string(n), lhs, rhs, n);
}

struct HyperplaneFactorization
{
	LaurentPoly restricted;        // psi~^BG on x_1 + ... + x_n = 1
	LaurentPoly jacobi_product;    // the displayed Jacobi product
	ParamScalar constant;          // restricted = constant * jacobi_product
	std::vector<ParamScalar> factor_constants; // (-1)^{j_m} j_m! / (2 nu_m)_{j_m}
	VerificationReport report;
};

// Restricts the permuted BG basis element to the hyperplane and verifies the
// factorization into Jacobi polynomials with
//   alpha_m = -1 + 2 sum_{l>m} j_l + 2 sum_{l>m} nu_l,  beta_m = 2 nu_m - 1.
inline HyperplaneFactorization hyperplane_eigenfunctions(int n, const BasisLabel &label)
{
	HyperplaneFactorization out;
	LaurentPoly psi = build_basis_element(label, ModelKind::BarutGirardello, BasisOrder::Permuted);
	auto restricted_vars = indexed_vars("x", n - 1);
	LaurentPoly image = LaurentPoly::one(restricted_vars);
	for (int i = 1; i < n; ++i)
		image -= LaurentPoly::variable(restricted_vars, static_cast<size_t>(i - 1));
	out.restricted = poly_affine_substitute(psi, {{"x" + std::to_string(n), image}});

	out.jacobi_product = LaurentPoly::one(restricted_vars);
	ParamScalar predicted(1);
	for (int m = 1; m <= n - 1; ++m)
	{
		int jm = label.j[static_cast<size_t>(m - 1)];
		ParamPoly alpha(Rational(-1));
		for (int l = m + 1; l <= n - 1; ++l)
			alpha += ParamPoly(Rational(2 * label.j[static_cast<size_t>(l - 1)]));
		for (int l = m + 1; l <= n; ++l)
			alpha += ParamPoly::nu(static_cast<unsigned>(l)) * Rational(2);
		ParamPoly beta = ParamPoly::nu(static_cast<unsigned>(m)) * Rational(2) - ParamPoly(Rational(1));
		LaurentPoly v = LaurentPoly::variable(restricted_vars, static_cast<size_t>(m - 1));
		LaurentPoly u = LaurentPoly::one(restricted_vars);
		for (int i = 1; i <= m; ++i)
			u -= LaurentPoly::variable(restricted_vars, static_cast<size_t>(i - 1));
		out.jacobi_product *= jacobi_weighted(jm, alpha, beta, v, u);
		ParamScalar fc(Rational(factorial(static_cast<unsigned>(jm))));
		if (jm % 2 != 0)
			fc = -fc;
		fc /= ParamScalar::pochhammer(ParamPoly::nu(static_cast<unsigned>(m)) * Rational(2),
		                              static_cast<unsigned>(jm));
		out.factor_constants.push_back(fc);
		predicted *= fc;
	}

	auto c = proportionality_constant(out.restricted, out.jacobi_product);
	if (!c)
		throw Error(ErrorCode::NotFactorizable,
		            "label " + label.str() + ": restriction does not factor");
	out.constant = *c;
	out.report = make_flag_report("hyperplane factorization, label " + label.str(),
	                              *c == predicted, n, ModelKind::BarutGirardello,
	                              {"constant " + c->str() + " vs predicted " + predicted.str()});
	return out;
}

} // namespace racahkit
