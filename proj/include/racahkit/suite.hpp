#pragma once

#include "racahkit/reduced.hpp"
#include "racahkit/transforms.hpp"
#include <json.hpp>

namespace racahkit {

using ordered_json = nlohmann::ordered_json;

struct RunConfig
{
	std::string command;      // su11 | racah | basis | reduced | laplace | miller | all
	int n = 3;
	int k = 2;
	std::optional<ModelKind> model; // verification suites default to both
	std::vector<int> subset;
	std::map<unsigned, Rational> nu_values;
	int degree = 4;
	std::string out_path;
	std::string emit = "json"; // json | text
	std::string suite = "all"; // racah: commute | rank1 | expansion | all
	std::string explicit_form; // basis: "" | jacobi
	bool all_pairs = false;
	bool emit_op = false;
	bool no_timing = false;
	int max_op_n = 6; // operator-level guard; RACAHKIT_MAX_N overrides
};

namespace suite_detail {

inline std::vector<ModelKind> models_of(const RunConfig &cfg)
{
	if (cfg.model)
		return {*cfg.model};
	return {ModelKind::Bargmann, ModelKind::BarutGirardello};
}

inline void apply_specialization(VerificationReport &r, const std::map<unsigned, Rational> &nu)
{
	if (nu.empty())
		return;
	r.specialization = nu;
	if (r.residual)
	{
		WeylOp res = r.residual->evaluate_params(nu);
		r.pass = res.is_zero();
		r.residual_terms = r.pass ? std::vector<std::string>{} : printed_terms(res);
		r.residual = std::move(res);
	}
}

inline void push(SuiteReport &suite, VerificationReport r, const RunConfig &cfg, Stopwatch &sw)
{
	apply_specialization(r, cfg.nu_values);
	r.elapsed_ms = cfg.no_timing ? 0.0 : sw.ms();
	suite.append(std::move(r));
}

// ---- su11 ------------------------------------------------------------

inline ordered_json run_su11(const RunConfig &cfg, SuiteReport &out)
{
	ordered_json data;
	if (cfg.emit_op)
	{
		if (cfg.subset.empty())
			throw Error(ErrorCode::InvalidArgument, "--emit-op needs --subset");
		ModelKind kind = cfg.model.value_or(ModelKind::Bargmann);
		auto t = make_realization(cfg.n, cfg.subset, kind);
		data["model"] = to_string(kind);
		data["subset"] = t.subset;
		data["plus"] = t.plus.str();
		data["minus"] = t.minus.str();
		data["zero"] = t.zero.str();
		data["casimir"] = casimir(t).str();
		Stopwatch sw;
		for (auto &r : verify_su11(t))
			push(out, std::move(r), cfg, sw);
		return data;
	}
	for (ModelKind kind : models_of(cfg))
		for (auto &A : all_nonempty_subsets(cfg.n))
		{
			Stopwatch sw;
			auto rs = verify_su11(make_realization(cfg.n, A, kind));
			for (auto &r : rs)
				push(out, std::move(r), cfg, sw);
		}
	return data;
}

// ---- racah -----------------------------------------------------------

// Application-level fallback beyond the operator-level guard: residuals are
// checked on the monomial basis of P_k.
inline VerificationReport check_commute_on_monomials(int n, int k, const std::vector<int> &A,
                                                     const std::vector<int> &B, ModelKind kind)
{
	WeylOp ca = casimir(n, A, kind), cb = casimir(n, B, kind);
	auto vars = indexed_vars("x", n);
	VerificationReport r;
	r.identity = "[C_" + subset_str(A) + ", C_" + subset_str(B) + "] = 0 on P_" + std::to_string(k);
	r.n = n;
	r.model = kind;
	r.subsets = {A, B};
	r.pass = true;
	for (auto &e : monomials_of_degree(k, n))
	{
		LaurentPoly p = LaurentPoly::monomial(vars, e, ParamScalar(1));
		LaurentPoly res = weyl_apply(ca, weyl_apply(cb, p)) - weyl_apply(cb, weyl_apply(ca, p));
		if (!res.is_zero())
		{
			r.pass = false;
			r.residual_terms.push_back("on " + p.str() + ": " + res.str());
		}
	}
	return r;
}

inline std::vector<SubsetTriple> default_triples(int n)
{
	std::vector<SubsetTriple> ts;
	if (n == 3)
		ts.emplace_back(3, std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{3});
	else if (n >= 4)
	{
		ts.emplace_back(n, std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{3, 4});
		ts.emplace_back(n, std::vector<int>{1, 2}, std::vector<int>{3}, std::vector<int>{4});
	}
	return ts;
}

inline ordered_json run_racah(const RunConfig &cfg, SuiteReport &out)
{
	bool operator_level = cfg.n <= cfg.max_op_n;
	for (ModelKind kind : models_of(cfg))
	{
		if (cfg.suite == "commute" || cfg.suite == "all")
		{
			auto subsets = all_nonempty_subsets(cfg.n);
			for (auto &A : subsets)
				for (auto &B : subsets)
				{
					if (!subset_contains(A, B) && !subset_contains(B, A) &&
					    !subsets_disjoint(A, B))
						continue;
					Stopwatch sw;
					push(out,
					     operator_level ? check_commute(cfg.n, A, B, kind)
					                    : check_commute_on_monomials(cfg.n, cfg.k, A, B, kind),
					     cfg, sw);
				}
		}
		if (cfg.suite == "rank1" || cfg.suite == "all")
		{
			if (!operator_level)
				throw Error(ErrorCode::InvalidArgument,
				            "rank1 suite needs n <= " + std::to_string(cfg.max_op_n));
			for (auto &t : default_triples(cfg.n))
			{
				Stopwatch sw;
				auto fr = compute_F(cfg.n, t, kind);
				for (auto &r : fr.agreement)
					push(out, std::move(r), cfg, sw);
				for (auto &r : verify_rank1(cfg.n, t, kind))
					push(out, std::move(r), cfg, sw);
			}
		}
		if (cfg.suite == "expansion" || cfg.suite == "all")
		{
			if (!operator_level)
				throw Error(ErrorCode::InvalidArgument,
				            "expansion suite needs n <= " + std::to_string(cfg.max_op_n));
			for (auto &A : all_nonempty_subsets(cfg.n))
				if (A.size() >= 2)
				{
					Stopwatch sw;
					push(out, casimir_linear_expansion(cfg.n, A, kind), cfg, sw);
				}
			Stopwatch sw;
			for (auto &r : labelling_chain_commutes(cfg.n, kind))
				push(out, std::move(r), cfg, sw);
		}
	}
	return {};
}

// ---- basis -----------------------------------------------------------

inline ordered_json run_basis(const RunConfig &cfg, SuiteReport &out)
{
	ModelKind kind = cfg.model.value_or(ModelKind::Bargmann);
	if (cfg.explicit_form == "jacobi" && kind != ModelKind::BarutGirardello)
		throw Error(ErrorCode::InvalidArgument, "--explicit jacobi needs --model bg");
	ordered_json entries = ordered_json::array();
	WeylOp lower = lowering_op(cfg.n, kind);
	for (auto &[label, psi] : build_basis(cfg.n, cfg.k, kind))
	{
		Stopwatch sw;
		LaurentPoly shown = cfg.nu_values.empty() ? psi : psi.evaluate_params(cfg.nu_values);
		ordered_json entry;
		entry["label"] = label.j;
		entry["poly"] = shown.str();
		ordered_json eig = ordered_json::array();
		for (int ell = 2; ell <= cfg.n; ++ell)
		{
			auto lam = eigenvalue_lambda(label, ell);
			ParamScalar v = lam.value;
			eig.push_back({{"ell", ell},
			               {"value", cfg.nu_values.empty()
			                             ? v.str()
			                             : to_string(v.evaluate(cfg.nu_values))}});
		}
		entry["eigenvalues"] = eig;
		if (cfg.explicit_form == "jacobi")
		{
			LaurentPoly jac = bg_jacobi_explicit(label);
			entry["jacobi"] = (cfg.nu_values.empty() ? jac : jac.evaluate_params(cfg.nu_values)).str();
			push(out, make_poly_report("jacobi form matches chain, label " + label.str(), jac,
			                           psi, cfg.n, kind),
			     cfg, sw);
		}
		push(out,
		     make_poly_report("basis harmonicity, label " + label.str(), weyl_apply(lower, psi),
		                      LaurentPoly::zero(psi.vars()), cfg.n, kind),
		     cfg, sw);
		entries.push_back(std::move(entry));
	}
	ordered_json data;
	data["model"] = to_string(kind);
	data["entries"] = std::move(entries);
	return data;
}

// ---- reduced ---------------------------------------------------------

inline ordered_json run_reduced(const RunConfig &cfg, SuiteReport &out)
{
	std::vector<std::vector<int>> pairs;
	if (cfg.all_pairs)
	{
		for (int i = 1; i <= cfg.n; ++i)
			for (int j = i + 1; j <= cfg.n; ++j)
				pairs.push_back({i, j});
	}
	else if (!cfg.subset.empty())
		pairs.push_back(cfg.subset);
	else
		pairs.push_back({1, 2});
	for (auto &B : pairs)
	{
		Stopwatch sw;
		push(out, verify_reduced(cfg.n, cfg.k, B), cfg, sw);
	}
	// singletons act as the printed constants
	for (int i = 1; i <= cfg.n; ++i)
	{
		Stopwatch sw;
		auto M = gauged_action_matrix(cfg.n, cfg.k, {i});
		auto T = tilde_action_matrix(cfg.n, cfg.k, {i});
		push(out,
		     make_flag_report("reduced C~_{" + std::to_string(i) + "} scalar on Pi_" +
		                          std::to_string(cfg.k),
		                      M == T, cfg.n, ModelKind::Bargmann),
		     cfg, sw);
	}
	return {};
}

// ---- laplace ---------------------------------------------------------

inline ordered_json run_laplace(const RunConfig &cfg, SuiteReport &out)
{
	{
		Stopwatch sw;
		push(out, verify_intertwine(cfg.degree, cfg.n), cfg, sw);
	}
	{
		Stopwatch sw;
		push(out, verify_ck_commutation(std::min(cfg.degree, 4), cfg.n), cfg, sw);
	}
	ordered_json constants = ordered_json::array();
	for (int kk = 0; kk <= cfg.k; ++kk)
	{
		Stopwatch sw;
		try
		{
			auto mb = map_basis_laplace(cfg.n, kk);
			for (auto &e : mb.entries)
				constants.push_back({{"label", e.label.j}, {"constant", e.constant.str()}});
			push(out, std::move(mb.report), cfg, sw);
		}
		catch (const Error &err)
		{
			if (err.code() != ErrorCode::NotProportional)
				throw;
			push(out,
			     make_flag_report("laplace basis map k=" + std::to_string(kk), false, cfg.n,
			                      std::nullopt, {err.what()}),
			     cfg, sw);
		}
	}
	ordered_json data;
	data["basis_constants"] = std::move(constants);
	return data;
}

// ---- miller ----------------------------------------------------------

inline ordered_json run_miller(const RunConfig &cfg, SuiteReport &out)
{
	ordered_json data;
	Stopwatch sw;
	auto mr = miller_reduce(cfg.n);
	for (auto &r : mr.reports)
		push(out, std::move(r), cfg, sw);
	if (cfg.n >= 2)
	{
		Stopwatch sw2;
		push(out, sphere_identity_check(cfg.n), cfg, sw2);
	}
	data["H"] = mr.H.str();
	data["Htilde"] = mr.Htilde.str();
	ordered_json bs = ordered_json::array();
	for (auto &b : mr.b)
		bs.push_back(cfg.nu_values.empty() ? b.str() : to_string(b.evaluate(cfg.nu_values)));
	data["b"] = bs;
	return data;
}

} // namespace suite_detail

// ---- JSON assembly ----------------------------------------------------

inline ordered_json report_to_json(const VerificationReport &r)
{
	ordered_json j;
	j["identity"] = r.identity;
	j["n"] = r.n;
	j["model"] = r.model ? ordered_json(to_string(*r.model)) : ordered_json(nullptr);
	j["subsets"] = r.subsets;
	j["pass"] = r.pass;
	j["residual_terms"] = r.residual_terms;
	if (!r.specialization.empty())
	{
		ordered_json s;
		for (auto &[idx, v] : r.specialization)
			s[param_name(idx)] = to_string(v);
		j["specialization"] = s;
	}
	j["elapsed_ms"] = r.elapsed_ms;
	return j;
}

inline ordered_json config_to_json(const RunConfig &cfg)
{
	ordered_json j;
	j["command"] = cfg.command;
	j["n"] = cfg.n;
	j["k"] = cfg.k;
	j["model"] = cfg.model ? ordered_json(to_string(*cfg.model)) : ordered_json(nullptr);
	j["subset"] = cfg.subset;
	if (!cfg.nu_values.empty())
	{
		ordered_json s;
		for (auto &[idx, v] : cfg.nu_values)
			s[param_name(idx)] = to_string(v);
		j["nu"] = s;
	}
	j["degree"] = cfg.degree;
	j["suite"] = cfg.suite;
	if (!cfg.explicit_form.empty())
		j["explicit"] = cfg.explicit_form;
	j["all_pairs"] = cfg.all_pairs;
	return j;
}

struct RunResult
{
	int exit_code = 0;
	SuiteReport suite;
	ordered_json json;
};

// Executes the selected suite. Exit code 0 iff every sub-report passes;
// config errors surface as exceptions and map to exit code 2 in the CLI.
inline RunResult run(const RunConfig &cfg)
{
	if (cfg.n < 1)
		throw Error(ErrorCode::InvalidArgument, "--n must be >= 1");
	if (cfg.k < 0)
		throw Error(ErrorCode::InvalidArgument, "--k must be >= 0");
	if (cfg.degree < 0)
		throw Error(ErrorCode::InvalidArgument, "--degree must be >= 0");

	RunResult res;
	Stopwatch total;
	ordered_json data;
	if (cfg.command == "su11")
		data = suite_detail::run_su11(cfg, res.suite);
	else if (cfg.command == "racah")
		data = suite_detail::run_racah(cfg, res.suite);
	else if (cfg.command == "basis")
		data = suite_detail::run_basis(cfg, res.suite);
	else if (cfg.command == "reduced")
		data = suite_detail::run_reduced(cfg, res.suite);
	else if (cfg.command == "laplace")
		data = suite_detail::run_laplace(cfg, res.suite);
	else if (cfg.command == "miller")
		data = suite_detail::run_miller(cfg, res.suite);
	else if (cfg.command == "all")
	{
		RunConfig c = cfg;
		c.n = std::min(cfg.n, 4);
		c.k = std::min(cfg.k, 4);
		c.command = "su11";
		suite_detail::run_su11(c, res.suite);
		c.command = "racah";
		suite_detail::run_racah(c, res.suite);
		c.command = "reduced";
		RunConfig cr = c;
		cr.all_pairs = cr.n <= 4;
		cr.k = std::min(c.k, 3);
		suite_detail::run_reduced(cr, res.suite);
		c.command = "laplace";
		RunConfig cl = c;
		cl.n = std::min(c.n, 3);
		cl.k = std::min(c.k, 3);
		suite_detail::run_laplace(cl, res.suite);
		c.command = "miller";
		suite_detail::run_miller(c, res.suite);
	}
	else
		throw Error(ErrorCode::InvalidArgument, "unknown command '" + cfg.command + "'");

	res.suite.total_elapsed_ms = cfg.no_timing ? 0.0 : total.ms();
	res.exit_code = res.suite.aggregate_pass() ? 0 : 1;

	ordered_json j;
	j["schema"] = 1;
	j["version"] = kVersion;
	j["config"] = config_to_json(cfg);
	j["aggregate_pass"] = res.suite.aggregate_pass();
	ordered_json reports = ordered_json::array();
	for (auto &r : res.suite.reports)
		reports.push_back(report_to_json(r));
	j["reports"] = std::move(reports);
	if (!data.is_null() && !data.empty())
		j["data"] = std::move(data);
	j["timing"] = {{"total_elapsed_ms", res.suite.total_elapsed_ms}};
	res.json = std::move(j);
	return res;
}

// Strips volatile timing fields; used by the byte-comparison mode.
inline void strip_timing(ordered_json &j)
{
	if (j.is_object())
	{
		j.erase("timing");
		j.erase("elapsed_ms");
		j.erase("total_elapsed_ms");
		for (auto &[key, val] : j.items())
			strip_timing(val);
	}
	else if (j.is_array())
		for (auto &val : j)
			strip_timing(val);
}

inline std::string render_text(const RunResult &res)
{
	std::ostringstream os;
	for (auto &r : res.suite.reports)
	{
		os << (r.pass ? "PASS" : "FAIL") << "  " << r.identity << "\n";
		for (auto &t : r.residual_terms)
			os << "      residual: " << t << "\n";
	}
	os << (res.suite.aggregate_pass() ? "all identities hold" : "FAILURES present") << " ("
	   << res.suite.reports.size() << " checks)\n";
	return os.str();
}

} // namespace racahkit
