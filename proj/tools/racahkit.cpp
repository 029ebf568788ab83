#include "racahkit/racahkit.hpp"
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace racahkit;

namespace {

void add_nu_option(CLI::App *cmd, std::vector<std::string> &nu_specs)
{
	cmd->add_option("--nu", nu_specs, "parameter specialization i=p/q (repeatable)");
}

std::map<unsigned, Rational> parse_nu_specs(const std::vector<std::string> &specs)
{
	std::map<unsigned, Rational> out;
	for (auto &s : specs)
	{
		auto eq = s.find('=');
		if (eq == std::string::npos)
			throw Error(ErrorCode::InvalidArgument, "--nu expects i=p/q, got '" + s + "'");
		int idx = std::stoi(s.substr(0, eq));
		if (idx < 1)
			throw Error(ErrorCode::InvalidArgument, "--nu index must be >= 1");
		out[static_cast<unsigned>(idx)] = parse_rational(s.substr(eq + 1));
	}
	return out;
}

int emit(const RunResult &res, const RunConfig &cfg)
{
	std::string body;
	if (cfg.emit == "text")
		body = render_text(res);
	else
		body = res.json.dump(2) + "\n";
	if (cfg.out_path.empty())
		std::cout << body;
	else
	{
		std::ofstream f(cfg.out_path, std::ios::binary);
		if (!f)
			throw Error(ErrorCode::InvalidArgument, "cannot open " + cfg.out_path);
		f << body;
	}
	return res.exit_code;
}

int run_compare(const std::string &a, const std::string &b)
{
	auto load = [](const std::string &path) {
		std::ifstream f(path, std::ios::binary);
		if (!f)
			throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
		ordered_json j = ordered_json::parse(f);
		strip_timing(j);
		return j.dump(2);
	};
	std::string da = load(a), db = load(b);
	if (da == db)
	{
		std::cout << "reports identical (timing ignored)\n";
		return 0;
	}
	std::cout << "reports differ\n";
	return 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"racahkit: exact verification of the Bargmann and Barut-Girardello "
	             "models of the higher-rank Racah algebra"};
	app.require_subcommand(1);

	RunConfig cfg;
	std::vector<std::string> nu_specs;
	std::string cmp_a, cmp_b;
	if (const char *env = std::getenv("RACAHKIT_MAX_N"))
		cfg.max_op_n = std::atoi(env);

	std::string model_str;
	auto add_common = [&](CLI::App *cmd) {
		cmd->add_option("--out", cfg.out_path, "write the report to this path");
		cmd->add_option("--emit", cfg.emit, "json | text")
		    ->check(CLI::IsMember({"json", "text"}));
		cmd->add_flag("--no-timing", cfg.no_timing, "zero out timing fields (byte-stable output)");
		add_nu_option(cmd, nu_specs);
	};
	auto add_model = [&](CLI::App *cmd) {
		cmd->add_option("--model", model_str, "bargmann | bg")
		    ->check(CLI::IsMember({"bargmann", "bg"}));
	};

	auto *su = app.add_subcommand("su11", "verify the su(1,1) triples; --emit-op prints one");
	su->add_option("--n", cfg.n, "ambient dimension");
	su->add_option("--subset", cfg.subset, "subset of 1..n")->delimiter(',');
	su->add_flag("--emit-op", cfg.emit_op, "emit the realization operators");
	add_model(su);
	add_common(su);

	auto *racah = app.add_subcommand("racah", "Racah algebra identity suites");
	auto *racah_verify = racah->add_subcommand("verify", "run the selected identity suite");
	racah_verify->add_option("--n", cfg.n, "ambient dimension");
	racah_verify->add_option("--k", cfg.k, "monomial degree for the beyond-cap fallback");
	racah_verify->add_option("--suite", cfg.suite, "commute | rank1 | expansion | all")
	    ->check(CLI::IsMember({"commute", "rank1", "expansion", "all"}));
	add_model(racah_verify);
	add_common(racah_verify);

	auto *basis = app.add_subcommand("basis", "build the harmonic basis with eigenvalues");
	basis->add_option("--n", cfg.n, "ambient dimension");
	basis->add_option("--k", cfg.k, "degree");
	basis->add_option("--explicit", cfg.explicit_form, "jacobi: also emit the Jacobi form")
	    ->check(CLI::IsMember({"jacobi"}));
	add_model(basis);
	add_common(basis);

	auto *reduced = app.add_subcommand("reduced", "the n-2 variable realization");
	auto *reduced_verify = reduced->add_subcommand("verify", "printed C~ formulas vs gauged matrices");
	reduced_verify->add_option("--n", cfg.n, "ambient dimension");
	reduced_verify->add_option("--k", cfg.k, "degree of Pi_k");
	reduced_verify->add_option("--subset", cfg.subset, "pair i,j")->delimiter(',');
	reduced_verify->add_flag("--all-pairs", cfg.all_pairs, "verify every pair");
	add_common(reduced_verify);

	auto *laplace = app.add_subcommand("laplace", "the BG -> Bargmann intertwiner");
	auto *laplace_verify = laplace->add_subcommand("verify", "intertwining, CK commutation, basis map");
	laplace_verify->add_option("--n", cfg.n, "ambient dimension");
	laplace_verify->add_option("--degree", cfg.degree, "monomial degree bound");
	laplace_verify->add_option("--k", cfg.k, "basis map degree bound");
	add_common(laplace_verify);

	auto *miller = app.add_subcommand("miller", "identification with the Miller Hamiltonian");
	auto *miller_reduce_cmd = miller->add_subcommand("reduce", "z^2 change of variables + gauge");
	miller_reduce_cmd->add_option("--n", cfg.n, "ambient dimension");
	add_common(miller_reduce_cmd);

	auto *all = app.add_subcommand("all", "run every suite at the default caps (n,k <= 4)");
	all->add_option("--n", cfg.n, "ambient dimension cap");
	all->add_option("--k", cfg.k, "degree cap");
	all->add_option("--degree", cfg.degree, "laplace monomial bound");
	add_common(all);

	auto *compare = app.add_subcommand("compare", "byte-compare two reports, timing ignored");
	compare->add_option("a", cmp_a, "first report")->required();
	compare->add_option("b", cmp_b, "second report")->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try
	{
		if (compare->parsed())
			return run_compare(cmp_a, cmp_b);
		if (!model_str.empty())
			cfg.model = parse_model(model_str);
		cfg.nu_values = parse_nu_specs(nu_specs);
		if (su->parsed())
			cfg.command = "su11";
		else if (racah->parsed())
		{
			if (!racah_verify->parsed())
				throw Error(ErrorCode::InvalidArgument, "use: racah verify [...]");
			cfg.command = "racah";
		}
		else if (basis->parsed())
			cfg.command = "basis";
		else if (reduced->parsed())
		{
			if (!reduced_verify->parsed())
				throw Error(ErrorCode::InvalidArgument, "use: reduced verify [...]");
			cfg.command = "reduced";
		}
		else if (laplace->parsed())
		{
			if (!laplace_verify->parsed())
				throw Error(ErrorCode::InvalidArgument, "use: laplace verify [...]");
			cfg.command = "laplace";
		}
		else if (miller->parsed())
		{
			if (!miller_reduce_cmd->parsed())
				throw Error(ErrorCode::InvalidArgument, "use: miller reduce [...]");
			cfg.command = "miller";
		}
		else if (all->parsed())
			cfg.command = "all";
		return emit(run(cfg), cfg);
	}
	catch (const Error &e)
	{
		std::cerr << "racahkit: " << e.what() << "\n";
		return 2;
	}
	catch (const std::exception &e)
	{
		std::cerr << "racahkit: internal error: " << e.what() << "\n";
		return 2;
	}
}
