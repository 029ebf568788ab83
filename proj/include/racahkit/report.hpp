#pragma once

#include "racahkit/text.hpp"
#include <chrono>
#include <optional>

namespace racahkit {

constexpr const char *kVersion = "0.1.0";

enum class ModelKind { Bargmann, BarutGirardello };

inline const char *to_string(ModelKind k)
{
	return k == ModelKind::Bargmann ? "bargmann" : "bg";
}

inline ModelKind parse_model(const std::string &s)
{
	if (s == "bargmann")
		return ModelKind::Bargmann;
	if (s == "bg" || s == "barut-girardello" || s == "barutgirardello")
		return ModelKind::BarutGirardello;
	throw Error(ErrorCode::InvalidArgument, "unknown model '" + s + "'");
}

// Structured pass/fail record of one operator identity, with a witness of
// any nonzero residual.
struct VerificationReport
{
	std::string identity;
	int n = 0;
	std::optional<ModelKind> model;
	std::vector<std::vector<int>> subsets;
	bool pass = false;
	std::optional<WeylOp> left, right, residual;
	std::vector<std::string> residual_terms;
	std::map<unsigned, Rational> specialization;
	double elapsed_ms = 0.0;
};

inline VerificationReport make_report(std::string identity, const WeylOp &left,
                                      const WeylOp &right, int n,
                                      std::optional<ModelKind> model = std::nullopt,
                                      std::vector<std::vector<int>> subsets = {})
{
	VerificationReport r;
	r.identity = std::move(identity);
	r.n = n;
	r.model = model;
	r.subsets = std::move(subsets);
	r.left = left;
	r.right = right;
	WeylOp res = left - right;
	r.pass = res.is_zero();
	if (!r.pass)
		r.residual_terms = printed_terms(res);
	r.residual = std::move(res);
	return r;
}

// Report for poly-valued checks (no operator witness).
inline VerificationReport make_poly_report(std::string identity, const LaurentPoly &left,
                                           const LaurentPoly &right, int n,
                                           std::optional<ModelKind> model = std::nullopt)
{
	VerificationReport r;
	r.identity = std::move(identity);
	r.n = n;
	r.model = model;
	LaurentPoly res = left - right;
	r.pass = res.is_zero();
	if (!r.pass)
		r.residual_terms = printed_terms(res);
	return r;
}

inline VerificationReport make_flag_report(std::string identity, bool pass, int n,
                                           std::optional<ModelKind> model = std::nullopt,
                                           std::vector<std::string> witness = {})
{
	VerificationReport r;
	r.identity = std::move(identity);
	r.n = n;
	r.model = model;
	r.pass = pass;
	if (!pass)
		r.residual_terms = std::move(witness);
	return r;
}

struct SuiteReport
{
	std::string version = kVersion;
	std::vector<VerificationReport> reports;
	double total_elapsed_ms = 0.0;

	bool aggregate_pass() const
	{
		for (auto &r : reports)
			if (!r.pass)
				return false;
		return true;
	}

	void append(VerificationReport r) { reports.push_back(std::move(r)); }
	void append(std::vector<VerificationReport> rs)
	{
		for (auto &r : rs)
			reports.push_back(std::move(r));
	}
};

class Stopwatch
{
  public:
	Stopwatch() : start_(std::chrono::steady_clock::now()) {}
	double ms() const
	{
		auto d = std::chrono::steady_clock::now() - start_;
		return std::chrono::duration<double, std::milli>(d).count();
	}

  private:
	std::chrono::steady_clock::time_point start_;
};

} // namespace racahkit
