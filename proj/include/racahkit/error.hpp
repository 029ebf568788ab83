#pragma once

#include <stdexcept>
#include <string>

namespace racahkit {

enum class ErrorCode {
	VanishingDenominator,
	MissingParameter,
	DivisionByZero,
	VariableMismatch,
	NonHomogeneous,
	NotHarmonic,
	NotProportional,
	NotFactorizable,
	UnsupportedPair,
	InvalidArgument,
	ParseError,
	SolveFailure,
};

inline const char *to_string(ErrorCode c)
{
	switch (c)
	{
	case ErrorCode::VanishingDenominator: return "VanishingDenominator";
	case ErrorCode::MissingParameter: return "MissingParameter";
	case ErrorCode::DivisionByZero: return "DivisionByZero";
	case ErrorCode::VariableMismatch: return "VariableMismatch";
	case ErrorCode::NonHomogeneous: return "NonHomogeneous";
	case ErrorCode::NotHarmonic: return "NotHarmonic";
	case ErrorCode::NotProportional: return "NotProportional";
	case ErrorCode::NotFactorizable: return "NotFactorizable";
	case ErrorCode::UnsupportedPair: return "UnsupportedPair";
	case ErrorCode::InvalidArgument: return "InvalidArgument";
	case ErrorCode::ParseError: return "ParseError";
	case ErrorCode::SolveFailure: return "SolveFailure";
	}
	return "Unknown";
}

class Error : public std::runtime_error
{
  public:
	Error(ErrorCode code, const std::string &msg)
	    : std::runtime_error(std::string(to_string(code)) + ": " + msg),
	      code_(code)
	{}

	ErrorCode code() const { return code_; }

  private:
	ErrorCode code_;
};

} // namespace racahkit
