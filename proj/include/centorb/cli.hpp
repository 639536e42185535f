#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "centorb/jordan.hpp"
#include "centorb/matrix.hpp"

namespace centorb::cli {

using Json = nlohmann::ordered_json;

/// Process exit statuses.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kCapExceeded = 3,
};

/// Operator description: a concrete rational matrix (its Jordan type is
/// computed) or a Jordan type given directly.
struct OperatorSpec {
    std::optional<Matrix> matrix;
    JordanType type;
};

/// Validates and converts a parsed document. Errors are InputError with the
/// offending field path in the message.
OperatorSpec parse_operator_spec(const nlohmann::json& doc);
OperatorSpec parse_operator_spec_text(std::string_view text);

/// "a,b,c" into a column vector.
Matrix parse_vector(std::string_view text);

Json jordan_type_json(const JordanType& type);

Json analyze(const OperatorSpec& spec);
Json lattice_json(const JordanType& type, std::size_t cap);
std::string lattice_dot(const JordanType& type, std::size_t cap);
Json classify(const OperatorSpec& spec, const Matrix& v);
/// With v2 absent, the second vector is U v for U sampled from C(T) with `seed`.
Json compare(const OperatorSpec& spec, const Matrix& v1, const std::optional<Matrix>& v2, std::uint64_t seed);
Json verify(const OperatorSpec& spec, std::uint32_t prime, std::size_t cap);

/// Full command-line entry point; args exclude the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace centorb::cli
