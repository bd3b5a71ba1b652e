#pragma once

// JSON encoding shared by the CLI and the reports. Rationals travel as
// "p/q" strings (or integers) in exact mode and may be IEEE doubles in float
// mode; complex scalars are [re, im]; matrices are row-major nested arrays.
// Every reader takes the JSON pointer of its node for error messages.

#include <optional>
#include <string>

#include <json.hpp>

#include "torus_mirror/exact.hpp"
#include "torus_mirror/fukaya.hpp"
#include "torus_mirror/roots_of_unity.hpp"

namespace torus_mirror {

using Json = nlohmann::ordered_json;

enum class NumberMode { Exact, Float };

std::string mode_name(NumberMode m);

/// Parses text; throws SchemaError at "" on malformed JSON.
Json parse_document(const std::string& text);
/// Reads a file, or standard input for "-".
Json load_document(const std::string& path);

const Json& require_member(const Json& obj, const std::string& key, const std::string& path);

Integer read_integer(const Json& j, const std::string& path);
/// Strings "p/q" and integers always; doubles only in float mode (converted
/// exactly from their binary value), except integral doubles.
Rational read_rational(const Json& j, const std::string& path, NumberMode mode);
/// [re, im] or a real scalar.
QComplex read_complex(const Json& j, const std::string& path, NumberMode mode);
IntMatrix read_int_matrix(const Json& j, const std::string& path);
ComplexMatrix read_complex_matrix(const Json& j, const std::string& path, NumberMode mode);
RationalVector read_rational_vector(const Json& j, const std::string& path, NumberMode mode);
ComplexVector read_complex_vector(const Json& j, const std::string& path, NumberMode mode);

Json write_integer(const Integer& z);
Json write_rational(const Rational& q, NumberMode mode = NumberMode::Exact);
Json write_complex(const QComplex& z, NumberMode mode = NumberMode::Exact);
Json write_matrix(const IntMatrix& m);
Json write_matrix(const RationalMatrix& m, NumberMode mode = NumberMode::Exact);
Json write_matrix(const ComplexMatrix& m, NumberMode mode = NumberMode::Exact);
Json write_vector(const RationalVector& v, NumberMode mode = NumberMode::Exact);
Json write_vector(const ComplexVector& v, NumberMode mode = NumberMode::Exact);
/// {"perm": [...], "turns": ["p/q", ...]}.
Json write_monomial(const MonomialMatrix& m);
/// {"base": q, "turns": t} for base + 2 pi t.
Json write_phase(const PhaseReal& p);

/// {"T": matrix, "delta"?: integer matrix}.
struct TorusInput {
  ComplexMatrix T;
  std::optional<IntMatrix> delta;
};

TorusInput read_torus(const Json& doc, NumberMode mode);

/// {"T", "delta"?, "r", "A", "p"?, "q"?, "mu"?, "side"?}; p, q default to 0
/// and mu, when given, replaces them via mu = p + T'^t q.
struct BundleInput {
  TorusInput torus;
  Integer r;
  IntMatrix A;
  std::optional<RationalVector> p;
  std::optional<RationalVector> q;
  std::optional<ComplexVector> mu;
  Side side = Side::CheckTprime;
};

BundleInput read_bundle(const Json& doc, NumberMode mode);

/// {"r", "A", "delta"?}.
struct UnitaryInput {
  Integer r;
  IntMatrix A;
  std::optional<IntMatrix> delta;
};

UnitaryInput read_unitary_input(const Json& doc);

}  // namespace torus_mirror
