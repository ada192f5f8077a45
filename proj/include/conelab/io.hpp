#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "conelab/exact.hpp"

namespace conelab {

using Json = nlohmann::json;

/// Shared matrix text format:
///   rows cols
///   a11 a12 ...
/// Entries are integers or p/q. Lines whose first non-blank character is
/// '#' and blank lines are ignored.
RatMatrix parse_matrix(std::istream& in, const std::string& source = "<input>");
RatMatrix parse_matrix(const std::string& text);
RatMatrix read_matrix(const std::string& path);
IntMatrix read_int_matrix(const std::string& path);
IntMatrix require_integer(const RatMatrix& m, const std::string& what);

Rational parse_rational(const std::string& token);
std::string format_rational(const Rational& q);

void write_matrix(std::ostream& out, const RatMatrix& m);
void write_matrix(std::ostream& out, const IntMatrix& m);
std::string matrix_to_string(const RatMatrix& m);
std::string matrix_to_string(const IntMatrix& m);

// JSON encodings: rationals as normalized strings, integers as strings too
// so that arbitrary precision survives the round trip.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const RatVector& v);
Json to_json(const IntVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const IntMatrix& m);

std::string format_vector(const IntVector& v);
std::string format_vector(const RatVector& v);

}  // namespace conelab
