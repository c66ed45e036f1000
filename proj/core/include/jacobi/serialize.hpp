#pragma once

// JSON documents for forms, component tuples and scalar decompositions.
// Rationals are stored as (numerator, denominator) pairs whose entries are
// JSON integers, or decimal strings when they do not fit 64 bits; the index
// is stored as the integral matrix 2m.

#include "jacobi/form_data.hpp"
#include "jacobi/lattice.hpp"
#include "jacobi/projection.hpp"
#include "jacobi/splitting.hpp"

#include <string>
#include <string_view>

namespace jacobi {

/// A possibly nearly holomorphic function with its truncation bound.
struct FormDocument {
  NearlyHoloElt f;
  long trunc;
};

std::string serialize(const NearlyHoloElt& f, long trunc);
std::string serialize(const JacobiFormData& form);
std::string serialize(const ComponentTuple& t);
std::string serialize(const NHDecomposition& c);

/// Throws ParseError with a JSON-pointer location. With strict set, modes
/// violating the support condition are rejected.
FormDocument deserialize_form(std::string_view text, bool strict = false);
/// As deserialize_form, additionally requiring a holomorphic function.
JacobiFormData deserialize_jacobi_form(std::string_view text, bool strict = false);
ComponentTuple deserialize_component_tuple(std::string_view text);
NHDecomposition deserialize_nh_decomposition(std::string_view text);

/// {"two_m": [[...]]}.
std::string serialize_index(const HalfIntSymMatrix& m);
HalfIntSymMatrix deserialize_index(std::string_view text);

/// {"gram": [[...]], "vectors": [[...]]}, vectors being the h elliptic vectors in Z^rank.
LatticeSpec deserialize_lattice(std::string_view text);

/// Throws IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace jacobi
