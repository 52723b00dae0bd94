#pragma once

/// \file serialize.hpp
/// \brief JSON text forms of library values. Output is compact, single-line,
/// with keys in a fixed order and every number written as a decimal string.

#include <string>
#include <string_view>
#include <vector>

#include "grpoly/catalog.hpp"
#include "grpoly/equivalence.hpp"
#include "grpoly/roots.hpp"
#include "grpoly/simfun.hpp"
#include "grpoly/transforms.hpp"

namespace grpoly {

/// {"basis":"power","coeffs":["c0","c1",...]}
std::string to_json(const IntPoly& p);
/// Accepts the form produced by to_json(IntPoly); throws ParseError / DomainError.
IntPoly int_poly_from_json(std::string_view json);

/// Univariate values as above; multivariate as
/// {"arity":2,"terms":[{"exponents":[i,j],"coeff":"c"},...]}.
std::string to_json(const PolyValue& v);

std::string to_json(const RootReport& r);
std::string to_json(const TransformRecord& r);
std::string to_json(const EquivalenceVerdict& v);
std::string to_json(const ReductionVerdict& v, const ReductionSpec& spec);
std::string to_json(const DensityWitness& w, bool include_graph);
std::string to_json(const Collision& c);

}  // namespace grpoly
