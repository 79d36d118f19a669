#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace tropgw::lat {

using IVec = std::vector<BigInt>;
using IMat = std::vector<IVec>;  // list of row vectors

// Basis (as rows) of the lattice {x in Z^dim : M x = 0}. Kernels of integer
// matrices are saturated, so the returned basis generates a saturated lattice.
IMat integer_kernel(const IMat& rows, int dim);

// Basis of span_Q(rows) intersected with Z^dim (the saturation), computed as
// the kernel of the kernel.
IMat saturate(const IMat& rows, int dim);

int rational_rank(const IMat& rows);

// Coordinates of v as a rational combination of the rows, if v lies in their
// span.
std::optional<std::vector<Rational>> rational_coords(const IMat& rows, const IVec& v);

bool in_rational_span(const IMat& rows, const IVec& v);

// Coordinates of v in the lattice generated by `basis` (rows independent);
// nullopt if v is not an integer combination.
std::optional<IVec> integer_coords(const IMat& basis, const IVec& v);

// g = gcd(a, b) together with x, y such that a*x + b*y = g.
void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y);

// For primitive phi (gcd of entries 1), some integer x with phi . x = 1.
IVec solve_unit_dot(const IVec& phi);

BigInt dot(const IVec& a, const IVec& b);
IVec scaled(const IVec& v, const BigInt& c);
void add_scaled(IVec& target, const IVec& v, const BigInt& c);

// Generator of the rank-1 lattice (Z^dim meet span sigma) / (Z^dim meet span tau),
// oriented so that it points into sigma, where span includes the lineality
// space. Throws DomainError unless tau is a facet of sigma (codimension one,
// contained in sigma's span).
IVec primitive_normal(int dim, const IMat& lineality, const IMat& sigma_rays,
                      const IMat& tau_rays);

}  // namespace tropgw::lat
