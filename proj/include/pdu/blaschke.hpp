#pragma once

#include <cstddef>
#include <vector>

#include "pdu/types.hpp"

namespace pdu {

// Boundary values of the inner/outer pair F = inner * outer, |inner| = 1.
struct BlaschkeFactorization {
    CircleSignal inner;
    CircleSignal outer;
};

// Zeros of a Blaschke product: multiplicity at the origin plus roots in the
// open unit disk.
struct RootSet {
    int zero_multiplicity = 0;
    std::vector<cdouble> roots;
};

// Samples of a harmonic/holomorphic extension over concentric circles.
struct DiskField {
    std::vector<double> radii;   // strictly increasing, in [0, 1)
    std::vector<double> angles;  // uniform grid on [0, 2*pi)
    std::vector<std::vector<cdouble>> values;  // values[radius][angle]
};

// Default log-regularization constant: 1e-6 * max|f|.
double default_epsilon(const CircleSignal& f);

// Inner/outer factorization via the exponential of the Herglotz-weighted
// projection of ln(|f| + epsilon); outer = exp(P+), inner = f / outer.
BlaschkeFactorization factorize(const CircleSignal& f, double epsilon);

// Evaluates z^m * prod_k (z - a_k)/(1 - conj(a_k) z) on the n-point grid.
CircleSignal eval_blaschke_product(const RootSet& r, std::size_t n);

// Instantaneous frequency m + sum_k (1-|a_k|^2)/|e^{it}-a_k|^2 of the product.
std::vector<double> blaschke_if(const RootSet& r, std::size_t n);

// Net number of times the closed boundary curve encircles the origin.
// Throws CurveThroughOriginError when min|f| < floor_rel * max|f|.
int winding_number(const CircleSignal& f, double floor_rel = 1e-9);

// Harmonic extension sum_k c_k r^{|k|} e^{ik theta} over the given radii.
DiskField poisson_extend(const CircleSignal& f, const std::vector<double>& radii);

// true where |value| < threshold.
std::vector<std::vector<bool>> root_region_map(const DiskField& field,
                                               double threshold);

}  // namespace pdu
