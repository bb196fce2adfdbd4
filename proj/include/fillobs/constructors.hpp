#pragma once
#include "fillobs/graded_ring.hpp"

namespace fillobs {

// H*(T^n; Z): generators of degree-k are sorted index subsets of {1..n},
// products carry the shuffle sign.
GradedRing exterior_algebra(int n);

// Z[x]/(x^n) with deg x = gen_degree (even); models H*(CP^{n-1}; Z) for
// gen_degree = 2.
GradedRing truncated_polynomial(int gen_degree, int n);

GradedRing sphere_ring(int d);
GradedRing point_ring();

// Kunneth tensor product with the Koszul sign. Requires equal coefficients
// and either field coefficients or one globally torsion-free factor.
GradedRing tensor_product(const GradedRing& r1, const GradedRing& r2);

// Z -> Q coefficient change: torsion dies, integral products of infinite
// order survive.
GradedRing rationalize(const GradedRing& r);

// Z/2[a]/(a^{d+1}), deg a = 1: H*(RP^d; Z/2).
GradedRing rp_mod2_ring(int d);

// Integral cohomology of the lens-space boundary of the O(-a) cone over
// CP^{n-1}: Z in degrees 0 and 2n-1, Z/a generated by y^i in degree 2i.
GradedRing lens_ring(const Int& a, int n);

} // namespace fillobs
