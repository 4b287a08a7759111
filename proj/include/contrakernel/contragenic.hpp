#pragma once

#include "contrakernel/monogenic.hpp"

// Basic contragenic functions Z_{n,m}^{+-}: vector valued on both domains,
// scalar valued on the exterior at the top order m = -n+1, plus the duality
// relation pairing them with the vector parts of the dual-domain monogenics.

namespace contrakernel {

// The scalar-valued exterior kind.
bool is_scalar_Z(Domain d, int n, int m);

ReducedQuaternion z_value(const HarmonicTable& t, Domain d, int n, int m, Parity parity);
ReducedQuaternion eval_Z(const BasisIndex& idx, const Point3& p);

double norm_Z(Domain d, int n, int m);

// Z_{n,m}^{+-}(p) - (+-) c rho^{2n+1} perp(Vec X_{-n-1,m}^{+-}(p)) with
// c = 1 for m = 0 and c = 2 otherwise; applies to the vectorial kinds only.
Vec2 duality_residual(int n, int m, Parity parity, const Point3& p);

// Unit-norm evaluations; throw on zero-norm indices.
Vec2 eval_vec_X_normalized(const BasisIndex& idx, const Point3& p);
ReducedQuaternion eval_Z_normalized(const BasisIndex& idx, const Point3& p);

}  // namespace contrakernel
