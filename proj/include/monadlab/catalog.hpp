#pragma once

#include <string>
#include <vector>

#include "monadlab/monads.hpp"

namespace monadlab {

/// Names X012, ..., X345 of the Pluecker coordinates of planes in P^5.
std::vector<std::string> plucker_names();

/// The 35 quadrics cut out by the three-term-sum Pluecker relations, chosen as
/// the first linearly independent relations in generation order.
std::vector<Polynomial> plucker_quadrics(const Ring& ring);

/// G(2,5) in P^19 with a parametrization by the 3 x 3 minors of a 3 x 6 matrix.
ProjectiveVariety grassmannian_g25(Field field = Field());

/// u_ab = X_0ab + X_ijk and v_ab = X_0ab - X_ijk for {a,b,i,j,k} = {1,...,5}.
Polynomial plucker_u(const Ring& ring, int a, int b);
Polynomial plucker_v(const Ring& ring, int a, int b);

/// w_1..w_16: u_23, u_24, u_25, u_34, u_35, u_45, then v_12, ..., v_45.
std::vector<Polynomial> g25_w_forms(const Ring& ring);

/// The ten printed forms cutting a P^9 disjoint from G(2,5).
std::vector<Polynomial> g25_lambda_forms(const Ring& ring);

/// The k-th Grassmannian monad O(-1)^k -> O^{2k+14} -> O(1)^k built from
/// w_1..w_16: A = [-A_2; A_1] and B = [B_1 B_2].
MonadSpec g25_monad(const ProjectiveVariety& g25, int k);

/// The same shape with the ten forms cutting Lambda split 5/5, giving
/// O(-1)^k -> O^{2k+8} -> O(1)^k.
MonadSpec g25_lambda_monad(const ProjectiveVariety& g25, int k);

}  // namespace monadlab
