#pragma once

#include "orbi/poly.hpp"

#include <vector>

namespace orbi {

struct ZFactor {
    ZPoly poly;  // primitive, positive leading coefficient, degree >= 1
    int multiplicity = 1;

    friend bool operator==(const ZFactor&, const ZFactor&) = default;
};

/// Yun's squarefree decomposition over Q: p = unit * prod_i g_i^i with the
/// g_i squarefree and pairwise coprime. Returned factors are primitive.
std::vector<ZFactor> squarefree_decomposition(const QPoly& p);

/// Irreducible factors over Z of a primitive squarefree polynomial
/// (Zassenhaus: factor modulo a small prime, Hensel-lift, recombine).
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

/// Complete factorization over Q into primitive irreducible factors, sorted
/// by (degree, coefficients). The rational unit is dropped.
std::vector<ZFactor> factor_over_q(const QPoly& p);

struct FormFactor {
    /// Primitive irreducible binary form; "u" is the point at infinity.
    BinaryForm form;
    int multiplicity = 1;
};

/// Factorization of a nonzero binary form into irreducible forms over Q.
std::vector<FormFactor> factor_form(const BinaryForm& f);

} // namespace orbi
