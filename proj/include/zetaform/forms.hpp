#pragma once

#include <vector>

#include "zetaform/multilaurent.hpp"
#include "zetaform/rational.hpp"
#include "zetaform/unipoly.hpp"

namespace zetaform {

/// A differential n-form numerator/(1 - x1*...*xn)^N dx1...dxn. Laurent
/// numerators are allowed (inversion images); the operations that need a
/// polynomial reject them.
struct ZetaIntegrand {
    int n;
    MultiLaurent numerator;
    unsigned pole_order;

    ZetaIntegrand(int n_, MultiLaurent numerator_, unsigned pole_order_);
    bool operator==(const ZetaIntegrand& rhs) const;
    ZetaIntegrand scaled(const Rational& c) const;
};

/// An (n-1)-form numerator/(1 - x1*...*xn)^N dx1...^dxj...dxn (the
/// differential omits dx_j); the numerator may involve all n variables.
struct PartialForm {
    int n;
    int omitted_index;  // j, 1-based
    MultiLaurent numerator;
    unsigned pole_order;

    PartialForm(int n_, int omitted_index_, MultiLaurent numerator_, unsigned pole_order_);
};

enum class Symmetry { plus, minus, none };

/// Whether the cube integral of the form converges absolutely: after
/// x -> 1 - x, every monomial of the numerator must have total degree
/// >= pole_order + 1 - n. Decided degree by degree without expanding the
/// substitution. Throws NotPolynomial on Laurent numerators.
bool is_integrable(const ZetaIntegrand& form);

/// Smallest total degree with a nonvanishing homogeneous part after
/// x -> 1 - x, probing degrees <= limit only; returns limit + 1 when all
/// of them vanish. (limit = pole_order - n decides integrability.)
long lowest_shifted_degree(const MultiLaurent& p, long limit);

/// Exact pullback under x_i -> 1/x_i: the numerator becomes
/// (-1)^(N+n) (x1...xn)^(N-2) P(1/x), the pole order is unchanged.
ZetaIntegrand inversion_pullback(const ZetaIntegrand& form);

/// plus/minus when the pullback numerator equals +/- the original
/// (the zero form counts as plus), none otherwise.
Symmetry inversion_symmetry(const ZetaIntegrand& form);

const char* to_string(Symmetry s);

/// E_{n-k}(x1...xn)/(1 - x1...xn)^(n-k+1) dx; integrates to zeta(k).
ZetaIntegrand eulerian_form(int n, int k);

/// prod x_i^(u_i-1) (1-x_i)^(v_i-1) / (1 - x1...xn)^N dx.
ZetaIntegrand ball_rivoal_form(const std::vector<long>& u,
                               const std::vector<long>& v, unsigned N);

/// The n-form d(pf) with the wedge sign folded in: the dx1...dxn
/// coefficient is (-1)^(j-1) d/dx_j of numerator/(1-x1...xn)^N, so the
/// result has pole order N+1 (or 0 when N = 0).
ZetaIntegrand exterior_derivative(const PartialForm& pf);

/// Sets x_j = 0 or 1 and renumbers the remaining variables; at 1 the pole
/// order is kept, at 0 the pole factor disappears.
ZetaIntegrand restrict_face(const PartialForm& pf, int value);

/// The polynomial P(t) with
///   integral_0^1 x^(u-1)(1-x)^(v-1)/(1-tx)^N dx = P(t)/(1-t)^(N-v),
/// valid for u + v <= N (throws LemmaInapplicable otherwise). The result
/// is certified polynomial by exact remainder check.
UniPoly integrate_factor(long u, long v, unsigned N);

/// Integrates out variable i of a form whose numerator factors as
/// x_i^(u-1)(1-x_i)^(v-1) Q(other variables): returns the (n-1)-variable
/// form Q * P(product of the rest)/(1-prod)^(N-v). Its coefficients equal
/// the original's with the top one removed. Throws NotFactorable when the
/// numerator does not split off such a factor.
ZetaIntegrand reduce_dimension(const ZetaIntegrand& form, int i);

}  // namespace zetaform
