#pragma once

#include "zeta/real.hpp"

namespace zeta {

/// Complex argument s = sigma + i t. Every formula here requires sigma > 1.
struct ComplexArgument {
    Real sigma;
    Real t;

    static ComplexArgument make(const Real& sigma, const Real& t) { return {sigma, t}; }
    static ComplexArgument real_only(const Real& sigma) {
        return {sigma, Real::of_ui(0, sigma.precision())};
    }

    bool t_is_zero() const { return t.is_zero(); }
    /// True when sigma is an exact integer fitting a long; k receives it.
    bool integer_sigma(long& k) const {
        if (!sigma.is_integer() || !sigma.fits_long()) return false;
        k = sigma.to_long();
        return true;
    }
};

}  // namespace zeta
