#pragma once

// Gamma closed forms of the digit-block products.

#include "digitblock/gamma_expr.hpp"
#include "digitblock/product_spec.hpp"
#include "digitblock/word.hpp"

namespace digitblock {

// Value of prod_{n>=1} ((4n+2)^2 / ((4n+1)(4n+3)))^{2 N_{w,2}(n)}:
//   w = 0^j:  2^{j+2} G(1/2^j) / G(1/2^{j+1})^2
//   else:     G(v/2^L) G((v+1)/2^L) / G((2v+1)/2^{L+1})^2,  v = v_2(w), L = L(w)
GammaExpr closed_form_base2(const Word& w);

// Value of the general base-B product described by spec:
//   w = 0^j:  prod_i G(1 + b_i/B^{j+1}) / G(1 + a_i/B^{j+1})
//   else:     prod_i G(v/B^L + b_i/B^{L+1}) / G(v/B^L + a_i/B^{L+1})
GammaExpr closed_form_baseB(const ProductSpec& spec);

}  // namespace digitblock
