/*
   Copyright 2026 The permpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file reduce.hpp
 *
 * Reduction of a Laurent polynomial h(x) on the circle mu_{q+1} to the
 * canonical pair h(x) = h1(a) x + h2(a), where a = x + 1/x.
 *
 * The engine is the recurrence x^n = phi_n(a) x + chi_n(a) with
 * phi_1 = 1, chi_1 = 0, phi_{n+1} = a phi_n + chi_n, chi_{n+1} = -phi_n,
 * together with 1/x = a - x for the negative exponents.  Dickson
 * polynomials of the first kind (D_e(x + 1/x) = x^e + x^(-e)) are built by
 * their own recurrence D_0 = 2, D_1 = a, D_{e+1} = a D_e - D_{e-1}.
 */

#ifndef PERMPOLY_REDUCE_HPP
#define PERMPOLY_REDUCE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "permpoly/poly.hpp"

namespace permpoly {

/// h(x) = h1(a) x + h2(a) on mu_{q+1}.
struct ReducedPair {
    UniPoly h1, h2;

    friend bool operator==(const ReducedPair&, const ReducedPair&) = default;
};

namespace detail {

/// phi_1 .. phi_n as a ladder (phi_1 = 1, phi_2 = a, phi_{n+1} = a phi_n - phi_{n-1}).
inline std::vector<UniPoly> phi_ladder(const FieldCtx& F, uint64_t n) {
    std::vector<UniPoly> phi;
    phi.reserve(n);
    if (n >= 1) phi.push_back(up_const(1));
    if (n >= 2) phi.push_back(up_monomial(1, 1));
    for (uint64_t i = 2; i < n; ++i) {
        UniPoly shifted = up_mul(F, up_monomial(1, 1), phi[i - 1]);
        phi.push_back(up_sub(F, shifted, phi[i - 2]));
    }
    return phi;
}

}  // namespace detail

/// (phi_n, chi_n) with x^n = phi_n(a) x + chi_n(a) on mu_{q+1}, n >= 1.
inline std::pair<UniPoly, UniPoly> phi_chi(const FieldCtx& F, uint64_t n) {
    if (n < 1) raise(Errc::invalid_params, "phi_chi needs n >= 1");
    auto phi = detail::phi_ladder(F, n);
    UniPoly chi = n == 1 ? UniPoly{} : up_neg(F, phi[n - 2]);
    return {phi[n - 1], chi};
}

/// Dickson polynomial of the first kind, D_e(x + 1/x) = x^e + x^(-e).
inline UniPoly dickson(const FieldCtx& F, uint64_t e) {
    UniPoly prev = up_const(2 % F.p());  // D_0 = 2
    if (e == 0) return prev;
    UniPoly cur = up_monomial(1, 1);  // D_1 = a
    for (uint64_t i = 1; i < e; ++i) {
        UniPoly next = up_sub(F, up_mul(F, up_monomial(1, 1), cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Reduce an integer-exponent Laurent polynomial to its (h1, h2) pair.
/// Positive exponents use x^n = phi_n x + chi_n; negative ones use
/// x^(-n) = -phi_n x + phi_{n+1} (from 1/x = a - x on the circle).
inline ReducedPair reduce_h(const FieldCtx& F, const LaurentPoly& h) {
    if (lp_has_half_exponents(h))
        raise(Errc::half_exponent, "reduce_h needs integer exponents; double the polynomial first");
    uint64_t need = 1;
    for (auto& [key, c] : h.t) {
        uint64_t n = uint64_t(key < 0 ? -(key / 2) : key / 2);
        need = std::max(need, n + 1);
    }
    auto phi = detail::phi_ladder(F, need + 1);
    UniPoly h1, h2;
    for (auto& [key, c] : h.t) {
        int64_t e = key / 2;
        if (e == 0) {
            h2 = up_add(F, h2, up_const(c));
        } else if (e > 0) {
            h1 = up_add(F, h1, up_scale(F, phi[size_t(e) - 1], c));
            if (e >= 2) h2 = up_sub(F, h2, up_scale(F, phi[size_t(e) - 2], c));  // chi_e = -phi_{e-1}
        } else {
            uint64_t n = uint64_t(-e);
            h1 = up_sub(F, h1, up_scale(F, phi[n - 1], c));
            h2 = up_add(F, h2, up_scale(F, phi[n], c));
        }
    }
    return {h1, h2};
}

/// Evaluate a pair back into the top field at x on mu: h1(a) x + h2(a).
inline uint64_t pair_eval_on_mu(const FieldCtx& F, const ReducedPair& P, uint64_t x) {
    uint32_t a = F.mu_a_of(x);
    uint64_t v1 = F.embed_mid(up_eval(F, P.h1, a));
    uint64_t v2 = F.embed_mid(up_eval(F, P.h2, a));
    return F.top_add(F.top_mul(v1, x), v2);
}

}  // namespace permpoly

#endif
