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
 * @file construct.hpp
 *
 * The inverse direction of the reduction: rebuild h(x) from a pair
 * (h1(a), h2(a)) by substituting a = x + 1/x, then strip (x - 1/x)
 * factors until h(1) != 0 or h(-1) != 0 — in characteristic 2 the factor
 * is x^(1/2) + x^(-1/2) and the guard is h(1) != 0 alone.  Also the final
 * assembly f(x) = x^r h(x^(q-1)) as an exponent list modulo q^2 - 1.
 */

#ifndef PERMPOLY_CONSTRUCT_HPP
#define PERMPOLY_CONSTRUCT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "permpoly/poly.hpp"

namespace permpoly {

/// f(x) = sum of c * x^e as a map on F_{q^2}: exponents reduced into
/// [1, q^2-1] so that f(0) = 0 is preserved.
struct AssembledPP {
    std::vector<std::pair<uint64_t, uint32_t>> terms;  // (exponent, coefficient), ascending
    uint64_t r = 1;
    bool doubled = false;  // true when f(x^2) replaced f to clear half exponents

    friend bool operator==(const AssembledPP&, const AssembledPP&) = default;
};

namespace detail {

/// Substitute a = x + 1/x into a polynomial in a (dyadic a-exponents allowed
/// in characteristic 2, where a^(1/2) = x^(1/2) + x^(-1/2)).
inline LaurentPoly substitute_circle(const FieldCtx& F, const LaurentPoly& poly_in_a) {
    LaurentPoly half;  // x^(1/2) + x^(-1/2)
    half.t[1] = 1;
    half.t[-1] = 1;
    LaurentPoly out;
    for (auto& [key, c] : poly_in_a.t) {
        if (key < 0)
            raise(Errc::invalid_params, "negative exponents of a cannot be substituted");
        if (key % 2 != 0 && !F.char2())
            raise(Errc::half_exponent_in_odd_characteristic,
                  "a^(n/2) needs characteristic 2");
        LaurentPoly pw;
        if (F.char2()) {
            pw = lp_pow(F, half, uint64_t(key));  // a^(key/2) = half^key
        } else {
            LaurentPoly axi;  // x + 1/x
            axi.t[2] = 1;
            axi.t[-2] = 1;
            pw = lp_pow(F, axi, uint64_t(key / 2));
        }
        out = lp_add(F, out, lp_scale(F, pw, c));
    }
    return out;
}

}  // namespace detail

/// Algorithm: h(x) = h1(x + 1/x) x + h2(x + 1/x), then divide out the
/// circle-vanishing factor while h(1) = 0 (and h(-1) = 0 in odd
/// characteristic).  The returned h may carry half exponents in
/// characteristic 2 when an odd number of factors came out.
inline LaurentPoly construct_h(const FieldCtx& F, const LaurentPoly& h1_in_a,
                               const LaurentPoly& h2_in_a, int* divisions_out = nullptr) {
    if (lp_is_zero(h1_in_a) && lp_is_zero(h2_in_a))
        raise(Errc::invalid_params, "(h1, h2) must not both be zero");
    LaurentPoly h = lp_add(F, lp_shift(detail::substitute_circle(F, h1_in_a), 2),
                           detail::substitute_circle(F, h2_in_a));
    LaurentPoly divisor;
    if (F.char2()) {
        divisor.t[1] = 1;  // x^(1/2) + x^(-1/2)
        divisor.t[-1] = 1;
    } else {
        divisor.t[2] = 1;  // x - 1/x
        divisor.t[-2] = F.mid_neg(1);
    }
    int divisions = 0;
    int64_t span_guard = lp_is_zero(h) ? 0 : (h.t.rbegin()->first - h.t.begin()->first) + 2;
    for (;;) {
        if (lp_is_zero(h)) raise(Errc::non_terminating, "pair vanishes identically on the circle");
        bool at_one = lp_eval_at_one(F, h) == 0;
        bool at_minus = F.char2() ? at_one : lp_eval_at_minus_one(F, h) == 0;
        if (!(at_one && at_minus)) break;
        auto quo = lp_divexact(F, h, divisor);
        if (!quo) break;  // roots at +-1 without the full circle factor: nothing more to strip
        h = *quo;
        if (++divisions > span_guard)
            raise(Errc::non_terminating, "division loop exceeded the degree span");
    }
    if (divisions_out) *divisions_out = divisions;
    return h;
}

/// f(x) = x^r h(x^(q-1)) as a term list mod q^2 - 1.  A half-exponent h is
/// cleared by the substitution x -> x^2 (characteristic 2 only), which
/// doubles r; squaring is a bijection there so the permutation property is
/// unchanged.
inline AssembledPP assemble_f(const FieldCtx& F, const LaurentPoly& h_in, uint64_t r) {
    if (lp_is_zero(h_in)) raise(Errc::zero_polynomial, "cannot assemble the zero polynomial");
    if (r < 1) raise(Errc::invalid_params, "assemble_f needs r >= 1");
    LaurentPoly h = h_in;
    AssembledPP out;
    out.r = r;
    if (lp_has_half_exponents(h)) {
        if (!F.char2())
            raise(Errc::half_exponent_in_odd_characteristic,
                  "half exponents require characteristic 2");
        auto [hd, d] = to_integer_exponents(h);
        h = hd;
        out.r = 2 * r;
        out.doubled = true;
    }
    uint64_t M = F.q2() - 1;
    std::map<uint64_t, uint32_t> acc;
    for (auto& [key, c] : h.t) {
        int64_t e = key / 2;
        __int128 E = __int128(out.r) + __int128(e) * (int64_t(F.q()) - 1);
        int64_t Em = int64_t(((E - 1) % __int128(M) + __int128(M)) % __int128(M)) + 1;
        uint64_t exp = uint64_t(Em);  // representative in [1, M] keeps f(0) = 0
        auto it = acc.find(exp);
        uint32_t merged = it == acc.end() ? c : F.mid_add(it->second, c);
        if (merged == 0) {
            if (it != acc.end()) acc.erase(it);
        } else {
            acc[exp] = merged;
        }
    }
    out.terms.assign(acc.begin(), acc.end());
    return out;
}

/// Direct evaluation of an assembled map at one point.
inline uint64_t pp_eval(const FieldCtx& F, const AssembledPP& f, uint64_t x) {
    if (x == 0) return 0;
    uint64_t acc = 0;
    for (auto& [e, c] : f.terms)
        acc = F.top_add(acc, F.top_mul(F.embed_mid(c), F.top_pow(x, int64_t(e))));
    return acc;
}

inline std::string pp_to_string(const FieldCtx& F, const AssembledPP& f) {
    (void)F;
    if (f.terms.empty()) return "0";
    std::string out;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        if (!out.empty()) out += " + ";
        if (it->second != 1) {
            out += std::to_string(it->second);
            out += "*";
        }
        out += "x";
        if (it->first != 1) out += "^" + std::to_string(it->first);
    }
    return out;
}

}  // namespace permpoly

#endif
