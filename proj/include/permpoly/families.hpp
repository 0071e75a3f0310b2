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
 * @file families.hpp
 *
 * The explicit permutation-polynomial families, each generated together
 * with the predicted truth value of its permutation claim (always true, or
 * an evaluated side condition such as a norm or gcd criterion).
 *
 * Even characteristic, from L(b) = b + l(b) + l(b)^2 on T:
 *   even_inv_b        l(b) = 1/b          -> trinomial x^(2q-1)+x^q+x^(q^2-q+1)
 *   even_inv_b2       l(b) = 1/b^2        -> the five-term polynomial
 *   even_cbrt         l(b) = b^s, s = (2^(k+1)-1)/3, k odd (s is 1/3 mod q-1)
 *   even_sqrtdiff     l(b) = b^(2^(k-1)-2^(m-1)), k = 2m
 *   even_q4_cbrt      the cbrt shape one level up (here q is already a square)
 *   even_linearized   l(b) = sum alpha_i b^(2^i) with the kernel test
 *   even_lin_monomial / even_lin_binomial   alpha patterns making L a
 *       monomial (always a permutation) or a binomial (norm criterion)
 *   even_lin_trinomial_b4 / _b2   L = b+b^4+b^8 and b+b^2+b^8, k mod 7 != 0
 *
 * Odd characteristic, from L(b) = b l(b)^2 on T (both square-root branches
 * of the h1/h2 recovery):
 *   odd_frob1_pos/neg   l(b) = b^((p^m-1)/2)
 *   odd_frob2_pos/neg   l(b) = b^((p^k+p^m-2)/2)
 * with the predicted condition gcd(s, p^k-1) = gcd(s, (p^k-1)/2).
 */

#ifndef PERMPOLY_FAMILIES_HPP
#define PERMPOLY_FAMILIES_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "permpoly/construct.hpp"
#include "permpoly/oracle.hpp"

namespace permpoly {

enum class FamilyId {
    even_inv_b,
    even_inv_b2,
    even_cbrt,
    even_sqrtdiff,
    even_q4_cbrt,
    even_linearized,
    even_lin_monomial,
    even_lin_binomial,
    even_lin_trinomial_b4,
    even_lin_trinomial_b2,
    odd_frob1_pos,
    odd_frob1_neg,
    odd_frob2_pos,
    odd_frob2_neg,
};

inline const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::even_inv_b: return "even-inv-b";
        case FamilyId::even_inv_b2: return "even-inv-b2";
        case FamilyId::even_cbrt: return "even-cbrt";
        case FamilyId::even_sqrtdiff: return "even-sqrtdiff";
        case FamilyId::even_q4_cbrt: return "even-q4-cbrt";
        case FamilyId::even_linearized: return "even-linearized";
        case FamilyId::even_lin_monomial: return "even-lin-monomial";
        case FamilyId::even_lin_binomial: return "even-lin-binomial";
        case FamilyId::even_lin_trinomial_b4: return "even-lin-trinomial-b4";
        case FamilyId::even_lin_trinomial_b2: return "even-lin-trinomial-b2";
        case FamilyId::odd_frob1_pos: return "odd-frob1-pos";
        case FamilyId::odd_frob1_neg: return "odd-frob1-neg";
        case FamilyId::odd_frob2_pos: return "odd-frob2-pos";
        case FamilyId::odd_frob2_neg: return "odd-frob2-neg";
    }
    return "?";
}

inline std::optional<FamilyId> family_from_name(const std::string& s) {
    for (FamilyId id : {FamilyId::even_inv_b, FamilyId::even_inv_b2, FamilyId::even_cbrt,
                        FamilyId::even_sqrtdiff, FamilyId::even_q4_cbrt, FamilyId::even_linearized,
                        FamilyId::even_lin_monomial, FamilyId::even_lin_binomial,
                        FamilyId::even_lin_trinomial_b4, FamilyId::even_lin_trinomial_b2,
                        FamilyId::odd_frob1_pos, FamilyId::odd_frob1_neg, FamilyId::odd_frob2_pos,
                        FamilyId::odd_frob2_neg})
        if (s == family_name(id)) return id;
    return std::nullopt;
}

struct FamilyParams {
    uint32_t m = 0;                // odd families: the p^m parameter
    std::vector<uint32_t> alphas;  // even_linearized coefficients
    int lin_case = 0;              // structural case for monomial/binomial patterns
    uint32_t j = 0, j1 = 0, j2 = 0, t = 0;
    uint32_t alpha0 = 0, alphaj = 0;
};

struct FamilyResult {
    AssembledPP f;
    bool predicted = false;
    std::vector<uint32_t> alphas;  // resolved linearized coefficients, when applicable
    std::string note;
};

namespace detail {

inline uint64_t ipow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// h1 = sum alpha_i a^(2^t - 2^i), h2 = h1 + a^(2^t) as polynomials in a.
inline std::pair<LaurentPoly, LaurentPoly> linearized_pair_in_a(const FieldCtx& F,
                                                                const std::vector<uint32_t>& al) {
    size_t t = al.size() - 1;
    LaurentPoly h1;
    for (size_t i = 0; i <= t; ++i)
        if (al[i]) lp_accum(F, h1, 2 * int64_t((uint64_t(1) << t) - (uint64_t(1) << i)), al[i]);
    LaurentPoly h2 = h1;
    lp_accum(F, h2, 2 * int64_t(uint64_t(1) << t), 1);
    return {h1, h2};
}

inline FamilyResult from_pair(const FieldCtx& F, const LaurentPoly& h1a, const LaurentPoly& h2a,
                              bool predicted) {
    FamilyResult out;
    out.f = assemble_f(F, construct_h(F, h1a, h2a), 1);
    out.predicted = predicted;
    return out;
}

/// Norm criterion for a linearized binomial c1 b^(2^e1) + c2 b^(2^e2):
/// it permutes F_q iff N_{2^k/2^d}(c1/c2) != 1 with d = gcd(e2-e1, k).
inline bool binomial_norm_permutes(const FieldCtx& F, uint32_t e1, uint32_t c1, uint32_t e2,
                                   uint32_t c2) {
    uint32_t d = uint32_t(std::gcd(uint64_t(e2 - e1), uint64_t(F.k())));
    uint64_t norm_exp = (uint64_t(F.q()) - 1) / ((uint64_t(1) << d) - 1);
    uint32_t ratio = F.mid_div(c1, c2);
    return F.mid_pow(ratio, int64_t(norm_exp)) != 1;
}

/// Coefficient vector of L(b) = b + l(b) + l(b)^2 on the basis b^(2^i),
/// i < k, with exponent folding b^(2^k) = b.
inline std::vector<uint32_t> linearized_L_coeffs(const FieldCtx& F,
                                                 const std::vector<uint32_t>& al) {
    size_t t = al.size() - 1;
    std::vector<uint32_t> L(F.k(), 0);
    auto put = [&](size_t idx, uint32_t c) {
        idx %= F.k();
        L[idx] = F.mid_add(L[idx], c);
    };
    put(0, 1);
    for (size_t i = 0; i <= t; ++i) {
        put(i, al[i]);                          // l(b)
        put(i + 1, F.mid_mul(al[i], al[i]));    // l(b)^2
    }
    return L;
}

inline std::vector<uint32_t> monomial_case_alphas(const FieldCtx& F, const FamilyParams& P) {
    uint32_t k = F.k();
    std::vector<uint32_t> al;
    switch (P.lin_case) {
        case 1: {
            if (P.alpha0 == 0 || P.alpha0 >= F.q()) raise(Errc::invalid_params, "alpha0 in F_q*");
            al.resize(k);
            for (uint32_t i = 0; i < k; ++i) al[i] = F.mid_pow(P.alpha0, int64_t(uint64_t(1) << i));
            break;
        }
        case 2: {
            if (P.j < 1 || P.j >= k) raise(Errc::invalid_params, "j in [1, k-1]");
            if (P.alphaj == 0 || P.alphaj >= F.q()) raise(Errc::invalid_params, "alpha_j in F_q*");
            al.resize(k);
            for (uint32_t i = P.j; i < k; ++i)
                al[i] = F.mid_pow(P.alphaj, int64_t(uint64_t(1) << (i - P.j)));
            for (uint32_t i = 0; i < P.j; ++i)
                al[i] = F.mid_add(1, F.mid_pow(P.alphaj, int64_t(uint64_t(1) << (k + i - P.j))));
            break;
        }
        case 3: {
            if (P.t > k - 2) raise(Errc::invalid_params, "t <= k-2");
            al.assign(P.t + 1, 1);
            break;
        }
        default: raise(Errc::invalid_params, "monomial case must be 1, 2 or 3");
    }
    return al;
}

inline std::vector<uint32_t> binomial_case_alphas(const FieldCtx& F, const FamilyParams& P) {
    uint32_t k = F.k();
    auto frob = [&](uint32_t c, uint32_t e) { return F.mid_pow(c, int64_t(uint64_t(1) << e)); };
    std::vector<uint32_t> al;
    switch (P.lin_case) {
        case 1: {
            if (P.j < 1 || P.j >= k) raise(Errc::invalid_params, "j in [1, k-1]");
            uint32_t a0 = P.alpha0, c = P.alphaj;
            if (c == 0) raise(Errc::invalid_params, "alpha_j in F_q*");
            if (c == frob(a0, P.j)) raise(Errc::invalid_params, "alpha_j != alpha0^(2^j)");
            if (F.mid_add(frob(c, k - P.j), F.mid_add(a0, 1)) == 0)
                raise(Errc::invalid_params, "alpha_j^(2^(k-j)) + alpha0 + 1 != 0");
            al.resize(k);
            for (uint32_t i = 0; i < P.j; ++i) al[i] = frob(a0, i);
            for (uint32_t i = P.j; i < k; ++i) al[i] = frob(c, i - P.j);
            break;
        }
        case 2: {
            if (!(P.j1 >= 1 && P.j1 < P.j2 && P.j2 < k)) raise(Errc::invalid_params, "1 <= j1 < j2 <= k-1");
            uint32_t c1 = P.alpha0, c2 = P.alphaj;
            if (F.mid_add(c1, F.mid_add(frob(c2, k - P.j2 + P.j1), 1)) == 0)
                raise(Errc::invalid_params, "alpha_j1 + alpha_j2^(2^(k-j2+j1)) + 1 != 0");
            if (c2 == frob(c1, P.j2 - P.j1))
                raise(Errc::invalid_params, "alpha_j2 != alpha_j1^(2^(j2-j1))");
            al.resize(k);
            for (uint32_t i = 0; i < P.j1; ++i) al[i] = F.mid_add(1, frob(c2, k - P.j2 + i));
            for (uint32_t i = P.j1; i < P.j2; ++i) al[i] = frob(c1, i - P.j1);
            for (uint32_t i = P.j2; i < k; ++i) al[i] = frob(c2, i - P.j2);
            break;
        }
        case 3: {
            if (P.t > k - 2) raise(Errc::invalid_params, "t <= k-2");
            if (P.alpha0 <= 1 || P.alpha0 >= F.q()) raise(Errc::invalid_params, "alpha0 not in {0,1}");
            al.resize(P.t + 1);
            for (uint32_t i = 0; i <= P.t; ++i) al[i] = frob(P.alpha0, i);
            break;
        }
        case 4: {
            if (P.t > k - 2) raise(Errc::invalid_params, "t <= k-2");
            if (P.j < 1 || P.j > P.t) raise(Errc::invalid_params, "j in [1, t]");
            if (P.alphaj <= 1 || P.alphaj >= F.q()) raise(Errc::invalid_params, "alpha_j not in {0,1}");
            al.assign(P.t + 1, 1);
            for (uint32_t i = P.j; i <= P.t; ++i) al[i] = frob(P.alphaj, i - P.j);
            break;
        }
        default: raise(Errc::invalid_params, "binomial case must be 1..4");
    }
    if (al.back() == 0) raise(Errc::invalid_params, "leading alpha vanished");
    return al;
}

/// U_n(x) = x^n + x^(n-2) + ... + 1 (n even).
inline LaurentPoly u_poly(const FieldCtx& F, uint64_t n) {
    (void)F;
    LaurentPoly U;
    for (uint64_t i = 0; 2 * i <= n; ++i) U.t[int64_t(4 * i)] = 1;
    return U;
}

/// h(x) for the odd-characteristic families, with y = x - 1/x, A = x + 1/x:
///   exact powers come from y^(p^m) = x^(p^m) - x^(-p^m) by Frobenius and a
///   short exact division.
inline LaurentPoly odd_family_h(const FieldCtx& F, FamilyId id, uint32_t m) {
    if (F.char2()) raise(Errc::even_characteristic, "odd families need odd characteristic");
    if (m < 1) raise(Errc::invalid_params, "m >= 1");
    uint64_t pm = ipow(F.p(), m);
    if (pm > (uint64_t(1) << 21)) raise(Errc::invalid_params, "p^m too large");
    uint32_t neg1 = F.mid_neg(1);
    LaurentPoly A;  // x + 1/x
    A.t[2] = 1;
    A.t[-2] = 1;
    LaurentPoly Y;  // x - 1/x
    Y.t[2] = 1;
    Y.t[-2] = neg1;
    LaurentPoly Ypm;  // y^(p^m)
    Ypm.t[2 * int64_t(pm)] = 1;
    Ypm.t[-2 * int64_t(pm)] = neg1;
    LaurentPoly Apm;  // A^(p^m)
    Apm.t[2 * int64_t(pm)] = 1;
    Apm.t[-2 * int64_t(pm)] = 1;
    bool first_kind = id == FamilyId::odd_frob1_pos || id == FamilyId::odd_frob2_pos;
    bool negated = id == FamilyId::odd_frob1_pos || id == FamilyId::odd_frob1_neg;
    uint32_t sign = negated ? neg1 : 1;           // -1 for the frob1 pair, +1 for frob2
    uint32_t two = 2 % F.p(), minus_two = F.mid_neg(two);
    if (first_kind) {
        auto Ypm2 = lp_divexact(F, Ypm, lp_sqr(F, Y));  // y^(p^m - 2)
        if (!Ypm2) raise(Errc::internal_mismatch, "y^(p^m) not divisible by y^2");
        LaurentPoly h = lp_scale(F, lp_shift(lp_mul(F, A, *Ypm2), 2), sign);
        h = lp_add(F, h, lp_scale(F, *Ypm2, negated ? two : minus_two));
        h = lp_add(F, h, lp_shift(u_poly(F, pm - 1), 2));
        h = lp_sub(F, h, lp_shift(u_poly(F, pm - 3), -2 * int64_t(pm - 2)));
        return h;
    }
    auto Ypm1 = lp_divexact(F, Ypm, Y);  // y^(p^m - 1)
    if (!Ypm1) raise(Errc::internal_mismatch, "y^(p^m) not divisible by y");
    LaurentPoly h = lp_scale(F, lp_shift(lp_mul(F, A, *Ypm1), 2), sign);
    h = lp_add(F, h, lp_scale(F, *Ypm1, negated ? two : minus_two));
    h = lp_sub(F, h, lp_shift(Apm, 2));
    h = lp_sub(F, h, lp_const(two));
    return h;
}

inline bool odd_gcd_condition(const FieldCtx& F, uint64_t sbar) {
    uint64_t n = uint64_t(F.q()) - 1;
    return std::gcd(sbar, n) == std::gcd(sbar, n / 2);
}

/// Condition for the second square-root branch: solving H(a) = +-1 there
/// lands on epsilon^((p^m+1)/2) = -1 (first kind) or = 1 (second kind)
/// against eta(epsilon) = -1.  Scan the cyclic group of order q-1 directly:
/// epsilon = g^t with t odd, epsilon^u hitting -1 resp. 1.
inline bool odd_neg_branch_condition(const FieldCtx& F, uint64_t pm, bool second_kind) {
    uint64_t n = uint64_t(F.q()) - 1;
    uint64_t u = (pm + 1) / 2 % n;
    uint64_t target = second_kind ? 0 : n / 2;
    for (uint64_t t = 1; t < n; t += 2)
        if (t * u % n == target) return false;
    return true;
}

}  // namespace detail

/// Generate a family member over the given field together with the
/// predicted truth value of its permutation claim.
inline FamilyResult family_generate(const FieldCtx& F, FamilyId id, const FamilyParams& P = {}) {
    using detail::ipow;
    switch (id) {
        case FamilyId::even_inv_b: {
            if (!F.char2()) raise(Errc::invalid_params, "even family in odd characteristic");
            // h1 = a, h2 = a + 1
            return detail::from_pair(F, lp_term(1, 2), lp_add(F, lp_term(1, 2), lp_one()), true);
        }
        case FamilyId::even_inv_b2: {
            if (!F.char2()) raise(Errc::invalid_params, "even family in odd characteristic");
            // h1 = a^2, h2 = a^2 + 1
            return detail::from_pair(F, lp_term(1, 4), lp_add(F, lp_term(1, 4), lp_one()), true);
        }
        case FamilyId::even_cbrt: {
            if (!F.char2() || F.k() % 2 == 0) raise(Errc::invalid_params, "needs char 2 and odd k");
            uint64_t s = ((uint64_t(1) << (F.k() + 1)) - 1) / 3;
            return detail::from_pair(F, lp_one(), lp_add(F, lp_term(1, int64_t(2 * s)), lp_one()),
                                     true);
        }
        case FamilyId::even_sqrtdiff: {
            if (!F.char2() || F.k() % 2 != 0) raise(Errc::invalid_params, "needs char 2 and even k");
            uint32_t mm = F.k() / 2;
            int64_t ehi = int64_t(uint64_t(1) << (F.k() - 1)), elo = int64_t(uint64_t(1) << (mm - 1));
            // h1 = a^(2^(m-1)), h2 = a^(2^(k-1)) + a^(2^(m-1))
            return detail::from_pair(F, lp_term(1, 2 * elo),
                                     lp_add(F, lp_term(1, 2 * ehi), lp_term(1, 2 * elo)), true);
        }
        case FamilyId::even_q4_cbrt: {
            if (!F.char2() || F.k() % 4 != 0)
                raise(Errc::invalid_params, "needs char 2 and k divisible by 4 (q a square)");
            uint64_t q1 = uint64_t(1) << (F.k() / 2);
            uint64_t s = (2 * uint64_t(F.q()) - q1 - 1) / 3;
            FamilyResult out = detail::from_pair(
                F, lp_one(), lp_add(F, lp_term(1, int64_t(2 * s)), lp_one()), true);
            out.note = "base field is F_" + std::to_string(q1);
            return out;
        }
        case FamilyId::even_linearized:
        case FamilyId::even_lin_monomial:
        case FamilyId::even_lin_binomial:
        case FamilyId::even_lin_trinomial_b4:
        case FamilyId::even_lin_trinomial_b2: {
            if (!F.char2()) raise(Errc::invalid_params, "even family in odd characteristic");
            std::vector<uint32_t> al;
            bool predicted = false;
            if (id == FamilyId::even_linearized) {
                al = P.alphas;
                if (al.empty() || al.back() == 0 || al.size() > F.k())
                    raise(Errc::invalid_params, "need alphas with alpha_t != 0, t <= k-1");
                for (uint32_t a : al)
                    if (a >= F.q()) raise(Errc::invalid_params, "alpha out of range");
                predicted = check_linearized_perm(F, al);
            } else if (id == FamilyId::even_lin_monomial) {
                al = detail::monomial_case_alphas(F, P);
                predicted = true;  // a monomial c b^(2^i), c != 0, always permutes
            } else if (id == FamilyId::even_lin_binomial) {
                al = detail::binomial_case_alphas(F, P);
                auto L = detail::linearized_L_coeffs(F, al);
                std::vector<std::pair<uint32_t, uint32_t>> nz;
                for (uint32_t i = 0; i < L.size(); ++i)
                    if (L[i]) nz.push_back({i, L[i]});
                if (nz.size() != 2) raise(Errc::internal_mismatch, "alpha pattern is not a binomial");
                predicted = detail::binomial_norm_permutes(F, nz[0].first, nz[0].second,
                                                           nz[1].first, nz[1].second);
            } else {
                if (F.k() < 3) raise(Errc::invalid_params, "needs k >= 3");
                al = id == FamilyId::even_lin_trinomial_b4 ? std::vector<uint32_t>{0, 0, 1}
                                                           : std::vector<uint32_t>{0, 1, 1};
                predicted = F.k() % 7 != 0;
            }
            auto [h1, h2] = detail::linearized_pair_in_a(F, al);
            FamilyResult out = detail::from_pair(F, h1, h2, predicted);
            out.alphas = al;
            return out;
        }
        case FamilyId::odd_frob1_pos:
        case FamilyId::odd_frob2_pos: {
            LaurentPoly h = detail::odd_family_h(F, id, P.m);
            uint64_t pm = ipow(F.p(), P.m);
            uint64_t sbar = id == FamilyId::odd_frob1_pos ? (pm - 1) / 2
                                                          : (uint64_t(F.q()) + pm - 2) / 2;
            FamilyResult out;
            out.f = assemble_f(F, h, 1);
            out.predicted = detail::odd_gcd_condition(F, sbar);
            return out;
        }
        case FamilyId::odd_frob1_neg:
        case FamilyId::odd_frob2_neg: {
            LaurentPoly h = detail::odd_family_h(F, id, P.m);
            uint64_t pm = ipow(F.p(), P.m);
            FamilyResult out;
            out.f = assemble_f(F, h, 1);
            out.predicted =
                detail::odd_neg_branch_condition(F, pm, id == FamilyId::odd_frob2_neg);
            return out;
        }
    }
    raise(Errc::invalid_params, "unknown family");
}

}  // namespace permpoly

#endif
