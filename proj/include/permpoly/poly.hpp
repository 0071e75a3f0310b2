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
 * @file poly.hpp
 *
 * Two polynomial representations over F_q:
 *
 *  - UniPoly: dense univariate polynomials in the symbol `a`
 *    (coefficients are mid-level encodings, index = degree);
 *  - LaurentPoly: sparse polynomials in the symbol `x` whose exponents are
 *    rationals with denominator 1 or 2.  Exponents are stored in half-units
 *    (the stored key is twice the exponent), which makes the ring a plain
 *    integer-exponent Laurent ring in u = x^(1/2).
 *
 * Text form: terms "c*x^e" joined by "+", exponents printed as integers or
 * "n/2"; coefficients are integer encodings.
 */

#ifndef PERMPOLY_POLY_HPP
#define PERMPOLY_POLY_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

// ========================================================================
// UniPoly
// ========================================================================

struct UniPoly {
    std::vector<uint32_t> c;  // c[i] = coefficient of a^i, canonical: no trailing zeros

    friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

inline void up_trim(UniPoly& P) {
    while (!P.c.empty() && P.c.back() == 0) P.c.pop_back();
}

inline bool up_is_zero(const UniPoly& P) { return P.c.empty(); }

inline int64_t up_deg(const UniPoly& P) { return int64_t(P.c.size()) - 1; }

inline UniPoly up_const(uint32_t c) { return c ? UniPoly{{c}} : UniPoly{}; }

inline UniPoly up_monomial(uint32_t c, size_t e) {
    if (c == 0) return {};
    UniPoly P;
    P.c.assign(e + 1, 0);
    P.c[e] = c;
    return P;
}

inline UniPoly up_add(const FieldCtx& F, const UniPoly& A, const UniPoly& B) {
    UniPoly R;
    R.c.resize(std::max(A.c.size(), B.c.size()), 0);
    for (size_t i = 0; i < R.c.size(); ++i) {
        uint32_t a = i < A.c.size() ? A.c[i] : 0;
        uint32_t b = i < B.c.size() ? B.c[i] : 0;
        R.c[i] = F.mid_add(a, b);
    }
    up_trim(R);
    return R;
}

inline UniPoly up_sub(const FieldCtx& F, const UniPoly& A, const UniPoly& B) {
    UniPoly R;
    R.c.resize(std::max(A.c.size(), B.c.size()), 0);
    for (size_t i = 0; i < R.c.size(); ++i) {
        uint32_t a = i < A.c.size() ? A.c[i] : 0;
        uint32_t b = i < B.c.size() ? B.c[i] : 0;
        R.c[i] = F.mid_sub(a, b);
    }
    up_trim(R);
    return R;
}

inline UniPoly up_neg(const FieldCtx& F, const UniPoly& A) { return up_sub(F, {}, A); }

inline UniPoly up_scale(const FieldCtx& F, const UniPoly& A, uint32_t s) {
    if (s == 0) return {};
    UniPoly R = A;
    for (auto& x : R.c) x = F.mid_mul(x, s);
    up_trim(R);
    return R;
}

inline UniPoly up_mul(const FieldCtx& F, const UniPoly& A, const UniPoly& B) {
    if (up_is_zero(A) || up_is_zero(B)) return {};
    UniPoly R;
    R.c.assign(A.c.size() + B.c.size() - 1, 0);
    for (size_t i = 0; i < A.c.size(); ++i) {
        if (A.c[i] == 0) continue;
        for (size_t j = 0; j < B.c.size(); ++j)
            R.c[i + j] = F.mid_add(R.c[i + j], F.mid_mul(A.c[i], B.c[j]));
    }
    up_trim(R);
    return R;
}

inline uint32_t up_eval(const FieldCtx& F, const UniPoly& A, uint32_t a) {
    uint32_t r = 0;
    for (size_t i = A.c.size(); i-- > 0;) r = F.mid_add(F.mid_mul(r, a), A.c[i]);
    return r;
}

/// Quotient and remainder; the divisor need not be monic.
inline std::pair<UniPoly, UniPoly> up_divmod(const FieldCtx& F, UniPoly A, const UniPoly& B) {
    if (up_is_zero(B)) raise(Errc::division_by_zero, "polynomial division by zero");
    UniPoly Q;
    if (A.c.size() >= B.c.size()) Q.c.assign(A.c.size() - B.c.size() + 1, 0);
    uint32_t lead_inv = F.mid_inv(B.c.back());
    while (A.c.size() >= B.c.size()) {
        uint32_t f = F.mid_mul(A.c.back(), lead_inv);
        size_t shift = A.c.size() - B.c.size();
        Q.c[shift] = f;
        if (f != 0)
            for (size_t i = 0; i < B.c.size(); ++i)
                A.c[shift + i] = F.mid_sub(A.c[shift + i], F.mid_mul(f, B.c[i]));
        A.c.pop_back();
        up_trim(A);
    }
    up_trim(Q);
    return {Q, A};
}

inline UniPoly up_divexact(const FieldCtx& F, const UniPoly& A, const UniPoly& B) {
    auto [Q, R] = up_divmod(F, A, B);
    if (!up_is_zero(R)) raise(Errc::inexact_division, "remainder is nonzero");
    return Q;
}

inline UniPoly up_gcd(const FieldCtx& F, UniPoly A, UniPoly B) {
    while (!up_is_zero(B)) {
        auto [Q, R] = up_divmod(F, A, B);
        (void)Q;
        A = std::move(B);
        B = std::move(R);
    }
    if (!up_is_zero(A)) {
        uint32_t lead = F.mid_inv(A.c.back());
        for (auto& c : A.c) c = F.mid_mul(c, lead);  // monic normal form
    }
    return A;
}

/// Horner evaluation at a top-level point, coefficients embedded from F_q.
inline uint64_t up_eval_top(const FieldCtx& F, const UniPoly& A, uint64_t x) {
    uint64_t r = 0;
    for (size_t i = A.c.size(); i-- > 0;) r = F.top_add(F.top_mul(r, x), F.embed_mid(A.c[i]));
    return r;
}

/// A(alpha*a + beta), by Horner.
inline UniPoly up_compose_linear(const FieldCtx& F, const UniPoly& A, uint32_t alpha, uint32_t beta) {
    UniPoly lin;
    lin.c = {beta, alpha};
    up_trim(lin);
    UniPoly R;
    for (size_t i = A.c.size(); i-- > 0;) {
        R = up_mul(F, R, lin);
        R = up_add(F, R, up_const(A.c[i]));
    }
    return R;
}

/// Exact polynomial square root, if one exists.
inline std::optional<UniPoly> up_sqrt(const FieldCtx& F, const UniPoly& P) {
    if (up_is_zero(P)) return UniPoly{};
    size_t deg = P.c.size() - 1;
    if (deg % 2 != 0) return std::nullopt;
    size_t d = deg / 2;
    UniPoly S;
    S.c.assign(d + 1, 0);
    if (F.char2()) {
        for (size_t i = 0; i < P.c.size(); ++i) {
            if (i % 2 == 1 && P.c[i] != 0) return std::nullopt;
            if (i % 2 == 0) S.c[i / 2] = *F.mid_sqrt(P.c[i]);
        }
        up_trim(S);
        return S;
    }
    auto lead = F.mid_sqrt(P.c[2 * d]);
    if (!lead) return std::nullopt;
    S.c[d] = *lead;
    uint32_t scale = F.mid_inv(F.mid_add(S.c[d], S.c[d]));  // 1/(2 s_d)
    for (size_t j = d; j-- > 0;) {
        // coefficient of a^(d+j) in S^2 is 2 s_d s_j plus ordered pairs from (j, d)
        uint32_t known = 0;
        for (size_t i = j + 1; i < d; ++i) known = F.mid_add(known, F.mid_mul(S.c[i], S.c[d + j - i]));
        uint32_t target = d + j < P.c.size() ? P.c[d + j] : 0;
        S.c[j] = F.mid_mul(F.mid_sub(target, known), scale);
    }
    up_trim(S);
    if (up_mul(F, S, S) == P) return S;
    return std::nullopt;
}

inline std::string up_to_string(const FieldCtx& F, const UniPoly& P, const char* sym = "a") {
    (void)F;
    if (up_is_zero(P)) return "0";
    std::string out;
    for (size_t i = P.c.size(); i-- > 0;) {
        if (P.c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(P.c[i]);
            continue;
        }
        if (P.c[i] != 1) {
            out += std::to_string(P.c[i]);
            out += "*";
        }
        out += sym;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

// ========================================================================
// LaurentPoly
// ========================================================================

struct LaurentPoly {
    // key = exponent in half-units (key / 2 is the exponent of x);
    // values are nonzero mid-level encodings
    std::map<int64_t, uint32_t> t;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

inline bool lp_is_zero(const LaurentPoly& L) { return L.t.empty(); }

inline bool lp_has_half_exponents(const LaurentPoly& L) {
    for (auto& [e, c] : L.t)
        if (e % 2 != 0) return true;
    return false;
}

inline LaurentPoly lp_const(uint32_t c) {
    LaurentPoly L;
    if (c) L.t[0] = c;
    return L;
}

inline LaurentPoly lp_one() { return lp_const(1); }

/// c * x^(key/2)
inline LaurentPoly lp_term(uint32_t c, int64_t key) {
    LaurentPoly L;
    if (c) L.t[key] = c;
    return L;
}

inline void lp_accum(const FieldCtx& F, LaurentPoly& L, int64_t key, uint32_t c) {
    if (c == 0) return;
    auto it = L.t.find(key);
    if (it == L.t.end()) {
        L.t[key] = c;
        return;
    }
    uint32_t s = F.mid_add(it->second, c);
    if (s == 0)
        L.t.erase(it);
    else
        it->second = s;
}

inline LaurentPoly lp_add(const FieldCtx& F, const LaurentPoly& A, const LaurentPoly& B) {
    LaurentPoly R = A;
    for (auto& [e, c] : B.t) lp_accum(F, R, e, c);
    return R;
}

inline LaurentPoly lp_sub(const FieldCtx& F, const LaurentPoly& A, const LaurentPoly& B) {
    LaurentPoly R = A;
    for (auto& [e, c] : B.t) lp_accum(F, R, e, F.mid_neg(c));
    return R;
}

inline LaurentPoly lp_scale(const FieldCtx& F, const LaurentPoly& A, uint32_t s) {
    LaurentPoly R;
    if (s == 0) return R;
    for (auto& [e, c] : A.t) {
        uint32_t v = F.mid_mul(c, s);
        if (v) R.t[e] = v;
    }
    return R;
}

/// Multiply by x^(key/2).
inline LaurentPoly lp_shift(const LaurentPoly& A, int64_t key) {
    LaurentPoly R;
    for (auto& [e, c] : A.t) R.t[e + key] = c;
    return R;
}

inline LaurentPoly lp_mul(const FieldCtx& F, const LaurentPoly& A, const LaurentPoly& B) {
    LaurentPoly R;
    for (auto& [ea, ca] : A.t)
        for (auto& [eb, cb] : B.t) lp_accum(F, R, ea + eb, F.mid_mul(ca, cb));
    return R;
}

inline LaurentPoly lp_sqr(const FieldCtx& F, const LaurentPoly& A) {
    if (F.char2()) {
        LaurentPoly R;
        for (auto& [e, c] : A.t) R.t[2 * e] = F.mid_mul(c, c);
        return R;
    }
    return lp_mul(F, A, A);
}

inline LaurentPoly lp_pow(const FieldCtx& F, LaurentPoly A, uint64_t n) {
    LaurentPoly R = lp_one();
    while (n) {
        if (n & 1) R = lp_mul(F, R, A);
        n >>= 1;
        if (n) A = lp_sqr(F, A);
    }
    return R;
}

/// If every exponent is an integer, returns the input unchanged; otherwise
/// doubles every exponent (the polynomial evaluated at x^2) and reports it.
inline std::pair<LaurentPoly, bool> to_integer_exponents(const LaurentPoly& L) {
    if (!lp_has_half_exponents(L)) return {L, false};
    LaurentPoly R;
    for (auto& [e, c] : L.t) R.t[2 * e] = c;
    return {R, true};
}

/// Evaluate on mu_{q+1}.  Exponents resolve modulo q+1; half exponents
/// resolve through the inverse of 2 mod q+1, which exists exactly in
/// characteristic 2.
inline uint64_t lp_eval_on_mu(const FieldCtx& F, const LaurentPoly& L, uint64_t x) {
    if (!F.is_on_mu(x)) raise(Errc::not_on_mu, "evaluation point is not on mu_{q+1}");
    uint64_t m = uint64_t(F.q()) + 1;
    uint64_t inv2 = (m + 1) / 2;  // valid when m is odd (characteristic 2)
    uint64_t acc = 0;
    for (auto& [key, c] : L.t) {
        uint64_t e;
        int64_t r = key % int64_t(m);
        if (r < 0) r += int64_t(m);
        if (key % 2 == 0) {
            int64_t h = (key / 2) % int64_t(m);
            if (h < 0) h += int64_t(m);
            e = uint64_t(h);
        } else {
            if (!F.char2())
                raise(Errc::half_exponent_in_odd_characteristic,
                      "half exponents on mu need characteristic 2");
            e = (uint64_t(r) * inv2) % m;
        }
        acc = F.top_add(acc, F.top_mul(F.embed_mid(c), F.top_pow(x, int64_t(e))));
    }
    return acc;
}

/// h(1) — the sum of the coefficients.
inline uint32_t lp_eval_at_one(const FieldCtx& F, const LaurentPoly& L) {
    uint32_t acc = 0;
    for (auto& [e, c] : L.t) acc = F.mid_add(acc, c);
    return acc;
}

/// h(-1).  In characteristic 2 this is h(1); otherwise half exponents are
/// rejected and each term contributes with the parity of its exponent.
inline uint32_t lp_eval_at_minus_one(const FieldCtx& F, const LaurentPoly& L) {
    if (F.char2()) return lp_eval_at_one(F, L);
    uint32_t acc = 0;
    for (auto& [key, c] : L.t) {
        if (key % 2 != 0)
            raise(Errc::half_exponent_in_odd_characteristic, "h(-1) with half exponents");
        int64_t e = key / 2;
        acc = F.mid_add(acc, (e % 2 == 0) ? c : F.mid_neg(c));
    }
    return acc;
}

/// Exact division in the Laurent ring (including half exponents); empty on
/// a nonzero remainder.
inline std::optional<LaurentPoly> lp_divexact(const FieldCtx& F, const LaurentPoly& A,
                                              const LaurentPoly& B) {
    if (lp_is_zero(B)) raise(Errc::division_by_zero, "Laurent division by zero");
    if (lp_is_zero(A)) return LaurentPoly{};
    int64_t amin = A.t.begin()->first, amax = A.t.rbegin()->first;
    int64_t bmin = B.t.begin()->first, bmax = B.t.rbegin()->first;
    if (amax - amin < bmax - bmin) return std::nullopt;
    // dense coefficient vectors in u = x^(1/2)
    std::vector<uint32_t> a(size_t(amax - amin) + 1, 0), b(size_t(bmax - bmin) + 1, 0);
    for (auto& [e, c] : A.t) a[size_t(e - amin)] = c;
    for (auto& [e, c] : B.t) b[size_t(e - bmin)] = c;
    std::vector<uint32_t> quo(a.size() - b.size() + 1, 0);
    uint32_t lead_inv = F.mid_inv(b.back());
    for (size_t shift = quo.size(); shift-- > 0;) {
        uint32_t f = F.mid_mul(a[shift + b.size() - 1], lead_inv);
        quo[shift] = f;
        if (f)
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = F.mid_sub(a[shift + j], F.mid_mul(f, b[j]));
    }
    for (uint32_t r : a)
        if (r != 0) return std::nullopt;
    LaurentPoly Q;
    for (size_t i = 0; i < quo.size(); ++i)
        if (quo[i]) Q.t[int64_t(i) + amin - bmin] = quo[i];
    return Q;
}

inline LaurentPoly lp_from_unipoly(const UniPoly& P) {
    LaurentPoly L;
    for (size_t i = 0; i < P.c.size(); ++i)
        if (P.c[i]) L.t[2 * int64_t(i)] = P.c[i];
    return L;
}

// ---- text form -------------------------------------------------------------

inline std::string lp_exponent_string(int64_t key) {
    if (key % 2 == 0) return std::to_string(key / 2);
    return std::to_string(key) + "/2";
}

inline std::string lp_to_string(const FieldCtx& F, const LaurentPoly& L, char sym = 'x') {
    (void)F;
    if (L.t.empty()) return "0";
    std::string out;
    for (auto it = L.t.rbegin(); it != L.t.rend(); ++it) {
        auto [key, c] = *it;
        if (!out.empty()) out += " + ";
        if (key == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c);
            out += "*";
        }
        out += sym;
        if (key != 2) {
            out += "^";
            out += lp_exponent_string(key);
        }
    }
    return out;
}

/// Parses the textual term form, e.g. "1*x^3 + 1*x^2 + 1*x^-1" or
/// "x^-1/2 + x + 1".  Coefficients are integer encodings.
inline LaurentPoly lp_parse(const FieldCtx& F, const std::string& text, char sym = 'x') {
    LaurentPoly L;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(uint8_t(text[i]))) ++i;
    };
    auto parse_uint = [&]() -> uint64_t {
        if (i >= text.size() || !std::isdigit(uint8_t(text[i])))
            raise(Errc::parse_error, "expected a number at position " + std::to_string(i));
        uint64_t v = 0;
        while (i < text.size() && std::isdigit(uint8_t(text[i]))) v = v * 10 + (text[i++] - '0');
        return v;
    };
    skip_ws();
    if (i == text.size()) raise(Errc::parse_error, "empty polynomial");
    bool expect_term = true;
    while (expect_term) {
        skip_ws();
        uint64_t coeff = 1;
        bool saw_coeff = false;
        if (i < text.size() && std::isdigit(uint8_t(text[i]))) {
            coeff = parse_uint();
            saw_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int64_t key = 0;
        if (i < text.size() && text[i] == sym) {
            ++i;
            key = 2;  // exponent 1
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                bool neg = false;
                if (i < text.size() && text[i] == '-') {
                    neg = true;
                    ++i;
                }
                int64_t num = int64_t(parse_uint());
                int64_t den = 1;
                if (i < text.size() && text[i] == '/') {
                    ++i;
                    den = int64_t(parse_uint());
                    if (den != 2) raise(Errc::parse_error, "exponent denominator must be 2");
                }
                key = den == 2 ? num : 2 * num;
                if (neg) key = -key;
            }
        } else if (!saw_coeff) {
            raise(Errc::parse_error, std::string("expected coefficient or '") + sym +
                                         "' at position " + std::to_string(i));
        }
        if (coeff >= F.q()) raise(Errc::parse_error, "coefficient encoding out of range");
        lp_accum(F, L, key, uint32_t(coeff));
        skip_ws();
        if (i < text.size() && text[i] == '+') {
            ++i;
            expect_term = true;
        } else {
            expect_term = false;
        }
    }
    skip_ws();
    if (i != text.size()) raise(Errc::parse_error, "trailing input at position " + std::to_string(i));
    return L;
}

}  // namespace permpoly

#endif
