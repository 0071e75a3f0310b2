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
 * @file field.hpp
 *
 * Exact arithmetic in the tower F_p < F_q < F_{q^2}, q = p^k.
 *
 * Elements are held by integer encoding: a mid-level element with
 * polynomial-basis coefficients (c_0, ..., c_{k-1}) encodes as
 * sum c_i * p^i; a top-level element (d_0, d_1) over F_q encodes as
 * d_0 + d_1 * q.  Every encoding below the field size is a valid element,
 * so exhaustive enumeration is a plain counter loop.
 *
 * A FieldCtx is immutable after construction and safe to share across
 * threads; all operations are pure functions of (ctx, inputs).
 */

#ifndef PERMPOLY_FIELD_HPP
#define PERMPOLY_FIELD_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "permpoly/common.hpp"

namespace permpoly {

enum class Level : uint8_t { base, mid, top };

inline const char* level_name(Level l) {
    switch (l) {
        case Level::base: return "base";
        case Level::mid: return "mid";
        case Level::top: return "top";
    }
    return "?";
}

/// A field element: its tower level plus the integer encoding of its
/// coefficient vector.  Plain value type; the owning FieldCtx supplies
/// all arithmetic.
struct FieldElement {
    Level level;
    uint64_t enc;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

struct FieldCtxOptions {
    uint64_t enumeration_bound = uint64_t(1) << 32;  // max allowed p^(2k)
    uint64_t top_table_limit = uint64_t(1) << 22;    // build top log/exp tables when q^2 <= this
    std::vector<uint32_t> mid_modulus;               // optional override, degree k, constant first, monic
    std::vector<uint32_t> top_modulus;               // optional override, (c0, c1, 1) as mid encodings
};

namespace detail {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

class FieldCtx {
public:
    /// Build the tower for F_{p^k} and its quadratic extension.  Without an
    /// override the moduli and generators are the smallest-encoding choices,
    /// so results are reproducible bit for bit across runs.
    static FieldCtx make(uint32_t p, uint32_t k, const FieldCtxOptions& opt = {}) {
        return FieldCtx(p, k, opt);
    }

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t q() const { return q_; }
    uint64_t q2() const { return q2_; }
    bool char2() const { return p_ == 2; }

    const std::vector<uint32_t>& mid_modulus() const { return mid_modulus_; }
    const std::array<uint32_t, 3>& top_modulus() const { return top_modulus_; }
    uint64_t mid_modulus_encoding() const { return mid_modulus_enc_; }
    uint64_t top_modulus_encoding() const { return top_modulus_enc_; }
    uint32_t mid_generator() const { return mid_gen_; }
    uint64_t top_generator() const { return top_gen_; }
    bool has_top_tables() const { return has_top_tables_; }

    // ---- element factories -------------------------------------------------

    FieldElement base(uint64_t v) const { return {Level::base, v % p_}; }
    FieldElement mid(uint64_t enc) const {
        check_enc(Level::mid, enc);
        return {Level::mid, enc};
    }
    FieldElement top(uint64_t enc) const {
        check_enc(Level::top, enc);
        return {Level::top, enc};
    }
    FieldElement zero(Level l) const { return {l, 0}; }
    FieldElement one(Level l) const { return {l, 1}; }

    uint64_t size_of(Level l) const {
        switch (l) {
            case Level::base: return p_;
            case Level::mid: return q_;
            case Level::top: return q2_;
        }
        return 0;
    }

    /// Coefficient vector of an element over the next level down
    /// (full length, zero padded).
    std::vector<uint64_t> coeffs(FieldElement e) const {
        std::vector<uint64_t> out;
        switch (e.level) {
            case Level::base: out = {e.enc}; break;
            case Level::mid: {
                uint64_t v = e.enc;
                for (uint32_t i = 0; i < k_; ++i) {
                    out.push_back(v % p_);
                    v /= p_;
                }
                break;
            }
            case Level::top: out = {e.enc % q_, e.enc / q_}; break;
        }
        return out;
    }

    // ---- arithmetic on elements -------------------------------------------

    FieldElement add(FieldElement a, FieldElement b) const {
        require_same(a, b);
        switch (a.level) {
            case Level::base: return {a.level, (a.enc + b.enc) % p_};
            case Level::mid: return {a.level, mid_add(uint32_t(a.enc), uint32_t(b.enc))};
            case Level::top: return {a.level, top_add(a.enc, b.enc)};
        }
        return a;
    }

    FieldElement sub(FieldElement a, FieldElement b) const {
        require_same(a, b);
        switch (a.level) {
            case Level::base: return {a.level, (a.enc + p_ - b.enc) % p_};
            case Level::mid: return {a.level, mid_sub(uint32_t(a.enc), uint32_t(b.enc))};
            case Level::top: return {a.level, top_sub(a.enc, b.enc)};
        }
        return a;
    }

    FieldElement neg(FieldElement a) const { return sub(zero(a.level), a); }

    FieldElement mul(FieldElement a, FieldElement b) const {
        require_same(a, b);
        switch (a.level) {
            case Level::base: return {a.level, (a.enc * b.enc) % p_};
            case Level::mid: return {a.level, mid_mul(uint32_t(a.enc), uint32_t(b.enc))};
            case Level::top: return {a.level, top_mul(a.enc, b.enc)};
        }
        return a;
    }

    FieldElement inv(FieldElement a) const {
        if (a.enc == 0) raise(Errc::division_by_zero, "inverse of zero");
        switch (a.level) {
            case Level::base: return {a.level, base_inv(a.enc)};
            case Level::mid: return {a.level, mid_inv(uint32_t(a.enc))};
            case Level::top: return {a.level, top_inv(a.enc)};
        }
        return a;
    }

    /// a^e for any signed exponent; negative exponents invert first.
    FieldElement pow(FieldElement a, int64_t e) const {
        switch (a.level) {
            case Level::base: return {a.level, base_pow(a.enc, e)};
            case Level::mid: return {a.level, mid_pow(uint32_t(a.enc), e)};
            case Level::top: return {a.level, top_pow(a.enc, e)};
        }
        return a;
    }

    // ---- raw mid-level arithmetic (integer encodings) ----------------------

    uint32_t mid_add(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        uint32_t out = 0;
        for (uint32_t i = 0; i < k_; ++i) {
            uint32_t da = a % p_, db = b % p_;
            a /= p_;
            b /= p_;
            out += ((da + db) % p_) * ppow_[i];
        }
        return out;
    }

    uint32_t mid_sub(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        uint32_t out = 0;
        for (uint32_t i = 0; i < k_; ++i) {
            uint32_t da = a % p_, db = b % p_;
            a /= p_;
            b /= p_;
            out += ((da + p_ - db) % p_) * ppow_[i];
        }
        return out;
    }

    uint32_t mid_neg(uint32_t a) const { return mid_sub(0, a); }

    uint32_t mid_mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return mid_exp_[size_t(mid_log_[a]) + mid_log_[b]];
    }

    uint32_t mid_inv(uint32_t a) const {
        if (a == 0) raise(Errc::division_by_zero, "inverse of zero");
        return mid_exp_[(q_ - 1) - mid_log_[a]];
    }

    uint32_t mid_div(uint32_t a, uint32_t b) const { return mid_mul(a, mid_inv(b)); }

    uint32_t mid_pow(uint32_t a, int64_t e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            raise(Errc::division_by_zero, "0 raised to a negative power");
        }
        if (q_ == 2) return 1;  // F_2*: only the identity
        uint64_t m = q_ - 1;
        int64_t em = e % int64_t(m);
        if (em < 0) em += int64_t(m);
        return mid_exp_[(uint64_t(mid_log_[a]) * uint64_t(em)) % m];
    }

    uint32_t mid_log(uint32_t a) const {
        if (a == 0) raise(Errc::division_by_zero, "log of zero");
        return mid_log_[a];
    }

    uint32_t mid_exp(uint64_t e) const { return mid_exp_[e % (q_ - 1)]; }

    // ---- raw top-level arithmetic ------------------------------------------

    uint64_t top_add(uint64_t a, uint64_t b) const {
        if (p_ == 2) return a ^ b;
        uint64_t a0 = a % q_, a1 = a / q_, b0 = b % q_, b1 = b / q_;
        return uint64_t(mid_add(uint32_t(a0), uint32_t(b0))) +
               uint64_t(mid_add(uint32_t(a1), uint32_t(b1))) * q_;
    }

    uint64_t top_sub(uint64_t a, uint64_t b) const {
        if (p_ == 2) return a ^ b;
        uint64_t a0 = a % q_, a1 = a / q_, b0 = b % q_, b1 = b / q_;
        return uint64_t(mid_sub(uint32_t(a0), uint32_t(b0))) +
               uint64_t(mid_sub(uint32_t(a1), uint32_t(b1))) * q_;
    }

    uint64_t top_neg(uint64_t a) const { return top_sub(0, a); }

    uint64_t top_mul(uint64_t a, uint64_t b) const {
        uint32_t a0 = uint32_t(a % q_), a1 = uint32_t(a / q_);
        uint32_t b0 = uint32_t(b % q_), b1 = uint32_t(b / q_);
        // (a0 + a1 y)(b0 + b1 y) with y^2 = -c1 y - c0
        uint32_t lo = mid_mul(a0, b0);
        uint32_t hi = mid_mul(a1, b1);
        uint32_t cross = mid_add(mid_mul(a0, b1), mid_mul(a1, b0));
        uint32_t r0 = mid_sub(lo, mid_mul(hi, top_modulus_[0]));
        uint32_t r1 = mid_sub(cross, mid_mul(hi, top_modulus_[1]));
        return uint64_t(r0) + uint64_t(r1) * q_;
    }

    /// Frobenius x -> x^q, a single conjugation in the quadratic extension.
    uint64_t top_conj(uint64_t a) const {
        uint32_t a0 = uint32_t(a % q_), a1 = uint32_t(a / q_);
        uint32_t r0 = mid_sub(a0, mid_mul(a1, top_modulus_[1]));
        uint32_t r1 = mid_neg(a1);
        return uint64_t(r0) + uint64_t(r1) * q_;
    }

    /// Norm to the mid field: x * x^q = x^(q+1).
    uint32_t top_norm(uint64_t a) const {
        uint32_t a0 = uint32_t(a % q_), a1 = uint32_t(a / q_);
        uint32_t t = mid_sub(mid_mul(a0, a0), mid_mul(mid_mul(a0, a1), top_modulus_[1]));
        return mid_add(t, mid_mul(mid_mul(a1, a1), top_modulus_[0]));
    }

    uint64_t top_inv(uint64_t a) const {
        if (a == 0) raise(Errc::division_by_zero, "inverse of zero");
        uint32_t n = top_norm(a);
        uint64_t c = top_conj(a);
        uint32_t ninv = mid_inv(n);
        uint32_t c0 = uint32_t(c % q_), c1 = uint32_t(c / q_);
        return uint64_t(mid_mul(c0, ninv)) + uint64_t(mid_mul(c1, ninv)) * q_;
    }

    uint64_t top_pow(uint64_t a, int64_t e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            raise(Errc::division_by_zero, "0 raised to a negative power");
        }
        uint64_t m = q2_ - 1;
        if (m == 0) return 1;
        int64_t em = e % int64_t(m);
        if (em < 0) em += int64_t(m);
        if (has_top_tables_) {
            unsigned __int128 idx = (unsigned __int128)(top_log_[a]) * uint64_t(em);
            return top_exp_[uint64_t(idx % m)];
        }
        uint64_t r = 1, b = a;
        uint64_t ee = uint64_t(em);
        while (ee) {
            if (ee & 1) r = top_mul(r, b);
            b = top_mul(b, b);
            ee >>= 1;
        }
        return r;
    }

    uint64_t top_log(uint64_t a) const {
        if (!has_top_tables_) raise(Errc::bound_exceeded, "top log tables not built for this field size");
        if (a == 0) raise(Errc::division_by_zero, "log of zero");
        return top_log_[a];
    }

    uint64_t top_exp_at(uint64_t e) const { return top_exp_[e % (q2_ - 1)]; }

    /// Embed a mid element into the top field (constant in the y-basis).
    uint64_t embed_mid(uint32_t a) const { return a; }

    /// Is this top element in the subfield F_q?
    bool in_mid_subfield(uint64_t a) const { return a / q_ == 0; }

    // ---- mu_{q+1}, the norm-one circle --------------------------------------

    bool is_on_mu(uint64_t x) const { return x != 0 && top_norm(x) == 1; }

    /// x + x^q for x on the circle; lands in F_q.
    uint32_t mu_a_of(uint64_t x) const {
        uint64_t s = top_add(x, top_conj(x));
        return uint32_t(s % q_);
    }

    /// All q+1 elements of mu_{q+1}, generated as g^((q-1) i).
    std::vector<uint64_t> mu_elements() const {
        std::vector<uint64_t> out;
        out.reserve(q_ + 1);
        uint64_t step = top_pow(top_gen_, int64_t(q_) - 1);
        uint64_t cur = 1;
        for (uint32_t i = 0; i <= q_; ++i) {
            out.push_back(cur);
            cur = top_mul(cur, step);
        }
        if (cur != 1) raise(Errc::internal_mismatch, "mu generator step has wrong order");
        return out;
    }

    // ---- trace, characters, square roots ------------------------------------

    /// Trace from F_q down to F_p: sum of e^(p^i), i < k.
    FieldElement trace_to_prime(FieldElement e) const {
        if (e.level != Level::mid) raise(Errc::level_mismatch, "trace_to_prime expects a mid element");
        uint32_t t = mid_trace(uint32_t(e.enc));
        return {Level::base, t};
    }

    uint32_t mid_trace(uint32_t a) const {
        uint32_t acc = a, f = a;
        for (uint32_t i = 1; i < k_; ++i) {
            f = mid_pow(f, p_);
            acc = mid_add(acc, f);
        }
        if (acc >= p_) raise(Errc::internal_mismatch, "trace left the prime field");
        return acc;
    }

    /// Quadratic character on F_q (odd characteristic): -1, 0, +1.
    int quadratic_character(FieldElement e) const {
        if (e.level != Level::mid) raise(Errc::level_mismatch, "quadratic_character expects a mid element");
        return mid_eta(uint32_t(e.enc));
    }

    int mid_eta(uint32_t a) const {
        if (p_ == 2) raise(Errc::even_characteristic, "quadratic character needs odd characteristic");
        if (a == 0) return 0;
        return (mid_log_[a] % 2 == 0) ? +1 : -1;
    }

    /// Square root.  In characteristic 2 squaring is bijective so this always
    /// succeeds; in odd characteristic it returns the smaller-encoding root of
    /// a residue and nothing for a non-residue.
    std::optional<FieldElement> sqrt(FieldElement e) const {
        switch (e.level) {
            case Level::base: {
                for (uint64_t r = 0; r < p_; ++r)
                    if ((r * r) % p_ == e.enc) return FieldElement{Level::base, r};
                return std::nullopt;
            }
            case Level::mid: {
                auto r = mid_sqrt(uint32_t(e.enc));
                if (!r) return std::nullopt;
                return FieldElement{Level::mid, *r};
            }
            case Level::top: {
                auto r = top_sqrt(e.enc);
                if (!r) return std::nullopt;
                return FieldElement{Level::top, *r};
            }
        }
        return std::nullopt;
    }

    std::optional<uint32_t> mid_sqrt(uint32_t a) const {
        if (a == 0) return 0u;
        if (p_ == 2) return mid_pow(a, int64_t(q_) / 2);  // a^(2^(k-1))
        uint32_t l = mid_log_[a];
        if (l % 2 != 0) return std::nullopt;
        uint32_t r = mid_exp_[l / 2];
        return std::min(r, mid_neg(r));
    }

    std::optional<uint64_t> top_sqrt(uint64_t a) const {
        if (a == 0) return uint64_t(0);
        if (p_ == 2) {
            uint64_t r = a;
            for (uint32_t i = 0; i + 1 < 2 * k_; ++i) r = top_mul(r, r);  // a^(2^(2k-1))
            return r;
        }
        if (has_top_tables_) {
            uint64_t l = top_log_[a];
            if (l % 2 != 0) return std::nullopt;
            uint64_t r = top_exp_[l / 2];
            return std::min(r, top_neg(r));
        }
        return top_sqrt_tonelli(a);
    }

    /// Root solvability of x^2 + ux + v over F_q in characteristic 2
    /// (trace criterion; the quadratic has roots iff tr(v/u^2) = 0).
    bool quadratic_solvable(FieldElement u, FieldElement v) const {
        if (p_ != 2) raise(Errc::odd_characteristic, "quadratic_solvable is a characteristic-2 predicate");
        if (u.level != Level::mid || v.level != Level::mid)
            raise(Errc::level_mismatch, "quadratic_solvable expects mid elements");
        if (u.enc == 0) raise(Errc::zero_coefficient, "u must be nonzero");
        uint32_t w = mid_div(uint32_t(v.enc), mid_mul(uint32_t(u.enc), uint32_t(u.enc)));
        return mid_trace(w) == 0;
    }

    /// x^3 + ux + v has exactly one root in F_q (char 2) iff tr(u^3/v^2 + 1) != 0.
    bool cubic_unique_root(FieldElement u, FieldElement v) const {
        if (p_ != 2) raise(Errc::odd_characteristic, "cubic_unique_root is a characteristic-2 predicate");
        if (u.level != Level::mid || v.level != Level::mid)
            raise(Errc::level_mismatch, "cubic_unique_root expects mid elements");
        if (v.enc == 0) raise(Errc::zero_coefficient, "v must be nonzero");
        uint32_t u3 = mid_pow(uint32_t(u.enc), 3);
        uint32_t v2 = mid_mul(uint32_t(v.enc), uint32_t(v.enc));
        uint32_t w = mid_add(mid_div(u3, v2), 1);
        return mid_trace(w) != 0;
    }

    // ---- enumeration ---------------------------------------------------------

    enum class Set { mid_field, top_field, mu };

    template <class F>
    void for_each(Set s, F&& fn) const {
        switch (s) {
            case Set::mid_field:
                for (uint64_t e = 0; e < q_; ++e) fn(FieldElement{Level::mid, e});
                break;
            case Set::top_field:
                for (uint64_t e = 0; e < q2_; ++e) fn(FieldElement{Level::top, e});
                break;
            case Set::mu:
                for (uint64_t x : mu_elements()) fn(FieldElement{Level::top, x});
                break;
        }
    }

    std::vector<FieldElement> enumerate(Set s, uint64_t materialize_limit = uint64_t(1) << 26) const {
        uint64_t n = s == Set::mid_field ? q_ : (s == Set::top_field ? q2_ : q_ + 1);
        if (n > materialize_limit) raise(Errc::bound_exceeded, "set too large to materialize");
        std::vector<FieldElement> out;
        out.reserve(n);
        for_each(s, [&](FieldElement e) { out.push_back(e); });
        return out;
    }

    // ---- printing ------------------------------------------------------------

    std::string to_string(FieldElement e, bool pretty = false) const {
        if (!pretty) return std::to_string(e.enc);
        std::ostringstream os;
        auto cs = coeffs(e);
        const char* sym = e.level == Level::top ? "y" : "t";
        bool first = true;
        for (size_t i = cs.size(); i-- > 0;) {
            if (cs[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || cs[i] != 1) os << cs[i];
            if (i > 0) {
                if (cs[i] != 1) os << "*";
                os << sym;
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }

private:
    FieldCtx(uint32_t p, uint32_t k, const FieldCtxOptions& opt) : p_(p), k_(k) {
        if (!detail::is_prime_u32(p)) raise(Errc::not_prime, "p = " + std::to_string(p));
        if (k < 1) raise(Errc::invalid_params, "k must be >= 1");

        // q and q^2 against the enumeration bound
        uint64_t q = 1;
        for (uint32_t i = 0; i < 2 * k; ++i) {
            q *= p;
            if (q > opt.enumeration_bound)
                raise(Errc::bound_exceeded, "p^(2k) exceeds the enumeration bound");
            if (i + 1 == k) q_ = uint32_t(q);
        }
        q2_ = q;
        if (k == 0 || q_ == 0) raise(Errc::invalid_params, "bad field parameters");

        ppow_.resize(k_ + 1);
        ppow_[0] = 1;
        for (uint32_t i = 1; i <= k_; ++i) ppow_[i] = ppow_[i - 1] * p_;

        init_mid_modulus(opt);
        init_mid_generator_and_tables();
        init_top_modulus(opt);
        init_top_generator_and_tables(opt);
    }

    void check_enc(Level l, uint64_t enc) const {
        if (enc >= size_of(l))
            raise(Errc::invalid_params, "encoding out of range for " + std::string(level_name(l)));
    }

    void require_same(FieldElement a, FieldElement b) const {
        if (a.level != b.level)
            raise(Errc::level_mismatch, std::string(level_name(a.level)) + " vs " + level_name(b.level));
    }

    uint64_t base_inv(uint64_t a) const {
        // extended Euclid mod p
        int64_t t = 0, nt = 1, r = int64_t(p_), nr = int64_t(a);
        while (nr != 0) {
            int64_t qq = r / nr;
            std::swap(t -= qq * nt, nt);
            std::swap(r -= qq * nr, nr);
        }
        if (t < 0) t += p_;
        return uint64_t(t);
    }

    uint64_t base_pow(uint64_t a, int64_t e) const {
        a %= p_;
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            raise(Errc::division_by_zero, "0 raised to a negative power");
        }
        uint64_t m = p_ - 1;
        int64_t em = m ? e % int64_t(m) : 0;
        if (em < 0) em += int64_t(m);
        uint64_t r = 1, b = a;
        uint64_t ee = uint64_t(em);
        while (ee) {
            if (ee & 1) r = (r * b) % p_;
            b = (b * b) % p_;
            ee >>= 1;
        }
        return r;
    }

    // ---- bootstrap polynomial arithmetic over F_p (used before tables exist) ----

    using Digits = std::vector<uint32_t>;  // coefficients mod p, constant first

    static void trim(Digits& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    Digits enc_to_digits(uint64_t enc, size_t len) const {
        Digits d(len, 0);
        for (size_t i = 0; i < len && enc; ++i) {
            d[i] = uint32_t(enc % p_);
            enc /= p_;
        }
        return d;
    }

    uint64_t digits_to_enc(const Digits& d) const {
        uint64_t e = 0;
        for (size_t i = d.size(); i-- > 0;) e = e * p_ + d[i];
        return e;
    }

    Digits poly_mod(Digits a, const Digits& m) const {
        // m monic
        trim(a);
        while (a.size() >= m.size()) {
            uint32_t c = a.back();
            size_t shift = a.size() - m.size();
            if (c != 0)
                for (size_t i = 0; i < m.size(); ++i)
                    a[shift + i] = uint32_t((a[shift + i] + uint64_t(p_ - 1) * c % p_ * m[i]) % p_);
            a.pop_back();
            trim(a);
        }
        return a;
    }

    Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& m) const {
        if (a.empty() || b.empty()) return {};
        Digits c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p_);
        }
        return poly_mod(std::move(c), m);
    }

    Digits poly_powmod(Digits a, uint64_t e, const Digits& m) const {
        Digits r = {1};
        a = poly_mod(std::move(a), m);
        while (e) {
            if (e & 1) r = poly_mulmod(r, a, m);
            a = poly_mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    }

    Digits poly_gcd(Digits a, Digits b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            // a mod b with b made monic on the fly
            uint32_t lead_inv = uint32_t(base_inv(b.back()));
            Digits bm = b;
            for (auto& c : bm) c = uint32_t(uint64_t(c) * lead_inv % p_);
            a = poly_mod(std::move(a), bm);
            std::swap(a, b);
        }
        return a;
    }

    /// Monic f of degree >= 1 is irreducible over F_p iff it shares no factor
    /// with x^(p^i) - x for i up to deg/2.
    bool is_irreducible_fp(const Digits& f) const {
        size_t deg = f.size() - 1;
        if (deg == 1) return true;
        Digits x = {0, 1};
        Digits t = x;
        for (size_t i = 1; i <= deg / 2; ++i) {
            t = poly_powmod(std::move(t), p_, f);
            Digits diff = t;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = uint32_t((diff[1] + p_ - 1) % p_);
            trim(diff);
            Digits g = poly_gcd(f, diff);
            if (!(g.size() == 1)) return false;
        }
        return true;
    }

    void init_mid_modulus(const FieldCtxOptions& opt) {
        if (!opt.mid_modulus.empty()) {
            Digits f(opt.mid_modulus.begin(), opt.mid_modulus.end());
            if (f.size() != k_ + 1 || f.back() != 1)
                raise(Errc::invalid_params, "mid modulus must be monic of degree k");
            for (auto c : f)
                if (c >= p_) raise(Errc::invalid_params, "mid modulus coefficient out of range");
            if (!is_irreducible_fp(f)) raise(Errc::not_irreducible, "supplied mid modulus");
            mid_modulus_.assign(f.begin(), f.end());
        } else {
            for (uint64_t lower = 0;; ++lower) {
                if (lower >= q_) raise(Errc::internal_mismatch, "no irreducible polynomial found");
                Digits f = enc_to_digits(lower, k_ + 1);
                f[k_] = 1;
                if (is_irreducible_fp(f)) {
                    mid_modulus_.assign(f.begin(), f.end());
                    break;
                }
            }
        }
        mid_modulus_enc_ = digits_to_enc(Digits(mid_modulus_.begin(), mid_modulus_.end()));
    }

    uint32_t boot_mid_mul(uint32_t a, uint32_t b) const {
        Digits da = enc_to_digits(a, k_), db = enc_to_digits(b, k_);
        Digits m(mid_modulus_.begin(), mid_modulus_.end());
        Digits c = poly_mulmod(da, db, m);
        return uint32_t(digits_to_enc(c));
    }

    uint32_t boot_mid_pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1, b = a;
        while (e) {
            if (e & 1) r = boot_mid_mul(r, b);
            b = boot_mid_mul(b, b);
            e >>= 1;
        }
        return r;
    }

    void init_mid_generator_and_tables() {
        uint64_t n = q_ - 1;
        auto primes = detail::prime_factors(n);
        uint32_t gen = 0;
        for (uint32_t cand = 1; cand < q_; ++cand) {
            bool full = true;
            for (uint64_t pr : primes)
                if (boot_mid_pow(cand, n / pr) == 1) {
                    full = false;
                    break;
                }
            if (full) {
                gen = cand;
                break;
            }
        }
        if (gen == 0) raise(Errc::internal_mismatch, "no mid generator found");
        mid_gen_ = gen;

        mid_exp_.assign(n ? 2 * n : 2, 1);
        mid_log_.assign(q_, 0);
        uint32_t cur = 1;
        for (uint64_t i = 0; i < n; ++i) {
            mid_exp_[i] = cur;
            mid_exp_[i + n] = cur;
            mid_log_[cur] = uint32_t(i);
            cur = boot_mid_mul(cur, gen);
        }
        if (cur != 1) raise(Errc::internal_mismatch, "mid generator order check failed");
    }

    bool top_modulus_irreducible(uint32_t c0, uint32_t c1) const {
        // y^2 + c1 y + c0 irreducible over F_q iff it has no root
        if (p_ == 2) {
            if (c1 == 0) return false;  // y^2 + c0 = (y + sqrt(c0))^2
            uint32_t w = mid_div(c0, mid_mul(c1, c1));
            return mid_trace(w) == 1;
        }
        uint32_t disc = mid_sub(mid_mul(c1, c1), mid_mul(4 % p_, c0));
        return mid_eta(disc) == -1;
    }

    void init_top_modulus(const FieldCtxOptions& opt) {
        if (!opt.top_modulus.empty()) {
            if (opt.top_modulus.size() != 3 || opt.top_modulus[2] != 1)
                raise(Errc::invalid_params, "top modulus must be monic quadratic (c0 c1 1)");
            uint32_t c0 = opt.top_modulus[0], c1 = opt.top_modulus[1];
            if (c0 >= q_ || c1 >= q_) raise(Errc::invalid_params, "top modulus coefficient out of range");
            if (!top_modulus_irreducible(c0, c1)) raise(Errc::not_irreducible, "supplied top modulus");
            top_modulus_ = {c0, c1, 1};
        } else {
            bool found = false;
            for (uint64_t enc = 0; enc < q2_ && !found; ++enc) {
                uint32_t c0 = uint32_t(enc % q_), c1 = uint32_t(enc / q_);
                if (top_modulus_irreducible(c0, c1)) {
                    top_modulus_ = {c0, c1, 1};
                    found = true;
                }
            }
            if (!found) raise(Errc::internal_mismatch, "no irreducible quadratic found");
        }
        top_modulus_enc_ = uint64_t(top_modulus_[0]) + uint64_t(top_modulus_[1]) * q_ + q2_;
    }

    void init_top_generator_and_tables(const FieldCtxOptions& opt) {
        uint64_t n = q2_ - 1;
        auto primes = detail::prime_factors(n);
        uint64_t gen = 0;
        for (uint64_t cand = 1; cand < q2_; ++cand) {
            bool full = true;
            for (uint64_t pr : primes) {
                // plain square-and-multiply; tables do not exist yet
                uint64_t e = n / pr, r = 1, b = cand;
                while (e) {
                    if (e & 1) r = top_mul(r, b);
                    b = top_mul(b, b);
                    e >>= 1;
                }
                if (r == 1) {
                    full = false;
                    break;
                }
            }
            if (full) {
                gen = cand;
                break;
            }
        }
        if (gen == 0) raise(Errc::internal_mismatch, "no top generator found");
        top_gen_ = gen;

        if (q2_ <= opt.top_table_limit) {
            top_exp_.assign(2 * n, 1);
            top_log_.assign(q2_, 0);
            uint64_t cur = 1;
            for (uint64_t i = 0; i < n; ++i) {
                top_exp_[i] = uint32_t(cur);
                top_exp_[i + n] = uint32_t(cur);
                top_log_[cur] = uint32_t(i);
                cur = top_mul(cur, gen);
            }
            if (cur != 1) raise(Errc::internal_mismatch, "top generator order check failed");
            has_top_tables_ = true;
        }
    }

    std::optional<uint64_t> top_sqrt_tonelli(uint64_t a) const {
        // odd characteristic, no tables: Tonelli-Shanks in F_{q^2}*
        uint64_t n = q2_ - 1;
        auto powt = [&](uint64_t b, uint64_t e) {
            uint64_t r = 1;
            while (e) {
                if (e & 1) r = top_mul(r, b);
                b = top_mul(b, b);
                e >>= 1;
            }
            return r;
        };
        if (powt(a, n / 2) != 1) return std::nullopt;
        uint64_t s = 0, t = n;
        while (t % 2 == 0) {
            t /= 2;
            ++s;
        }
        uint64_t z = 2;
        while (z < q2_ && powt(z, n / 2) == 1) ++z;
        uint64_t c = powt(z, t);
        uint64_t r = powt(a, (t + 1) / 2);
        uint64_t tt = powt(a, t);
        uint64_t m = s;
        while (tt != 1) {
            uint64_t i = 0, probe = tt;
            while (probe != 1) {
                probe = top_mul(probe, probe);
                ++i;
            }
            uint64_t b = c;
            for (uint64_t j = 0; j + i + 1 < m; ++j) b = top_mul(b, b);
            r = top_mul(r, b);
            c = top_mul(b, b);
            tt = top_mul(tt, c);
            m = i;
        }
        return std::min(r, top_neg(r));
    }

    uint32_t p_ = 0, k_ = 0, q_ = 0;
    uint64_t q2_ = 0;
    std::vector<uint32_t> ppow_;
    std::vector<uint32_t> mid_modulus_;  // length k+1, monic
    std::array<uint32_t, 3> top_modulus_ = {0, 0, 1};
    uint64_t mid_modulus_enc_ = 0, top_modulus_enc_ = 0;
    uint32_t mid_gen_ = 0;
    uint64_t top_gen_ = 0;
    std::vector<uint32_t> mid_exp_, mid_log_;
    std::vector<uint32_t> top_exp_, top_log_;
    bool has_top_tables_ = false;
};

}  // namespace permpoly

#endif
