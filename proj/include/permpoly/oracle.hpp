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
 * @file oracle.hpp
 *
 * Brute-force ground truth: decide by full enumeration whether a map
 * permutes F_{q^2}, mu_{q+1}, {2,-2} u S, T, or F_q.  Image tracking is a
 * bitset indexed by integer encoding; on the first repeat the earlier
 * preimage is recovered by a rescan, so the verdict always carries a
 * concrete witness.
 */

#ifndef PERMPOLY_ORACLE_HPP
#define PERMPOLY_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "permpoly/construct.hpp"
#include "permpoly/sets.hpp"

namespace permpoly {

enum class OracleDomain { full_ext_field, mu, s_with_poles, t_set, mid_field };

struct PermVerdict {
    bool is_permutation = false;
    enum class Fail : uint8_t { none, collision, escape, undefined } fail = Fail::none;
    std::optional<std::pair<uint64_t, uint64_t>> collision;  // two inputs with equal images
    std::optional<uint64_t> witness;                         // escaping / undefined input
    uint64_t domain_size = 0;
};

namespace detail {

class Bitset {
public:
    explicit Bitset(uint64_t n) : bits_((n + 63) / 64, 0) {}
    bool test_and_set(uint64_t i) {
        uint64_t& w = bits_[i >> 6];
        uint64_t m = uint64_t(1) << (i & 63);
        bool was = w & m;
        w |= m;
        return was;
    }
    bool test(uint64_t i) const { return bits_[i >> 6] & (uint64_t(1) << (i & 63)); }

private:
    std::vector<uint64_t> bits_;
};

/// Core bijectivity scan.  `point(i)` yields the i-th domain element,
/// `map` evaluates (empty optional = evaluation failure), `member` tests
/// that an image stays inside the target set.
template <class PointFn, class MapFn, class MemberFn>
PermVerdict scan_bijection(uint64_t n, uint64_t ambient, PointFn&& point, MapFn&& map,
                           MemberFn&& member) {
    PermVerdict v;
    v.domain_size = n;
    Bitset seen(ambient);
    for (uint64_t i = 0; i < n; ++i) {
        uint64_t x = point(i);
        std::optional<uint64_t> y = map(x);
        if (!y) {
            v.fail = PermVerdict::Fail::undefined;
            v.witness = x;
            return v;
        }
        if (!member(*y)) {
            v.fail = PermVerdict::Fail::escape;
            v.witness = x;
            return v;
        }
        if (seen.test_and_set(*y)) {
            for (uint64_t j = 0; j < i; ++j) {
                uint64_t x2 = point(j);
                auto y2 = map(x2);
                if (y2 && *y2 == *y) {
                    v.fail = PermVerdict::Fail::collision;
                    v.collision = {x2, x};
                    return v;
                }
            }
            v.fail = PermVerdict::Fail::collision;  // unreachable fallback
            v.collision = {x, x};
            return v;
        }
    }
    v.is_permutation = true;
    return v;
}

}  // namespace detail

/// Decide whether `map` (on integer encodings) permutes the given domain.
inline PermVerdict check_permutation(const FieldCtx& F, OracleDomain domain,
                                     const std::function<std::optional<uint64_t>(uint64_t)>& map) {
    switch (domain) {
        case OracleDomain::full_ext_field:
            return detail::scan_bijection(
                F.q2(), F.q2(), [](uint64_t i) { return i; }, map,
                [](uint64_t) { return true; });
        case OracleDomain::mid_field:
            return detail::scan_bijection(
                F.q(), F.q(), [](uint64_t i) { return i; }, map,
                [](uint64_t) { return true; });
        case OracleDomain::mu: {
            auto mu = F.mu_elements();
            return detail::scan_bijection(
                mu.size(), F.q2(), [&](uint64_t i) { return mu[i]; }, map,
                [&](uint64_t y) { return F.is_on_mu(y); });
        }
        case OracleDomain::s_with_poles: {
            auto pts = s_with_poles(F, build_S(F));
            detail::Bitset member(F.q());
            for (uint32_t a : pts) member.test_and_set(a);
            return detail::scan_bijection(
                pts.size(), F.q(), [&](uint64_t i) { return uint64_t(pts[i]); }, map,
                [&](uint64_t y) { return y < F.q() && member.test(y); });
        }
        case OracleDomain::t_set: {
            auto T = build_T(F);
            detail::Bitset member(F.q());
            for (uint32_t b : T.elems) member.test_and_set(b);
            return detail::scan_bijection(
                T.elems.size(), F.q(), [&](uint64_t i) { return uint64_t(T.elems[i]); }, map,
                [&](uint64_t y) { return y < F.q() && member.test(y); });
        }
    }
    raise(Errc::invalid_params, "unknown oracle domain");
}

/// Specialized full-field scan for an assembled sparse polynomial.  With the
/// top log/exp tables present the field is walked in generator order, so the
/// per-term exponent update is a single modular addition.
inline PermVerdict check_permutation_pp(const FieldCtx& F, const AssembledPP& f) {
    PermVerdict v;
    v.domain_size = F.q2();
    if (f.terms.empty()) {
        v.fail = PermVerdict::Fail::collision;
        v.collision = {0, 1};
        return v;
    }
    if (!F.has_top_tables()) {
        return detail::scan_bijection(
            F.q2(), F.q2(), [](uint64_t i) { return i; },
            [&](uint64_t x) -> std::optional<uint64_t> { return pp_eval(F, f, x); },
            [](uint64_t) { return true; });
    }
    uint64_t M = F.q2() - 1;
    size_t nt = f.terms.size();
    std::vector<uint64_t> step(nt), acc(nt);
    for (size_t t = 0; t < nt; ++t) {
        step[t] = f.terms[t].first % M;
        acc[t] = F.top_log(F.embed_mid(f.terms[t].second));  // log(c * x^e) at x = g^0
    }
    detail::Bitset seen(F.q2());
    seen.test_and_set(0);  // f(0) = 0
    auto value_at = [&](const std::vector<uint64_t>& a) {
        uint64_t s = 0;
        for (size_t t = 0; t < nt; ++t) s = F.top_add(s, F.top_exp_at(a[t]));
        return s;
    };
    for (uint64_t j = 0; j < M; ++j) {
        uint64_t y = value_at(acc);
        if (seen.test_and_set(y)) {
            // recover the earlier colliding input
            uint64_t xj = F.top_exp_at(j);
            if (y == 0) {
                v.fail = PermVerdict::Fail::collision;
                v.collision = {0, xj};
                return v;
            }
            for (uint64_t j2 = 0; j2 < j; ++j2) {
                uint64_t x2 = F.top_exp_at(j2);
                if (pp_eval(F, f, x2) == y) {
                    v.fail = PermVerdict::Fail::collision;
                    v.collision = {x2, xj};
                    return v;
                }
            }
            v.fail = PermVerdict::Fail::collision;
            v.collision = {xj, xj};
            return v;
        }
        for (size_t t = 0; t < nt; ++t) {
            acc[t] += step[t];
            if (acc[t] >= M) acc[t] -= M;
        }
    }
    v.is_permutation = true;
    return v;
}

/// Does L(b) permute T, with L(b) = b + l(b) + l(b)^2 in characteristic 2
/// and L(b) = b l(b)^2 in odd characteristic?  Images must stay inside T;
/// an escape is reported distinctly from a collision.
inline PermVerdict check_L_permutes_T(
    const FieldCtx& F, const std::function<std::optional<uint32_t>(uint32_t)>& l) {
    auto L = [&](uint64_t b) -> std::optional<uint64_t> {
        auto lv = l(uint32_t(b));
        if (!lv) return std::nullopt;
        uint32_t l2 = F.mid_mul(*lv, *lv);
        if (F.char2()) return F.mid_add(uint32_t(b), F.mid_add(*lv, l2));
        return F.mid_mul(uint32_t(b), l2);
    };
    return check_permutation(F, OracleDomain::t_set, L);
}

/// Kernel test for the linearized L(b) = b + l(b) + l(b)^2 with
/// l(b) = sum alpha_i b^(2^i): L permutes F_q iff L(b) = 0 forces b = 0.
inline bool check_linearized_perm(const FieldCtx& F, const std::vector<uint32_t>& alphas) {
    if (!F.char2()) raise(Errc::odd_characteristic, "linearized kernel test needs characteristic 2");
    auto l_of = [&](uint32_t b) {
        uint32_t acc = 0;
        uint32_t pw = b;  // b^(2^i)
        for (size_t i = 0; i < alphas.size(); ++i) {
            acc = F.mid_add(acc, F.mid_mul(alphas[i], pw));
            pw = F.mid_mul(pw, pw);
        }
        return acc;
    };
    for (uint32_t b = 1; b < F.q(); ++b) {
        uint32_t lv = l_of(b);
        uint32_t Lb = F.mid_add(b, F.mid_add(lv, F.mid_mul(lv, lv)));
        if (Lb == 0) return false;
    }
    return true;
}

}  // namespace permpoly

#endif
