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
 * @file search.hpp
 *
 * Exhaustive searches and cross-checks:
 *  - the monomial exponent searches over T (even and odd characteristic),
 *  - verification of the catalogued fractional polynomials against their
 *    T-level counterparts,
 *  - the classification scan for linearized L(b) term counts,
 *  - parameter sweeps over every explicit family, comparing the brute-force
 *    oracle against the predicted verdict.
 */

#ifndef PERMPOLY_SEARCH_HPP
#define PERMPOLY_SEARCH_HPP

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permpoly/criterion.hpp"
#include "permpoly/families.hpp"
#include "permpoly/parallel.hpp"

namespace permpoly {

struct SearchResult {
    uint32_t p = 0, k = 0;
    std::vector<uint64_t> hits;  // ascending, duplicate free
    std::string excluded;        // the exclusion rule applied, if any
};

/// Even characteristic: s in [1, q-2] with the Frobenius powers
/// s = 2^i excluded, recording s iff L(b) = b + b^s + b^(2s) permutes T.
inline SearchResult monomial_search_even(const FieldCtx& F, bool include_frobenius = false,
                                         unsigned jobs = 1) {
    if (!F.char2()) raise(Errc::invalid_params, "even search needs characteristic 2");
    SearchResult out{F.p(), F.k(), {}, include_frobenius ? "" : "s = power of 2 skipped"};
    if (F.q() < 4) return out;
    std::set<uint64_t> powers;
    for (uint32_t i = 0; i < F.k(); ++i) powers.insert((uint64_t(1) << i) % (F.q() - 1));
    auto T = build_T(F);
    uint64_t smax = F.q() - 2;
    std::vector<char> hit(smax + 1, 0);
    parallel_for(smax, jobs, [&](uint64_t idx) {
        uint64_t s = idx + 1;
        if (!include_frobenius && powers.count(s)) return;
        auto v = check_L_permutes_T(
            F, [&](uint32_t b) -> std::optional<uint32_t> { return F.mid_pow(b, int64_t(s)); });
        hit[s] = v.is_permutation;
    });
    for (uint64_t s = 1; s <= smax; ++s)
        if (hit[s]) out.hits.push_back(s);
    return out;
}

/// Odd characteristic: s in [1, q-2], recording s iff L(b) = b^(2s+1)
/// permutes T.
inline SearchResult monomial_search_odd(const FieldCtx& F, unsigned jobs = 1) {
    if (F.char2()) raise(Errc::invalid_params, "odd search needs odd characteristic");
    SearchResult out{F.p(), F.k(), {}, ""};
    auto T = build_T(F);
    uint64_t smax = F.q() >= 3 ? F.q() - 2 : 0;
    std::vector<char> hit(smax + 1, 0);
    parallel_for(smax, jobs, [&](uint64_t idx) {
        uint64_t s = idx + 1;
        auto v = check_L_permutes_T(
            F, [&](uint32_t b) -> std::optional<uint32_t> { return F.mid_pow(b, int64_t(s)); });
        hit[s] = v.is_permutation;
    });
    for (uint64_t s = 1; s <= smax; ++s)
        if (hit[s]) out.hits.push_back(s);
    return out;
}

/// CSV in the table format: header p,k,s and one row per hit.
inline std::string tables_csv(uint32_t p, uint32_t kmin, uint32_t kmax,
                              bool include_frobenius = false, unsigned jobs = 1) {
    std::ostringstream os;
    os << "p,k,s\n";
    for (uint32_t k = kmin; k <= kmax; ++k) {
        auto F = FieldCtx::make(p, k);
        SearchResult r = p == 2 ? monomial_search_even(F, include_frobenius, jobs)
                                : monomial_search_odd(F, jobs);
        for (uint64_t s : r.hits) os << p << "," << k << "," << s << "\n";
    }
    return os.str();
}

// ---- catalogued fractional polynomials --------------------------------------

struct KnownEntry {
    const char* name;
    std::vector<int64_t> g_num, g_den;  // exponent lists over F_2
    enum class L { inv_b, lin_b2_b4, shift2_inv, shift1_inv, inv_b2, none } l_kind;
    enum class Cond { any_k, gcd3_k, k_even, k_div4, k_not_div4 } cond;
};

inline const std::vector<KnownEntry>& known_entries() {
    static const std::vector<KnownEntry> rows = {
        {"g1", {3, 2, 0}, {3, 1, 0}, KnownEntry::L::inv_b, KnownEntry::Cond::any_k},
        {"g2", {4, 3, 1}, {3, 1, 0}, KnownEntry::L::lin_b2_b4, KnownEntry::Cond::gcd3_k},
        {"g3", {5, 4, 0}, {5, 1, 0}, KnownEntry::L::inv_b, KnownEntry::Cond::any_k},
        {"g4", {5, 2, 1}, {4, 3, 0}, KnownEntry::L::shift2_inv, KnownEntry::Cond::k_even},
        // the printed fraction for g5 degenerates when 5 | q+1 (its numerator and
        // denominator differ by x^5 + 1), so the faithful range is k = 0 mod 4
        {"g5", {5, 4, 1}, {4, 1, 0}, KnownEntry::L::shift1_inv, KnownEntry::Cond::k_div4},
        {"g6", {6, 2, 1}, {5, 4, 0}, KnownEntry::L::lin_b2_b4, KnownEntry::Cond::gcd3_k},
        {"g7", {7, 5, 0}, {7, 2, 0}, KnownEntry::L::inv_b2, KnownEntry::Cond::any_k},
        {"g8", {7, 6, 1}, {6, 1, 0}, KnownEntry::L::none, KnownEntry::Cond::gcd3_k},
        {"g9", {9, 3, 1}, {8, 6, 0}, KnownEntry::L::none, KnownEntry::Cond::k_not_div4},
    };
    return rows;
}

inline bool known_condition_holds(const KnownEntry& e, uint32_t k) {
    switch (e.cond) {
        case KnownEntry::Cond::any_k: return k > 0;
        case KnownEntry::Cond::gcd3_k: return k % 3 != 0;
        case KnownEntry::Cond::k_even: return k % 2 == 0;
        case KnownEntry::Cond::k_div4: return k % 4 == 0;
        case KnownEntry::Cond::k_not_div4: return k % 4 != 0;
    }
    return false;
}

struct KnownVerdict {
    bool g_permutes_mu = false;
    std::optional<bool> l_permutes_t;  // absent for rows without a usable L
    bool verdict = false;
};

/// Both routes: g on mu_{q+1} directly, and L on T; they must agree
/// (VerdictMismatch otherwise, which would indicate an arithmetic bug).
inline KnownVerdict verify_known(const FieldCtx& F, const KnownEntry& e) {
    if (!F.char2()) raise(Errc::invalid_params, "catalogue rows live in characteristic 2");
    UniPoly num, den;
    for (int64_t x : e.g_num) {
        if (num.c.size() <= size_t(x)) num.c.resize(size_t(x) + 1, 0);
        num.c[size_t(x)] = 1;
    }
    for (int64_t x : e.g_den) {
        if (den.c.size() <= size_t(x)) den.c.resize(size_t(x) + 1, 0);
        den.c[size_t(x)] = 1;
    }
    // the catalogue lists unreduced fractions; cancel the common factor so
    // removable points do not read as failures
    UniPoly g0 = up_gcd(F, num, den);
    if (up_deg(g0) > 0) {
        num = up_divexact(F, num, g0);
        den = up_divexact(F, den, g0);
    }
    auto g = [&](uint64_t x) -> std::optional<uint64_t> {
        uint64_t d = up_eval_top(F, den, x);
        if (d == 0) return std::nullopt;
        return F.top_mul(up_eval_top(F, num, x), F.top_inv(d));
    };
    KnownVerdict out;
    out.g_permutes_mu = check_permutation(F, OracleDomain::mu, g).is_permutation;
    if (e.l_kind != KnownEntry::L::none) {
        auto l = [&](uint32_t b) -> std::optional<uint32_t> {
            switch (e.l_kind) {
                case KnownEntry::L::inv_b: return F.mid_inv(b);
                case KnownEntry::L::lin_b2_b4: return F.mid_mul(b, b);  // l = b^2
                case KnownEntry::L::inv_b2: return F.mid_inv(F.mid_mul(b, b));
                case KnownEntry::L::shift2_inv: {
                    uint32_t d = F.mid_add(1, F.mid_mul(b, b));
                    if (d == 0) return std::nullopt;
                    return F.mid_inv(d);
                }
                case KnownEntry::L::shift1_inv: {
                    uint32_t d = F.mid_add(1, b);
                    if (d == 0) return std::nullopt;
                    return F.mid_inv(d);
                }
                default: return std::nullopt;
            }
        };
        out.l_permutes_t = check_L_permutes_T(F, l).is_permutation;
        if (*out.l_permutes_t != out.g_permutes_mu)
            raise(Errc::verdict_mismatch, std::string(e.name) + " at k = " + std::to_string(F.k()));
    }
    out.verdict = out.g_permutes_mu;
    return out;
}

// ---- linearized classification ----------------------------------------------

struct ClassifyReport {
    uint64_t tested = 0;
    uint64_t mismatches = 0;
    std::vector<std::vector<uint32_t>> examples;  // offending alpha vectors
    bool sampled = false;
    uint64_t seed = 0;
};

namespace detail {

inline bool monomial_alpha_pattern(const FieldCtx& F, const std::vector<uint32_t>& al) {
    uint32_t k = F.k();
    size_t t = al.size() - 1;
    if (t == k - 1) {
        // alpha_i = alpha_0^(2^i) with alpha_0 != 0
        if (al[0] != 0) {
            bool ok = true;
            for (size_t i = 1; i <= t && ok; ++i)
                ok = al[i] == F.mid_pow(al[0], int64_t(uint64_t(1) << i));
            if (ok) return true;
        }
        // the shifted pattern anchored at some j >= 1
        for (uint32_t j = 1; j < k; ++j) {
            uint32_t c = al[j];
            if (c == 0) continue;
            bool ok = true;
            for (uint32_t i = j; i < k && ok; ++i)
                ok = al[i] == F.mid_pow(c, int64_t(uint64_t(1) << (i - j)));
            for (uint32_t i = 0; i < j && ok; ++i)
                ok = al[i] == F.mid_add(1, F.mid_pow(c, int64_t(uint64_t(1) << (k + i - j))));
            if (ok) return true;
        }
        return false;
    }
    for (uint32_t a : al)
        if (a != 1) return false;
    return true;  // all ones, t <= k-2
}

inline bool binomial_alpha_pattern(const FieldCtx& F, const std::vector<uint32_t>& al) {
    uint32_t k = F.k();
    size_t t = al.size() - 1;
    auto frob = [&](uint32_t c, uint32_t e) { return F.mid_pow(c, int64_t(uint64_t(1) << e)); };
    if (t == k - 1) {
        // case: alpha_0 chain then an alpha_j chain, j in [1, k-1]
        for (uint32_t j = 1; j < k; ++j) {
            uint32_t a0 = al[0], c = al[j];
            if (c == 0) continue;
            if (c == frob(a0, j)) continue;
            if (F.mid_add(frob(c, k - j), F.mid_add(a0, 1)) == 0) continue;
            bool ok = true;
            for (uint32_t i = 0; i < j && ok; ++i) ok = al[i] == frob(a0, i);
            for (uint32_t i = j; i < k && ok; ++i) ok = al[i] == frob(c, i - j);
            if (ok) return true;
        }
        // case: two anchors j1 < j2
        for (uint32_t j1 = 1; j1 < k; ++j1)
            for (uint32_t j2 = j1 + 1; j2 < k; ++j2) {
                uint32_t c1 = al[j1], c2 = al[j2];
                if (F.mid_add(c1, F.mid_add(frob(c2, k - j2 + j1), 1)) == 0) continue;
                if (c2 == frob(c1, j2 - j1)) continue;
                bool ok = true;
                for (uint32_t i = 0; i < j1 && ok; ++i)
                    ok = al[i] == F.mid_add(1, frob(c2, k - j2 + i));
                for (uint32_t i = j1; i < j2 && ok; ++i) ok = al[i] == frob(c1, i - j1);
                for (uint32_t i = j2; i < k && ok; ++i) ok = al[i] == frob(c2, i - j2);
                if (ok) return true;
            }
        return false;
    }
    // t <= k-2: a Frobenius chain from alpha_0 not in {0,1} ...
    if (al[0] > 1) {
        bool ok = true;
        for (size_t i = 1; i <= t && ok; ++i) ok = al[i] == frob(al[0], uint32_t(i));
        if (ok) return true;
    }
    // ... or ones then a chain from alpha_j not in {0,1}
    for (uint32_t j = 1; j <= t; ++j) {
        uint32_t c = al[j];
        if (c <= 1) continue;
        bool ok = true;
        for (uint32_t i = 0; i < j && ok; ++i) ok = al[i] == 1;
        for (uint32_t i = j; i <= t && ok; ++i) ok = al[i] == frob(c, i - j);
        if (ok) return true;
    }
    return false;
}

}  // namespace detail

/// Scan alpha vectors (alpha_t != 0) of fixed t, compare the actual term
/// count of L(b) = b + l + l^2 against the catalogued monomial/binomial
/// patterns.  Falls back to seeded sampling past the budget.
inline ClassifyReport classify_linearized(const FieldCtx& F, uint32_t t,
                                          uint64_t budget = uint64_t(1) << 20,
                                          uint64_t seed = 1) {
    if (!F.char2()) raise(Errc::invalid_params, "classification runs in characteristic 2");
    if (t + 1 > F.k()) raise(Errc::invalid_params, "t <= k-1 required");
    ClassifyReport rep;
    rep.seed = seed;
    uint64_t q = F.q();
    uint64_t total = 1;
    for (uint32_t i = 0; i < t; ++i) {
        total *= q;
        if (total > budget) break;
    }
    bool full = total <= budget && total * (q - 1) <= budget;
    rep.sampled = !full;
    auto consider = [&](const std::vector<uint32_t>& al) {
        auto L = detail::linearized_L_coeffs(F, al);
        int terms = 0;
        for (uint32_t c : L)
            if (c) ++terms;
        bool pred_mono = detail::monomial_alpha_pattern(F, al);
        bool pred_bin = detail::binomial_alpha_pattern(F, al);
        bool bad = ((terms == 1) != pred_mono) || ((terms == 2) != pred_bin);
        ++rep.tested;
        if (bad) {
            ++rep.mismatches;
            if (rep.examples.size() < 8) rep.examples.push_back(al);
        }
    };
    std::vector<uint32_t> al(t + 1, 0);
    if (full) {
        // odometer over F_q^t x F_q*
        for (uint64_t last = 1; last < q; ++last) {
            al.assign(t + 1, 0);
            al[t] = uint32_t(last);
            for (;;) {
                consider(al);
                uint32_t i = 0;
                while (i < t && ++al[i] == q) al[i++] = 0;
                if (i == t) break;
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        for (uint64_t n = 0; n < 10000; ++n) {
            for (uint32_t i = 0; i <= t; ++i) al[i] = uint32_t(rng() % q);
            if (al[t] == 0) al[t] = 1;
            consider(al);
        }
    }
    return rep;
}

// ---- family sweeps ------------------------------------------------------------

struct SweepMismatch {
    std::string family, params;
    bool predicted = false, oracle = false;
};

struct SweepReport {
    std::string family;
    uint64_t tuples = 0;
    uint64_t agreements = 0;
    std::vector<SweepMismatch> mismatches;
};

struct SweepOptions {
    uint64_t qq_max = uint64_t(1) << 20;   // oracle domain cap
    uint32_t trinomial_l_kmax = 14;        // L-level-only extension for the k mod 7 boundary
    std::vector<uint32_t> odd_primes = {3, 5, 7, 11, 13};
    uint64_t seed = 20260808;
    bool verbose = false;
};

namespace detail {

inline void sweep_one(const FieldCtx& F, FamilyId id, const FamilyParams& P, SweepReport& rep,
                      const std::string& params) {
    auto r = family_generate(F, id, P);
    bool oracle = check_permutation_pp(F, r.f).is_permutation;
    ++rep.tuples;
    if (oracle == r.predicted)
        ++rep.agreements;
    else
        rep.mismatches.push_back({family_name(id), params, r.predicted, oracle});
}

/// Deterministic small alpha samples: the first few encodings, plus seeded
/// random picks, always containing both predicted outcomes when reachable.
inline std::vector<uint32_t> alpha_samples(const FieldCtx& F, uint64_t seed, int want,
                                           uint32_t min_value = 1) {
    std::vector<uint32_t> out;
    for (uint32_t v = min_value; v < F.q() && int(out.size()) < want; ++v) out.push_back(v);
    std::mt19937_64 rng(seed);
    while (int(out.size()) < 2 * want && F.q() > min_value) {
        uint32_t v = min_value + uint32_t(rng() % (F.q() - min_value));
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline int alpha_budget_for_k(uint32_t k) { return k <= 4 ? 6 : (k <= 6 ? 4 : (k <= 8 ? 2 : 1)); }

}  // namespace detail

/// Sweep one family across all admissible parameters with q^2 <= qq_max,
/// checking oracle == predicted everywhere.
inline SweepReport sweep_family(FamilyId id, const SweepOptions& opt = {}) {
    SweepReport rep;
    rep.family = family_name(id);
    auto kmax_for = [&](uint32_t p) {
        uint32_t k = 0;
        unsigned __int128 qq = 1;
        for (;;) {
            qq *= p;
            qq *= p;
            if (qq > opt.qq_max) break;
            ++k;
        }
        return k;
    };
    switch (id) {
        case FamilyId::even_inv_b:
        case FamilyId::even_inv_b2: {
            for (uint32_t k = 2; k <= kmax_for(2); ++k)
                detail::sweep_one(FieldCtx::make(2, k), id, {}, rep, "k=" + std::to_string(k));
            break;
        }
        case FamilyId::even_cbrt: {
            for (uint32_t k = 3; k <= kmax_for(2); k += 2)
                detail::sweep_one(FieldCtx::make(2, k), id, {}, rep, "k=" + std::to_string(k));
            break;
        }
        case FamilyId::even_sqrtdiff: {
            for (uint32_t k = 2; k <= kmax_for(2); k += 2)
                detail::sweep_one(FieldCtx::make(2, k), id, {}, rep, "k=" + std::to_string(k));
            break;
        }
        case FamilyId::even_q4_cbrt: {
            for (uint32_t k = 4; k <= kmax_for(2); k += 4)
                detail::sweep_one(FieldCtx::make(2, k), id, {}, rep, "k=" + std::to_string(k));
            break;
        }
        case FamilyId::even_linearized: {
            std::mt19937_64 rng(opt.seed);
            for (uint32_t k = 2; k <= kmax_for(2); ++k) {
                auto F = FieldCtx::make(2, k);
                for (uint32_t t = 0; t < k; ++t) {
                    uint64_t space = 1;
                    for (uint32_t i = 0; i <= t; ++i) space *= F.q();
                    uint64_t want = std::min<uint64_t>(space, k <= 4 ? 64 : 8);
                    for (uint64_t n = 0; n < want; ++n) {
                        FamilyParams P;
                        P.alphas.resize(t + 1);
                        for (auto& a : P.alphas) a = uint32_t(rng() % F.q());
                        if (P.alphas.back() == 0) P.alphas.back() = 1;
                        detail::sweep_one(F, id, P, rep,
                                          "k=" + std::to_string(k) + ",t=" + std::to_string(t));
                    }
                }
            }
            break;
        }
        case FamilyId::even_lin_monomial: {
            for (uint32_t k = 2; k <= kmax_for(2); ++k) {
                auto F = FieldCtx::make(2, k);
                int budget = detail::alpha_budget_for_k(k);
                for (uint32_t a0 : detail::alpha_samples(F, opt.seed, budget)) {
                    FamilyParams P;
                    P.lin_case = 1;
                    P.alpha0 = a0;
                    detail::sweep_one(F, id, P, rep,
                                      "k=" + std::to_string(k) + ",case=1,a0=" + std::to_string(a0));
                }
                std::vector<uint32_t> js;
                if (k <= 6)
                    for (uint32_t j = 1; j < k; ++j) js.push_back(j);
                else
                    js = {1, 2, k - 2, k - 1};
                for (uint32_t j : js)
                    for (uint32_t aj : detail::alpha_samples(F, opt.seed + j, std::max(1, budget / 2))) {
                        FamilyParams P;
                        P.lin_case = 2;
                        P.j = j;
                        P.alphaj = aj;
                        detail::sweep_one(F, id, P, rep,
                                          "k=" + std::to_string(k) + ",case=2,j=" + std::to_string(j));
                    }
                for (uint32_t t = 0; t + 2 <= k; ++t) {
                    FamilyParams P;
                    P.lin_case = 3;
                    P.t = t;
                    detail::sweep_one(F, id, P, rep,
                                      "k=" + std::to_string(k) + ",case=3,t=" + std::to_string(t));
                }
            }
            break;
        }
        case FamilyId::even_lin_binomial: {
            for (uint32_t k = 2; k <= kmax_for(2); ++k) {
                auto F = FieldCtx::make(2, k);
                int budget = detail::alpha_budget_for_k(k);
                auto try_params = [&](FamilyParams P, const std::string& tag) {
                    try {
                        detail::sweep_one(F, id, P, rep, tag);
                    } catch (const Error& e) {
                        if (e.code() != Errc::invalid_params) throw;
                    }
                };
                std::vector<uint32_t> js;
                if (k <= 6)
                    for (uint32_t j = 1; j < k; ++j) js.push_back(j);
                else
                    js = {1, 2, k / 2, k - 1};
                for (uint32_t j : js)
                    for (uint32_t c : detail::alpha_samples(F, opt.seed + j, budget))
                        for (uint32_t a0 : {uint32_t(0), uint32_t(1), c}) {
                            FamilyParams P;
                            P.lin_case = 1;
                            P.j = j;
                            P.alpha0 = a0;
                            P.alphaj = c;
                            try_params(P, "k=" + std::to_string(k) + ",case=1,j=" + std::to_string(j));
                        }
                if (k >= 3) {
                    std::vector<std::pair<uint32_t, uint32_t>> jpairs;
                    if (k <= 6) {
                        for (uint32_t j1 = 1; j1 < k; ++j1)
                            for (uint32_t j2 = j1 + 1; j2 < k; ++j2) jpairs.push_back({j1, j2});
                    } else {
                        jpairs = {{1, 2}, {1, k - 1}, {k / 2, k - 1}};
                    }
                    for (auto [j1, j2] : jpairs)
                        for (uint32_t c1 : detail::alpha_samples(F, opt.seed + j1, budget / 2 + 1))
                            for (uint32_t c2 : detail::alpha_samples(F, opt.seed + 7 * j2, budget / 2 + 1)) {
                                FamilyParams P;
                                P.lin_case = 2;
                                P.j1 = j1;
                                P.j2 = j2;
                                P.alpha0 = c1;
                                P.alphaj = c2;
                                try_params(P, "k=" + std::to_string(k) + ",case=2");
                            }
                }
                for (uint32_t t = 0; t + 2 <= k; ++t)
                    for (uint32_t a0 : detail::alpha_samples(F, opt.seed + t, budget, 2)) {
                        FamilyParams P;
                        P.lin_case = 3;
                        P.t = t;
                        P.alpha0 = a0;
                        try_params(P, "k=" + std::to_string(k) + ",case=3,t=" + std::to_string(t));
                    }
                for (uint32_t t = 1; t + 2 <= k; ++t)
                    for (uint32_t j = 1; j <= t; ++j)
                        for (uint32_t aj : detail::alpha_samples(F, opt.seed + 13 * j, budget / 2 + 1, 2)) {
                            FamilyParams P;
                            P.lin_case = 4;
                            P.t = t;
                            P.j = j;
                            P.alphaj = aj;
                            try_params(P, "k=" + std::to_string(k) + ",case=4,t=" + std::to_string(t));
                        }
            }
            break;
        }
        case FamilyId::even_lin_trinomial_b4:
        case FamilyId::even_lin_trinomial_b2: {
            for (uint32_t k = 3; k <= kmax_for(2); ++k)
                detail::sweep_one(FieldCtx::make(2, k), id, {}, rep, "k=" + std::to_string(k));
            // past the oracle cap: L-level check against the k mod 7 rule
            for (uint32_t k = kmax_for(2) + 1; k <= opt.trinomial_l_kmax; ++k) {
                auto F = FieldCtx::make(2, k);
                std::vector<uint32_t> al = id == FamilyId::even_lin_trinomial_b4
                                               ? std::vector<uint32_t>{0, 0, 1}
                                               : std::vector<uint32_t>{0, 1, 1};
                bool l_level = check_linearized_perm(F, al);
                bool predicted = k % 7 != 0;
                ++rep.tuples;
                if (l_level == predicted)
                    ++rep.agreements;
                else
                    rep.mismatches.push_back(
                        {family_name(id), "k=" + std::to_string(k) + " (L-level)", predicted, l_level});
            }
            break;
        }
        case FamilyId::odd_frob1_pos:
        case FamilyId::odd_frob1_neg:
        case FamilyId::odd_frob2_pos:
        case FamilyId::odd_frob2_neg: {
            for (uint32_t p : opt.odd_primes) {
                for (uint32_t k = 1; k <= kmax_for(p); ++k) {
                    auto F = FieldCtx::make(p, k);
                    for (uint32_t m = 1; m <= k; ++m) {
                        FamilyParams P;
                        P.m = m;
                        detail::sweep_one(F, id, P, rep,
                                          "p=" + std::to_string(p) + ",k=" + std::to_string(k) +
                                              ",m=" + std::to_string(m));
                    }
                }
            }
            break;
        }
    }
    return rep;
}

inline std::vector<SweepReport> sweep_all_families(const SweepOptions& opt = {}) {
    std::vector<SweepReport> out;
    for (FamilyId id : {FamilyId::even_inv_b, FamilyId::even_inv_b2, FamilyId::even_cbrt,
                        FamilyId::even_sqrtdiff, FamilyId::even_q4_cbrt, FamilyId::even_linearized,
                        FamilyId::even_lin_monomial, FamilyId::even_lin_binomial,
                        FamilyId::even_lin_trinomial_b4, FamilyId::even_lin_trinomial_b2,
                        FamilyId::odd_frob1_pos, FamilyId::odd_frob1_neg, FamilyId::odd_frob2_pos,
                        FamilyId::odd_frob2_neg})
        out.push_back(sweep_family(id, opt));
    return out;
}

}  // namespace permpoly

#endif
