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
 * @file sets.hpp
 *
 * The two parameter sets of the verification engine:
 *
 *  S = { x + x^q : x on mu_{q+1}, x != +-1 }, characterized inside F_q by
 *      tr(1/a) = 1 (char 2) or eta(a^2 - 4) = -1 (odd char);
 *  T = { b : tr(b) = 1 } (char 2) or { b : eta(b) = -1, eta(b+4) = +1 } (odd).
 *
 * build_S computes both descriptions and insists they agree, which makes it
 * a cheap self-test of the tower arithmetic.
 */

#ifndef PERMPOLY_SETS_HPP
#define PERMPOLY_SETS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

struct SSet {
    std::vector<uint32_t> elems;  // sorted mid encodings
    bool even_char = false;
};

struct TSet {
    std::vector<uint32_t> elems;  // sorted mid encodings
    bool even_char = false;
};

inline SSet build_S(const FieldCtx& F) {
    SSet out;
    out.even_char = F.char2();
    for (uint32_t a = 0; a < F.q(); ++a) {
        if (F.char2()) {
            if (a != 0 && F.mid_trace(F.mid_inv(a)) == 1) out.elems.push_back(a);
        } else {
            uint32_t d = F.mid_sub(F.mid_mul(a, a), 4 % F.p());
            if (F.mid_eta(d) == -1) out.elems.push_back(a);
        }
    }
    // independent construction: the image of mu minus the fixed points of conjugation
    std::vector<uint32_t> image;
    uint64_t minus1 = F.top_sub(0, 1);
    for (uint64_t x : F.mu_elements()) {
        if (x == 1 || x == minus1) continue;
        image.push_back(F.mu_a_of(x));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image != out.elems)
        raise(Errc::internal_mismatch, "the two constructions of S disagree");
    return out;
}

inline TSet build_T(const FieldCtx& F) {
    TSet out;
    out.even_char = F.char2();
    for (uint32_t b = 0; b < F.q(); ++b) {
        if (F.char2()) {
            if (F.mid_trace(b) == 1) out.elems.push_back(b);
        } else {
            if (F.mid_eta(b) == -1 && F.mid_eta(F.mid_add(b, 4 % F.p())) == 1)
                out.elems.push_back(b);
        }
    }
    return out;
}

/// {2, -2} union S — the actual codomain of the rational map R.
/// In characteristic 2 this is {0} union S.
inline std::vector<uint32_t> s_with_poles(const FieldCtx& F, const SSet& S) {
    std::vector<uint32_t> pts = S.elems;
    pts.push_back(2 % F.p());
    pts.push_back(F.mid_neg(2 % F.p()));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace permpoly

#endif
