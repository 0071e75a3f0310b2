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

#ifndef PERMPOLY_COMMON_HPP
#define PERMPOLY_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permpoly {

inline constexpr const char* version = "0.1.0";

/// Error codes for every failure mode the library reports. Each code maps
/// 1:1 onto a documented precondition or detected inconsistency.
enum class Errc {
    not_prime,
    not_irreducible,
    bound_exceeded,
    division_by_zero,
    level_mismatch,
    even_characteristic,   // operation requires odd characteristic
    odd_characteristic,    // operation requires characteristic 2
    zero_coefficient,
    inexact_division,
    not_on_mu,
    half_exponent_in_odd_characteristic,
    half_exponent,
    internal_mismatch,
    zero_denominator_polynomial,
    zero_polynomial,
    degenerate_denominator,
    non_polynomial_square_root,
    non_terminating,
    invalid_params,
    verdict_mismatch,
    parse_error,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::not_irreducible: return "NotIrreducible";
        case Errc::bound_exceeded: return "BoundExceeded";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::level_mismatch: return "LevelMismatch";
        case Errc::even_characteristic: return "EvenCharacteristic";
        case Errc::odd_characteristic: return "OddCharacteristic";
        case Errc::zero_coefficient: return "ZeroCoefficient";
        case Errc::inexact_division: return "InexactDivision";
        case Errc::not_on_mu: return "NotOnMu";
        case Errc::half_exponent_in_odd_characteristic: return "HalfExponentInOddCharacteristic";
        case Errc::half_exponent: return "HalfExponent";
        case Errc::internal_mismatch: return "InternalMismatch";
        case Errc::zero_denominator_polynomial: return "ZeroDenominatorPolynomial";
        case Errc::zero_polynomial: return "ZeroPolynomial";
        case Errc::degenerate_denominator: return "DegenerateDenominator";
        case Errc::non_polynomial_square_root: return "NonPolynomialSquareRoot";
        case Errc::non_terminating: return "NonTerminating";
        case Errc::invalid_params: return "InvalidParams";
        case Errc::verdict_mismatch: return "VerdictMismatch";
        case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace permpoly

#endif
