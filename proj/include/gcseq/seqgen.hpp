#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcseq/bignat.hpp"
#include "gcseq/cyclotomy.hpp"
#include "gcseq/errors.hpp"

namespace gcseq {

/// One period of a binary sequence. `params` is set for members of the
/// cyclotomic family and empty for raw bit strings read from outside.
struct BinarySequence {
    std::vector<std::uint8_t> bits;
    std::optional<PrimeParams> params;

    std::size_t size() const noexcept { return bits.size(); }
    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (auto b : bits) w += b;
        return w;
    }

    /// '0'/'1' characters, s_0 leftmost.
    std::string to_string() const {
        std::string s;
        s.reserve(bits.size());
        for (auto b : bits) s.push_back(b ? '1' : '0');
        return s;
    }

    static BinarySequence from_string(std::string_view text) {
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
        if (text.empty()) throw ArgumentError("bit string is empty");
        BinarySequence s;
        s.bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') throw ArgumentError("bit string may contain only '0' and '1'");
            s.bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return s;
    }
};

inline BinarySequence generate(const CyclotomicTables& t) {
    BinarySequence s;
    s.params = t.params;
    s.bits.resize(static_cast<std::size_t>(t.N()));
    for (i64 i = 0; i < t.N(); ++i) s.bits[static_cast<std::size_t>(i)] = t.in_c1(i) ? 1 : 0;
    return s;
}

inline BinarySequence generate(const PrimeParams& params) { return generate(build_tables(params)); }

/// S(2) = sum s_i 2^i over one period.
inline BigNat eval_S_at_2(const BinarySequence& s) {
    BigNat::Rep v = 0;
    for (std::size_t i = 0; i < s.bits.size(); ++i)
        if (s.bits[i]) boost::multiprecision::bit_set(v, static_cast<unsigned>(i));
    return BigNat::from_rep(std::move(v));
}

/// Periodic +-1 autocorrelation at shift w.
inline i64 autocorrelation(const BinarySequence& s, i64 w) {
    const auto n = static_cast<i64>(s.size());
    if (w < 0 || w >= n) throw ArgumentError("autocorrelation: shift out of range [0, N)");
    i64 c = 0;
    for (i64 t = 0; t < n; ++t) {
        const auto a = s.bits[static_cast<std::size_t>((t + w) % n)];
        const auto b = s.bits[static_cast<std::size_t>(t)];
        c += (a == b) ? 1 : -1;
    }
    return c;
}

/// Correlation value -> number of shifts in [0, N) attaining it.
using AutocorrSpectrum = std::map<i64, i64>;

inline AutocorrSpectrum autocorr_spectrum(const BinarySequence& s) {
    AutocorrSpectrum out;
    for (i64 w = 0; w < static_cast<i64>(s.size()); ++w) ++out[autocorrelation(s, w)];
    return out;
}

/// Closed-form spectrum for p = 1 or 3 (mod 8); no prediction otherwise.
inline std::optional<AutocorrSpectrum> predicted_spectrum(i64 p) {
    if (!is_odd_prime(p)) throw ArgumentError("predicted_spectrum: p must be an odd prime");
    switch (p % 8) {
    case 1: return AutocorrSpectrum{{2 * p, 1}, {2 * p - 4, 1}, {-2, 2 * p - 2}};
    case 3: return AutocorrSpectrum{{2 * p, 1}, {-2 * p, 1}, {2, p - 1}, {-2, p - 1}};
    default: return std::nullopt;
    }
}

} // namespace gcseq
