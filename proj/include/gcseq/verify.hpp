#pragma once

/// Replays the published worked examples and the autocorrelation table,
/// comparing each printed value against a fresh computation. A mismatch is
/// reported as a DISCREPANCY carrying both values; it is a finding, not an
/// error. Only disagreement between our own independent routes throws.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gcseq/adic2.hpp"
#include "gcseq/cyclotomy.hpp"
#include "gcseq/errors.hpp"
#include "gcseq/lincomp.hpp"
#include "gcseq/report.hpp"
#include "gcseq/seqgen.hpp"

namespace gcseq {

enum class CheckStatus { Pass, Discrepancy };

inline const char* to_string(CheckStatus s) { return s == CheckStatus::Pass ? "PASS" : "DISCREPANCY"; }

struct VerifyCheck {
    std::string name;
    std::string paper;
    std::string computed;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct ExampleOutcome {
    std::string id;
    Json params;
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status != CheckStatus::Pass) return false;
        return true;
    }
    const VerifyCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

struct VerifyOutcome {
    std::vector<ExampleOutcome> items;
    int passed = 0;
    int discrepancies = 0;
    std::vector<std::string> flagged; // "id: check"

    const ExampleOutcome* find(const std::string& id) const {
        for (const auto& e : items)
            if (e.id == id) return &e;
        return nullptr;
    }
};

namespace detail {

inline std::string set_string(const ResidueSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

inline std::string factor_string(u64 n) {
    std::string out;
    for (auto [q, e] : factorize(n))
        for (unsigned i = 0; i < e; ++i) out += (out.empty() ? "" : "*") + std::to_string(q);
    return out;
}

inline VerifyCheck make_check(std::string name, std::string paper, std::string computed, std::string detail = {}) {
    VerifyCheck c{std::move(name), std::move(paper), std::move(computed), CheckStatus::Pass, std::move(detail)};
    c.status = c.paper == c.computed ? CheckStatus::Pass : CheckStatus::Discrepancy;
    return c;
}

struct PrintedSets {
    ResidueSet d02p, d12p, two_d0p, two_d1p;
};

struct PrintedLinearExample {
    const char* id;
    i64 p, g;
    u64 r;
    PrintedSets sets;
    const char* sequence;
    std::size_t lc;
    MinimalPolyShape shape;
};

// Values exactly as printed, typos included.
inline const std::vector<PrintedLinearExample>& printed_linear_examples() {
    static const std::vector<PrintedLinearExample> ex{
        {"Example 1", 5, 3, 7, {{1, 9}, {3, 7}, {2, 8}, {4, 6}}, "1001101100", 6, MinimalPolyShape::EvenRootsRemoved},
        {"Example 2", 13, 7, 5,
         {{1, 3, 9, 17, 23, 25}, {5, 7, 11, 15, 19, 21}, {2, 6, 8, 18, 20, 24}, {4, 10, 12, 14, 16, 22}},
         "10001101001110111001011000", 14, MinimalPolyShape::EvenRootsRemoved},
        {"Example 3", 17, 3, 5,
         {{1, 9, 13, 15, 19, 21, 25, 33},
          {3, 5, 7, 11, 23, 27, 29, 31},
          {2, 4, 8, 16, 18, 26, 30, 32},
          {6, 10, 12, 14, 20, 22, 24, 28}},
         "1001011100111010000010111001110100", 34, MinimalPolyShape::FullPeriod},
        {"Example 4", 19, 3, 13,
         {{1, 5, 7, 9, 11, 17, 23, 25, 35},
          {3, 5, 7, 11, 23, 27, 29, 31},
          {2, 8, 10, 12, 14, 18, 22, 32, 34},
          {4, 6, 16, 20, 24, 26, 28, 30, 36}},
         "10011010000001011000110010111111010011", 20, MinimalPolyShape::EvenRootsRemoved},
        {"Example 5", 23, 7, 13,
         {{1, 3, 9, 13, 25, 27, 29, 31, 35, 39, 41},
          {5, 7, 11, 15, 17, 19, 21, 33, 37, 43, 45},
          {2, 4, 6, 8, 12, 16, 18, 24, 26, 32, 36},
          {10, 14, 20, 22, 28, 30, 34, 38, 40, 42, 44}},
         "1000010100110011010111100000101001100110101111", 46, MinimalPolyShape::FullPeriod},
        {"Example 6", 113, 7, 13,
         {{1,   7,   9,   11,  13,  15,  25,  31,  41,  49,  51,  53,  57,  61,  63,  69,  77,  81,  83,
           85,  87,  91,  95,  97,  99,  105, 109, 111, 115, 117, 121, 127, 129, 131, 135, 139, 141, 143,
           145, 149, 157, 163, 165, 169, 173, 175, 177, 185, 195, 201, 211, 213, 215, 217, 219, 225},
          {3,   5,   17,  19,  21,  23,  27,  29,  33,  35,  37,  39,  43,  45,  47,  55,  59,  65,  67,
           71,  73,  75,  79,  89,  93,  101, 103, 107, 119, 123, 125, 133, 137, 147, 151, 153, 155, 159,
           161, 167, 171, 179, 181, 183, 187, 189, 191, 193, 197, 199, 203, 205, 207, 209, 221, 223},
          {2,   4,   8,   14,  16,  18,  22,  26,  28,  30,  32,  36,  44,  50,  52,  56,  60,  62,  64,
           72,  82,  88,  98,  100, 102, 104, 106, 112, 114, 120, 122, 124, 126, 128, 138, 144, 154, 162,
           164, 166, 170, 174, 176, 182, 190, 194, 196, 198, 200, 204, 208, 210, 212, 218, 222, 224},
          {6,   10,  12,  20,  24,  34,  38,  40,  42,  46,  48,  54,  58,  66,  68,  70,  74,  76,  78,
           80,  84,  86,  90,  92,  94,  96,  108, 110, 116, 118, 130, 132, 134, 136, 140, 142, 146, 148,
           150, 152, 156, 158, 160, 168, 172, 178, 180, 184, 186, 188, 192, 202, 206, 214, 216, 220}},
         "1001011000101000010111011001010001110111101101111000001100110000011110110"
         "11110111000101001101110100001010001101000001011000101000010111011001010001110"
         "1111011011110000011001100000111101101111011100010100110111010000101000110100",
         226, MinimalPolyShape::FullPeriod},
    };
    return ex;
}

/// Uses the printed g when it is a valid common primitive root; otherwise
/// records why and falls back to the default supplier. The classes (and so
/// the sequence) depend only on quadratic residuosity, not on which
/// primitive root generated them.
inline PrimeParams params_for(ExampleOutcome& out, i64 p, i64 g) {
    out.params = {{"p", p}, {"g_paper", g}};
    std::string reason;
    try {
        auto params = PrimeParams::make(p, g);
        out.params["g_used"] = params.g;
        out.checks.push_back(make_check("g is a common primitive root", "yes", "yes"));
        return params;
    } catch (const ArgumentError&) {
        reason = "no: ord_" + std::to_string(p) + "(" + std::to_string(g) +
                 ") = " + std::to_string(mult_order(g, p)) + ", expected " + std::to_string(p - 1);
    }
    auto params = PrimeParams::make(p);
    out.params["g_used"] = params.g;
    out.checks.push_back(make_check("g is a common primitive root", "yes", reason,
                                    "replayed with g = " + std::to_string(params.g)));
    return params;
}

inline void add_set_checks(ExampleOutcome& out, const PrintedSets& printed, const CyclotomicTables& t) {
    out.checks.push_back(make_check("D0^(2p)", set_string(printed.d02p), set_string(t.d02p)));
    out.checks.push_back(make_check("D1^(2p)", set_string(printed.d12p), set_string(t.d12p)));
    out.checks.push_back(make_check("2D0^(p)", set_string(printed.two_d0p), set_string(t.two_d0p)));
    out.checks.push_back(make_check("2D1^(p)", set_string(printed.two_d1p), set_string(t.two_d1p)));
}

inline ExampleOutcome replay_linear(const PrintedLinearExample& ex) {
    ExampleOutcome out;
    out.id = ex.id;
    const auto params = params_for(out, ex.p, ex.g);
    out.params["r"] = ex.r;
    const auto tables = build_tables(params);
    const auto seq = generate(tables);
    add_set_checks(out, ex.sets, tables);
    out.checks.push_back(make_check("sequence", ex.sequence, seq.to_string()));
    const auto lin = analyze_linear(seq, ex.r);
    if (!lin.methods_agree) throw ConsistencyError(std::string(ex.id) + ": linear complexity routes disagree");
    const std::string methods = "bm=" + std::to_string(lin.lc_bm) + " gcd=" + std::to_string(lin.lc_gcd) +
                                " roots=" + (lin.lc_roots ? std::to_string(*lin.lc_roots) : std::string("SKIPPED"));
    out.checks.push_back(make_check("LC", std::to_string(ex.lc), std::to_string(lin.lc()), methods));
    out.checks.push_back(make_check("minimal polynomial", to_string(ex.shape), to_string(minimal_poly_shape(lin))));
    out.checks.push_back(make_check("predicted LC", std::to_string(ex.lc), std::to_string(lin.predicted)));
    return out;
}

struct PrintedAdicExample {
    const char* id;
    i64 p, g;
    PrintedSets sets;
    const char* sequence;
    const char* s2;
    const char* s2_factors;
    const char* mersenne_factors; // 2^N - 1 as printed
    const char* gcd;
    std::size_t phi2_floor; // floor of the printed log2 value
};

inline const std::vector<PrintedAdicExample>& printed_adic_examples() {
    static const std::vector<PrintedAdicExample> ex{
        {"Example 7", 5, 3, {{1, 9}, {3, 7}, {2, 8}, {4, 6}}, "1001101100", "217", "7*31", "3*11*11", "1", 9},
        {"Example 8", 7, 3, {{1, 9, 11}, {3, 5, 13}, {2, 4, 8}, {6, 10, 12}}, "10010110001011", "13417", nullptr,
         "3*43*127", "1", 13},
    };
    return ex;
}

inline ExampleOutcome replay_adic(const PrintedAdicExample& ex) {
    ExampleOutcome out;
    out.id = ex.id;
    const auto params = params_for(out, ex.p, ex.g);
    const auto tables = build_tables(params);
    const auto seq = generate(tables);
    add_set_checks(out, ex.sets, tables);
    out.checks.push_back(make_check("sequence", ex.sequence, seq.to_string()));
    const auto rep = adic_complexity(seq);
    out.checks.push_back(make_check("S(2)", ex.s2, rep.s2.to_string()));
    if (ex.s2_factors) out.checks.push_back(make_check("S(2) factorization", ex.s2_factors, factor_string(rep.s2.to_u64())));
    const BigNat M = BigNat::mersenne(rep.N);
    out.checks.push_back(make_check("2^N - 1 factorization", ex.mersenne_factors, factor_string(M.to_u64())));
    out.checks.push_back(make_check("gcd(S(2), 2^N - 1)", ex.gcd, rep.gcd_total.to_string(),
                                    "gcd with 2^p - 1 = " + rep.gcd_minus.to_string() +
                                        ", gcd with 2^p + 1 = " + rep.gcd_plus.to_string()));
    out.checks.push_back(make_check("phi_2 floor", std::to_string(ex.phi2_floor), std::to_string(rep.phi2_floor)));
    return out;
}

inline std::string spectrum_string(const AutocorrSpectrum& s) {
    std::string out = "{";
    bool first = true;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        out += (first ? "" : ", ") + std::to_string(it->first) + ":" + std::to_string(it->second);
        first = false;
    }
    return out + "}";
}

inline ExampleOutcome replay_table_row(int residue, const char* formula, i64 p_max) {
    ExampleOutcome out;
    out.id = "autocorrelation table (p = " + std::to_string(residue) + " mod 8)";
    out.params = {{"p_mod_8", residue}, {"p_max", p_max}};
    std::vector<std::string> mismatches;
    int checked = 0;
    for (i64 p : odd_primes_in(3, p_max)) {
        if (p % 8 != residue) continue;
        ++checked;
        const auto spectrum = autocorr_spectrum(generate(PrimeParams::make(p)));
        if (spectrum != *predicted_spectrum(p))
            mismatches.push_back("p=" + std::to_string(p) + " " + spectrum_string(spectrum));
    }
    std::string computed = formula;
    if (!mismatches.empty()) {
        computed = "mismatch:";
        for (const auto& m : mismatches) computed += " " + m;
    }
    out.checks.push_back(make_check("spectrum", formula, computed,
                                    std::to_string(checked) + " primes p <= " + std::to_string(p_max) + " checked"));
    return out;
}

} // namespace detail

inline VerifyOutcome verify_paper(i64 table_p_max = 200) {
    VerifyOutcome v;
    for (const auto& ex : detail::printed_linear_examples()) v.items.push_back(detail::replay_linear(ex));
    for (const auto& ex : detail::printed_adic_examples()) v.items.push_back(detail::replay_adic(ex));
    v.items.push_back(detail::replay_table_row(1, "{2p:1, 2p-4:1, -2:2p-2}", table_p_max));
    v.items.push_back(detail::replay_table_row(3, "{2p:1, -2p:1, 2:p-1, -2:p-1}", table_p_max));
    for (const auto& item : v.items) {
        for (const auto& c : item.checks) {
            if (c.status == CheckStatus::Pass) {
                ++v.passed;
            } else {
                ++v.discrepancies;
                v.flagged.push_back(item.id + ": " + c.name);
            }
        }
    }
    return v;
}

inline Json to_json(const VerifyOutcome& v) {
    Json items = Json::array();
    for (const auto& e : v.items) {
        Json checks = Json::array();
        for (const auto& c : e.checks) {
            Json cj{{"name", c.name}, {"paper", c.paper}, {"computed", c.computed}, {"status", to_string(c.status)}};
            if (!c.detail.empty()) cj["detail"] = c.detail;
            checks.push_back(std::move(cj));
        }
        items.push_back({{"id", e.id}, {"params", e.params}, {"checks", std::move(checks)}});
    }
    Json j;
    j["items"] = std::move(items);
    j["summary"] = {{"checks", v.passed + v.discrepancies}, {"pass", v.passed}, {"discrepancy", v.discrepancies}};
    j["discrepancies"] = v.flagged;
    return j;
}

inline std::string to_text(const VerifyOutcome& v) {
    std::ostringstream os;
    for (const auto& e : v.items) {
        os << e.id << "  " << e.params.dump() << '\n';
        for (const auto& c : e.checks) {
            os << "  [" << to_string(c.status) << "] " << c.name << ": ";
            if (c.status == CheckStatus::Pass)
                os << c.computed;
            else
                os << "paper " << c.paper << " | computed " << c.computed;
            if (!c.detail.empty()) os << "  (" << c.detail << ")";
            os << '\n';
        }
    }
    os << "summary: " << v.passed << " pass, " << v.discrepancies << " discrepancy\n";
    return os.str();
}

} // namespace gcseq
