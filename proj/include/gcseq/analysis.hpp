#pragma once

/// Aggregated analyses behind the command-line front end: single-sequence
/// reports and prime-range scans.

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gcseq/adic2.hpp"
#include "gcseq/cyclotomy.hpp"
#include "gcseq/errors.hpp"
#include "gcseq/ffield.hpp"
#include "gcseq/lincomp.hpp"
#include "gcseq/report.hpp"
#include "gcseq/seqgen.hpp"

namespace gcseq {

struct FieldLemmaResult {
    u64 r = 0;
    u64 m = 0;
    bool skipped = true; // m over cap
    bool sum_ok = false;
    bool quadratic_ok = false;
    bool rational = false;
    int legendre_r_p = 0;
    bool rationality_matches = false;
    bool lemma8_all_agree = false;
    std::vector<i64> unexpected_zeros;

    bool all_ok() const noexcept {
        return skipped || (sum_ok && quadratic_ok && rationality_matches && lemma8_all_agree);
    }
};

/// Gauss-period identities, rationality criterion and the closed-form values
/// of S(beta^k) for every k, over F_{r^m}.
inline FieldLemmaResult check_field_lemmas(const CyclotomicTables& t, const BinarySequence& s, u64 r,
                                           u64 m_cap = default_m_cap) {
    FieldLemmaResult out;
    out.r = r;
    out.m = mult_order(static_cast<i64>(r), t.p());
    auto setup = setup_field(t.p(), r, m_cap);
    if (!setup) return out;
    out.skipped = false;
    const auto pair = gauss_periods(setup->field, setup->beta, t);
    const auto ids = check_gauss_identities(setup->field, pair, t.p());
    out.sum_ok = ids.sum_is_minus_one;
    out.quadratic_ok = ids.quadratic_ok;
    out.rational = rationality_check(setup->field, pair);
    out.legendre_r_p = legendre(static_cast<i64>(r), t.p());
    out.rationality_matches = out.rational == (out.legendre_r_p == 1);
    auto table = lemma8_case_table(setup->field, s, setup->beta, t, pair, /*every_k=*/true);
    out.lemma8_all_agree = table.all_agree;
    out.unexpected_zeros = std::move(table.unexpected_zeros);
    return out;
}

inline Json to_json(const FieldLemmaResult& f) {
    Json j;
    j["r"] = f.r;
    j["m"] = f.m;
    j["skipped"] = f.skipped;
    if (!f.skipped) {
        j["gauss_sum_ok"] = f.sum_ok;
        j["gauss_quadratic_ok"] = f.quadratic_ok;
        j["rational"] = f.rational;
        j["legendre_r_p"] = f.legendre_r_p;
        j["rationality_matches"] = f.rationality_matches;
        j["lemma8_all_agree"] = f.lemma8_all_agree;
        j["unexpected_zeros"] = f.unexpected_zeros;
    }
    return j;
}

inline Json autocorr_json(const BinarySequence& s) {
    Json j;
    const auto spec = autocorr_spectrum(s);
    j["spectrum"] = to_json(spec);
    std::optional<AutocorrSpectrum> pred;
    if (s.params) pred = predicted_spectrum(s.params->p);
    j["predicted"] = pred ? to_json(*pred) : Json("NOT_COVERED");
    j["matches_table"] = pred ? Json(*pred == spec) : Json(nullptr);
    return j;
}

struct AnalyzeOptions {
    std::optional<u64> r;
    u64 m_cap = default_m_cap;
};

/// Report for one member of the family. linear is present only when r is given.
inline Json analyze(const PrimeParams& params, const AnalyzeOptions& opt) {
    if (opt.r) {
        require_field_prime(*opt.r);
        if (*opt.r == static_cast<u64>(params.p)) throw ArgumentError("r must differ from p");
    }
    const auto tables = build_tables(params);
    const auto seq = generate(tables);
    Json j;
    j["sequence"] = {{"p", params.p},
                     {"g", params.g},
                     {"N", params.N},
                     {"p_mod_8", params.p_mod_8},
                     {"bits", seq.to_string()},
                     {"weight", seq.weight()},
                     {"tables", to_json(tables)}};
    j["autocorr"] = autocorr_json(seq);
    if (opt.r) j["linear"] = to_json(analyze_linear(seq, *opt.r, opt.m_cap));
    j["adic"] = to_json(adic_complexity(seq));
    return j;
}

/// Report for an arbitrary bit string. Family-specific predictions are
/// dropped; linear uses Berlekamp-Massey and the gcd route only.
inline Json analyze_raw(const BinarySequence& seq, const AnalyzeOptions& opt) {
    Json j;
    j["sequence"] = {{"N", seq.size()}, {"bits", seq.to_string()}, {"weight", seq.weight()}};
    j["autocorr"] = autocorr_json(seq);
    if (opt.r) {
        const auto bm = berlekamp_massey(seq, *opt.r);
        const auto via_gcd = lc_via_gcd(seq, *opt.r);
        j["linear"] = {{"r", *opt.r},
                       {"lc", via_gcd.L},
                       {"minimal_poly", to_json(via_gcd.minimal_poly)},
                       {"methods", {{"bm", bm.L}, {"gcd", via_gcd.L}, {"roots", "SKIPPED"}}},
                       {"methods_agree", bm.L == via_gcd.L}};
    }
    if (seq.size() % 2 == 0) j["adic"] = to_json(adic_complexity(seq));
    return j;
}

/// "section.key: value" lines, nested objects flattened with dots.
inline void render_text(const Json& j, std::ostream& os, const std::string& prefix = "") {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_text(it.value(), os, prefix.empty() ? it.key() : prefix + "." + it.key());
        return;
    }
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

// ---------------------------------------------------------------- scans

enum class ScanCheck { Lc, Adic, Autocorr, Lemmas };

inline std::optional<ScanCheck> parse_scan_check(const std::string& s) {
    if (s == "lc") return ScanCheck::Lc;
    if (s == "adic") return ScanCheck::Adic;
    if (s == "autocorr") return ScanCheck::Autocorr;
    if (s == "lemmas") return ScanCheck::Lemmas;
    return std::nullopt;
}

inline const char* to_string(ScanCheck c) {
    switch (c) {
    case ScanCheck::Lc: return "lc";
    case ScanCheck::Adic: return "adic";
    case ScanCheck::Autocorr: return "autocorr";
    case ScanCheck::Lemmas: return "lemmas";
    }
    return "?";
}

inline constexpr i64 scan_p_limit = 2000;

struct ScanConfig {
    i64 p_min = 3;
    i64 p_max = 500;
    std::vector<u64> r_list;
    std::set<ScanCheck> checks;
    u64 m_cap = default_m_cap;
    unsigned workers = 0; // 0 = hardware concurrency, capped at 8

    void validate() const {
        if (p_min < 3) throw ArgumentError("p-min must be >= 3");
        if (p_max > scan_p_limit) throw ArgumentError("p-max must be <= " + std::to_string(scan_p_limit));
        for (u64 r : r_list) require_field_prime(r);
        if (checks.empty()) throw ArgumentError("no checks selected");
        if (checks.count(ScanCheck::Lc) && r_list.empty()) throw ArgumentError("the lc check needs at least one r");
    }
};

struct ScanRows {
    std::vector<Json> lc, adic, autocorr, lemmas;
};

struct ScanResult {
    Json report;
    ScanRows rows;
    bool consistent = true; // false when some linear methods disagreed
};

namespace detail {

/// Runs fn(i) for i in [0, n) on a bounded pool; the first exception (by
/// index) is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace detail

inline ScanResult run_scan(const ScanConfig& cfg) {
    cfg.validate();
    const auto primes = odd_primes_in(cfg.p_min, cfg.p_max);
    struct PerPrime {
        std::vector<Json> lc;
        Json adic, autocorr, lemmas;
        bool consistent = true;
    };
    std::vector<PerPrime> results(primes.size());
    const bool want_lc = cfg.checks.count(ScanCheck::Lc) != 0;
    const bool want_adic = cfg.checks.count(ScanCheck::Adic) != 0;
    const bool want_auto = cfg.checks.count(ScanCheck::Autocorr) != 0;
    const bool want_lemmas = cfg.checks.count(ScanCheck::Lemmas) != 0;

    detail::parallel_for(primes.size(), cfg.workers, [&](std::size_t idx) {
        const i64 p = primes[idx];
        const auto params = PrimeParams::make(p);
        const auto tables = build_tables(params);
        const auto seq = generate(tables);
        auto& out = results[idx];
        auto base = [&] { return Json{{"p", p}, {"g", params.g}, {"p_mod_8", params.p_mod_8}}; };
        if (want_lc) {
            for (u64 r : cfg.r_list) {
                if (r == static_cast<u64>(p)) continue;
                const auto rep = analyze_linear(seq, r, cfg.m_cap);
                Json row = base();
                const Json full = to_json(rep);
                for (auto& [k, v] : full.items())
                    if (k != "p" && k != "g" && k != "minimal_poly") row[k] = v;
                out.consistent = out.consistent && rep.methods_agree;
                out.lc.push_back(std::move(row));
            }
        }
        if (want_adic) {
            Json row = base();
            const Json full = to_json(adic_complexity(seq));
            for (auto& [k, v] : full.items())
                if (k != "p" && k != "g") row[k] = v;
            out.adic = std::move(row);
        }
        if (want_auto) {
            Json row = base();
            const Json full = autocorr_json(seq);
            for (auto& [k, v] : full.items()) row[k] = v;
            out.autocorr = std::move(row);
        }
        if (want_lemmas) {
            Json row = base();
            const auto cls = check_class_lemmas(tables);
            const auto l9 = check_lemma9(p, seq);
            row["class_lemmas"] = to_json(cls);
            row["lemma9"] = {{"s2_ok", l9.s2_ok}, {"gp_sq_ok", l9.gp_sq_ok}};
            bool all_ok = cls.all_ok() && l9.all_ok();
            Json fields = Json::array();
            for (u64 r : cfg.r_list) {
                if (r == static_cast<u64>(p)) continue;
                const auto f = check_field_lemmas(tables, seq, r, cfg.m_cap);
                all_ok = all_ok && f.all_ok();
                fields.push_back(to_json(f));
            }
            row["field"] = std::move(fields);
            row["all_ok"] = all_ok;
            out.lemmas = std::move(row);
        }
    });

    ScanResult res;
    for (auto& pp : results) {
        for (auto& row : pp.lc) res.rows.lc.push_back(std::move(row));
        if (want_adic) res.rows.adic.push_back(std::move(pp.adic));
        if (want_auto) res.rows.autocorr.push_back(std::move(pp.autocorr));
        if (want_lemmas) res.rows.lemmas.push_back(std::move(pp.lemmas));
        res.consistent = res.consistent && pp.consistent;
    }

    // Concordance counts by residue class of p mod 8.
    Json summary;
    auto tally = [&](const char* name, const std::vector<Json>& rows, const char* flag) {
        std::map<int, std::pair<int, int>> by; // residue -> (rows, matches)
        int not_covered = 0;
        for (const auto& row : rows) {
            if (row[flag].is_null()) {
                ++not_covered;
                continue;
            }
            auto& [n, ok] = by[row["p_mod_8"].get<int>()];
            ++n;
            if (row[flag].get<bool>()) ++ok;
        }
        Json s = Json::object();
        for (int residue : {1, 3, 5, 7}) {
            auto it = by.find(residue);
            if (it == by.end()) continue;
            s[std::to_string(residue)] = {{"rows", it->second.first}, {"matches", it->second.second}};
        }
        if (not_covered) s["not_covered"] = not_covered;
        summary[name] = std::move(s);
    };
    if (want_lc) tally("lc", res.rows.lc, "matches_theorem");
    if (want_adic) tally("adic", res.rows.adic, "matches_theorem2");
    if (want_auto) tally("autocorr", res.rows.autocorr, "matches_table");
    if (want_lemmas) tally("lemmas", res.rows.lemmas, "all_ok");

    Json cfg_json;
    cfg_json["p_min"] = cfg.p_min;
    cfg_json["p_max"] = cfg.p_max;
    cfg_json["r"] = cfg.r_list;
    Json checks = Json::array();
    for (auto c : cfg.checks) checks.push_back(to_string(c));
    cfg_json["checks"] = checks;
    cfg_json["m_cap"] = cfg.m_cap;

    res.report["config"] = std::move(cfg_json);
    Json rows;
    if (want_lc) rows["lc"] = res.rows.lc;
    if (want_adic) rows["adic"] = res.rows.adic;
    if (want_auto) rows["autocorr"] = res.rows.autocorr;
    if (want_lemmas) rows["lemmas"] = res.rows.lemmas;
    res.report["rows"] = std::move(rows);
    res.report["summary"] = std::move(summary);
    res.report["methods_consistent"] = res.consistent;
    return res;
}

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

/// One line per analysis; the full row rides along as a quoted JSON string.
inline std::string scan_to_csv(const ScanResult& res) {
    std::ostringstream os;
    os << "check,p,g,p_mod_8,r,value,predicted,matches,detail\n";
    auto cell = [](const Json& v) { return v.is_null() ? std::string() : (v.is_string() ? v.get<std::string>() : v.dump()); };
    auto emit = [&](const char* check, const Json& row, const Json& r, const Json& value, const Json& pred,
                    const Json& matches) {
        os << check << ',' << row["p"] << ',' << row["g"] << ',' << row["p_mod_8"] << ',' << cell(r) << ','
           << csv_quote(cell(value)) << ',' << csv_quote(cell(pred)) << ',' << cell(matches) << ','
           << csv_quote(row.dump()) << '\n';
    };
    for (const auto& row : res.rows.lc) emit("lc", row, row["r"], row["lc"], row["predicted"], row["matches_theorem"]);
    for (const auto& row : res.rows.adic)
        emit("adic", row, nullptr, row["phi2_floor"], row["predicted"], row["matches_theorem2"]);
    for (const auto& row : res.rows.autocorr)
        emit("autocorr", row, nullptr, row["spectrum"].dump(), row["predicted"].is_string() ? row["predicted"] : Json(row["predicted"].dump()),
             row["matches_table"]);
    for (const auto& row : res.rows.lemmas) emit("lemmas", row, nullptr, row["all_ok"], true, row["all_ok"]);
    return os.str();
}

inline std::string scan_summary_text(const ScanResult& res) {
    std::ostringstream os;
    const auto& summary = res.report["summary"];
    for (auto it = summary.begin(); it != summary.end(); ++it) {
        for (auto cls = it.value().begin(); cls != it.value().end(); ++cls) {
            if (cls.key() == "not_covered") {
                os << it.key() << "\tnot covered by a prediction: " << cls.value() << '\n';
                continue;
            }
            os << it.key() << "\tp = " << cls.key() << " (mod 8): " << cls.value()["matches"] << '/'
               << cls.value()["rows"] << " concordant\n";
        }
    }
    os << "methods consistent: " << (res.consistent ? "yes" : "NO") << '\n';
    return os.str();
}

} // namespace gcseq
