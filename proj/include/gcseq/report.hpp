#pragma once

/// JSON views of the analysis records. Key order is fixed by insertion
/// (ordered_json) so identical inputs serialize byte-identically. Big
/// integers are decimal strings; residue sets are sorted arrays.

#include <string>

#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wmaybe-uninitialized"
#include <json.hpp>
#pragma GCC diagnostic pop

#include "gcseq/adic2.hpp"
#include "gcseq/cyclotomy.hpp"
#include "gcseq/ffield.hpp"
#include "gcseq/lincomp.hpp"
#include "gcseq/seqgen.hpp"

namespace gcseq {

using Json = nlohmann::ordered_json;

inline Json to_json(const CyclotomicTables& t) {
    Json j;
    j["d0p"] = t.d0p;
    j["d1p"] = t.d1p;
    j["d02p"] = t.d02p;
    j["d12p"] = t.d12p;
    j["two_d0p"] = t.two_d0p;
    j["two_d1p"] = t.two_d1p;
    j["c0"] = t.c0;
    j["c1"] = t.c1;
    return j;
}

inline Json to_json(const AutocorrSpectrum& s) {
    Json j = Json::object();
    for (auto [value, count] : s) j[std::to_string(value)] = count;
    return j;
}

inline Json to_json(const FieldPolynomial& f) { return Json(f.coeffs()); }

inline Json to_json(const ExtElement& e) { return Json(e.coeffs); }

inline Json to_json(const LinComplexityReport& r) {
    Json j;
    j["p"] = r.p;
    j["g"] = r.g;
    j["r"] = r.r;
    j["m"] = r.m;
    j["lc"] = r.lc();
    j["minimal_poly"] = to_json(r.minimal_poly);
    j["predicted"] = r.predicted;
    j["matches_theorem"] = r.matches_theorem;
    j["methods"] = {{"bm", r.lc_bm}, {"gcd", r.lc_gcd}, {"roots", r.lc_roots ? Json(*r.lc_roots) : Json("SKIPPED")}};
    j["methods_agree"] = r.methods_agree;
    return j;
}

inline Json to_json(const AdicReport& r) {
    Json j;
    j["p"] = r.p;
    j["g"] = r.g;
    j["N"] = r.N;
    j["s2"] = r.s2.to_string();
    j["gcd_minus"] = r.gcd_minus.to_string();
    j["gcd_plus"] = r.gcd_plus.to_string();
    j["gcd_total"] = r.gcd_total.to_string();
    j["phi2_floor"] = r.phi2_floor;
    j["predicted"] = r.predicted_phi2_floor;
    j["matches_theorem2"] = r.matches_theorem2;
    return j;
}

inline Json to_json(const ClassLemmaReport& r) {
    Json j;
    j["two_in_d0p"] = r.two_in_d0p;
    j["two_location_ok"] = r.two_location_ok;
    j["two_inverse_ok"] = r.two_inverse_ok;
    j["coset_products_ok"] = r.coset_products_ok;
    j["reduction_ok"] = r.reduction_ok;
    j["partition_ok"] = r.partition_ok;
    return j;
}

inline Json to_json(const Lemma9Check& c) {
    Json j;
    j["s2_mod"] = c.s2_mod.to_string();
    j["s2_rhs"] = c.s2_rhs.to_string();
    j["gp"] = c.gp.to_string();
    j["gp_sq"] = c.gp_sq.to_string();
    j["gp_sq_rhs"] = c.gp_sq_rhs.to_string();
    j["s2_ok"] = c.s2_ok;
    j["gp_sq_ok"] = c.gp_sq_ok;
    return j;
}

} // namespace gcseq
