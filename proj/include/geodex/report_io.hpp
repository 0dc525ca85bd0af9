#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "geodex/feasibility.hpp"
#include "geodex/walks.hpp"

namespace geodex {

// Plain and machine renderings carry the same facts; golden tests hold both.

inline std::string to_plain(const FeasibilityReport& rep) {
    std::ostringstream os;
    os << "d=" << rep.d << " k=" << rep.k;
    if (rep.excess) os << " eps=" << *rep.excess;
    if (rep.pv) os << " pv=" << rep.pv->to_string();
    os << " verdict=" << (rep.verdict == Verdict::Feasible ? "feasible" : "infeasible");
    if (rep.spectrally_feasible) os << " spectral=feasible";
    if (!rep.reasons.empty()) {
        os << " checks=[";
        bool first = true;
        for (const auto& r : rep.reasons) {
            if (!first) os << ' ';
            first = false;
            os << condition_name(r.id) << (r.holds ? "" : "!") << '(';
            for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
                if (i) os << ',';
                os << r.witnesses[i];
            }
            os << ')';
        }
        os << ']';
    }
    if (rep.a_pair) os << " a1=" << rep.a_pair->first << " a2=" << rep.a_pair->second;
    if (rep.trace3) os << " tr3=" << *rep.trace3;
    if (rep.type_counts) os << " alpha=" << rep.type_counts->first << " beta=" << rep.type_counts->second;
    if (!rep.primality_method.empty()) os << " primality=" << rep.primality_method;
    if (rep.spectrum) {
        os << " spectrum=[";
        bool first = true;
        for (const auto& [f, m] : rep.spectrum->factors) {
            if (!first) os << ' ';
            first = false;
            os << '(' << f.to_string() << ")^" << m;
        }
        os << ']';
    }
    return os.str();
}

inline nlohmann::json to_json(const FeasibilityReport& rep) {
    nlohmann::json j;
    j["d"] = rep.d;
    j["k"] = rep.k;
    if (rep.excess) j["eps"] = *rep.excess;
    if (rep.pv) j["pv"] = rep.pv->to_string();
    j["verdict"] = rep.verdict == Verdict::Feasible ? "feasible" : "infeasible";
    if (rep.spectrally_feasible) j["spectral"] = "feasible";
    auto checks = nlohmann::json::array();
    for (const auto& r : rep.reasons) {
        nlohmann::json c;
        c["id"] = condition_name(r.id);
        c["holds"] = r.holds;
        auto w = nlohmann::json::array();
        for (const auto& x : r.witnesses) w.push_back(x.str());
        c["witnesses"] = w;
        checks.push_back(c);
    }
    if (!checks.empty()) j["checks"] = checks;
    if (rep.a_pair) {
        j["a1"] = rep.a_pair->first.str();
        j["a2"] = rep.a_pair->second.str();
    }
    if (rep.trace3) j["tr3"] = rep.trace3->str();
    if (rep.type_counts) {
        j["alpha"] = rep.type_counts->first.str();
        j["beta"] = rep.type_counts->second.str();
    }
    if (!rep.primality_method.empty()) j["primality"] = rep.primality_method;
    if (rep.spectrum) {
        auto factors = nlohmann::json::array();
        for (const auto& [f, m] : rep.spectrum->factors) {
            nlohmann::json entry;
            entry["coeffs"] = f.to_string();
            entry["mult"] = m;
            factors.push_back(entry);
        }
        j["spectrum"] = factors;
    }
    return j;
}

inline std::string to_plain(const ExcessProfile& p) {
    std::ostringstream os;
    os << "n=" << p.order << " d=" << p.d << " k=" << p.k << " moore=" << p.moore << " excess=" << p.excess
       << " diregular=" << (p.diregular ? "true" : "false") << " geodetic=" << (p.geodetic ? "true" : "false")
       << " excess_one=" << (p.is_excess_one ? "true" : "false");
    return os.str();
}

inline nlohmann::json to_json(const ExcessProfile& p) {
    nlohmann::json j;
    j["n"] = p.order;
    j["d"] = p.d;
    j["k"] = p.k;
    j["moore"] = p.moore.str();
    j["excess"] = p.excess.str();
    j["diregular"] = p.diregular;
    j["geodetic"] = p.geodetic;
    j["excess_one"] = p.is_excess_one;
    return j;
}

}  // namespace geodex
