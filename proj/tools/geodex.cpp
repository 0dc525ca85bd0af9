// geodex: desk tool for the degree/geodecity problem at excess one.
// Subcommands wrap the library operations; "--format machine" emits one JSON
// object per line with the same facts as the plain text.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geodex/geodex.hpp"
#include "geodex/report_io.hpp"

namespace {

struct Range {
    long lo = 0;
    long hi = 0;
    std::vector<long> list;  // non-empty for comma lists

    std::vector<long> values() const {
        if (!list.empty()) return list;
        std::vector<long> v;
        for (long x = lo; x <= hi; ++x) v.push_back(x);
        return v;
    }
};

// "a..b" inclusive, a single value, or a comma-separated list.
Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        r.lo = std::stol(text.substr(0, dots));
        r.hi = std::stol(text.substr(dots + 2));
        if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range " + text);
        return r;
    }
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) r.list.push_back(std::stol(tok));
        return r;
    }
    r.lo = r.hi = std::stol(text);
    return r;
}

geodex::Digraph load_digraph_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw geodex::Error("cannot open digraph file " + path);
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return geodex::Digraph::parse(text);
}

// Partition the k range across workers; hits merge back in (d,k) order.
template <typename Pred>
std::vector<std::pair<long, long>> parallel_scan(long d_lo, long d_hi, long k_lo, long k_hi, int workers,
                                                 Pred&& pred) {
    workers = std::max(1, workers);
    const long span = k_hi - k_lo + 1;
    const long chunk = std::max<long>(1, (span + workers - 1) / workers);
    std::vector<std::pair<long, long>> chunks;
    for (long lo = k_lo; lo <= k_hi; lo += chunk) chunks.emplace_back(lo, std::min(k_hi, lo + chunk - 1));

    std::vector<std::pair<long, long>> hits;
    for (long d = d_lo; d <= d_hi; ++d) {
        std::vector<std::vector<std::pair<long, long>>> per_chunk(chunks.size());
        std::vector<std::thread> pool;
        for (std::size_t c = 0; c < chunks.size(); ++c) {
            pool.emplace_back([&, c, d]() {
                for (long k = chunks[c].first; k <= chunks[c].second; ++k)
                    if (pred(d, k)) per_chunk[c].emplace_back(d, k);
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& bucket : per_chunk) hits.insert(hits.end(), bucket.begin(), bucket.end());
    }
    return hits;
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations on k-geodetic digraphs with excess one"};
    app.require_subcommand(1);
    app.fallthrough();  // --format/--workers may follow the subcommand
    std::string format = "plain";
    app.add_option("--format", format, "plain|machine")->check(CLI::IsMember({"plain", "machine"}));
    int workers = 1;
    app.add_option("--workers", workers, "worker threads for scans and search")->check(CLI::PositiveNumber);
    const bool machine_later = false;
    (void)machine_later;

    std::string d_text = "1", k_text = "1", file, pv_text, checkpoint;
    std::uint64_t budget = 0;
    bool resume = false, no_common = false, no_transposition = false, print_found = true;
    long eps = 1;
    (void)eps;

    auto* moore = app.add_subcommand("moore", "directed Moore bound M(d,k)");
    moore->add_option("-d", d_text)->required();
    moore->add_option("-k", k_text)->required();

    auto* check = app.add_subcommand("check", "excess-one verdict for a digraph file");
    check->add_option("-f,--file", file)->required();
    check->add_option("-d", d_text)->required();
    check->add_option("-k", k_text)->required();

    auto* outlier = app.add_subcommand("outlier", "outlier function of an excess-one digraph");
    outlier->add_option("-f,--file", file)->required();
    outlier->add_option("-k", k_text)->required();

    auto* scan_div = app.add_subcommand("scan-div", "(k+1) | d(M(d,k)+1) divisibility scan");
    scan_div->add_option("-d", d_text)->required();
    scan_div->add_option("-k", k_text)->required();

    auto* scan_vt = app.add_subcommand("scan-vt", "vertex-transitive feasibility scan");
    scan_vt->add_option("-d", d_text)->required();
    scan_vt->add_option("-k", k_text)->required();

    auto* type2 = app.add_subcommand("type2", "conditions forcing a Type II vertex");
    type2->add_option("-d", d_text)->required();
    type2->add_option("-k", k_text)->required();

    auto* degree3 = app.add_subcommand("degree3", "degree-three non-existence conditions");
    degree3->add_option("-k", k_text)->required();

    auto* spectrum = app.add_subcommand("spectrum", "characteristic polynomial from a permutation vector");
    spectrum->add_option("-d", d_text)->required();
    spectrum->add_option("-k", k_text)->required();
    spectrum->add_option("--pv", pv_text, "permutation vector, e.g. \"2:1 4:14\"")->required();

    auto* k2cases = app.add_subcommand("k2-cases", "k=2 case enumeration engine");
    k2cases->add_option("-d", d_text)->required();

    auto* search = app.add_subcommand("search", "exhaustive search for (d,k;+1)-digraphs");
    search->add_option("-d", d_text)->required();
    search->add_option("-k", k_text)->required();
    search->add_option("--budget", budget, "node budget (0 = unlimited)");
    search->add_option("--checkpoint", checkpoint, "checkpoint file written on budget exhaustion");
    search->add_flag("--resume", resume, "resume from the checkpoint file");
    search->add_flag("--no-common-prune", no_common, "disable the d=3 common-out-neighbour prune");
    search->add_flag("--no-transposition-prune", no_transposition, "disable the outlier-transposition prune");
    search->add_flag("!--no-print-found", print_found, "suppress found digraph texts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool machine = format == "machine";

    try {
        if (moore->parsed()) {
            Range d = parse_range(d_text), k = parse_range(k_text);
            for (long dv : d.values())
                for (long kv : k.values()) {
                    if (machine) {
                        nlohmann::json j{{"op", "moore"}, {"d", dv}, {"k", kv}, {"moore", geodex::moore_bound(dv, kv).str()}};
                        std::cout << j.dump() << "\n";
                    } else if (d.values().size() == 1 && k.values().size() == 1) {
                        std::cout << geodex::moore_bound(dv, kv) << "\n";
                    } else {
                        std::cout << "d=" << dv << " k=" << kv << ": " << geodex::moore_bound(dv, kv) << "\n";
                    }
                }
            return 0;
        }
        if (check->parsed()) {
            auto g = load_digraph_file(file);
            long d = parse_range(d_text).lo, k = parse_range(k_text).lo;
            auto profile = geodex::excess_profile(g, static_cast<int>(d), static_cast<int>(k));
            if (machine)
                std::cout << geodex::to_json(profile).dump() << "\n";
            else
                std::cout << geodex::to_plain(profile) << "\n";
            return profile.is_excess_one ? 0 : 1;
        }
        if (outlier->parsed()) {
            auto g = load_digraph_file(file);
            long k = parse_range(k_text).lo;
            auto o = geodex::outlier_map(g, static_cast<int>(k));
            auto pv = geodex::permutation_vector(o.perm);
            auto st = geodex::classify_outlier_structure(o.perm, static_cast<int>(k));
            const char* tag = st.tag == geodex::OutlierClass::OutlierRegular ? "outlier-regular"
                              : st.tag == geodex::OutlierClass::TypeA        ? "type-a"
                              : st.tag == geodex::OutlierClass::TypeB        ? "type-b"
                                                                             : "other";
            if (machine) {
                nlohmann::json j{{"op", "outlier"},
                                 {"k", k},
                                 {"perm", o.perm.to_string()},
                                 {"pv", pv.to_string()},
                                 {"index", st.index},
                                 {"structure", tag}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << o.perm.to_string() << "\n";
                std::cout << "pv: " << pv.to_string() << "\n";
                std::cout << "index=" << st.index << " structure=" << tag << "\n";
            }
            return 0;
        }
        if (scan_div->parsed() || scan_vt->parsed()) {
            Range d = parse_range(d_text), k = parse_range(k_text);
            if (!d.list.empty() || !k.list.empty())
                throw geodex::Error("scans take contiguous ranges, not comma lists");
            const bool vt = scan_vt->parsed();
            auto hits = parallel_scan(d.lo, d.hi, k.lo, k.hi, workers, [&](long dv, long kv) {
                return vt ? geodex::detail::vt_feasible_pair(dv, kv)
                          : geodex::detail::mulmod_u64(
                                static_cast<std::uint64_t>(dv) % static_cast<std::uint64_t>(kv + 1),
                                (geodex::moore_bound_mod(static_cast<std::uint64_t>(dv),
                                                         static_cast<std::uint64_t>(kv),
                                                         static_cast<std::uint64_t>(kv + 1)) +
                                 1) % static_cast<std::uint64_t>(kv + 1),
                                static_cast<std::uint64_t>(kv + 1)) == 0;
            });
            if (machine) {
                for (auto [dv, kv] : hits) {
                    nlohmann::json j{{"op", vt ? "scan-vt" : "scan-div"}, {"d", dv}, {"k", kv}};
                    std::cout << j.dump() << "\n";
                }
            } else if (vt) {
                // grouped by k, the way the source tables read
                std::map<long, std::vector<long>> by_k;
                for (auto [dv, kv] : hits) by_k[kv].push_back(dv);
                for (auto& [kv, ds] : by_k) {
                    std::sort(ds.begin(), ds.end());
                    std::cout << "k=" << kv << ":";
                    for (long dv : ds) std::cout << ' ' << dv;
                    std::cout << "\n";
                }
            } else {
                std::map<long, std::vector<long>> by_d;
                for (auto [dv, kv] : hits) by_d[dv].push_back(kv);
                for (auto& [dv, ks] : by_d) {
                    std::sort(ks.begin(), ks.end());
                    std::cout << "d=" << dv << ":";
                    for (long kv : ks) std::cout << ' ' << kv;
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (type2->parsed()) {
            Range d = parse_range(d_text), k = parse_range(k_text);
            const bool single = d.values().size() == 1 && k.values().size() == 1;
            for (long dv : d.values())
                for (long kv : k.values()) {
                    auto hits = geodex::type2_forced(dv, kv);
                    if (hits.empty() && !single) continue;
                    if (machine) {
                        auto names = nlohmann::json::array();
                        for (auto c : hits) names.push_back(geodex::type2_condition_name(c));
                        nlohmann::json j{{"op", "type2"}, {"d", dv}, {"k", kv}, {"conditions", names}};
                        std::cout << j.dump() << "\n";
                    } else {
                        std::cout << "d=" << dv << " k=" << kv << ":";
                        if (hits.empty()) std::cout << " none";
                        for (auto c : hits) std::cout << ' ' << geodex::type2_condition_name(c);
                        std::cout << "\n";
                    }
                }
            return 0;
        }
        if (degree3->parsed()) {
            Range k = parse_range(k_text);
            for (long kv : k.values()) {
                auto rep = geodex::degree3_nonexistence(kv);
                if (machine)
                    std::cout << geodex::to_json(rep).dump() << "\n";
                else
                    std::cout << geodex::to_plain(rep) << "\n";
            }
            return 0;
        }
        if (spectrum->parsed()) {
            long d = parse_range(d_text).lo, k = parse_range(k_text).lo;
            auto pv = geodex::PermutationVector::parse(pv_text);
            if (k == 2) {
                auto rep = geodex::k2_charpoly(d, pv);
                if (rep.verdict == geodex::Verdict::Feasible) {
                    auto tc = geodex::k2_type_counts(d, *rep.spectrum);
                    rep.trace3 = tc.trace3;
                    rep.type_counts = {tc.alpha, tc.beta};
                }
                if (machine)
                    std::cout << geodex::to_json(rep).dump() << "\n";
                else
                    std::cout << geodex::to_plain(rep) << "\n";
            } else {
                auto spec = geodex::charpoly_j_minus_p(d, k, pv);
                if (machine) {
                    auto factors = nlohmann::json::array();
                    for (const auto& [f, m] : spec.factors)
                        factors.push_back({{"coeffs", f.to_string()}, {"mult", m}});
                    nlohmann::json j{
                        {"op", "spectrum"}, {"d", d}, {"k", k}, {"pv", pv.to_string()}, {"charpoly_j_minus_p", factors}};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "d=" << d << " k=" << k << " pv=" << pv.to_string() << " charpoly=[";
                    bool first = true;
                    for (const auto& [f, m] : spec.factors) {
                        if (!first) std::cout << ' ';
                        first = false;
                        std::cout << '(' << f.to_string() << ")^" << m;
                    }
                    std::cout << "]\n";
                }
            }
            return 0;
        }
        if (k2cases->parsed()) {
            Range d = parse_range(d_text);
            for (long dv : d.values())
                for (const auto& rep : geodex::k2_enumerate_cases(dv)) {
                    if (machine)
                        std::cout << geodex::to_json(rep).dump() << "\n";
                    else
                        std::cout << geodex::to_plain(rep) << "\n";
                }
            return 0;
        }
        if (search->parsed()) {
            geodex::SearchConfig cfg;
            cfg.d = static_cast<int>(parse_range(d_text).lo);
            cfg.k = static_cast<int>(parse_range(k_text).lo);
            cfg.node_budget = budget;
            cfg.workers = workers;
            cfg.checkpoint_path = checkpoint;
            cfg.prune_common_out_neighbour = !no_common;
            cfg.prune_outlier_transposition = !no_transposition;
            geodex::SearchResult result =
                resume ? geodex::resume_search(cfg, checkpoint) : geodex::search_excess_one(cfg);
            const long n = (geodex::moore_bound(cfg.d, cfg.k) + 1).convert_to<long>();
            if (machine) {
                nlohmann::json j{{"op", "search"},      {"d", cfg.d},
                                 {"k", cfg.k},          {"n", n},
                                 {"exhausted", result.exhausted}, {"nodes", result.nodes},
                                 {"found", nlohmann::json::array()}};
                for (const auto& g : result.found) j["found"].push_back(g.to_text());
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "search d=" << cfg.d << " k=" << cfg.k << " n=" << n
                          << " exhausted=" << (result.exhausted ? "true" : "false") << " nodes=" << result.nodes
                          << " found=" << result.found.size() << "\n";
                if (print_found)
                    for (const auto& g : result.found) std::cout << g.to_text();
            }
            std::cerr << "wall: " << result.wall_seconds << "s\n";
            return 0;
        }
    } catch (const geodex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
