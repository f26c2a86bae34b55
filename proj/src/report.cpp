#include "report.h"

#include <json.hpp>

#include <chrono>

namespace rp {

namespace {

class Stopwatch {
public:
    double lap()
    {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

CheckLine sandwich_check(int k, int drp, int eaves)
{
    int hi = (eaves == 0 ? 2 : 4) * drp;
    bool pass = drp <= k && k <= hi;
    return {"sandwich", pass, std::to_string(drp) + " <= " + std::to_string(k) + " <= " + std::to_string(hi)};
}

CheckLine link_check(int k, int mlp_links, int eaves)
{
    int hi = (eaves == 0 ? 2 : 4) * mlp_links - 1;
    bool pass = k + 1 <= hi;
    return {"link-bound", pass, std::to_string(k + 1) + " <= " + std::to_string(hi)};
}

bool RunReport::ok() const
{
    for (auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

std::string RunReport::json(bool with_timings) const
{
    nlohmann::ordered_json j;
    j["version"] = version;
    j["name"] = name;
    j["n"] = n;
    j["eaves"] = eaves;
    j["verdict"] = has_path ? "path" : "no-cdrp";
    j["k"] = has_path ? nlohmann::ordered_json(k) : nlohmann::ordered_json(nullptr);
    j["drp_opt"] = drp ? nlohmann::ordered_json(*drp) : nlohmann::ordered_json(nullptr);
    j["mlp_links"] = mlp_links;
    j["oracle"] = oracle;
    j["oracle_k"] = oracle_k >= 0 ? nlohmann::ordered_json(oracle_k) : nlohmann::ordered_json(nullptr);
    j["layers"] = layer_sizes;
    auto checks_json = nlohmann::ordered_json::array();
    for (auto& c : checks)
        checks_json.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks_json;
    j["ok"] = ok();
    if (with_timings) {
        nlohmann::ordered_json t;
        for (auto& [stage, ms] : timings)
            t[stage] = ms;
        j["timings_ms"] = t;
    }
    return j.dump();
}

RunReport analyze(const Instance& inst, const AnalyzeOptions& opt)
{
    RunReport rep;
    rep.name = inst.name;
    rep.n = inst.polygon.size();
    Stopwatch sw;
    Region region(inst);
    rep.eaves = static_cast<int>(region.eaves().size());
    rep.timings.push_back({"region", sw.lap()});

    MirrorSystem sys = run(region, opt.exec);
    rep.timings.push_back({"mirrors", sw.lap()});
    for (auto& layer : sys.layers)
        rep.layer_sizes.push_back(static_cast<int>(layer.size()));
    rep.has_path = sys.termination != Termination::Exhausted;
    if (rep.has_path) {
        try {
            rep.path = extract_path(region, sys);
            rep.k = rep.path->turn_count();
            ValidityReport v = validate_path(rep.path->points, region);
            rep.checks.push_back({"path-valid", v.ok(), v.ok() ? "" : v.summary()});
        } catch (const ExtractionFailed& e) {
            rep.k = sys.k;
            rep.checks.push_back({"path-valid", false, e.what()});
        }
        rep.timings.push_back({"extract", sw.lap()});
    }
    if (opt.tamper && rep.has_path)
        ++rep.k;

    rep.drp = drp_opt(inst, -1, opt.exec);
    rep.mlp_links = minimum_link_path(inst).links();
    rep.timings.push_back({"baselines", sw.lap()});

    if (opt.oracle) {
        OracleResult o = cdrp_opt(region, opt.oracle_kmax, opt.budget);
        rep.oracle = to_string(o.status);
        rep.oracle_k = o.k;
        rep.timings.push_back({"oracle", sw.lap()});
        if (o.status != OracleStatus::BudgetExceeded) {
            int expect = o.status == OracleStatus::Found ? o.k : -1;
            int got = rep.has_path ? rep.k : -1;
            rep.checks.push_back({"oracle-agreement", got == expect,
                                  "engine " + std::to_string(got) + " oracle " + std::to_string(expect)});
        } else if (rep.has_path && rep.k < o.lower_bound) {
            rep.checks.push_back({"oracle-lower-bound", false,
                                  "engine " + std::to_string(rep.k) + " below " + std::to_string(o.lower_bound)});
        }
    }
    if (rep.has_path) {
        if (rep.drp)
            rep.checks.push_back(sandwich_check(rep.k, *rep.drp, rep.eaves));
        else
            rep.checks.push_back({"sandwich", false, "t unreachable by reflections"});
        rep.checks.push_back(link_check(rep.k, rep.mlp_links, rep.eaves));
        bool below = 2 * rep.k < rep.n;
        rep.checks.push_back({"diameter", below, std::to_string(rep.k) + " < " + std::to_string(rep.n) + "/2"});
    }
    return rep;
}

}  // namespace rp
