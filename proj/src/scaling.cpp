#include "scaling.h"

#include "generators.h"
#include "mirror.h"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

namespace rp {

Instance scaling_instance(const std::string& cls, int n, int rep)
{
    uint64_t seed = static_cast<uint64_t>(1000 * n + rep);
    if (cls == "convex")
        return gen_convex(n, seed);
    if (cls == "random")
        return gen_random_simple(n, seed);
    if (cls == "spiral")
        return gen_spiral(n + n % 2);
    if (cls == "winding")
        return gen_winding_spiral(n + n % 2);
    throw std::invalid_argument("unknown instance class " + cls);
}

std::vector<ScalingRecord> run_scaling(const ScalingPlan& plan)
{
    std::vector<ScalingRecord> out;
    for (auto& cls : plan.classes)
        for (int n : plan.sizes)
            for (int rep = 0; rep < plan.reps; ++rep)
                out.push_back({cls, n, rep});
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < out.size(); ++i) {
        ScalingRecord& rec = out[i];
        Instance inst = scaling_instance(rec.cls, rec.n, rec.rep);
        auto t0 = std::chrono::steady_clock::now();
        Region region(inst);
        MirrorSystem sys = run(region, Exec::Serial);
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rec.mirrors = sys.mirror_count();
        rec.layers = static_cast<int>(sys.layers.size());
        rec.k = sys.k;
        rec.mirrors_all = run_exhaustive(region, Exec::Serial).mirror_count();
        if (!sys.traces.empty())
            for (auto& [e, r] : sys.traces.back().revisits)
                rec.max_revisits = std::max(rec.max_revisits, r);
    }
    return out;
}

namespace {

// least squares slope through (log n, log mean count); 0 with fewer than two sizes
std::pair<double, int> loglog_slope(const std::map<int, std::pair<double, int>>& mean)
{
    std::vector<std::pair<double, double>> pts;
    for (auto& [n, m] : mean)
        if (m.first > 0)
            pts.push_back({std::log(n), std::log(m.first / m.second)});
    if (pts.size() < 2)
        return {0, static_cast<int>(pts.size())};
    double sx = 0, sy = 0, sxx = 0, sxy = 0, k = static_cast<double>(pts.size());
    for (auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return {(k * sxy - sx * sy) / (k * sxx - sx * sx), static_cast<int>(pts.size())};
}

}  // namespace

std::vector<ScalingFit> fit_exponents(const std::vector<ScalingRecord>& records)
{
    std::map<std::string, std::map<int, std::pair<double, int>>> mean, mean_all;
    std::vector<std::string> order;
    for (auto& r : records) {
        if (!mean.count(r.cls))
            order.push_back(r.cls);
        auto& m = mean[r.cls][r.n];
        m.first += static_cast<double>(r.mirrors);
        ++m.second;
        auto& a = mean_all[r.cls][r.n];
        a.first += static_cast<double>(r.mirrors_all);
        ++a.second;
    }
    std::vector<ScalingFit> out;
    for (auto& cls : order) {
        auto [e, pts] = loglog_slope(mean[cls]);
        auto [ea, pts_all] = loglog_slope(mean_all[cls]);
        out.push_back({cls, e, ea, std::max(pts, pts_all)});
    }
    return out;
}

std::string scaling_table(const std::vector<ScalingRecord>& records, bool with_time)
{
    std::ostringstream os;
    os << "class\tn\trep\tmirrors\tmirrors_all\tlayers\tk\tmax_revisits" << (with_time ? "\tseconds" : "") << "\n";
    for (auto& r : records) {
        os << r.cls << "\t" << r.n << "\t" << r.rep << "\t" << r.mirrors << "\t" << r.mirrors_all << "\t" << r.layers << "\t" << r.k << "\t"
           << r.max_revisits;
        if (with_time)
            os << "\t" << r.seconds;
        os << "\n";
    }
    return os.str();
}

}  // namespace rp
