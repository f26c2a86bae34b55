#include <doctest.h>

#include "generators.h"
#include "mirror.h"
#include "support.h"

using namespace rp;
using rp::test::fixture;

namespace {

const Mirror* find_mirror(const MirrorSystem& sys, int layer, int edge)
{
    for (int id : sys.layers[static_cast<size_t>(layer - 1)])
        if (sys.mirror(id).edge == edge)
            return &sys.mirror(id);
    return nullptr;
}

void check_structure(const Region& r, const MirrorSystem& sys, const std::string& name)
{
    CAPTURE(name);
    LayerChecks lc = check_layers(r, sys);
    CHECK(lc.order_ok);
    CHECK(lc.invisibility_violations == 0);
    CHECK(lc.partition_ok);
    CHECK(lc.coverage_monotone);
    for (auto& tr : sys.traces)
        for (auto& [e, n] : tr.revisits) {
            auto it = tr.source_layers.find(e);
            REQUIRE(it != tr.source_layers.end());
            CHECK(n <= it->second);
        }
}

}  // namespace

TEST_CASE("FIX-L reaches t after one reflection")
{
    Region r(fixture("fix_l"));
    MirrorSystem sys = run(r, Exec::Serial);
    CHECK(sys.termination == Termination::TargetVisible);
    CHECK(sys.k == 1);
    REQUIRE(sys.layers.size() == 1);
    // right wall up to where the sightline from s grazes (3,1), open there
    const Mirror* right = find_mirror(sys, 1, 1);
    REQUIRE(right);
    CHECK(right->lambda == Interval::open(0, ratio(3, 10)));
    const Mirror* bottom = find_mirror(sys, 1, 0);
    REQUIRE(bottom);
    CHECK(bottom->lambda == Interval::open(0, 1));
    CHECK(!target_visible_from(r, sys.mirror(sys.witness)).empty());
}

TEST_CASE("FIX-Z needs two reflections across the eave")
{
    Region r(fixture("fix_z"));
    MirrorSystem sys = run(r, Exec::Serial);
    CHECK(sys.termination == Termination::TargetVisible);
    CHECK(sys.k == 2);
    REQUIRE(sys.layers.size() == 2);
    for (int id : sys.layers[0]) {
        CHECK(sys.mirror(id).cell == 0);
        CHECK(target_visible_from(r, sys.mirror(id)).empty());
    }
    int across = 0;
    for (int id : sys.layers[1]) {
        const Mirror& m = sys.mirror(id);
        REQUIRE(m.parents.size() == 1);
        CHECK(sys.mirror(m.parents[0]).layer == 1);
        if (m.cell == 1) {
            ++across;
            CHECK(m.side == MirrorSide::DoublePrimed);
        }
    }
    CHECK(across == 2);
    const Mirror& w = sys.mirror(sys.witness);
    CHECK(w.layer == 2);
    CHECK(w.cell == 1);
}

TEST_CASE("direct visibility and exhaustion")
{
    MirrorSystem sq = run(Region(fixture("fix_sq")), Exec::Serial);
    CHECK(sq.termination == Termination::Direct);
    CHECK(sq.k == 0);
    CHECK(sq.mirror_count() == 0);

    Region nc(fixture("fix_nocdrp"));
    MirrorSystem sys = run(nc, Exec::Serial);
    CHECK(sys.termination == Termination::Exhausted);
    CHECK(sys.k == -1);
    CHECK(sys.witness == -1);
    CHECK(!sys.layers.empty());
}

TEST_CASE("layer structure on fixtures")
{
    for (auto name : {"fix_l", "fix_z", "fix_sq", "fix_nocdrp"}) {
        Region r(fixture(name));
        check_structure(r, run(r, Exec::Serial), name);
    }
}

TEST_CASE("layer structure on random polygons")
{
    for (uint64_t seed = 0; seed < 100; ++seed) {
        Instance inst = gen_random_simple(8 + static_cast<int>(seed % 12), seed);
        Region r(inst);
        check_structure(r, run(r, Exec::Serial), inst.name);
    }
}

TEST_CASE("layer structure on corridors and spirals")
{
    for (int e = 1; e <= 3; ++e) {
        Instance inst = gen_corridor(e);
        Region r(inst);
        check_structure(r, run(r, Exec::Serial), inst.name);
    }
    for (int n = 6; n <= 16; n += 2) {
        Instance inst = gen_spiral(n);
        Region r(inst);
        check_structure(r, run(r, Exec::Serial), inst.name);
    }
}

TEST_CASE("M2 follows M1 when there is no eave")
{
    int tried = 0;
    for (uint64_t seed = 0; seed < 200 && tried < 40; ++seed) {
        Instance inst = gen_random_simple(12, seed);
        Region r(inst);
        if (!r.eaves().empty())
            continue;
        MirrorSystem sys = run(r, Exec::Serial);
        if (sys.layers.size() < 2)
            continue;
        ++tried;
        CAPTURE(inst.name);
        ChainPosition last1 = sys.mirror(sys.layers[0].front()).hi;
        for (int id : sys.layers[0])
            if (last1 < sys.mirror(id).hi)
                last1 = sys.mirror(id).hi;
        for (int id : sys.layers[1])
            CHECK(!(sys.mirror(id).lo < last1));
    }
    CHECK(tried > 0);
}

TEST_CASE("serial and parallel engines agree")
{
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Instance inst = gen_random_simple(14, seed);
        Region r(inst);
        MirrorSystem a = run(r, Exec::Serial);
        MirrorSystem b = run(r, Exec::Parallel);
        CAPTURE(inst.name);
        CHECK(a.dump() == b.dump());
        CHECK(a.k == b.k);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("runs are deterministic")
{
    Instance inst = gen_random_simple(20, 5);
    Region r1(inst), r2(inst);
    CHECK(run(r1, Exec::Parallel).dump() == run(r2, Exec::Parallel).dump());
}

TEST_CASE("mirror count stays quadratic")
{
    for (int n : {20, 30, 40})
        for (uint64_t seed = 0; seed < 3; ++seed) {
            Instance inst = gen_random_simple(n, 900 + seed);
            Region r(inst);
            CAPTURE(inst.name);
            CHECK(run_exhaustive(r, Exec::Serial).mirror_count() <= static_cast<size_t>(2 * n * n));
        }
}
