#include "melonlab/oracle.hpp"

namespace melonlab {

std::map<long, BigInt> MelonStats::height_counts() const {
    std::map<long, BigInt> out;
    for (const auto& [hd, c] : joint) out[hd.first] += c;
    return out;
}

std::map<long, BigInt> MelonStats::depth_counts() const {
    std::map<long, BigInt> out;
    for (const auto& [hd, c] : joint) out[hd.second] += c;
    return out;
}

std::map<long, BigInt> MelonStats::range_counts() const {
    std::map<long, BigInt> out;
    for (const auto& [hd, c] : joint) out[hd.first - hd.second] += c;
    return out;
}

namespace {

struct Search {
    unsigned p;
    long two_n;
    std::vector<long> ord;      // current ordinates
    std::vector<int> step_buf;  // p * two_n flattened, time-major
    const std::function<void(const MelonPath&)>* visitor = nullptr;
    std::map<std::pair<long, long>, BigInt>* joint = nullptr;
    BigInt count = 0;

    // DFS over time steps. hi/lo track the running extremes of the top and
    // bottom paths. Pruning: adjacent ordinates must stay strictly ordered,
    // and each path must still be able to return to its endpoint.
    void walk(long t, long hi, long lo) {
        if (t == two_n) {
            ++count;
            if (joint) ++(*joint)[{hi, lo}];
            if (visitor && *visitor) emit();
            return;
        }
        const long remaining = two_n - t - 1;
        choose(t, 0, hi, lo, remaining);
    }

    // choose steps for paths i..p-1 at time t, in -1 < +1 order
    void choose(long t, unsigned i, long hi, long lo, long remaining) {
        if (i == p) {
            walk(t + 1, std::max(hi, ord[p - 1]), std::min(lo, ord[0]));
            return;
        }
        for (int s : {-1, +1}) {
            const long y = ord[i] + s;
            // stay strictly above the already-moved neighbour below
            if (i > 0 && y <= ord[i - 1]) continue;
            // must be able to come back to 2i in the remaining steps
            if (std::abs(y - 2L * i) > remaining) continue;
            ord[i] = y;
            step_buf[t * p + i] = s;
            choose(t, i + 1, hi, lo, remaining);
            ord[i] = y - s;
        }
    }

    void emit() const {
        MelonPath mp;
        mp.steps.assign(p, std::vector<int>(two_n));
        for (long t = 0; t < two_n; ++t)
            for (unsigned i = 0; i < p; ++i) mp.steps[i][t] = step_buf[t * p + i];
        (*visitor)(mp);
    }
};

Search make_search(const MelonConfig& cfg) {
    cfg.validate();
    if (static_cast<unsigned long>(cfg.p) * 2 * cfg.n > 40)
        throw capacity_error("enumerate: p * 2n > 40 exceeds the exhaustive-search guard");
    Search s;
    s.p = cfg.p;
    s.two_n = 2 * static_cast<long>(cfg.n);
    s.ord.resize(cfg.p);
    for (unsigned i = 0; i < cfg.p; ++i) s.ord[i] = 2L * i;
    s.step_buf.assign(static_cast<size_t>(s.two_n) * cfg.p, 0);
    return s;
}

} // namespace

BigInt enumerate(const MelonConfig& cfg, const std::function<void(const MelonPath&)>& visitor) {
    Search s = make_search(cfg);
    s.visitor = &visitor;
    s.walk(0, 2L * cfg.p - 2, 0);
    return s.count;
}

MelonStats stats(const MelonConfig& cfg) {
    Search s = make_search(cfg);
    MelonStats out;
    s.joint = &out.joint;
    s.walk(0, 2L * cfg.p - 2, 0);
    out.total = s.count;
    return out;
}

} // namespace melonlab
