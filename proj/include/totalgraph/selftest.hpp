// Round-trip self-test: enumerate every connected graph up to a size
// bound, build each total graph, run the inverse search on it, and demand
// the reconstructed source. Work is sharded across threads by graph index
// and aggregated in order, so the report is byte-stable for any job count.
#pragma once

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "totalgraph/constructors.hpp"
#include "totalgraph/isomorphism.hpp"
#include "totalgraph/oracle.hpp"
#include "totalgraph/recognition.hpp"

namespace totalgraph {

struct SelfTestResult {
    long long classes = 0;
    long long failures = 0;
    std::vector<std::string> lines; // one summary line per graph order
};

inline SelfTestResult run_roundtrip_selftest(int max_n, int jobs = 1,
                                             const RecognitionOptions& opt = {}) {
    if (max_n < 1 || max_n > 8)
        throw std::invalid_argument("run_roundtrip_selftest: max-n must be between 1 and 8");
    if (jobs < 1) jobs = 1;
    SelfTestResult result;
    for (int n = 1; n <= max_n; ++n) {
        GraphCensus census = enumerate_connected_graphs(n);
        std::vector<char> ok(census.graphs.size(), 0);
        auto worker = [&](std::atomic<size_t>& cursor) {
            for (size_t i = cursor.fetch_add(1); i < census.graphs.size();
                 i = cursor.fetch_add(1)) {
                const Graph& g = census.graphs[i];
                RecognitionOutcome out = inverse_total(total_graph(g).graph, opt);
                ok[i] = out.status == RecognitionStatus::TotalGraph &&
                        are_isomorphic(out.inverse, g);
            }
        };
        std::atomic<size_t> cursor{0};
        if (jobs == 1 || census.graphs.size() < 2) {
            worker(cursor);
        } else {
            std::vector<std::thread> pool;
            const int use =
                static_cast<int>(std::min<size_t>(jobs, census.graphs.size()));
            pool.reserve(use);
            for (int t = 0; t < use; ++t) pool.emplace_back([&] { worker(cursor); });
            for (auto& t : pool) t.join();
        }
        long long bad = 0;
        for (char c : ok)
            if (!c) ++bad;
        result.classes += census.count;
        result.failures += bad;
        result.lines.push_back("n=" + std::to_string(n) +
                               " classes=" + std::to_string(census.count) +
                               " failures=" + std::to_string(bad));
    }
    return result;
}

} // namespace totalgraph
