// bench_oracle.cpp -- parallel oracle vs. the serial full-enumeration reference

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "naive_oracle.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/products.hpp"

using namespace wordrep;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench(const std::string& name, const Graph& g) {
    auto t0 = std::chrono::steady_clock::now();
    SearchResult fast = min_length_word(g);
    double parallel_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto slow = naive::min_length_word(g, 2 * g.size());
    double serial_s = seconds_since(t0);

    bool agree = fast.status == SearchStatus::found && slow.word &&
                 fast.length == slow.length && fast.word == *slow.word;
    std::printf("%-14s l=%-3zu parallel %8.4f s   serial %8.4f s   speedup %5.2fx   %s\n",
                name.c_str(), fast.length, parallel_s, serial_s,
                parallel_s > 0 ? serial_s / parallel_s : 0.0,
                agree ? "agree" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("oracle threads: %d\n", oracle_thread_cap());
    bench("K3", standard_graph(GraphKind::complete, 3));
    bench("P4", standard_graph(GraphKind::path, 4));
    bench("C4", standard_graph(GraphKind::cycle, 4));
    bench("K4", standard_graph(GraphKind::complete, 4));
    bench("C5", standard_graph(GraphKind::cycle, 5));
    bench("K2 box K2", cartesian_product(standard_graph(GraphKind::complete, 2),
                                         standard_graph(GraphKind::complete, 2)));
    return 0;
}
