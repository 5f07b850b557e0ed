#include "fflab/ff/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace fflab {

namespace {
int initial_workers() {
    if (const char* env = std::getenv("FFLAB_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : int(hc);
}
std::atomic<int> g_workers{initial_workers()};
} // namespace

int worker_count() { return g_workers.load(); }
void set_worker_count(int n) { g_workers.store(n < 1 ? 1 : n); }

} // namespace fflab
