#include "dirspace/parallel.hpp"

#include <cstdlib>

namespace dirspace {

int thread_count() {
    static const int count = [] {
        const char* env = std::getenv("THREADS");
        if (!env) return 1;
        int v = std::atoi(env);
        return v >= 1 ? v : 1;
    }();
    return count;
}

} // namespace dirspace
