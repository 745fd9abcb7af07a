#include "dctfuse/parallel.hpp"

#include <cstdlib>
#include <string>

namespace dctfuse {

int worker_count() {
    if (const char* env = std::getenv("FUSE_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (const std::exception&) {
            // Unparseable value falls through to the default.
        }
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace dctfuse
