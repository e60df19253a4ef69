#include "lapn/parallel.hpp"

#include <cstdlib>
#include <string>

namespace lapn {

unsigned default_jobs() {
    if (const char* env = std::getenv("LAPN_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace lapn
