#include "geomplex/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace geomplex {

int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("GEOMPLEX_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

}  // namespace geomplex
