#include "hamming/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hamming {

int thread_budget() {
    unsigned budget = 0;
    if (const char* env = std::getenv("HW_THREADS")) {
        try {
            const unsigned long parsed = std::stoul(env);
            budget = static_cast<unsigned>(parsed > 1024 ? 1024 : parsed);
        } catch (...) {
            budget = 0;  // unparseable = auto
        }
    }
    if (budget == 0) budget = std::thread::hardware_concurrency();
    if (budget == 0) budget = 1;
    return static_cast<int>(budget);
}

}  // namespace hamming
