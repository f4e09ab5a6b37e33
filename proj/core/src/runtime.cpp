#include "gridsalvage/runtime.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace gridsalvage {

int thread_budget() {
    int budget = 0;
    if (const char* env = std::getenv("GRIDSALVAGE_THREADS")) {
        try {
            budget = std::stoi(env);
        } catch (...) {
            budget = 0;
        }
    }
    if (budget <= 0) budget = static_cast<int>(std::thread::hardware_concurrency());
    if (budget <= 0) budget = 1;
    return budget;
}

}  // namespace gridsalvage
