#include <cstdlib>
#include <string_view>

#include "movegraph/kernels.hpp"

namespace mg::kernels {

const Table& active() {
    static const Table& chosen = [&]() -> const Table& {
        const char* env = std::getenv("MOVEGRAPH_KERNELS");
        if (env != nullptr && std::string_view(env) == "scalar") {
            return scalar();
        }
        if (const Table* t = avx2()) {
            return *t;
        }
        return scalar();
    }();
    return chosen;
}

}  // namespace mg::kernels
