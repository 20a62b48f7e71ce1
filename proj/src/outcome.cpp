#include "obsharm/outcome.hpp"

#include <stdexcept>
#include <string>

namespace obsharm {

std::string_view to_string(Lossiness l) noexcept {
    switch (l) {
    case Lossiness::Exact: return "Exact";
    case Lossiness::Widened: return "Widened";
    case Lossiness::Lossy: return "Lossy";
    case Lossiness::Unmapped: return "Unmapped";
    }
    return "Unmapped";
}

Lossiness lossiness_from_string(std::string_view s) {
    for (auto l : {Lossiness::Exact, Lossiness::Widened, Lossiness::Lossy, Lossiness::Unmapped})
        if (to_string(l) == s) return l;
    throw std::invalid_argument("unknown lossiness '" + std::string(s) + "'");
}

} // namespace obsharm
