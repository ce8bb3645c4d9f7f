#include "rdo/model.hpp"

namespace rdo {

std::string_view to_string(Estimator e) {
    switch (e) {
        case Estimator::empirical: return "empirical";
        case Estimator::pce: return "pce";
        case Estimator::nominal: return "nominal";
    }
    return "unknown";
}

}  // namespace rdo
