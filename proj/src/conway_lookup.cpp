#include "relhull/conway.hpp"

namespace relhull::detail {

const ConwayRecord* conway_lookup(std::uint32_t p, std::uint32_t ell) {
    for (std::size_t i = 0; i < conway_record_count; ++i) {
        const auto& r = conway_records[i];
        if (r.p == p && r.ell == ell) return &r;
    }
    return nullptr;
}

}  // namespace relhull::detail
