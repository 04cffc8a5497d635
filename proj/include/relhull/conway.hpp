#pragma once

#include <cstddef>
#include <cstdint>

namespace relhull::detail {

// One Conway polynomial: coefficients of C_{p,ell} in ascending degree order,
// padded with zeros beyond degree ell.
struct ConwayRecord {
    std::uint16_t p;
    std::uint16_t ell;
    std::uint16_t coeffs[17];
};

extern const ConwayRecord conway_records[];
extern const std::size_t conway_record_count;

// Returns nullptr when (p, ell) is not in the table.
const ConwayRecord* conway_lookup(std::uint32_t p, std::uint32_t ell);

}  // namespace relhull::detail
