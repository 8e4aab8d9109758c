#pragma once

#include <array>
#include <cstddef>

namespace torlink::manifold::rp3_data {

extern const std::size_t vertex_count;
extern const std::size_t tet_count;
extern const std::array<int, 4> tets[192];
extern const std::size_t tau1_walk[16];
extern const std::size_t tau2_walk[16];
extern const std::size_t tau1_len;
extern const std::size_t tau2_len;

}  // namespace torlink::manifold::rp3_data
