#include "insdel/editmetrics.hpp"

namespace insdel::detail {

// Instantiations for the symbol types the library uses everywhere.
template std::size_t lcs_impl<std::uint64_t>(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
template std::size_t lcs_impl<std::uint8_t>(std::span<const std::uint8_t>, std::span<const std::uint8_t>);
template std::size_t edit_distance_impl<std::uint64_t>(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
template std::size_t edit_distance_impl<std::uint8_t>(std::span<const std::uint8_t>, std::span<const std::uint8_t>);
template Alignment align_impl<std::uint64_t>(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
template Alignment align_impl<std::uint8_t>(std::span<const std::uint8_t>, std::span<const std::uint8_t>);

}  // namespace insdel::detail
