#ifndef CENTRA_CATALOG_HPP_
#define CENTRA_CATALOG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "centra/constructors.hpp"
#include "centra/perm.hpp"

namespace centra {

  struct CatalogPresentation {
    std::string_view name;
    std::string_view text;
    std::size_t      expected_order;
  };

  //! ex-nc18, ex-nc147, ex-c24, ex-c12, odd75.
  std::span<CatalogPresentation const> presentation_catalog();
  //! Throws UsageError for unknown names.
  CatalogPresentation const& find_presentation(std::string_view name);

  //! Generators of a small subgroup K of a large ambient group, with the
  //! label describe(K) is expected to produce.
  struct ExclusionWitness {
    std::string       name;
    std::string       ambient;
    std::vector<Perm> generators;
    std::string       expected;
  };

  ExclusionWitness a7_witness();
  ExclusionWitness m11_witness();

  //! The anti-diagonal involution with -1 in the corner and
  //! diag(g^(p-2), g, 1) for g the least primitive root mod p.
  std::array<Matrix3, 2> psl3_witness_matrices(std::uint32_t p);
  ExclusionWitness       psl3_witness(std::uint32_t p);

  //! "a7", "m11", "psl3:<p>".
  ExclusionWitness find_witness(std::string_view name);

}  // namespace centra

#endif  // CENTRA_CATALOG_HPP_
