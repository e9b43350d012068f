#ifndef CENTRA_JSON_IO_HPP_
#define CENTRA_JSON_IO_HPP_

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "centra/catalog.hpp"
#include "centra/classify.hpp"
#include "centra/group.hpp"
#include "centra/lattice.hpp"

namespace centra {

  //! 0-based image array.
  nlohmann::json perm_to_json(Perm const& p);
  //! Accepts an image array or a 1-based cycle string.
  Perm perm_from_json(nlohmann::json const& j, std::size_t degree = 0);

  //! {"degree": n, "generators": [[...], ...], "order": |G|}
  nlohmann::json group_to_json(FiniteGroup const& G);
  //! Reads {"degree", "generators"}; "order", if present, must match.
  GroupPtr group_from_json(nlohmann::json const& j, ClosureOptions const& opts = {});

  //! {"group", "class", "member", "method", "witness": {"generators", "z"} | null}
  //! with witness elements in 1-based cycle notation. "member" is null for
  //! an inconclusive certificate.
  nlohmann::json verdict_to_json(MembershipVerdict const& v, std::string_view spec);

  nlohmann::json structure_to_json(StructureDescriptor const& d);

  //! {"order", "subgroups", "by_order": {"d": count}}
  nlohmann::json subgroup_counts_to_json(FiniteGroup const& G, SubgroupList const& list);

  //! {"name", "ambient", "generators": [cycles] , "expect"} or, for
  //! projective witnesses, {"name", "ambient", "field", "primitive_root",
  //! "matrices", "expect"}.
  ExclusionWitness witness_from_json(nlohmann::json const& j);

  //! Throws UsageError when the file is missing and ParseError on bad JSON.
  nlohmann::json read_json_file(std::filesystem::path const& path);

}  // namespace centra

#endif  // CENTRA_JSON_IO_HPP_
